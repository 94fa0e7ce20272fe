use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::table::nu_p;
use super::{CharacterTable, ChartabError};
use crate::exact::Rational;
use crate::gfla::{Elem, FieldSpec};

/// A `p`-block: member indices into the table's irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub prime: u32,
    pub members: Vec<usize>,
    pub defect: u32,
    /// 1-based position in the sorted block list
    pub label: usize,
}

impl Block {
    pub fn size(&self) -> usize {
        self.members.len()
    }
    pub fn contains(&self, chi: usize) -> bool {
        self.members.binary_search(&chi).is_ok()
    }
}

/// Smallest `k` such that `F_{p^k}` holds the values of all central
/// characters on `p`-regular classes.
pub fn block_field_degree(t: &CharacterTable, p: u32) -> Option<u32> {
    let e = t
        .p_regular(p as u64)
        .iter()
        .map(|&i| t.classes[i].order)
        .fold(1u64, |a, b| num_integer::Integer::lcm(&a, &b));
    FieldSpec::splitting_degree(p, e)
}

/// Blocks by central characters `omega(C) = |C| chi(C) / chi(1)` reduced
/// modulo `p` on the `p`-regular classes, in the smallest splitting field.
pub fn block_partition(t: &CharacterTable, p: u32) -> Result<Vec<Block>, ChartabError> {
    let k = block_field_degree(t, p).ok_or_else(|| ChartabError::Field(format!("no small splitting field for p = {p}")))?;
    block_partition_in(t, p, k)
}

/// As [`block_partition`], reducing into `F_{p^k}` (which must contain the
/// needed roots of unity).
pub fn block_partition_in(t: &CharacterTable, p: u32, k: u32) -> Result<Vec<Block>, ChartabError> {
    let pp = p as u64;
    let a = nu_p(t.order, pp);
    let mut blocks: Vec<Block> = Vec::new();
    if a == 0 {
        for i in 0..t.irreducibles.len() {
            blocks.push(Block { prime: p, members: vec![i], defect: 0, label: 0 });
        }
    } else {
        let field = FieldSpec::canonical(p, k).map_err(|e| ChartabError::Field(e.to_string()))?;
        let reg = t.p_regular(pp);
        let mut groups: BTreeMap<Vec<Elem>, Vec<usize>> = BTreeMap::new();
        for (i, chi) in t.irreducibles.iter().enumerate() {
            let deg = chi.degree_int().ok_or(ChartabError::NotRational)?;
            let key = reg
                .iter()
                .map(|&c| {
                    let f = Rational::new(BigInt::from(t.classes[c].size), BigInt::from(deg));
                    chi.values[c]
                        .scale(&f)
                        .reduce_mod_p(&field)
                        .map_err(|e| ChartabError::Reduction(format!("{} on {}: {e}", chi.name, t.classes[c].name)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            groups.entry(key).or_default().push(i);
        }
        for (_, members) in groups {
            let min_nu = members
                .iter()
                .map(|&i| nu_p(t.irreducibles[i].degree_int().unwrap_or(1) as u64, pp))
                .min()
                .unwrap_or(0);
            blocks.push(Block { prime: p, members, defect: a.saturating_sub(min_nu), label: 0 });
        }
    }
    blocks.sort_by(|x, y| y.defect.cmp(&x.defect).then(x.members[0].cmp(&y.members[0])));
    for (i, b) in blocks.iter_mut().enumerate() {
        b.label = i + 1;
    }
    Ok(blocks)
}

/// Block containing a character.
pub fn block_of(blocks: &[Block], chi: usize) -> Option<&Block> {
    blocks.iter().find(|b| b.contains(chi))
}
