//! Projective characters and peeling of known PIMs.

use num_traits::ToPrimitive;

use super::{BasicSet, BrauerError};
use crate::chartab::{Block, CharacterTable, FusionMap};
use crate::exact::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Tensor { defect_zero: String, other: String },
    Induced { from: String, character: String },
    Combination(String),
}

/// A projective character cut to a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjChar {
    /// values on all classes of the table
    pub values: Vec<Cyclotomic>,
    /// multiplicities of the block's characters, in block-member order
    pub block_coords: Vec<i64>,
    /// multiplicities of the basic-set characters
    pub coords: Vec<i64>,
    pub provenance: Provenance,
}

/// True when a class function vanishes on every `p`-singular class.
pub fn vanishes_off_p_regular(t: &CharacterTable, values: &[Cyclotomic], p: u64) -> bool {
    (0..t.nclasses()).all(|c| t.classes[c].order % p != 0 || values[c].is_zero())
}

fn cut_to_block(t: &CharacterTable, v: &[Cyclotomic], block: &Block, bs: &BasicSet, provenance: Provenance) -> Result<ProjChar, BrauerError> {
    let mut values = vec![Cyclotomic::zero(); t.nclasses()];
    let mut block_coords = Vec::with_capacity(block.members.len());
    for &i in &block.members {
        let m = t.scalar_product(v, &t.irreducibles[i].values)?;
        if !m.is_integer() {
            return Err(BrauerError::NotACharacter);
        }
        let m = m.to_integer().to_i64().ok_or(BrauerError::Overflow)?;
        block_coords.push(m);
        if m != 0 {
            for (acc, x) in values.iter_mut().zip(&t.irreducibles[i].values) {
                *acc = acc.add(&x.scale(&crate::exact::rat(m)));
            }
        }
    }
    let coords = bs
        .members
        .iter()
        .map(|i| block.members.iter().position(|m| m == i).map(|k| block_coords[k]).ok_or(BrauerError::Shape("basic set outside block".into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProjChar { values, block_coords, coords, provenance })
}

/// `(d0 x other)` cut to the block of the basic set; `d0` must have defect 0.
pub fn projective_from_tensor(t: &CharacterTable, bs: &BasicSet, d0: usize, other: usize) -> Result<ProjChar, BrauerError> {
    let p = bs.block.prime as u64;
    let deg = t.irreducibles[d0].degree_int().ok_or(BrauerError::NotACharacter)? as u64;
    if crate::chartab::nu_p(deg, p) != crate::chartab::nu_p(t.order, p) {
        return Err(BrauerError::NotDefectZero(t.irreducibles[d0].name.clone()));
    }
    let v = t.tensor(&t.irreducibles[d0].values, &t.irreducibles[other].values)?;
    let prov = Provenance::Tensor { defect_zero: t.irreducibles[d0].name.clone(), other: t.irreducibles[other].name.clone() };
    cut_to_block(t, &v, &bs.block, bs, prov)
}

/// Induces a projective character of a subgroup and cuts it to the block of
/// the basic set.
pub fn induce_projective(
    f: &FusionMap,
    src: &CharacterTable,
    dst: &CharacterTable,
    values: &[Cyclotomic],
    name: &str,
    bs: &BasicSet,
) -> Result<ProjChar, BrauerError> {
    f.validate(src, dst)?;
    let p = bs.block.prime as u64;
    if values.len() != src.nclasses() || !vanishes_off_p_regular(src, values, p) {
        return Err(BrauerError::NotProjective(name.to_string()));
    }
    let v = f.induce(src, dst, values)?;
    cut_to_block(dst, &v, &bs.block, bs, Provenance::Induced { from: f.source.clone(), character: name.to_string() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelMode {
    /// multiplicity of each known PIM equals the residual at its lead row;
    /// a negative entry afterwards is an error
    Forced,
    /// largest multiplicity keeping the residual nonnegative
    Feasible,
}

/// `candidate = sum multiplicities[j] * known[j] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelCertificate {
    pub multiplicities: Vec<i64>,
    pub remainder: Vec<i64>,
}

impl PeelCertificate {
    pub fn recompose(&self, known: &[Vec<i64>]) -> Vec<i64> {
        let mut v = self.remainder.clone();
        for (m, k) in self.multiplicities.iter().zip(known) {
            for (a, b) in v.iter_mut().zip(k) {
                *a += m * b;
            }
        }
        v
    }
}

/// Subtracts the known PIM columns from a candidate, top-down by lead row.
/// Lead entries must be 1.
pub fn peel_pims(candidate: &[i64], known: &[Vec<i64>], mode: PeelMode) -> Result<PeelCertificate, BrauerError> {
    let n = candidate.len();
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(known.len());
    for (j, k) in known.iter().enumerate() {
        if k.len() != n {
            return Err(BrauerError::Shape(format!("known PIM {j} has {} entries, expected {n}", k.len())));
        }
        let lead = k.iter().position(|&v| v != 0).ok_or(BrauerError::ZeroColumn(j))?;
        if k[lead] != 1 {
            return Err(BrauerError::LeadEntry(j));
        }
        order.push((lead, j));
    }
    order.sort_unstable();
    let mut rem = candidate.to_vec();
    let mut mult = vec![0i64; known.len()];
    for &(lead, j) in &order {
        let col = &known[j];
        let m = match mode {
            PeelMode::Forced => rem[lead],
            PeelMode::Feasible => (0..n)
                .filter(|&r| col[r] > 0)
                .map(|r| rem[r].div_euclid(col[r]))
                .min()
                .unwrap_or(0)
                .max(0),
        };
        if m == 0 {
            continue;
        }
        for r in 0..n {
            rem[r] -= m * col[r];
        }
        if mode == PeelMode::Forced {
            if let Some(r) = (0..n).find(|&r| rem[r] < 0) {
                return Err(BrauerError::Negative { pim: j, row: r });
            }
        }
        mult[j] = m;
    }
    Ok(PeelCertificate { multiplicities: mult, remainder: rem })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::verify_basic_set;
    use crate::chartab::{block_partition, dixon_schneider, fusion_from_groups, identity_fusion};
    use crate::permgrp::catalog;

    #[test]
    fn peel_identity_and_combination() {
        let known = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let c = peel_pims(&[0, 1, 1], &known, PeelMode::Forced).unwrap();
        assert_eq!(c.multiplicities, vec![0, 1]);
        assert_eq!(c.remainder, vec![0, 0, 0]);
        let c = peel_pims(&[2, 3, 6], &known, PeelMode::Forced).unwrap();
        assert_eq!(c.multiplicities, vec![2, 3]);
        assert_eq!(c.remainder, vec![0, 0, 1]);
        assert_eq!(c.recompose(&known), vec![2, 3, 6]);
        assert!(matches!(peel_pims(&[1, 0, 0], &known, PeelMode::Forced), Err(BrauerError::Negative { pim: 0, row: 2 })));
        let c = peel_pims(&[1, 0, 0], &known, PeelMode::Feasible).unwrap();
        assert_eq!(c.remainder, vec![1, 0, 0]);
    }

    #[test]
    fn s4_mod_3_defect_zero_tensor() {
        let (t, _) = dixon_schneider(&catalog::symmetric(4), "S4").unwrap();
        let blocks = block_partition(&t, 3).unwrap();
        let three = t.irreducibles.iter().position(|c| c.degree_int() == Some(3)).unwrap();
        let b = blocks.iter().find(|b| b.contains(three)).unwrap();
        let (bs, _) = verify_basic_set(&t, b, &b.members, None).unwrap();
        let pc = projective_from_tensor(&t, &bs, three, 0).unwrap();
        assert_eq!(pc.values, t.irreducibles[three].values);
        assert!(vanishes_off_p_regular(&t, &pc.values, 3));
        // the principal block part of 3 x 3
        let b1 = &blocks[0];
        let (bs1, _) = verify_basic_set(&t, b1, &b1.members[..2], None).unwrap();
        for j in 0..t.irreducibles.len() {
            let pc = projective_from_tensor(&t, &bs1, three, j).unwrap();
            assert!(vanishes_off_p_regular(&t, &pc.values, 3));
        }
        assert!(matches!(projective_from_tensor(&t, &bs1, 0, 0), Err(BrauerError::NotDefectZero(_))));
    }

    #[test]
    fn induced_projectives() {
        let (t, _) = dixon_schneider(&catalog::symmetric(4), "S4").unwrap();
        let blocks = block_partition(&t, 3).unwrap();
        let b1 = &blocks[0];
        let (bs, _) = verify_basic_set(&t, b1, &b1.members[..2], None).unwrap();
        // identity fusion leaves a cut projective unchanged
        let three = t.irreducibles.iter().position(|c| c.degree_int() == Some(3)).unwrap();
        let p = projective_from_tensor(&t, &bs, three, three).unwrap();
        let q = induce_projective(&identity_fusion(&t), &t, &t, &p.values, "P", &bs).unwrap();
        assert_eq!(q.values, p.values);
        // from A4: the 3-dim character has 3-defect 0
        let h = catalog::alternating(4);
        let g = catalog::symmetric(4);
        let (th, hc) = dixon_schneider(&h, "A4").unwrap();
        let (tg, gc) = dixon_schneider(&g, "S4").unwrap();
        let f = fusion_from_groups(("A4", "S4"), &h, &hc, &g, &gc).unwrap();
        let h3 = th.irreducibles.iter().position(|c| c.degree_int() == Some(3)).unwrap();
        let q = induce_projective(&f, &th, &tg, &th.irreducibles[h3].values, "3a", &bs).unwrap();
        assert!(vanishes_off_p_regular(&tg, &q.values, 3));
        assert!(induce_projective(&f, &th, &tg, &th.irreducibles[0].values, "1a", &bs).is_err());
    }
}
