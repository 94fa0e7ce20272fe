//! Basic sets of ordinary characters and their relations on `p`-regular
//! classes.

use num_traits::{ToPrimitive, Zero};

use super::{BrauerError, RelationsMatrix};
use crate::chartab::{Block, CharacterTable};
use crate::exact::{rat_solve, rref_rational, Cyclotomic, Rational, SolveResult};

/// Expresses `target` as a rational combination of `basis` (equal-length
/// cyclotomic vectors), coordinate by coordinate in a common cyclotomic field.
pub fn solve_cyclotomic(basis: &[Vec<Cyclotomic>], target: &[Cyclotomic]) -> SolveResult {
    let n = basis.iter().flatten().chain(target).fold(1u64, |a, v| num_integer::Integer::lcm(&a, &v.conductor()));
    let coords = |v: &Cyclotomic| v.basis_coords(n);
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    for (i, t) in target.iter().enumerate() {
        let tc = coords(t);
        let cols: Vec<Vec<Rational>> = basis.iter().map(|v| coords(&v[i])).collect();
        for k in 0..n as usize {
            if tc[k].is_zero() && cols.iter().all(|c| c[k].is_zero()) {
                continue;
            }
            a.push(cols.iter().map(|c| c[k].clone()).collect());
            b.push(tc[k].clone());
        }
    }
    if a.is_empty() {
        // nothing to satisfy
        return SolveResult::Solution { x: vec![Rational::zero(); basis.len()], nullity: basis.len(), integral: true };
    }
    rat_solve(&a, &b)
}

/// Rank of a family of cyclotomic vectors over the rationals.
pub fn cyclotomic_rank(vectors: &[Vec<Cyclotomic>]) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else { return 0 };
    let n = vectors.iter().flatten().fold(1u64, |a, v| num_integer::Integer::lcm(&a, &v.conductor()));
    let mut rows: Vec<Vec<Rational>> =
        vectors.iter().map(|v| (0..len).flat_map(|i| v[i].basis_coords(n)).collect()).collect();
    rref_rational(&mut rows).len()
}

fn restricted(t: &CharacterTable, chi: usize, reg: &[usize]) -> Vec<Cyclotomic> {
    reg.iter().map(|&c| t.irreducibles[chi].values[c].clone()).collect()
}

/// Number of irreducible Brauer characters of a block: the rank of the
/// restrictions of its ordinary characters to the `p`-regular classes.
pub fn block_ell(t: &CharacterTable, block: &Block) -> usize {
    let reg = t.p_regular(block.prime as u64);
    let v: Vec<Vec<Cyclotomic>> = block.members.iter().map(|&i| restricted(t, i, &reg)).collect();
    cyclotomic_rank(&v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EllSource {
    Rank,
    Override,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSet {
    pub block: Block,
    /// indices into the table's irreducibles, in basic-set order
    pub members: Vec<usize>,
    pub names: Vec<String>,
    pub ell: usize,
    /// where `ell` came from: computed here or supplied by the caller
    pub ell_source: EllSource,
}

/// Checks that `candidates` form a basic set of `block`. `ell` overrides the
/// computed number of Brauer characters; the override is recorded.
pub fn verify_basic_set(
    t: &CharacterTable,
    block: &Block,
    candidates: &[usize],
    ell: Option<usize>,
) -> Result<(BasicSet, RelationsMatrix), BrauerError> {
    let (ell, ell_source) = match ell {
        Some(l) => (l, EllSource::Override),
        None => (block_ell(t, block), EllSource::Rank),
    };
    if candidates.len() != ell {
        return Err(BrauerError::BasicSetSize { got: candidates.len(), expected: ell });
    }
    if let Some(&c) = candidates.iter().find(|c| !block.contains(**c)) {
        return Err(BrauerError::NotInBlock(t.irreducibles[c].name.clone()));
    }
    let bs = BasicSet {
        block: block.clone(),
        members: candidates.to_vec(),
        names: candidates.iter().map(|&i| t.irreducibles[i].name.clone()).collect(),
        ell,
        ell_source,
    };
    let y = relations_matrix(t, &bs)?;
    Ok((bs, y))
}

/// Integral expansions of the non-basic characters of the block.
pub fn relations_matrix(t: &CharacterTable, bs: &BasicSet) -> Result<RelationsMatrix, BrauerError> {
    let reg = t.p_regular(bs.block.prime as u64);
    let basis: Vec<Vec<Cyclotomic>> = bs.members.iter().map(|&i| restricted(t, i, &reg)).collect();
    if cyclotomic_rank(&basis) != basis.len() {
        return Err(BrauerError::Dependent);
    }
    let nonbasic: Vec<usize> = bs.block.members.iter().copied().filter(|i| !bs.members.contains(i)).collect();
    let mut y = vec![vec![0i64; nonbasic.len()]; bs.members.len()];
    for (k, &chi) in nonbasic.iter().enumerate() {
        let name = t.irreducibles[chi].name.clone();
        match solve_cyclotomic(&basis, &restricted(t, chi, &reg)) {
            SolveResult::NoSolution => return Err(BrauerError::NotSpanned(name)),
            SolveResult::Solution { x, integral, .. } => {
                if !integral {
                    return Err(BrauerError::NonIntegral(name));
                }
                for (b, v) in x.iter().enumerate() {
                    y[b][k] = v.to_integer().to_i64().ok_or(BrauerError::Overflow)?;
                }
            }
        }
    }
    Ok(RelationsMatrix {
        block: format!("B{}", bs.block.label),
        basic: bs.names.clone(),
        nonbasic: nonbasic.iter().map(|&i| t.irreducibles[i].name.clone()).collect(),
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{block_partition, dixon_schneider};
    use crate::permgrp::catalog;

    #[test]
    fn a5_mod_3_principal_block() {
        let (t, _) = dixon_schneider(&catalog::alternating(5), "A5").unwrap();
        let b = block_partition(&t, 3).unwrap();
        let b1 = &b[0];
        // degrees 1 4 5 in the principal block, 3a and 3b of defect 0
        assert_eq!(b1.members, vec![0, 3, 4]);
        assert_eq!(block_ell(&t, b1), 2);
        let (bs, y) = verify_basic_set(&t, b1, &[0, 3], None).unwrap();
        assert_eq!(bs.ell_source, EllSource::Rank);
        // 5 = 1 + 4 on 3-regular classes
        assert_eq!(y.y, vec![vec![1], vec![1]]);
        assert!(matches!(verify_basic_set(&t, b1, &[0], None), Err(BrauerError::BasicSetSize { .. })));
        assert!(matches!(verify_basic_set(&t, b1, &[0, 1], None), Err(BrauerError::NotInBlock(_))));
    }

    #[test]
    fn defect_zero_block_is_its_own_basic_set() {
        let (t, _) = dixon_schneider(&catalog::symmetric(4), "S4").unwrap();
        let b = block_partition(&t, 3).unwrap();
        let d0 = b.iter().find(|b| b.defect == 0).unwrap();
        let (bs, y) = verify_basic_set(&t, d0, &d0.members, None).unwrap();
        assert_eq!(bs.ell, 1);
        assert!(y.nonbasic.is_empty());
    }

    #[test]
    fn non_integral_and_dependent_sets() {
        // D8 mod 2: one block, ell = 1, and the degree-2 character alone gives 1 = (1/2) 2
        let r = crate::permgrp::Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let s = crate::permgrp::Perm::from_cycles(4, &[&[2, 4]]).unwrap();
        let d8 = crate::permgrp::PermGroup::new(4, vec![r, s]).unwrap();
        let (t, _) = dixon_schneider(&d8, "D8").unwrap();
        let b = block_partition(&t, 2).unwrap();
        assert_eq!(b.len(), 1);
        let two = t.irreducibles.iter().position(|c| c.degree_int() == Some(2)).unwrap();
        assert!(matches!(verify_basic_set(&t, &b[0], &[two], None), Err(BrauerError::NonIntegral(_))));
        assert!(verify_basic_set(&t, &b[0], &[0], None).is_ok());
        // S3 mod 2: 1a and 1b agree on 2-regular classes
        let t = crate::chartab::fixtures::s3();
        let b2 = block_partition(&t, 2).unwrap();
        assert_eq!(b2[0].members, vec![0, 1]);
        let r = verify_basic_set(&t, &b2[0], &[0, 1], Some(2));
        assert!(matches!(r, Err(BrauerError::Dependent)));
    }
}
