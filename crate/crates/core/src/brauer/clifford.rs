//! Blocks and PIMs of an index-2 extension `Ht` from those of `H`.

use std::collections::BTreeSet;

use super::BrauerError;
use crate::chartab::{Block, ExtLabel, ExtensionLabeling};
use crate::exact::{Constraint, ParamInt, ParamSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverKind {
    /// `b^sigma` is another block of `H`; both are covered by one block
    NotInvariant { partner: usize, cover: usize },
    /// `b` is covered by two blocks, exchanged by tensoring with the sign
    InvariantTwoCovers { covers: [usize; 2] },
    InvariantOneCover { cover: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordCase {
    pub kind: CoverKind,
    /// irreducibles of `Ht` lying over the block, by increasing index
    pub over: Vec<usize>,
}

fn ht_over(labeling: &ExtensionLabeling, members: &[usize]) -> Vec<usize> {
    let mut s = BTreeSet::new();
    for &i in members {
        match labeling.labels[i] {
            ExtLabel::Induced { target } => {
                s.insert(target);
            }
            ExtLabel::Split { plus, minus, .. } => {
                s.insert(plus);
                s.insert(minus);
            }
        }
    }
    s.into_iter().collect()
}

fn block_index(blocks: &[Block], chi: usize) -> Result<usize, BrauerError> {
    blocks.iter().position(|b| b.contains(chi)).ok_or_else(|| BrauerError::Clifford(format!("character {chi} lies in no block")))
}

/// Which case of index-2 Clifford theory block `b` of `H` falls under.
pub fn clifford_case(b: usize, labeling: &ExtensionLabeling, h_blocks: &[Block], ht_blocks: &[Block]) -> Result<CliffordCase, BrauerError> {
    let block = h_blocks.get(b).ok_or_else(|| BrauerError::Clifford(format!("no block {b}")))?;
    let image: BTreeSet<usize> = block.members.iter().map(|&i| labeling.sigma_chars[i]).collect();
    let partner = block_index(h_blocks, *image.iter().next().expect("blocks are nonempty"))?;
    if image.iter().any(|&i| !h_blocks[partner].contains(i)) {
        return Err(BrauerError::Clifford("sigma does not permute the blocks".into()));
    }
    let over = ht_over(labeling, &block.members);
    let covers: BTreeSet<usize> = over.iter().map(|&j| block_index(ht_blocks, j)).collect::<Result<_, _>>()?;
    let covers: Vec<usize> = covers.into_iter().collect();
    let kind = match (partner == b, covers.as_slice()) {
        (false, [c]) => CoverKind::NotInvariant { partner, cover: *c },
        (true, [c]) => CoverKind::InvariantOneCover { cover: *c },
        (true, [c, d]) => CoverKind::InvariantTwoCovers { covers: [*c, *d] },
        _ => return Err(BrauerError::Clifford(format!("block {b} has {} covering blocks", covers.len()))),
    };
    Ok(CliffordCase { kind, over })
}

/// Predicted PIM columns of `Ht` over `Irr(Ht)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitColumns {
    /// `Phi^sigma != Phi`: the induced PIM
    Induced(Vec<ParamInt>),
    /// `Phi^sigma = Phi`: two extensions, parameterized where a constituent
    /// `psi` of `Phi` splits as `psi^+ + psi^-`
    Pair { columns: [Vec<ParamInt>; 2], sys: ParamSystem },
}

/// Splits a PIM of `H`, given as multiplicities over all of `Irr(H)`. The
/// `k`-th split constituent gets parameters `pim{i}_c{k}`, `pim{i}_ct{k}`
/// (no suffix for the first) summing to its multiplicity.
pub fn clifford_split(phi: &[i64], labeling: &ExtensionLabeling, n_ht: usize, i: usize) -> Result<SplitColumns, BrauerError> {
    let n = labeling.labels.len();
    if phi.len() != n {
        return Err(BrauerError::Shape(format!("PIM has {} entries, H has {n} irreducibles", phi.len())));
    }
    let stable = (0..n).all(|k| phi[labeling.sigma_chars[k]] == phi[k]);
    if !stable {
        let mut col = vec![ParamInt::zero(); n_ht];
        for (k, &m) in phi.iter().enumerate() {
            let m = ParamInt::constant(m);
            match labeling.labels[k] {
                ExtLabel::Induced { target } => col[target] = col[target].add(&m),
                ExtLabel::Split { plus, minus, .. } => {
                    col[plus] = col[plus].add(&m);
                    col[minus] = col[minus].add(&m);
                }
            }
        }
        return Ok(SplitColumns::Induced(col));
    }
    let mut a = vec![ParamInt::zero(); n_ht];
    let mut b = vec![ParamInt::zero(); n_ht];
    let mut sys = ParamSystem::new();
    let mut k_split = 0;
    for (k, &m) in phi.iter().enumerate() {
        if m == 0 {
            continue;
        }
        match labeling.labels[k] {
            ExtLabel::Induced { target } => {
                // counted once per sigma-orbit
                if k < labeling.sigma_chars[k] {
                    a[target] = ParamInt::constant(m);
                    b[target] = ParamInt::constant(m);
                }
            }
            ExtLabel::Split { plus, minus, .. } => {
                k_split += 1;
                let suffix = if k_split == 1 { String::new() } else { k_split.to_string() };
                let c = format!("pim{i}_c{suffix}");
                let ct = format!("pim{i}_ct{suffix}");
                sys.add_param(&c, 0, m)?;
                sys.add_param(&ct, 0, m)?;
                sys.add_constraint(Constraint::eq(ParamInt::var(&c).add(&ParamInt::var(&ct)), ParamInt::constant(m)))?;
                a[plus] = ParamInt::var(&c);
                a[minus] = ParamInt::var(&ct);
                b[plus] = ParamInt::var(&ct);
                b[minus] = ParamInt::var(&c);
            }
        }
    }
    Ok(SplitColumns::Pair { columns: [a, b], sys })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{block_partition, dixon_schneider, fusion_from_groups, label_extension};
    use crate::exact::param_solve;
    use crate::permgrp::catalog;

    fn a5_s5() -> (crate::chartab::CharacterTable, crate::chartab::CharacterTable, ExtensionLabeling) {
        let h = catalog::alternating(5);
        let g = catalog::symmetric(5);
        let (th, hc) = dixon_schneider(&h, "A5").unwrap();
        let (tg, gc) = dixon_schneider(&g, "S5").unwrap();
        let f = fusion_from_groups(("A5", "S5"), &h, &hc, &g, &gc).unwrap();
        let x = (0..tg.nclasses()).find(|j| !f.map.contains(j)).unwrap();
        let e = label_extension(&th, &tg, &f, x).unwrap();
        (th, tg, e)
    }

    #[test]
    fn a5_s5_cases() {
        let (th, tg, e) = a5_s5();
        let hb = block_partition(&th, 3).unwrap();
        let gb = block_partition(&tg, 3).unwrap();
        // the two 3-dimensional characters of A5 are swapped and each has defect 0
        let three: Vec<usize> = (0..th.irreducibles.len()).filter(|&i| th.irreducibles[i].degree_int() == Some(3)).collect();
        let b3 = hb.iter().position(|b| b.contains(three[0])).unwrap();
        let c = clifford_case(b3, &e, &hb, &gb).unwrap();
        assert!(matches!(c.kind, CoverKind::NotInvariant { .. }));
        assert_eq!(c.over.len(), 1);
        let c = clifford_case(0, &e, &hb, &gb).unwrap();
        assert!(matches!(c.kind, CoverKind::InvariantTwoCovers { .. }));
        assert_eq!(c.over.len(), 6);
        // p = 2 does not split the principal block
        let hb2 = block_partition(&th, 2).unwrap();
        let gb2 = block_partition(&tg, 2).unwrap();
        let c = clifford_case(0, &e, &hb2, &gb2).unwrap();
        assert!(matches!(c.kind, CoverKind::InvariantOneCover { .. }));
    }

    #[test]
    fn split_of_a_stable_pim() {
        let (th, tg, e) = a5_s5();
        // 1 + 4 + 5 type column over Irr(A5) (trivial, 3, 3', 4, 5)
        let mut phi = vec![0i64; th.irreducibles.len()];
        phi[0] = 1;
        phi[3] = 1;
        match clifford_split(&phi, &e, tg.irreducibles.len(), 1).unwrap() {
            SplitColumns::Pair { columns, sys } => {
                assert_eq!(sys.names(), vec!["pim1_c", "pim1_ct", "pim1_c2", "pim1_ct2"]);
                assert_eq!(param_solve(&sys).len(), 4);
                // the sign twist swaps the columns
                let perm = crate::brauer::epsilon_row_permutation(&e.names(&th, &tg)).unwrap();
                for r in 0..tg.irreducibles.len() {
                    assert_eq!(columns[0][r], columns[1][perm[r]]);
                }
            }
            other => panic!("{other:?}"),
        }
        let mut phi = vec![0i64; th.irreducibles.len()];
        let three: Vec<usize> = (0..th.irreducibles.len()).filter(|&i| th.irreducibles[i].degree_int() == Some(3)).collect();
        phi[three[0]] = 1;
        match clifford_split(&phi, &e, tg.irreducibles.len(), 2).unwrap() {
            SplitColumns::Induced(col) => {
                let total: i64 = col.iter().map(|v| v.as_constant().unwrap()).sum();
                assert_eq!(total, 1);
            }
            other => panic!("{other:?}"),
        }
    }
}
