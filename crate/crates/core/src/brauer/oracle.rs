//! Brute-force decomposition matrices from explicit modules, and the check
//! of index-2 Clifford predictions against them.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::{
    clifford_case, clifford_split, solve_cyclotomic, solve_parameters, BrauerError, CliffordCase, CoverKind, Fact, ParamMatrix, SplitColumns,
};
use crate::chartab::{block_partition, ExtLabel, dixon_schneider, fusion_from_groups, label_extension, CharacterTable};
use crate::exact::{Cyclotomic, ParamInt, ParamSystem, SolveResult};
use crate::gfla::FieldSpec;
use crate::mtxcond::{brauer_value_in, chop, FGModule};
use crate::permgrp::{ConjugacyClasses, PermGroup};

/// Largest dimension of a tensor product the module search will chop.
pub const TENSOR_DIM_LIMIT: usize = 400;

/// Degree over `GF(p)` of the field holding all roots of unity of orders
/// of `p`-regular elements.
pub fn splitting_degree(t: &CharacterTable, p: u32) -> Option<u32> {
    let e = t.classes.iter().filter(|c| c.order % p as u64 != 0).fold(1u64, |a, c| num_integer::Integer::lcm(&a, &c.order));
    FieldSpec::splitting_degree(p, e)
}

#[derive(Clone, Debug)]
pub struct BruteForce {
    pub field: FieldSpec,
    /// `p`-regular classes, in table order
    pub regular: Vec<usize>,
    /// irreducible modules, in order of discovery
    pub modules: Vec<FGModule>,
    /// Brauer characters of `modules` on `regular`
    pub ibr: Vec<Vec<Cyclotomic>>,
    /// rows `Irr`, columns `modules`
    pub d: Vec<Vec<i64>>,
}

fn class_matrices(m: &FGModule, g: &PermGroup, cl: &ConjugacyClasses, regular: &[usize]) -> Result<Vec<crate::gfla::GFMatrix>, BrauerError> {
    let en = g.elements().map_err(|e| BrauerError::Oracle(e.to_string()))?;
    regular
        .iter()
        .map(|&c| {
            let w: Vec<(usize, i64)> = en.word(cl.reps[c]).into_iter().map(|k| (k, 1)).collect();
            Ok(m.word_matrix(&w)?)
        })
        .collect()
}

fn brauer_character(m: &FGModule, g: &PermGroup, t: &CharacterTable, cl: &ConjugacyClasses, regular: &[usize]) -> Result<Vec<Cyclotomic>, BrauerError> {
    let mats = class_matrices(m, g, cl, regular)?;
    mats.iter()
        .zip(regular)
        .map(|(x, &c)| Ok(brauer_value_in(x, t.classes[c].order, m.field())?))
        .collect()
}

/// All irreducible `GF(p^k)`-modules of `g` (by default `k` from
/// [`splitting_degree`]) found by chopping the permutation module and
/// tensor products of factors and their duals, and the decomposition
/// matrix they give. `t` and `cl` must come from the same class list.
pub fn brute_force_decomposition(
    g: &PermGroup,
    t: &CharacterTable,
    cl: &ConjugacyClasses,
    p: u32,
    k: Option<u32>,
    seed: u64,
) -> Result<BruteForce, BrauerError> {
    let k = match k {
        Some(k) => k,
        None => splitting_degree(t, p).ok_or_else(|| BrauerError::Oracle("no splitting field in range".into()))?,
    };
    let field = FieldSpec::canonical(p, k).map_err(|e| BrauerError::Oracle(e.to_string()))?;
    let regular = t.p_regular(p as u64);
    let ell = regular.len();
    let mut modules: Vec<FGModule> = Vec::new();
    let mut ibr: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut pending: Vec<FGModule> = vec![FGModule::permutation(&field, g.gens())?];
    let mut step = 0u64;
    let mut fresh: Vec<usize> = Vec::new();
    let absorb = |m: &FGModule, modules: &mut Vec<FGModule>, ibr: &mut Vec<Vec<Cyclotomic>>, fresh: &mut Vec<usize>, step: u64| -> Result<(), BrauerError> {
        let series = chop(m, seed.wrapping_add(step))?;
        for f in &series.factors {
            let chi = brauer_character(&f.module, g, t, cl, &regular)?;
            if !ibr.contains(&chi) {
                ibr.push(chi);
                modules.push(f.module.clone());
                fresh.push(modules.len() - 1);
            }
        }
        Ok(())
    };
    while modules.len() < ell {
        if let Some(m) = pending.pop() {
            absorb(&m, &mut modules, &mut ibr, &mut fresh, step)?;
            step += 1;
            continue;
        }
        let Some(i) = fresh.first().copied() else {
            return Err(BrauerError::Oracle(format!("found {} of {ell} irreducible Brauer characters", modules.len())));
        };
        fresh.remove(0);
        let mi = modules[i].clone();
        pending.push(mi.dual()?);
        for j in 0..modules.len() {
            let d = mi.dim() * modules[j].dim();
            if modules[j].dim() > 1 && d <= TENSOR_DIM_LIMIT {
                pending.push(mi.tensor(&modules[j])?);
            }
        }
    }
    let mut d = Vec::with_capacity(t.irreducibles.len());
    for chi in &t.irreducibles {
        let target: Vec<Cyclotomic> = regular.iter().map(|&c| chi.values[c].clone()).collect();
        match solve_cyclotomic(&ibr, &target) {
            SolveResult::Solution { x, nullity: 0, integral: true } => {
                let row = x.iter().map(|v| v.to_integer().to_i64().ok_or(BrauerError::Overflow)).collect::<Result<Vec<_>, _>>()?;
                if row.iter().any(|&v| v < 0) {
                    return Err(BrauerError::Oracle(format!("{} has a negative decomposition number", chi.name)));
                }
                d.push(row);
            }
            _ => return Err(BrauerError::Oracle(format!("{} is not an integral combination of the Brauer characters", chi.name))),
        }
    }
    Ok(BruteForce { field, regular, modules, ibr, d })
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub names: (String, String),
    pub prime: u32,
    pub field_order: u32,
    pub cases: Vec<CliffordCase>,
    pub d_h: Vec<Vec<i64>>,
    pub d_ht: Vec<Vec<i64>>,
    /// predicted columns of `Ht` at the first surviving assignment
    pub predicted: Vec<Vec<i64>>,
    pub survivors: usize,
    /// for every block that is not invariant or has two covers, each cover
    /// has the decomposition matrix of the block under restriction of rows
    pub cases_consistent: bool,
    /// every survivor equals the brute-force matrix up to column order
    pub matches: bool,
}

fn sorted_columns(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut cols: Vec<Vec<i64>> = (0..ncols).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    cols.sort();
    cols
}

fn submatrix_columns(d: &[Vec<i64>], rows: &[usize]) -> Vec<Vec<i64>> {
    let ncols = d.first().map_or(0, Vec::len);
    let cols: Vec<usize> = (0..ncols).filter(|&j| rows.iter().any(|&r| d[r][j] != 0)).collect();
    let sub: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&j| d[r][j]).collect()).collect();
    sorted_columns(&sub)
}

fn transport_holds(case: &CliffordCase, block: &[usize], lab: &crate::chartab::ExtensionLabeling, gb: &[crate::chartab::Block], d_h: &[Vec<i64>], d_g: &[Vec<i64>]) -> bool {
    let covers: Vec<usize> = match case.kind {
        CoverKind::NotInvariant { cover, .. } => vec![cover],
        CoverKind::InvariantTwoCovers { covers } => covers.to_vec(),
        CoverKind::InvariantOneCover { .. } => return true,
    };
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &i in block {
        match lab.labels[i] {
            ExtLabel::Induced { target } => pairs.push((target, i)),
            ExtLabel::Split { plus, minus, .. } => {
                pairs.push((plus, i));
                pairs.push((minus, i));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup_by_key(|p| p.0);
    covers.iter().all(|&c| {
        let (g_rows, h_rows): (Vec<usize>, Vec<usize>) = pairs.iter().filter(|(g, _)| gb[c].contains(*g)).copied().unzip();
        submatrix_columns(d_g, &g_rows) == submatrix_columns(d_h, &h_rows)
    })
}

/// Predicts the decomposition matrix of `ht` from that of its index-2
/// subgroup `h` and compares with brute force. Both use `GF(p^k)` with `k`
/// the splitting degree for `ht`.
pub fn clifford_oracle(h: &PermGroup, ht: &PermGroup, names: (&str, &str), p: u32, seed: u64) -> Result<OracleReport, BrauerError> {
    let (th, hc) = dixon_schneider(h, names.0)?;
    let (tg, gc) = dixon_schneider(ht, names.1)?;
    let fusion = fusion_from_groups(names, h, &hc, ht, &gc)?;
    let x = (0..tg.nclasses()).find(|j| !fusion.map.contains(j)).ok_or(BrauerError::Oracle("no outer class".into()))?;
    let lab = label_extension(&th, &tg, &fusion, x)?;
    let k = splitting_degree(&tg, p).ok_or_else(|| BrauerError::Oracle("no splitting field in range".into()))?;
    let bh = brute_force_decomposition(h, &th, &hc, p, Some(k), seed)?;
    let bg = brute_force_decomposition(ht, &tg, &gc, p, Some(k), seed)?;

    let hb = block_partition(&th, p)?;
    let gb = block_partition(&tg, p)?;
    let cases = (0..hb.len()).map(|b| clifford_case(b, &lab, &hb, &gb)).collect::<Result<Vec<_>, _>>()?;
    let cases_consistent = cases.iter().zip(&hb).all(|(c, b)| transport_holds(c, &b.members, &lab, &gb, &bh.d, &bg.d));

    let n_h = th.irreducibles.len();
    let n_g = tg.irreducibles.len();
    let phis: Vec<Vec<i64>> = (0..bh.ibr.len()).map(|j| (0..n_h).map(|i| bh.d[i][j]).collect()).collect();
    let mut sys = ParamSystem::new();
    let mut columns: Vec<Vec<ParamInt>> = Vec::new();
    let mut seen_induced: BTreeSet<Vec<ParamInt>> = BTreeSet::new();
    for (j, phi) in phis.iter().enumerate() {
        match clifford_split(phi, &lab, n_g, j)? {
            SplitColumns::Induced(col) => {
                // Phi and Phi^sigma induce to the same PIM
                if seen_induced.insert(col.clone()) {
                    columns.push(col);
                }
            }
            SplitColumns::Pair { columns: [a, b], sys: s } => {
                sys.merge(&s)?;
                columns.push(a);
                columns.push(b);
            }
        }
    }
    let entries: Vec<Vec<ParamInt>> = (0..n_g).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let matrix = ParamMatrix::new(tg.irreducibles.iter().map(|c| c.name.clone()).collect(), columns.len(), entries)?;
    let ordinary: Vec<Vec<Cyclotomic>> =
        tg.irreducibles.iter().map(|c| bg.regular.iter().map(|&r| c.values[r].clone()).collect()).collect();
    let fact = Fact::BrauerCharacters { label: "brute-force Brauer characters".into(), decomposition: matrix.clone(), ordinary, ibr: bg.ibr.clone() };
    let report = solve_parameters(&sys, &[fact])?;
    let want = sorted_columns(&bg.d);
    let mut matches = true;
    let mut predicted = Vec::new();
    for (i, a) in report.survivors.iter().enumerate() {
        let m = matrix.specialize(a)?;
        matches &= sorted_columns(&m) == want;
        if i == 0 {
            predicted = m;
        }
    }
    Ok(OracleReport {
        names: (names.0.to_string(), names.1.to_string()),
        prime: p,
        field_order: bg.field.q(),
        cases,
        d_h: bh.d,
        d_ht: bg.d,
        predicted,
        survivors: report.survivors.len(),
        cases_consistent,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    #[test]
    fn s4_mod_3_brute_force() {
        let g = catalog::symmetric(4);
        let (t, cl) = dixon_schneider(&g, "S4").unwrap();
        let bf = brute_force_decomposition(&g, &t, &cl, 3, None, 0).unwrap();
        assert_eq!(bf.ibr.len(), 4);
        let mut dims: Vec<i64> = bf.modules.iter().map(|m| m.dim() as i64).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 3, 3]);
        // ordinary degrees are recovered from the decomposition
        for (chi, row) in t.irreducibles.iter().zip(&bf.d) {
            let deg: i64 = row.iter().zip(&bf.modules).map(|(d, m)| d * m.dim() as i64).sum();
            assert_eq!(Some(deg), chi.degree_int());
        }
    }

    #[test]
    fn a4_s4_mod_3_prediction() {
        let r = clifford_oracle(&catalog::alternating(4), &catalog::symmetric(4), ("A4", "S4"), 3, 0).unwrap();
        assert!(r.survivors >= 1);
        assert!(r.matches);
        assert!(r.cases_consistent);
        assert!(matches!(r.cases[0].kind, CoverKind::InvariantOneCover { .. }));
    }
}
