//! Eliminating decomposition-matrix parameters with theoretical and
//! computed facts.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{BrauerError, ParamMatrix};
use crate::exact::{param_solve, rat, rat_solve, Assignment, Cyclotomic, ParamInt, ParamSystem, Rational};

#[derive(Clone, Debug)]
pub enum Fact {
    /// `lhs = sum coef * column`, entrywise
    ProjIdentity { label: String, lhs: Vec<ParamInt>, terms: Vec<(ParamInt, Vec<ParamInt>)> },
    EntryZero { label: String, entry: ParamInt },
    /// `candidate` is a projective character whose PIM constituents are
    /// among `pims`: peeling by lead row leaves zero with nonnegative
    /// multiplicities. PIMs sharing a lead row are searched exhaustively.
    ProjectiveDecomposes { label: String, candidate: Vec<ParamInt>, pims: Vec<Vec<ParamInt>> },
    /// Composition factors with known traces mod `prime` of one element:
    /// for each trace value the predicted multiplicities add up to the
    /// observed ones.
    FactorTrace { label: String, prime: u64, candidates: Vec<(ParamInt, i64)>, observed: Vec<(i64, i64)> },
    /// `decomposition * B = ordinary` holds for `B` the given Brauer
    /// characters in some order (rows are class functions on p-regular classes).
    BrauerCharacters { label: String, decomposition: ParamMatrix, ordinary: Vec<Vec<Cyclotomic>>, ibr: Vec<Vec<Cyclotomic>> },
}

impl Fact {
    pub fn label(&self) -> &str {
        match self {
            Fact::ProjIdentity { label, .. }
            | Fact::EntryZero { label, .. }
            | Fact::ProjectiveDecomposes { label, .. }
            | Fact::FactorTrace { label, .. }
            | Fact::BrauerCharacters { label, .. } => label,
        }
    }

    /// Whether the fact holds at a full assignment.
    pub fn holds(&self, a: &Assignment) -> Result<bool, BrauerError> {
        let ev = |e: &ParamInt| e.eval_unchecked(a).map_err(BrauerError::from);
        let evv = |v: &[ParamInt]| v.iter().map(ev).collect::<Result<Vec<i64>, _>>();
        match self {
            Fact::ProjIdentity { lhs, terms, .. } => {
                let mut r = evv(lhs)?;
                for (c, col) in terms {
                    if col.len() != r.len() {
                        return Err(BrauerError::Shape("identity columns differ in length".into()));
                    }
                    let c = ev(c)?;
                    for (x, y) in r.iter_mut().zip(evv(col)?) {
                        *x -= c * y;
                    }
                }
                Ok(r.iter().all(|&x| x == 0))
            }
            Fact::EntryZero { entry, .. } => Ok(ev(entry)? == 0),
            Fact::ProjectiveDecomposes { candidate, pims, .. } => {
                let cand = evv(candidate)?;
                let known = pims.iter().map(|p| evv(p)).collect::<Result<Vec<_>, _>>()?;
                decomposes(&cand, &known)
            }
            Fact::FactorTrace { prime, candidates, observed, .. } => {
                let p = *prime as i64;
                let mut bal: BTreeMap<i64, i64> = BTreeMap::new();
                for (e, t) in candidates {
                    *bal.entry(t.rem_euclid(p)).or_default() += ev(e)?;
                }
                for (t, m) in observed {
                    *bal.entry(t.rem_euclid(p)).or_default() -= m;
                }
                Ok(bal.values().all(|&v| v == 0))
            }
            Fact::BrauerCharacters { decomposition, ordinary, ibr, .. } => {
                let d = decomposition.specialize(a)?;
                brauer_consistent(&d, ordinary, ibr)
            }
        }
    }
}

/// Lead-row peeling where all multiplicities must come out exact.
fn decomposes(cand: &[i64], known: &[Vec<i64>]) -> Result<bool, BrauerError> {
    let n = cand.len();
    let mut by_lead: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, k) in known.iter().enumerate() {
        if k.len() != n {
            return Err(BrauerError::Shape(format!("PIM {j} has {} entries, expected {n}", k.len())));
        }
        let lead = k.iter().position(|&v| v != 0).ok_or(BrauerError::ZeroColumn(j))?;
        if k[lead] != 1 {
            return Err(BrauerError::LeadEntry(j));
        }
        by_lead.entry(lead).or_default().push(j);
    }
    let groups: Vec<(usize, Vec<usize>)> = by_lead.into_iter().collect();
    let bound = cand.iter().copied().max().unwrap_or(0).max(0);
    fn rec(g: usize, groups: &[(usize, Vec<usize>)], known: &[Vec<i64>], rem: &mut Vec<i64>, bound: i64) -> bool {
        if rem.iter().any(|&v| v < 0) {
            return false;
        }
        if g == groups.len() {
            return rem.iter().all(|&v| v == 0);
        }
        let (lead, ref cols) = groups[g];
        // all but the last PIM of the group are free, the last takes what is left at the lead row
        let free = &cols[..cols.len() - 1];
        let last = cols[cols.len() - 1];
        let mut ms = vec![0i64; free.len()];
        loop {
            let mut r = rem.clone();
            for (&j, &m) in free.iter().zip(&ms) {
                for (x, y) in r.iter_mut().zip(&known[j]) {
                    *x -= m * y;
                }
            }
            let m_last = r[lead];
            if m_last >= 0 {
                for (x, y) in r.iter_mut().zip(&known[last]) {
                    *x -= m_last * y;
                }
                if rec(g + 1, groups, known, &mut r, bound) {
                    return true;
                }
            }
            // next tuple of free multiplicities
            let mut k = 0;
            loop {
                if k == ms.len() {
                    return false;
                }
                ms[k] += 1;
                if ms[k] <= bound {
                    break;
                }
                ms[k] = 0;
                k += 1;
            }
        }
    }
    let mut rem = cand.to_vec();
    Ok(rec(0, &groups, known, &mut rem, bound))
}

/// Solves `d * B = ordinary` by least squares (exact, rational normal
/// equations) and compares the rows of `B` with `ibr` as multisets.
fn brauer_consistent(d: &[Vec<i64>], ordinary: &[Vec<Cyclotomic>], ibr: &[Vec<Cyclotomic>]) -> Result<bool, BrauerError> {
    let n = d.len();
    if ordinary.len() != n {
        return Err(BrauerError::Shape(format!("{n} matrix rows against {} ordinary characters", ordinary.len())));
    }
    let l = d.first().map_or(0, Vec::len);
    if l != ibr.len() {
        return Ok(false);
    }
    let dtd: Vec<Vec<Rational>> = (0..l).map(|i| (0..l).map(|j| rat((0..n).map(|r| d[r][i] * d[r][j]).sum())).collect()).collect();
    // columns of the inverse of d^T d
    let mut inv = vec![vec![Rational::zero(); l]; l];
    for j in 0..l {
        let e: Vec<Rational> = (0..l).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
        match rat_solve(&dtd, &e).unique() {
            Some(x) => {
                for i in 0..l {
                    inv[i][j] = x[i].clone();
                }
            }
            None => return Ok(false),
        }
    }
    let width = ibr.first().map_or(0, Vec::len);
    let mut b = vec![vec![Cyclotomic::zero(); width]; l];
    for (i, bi) in b.iter_mut().enumerate() {
        for r in 0..n {
            let coef: Rational = (0..l).map(|k| &inv[i][k] * rat(d[r][k])).sum();
            if coef.is_zero() {
                continue;
            }
            for (x, y) in bi.iter_mut().zip(&ordinary[r]) {
                *x = x.add(&y.scale(&coef));
            }
        }
    }
    for r in 0..n {
        for c in 0..width {
            let mut s = Cyclotomic::zero();
            for k in 0..l {
                if d[r][k] != 0 {
                    s = s.add(&b[k][c].scale(&rat(d[r][k])));
                }
            }
            if s != ordinary[r][c] {
                return Ok(false);
            }
        }
    }
    let mut got = b;
    let mut want = ibr.to_vec();
    got.sort();
    want.sort();
    Ok(got == want)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactOutcome {
    pub fact: usize,
    pub label: String,
    pub eliminated: usize,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub survivors: Vec<Assignment>,
    /// each rejected assignment with the first fact that fails on it
    pub eliminated: Vec<(Assignment, usize)>,
    pub per_fact: Vec<FactOutcome>,
    /// `(name, lo, hi)` over the survivors
    pub domains: Vec<(String, i64, i64)>,
}

impl SolveReport {
    pub fn unique(&self) -> Option<&Assignment> {
        match self.survivors.as_slice() {
            [a] => Some(a),
            _ => None,
        }
    }
}

/// Runs every admissible assignment of `sys` through the facts in order.
pub fn solve_parameters(sys: &ParamSystem, facts: &[Fact]) -> Result<SolveReport, BrauerError> {
    let mut survivors = Vec::new();
    let mut eliminated = Vec::new();
    let mut counts = vec![0usize; facts.len()];
    for a in param_solve(sys) {
        let mut failed = None;
        for (k, f) in facts.iter().enumerate() {
            if !f.holds(&a)? {
                failed = Some(k);
                break;
            }
        }
        match failed {
            Some(k) => {
                counts[k] += 1;
                eliminated.push((a, k));
            }
            None => survivors.push(a),
        }
    }
    let per_fact: Vec<FactOutcome> =
        facts.iter().enumerate().map(|(k, f)| FactOutcome { fact: k, label: f.label().to_string(), eliminated: counts[k] }).collect();
    if survivors.is_empty() {
        let last = counts.iter().rposition(|&c| c > 0);
        return Err(match last {
            Some(k) => BrauerError::NoSurvivors { fact: k, label: facts[k].label().to_string() },
            None => BrauerError::NoSurvivors { fact: facts.len(), label: "parameter constraints".into() },
        });
    }
    let domains = sys
        .params()
        .iter()
        .map(|(n, _, _)| {
            let lo = survivors.iter().map(|a| a[n]).min().unwrap();
            let hi = survivors.iter().map(|a| a[n]).max().unwrap();
            (n.clone(), lo, hi)
        })
        .collect();
    Ok(SolveReport { survivors, eliminated, per_fact, domains })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> ParamInt {
        s.parse().unwrap()
    }

    #[test]
    fn factor_trace_fixes_a_pair() {
        let sys = ParamSystem::parse("a:0..4,at:0..4", "a+at=4").unwrap();
        let f = Fact::FactorTrace { label: "traces".into(), prime: 3, candidates: vec![(v("a"), 1), (v("at"), -1)], observed: vec![(-1, 1), (1, 3)] };
        let r = solve_parameters(&sys, &[f]).unwrap();
        let a = r.unique().unwrap();
        assert_eq!((a["a"], a["at"]), (3, 1));
        assert_eq!(r.eliminated.len(), 4);
        assert_eq!(r.domains, vec![("a".into(), 3, 3), ("at".into(), 1, 1)]);
    }

    #[test]
    fn identities_and_zeros() {
        let sys = ParamSystem::parse("d:0..1,dt:0..1,x:0..2", "d+dt=1").unwrap();
        // (1, d, x) = (1, 0, 0) + dt (0, 0, 1) forces d = 0 and x = dt
        let lhs = vec![v("1"), v("d"), v("x")];
        let f1 = Fact::ProjIdentity { label: "id".into(), lhs, terms: vec![(v("1"), vec![v("1"), v("0"), v("0")]), (v("dt"), vec![v("0"), v("0"), v("1")])] };
        let r = solve_parameters(&sys, &[f1.clone()]).unwrap();
        let a = r.unique().unwrap();
        assert_eq!((a["d"], a["dt"], a["x"]), (0, 1, 1));
        assert_eq!(r.per_fact[0].eliminated, 5);
        let f2 = Fact::EntryZero { label: "zero".into(), entry: v("x") };
        let err = solve_parameters(&sys, &[f1, f2]).unwrap_err();
        assert!(matches!(err, BrauerError::NoSurvivors { fact: 1, .. }));
    }

    #[test]
    fn projective_decomposition_search() {
        // two PIMs with the same lead row need the exhaustive split
        let known = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 0, 1]];
        assert!(decomposes(&[2, 1, 1], &known).unwrap());
        assert!(decomposes(&[1, 0, 2], &known).unwrap());
        assert!(!decomposes(&[1, 2, 0], &known).unwrap());
        let sys = ParamSystem::parse("b:0..1,bt:0..1", "b+bt=1").unwrap();
        let f = Fact::ProjectiveDecomposes {
            label: "proj".into(),
            candidate: vec![v("1"), v("1-2bt"), v("bt")],
            pims: vec![vec![v("1"), v("1"), v("0")], vec![v("0"), v("0"), v("1")]],
        };
        let r = solve_parameters(&sys, &[f]).unwrap();
        assert_eq!(r.unique().unwrap()["b"], 1);
    }

    #[test]
    fn brauer_characters_pick_the_matrix() {
        // S3 mod 3: 1a, 1b, 2a on the classes 1A, 2A
        let c = |x: i64| Cyclotomic::from_int(x);
        let ordinary = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        let ibr = vec![vec![c(1), c(-1)], vec![c(1), c(1)]];
        let sys = ParamSystem::parse("u:0..1,w:0..1", "").unwrap();
        let d = ParamMatrix::new(
            vec!["1a".into(), "1b".into(), "2a".into()],
            2,
            vec![vec![v("1"), v("0")], vec![v("0"), v("1")], vec![v("u"), v("w")]],
        )
        .unwrap();
        let f = Fact::BrauerCharacters { label: "ibr".into(), decomposition: d, ordinary, ibr };
        let r = solve_parameters(&sys, &[f]).unwrap();
        let a = r.unique().unwrap();
        assert_eq!((a["u"], a["w"]), (1, 1));
    }
}
