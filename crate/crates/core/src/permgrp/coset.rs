use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::{ConjugacyClasses, Perm, PermError, PermGroup};

/// Which invariants to compute per element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InvariantSpec {
    pub centralizer: bool,
    pub power_maps: bool,
    pub fixed_points: bool,
}

/// Invariants of a single element; optional entries are `None` when not
/// requested or not computable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassInvariant {
    pub order: u64,
    pub centralizer: Option<usize>,
    /// `(prime, order of centralizer of the p-th power)` when power maps are requested.
    pub powers: Option<Vec<(u64, usize)>>,
    pub fixed_points: Option<usize>,
}

impl fmt::Display for ClassInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order={}", self.order)?;
        if let Some(c) = self.centralizer {
            write!(f, " |C|={c}")?;
        }
        if let Some(p) = &self.powers {
            for (q, c) in p {
                write!(f, " |C(x^{q})|={c}")?;
            }
        }
        if let Some(fp) = self.fixed_points {
            write!(f, " fix={fp}")?;
        }
        Ok(())
    }
}

/// Result of [`coset_distribution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetReport {
    pub size: usize,
    pub order_distribution: BTreeMap<u64, usize>,
    pub invariant_distribution: BTreeMap<ClassInvariant, usize>,
    /// Counts per class name, present when classes were supplied and every
    /// occurring invariant tuple identifies a unique class.
    pub classified: Option<BTreeMap<String, usize>>,
    /// Invariant tuples shared by several supplied classes.
    pub ambiguities: Vec<(ClassInvariant, Vec<String>)>,
    pub notes: Vec<String>,
}

impl CosetReport {
    /// Order distribution in exponent notation, e.g. `{2^1, 4^31, 8^96}`.
    pub fn order_distribution_string(&self) -> String {
        let parts: Vec<String> = self.order_distribution.iter().map(|(o, c)| format!("{o}^{c}")).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for CosetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "|Z| = {}", self.size)?;
        writeln!(f, "order distribution {}", self.order_distribution_string())?;
        if let Some(c) = &self.classified {
            let names: Vec<&String> = c.keys().collect();
            let w = names.iter().map(|n| n.len()).max().unwrap_or(1).max(5);
            let head: Vec<String> = names.iter().map(|n| format!("{n:>w$}")).collect();
            let vals: Vec<String> = c.values().map(|v| format!("{v:>w$}")).collect();
            writeln!(f, "class  {}", head.join(" "))?;
            writeln!(f, "count  {}", vals.join(" "))?;
        } else {
            for (inv, c) in &self.invariant_distribution {
                writeln!(f, "{inv}: {c}")?;
            }
        }
        for (inv, cls) in &self.ambiguities {
            writeln!(f, "ambiguous: {inv} matches {}", cls.join(", "))?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

fn invariant_of(
    x: &Perm,
    spec: InvariantSpec,
    classes: Option<(&ConjugacyClasses, &super::Enumeration)>,
) -> Result<ClassInvariant, PermError> {
    let mut inv = ClassInvariant { order: x.order(), centralizer: None, powers: None, fixed_points: None };
    if spec.fixed_points {
        inv.fixed_points = Some(x.fixed_points());
    }
    if let Some((cc, en)) = classes {
        let c = cc.class_of_perm(en, x).ok_or(PermError::NotInGroup)?;
        if spec.centralizer {
            inv.centralizer = Some(cc.centralizers[c]);
        }
        if spec.power_maps {
            inv.powers = Some(cc.power_maps.iter().map(|(&p, m)| (p, cc.centralizers[m[c]])).collect());
        }
    }
    Ok(inv)
}

fn class_invariant(cc: &ConjugacyClasses, en: &super::Enumeration, c: usize, spec: InvariantSpec) -> ClassInvariant {
    invariant_of(en.get(cc.reps[c]), spec, Some((cc, en))).expect("class representative")
}

/// Distribution of invariants over `Z = { y v : v in V }`.
///
/// Centralizer and power-map invariants need an enumerable group (`classes`
/// supplied); without it the report degrades to orders and fixed points and
/// records a note.
pub fn coset_distribution(
    g: &PermGroup,
    y: &Perm,
    v: &[Perm],
    spec: InvariantSpec,
    classes: Option<&ConjugacyClasses>,
) -> Result<CosetReport, PermError> {
    if y.degree() != g.degree() || v.iter().any(|p| p.degree() != g.degree()) {
        return Err(PermError::DegreeMismatch);
    }
    let mut notes = Vec::new();
    let en = match classes {
        Some(_) => Some(g.elements()?),
        None => None,
    };
    let ctx = classes.zip(en.as_deref());
    let mut eff = spec;
    if ctx.is_none() && (spec.centralizer || spec.power_maps) {
        notes.push("group not enumerated: centralizer and power-map invariants omitted".into());
        eff.centralizer = false;
        eff.power_maps = false;
    }
    let invs: Vec<ClassInvariant> =
        v.par_iter().map(|vv| invariant_of(&y.mul(vv), eff, ctx)).collect::<Result<_, _>>()?;
    let mut order_distribution = BTreeMap::new();
    let mut invariant_distribution = BTreeMap::new();
    for i in &invs {
        *order_distribution.entry(i.order).or_insert(0) += 1;
        *invariant_distribution.entry(i.clone()).or_insert(0) += 1;
    }
    let mut classified = None;
    let mut ambiguities = Vec::new();
    if let Some((cc, en)) = ctx {
        let mut by_inv: BTreeMap<ClassInvariant, Vec<usize>> = BTreeMap::new();
        for c in 0..cc.len() {
            by_inv.entry(class_invariant(cc, en, c, eff)).or_default().push(c);
        }
        let mut counts = BTreeMap::new();
        let mut ok = true;
        for (inv, &k) in &invariant_distribution {
            let cls = &by_inv[inv];
            if cls.len() == 1 {
                *counts.entry(cc.names[cls[0]].clone()).or_insert(0) += k;
            } else {
                ok = false;
                ambiguities.push((inv.clone(), cls.iter().map(|&c| cc.names[c].clone()).collect()));
            }
        }
        if ok {
            classified = Some(counts);
        }
    }
    Ok(CosetReport { size: v.len(), order_distribution, invariant_distribution, classified, ambiguities, notes })
}

/// Conditions on a pair `(s, t)` for [`filtered_pair_search`].
#[derive(Clone)]
pub enum Predicate {
    /// `|s t| = m`
    ProductOrder(u64),
    /// `|s t^x| = m`
    ConjugateProductOrder { x: Perm, m: u64 },
    /// `|U ∩ U^s| = size` (applied to `s`, or to `t` if `on_t`)
    IntersectionSize { subgroup: Arc<HashSet<Perm>>, size: usize, on_t: bool },
    /// No nontrivial element of `subgroup` commutes with both `s` and `t`.
    TrivialCentralizerIn { subgroup: Arc<Vec<Perm>> },
    /// `s != t`
    Distinct,
    Custom(Arc<dyn Fn(&Perm, &Perm) -> bool + Send + Sync>),
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::ProductOrder(m) => write!(f, "|st|={m}"),
            Predicate::ConjugateProductOrder { x, m } => write!(f, "|st^{x}|={m}"),
            Predicate::IntersectionSize { size, on_t, .. } => {
                write!(f, "|U∩U^{}|={size}", if *on_t { "t" } else { "s" })
            }
            Predicate::TrivialCentralizerIn { .. } => write!(f, "C_U(s,t)=1"),
            Predicate::Distinct => write!(f, "s!=t"),
            Predicate::Custom(_) => write!(f, "custom"),
        }
    }
}

impl Predicate {
    pub fn holds(&self, s: &Perm, t: &Perm) -> bool {
        match self {
            Predicate::ProductOrder(m) => s.mul(t).order() == *m,
            Predicate::ConjugateProductOrder { x, m } => s.mul(&t.conjugate(x)).order() == *m,
            Predicate::IntersectionSize { subgroup, size, on_t } => {
                let c = if *on_t { t } else { s };
                let ci = c.inv();
                subgroup.iter().filter(|u| subgroup.contains(&ci.mul(u).mul(c))).count() == *size
            }
            Predicate::TrivialCentralizerIn { subgroup } => !subgroup
                .iter()
                .any(|u| !u.is_identity() && u.mul(s) == s.mul(u) && u.mul(t) == t.mul(u)),
            Predicate::Distinct => s != t,
            Predicate::Custom(f) => f(s, t),
        }
    }
}

/// All index pairs `(i, j)` with `(C[i], C[j])` passing every predicate, in
/// lexicographic order.
pub fn filtered_pair_search(c: &[Perm], preds: &[Predicate]) -> Vec<(usize, usize)> {
    (0..c.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            (0..c.len()).filter(move |&j| preds.iter().all(|p| p.holds(&c[i], &c[j]))).map(move |j| (i, j))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    #[test]
    fn trivial_coset() {
        let g = catalog::symmetric(5);
        let y = Perm::from_cycles(5, &[&[1, 2, 3]]).unwrap();
        let r = coset_distribution(&g, &y, &[g.identity()], InvariantSpec::default(), None).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.order_distribution, BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn s5_klein_coset_matches_conjugacy() {
        let g = catalog::symmetric(5);
        let cc = g.conjugacy_classes().unwrap();
        let en = g.elements().unwrap();
        let y = catalog::transposition(5);
        let v = catalog::klein_four_in_s5();
        let spec = InvariantSpec { centralizer: true, power_maps: true, fixed_points: false };
        let r = coset_distribution(&g, &y, &v, spec, Some(&cc)).unwrap();
        let mut expect: BTreeMap<String, usize> = BTreeMap::new();
        for vv in &v {
            let z = y.mul(vv);
            // elementwise conjugacy test against every class representative
            let c = (0..cc.len())
                .find(|&c| en.elements().iter().any(|x| en.get(cc.reps[c]).conjugate(x) == z))
                .unwrap();
            *expect.entry(cc.names[c].clone()).or_insert(0) += 1;
        }
        assert_eq!(r.classified.unwrap(), expect);
        assert_eq!(r.order_distribution.values().sum::<usize>(), 4);
    }

    #[test]
    fn ambiguity_is_reported() {
        // In S4, (1,2) and (1,2)(3,4) both have order 2.
        let g = catalog::symmetric(4);
        let cc = g.conjugacy_classes().unwrap();
        let v = vec![g.identity(), Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()];
        let y = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        let r = coset_distribution(&g, &y, &v, InvariantSpec::default(), Some(&cc)).unwrap();
        assert!(r.classified.is_none());
        assert!(!r.ambiguities.is_empty());
        let spec = InvariantSpec { centralizer: true, ..Default::default() };
        let r = coset_distribution(&g, &y, &v, spec, Some(&cc)).unwrap();
        assert!(r.classified.is_some());
    }

    #[test]
    fn pair_search_s4_transpositions() {
        let g = catalog::symmetric(4);
        let en = g.elements().unwrap();
        let c: Vec<Perm> = en.elements().iter().filter(|p| p.cycle_type() == vec![1, 1, 2]).cloned().collect();
        assert_eq!(c.len(), 6);
        assert_eq!(filtered_pair_search(&c, &[]).len(), 36);
        let r = filtered_pair_search(&c, &[Predicate::ProductOrder(3)]);
        assert_eq!(r.len(), 24);
        for &(i, j) in &r {
            assert!(c[i] != c[j] && c[i].mul(&c[j]) != c[j].mul(&c[i]));
        }
    }
}
