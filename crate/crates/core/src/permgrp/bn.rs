use std::collections::{HashMap, HashSet, VecDeque};

use super::{Perm, PermError, PermGroup};
use crate::gfla::{CoordBasis, Elem, FieldSpec, GFMatrix};
use crate::mtxcond::FGModule;

/// Caller-supplied split BN-pair data: `U`, the Weyl group `W` realised by
/// elements of `G`, and its Coxeter generators.
#[derive(Clone, Debug)]
pub struct BNData {
    pub group: PermGroup,
    pub u_elements: Vec<Perm>,
    /// `(w, l(w))` in breadth-first order over the Coxeter generators.
    pub w_elements: Vec<(Perm, usize)>,
    pub coxeter_gens: Vec<Perm>,
}

impl BNData {
    /// Validates the data: `U` is closed under multiplication, all elements
    /// lie in `G`, and the word length over the Coxeter generators changes by
    /// exactly one under each generator and has a multiplicative sign.
    pub fn new(group: PermGroup, u_elements: Vec<Perm>, coxeter_gens: Vec<Perm>) -> Result<Self, PermError> {
        let n = group.degree();
        if u_elements.iter().chain(&coxeter_gens).any(|p| p.degree() != n) {
            return Err(PermError::DegreeMismatch);
        }
        let uset: HashSet<&Perm> = u_elements.iter().collect();
        if uset.len() != u_elements.len() || !uset.contains(&Perm::identity(n)) {
            return Err(PermError::BadBn("U must list distinct elements including 1".into()));
        }
        for a in &u_elements {
            for b in &u_elements {
                if !uset.contains(&a.mul(b)) {
                    return Err(PermError::BadBn("U is not closed under multiplication".into()));
                }
            }
        }
        let mut len: HashMap<Perm, usize> = HashMap::from([(Perm::identity(n), 0)]);
        let mut w_elements = vec![(Perm::identity(n), 0)];
        let mut queue = VecDeque::from([Perm::identity(n)]);
        while let Some(w) = queue.pop_front() {
            let l = len[&w];
            for s in &coxeter_gens {
                let x = w.mul(s);
                if !len.contains_key(&x) {
                    len.insert(x.clone(), l + 1);
                    w_elements.push((x.clone(), l + 1));
                    queue.push_back(x);
                }
            }
        }
        for (w, l) in &w_elements {
            for s in &coxeter_gens {
                if len[&w.mul(s)].abs_diff(*l) != 1 {
                    return Err(PermError::BadBn(format!("length of {w}*{s} does not differ by one")));
                }
            }
        }
        for (v, lv) in &w_elements {
            for (w, lw) in &w_elements {
                if (len[&v.mul(w)] + lv + lw) % 2 != 0 {
                    return Err(PermError::BadBn("sign of the length is not multiplicative".into()));
                }
            }
        }
        if let Ok(en) = group.elements() {
            if u_elements.iter().chain(&coxeter_gens).any(|p| en.index_of(p).is_none()) {
                return Err(PermError::NotInGroup);
            }
        }
        Ok(BNData { group, u_elements, w_elements, coxeter_gens })
    }

    /// Trivial BN-pair of a group (`U = W = 1`).
    pub fn trivial(group: PermGroup) -> Self {
        let id = group.identity();
        BNData { group, u_elements: vec![id.clone()], w_elements: vec![(id, 0)], coxeter_gens: vec![] }
    }
}

/// The right ideal `e F G` with basis `{e u : u in U}`, where
/// `e = (sum_u u)(sum_w (-1)^l(w) w)`, as a module for the generators of `G`.
pub fn steinberg_element_module(bn: &BNData, field: &FieldSpec) -> Result<FGModule, PermError> {
    let en = bn.group.elements()?;
    let n = en.len();
    let one = 1 as Elem;
    let minus = field.neg(1);
    let mut e = vec![0 as Elem; n];
    for u in &bn.u_elements {
        for (w, l) in &bn.w_elements {
            let i = en.index_of(&u.mul(w)).ok_or(PermError::NotInGroup)?;
            let c = if l % 2 == 0 { one } else { minus };
            e[i] = field.add(e[i], c);
        }
    }
    let times = |v: &[Elem], g: &Perm| -> Vec<Elem> {
        let mut out = vec![0 as Elem; n];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                out[en.index_of(&en.get(i).mul(g)).expect("closed")] = c;
            }
        }
        out
    };
    let basis: Vec<Vec<Elem>> = bn.u_elements.iter().map(|u| times(&e, u)).collect();
    let d = basis.len();
    let cb = CoordBasis::new(&GFMatrix::from_rows(field, n, &basis))
        .map_err(|_| PermError::BadBn("the vectors e*u are linearly dependent".into()))?;
    let mut mats = Vec::new();
    for g in bn.group.gens() {
        let mut m = GFMatrix::zeros(field, d, d);
        for (r, b) in basis.iter().enumerate() {
            let img = times(b, g);
            let coords = cb
                .coordinates(&img)
                .ok_or_else(|| PermError::BadBn("e F G is not closed under the generators".into()))?;
            m.row_mut(r).copy_from_slice(&coords);
        }
        mats.push(m);
    }
    let labels = (1..=mats.len()).map(|i| format!("g{i}")).collect();
    FGModule::new(field, d, mats, labels).map_err(|e| PermError::BadBn(e.to_string()))
}

/// An `x`-invariant Sylow `p`-subgroup of an enumerable group, found by
/// building one Sylow subgroup and searching its conjugates.
pub fn invariant_sylow(g: &PermGroup, x: &Perm, p: u64) -> Result<Vec<Perm>, PermError> {
    let en = g.elements()?;
    let order = en.len() as u64;
    let mut target = 1u64;
    while order % (target * p) == 0 {
        target *= p;
    }
    let is_p_power = |mut k: u64| {
        while k % p == 0 {
            k /= p;
        }
        k == 1
    };
    let mut sub: Vec<Perm> = vec![g.identity()];
    while (sub.len() as u64) < target {
        let set: HashSet<&Perm> = sub.iter().collect();
        let cand = en.elements().iter().find(|y| {
            !set.contains(y)
                && is_p_power(y.order())
                && sub.iter().all(|s| set.contains(&s.conjugate(y)))
        });
        let y = cand.ok_or(PermError::NoInvariantSylow)?.clone();
        let mut gens = sub.clone();
        gens.push(y);
        sub = super::closure(g.degree(), &gens)?;
    }
    for c in en.elements() {
        let conj: Vec<Perm> = sub.iter().map(|s| s.conjugate(c)).collect();
        let cs: HashSet<&Perm> = conj.iter().collect();
        if conj.iter().all(|s| cs.contains(&s.conjugate(x))) {
            let mut out = conj.clone();
            out.sort();
            return Ok(out);
        }
    }
    Err(PermError::NoInvariantSylow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    #[test]
    fn sl32_bn_data_is_valid() {
        let (g, u, w) = catalog::sl3_2_bn();
        let bn = BNData::new(g, u, w).unwrap();
        assert_eq!(bn.w_elements.len(), 6);
        assert_eq!(bn.w_elements.iter().map(|w| w.1).max(), Some(3));
    }

    #[test]
    fn steinberg_dimension() {
        let (g, u, w) = catalog::sl3_2_bn();
        let bn = BNData::new(g, u, w).unwrap();
        for p in [3, 7] {
            let m = steinberg_element_module(&bn, &FieldSpec::prime(p).unwrap()).unwrap();
            assert_eq!(m.dim(), 8);
        }
    }

    #[test]
    fn trivial_bn_pair() {
        let g = PermGroup::new(1, vec![]).unwrap();
        let m = steinberg_element_module(&BNData::trivial(g), &FieldSpec::prime(3).unwrap()).unwrap();
        assert_eq!(m.dim(), 1);
    }

    #[test]
    fn invariant_sylow_subgroups() {
        let g = catalog::symmetric(4);
        let x = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        let s = invariant_sylow(&g, &x, 2).unwrap();
        assert_eq!(s.len(), 8);
        for a in &s {
            assert!(s.contains(&a.conjugate(&x)));
        }
        let id = g.identity();
        assert_eq!(invariant_sylow(&g, &id, 3).unwrap().len(), 3);
        let c = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap()]).unwrap();
        assert_eq!(invariant_sylow(&c, &c.gens()[0].clone(), 3).unwrap().len(), 3);
    }
}
