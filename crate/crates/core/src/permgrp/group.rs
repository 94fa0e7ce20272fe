use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use super::{Perm, PermError};

/// Default bound on the number of elements enumerated.
pub const ENUMERATION_LIMIT: usize = 1_000_000;
/// Largest supported degree.
pub const DEGREE_LIMIT: usize = 1 << 20;

/// A permutation group given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    cache: Arc<OnceLock<Arc<Enumeration>>>,
}

/// All elements in breadth-first order over generator words, with the
/// Schreier tree that produced them.
#[derive(Debug)]
pub struct Enumeration {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `(parent, generator)` with `elements[i] = elements[parent] * gens[generator]`.
    parent: Vec<Option<(usize, usize)>>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }
    pub fn get(&self, i: usize) -> &Perm {
        &self.elements[i]
    }
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }
    /// Index of `elements[i] * elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].mul(&self.elements[j])]
    }
    /// `(parent, generator)` in the Schreier tree; `None` for the identity.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }
    /// Generator indices whose product is `elements[i]`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.parent[i] {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        if degree > DEGREE_LIMIT {
            return Err(PermError::DegreeTooLarge(degree));
        }
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch);
        }
        Ok(PermGroup { degree, gens, cache: Arc::new(OnceLock::new()) })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Enumerates the group (cached); fails if it has more than `limit` elements.
    pub fn enumerate(&self, limit: usize) -> Result<Arc<Enumeration>, PermError> {
        if let Some(e) = self.cache.get() {
            if e.len() <= limit {
                return Ok(Arc::clone(e));
            }
            return Err(PermError::LimitExceeded(limit));
        }
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut parent = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gi, g) in self.gens.iter().enumerate() {
                let x = elements[i].mul(g);
                if index.contains_key(&x) {
                    continue;
                }
                if elements.len() >= limit {
                    return Err(PermError::LimitExceeded(limit));
                }
                index.insert(x.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(x);
                parent.push(Some((i, gi)));
            }
        }
        let e = Arc::new(Enumeration { elements, index, parent });
        let _ = self.cache.set(Arc::clone(&e));
        Ok(e)
    }

    pub fn elements(&self) -> Result<Arc<Enumeration>, PermError> {
        self.enumerate(ENUMERATION_LIMIT)
    }

    pub fn order(&self) -> Result<usize, PermError> {
        Ok(self.elements()?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        Ok(self.elements()?.index_of(p).is_some())
    }

    /// Orbits on points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s];
            let mut k = 0;
            while k < orb.len() {
                let x = orb[k];
                for g in &self.gens {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    /// Conjugacy classes (requires enumeration).
    pub fn conjugacy_classes(&self) -> Result<ConjugacyClasses, PermError> {
        ConjugacyClasses::compute(self)
    }
}

/// Subgroup generated by a list of elements, enumerated.
pub fn closure(degree: usize, gens: &[Perm]) -> Result<Vec<Perm>, PermError> {
    let g = PermGroup::new(degree, gens.to_vec())?;
    Ok(g.elements()?.elements().to_vec())
}

/// Class data of an enumerated group.
///
/// Classes are ordered by element order, then by the breadth-first index of
/// their first element; the identity class comes first. Names are the order
/// followed by a letter (`1A`, `2A`, `2B`, ...).
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub names: Vec<String>,
    pub reps: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub orders: Vec<u64>,
    pub sizes: Vec<usize>,
    pub centralizers: Vec<usize>,
    /// prime -> image class of each class
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// class index of each element of the enumeration
    pub class_of: Vec<usize>,
    pub group_order: usize,
}

fn letters(i: usize) -> String {
    let mut s = String::new();
    let mut i = i;
    loop {
        s.insert(0, (b'A' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl ConjugacyClasses {
    fn compute(g: &PermGroup) -> Result<Self, PermError> {
        let en = g.elements()?;
        let n = en.len();
        let gens: Vec<(Perm, Perm)> = g.gens.iter().map(|x| (x.inv(), x.clone())).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if class_of[s] != usize::MAX {
                continue;
            }
            let c = raw.len();
            class_of[s] = c;
            let mut orb = vec![s];
            let mut k = 0;
            while k < orb.len() {
                let x = en.get(orb[k]);
                for (gi, gg) in &gens {
                    let y = en.index_of(&gi.mul(x).mul(gg)).expect("closed");
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orb.push(y);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            raw.push(orb);
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        let ord_of = |c: usize| en.get(raw[c][0]).order();
        order.sort_by_key(|&c| (ord_of(c), raw[c][0]));
        let mut renum = vec![0; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            renum[old] = new;
        }
        let members: Vec<Vec<usize>> = order.iter().map(|&c| raw[c].clone()).collect();
        for c in class_of.iter_mut() {
            *c = renum[*c];
        }
        let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        let orders: Vec<u64> = reps.iter().map(|&r| en.get(r).order()).collect();
        let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
        let centralizers = sizes.iter().map(|&s| n / s).collect();
        let mut names = Vec::new();
        let mut count: BTreeMap<u64, usize> = BTreeMap::new();
        for &o in &orders {
            let k = count.entry(o).or_insert(0);
            names.push(format!("{o}{}", letters(*k)));
            *k += 1;
        }
        let mut power_maps = BTreeMap::new();
        let exponent = orders.iter().fold(1u64, |a, &b| num_integer::Integer::lcm(&a, &b));
        let mut primes = prime_divisors(n as u64);
        primes.retain(|p| exponent % p == 0);
        for p in primes {
            let pm = reps.iter().map(|&r| class_of[en.index_of(&en.get(r).pow(p as i64)).expect("closed")]).collect();
            power_maps.insert(p, pm);
        }
        Ok(ConjugacyClasses { names, reps, members, orders, sizes, centralizers, power_maps, class_of, group_order: n })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of an arbitrary group element.
    pub fn class_of_perm(&self, en: &Enumeration, p: &Perm) -> Option<usize> {
        en.index_of(p).map(|i| self.class_of[i])
    }

    /// Class of the inverse elements.
    pub fn inverse_classes(&self, en: &Enumeration) -> Vec<usize> {
        self.reps.iter().map(|&r| self.class_of[en.index_of(&en.get(r).inv()).expect("closed")]).collect()
    }

    /// Class of `g^k` for each class.
    pub fn power_classes(&self, en: &Enumeration, k: i64) -> Vec<usize> {
        self.reps.iter().map(|&r| self.class_of[en.index_of(&en.get(r).pow(k)).expect("closed")]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    #[test]
    fn enumeration_sizes() {
        let c2 = PermGroup::new(2, vec![Perm::from_cycles(2, &[&[1, 2]]).unwrap()]).unwrap();
        assert_eq!(c2.order().unwrap(), 2);
        assert_eq!(catalog::symmetric(4).order().unwrap(), 24);
        assert_eq!(catalog::alternating(5).order().unwrap(), 60);
        assert!(catalog::symmetric(6).enumerate(100).is_err());
    }

    #[test]
    fn words_reproduce_elements() {
        let g = catalog::symmetric(4);
        let en = g.elements().unwrap();
        for i in 0..en.len() {
            let w = en.word(i);
            let p = w.iter().fold(g.identity(), |acc, &k| acc.mul(&g.gens()[k]));
            assert_eq!(&p, en.get(i));
        }
    }

    #[test]
    fn s3_classes() {
        let cc = catalog::symmetric(3).conjugacy_classes().unwrap();
        assert_eq!(cc.sizes, vec![1, 3, 2]);
        assert_eq!(cc.names, vec!["1A", "2A", "3A"]);
        assert_eq!(cc.power_maps[&2], vec![0, 0, 2]);
        assert_eq!(cc.power_maps[&3], vec![0, 1, 0]);
    }

    #[test]
    fn s4_classes_by_brute_force() {
        let g = catalog::symmetric(4);
        let en = g.elements().unwrap();
        let cc = g.conjugacy_classes().unwrap();
        assert_eq!(cc.len(), 5);
        assert_eq!(cc.sizes.iter().sum::<usize>(), 24);
        for a in 0..en.len() {
            for b in 0..en.len() {
                let conj = en.elements().iter().any(|x| en.get(a).conjugate(x) == *en.get(b));
                assert_eq!(conj, cc.class_of[a] == cc.class_of[b]);
            }
        }
    }
}
