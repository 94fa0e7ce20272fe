//! Table automorphisms: class permutations preserving the class data and
//! power maps and permuting the irreducibles.

use std::collections::BTreeSet;

use super::{CharacterTable, FusionMap};
use crate::exact::Cyclotomic;

fn permuted(values: &[Cyclotomic], perm: &[usize]) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); values.len()];
    for (i, v) in values.iter().enumerate() {
        out[perm[i]] = v.clone();
    }
    out
}

fn structure_ok(t: &CharacterTable, perm: &[usize]) -> bool {
    let n = t.nclasses();
    if perm.len() != n || perm.first() != Some(&0) {
        return false;
    }
    let mut seen = vec![false; n];
    for &j in perm {
        if j >= n || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    for i in 0..n {
        let (a, b) = (&t.classes[i], &t.classes[perm[i]]);
        if a.order != b.order || a.size != b.size {
            return false;
        }
    }
    t.power_maps.values().all(|pm| (0..n).all(|i| pm[perm[i]] == perm[pm[i]]))
}

/// True when `perm` (class `i` maps to `perm[i]`) is a table automorphism.
pub fn table_automorphism_check(t: &CharacterTable, perm: &[usize]) -> bool {
    if !structure_ok(t, perm) {
        return false;
    }
    let set: BTreeSet<&Vec<Cyclotomic>> = t.irreducibles.iter().map(|c| &c.values).collect();
    t.irreducibles.iter().all(|c| set.contains(&permuted(&c.values, perm)))
}

/// Permutation of the irreducibles induced by an automorphism.
pub fn character_permutation(t: &CharacterTable, perm: &[usize]) -> Option<Vec<usize>> {
    t.irreducibles.iter().map(|c| t.find_irreducible(&permuted(&c.values, perm))).collect()
}

/// All table automorphisms, by backtracking over classes with equal order
/// and size.
pub fn table_automorphisms(t: &CharacterTable) -> Vec<Vec<usize>> {
    let n = t.nclasses();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // columns can only be exchanged if they hold the same multiset of values
    let sig: Vec<Vec<String>> = (0..n)
        .map(|i| {
            let mut v: Vec<String> = t.irreducibles.iter().map(|c| c.values[i].to_string()).collect();
            v.sort();
            v
        })
        .collect();
    fn rec(t: &CharacterTable, sig: &[Vec<String>], i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = t.nclasses();
        if i == n {
            if table_automorphism_check(t, perm) {
                out.push(perm.clone());
            }
            return;
        }
        for j in 0..n {
            if used[j] || t.classes[j].order != t.classes[i].order || t.classes[j].size != t.classes[i].size || sig[i] != sig[j] {
                continue;
            }
            perm[i] = j;
            // power maps into already assigned classes
            let ok = t.power_maps.values().all(|pm| pm[i] > i || perm[pm[i]] == pm[j]);
            if ok {
                used[j] = true;
                rec(t, sig, i + 1, perm, used, out);
                used[j] = false;
            }
            perm[i] = usize::MAX;
        }
    }
    if n > 0 {
        rec(t, &sig, 0, &mut perm, &mut used, &mut out);
    }
    out
}

/// Distinct fusions `beta . f . alpha` for automorphisms `alpha` of the
/// source and `beta` of the target.
pub fn automorphism_orbit_of_fusions(f: &FusionMap, src: &CharacterTable, dst: &CharacterTable) -> Vec<FusionMap> {
    let sa = table_automorphisms(src);
    let da = table_automorphisms(dst);
    let mut set = BTreeSet::new();
    for a in &sa {
        for b in &da {
            let map: Vec<usize> = (0..f.map.len()).map(|i| b[f.map[a[i]]]).collect();
            set.insert(FusionMap { source: f.source.clone(), target: f.target.clone(), map });
        }
    }
    set.into_iter().collect()
}

/// True when a class function is fixed by every given automorphism.
pub fn is_invariant(values: &[Cyclotomic], automorphisms: &[Vec<usize>]) -> bool {
    automorphisms.iter().all(|p| permuted(values, p) == values)
}
