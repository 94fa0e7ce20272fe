use num_bigint::BigInt;

use super::{CharacterTable, ChartabError};
use crate::exact::{Cyclotomic, Rational};
use crate::permgrp::{ConjugacyClasses, PermGroup};

/// Class fusion of a subgroup table into a group table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionMap {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

impl FusionMap {
    /// Checks the fusion invariants: identity to identity, element orders
    /// preserved, compatibility with common power maps, and `|C_H(h)|`
    /// dividing `|C_G(h)|`.
    pub fn validate(&self, src: &CharacterTable, dst: &CharacterTable) -> Result<(), ChartabError> {
        let bad = |m: String| Err(ChartabError::Fusion(m));
        if self.map.len() != src.nclasses() {
            return bad(format!("{} entries for {} classes", self.map.len(), src.nclasses()));
        }
        if self.map.iter().any(|&j| j >= dst.nclasses()) {
            return bad("class index out of range".into());
        }
        if self.map.first() != Some(&0) {
            return bad("identity class must map to the identity class".into());
        }
        if dst.order % src.order.max(1) != 0 {
            return bad("source order does not divide target order".into());
        }
        for (i, &j) in self.map.iter().enumerate() {
            if src.classes[i].order != dst.classes[j].order {
                return bad(format!("{} and {} have different element orders", src.classes[i].name, dst.classes[j].name));
            }
            if dst.classes[j].centralizer % src.classes[i].centralizer != 0 {
                return bad(format!("centralizer of {} does not divide that of {}", src.classes[i].name, dst.classes[j].name));
            }
        }
        for (p, pm) in &src.power_maps {
            if let Some(qm) = dst.power_maps.get(p) {
                for i in 0..pm.len() {
                    if self.map[pm[i]] != qm[self.map[i]] {
                        return bad(format!("not compatible with the {p}-th power map at {}", src.classes[i].name));
                    }
                }
            }
        }
        // each target class receives exactly as many elements as it can hold
        let mut count = vec![0u128; dst.nclasses()];
        for (i, &j) in self.map.iter().enumerate() {
            count[j] += src.classes[i].size as u128;
        }
        for (j, &c) in count.iter().enumerate() {
            if c > dst.classes[j].size as u128 {
                return bad(format!("more than |{}| elements fuse into {}", dst.classes[j].name, dst.classes[j].name));
            }
        }
        Ok(())
    }

    /// Composition with the fusion: a character of the target restricted to the source.
    pub fn restrict(&self, ch: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.map.iter().map(|&j| ch[j].clone()).collect()
    }

    /// `Ind(psi)(g_j) = sum_{i -> j} |C_G(g_j)| / |C_H(h_i)| psi(h_i)`.
    pub fn induce(&self, src: &CharacterTable, dst: &CharacterTable, ch: &[Cyclotomic]) -> Result<Vec<Cyclotomic>, ChartabError> {
        if ch.len() != src.nclasses() {
            return Err(ChartabError::Length { got: ch.len(), expected: src.nclasses() });
        }
        let mut out = vec![Cyclotomic::zero(); dst.nclasses()];
        for (i, &j) in self.map.iter().enumerate() {
            if ch[i].is_zero() {
                continue;
            }
            let f = Rational::new(BigInt::from(dst.classes[j].centralizer), BigInt::from(src.classes[i].centralizer));
            out[j] = out[j].add(&ch[i].scale(&f));
        }
        Ok(out)
    }

    /// Classes of the target hit by the image.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn compose(&self, after: &FusionMap) -> FusionMap {
        FusionMap {
            source: self.source.clone(),
            target: after.target.clone(),
            map: self.map.iter().map(|&j| after.map[j]).collect(),
        }
    }
}

/// Identity fusion of a table into itself.
pub fn identity_fusion(t: &CharacterTable) -> FusionMap {
    FusionMap { source: t.name.clone(), target: t.name.clone(), map: (0..t.nclasses()).collect() }
}

/// Fusion of `h <= g` computed from enumerated class data.
pub fn fusion_from_groups(
    names: (&str, &str),
    h: &PermGroup,
    h_classes: &ConjugacyClasses,
    g: &PermGroup,
    g_classes: &ConjugacyClasses,
) -> Result<FusionMap, ChartabError> {
    let he = h.elements().map_err(|e| ChartabError::Fusion(e.to_string()))?;
    let ge = g.elements().map_err(|e| ChartabError::Fusion(e.to_string()))?;
    let map = h_classes
        .reps
        .iter()
        .map(|&r| {
            g_classes
                .class_of_perm(&ge, he.get(r))
                .ok_or_else(|| ChartabError::Fusion("subgroup element not in the group".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FusionMap { source: names.0.to_string(), target: names.1.to_string(), map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{dixon_schneider, fixtures};
    use crate::exact::rat;
    use crate::permgrp::catalog;

    fn a4_s4() -> (CharacterTable, CharacterTable, FusionMap) {
        let h = catalog::alternating(4);
        let g = catalog::symmetric(4);
        let (th, hc) = dixon_schneider(&h, "A4").unwrap();
        let (tg, gc) = dixon_schneider(&g, "S4").unwrap();
        let f = fusion_from_groups(("A4", "S4"), &h, &hc, &g, &gc).unwrap();
        (th, tg, f)
    }

    #[test]
    fn a4_into_s4() {
        let (th, tg, f) = a4_s4();
        f.validate(&th, &tg).unwrap();
        let triv = &th.irreducibles[th.trivial_index().unwrap()].values;
        let ind = f.induce(&th, &tg, triv).unwrap();
        let dec = tg.decompose(&ind).unwrap();
        assert_eq!(dec.iter().filter(|d| **d == rat(1)).count(), 2);
        assert_eq!(ind[0], Cyclotomic::from_int(2));
        // restrict(induce(chi)) = chi + chi^sigma for the 3-dim character
        let three = th.irreducibles.iter().find(|c| c.degree_int() == Some(3)).unwrap();
        let back = f.restrict(&f.induce(&th, &tg, &three.values).unwrap());
        assert_eq!(back, three.values.iter().map(|v| v.scale(&rat(2))).collect::<Vec<_>>());
    }

    #[test]
    fn frobenius_reciprocity() {
        let (th, tg, f) = a4_s4();
        for a in &th.irreducibles {
            for b in &tg.irreducibles {
                let l = tg.scalar_product(&f.induce(&th, &tg, &a.values).unwrap(), &b.values).unwrap();
                let r = th.scalar_product(&a.values, &f.restrict(&b.values)).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn bad_fusions_are_rejected() {
        let (th, tg, f) = a4_s4();
        let mut g = f.clone();
        g.map[1] = (0..tg.nclasses()).find(|&j| tg.classes[j].order != th.classes[1].order).unwrap();
        assert!(g.validate(&th, &tg).is_err());
        // identity must go to the identity
        let mut g = f.clone();
        g.map[0] = 1;
        assert!(g.validate(&th, &tg).is_err());
        let t = fixtures::s3();
        identity_fusion(&t).validate(&t, &t).unwrap();
    }
}
