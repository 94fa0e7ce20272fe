//! Labelling the irreducibles of an index-2 extension `Ht` of `H` in terms
//! of those of `H`.

use std::cmp::Ordering;

use super::{CharacterTable, ChartabError, FusionMap};
use crate::exact::{rat, Cyclotomic};

/// What happens to an irreducible of `H` under induction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtLabel {
    /// `Ind chi` is irreducible; `chi` and `chi^sigma` share this label
    Induced { target: usize },
    /// `Ind chi = chi^+ + chi^-`; both restrict to `chi`
    Split { plus: usize, minus: usize, convention_dependent: bool },
}

#[derive(Clone, Debug)]
pub struct ExtensionLabeling {
    pub fusion: FusionMap,
    /// index of the sign character of `Ht/H` in the table of `Ht`
    pub epsilon: usize,
    pub x_class: usize,
    /// class permutation of `H` induced by conjugation with `x`
    pub sigma_classes: Vec<usize>,
    /// action of `sigma` on the irreducibles of `H`
    pub sigma_chars: Vec<usize>,
    pub labels: Vec<ExtLabel>,
}

impl ExtensionLabeling {
    /// Indices of `H` characters whose sign is not fixed by the positivity rule.
    pub fn convention_dependent(&self) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| matches!(l, ExtLabel::Split { convention_dependent: true, .. }))
            .map(|(i, _)| i)
            .collect()
    }

    /// Label of each irreducible of `Ht`: `name^+`, `name^-` or `name^0`,
    /// with the smaller `sigma`-orbit member used for induced characters.
    pub fn names(&self, h: &CharacterTable, ht: &CharacterTable) -> Vec<String> {
        let mut out = vec![String::new(); ht.irreducibles.len()];
        for (i, l) in self.labels.iter().enumerate() {
            let n = &h.irreducibles[i].name;
            match *l {
                ExtLabel::Induced { target } => {
                    if i <= self.sigma_chars[i] {
                        out[target] = format!("{n}^0");
                    }
                }
                ExtLabel::Split { plus, minus, .. } => {
                    out[plus] = format!("{n}^+");
                    out[minus] = format!("{n}^-");
                }
            }
        }
        out
    }
}

/// Labels `Irr(Ht)` from `Irr(H)` along an index-2 fusion. For a split
/// character the `+` member is the one positive at `x_class`; when that
/// value is zero or not real, the lower index is taken as `+` and the pair is
/// flagged convention dependent.
pub fn label_extension(h: &CharacterTable, ht: &CharacterTable, fusion: &FusionMap, x_class: usize) -> Result<ExtensionLabeling, ChartabError> {
    fusion.validate(h, ht)?;
    if ht.order != 2 * h.order {
        return Err(ChartabError::NotIndexTwo);
    }
    let image = fusion.image();
    if x_class >= ht.nclasses() || image.contains(&x_class) {
        return Err(ChartabError::Fusion(format!("class {x_class} is not outside the subgroup")));
    }
    let in_h = |j: usize| image.binary_search(&j).is_ok();
    let epsilon = ht
        .irreducibles
        .iter()
        .position(|c| {
            (0..ht.nclasses()).all(|j| c.values[j] == if in_h(j) { Cyclotomic::one() } else { Cyclotomic::from_int(-1) })
        })
        .ok_or(ChartabError::NoSignCharacter)?;

    let mut sigma_classes: Vec<usize> = (0..h.nclasses()).collect();
    for j in &image {
        let pre: Vec<usize> = (0..h.nclasses()).filter(|&i| fusion.map[i] == *j).collect();
        match pre.len() {
            1 => {}
            2 => {
                sigma_classes[pre[0]] = pre[1];
                sigma_classes[pre[1]] = pre[0];
            }
            _ => return Err(ChartabError::NotIndexTwo),
        }
    }
    let sigma_chars = h
        .irreducibles
        .iter()
        .map(|c| {
            let v: Vec<Cyclotomic> = sigma_classes.iter().map(|&s| c.values[s].clone()).collect();
            h.find_irreducible(&v).ok_or_else(|| ChartabError::Fusion(format!("{}^sigma is not irreducible", c.name)))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut labels = Vec::with_capacity(h.irreducibles.len());
    for c in &h.irreducibles {
        let ind = fusion.induce(h, ht, &c.values)?;
        let dec = ht.decompose(&ind)?;
        let parts: Vec<usize> = dec.iter().enumerate().filter(|(_, d)| **d != rat(0)).map(|(j, _)| j).collect();
        match parts.as_slice() {
            [j] if dec[*j] == rat(1) => labels.push(ExtLabel::Induced { target: *j }),
            [a, b] if dec[*a] == rat(1) && dec[*b] == rat(1) => {
                let va = &ht.irreducibles[*a].values[x_class];
                let sign = if va.is_real() && !va.is_zero() { va.real_sign().ok() } else { None };
                let (plus, minus, dep) = match sign {
                    Some(Ordering::Greater) => (*a, *b, false),
                    Some(Ordering::Less) => (*b, *a, false),
                    _ => (*a, *b, true),
                };
                labels.push(ExtLabel::Split { plus, minus, convention_dependent: dep });
            }
            _ => return Err(ChartabError::Fusion(format!("Ind({}) is neither irreducible nor a sum of two", c.name))),
        }
    }
    Ok(ExtensionLabeling { fusion: fusion.clone(), epsilon, x_class, sigma_classes, sigma_chars, labels })
}
