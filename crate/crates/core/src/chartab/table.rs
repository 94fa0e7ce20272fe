use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ChartabError;
use crate::exact::{rat, Cyclotomic, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub order: u64,
    pub size: u64,
    pub centralizer: u64,
}

/// A class function with a display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(name: &str, values: Vec<Cyclotomic>) -> Self {
        Character { name: name.to_string(), values }
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// Degree as an integer, if it is one.
    pub fn degree_int(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        let r = self.values.first()?.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Ordinary character table: class data, power maps and irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    /// optional prime the table is annotated with
    pub prime: Option<u32>,
    pub classes: Vec<ClassInfo>,
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub irreducibles: Vec<Character>,
}

/// One validation failure. `class` / `character` point at the offending
/// entry when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub class: Option<usize>,
    pub character: Option<usize>,
    pub power: Option<u64>,
    pub message: String,
}

impl Issue {
    fn general(msg: String) -> Self {
        Issue { class: None, character: None, power: None, message: msg }
    }
    fn class(c: usize, msg: String) -> Self {
        Issue { class: Some(c), character: None, power: None, message: msg }
    }
    fn character(c: usize, msg: String) -> Self {
        Issue { class: None, character: Some(c), power: None, message: msg }
    }
}

impl std::fmt::Display for Issue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

impl CharacterTable {
    pub fn nclasses(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn char_index(&self, name: &str) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.name == name)
    }

    pub fn chi(&self, i: usize) -> &Character {
        &self.irreducibles[i]
    }

    /// Every check from the table invariants; empty when valid.
    pub fn validate(&self) -> Vec<Issue> {
        let mut out = Vec::new();
        let n = self.nclasses();
        if n == 0 {
            out.push(Issue::general("table has no classes".into()));
            return out;
        }
        let c0 = &self.classes[0];
        if c0.order != 1 || c0.size != 1 {
            out.push(Issue::class(0, format!("first class {} is not the identity class", c0.name)));
        }
        let mut total: u128 = 0;
        for (i, c) in self.classes.iter().enumerate() {
            total += c.size as u128;
            if (c.size as u128) * (c.centralizer as u128) != self.order as u128 {
                out.push(Issue::class(
                    i,
                    format!("class {}: size {} times centralizer {} is not {}", c.name, c.size, c.centralizer, self.order),
                ));
            }
            if c.order == 0 {
                out.push(Issue::class(i, format!("class {} has element order 0", c.name)));
            }
        }
        if total != self.order as u128 {
            out.push(Issue::general(format!("class sizes sum to {total}, expected {}", self.order)));
        }
        for (&p, map) in &self.power_maps {
            if map.len() != n {
                out.push(Issue { power: Some(p), ..Issue::general(format!("power map {p} has {} entries, expected {n}", map.len())) });
                continue;
            }
            for (i, &j) in map.iter().enumerate() {
                if j >= n {
                    out.push(Issue { power: Some(p), ..Issue::class(i, format!("power map {p}: class index {} out of range", j + 1)) });
                    continue;
                }
                let o = self.classes[i].order;
                if o > 0 && self.classes[j].order != o / gcd(o, p) {
                    out.push(Issue {
                        power: Some(p),
                        ..Issue::class(
                            i,
                            format!(
                                "power map {p}: {} maps to {} of order {}, expected order {}",
                                self.classes[i].name,
                                self.classes[j].name,
                                self.classes[j].order,
                                o / gcd(o, p)
                            ),
                        )
                    });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        let mut shape_ok = true;
        for (k, chi) in self.irreducibles.iter().enumerate() {
            if chi.values.len() != n {
                out.push(Issue::character(k, format!("{} has {} values, expected {n}", chi.name, chi.values.len())));
                shape_ok = false;
                continue;
            }
            match chi.degree_int() {
                Some(d) if d > 0 => {}
                _ => out.push(Issue::character(k, format!("{} has degree {} (not a positive integer)", chi.name, chi.values[0]))),
            }
            if let Some(j) = chi.values.iter().position(|v| !v.is_integral()) {
                out.push(Issue::character(k, format!("{} value {} on class {} is not integral", chi.name, chi.values[j], self.classes[j].name)));
            }
        }
        if !shape_ok {
            return out;
        }
        if self.irreducibles.len() != n {
            out.push(Issue::general(format!("{} irreducibles for {n} classes", self.irreducibles.len())));
        }
        let sq: BigInt = self
            .irreducibles
            .iter()
            .filter_map(|c| c.degree_int())
            .map(|d| BigInt::from(d) * BigInt::from(d))
            .sum();
        if sq != BigInt::from(self.order) {
            out.push(Issue::general(format!("sum of squared degrees is {sq}, expected {}", self.order)));
        }
        for i in 0..self.irreducibles.len() {
            for j in i..self.irreducibles.len() {
                match self.scalar_product(&self.irreducibles[i].values, &self.irreducibles[j].values) {
                    Ok(v) => {
                        let want = if i == j { Rational::one() } else { Rational::zero() };
                        if v != want {
                            out.push(Issue::character(
                                j,
                                format!("<{}, {}> = {v}, expected {want}", self.irreducibles[i].name, self.irreducibles[j].name),
                            ));
                        }
                    }
                    Err(e) => out.push(Issue::character(j, e.to_string())),
                }
            }
        }
        if self.irreducibles.len() == n {
            for a in 0..n {
                for b in a..n {
                    let mut s = Cyclotomic::zero();
                    for chi in &self.irreducibles {
                        s = s.add(&chi.values[a].mul(&chi.values[b].conj()));
                    }
                    let want = if a == b { Cyclotomic::from_int(self.classes[a].centralizer as i64) } else { Cyclotomic::zero() };
                    if s != want {
                        out.push(Issue::class(
                            b,
                            format!("column orthogonality fails for classes {} and {}", self.classes[a].name, self.classes[b].name),
                        ));
                    }
                }
            }
        }
        out
    }

    /// Errors with the full issue list unless the table is valid.
    pub fn check(&self) -> Result<(), ChartabError> {
        let issues = self.validate();
        if issues.is_empty() {
            Ok(())
        } else {
            Err(ChartabError::Invalid(issues.into_iter().map(|i| i.message).collect()))
        }
    }

    fn check_len(&self, v: &[Cyclotomic]) -> Result<(), ChartabError> {
        if v.len() != self.nclasses() {
            return Err(ChartabError::Length { got: v.len(), expected: self.nclasses() });
        }
        Ok(())
    }

    /// `(1/|G|) sum_C |C| a(C) conj(b(C))`.
    pub fn scalar_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Rational, ChartabError> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut s = Cyclotomic::zero();
        for ((c, x), y) in self.classes.iter().zip(a).zip(b) {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            s = s.add(&x.mul(&y.conj()).scale(&Rational::from_integer(BigInt::from(c.size))));
        }
        let s = s.scale(&Rational::new(BigInt::one(), BigInt::from(self.order)));
        s.to_rational().ok_or(ChartabError::NotRational)
    }

    /// Pointwise product.
    pub fn tensor(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Vec<Cyclotomic>, ChartabError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, v: &[Cyclotomic]) -> Result<Vec<Rational>, ChartabError> {
        self.irreducibles.iter().map(|chi| self.scalar_product(v, &chi.values)).collect()
    }

    /// Sum of multiplicities times irreducibles.
    pub fn combine(&self, coeffs: &[i64]) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(); self.nclasses()];
        for (c, chi) in coeffs.iter().zip(&self.irreducibles) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(&chi.values) {
                    *x = x.add(&y.scale(&rat(*c)));
                }
            }
        }
        v
    }

    /// Regular character: `|G|` at the identity, zero elsewhere.
    pub fn regular_character(&self) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(); self.nclasses()];
        if let Some(x) = v.first_mut() {
            *x = Cyclotomic::from_int(self.order as i64);
        }
        v
    }

    pub fn trivial_index(&self) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.values.iter().all(|v| *v == Cyclotomic::one()))
    }

    /// Classes whose element order is prime to `p`.
    pub fn p_regular(&self, p: u64) -> Vec<usize> {
        (0..self.nclasses()).filter(|&i| self.classes[i].order % p != 0).collect()
    }

    /// Complex conjugate of every irreducible, as a permutation of indices.
    pub fn conjugation_permutation(&self) -> Option<Vec<usize>> {
        self.irreducibles
            .iter()
            .map(|c| {
                let cc: Vec<Cyclotomic> = c.values.iter().map(Cyclotomic::conj).collect();
                self.irreducibles.iter().position(|d| d.values == cc)
            })
            .collect()
    }

    /// Index of the irreducible equal to `v`, if any.
    pub fn find_irreducible(&self, v: &[Cyclotomic]) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.values == v)
    }
}

/// p-part exponent of `n`.
pub fn nu_p(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    if n == 0 {
        return 0;
    }
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::fixtures;

    #[test]
    fn s3_table_is_valid() {
        let t = fixtures::s3();
        assert!(t.validate().is_empty(), "{:?}", t.validate());
        let chi = &t.irreducibles;
        for i in 0..3 {
            for j in 0..3 {
                let v = t.scalar_product(&chi[i].values, &chi[j].values).unwrap();
                assert_eq!(v, if i == j { rat(1) } else { rat(0) });
            }
            let r = t.scalar_product(&t.regular_character(), &chi[i].values).unwrap();
            assert_eq!(r, rat(chi[i].degree_int().unwrap()));
        }
    }

    #[test]
    fn corrupt_centralizer_is_reported() {
        let mut t = fixtures::s3();
        t.classes[1].centralizer = 3;
        let issues = t.validate();
        assert!(issues.iter().any(|i| i.class == Some(1)));
    }

    #[test]
    fn trivial_group_table() {
        let t = fixtures::trivial();
        assert!(t.validate().is_empty());
        assert_eq!(t.scalar_product(&t.irreducibles[0].values, &t.irreducibles[0].values).unwrap(), rat(1));
    }

    #[test]
    fn length_mismatch() {
        let t = fixtures::s3();
        assert!(t.scalar_product(&[Cyclotomic::one()], &t.irreducibles[0].values).is_err());
    }
}
