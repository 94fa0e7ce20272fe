use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, Rational};
use crate::gfla::{Elem, FieldSpec};

/// An element of `Q(zeta_n)`, stored sparsely in the canonical basis of the
/// smallest cyclotomic field containing it.
///
/// The basis is the tensor product over prime powers `q || n` of
/// `{zeta_q^f : p^(k-1) <= f < p^k}` for odd `p` and `{zeta_q^f : f < q/2}` for
/// `p = 2`, glued by the Chinese remainder theorem. Two values are equal iff
/// their stored forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    n: u64,
    coeffs: BTreeMap<u64, Rational>,
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn modinv(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (g, x, _) = egcd(a as i128, m as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(m as i128) as u64
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Rewrites a dense coefficient vector over `zeta_n^e` into the canonical basis.
fn reduce_dense(n: u64, v: &mut [Rational]) {
    for (p, k) in factor_u64(n) {
        let q = p.pow(k);
        let step = n / p;
        let cof = n / q;
        let inv = modinv(cof % q, q);
        let low = q / p;
        for e in 0..n {
            let i = e as usize;
            if v[i].is_zero() {
                continue;
            }
            let f = ((e % q) * inv) % q;
            if p == 2 {
                if f >= low {
                    let c = std::mem::take(&mut v[i]);
                    let j = ((e + step) % n) as usize;
                    v[j] -= c;
                }
            } else if f < low {
                let c = std::mem::take(&mut v[i]);
                for t in 1..p {
                    let j = ((e + t * step) % n) as usize;
                    v[j] -= &c;
                }
            }
        }
    }
}

fn sparse(v: Vec<Rational>) -> BTreeMap<u64, Rational> {
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as u64, c))
        .collect()
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { n: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { n: 1, coeffs }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// `zeta_n^e`, with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let e = e.rem_euclid(n as i64) as u64;
        let mut d = vec![Rational::zero(); n as usize];
        d[e as usize] = Rational::one();
        Self::from_dense(n, d)
    }

    /// Builds the canonical form of `sum_e v[e] zeta_n^e`.
    pub fn from_dense(n: u64, mut v: Vec<Rational>) -> Self {
        assert_eq!(v.len() as u64, n);
        reduce_dense(n, &mut v);
        let mut c = Cyclotomic { n, coeffs: sparse(v) };
        c.minimize();
        c
    }

    /// The conductor: smallest `n` with the value in `Q(zeta_n)`.
    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.n != 1 {
            return None;
        }
        Some(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    /// True when every coefficient is an integer (the basis is integral, so
    /// this characterises algebraic integers).
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Dense coefficients over `zeta_m^e` for a multiple `m` of the conductor
    /// (not reduced).
    pub fn dense_in(&self, m: u64) -> Vec<Rational> {
        assert_eq!(m % self.n, 0, "target order must be a multiple of the conductor");
        let s = m / self.n;
        let mut v = vec![Rational::zero(); m as usize];
        for (&e, c) in &self.coeffs {
            v[(e * s) as usize] += c;
        }
        v
    }

    /// Coordinates in the canonical basis of `Q(zeta_m)`, indexed by exponent
    /// (non-basis exponents are zero).
    pub fn basis_coords(&self, m: u64) -> Vec<Rational> {
        let mut v = self.dense_in(m);
        reduce_dense(m, &mut v);
        v
    }

    fn minimize(&mut self) {
        loop {
            let n = self.n;
            if n == 1 {
                return;
            }
            let mut changed = false;
            for (p, k) in factor_u64(n) {
                if let Some(next) = self.try_descend(p, k) {
                    *self = next;
                    changed = true;
                    break;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn try_descend(&self, p: u64, k: u32) -> Option<Cyclotomic> {
        let n = self.n;
        let m = n / p;
        if p == 2 && k == 1 || k >= 2 {
            // Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4; for p^2 | n the
            // subfield is spanned by exponents divisible by p.
            if self.coeffs.keys().any(|&e| e % p != 0) {
                return None;
            }
            let mut v = vec![Rational::zero(); m as usize];
            for (&e, c) in &self.coeffs {
                v[(e / p) as usize] += c;
            }
            reduce_dense(m, &mut v);
            return Some(Cyclotomic { n: m, coeffs: sparse(v) });
        }
        // p exactly divides n, p odd: the coefficient must be constant along
        // each fibre f_p = 1..p-1, and then sum_f zeta_p^f = -1.
        let cof = n / p;
        let inv = modinv(cof % p, p);
        let mut fibres: BTreeMap<u64, Vec<(u64, &Rational)>> = BTreeMap::new();
        for (&e, c) in &self.coeffs {
            let f = ((e % p) * inv) % p;
            let rest = (e + n - (cof * f) % n) % n;
            fibres.entry(rest).or_default().push((f, c));
        }
        let mut v = vec![Rational::zero(); m as usize];
        for (rest, list) in fibres {
            if list.len() as u64 != p - 1 || list.iter().any(|(_, c)| *c != list[0].1) {
                return None;
            }
            v[(rest / p) as usize] -= list[0].1;
        }
        reduce_dense(m, &mut v);
        Some(Cyclotomic { n: m, coeffs: sparse(v) })
    }

    fn combine(&self, o: &Cyclotomic, f: impl Fn(&mut Rational, &Rational)) -> Cyclotomic {
        let m = self.n.lcm(&o.n);
        let mut v = self.dense_in(m);
        let s = m / o.n;
        for (&e, c) in &o.coeffs {
            f(&mut v[(e * s) as usize], c);
        }
        Self::from_dense(m, v)
    }

    pub fn add(&self, o: &Cyclotomic) -> Cyclotomic {
        self.combine(o, |a, b| *a += b)
    }

    pub fn sub(&self, o: &Cyclotomic) -> Cyclotomic {
        self.combine(o, |a, b| *a -= b)
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect() }
    }

    pub fn mul(&self, o: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || o.is_zero() {
            return Cyclotomic::zero();
        }
        if self.n == 1 {
            return o.scale(&self.coeffs[&0]);
        }
        if o.n == 1 {
            return self.scale(&o.coeffs[&0]);
        }
        let m = self.n.lcm(&o.n);
        let (sa, sb) = (m / self.n, m / o.n);
        let mut v = vec![Rational::zero(); m as usize];
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &o.coeffs {
                let e = ((ea * sa + eb * sb) % m) as usize;
                v[e] += ca * cb;
            }
        }
        Self::from_dense(m, v)
    }

    /// Galois action `zeta_n -> zeta_n^k` for `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as u64;
        assert_eq!(k.gcd(&n), 1, "Galois exponent must be a unit");
        let mut v = vec![Rational::zero(); n as usize];
        for (&e, c) in &self.coeffs {
            v[((e * k) % n) as usize] += c;
        }
        Self::from_dense(n, v)
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Value under `zeta_n = exp(2 pi i / n)` as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&e, c) in &self.coeffs {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * e as f64 / self.n as f64;
            re += x * t.cos();
            im += x * t.sin();
        }
        (re, im)
    }

    /// Sign of a real value under the standard complex embedding. Returns
    /// `Unresolved` if floating-point evaluation cannot certify the sign.
    pub fn real_sign(&self) -> Result<std::cmp::Ordering, ExactError> {
        use std::cmp::Ordering;
        if !self.is_real() {
            return Err(ExactError::NotReal(self.to_string()));
        }
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(r) = self.to_rational() {
            return Ok(if r.is_positive() { Ordering::Greater } else { Ordering::Less });
        }
        let (re, _) = self.to_complex();
        let mass: f64 = self.coeffs.values().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum();
        let bound = mass * 1e-12;
        if re > bound {
            Ok(Ordering::Greater)
        } else if re < -bound {
            Ok(Ordering::Less)
        } else {
            Err(ExactError::Unresolved(self.to_string()))
        }
    }

    /// Image in `field` under `zeta_n -> r^((q-1)/n)`, `r` the field's pinned
    /// primitive element.
    pub fn reduce_mod_p(&self, field: &FieldSpec) -> Result<Elem, ExactError> {
        let p = field.p() as u64;
        let q1 = field.q() as u64 - 1;
        let n = self.n;
        if n % p == 0 {
            return Err(ExactError::ConductorDivisible { n, p: field.p() });
        }
        if q1 % n != 0 {
            return Err(ExactError::NoRootsOfUnity { n, q: field.q() as u64 });
        }
        let step = q1 / n;
        let pb = BigInt::from(p);
        let mut acc: Elem = 0;
        for (&e, c) in &self.coeffs {
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return Err(ExactError::DenominatorDivisible { p });
            }
            let num = c.numer().mod_floor(&pb).to_i64().expect("small");
            let den = den.to_i64().expect("small");
            let coef = field.div(field.from_int(num), field.from_int(den)).expect("unit");
            let z = field.primitive_power(e * step);
            acc = field.add(acc, field.mul(coef, z));
        }
        Ok(acc)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            if self.n == 1 || e == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "E({})^{}", self.n, e)?;
            } else {
                write!(f, "{}*E({})^{}", fmt_rational(&a), self.n, e)?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Parse(format!("bad rational `{s}`"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once('/') {
        Some((a, b)) => {
            if !digits(a) || !digits(b) {
                return Err(bad());
            }
            let d: BigInt = b.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a.parse().map_err(|_| bad())?, d))
        }
        None => {
            if !digits(s) {
                return Err(bad());
            }
            Ok(Rational::from_integer(s.parse().map_err(|_| bad())?))
        }
    }
}

fn parse_term(t: &str) -> Result<Cyclotomic, ExactError> {
    let bad = || ExactError::Parse(format!("bad cyclotomic term `{t}`"));
    let (coef, root) = match t.find("E(") {
        None => return Ok(Cyclotomic::from_rational(parse_rational(t)?)),
        Some(0) => (Rational::one(), t),
        Some(i) => {
            let c = t[..i].strip_suffix('*').ok_or_else(bad)?;
            (parse_rational(c)?, &t[i..])
        }
    };
    let rest = root.strip_prefix("E(").ok_or_else(bad)?;
    let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
    let n: u64 = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let e: i64 = if rest.is_empty() {
        1
    } else {
        let r = rest.strip_prefix('^').ok_or_else(bad)?;
        if r.is_empty() || !r.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        r.parse().map_err(|_| bad())?
    };
    Ok(Cyclotomic::root_of_unity(n, e).scale(&coef))
}

impl FromStr for Cyclotomic {
    type Err = ExactError;

    /// Parses sums like `3/2+E(8)^1-E(8)^3` or `-2*E(3)^1`.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(ExactError::Parse(format!("bad cyclotomic literal `{s}`")));
        }
        let mut acc = Cyclotomic::zero();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut i = 0;
        let mut depth = 0;
        while i <= bytes.len() {
            let at_end = i == bytes.len();
            let c = if at_end { b'+' } else { bytes[i] };
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && (i > start || at_end) => {
                    let tok = &s[start..i];
                    let (neg, body) = match tok.as_bytes().first() {
                        Some(b'-') => (true, &tok[1..]),
                        Some(b'+') if start > 0 => (false, &tok[1..]),
                        _ => (false, tok),
                    };
                    if body.is_empty() {
                        return Err(ExactError::Parse(format!("empty term in `{s}`")));
                    }
                    let v = parse_term(body)?;
                    acc = if neg { acc.sub(&v) } else { acc.add(&v) };
                    start = i;
                }
                _ => {}
            }
            i += 1;
        }
        Ok(acc)
    }
}
