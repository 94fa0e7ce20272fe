//! Finite fields `GF(p^k)` with table-driven arithmetic.
//!
//! Elements are stored as their canonical integer encoding
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` where `c_i` are the coefficients of
//! the residue polynomial modulo the defining polynomial. The prime subfield
//! is therefore encoded as `0..p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::GfError;

/// A field element in canonical integer encoding.
pub type Elem = u16;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 251;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;
/// Largest supported field order (table size bound).
pub const MAX_ORDER: u32 = 1 << 16;

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    poly: Vec<u32>,
    primitive: Elem,
    /// `exp[i] = r^i` for `i < 2(q-1)`.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`.
    log: Vec<u32>,
    /// `zech[d] = log(1 + r^d)`, `u32::MAX` when the sum is zero.
    zech: Vec<u32>,
}

/// A finite field `GF(p^k)` together with its pinned defining polynomial
/// and primitive element. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.poly == other.inner.poly)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p(), self.k(), self.inner.poly)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Schoolbook product of residues modulo a monic `poly` (constant first).
fn slow_mul(a: u32, b: u32, p: u32, poly: &[u32]) -> u32 {
    let k = poly.len() - 1;
    let da = digits(a, p, k as u32);
    let db = digits(b, p, k as u32);
    let mut prod = vec![0u32; 2 * k];
    for i in 0..k {
        for j in 0..k {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            for i in 0..k {
                prod[deg - k + i] = (prod[deg - k + i] + (p - c) * poly[i]) % p;
            }
            prod[deg] = 0;
        }
    }
    undigits(&prod[..k], p)
}

/// Remainder test: does the monic polynomial `d` divide `f` over `F_p`?
fn divides(d: &[u32], f: &[u32], p: u32) -> bool {
    let mut r = f.to_vec();
    let dd = d.len() - 1;
    for deg in (dd..r.len()).rev() {
        let c = r[deg];
        if c != 0 {
            for i in 0..=dd {
                r[deg - dd + i] = (r[deg - dd + i] + (p - c) * d[i]) % p;
            }
        }
    }
    r[..dd].iter().all(|&c| c == 0)
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    if k <= 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut cand = digits(low, p, d as u32);
            cand.push(1);
            if divides(&cand, poly, p) {
                return false;
            }
        }
    }
    true
}

type Key = (u32, u32, Vec<u32>);

fn cache() -> &'static Mutex<HashMap<Key, Arc<Tables>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Tables>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self, GfError> {
        Self::new(p, 1, vec![0, 1])
    }

    /// `GF(p^k)` with the canonical defining polynomial: the monic
    /// irreducible of degree `k` whose lower coefficients have the smallest
    /// integer encoding.
    pub fn canonical(p: u32, k: u32) -> Result<Self, GfError> {
        Self::check_pk(p, k)?;
        if k == 1 {
            return Self::prime(p);
        }
        let poly = canonical_polynomial(p, k);
        Self::new(p, k, poly)
    }

    /// Smallest `k` such that `GF(p^k)` contains the `n`-th roots of unity.
    pub fn splitting_degree(p: u32, n: u64) -> Option<u32> {
        if n % p as u64 == 0 {
            return None;
        }
        let mut pk = p as u64 % n.max(1);
        for k in 1..=MAX_DEGREE {
            if n == 1 || pk % n == 1 % n {
                return Some(k);
            }
            pk = (pk * p as u64) % n;
        }
        None
    }

    fn check_pk(p: u32, k: u32) -> Result<(), GfError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(GfError::BadField(format!("characteristic {p} is not a prime <= {MAX_PRIME}")));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(GfError::BadField(format!("extension degree {k} out of range 1..={MAX_DEGREE}")));
        }
        let q = (p as u64).pow(k);
        if q > MAX_ORDER as u64 {
            return Err(GfError::BadField(format!("field order {p}^{k} exceeds {MAX_ORDER}")));
        }
        Ok(())
    }

    /// `GF(p^k)` defined by the caller-supplied monic polynomial
    /// (coefficients constant term first, `k + 1` entries).
    pub fn new(p: u32, k: u32, defining_poly: Vec<u32>) -> Result<Self, GfError> {
        Self::check_pk(p, k)?;
        let poly = if k == 1 { vec![0, 1] } else { defining_poly };
        if poly.len() != k as usize + 1 || poly[k as usize] != 1 || poly.iter().any(|&c| c >= p) {
            return Err(GfError::BadField(format!(
                "defining polynomial {poly:?} is not monic of degree {k} over F_{p}"
            )));
        }
        if !is_irreducible(&poly, p) {
            return Err(GfError::BadField(format!("polynomial {poly:?} is reducible over F_{p}")));
        }
        let key = (p, k, poly.clone());
        let mut guard = cache().lock().expect("field cache poisoned");
        if let Some(t) = guard.get(&key) {
            return Ok(FieldSpec { inner: Arc::clone(t) });
        }
        let tables = Arc::new(build_tables(p, k, poly));
        guard.insert(key, Arc::clone(&tables));
        Ok(FieldSpec { inner: tables })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }
    #[inline]
    pub fn k(&self) -> u32 {
        self.inner.k
    }
    /// Field order `p^k`.
    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }
    pub fn defining_poly(&self) -> &[u32] {
        &self.inner.poly
    }
    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.inner.k == 1
    }
    /// The pinned primitive element: smallest encoding generating `F^*`.
    pub fn primitive(&self) -> Elem {
        self.inner.primitive
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.inner;
        if t.k == 1 {
            let s = a as u32 + b as u32;
            return if s >= t.p { (s - t.p) as Elem } else { s as Elem };
        }
        if t.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let la = t.log[a as usize];
        let lb = t.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + t.q - 1 - la };
        let z = t.zech[d as usize];
        if z == u32::MAX {
            0
        } else {
            t.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let t = &*self.inner;
        if a == 0 {
            return 0;
        }
        if t.k == 1 {
            return (t.p - a as u32) as Elem;
        }
        if t.p == 2 {
            return a;
        }
        t.exp[(t.log[a as usize] + (t.q - 1) / 2) as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        if t.k == 1 {
            return ((a as u32 * b as u32) % t.p) as Elem;
        }
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        let t = &*self.inner;
        if a == 0 {
            return None;
        }
        let l = t.log[a as usize];
        Some(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.inner;
        let l = (t.log[a as usize] as u64 * (e % (t.q as u64 - 1))) % (t.q as u64 - 1);
        t.exp[l as usize]
    }

    /// `r^e` for the pinned primitive element `r`.
    pub fn primitive_power(&self, e: u64) -> Elem {
        let t = &*self.inner;
        t.exp[(e % (t.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.inner.log[a as usize])
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.p() as i64) as Elem
    }

    /// Integer representative when `a` lies in the prime subfield.
    pub fn to_prime(&self, a: Elem) -> Option<u32> {
        if (a as u32) < self.p() {
            Some(a as u32)
        } else {
            None
        }
    }

    /// Coefficient digits of an element, constant term first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        digits(a as u32, self.p(), self.k())
    }

    pub fn from_digits(&self, d: &[u32]) -> Result<Elem, GfError> {
        if d.len() != self.k() as usize || d.iter().any(|&c| c >= self.p()) {
            return Err(GfError::Parse(format!("bad element digits {d:?}")));
        }
        Ok(undigits(d, self.p()) as Elem)
    }

    /// Lift to an extension field with the same characteristic; prime-field
    /// elements keep their encoding.
    pub fn embed_prime_into(&self, target: &FieldSpec, a: Elem) -> Result<Elem, GfError> {
        if !self.is_prime_field() || self.p() != target.p() {
            return Err(GfError::FieldMismatch);
        }
        Ok(a)
    }

    /// Textual form used by the matrix file format.
    pub fn format_elem(&self, a: Elem) -> String {
        if self.is_prime_field() {
            a.to_string()
        } else {
            self.digits(a).iter().map(|d| d.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem, GfError> {
        let bad = || GfError::Parse(format!("bad field element {s:?}"));
        if self.is_prime_field() {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let v: u32 = s.parse().map_err(|_| bad())?;
            if v >= self.p() || (s.len() > 1 && s.starts_with('0')) {
                return Err(bad());
            }
            Ok(v as Elem)
        } else {
            let parts: Vec<&str> = s.split('.').collect();
            let mut d = Vec::with_capacity(parts.len());
            for part in parts {
                if part.is_empty()
                    || !part.bytes().all(|b| b.is_ascii_digit())
                    || (part.len() > 1 && part.starts_with('0'))
                {
                    return Err(bad());
                }
                d.push(part.parse::<u32>().map_err(|_| bad())?);
            }
            self.from_digits(&d).map_err(|_| bad())
        }
    }
}

fn canonical_polynomial(p: u32, k: u32) -> Vec<u32> {
    let count = p.pow(k);
    for low in 0..count {
        let mut cand = digits(low, p, k);
        cand.push(1);
        if cand[0] != 0 && is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_tables(p: u32, k: u32, poly: Vec<u32>) -> Tables {
    let q = p.pow(k);
    let mul = |a: u32, b: u32| -> u32 {
        if k == 1 {
            (a * b) % p
        } else {
            slow_mul(a, b, p, &poly)
        }
    };
    let mut primitive = 0;
    'outer: for g in 1..q {
        let mut x = g;
        for i in 1..q - 1 {
            if x == 1 {
                let _ = i;
                continue 'outer;
            }
            x = mul(x, g);
        }
        if x == 1 {
            primitive = g;
            break;
        }
    }
    // q = 2: the multiplicative group is trivial and 1 generates it.
    if q == 2 {
        primitive = 1;
    }
    let n = (q - 1) as usize;
    let mut exp = vec![0 as Elem; 2 * n.max(1)];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i] = x as Elem;
        log[x as usize] = i as u32;
        x = mul(x, primitive);
    }
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    let add = |a: u32, b: u32| -> u32 {
        let da = digits(a, p, k);
        let db = digits(b, p, k);
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        undigits(&s, p)
    };
    let mut zech = vec![0u32; n.max(1)];
    for d in 0..n {
        let s = add(1, exp[d] as u32);
        zech[d] = if s == 0 { u32::MAX } else { log[s as usize] };
    }
    Tables { p, k, q, poly, primitive: primitive as Elem, exp, log, zech }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.neg(1), 6);
        assert_eq!(f.primitive(), 3);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(257).is_err());
        assert!(FieldSpec::new(3, 2, vec![1, 0, 1]).is_ok());
        // x^2 + 2 = (x+1)(x+2) over F_3
        assert!(FieldSpec::new(3, 2, vec![2, 0, 1]).is_err());
        assert!(FieldSpec::canonical(3, 11).is_err());
    }

    #[test]
    fn extension_generator_has_full_order() {
        for &(p, k) in &[(2u32, 4u32), (3, 2), (3, 4), (5, 2), (7, 2), (3, 6)] {
            let f = FieldSpec::canonical(p, k).unwrap();
            let r = f.primitive();
            let q = f.q() as u64;
            assert_eq!(f.pow(r, q - 1), 1);
            for d in 1..q - 1 {
                if (q - 1) % d == 0 {
                    assert_ne!(f.pow(r, d), 1, "GF({p}^{k}) generator order divides {d}");
                }
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let f = FieldSpec::canonical(3, 2).unwrap();
        for a in 0..9u16 {
            assert_eq!(f.parse_elem(&f.format_elem(a)).unwrap(), a);
        }
        assert!(f.parse_elem("3.0").is_err());
        assert!(f.parse_elem("1").is_err());
    }

    #[test]
    fn splitting_degree_examples() {
        assert_eq!(FieldSpec::splitting_degree(3, 4), Some(2));
        assert_eq!(FieldSpec::splitting_degree(3, 56), Some(6));
        assert_eq!(FieldSpec::splitting_degree(7, 24), Some(2));
        assert_eq!(FieldSpec::splitting_degree(3, 3), None);
        assert_eq!(FieldSpec::splitting_degree(5, 1), Some(1));
    }
}
