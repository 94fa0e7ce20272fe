//! Univariate polynomials over a finite field: characteristic polynomials
//! and factorization (square-free, distinct-degree, equal-degree).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Elem, FieldSpec, GFMatrix, GfError};

/// Polynomial with coefficients constant term first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    pub coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> Elem {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Poly, f: &FieldSpec) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *o.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(c)
    }

    pub fn sub(&self, o: &Poly, f: &FieldSpec) -> Poly {
        self.add(&o.scale(f.neg(1), f), f)
    }

    pub fn scale(&self, c: Elem, f: &FieldSpec) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, o: &Poly, f: &FieldSpec) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::new(c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly, f: &FieldSpec) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv(d.lead()).expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for deg in (dd..r.len()).rev() {
            let c = f.mul(r[deg], inv);
            if c == 0 {
                continue;
            }
            q[deg - dd] = c;
            for i in 0..=dd {
                r[deg - dd + i] = f.sub(r[deg - dd + i], f.mul(c, d.coeffs[i]));
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly, f: &FieldSpec) -> Poly {
        self.divrem(d, f).1
    }

    pub fn monic(&self, f: &FieldSpec) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lead()).expect("nonzero"), f)
    }

    pub fn gcd(&self, o: &Poly, f: &FieldSpec) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &FieldSpec) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| f.mul(a, f.from_int(i as i64)))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly, f: &FieldSpec) -> Poly {
        let mut base = self.rem(m, f);
        let mut acc = Poly::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f).rem(m, f);
            }
        }
        acc
    }

    pub fn eval(&self, x: Elem, f: &FieldSpec) -> Elem {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `f(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &GFMatrix) -> Result<GFMatrix, GfError> {
        let f = a.field();
        let n = a.rows();
        let mut acc = GFMatrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add_scalar(c)?;
        }
        Ok(acc)
    }
}

/// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
pub fn charpoly(a: &GFMatrix) -> Result<Poly, GfError> {
    if !a.is_square() {
        return Err(GfError::NotSquare);
    }
    let f = a.field().clone();
    let n = a.rows();
    let mut h: Vec<Vec<Elem>> = a.row_list();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]).expect("pivot");
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    let mut p: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let lin = Poly::new(vec![f.neg(h[m - 1][m - 1]), 1]);
        let mut pm = lin.mul(&p[m - 1], &f);
        let mut t: Elem = 1;
        for i in (1..m).rev() {
            t = f.mul(t, h[i][i - 1]);
            if t == 0 {
                break;
            }
            let c = f.mul(t, h[i - 1][m - 1]);
            if c != 0 {
                pm = pm.sub(&p[i - 1].scale(c, &f), &f);
            }
        }
        p.push(pm);
    }
    Ok(p.pop().expect("nonempty"))
}

fn pth_root(g: &Poly, f: &FieldSpec) -> Poly {
    let p = f.p() as usize;
    let e = (f.q() / f.p()) as u64;
    let c = g.coeffs.iter().step_by(p).map(|&a| f.pow(a, e)).collect();
    Poly::new(c)
}

/// Square-free decomposition of a monic polynomial: `(factor, multiplicity)`.
pub fn squarefree(g: &Poly, f: &FieldSpec) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dg = g.derivative(f);
    if dg.is_zero() {
        for (h, m) in squarefree(&pth_root(g, f), f) {
            out.push((h, m * f.p() as usize));
        }
        return out;
    }
    let mut c = g.gcd(&dg, f);
    let mut w = g.divrem(&c, f).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c, f);
        let fac = w.divrem(&y, f).0;
        if !fac.is_one() {
            out.push((fac.monic(f), i));
        }
        w = y;
        c = c.divrem(&w, f).0;
        i += 1;
    }
    if !c.is_one() {
        for (h, m) in squarefree(&pth_root(&c.monic(f), f), f) {
            out.push((h, m * f.p() as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a square-free monic polynomial.
pub fn distinct_degree(g: &Poly, f: &FieldSpec) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    let q = f.q() as u128;
    let mut h = Poly::x().rem(&rest, f);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(q, &rest, f);
        let g_d = h.sub(&Poly::x(), f).gcd(&rest, f);
        if !g_d.is_one() {
            rest = rest.divrem(&g_d, f).0;
            h = h.rem(&rest, f);
            out.push((g_d, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let dr = rest.degree().unwrap();
        out.push((rest.monic(f), dr));
    }
    out
}

fn split_once(g: &Poly, d: usize, f: &FieldSpec, rng: &mut ChaCha8Rng) -> Poly {
    let n = g.degree().unwrap();
    let q = f.q() as u128;
    loop {
        let a = Poly::new((0..n).map(|_| rng.gen_range(0..f.q()) as Elem).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.p() == 2 {
            // Absolute trace map over F_2 on F_q[x]/g restricted to degree-d factors.
            let steps = f.k() as usize * d;
            let mut t = a.rem(g, f);
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mul(&t, f).rem(g, f);
                acc = acc.add(&t, f);
            }
            acc
        } else {
            let mut norm = a.rem(g, f);
            let mut frob = norm.clone();
            for _ in 1..d {
                frob = frob.powmod(q, g, f);
                norm = norm.mul(&frob, f).rem(g, f);
            }
            norm.powmod((q - 1) / 2, g, f).sub(&Poly::one(), f)
        };
        let h = b.gcd(g, f);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            return h;
        }
    }
}

fn equal_degree(g: &Poly, d: usize, f: &FieldSpec, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(g.monic(f));
        return;
    }
    let h = split_once(g, d, f, rng);
    let other = g.divrem(&h, f).0;
    equal_degree(&h, d, f, rng, out);
    equal_degree(&other.monic(f), d, f, rng, out);
}

/// Complete factorization of a nonzero polynomial into monic irreducibles
/// with multiplicities, sorted by (degree, coefficients).
pub fn factor(g: &Poly, f: &FieldSpec) -> Vec<(Poly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let g = g.monic(f);
    let mut out = Vec::new();
    for (sq, mult) in squarefree(&g, f) {
        for (part, d) in distinct_degree(&sq, f) {
            let mut irr = Vec::new();
            equal_degree(&part, d, f, &mut rng, &mut irr);
            out.extend(irr.into_iter().map(|p| (p, mult)));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs).cmp(&(b.0.degree(), &b.0.coeffs)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(Poly, usize)], f: &FieldSpec) -> Poly {
        let mut acc = Poly::one();
        for (p, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(p, f);
            }
        }
        acc
    }

    #[test]
    fn charpoly_of_companion_block() {
        let f = FieldSpec::prime(5).unwrap();
        // companion of x^3 + 2x + 3
        let a = GFMatrix::from_int_rows(&f, &[vec![0, 1, 0], vec![0, 0, 1], vec![-3, -2, 0]]);
        assert_eq!(charpoly(&a).unwrap(), Poly::new(vec![3, 2, 0, 1]));
        let i = GFMatrix::identity(&f, 2);
        assert_eq!(charpoly(&i).unwrap(), Poly::new(vec![1, 3, 1]));
    }

    #[test]
    fn cayley_hamilton_on_dense_matrix() {
        let f = FieldSpec::canonical(3, 2).unwrap();
        let n = 6;
        let data: Vec<Elem> = (0..n * n).map(|i| ((i * 5 + i / 7) % 9) as Elem).collect();
        let a = GFMatrix::from_vec(&f, n, n, data).unwrap();
        let cp = charpoly(&a).unwrap();
        assert_eq!(cp.degree(), Some(n));
        assert!(cp.eval_matrix(&a).unwrap().is_zero());
    }

    #[test]
    fn factorization_recomposes() {
        for (p, k) in [(2u32, 1u32), (3, 1), (7, 1), (3, 2), (2, 3)] {
            let f = FieldSpec::canonical(p, k).unwrap();
            let g = Poly::new((0..13).map(|i| ((i * i + 3 * i + 1) % f.q() as usize) as Elem).collect()).monic(&f);
            let sq = g.mul(&g, &f).mul(&Poly::new(vec![1, 1]), &f);
            let fs = factor(&sq, &f);
            assert_eq!(expand(&fs, &f), sq.monic(&f), "GF({p}^{k})");
            for (h, _) in &fs {
                // irreducible factors have no proper factor of degree d < deg
                let dd = distinct_degree(h, &f);
                assert_eq!(dd.len(), 1);
                assert_eq!(dd[0].1, h.degree().unwrap());
            }
        }
    }

    #[test]
    fn pth_power_input() {
        let f = FieldSpec::prime(3).unwrap();
        // (x + 1)^3 = x^3 + 1
        let g = Poly::new(vec![1, 0, 0, 1]);
        assert_eq!(factor(&g, &f), vec![(Poly::new(vec![1, 1]), 3)]);
    }
}
