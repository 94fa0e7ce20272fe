use crate::exact::Cyclotomic;
use crate::gfla::{CoordBasis, Echelon, FieldSpec, GFMatrix};
use crate::permgrp::{Enumeration, Perm};

use super::MtxError;

/// A module given by the action of generators on row vectors (`v -> v M`).
///
/// Group modules have invertible generator matrices; condensed algebras
/// (`iota g iota`) need not, and are built with [`FGModule::algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGModule {
    field: FieldSpec,
    dim: usize,
    gens: Vec<GFMatrix>,
    labels: Vec<String>,
}

impl FGModule {
    /// Group module: all generators square of size `dim` and invertible.
    pub fn new(field: &FieldSpec, dim: usize, gens: Vec<GFMatrix>, labels: Vec<String>) -> Result<Self, MtxError> {
        let m = Self::algebra(field, dim, gens, labels)?;
        if m.gens.iter().any(|g| !g.is_invertible()) {
            return Err(MtxError::NotInvertible);
        }
        Ok(m)
    }

    /// Module for the algebra generated by arbitrary square matrices.
    pub fn algebra(field: &FieldSpec, dim: usize, gens: Vec<GFMatrix>, labels: Vec<String>) -> Result<Self, MtxError> {
        if labels.len() != gens.len() {
            return Err(MtxError::Shape("one label per generator".into()));
        }
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(MtxError::Shape(format!("generator is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
            }
            if g.field() != field {
                return Err(MtxError::Field);
            }
        }
        Ok(FGModule { field: field.clone(), dim, gens, labels })
    }

    /// Permutation module: basis vector `e_i` maps to `e_{i^g}`.
    pub fn permutation(field: &FieldSpec, perms: &[Perm]) -> Result<Self, MtxError> {
        let n = perms.first().map_or(0, Perm::degree);
        let gens = perms.iter().map(|p| permutation_matrix(field, p)).collect();
        let labels = (1..=perms.len()).map(|i| format!("g{i}")).collect();
        Self::new(field, n, gens, labels)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn gens(&self) -> &[GFMatrix] {
        &self.gens
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Matrix of a word given as `(generator index, exponent)` pairs.
    pub fn word_matrix(&self, word: &[(usize, i64)]) -> Result<GFMatrix, MtxError> {
        let mut acc = GFMatrix::identity(&self.field, self.dim);
        for &(i, e) in word {
            let g = self.gens.get(i).ok_or_else(|| MtxError::Shape(format!("no generator {i}")))?;
            let m = if e < 0 { g.inverse()?.pow(e.unsigned_abs())? } else { g.pow(e as u64)? };
            acc = acc.mul(&m)?;
        }
        Ok(acc)
    }

    /// Tensor product (generators must correspond).
    pub fn tensor(&self, other: &FGModule) -> Result<FGModule, MtxError> {
        if self.ngens() != other.ngens() {
            return Err(MtxError::Shape("generator counts differ".into()));
        }
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.kron(b)).collect::<Result<_, _>>()?;
        Self::algebra(&self.field, self.dim * other.dim, gens, self.labels.clone())
    }

    /// Contragredient module (`g -> (g^-1)^T`).
    pub fn dual(&self) -> Result<FGModule, MtxError> {
        let gens = self.gens.iter().map(|g| Ok(g.inverse()?.transpose())).collect::<Result<_, MtxError>>()?;
        Self::new(&self.field, self.dim, gens, self.labels.clone())
    }

    pub fn direct_sum(&self, other: &FGModule) -> Result<FGModule, MtxError> {
        let d = self.dim + other.dim;
        let mut gens = Vec::new();
        for (a, b) in self.gens.iter().zip(&other.gens) {
            let mut m = GFMatrix::zeros(&self.field, d, d);
            for i in 0..self.dim {
                m.row_mut(i)[..self.dim].copy_from_slice(a.row(i));
            }
            for i in 0..other.dim {
                m.row_mut(self.dim + i)[self.dim..].copy_from_slice(b.row(i));
            }
            gens.push(m);
        }
        Self::algebra(&self.field, d, gens, self.labels.clone())
    }

    /// Same module in the basis given by the rows of `b` (`b g b^-1`).
    pub fn change_basis(&self, b: &GFMatrix) -> Result<FGModule, MtxError> {
        let bi = b.inverse()?;
        let gens = self.gens.iter().map(|g| b.mul(g)?.mul(&bi)).collect::<Result<_, _>>()?;
        Self::algebra(&self.field, self.dim, gens, self.labels.clone())
    }

    /// Adds further acting matrices.
    pub fn with_extra(&self, extra: &[GFMatrix], labels: &[String]) -> Result<FGModule, MtxError> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        let mut l = self.labels.clone();
        l.extend_from_slice(labels);
        Self::algebra(&self.field, self.dim, gens, l)
    }

    /// True when the row space of `basis` is invariant under every generator.
    pub fn is_invariant(&self, basis: &GFMatrix) -> bool {
        let e = Echelon::from_matrix(basis);
        self.gens.iter().all(|g| {
            let img = basis.mul(g).expect("conformable");
            (0..img.rows()).all(|i| e.contains(img.row(i)))
        })
    }

    /// Action on an invariant subspace, in the basis given by the rows of `basis`.
    pub fn submodule(&self, basis: &GFMatrix) -> Result<FGModule, MtxError> {
        let cb = CoordBasis::new(basis)?;
        let gens = self
            .gens
            .iter()
            .map(|g| cb.coordinates_matrix(&basis.mul(g)?).ok_or(MtxError::NotInvariant))
            .collect::<Result<_, _>>()?;
        Self::algebra(&self.field, basis.rows(), gens, self.labels.clone())
    }

    /// Action on `V / W` for an invariant `W` in echelon form; the quotient
    /// basis is the unit vectors at non-pivot columns.
    pub fn quotient(&self, sub: &Echelon) -> Result<(FGModule, Vec<usize>), MtxError> {
        let piv: std::collections::BTreeSet<usize> = sub.pivots().iter().copied().collect();
        let comp: Vec<usize> = (0..self.dim).filter(|c| !piv.contains(c)).collect();
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut m = GFMatrix::zeros(&self.field, comp.len(), comp.len());
            for (i, &c) in comp.iter().enumerate() {
                let mut v = g.row_vec(c);
                sub.reduce(&mut v);
                for (j, &cj) in comp.iter().enumerate() {
                    m.set(i, j, v[cj]);
                }
            }
            gens.push(m);
        }
        Ok((Self::algebra(&self.field, comp.len(), gens, self.labels.clone())?, comp))
    }

    /// Matrices of all elements of an enumerated group whose generators
    /// correspond to this module's generators.
    pub fn element_matrices(&self, en: &Enumeration) -> Result<Vec<GFMatrix>, MtxError> {
        let mut out: Vec<GFMatrix> = Vec::with_capacity(en.len());
        out.push(GFMatrix::identity(&self.field, self.dim));
        for i in 1..en.len() {
            let (par, g) = en.parent(i).expect("non-root");
            let m = out[par].mul(&self.gens[g])?;
            out.push(m);
        }
        Ok(out)
    }
}

pub fn permutation_matrix(field: &FieldSpec, p: &Perm) -> GFMatrix {
    let n = p.degree();
    let mut m = GFMatrix::zeros(field, n, n);
    for i in 0..n {
        m.set(i, p.apply(i), 1);
    }
    m
}

/// Brauer character value of an element of order `order` from its matrix
/// over a prime field: the `p'`-part is diagonalised over `GF(p^k)` and each
/// eigenvalue `r^((q-1) j / n)` is lifted to `zeta_n^j`.
pub fn brauer_value(m: &GFMatrix, order: u64) -> Result<Cyclotomic, MtxError> {
    let f = m.field();
    if !f.is_prime_field() {
        return Err(MtxError::Field);
    }
    let n = p_prime_part(order, f.p() as u64);
    let k = FieldSpec::splitting_degree(f.p(), n).ok_or(MtxError::Field)?;
    brauer_value_in(m, order, &FieldSpec::canonical(f.p(), k)?)
}

fn p_prime_part(mut n: u64, p: u64) -> u64 {
    while n % p == 0 {
        n /= p;
    }
    n
}

/// As [`brauer_value`], with eigenvalues read in `field`, which must contain
/// the `n`-th roots of unity and either equal the matrix field or extend its
/// prime field. Using one field for all classes keeps the lift compatible
/// with power maps.
pub fn brauer_value_in(m: &GFMatrix, order: u64, field: &FieldSpec) -> Result<Cyclotomic, MtxError> {
    let f = m.field();
    if f.p() != field.p() || (f != field && !f.is_prime_field()) {
        return Err(MtxError::Field);
    }
    let p = f.p() as u64;
    let n = p_prime_part(order, p);
    let pa = order / n;
    // exponent e = 1 mod n, e = 0 mod p^a
    let e = (0..n).map(|t| t * pa).find(|e| e % n == 1 % n).expect("crt");
    let mp = m.pow(e)?;
    if n == 1 {
        return Ok(Cyclotomic::from_int(mp.rows() as i64));
    }
    if (field.q() as u64 - 1) % n != 0 {
        return Err(MtxError::Field);
    }
    let me = if f == field { mp } else { mp.extend_scalars(field)? };
    let step = (field.q() as u64 - 1) / n;
    let d = me.rows();
    let mut total = 0;
    let mut val = Cyclotomic::zero();
    for j in 0..n {
        let lam = field.primitive_power(j * step);
        let mult = d - me.add_scalar(field.neg(lam))?.rank();
        if mult > 0 {
            total += mult;
            val = val.add(&Cyclotomic::root_of_unity(n, j as i64).scale(&crate::exact::rat(mult as i64)));
        }
    }
    if total != d {
        return Err(MtxError::NotSemisimple);
    }
    Ok(val)
}
