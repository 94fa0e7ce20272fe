use std::fmt;

use super::field::{Elem, FieldSpec};
use super::packed;
use super::GfError;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct GFMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GFMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows.min(16) {
            let row: Vec<String> = self.row(r).iter().take(24).map(|&a| self.field.format_elem(a)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of Gaussian elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: GFMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl GFMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        GFMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from canonical entries; rejects out-of-range values.
    pub fn from_vec(field: &FieldSpec, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self, GfError> {
        if data.len() != rows * cols {
            return Err(GfError::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(&bad) = data.iter().find(|&&a| a as u32 >= field.q()) {
            return Err(GfError::Parse(format!("entry {bad} not canonical in GF({})", field.q())));
        }
        Ok(GFMatrix { field: field.clone(), rows, cols, data })
    }

    /// Build from integer rows, reducing into the prime subfield.
    pub fn from_int_rows(field: &FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged integer rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = field.from_int(v);
            }
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        GFMatrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[Elem] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_vec(&self, r: usize) -> Vec<Elem> {
        self.row(r).to_vec()
    }
    pub fn row_list(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// Re-tag a prime-field matrix as a matrix over an extension of the
    /// same characteristic.
    pub fn extend_scalars(&self, target: &FieldSpec) -> Result<GFMatrix, GfError> {
        if &self.field == target {
            return Ok(self.clone());
        }
        if !self.field.is_prime_field() || self.field.p() != target.p() {
            return Err(GfError::FieldMismatch);
        }
        Ok(GFMatrix { field: target.clone(), rows: self.rows, cols: self.cols, data: self.data.clone() })
    }

    fn same_field(&self, other: &GFMatrix) -> Result<(), GfError> {
        if self.field != other.field {
            Err(GfError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut t = GFMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GfError::Dimension("addition of differently shaped matrices".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(GFMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: Elem) -> GFMatrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        GFMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: Elem) -> Result<GFMatrix, GfError> {
        if !self.is_square() {
            return Err(GfError::NotSquare);
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i);
            m.set(i, i, self.field.add(v, c));
        }
        Ok(m)
    }

    /// Exact matrix product. F_2 and F_3 use bit-packed kernels.
    pub fn mul(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(GfError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field.is_prime_field() && (self.field.p() == 2 || self.field.p() == 3) && self.cols >= 64 {
            return Ok(packed::mul_packed(self, other));
        }
        Ok(self.mul_generic(other))
    }

    /// Row-oriented product without the packed kernels.
    pub fn mul_generic(&self, other: &GFMatrix) -> GFMatrix {
        let f = &self.field;
        let (n, m) = (self.rows, other.cols);
        let mut out = GFMatrix::zeros(f, n, m);
        if f.is_prime_field() {
            let p = f.p() as u64;
            let mut acc = vec![0u64; m];
            for i in 0..n {
                acc.iter_mut().for_each(|x| *x = 0);
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k] as u64;
                    if a == 0 {
                        continue;
                    }
                    let brow = other.row(k);
                    for (x, &b) in acc.iter_mut().zip(brow) {
                        *x += a * b as u64;
                    }
                }
                for (o, &x) in out.row_mut(i).iter_mut().zip(&acc) {
                    *o = (x % p) as Elem;
                }
            }
        } else {
            for i in 0..n {
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k];
                    if a == 0 {
                        continue;
                    }
                    let brow = &other.data[k * m..(k + 1) * m];
                    let orow = &mut out.data[i * m..(i + 1) * m];
                    axpy(f, orow, a, brow);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(&self.field, &mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn kron(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.same_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = GFMatrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Elem, GfError> {
        if !self.is_square() {
            return Err(GfError::NotSquare);
        }
        Ok((0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i))))
    }

    /// Reduced row echelon form; pivots are the first nonzero entries
    /// scanning columns left to right.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for x in m.row_mut(r) {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = m.row_vec(r);
            for i in 0..m.rows {
                if i != r {
                    let a = m.get(i, c);
                    if a != 0 {
                        axpy(&f, m.row_mut(i), f.neg(a), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of `{v : A v^T = 0}`.
    pub fn nullspace(&self) -> GFMatrix {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = GFMatrix::zeros(f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(bi, pc, f.neg(r.get(pi, fc)));
            }
        }
        out
    }

    /// Basis (as rows) of `{v : v A = 0}`.
    pub fn left_nullspace(&self) -> GFMatrix {
        self.transpose().nullspace()
    }

    /// Rows of the echelon form spanning the row space.
    pub fn row_space(&self) -> GFMatrix {
        let r = self.rref();
        r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>())
    }

    pub fn select_rows(&self, idx: &[usize]) -> GFMatrix {
        let rows: Vec<Vec<Elem>> = idx.iter().map(|&i| self.row_vec(i)).collect();
        GFMatrix::from_rows(&self.field, self.cols, &rows)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.data.split_at_mut(hi * c);
        left[lo * c..(lo + 1) * c].swap_with_slice(&mut right[..c]);
    }

    pub fn inverse(&self) -> Result<GFMatrix, GfError> {
        if !self.is_square() {
            return Err(GfError::NotSquare);
        }
        let n = self.rows;
        let mut aug = GFMatrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return Err(GfError::Singular);
        }
        let mut inv = GFMatrix::zeros(&self.field, n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&r.matrix.row(i)[n..]);
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `self^e` by repeated squaring (square matrices).
    pub fn pow(&self, mut e: u64) -> Result<GFMatrix, GfError> {
        if !self.is_square() {
            return Err(GfError::NotSquare);
        }
        let mut base = self.clone();
        let mut acc = GFMatrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Stack rows of `self` above `other`.
    pub fn vstack(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(GfError::Dimension("vstack of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GFMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }
}

/// `dst += a * src` over `f`.
#[inline]
pub fn axpy(f: &FieldSpec, dst: &mut [Elem], a: Elem, src: &[Elem]) {
    if a == 0 {
        return;
    }
    if f.is_prime_field() {
        let p = f.p();
        let a = a as u32;
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = ((*d as u32 + a * s as u32) % p) as Elem;
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.add(*d, f.mul(a, s));
            }
        }
    }
}

/// Incrementally maintained echelon basis of a subspace of `F^n`.
///
/// Rows are kept fully reduced at their pivot columns with pivot entry 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    dim: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &FieldSpec, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_matrix(m: &GFMatrix) -> Self {
        let mut e = Echelon::new(m.field(), m.cols());
        for r in 0..m.rows() {
            e.insert(m.row(r));
        }
        e
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// Subtract basis multiples so that `v` vanishes at every pivot.
    pub fn reduce(&self, v: &mut [Elem]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = v[pc];
            if a != 0 {
                axpy(&self.field, v, self.field.neg(a), row);
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns `true` when the span grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else { return false };
        let inv = self.field.inv(w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let a = row[pc];
            if a != 0 {
                axpy(&self.field, row, self.field.neg(a), &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` lies in
    /// the span.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let coords: Vec<Elem> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        if w.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn to_matrix(&self) -> GFMatrix {
        GFMatrix::from_rows(&self.field, self.dim, &self.rows)
    }
}

/// A fixed basis (rows of a matrix) supporting coordinate computation with
/// respect to exactly those rows.
#[derive(Clone, Debug)]
pub struct CoordBasis {
    basis: GFMatrix,
    ech: Echelon,
    /// `ech.rows[i] = sum_j transform[i][j] * basis.row(j)`
    transform: Vec<Vec<Elem>>,
}

impl CoordBasis {
    /// Fails with `Singular` if the rows are linearly dependent.
    pub fn new(basis: &GFMatrix) -> Result<Self, GfError> {
        let f = basis.field().clone();
        let (d, n) = (basis.rows(), basis.cols());
        let mut aug = GFMatrix::zeros(&f, d, n + d);
        for i in 0..d {
            aug.row_mut(i)[..n].copy_from_slice(basis.row(i));
            aug.set(i, n + i, 1);
        }
        let r = aug.rref();
        if r.rank < d || r.pivots[..d].iter().any(|&c| c >= n) {
            return Err(GfError::Singular);
        }
        let mut ech = Echelon::new(&f, n);
        let mut transform = Vec::with_capacity(d);
        for i in 0..d {
            ech.rows.push(r.matrix.row(i)[..n].to_vec());
            ech.pivots.push(r.pivots[i]);
            transform.push(r.matrix.row(i)[n..].to_vec());
        }
        Ok(CoordBasis { basis: basis.clone(), ech, transform })
    }

    pub fn len(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_empty(&self) -> bool {
        self.basis.rows() == 0
    }
    pub fn basis(&self) -> &GFMatrix {
        &self.basis
    }

    /// `x` with `x * basis = v`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.ech.field;
        let c = self.ech.coordinates(v)?;
        let mut x = vec![0; self.len()];
        for (ci, t) in c.iter().zip(&self.transform) {
            if *ci != 0 {
                axpy(f, &mut x, *ci, t);
            }
        }
        Some(x)
    }

    /// Matrix whose rows are the coordinates of the rows of `m`.
    pub fn coordinates_matrix(&self, m: &GFMatrix) -> Option<GFMatrix> {
        let f = &self.ech.field;
        let mut out = GFMatrix::zeros(f, m.rows(), self.len());
        for i in 0..m.rows() {
            let x = self.coordinates(m.row(i))?;
            out.row_mut(i).copy_from_slice(&x);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    #[test]
    fn identity_times_matrix() {
        let f = f3();
        let m = GFMatrix::from_int_rows(&f, &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 2, 2]]);
        assert_eq!(GFMatrix::identity(&f, 3).mul(&m).unwrap(), m);
    }

    #[test]
    fn hand_product_over_f3() {
        let f = f3();
        let a = GFMatrix::from_int_rows(&f, &[vec![1, 2], vec![0, 1]]);
        let b = GFMatrix::from_int_rows(&f, &[vec![1, 1], vec![1, 0]]);
        let c = GFMatrix::from_int_rows(&f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), c);
    }

    #[test]
    fn mismatches_are_errors() {
        let f = f3();
        let a = GFMatrix::zeros(&f, 2, 3);
        assert!(matches!(a.mul(&a), Err(GfError::Dimension(_))));
        let g = GFMatrix::zeros(&FieldSpec::prime(5).unwrap(), 3, 2);
        assert!(matches!(a.mul(&g), Err(GfError::FieldMismatch)));
        assert!(matches!(a.trace(), Err(GfError::NotSquare)));
    }

    #[test]
    fn rref_edge_cases() {
        let f = f3();
        let z = GFMatrix::zeros(&f, 3, 4);
        assert_eq!(z.rref().rank, 0);
        let i = GFMatrix::identity(&f, 4);
        let r = i.rref();
        assert_eq!(r.rank, 4);
        assert_eq!(r.matrix, i);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn nullspace_edge_cases() {
        let f = f3();
        assert_eq!(GFMatrix::identity(&f, 3).nullspace().rows(), 0);
        let f2 = FieldSpec::prime(2).unwrap();
        let a = GFMatrix::from_int_rows(&f2, &[vec![1, 1]]);
        let n = a.nullspace();
        assert_eq!(n.row_list(), vec![vec![1, 1]]);
    }

    #[test]
    fn kron_identity_is_block_diagonal() {
        let f = f3();
        let m = GFMatrix::from_int_rows(&f, &[vec![1, 2], vec![2, 0]]);
        let k = GFMatrix::identity(&f, 2).kron(&m).unwrap();
        let expected = GFMatrix::from_int_rows(
            &f,
            &[vec![1, 2, 0, 0], vec![2, 0, 0, 0], vec![0, 0, 1, 2], vec![0, 0, 2, 0]],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn trace_examples() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(GFMatrix::identity(&f, 9).trace().unwrap(), 2);
        assert_eq!(GFMatrix::zeros(&f, 4, 4).trace().unwrap(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let f = FieldSpec::canonical(3, 2).unwrap();
        let a = GFMatrix::from_vec(&f, 2, 2, vec![1, 4, 0, 7]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), GFMatrix::identity(&f, 2));
        let s = GFMatrix::from_int_rows(&FieldSpec::prime(5).unwrap(), &[vec![1, 2], vec![2, 4]]);
        assert!(matches!(s.inverse(), Err(GfError::Singular)));
    }

    #[test]
    fn coord_basis_uses_given_rows() {
        let f = FieldSpec::prime(5).unwrap();
        let b = GFMatrix::from_int_rows(&f, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let cb = CoordBasis::new(&b).unwrap();
        // 2*row0 + 3*row1
        let w: Vec<Elem> = (0..3).map(|j| f.add(f.mul(2, b.get(0, j)), f.mul(3, b.get(1, j)))).collect();
        assert_eq!(cb.coordinates(&w).unwrap(), vec![2, 3]);
        assert!(cb.coordinates(&[0, 0, 1]).is_none());
        let dep = GFMatrix::from_int_rows(&f, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert!(CoordBasis::new(&dep).is_err());
    }

    #[test]
    fn echelon_coordinates() {
        let f = FieldSpec::prime(5).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[1, 2, 3]));
        assert!(e.insert(&[0, 1, 4]));
        assert!(!e.insert(&[2, 0, 1]) || e.len() == 3);
        let v = [1, 3, 2];
        if let Some(c) = e.coordinates(&v) {
            let mut w = vec![0; 3];
            for (row, &a) in e.basis_rows().iter().zip(&c) {
                axpy(&f, &mut w, a, row);
            }
            assert_eq!(w, v.to_vec());
        }
    }
}
