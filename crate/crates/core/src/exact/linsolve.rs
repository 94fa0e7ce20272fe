use num_traits::{One, Zero};

use super::Rational;

/// Outcome of [`rat_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    NoSolution,
    /// A particular solution (free variables set to zero); `nullity` is the
    /// dimension of the solution space, so the solution is unique iff it is 0.
    Solution { x: Vec<Rational>, nullity: usize, integral: bool },
}

impl SolveResult {
    pub fn unique(&self) -> Option<&[Rational]> {
        match self {
            SolveResult::Solution { x, nullity: 0, .. } => Some(x),
            _ => None,
        }
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref_rational(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(i, r);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` over the rationals. `a` is given by rows.
pub fn rat_solve(a: &[Vec<Rational>], b: &[Rational]) -> SolveResult {
    assert_eq!(a.len(), b.len(), "row count of A must match length of b");
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref_rational(&mut aug);
    if pivots.last() == Some(&cols) {
        return SolveResult::NoSolution;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    let integral = x.iter().all(|v| v.is_integer());
    SolveResult::Solution { x, nullity: cols - pivots.len(), integral }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn identity_system() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = vec![rat(3), Rational::new(1.into(), 2.into())];
        match rat_solve(&a, &b) {
            SolveResult::Solution { x, nullity, integral } => {
                assert_eq!(x, b);
                assert_eq!(nullity, 0);
                assert!(!integral);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(rat_solve(&a, &[rat(1), rat(3)]), SolveResult::NoSolution);
        match rat_solve(&a, &[rat(1), rat(2)]) {
            SolveResult::Solution { nullity, .. } => assert_eq!(nullity, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_system() {
        assert!(matches!(rat_solve(&[], &[]), SolveResult::Solution { nullity: 0, .. }));
    }
}
