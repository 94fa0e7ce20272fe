//! Fixed-point condensation `M -> M iota` with `iota = (1/|V|) sum_v v`.

use crate::exact::{rat, Cyclotomic};
use crate::gfla::{CoordBasis, Echelon, Elem, FieldSpec, GFMatrix};
use crate::permgrp::Perm;

use super::meataxe::{occurrence_action, CompositionSeries};
use super::{FGModule, MtxError};

fn check_order(field: &FieldSpec, order: usize) -> Result<Elem, MtxError> {
    if order == 0 {
        return Err(MtxError::Shape("empty condensation subgroup".into()));
    }
    let inv = field.inv(field.from_int(order as i64)).ok_or(MtxError::CondensationOrder {
        order,
        p: field.p(),
    })?;
    Ok(inv)
}

/// Condensation of a permutation module, on the basis of `V`-orbit sums.
#[derive(Clone, Debug)]
pub struct PermCondensation {
    field: FieldSpec,
    degree: usize,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    /// `1 / |O_j|` in the field
    inv_sizes: Vec<Elem>,
}

impl PermCondensation {
    /// `v_elements` must list the whole subgroup `V`.
    pub fn new(field: &FieldSpec, degree: usize, v_elements: &[Perm]) -> Result<Self, MtxError> {
        check_order(field, v_elements.len())?;
        if v_elements.iter().any(|v| v.degree() != degree) {
            return Err(MtxError::Shape("degree mismatch in V".into()));
        }
        let mut orbit_of = vec![usize::MAX; degree];
        let mut orbits = Vec::new();
        for s in 0..degree {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            let mut orb: Vec<usize> = v_elements.iter().map(|v| v.apply(s)).collect();
            orb.sort_unstable();
            orb.dedup();
            for &x in &orb {
                orbit_of[x] = orbits.len();
            }
            orbits.push(orb);
        }
        let inv_sizes = orbits
            .iter()
            .map(|o| field.inv(field.from_int(o.len() as i64)).expect("orbit length divides |V|"))
            .collect();
        Ok(PermCondensation { field: field.clone(), degree, orbits, orbit_of, inv_sizes })
    }

    pub fn dim(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Rows are the orbit sums, a basis of the fixed space.
    pub fn orbit_sum_basis(&self) -> GFMatrix {
        let mut b = GFMatrix::zeros(&self.field, self.dim(), self.degree);
        for (i, o) in self.orbits.iter().enumerate() {
            for &x in o {
                b.set(i, x, 1);
            }
        }
        b
    }

    /// `iota g iota`: entry `(i, j)` is `#{x in O_i : x^g in O_j} / |O_j|`.
    pub fn condense(&self, g: &Perm) -> Result<GFMatrix, MtxError> {
        if g.degree() != self.degree {
            return Err(MtxError::Shape("degree mismatch".into()));
        }
        let f = &self.field;
        let r = self.dim();
        let mut m = GFMatrix::zeros(f, r, r);
        for (i, o) in self.orbits.iter().enumerate() {
            for &x in o {
                let j = self.orbit_of[g.apply(x)];
                let v = f.add(m.get(i, j), self.inv_sizes[j]);
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Condensed algebra generated by the given elements.
    pub fn condense_module(&self, elements: &[Perm]) -> Result<FGModule, MtxError> {
        let gens = elements.iter().map(|g| self.condense(g)).collect::<Result<Vec<_>, _>>()?;
        let labels = (1..=gens.len()).map(|i| format!("c{i}")).collect();
        FGModule::algebra(&self.field, self.dim(), gens, labels)
    }
}

/// Condensation of a module given by matrices, with `V` given by its
/// matrices on the module.
#[derive(Clone, Debug)]
pub struct MatrixCondensation {
    idempotent: GFMatrix,
    basis: CoordBasis,
}

impl MatrixCondensation {
    /// Fixed-space basis from the echelonized row space of `iota`.
    pub fn new(v_matrices: &[GFMatrix]) -> Result<Self, MtxError> {
        let p = Self::idempotent_of(v_matrices)?;
        let b = Echelon::from_matrix(&p).to_matrix();
        Ok(MatrixCondensation { basis: CoordBasis::new(&b)?, idempotent: p })
    }

    /// Uses a caller-chosen basis of the fixed space (e.g. orbit sums).
    pub fn with_basis(v_matrices: &[GFMatrix], basis: &GFMatrix) -> Result<Self, MtxError> {
        let p = Self::idempotent_of(v_matrices)?;
        if basis.cols() != p.rows() || basis.rank() != p.rank() || basis.mul(&p)? != *basis {
            return Err(MtxError::Shape("rows do not form a basis of the fixed space".into()));
        }
        Ok(MatrixCondensation { basis: CoordBasis::new(basis)?, idempotent: p })
    }

    fn idempotent_of(v: &[GFMatrix]) -> Result<GFMatrix, MtxError> {
        let first = v.first().ok_or_else(|| MtxError::Shape("empty condensation subgroup".into()))?;
        let f = first.field().clone();
        let inv = check_order(&f, v.len())?;
        let mut acc = GFMatrix::zeros(&f, first.rows(), first.cols());
        for m in v {
            acc = acc.add(m)?;
        }
        Ok(acc.scale(inv))
    }

    pub fn idempotent(&self) -> &GFMatrix {
        &self.idempotent
    }

    pub fn basis(&self) -> &GFMatrix {
        self.basis.basis()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `iota g iota` in the fixed-space basis: rows are coordinates of `f_i g iota`.
    pub fn condense(&self, g: &GFMatrix) -> Result<GFMatrix, MtxError> {
        let img = self.basis.basis().mul(g)?.mul(&self.idempotent)?;
        self.basis.coordinates_matrix(&img).ok_or(MtxError::NotInvariant)
    }

    pub fn condense_module(&self, elements: &[GFMatrix]) -> Result<FGModule, MtxError> {
        let gens = elements.iter().map(|g| self.condense(g)).collect::<Result<Vec<_>, _>>()?;
        let f = self.idempotent.field();
        let labels = (1..=gens.len()).map(|i| format!("c{i}")).collect();
        FGModule::algebra(f, self.dim(), gens, labels)
    }
}

/// `(1/|V|) sum_v phi(y v)` from the class distribution of the coset `yV`:
/// each entry is a character value and how many `v` land in that class.
pub fn trace_formula_average(distribution: &[(Cyclotomic, usize)], v_order: usize) -> Result<Cyclotomic, MtxError> {
    let total: usize = distribution.iter().map(|d| d.1).sum();
    if total != v_order || v_order == 0 {
        return Err(MtxError::Multiset { total, expected: v_order });
    }
    let mut s = Cyclotomic::zero();
    for (val, c) in distribution {
        s = s.add(&val.scale(&rat(*c as i64)));
    }
    Ok(s.scale(&crate::exact::Rational::new(1.into(), (v_order as i64).into())))
}

/// Trace of a condensed element on one factor of a series of the condensed module.
pub fn condensed_trace(series: &CompositionSeries, condensed: &GFMatrix, occ: usize) -> Result<Elem, MtxError> {
    super::meataxe::factor_trace(series, condensed, occ)
}

/// Outcome of checking a series against further condensed elements.
#[derive(Clone, Debug)]
pub struct ExtraCheck {
    /// labels of the elements that were used
    pub used: Vec<String>,
    /// for each occurrence: the flag is stable and the factor stays irreducible
    pub stable: Vec<bool>,
}

impl ExtraCheck {
    pub fn all_stable(&self) -> bool {
        self.stable.iter().all(|&b| b)
    }
}

/// Checks that each occurrence's flag is stable under the extra elements, so
/// the series of the subalgebra is a series for the larger algebra too.
pub fn verify_extra(series: &CompositionSeries, extra: &[GFMatrix], labels: &[String]) -> Result<ExtraCheck, MtxError> {
    let mut stable = Vec::with_capacity(series.series.len());
    for occ in 0..series.series.len() {
        stable.push(match occurrence_action(series, occ, extra) {
            Ok(_) => true,
            Err(MtxError::NotInvariant) => false,
            Err(e) => return Err(e),
        });
    }
    Ok(ExtraCheck { used: labels.to_vec(), stable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtxcond::permutation_matrix;
    use crate::permgrp::{catalog, closure};

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    #[test]
    fn trivial_v_gives_permutation_matrix() {
        let g = catalog::symmetric(5);
        let c = PermCondensation::new(&f3(), 5, &[Perm::identity(5)]).unwrap();
        for x in g.gens() {
            assert_eq!(c.condense(x).unwrap(), permutation_matrix(&f3(), x));
        }
    }

    #[test]
    fn p_dividing_v_is_rejected() {
        let t = Perm::from_cycles(5, &[&[1, 2, 3]]).unwrap();
        let v = closure(5, &[t]).unwrap();
        assert!(PermCondensation::new(&f3(), 5, &v).is_err());
    }

    #[test]
    fn orbit_counting_matches_full_idempotent() {
        let f = f3();
        let v = closure(5, &[Perm::from_cycles(5, &[&[4, 5]]).unwrap()]).unwrap();
        let pc = PermCondensation::new(&f, 5, &v).unwrap();
        assert_eq!(pc.dim(), 4);
        let vm: Vec<GFMatrix> = v.iter().map(|p| permutation_matrix(&f, p)).collect();
        let mc = MatrixCondensation::with_basis(&vm, &pc.orbit_sum_basis()).unwrap();
        let en = catalog::symmetric(5).elements().unwrap();
        for g in en.elements() {
            assert_eq!(pc.condense(g).unwrap(), mc.condense(&permutation_matrix(&f, g)).unwrap());
        }
        assert_eq!(pc.condense(&Perm::identity(5)).unwrap(), GFMatrix::identity(&f, 4));
        let echelon = MatrixCondensation::new(&vm).unwrap();
        assert_eq!(echelon.dim(), 4);
    }

    #[test]
    fn elements_of_v_condense_to_identity() {
        let f = FieldSpec::prime(5).unwrap();
        let v = catalog::klein_four_in_s5();
        let vm: Vec<GFMatrix> = v.iter().map(|p| permutation_matrix(&f, p)).collect();
        let mc = MatrixCondensation::new(&vm).unwrap();
        for m in &vm {
            assert_eq!(mc.condense(m).unwrap(), GFMatrix::identity(&f, mc.dim()));
        }
    }

    #[test]
    fn average_needs_full_multiset() {
        let one = Cyclotomic::one();
        assert!(trace_formula_average(&[(one.clone(), 3)], 4).is_err());
        let avg = trace_formula_average(&[(Cyclotomic::from_int(4), 1), (Cyclotomic::zero(), 3)], 4).unwrap();
        assert_eq!(avg, one);
    }
}
