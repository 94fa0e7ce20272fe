//! Generators shared by the property suites and the acceptance run.
#![allow(dead_code)]

use modchar::exact::{rat, Assignment, Constraint, Cyclotomic, ParamInt, ParamSystem};
use modchar::gfla::{Elem, FieldSpec, GFMatrix};
use modchar::mtxcond::FGModule;
use modchar::permgrp::{catalog, PermGroup};
use proptest::prelude::*;

pub const FIELDS: &[(u32, u32)] = &[(2, 1), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2), (5, 2)];

pub fn field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(FIELDS).prop_map(|(p, k)| FieldSpec::canonical(p, k).unwrap())
}

pub fn matrix(f: FieldSpec, r: usize, c: usize) -> impl Strategy<Value = GFMatrix> {
    prop::collection::vec(0..f.q(), r * c).prop_map(move |d| GFMatrix::from_vec(&f, r, c, d.into_iter().map(|x| x as Elem).collect()).unwrap())
}

/// field with a matrix of random shape
pub fn fmat() -> impl Strategy<Value = GFMatrix> {
    (field(), 1usize..9, 1usize..9).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

pub fn chain() -> impl Strategy<Value = (GFMatrix, GFMatrix)> {
    (field(), 1usize..8, 1usize..8, 1usize..8).prop_flat_map(|(f, a, b, c)| (matrix(f.clone(), a, b), matrix(f, b, c)))
}

/// `(A, C, B, D)` with `AC` and `BD` defined
pub fn kron_quad() -> impl Strategy<Value = (GFMatrix, GFMatrix, GFMatrix, GFMatrix)> {
    (field(), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(f, m, n, k, p, q, r)| {
        (matrix(f.clone(), m, n), matrix(f.clone(), n, k), matrix(f.clone(), p, q), matrix(f, q, r))
    })
}

pub const CONDUCTORS: &[u64] = &[1, 3, 4, 5, 7, 8, 12, 15];

/// integral cyclotomic of conductor dividing `n`
pub fn cyc(n: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-3i64..4, n as usize).prop_map(move |c| Cyclotomic::from_dense(n, c.into_iter().map(rat).collect()))
}

/// a prime, a conductor prime to it with a splitting field in range, and two
/// cyclotomics of that conductor
pub fn reduction_case() -> impl Strategy<Value = (u32, u64, Cyclotomic, Cyclotomic)> {
    (prop::sample::select(&[2u32, 3, 5, 7, 11, 13][..]), prop::sample::select(CONDUCTORS))
        .prop_filter("conductor prime to p", |(p, n)| {
            n % *p as u64 != 0 && FieldSpec::splitting_degree(*p, *n).map_or(false, |k| (*p as u64).pow(k) <= 1 << 16)
        })
        .prop_flat_map(|(p, n)| (Just(p), Just(n), cyc(n), cyc(n)))
}

#[derive(Clone, Debug)]
pub struct System {
    pub ranges: Vec<(i64, i64)>,
    /// (coefficients per parameter, pairwise product coefficient of params 0 and 1, constant, relation)
    pub constraints: Vec<(Vec<i64>, i64, i64, u8)>,
}

pub fn system() -> impl Strategy<Value = System> {
    let ranges = prop::collection::vec((-2i64..2, 0i64..3).prop_map(|(lo, w)| (lo, lo + w)), 1..5);
    ranges.prop_flat_map(|ranges| {
        let k = ranges.len();
        let c = (prop::collection::vec(-2i64..3, k), -1i64..2, -3i64..4, 0u8..3);
        (Just(ranges), prop::collection::vec(c, 0..4)).prop_map(|(ranges, constraints)| System { ranges, constraints })
    })
}

fn name(i: usize) -> String {
    format!("x{i}")
}

pub fn build(s: &System) -> ParamSystem {
    let mut sys = ParamSystem::new();
    for (i, &(lo, hi)) in s.ranges.iter().enumerate() {
        sys.add_param(&name(i), lo, hi).unwrap();
    }
    for (coef, quad, c0, rel) in &s.constraints {
        let mut e = ParamInt::constant(*c0);
        for (i, &c) in coef.iter().enumerate() {
            e = e.add(&ParamInt::var(&name(i)).scale(c));
        }
        if s.ranges.len() > 1 {
            e = e.add(&ParamInt::var(&name(0)).mul(&ParamInt::var(&name(1)), &sys).unwrap().scale(*quad));
        }
        let c = match rel {
            0 => Constraint::eq(e, ParamInt::zero()),
            1 => Constraint::ge(e, ParamInt::zero()),
            _ => Constraint::le(e, ParamInt::zero()),
        };
        sys.add_constraint(c).unwrap();
    }
    sys
}

/// Independent enumeration: odometer over the box, each constraint
/// evaluated directly from its coefficients.
pub fn nested_loops(s: &System) -> Vec<Assignment> {
    let k = s.ranges.len();
    let mut v: Vec<i64> = s.ranges.iter().map(|r| r.0).collect();
    let mut out = Vec::new();
    loop {
        let ok = s.constraints.iter().all(|(coef, quad, c0, rel)| {
            let mut val = *c0 + coef.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>();
            if k > 1 {
                val += quad * v[0] * v[1];
            }
            match rel {
                0 => val == 0,
                1 => val >= 0,
                _ => val <= 0,
            }
        });
        if ok {
            out.push((0..k).map(|i| (name(i), v[i])).collect());
        }
        // increment the last coordinate first
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < s.ranges[i].1 {
                v[i] += 1;
                break;
            }
            v[i] = s.ranges[i].0;
        }
    }
}

pub fn groups() -> Vec<PermGroup> {
    vec![catalog::symmetric(4), catalog::alternating(5), catalog::symmetric(5), catalog::psl2_7()]
}

/// permutation module of a small group, optionally tensored with itself
pub fn module() -> impl Strategy<Value = FGModule> {
    (0usize..4, prop::sample::select(&[2u32, 3, 5, 7][..]), any::<bool>()).prop_map(|(g, p, square)| {
        let g = &groups()[g];
        let f = FieldSpec::prime(p).unwrap();
        let m = FGModule::permutation(&f, g.gens()).unwrap();
        if square && m.dim() <= 5 {
            m.tensor(&m).unwrap()
        } else {
            m
        }
    })
}
