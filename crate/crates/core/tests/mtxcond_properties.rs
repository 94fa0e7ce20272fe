use modchar::gfla::{Elem, FieldSpec, GFMatrix};
use modchar::mtxcond::{chop, iso, permutation_matrix, replay_certificate, FGModule, MatrixCondensation, PermCondensation};
use modchar::permgrp::{closure, Perm, PermGroup};
use proptest::prelude::*;

mod support;
use support::module;

/// invertible matrix as a product of unitriangular factors
fn base_change(f: &FieldSpec, n: usize, seed: &[u32]) -> GFMatrix {
    let mut l = GFMatrix::identity(f, n);
    let mut u = GFMatrix::identity(f, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, (seed[k % seed.len()] % f.q()) as Elem);
            u.set(j, i, (seed[(k + 3) % seed.len()] % f.q()) as Elem);
            k += 1;
        }
    }
    l.mul(&u).unwrap()
}

fn dims(m: &FGModule, seed: u64) -> Vec<(usize, usize)> {
    chop(m, seed).unwrap().dims()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn chop_is_seed_deterministic(m in module(), seed in any::<u64>()) {
        let a = chop(&m, seed).unwrap();
        let b = chop(&m, seed).unwrap();
        prop_assert_eq!(&a.certificate, &b.certificate);
        prop_assert_eq!(a.dims(), b.dims());
        prop_assert_eq!(a.dims().iter().map(|(d, k)| d * k).sum::<usize>(), m.dim());
        prop_assert!(replay_certificate(&m, &a.certificate).unwrap());
    }

    #[test]
    fn chop_factors_ignore_seed_and_basis(m in module(), s1 in any::<u64>(), s2 in any::<u64>(), bseed in prop::collection::vec(any::<u32>(), 8)) {
        let b = base_change(m.field(), m.dim(), &bseed);
        let mb = m.change_basis(&b).unwrap();
        let d = dims(&m, s1);
        prop_assert_eq!(&dims(&m, s2), &d);
        prop_assert_eq!(&dims(&mb, s2), &d);
    }

    #[test]
    fn iso_is_an_equivalence(m in module(), b1 in prop::collection::vec(any::<u32>(), 8), b2 in prop::collection::vec(any::<u32>(), 8)) {
        let x = m.change_basis(&base_change(m.field(), m.dim(), &b1)).unwrap();
        let y = m.change_basis(&base_change(m.field(), m.dim(), &b2)).unwrap();
        prop_assert!(iso(&m, &m).unwrap().is_some());
        prop_assert!(iso(&m, &x).unwrap().is_some());
        prop_assert!(iso(&x, &m).unwrap().is_some());
        prop_assert!(iso(&x, &y).unwrap().is_some());
        // a module of another dimension is never isomorphic
        let z = m.direct_sum(&m).unwrap();
        prop_assert!(iso(&m, &z).unwrap().is_none());
    }
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn condensation_identities(
        p in prop::sample::select(&[5u32, 7, 11][..]),
        vgens in prop::collection::vec(perm(6), 1..3),
        g in perm(6),
        h in perm(6),
    ) {
        let f = FieldSpec::prime(p).unwrap();
        let v = closure(6, &vgens).unwrap();
        prop_assume!(v.len() % p as usize != 0);
        let pc = PermCondensation::new(&f, 6, &v).unwrap();
        let vm: Vec<GFMatrix> = v.iter().map(|x| permutation_matrix(&f, x)).collect();
        let mc = MatrixCondensation::new(&vm).unwrap();
        // fixed space dimension = number of orbits
        prop_assert_eq!(mc.dim(), pc.dim());
        prop_assert_eq!(pc.dim(), PermGroup::new(6, vgens.clone()).unwrap().orbits().len());
        let (gm, hm) = (permutation_matrix(&f, &g), permutation_matrix(&f, &h));
        let iota = mc.idempotent();
        prop_assert_eq!(iota.mul(iota).unwrap(), iota.clone());
        let lhs = mc.condense(&gm).unwrap().mul(&mc.condense(&hm).unwrap()).unwrap();
        let rhs = mc.condense(&gm.mul(iota).unwrap().mul(&hm).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(mc.condense(&GFMatrix::identity(&f, 6)).unwrap(), GFMatrix::identity(&f, mc.dim()));
        prop_assert_eq!(pc.condense(&Perm::identity(6)).unwrap(), GFMatrix::identity(&f, pc.dim()));
        // orbit-sum basis gives the permutation formula
        let ob = MatrixCondensation::with_basis(&vm, &pc.orbit_sum_basis()).unwrap();
        prop_assert_eq!(ob.condense(&gm).unwrap(), pc.condense(&g).unwrap());
    }
}
