use modchar::gfla::{Elem, GFMatrix};
use proptest::prelude::*;

mod support;
use support::{chain, field, fmat, kron_quad, matrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(a in fmat()) {
        let r = a.rref().matrix;
        prop_assert_eq!(r.rref().matrix, r);
    }

    #[test]
    fn rank_of_product_is_subadditive((a, b) in chain()) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn rank_nullity(a in fmat()) {
        let n = a.nullspace();
        prop_assert_eq!(n.rows() + a.rank(), a.cols());
        if n.rows() > 0 {
            prop_assert!(a.mul(&n.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn kron_is_multiplicative(
        (a, c, b, d) in kron_quad()
    ) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_is_associative((a, b, c) in (field(), 1usize..3, 1usize..3, 1usize..3, 1usize..3).prop_flat_map(|(f, x, y, z, w)| (
            matrix(f.clone(), x, y), matrix(f.clone(), y, z), matrix(f, z, w)))) {
        prop_assert_eq!(a.kron(&b).unwrap().kron(&c).unwrap(), a.kron(&b.kron(&c).unwrap()).unwrap());
    }

    #[test]
    fn field_axioms((f, x, y, z) in field().prop_flat_map(|f| { let q = f.q(); (Just(f), 0..q, 0..q, 0..q) })) {
        let (x, y, z) = (x as Elem, y as Elem, z as Elem);
        prop_assert_eq!(f.add(x, y), f.add(y, x));
        prop_assert_eq!(f.mul(x, y), f.mul(y, x));
        prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), 0);
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
        if x != 0 {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        } else {
            prop_assert_eq!(f.inv(x), None);
        }
    }

    #[test]
    fn packed_product_matches_generic((a, b) in chain()) {
        prop_assert_eq!(a.mul(&b).unwrap(), a.mul_generic(&b));
    }

    #[test]
    fn inverse_round_trip(a in (field(), 1usize..7).prop_flat_map(|(f, n)| matrix(f, n, n))) {
        match a.inverse() {
            Ok(b) => prop_assert_eq!(a.mul(&b).unwrap(), GFMatrix::identity(a.field(), a.rows())),
            Err(_) => prop_assert!(a.rank() < a.rows()),
        }
    }
}
