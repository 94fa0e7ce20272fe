use modchar::permgrp::{catalog, coset_distribution, filtered_pair_search, InvariantSpec, Perm, PermGroup, Predicate};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn order_by_multiplication(p: &Perm) -> u64 {
    let id = Perm::identity(p.degree());
    let mut x = p.clone();
    let mut k = 1;
    while x != id {
        x = x.mul(p);
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cycle_order_matches_repeated_products(p in (1usize..13).prop_flat_map(perm)) {
        prop_assert_eq!(p.order(), order_by_multiplication(&p));
    }

    #[test]
    fn coset_multiset_has_size_v(y in perm(5), vgens in prop::collection::vec(perm(5), 1..3)) {
        let g = catalog::symmetric(5);
        let v = modchar::permgrp::closure(5, &vgens).unwrap();
        let cl = g.conjugacy_classes().unwrap();
        let spec = InvariantSpec { centralizer: true, power_maps: false, fixed_points: true };
        let r = coset_distribution(&g, &y, &v, spec, Some(&cl)).unwrap();
        prop_assert_eq!(r.size, v.len());
        prop_assert_eq!(r.order_distribution.values().sum::<usize>(), v.len());
        prop_assert_eq!(r.invariant_distribution.values().sum::<usize>(), v.len());
        if let Some(c) = &r.classified {
            prop_assert_eq!(c.values().sum::<usize>(), v.len());
        }
    }

    #[test]
    fn pair_search_is_relabeling_invariant(pool in prop::collection::vec(perm(6), 1..10), x in perm(6), relabel in perm(6), m in 1u64..7) {
        let preds = |x: &Perm| vec![Predicate::ProductOrder(m), Predicate::ConjugateProductOrder { x: x.clone(), m: 3 }, Predicate::Distinct];
        let before = filtered_pair_search(&pool, &preds(&x));
        let moved: Vec<Perm> = pool.iter().map(|p| p.conjugate(&relabel)).collect();
        let after = filtered_pair_search(&moved, &preds(&x.conjugate(&relabel)));
        prop_assert_eq!(before, after);
    }
}

#[test]
fn coxeter_length_sign_is_multiplicative() {
    let (g, u, cox) = catalog::sl3_2_bn();
    let bn = modchar::permgrp::BNData::new(g, u, cox).unwrap();
    let sign = |l: usize| if l % 2 == 0 { 1 } else { -1 };
    for (v, lv) in &bn.w_elements {
        for (w, lw) in &bn.w_elements {
            let vw = v.mul(w);
            let (_, l) = bn.w_elements.iter().find(|(x, _)| *x == vw).expect("W is closed");
            assert_eq!(sign(*l), sign(*lv) * sign(*lw));
        }
    }
    assert_eq!(bn.w_elements.len(), 6);
    let _ = PermGroup::new(7, bn.coxeter_gens.clone()).unwrap();
}
