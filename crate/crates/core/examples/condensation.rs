//! Fixed-point condensation of the S5 permutation module on pairs, and the
//! Steinberg module of SL(3,2) chopped over GF(3).

use modchar::gfla::FieldSpec;
use modchar::mtxcond::{chop, factor_trace, PermCondensation};
use modchar::permgrp::{catalog, steinberg_element_module, BNData, Perm};

fn main() {
    let f = FieldSpec::prime(3).unwrap();
    // S5 on the 10 unordered pairs
    let s5 = catalog::symmetric(5);
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let on_pairs = |g: &Perm| {
        let img = pairs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (g.apply(i), g.apply(j));
                pairs.iter().position(|&q| q == (a.min(b), a.max(b))).unwrap() as u32
            })
            .collect();
        Perm::from_images(img).unwrap()
    };
    let gens: Vec<Perm> = s5.gens().iter().map(on_pairs).collect();
    let v: Vec<Perm> = catalog::klein_four_in_s5().iter().map(on_pairs).collect();
    let c = PermCondensation::new(&f, 10, &v).unwrap();
    let m = c.condense_module(&gens).unwrap();
    let series = chop(&m, 0).unwrap();
    println!("condensed 10 -> {}; factors {:?}", c.dim(), series.dims());
    for (k, fac) in series.factors.iter().enumerate() {
        let occ = series.occurrences(k)[0];
        let tr: Vec<_> = m.gens().iter().map(|x| factor_trace(&series, x, occ).unwrap()).collect();
        println!("  factor of dim {} traces {tr:?}", fac.module.dim());
    }

    let (g, u, cox) = catalog::sl3_2_bn();
    let bn = BNData::new(g, u, cox).unwrap();
    let st = steinberg_element_module(&bn, &f).unwrap();
    let series = chop(&st, 0).unwrap();
    println!("Steinberg module dim {} over GF(3): factors {:?}", st.dim(), series.dims());
    print!("{}", series.certificate);
}
