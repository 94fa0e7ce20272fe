//! Conjugacy classes of S5 and the class distribution of a coset yV.

use modchar::permgrp::{catalog, coset_distribution, InvariantSpec};

fn main() {
    let g = catalog::symmetric(5);
    let cl = g.conjugacy_classes().unwrap();
    for c in 0..cl.len() {
        println!("{:>3}  size {:>2}  |C| = {}", cl.names[c], cl.sizes[c], cl.centralizers[c]);
    }
    let v = catalog::klein_four_in_s5();
    let y = &g.gens()[1];
    let spec = InvariantSpec { centralizer: true, power_maps: true, fixed_points: true };
    let r = coset_distribution(&g, y, &v, spec, Some(&cl)).unwrap();
    print!("{r}");
}
