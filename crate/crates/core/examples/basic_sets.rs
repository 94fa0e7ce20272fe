//! Decomposition matrix of the principal 3-block of A5 from a basic set and
//! tensor-induced projectives, checked against a MeatAxe computation.

use modchar::brauer::{brute_force_decomposition, decompose_block, default_recipes, write_decmat, write_relmat};
use modchar::chartab::dixon_schneider;
use modchar::permgrp::catalog;

fn main() {
    let g = catalog::alternating(5);
    let (t, cl) = dixon_schneider(&g, "A5").unwrap();
    let basic = [t.char_index("1a").unwrap(), t.char_index("4a").unwrap()];
    let dec = decompose_block(&t, 3, &basic, None, &default_recipes(&t, 3)).unwrap();
    print!("{}", write_relmat(&dec.relations));
    print!("{}", write_decmat(&dec.full));

    let bf = brute_force_decomposition(&g, &t, &cl, 3, None, 0).unwrap();
    let dims: Vec<usize> = bf.modules.iter().map(|m| m.dim()).collect();
    println!("irreducible Brauer characters by chopping: dims {dims:?}");
    for (chi, row) in t.irreducibles.iter().zip(&bf.d) {
        println!("{:>3}: {row:?}", chi.name);
    }
}
