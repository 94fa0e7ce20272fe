//! Predicting decomposition matrices of index-2 extensions by Clifford
//! splitting, compared with brute force.

use std::time::Instant;

use modchar::brauer::clifford_oracle;
use modchar::permgrp::catalog;

fn main() {
    let cases = [
        ("A4", "S4", catalog::alternating(4), catalog::symmetric(4), 3),
        ("L2(7)", "PGL2(7)", catalog::psl2_7(), catalog::pgl2_7(), 7),
    ];
    for (hn, gn, h, g, p) in cases {
        let t = Instant::now();
        let r = clifford_oracle(&h, &g, (hn, gn), p, 0).unwrap();
        println!("{hn} < {gn} mod {p} over GF({}) in {:.2?}", r.field_order, t.elapsed());
        for c in &r.cases {
            println!("  {:?} over {:?}", c.kind, c.over);
        }
        println!("  {} survivor(s), matches brute force: {}", r.survivors, r.matches);
    }
}
