//! Character table of A5 from its permutation representation, its 3- and
//! 5-blocks, and the labels of S5 characters over A5.

use modchar::chartab::{block_partition, dixon_schneider, fusion_from_groups, label_extension, write_table};
use modchar::permgrp::catalog;

fn main() {
    let (h, g) = (catalog::alternating(5), catalog::symmetric(5));
    let (th, hc) = dixon_schneider(&h, "A5").unwrap();
    let (tg, gc) = dixon_schneider(&g, "S5").unwrap();
    print!("{}", write_table(&th));
    assert!(th.validate().is_empty());
    for p in [2, 3, 5] {
        let blocks = block_partition(&th, p).unwrap();
        let desc: Vec<String> = blocks
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.members.iter().map(|&i| th.irreducibles[i].name.as_str()).collect();
                format!("{{{}}} defect {}", names.join(" "), b.defect)
            })
            .collect();
        println!("p = {p}: {}", desc.join(", "));
    }
    let f = fusion_from_groups(("A5", "S5"), &h, &hc, &g, &gc).unwrap();
    let x = (0..tg.nclasses()).find(|j| !f.map.contains(j)).unwrap();
    let lab = label_extension(&th, &tg, &f, x).unwrap();
    for (chi, name) in tg.irreducibles.iter().zip(lab.names(&th, &tg)) {
        println!("{:>4} = {name}", chi.name);
    }
}
