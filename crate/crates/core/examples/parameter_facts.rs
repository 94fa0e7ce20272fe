//! Resolving the parameters of the shipped principal-block matrices.

use modchar::brauer::{fixtures, solve_parameters};

fn main() {
    let d = fixtures::mod7_b1().unwrap();
    let mut sys = d.sys.clone();
    sys.merge(&fixtures::mod7_b1_projectives().unwrap().sys).unwrap();
    let mut facts = fixtures::mod7_projective_facts().unwrap();
    for with_traces in [false, true] {
        if with_traces {
            facts.extend(fixtures::mod7_trace_facts().unwrap());
        }
        let r = solve_parameters(&sys, &facts).unwrap();
        println!("mod 7, {} facts: {} survivor(s)", facts.len(), r.survivors.len());
        for s in &r.survivors {
            println!("  {s:?}");
        }
    }

    let d = fixtures::mod3_b1().unwrap();
    let r = solve_parameters(&d.sys, &fixtures::mod3_b1_facts().unwrap()).unwrap();
    println!("mod 3: {:?}", r.unique());
    let f = fixtures::mod7_condensed_factors().unwrap();
    println!("condensed degrees {:?} fill dimension {}", f.degrees, f.condensed_dim());
}
