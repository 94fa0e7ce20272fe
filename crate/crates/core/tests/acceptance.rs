//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::error::Error;
use std::time::{Duration, Instant};

use modchar::brauer::{
    brute_force_decomposition, clifford_oracle, decompose_block, default_recipes, epsilon_row_permutation, epsilon_twist_columns, expand_nonbasic,
    fixtures, peel_pims, solve_parameters, DecMat, PeelMode,
};
use modchar::chartab::{block_partition, dixon_schneider};
use modchar::exact::{param_solve, Assignment};
use modchar::gfla::{Elem, FieldSpec, GFMatrix};
use modchar::mtxcond::{chop, iso, spin, trace_formula_average, FGModule, MatrixCondensation};
use modchar::permgrp::{catalog, steinberg_element_module, BNData};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod support;

type Outcome = Result<String, Box<dyn Error>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

fn assignment(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn sorted_columns(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut cols: Vec<Vec<i64>> = (0..ncols).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    cols.sort();
    cols
}

fn mod3_fixture() -> Outcome {
    let b1 = fixtures::mod3_b1()?;
    let full = expand_nonbasic(&b1, &fixtures::mod3_b1_relations()?)?;
    let a = assignment(&[("a", 3), ("at", 1)]);
    ensure!(b1.sys.first_violation(&a)?.is_none(), "a = 3, at = 1 is not admissible");
    let m = full.matrix.specialize(&a)?;
    ensure!(m.iter().flatten().all(|&x| x >= 0), "negative entry in the expanded matrix");

    // column 0 of the projective table is Phi_32
    let proj = fixtures::mod3_b1_projectives()?;
    for (r, name) in b1.matrix.rows.iter().enumerate() {
        let pr = proj.matrix.rows.iter().position(|n| n == name).ok_or(format!("row {name} missing from the projectives"))?;
        let e = &b1.matrix.entries[r];
        let rhs = proj.matrix.entries[pr][0].sub(&e[4].scale(2)).sub(&e[9].scale(3)).sub(&e[10].scale(2));
        ensure!(rhs == e[0], "Phi_1 identity fails on row {name}");
    }

    // the projective list is not closed under the twist; each column and its
    // twist must instead be a nonnegative combination of the PIMs at a = 3
    let pims: Vec<Vec<i64>> = (0..m[0].len()).map(|j| (0..b1.matrix.nrows()).map(|r| m[r][j]).collect()).collect();
    let eps = epsilon_row_permutation(&b1.matrix.rows)?;
    let pm = proj.matrix.to_ints().ok_or("parametrised projectives")?;
    let row_of = |name: &String| proj.matrix.rows.iter().position(|n| n == name);
    for j in 0..proj.matrix.ncols {
        let col: Vec<i64> = b1.matrix.rows.iter().map(|n| row_of(n).map_or(0, |r| pm[r][j])).collect();
        let mut tw = vec![0i64; col.len()];
        for (r, &x) in col.iter().enumerate() {
            tw[eps[r]] = x;
        }
        for c in [&col, &tw] {
            let cert = peel_pims(c, &pims, PeelMode::Forced)?;
            ensure!(cert.remainder.iter().all(|&x| x == 0) && cert.multiplicities.iter().all(|&x| x >= 0), "projective {} is not a sum of PIMs", j + 32);
        }
    }

    let basic_rows = b1.matrix.nrows();
    let tables: [(&str, DecMat); 4] = [
        ("mod3 B1", b1),
        ("mod3 B2", fixtures::mod3_b2()?),
        ("mod3 B9", fixtures::mod3_b9()?),
        ("mod7 B1", fixtures::mod7_b1()?),
    ];
    for (name, d) in &tables {
        let cols: Vec<usize> = (0..d.matrix.ncols).collect();
        ensure!(epsilon_twist_columns(&d.matrix, &cols)?.is_some(), "epsilon twist is not a column involution on {name}");
    }
    Ok(format!("{} entries nonnegative at a=3, at=1; Phi_1 identity symbolic on {} rows; twist on {} matrices and {} projectives", m.len() * m[0].len(), basic_rows, tables.len(), proj.matrix.ncols))
}

fn mod7_fixture() -> Outcome {
    let d = fixtures::mod7_b1()?;
    let mut sys = d.sys.clone();
    sys.merge(&fixtures::mod7_b1_projectives()?.sys)?;
    let mut facts = fixtures::mod7_projective_facts()?;
    let r = solve_parameters(&sys, &facts)?;
    let mut want: Vec<Assignment> = param_solve(&sys).into_iter().filter(|a| a["d"] == a["at"] && a["b"] == 1).collect();
    let mut got = r.survivors.clone();
    want.sort();
    got.sort();
    ensure!(!got.is_empty() && got == want, "survivors are not the set d = at, b = 1: {got:?}");
    let n = got.len();
    facts.extend(fixtures::mod7_trace_facts()?);
    let r = solve_parameters(&sys, &facts)?;
    ensure!(!r.survivors.is_empty(), "trace fact leaves no survivor");
    ensure!(r.survivors.iter().all(|a| a["c"] == 1 && a["b"] == 1), "c or b is not 1 on every survivor");
    Ok(format!("{n} survivors, exactly d = at and b = 1; with traces {} survivors, all c = 1", r.survivors.len()))
}

fn condensed_degrees() -> Outcome {
    let f = fixtures::mod7_condensed_factors()?;
    ensure!(f.degrees == [720, 720, 3711, 18555, 39900, 67466], "unexpected degrees {:?}", f.degrees);
    ensure!(f.condensed_dim() == 1 << 17, "sum {}", f.condensed_dim());
    Ok(format!("degrees sum to {} = 2^17", f.condensed_dim()))
}

fn trace_formula() -> Outcome {
    let g = catalog::symmetric(5);
    let (t, cl) = dixon_schneider(&g, "S5")?;
    let bf = brute_force_decomposition(&g, &t, &cl, 3, None, 0)?;
    let en = g.elements()?;
    let v = catalog::klein_four_in_s5();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let ys: Vec<usize> = (0..20).map(|_| rng.gen_range(0..en.len())).collect();
    let mut checks = 0;
    for (k, m) in bf.modules.iter().enumerate() {
        let mats = m.element_matrices(&en)?;
        let vm: Vec<GFMatrix> = v.iter().map(|x| mats[en.index_of(x).unwrap()].clone()).collect();
        let c = MatrixCondensation::new(&vm)?;
        for &y in &ys {
            let lhs = if c.dim() == 0 { 0 } else { c.condense(&mats[y])?.trace()? };
            // Brauer character of yv read at its 3-regular part
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for x in &v {
                let gv = en.get(y).mul(x);
                let o = gv.order();
                let mut n = o;
                while n % 3 == 0 {
                    n /= 3;
                }
                let e = (0..n).map(|s| s * (o / n)).find(|e| e % n == 1 % n).unwrap();
                let reg = cl.class_of[en.index_of(&gv.pow(e as i64)).unwrap()];
                let pos = bf.regular.iter().position(|&r| r == reg).ok_or("p'-part is not p-regular")?;
                *counts.entry(pos).or_default() += 1;
            }
            let dist: Vec<_> = counts.iter().map(|(&pos, &n)| (bf.ibr[k][pos].clone(), n)).collect();
            let rhs = trace_formula_average(&dist, v.len())?.reduce_mod_p(m.field())?;
            ensure!(lhs == rhs, "factor {k}, element {y}: trace {lhs} vs average {rhs}");
            checks += 1;
        }
    }
    Ok(format!("{} factors x {} elements, {checks} exact matches", bf.modules.len(), ys.len()))
}

fn clifford() -> Outcome {
    let cases = [
        ("A4", "S4", catalog::alternating(4), catalog::symmetric(4), 3),
        ("A5", "S5", catalog::alternating(5), catalog::symmetric(5), 3),
        ("A5", "S5", catalog::alternating(5), catalog::symmetric(5), 5),
        ("L2(7)", "PGL2(7)", catalog::psl2_7(), catalog::pgl2_7(), 3),
        ("L2(7)", "PGL2(7)", catalog::psl2_7(), catalog::pgl2_7(), 7),
    ];
    let start = Instant::now();
    let mut parts = Vec::new();
    for (hn, gn, h, g, p) in cases {
        let r = clifford_oracle(&h, &g, (hn, gn), p, 0)?;
        ensure!(r.cases_consistent, "{hn} < {gn} mod {p}: case classification fails");
        ensure!(r.survivors > 0 && r.matches, "{hn} < {gn} mod {p}: {} survivors, matches {}", r.survivors, r.matches);
        parts.push(format!("{gn}/{p}"));
    }
    let el = start.elapsed();
    ensure!(el < Duration::from_secs(300), "took {el:.1?}");
    Ok(format!("{} reproduced in {el:.1?}", parts.join(", ")))
}

/// Composition factors by exhaustion: the smallest cyclic submodule is
/// irreducible; split it off and recurse on the quotient.
fn brute_factors(m: &FGModule) -> Result<Vec<FGModule>, Box<dyn Error>> {
    let d = m.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let q = m.field().q() as usize;
    let mut best: Option<modchar::gfla::Echelon> = None;
    let mut v = vec![0 as Elem; d];
    for lead in 0..d {
        // vectors with first nonzero entry 1 at `lead`
        let tail = d - lead - 1;
        for code in 0..q.pow(tail as u32) {
            v.iter_mut().for_each(|x| *x = 0);
            v[lead] = 1;
            let mut c = code;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (c % q) as Elem;
                c /= q;
            }
            let s = spin(m, &v)?;
            if best.as_ref().map_or(true, |b| s.len() < b.len()) {
                best = Some(s);
            }
        }
    }
    let s = best.expect("nonzero module");
    let basis = GFMatrix::from_rows(m.field(), d, s.basis_rows());
    let mut out = vec![m.submodule(&basis)?];
    let (quot, _) = m.quotient(&s)?;
    out.extend(brute_factors(&quot)?);
    Ok(out)
}

fn steinberg() -> Outcome {
    let (g, u, cox) = catalog::sl3_2_bn();
    let (t, cl) = dixon_schneider(&g, "SL(3,2)")?;
    let st = t.irreducibles.iter().find(|c| c.degree_int() == Some(8)).ok_or("no degree 8 character")?;
    let en = g.elements()?;
    let bn = BNData::new(g, u, cox)?;
    let mut notes = Vec::new();
    for p in [3u32, 7] {
        let f = FieldSpec::prime(p)?;
        let m = steinberg_element_module(&bn, &f)?;
        ensure!(m.dim() == 8, "dim {} over F{p}", m.dim());
        let mats = m.element_matrices(&en)?;
        let reg = t.p_regular(p as u64);
        for &c in &reg {
            let tr = mats[cl.reps[c]].trace()?;
            ensure!(tr == st.values[c].reduce_mod_p(&f)?, "F{p} trace on class {} is {tr}", t.classes[c].name);
        }
        notes.push(format!("F{p}: dim 8, {} regular classes", reg.len()));
        if p == 3 {
            let series = chop(&m, 0)?;
            let mut chopped: Vec<usize> = series.dims().iter().flat_map(|&(d, k)| std::iter::repeat(d).take(k)).collect();
            let brute = brute_factors(&m)?;
            let mut bd: Vec<usize> = brute.iter().map(FGModule::dim).collect();
            chopped.sort();
            bd.sort();
            ensure!(chopped == bd, "chop {chopped:?} vs exhaustive {bd:?}");
            for b in &brute {
                let mut found = false;
                for fct in &series.factors {
                    if iso(b, &fct.module)?.is_some() {
                        found = true;
                        break;
                    }
                }
                ensure!(found, "exhaustive factor of dim {} not among the chop factors", b.dim());
            }
            notes.push(format!("F3 factors {bd:?} agree"));
        }
    }
    Ok(notes.join("; "))
}

fn basic_set_reconstruction() -> Outcome {
    let g = catalog::alternating(5);
    let (t, cl) = dixon_schneider(&g, "A5")?;
    let bf = brute_force_decomposition(&g, &t, &cl, 3, None, 0)?;
    let principal = [t.char_index("1a").ok_or("1a")?, t.char_index("4a").ok_or("4a")?];
    let recipes = default_recipes(&t, 3);
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for b in block_partition(&t, 3)? {
        let basic: Vec<usize> = if b.contains(principal[0]) { principal.to_vec() } else { b.members.clone() };
        let dec = decompose_block(&t, 3, &basic, None, &recipes)?;
        ensure!(expand_nonbasic(&dec.basic, &dec.relations)? == dec.full, "expansion differs in block {}", b.label);
        let m = dec.full.matrix.to_ints().ok_or("parametrised result")?;
        for j in 0..dec.full.matrix.ncols {
            let mut c = vec![0i64; t.irreducibles.len()];
            for (r, name) in dec.full.matrix.rows.iter().enumerate() {
                c[t.char_index(name).ok_or("row name")?] = m[r][j];
            }
            cols.push(c);
        }
    }
    cols.sort();
    ensure!(cols == sorted_columns(&bf.d), "reconstruction {cols:?} differs from brute force {:?}", bf.d);
    Ok(format!("{} PIM columns equal the brute-force matrix", cols.len()))
}

fn random_f3(rng: &mut ChaCha8Rng, n: usize) -> GFMatrix {
    let f = FieldSpec::prime(3).unwrap();
    GFMatrix::from_vec(&f, n, n, (0..n * n).map(|_| rng.gen_range(0..3) as Elem).collect()).unwrap()
}

fn matmul_speed() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (a, b) = (random_f3(&mut rng, 2048), random_f3(&mut rng, 2048));
    let start = Instant::now();
    let c = a.mul(&b)?; // dispatches to the packed kernel
    let el = start.elapsed();
    ensure!(c.rows() == 2048 && el <= Duration::from_secs(5), "2048 product took {el:.2?}");
    let (a, b) = (random_f3(&mut rng, 256), random_f3(&mut rng, 256));
    ensure!(a.mul(&b)? == a.mul_generic(&b), "packed and generic products differ at 256");
    Ok(format!("2048x2048 over F3 in {el:.2?}; 256x256 packed = generic"))
}

fn properties() -> Outcome {
    let cases = 100;
    let run = |name: &str, f: &mut dyn FnMut(&mut TestRunner) -> Result<(), String>| -> Result<String, String> {
        let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
        f(&mut runner).map_err(|e| format!("{name}: {e}"))?;
        Ok(name.to_string())
    };
    let mut done = Vec::new();
    done.push(run("rref idempotence", &mut |r| {
        r.run(&support::fmat(), |a| {
            let m = a.rref().matrix;
            prop_assert_eq!(m.rref().matrix, m);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    done.push(run("rank subadditivity", &mut |r| {
        r.run(&support::chain(), |(a, b)| {
            prop_assert!(a.mul(&b).unwrap().rank() <= a.rank().min(b.rank()));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    done.push(run("kron multiplicativity", &mut |r| {
        r.run(&support::kron_quad(), |(a, c, b, d)| {
            prop_assert_eq!(a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap(), a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    done.push(run("reduction homomorphism", &mut |r| {
        r.run(&support::reduction_case(), |(p, n, a, b)| {
            let f = FieldSpec::canonical(p, FieldSpec::splitting_degree(p, n).unwrap()).unwrap();
            let red = |x: &modchar::exact::Cyclotomic| x.reduce_mod_p(&f).unwrap();
            prop_assert_eq!(red(&a.add(&b)), f.add(red(&a), red(&b)));
            prop_assert_eq!(red(&a.mul(&b)), f.mul(red(&a), red(&b)));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    done.push(run("param_solve = nested loops", &mut |r| {
        r.run(&support::system(), |s| {
            prop_assert_eq!(param_solve(&support::build(&s)), support::nested_loops(&s));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    done.push(run("chop seed determinism", &mut |r| {
        r.run(&(support::module(), any::<u64>()), |(m, seed)| {
            let (a, b) = (chop(&m, seed).unwrap(), chop(&m, seed).unwrap());
            prop_assert_eq!(&a.certificate, &b.certificate);
            prop_assert_eq!(a.dims(), b.dims());
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);
    Ok(format!("{} suites x {cases} cases: {}", done.len(), done.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("mod-3 fixture regression", mod3_fixture, Duration::from_secs(1)),
        ("mod-7 parameter resolution", mod7_fixture, Duration::from_secs(1)),
        ("condensed dimension", condensed_degrees, Duration::from_secs(1)),
        ("trace formula on S5 mod 3", trace_formula, Duration::from_secs(10)),
        ("Clifford oracle", clifford, Duration::from_secs(300)),
        ("Steinberg module of SL(3,2)", steinberg, Duration::from_secs(30)),
        ("basic-set reconstruction A5 mod 3", basic_set_reconstruction, Duration::from_secs(30)),
        ("packed F3 multiplication", matmul_speed, Duration::from_secs(60)),
        ("property suites", properties, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let el = start.elapsed();
        let r = r.and_then(|s| if el <= *limit { Ok(s) } else { Err(format!("{el:.2?} exceeds {limit:?}").into()) });
        match r {
            Ok(s) => println!("criterion {}: PASS  {name} ({el:.2?}): {s}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({el:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
