//! Character tables of enumerable permutation groups by simultaneous
//! diagonalisation of class matrices modulo a prime `q = 1 mod exp(G)`.

use std::collections::BTreeMap;

use super::table::{CharacterTable, ClassInfo, Character};
use super::ChartabError;
use crate::exact::{rat, Cyclotomic};
use crate::permgrp::{ConjugacyClasses, PermGroup};

fn mulm(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn powm(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, q);
        }
        a = mulm(a, a, q);
        e >>= 1;
    }
    r
}

fn invm(a: u64, q: u64) -> u64 {
    powm(a, q - 2, q)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(q: u64) -> u64 {
    let mut fs = Vec::new();
    let mut m = q - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            fs.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        fs.push(m);
    }
    (2..q).find(|&g| fs.iter().all(|&f| powm(g, (q - 1) / f, q) != 1)).expect("prime modulus")
}

/// Rows in reduced echelon form, pivots ascending.
fn rref(rows: &mut Vec<Vec<u64>>, q: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = invm(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, q);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..cols {
                    let s = mulm(f, rows[r][j], q);
                    rows[k][j] = (rows[k][j] + q - s) % q;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    rows.truncate(r);
    piv
}

/// Left kernel `{c : c m = 0}` of a square matrix.
fn left_kernel(m: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    // transpose, then right kernel from the rref
    let mut t: Vec<Vec<u64>> = (0..d).map(|j| (0..d).map(|i| m[i][j]).collect()).collect();
    let piv = rref(&mut t, q);
    let free: Vec<usize> = (0..d).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; d];
            v[f] = 1;
            for (r, &p) in piv.iter().enumerate() {
                v[p] = (q - t[r][f]) % q;
            }
            v
        })
        .collect()
}

/// Computes the table of an enumerable group. Classes are those of
/// [`PermGroup::conjugacy_classes`]; characters are sorted by degree with
/// the trivial character first and named `1a`, `1b`, `2a`, ...
pub fn dixon_schneider(g: &PermGroup, name: &str) -> Result<(CharacterTable, ConjugacyClasses), ChartabError> {
    let en = g.elements().map_err(|e| ChartabError::Group(e.to_string()))?;
    let cc = g.conjugacy_classes().map_err(|e| ChartabError::Group(e.to_string()))?;
    let n = en.len() as u64;
    let r = cc.len();
    let exponent = cc.orders.iter().fold(1u64, |a, &b| num_integer::Integer::lcm(&a, &b));
    let bound = 2 * ((n as f64).sqrt().ceil() as u64) + 1;
    let mut q = exponent + 1;
    while q <= bound || !is_prime(q) {
        q += exponent;
    }
    let z = primitive_root(q);

    // m[j][i][k] = #{y in C_j : g_i y in C_k}; u = chi/chi(1) satisfies m_j u = omega_j u
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for j in 0..r {
        for i in 0..r {
            for &y in &cc.members[j] {
                let k = cc.class_of[en.mul(cc.reps[i], y)];
                mats[j][i][k] += 1;
            }
        }
    }
    // spaces of row vectors x with x m_j^T = lambda x
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect()];
    for m in &mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for mut b in spaces {
            if b.len() == 1 {
                next.push(b);
                continue;
            }
            let piv = rref(&mut b, q);
            let d = b.len();
            // (b m^T)[s][i] = sum_k b[s][k] m[i][k]
            let img: Vec<Vec<u64>> =
                b.iter().map(|row| (0..r).map(|i| (0..r).fold(0, |acc, k| (acc + mulm(row[k], m[i][k] % q, q)) % q)).collect()).collect();
            let rest: Vec<Vec<u64>> = img.iter().map(|v| piv.iter().map(|&p| v[p]).collect()).collect();
            let mut found = 0;
            for lam in 0..q {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|s| (0..d).map(|t| if s == t { (rest[s][t] + q - lam) % q } else { rest[s][t] }).collect())
                    .collect();
                let ker = left_kernel(&shifted, q);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                next.push(
                    ker.iter()
                        .map(|c| (0..r).map(|k| (0..d).fold(0, |acc, s| (acc + mulm(c[s], b[s][k], q)) % q)).collect())
                        .collect(),
                );
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(ChartabError::Group("class matrices are not simultaneously diagonalisable".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(ChartabError::Group("eigenspaces did not split into lines".into()));
    }
    let inv_class = cc.inverse_classes(&en);
    // class of g_k^t for every t, computed from the enumeration
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|k| {
            let x = en.get(cc.reps[k]);
            let mut acc = g.identity();
            (0..cc.orders[k])
                .map(|_| {
                    let c = cc.class_of[en.index_of(&acc).expect("closed")];
                    acc = acc.mul(x);
                    c
                })
                .collect()
        })
        .collect();
    let mut chars: Vec<(Vec<u64>, Vec<Cyclotomic>)> = Vec::new();
    for sp in spaces {
        let mut u = sp.into_iter().next().expect("line");
        let lead = u[0];
        if lead == 0 {
            return Err(ChartabError::Group("eigenvector vanishes at the identity".into()));
        }
        let il = invm(lead, q);
        for x in u.iter_mut() {
            *x = mulm(*x, il, q);
        }
        let s = (0..r).fold(0, |acc, k| (acc + mulm(cc.sizes[k] as u64 % q, mulm(u[k], u[inv_class[k]], q), q)) % q);
        let d2 = mulm(n % q, invm(s, q), q);
        let deg = (1..=((n as f64).sqrt() as u64 + 1))
            .find(|&d| mulm(d, d, q) == d2)
            .ok_or_else(|| ChartabError::Group("no admissible degree".into()))?;
        let modq: Vec<u64> = u.iter().map(|&x| mulm(x, deg, q)).collect();
        let mut vals = Vec::with_capacity(r);
        for k in 0..r {
            let o = cc.orders[k];
            let zeta = powm(z, (q - 1) / o, q);
            let inv_o = invm(o % q, q);
            let mut v = Cyclotomic::zero();
            for j in 0..o {
                let mut s = 0;
                for t in 0..o {
                    let w = powm(zeta, (o - (j * t) % o) % o, q);
                    s = (s + mulm(modq[powers[k][t as usize]], w, q)) % q;
                }
                let mult = mulm(s, inv_o, q);
                if mult > deg {
                    return Err(ChartabError::Group("eigenvalue multiplicity out of range".into()));
                }
                if mult > 0 {
                    v = v.add(&Cyclotomic::root_of_unity(o, j as i64).scale(&rat(mult as i64)));
                }
            }
            vals.push(v);
        }
        chars.push((modq, vals));
    }
    chars.sort_by(|a, b| {
        let key = |c: &(Vec<u64>, Vec<Cyclotomic>)| (c.1[0].to_rational(), c.1.iter().any(|v| *v != Cyclotomic::one()));
        key(a).cmp(&key(b)).then_with(|| a.0.cmp(&b.0))
    });
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    let irreducibles = chars
        .into_iter()
        .map(|(_, vals)| {
            let chi = Character::new("", vals);
            let d = chi.degree_int().expect("integral degree");
            let k = count.entry(d).or_insert(0);
            let nm = format!("{d}{}", letter(*k));
            *k += 1;
            Character { name: nm, ..chi }
        })
        .collect();
    let classes = (0..r)
        .map(|k| ClassInfo {
            name: cc.names[k].clone(),
            order: cc.orders[k],
            size: cc.sizes[k] as u64,
            centralizer: cc.centralizers[k] as u64,
        })
        .collect();
    let power_maps = cc.power_maps.clone();
    let t = CharacterTable { name: name.to_string(), order: n, prime: None, classes, power_maps, irreducibles };
    Ok((t, cc))
}

fn letter(mut i: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    fn degrees(t: &CharacterTable) -> Vec<i64> {
        t.irreducibles.iter().map(|c| c.degree_int().unwrap()).collect()
    }

    #[test]
    fn small_tables_validate() {
        for (g, name, degs) in [
            (catalog::symmetric(3), "S3", vec![1, 1, 2]),
            (catalog::symmetric(4), "S4", vec![1, 1, 2, 3, 3]),
            (catalog::alternating(4), "A4", vec![1, 1, 1, 3]),
            (catalog::alternating(5), "A5", vec![1, 3, 3, 4, 5]),
            (catalog::symmetric(5), "S5", vec![1, 1, 4, 4, 5, 5, 6]),
            (catalog::psl2_7(), "L2(7)", vec![1, 3, 3, 6, 7, 8]),
        ] {
            let (t, _) = dixon_schneider(&g, name).unwrap();
            assert!(t.validate().is_empty(), "{name}: {:?}", t.validate());
            assert_eq!(degrees(&t), degs, "{name}");
            assert_eq!(t.trivial_index(), Some(0));
        }
    }

    #[test]
    fn a5_has_golden_ratio_values() {
        let (t, _) = dixon_schneider(&catalog::alternating(5), "A5").unwrap();
        let three = &t.irreducibles[1];
        assert!(three.values.iter().any(|v| !v.is_rational()));
        let five_a = t.classes.iter().position(|c| c.order == 5).unwrap();
        let v = &three.values[five_a];
        let w = &t.irreducibles[2].values[five_a];
        assert!(!v.is_rational());
        assert_eq!(v.mul(w), Cyclotomic::from_int(-1));
        assert_eq!(v.add(w), Cyclotomic::one());
    }
}
