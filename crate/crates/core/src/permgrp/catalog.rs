//! Small groups used as test beds.

use super::{Perm, PermGroup};

fn group(n: usize, gens: Vec<Perm>) -> PermGroup {
    PermGroup::new(n, gens).expect("catalog group")
}

fn cyc(n: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(n, cycles).expect("catalog permutation")
}

/// `S_n` generated by `(1,2)` and `(1,2,..,n)`.
pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return group(n, vec![]);
    }
    let long: Vec<u32> = (1..=n as u32).collect();
    group(n, vec![cyc(n, &[&[1, 2]]), cyc(n, &[&long])])
}

/// `A_n` generated by `(1,2,3)` and an `(n-1)`- or `n`-cycle of even sign.
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return group(n, vec![]);
    }
    if n == 3 {
        return group(3, vec![cyc(3, &[&[1, 2, 3]])]);
    }
    let long: Vec<u32> = if n % 2 == 1 { (1..=n as u32).collect() } else { (2..=n as u32).collect() };
    group(n, vec![cyc(n, &[&[1, 2, 3]]), cyc(n, &[&long])])
}

/// Point index on the projective line over `F_p`: `0..p` for field elements and `p` for infinity.
fn mobius(p: u64, a: u64, b: u64, c: u64, d: u64) -> Perm {
    // x -> (a x + b) / (c x + d)
    let inv = |x: u64| (1..p).find(|y| x * y % p == 1).expect("unit");
    let inf = p;
    let img = |x: u64| -> u64 {
        if x == inf {
            return if c == 0 { inf } else { a * inv(c) % p };
        }
        let num = (a * x + b) % p;
        let den = (c * x + d) % p;
        if den == 0 {
            inf
        } else {
            num * inv(den) % p
        }
    };
    Perm::from_images((0..=p).map(|x| img(x) as u32).collect()).expect("mobius map")
}

/// `L2(7) = PSL(2,7)` acting on the 8 points of the projective line.
pub fn psl2_7() -> PermGroup {
    let p = 7;
    group(8, vec![mobius(p, 1, 1, 0, 1), mobius(p, 2, 0, 0, 1), mobius(p, 0, p - 1, 1, 0)])
}

/// `PGL(2,7)`: `L2(7)` extended by `x -> 3x`.
pub fn pgl2_7() -> PermGroup {
    let p = 7;
    group(
        8,
        vec![mobius(p, 1, 1, 0, 1), mobius(p, 2, 0, 0, 1), mobius(p, 0, p - 1, 1, 0), mobius(p, 3, 0, 0, 1)],
    )
}

/// `x -> 3x` in `PGL(2,7)`, an element outside `L2(7)`.
pub fn pgl2_7_outer() -> Perm {
    mobius(7, 3, 0, 0, 1)
}

/// A transposition of `S_n` (outside `A_n`).
pub fn transposition(n: usize) -> Perm {
    cyc(n, &[&[1, 2]])
}

/// `V = <(1,2)(3,4), (1,3)(2,4)>` inside `S_5`.
pub fn klein_four_in_s5() -> Vec<Perm> {
    let a = cyc(5, &[&[1, 2], &[3, 4]]);
    let b = cyc(5, &[&[1, 3], &[2, 4]]);
    vec![Perm::identity(5), a.clone(), b.clone(), a.mul(&b)]
}

/// A 3x3 matrix over `F_2` as the permutation `v -> v M` of the seven
/// nonzero row vectors (vector with bits `b0 b1 b2` is point `b0 + 2 b1 + 4 b2 - 1`).
pub fn gl3_2_matrix(rows: [[u8; 3]; 3]) -> Perm {
    let images = (1u32..8)
        .map(|v| {
            let mut w = 0u32;
            for (i, row) in rows.iter().enumerate() {
                if v >> i & 1 == 1 {
                    for (j, &e) in row.iter().enumerate() {
                        w ^= (e as u32 & 1) << j;
                    }
                }
            }
            w - 1
        })
        .collect();
    Perm::from_images(images).expect("invertible matrix")
}

/// Split BN-pair data of `SL(3,2)` on the seven nonzero vectors of `F_2^3`:
/// returns `(G, U, Coxeter generators of W)` with `U` the upper unitriangular
/// matrices and `W` the permutation matrices.
pub fn sl3_2_bn() -> (PermGroup, Vec<Perm>, Vec<Perm>) {
    let e12 = gl3_2_matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    let e23 = gl3_2_matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]]);
    let e13 = gl3_2_matrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]]);
    let s1 = gl3_2_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
    let s2 = gl3_2_matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
    let g = group(7, vec![e12.clone(), e23.clone(), s1.clone(), s2.clone()]);
    let u = super::closure(7, &[e12, e23, e13]).expect("unitriangular group");
    (g, u, vec![s1, s2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(5).order().unwrap(), 120);
        assert_eq!(alternating(4).order().unwrap(), 12);
        assert_eq!(alternating(5).order().unwrap(), 60);
        assert_eq!(psl2_7().order().unwrap(), 168);
        assert_eq!(pgl2_7().order().unwrap(), 336);
        assert!(!psl2_7().contains(&pgl2_7_outer()).unwrap());
        let (g, u, w) = sl3_2_bn();
        assert_eq!(g.order().unwrap(), 168);
        assert_eq!(u.len(), 8);
        assert_eq!(super::super::closure(7, &w).unwrap().len(), 6);
    }
}
