//! Bit-sliced multiplication kernels for `F_2` and `F_3`.
//!
//! `F_3` rows are stored as two bit planes: `ones` marks entries equal to 1,
//! `twos` marks entries equal to 2.

use super::field::Elem;
use super::matrix::GFMatrix;

#[derive(Clone)]
struct F3Row {
    ones: Vec<u64>,
    twos: Vec<u64>,
}

#[inline]
fn f3_add_into(acc_ones: &mut [u64], acc_twos: &mut [u64], b_ones: &[u64], b_twos: &[u64]) {
    for i in 0..acc_ones.len() {
        let (a1, a2, b1, b2) = (acc_ones[i], acc_twos[i], b_ones[i], b_twos[i]);
        let az = !(a1 | a2);
        let bz = !(b1 | b2);
        acc_ones[i] = (a1 & bz) | (b1 & az) | (a2 & b2);
        acc_twos[i] = (a2 & bz) | (b2 & az) | (a1 & b1);
    }
}

fn pack_f3(row: &[Elem], words: usize) -> F3Row {
    let mut ones = vec![0u64; words];
    let mut twos = vec![0u64; words];
    for (j, &a) in row.iter().enumerate() {
        match a {
            1 => ones[j / 64] |= 1 << (j % 64),
            2 => twos[j / 64] |= 1 << (j % 64),
            _ => {}
        }
    }
    F3Row { ones, twos }
}

fn pack_f2(row: &[Elem], words: usize) -> Vec<u64> {
    let mut bits = vec![0u64; words];
    for (j, &a) in row.iter().enumerate() {
        if a == 1 {
            bits[j / 64] |= 1 << (j % 64);
        }
    }
    bits
}

/// Product of two prime-field matrices over `F_2` or `F_3`.
pub fn mul_packed(a: &GFMatrix, b: &GFMatrix) -> GFMatrix {
    let f = a.field();
    let m = b.cols();
    let words = m.div_ceil(64);
    let mut out = GFMatrix::zeros(f, a.rows(), m);
    match f.p() {
        2 => {
            let packed: Vec<Vec<u64>> = (0..b.rows()).map(|k| pack_f2(b.row(k), words)).collect();
            let mut acc = vec![0u64; words];
            for i in 0..a.rows() {
                acc.iter_mut().for_each(|w| *w = 0);
                for (k, &x) in a.row(i).iter().enumerate() {
                    if x == 1 {
                        for (w, &bw) in acc.iter_mut().zip(&packed[k]) {
                            *w ^= bw;
                        }
                    }
                }
                let orow = out.row_mut(i);
                for (j, o) in orow.iter_mut().enumerate() {
                    *o = ((acc[j / 64] >> (j % 64)) & 1) as Elem;
                }
            }
        }
        3 => {
            let packed: Vec<F3Row> = (0..b.rows()).map(|k| pack_f3(b.row(k), words)).collect();
            let mut ones = vec![0u64; words];
            let mut twos = vec![0u64; words];
            for i in 0..a.rows() {
                ones.iter_mut().for_each(|w| *w = 0);
                twos.iter_mut().for_each(|w| *w = 0);
                for (k, &x) in a.row(i).iter().enumerate() {
                    let r = &packed[k];
                    match x {
                        1 => f3_add_into(&mut ones, &mut twos, &r.ones, &r.twos),
                        2 => f3_add_into(&mut ones, &mut twos, &r.twos, &r.ones),
                        _ => {}
                    }
                }
                let orow = out.row_mut(i);
                for (j, o) in orow.iter_mut().enumerate() {
                    let bit = 1u64 << (j % 64);
                    *o = if ones[j / 64] & bit != 0 {
                        1
                    } else if twos[j / 64] & bit != 0 {
                        2
                    } else {
                        0
                    };
                }
            }
        }
        _ => unreachable!("packed kernels exist for F_2 and F_3 only"),
    }
    out
}
