//! Dense matrix product over GF(3): bit-packed kernel against the generic one.

use std::time::Instant;

use modchar::gfla::{Elem, FieldSpec, GFMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random(f: &FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> GFMatrix {
    let data = (0..n * n).map(|_| rng.gen_range(0..f.q()) as Elem).collect();
    GFMatrix::from_vec(f, n, n, data).unwrap()
}

fn main() {
    let f = FieldSpec::prime(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let n = 1024;
    let a = random(&f, n, &mut rng);
    let b = random(&f, n, &mut rng);
    let t = Instant::now();
    let c = a.mul(&b).unwrap();
    println!("{n}x{n} product in {:.2?}, rank {}", t.elapsed(), c.rank());

    let (a, b) = (random(&f, 200, &mut rng), random(&f, 200, &mut rng));
    assert_eq!(a.mul(&b).unwrap(), a.mul_generic(&b));
    println!("packed and generic agree on 200x200");
}
