//! Exact cyclotomic arithmetic and reduction modulo a prime.

use modchar::exact::Cyclotomic;
use modchar::gfla::FieldSpec;

fn main() {
    let z = |e| Cyclotomic::root_of_unity(5, e);
    // the golden-ratio irrationality of A5
    let b5 = z(1).add(&z(4));
    println!("b5 = {b5}, b5^2 + b5 - 1 = {}", b5.mul(&b5).add(&b5).sub(&Cyclotomic::one()));
    println!("sign of b5: {:?}, of its Galois conjugate: {:?}", b5.real_sign().unwrap(), b5.galois(2).real_sign().unwrap());

    // GF(11) contains the fifth roots of unity; GF(3) needs degree 4
    for (p, k) in [(11, 1), (3, 4)] {
        let f = FieldSpec::canonical(p, k).unwrap();
        println!("b5 mod GF({}) = {}", f.q(), b5.reduce_mod_p(&f).unwrap());
    }
    let half = Cyclotomic::from_rational(modchar::exact::Rational::new(1.into(), 2.into()));
    println!("1/2 mod 2: {:?}", half.reduce_mod_p(&FieldSpec::prime(2).unwrap()).err());
}
