//! Mode action, normal ordering and basis counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use symfer::fockspace::{Bidegree, FockSpace, Generator, GroundName};

fn main() {
    let fs = FockSpace::non_chiral();
    let omega = fs.ground_state(GroundName::Omega).unwrap();

    let v = fs
        .apply_sequence(&[Generator::chi(-1), Generator::eta(-2), Generator::chibar(-1)], &omega)
        .unwrap();
    println!("chi(-1) eta(-2) chibar(-1) omega = {v}");

    // chi(k) strips eta(-k) when present.
    println!("chi(1) on it  = {}", fs.apply_generator(Generator::chi(1), &v).unwrap());
    println!("chi(2) on it  = {}", fs.apply_generator(Generator::chi(2), &v).unwrap());

    let raw = [Generator::eta(1), Generator::chi(-1), Generator::eta(0), Generator::chi(0)];
    println!("normal order of eta(1) chi(-1) eta(0) chi(0) = {}", fs.normal_order(&raw).unwrap());

    for name in [GroundName::One, GroundName::Xi, GroundName::Theta, GroundName::EtaCur] {
        println!("{name:?} = {}", fs.ground_state(name).unwrap());
    }

    let chiral = FockSpace::chiral();
    let counts: Vec<usize> = (0..7).map(|d| chiral.enumerate_basis(Bidegree::new(d, 0)).len()).collect();
    println!("chiral basis sizes by degree: {counts:?}");
    println!("non-chiral words with total degree <= 4: {}", fs.basis_up_to(4, 4, 4).len());

    let a = BigRational::new(BigInt::from(1), BigInt::from(2));
    println!("omega under the alpha = 1/2 automorphism: {}", fs.automorphism_alpha(&a, &omega).unwrap());
}
