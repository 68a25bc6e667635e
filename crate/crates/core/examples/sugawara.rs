//! Virasoro modes acting on the Fock space, and the Jordan cell at weight zero.

use symfer::fockspace::{BasisWord, Chirality, FockSpace, Generator, GroundName, State};
use symfer::virasoro::{commutator_defect, jordan_defect, sugawara, VirasoroMode};

fn main() {
    let fs = FockSpace::non_chiral();
    let omega = fs.ground_state(GroundName::Omega).unwrap();
    let one = fs.ground_state(GroundName::One).unwrap();

    for n in [0, -1, -2] {
        let l = VirasoroMode::holo(n);
        println!("{l} omega = {}", sugawara(&fs, l, &omega).unwrap());
    }
    println!("Lbar(-1) omega = {}", sugawara(&fs, VirasoroMode::anti(-1), &omega).unwrap());
    println!("L(-1) one = {}", sugawara(&fs, VirasoroMode::holo(-1), &one).unwrap());

    let (first, second) = jordan_defect(&fs, Chirality::Holo, &BasisWord::OMEGA).unwrap();
    println!("(L(0) - 0) omega = {first}, (L(0) - 0)^2 omega = {second}");

    let v: State = fs.apply_sequence(&[Generator::eta(-3)], &omega).unwrap();
    for (n, m) in [(2, -2), (3, -1), (-1, -2)] {
        let d = commutator_defect(&fs, n, m, Chirality::Holo, &v).unwrap();
        println!("[L({n}), L({m})] - ({}) L({}) - central on {v}: {d}", n - m, n + m);
    }
}
