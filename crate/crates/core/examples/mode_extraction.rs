//! Correlators of excited fields, and one mode extracted by an explicit contour.

use num_complex::Complex64;
use symfer::correlators::{evaluate_with_error, mode_extract, CorrelatorQuery};
use symfer::fockspace::{FockSpace, Generator, GroundName, State};
use symfer::geometry::Domain;
use symfer::virasoro::{sugawara, VirasoroMode};

fn main() {
    let fs = FockSpace::non_chiral();
    let z = Complex64::new(0.1, 0.0);
    let w = Complex64::new(-0.3, 0.2);
    let theta = fs.ground_state(GroundName::Theta).unwrap();
    let omega = State::omega();

    let l1 = sugawara(&fs, VirasoroMode::holo(-1), &omega).unwrap();
    let fields = vec![(l1, z), (fs.ground_state(GroundName::Xi).unwrap(), w), (theta.clone(), Complex64::new(0.4, 0.4))];
    let q = CorrelatorQuery::new(Domain::disk(), Complex64::new(0.0, 0.0), fields);
    let e = evaluate_with_error(&q, 128).unwrap();
    println!("<[L(-1) omega](z) xi theta> = {:.12} (error estimate {:.1e})", e.value, e.abs_err_estimate);

    let q = CorrelatorQuery::new(Domain::disk(), Complex64::new(0.0, 0.0), vec![(omega, z), (theta, w)]);
    for g in [Generator::chi(0), Generator::chi(-1), Generator::chibar(-1), Generator::eta(1)] {
        println!("{g} extracted at z: {:.12}", mode_extract(&q, 0, g, 128).unwrap());
    }
}
