//! Transformation of the omega one-point function under conformal maps.

use num_complex::Complex64;
use symfer::correlators::{covariance_check, general_correlator, CorrelatorQuery, CovarianceMap};
use symfer::fockspace::State;
use symfer::geometry::{Domain, Mobius};

fn main() {
    let alpha = Complex64::new(0.3, 0.0);
    let q = CorrelatorQuery::new(Domain::disk(), alpha, vec![(State::omega(), Complex64::new(0.2, -0.3))]);
    let m = Mobius::disk_automorphism(0.7, Complex64::new(0.4, 0.1));
    let (lhs, rhs) = covariance_check(CovarianceMap::Mobius(m), &q, 128).unwrap();
    println!("disk automorphism: {lhs:.14} vs {rhs:.14}");

    let q = CorrelatorQuery::new(Domain::quadrant(), alpha, vec![(State::omega(), Complex64::new(0.5, 1.5))]);
    let (lhs, rhs) = covariance_check(CovarianceMap::Chart, &q, 128).unwrap();
    println!("quadrant chart:    {lhs:.14} vs {rhs:.14}");

    // Scaling the half-plane shifts omega by a constant.
    let h = Domain::half_plane();
    let at = |y: f64| general_correlator(&CorrelatorQuery::new(h.clone(), alpha, vec![(State::omega(), Complex64::new(0.0, y))]), 64).unwrap();
    for lambda in [0.5, 2.0, 3.0] {
        println!("lambda = {lambda}: <omega(i)> - <omega(lambda i)> = {:.12}", (at(1.0) - at(lambda)).re);
    }
}
