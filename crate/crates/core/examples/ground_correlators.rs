//! Correlators of the ground fields: determinants, the omega one-point function
//! and the log partner.

use num_complex::Complex64;
use symfer::correlators::{fer_correlator, ground_correlator, GroundInsertion};
use symfer::geometry::{fmt_complex, Domain};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let d = Domain::disk();
    println!("<xi(0) theta(0.5)> = {:.15}", fer_correlator(&d, &[c(0.0, 0.0)], &[c(0.5, 0.0)]).unwrap());
    let four = fer_correlator(&d, &[c(0.1, 0.2), c(-0.4, 0.0)], &[c(0.3, -0.3), c(0.0, 0.6)]).unwrap();
    println!("<xi xi theta theta> determinant = {four:.12}");

    for alpha in [c(0.0, 0.0), c(1.0, 0.5)] {
        let omega = ground_correlator(&d, alpha, &[GroundInsertion::omega(c(0.3, 0.1))]).unwrap();
        println!("alpha = {alpha}: <omega(0.3+0.1i)> = {}", fmt_complex(omega));
    }

    let ins = [
        GroundInsertion::xi(c(0.1, 0.2)),
        GroundInsertion::theta(c(-0.3, 0.1)),
        GroundInsertion::omega(c(0.2, -0.4)),
        GroundInsertion::one(c(0.0, 0.7)),
    ];
    println!("<xi theta omega one> = {:.12}", ground_correlator(&d, c(0.0, 0.0), &ins).unwrap().re);

    // xi(z) theta(w) approaches -log|z-w|^2 - alpha - <omega(w)>.
    let w = c(0.3, 0.1);
    let omega = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::omega(w)]).unwrap();
    for eps in [1e-1, 1e-2, 1e-3] {
        let pair = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::xi(w + eps), GroundInsertion::theta(w)]).unwrap();
        println!("|z - w| = {eps:e}: deviation {:.3e}", (-pair - 2.0 * eps.ln() - omega).norm());
    }
}
