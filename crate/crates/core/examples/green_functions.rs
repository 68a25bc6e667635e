//! Dirichlet Green's functions on the built-in domains.

use num_complex::Complex64;
use symfer::geometry::{conformal_radius, green, green_dz, Domain, Mobius};

fn main() {
    let m = Mobius::new(
        Complex64::new(2.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    )
    .unwrap();
    let cases = [
        (Domain::disk(), Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)),
        (Domain::half_plane(), Complex64::new(0.0, 1.0), Complex64::new(0.0, 2.0)),
        (Domain::quadrant(), Complex64::new(1.0, 1.0), Complex64::new(0.5, 2.0)),
        (Domain::half_plane().mobius_image(m).unwrap(), Complex64::new(0.0, 3.0), Complex64::new(1.0, 5.0)),
    ];
    for (d, z, w) in cases {
        let g = green(&d, z, w).unwrap();
        println!(
            "{:<32} G({z}, {w}) = {:.12}  (regular {:.6}, singular {:.6})",
            d.descriptor(),
            g.total,
            g.regular,
            g.singular
        );
        println!("{:<32} dG/dz = {:.9}, conformal radius at z = {:.6}", "", green_dz(&d, z, w).unwrap(), conformal_radius(&d, z).unwrap());
    }
}
