//! Parsing, rendering and evaluating text queries.

use symfer::correlators::general_correlator;
use symfer::exprdsl::{parse_query, parse_state, render};
use symfer::fockspace::FockSpace;

fn main() {
    let fs = FockSpace::non_chiral();
    let s = parse_state("2/3*chi(-1)*eta(-2)*omega - xi + 1/2*one", &fs).unwrap();
    println!("canonical: {}", render(&s));

    for text in [
        "corr(disk; 0; [xi@0.0+0.0i, theta@0.5+0.0i])",
        "corr(halfplane; 0.1+0.0i; [omega@0.0+1.0i])",
        "corr(quadrant; 0; [eta(-1)*omega@1.0+1.0i, xi@0.5+2.0i])",
        "corr(mobius:disk:1,0.5+0i,0.5+0i,1; 1-1i; [chibar(-1)*eta(-1)*omega@0.2+0.1i])",
    ] {
        let q = parse_query(text).unwrap();
        println!("{}\n  = {:.12}", render(&q), general_correlator(&q, 128).unwrap());
    }

    for bad in ["corr(disk; 0; [xi@0.1+0.1i, xi@0.1+0.1i])", "corr(disk; 0; [psi@0+0i])"] {
        println!("{bad}\n  -> {}", parse_query(bad).unwrap_err());
    }
}
