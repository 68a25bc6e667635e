//! Exact verification reports for the chiral staggered module and a small sweep.

use symfer::fockspace::FockSpace;
use symfer::virasoro::{commutator_sweep, gaberdiel_kausch_sweep, staggered_verify};

fn main() {
    for r in staggered_verify(&FockSpace::chiral()).unwrap() {
        println!("{:5} {}", if r.passed() { "ok" } else { "FAIL" }, r.check);
        if !r.expect_zero {
            println!("      value: {}", r.residual);
        }
    }

    let fs = FockSpace::non_chiral();
    let reports = commutator_sweep(&fs, 3, 4);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("commutator sweep: {} reports, {failed} failed", reports.len());
    let gk = gaberdiel_kausch_sweep(&fs, 4).unwrap();
    println!("{}: {}", gk.check, if gk.passed() { "ok" } else { "FAIL" });
}
