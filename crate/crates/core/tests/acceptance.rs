//! One line per criterion: `A<k> PASS|FAIL <detail>`. Exits non-zero if any fails.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symfer::correlators::{
    covariance_check, fer_correlator, general_correlator, ground_correlator, CorrelatorQuery, CovarianceMap,
    GroundInsertion,
};
use symfer::exprdsl::parse_query;
use symfer::fockspace::{BasisWord, Chirality, FockSpace, GroundName, State};
use symfer::geometry::{Domain, Mobius};
use symfer::virasoro::{
    commutator_sweep, gaberdiel_kausch_sweep, jordan_defect, jordan_sweep, staggered_verify, DefectReport,
};

const MAX_MODE: i64 = 4;
const MAX_TOTAL: u32 = 6;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn all_passed(reports: &[DefectReport]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| format!("{} [{}]", r.check, r.input)).collect();
    outcome(failed.is_empty(), format!("{} reports, failing: {failed:?}", reports.len()))
}

fn ground(name: GroundName) -> State {
    FockSpace::non_chiral().ground_state(name).unwrap()
}

fn a1_a2() -> (Outcome, Outcome) {
    let reports = commutator_sweep(&FockSpace::non_chiral(), MAX_MODE, MAX_TOTAL);
    let (mixed, same): (Vec<DefectReport>, Vec<DefectReport>) =
        reports.into_iter().partition(|r| r.check.starts_with("mixed"));
    (all_passed(&same), all_passed(&mixed))
}

fn a3() -> Outcome {
    let space = FockSpace::non_chiral();
    let mut reports = jordan_sweep(&space, MAX_TOTAL).unwrap();
    reports.retain(|r| r.expect_zero);
    let base = all_passed(&reports);
    let (first, _) = jordan_defect(&space, Chirality::Holo, &BasisWord::OMEGA).unwrap();
    let one = ground(GroundName::One);
    outcome(base.pass && first == one && !first.is_zero(), format!("{}; L(0) omega = {first}", base.detail))
}

fn a4() -> Outcome {
    all_passed(&staggered_verify(&FockSpace::chiral()).unwrap())
}

fn a5() -> Outcome {
    all_passed(&[gaberdiel_kausch_sweep(&FockSpace::non_chiral(), MAX_TOTAL).unwrap()])
}

fn a6() -> Outcome {
    let d = Domain::disk();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        for _ in 0..20 {
            let pts = random_disk_points(&mut rng, 2 * n, 0.05);
            let (xi, theta) = pts.split_at(n);
            let det = fer_correlator(&d, xi, theta).unwrap();
            let sum = permutation_sum(&d, xi, theta);
            worst = worst.max((det - sum).abs() / sum.abs());
        }
    }
    let mut worst_ground: f64 = 0.0;
    let mut cases = 0;
    for n in 0..=5usize {
        for k in 0..=(5 - n) {
            if n + k == 0 {
                continue;
            }
            for _ in 0..10 {
                let alpha = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                let ins = random_insertions(&mut rng, n, k, true);
                let v = ground_correlator(&d, alpha, &ins).unwrap();
                let o = bijection_oracle(&d, alpha, &ins);
                worst_ground = worst_ground.max((v - o).norm() / v.norm().max(o.norm()));
                cases += 1;
            }
        }
    }
    outcome(
        worst < 1e-12 && worst_ground < 1e-12,
        format!("determinant rel err {worst:.1e}; bijections rel err {worst_ground:.1e} over {cases} cases"),
    )
}

fn a7(nodes: usize) -> Complex64 {
    let q = parse_query("corr(disk; 0; [xi@0.0+0.0i, theta@0.5+0.0i])").unwrap();
    general_correlator(&q, nodes).unwrap()
}

fn a8() -> Outcome {
    let disk = ground_correlator(&Domain::disk(), ZERO, &[GroundInsertion::omega(ZERO)]).unwrap();
    let half = ground_correlator(&Domain::half_plane(), ZERO, &[GroundInsertion::omega(c(0.0, 1.0))]).unwrap();
    let err_half = (half - c(-2.0 * 2f64.ln(), 0.0)).norm();
    outcome(disk.norm() < 1e-12 && err_half < 1e-10, format!("disk |value| {:.1e}, half-plane error {err_half:.1e}", disk.norm()))
}

/// `⟨η(z)ξ(w)⟩` on the disk and `∂_z` of the closed form `-2 log|(z-w)/(1-z w̄)|`.
fn a9_values(nodes: usize) -> (Complex64, Complex64, Complex64) {
    let (z, w) = (c(0.1, 0.2), c(-0.3, 0.1));
    let q = CorrelatorQuery::new(
        Domain::disk(),
        ZERO,
        vec![(ground(GroundName::EtaCur), z), (ground(GroundName::Xi), w)],
    );
    let value = general_correlator(&q, nodes).unwrap();
    // ⟨θ(z)ξ(w)⟩ = -4πG(z, w) = 2 log|z-w| - 2 log|1 - z w̄|.
    let closed = 1.0 / (z - w) + w.conj() / (1.0 - z * w.conj());
    let pair = |p: Complex64| {
        let q = CorrelatorQuery::new(
            Domain::disk(),
            ZERO,
            vec![(ground(GroundName::Theta), p), (ground(GroundName::Xi), w)],
        );
        general_correlator(&q, nodes).unwrap()
    };
    let h = 1e-5;
    let fx = (pair(z + h) - pair(z - h)) / (2.0 * h);
    let fy = (pair(z + c(0.0, h)) - pair(z - c(0.0, h))) / (2.0 * h);
    (value, closed, (fx - c(0.0, 1.0) * fy) / 2.0)
}

fn a9() -> Outcome {
    let (value, closed, fd) = a9_values(128);
    let rel = (value - closed).norm() / closed.norm();
    let fd_err = (value - fd).norm();
    outcome(rel < 1e-7 && fd_err < 1e-6, format!("closed form rel err {rel:.1e}, finite differences {fd_err:.1e}"))
}

fn a10_points() -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    (0..10).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(1.0..2.0))).collect()
}

fn a10(nodes: usize) -> Vec<f64> {
    let d = Domain::half_plane();
    let w = c(0.5, 4.0);
    let f = |p: Complex64| {
        let q = CorrelatorQuery::new(d.clone(), ZERO, vec![(ground(GroundName::Xi), p), (ground(GroundName::Theta), w)]);
        general_correlator(&q, nodes).unwrap().re
    };
    let h = 1e-3;
    a10_points()
        .into_iter()
        .map(|z| (f(z + h) + f(z - h) + f(z + c(0.0, h)) + f(z - c(0.0, h)) - 4.0 * f(z)) / (h * h))
        .collect()
}

fn a11_deviation(alpha: Complex64, eps: f64, nodes: usize) -> f64 {
    let d = Domain::disk();
    let w = c(0.3, 0.1);
    let eval = |fields: Vec<(State, Complex64)>| general_correlator(&CorrelatorQuery::new(d.clone(), alpha, fields), nodes).unwrap();
    let omega = eval(vec![(State::omega(), w)]);
    let pair = eval(vec![(ground(GroundName::Xi), w + eps), (ground(GroundName::Theta), w)]);
    (-pair - 2.0 * eps.ln() - alpha - omega).norm()
}

fn a11() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for alpha in [ZERO, c(1.0, 0.5)] {
        let ratio = a11_deviation(alpha, 1e-3, 128) / a11_deviation(alpha, 1e-2, 128);
        pass &= ratio <= 0.15;
        detail.push(format!("alpha={alpha}: ratio {ratio:.3}"));
    }
    outcome(pass, detail.join(", "))
}

fn a12_mobius(nodes: usize) -> Vec<(Complex64, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    (0..20)
        .map(|_| {
            let theta = rng.random_range(0.0..2.0 * PI);
            let p = Complex64::from_polar(rng.random_range(0.0..0.7), rng.random_range(0.0..2.0 * PI));
            let z = Complex64::from_polar(rng.random_range(0.0..0.7), rng.random_range(0.0..2.0 * PI));
            let alpha = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let q = CorrelatorQuery::new(Domain::disk(), alpha, vec![(State::omega(), z)]);
            covariance_check(CovarianceMap::Mobius(Mobius::disk_automorphism(theta, p)), &q, nodes).unwrap()
        })
        .collect()
}

/// `α_λ` read off from `⟨ω(λz)⟩_α = ⟨ω(z)⟩_{α+α_λ}` on the half-plane.
fn a12_alpha_lambda(lambda: f64, nodes: usize) -> Complex64 {
    let z = c(0.3, 0.8);
    let alpha = c(0.2, 0.0);
    let h = Domain::half_plane();
    let at = |p: Complex64, a: Complex64| general_correlator(&CorrelatorQuery::new(h.clone(), a, vec![(State::omega(), p)]), nodes).unwrap();
    let moved = at(lambda * z, alpha);
    // ⟨ω(z)⟩_{α+a} = ⟨ω(z)⟩_α - a.
    at(z, alpha) - moved
}

fn a12() -> Outcome {
    let worst = a12_mobius(128).iter().map(|(l, r)| (l - r).norm()).fold(0.0, f64::max);
    let mut detail = vec![format!("Mobius worst {worst:.1e}")];
    let mut pass = worst < 1e-10;
    for lambda in [0.5, 2.0, 3.0] {
        let a = a12_alpha_lambda(lambda, 128);
        let lhs = (2.0 * PI * a).exp();
        let err = (lhs - lambda).norm();
        pass &= err < 1e-10;
        detail.push(format!("lambda={lambda}: exp(2 pi alpha_lambda) = {:.6}", lhs.re));
    }
    outcome(pass, detail.join(", "))
}

/// Companion fields so that a word of the given parity meets a nonzero partner.
fn companions(odd: bool) -> Vec<Vec<(State, Complex64)>> {
    let (a, b, x) = (c(-0.35, 0.2), c(0.3, -0.35), c(0.05, 0.45));
    if odd {
        vec![vec![(ground(GroundName::Theta), a)], vec![(ground(GroundName::Xi), a), (State::omega(), x)]]
    } else {
        vec![vec![(State::omega(), x)], vec![(ground(GroundName::Xi), a), (ground(GroundName::Theta), b)]]
    }
}

fn a13_queries() -> Vec<Vec<(State, Complex64)>> {
    let space = FockSpace::non_chiral();
    let mut out = Vec::new();
    for word in space.basis_up_to(2, 2, 4) {
        for rest in companions(word.len() % 2 == 1) {
            let mut fields = vec![(State::from_word(word), c(0.1, -0.05))];
            fields.extend(rest);
            out.push(fields);
        }
    }
    out
}

/// Both sides of the α-family relation for one field list.
fn a13_sides(fields: &[(State, Complex64)], alpha: Complex64, nodes: usize) -> (Complex64, Complex64) {
    let space = FockSpace::non_chiral();
    let d = Domain::disk();
    let lhs = general_correlator(&CorrelatorQuery::new(d.clone(), alpha, fields.to_vec()), nodes).unwrap();
    let unit = BigRational::from_integer(BigInt::from(1));
    let shifts: Vec<State> = fields.iter().map(|(s, _)| space.automorphism_alpha(&unit, s).unwrap() - s.clone()).collect();
    // The automorphism with parameter -α is affine in α: expand the product over subsets.
    let mut rhs = ZERO;
    for mask in 0u32..(1 << fields.len()) {
        if (0..fields.len()).any(|i| mask & (1 << i) != 0 && shifts[i].is_zero()) {
            continue;
        }
        let moved: Vec<(State, Complex64)> = fields
            .iter()
            .enumerate()
            .map(|(i, (s, p))| (if mask & (1 << i) != 0 { shifts[i].clone() } else { s.clone() }, *p))
            .collect();
        let weight = (-alpha).powu(mask.count_ones());
        rhs += weight * general_correlator(&CorrelatorQuery::new(d.clone(), ZERO, moved), nodes).unwrap();
    }
    (lhs, rhs)
}

fn a13() -> Outcome {
    let space = FockSpace::non_chiral();
    let queries = a13_queries();
    let mut worst: f64 = 0.0;
    for fields in &queries {
        for alpha in [c(0.5, -0.75), c(-1.25, 0.0)] {
            let (l, r) = a13_sides(fields, alpha, 128);
            worst = worst.max((l - r).norm());
        }
        // Rational parameter through the exact automorphism.
        let a = BigRational::new(BigInt::from(-3), BigInt::from(7));
        let moved: Vec<(State, Complex64)> =
            fields.iter().map(|(s, p)| (space.automorphism_alpha(&-a.clone(), s).unwrap(), *p)).collect();
        let l = general_correlator(&CorrelatorQuery::new(Domain::disk(), c(-3.0 / 7.0, 0.0), fields.clone()), 128).unwrap();
        let r = general_correlator(&CorrelatorQuery::new(Domain::disk(), ZERO, moved), 128).unwrap();
        worst = worst.max((l - r).norm());
    }
    outcome(worst < 1e-9, format!("{} field lists, worst abs diff {worst:.1e}", queries.len()))
}

fn a14() -> Outcome {
    let mut diffs: Vec<(&str, f64)> = Vec::new();
    diffs.push(("A7", (a7(64) - a7(128)).norm()));
    let (v64, _, f64_) = a9_values(64);
    let (v128, _, f128) = a9_values(128);
    diffs.push(("A9", (v64 - v128).norm().max((f64_ - f128).norm())));
    let l = a10(64).iter().zip(a10(128)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    diffs.push(("A10", l));
    let mut log: f64 = 0.0;
    for alpha in [ZERO, c(1.0, 0.5)] {
        for eps in [1e-2, 1e-3] {
            log = log.max((a11_deviation(alpha, eps, 64) - a11_deviation(alpha, eps, 128)).abs());
        }
    }
    diffs.push(("A11", log));
    let m = a12_mobius(64)
        .iter()
        .zip(a12_mobius(128))
        .map(|((a, b), (c2, d2))| (a - c2).norm().max((b - d2).norm()))
        .fold(0.0, f64::max);
    let s = [0.5, 2.0, 3.0]
        .iter()
        .map(|&l| (a12_alpha_lambda(l, 64) - a12_alpha_lambda(l, 128)).norm())
        .fold(0.0, f64::max);
    diffs.push(("A12", m.max(s)));
    let mut alg: f64 = 0.0;
    for fields in a13_queries() {
        let (l64, r64) = a13_sides(&fields, c(0.5, -0.75), 64);
        let (l128, r128) = a13_sides(&fields, c(0.5, -0.75), 128);
        alg = alg.max((l64 - l128).norm()).max((r64 - r128).norm());
    }
    diffs.push(("A13", alg));
    let worst = diffs.iter().map(|d| d.1).fold(0.0, f64::max);
    let detail: Vec<String> = diffs.iter().map(|(k, v)| format!("{k} {v:.1e}")).collect();
    outcome(worst < 1e-10, format!("64 -> 128 nodes: {}", detail.join(", ")))
}

fn main() {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut report = |id: &str, o: Outcome| {
        println!("{id} {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id.to_string());
        }
    };
    let (a1, a2) = a1_a2();
    report("A1", a1);
    report("A2", a2);
    report("A3", a3());
    report("A4", a4());
    report("A5", a5());
    report("A6", a6());
    let v = a7(128);
    let err = (v - c(2.0 * 2f64.ln(), 0.0)).norm();
    let fer = (fer_correlator(&Domain::disk(), &[ZERO], &[c(0.5, 0.0)]).unwrap() - 2.0 * 2f64.ln()).abs();
    report("A7", outcome(err < 1e-12 && fer < 1e-12, format!("value {v}, error {err:.1e}")));
    report("A8", a8());
    report("A9", a9());
    let laps = a10(128);
    let worst = laps.iter().map(|l| l.abs()).fold(0.0, f64::max);
    report("A10", outcome(worst < 1e-5, format!("worst |Laplacian| {worst:.1e} at {} points", laps.len())));
    report("A11", a11());
    report("A12", a12());
    report("A13", a13());
    report("A14", a14());
    println!("acceptance finished in {:.1} s", start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        println!("failed: {}", failed.join(" "));
        std::process::exit(1);
    }
}
