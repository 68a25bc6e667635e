#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symfer::correlators::{GroundInsertion, GroundKind};
use symfer::geometry::{green, green_derivative, green_regular_diagonal, Domain, Wirtinger};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1e-300)
}

pub fn random_disk_points(rng: &mut ChaCha8Rng, n: usize, min_gap: f64) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = Vec::new();
    while pts.len() < n {
        let p = Complex64::from_polar(rng.random_range(0.0..0.8), rng.random_range(0.0..2.0 * PI));
        if pts.iter().all(|q| (p - q).norm() > min_gap) {
            pts.push(p);
        }
    }
    pts
}

/// Signature of a permutation of `0..n`, by counting inversions.
pub fn signature(p: &[usize]) -> f64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1.0 } else { -1.0 }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn permutation_sum(d: &Domain, xi: &[Complex64], theta: &[Complex64]) -> f64 {
    let n = xi.len();
    permutations(n)
        .iter()
        .map(|p| {
            let prod: f64 = (0..n).map(|i| 4.0 * PI * green(d, xi[i], theta[p[i]]).unwrap().total).product();
            signature(p) * prod
        })
        .sum()
}

pub fn wirtinger(g: &GroundInsertion) -> Wirtinger {
    match (g.d_holo, g.d_anti) {
        (false, false) => Wirtinger::None,
        (true, false) => Wirtinger::Holo,
        (false, true) => Wirtinger::Anti,
        _ => panic!("oracle handles one derivative per insertion"),
    }
}

/// Sum over bijections `z ∪ x → w ∪ x`, with fixed points only on `x`,
/// after moving the fermions to the order ξθξθ… by explicit transpositions.
pub fn bijection_oracle(d: &Domain, alpha: Complex64, ins: &[GroundInsertion]) -> Complex64 {
    let mut fermions = Vec::new();
    let mut omegas = Vec::new();
    for g in ins {
        match g.kind {
            GroundKind::One => {
                if g.d_holo || g.d_anti {
                    return ZERO;
                }
            }
            GroundKind::Omega => omegas.push(*g),
            _ => fermions.push(*g),
        }
    }
    let xs: Vec<GroundInsertion> = fermions.iter().filter(|g| g.kind == GroundKind::Xi).copied().collect();
    let ts: Vec<GroundInsertion> = fermions.iter().filter(|g| g.kind == GroundKind::Theta).copied().collect();
    if xs.len() != ts.len() {
        return ZERO;
    }
    // Target slot of every fermion in ξ₁θ₁ξ₂θ₂…, then bubble sort.
    let (mut nx, mut nt) = (0, 0);
    let mut target: Vec<usize> = fermions
        .iter()
        .map(|g| {
            if g.kind == GroundKind::Xi {
                nx += 1;
                2 * (nx - 1)
            } else {
                nt += 1;
                2 * (nt - 1) + 1
            }
        })
        .collect();
    let mut sign = 1.0;
    for i in 0..target.len() {
        for j in 0..target.len() - 1 - i {
            if target[j] > target[j + 1] {
                target.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let n = xs.len();
    let k = omegas.len();
    let sources: Vec<GroundInsertion> = xs.iter().chain(&omegas).copied().collect();
    let sinks: Vec<GroundInsertion> = ts.iter().chain(&omegas).copied().collect();
    let mut total = ZERO;
    for b in permutations(n + k) {
        // Sources ξ may only hit sinks; fixed points only among x.
        let mut term = c(signature(&b), 0.0);
        let mut fixed = 0;
        for (i, &j) in b.iter().enumerate() {
            if i >= n && j == i {
                fixed += 1;
                let x = sources[i].point;
                term *= -(4.0 * PI * green_regular_diagonal(d, x).unwrap() + alpha);
            } else {
                let (y, t) = (sources[i], sinks[j]);
                term *= 4.0 * PI * green_derivative(d, y.point, t.point, wirtinger(&y), wirtinger(&t)).unwrap();
            }
        }
        if fixed % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    let omega_sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    total * sign * omega_sign
}

pub fn random_insertions(rng: &mut ChaCha8Rng, n: usize, k: usize, derivatives: bool) -> Vec<GroundInsertion> {
    let pts = random_disk_points(rng, 2 * n + k, 0.05);
    let mut ins = Vec::new();
    for (i, p) in pts.into_iter().enumerate() {
        let mut g = if i < n {
            GroundInsertion::xi(p)
        } else if i < 2 * n {
            GroundInsertion::theta(p)
        } else {
            GroundInsertion::omega(p)
        };
        if derivatives && i < 2 * n {
            match rng.random_range(0..3) {
                1 => g = g.holo(),
                2 => g = g.anti(),
                _ => {}
            }
        }
        ins.push(g);
    }
    // Fisher-Yates with the seeded generator.
    for i in (1..ins.len()).rev() {
        let j = rng.random_range(0..=i);
        ins.swap(i, j);
    }
    ins
}
