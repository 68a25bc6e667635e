//! Numeric correlation functions of the non-chiral theory on a charted domain.
//!
//! Ground fields (`ξ`, `θ`, `ω`, `𝟙`) are evaluated in closed form as a
//! determinant of Green's function entries. A general basis field is reduced
//! to ground fields by contour extraction of its current modes: every
//! creation mode becomes a current insertion `∂ξ`, `∂θ`, `∂̄ξ` or `∂̄θ` on a
//! small circle around the field, weighted by `(ζ - z)^k`. Each contour
//! variable enters exactly one row or column of the determinant, so the
//! nested integrals are carried out entry by entry.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::fockspace::{rational_to_f64, BasisWord, Chirality, Generator, Species, State};
use crate::geometry::{green_from_chart, ChartPoint, Domain, GeometryError, Mobius, Wirtinger};

/// Default number of trapezoid nodes per contour.
pub const DEFAULT_NODES: usize = 128;

/// Contour radii below this are rejected.
pub const MIN_RADIUS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorrelatorError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("contour radius {radius:e} around {point} is too small")]
    RadiusUnderflow { point: Complex64, radius: f64 },
    #[error("derivative of an omega insertion at {0} is not supported")]
    OmegaDerivative(Complex64),
    #[error("insertion index {index} out of range ({len} insertions)")]
    NoSuchInsertion { index: usize, len: usize },
    #[error("covariance check needs a single omega insertion")]
    NotSingleOmega,
    #[error("at least 2 quadrature nodes are required")]
    TooFewNodes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundKind {
    Xi,
    Theta,
    Omega,
    One,
}

/// A ground field at a point, with pending Wirtinger derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundInsertion {
    pub kind: GroundKind,
    pub point: Complex64,
    pub d_holo: bool,
    pub d_anti: bool,
}

impl GroundInsertion {
    pub fn new(kind: GroundKind, point: Complex64) -> Self {
        Self {
            kind,
            point,
            d_holo: false,
            d_anti: false,
        }
    }

    pub fn xi(point: Complex64) -> Self {
        Self::new(GroundKind::Xi, point)
    }

    pub fn theta(point: Complex64) -> Self {
        Self::new(GroundKind::Theta, point)
    }

    pub fn omega(point: Complex64) -> Self {
        Self::new(GroundKind::Omega, point)
    }

    pub fn one(point: Complex64) -> Self {
        Self::new(GroundKind::One, point)
    }

    pub fn holo(mut self) -> Self {
        self.d_holo = true;
        self
    }

    pub fn anti(mut self) -> Self {
        self.d_anti = true;
        self
    }
}

/// A correlator request: fields (states at points) in a domain, at parameter `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatorQuery {
    pub domain: Domain,
    pub alpha: Complex64,
    pub insertions: Vec<(State, Complex64)>,
}

impl CorrelatorQuery {
    pub fn new(domain: Domain, alpha: Complex64, insertions: Vec<(State, Complex64)>) -> Self {
        Self {
            domain,
            alpha,
            insertions,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    /// `|value(M) - value(M/2)|`.
    pub abs_err_estimate: f64,
    pub nodes: usize,
}

/// A conformal map `φ` used to compare `⟨ω(φ(z))⟩` on `φ(Ω)` with `⟨ω(z)⟩` on `Ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CovarianceMap {
    /// A Möbius map; the image domain is `m(Ω)`.
    Mobius(Mobius),
    /// The domain's own chart onto the unit disk.
    Chart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotKind {
    Xi,
    Theta,
    Omega,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    weight: Complex64,
    at: ChartPoint,
}

/// One row and/or column of the determinant: a ground field at a fixed point
/// (a single node of weight 1) or a current on a contour.
#[derive(Debug, Clone)]
struct Slot {
    kind: SlotKind,
    d_holo: bool,
    d_anti: bool,
    nodes: Vec<Node>,
}

impl Slot {
    fn fixed(domain: &Domain, kind: SlotKind, point: Complex64, d_holo: bool, d_anti: bool) -> Result<Self, CorrelatorError> {
        Ok(Self {
            kind,
            d_holo,
            d_anti,
            nodes: vec![Node {
                weight: Complex64::new(1.0, 0.0),
                at: domain.chart_point(point)?,
            }],
        })
    }

    /// The current of `g` on a circle of radius `r` around `z`, weighted by
    /// `(ζ - z)^k dζ/2πi` or `-(ζ̄ - z̄)^k dζ̄/2πi`.
    fn contour(domain: &Domain, g: Generator, z: Complex64, r: f64, m: usize) -> Result<Self, CorrelatorError> {
        let kind = match g.species {
            Species::Chi => SlotKind::Xi,
            Species::Eta => SlotKind::Theta,
        };
        let anti = g.chirality == Chirality::Anti;
        let mut nodes = Vec::with_capacity(m);
        for s in 0..m {
            let offset = Complex64::from_polar(r, 2.0 * PI * s as f64 / m as f64);
            let step = if anti { offset.conj() } else { offset };
            nodes.push(Node {
                weight: step.powi((g.index + 1) as i32) / m as f64,
                at: domain.chart_point(z + offset)?,
            });
        }
        Ok(Self {
            kind,
            d_holo: !anti,
            d_anti: anti,
            nodes,
        })
    }

    fn wirtinger(&self) -> Option<Wirtinger> {
        match (self.d_holo, self.d_anti) {
            (false, false) => Some(Wirtinger::None),
            (true, false) => Some(Wirtinger::Holo),
            (false, true) => Some(Wirtinger::Anti),
            // ∂∂̄G vanishes away from the diagonal.
            (true, true) => None,
        }
    }
}

/// `4π G` between a row slot and a column slot, integrated over their contours.
fn entry(row: &Slot, col: &Slot) -> Complex64 {
    let (Some(dr), Some(dc)) = (row.wirtinger(), col.wirtinger()) else {
        return Complex64::new(0.0, 0.0);
    };
    let mut total = Complex64::new(0.0, 0.0);
    for a in &row.nodes {
        let mut inner = Complex64::new(0.0, 0.0);
        for b in &col.nodes {
            inner += b.weight * green_from_chart(&a.at, &b.at, dr, dc);
        }
        total += a.weight * inner;
    }
    4.0 * PI * total
}

fn omega_diagonal(slot: &Slot, alpha: Complex64) -> Complex64 {
    4.0 * PI * slot.nodes[0].at.regular_diagonal() + alpha
}

/// Sign of the permutation taking the fermion sequence to `ξθξθ⋯`.
fn reorder_sign(kinds: impl Iterator<Item = SlotKind>) -> f64 {
    let mut targets = Vec::new();
    let (mut nx, mut nt) = (0usize, 0usize);
    for k in kinds {
        match k {
            SlotKind::Xi => {
                targets.push(2 * nx);
                nx += 1;
            }
            SlotKind::Theta => {
                targets.push(2 * nt + 1);
                nt += 1;
            }
            SlotKind::Omega => {}
        }
    }
    let mut inversions = 0usize;
    for i in 0..targets.len() {
        for j in i + 1..targets.len() {
            if targets[i] > targets[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Determinant layout of an ordered slot list.
struct Layout {
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// Index of the first omega in `rows`/`cols` (they share the omega tail).
    n_fermion: usize,
    prefactor: f64,
}

fn layout(slots: &[Slot]) -> Option<Layout> {
    let pick = |k: SlotKind| slots.iter().enumerate().filter(move |(_, s)| s.kind == k).map(|(i, _)| i);
    let xi: Vec<usize> = pick(SlotKind::Xi).collect();
    let theta: Vec<usize> = pick(SlotKind::Theta).collect();
    if xi.len() != theta.len() {
        return None;
    }
    let omega: Vec<usize> = pick(SlotKind::Omega).collect();
    let mut prefactor = reorder_sign(slots.iter().map(|s| s.kind));
    if omega.len() % 2 == 1 {
        prefactor = -prefactor;
    }
    let n_fermion = xi.len();
    let rows = xi.into_iter().chain(omega.iter().copied()).collect();
    let cols = theta.into_iter().chain(omega).collect();
    Some(Layout {
        rows,
        cols,
        n_fermion,
        prefactor,
    })
}

fn fill(layout: &Layout, slots: &[Slot], alpha: Complex64) -> DMatrix<Complex64> {
    let n = layout.rows.len();
    DMatrix::from_fn(n, n, |i, j| {
        let (r, c) = (layout.rows[i], layout.cols[j]);
        if r == c {
            omega_diagonal(&slots[r], alpha)
        } else {
            entry(&slots[r], &slots[c])
        }
    })
}

fn det(m: DMatrix<Complex64>) -> Complex64 {
    if m.nrows() == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        m.determinant()
    }
}

fn evaluate_slots(slots: &[Slot], alpha: Complex64) -> Complex64 {
    match layout(slots) {
        None => Complex64::new(0.0, 0.0),
        Some(l) => l.prefactor * det(fill(&l, slots, alpha)),
    }
}

fn require_distinct(points: &[Complex64]) -> Result<(), CorrelatorError> {
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a == b {
                return Err(GeometryError::CoincidentPoints(*a, *b).into());
            }
        }
    }
    Ok(())
}

/// `(4π)^n det[G(z_i, w_j)]`; zero when the counts differ.
pub fn fer_correlator(d: &Domain, points_xi: &[Complex64], points_theta: &[Complex64]) -> Result<f64, CorrelatorError> {
    let all: Vec<Complex64> = points_xi.iter().chain(points_theta).copied().collect();
    require_distinct(&all)?;
    let xi = points_xi.iter().map(|&z| d.chart_point(z)).collect::<Result<Vec<_>, _>>()?;
    let theta = points_theta.iter().map(|&w| d.chart_point(w)).collect::<Result<Vec<_>, _>>()?;
    if xi.len() != theta.len() {
        return Ok(0.0);
    }
    let n = xi.len();
    let m = DMatrix::from_fn(n, n, |i, j| {
        4.0 * PI * green_from_chart(&xi[i], &theta[j], Wirtinger::None, Wirtinger::None).re
    });
    Ok(if n == 0 { 1.0 } else { m.determinant() })
}

/// Correlator of ground fields, in the given order.
pub fn ground_correlator(d: &Domain, alpha: Complex64, ins: &[GroundInsertion]) -> Result<Complex64, CorrelatorError> {
    let points: Vec<Complex64> = ins.iter().map(|g| g.point).collect();
    require_distinct(&points)?;
    let mut slots = Vec::with_capacity(ins.len());
    for g in ins {
        let kind = match g.kind {
            GroundKind::Xi => SlotKind::Xi,
            GroundKind::Theta => SlotKind::Theta,
            GroundKind::Omega => {
                if g.d_holo || g.d_anti {
                    return Err(CorrelatorError::OmegaDerivative(g.point));
                }
                SlotKind::Omega
            }
            GroundKind::One => {
                d.chart_point(g.point)?;
                if g.d_holo || g.d_anti {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                continue;
            }
        };
        slots.push(Slot::fixed(d, kind, g.point, g.d_holo, g.d_anti)?);
    }
    Ok(evaluate_slots(&slots, alpha))
}

/// Base contour radius around each point: half of the smaller of half the
/// distance to the nearest other point and the Koebe boundary clearance.
fn base_radii(d: &Domain, points: &[Complex64], extra: &[Complex64]) -> Result<Vec<f64>, CorrelatorError> {
    points
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let nearest = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &w)| (w - z).norm())
                .chain(extra.iter().map(|&w| (w - z).norm()))
                .fold(f64::INFINITY, f64::min);
            Ok(0.5 * (0.5 * nearest).min(d.boundary_clearance(z)?))
        })
        .collect()
}

/// The slots of `word·ω` at `z` together with the sign picked up while moving
/// its zero modes next to `ω`.
fn word_slots(d: &Domain, word: &BasisWord, z: Complex64, radius: f64, m: usize) -> Result<(f64, Vec<Slot>), CorrelatorError> {
    let gens = word.generators();
    let has_eta0 = gens.contains(&Generator::eta(0));
    let has_chi0 = gens.contains(&Generator::chi(0));
    let nonzero: Vec<Generator> = gens.iter().copied().filter(|g| g.index != 0).collect();
    let barred = nonzero.iter().filter(|g| g.chirality == Chirality::Anti).count();
    let chis = nonzero
        .iter()
        .filter(|g| g.chirality == Chirality::Holo && g.species == Species::Chi)
        .count();
    let mut exponent = 0;
    if has_eta0 {
        exponent += chis + barred;
    }
    if has_chi0 {
        exponent += barred;
    }
    let mut sign = if exponent % 2 == 0 { 1.0 } else { -1.0 };
    let mut slots = Vec::with_capacity(nonzero.len() + 1);
    if !nonzero.is_empty() && radius < MIN_RADIUS {
        return Err(CorrelatorError::RadiusUnderflow { point: z, radius });
    }
    let mut r = radius;
    for g in &nonzero {
        slots.push(Slot::contour(d, *g, z, r, m)?);
        r *= 0.5;
    }
    // η₀ω = -θ, χ₀ω = -ξ, η₀χ₀ω = -𝟙.
    let tail = match (has_eta0, has_chi0) {
        (false, false) => Some(SlotKind::Omega),
        (true, false) => Some(SlotKind::Theta),
        (false, true) => Some(SlotKind::Xi),
        (true, true) => None,
    };
    if has_eta0 || has_chi0 {
        sign = -sign;
    }
    match tail {
        Some(kind) => slots.push(Slot::fixed(d, kind, z, false, false)?),
        None => {
            d.chart_point(z)?;
        }
    }
    Ok((sign, slots))
}

/// One term of the multilinear expansion: a coefficient and an ordered slot list.
struct Term {
    coeff: f64,
    slots: Vec<Slot>,
    /// Start of each insertion's slots.
    offsets: Vec<usize>,
}

fn expand(
    d: &Domain,
    fields: &[(State, Complex64)],
    radii: &[f64],
    m: usize,
) -> Result<Vec<Term>, CorrelatorError> {
    let mut per_field: Vec<Vec<(f64, Vec<Slot>)>> = Vec::with_capacity(fields.len());
    for ((state, z), &r) in fields.iter().zip(radii) {
        let mut options = Vec::with_capacity(state.len());
        for (word, coeff) in state.terms() {
            let (sign, slots) = word_slots(d, word, *z, r, m)?;
            options.push((sign * rational_to_f64(coeff), slots));
        }
        per_field.push(options);
    }
    let mut terms = vec![Term {
        coeff: 1.0,
        slots: Vec::new(),
        offsets: Vec::new(),
    }];
    for options in &per_field {
        let mut next = Vec::with_capacity(terms.len() * options.len());
        for t in &terms {
            for (c, slots) in options {
                let mut s = t.slots.clone();
                let mut offsets = t.offsets.clone();
                offsets.push(s.len());
                s.extend(slots.iter().cloned());
                next.push(Term {
                    coeff: t.coeff * c,
                    slots: s,
                    offsets,
                });
            }
        }
        terms = next;
    }
    Ok(terms)
}

fn odd_parity(fields: &[(State, Complex64)]) -> bool {
    let mut odd = false;
    for (state, _) in fields {
        match state.parity() {
            Some(crate::fockspace::Parity::Fer) => odd = !odd,
            Some(crate::fockspace::Parity::Bos) => {}
            None => return false,
        }
    }
    odd
}

fn validate(q: &CorrelatorQuery, nodes: usize) -> Result<Vec<Complex64>, CorrelatorError> {
    if nodes < 2 {
        return Err(CorrelatorError::TooFewNodes);
    }
    let points: Vec<Complex64> = q.insertions.iter().map(|(_, z)| *z).collect();
    require_distinct(&points)?;
    for z in &points {
        q.domain.chart_point(*z)?;
    }
    Ok(points)
}

/// The correlator of arbitrary states, multilinear in each insertion.
pub fn general_correlator(q: &CorrelatorQuery, nodes: usize) -> Result<Complex64, CorrelatorError> {
    let points = validate(q, nodes)?;
    if odd_parity(&q.insertions) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let radii = base_radii(&q.domain, &points, &[])?;
    let mut total = Complex64::new(0.0, 0.0);
    for term in expand(&q.domain, &q.insertions, &radii, nodes)? {
        if term.coeff != 0.0 {
            total += term.coeff * evaluate_slots(&term.slots, q.alpha);
        }
    }
    Ok(total)
}

/// [`general_correlator`] at `nodes` and `nodes / 2`, reporting their difference.
pub fn evaluate_with_error(q: &CorrelatorQuery, nodes: usize) -> Result<Evaluation, CorrelatorError> {
    let value = general_correlator(q, nodes)?;
    let coarse = general_correlator(q, (nodes / 2).max(2))?;
    Ok(Evaluation {
        value,
        abs_err_estimate: (value - coarse).norm(),
        nodes,
    })
}

/// The correlator with the state at `target` replaced by `outer·v`, computed
/// by one explicit outer trapezoid sum over the current of `outer`.
pub fn mode_extract(
    q: &CorrelatorQuery,
    target: usize,
    outer: Generator,
    nodes: usize,
) -> Result<Complex64, CorrelatorError> {
    let points = validate(q, nodes)?;
    let len = q.insertions.len();
    if target >= len {
        return Err(CorrelatorError::NoSuchInsertion { index: target, len });
    }
    let z = points[target];
    let big = base_radii(&q.domain, &points, &[])?[target];
    if big < MIN_RADIUS {
        return Err(CorrelatorError::RadiusUnderflow { point: z, radius: big });
    }
    // Inner contours of every field must stay clear of the outer circle.
    let ring: Vec<Complex64> = (0..4)
        .map(|s| z + Complex64::from_polar(big, PI * s as f64 / 2.0))
        .collect();
    let mut radii = base_radii(&q.domain, &points, &[])?;
    radii[target] = radii[target].min(0.25 * big);
    for (i, r) in radii.iter_mut().enumerate() {
        if i != target {
            let gap = ring.iter().map(|w| (w - points[i]).norm()).fold(f64::INFINITY, f64::min);
            *r = r.min(0.25 * gap);
        }
    }
    let current = Slot::contour(&q.domain, outer, z, big, nodes)?;
    let mut total = Complex64::new(0.0, 0.0);
    for term in expand(&q.domain, &q.insertions, &radii, nodes)? {
        if term.coeff == 0.0 {
            continue;
        }
        let at = term.offsets[target];
        let mut slots = term.slots;
        let mut probe = current.clone();
        probe.nodes.truncate(1);
        probe.nodes[0].weight = Complex64::new(1.0, 0.0);
        slots.insert(at, probe);
        let Some(l) = layout(&slots) else {
            continue;
        };
        let mut matrix = fill(&l, &slots, q.alpha);
        let row = l.rows[..l.n_fermion].iter().position(|&i| i == at);
        let col = l.cols[..l.n_fermion].iter().position(|&i| i == at);
        let mut sum = Complex64::new(0.0, 0.0);
        for node in &current.nodes {
            slots[at].nodes[0].at = node.at;
            if let Some(i) = row {
                for j in 0..l.cols.len() {
                    matrix[(i, j)] = entry(&slots[at], &slots[l.cols[j]]);
                }
            }
            if let Some(j) = col {
                for i in 0..l.rows.len() {
                    matrix[(i, j)] = entry(&slots[l.rows[i]], &slots[at]);
                }
            }
            sum += node.weight * det(matrix.clone());
        }
        total += term.coeff * l.prefactor * sum;
    }
    Ok(total)
}

/// `(⟨ω(φ(z))⟩ on φ(Ω), ⟨ω(z)⟩ on Ω - 2 log|φ′(z)|)`.
pub fn covariance_check(
    map: CovarianceMap,
    q: &CorrelatorQuery,
    nodes: usize,
) -> Result<(Complex64, Complex64), CorrelatorError> {
    let [(state, z)] = q.insertions.as_slice() else {
        return Err(CorrelatorError::NotSingleOmega);
    };
    if *state != State::omega() {
        return Err(CorrelatorError::NotSingleOmega);
    }
    let (image, fz, derivative) = match map {
        CovarianceMap::Mobius(m) => (q.domain.mobius_image(m)?, m.apply(*z), m.derivative(*z)),
        CovarianceMap::Chart => (Domain::disk(), q.domain.chart(*z), q.domain.chart_derivative(*z)),
    };
    let moved = CorrelatorQuery::new(image, q.alpha, vec![(State::omega(), fz)]);
    let lhs = general_correlator(&moved, nodes)?;
    let rhs = general_correlator(q, nodes)? - 2.0 * derivative.norm().ln();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fockspace::{FockSpace, GroundName};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ground(name: GroundName) -> State {
        FockSpace::non_chiral().ground_state(name).unwrap()
    }

    #[test]
    fn two_point_disk_value() {
        let v = fer_correlator(&Domain::disk(), &[c(0.0, 0.0)], &[c(0.5, 0.0)]).unwrap();
        assert!((v - 2.0 * 2f64.ln()).abs() < 1e-12);
        let unequal = fer_correlator(&Domain::disk(), &[c(0.0, 0.0)], &[c(0.5, 0.0), c(0.1, 0.3)]).unwrap();
        assert_eq!(unequal, 0.0);
    }

    #[test]
    fn omega_one_point() {
        let d = Domain::disk();
        let v = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::omega(c(0.0, 0.0))]).unwrap();
        assert!(v.norm() < 1e-15);
        let h = Domain::half_plane();
        let v = ground_correlator(&h, c(0.0, 0.0), &[GroundInsertion::omega(c(0.0, 1.0))]).unwrap();
        assert!((v.re + 2.0 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn ordering_sign() {
        let d = Domain::disk();
        let z = c(0.1, 0.2);
        let w = c(-0.3, 0.1);
        let a = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::xi(z), GroundInsertion::theta(w)]).unwrap();
        let b = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::theta(w), GroundInsertion::xi(z)]).unwrap();
        assert!((a + b).norm() < 1e-15);
    }

    #[test]
    fn omega_derivative_rejected() {
        let d = Domain::disk();
        let r = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::omega(c(0.0, 0.0)).holo()]);
        assert!(matches!(r, Err(CorrelatorError::OmegaDerivative(_))));
    }

    #[test]
    fn zero_mode_extraction_from_omega() {
        let d = Domain::disk();
        let (z, w) = (c(0.1, 0.0), c(-0.2, 0.3));
        let q = CorrelatorQuery::new(d.clone(), c(0.0, 0.0), vec![(State::omega(), z), (ground(GroundName::Theta), w)]);
        let extracted = mode_extract(&q, 0, Generator::chi(0), 64).unwrap();
        let direct = ground_correlator(&d, c(0.0, 0.0), &[GroundInsertion::xi(z), GroundInsertion::theta(w)]).unwrap();
        assert!((extracted + direct).norm() < 1e-10);
        let annihilated = mode_extract(&q, 0, Generator::eta(1), 64).unwrap();
        assert!(annihilated.norm() < 1e-10);
    }

    #[test]
    fn odd_parity_is_exactly_zero() {
        let q = CorrelatorQuery::new(Domain::disk(), c(0.0, 0.0), vec![(ground(GroundName::Xi), c(0.0, 0.0))]);
        assert_eq!(general_correlator(&q, 16).unwrap(), c(0.0, 0.0));
    }
}
