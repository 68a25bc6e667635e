//! Simply connected domains given by closed-form conformal charts onto the
//! unit disk, and their Dirichlet Green's functions.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate Moebius map (ad - bc = 0)")]
    DegenerateMobius,
    #[error("coincident points {0} and {1}")]
    CoincidentPoints(Complex64, Complex64),
    #[error("chart derivative vanishes at {0}")]
    DegenerateChart(Complex64),
    #[error("point {0} lies outside the domain")]
    OutsideDomain(Complex64),
}

/// `z ↦ (az + b)/(cz + d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mobius {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, GeometryError> {
        let m = Self { a, b, c, d };
        if m.determinant().norm() == 0.0 || !m.determinant().is_finite() {
            return Err(GeometryError::DegenerateMobius);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            a: ONE,
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: ONE,
        }
    }

    /// The disk automorphism `z ↦ e^{iθ}(z - p)/(1 - p̄z)` for `|p| < 1`.
    pub fn disk_automorphism(theta: f64, p: Complex64) -> Self {
        let rot = Complex64::from_polar(1.0, theta);
        Self {
            a: rot,
            b: -rot * p,
            c: -p.conj(),
            d: ONE,
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = self.c * z + self.d;
        self.determinant() / (den * den)
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }
}

/// The built-in family of domains.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Disk,
    HalfPlane,
    /// The first quadrant, charted by `z²` followed by the Cayley map.
    Quadrant,
    /// The image `m(Ω)` of an inner domain under a Möbius map.
    MobiusOf(Box<DomainSpec>, Mobius),
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Disk => f.write_str("disk"),
            DomainSpec::HalfPlane => f.write_str("halfplane"),
            DomainSpec::Quadrant => f.write_str("quadrant"),
            DomainSpec::MobiusOf(inner, m) => write!(
                f,
                "mobius:{inner}:{},{},{},{}",
                fmt_complex(m.a),
                fmt_complex(m.b),
                fmt_complex(m.c),
                fmt_complex(m.d)
            ),
        }
    }
}

/// Canonical `a+bi` rendering with round-trip float formatting.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// A validated domain with its chart `φ: Ω → 𝔻`.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    spec: DomainSpec,
}

pub fn make_domain(spec: DomainSpec) -> Result<Domain, GeometryError> {
    fn validate(spec: &DomainSpec) -> Result<(), GeometryError> {
        if let DomainSpec::MobiusOf(inner, m) = spec {
            Mobius::new(m.a, m.b, m.c, m.d)?;
            validate(inner)?;
        }
        Ok(())
    }
    validate(&spec)?;
    Ok(Domain { spec })
}

fn cayley(z: Complex64) -> Complex64 {
    (z - I) / (z + I)
}

fn cayley_derivative(z: Complex64) -> Complex64 {
    let den = z + I;
    2.0 * I / (den * den)
}

impl Domain {
    pub fn disk() -> Self {
        Self { spec: DomainSpec::Disk }
    }

    pub fn half_plane() -> Self {
        Self {
            spec: DomainSpec::HalfPlane,
        }
    }

    pub fn quadrant() -> Self {
        Self {
            spec: DomainSpec::Quadrant,
        }
    }

    /// `m(self)`.
    pub fn mobius_image(&self, m: Mobius) -> Result<Self, GeometryError> {
        make_domain(DomainSpec::MobiusOf(Box::new(self.spec.clone()), m))
    }

    pub fn spec(&self) -> &DomainSpec {
        &self.spec
    }

    pub fn descriptor(&self) -> String {
        self.spec.to_string()
    }

    pub fn chart(&self, z: Complex64) -> Complex64 {
        chart(&self.spec, z)
    }

    pub fn chart_derivative(&self, z: Complex64) -> Complex64 {
        chart_derivative(&self.spec, z)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        contains(&self.spec, z)
    }

    /// Koebe lower bound `(1 - |φ|²)/(4|φ′|)` for the distance to the boundary.
    pub fn boundary_clearance(&self, z: Complex64) -> Result<f64, GeometryError> {
        self.require_inside(z)?;
        let (u, du) = self.chart_pair(z)?;
        Ok(0.25 * (1.0 - u.norm_sqr()) / du.norm())
    }

    fn require_inside(&self, z: Complex64) -> Result<(), GeometryError> {
        if self.contains(z) {
            Ok(())
        } else {
            Err(GeometryError::OutsideDomain(z))
        }
    }

    fn chart_pair(&self, z: Complex64) -> Result<(Complex64, Complex64), GeometryError> {
        let du = self.chart_derivative(z);
        if du.norm() == 0.0 || !du.is_finite() {
            return Err(GeometryError::DegenerateChart(z));
        }
        Ok((self.chart(z), du))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

fn chart(spec: &DomainSpec, z: Complex64) -> Complex64 {
    match spec {
        DomainSpec::Disk => z,
        DomainSpec::HalfPlane => cayley(z),
        DomainSpec::Quadrant => cayley(z * z),
        DomainSpec::MobiusOf(inner, m) => chart(inner, m.inverse().apply(z)),
    }
}

fn chart_derivative(spec: &DomainSpec, z: Complex64) -> Complex64 {
    match spec {
        DomainSpec::Disk => ONE,
        DomainSpec::HalfPlane => cayley_derivative(z),
        DomainSpec::Quadrant => cayley_derivative(z * z) * 2.0 * z,
        DomainSpec::MobiusOf(inner, m) => {
            let inv = m.inverse();
            chart_derivative(inner, inv.apply(z)) * inv.derivative(z)
        }
    }
}

fn contains(spec: &DomainSpec, z: Complex64) -> bool {
    if !z.is_finite() {
        return false;
    }
    match spec {
        DomainSpec::Disk => z.norm() < 1.0,
        DomainSpec::HalfPlane => z.im > 0.0,
        DomainSpec::Quadrant => z.re > 0.0 && z.im > 0.0,
        DomainSpec::MobiusOf(inner, m) => contains(inner, m.inverse().apply(z)),
    }
}

/// `G = regular + singular`, with `singular = (1/2π) log 1/|z - w|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreenValue {
    pub total: f64,
    pub regular: f64,
    pub singular: f64,
}

/// Which Wirtinger derivative acts on one argument of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wirtinger {
    None,
    Holo,
    Anti,
}

fn distinct(z: Complex64, w: Complex64) -> Result<(), GeometryError> {
    if z == w {
        return Err(GeometryError::CoincidentPoints(z, w));
    }
    Ok(())
}

pub fn green(d: &Domain, z: Complex64, w: Complex64) -> Result<GreenValue, GeometryError> {
    distinct(z, w)?;
    d.require_inside(z)?;
    d.require_inside(w)?;
    let (u, v) = (d.chart(z), d.chart(w));
    let total = (ONE - u * v.conj()).norm().ln() - (u - v).norm().ln();
    let total = total / (2.0 * PI);
    let singular = -(z - w).norm().ln() / (2.0 * PI);
    Ok(GreenValue {
        total,
        regular: total - singular,
        singular,
    })
}

/// `∂_z G(z, w)`.
pub fn green_dz(d: &Domain, z: Complex64, w: Complex64) -> Result<Complex64, GeometryError> {
    green_derivative(d, z, w, Wirtinger::Holo, Wirtinger::None)
}

/// `∂̄_z G(z, w)`.
pub fn green_dzbar(d: &Domain, z: Complex64, w: Complex64) -> Result<Complex64, GeometryError> {
    green_derivative(d, z, w, Wirtinger::Anti, Wirtinger::None)
}

/// `G(z, w)` with at most one Wirtinger derivative on each argument.
pub fn green_derivative(
    d: &Domain,
    z: Complex64,
    w: Complex64,
    dz: Wirtinger,
    dw: Wirtinger,
) -> Result<Complex64, GeometryError> {
    distinct(z, w)?;
    let a = d.chart_point(z)?;
    let b = d.chart_point(w)?;
    if a.u == b.u {
        return Err(GeometryError::CoincidentPoints(z, w));
    }
    Ok(green_from_chart(&a, &b, dz, dw))
}

/// A point together with its chart image and chart derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub z: Complex64,
    pub u: Complex64,
    pub du: Complex64,
}

impl ChartPoint {
    /// `g_Ω(z, z)`.
    pub fn regular_diagonal(&self) -> f64 {
        ((1.0 - self.u.norm_sqr()) / self.du.norm()).ln() / (2.0 * PI)
    }
}

impl Domain {
    pub fn chart_point(&self, z: Complex64) -> Result<ChartPoint, GeometryError> {
        self.require_inside(z)?;
        let (u, du) = self.chart_pair(z)?;
        Ok(ChartPoint { z, u, du })
    }
}

/// The Green's function between two charted points, with derivative
/// decorations; the points must have distinct chart images.
pub fn green_from_chart(a: &ChartPoint, b: &ChartPoint, dz: Wirtinger, dw: Wirtinger) -> Complex64 {
    use Wirtinger::{Anti, Holo, None};
    let (u, du, v, dv) = (a.u, a.du, b.u, b.du);
    let k = 1.0 / (4.0 * PI);
    let first = |u: Complex64, v: Complex64| k * (-v.conj() / (ONE - u * v.conj()) - ONE / (u - v));
    let same = || -k / ((u - v) * (u - v));
    let cross = || {
        let t = ONE - u * v.conj();
        -k / (t * t)
    };
    match (dz, dw) {
        (None, None) => {
            let total = ((ONE - u * v.conj()).norm() / (u - v).norm()).ln() / (2.0 * PI);
            Complex64::new(total, 0.0)
        }
        (Holo, None) => du * first(u, v),
        (Anti, None) => (du * first(u, v)).conj(),
        (None, Holo) => dv * first(v, u),
        (None, Anti) => (dv * first(v, u)).conj(),
        (Holo, Holo) => du * dv * same(),
        (Anti, Anti) => (du * dv * same()).conj(),
        (Holo, Anti) => du * dv.conj() * cross(),
        (Anti, Holo) => (du * dv.conj() * cross()).conj(),
    }
}

/// `g_Ω(z, z) = (1/2π) log((1 - |φ(z)|²)/|φ′(z)|)`.
pub fn green_regular_diagonal(d: &Domain, z: Complex64) -> Result<f64, GeometryError> {
    d.require_inside(z)?;
    let (u, du) = d.chart_pair(z)?;
    Ok(((1.0 - u.norm_sqr()) / du.norm()).ln() / (2.0 * PI))
}

/// `R(z; Ω) = exp(2π g_Ω(z, z))`.
pub fn conformal_radius(d: &Domain, z: Complex64) -> Result<f64, GeometryError> {
    d.require_inside(z)?;
    let (u, du) = d.chart_pair(z)?;
    Ok((1.0 - u.norm_sqr()) / du.norm())
}
