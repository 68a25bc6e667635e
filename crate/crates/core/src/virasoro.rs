//! Sugawara Virasoro modes at `c = -2` and exact verification of the
//! relations they satisfy on the Fock spaces.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::fockspace::{
    BasisWord, Chirality, FockError, FockSpace, Generator, GroundName, Mode, Species, State,
};

/// Central charge of the Sugawara construction.
pub const CENTRAL_CHARGE: i64 = -2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VirasoroError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("{0} requires the non-chiral Fock space")]
    NeedsNonChiral(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VirasoroMode {
    pub chirality: Chirality,
    pub n: i64,
}

impl VirasoroMode {
    pub const fn holo(n: i64) -> Self {
        Self {
            chirality: Chirality::Holo,
            n,
        }
    }

    pub const fn anti(n: i64) -> Self {
        Self {
            chirality: Chirality::Anti,
            n,
        }
    }
}

impl fmt::Display for VirasoroMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chirality {
            Chirality::Holo => write!(f, "L({})", self.n),
            Chirality::Anti => write!(f, "Lbar({})", self.n),
        }
    }
}

type IntState = HashMap<BasisWord, i64>;

fn ceil_half(n: i64) -> i64 {
    n.div_euclid(2) + n.rem_euclid(2)
}

fn gen(species: Species, chirality: Chirality, index: i64) -> Generator {
    Generator::new(species, chirality, index)
}

/// `L_n` on one word with integer coefficients; `bound` is the truncation index.
fn sugawara_word(mode: VirasoroMode, word: &BasisWord, bound: i64, out: &mut IntState, scale: i64) {
    let n = mode.n;
    let split = ceil_half(n);
    let c = mode.chirality;
    let mut push = |first: Generator, second: Generator, sign: i64| {
        // `second` acts first.
        let Ok(Some((c1, w1))) = word.act(second) else {
            return;
        };
        let Ok(Some((c2, w2))) = w1.act(first) else {
            return;
        };
        let entry = out.entry(w2).or_insert(0);
        *entry += scale * sign * c1 * c2;
    };
    for k in split..=bound.max(split) {
        push(gen(Species::Chi, c, n - k), gen(Species::Eta, c, k), 1);
    }
    for k in (n - bound)..split {
        push(gen(Species::Eta, c, k), gen(Species::Chi, c, n - k), -1);
    }
}

fn int_apply(mode: VirasoroMode, v: &IntState, margin: i64) -> IntState {
    let mut out = IntState::new();
    for (word, &coeff) in v {
        let bound = word.max_index() as i64 + margin;
        sugawara_word(mode, word, bound, &mut out, coeff);
    }
    out.retain(|_, c| *c != 0);
    out
}

fn int_to_state(v: &IntState) -> State {
    let mut s = State::zero();
    for (w, &c) in v {
        s.add_term(*w, BigRational::from_integer(BigInt::from(c)));
    }
    s
}

fn check_mode(space: &FockSpace, mode: VirasoroMode) -> Result<(), VirasoroError> {
    if space.mode() == Mode::Chiral && mode.chirality == Chirality::Anti {
        return Err(FockError::ChiralityMismatch(Generator::etabar(mode.n)).into());
    }
    Ok(())
}

fn sugawara_impl(space: &FockSpace, mode: VirasoroMode, v: &State, margin: i64) -> Result<State, VirasoroError> {
    check_mode(space, mode)?;
    let mut out = State::zero();
    let mut buf = IntState::new();
    for (word, coeff) in v.terms() {
        buf.clear();
        let bound = word.max_index() as i64 + margin;
        sugawara_word(mode, word, bound, &mut buf, 1);
        for (w, c) in &buf {
            if *c != 0 {
                out.add_term(*w, coeff * BigRational::from_integer(BigInt::from(*c)));
            }
        }
    }
    Ok(out)
}

/// Exact action of a Sugawara mode on a state.
pub fn sugawara(space: &FockSpace, mode: VirasoroMode, v: &State) -> Result<State, VirasoroError> {
    sugawara_impl(space, mode, v, 0)
}

/// Same as [`sugawara`] with the truncation bound widened by `margin`; the
/// output must not depend on it.
pub fn sugawara_with_margin(
    space: &FockSpace,
    mode: VirasoroMode,
    v: &State,
    margin: u32,
) -> Result<State, VirasoroError> {
    sugawara_impl(space, mode, v, margin as i64)
}

fn central_term(n: i64, m: i64) -> BigRational {
    if n + m != 0 {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(CENTRAL_CHARGE * (n * n * n - n)), BigInt::from(12))
}

/// `[L_n, L_m]v - (n-m)L_{n+m}v - (c/12)(n³-n)δ_{n+m,0} v`.
pub fn commutator_defect(
    space: &FockSpace,
    n: i64,
    m: i64,
    chirality: Chirality,
    v: &State,
) -> Result<State, VirasoroError> {
    let ln = VirasoroMode { chirality, n };
    let lm = VirasoroMode { chirality, n: m };
    let lnm = VirasoroMode { chirality, n: n + m };
    let a = sugawara(space, ln, &sugawara(space, lm, v)?)?;
    let b = sugawara(space, lm, &sugawara(space, ln, v)?)?;
    let c = sugawara(space, lnm, v)?.scale(&BigRational::from_integer(BigInt::from(n - m)));
    Ok(a - b - c - v.scale(&central_term(n, m)))
}

/// `[L_n, L̄_m]v`.
pub fn mixed_commutator_defect(space: &FockSpace, n: i64, m: i64, v: &State) -> Result<State, VirasoroError> {
    if space.mode() == Mode::Chiral {
        return Err(VirasoroError::NeedsNonChiral("mixed commutator"));
    }
    let ln = VirasoroMode::holo(n);
    let lm = VirasoroMode::anti(m);
    let a = sugawara(space, ln, &sugawara(space, lm, v)?)?;
    let b = sugawara(space, lm, &sugawara(space, ln, v)?)?;
    Ok(a - b)
}

/// `((L₀ - Δ)w, (L₀ - Δ)²w)`, or the barred version for `Chirality::Anti`.
pub fn jordan_defect(space: &FockSpace, chirality: Chirality, w: &BasisWord) -> Result<(State, State), VirasoroError> {
    let d = w.bidegree();
    let delta = match chirality {
        Chirality::Holo => d.delta,
        Chirality::Anti => d.deltabar,
    };
    let delta = BigRational::from_integer(BigInt::from(delta));
    let l0 = VirasoroMode { chirality, n: 0 };
    let shifted = |v: &State| -> Result<State, VirasoroError> { Ok(sugawara(space, l0, v)? - v.scale(&delta)) };
    let first = shifted(&State::from_word(*w))?;
    let second = shifted(&first)?;
    Ok((first, second))
}

/// `(χ₀η₀ - χ̄₀η̄₀)v`.
pub fn gaberdiel_kausch_defect(space: &FockSpace, v: &State) -> Result<State, VirasoroError> {
    if space.mode() == Mode::Chiral {
        return Err(VirasoroError::NeedsNonChiral("zero-mode condition"));
    }
    let holo = space.apply_sequence(&[Generator::chi(0), Generator::eta(0)], v)?;
    let anti = space.apply_sequence(&[Generator::chibar(0), Generator::etabar(0)], v)?;
    Ok(holo - anti)
}

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub check: String,
    pub input: String,
    pub residual: State,
    /// `false` when the check asserts the residual is nonzero.
    pub expect_zero: bool,
}

impl DefectReport {
    pub fn zero(check: impl Into<String>, input: impl Into<String>, residual: State) -> Self {
        Self {
            check: check.into(),
            input: input.into(),
            residual,
            expect_zero: true,
        }
    }

    pub fn nonzero(check: impl Into<String>, input: impl Into<String>, residual: State) -> Self {
        Self {
            expect_zero: false,
            ..Self::zero(check, input, residual)
        }
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero() == self.expect_zero
    }
}

/// Collapses many residuals into one report: the first nonzero residual wins.
pub struct ReportCollector {
    check: String,
    input: String,
    residual: State,
    count: usize,
}

impl ReportCollector {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            input: String::new(),
            residual: State::zero(),
            count: 0,
        }
    }

    pub fn push(&mut self, label: impl FnOnce() -> String, residual: State) {
        self.count += 1;
        if self.residual.is_zero() && !residual.is_zero() {
            self.input = label();
            self.residual = residual;
        }
    }

    pub fn finish(self, summary: impl Into<String>) -> DefectReport {
        let summary = summary.into();
        let input = if self.residual.is_zero() {
            format!("{summary} ({} cases)", self.count)
        } else {
            self.input
        };
        DefectReport::zero(self.check, input, self.residual)
    }
}

/// Five exact identities from the staggered structure of the chiral Fock space.
pub fn staggered_verify(space: &FockSpace) -> Result<Vec<DefectReport>, VirasoroError> {
    let l = |n: i64, v: &State| sugawara(space, VirasoroMode::holo(n), v);
    let one = space.ground_state(GroundName::One)?;
    let omega = space.ground_state(GroundName::Omega)?;
    let mut reports = Vec::with_capacity(5);

    reports.push(DefectReport::zero("(a) L(-1) one = 0", "one", l(-1, &one)?));
    let l1w = l(-1, &omega)?;
    reports.push(DefectReport::nonzero("(b) L(-1) omega != 0", "omega", l1w.clone()));

    let two = BigRational::from_integer(BigInt::from(2));
    let residual = l(-1, &l(-1, &l1w)?)? - l(-2, &l1w)?.scale(&two) + l(-3, &one)?;
    reports.push(DefectReport::zero(
        "(c) (L(-1)^2 - 2 L(-2)) L(-1) omega + L(-3) one = 0",
        "omega",
        residual,
    ));

    let mut primaries = ReportCollector::new("(d) L(n) annihilates one, xi, theta for 0 <= n <= 6");
    for name in [GroundName::One, GroundName::Xi, GroundName::Theta] {
        let v = space.ground_state(name)?;
        for n in 0..=6 {
            primaries.push(|| format!("L({n}) {name:?}"), l(n, &v)?);
        }
    }
    reports.push(primaries.finish("one, xi, theta"));

    let mut currents = ReportCollector::new("(e) currents: L(n) = 0 for 1 <= n <= 6, L(0) = id");
    for name in [GroundName::ChiCur, GroundName::EtaCur] {
        let v = space.ground_state(name)?;
        for n in 1..=6 {
            currents.push(|| format!("L({n}) {name:?}"), l(n, &v)?);
        }
        currents.push(|| format!("L(0) {name:?} - {name:?}"), l(0, &v)? - v.clone());
    }
    reports.push(currents.finish("chi_cur, eta_cur"));
    Ok(reports)
}

/// Fast integer-coefficient variant of [`commutator_defect`] for basis sweeps.
fn int_commutator_defect(n: i64, m: i64, a: Chirality, b: Chirality, word: &BasisWord) -> IntState {
    let v: IntState = [(*word, 1)].into_iter().collect();
    let (ln, lm) = (VirasoroMode { chirality: a, n }, VirasoroMode { chirality: b, n: m });
    let mut out = int_apply(ln, &int_apply(lm, &v, 0), 0);
    for (w, c) in int_apply(lm, &int_apply(ln, &v, 0), 0) {
        *out.entry(w).or_insert(0) -= c;
    }
    if a == b {
        for (w, c) in int_apply(VirasoroMode { chirality: a, n: n + m }, &v, 0) {
            *out.entry(w).or_insert(0) -= (n - m) * c;
        }
        if n + m == 0 {
            // c/12 (n³ - n) with c = -2 is always an integer: -(n³ - n)/6.
            *out.entry(*word).or_insert(0) -= CENTRAL_CHARGE * (n * n * n - n) / 12;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Sweeps `[L_n, L_m]` (both chiralities) and `[L_n, L̄_m]` over `|n|, |m| <= max_mode`
/// and every basis word with `Δ + Δ̄ <= max_total`; one report per `(kind, n, m)`.
pub fn commutator_sweep(space: &FockSpace, max_mode: i64, max_total: u32) -> Vec<DefectReport> {
    let basis = space.basis_up_to(max_total, max_total, max_total);
    let mut kinds = vec![("virasoro", Chirality::Holo, Chirality::Holo)];
    if space.mode() == Mode::NonChiral {
        kinds.push(("virasoro-bar", Chirality::Anti, Chirality::Anti));
        kinds.push(("mixed", Chirality::Holo, Chirality::Anti));
    }
    let mut reports = Vec::new();
    for (kind, a, b) in kinds {
        for n in -max_mode..=max_mode {
            for m in -max_mode..=max_mode {
                let mut col = ReportCollector::new(format!("{kind} n={n} m={m}"));
                for word in &basis {
                    let d = int_commutator_defect(n, m, a, b, word);
                    col.push(|| word.to_string(), int_to_state(&d));
                }
                reports.push(col.finish(format!("basis words with total degree <= {max_total}")));
            }
        }
    }
    reports
}

/// `(L₀-Δ)² = 0` and `(L̄₀-Δ̄)² = 0` on every basis word up to `max_total`.
pub fn jordan_sweep(space: &FockSpace, max_total: u32) -> Result<Vec<DefectReport>, VirasoroError> {
    let basis = space.basis_up_to(max_total, max_total, max_total);
    let mut chiralities = vec![Chirality::Holo];
    if space.mode() == Mode::NonChiral {
        chiralities.push(Chirality::Anti);
    }
    let mut reports = Vec::new();
    for c in chiralities {
        let name = match c {
            Chirality::Holo => "jordan (L(0) - D)^2 = 0",
            Chirality::Anti => "jordan (Lbar(0) - Dbar)^2 = 0",
        };
        let mut col = ReportCollector::new(name);
        for word in &basis {
            let (_, second) = jordan_defect(space, c, word)?;
            col.push(|| word.to_string(), second);
        }
        reports.push(col.finish(format!("basis words with total degree <= {max_total}")));
    }
    let (first, _) = jordan_defect(space, Chirality::Holo, &BasisWord::OMEGA)?;
    reports.push(DefectReport::nonzero("jordan (L(0) - 0) omega != 0", "omega", first));
    Ok(reports)
}

/// Zero-mode condition on every basis word up to `max_total`.
pub fn gaberdiel_kausch_sweep(space: &FockSpace, max_total: u32) -> Result<DefectReport, VirasoroError> {
    let mut col = ReportCollector::new("zero modes (chi0 eta0 - chibar0 etabar0) v = 0");
    for word in space.basis_up_to(max_total, max_total, max_total) {
        col.push(|| word.to_string(), gaberdiel_kausch_defect(space, &State::from_word(word))?);
    }
    Ok(col.finish(format!("basis words with total degree <= {max_total}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chiral() -> FockSpace {
        FockSpace::chiral()
    }

    #[test]
    fn l0_on_omega_is_one() {
        let s = chiral();
        let out = sugawara(&s, VirasoroMode::holo(0), &State::omega()).unwrap();
        assert_eq!(out, s.ground_state(GroundName::One).unwrap());
    }

    #[test]
    fn l_minus_one_on_fermions_gives_currents() {
        let s = chiral();
        let theta = s.ground_state(GroundName::Theta).unwrap();
        let xi = s.ground_state(GroundName::Xi).unwrap();
        let lm1 = VirasoroMode::holo(-1);
        assert_eq!(sugawara(&s, lm1, &theta).unwrap(), s.ground_state(GroundName::EtaCur).unwrap());
        assert_eq!(sugawara(&s, lm1, &xi).unwrap(), s.ground_state(GroundName::ChiCur).unwrap());
    }

    #[test]
    fn barred_l_minus_one() {
        let s = FockSpace::non_chiral();
        let theta = s.ground_state(GroundName::Theta).unwrap();
        let out = sugawara(&s, VirasoroMode::anti(-1), &theta).unwrap();
        assert_eq!(out, s.ground_state(GroundName::EtabarCur).unwrap());
    }

    #[test]
    fn central_term_example() {
        let s = chiral();
        let one = s.ground_state(GroundName::One).unwrap();
        let d = commutator_defect(&s, 2, -2, Chirality::Holo, &one).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn chiral_space_rejects_anti_modes() {
        let s = chiral();
        assert!(sugawara(&s, VirasoroMode::anti(0), &State::omega()).is_err());
        assert!(gaberdiel_kausch_defect(&s, &State::omega()).is_err());
        assert!(mixed_commutator_defect(&s, 0, 0, &State::omega()).is_err());
    }

    #[test]
    fn integer_path_matches_rational_path() {
        let s = FockSpace::non_chiral();
        for word in s.basis_up_to(2, 1, 3) {
            let v = State::from_word(word);
            for (n, m) in [(1, -1), (2, -3), (-2, 0)] {
                let exact = commutator_defect(&s, n, m, Chirality::Holo, &v).unwrap();
                let fast = int_to_state(&int_commutator_defect(n, m, Chirality::Holo, Chirality::Holo, &word));
                assert_eq!(exact, fast);
            }
        }
    }

    #[test]
    fn staggered_all_pass() {
        let reports = staggered_verify(&chiral()).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(DefectReport::passed));
    }

    #[test]
    fn ceil_half_rounds_up() {
        assert_eq!(ceil_half(3), 2);
        assert_eq!(ceil_half(-3), -1);
        assert_eq!(ceil_half(4), 2);
        assert_eq!(ceil_half(-4), -2);
    }
}
