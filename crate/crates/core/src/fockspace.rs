//! The symplectic-fermion mode algebra acting on the logarithmic Fock space.
//!
//! A [`BasisWord`] is a canonically ordered product of creation modes
//! applied to the cyclic vector `ω`:
//!
//! ```text
//! η_{-k_r}⋯η_{-k_1} χ_{-l_s}⋯χ_{-l_1} η̄_{-k̄_r̄}⋯η̄_{-k̄_1} χ̄_{-l̄_s̄}⋯χ̄_{-l̄_1} ω
//! ```
//!
//! with strictly increasing `k_1 < ⋯ < k_r` inside each block (the largest
//! index is leftmost). Unbarred blocks may contain the zero mode, barred
//! blocks may not: barred zero modes are identified with the unbarred ones.
//!
//! Each block is stored as a `u64` bitmask (bit `k` set means the mode with
//! index `-k` is present), so mode indices are limited to `0..64`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest creation index a [`BasisWord`] can hold.
pub const MAX_MODE_INDEX: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("barred generator {0} applied in the chiral Fock space")]
    ChiralityMismatch(Generator),
    #[error("mode index {0} exceeds the supported range (|index| <= {MAX_MODE_INDEX})")]
    ModeOutOfRange(i64),
    #[error("unknown ground state name `{0}`")]
    UnknownGroundState(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Eta,
    Chi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Holo,
    Anti,
}

/// A single current mode such as `η_k` or `χ̄_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub species: Species,
    pub chirality: Chirality,
    pub index: i64,
}

impl Generator {
    pub const fn new(species: Species, chirality: Chirality, index: i64) -> Self {
        Self {
            species,
            chirality,
            index,
        }
    }

    pub const fn eta(index: i64) -> Self {
        Self::new(Species::Eta, Chirality::Holo, index)
    }

    pub const fn chi(index: i64) -> Self {
        Self::new(Species::Chi, Chirality::Holo, index)
    }

    pub const fn etabar(index: i64) -> Self {
        Self::new(Species::Eta, Chirality::Anti, index)
    }

    pub const fn chibar(index: i64) -> Self {
        Self::new(Species::Chi, Chirality::Anti, index)
    }

    /// DSL / rendering name: `eta`, `chi`, `etabar`, `chibar`.
    pub fn name(&self) -> &'static str {
        match (self.species, self.chirality) {
            (Species::Eta, Chirality::Holo) => "eta",
            (Species::Chi, Chirality::Holo) => "chi",
            (Species::Eta, Chirality::Anti) => "etabar",
            (Species::Chi, Chirality::Anti) => "chibar",
        }
    }

    /// Barred zero modes act as the unbarred ones on the non-chiral space.
    fn identified(self) -> Self {
        if self.chirality == Chirality::Anti && self.index == 0 {
            Self::new(self.species, Chirality::Holo, 0)
        } else {
            self
        }
    }

    /// The scalar `{self, other}`: `k δ_{k+l}` for `{η_k, χ_l}` of equal chirality.
    pub fn anticommutator(&self, other: &Generator) -> i64 {
        if self.chirality != other.chirality || self.species == other.species {
            return 0;
        }
        if self.index + other.index != 0 {
            return 0;
        }
        match self.species {
            Species::Eta => self.index,
            Species::Chi => other.index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Bos,
    Fer,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Bos => Parity::Fer,
            Parity::Fer => Parity::Bos,
        }
    }
}

/// Generalized `(L₀, L̄₀)` eigenvalues of a basis word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub delta: u32,
    pub deltabar: u32,
}

impl Bidegree {
    pub const fn new(delta: u32, deltabar: u32) -> Self {
        Self { delta, deltabar }
    }

    pub fn total(&self) -> u32 {
        self.delta + self.deltabar
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta, self.deltabar)
    }
}

/// A PBW basis vector of the Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BasisWord {
    eta: u64,
    chi: u64,
    etabar: u64,
    chibar: u64,
}

fn mask_of(indices: &[u32], allow_zero: bool) -> Option<u64> {
    let mut mask = 0u64;
    let mut prev: Option<u32> = None;
    for &k in indices {
        if k > MAX_MODE_INDEX || (!allow_zero && k == 0) {
            return None;
        }
        if prev.is_some_and(|p| p >= k) {
            return None;
        }
        prev = Some(k);
        mask |= 1 << k;
    }
    Some(mask)
}

fn indices_of(mask: u64) -> Vec<u32> {
    (0..64).filter(|k| mask & (1 << k) != 0).collect()
}

fn index_sum(mask: u64) -> u32 {
    (0..64u32).filter(|k| mask & (1 << k) != 0).sum()
}

/// Number of set bits strictly above `k`.
fn above(mask: u64, k: u32) -> u32 {
    if k >= 63 {
        0
    } else {
        (mask >> (k + 1)).count_ones()
    }
}

fn sign(exponent: u32) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl BasisWord {
    /// The cyclic vector `ω`.
    pub const OMEGA: BasisWord = BasisWord {
        eta: 0,
        chi: 0,
        etabar: 0,
        chibar: 0,
    };

    /// Builds a word from strictly increasing index lists (`k` stands for the
    /// mode with index `-k`). Returns `None` when the lists are not canonical.
    pub fn from_indices(eta: &[u32], chi: &[u32], etabar: &[u32], chibar: &[u32]) -> Option<Self> {
        Some(Self {
            eta: mask_of(eta, true)?,
            chi: mask_of(chi, true)?,
            etabar: mask_of(etabar, false)?,
            chibar: mask_of(chibar, false)?,
        })
    }

    pub fn eta_indices(&self) -> Vec<u32> {
        indices_of(self.eta)
    }

    pub fn chi_indices(&self) -> Vec<u32> {
        indices_of(self.chi)
    }

    pub fn etabar_indices(&self) -> Vec<u32> {
        indices_of(self.etabar)
    }

    pub fn chibar_indices(&self) -> Vec<u32> {
        indices_of(self.chibar)
    }

    pub fn len(&self) -> u32 {
        self.eta.count_ones() + self.chi.count_ones() + self.etabar.count_ones() + self.chibar.count_ones()
    }

    pub fn is_omega(&self) -> bool {
        *self == Self::OMEGA
    }

    /// Same as [`BasisWord::is_omega`]: no generators at all.
    pub fn is_empty(&self) -> bool {
        self.is_omega()
    }

    pub fn is_chiral(&self) -> bool {
        self.etabar == 0 && self.chibar == 0
    }

    pub fn parity(&self) -> Parity {
        if self.len().is_multiple_of(2) {
            Parity::Bos
        } else {
            Parity::Fer
        }
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(
            index_sum(self.eta) + index_sum(self.chi),
            index_sum(self.etabar) + index_sum(self.chibar),
        )
    }

    /// Largest stored index, 0 for `ω`.
    pub fn max_index(&self) -> u32 {
        let all = self.eta | self.chi | self.etabar | self.chibar;
        if all == 0 {
            0
        } else {
            63 - all.leading_zeros()
        }
    }

    /// The generators of the word, leftmost first, in canonical order.
    pub fn generators(&self) -> Vec<Generator> {
        let block = |mask: u64, make: fn(i64) -> Generator| {
            indices_of(mask).into_iter().rev().map(move |k| make(-(k as i64)))
        };
        block(self.eta, Generator::eta)
            .chain(block(self.chi, Generator::chi))
            .chain(block(self.etabar, Generator::etabar))
            .chain(block(self.chibar, Generator::chibar))
            .collect()
    }

    /// Left action of a single generator: `g · (self) = coeff · word`, or `None`
    /// when the result vanishes.
    pub(crate) fn act(&self, g: Generator) -> Result<Option<(i64, BasisWord)>, FockError> {
        let g = g.identified();
        let n_eta = self.eta.count_ones();
        let n_chi = self.chi.count_ones();
        let n_etabar = self.etabar.count_ones();
        let mut out = *self;
        if g.index <= 0 {
            let k = u32::try_from(-g.index).ok().filter(|&k| k <= MAX_MODE_INDEX);
            let k = k.ok_or(FockError::ModeOutOfRange(g.index))?;
            let bit = 1u64 << k;
            let (mask, passed) = match (g.species, g.chirality) {
                (Species::Eta, Chirality::Holo) => (&mut out.eta, 0),
                (Species::Chi, Chirality::Holo) => (&mut out.chi, n_eta),
                (Species::Eta, Chirality::Anti) => (&mut out.etabar, n_eta + n_chi),
                (Species::Chi, Chirality::Anti) => (&mut out.chibar, n_eta + n_chi + n_etabar),
            };
            if *mask & bit != 0 {
                return Ok(None);
            }
            let exponent = passed + above(*mask, k);
            *mask |= bit;
            return Ok(Some((sign(exponent), out)));
        }
        // Annihilation: contracts with the partner creation mode of the same chirality.
        let Ok(k) = u32::try_from(g.index) else {
            return Ok(None);
        };
        if k > MAX_MODE_INDEX {
            return Ok(None);
        }
        let bit = 1u64 << k;
        let (mask, passed, coeff) = match (g.species, g.chirality) {
            (Species::Eta, Chirality::Holo) => (&mut out.chi, n_eta, g.index),
            (Species::Chi, Chirality::Holo) => (&mut out.eta, 0, -g.index),
            (Species::Eta, Chirality::Anti) => (&mut out.chibar, n_eta + n_chi + n_etabar, g.index),
            (Species::Chi, Chirality::Anti) => (&mut out.etabar, n_eta + n_chi, -g.index),
        };
        if *mask & bit == 0 {
            return Ok(None);
        }
        let exponent = passed + above(*mask, k);
        *mask &= !bit;
        Ok(Some((sign(exponent) * coeff, out)))
    }
}

impl Ord for BasisWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |w: &BasisWord| {
            let d = w.bidegree();
            (d.total(), d.delta, w.len(), w.eta, w.chi, w.etabar, w.chibar)
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for BasisWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("|omega>")
    }
}

/// A finite linear combination of basis words with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct State {
    terms: BTreeMap<BasisWord, BigRational>,
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl State {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn omega() -> Self {
        Self::from_word(BasisWord::OMEGA)
    }

    pub fn from_word(word: BasisWord) -> Self {
        Self::from_term(word, BigRational::one())
    }

    pub fn from_term(word: BasisWord, coeff: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(word, coeff);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &BigRational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &BasisWord> {
        self.terms.keys()
    }

    pub fn coefficient(&self, word: &BasisWord) -> BigRational {
        self.terms.get(word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, word: BasisWord, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_int_term(&mut self, word: BasisWord, coeff: i64) {
        self.add_term(word, rational(coeff));
    }

    pub fn scale(&self, factor: &BigRational) -> State {
        if factor.is_zero() {
            return State::zero();
        }
        State {
            terms: self.terms.iter().map(|(w, c)| (*w, c * factor)).collect(),
        }
    }

    /// Largest index stored in any word (0 for the zero state).
    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(BasisWord::max_index).max().unwrap_or(0)
    }

    pub fn is_chiral(&self) -> bool {
        self.terms.keys().all(BasisWord::is_chiral)
    }

    /// Parity if every word shares it; `None` for the zero state or mixed parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(BasisWord::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                if magnitude.is_integer() {
                    write!(f, "{}*", magnitude.numer())?;
                } else {
                    write!(f, "{}/{}*", magnitude.numer(), magnitude.denom())?;
                }
            }
            write!(f, "{word}")?;
        }
        Ok(())
    }
}

impl Add for State {
    type Output = State;
    fn add(mut self, rhs: State) -> State {
        self += rhs;
        self
    }
}

impl AddAssign for State {
    fn add_assign(&mut self, rhs: State) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl Sub for State {
    type Output = State;
    fn sub(self, rhs: State) -> State {
        self + (-rhs)
    }
}

impl Neg for State {
    type Output = State;
    fn neg(self) -> State {
        State {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl Mul<&State> for &BigRational {
    type Output = State;
    fn mul(self, rhs: &State) -> State {
        rhs.scale(self)
    }
}

impl From<BasisWord> for State {
    fn from(word: BasisWord) -> Self {
        State::from_word(word)
    }
}

/// Converts a rational coefficient to `f64` (used by numeric evaluation).
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Whether barred modes are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Chiral,
    NonChiral,
}

/// Named distinguished vectors: the four ground states and the currents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundName {
    One,
    Omega,
    Xi,
    Theta,
    ChiCur,
    EtaCur,
    ChibarCur,
    EtabarCur,
}

impl FromStr for GroundName {
    type Err = FockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "one" => GroundName::One,
            "omega" => GroundName::Omega,
            "xi" => GroundName::Xi,
            "theta" => GroundName::Theta,
            "chi_cur" | "chi" => GroundName::ChiCur,
            "eta_cur" | "eta" => GroundName::EtaCur,
            "chibar_cur" | "chibar" => GroundName::ChibarCur,
            "etabar_cur" | "etabar" => GroundName::EtabarCur,
            other => return Err(FockError::UnknownGroundState(other.to_string())),
        })
    }
}

/// The chiral or non-chiral logarithmic Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockSpace {
    mode: Mode,
}

impl FockSpace {
    pub const fn new(mode: Mode) -> Self {
        Self { mode }
    }

    pub const fn chiral() -> Self {
        Self::new(Mode::Chiral)
    }

    pub const fn non_chiral() -> Self {
        Self::new(Mode::NonChiral)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn check(&self, g: Generator) -> Result<(), FockError> {
        if self.mode == Mode::Chiral && g.chirality == Chirality::Anti {
            return Err(FockError::ChiralityMismatch(g));
        }
        Ok(())
    }

    /// Left action of `g` on a single basis word.
    pub fn apply_to_word(&self, g: Generator, word: &BasisWord) -> Result<State, FockError> {
        self.check(g)?;
        let mut out = State::zero();
        if let Some((c, w)) = word.act(g)? {
            out.add_int_term(w, c);
        }
        Ok(out)
    }

    /// Left action of `g` on a state, extended linearly.
    pub fn apply_generator(&self, g: Generator, v: &State) -> Result<State, FockError> {
        self.check(g)?;
        let mut out = State::zero();
        for (word, coeff) in v.terms() {
            if let Some((c, w)) = word.act(g)? {
                out.add_term(w, coeff * rational(c));
            }
        }
        Ok(out)
    }

    /// Applies a product of generators (leftmost acts last).
    pub fn apply_sequence(&self, raw: &[Generator], v: &State) -> Result<State, FockError> {
        raw.iter()
            .rev()
            .try_fold(v.clone(), |acc, g| self.apply_generator(*g, &acc))
    }

    /// Rewrites `raw · ω` in the PBW basis.
    pub fn normal_order(&self, raw: &[Generator]) -> Result<State, FockError> {
        self.apply_sequence(raw, &State::omega())
    }

    pub fn ground_state(&self, name: GroundName) -> Result<State, FockError> {
        use Generator as G;
        let minus = |s: State| -s;
        match name {
            GroundName::Omega => Ok(State::omega()),
            GroundName::One => self.normal_order(&[G::chi(0), G::eta(0)]),
            GroundName::Xi => self.normal_order(&[G::chi(0)]).map(minus),
            GroundName::Theta => self.normal_order(&[G::eta(0)]).map(minus),
            GroundName::ChiCur => self.normal_order(&[G::chi(-1), G::chi(0), G::eta(0)]),
            GroundName::EtaCur => self.normal_order(&[G::eta(-1), G::chi(0), G::eta(0)]),
            GroundName::ChibarCur => self.normal_order(&[G::chibar(-1), G::chi(0), G::eta(0)]),
            GroundName::EtabarCur => self.normal_order(&[G::etabar(-1), G::chi(0), G::eta(0)]),
        }
    }

    /// All canonical basis words of bidegree `d`.
    pub fn enumerate_basis(&self, d: Bidegree) -> Vec<BasisWord> {
        if self.mode == Mode::Chiral && d.deltabar != 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for eta_sum in 0..=d.delta {
            let etas = strict_subsets(eta_sum, true);
            let chis = strict_subsets(d.delta - eta_sum, true);
            for etabar_sum in 0..=d.deltabar {
                let etabars = strict_subsets(etabar_sum, false);
                let chibars = strict_subsets(d.deltabar - etabar_sum, false);
                for &eta in &etas {
                    for &chi in &chis {
                        for &etabar in &etabars {
                            for &chibar in &chibars {
                                out.push(BasisWord {
                                    eta,
                                    chi,
                                    etabar,
                                    chibar,
                                });
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Every basis word with `Δ + Δ̄ <= max_total` (and `Δ <= max_delta`, `Δ̄ <= max_deltabar`).
    pub fn basis_up_to(&self, max_delta: u32, max_deltabar: u32, max_total: u32) -> Vec<BasisWord> {
        let max_deltabar = if self.mode == Mode::Chiral { 0 } else { max_deltabar };
        let mut out = Vec::new();
        for delta in 0..=max_delta {
            for deltabar in 0..=max_deltabar {
                if delta + deltabar <= max_total {
                    out.extend(self.enumerate_basis(Bidegree::new(delta, deltabar)));
                }
            }
        }
        out
    }

    /// The module automorphism fixed by `ω ↦ ω + a·𝟙`.
    pub fn automorphism_alpha(&self, a: &BigRational, v: &State) -> Result<State, FockError> {
        if a.is_zero() {
            return Ok(v.clone());
        }
        let mut out = v.clone();
        for (word, coeff) in v.terms() {
            let mut raw = word.generators();
            raw.push(Generator::chi(0));
            raw.push(Generator::eta(0));
            out += self.normal_order(&raw)?.scale(&(coeff * a));
        }
        Ok(out)
    }
}

/// Bitmasks of all strict subsets of `Z≥0` (or `Z≥1`) summing to `sum`.
fn strict_subsets(sum: u32, allow_zero: bool) -> Vec<u64> {
    fn rec(remaining: u32, min_part: u32, mask: u64, out: &mut Vec<u64>) {
        if remaining == 0 {
            out.push(mask);
            return;
        }
        for part in min_part..=remaining {
            if part > MAX_MODE_INDEX {
                break;
            }
            rec(remaining - part, part + 1, mask | (1 << part), out);
        }
    }
    let mut positive = Vec::new();
    rec(sum, 1, 0, &mut positive);
    if allow_zero {
        let with_zero: Vec<u64> = positive.iter().map(|m| m | 1).collect();
        positive.extend(with_zero);
    }
    positive
}
