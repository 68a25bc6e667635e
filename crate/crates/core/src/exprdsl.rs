//! Text syntax for states and correlator queries.
//!
//! ```text
//! query     := "corr(" domain ";" scalar ";" "[" insertion ("," insertion)* "]" ")"
//! insertion := state "@" complex
//! state     := ["-"] term (("+" | "-") term)*
//! term      := [rational "*"] factor ("*" factor)*  |  "0"
//! factor    := name | gen "(" int ")" | "|omega>"
//! domain    := "disk" | "halfplane" | "quadrant" | "mobius:" domain ":" scalar "," scalar "," scalar "," scalar
//! complex   := real ("+" | "-") real "i"
//! scalar    := complex | real
//! ```
//!
//! A product must end in a state (a name or `|omega>`); the generators to its
//! left act on it. Names are `omega`, `one`, `xi`, `theta` and the currents
//! `chi`, `eta`, `chibar`, `etabar`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::correlators::CorrelatorQuery;
use crate::fockspace::{FockError, FockSpace, Generator, GroundName, State};
use crate::geometry::{fmt_complex, make_domain, Domain, DomainSpec, GeometryError, Mobius};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("coincident insertion points")]
    CoincidentPoints,
}

/// A rejection with its position in the input.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct DslError {
    pub kind: DslErrorKind,
    /// Byte offset into the input.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    space: FockSpace,
}

type PResult<T> = Result<T, DslError>;

fn is_ident(b: u8) -> bool {
    b.is_ascii_lowercase() || b == b'_'
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, space: FockSpace) -> Self {
        Self { src, pos: 0, space }
    }

    fn error_at(&self, offset: usize, kind: impl Into<DslErrorKind>) -> DslError {
        let before = &self.src[..offset.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        DslError {
            kind: kind.into(),
            offset,
            line,
            column,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> DslError {
        self.error_at(self.pos, DslErrorKind::Syntax(msg.into()))
    }

    fn bytes(&self) -> &[u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> PResult<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{token}`")))
        }
    }

    fn finish(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.syntax("unexpected trailing input"))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && is_ident(self.bytes()[self.pos]) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.src[start..self.pos]))
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.pos - start
    }

    fn integer(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes().get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        if self.digits() == 0 {
            self.pos = start;
            return Err(self.syntax("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("validated digits"))
    }

    /// `int` or `int/int`, unsigned.
    fn rational(&mut self) -> PResult<Option<BigRational>> {
        self.skip_ws();
        if !self.bytes().get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Ok(None);
        }
        let numer = self.integer()?;
        let mut denom = BigInt::one();
        if self.eat("/") {
            let at = self.pos;
            denom = self.integer()?;
            if denom.is_zero() {
                return Err(self.error_at(at, DslErrorKind::Syntax("zero denominator".into())));
            }
        }
        Ok(Some(BigRational::new(numer, denom)))
    }

    fn real(&mut self) -> PResult<f64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes().get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let int_digits = self.digits();
        let mut frac_digits = 0;
        if self.bytes().get(self.pos) == Some(&b'.') {
            self.pos += 1;
            frac_digits = self.digits();
        }
        if int_digits + frac_digits == 0 {
            self.pos = start;
            return Err(self.syntax("expected a number"));
        }
        if matches!(self.bytes().get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.bytes().get(self.pos), Some(b'-' | b'+')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                self.pos = mark;
            }
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, DslErrorKind::Syntax("malformed number".into())))
    }

    /// `a+bi`; with `allow_real`, a bare real is accepted too.
    fn complex(&mut self, allow_real: bool) -> PResult<Complex64> {
        let re = self.real()?;
        let sign = match self.peek() {
            Some(b'+') => 1.0,
            Some(b'-') => -1.0,
            _ if allow_real => return Ok(Complex64::new(re, 0.0)),
            _ => return Err(self.syntax("expected `+` or `-` and an imaginary part")),
        };
        self.pos += 1;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            return Err(self.syntax("malformed complex literal"));
        }
        let im = self.real()?;
        if !self.eat("i") {
            return Err(self.syntax("expected `i` after the imaginary part"));
        }
        Ok(Complex64::new(re, sign * im))
    }

    fn state(&mut self) -> PResult<State> {
        let mut total = State::zero();
        let mut negative = self.eat("-");
        loop {
            let term = self.term()?;
            total += if negative { -term } else { term };
            if self.eat("+") {
                negative = false;
            } else if self.eat("-") {
                negative = true;
            } else {
                return Ok(total);
            }
        }
    }

    fn term(&mut self) -> PResult<State> {
        let coeff_at = {
            self.skip_ws();
            self.pos
        };
        let coeff = self.rational()?;
        if let Some(c) = &coeff {
            if !self.eat("*") {
                if c.is_zero() {
                    return Ok(State::zero());
                }
                return Err(self.error_at(coeff_at, DslErrorKind::Syntax("expected `*` after coefficient".into())));
            }
        }
        let mut gens: Vec<(usize, Generator)> = Vec::new();
        let state = loop {
            self.skip_ws();
            if self.eat("|omega>") {
                break State::omega();
            }
            let Some((at, name)) = self.ident() else {
                return Err(self.syntax("expected a generator or a state name"));
            };
            if self.eat("(") {
                let index_at = self.pos;
                let index = self.integer()?;
                self.expect(")")?;
                let index: i64 = index
                    .try_into()
                    .map_err(|_| self.error_at(index_at, DslErrorKind::Syntax("mode index too large".into())))?;
                let g = match name {
                    "eta" => Generator::eta(index),
                    "chi" => Generator::chi(index),
                    "etabar" => Generator::etabar(index),
                    "chibar" => Generator::chibar(index),
                    other => return Err(self.error_at(at, DslErrorKind::UnknownIdentifier(other.into()))),
                };
                gens.push((at, g));
                self.skip_ws();
                if !self.eat("*") && !self.src[self.pos..].starts_with("|omega>") {
                    return Err(self.syntax("a product must end in a state such as `omega`"));
                }
                continue;
            }
            let ground: GroundName = name
                .parse()
                .map_err(|_| self.error_at(at, DslErrorKind::UnknownIdentifier(name.into())))?;
            break self.space.ground_state(ground).map_err(|e| self.error_at(at, e))?;
        };
        let mut v = state;
        for (at, g) in gens.into_iter().rev() {
            v = self.space.apply_generator(g, &v).map_err(|e| self.error_at(at, e))?;
        }
        Ok(match coeff {
            Some(c) => v.scale(&c),
            None => v,
        })
    }

    fn domain(&mut self) -> PResult<DomainSpec> {
        let Some((at, name)) = self.ident() else {
            return Err(self.syntax("expected a domain"));
        };
        match name {
            "disk" => Ok(DomainSpec::Disk),
            "halfplane" => Ok(DomainSpec::HalfPlane),
            "quadrant" => Ok(DomainSpec::Quadrant),
            "mobius" => {
                self.expect(":")?;
                let inner = self.domain()?;
                self.expect(":")?;
                let coeff_at = self.pos;
                let a = self.complex(true)?;
                self.expect(",")?;
                let b = self.complex(true)?;
                self.expect(",")?;
                let c = self.complex(true)?;
                self.expect(",")?;
                let d = self.complex(true)?;
                let m = Mobius::new(a, b, c, d).map_err(|e| self.error_at(coeff_at, e))?;
                Ok(DomainSpec::MobiusOf(Box::new(inner), m))
            }
            other => Err(self.error_at(at, DslErrorKind::UnknownIdentifier(other.into()))),
        }
    }

    fn query(&mut self) -> PResult<CorrelatorQuery> {
        self.expect("corr")?;
        self.expect("(")?;
        let domain_at = {
            self.skip_ws();
            self.pos
        };
        let spec = self.domain()?;
        let domain = make_domain(spec).map_err(|e| self.error_at(domain_at, e))?;
        self.expect(";")?;
        let alpha = self.complex(true)?;
        self.expect(";")?;
        self.expect("[")?;
        let mut insertions: Vec<(State, Complex64)> = Vec::new();
        loop {
            let state = self.state()?;
            self.expect("@")?;
            let point_at = {
                self.skip_ws();
                self.pos
            };
            let point = self.complex(false)?;
            if !domain.contains(point) {
                return Err(self.error_at(point_at, GeometryError::OutsideDomain(point)));
            }
            if insertions.iter().any(|(_, p)| *p == point) {
                return Err(self.error_at(point_at, DslErrorKind::CoincidentPoints));
            }
            insertions.push((state, point));
            if !self.eat(",") {
                break;
            }
        }
        self.expect("]")?;
        self.expect(")")?;
        Ok(CorrelatorQuery::new(domain, alpha, insertions))
    }
}

/// Parses a state in the given Fock space.
pub fn parse_state(text: &str, space: &FockSpace) -> Result<State, DslError> {
    let mut p = Parser::new(text, *space);
    let s = p.state()?;
    p.finish()?;
    Ok(s)
}

/// Parses a full correlator query; states live in the non-chiral space.
pub fn parse_query(text: &str) -> Result<CorrelatorQuery, DslError> {
    let mut p = Parser::new(text, FockSpace::non_chiral());
    let q = p.query()?;
    p.finish()?;
    Ok(q)
}

pub fn parse_domain(text: &str) -> Result<Domain, DslError> {
    let mut p = Parser::new(text, FockSpace::non_chiral());
    let spec = p.domain()?;
    p.finish()?;
    make_domain(spec).map_err(|e| p.error_at(0, e))
}

/// A complex literal (`a+bi`) or, with `allow_real`, a bare real.
pub fn parse_complex(text: &str, allow_real: bool) -> Result<Complex64, DslError> {
    let mut p = Parser::new(text, FockSpace::non_chiral());
    let z = p.complex(allow_real)?;
    p.finish()?;
    Ok(z)
}

/// Anything with a canonical text form.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for State {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Render for Domain {
    fn render(&self) -> String {
        self.descriptor()
    }
}

impl Render for CorrelatorQuery {
    fn render(&self) -> String {
        QueryText(self).to_string()
    }
}

struct QueryText<'a>(&'a CorrelatorQuery);

impl fmt::Display for QueryText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        write!(f, "corr({}; {}; [", q.domain, fmt_complex(q.alpha))?;
        for (i, (state, point)) in q.insertions.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{state} @ {}", fmt_complex(*point))?;
        }
        f.write_str("])")
    }
}

pub fn render<T: Render>(value: &T) -> String {
    value.render()
}
