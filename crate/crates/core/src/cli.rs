//! The `symfer` command line.
//!
//! Reports go to standard output as JSON lines (or CSV), a short summary goes
//! to standard error. Exit status: 0 on success, 1 when a check or an
//! evaluation fails, 2 on usage or parse errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::correlators::{evaluate_with_error, general_correlator, CorrelatorQuery, DEFAULT_NODES};
use crate::exprdsl::{parse_complex, parse_domain, parse_query, render};
use crate::fockspace::{BasisWord, Bidegree, Chirality, FockSpace, Generator, State};
use crate::geometry::{fmt_complex, green};
use crate::virasoro::{
    commutator_sweep, gaberdiel_kausch_sweep, jordan_sweep, staggered_verify, DefectReport, ReportCollector, VirasoroError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "symfer", version, about = "Symplectic fermions at c = -2: exact algebra checks and correlators")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest total degree of basis words in exact sweeps.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=12))]
    pub max_degree: u32,
    /// Largest |n| of Virasoro or current modes in exact sweeps.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..=12))]
    pub max_mode: i64,
    /// Trapezoid nodes per contour.
    #[arg(long, global = true, default_value_t = DEFAULT_NODES, value_parser = parse_nodes)]
    pub nodes: usize,
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Overrides the parameter alpha of a query (`a+bi` or a real).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}

fn parse_nodes(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 4 {
        return Err("at least 4 nodes are required".into());
    }
    Ok(n)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact mode-algebra identities on the Fock space.
    VerifyAlgebra,
    /// Virasoro relations, Jordan structure and the zero-mode condition.
    VerifyVirasoro,
    /// The staggered-module identities in the chiral Fock space.
    VerifyStaggered,
    /// Evaluates one correlator query.
    Eval { query: String },
    /// Sweeps one insertion point over a rectangular lattice.
    Grid {
        query: String,
        /// Which insertion moves.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        y_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        y_max: f64,
        /// Lattice points per axis.
        #[arg(long, default_value_t = 21, value_parser = clap::value_parser!(u32).range(2..))]
        steps: u32,
    },
    /// Dirichlet Green's function between two points.
    Green {
        domain: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
}

#[derive(Debug, Serialize)]
struct ReportLine<'a> {
    check: &'a str,
    input: &'a str,
    residual: String,
    residual_terms: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
struct EvalLine {
    query: String,
    value_re: f64,
    value_im: f64,
    abs_err_estimate: f64,
    nodes: usize,
}

#[derive(Debug, Serialize)]
struct GreenLine {
    domain: String,
    z: String,
    w: String,
    total: f64,
    regular: f64,
    singular: f64,
}

/// Failure categories mapped to exit codes.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<VirasoroError> for Failure {
    fn from(e: VirasoroError) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Failure> {
    let cfg = &cli.config;
    match &cli.command {
        Command::VerifyAlgebra => {
            let reports = algebra_suite(cfg);
            emit_reports(cfg, &reports, Some(cfg.seed), out, err)
        }
        Command::VerifyVirasoro => {
            let space = FockSpace::non_chiral();
            let mut reports = commutator_sweep(&space, cfg.max_mode, cfg.max_degree);
            reports.extend(jordan_sweep(&space, cfg.max_degree)?);
            reports.push(gaberdiel_kausch_sweep(&space, cfg.max_degree)?);
            emit_reports(cfg, &reports, None, out, err)
        }
        Command::VerifyStaggered => {
            let reports = staggered_verify(&FockSpace::chiral())?;
            emit_reports(cfg, &reports, None, out, err)
        }
        Command::Eval { query } => {
            let q = load_query(cfg, query)?;
            let e = evaluate_with_error(&q, cfg.nodes).map_err(|e| Failure::Runtime(e.to_string()))?;
            let line = EvalLine {
                query: render(&q),
                value_re: e.value.re,
                value_im: e.value.im,
                abs_err_estimate: e.abs_err_estimate,
                nodes: e.nodes,
            };
            match cfg.output.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => writeln!(out, "{}", json(&line))?,
                OutputFormat::Csv => {
                    writeln!(out, "re,im,abs_err_estimate")?;
                    writeln!(out, "{:.14e},{:.14e},{:.14e}", e.value.re, e.value.im, e.abs_err_estimate)?;
                }
            }
            writeln!(err, "value {} (error estimate {:.1e})", fmt_complex(e.value), e.abs_err_estimate)?;
            Ok(true)
        }
        Command::Grid {
            query,
            index,
            x_min,
            x_max,
            y_min,
            y_max,
            steps,
        } => {
            let q = load_query(cfg, query)?;
            if *index >= q.insertions.len() {
                return Err(Failure::Usage(format!(
                    "--index {index} out of range ({} insertions)",
                    q.insertions.len()
                )));
            }
            if !(x_min < x_max && y_min < y_max) {
                return Err(Failure::Usage("grid bounds must satisfy min < max".into()));
            }
            grid(cfg, &q, *index, (*x_min, *x_max), (*y_min, *y_max), *steps, out, err)
        }
        Command::Green { domain, z, w } => {
            let d = parse_domain(domain).map_err(|e| Failure::Usage(format!("domain: {e}")))?;
            let zc = parse_complex(z, false).map_err(|e| Failure::Usage(format!("z: {e}")))?;
            let wc = parse_complex(w, false).map_err(|e| Failure::Usage(format!("w: {e}")))?;
            let g = green(&d, zc, wc).map_err(|e| Failure::Runtime(e.to_string()))?;
            let line = GreenLine {
                domain: d.descriptor(),
                z: fmt_complex(zc),
                w: fmt_complex(wc),
                total: g.total,
                regular: g.regular,
                singular: g.singular,
            };
            writeln!(out, "{}", json(&line))?;
            writeln!(err, "G = {:.15}", g.total)?;
            Ok(true)
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn load_query(cfg: &RunConfig, text: &str) -> Result<CorrelatorQuery, Failure> {
    let mut q = parse_query(text).map_err(|e| Failure::Usage(format!("query: {e}")))?;
    if let Some(a) = &cfg.alpha {
        q.alpha = parse_complex(a, true).map_err(|e| Failure::Usage(format!("--alpha: {e}")))?;
    }
    Ok(q)
}

fn emit_reports(
    cfg: &RunConfig,
    reports: &[DefectReport],
    seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, Failure> {
    let format = cfg.output.unwrap_or(OutputFormat::Json);
    if format == OutputFormat::Csv {
        writeln!(out, "check,input,residual_terms,passed")?;
    }
    for r in reports {
        match format {
            OutputFormat::Json => {
                let line = ReportLine {
                    check: &r.check,
                    input: &r.input,
                    residual: r.residual.to_string(),
                    residual_terms: r.residual.len(),
                    passed: r.passed(),
                    seed,
                };
                writeln!(out, "{}", json(&line))?;
            }
            OutputFormat::Csv => writeln!(
                out,
                "\"{}\",\"{}\",{},{}",
                r.check.replace('"', "\"\""),
                r.input.replace('"', "\"\""),
                r.residual.len(),
                r.passed()
            )?,
        }
    }
    let failed: Vec<&DefectReport> = reports.iter().filter(|r| !r.passed()).collect();
    writeln!(err, "{} checks, {} passed, {} failed", reports.len(), reports.len() - failed.len(), failed.len())?;
    for r in &failed {
        writeln!(err, "FAILED {}: {}", r.check, r.input)?;
    }
    Ok(failed.is_empty())
}

#[allow(clippy::too_many_arguments)]
fn grid(
    cfg: &RunConfig,
    q: &CorrelatorQuery,
    index: usize,
    (x0, x1): (f64, f64),
    (y0, y1): (f64, f64),
    steps: u32,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, Failure> {
    let format = cfg.output.unwrap_or(OutputFormat::Csv);
    if format == OutputFormat::Csv {
        writeln!(out, "x,y,re,im")?;
    }
    let mut skipped = 0usize;
    let n = steps as usize;
    for iy in 0..n {
        let y = y0 + (y1 - y0) * iy as f64 / (n - 1) as f64;
        for ix in 0..n {
            let x = x0 + (x1 - x0) * ix as f64 / (n - 1) as f64;
            let mut moved = q.clone();
            moved.insertions[index].1 = Complex64::new(x, y);
            let value = general_correlator(&moved, cfg.nodes).unwrap_or_else(|_| {
                skipped += 1;
                Complex64::new(f64::NAN, f64::NAN)
            });
            match format {
                OutputFormat::Csv => writeln!(out, "{x:.14e},{y:.14e},{:.14e},{:.14e}", value.re, value.im)?,
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({"x": x, "y": y, "re": value.re, "im": value.im})
                )?,
            }
        }
    }
    writeln!(err, "{} lattice points, {} not evaluable (NaN)", n * n, skipped)?;
    Ok(true)
}

/// Coefficient of `q^d` in `(1 + q⁰)² Π_{k≥1} (1 + q^k)²`.
fn chiral_count(d: u32) -> u64 {
    let d = d as usize;
    let mut poly = vec![0u64; d + 1];
    poly[0] = 4;
    for k in 1..=d {
        for _ in 0..2 {
            for i in (k..=d).rev() {
                poly[i] += poly[i - k];
            }
        }
    }
    poly[d]
}

fn random_state(rng: &mut ChaCha8Rng, basis: &[BasisWord]) -> State {
    let mut v = State::zero();
    for _ in 0..rng.random_range(1..=4) {
        let w = basis[rng.random_range(0..basis.len())];
        let c = BigRational::new(BigInt::from(rng.random_range(-9i64..=9)), BigInt::from(rng.random_range(1i64..=5)));
        v.add_term(w, c);
    }
    v
}

/// Exact checks of the mode algebra on the non-chiral Fock space.
fn algebra_suite(cfg: &RunConfig) -> Vec<DefectReport> {
    let space = FockSpace::non_chiral();
    let half = cfg.max_degree / 2;
    let basis = space.basis_up_to(half, half, cfg.max_degree);
    let k = cfg.max_mode.min(3);
    let gens: Vec<Generator> = (-k..=k)
        .flat_map(|i| [Generator::eta(i), Generator::chi(i), Generator::etabar(i), Generator::chibar(i)])
        .collect();
    let range = format!("words up to ({half}, {half}), generator indices in [-{k}, {k}]");
    let mut reports = Vec::new();

    let mut anti = ReportCollector::new("anticommutator {u, v} = k delta");
    for w in &basis {
        let v = State::from_word(*w);
        for (i, a) in gens.iter().enumerate() {
            let av = space.apply_generator(*a, &v).expect("non-chiral");
            for b in &gens[i..] {
                let bv = space.apply_generator(*b, &v).expect("non-chiral");
                let lhs = space.apply_generator(*a, &bv).expect("non-chiral")
                    + space.apply_generator(*b, &av).expect("non-chiral");
                let scalar = BigRational::from_integer(BigInt::from(a.anticommutator(b)));
                anti.push(|| format!("{a}, {b} on {w}"), lhs - v.scale(&scalar));
            }
        }
    }
    reports.push(anti.finish(range.as_str()));

    let mut idem = ReportCollector::new("normal order of canonical words is the identity");
    for w in &basis {
        let v = space.normal_order(&w.generators()).expect("non-chiral");
        idem.push(|| w.to_string(), v - State::from_word(*w));
    }
    reports.push(idem.finish(range.as_str()));

    let mut grading = ReportCollector::new("parity flips and degree shifts under generators");
    for w in &basis {
        for g in &gens {
            let out = space.apply_to_word(*g, w).expect("non-chiral");
            let d = w.bidegree();
            let shift = -g.index;
            let ok = out.words().all(|x| {
                let e = x.bidegree();
                let moved = match g.chirality {
                    Chirality::Holo => {
                        (e.delta as i64 - d.delta as i64 == shift) && e.deltabar == d.deltabar
                    }
                    Chirality::Anti => {
                        (e.deltabar as i64 - d.deltabar as i64 == shift) && e.delta == d.delta
                    }
                };
                let zero_mode = g.index == 0 && e == d;
                x.parity() == w.parity().flip() && (moved || zero_mode)
            });
            if !ok {
                grading.push(|| format!("{g} on {w}"), out);
            } else {
                grading.push(String::new, State::zero());
            }
        }
    }
    reports.push(grading.finish(range.as_str()));

    let chiral = FockSpace::chiral();
    let mut counts = ReportCollector::new("chiral basis size matches the partition count");
    for d in 0..=cfg.max_degree {
        let found = chiral.enumerate_basis(Bidegree::new(d, 0)).len() as u64;
        let expected = chiral_count(d);
        let residual = if found == expected {
            State::zero()
        } else {
            State::from_term(BasisWord::OMEGA, BigRational::from_integer(BigInt::from(found as i64 - expected as i64)))
        };
        counts.push(|| format!("degree {d}: {found} words, expected {expected}"), residual);
    }
    reports.push(counts.finish(format!("degrees 0..={}", cfg.max_degree)));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let small = space.basis_up_to(3, 3, 6);
    let mut auto = ReportCollector::new("automorphism composition A(a) A(b) = A(a + b)");
    for _ in 0..64 {
        let v = random_state(&mut rng, &small);
        let a = BigRational::new(BigInt::from(rng.random_range(-20i64..=20)), BigInt::from(rng.random_range(1i64..=7)));
        let b = BigRational::new(BigInt::from(rng.random_range(-20i64..=20)), BigInt::from(rng.random_range(1i64..=7)));
        let lhs = space
            .automorphism_alpha(&a, &space.automorphism_alpha(&b, &v).expect("non-chiral"))
            .expect("non-chiral");
        let rhs = space.automorphism_alpha(&(&a + &b), &v).expect("non-chiral");
        auto.push(|| format!("a = {a}, b = {b}, v = {v}"), lhs - rhs);
    }
    reports.push(auto.finish("64 random states up to (3, 3)"));

    reports
}
