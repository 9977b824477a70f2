//! Named check suites and their reports.
//!
//! A [`CheckConfig`] picks an algebra, a suite and its parameters;
//! [`run_check`] produces a [`Report`] that depends only on the config, and
//! [`format_report`] renders it as text or as JSON with a fixed key order.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::basis::{basis_window, BasisVector, GeneratorSet, HalfDegree};
use crate::bialgebra::{
    co_jacobi_defect, compat_defect, cybe_c, delta_r, mybe_check, seeded_skew_samples, taft_identity_defect, taft_r,
    window_taft_pairs,
};
use crate::bracket::{Bracket, Esv};
use crate::cohomology::{
    degree_zero_derivation_evidence, h1_l0_piece, hom_l0_check, joint_kernel, l1_identity_suite, skew_saturation_check,
};
use crate::dsl::{
    builtin_esv, builtin_esv_source, compile_spec, parse_spec, validate_jacobi, AlgebraSpec, BracketRuleSet,
};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::Containment;

/// Number of random `r` per randomized suite.
pub const TAFT_IDENTITY_SAMPLES: usize = 100;
pub const COMPAT_SAMPLES: usize = 50;
pub const MYBE_SAMPLES: usize = 20;
/// Random `r` have at most this many pure-tensor terms.
pub const SAMPLE_TERMS: usize = 4;
/// `x` ranges over this window in the MYBE and cobracket checks.
pub const MYBE_X_WINDOW: i64 = 4;
pub const L1_RANGE: std::ops::RangeInclusive<i64> = -10..=10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSource {
    BuiltinEsv,
    File(PathBuf),
}

impl FromStr for AlgebraSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("builtin:") {
            Some("esv") => Ok(AlgebraSource::BuiltinEsv),
            Some(other) => Err(Error::Io(format!(
                "unknown built-in algebra `{other}` (only `builtin:esv`)"
            ))),
            None if s.is_empty() => Err(Error::Io("empty algebra path".into())),
            None => Ok(AlgebraSource::File(PathBuf::from(s))),
        }
    }
}

impl fmt::Display for AlgebraSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSource::BuiltinEsv => f.write_str("builtin:esv"),
            AlgebraSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

macro_rules! checks {
    ($($var:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckName { $($var),* }

        impl CheckName {
            pub const ALL: &'static [CheckName] = &[$(CheckName::$var),*];

            pub fn as_str(self) -> &'static str {
                match self { $(CheckName::$var => $name),* }
            }
        }

        impl FromStr for CheckName {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CheckName::$var),)*
                    _ => Err(Error::UnknownCheck(s.to_string())),
                }
            }
        }
    };
}

checks! {
    Jacobi => "jacobi",
    Grading => "grading",
    CybeTaft => "cybe-taft",
    TaftIdentity => "taft-identity",
    Compat => "compat",
    Mybe => "mybe",
    L1Identities => "l1-identities",
    JointKernel => "joint-kernel",
    SkewSaturation => "skew-saturation",
    H1L0 => "h1-l0",
    HomL0 => "hom-l0",
    DerEvidence => "der-evidence",
    DslRoundtrip => "dsl-roundtrip",
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Io(format!("unknown format `{s}` (text or json)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    pub algebra: AlgebraSource,
    pub check: CheckName,
    /// Bound on `|twice_index|`.
    pub window: i64,
    pub margin: i64,
    pub seed: u64,
    pub format: OutputFormat,
}

impl CheckConfig {
    pub fn new(check: CheckName) -> Self {
        Self {
            algebra: AlgebraSource::BuiltinEsv,
            check,
            window: 6,
            margin: 2,
            seed: 0,
            format: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.margin < 0 || self.window < self.margin {
            return Err(Error::InvalidWindow(format!(
                "need window >= margin >= 0, got window {}, margin {}",
                self.window, self.margin
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Holds on the window; the statement itself is about the whole algebra.
    Evidence,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Evidence => "evidence",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub algebra: String,
    pub window: i64,
    pub margin: i64,
    pub seed: u64,
}

/// Outcome of one check. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub config: ConfigEcho,
    pub metrics: BTreeMap<String, Value>,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    /// Shown in text output only, so that JSON stays reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            Status::Pass | Status::Evidence => 0,
        }
    }
}

/// A loaded algebra: the native table or a compiled `.lialg` file.
pub enum Algebra {
    Native,
    Rules {
        spec: Box<AlgebraSpec>,
        rules: Box<BracketRuleSet>,
    },
}

impl Algebra {
    pub fn bracket(&self) -> &dyn Bracket {
        match self {
            Algebra::Native => &Esv,
            Algebra::Rules { rules, .. } => rules.as_ref(),
        }
    }

    /// Window basis of the families the algebra has.
    pub fn window(&self, w: i64) -> Vec<BasisVector> {
        match self {
            Algebra::Native => basis_window(w),
            Algebra::Rules { rules, .. } => rules.window(w),
        }
    }
}

pub fn load_algebra(src: &AlgebraSource) -> Result<Algebra> {
    match src {
        AlgebraSource::BuiltinEsv => Ok(Algebra::Native),
        AlgebraSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let spec = parse_spec(&text)?;
            let rules = compile_spec(&spec)?;
            Ok(Algebra::Rules {
                spec: Box::new(spec),
                rules: Box::new(rules),
            })
        }
    }
}

/// Partial result of a suite, before the config echo and timing are added.
struct Outcome {
    status: Status,
    metrics: BTreeMap<String, Value>,
    witness: Option<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, good: Status) -> Self {
        Self {
            status: if ok { good } else { Status::Fail },
            metrics: BTreeMap::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    fn metric(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.metrics.insert(key.to_string(), v.into());
        self
    }

    fn witness(mut self, w: Option<String>) -> Self {
        if self.status == Status::Fail {
            self.witness = w;
        }
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.notes.push(n.to_string());
        self
    }
}

pub fn run_check(cfg: &CheckConfig) -> Result<Report> {
    cfg.validate()?;
    let alg = load_algebra(&cfg.algebra)?;
    let start = Instant::now();
    let out = dispatch(cfg, &alg)?;
    Ok(Report {
        check: cfg.check.to_string(),
        status: out.status,
        config: ConfigEcho {
            algebra: cfg.algebra.to_string(),
            window: cfg.window,
            margin: cfg.margin,
            seed: cfg.seed,
        },
        metrics: out.metrics,
        witness: out.witness,
        notes: out.notes,
        wall_time: start.elapsed(),
    })
}

fn dispatch(cfg: &CheckConfig, alg: &Algebra) -> Result<Outcome> {
    let br = alg.bracket();
    let w = cfg.window;
    Ok(match cfg.check {
        CheckName::Jacobi => check_jacobi(alg, w),
        CheckName::Grading => check_grading(alg, w),
        CheckName::CybeTaft => check_cybe_taft(br, w)?,
        CheckName::TaftIdentity => check_taft_identity(br, w, cfg.seed)?,
        CheckName::Compat => check_compat(br, w, cfg.seed),
        CheckName::Mybe => check_mybe(br, w, cfg.seed)?,
        CheckName::L1Identities => {
            let r = l1_identity_suite(br, L1_RANGE);
            Outcome::new(r.passed(), Status::Pass)
                .metric("identities_checked", r.checked)
                .metric("n_min", r.n_min)
                .metric("n_max", r.n_max)
                .witness(r.mismatch.map(|m| {
                    format!(
                        "identity {} at n = {}: expected {}, found {}",
                        m.identity, m.n, m.expected, m.found
                    )
                }))
        }
        CheckName::JointKernel => check_joint_kernel(br, w, cfg.margin),
        CheckName::SkewSaturation => {
            let r = skew_saturation_check(br, w, &saturation_generators(), cfg.margin)?;
            Outcome::new(r.contained(), Status::Evidence)
                .metric("solution_dim", r.solution_dim)
                .metric("skew_dim", r.skew_dim)
                .metric("interior_dim", r.interior_dim)
                .metric("interior_window", w - cfg.margin)
                .witness(r.witness)
                .note("window evidence: solutions of (Id+τ)(g·v) = 0 are skew on the interior window")
        }
        CheckName::H1L0 => check_h1(br, w)?,
        CheckName::HomL0 => check_hom(br, w)?,
        CheckName::DerEvidence => {
            let r = degree_zero_derivation_evidence(br, w, cfg.margin)?;
            let ok = matches!(r.containment, Containment::Equal | Containment::AInB);
            Outcome::new(ok, Status::Evidence)
                .metric("cocycle_dim", r.cocycle_dim)
                .metric("coboundary_dim", r.coboundary_dim)
                .metric(
                    "containment",
                    serde_json::to_value(r.containment).expect("serializable"),
                )
                .metric("interior_window", w - cfg.margin)
                .witness(r.witness)
                .note(&r.description)
                .note(
                    "window evidence: the finiteness of D = Σ D_α is not encoded; only the degree-zero part is solved",
                )
        }
        CheckName::DslRoundtrip => check_dsl(alg, w)?,
    })
}

/// Generators used for the skew-saturation suite.
pub fn saturation_generators() -> GeneratorSet {
    use BasisVector as B;
    GeneratorSet::new(vec![B::l(0), B::l(1), B::l(-1), B::m(0), B::m(1), B::n(0)]).expect("nonempty")
}

fn check_jacobi(alg: &Algebra, w: i64) -> Outcome {
    let basis = alg.window(w);
    let r = validate_jacobi(alg.bracket(), &basis, w);
    Outcome::new(r.passed(), Status::Pass)
        .metric("basis_size", basis.len())
        .metric("triples_checked", r.triples_checked)
        .witness(
            r.witness
                .map(|(a, b, c, d)| format!("({a}, {b}, {c}): Jacobi defect {d}")),
        )
}

fn check_grading(alg: &Algebra, w: i64) -> Outcome {
    let basis = alg.window(w);
    let br = alg.bracket();
    let bad = basis.par_iter().find_map_first(|&a| {
        basis.iter().find_map(|&b| {
            let ab = br.bracket_basis(a, b);
            let expected = a.degree() + b.degree();
            let graded = ab.support().all(|t| t.degree() == expected);
            (!graded).then(|| format!("[{a}, {b}] = {ab} is not of degree {expected}"))
        })
    });
    Outcome::new(bad.is_none(), Status::Pass)
        .metric("pairs_checked", basis.len() * basis.len())
        .witness(bad)
}

fn check_cybe_taft(br: &dyn Bracket, w: i64) -> Result<Outcome> {
    let pairs = window_taft_pairs(br, w);
    let mut bad = None;
    for (a, b, _) in &pairs {
        let r = taft_r(br, &(*a).into(), &(*b).into())?;
        let c = cybe_c(br, &r);
        if !c.is_zero() {
            bad = Some(format!("r = {r}: c(r) = {c}"));
            break;
        }
    }
    Ok(Outcome::new(bad.is_none() && !pairs.is_empty(), Status::Pass)
        .metric("taft_pairs", pairs.len())
        .witness(bad.or_else(|| pairs.is_empty().then(|| "no Taft pairs in the window".to_string()))))
}

fn standard_generators() -> Vec<AlgebraElement> {
    GeneratorSet::standard().as_slice().iter().map(|&g| g.into()).collect()
}

fn check_taft_identity(br: &dyn Bracket, w: i64, seed: u64) -> Result<Outcome> {
    let samples = seeded_skew_samples(seed, TAFT_IDENTITY_SAMPLES, w, SAMPLE_TERMS);
    let gens = standard_generators();
    let bad = samples
        .par_iter()
        .map(|r| -> Result<Option<String>> {
            for x in &gens {
                let d = taft_identity_defect(br, r, x)?;
                if !d.is_zero() {
                    return Ok(Some(format!("r = {r}, x = {x}: defect {d}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Outcome::new(bad.is_none(), Status::Pass)
        .metric("samples", samples.len())
        .metric("evaluations", samples.len() * gens.len())
        .witness(bad)
        .note("(Id+ξ+ξ²)(Id⊗Δ_r)Δ_r(x) = x·c(r) on the generators L_-2, L_-1, L_1, L_2, N_1, Y_1/2"))
}

fn check_compat(br: &dyn Bracket, w: i64, seed: u64) -> Outcome {
    let samples = seeded_skew_samples(seed, COMPAT_SAMPLES, w, SAMPLE_TERMS);
    let gens = standard_generators();
    let bad = samples.par_iter().find_map_first(|r| {
        gens.iter().find_map(|x| {
            gens.iter().find_map(|y| {
                let d = compat_defect(br, r, x, y);
                (!d.is_zero()).then(|| format!("r = {r}, x = {x}, y = {y}: defect {d}"))
            })
        })
    });
    Outcome::new(bad.is_none(), Status::Pass)
        .metric("samples", samples.len())
        .metric("evaluations", samples.len() * gens.len() * gens.len())
        .witness(bad)
}

/// MYBE on the generators against co-Jacobi on every window `x`, plus
/// skewness of every cobracket `Δ_r(x)`, for seeded random `r` and all Taft
/// `r` of the window.
fn check_mybe(br: &dyn Bracket, w: i64, seed: u64) -> Result<Outcome> {
    let mut rs = seeded_skew_samples(seed, MYBE_SAMPLES, w, SAMPLE_TERMS);
    for (a, b, _) in window_taft_pairs(br, w) {
        rs.push(taft_r(br, &a.into(), &b.into())?);
    }
    let xs: Vec<AlgebraElement> = basis_window(MYBE_X_WINDOW).into_iter().map(Into::into).collect();
    let gens = GeneratorSet::standard();
    let results = rs
        .par_iter()
        .map(|r| -> Result<(bool, Option<String>)> {
            let mybe = mybe_check(br, r, &gens)?;
            let mut co_jacobi = true;
            for x in &xs {
                let d = delta_r(br, r, x);
                if !d.is_skew()? {
                    return Ok((mybe, Some(format!("r = {r}, x = {x}: Δ_r(x) = {d} is not skew"))));
                }
                co_jacobi &= co_jacobi_defect(br, r, x).is_zero();
            }
            let bad = (mybe != co_jacobi).then(|| {
                format!("r = {r}: MYBE on generators is {mybe}, co-Jacobi on window {MYBE_X_WINDOW} is {co_jacobi}")
            });
            Ok((mybe, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let satisfied = results.iter().filter(|(m, _)| *m).count();
    let bad = results.into_iter().find_map(|(_, b)| b);
    Ok(Outcome::new(bad.is_none(), Status::Pass)
        .metric("r_checked", rs.len())
        .metric("mybe_satisfied", satisfied)
        .metric("x_checked", xs.len())
        .witness(bad)
        .note("MYBE is checked on L_-2, L_-1, L_1, L_2, N_1, Y_1/2: the annihilator of c(r) is a subalgebra"))
}

fn check_joint_kernel(br: &dyn Bracket, w: i64, margin: i64) -> Outcome {
    let gens = GeneratorSet::extended();
    let w3 = w - margin;
    let (d2, d3) = rayon::join(
        || joint_kernel(br, 2, w, HalfDegree::ZERO, &gens).dim(),
        || joint_kernel(br, 3, w3, HalfDegree::ZERO, &gens).dim(),
    );
    let ok = d2 == 0 && d3 == 0;
    Outcome::new(ok, Status::Evidence)
        .metric("order2_window", w)
        .metric("order2_dim", d2)
        .metric("order3_window", w3)
        .metric("order3_dim", d3)
        .witness((!ok).then(|| format!("nonzero invariants: order 2 dim {d2}, order 3 dim {d3}")))
        .note("window evidence: no nonzero degree-0 tensor on the window is killed by all generators")
}

/// Bidegrees `(p, q)` with `|2p|, |2q| <= w`.
fn bidegrees(w: i64) -> Vec<(HalfDegree, HalfDegree)> {
    let mut out = Vec::new();
    for p in -w..=w {
        for q in -w..=w {
            out.push((HalfDegree(p), HalfDegree(q)));
        }
    }
    out
}

fn check_h1(br: &dyn Bracket, w: i64) -> Result<Outcome> {
    let pieces: Vec<_> = bidegrees(w)
        .into_iter()
        .filter(|(p, q)| (*p + *q).twice() != 0)
        .collect();
    let reports = pieces
        .par_iter()
        .map(|&(p, q)| h1_l0_piece(br, p, q))
        .collect::<Result<Vec<_>>>()?;
    let bad = reports.iter().find(|r| !r.is_trivial());
    let cocycles: usize = reports.iter().map(|r| r.cocycle_dim).sum();
    Ok(Outcome::new(bad.is_none(), Status::Pass)
        .metric("pieces", reports.len())
        .metric("total_cocycle_dim", cocycles)
        .witness(bad.map(|r| {
            format!(
                "{}: cocycle dim {}, coboundary dim {}; {}",
                r.description,
                r.cocycle_dim,
                r.coboundary_dim,
                r.witness.clone().unwrap_or_default()
            )
        }))
        .note("pieces of total degree 0 are outside the statement and skipped"))
}

fn check_hom(br: &dyn Bracket, w: i64) -> Result<Outcome> {
    let pieces = bidegrees(w);
    let mut pairs = Vec::new();
    for &a in &pieces {
        for &b in &pieces {
            if a.0 + a.1 != b.0 + b.1 {
                pairs.push((a, b));
            }
        }
    }
    let dims = pairs
        .par_iter()
        .map(|&(a, b)| hom_l0_check(br, a, b))
        .collect::<Result<Vec<_>>>()?;
    let bad = pairs.iter().zip(&dims).find(|(_, &d)| d != 0);
    Ok(Outcome::new(bad.is_none(), Status::Pass)
        .metric("piece_pairs", pairs.len())
        .witness(bad.map(|((a, b), d)| format!("Hom from ({},{}) to ({},{}) has dimension {d}", a.0, a.1, b.0, b.1))))
}

fn check_dsl(alg: &Algebra, w: i64) -> Result<Outcome> {
    let (spec, source) = match alg {
        Algebra::Native => (builtin_esv(), "builtin"),
        Algebra::Rules { spec, .. } => ((**spec).clone(), "file"),
    };
    let printed = spec.to_string();
    let reparsed = parse_spec(&printed)?;
    let mut bad =
        (reparsed != spec).then(|| format!("printed spec does not parse back to the same structure:\n{printed}"));
    let mut out = Outcome::new(true, Status::Pass).metric("rules", spec.rules.len());
    if bad.is_none() {
        if let Algebra::Native = alg {
            let compiled = compile_spec(&parse_spec(builtin_esv_source())?)?;
            let basis = basis_window(w);
            bad = basis.par_iter().find_map_first(|&a| {
                basis.iter().find_map(|&b| {
                    let (x, y) = (compiled.bracket_basis(a, b), Esv.bracket_basis(a, b));
                    (x != y).then(|| format!("[{a}, {b}]: compiled {x}, native {y}"))
                })
            });
            out = out.metric("pairs_compared", basis.len() * basis.len());
        }
    }
    out.status = if bad.is_none() { Status::Pass } else { Status::Fail };
    Ok(out.metric("source", source).witness(bad))
}

pub fn format_report(r: &Report, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut s = format!("check:   {}\nstatus:  {}\n", r.check, r.status);
            s += &format!(
                "config:  algebra={} window={} margin={} seed={}\n",
                r.config.algebra, r.config.window, r.config.margin, r.config.seed
            );
            for (k, v) in &r.metrics {
                s += &format!("  {k}: {}\n", plain(v));
            }
            if let Some(w) = &r.witness {
                s += &format!("witness: {w}\n");
            }
            for n in &r.notes {
                s += &format!("note:    {n}\n");
            }
            s += &format!("time:    {:.3}s\n", r.wall_time.as_secs_f64());
            s
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
        assert_eq!(CheckName::ALL.len(), 13);
        assert!(matches!("nope".parse::<CheckName>(), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn algebra_sources() {
        assert_eq!(
            "builtin:esv".parse::<AlgebraSource>().unwrap(),
            AlgebraSource::BuiltinEsv
        );
        assert!("builtin:witt".parse::<AlgebraSource>().is_err());
        assert_eq!(
            "a/b.lialg".parse::<AlgebraSource>().unwrap(),
            AlgebraSource::File("a/b.lialg".into())
        );
    }

    #[test]
    fn window_margin_validation() {
        let mut cfg = CheckConfig::new(CheckName::Jacobi);
        cfg.window = 1;
        assert!(run_check(&cfg).is_err());
        cfg.margin = -1;
        assert!(run_check(&cfg).is_err());
    }

    #[test]
    fn jacobi_report_json() {
        let mut cfg = CheckConfig::new(CheckName::Jacobi);
        cfg.window = 4;
        let r = run_check(&cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.is_none());
        let j = format_report(&r, OutputFormat::Json);
        assert!(
            j.starts_with("{\n  \"check\": \"jacobi\",\n  \"status\": \"pass\""),
            "{j}"
        );
        assert_eq!(j, format_report(&run_check(&cfg).unwrap(), OutputFormat::Json));
    }

    #[test]
    fn evidence_and_fail_text() {
        let mut cfg = CheckConfig::new(CheckName::JointKernel);
        cfg.window = 4;
        let r = run_check(&cfg).unwrap();
        assert_eq!(r.status, Status::Evidence);
        assert!(format_report(&r, OutputFormat::Json).contains("\"status\": \"evidence\""));

        let mut fail = r.clone();
        fail.status = Status::Fail;
        fail.witness = Some("L_0".into());
        assert!(format_report(&fail, OutputFormat::Text).contains("witness: L_0"));
        assert_eq!(fail.exit_code(), 1);
    }
}
