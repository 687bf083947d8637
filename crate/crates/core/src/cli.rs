//! Command-line front end.  Every command emits a human summary on
//! standard output (or the full JSON envelope with `--format json`)
//! and can write the same envelope to a file with `--out`.  Exit codes
//! are strict: 0 = verified/success, 1 = mathematical mismatch or
//! positivity violation, 2 = usage or input error — never conflated.
//! Identical configurations (including the seed) produce byte-identical
//! JSON; every randomized vector is drawn from the seeded generator
//! named in the report header.

use crate::detident::{delta_series, phorn_derivative, verify_cauchy, verify_frobenius,
    verify_tsymm, ExpansionReport, SeriesFunction};
use crate::preserver::{
    admissible_characterize, fh_predict, hl_hypothesis_scan, is_admissible, maclaurin_sign_check,
    AdmissibleLaw, AdmissibleOutcome, CertValue, ConclusionReport, DerivProfile, FnSpec,
    PreserverReport, SignCheckReport, Tail, TestFamily, Verdict, PSD_EIG_TOL,
};
use crate::ring::{factorial, Rational};
use crate::rng::{distinct_ints, poly_coeffs, rng_from_seed, RNG_ALGORITHM};
use crate::suite::{run_suite, Scale, SuiteReport};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_N: usize = 8;
/// Random integer vectors draw distinct coordinates from [-3, 3].
const RANDOM_RANGE: (i64, i64) = (-3, 3);

// ---- envelope ----

/// Resolved run configuration echoed at the top of every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<&'static str>,
    pub carrier: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub format: &'static str,
}

impl RunConfig {
    fn new(command: impl Into<String>, ctx: &Ctx) -> Self {
        RunConfig {
            command: command.into(),
            n: None,
            cutoff: None,
            seed: None,
            rng: None,
            carrier: "exact",
            tolerance: None,
            output: ctx.out.as_ref().map(|p| p.display().to_string()),
            format: ctx.format.name(),
        }
    }
}

#[derive(Debug, Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    config: RunConfig,
    report: T,
}

impl<T: Serialize> Envelope<T> {
    fn new(config: RunConfig, report: T) -> Self {
        Envelope {
            schema: SCHEMA_VERSION,
            config,
            report,
        }
    }
}

// ---- argument grammar ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableaux,
    Bialternant,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Tableaux => "tableaux",
            Method::Bialternant => "bialternant",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schurlab",
    version,
    about = "Exact Schur polynomials, determinant power-series identities, \n\
             and entrywise positivity-preserver verification"
)]
struct Cli {
    /// Write the JSON report envelope to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// What to print on standard output
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Render a Schur polynomial from a degree tuple
    Schur {
        /// Comma-separated non-negative exponents, e.g. 2,0
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<u32>,
        /// Number of variables (must equal the tuple length)
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Check a determinant power-series identity coefficient by coefficient
    Verify {
        #[command(subcommand)]
        identity: Identity,
    },
    /// Scan a rank-one perturbation family for positivity violations
    Preserve {
        /// Polynomial coefficients c0,c1,... (exact scan)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<String>>,
        /// Exponent of x^alpha (floating-point scan)
        #[arg(long, allow_hyphen_values = true)]
        power: Option<f64>,
        /// JSON file with {"base": "p/q", "coeffs": ["p/q", ...]}
        #[arg(long)]
        series_file: Option<PathBuf>,
        /// Matrix dimension
        #[arg(long)]
        n: usize,
        /// Base point of the family (matrix of all a's at t = 0)
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
        /// Perturbation sweep radius; t ranges over [0, eps)
        #[arg(long, default_value = "1")]
        eps: String,
        /// Perturbation direction coordinates (default: 1/2, 1/4, ...)
        #[arg(long, value_delimiter = ',')]
        u: Option<Vec<String>>,
        /// Number of grid points in [0, eps)
        #[arg(long, default_value_t = crate::preserver::DEFAULT_GRID)]
        grid: usize,
        /// Also require n positive coefficients above every negative one
        #[arg(long)]
        unbounded: bool,
        /// Relative eigenvalue tolerance for the numeric positivity check
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Classify admissible derivative-order tuples for a profile
    Admissible {
        /// `exp`, `monomial:K`, `two-term:J:K`, `all-zero`, or an
        /// explicit comma-separated derivative list
        #[arg(long, allow_hyphen_values = true)]
        profile: String,
        #[arg(long)]
        n: usize,
        /// Strictly increasing orders to test; omit for the classification
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<usize>>,
        /// Tail behaviour of an explicit profile beyond the listed orders
        #[arg(long, default_value = "unknown")]
        tail: String,
    },
    /// Run the acceptance battery
    Suite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// smoke (seconds) or desk (the full battery)
        #[arg(long, default_value = "smoke")]
        scale: String,
    },
}

#[derive(Debug, Subcommand)]
enum Identity {
    /// det f(a + t u v^T) expansion vs. the Schur-sum closed form
    Cauchy {
        #[command(flatten)]
        common: VerifyArgs,
    },
    /// The same comparison for f(x) = (1 - cx)^{-1} regrouped three ways
    Frobenius {
        /// The parameter c as a rational, e.g. 2 or 1/2
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        common: VerifyArgs,
    },
    /// Universal polynomial expansion checked along three routes
    Tsymm {
        #[command(flatten)]
        common: VerifyArgs,
        /// Polynomial coefficients of f
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<String>>,
    },
    /// Closed-form derivative of the determinant expansion, order by order
    Phorn {
        #[command(flatten)]
        common: VerifyArgs,
        /// Polynomial coefficients of f
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, clap::Args)]
struct VerifyArgs {
    /// Dimension; inferred from --u when omitted
    #[arg(long)]
    n: Option<usize>,
    /// Left vector coordinates (distinct rationals)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    u: Option<Vec<String>>,
    /// Right vector coordinates (distinct rationals)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v: Option<Vec<String>>,
    /// Truncation degree of the series comparison
    #[arg(long, default_value_t = 8)]
    degree: usize,
    /// Draw the inputs from the seeded generator instead
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

// ---- entry point ----

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    let ctx = match Ctx::new(&cli) {
        Ok(ctx) => ctx,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match dispatch(cli.command, &ctx) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

struct Ctx {
    out: Option<PathBuf>,
    format: Format,
    max_n: usize,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self, String> {
        let max_n = match std::env::var("SCHURLAB_MAX_N") {
            Ok(s) => s
                .parse::<usize>()
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| format!("SCHURLAB_MAX_N must be a positive integer, got '{s}'"))?,
            Err(_) => DEFAULT_MAX_N,
        };
        Ok(Ctx {
            out: cli.out.clone(),
            format: cli.format,
            max_n,
        })
    }

    #[cfg(test)]
    fn test(max_n: usize) -> Self {
        Ctx {
            out: None,
            format: Format::Text,
            max_n,
        }
    }
}

fn dispatch(cmd: Cmd, ctx: &Ctx) -> Result<i32, String> {
    match cmd {
        Cmd::Schur {
            partition,
            vars,
            method,
        } => {
            let (code, env, text) = handle_schur(&partition, vars, method, ctx)?;
            finish(&env, &text, ctx)?;
            Ok(code)
        }
        Cmd::Verify { identity } => match identity {
            Identity::Cauchy { common } => {
                let (code, env, text) = handle_expansion(ExpKind::Cauchy, &common, ctx)?;
                finish(&env, &text, ctx)?;
                Ok(code)
            }
            Identity::Frobenius { c, common } => {
                let c = parse_rational(&c)?;
                let (code, env, text) = handle_expansion(ExpKind::Frobenius(c), &common, ctx)?;
                finish(&env, &text, ctx)?;
                Ok(code)
            }
            Identity::Tsymm { common, poly } => {
                let (code, env, text) =
                    handle_expansion(ExpKind::Tsymm(poly.as_deref()), &common, ctx)?;
                finish(&env, &text, ctx)?;
                Ok(code)
            }
            Identity::Phorn { common, poly } => {
                let (code, env, text) = handle_phorn(&common, poly.as_deref(), ctx)?;
                finish(&env, &text, ctx)?;
                Ok(code)
            }
        },
        Cmd::Preserve {
            poly,
            power,
            series_file,
            n,
            a,
            eps,
            u,
            grid,
            unbounded,
            tolerance,
        } => {
            let (code, env, text) = handle_preserve(
                poly.as_deref(),
                power,
                series_file.as_deref(),
                n,
                &a,
                &eps,
                u.as_deref(),
                grid,
                unbounded,
                tolerance,
                ctx,
            )?;
            finish(&env, &text, ctx)?;
            Ok(code)
        }
        Cmd::Admissible {
            profile,
            n,
            tuple,
            tail,
        } => {
            let (code, env, text) = handle_admissible(&profile, n, tuple.as_deref(), &tail, ctx)?;
            finish(&env, &text, ctx)?;
            Ok(code)
        }
        Cmd::Suite { seed, scale } => {
            let scale = Scale::from_str(&scale)?;
            let (code, env, text) = handle_suite(seed, scale, ctx);
            finish(&env, &text, ctx)?;
            Ok(code)
        }
    }
}

fn finish<T: Serialize>(env: &Envelope<T>, text: &[String], ctx: &Ctx) -> Result<(), String> {
    let json = serde_json::to_string_pretty(env)
        .map_err(|e| format!("cannot serialize the report: {e}"))?
        + "\n";
    match ctx.format {
        Format::Text => {
            let mut out = String::new();
            for line in text {
                out.push_str(line);
                out.push('\n');
            }
            emit(&out)?;
        }
        Format::Json => emit(&json)?,
    }
    if let Some(path) = &ctx.out {
        std::fs::write(path, &json)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as a no-op.
fn emit(text: &str) -> Result<(), String> {
    use std::io::Write;
    match std::io::stdout().write_all(text.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(format!("cannot write to stdout: {e}")),
    }
}

// ---- schur ----

#[derive(Debug, Serialize)]
struct SchurBody {
    partition: Vec<u32>,
    vars: usize,
    method: &'static str,
    polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    methods_agree: Option<bool>,
}

fn handle_schur(
    partition: &[u32],
    vars: usize,
    method: Method,
    ctx: &Ctx,
) -> Result<(i32, Envelope<SchurBody>, Vec<String>), String> {
    use crate::symmetric::{schur_bialternant, schur_tableaux, PartitionTuple};

    if partition.len() != vars {
        return Err(format!(
            "--vars must equal the tuple length ({} exponents, --vars {vars})",
            partition.len()
        ));
    }
    if vars > ctx.max_n {
        return Err(dimension_message(vars, ctx.max_n));
    }
    let mut parts = partition.to_vec();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    let tuple = PartitionTuple::new(parts.clone()).map_err(|e| e.to_string())?;

    let (rendered, agree, code) = match method {
        Method::Tableaux => (schur_tableaux(&tuple, vars).to_string(), None, 0),
        Method::Bialternant => (schur_bialternant(&tuple, vars).to_string(), None, 0),
        Method::Both => {
            let t = schur_tableaux(&tuple, vars);
            let b = schur_bialternant(&tuple, vars);
            if t == b {
                (t.to_string(), Some(true), 0)
            } else {
                (format!("tableaux: {t} / bialternant: {b}"), Some(false), 1)
            }
        }
    };

    let mut config = RunConfig::new("schur", ctx);
    config.n = Some(vars);
    let text = if agree == Some(false) {
        vec![format!("construction mismatch: {rendered}")]
    } else {
        vec![rendered.clone()]
    };
    let body = SchurBody {
        partition: parts,
        vars,
        method: method.name(),
        polynomial: rendered,
        methods_agree: agree,
    };
    Ok((code, Envelope::new(config, body), text))
}

// ---- verify ----

enum ExpKind<'a> {
    Cauchy,
    Frobenius(Rational),
    Tsymm(Option<&'a [String]>),
}

struct VerifyInputs {
    n: usize,
    u: Vec<Rational>,
    v: Vec<Rational>,
    poly: Option<Vec<Rational>>,
    seed: Option<u64>,
}

fn resolve_verify_inputs(
    args: &VerifyArgs,
    poly: Option<&[String]>,
    want_poly: bool,
    max_n: usize,
) -> Result<VerifyInputs, String> {
    if args.random {
        if args.u.is_some() || args.v.is_some() || poly.is_some() {
            return Err("--random draws the inputs; do not also pass --u/--v/--poly".into());
        }
        let n = args.n.ok_or("--random requires --n")?;
        check_dimension(n, max_n)?;
        let span = (RANDOM_RANGE.1 - RANDOM_RANGE.0 + 1) as usize;
        if n > span {
            return Err(format!(
                "random vectors draw distinct integers in [{}, {}]; --n must be at most {span}",
                RANDOM_RANGE.0, RANDOM_RANGE.1
            ));
        }
        let mut rng = rng_from_seed(args.seed);
        let u = distinct_ints(&mut rng, n, RANDOM_RANGE.0, RANDOM_RANGE.1);
        let v = distinct_ints(&mut rng, n, RANDOM_RANGE.0, RANDOM_RANGE.1);
        let poly = want_poly.then(|| poly_coeffs(&mut rng, 6, -4, 4));
        return Ok(VerifyInputs {
            n,
            u,
            v,
            poly,
            seed: Some(args.seed),
        });
    }

    let u = parse_rationals(args.u.as_deref().ok_or("pass --u and --v, or --random")?)?;
    let v = parse_rationals(args.v.as_deref().ok_or("pass --u and --v, or --random")?)?;
    if u.len() != v.len() {
        return Err(format!(
            "--u and --v must have the same length ({} vs {})",
            u.len(),
            v.len()
        ));
    }
    let n = u.len();
    if let Some(given) = args.n {
        if given != n {
            return Err(format!("--n {given} contradicts the {n} coordinates of --u"));
        }
    }
    check_dimension(n, max_n)?;
    check_distinct("--u", &u)?;
    check_distinct("--v", &v)?;
    let poly = match (want_poly, poly) {
        (true, Some(p)) => Some(parse_rationals(p)?),
        (true, None) => return Err("this identity needs --poly (or --random)".into()),
        (false, Some(_)) => return Err("--poly does not apply to this identity".into()),
        (false, None) => None,
    };
    Ok(VerifyInputs {
        n,
        u,
        v,
        poly,
        seed: None,
    })
}

#[derive(Debug, Serialize)]
struct VerifyBody<R: Serialize> {
    u: Vec<Rational>,
    v: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<Vec<Rational>>,
    report: R,
}

fn handle_expansion(
    kind: ExpKind<'_>,
    args: &VerifyArgs,
    ctx: &Ctx,
) -> Result<(i32, Envelope<VerifyBody<ExpansionReport>>, Vec<String>), String> {
    let want_poly = matches!(kind, ExpKind::Tsymm(_));
    let poly_arg = match &kind {
        ExpKind::Tsymm(p) => *p,
        _ => None,
    };
    let inputs = resolve_verify_inputs(args, poly_arg, want_poly, ctx.max_n)?;
    let cutoff = args.degree;

    let (name, c, report) = match &kind {
        ExpKind::Cauchy => (
            "cauchy",
            None,
            verify_cauchy(&inputs.u, &inputs.v, cutoff),
        ),
        ExpKind::Frobenius(c) => (
            "frobenius",
            Some(c.clone()),
            verify_frobenius(c, &inputs.u, &inputs.v, cutoff),
        ),
        ExpKind::Tsymm(_) => {
            let coeffs = inputs.poly.as_ref().expect("resolved above");
            let f = SeriesFunction::polynomial(coeffs);
            ("tsymm", None, verify_tsymm(&f, &inputs.u, &inputs.v, cutoff))
        }
    };

    let mut text = vec![format!("identity: {name} (n={}, cutoff {cutoff})", inputs.n)];
    if let Some(seed) = inputs.seed {
        text.push(format!("seed: {seed} ({RNG_ALGORITHM})"));
    }
    text.push(format!("u = {}", join_rationals(&inputs.u)));
    text.push(format!("v = {}", join_rationals(&inputs.v)));
    if let Some(c) = &c {
        text.push(format!("c = {c}"));
    }
    if let Some(p) = &inputs.poly {
        text.push(format!("f coefficients = {}", join_rationals(p)));
    }
    text.push(format!("delta series = {}", series_text(&report.lhs_coeffs, cutoff)));
    text.push(format!(
        "coefficients (degree 0..={cutoff}) = {}",
        join_rationals(&report.lhs_coeffs)
    ));
    text.push(match_line(report.is_match, report.first_mismatch_degree));

    let mut config = RunConfig::new(format!("verify {name}"), ctx);
    config.n = Some(inputs.n);
    config.cutoff = Some(cutoff);
    config.seed = inputs.seed;
    config.rng = inputs.seed.map(|_| RNG_ALGORITHM);
    let code = i32::from(!report.is_match);
    let body = VerifyBody {
        u: inputs.u,
        v: inputs.v,
        c,
        poly: inputs.poly,
        report,
    };
    Ok((code, Envelope::new(config, body), text))
}

#[derive(Debug, Serialize)]
struct PhornReport {
    identity: String,
    n: usize,
    max_order: usize,
    #[serde(rename = "match")]
    is_match: bool,
    first_mismatch_order: Option<usize>,
    derivative_values: Vec<Rational>,
}

fn handle_phorn(
    args: &VerifyArgs,
    poly: Option<&[String]>,
    ctx: &Ctx,
) -> Result<(i32, Envelope<VerifyBody<PhornReport>>, Vec<String>), String> {
    let inputs = resolve_verify_inputs(args, poly, true, ctx.max_n)?;
    let coeffs = inputs.poly.clone().expect("resolved above");
    let f = SeriesFunction::polynomial(&coeffs);
    let max_order = args.degree;

    let delta = delta_series(&f, &inputs.u, &inputs.v, max_order);
    let mut derivative_values = Vec::with_capacity(max_order + 1);
    let mut first_mismatch_order = None;
    for order in 0..=max_order {
        let direct = phorn_derivative(&f, &inputs.u, &inputs.v, order);
        let scaled = Rational::from(factorial(order as u64)) * delta.coeff(order);
        if direct != scaled && first_mismatch_order.is_none() {
            first_mismatch_order = Some(order);
        }
        derivative_values.push(direct);
    }
    let is_match = first_mismatch_order.is_none();

    let mut text = vec![format!(
        "identity: phorn (n={}, orders 0..={max_order})",
        inputs.n
    )];
    if let Some(seed) = inputs.seed {
        text.push(format!("seed: {seed} ({RNG_ALGORITHM})"));
    }
    text.push(format!("u = {}", join_rationals(&inputs.u)));
    text.push(format!("v = {}", join_rationals(&inputs.v)));
    text.push(format!("f coefficients = {}", join_rationals(&coeffs)));
    text.push(format!(
        "derivative values (order 0..={max_order}) = {}",
        join_rationals(&derivative_values)
    ));
    text.push(match_line(is_match, first_mismatch_order));

    let mut config = RunConfig::new("verify phorn", ctx);
    config.n = Some(inputs.n);
    config.cutoff = Some(max_order);
    config.seed = inputs.seed;
    config.rng = inputs.seed.map(|_| RNG_ALGORITHM);
    let code = i32::from(!is_match);
    let report = PhornReport {
        identity: "phorn".into(),
        n: inputs.n,
        max_order,
        is_match,
        first_mismatch_order,
        derivative_values,
    };
    let body = VerifyBody {
        u: inputs.u,
        v: inputs.v,
        c: None,
        poly: Some(coeffs),
        report,
    };
    Ok((code, Envelope::new(config, body), text))
}

// ---- preserve ----

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FunctionDesc {
    Polynomial { coeffs: Vec<Rational> },
    Power { alpha: f64 },
    Series {
        base: Rational,
        coeffs: Vec<Rational>,
        polynomial: bool,
    },
}

#[derive(Debug, Deserialize)]
struct SeriesFile {
    base: Rational,
    coeffs: Vec<Rational>,
    #[serde(default)]
    polynomial: bool,
}

#[derive(Debug, Serialize)]
struct PreserveBody {
    function: FunctionDesc,
    tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_preserves_predicted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign_check: Option<SignCheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conclusion_note: Option<String>,
    failures: Vec<&'static str>,
    pass: bool,
    report: PreserverReport,
}

#[allow(clippy::too_many_arguments)]
fn handle_preserve(
    poly: Option<&[String]>,
    power: Option<f64>,
    series_file: Option<&std::path::Path>,
    n: usize,
    a: &str,
    eps: &str,
    u: Option<&[String]>,
    grid: usize,
    unbounded: bool,
    tolerance: Option<f64>,
    ctx: &Ctx,
) -> Result<(i32, Envelope<PreserveBody>, Vec<String>), String> {
    check_dimension(n, ctx.max_n)?;
    if grid == 0 {
        return Err("--grid must be at least 1".into());
    }
    let a = parse_rational(a)?;
    let eps = parse_rational(eps)?;

    let given = [poly.is_some(), power.is_some(), series_file.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err("pass exactly one of --poly, --power, --series-file".into());
    }

    let (spec, desc) = if let Some(p) = poly {
        let coeffs = parse_rationals(p)?;
        (
            FnSpec::Poly(coeffs.clone()),
            FunctionDesc::Polynomial { coeffs },
        )
    } else if let Some(alpha) = power {
        (FnSpec::Power(alpha), FunctionDesc::Power { alpha })
    } else {
        let path = series_file.expect("checked above");
        let raw = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let file: SeriesFile = serde_json::from_str(&raw)
            .map_err(|e| format!("{} is not a valid series file: {e}", path.display()))?;
        if file.coeffs.is_empty() {
            return Err(format!("{} lists no coefficients", path.display()));
        }
        let desc = FunctionDesc::Series {
            base: file.base.clone(),
            coeffs: file.coeffs.clone(),
            polynomial: file.polynomial,
        };
        let spec = if file.polynomial {
            FnSpec::Poly(file.coeffs)
        } else {
            let cutoff = file.coeffs.len() - 1;
            FnSpec::Series(SeriesFunction::from_maclaurin(file.base, &file.coeffs, cutoff))
        };
        (spec, desc)
    };

    if unbounded && !matches!(spec, FnSpec::Poly(_)) {
        return Err("--unbounded applies the coefficient counting rule; it needs --poly".into());
    }
    if unbounded && !a.is_zero() {
        return Err("--unbounded examines the expansion at the origin; it needs --a 0".into());
    }

    let family = match u {
        Some(raw) => {
            let coords = parse_rationals(raw)?;
            if coords.len() != n {
                return Err(format!(
                    "--u lists {} coordinates but --n is {n}",
                    coords.len()
                ));
            }
            TestFamily::relaxed(a, eps, coords).map_err(|e| e.to_string())?
        }
        None => TestFamily::geometric(a, eps, n).map_err(|e| e.to_string())?,
    };

    let tol = tolerance.unwrap_or(PSD_EIG_TOL);
    let report = hl_hypothesis_scan(&spec, &family, grid, tol).map_err(|e| e.to_string())?;

    let sign_check = match &spec {
        FnSpec::Poly(coeffs) if family.a().is_zero() => {
            Some(maclaurin_sign_check(coeffs, n, unbounded))
        }
        _ => None,
    };
    let power_preserves_predicted = match &spec {
        FnSpec::Power(alpha) => Some(fh_predict(*alpha, n).map_err(|e| e.to_string())?),
        _ => None,
    };

    let mut failures = Vec::new();
    if report.has_violation() {
        failures.push("grid-violation");
    }
    if report
        .conclusion
        .as_ref()
        .is_some_and(|c| !c.passed())
    {
        failures.push("derivative-conclusion");
    }
    if sign_check.as_ref().is_some_and(|s| !s.pass) {
        failures.push("sign-check");
    }
    let pass = failures.is_empty();

    let mut text = vec![
        format!(
            "family: n={n}, a={}, epsilon={}, u = {}",
            family.a(),
            family.epsilon(),
            join_rationals(family.u())
        ),
        format!("function: {}", function_text(&desc)),
        format!("grid: {grid} points on [0, {})", family.epsilon()),
    ];
    if let Some(p) = power_preserves_predicted {
        text.push(format!(
            "power-map classification: expected to {} at n={n}",
            if p { "preserve" } else { "fail" }
        ));
    }
    text.push(violation_text(&report));
    text.push(conclusion_text(&report));
    if let Some(sc) = &sign_check {
        text.push(format!("sign check: {}", sc.summary()));
    }
    text.push(if pass {
        "verdict: PASS".into()
    } else {
        format!("verdict: FAIL ({})", failures.join(", "))
    });

    let mut config = RunConfig::new("preserve", ctx);
    config.n = Some(n);
    config.carrier = match &spec {
        FnSpec::Power(_) => "numeric",
        _ => "exact",
    };
    config.tolerance = Some(tol);
    let body = PreserveBody {
        function: desc,
        tolerance: tol,
        power_preserves_predicted,
        sign_check,
        conclusion_note: report.conclusion_note.clone(),
        failures,
        pass,
        report,
    };
    Ok((i32::from(!pass), Envelope::new(config, body), text))
}

fn function_text(desc: &FunctionDesc) -> String {
    match desc {
        FunctionDesc::Polynomial { coeffs } => {
            format!("polynomial with coefficients {}", join_rationals(coeffs))
        }
        FunctionDesc::Power { alpha } => format!("x^{alpha}"),
        FunctionDesc::Series {
            base,
            coeffs,
            polynomial,
        } => format!(
            "{} around {base} with {} coefficients",
            if *polynomial { "polynomial" } else { "truncated series" },
            coeffs.len()
        ),
    }
}

fn violation_text(report: &PreserverReport) -> String {
    if report.violations.is_empty() {
        return format!("violations: none on {} grid points", report.grid_size);
    }
    let first = &report.violations[0];
    let cert = match &first.min_eig_or_coeff {
        CertValue::Exact(r) => format!("characteristic coefficient {r}"),
        CertValue::Approx(x) => format!("min eigenvalue {x:.3e}"),
    };
    format!(
        "violations: {} of {} grid points; first at t = {} ({cert})",
        report.violations.len(),
        report.grid_size,
        first.t
    )
}

fn conclusion_text(report: &PreserverReport) -> String {
    match (&report.conclusion, &report.conclusion_note) {
        (Some(c), _) => format!("derivative conclusion: {}", conclusion_summary(c)),
        (None, Some(note)) => format!("derivative conclusion: undecidable — {note}"),
        (None, None) => "derivative conclusion: not applicable".into(),
    }
}

fn conclusion_summary(c: &ConclusionReport) -> String {
    let orders = c
        .orders
        .iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(",");
    match c.verdict {
        Verdict::Pass => format!("PASS (derivative orders {orders} all non-negative)"),
        Verdict::Fail => format!(
            "FAIL (negative derivative at order {})",
            c.first_negative.map_or_else(|| "?".into(), |k| k.to_string())
        ),
    }
}

// ---- admissible ----

#[derive(Debug, Serialize)]
struct AdmissibleBody {
    profile: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    tuple: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outcome: Option<AdmissibleOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    law: Option<AdmissibleLaw>,
}

fn parse_profile(spec: &str, tail: &str) -> Result<(String, DerivProfile), String> {
    let tail = match tail {
        "unknown" => Tail::Unknown,
        "all-zero" | "all_zero" => Tail::AllZero,
        "all-positive" | "all_positive" => Tail::AllPositive,
        other => {
            return Err(format!(
                "unknown tail '{other}' (expected unknown, all-zero, or all-positive)"
            ))
        }
    };
    let profile = DerivProfile::parse(spec, tail).map_err(|e| e.to_string())?;
    Ok((spec.replace('_', "-"), profile))
}

fn handle_admissible(
    profile_spec: &str,
    n: usize,
    tuple: Option<&[usize]>,
    tail: &str,
    ctx: &Ctx,
) -> Result<(i32, Envelope<AdmissibleBody>, Vec<String>), String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    check_dimension(n, ctx.max_n)?;
    let (canon, profile) = parse_profile(profile_spec, tail)?;

    let mut body = AdmissibleBody {
        profile: canon,
        n,
        tuple: tuple.map(<[usize]>::to_vec),
        outcome: None,
        law: None,
    };
    let mut text = Vec::new();

    if let Some(tuple) = tuple {
        if tuple.len() != n {
            return Err(format!(
                "--tuple lists {} orders but --n is {n}",
                tuple.len()
            ));
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("--tuple must be strictly increasing, got {tuple:?}"));
        }
        let outcome = is_admissible(tuple, &profile, n)
            .map_err(|e| format!("undecidable with the supplied profile: {e}"))?;
        match &outcome {
            AdmissibleOutcome::Admissible => text.push("admissible".into()),
            AdmissibleOutcome::NotAdmissible { witness } => text.push(format!(
                "not admissible (witness orders ({}))",
                witness
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )),
        }
        body.outcome = Some(outcome);
    } else {
        let law = admissible_characterize(&profile, n)
            .map_err(|e| format!("undecidable with the supplied profile: {e}"))?;
        match &law {
            AdmissibleLaw::AllAdmissible => text.push("ALL_ADMISSIBLE".into()),
            AdmissibleLaw::Threshold { lowest, sum } => {
                let tuple = lowest
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                text.push(format!("threshold ({tuple}), sum {sum}"));
                text.push(law.to_string());
            }
        }
        body.law = Some(law);
    }

    let mut config = RunConfig::new("admissible", ctx);
    config.n = Some(n);
    Ok((0, Envelope::new(config, body), text))
}

// ---- suite ----

fn handle_suite(seed: u64, scale: Scale, ctx: &Ctx) -> (i32, Envelope<SuiteReport>, Vec<String>) {
    let report = run_suite(seed, scale);
    let mut text: Vec<String> = report.criteria.iter().map(|c| c.line()).collect();
    let failed = report.criteria.iter().filter(|c| !c.pass).count();
    text.push(if report.all_pass {
        format!(
            "suite: all {} criteria passed (scale={scale}, seed={seed})",
            report.criteria.len()
        )
    } else {
        format!(
            "suite: {failed} of {} criteria FAILED (scale={scale}, seed={seed})",
            report.criteria.len()
        )
    });

    let mut config = RunConfig::new("suite", ctx);
    config.seed = Some(seed);
    config.rng = Some(RNG_ALGORITHM);
    config.carrier = "mixed";
    let code = i32::from(!report.all_pass);
    (code, Envelope::new(config, report), text)
}

// ---- shared helpers ----

fn check_dimension(n: usize, max_n: usize) -> Result<(), String> {
    if n > max_n {
        return Err(dimension_message(n, max_n));
    }
    Ok(())
}

fn dimension_message(n: usize, max_n: usize) -> String {
    format!("dimension {n} exceeds the bound {max_n} (override with SCHURLAB_MAX_N)")
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s).map_err(|e| e.to_string())
}

fn parse_rationals(items: &[String]) -> Result<Vec<Rational>, String> {
    items.iter().map(|s| parse_rational(s)).collect()
}

fn check_distinct(flag: &str, xs: &[Rational]) -> Result<(), String> {
    for j in 0..xs.len() {
        for k in j + 1..xs.len() {
            if xs[j] == xs[k] {
                return Err(format!(
                    "{flag} coordinates must be pairwise distinct; positions {j} and {k} are both {}",
                    xs[j]
                ));
            }
        }
    }
    Ok(())
}

fn join_rationals(xs: &[Rational]) -> String {
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out
}

fn series_text(coeffs: &[Rational], cutoff: usize) -> String {
    crate::ring::TruncSeries::new(cutoff, coeffs.to_vec()).to_string()
}

fn match_line(is_match: bool, first_mismatch: Option<usize>) -> String {
    if is_match {
        "match: yes".into()
    } else {
        format!(
            "match: NO — first mismatch at degree {}",
            first_mismatch.map_or_else(|| "?".into(), |d| d.to_string())
        )
    }
}
