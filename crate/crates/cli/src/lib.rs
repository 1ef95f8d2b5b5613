//! The `charring` command line. [`run`] is the whole program so that tests
//! can drive it in-process; `main` only forwards arguments and exit code.
//!
//! Exit codes: 0 when everything ran and every check passed, 1 when a check
//! failed, 2 on usage errors.

pub mod cell;
mod scan;

use std::io::Write;

use charring::char_ring::{five_generators_with, principal_generator_with, Presentation};
use charring::chebyshev::cheb_s;
use charring::pretzel::{pretzel_words, PretzelParams};
use charring::sl2::{verify_with, OracleConfig};
use charring::{parse_word, Strategy, TraceEngine, TracePolynomial, Word};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cell::{evaluate, Check};
pub use crate::scan::{parse_range, ScanConfig, ScanFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that overrides the default oracle seed.
pub const SEED_ENV: &str = "CHARRING_SEED";

#[derive(Parser, Debug)]
#[command(name = "charring", version, about = "SL2(C) trace polynomials and character rings of two-generator groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trace polynomial of a word in a, w, A = a⁻¹, W = w⁻¹.
    Trace(TraceArgs),
    /// The polynomial S_k evaluated at a trace polynomial (default y).
    Chebyshev(ChebyshevArgs),
    /// Character ring generators of a one-relator presentation.
    Charring(CharringArgs),
    /// Character ring generator of the (-2, 2m+1, 2n)-pretzel link.
    #[command(allow_negative_numbers = true)]
    Pretzel(PretzelArgs),
    /// Run the pretzel checks over a rectangle of parameters.
    Scan(ScanArgs),
    /// Compare trace polynomials with numeric traces of random SL2(C) matrices.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineChoice {
    Reduction,
    Frame,
}

impl From<EngineChoice> for Strategy {
    fn from(e: EngineChoice) -> Strategy {
        match e {
            EngineChoice::Reduction => Strategy::Reduction,
            EngineChoice::Frame => Strategy::Frame,
        }
    }
}

#[derive(Args, Debug)]
struct TraceArgs {
    #[arg(allow_hyphen_values = true)]
    word: String,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "reduction")]
    engine: EngineChoice,
}

#[derive(Args, Debug)]
struct ChebyshevArgs {
    #[arg(allow_negative_numbers = true)]
    k: i64,
    /// Argument of S_k, as a polynomial in x, y, z.
    #[arg(long = "of", default_value = "y")]
    of: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("relation").required(true).args(["relator", "palindromic"])))]
struct CharringArgs {
    /// A relation `u=v`.
    #[arg(long, allow_hyphen_values = true)]
    relator: Option<String>,
    /// A word r, for the relation r = reverse(r).
    #[arg(long, allow_hyphen_values = true)]
    palindromic: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PretzelArgs {
    m: i64,
    n: i64,
    #[arg(long)]
    json: bool,
    /// Check the closed form against the relator words, the z = 0 form and
    /// the leading-term table.
    #[arg(long)]
    check: bool,
    /// Decide reducedness of the character ring.
    #[arg(long)]
    check_reduced: bool,
    #[arg(long, value_enum, default_value = "frame")]
    engine: EngineChoice,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    m_range: (i64, i64),
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    n_range: (i64, i64),
    /// Comma-separated subset of closed_form_vs_word, z0, leading_term,
    /// reduced; or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: ScanFormat,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    parallelism: Option<u32>,
    #[arg(long, value_enum, default_value = "frame")]
    engine: EngineChoice,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    /// Defaults to $CHARRING_SEED, else 42.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "reduction")]
    engine: EngineChoice,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Outcome of a subcommand; `Usage` and `Failed` carry a message for stderr.
enum Outcome {
    Ok,
    Failed(String),
    Usage(String),
}

/// Runs the program with `args` (including the program name), reading the
/// seed override from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let seed = std::env::var(SEED_ENV).ok();
    run_with_seed_env(args, seed.as_deref(), out, err)
}

/// [`run`] with the value of `CHARRING_SEED` passed explicitly.
pub fn run_with_seed_env<I, T>(args: I, seed_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Trace(a) => cmd_trace(a, &mut io),
        Command::Chebyshev(a) => cmd_chebyshev(a, &mut io),
        Command::Charring(a) => cmd_charring(a, &mut io),
        Command::Pretzel(a) => cmd_pretzel(a, &mut io),
        Command::Scan(a) => cmd_scan(a, &mut io),
        Command::Verify(a) => cmd_verify(a, seed_env, &mut io),
    };
    match result {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Failed(msg)) => {
            let _ = writeln!(io.err, "check failed: {msg}");
            EXIT_CHECK_FAILED
        }
        Ok(Outcome::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

type CmdResult = Result<Outcome, Box<dyn std::error::Error>>;

fn word_arg(text: &str) -> Result<Word, Outcome> {
    parse_word(text).map_err(|e| Outcome::Usage(format!("invalid word {text:?}: {e}")))
}

macro_rules! try_usage {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(outcome) => return Ok(outcome),
        }
    };
}

fn print_json(io: &mut Io, v: &impl serde::Serialize) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *io.out, v)?;
    writeln!(io.out)
}

fn cmd_trace(a: TraceArgs, io: &mut Io) -> CmdResult {
    let u = try_usage!(word_arg(&a.word));
    let p = TraceEngine::with_strategy(a.engine.into()).trace_poly(&u);
    if a.json {
        print_json(
            io,
            &json!({ "word": u, "key": u.canonical_trace_key().word(), "trace": p, "text": p.to_string() }),
        )?;
    } else {
        writeln!(io.out, "{p}")?;
    }
    Ok(Outcome::Ok)
}

fn cmd_chebyshev(a: ChebyshevArgs, io: &mut Io) -> CmdResult {
    let gamma: TracePolynomial = match a.of.parse() {
        Ok(g) => g,
        Err(e) => return Ok(Outcome::Usage(format!("invalid polynomial {:?}: {e}", a.of))),
    };
    let s = match cheb_s(a.k, &gamma) {
        Ok(s) => s,
        Err(e) => return Ok(Outcome::Usage(e.to_string())),
    };
    if a.json {
        print_json(io, &json!({ "k": a.k, "of": gamma, "value": s }))?;
    } else {
        writeln!(io.out, "{s}")?;
    }
    Ok(Outcome::Ok)
}

fn cmd_charring(a: CharringArgs, io: &mut Io) -> CmdResult {
    let mut engine = TraceEngine::with_strategy(Strategy::Frame);
    if let Some(text) = a.palindromic {
        let r = try_usage!(word_arg(&text));
        let g = principal_generator_with(&r, &mut engine)?;
        if a.json {
            print_json(io, &json!({ "relator": r, "reverse": r.reverse(), "principal": g }))?;
        } else {
            writeln!(io.out, "{g}")?;
        }
        return Ok(Outcome::Ok);
    }
    let text = a.relator.expect("clap enforces the group");
    let Some((lhs, rhs)) = text.split_once('=') else {
        return Ok(Outcome::Usage(format!("relator {text:?} is not of the form u=v")));
    };
    let p = Presentation::new(try_usage!(word_arg(lhs)), try_usage!(word_arg(rhs)));
    let bundle = five_generators_with(&p, &mut engine);
    if a.json {
        print_json(io, &json!({ "presentation": p, "bundle": bundle }))?;
    } else {
        writeln!(io.out, "presentation: {p}")?;
        for (s, f) in &bundle.five {
            writeln!(io.out, "{:<10} {f}", format!("{}:", s.tag()))?;
        }
        writeln!(io.out, "palindromic: {}", bundle.palindromic)?;
        match &bundle.principal {
            Some(g) => writeln!(io.out, "principal: {g}")?,
            None => writeln!(io.out, "principal: none")?,
        }
    }
    if bundle.palindromic && bundle.principal.is_none() {
        return Ok(Outcome::Failed("palindromic presentation did not collapse to one generator".into()));
    }
    Ok(Outcome::Ok)
}

fn cmd_pretzel(a: PretzelArgs, io: &mut Io) -> CmdResult {
    let p = PretzelParams::new(a.m, a.n);
    let (u, r) = pretzel_words(p)?;
    let mut checks = Vec::new();
    if a.check {
        checks.extend([Check::ClosedFormVsWord, Check::Z0, Check::LeadingTerm]);
    }
    if a.check_reduced {
        checks.push(Check::Reduced);
    }
    let cell = evaluate(p, &checks, a.engine.into())?;
    if a.json {
        print_json(io, &cell)?;
    } else {
        writeln!(io.out, "params: {p}")?;
        writeln!(io.out, "u: {u}")?;
        writeln!(io.out, "r: {r}")?;
        writeln!(io.out, "generator: {}", cell.generator)?;
        writeln!(io.out, "q: {}", cell.q)?;
        writeln!(io.out, "leading y-term of q: {}", cell.leading_term)?;
        for (c, ok) in &cell.checks {
            writeln!(io.out, "check {}: {}", c.name(), if *ok { "pass" } else { "FAIL" })?;
        }
        if let Some(rep) = &cell.report {
            writeln!(io.out, "verdict: {:?}", rep.verdict)?;
            writeln!(io.out, "q squarefree: {}", rep.q_squarefree)?;
            writeln!(io.out, "kappa divides q: {}", rep.kappa_divides_q)?;
            writeln!(io.out, "gcd(kappa, q) constant: {}", rep.gcd_kappa_q_constant)?;
            if let Some(w) = &rep.witness {
                writeln!(io.out, "repeated factor: {w}")?;
            }
        }
    }
    for e in &cell.errors {
        writeln!(io.err, "{e}")?;
    }
    if cell.passed() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Failed(format!("pretzel {p}")))
    }
}

fn cmd_scan(a: ScanArgs, io: &mut Io) -> CmdResult {
    let checks = try_usage!(scan::parse_checks(&a.checks).map_err(Outcome::Usage));
    let cfg = ScanConfig {
        m_range: a.m_range,
        n_range: a.n_range,
        checks,
        output_path: a.out,
        format: a.format,
        parallelism: a.parallelism.map_or_else(scan::default_parallelism, |p| p as usize),
        strategy: a.engine.into(),
    };
    try_usage!(cfg.validate().map_err(Outcome::Usage));
    let cells = scan::run_scan(&cfg)?;
    match &cfg.output_path {
        Some(path) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
            scan::write_cells(&cfg, &cells, &mut file)?;
            file.flush()?;
        }
        None => scan::write_cells(&cfg, &cells, io.out)?,
    }
    let failed: Vec<String> = cells.iter().filter(|c| !c.passed()).map(|c| c.params.to_string()).collect();
    writeln!(io.err, "scanned {} cells, {} failed", cells.len(), failed.len())?;
    for c in cells.iter().filter(|c| !c.errors.is_empty()) {
        for e in &c.errors {
            writeln!(io.err, "{}: {e}", c.params)?;
        }
    }
    if failed.is_empty() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Failed(failed.join(", ")))
    }
}

fn cmd_verify(a: VerifyArgs, seed_env: Option<&str>, io: &mut Io) -> CmdResult {
    let seed = match (a.seed, seed_env) {
        (Some(s), _) => s,
        (None, Some(text)) => match text.trim().parse() {
            Ok(s) => s,
            Err(_) => return Ok(Outcome::Usage(format!("{SEED_ENV}={text:?} is not an unsigned integer"))),
        },
        (None, None) => OracleConfig::default().seed,
    };
    if a.tol.is_nan() || a.tol < 0.0 {
        return Ok(Outcome::Usage(format!("tolerance must be non-negative, got {}", a.tol)));
    }
    let cfg = OracleConfig { trials: a.trials, max_len: a.max_len, seed, tol: a.tol };
    let mut engine = TraceEngine::with_strategy(a.engine.into());
    let report = verify_with(&cfg, |u| engine.trace_poly(u))?;
    if a.json {
        print_json(io, &report)?;
    } else {
        writeln!(
            io.out,
            "trials: {}, max length: {}, seed: {}, tolerance: {:e}",
            cfg.trials, cfg.max_len, cfg.seed, cfg.tol
        )?;
        writeln!(io.out, "max relative error: {:e}", report.max_rel_error)?;
        writeln!(io.out, "failures: {}", report.failures.len())?;
        for f in report.failures.iter().take(20) {
            writeln!(io.out, "  trial {} word {:?} error {:e}", f.trial, f.word, f.rel_error)?;
        }
    }
    if report.passed() {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::Failed(format!("{} of {} trials above tolerance", report.failures.len(), cfg.trials)))
    }
}
