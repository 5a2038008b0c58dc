//! `radixstat` command line.
//!
//! Every subcommand is a thin wrapper over one library operation. Errors go
//! to stderr as a single line `error[<kind>]: <message>`:
//!
//! | kind         | exit |
//! |--------------|------|
//! | `usage`      | 2    |
//! | `domain`     | 1    |
//! | `infeasible` | 1    |
//! | `io`         | 1    |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use radixstat::constructors::{
    beatty_construct_section3, build_oscillating_schedule, construct_mean_without_frequency,
    floor_average_bounds, floor_weighted_average, quota_construct, validate_theta, BlockSpec,
    Level, NoMeanExample, OscillationSchedule,
};
use radixstat::radix::parse_digit_text;
use radixstat::rational::to_fraction_string;
use radixstat::report::{digits_text, stats_csv, stats_json, stats_table, ExactDecimal};
use radixstat::simulation::{normality_experiment, ExperimentConfig};
use radixstat::stats::{geometric_checkpoints, merge_checkpoints};
use radixstat::{
    exact_frequencies_rational, expand, mean_from_frequencies, parse_rational, running_stats,
    DigitStream, FiniteDigits, FrequencyProfile, Radix, Rational, RunningStats,
};

#[derive(Debug, Parser)]
#[command(
    name = "radixstat",
    version,
    about = "Exact digit statistics and constructions in base s"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Expansion of a rational in [0, 1) and its first digits
    Digits(DigitsArgs),
    /// Running digit statistics of a digit file (or stdin)
    Stats(StatsArgs),
    /// Digits with prescribed frequencies
    ConstructFreq(ConstructFreqArgs),
    /// Ternary digits with a digit mean but no digit frequencies
    ConstructMeanNofreq(ConstructMeanArgs),
    /// Binary runs 0 1 00 11 0000 1111 … whose digit mean has no limit
    NoMeanExample(NoMeanArgs),
    /// Floor-weighted averages 2/(n(n+1)) Σ_{j=k..n} [j·x] and their bounds
    #[command(name = "lemma2")]
    FloorAverage(FloorAverageArgs),
    /// Two-level schedule whose floor-weighted average oscillates
    Schedule(ScheduleArgs),
    /// Monte Carlo digit means of uniformly random digits
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Checkpoint depths: `geometric:start,factor,max` or `list:n1,n2,…`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoints(pub Vec<u64>);

fn parse_checkpoints(s: &str) -> Result<Checkpoints, String> {
    let ints = |body: &str| -> Result<Vec<u64>, String> {
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("`{t}` is not a non-negative integer"))
            })
            .collect()
    };
    if let Some(body) = s.strip_prefix("geometric:") {
        match *ints(body)?.as_slice() {
            [start, factor, max] if start >= 1 && factor >= 2 => {
                Ok(Checkpoints(geometric_checkpoints(start, factor, max)))
            }
            [_, _, _] => Err("geometric checkpoints need start >= 1 and factor >= 2".into()),
            _ => Err("expected geometric:start,factor,max".into()),
        }
    } else if let Some(body) = s.strip_prefix("list:") {
        let list = ints(body)?;
        if list.contains(&0) {
            return Err("checkpoints must be at least 1".into());
        }
        Ok(Checkpoints(merge_checkpoints(&[&list])))
    } else {
        Err("expected geometric:start,factor,max or list:n1,n2,...".into())
    }
}

fn parse_exact(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Comma-separated exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tau(pub Vec<Rational>);

fn parse_tau(s: &str) -> Result<Tau, String> {
    s.split(',')
        .map(|t| parse_exact(t.trim()))
        .collect::<Result<_, _>>()
        .map(Tau)
}

#[derive(Debug, Args)]
pub struct DigitsArgs {
    #[arg(long)]
    pub base: u32,
    /// `p/q` or a finite decimal in [0, 1)
    #[arg(long, value_parser = parse_exact)]
    pub rational: Rational,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub base: u32,
    /// Digit file; `-` or absent reads stdin. Whitespace is ignored.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Default: the full input length only
    #[arg(long, value_parser = parse_checkpoints)]
    pub checkpoints: Option<Checkpoints>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Digits,
    Stats,
    Blocks,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("profile").required(true).args(["tau", "a"]))]
pub struct ConstructFreqArgs {
    /// Target frequencies `t0,t1,…`; the base is their count
    #[arg(long, value_parser = parse_tau, conflicts_with_all = ["a", "b"])]
    pub tau: Option<Tau>,
    /// Zero frequency for the ternary indicator rule (with --b)
    #[arg(long, value_parser = parse_exact, requires = "b")]
    pub a: Option<Rational>,
    #[arg(long, value_parser = parse_exact, requires = "a")]
    pub b: Option<Rational>,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    /// `digits` or `stats`
    #[arg(long, value_enum, default_value_t = Emit::Stats)]
    pub emit: Emit,
    /// Default: geometric:1,10,count
    #[arg(long, value_parser = parse_checkpoints)]
    pub checkpoints: Option<Checkpoints>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConstructMeanArgs {
    #[arg(long, value_parser = parse_exact)]
    pub theta: Rational,
    #[arg(long, value_parser = parse_exact)]
    pub x1: Option<Rational>,
    #[arg(long, value_parser = parse_exact)]
    pub x2: Option<Rational>,
    #[arg(long, value_parser = parse_exact)]
    pub eps: Option<Rational>,
    #[arg(long, default_value_t = 100)]
    pub blocks: u64,
    #[arg(long, value_enum, default_value_t = Emit::Blocks)]
    pub emit: Emit,
    /// For `--emit stats`; default: every block end
    #[arg(long, value_parser = parse_checkpoints)]
    pub checkpoints: Option<Checkpoints>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct NoMeanArgs {
    #[arg(long, default_value_t = 2)]
    pub base: u32,
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    /// `digits` or `stats`
    #[arg(long, value_enum, default_value_t = Emit::Stats)]
    pub emit: Emit,
    /// Default: every run end up to count
    #[arg(long, value_parser = parse_checkpoints)]
    pub checkpoints: Option<Checkpoints>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("depths").required(true).args(["n", "checkpoints"]))]
pub struct FloorAverageArgs {
    #[arg(long, value_parser = parse_exact)]
    pub x: Rational,
    #[arg(long, default_value_t = 1)]
    pub k: u64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, value_parser = parse_checkpoints)]
    pub checkpoints: Option<Checkpoints>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ScheduleArgs {
    #[arg(long, value_parser = parse_exact)]
    pub x1: Rational,
    #[arg(long, value_parser = parse_exact)]
    pub x2: Rational,
    #[arg(long, value_parser = parse_exact)]
    pub eps: Rational,
    /// Horizon
    #[arg(long, default_value_t = 1000)]
    pub n: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub base: u32,
    /// Digits per trial
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Half-width of the band around (s-1)/2
    #[arg(long, value_parser = parse_exact, default_value = "33/1000")]
    pub band: Rational,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(radixstat::Error),
    Io(String),
}

impl From<radixstat::Error> for CliError {
    fn from(e: radixstat::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn report(&self) -> (String, u8) {
        match self {
            CliError::Usage(m) => (format!("error[usage]: {m}"), 2),
            CliError::Lib(e) if e.kind() == "parse" => (format!("error[usage]: {e}"), 2),
            CliError::Lib(e) => (format!("error[{}]: {e}", e.kind()), 1),
            CliError::Io(m) => (format!("error[io]: {m}"), 1),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run_cli<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = writeln!(stderr, "error[usage]: a subcommand is required\n");
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
                _ => {
                    // first paragraph of clap's message, folded onto one line
                    let rendered = e.render().to_string();
                    let line = rendered
                        .lines()
                        .take_while(|l| !l.trim().is_empty())
                        .map(str::trim)
                        .collect::<Vec<_>>()
                        .join(" ");
                    let line = line.strip_prefix("error: ").unwrap_or(&line);
                    let _ = writeln!(stderr, "error[usage]: {line}");
                    2
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let (msg, code) = e.report();
            let _ = writeln!(stderr, "{msg}");
            code
        }
    }
}

fn execute(command: CliCommand, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    let (text, output) = match command {
        CliCommand::Digits(a) => (digits(&a)?, a.output),
        CliCommand::Stats(a) => (stats(&a, stdin)?, a.output),
        CliCommand::ConstructFreq(a) => (construct_freq(&a)?, a.output),
        CliCommand::ConstructMeanNofreq(a) => (construct_mean(&a)?, a.output),
        CliCommand::NoMeanExample(a) => (no_mean(&a)?, a.output),
        CliCommand::FloorAverage(a) => (floor_average(&a)?, a.output),
        CliCommand::Schedule(a) => (schedule(&a)?, a.output),
        CliCommand::Simulate(a) => (simulate(&a)?, a.output),
    };
    match output.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn exact(x: &Rational) -> ExactDecimal {
    x.into()
}

fn exact_json(x: &Rational) -> Value {
    serde_json::to_value(exact(x)).expect("json renders")
}

fn render_stats(radix: Radix, stats: &RunningStats, format: Format) -> String {
    match format {
        Format::Table => stats_table(radix, &stats.rows),
        Format::Csv => stats_csv(radix, &stats.rows),
        Format::Json => json_text(&stats_json(radix, stats)),
    }
}

fn render_digits(radix: Radix, digits: &[u8], format: Format) -> String {
    match format {
        Format::Table => format!("{}\n", digits_text(radix, digits)),
        Format::Csv => {
            let mut out = String::from("position,digit\n");
            for (i, d) in digits.iter().enumerate() {
                writeln!(out, "{},{d}", i + 1).unwrap();
            }
            out
        }
        Format::Json => json_text(&json!({
            "base": radix.get(),
            "digits": digits_text(radix, digits),
        })),
    }
}

fn default_checkpoints(
    given: &Option<Checkpoints>,
    fallback: impl FnOnce() -> Vec<u64>,
) -> CliResult<Vec<u64>> {
    let list = match given {
        Some(c) => c.0.clone(),
        None => fallback(),
    };
    if list.is_empty() {
        return Err(CliError::Usage("no checkpoint depths to report".into()));
    }
    Ok(list)
}

fn digits(a: &DigitsArgs) -> CliResult<String> {
    let radix = Radix::new(a.base)?;
    let e = expand(&a.rational, radix)?;
    let digits = e.take_digits(a.count);
    Ok(match a.output.format {
        Format::Table => format!("{e}\n{}\n", digits_text(radix, &digits)),
        Format::Csv => render_digits(radix, &digits, Format::Csv),
        Format::Json => {
            let freqs = exact_frequencies_rational(&e);
            json_text(&json!({
                "base": radix.get(),
                "rational": exact_json(&a.rational),
                "expansion": e.to_string(),
                "preperiod": digits_text(radix, e.preperiod()),
                "period": digits_text(radix, e.period()),
                "digits": digits_text(radix, &digits),
                "frequencies": freqs.tau().iter().map(exact_json).collect::<Vec<_>>(),
                "mean": exact_json(&mean_from_frequencies(&freqs)),
            }))
        }
    })
}

fn stats(a: &StatsArgs, stdin: &mut dyn Read) -> CliResult<String> {
    let radix = Radix::new(a.base)?;
    let mut text = String::new();
    match &a.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(e.to_string()))?;
        }
    }
    let digits = parse_digit_text(radix, &text)?;
    if digits.is_empty() {
        return Err(CliError::Usage("input holds no digits".into()));
    }
    let len = digits.len() as u64;
    let checkpoints = default_checkpoints(&a.checkpoints, || vec![len])?;
    let stream = FiniteDigits::new(radix, digits)?;
    Ok(render_stats(
        radix,
        &running_stats(&stream, &checkpoints)?,
        a.output.format,
    ))
}

fn construct_freq(a: &ConstructFreqArgs) -> CliResult<String> {
    let (radix, digits) = match (&a.tau, &a.a, &a.b) {
        (Some(tau), _, _) => {
            let profile = FrequencyProfile::new(tau.0.clone())?;
            (profile.radix(), quota_construct(&profile, a.count))
        }
        (None, Some(x), Some(y)) => (Radix::TERNARY, beatty_construct_section3(x, y, a.count)?),
        _ => {
            return Err(CliError::Usage(
                "either --tau or both --a and --b are required".into(),
            ))
        }
    };
    emit_stream(
        radix,
        digits,
        a.emit,
        &a.checkpoints,
        a.output.format,
        |n| geometric_checkpoints(1, 10, n),
    )
}

fn emit_stream(
    radix: Radix,
    digits: Vec<u8>,
    emit: Emit,
    checkpoints: &Option<Checkpoints>,
    format: Format,
    fallback: impl FnOnce(u64) -> Vec<u64>,
) -> CliResult<String> {
    match emit {
        Emit::Digits => Ok(render_digits(radix, &digits, format)),
        Emit::Stats => {
            let len = digits.len() as u64;
            let checkpoints = default_checkpoints(checkpoints, || fallback(len))?;
            let stream = FiniteDigits::new(radix, digits)?;
            Ok(render_stats(
                radix,
                &running_stats(&stream, &checkpoints)?,
                format,
            ))
        }
        Emit::Blocks => Err(CliError::Usage(
            "--emit blocks applies to construct-mean-nofreq only".into(),
        )),
    }
}

fn construct_mean(a: &ConstructMeanArgs) -> CliResult<String> {
    validate_theta(&a.theta)?;
    let missing = |name: &str| {
        CliError::Usage(format!(
            "the following required argument was not provided: --{name}"
        ))
    };
    let x1 = a.x1.as_ref().ok_or_else(|| missing("x1"))?;
    let x2 = a.x2.as_ref().ok_or_else(|| missing("x2"))?;
    let eps = a.eps.as_ref().ok_or_else(|| missing("eps"))?;
    let (spec, stream) = construct_mean_without_frequency(&a.theta, x1, x2, eps, a.blocks)?;
    let format = a.output.format;
    match a.emit {
        Emit::Blocks => Ok(render_blocks(&spec, format)),
        Emit::Digits => {
            let digits: Vec<u8> = stream.digits().collect();
            Ok(render_digits(Radix::TERNARY, &digits, format))
        }
        Emit::Stats => {
            let checkpoints =
                default_checkpoints(&a.checkpoints, || merge_checkpoints(&[&spec.block_ends()]))?;
            Ok(render_stats(
                Radix::TERNARY,
                &running_stats(&stream, &checkpoints)?,
                format,
            ))
        }
    }
}

fn render_blocks(spec: &BlockSpec, format: Format) -> String {
    match format {
        Format::Csv => spec.to_csv(),
        Format::Table => {
            let mut out = format!(
                "{:>8} {:>10} {:>10} {:>10} {:>12}\n",
                "k", "zeros", "ones", "twos", "alpha"
            );
            for r in spec.rows() {
                writeln!(
                    out,
                    "{:>8} {:>10} {:>10} {:>10} {:>12}",
                    r.k,
                    r.zeros,
                    r.ones,
                    r.twos,
                    to_fraction_string(&r.alpha)
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = spec
                .rows()
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "a_k1": r.zeros,
                        "a_k2": r.ones,
                        "a_k3": r.twos,
                        "alpha": exact_json(&r.alpha),
                        "beta": exact_json(&r.beta),
                        "gamma": exact_json(&r.gamma),
                    })
                })
                .collect();
            json_text(&json!({
                "theta": exact_json(spec.theta()),
                "breakpoints": spec.schedule().breakpoints(),
                "total_len": spec.total_len(),
                "rows": rows,
            }))
        }
    }
}

fn no_mean(a: &NoMeanArgs) -> CliResult<String> {
    let radix = Radix::new(a.base)?;
    let digits: Vec<u8> = NoMeanExample::new(radix)
        .digits()
        .take(a.count as usize)
        .collect();
    emit_stream(
        radix,
        digits,
        a.emit,
        &a.checkpoints,
        a.output.format,
        |n| merge_checkpoints(&[&NoMeanExample::run_ends(n), &[n]]),
    )
}

fn floor_average(a: &FloorAverageArgs) -> CliResult<String> {
    let depths = match (&a.checkpoints, a.n) {
        (Some(c), _) => c.0.clone(),
        (None, Some(n)) => vec![n],
        (None, None) => return Err(CliError::Usage("--n or --checkpoints is required".into())),
    };
    let mut rows = Vec::with_capacity(depths.len());
    for n in depths {
        let w = floor_weighted_average(&a.x, a.k, n)?;
        let (lower, upper) = floor_average_bounds(&a.x, a.k, n)?;
        let holds = lower < w && w <= upper;
        rows.push((n, w, lower, upper, holds));
    }
    Ok(match a.output.format {
        Format::Table => {
            let mut out = format!(
                "{:>12} {:>24} {:>24} {:>24} {:>6}\n",
                "n", "w", "lower", "upper", "holds"
            );
            for (n, w, lo, hi, ok) in &rows {
                let d = |x: &Rational| exact(x).decimal;
                writeln!(
                    out,
                    "{n:>12} {:>24} {:>24} {:>24} {ok:>6}",
                    d(w),
                    d(lo),
                    d(hi)
                )
                .unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,w,lower,upper,w_dec,lower_dec,upper_dec,holds\n");
            for (n, w, lo, hi, ok) in &rows {
                let (w, lo, hi) = (exact(w), exact(lo), exact(hi));
                writeln!(
                    out,
                    "{n},{},{},{},{},{},{},{ok}",
                    w.exact, lo.exact, hi.exact, w.decimal, lo.decimal, hi.decimal
                )
                .unwrap();
            }
            out
        }
        Format::Json => json_text(&json!({
            "x": exact_json(&a.x),
            "k": a.k,
            "rows": rows.iter().map(|(n, w, lo, hi, ok)| json!({
                "n": n,
                "w": exact_json(w),
                "lower": exact_json(lo),
                "upper": exact_json(hi),
                "holds": ok,
            })).collect::<Vec<_>>(),
        })),
    })
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Low => "low",
        Level::High => "high",
    }
}

fn schedule(a: &ScheduleArgs) -> CliResult<String> {
    let sched: OscillationSchedule = build_oscillating_schedule(&a.x1, &a.x2, &a.eps, a.n)?;
    let runs = sched.runs();
    Ok(match a.output.format {
        Format::Table => {
            let mut out = format!(
                "{:>6} {:>10} {:>10} {:>5} {:>9} {:>24}\n",
                "run", "start", "end", "level", "complete", "w_end"
            );
            for (i, r) in runs.iter().enumerate() {
                writeln!(
                    out,
                    "{:>6} {:>10} {:>10} {:>5} {:>9} {:>24}",
                    i + 1,
                    r.start,
                    r.end,
                    level_name(r.level),
                    r.complete,
                    exact(&r.w_end).decimal
                )
                .unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("run,start,end,level,alpha,complete,w_end,w_end_dec\n");
            for (i, r) in runs.iter().enumerate() {
                let w = exact(&r.w_end);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    i + 1,
                    r.start,
                    r.end,
                    level_name(r.level),
                    to_fraction_string(sched.level_value(r.level)),
                    r.complete,
                    w.exact,
                    w.decimal
                )
                .unwrap();
            }
            out
        }
        Format::Json => json_text(&json!({
            "x1": exact_json(sched.x1()),
            "x2": exact_json(sched.x2()),
            "eps": exact_json(sched.epsilon()),
            "horizon": sched.horizon(),
            "breakpoints": sched.breakpoints(),
            "runs": runs.iter().map(|r| json!({
                "start": r.start,
                "end": r.end,
                "level": level_name(r.level),
                "complete": r.complete,
                "w_end": exact_json(&r.w_end),
            })).collect::<Vec<_>>(),
        })),
    })
}

fn simulate(a: &SimulateArgs) -> CliResult<String> {
    let cfg = ExperimentConfig::new(Radix::new(a.base)?, a.n, a.trials, a.seed)?;
    let summary = normality_experiment(&cfg, &a.band)?;
    Ok(match a.output.format {
        Format::Json => json_text(&summary.to_json()),
        Format::Csv => {
            let mut out = String::from("trial,r,r_dec\n");
            for (t, r) in summary.per_trial.iter().enumerate() {
                let r = exact(r);
                writeln!(out, "{t},{},{}", r.exact, r.decimal).unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "base              {}", cfg.radix.get()).unwrap();
            writeln!(out, "digits per trial  {}", cfg.n).unwrap();
            writeln!(out, "trials            {}", cfg.trials).unwrap();
            writeln!(out, "seed              {}", cfg.master_seed).unwrap();
            writeln!(
                out,
                "expected mean     {}",
                exact(&cfg.expected_mean()).decimal
            )
            .unwrap();
            writeln!(out, "sample mean       {}", exact(&summary.mean).decimal).unwrap();
            writeln!(out, "sample stddev     {:.6e}", summary.stddev).unwrap();
            writeln!(out, "band              {}", exact(&summary.band).decimal).unwrap();
            writeln!(
                out,
                "fraction in band  {}",
                exact(&summary.fraction_in_band).decimal
            )
            .unwrap();
            out
        }
    })
}
