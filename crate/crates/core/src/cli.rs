//! Instance files, reports and the `wcf` command line.
//!
//! Commands never write partial output: everything is rendered into a
//! [`CommandOutput`] first and only emitted once the command has succeeded.
//! Exit codes are 0 on success, 1 when a verification fails, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::adversary::{
    optimal_alice_state, optimal_bob_strategy, p_a_max, p_a_thresh, p_b_max, p_b_thresh,
    security_report, threshold_alice_state, threshold_bob_strategy, SecurityReport,
};
use crate::error::{Error, Result};
use crate::linalg::{c, ComplexMatrix, HermitianOperator};
use crate::oracle::{
    alice_oracle, alice_threshold_oracle, bob_threshold_oracle, bob_unitary_oracle,
    frequency_table, lemma_check, MonteCarloReport, OracleConfig, OracleResult,
};
use crate::protocol::{family_one, family_two, AlicePlay, BobPlay, ProtocolInstance};

pub const FORMAT_VERSION: &str = "wcf-1";

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Oracle tolerance for the sphere and unitary-group ascents.
pub const ASCENT_TOL: f64 = 1e-6;
/// Oracle tolerance for the zero-catch Bob search.
pub const THRESHOLD_SEARCH_TOL: f64 = 1e-4;
/// Largest admissible residual of the Schmidt-equivalence identity.
pub const LEMMA_TOL: f64 = 1e-10;

/// `(rho, E0)` on disk. Complex entries are `[re, im]`, matrices row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub format_version: String,
    pub dim: usize,
    pub rho: Vec<Vec<[f64; 2]>>,
    pub e0: Vec<Vec<[f64; 2]>>,
}

fn encode(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn decode(name: &str, dim: usize, rows: &[Vec<[f64; 2]>]) -> Result<HermitianOperator> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Malformed(format!("{name} is not a {dim}x{dim} matrix")));
    }
    let m = ComplexMatrix::from_fn(dim, dim, |i, j| c(rows[i][j][0], rows[i][j][1]));
    HermitianOperator::new(m).map_err(|e| Error::Malformed(format!("{name}: {e}")))
}

impl InstanceDocument {
    pub fn from_instance(instance: &ProtocolInstance) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            dim: instance.dim(),
            rho: encode(instance.rho().matrix()),
            e0: encode(instance.e0().matrix()),
        }
    }

    pub fn to_instance(&self) -> Result<ProtocolInstance> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Malformed(format!(
                "format_version {:?}, expected {FORMAT_VERSION:?}",
                self.format_version
            )));
        }
        if self.dim == 0 {
            return Err(Error::Malformed("dim must be positive".into()));
        }
        let rho = decode("rho", self.dim, &self.rho)?;
        let e0 = decode("e0", self.dim, &self.e0)?;
        ProtocolInstance::new(rho, e0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn read_instance(path: &Path) -> Result<ProtocolInstance> {
    InstanceDocument::from_json(&std::fs::read_to_string(path)?)?.to_instance()
}

/// One oracle-versus-closed-form comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRow {
    pub figure: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub delta: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Output of `describe`, `run` and `verify`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub format_version: String,
    /// Path of the instance file.
    pub source: String,
    pub dim: usize,
    #[serde(flatten)]
    pub report: SecurityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<VerificationRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<MonteCarloReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyChoice {
    Honest,
    Optimal,
    Threshold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Figure {
    #[value(name = "pa_max")]
    PaMax,
    #[value(name = "pa_thresh")]
    PaThresh,
    #[value(name = "pb_max")]
    PbMax,
    #[value(name = "pb_thresh")]
    PbThresh,
    #[value(name = "lemma")]
    Lemma,
}

impl Figure {
    const ALL: [Figure; 5] = [
        Figure::PaMax,
        Figure::PaThresh,
        Figure::PbMax,
        Figure::PbThresh,
        Figure::Lemma,
    ];

    fn name(self) -> &'static str {
        match self {
            Figure::PaMax => "pa_max",
            Figure::PaThresh => "pa_thresh",
            Figure::PbMax => "pb_max",
            Figure::PbThresh => "pb_thresh",
            Figure::Lemma => "lemma",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wcf", version, about = "Cheat-sensitive quantum weak coin flipping")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an instance file for one of the two parametric families.
    Make {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        family: u8,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Security figures of an instance.
    Describe { instance: PathBuf },
    /// Sample protocol executions and compare with the exact distribution.
    Run {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "honest")]
        alice: StrategyChoice,
        #[arg(long, value_enum, default_value = "honest")]
        bob: StrategyChoice,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Sweep a family parameter; always CSV.
    Curve {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        family: u8,
        #[arg(long, allow_negative_numbers = true)]
        x_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        x_max: f64,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rediscover the figures numerically and compare with the closed forms.
    Verify {
        instance: PathBuf,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        /// Figures to check; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        which: Vec<Figure>,
        #[arg(long, default_value_t = 3)]
        lemma_dim: usize,
        #[arg(long, default_value_t = 100)]
        lemma_trials: usize,
    },
}

/// Everything a command emits, held back until it has fully succeeded.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CommandOutput {
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
    pub exit_code: i32,
}

impl CommandOutput {
    fn emit(text: String, out: Option<&PathBuf>) -> Self {
        match out {
            Some(path) => Self {
                files: vec![(path.clone(), text)],
                ..Self::default()
            },
            None => Self {
                stdout: text,
                ..Self::default()
            },
        }
    }
}

/// Rounds to `digits` significant digits for display.
pub fn significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    if !(-4..15).contains(&magnitude) {
        return format!("{:.*e}", digits.saturating_sub(1), value);
    }
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

fn make_family(family: u8, x: f64) -> Result<ProtocolInstance> {
    match family {
        1 => family_one(x),
        _ => family_two(x),
    }
}

fn check_family_domain(family: u8, x: f64) -> Result<()> {
    let (ok, interval) = match family {
        1 => (x > 0.5 && x <= 1.0, "(1/2, 1]"),
        _ => ((0.5..1.0).contains(&x), "[1/2, 1)"),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            parameter: "x",
            value: x,
            interval,
        })
    }
}

const REPORT_FIELDS: [&str; 7] = [
    "p_a_max",
    "p_a_thresh",
    "p_b_max",
    "p_b_thresh",
    "epsilon_a",
    "epsilon_b",
    "tradeoff_product",
];

fn report_values(r: &SecurityReport) -> [f64; 7] {
    [
        r.p_a_max,
        r.p_a_thresh,
        r.p_b_max,
        r.p_b_thresh,
        r.epsilon_a,
        r.epsilon_b,
        r.tradeoff_product,
    ]
}

fn render_report_text(doc: &ReportDocument, out: &mut String) {
    writeln!(out, "instance {} (dim {})", doc.source, doc.dim).unwrap();
    for (name, v) in REPORT_FIELDS.iter().zip(report_values(&doc.report)) {
        writeln!(out, "{name:<18}{}", significant(v, 6)).unwrap();
    }
}

fn render_report_csv(doc: &ReportDocument, out: &mut String) {
    writeln!(out, "source,dim,{}", REPORT_FIELDS.join(",")).unwrap();
    let values: Vec<String> = report_values(&doc.report).iter().map(|v| v.to_string()).collect();
    writeln!(out, "{},{},{}", csv_field(&doc.source), doc.dim, values.join(",")).unwrap();
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn base_report(path: &Path, instance: &ProtocolInstance) -> Result<ReportDocument> {
    Ok(ReportDocument {
        format_version: FORMAT_VERSION.to_string(),
        source: path.display().to_string(),
        dim: instance.dim(),
        report: security_report(instance)?,
        verification: None,
        monte_carlo: None,
    })
}

fn cmd_make(family: u8, x: f64, out: Option<&PathBuf>) -> Result<CommandOutput> {
    check_family_domain(family, x)?;
    let doc = InstanceDocument::from_instance(&make_family(family, x)?);
    Ok(CommandOutput::emit(doc.to_json(), out))
}

fn cmd_describe(path: &Path, format: Format) -> Result<CommandOutput> {
    let instance = read_instance(path)?;
    let doc = base_report(path, &instance)?;
    let mut text = String::new();
    match format {
        Format::Json => text = render_json(&doc),
        Format::Csv => render_report_csv(&doc, &mut text),
        Format::Text => render_report_text(&doc, &mut text),
    }
    Ok(CommandOutput::emit(text, None))
}

fn alice_play(choice: StrategyChoice, instance: &ProtocolInstance) -> Result<AlicePlay> {
    Ok(match choice {
        StrategyChoice::Honest => AlicePlay::Honest,
        StrategyChoice::Optimal => AlicePlay::Cheat(optimal_alice_state(instance)?),
        StrategyChoice::Threshold => AlicePlay::Cheat(threshold_alice_state(instance)?),
    })
}

fn bob_play(choice: StrategyChoice, instance: &ProtocolInstance) -> Result<BobPlay> {
    Ok(match choice {
        StrategyChoice::Honest => BobPlay::Honest,
        StrategyChoice::Optimal => BobPlay::Cheat(optimal_bob_strategy(instance)),
        StrategyChoice::Threshold => BobPlay::Cheat(threshold_bob_strategy(instance)?),
    })
}

fn cmd_run(
    path: &Path,
    alice: StrategyChoice,
    bob: StrategyChoice,
    trials: u64,
    seed: u64,
    format: Format,
) -> Result<CommandOutput> {
    if alice != StrategyChoice::Honest && bob != StrategyChoice::Honest {
        return Err(Error::Malformed(
            "--alice and --bob cannot both cheat: each strategy is defined against an honest opponent".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::OutOfRange {
            parameter: "trials",
            value: 0.0,
            interval: "[1, inf)",
        });
    }
    let instance = read_instance(path)?;
    let table = frequency_table(
        &instance,
        &alice_play(alice, &instance)?,
        &bob_play(bob, &instance)?,
        trials,
        seed,
    )?;
    let mut text = String::new();
    match format {
        Format::Json => {
            let mut doc = base_report(path, &instance)?;
            doc.monte_carlo = Some(table);
            text = render_json(&doc);
        }
        Format::Csv => {
            writeln!(text, "outcome,count,frequency,probability,z_score").unwrap();
            for r in &table.rows {
                writeln!(
                    text,
                    "{},{},{},{},{}",
                    r.outcome.name(),
                    r.count,
                    r.frequency,
                    r.probability,
                    r.z_score
                )
                .unwrap();
            }
        }
        Format::Text => {
            writeln!(text, "{trials} trials, seed {seed}").unwrap();
            writeln!(
                text,
                "{:<20}{:>10}{:>12}{:>12}{:>10}",
                "outcome", "count", "frequency", "exact", "z"
            )
            .unwrap();
            for r in &table.rows {
                writeln!(
                    text,
                    "{:<20}{:>10}{:>12}{:>12}{:>10}",
                    r.outcome.name(),
                    r.count,
                    significant(r.frequency, 6),
                    significant(r.probability, 6),
                    significant(r.z_score, 3)
                )
                .unwrap();
            }
            writeln!(text, "false accusations: {}", table.false_accusations).unwrap();
        }
    }
    Ok(CommandOutput::emit(text, None))
}

/// `steps` evenly spaced points from `x_min` to `x_max` inclusive.
pub fn grid(x_min: f64, x_max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![x_min],
        _ => (0..steps)
            .map(|i| x_min + (x_max - x_min) * i as f64 / (steps - 1) as f64)
            .collect(),
    }
}

fn cmd_curve(
    family: u8,
    x_min: f64,
    x_max: f64,
    steps: usize,
    out: Option<&PathBuf>,
) -> Result<CommandOutput> {
    if steps == 0 {
        return Err(Error::OutOfRange {
            parameter: "steps",
            value: 0.0,
            interval: "[1, inf)",
        });
    }
    if x_max < x_min {
        return Err(Error::Malformed(format!("x_max {x_max} below x_min {x_min}")));
    }
    let mut text = String::from("x,p_a_max,p_b_max,p_a_thresh,p_b_thresh,product\n");
    for x in grid(x_min, x_max, steps) {
        check_family_domain(family, x)?;
        let r = security_report(&make_family(family, x)?)?;
        writeln!(
            text,
            "{x},{},{},{},{},{}",
            r.p_a_max, r.p_b_max, r.p_a_thresh, r.p_b_thresh, r.tradeoff_product
        )
        .unwrap();
    }
    Ok(CommandOutput::emit(text, out))
}

fn oracle_row(figure: Figure, closed_form: f64, result: &OracleResult, tolerance: f64) -> VerificationRow {
    let delta = result.best_value - closed_form;
    let mut pass = delta.abs() <= tolerance && delta <= ASCENT_TOL;
    if let Some(catch) = result.max_probe_catch {
        pass &= catch <= crate::oracle::ZERO_CATCH_TOL;
    }
    VerificationRow {
        figure: figure.name().to_string(),
        closed_form,
        oracle: result.best_value,
        delta,
        tolerance,
        pass,
    }
}

fn verify_figure(
    figure: Figure,
    instance: &ProtocolInstance,
    config: &OracleConfig,
    lemma_dim: usize,
    lemma_trials: usize,
) -> Result<VerificationRow> {
    Ok(match figure {
        Figure::PaMax => oracle_row(figure, p_a_max(instance), &alice_oracle(instance, config)?, ASCENT_TOL),
        Figure::PaThresh => oracle_row(
            figure,
            p_a_thresh(instance)?,
            &alice_threshold_oracle(instance, config)?,
            ASCENT_TOL,
        ),
        Figure::PbMax => oracle_row(
            figure,
            p_b_max(instance),
            &bob_unitary_oracle(instance, config)?,
            ASCENT_TOL,
        ),
        Figure::PbThresh => oracle_row(
            figure,
            p_b_thresh(instance)?,
            &bob_threshold_oracle(instance, config)?,
            THRESHOLD_SEARCH_TOL,
        ),
        Figure::Lemma => {
            let residual = lemma_check(lemma_dim, lemma_trials, config.seed)?;
            VerificationRow {
                figure: figure.name().to_string(),
                closed_form: 0.0,
                oracle: residual,
                delta: residual,
                tolerance: LEMMA_TOL,
                pass: residual < LEMMA_TOL,
            }
        }
    })
}

fn cmd_verify(
    path: &Path,
    restarts: usize,
    which: &[Figure],
    lemma_dim: usize,
    lemma_trials: usize,
    seed: u64,
    format: Format,
) -> Result<CommandOutput> {
    let instance = read_instance(path)?;
    let config = OracleConfig {
        restarts,
        ..OracleConfig::with_seed(seed)
    };
    let figures: Vec<Figure> = if which.is_empty() {
        Figure::ALL.to_vec()
    } else {
        Figure::ALL.iter().copied().filter(|f| which.contains(f)).collect()
    };
    let rows = figures
        .iter()
        .map(|&f| verify_figure(f, &instance, &config, lemma_dim, lemma_trials))
        .collect::<Result<Vec<_>>>()?;
    let all_pass = rows.iter().all(|r| r.pass);
    let mut text = String::new();
    match format {
        Format::Json => {
            let mut doc = base_report(path, &instance)?;
            doc.verification = Some(rows);
            text = render_json(&doc);
        }
        Format::Csv => {
            writeln!(text, "figure,closed_form,oracle,delta,tolerance,pass").unwrap();
            for r in &rows {
                writeln!(
                    text,
                    "{},{},{},{},{},{}",
                    r.figure, r.closed_form, r.oracle, r.delta, r.tolerance, r.pass
                )
                .unwrap();
            }
        }
        Format::Text => {
            for r in &rows {
                writeln!(
                    text,
                    "{:<10} closed {:>10}  oracle {:>10}  delta {:>11}  {}",
                    r.figure,
                    significant(r.closed_form, 6),
                    significant(r.oracle, 6),
                    significant(r.delta, 3),
                    if r.pass { "PASS" } else { "FAIL" }
                )
                .unwrap();
            }
        }
    }
    let mut output = CommandOutput::emit(text, None);
    if !all_pass {
        output.exit_code = EXIT_VERIFICATION_FAILED;
    }
    Ok(output)
}

/// Executes a parsed command without touching the terminal or the file system
/// beyond reading inputs.
pub fn execute(cli: &Cli) -> Result<CommandOutput> {
    match &cli.command {
        Command::Make { family, x, out } => cmd_make(*family, *x, out.as_ref()),
        Command::Describe { instance } => cmd_describe(instance, cli.format),
        Command::Run {
            instance,
            alice,
            bob,
            trials,
        } => cmd_run(instance, *alice, *bob, *trials, cli.seed, cli.format),
        Command::Curve {
            family,
            x_min,
            x_max,
            steps,
            out,
        } => cmd_curve(*family, *x_min, *x_max, *steps, out.as_ref()),
        Command::Verify {
            instance,
            restarts,
            which,
            lemma_dim,
            lemma_trials,
        } => cmd_verify(
            instance,
            *restarts,
            which,
            *lemma_dim,
            *lemma_trials,
            cli.seed,
            cli.format,
        ),
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_SUCCESS };
            let _ = e.print();
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    for (path, contents) in &output.files {
        if let Err(e) = std::fs::write(path, contents) {
            eprintln!("error: writing {}: {e}", path.display());
            return EXIT_INPUT_ERROR;
        }
    }
    print!("{}", output.stdout);
    output.exit_code
}
