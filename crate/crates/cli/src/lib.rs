//! `ifm` command-line front end.
//!
//! Exit codes: 0 ok, 2 input error, 3 math-domain error, 4 no convergence,
//! 5 oracle mismatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ifm_core::io::{parse_grid, parse_matrix, print_matrix, DocumentError};
use ifm_core::oracle::{differential_check_with, OracleError};
use ifm_core::sweep::{run_sweep, Family, SweepPlan};
use ifm_core::{
    critical_structure, export_dot, power, power_sequence, predict_universal, ConvergenceOptions,
    DotOptions, Ifm64, IfmError, Operator64, OracleBudget,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MATH: u8 = 3;
pub const EXIT_NOT_CONVERGED: u8 = 4;
pub const EXIT_MISMATCH: u8 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "ifm",
    version,
    about = "Powers of intuitionistic fuzzy matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A^k.
    Power(PowerArgs),
    /// Iterate powers until they stop changing.
    Converge(ConvergeArgs),
    /// Critical structure, limit predictions and optional DOT export.
    Analyze(AnalyzeArgs),
    /// Run the convergence engine over a lambda (and p) grid; CSV output.
    Sweep(SweepArgs),
    /// Compare the engine against brute-force walk enumeration.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    /// Max/min of weighted power means.
    GenMean,
    /// Convex combination of max-min and arithmetic mean.
    Star,
}

#[derive(Debug, Args)]
pub struct OperatorArgs {
    #[arg(long, value_enum, default_value = "gen-mean")]
    pub op: OpKind,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Exponent for gen-mean; must be nonzero.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub p: f64,
}

impl OperatorArgs {
    fn operator(&self) -> Result<Operator64, CliError> {
        Ok(match self.op {
            OpKind::GenMean => Operator64::generalized_mean(self.lambda, self.p)?,
            OpKind::Star => Operator64::convex_combo(self.lambda)?,
        })
    }
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[arg(long, default_value_t = 2)]
    pub steps: usize,
    /// Round output to this many decimals.
    #[arg(long)]
    pub display: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
    /// Write per-step `m,delta,bound` rows here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub display: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Write a Graphviz digraph here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "gen-mean")]
    pub op: OpKind,
    /// `start:stop:step`, a comma list, or one value.
    #[arg(long)]
    pub lambda_grid: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub p_grid: String,
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    #[arg(long, default_value_t = 5)]
    pub max_m: usize,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(_) => EXIT_MATH,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Math(m) | CliError::Mismatch(m) => m,
        }
    }
}

impl From<IfmError> for CliError {
    fn from(e: IfmError) -> Self {
        match e {
            IfmError::InvalidArgument(_) | IfmError::Entry { .. } => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn read_matrix(path: &Path) -> Result<Ifm64, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    Ok(parse_matrix(&text)?)
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| io_err(path, e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Power(a) => cmd_power(&a, out),
        Command::Converge(a) => cmd_converge(&a, out),
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::OracleCheck(a) => cmd_oracle_check(&a, out, power),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn cmd_power(args: &PowerArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = read_matrix(&args.input)?;
    let op = args.operator.operator()?;
    if args.steps == 0 {
        return Err(CliError::Input("--steps must be at least 1".into()));
    }
    let m = power(&a, args.steps, &op)?;
    let _ = writeln!(out, "{}", print_matrix(&m, args.display));
    Ok(EXIT_OK)
}

pub fn cmd_converge(args: &ConvergeArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = read_matrix(&args.input)?;
    let op = args.operator.operator()?;
    let opts = ConvergenceOptions {
        eps: args.eps,
        max_iter: args.max_iter,
    };
    let report = power_sequence(&a, &op, &opts)?;

    if let Some(path) = &args.trace {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| io_err(path, e);
        w.write_record(["m", "delta", "bound"]).map_err(csv_err)?;
        for (k, (d, b)) in report.deltas.iter().zip(&report.bound_trace).enumerate() {
            let bound = b.map_or_else(|| "n/a".to_string(), |b| format!("{b:e}"));
            w.write_record([(k + 2).to_string(), format!("{d:e}"), bound])
                .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| io_err(path, e))?;
        write_file(path, &bytes)?;
    }

    let _ = writeln!(out, "operator: {op}");
    let _ = writeln!(out, "converged: {}", yes_no(report.converged));
    let _ = writeln!(out, "iterations: {}", report.iterations);
    let _ = writeln!(out, "final power: {}", report.final_power());
    let _ = writeln!(
        out,
        "final delta: {:e}",
        report.final_delta().unwrap_or(0.0)
    );
    match report.oscillation_period {
        Some(p) => {
            let _ = writeln!(out, "oscillation period: {p}");
        }
        None => {
            let _ = writeln!(out, "oscillation period: none");
        }
    }
    let _ = writeln!(
        out,
        "guarantee: {}",
        if report.guaranteed {
            "theorem"
        } else {
            "no-guarantee"
        }
    );
    let _ = writeln!(out, "bound violations: {}", report.bound_violations(1e-12));
    let _ = writeln!(out, "sum-constraint violations: {}", report.sum_violations);
    let _ = writeln!(out, "row uniformity: {:e}", report.limit.row_uniformity());
    let _ = writeln!(
        out,
        "universal: {}",
        yes_no(report.limit.is_universal(1e-5))
    );
    let _ = writeln!(out, "limit:");
    let _ = writeln!(out, "{}", print_matrix(&report.limit, args.display));
    Ok(if report.converged {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    })
}

fn vertex_set(vs: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = vs.into_iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = read_matrix(&args.input)?;
    let cs = critical_structure(&a)?;
    let edges: Vec<String> = cs
        .critical_edges
        .iter()
        .map(|(i, j)| format!("({},{})", i + 1, j + 1))
        .collect();
    let columns: Vec<String> = cs
        .reachable_columns
        .iter()
        .enumerate()
        .map(|(j, r)| format!("{}:{}", j + 1, yes_no(*r)))
        .collect();
    let _ = writeln!(out, "critical edges: {}", edges.join(" "));
    let _ = writeln!(
        out,
        "critical vertices: {}",
        vertex_set(cs.critical_vertices.iter().copied())
    );
    let _ = writeln!(out, "column limits <1,0>: {}", columns.join(" "));
    let _ = writeln!(out, "predict universal: {}", yes_no(predict_universal(&a)?));
    if let Some(path) = &args.dot {
        let dot = export_dot(&a, &DotOptions::default())?;
        write_file(path, dot.as_bytes())?;
        let _ = writeln!(out, "dot written: {}", path.display());
    }
    Ok(EXIT_OK)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = read_matrix(&args.input)?;
    let lambda_grid = parse_grid(&args.lambda_grid).map_err(CliError::Input)?;
    let p_grid = match args.op {
        OpKind::GenMean => parse_grid(&args.p_grid).map_err(CliError::Input)?,
        OpKind::Star => Vec::new(),
    };
    let plan = SweepPlan {
        lambda_grid,
        p_grid,
        family: match args.op {
            OpKind::GenMean => Family::GeneralizedMean,
            OpKind::Star => Family::ConvexCombo,
        },
        eps: args.eps,
        max_iter: args.max_iter,
    };
    let rows = run_sweep(&a, &plan)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    let to_err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record([
        "lambda",
        "p",
        "converged",
        "iterations",
        "final_delta",
        "mu_distance_to_U",
        "guarantee",
    ])
    .map_err(to_err)?;
    for r in &rows {
        w.write_record([
            r.lambda.to_string(),
            r.p.map(|p| p.to_string()).unwrap_or_default(),
            r.converged.to_string(),
            r.iterations.to_string(),
            format!("{:e}", r.final_delta),
            format!("{:e}", r.mu_distance_to_universal),
            if r.guaranteed {
                "theorem"
            } else {
                "no-guarantee"
            }
            .to_string(),
        ])
        .map_err(to_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    match &args.output {
        Some(path) => write_file(path, &bytes)?,
        None => {
            let _ = out.write_all(&bytes);
        }
    }
    Ok(EXIT_OK)
}

/// Runs the differential check with an injectable power routine.
pub fn cmd_oracle_check<F>(
    args: &OracleArgs,
    out: &mut dyn Write,
    power_fn: F,
) -> Result<u8, CliError>
where
    F: Fn(&Ifm64, usize, &Operator64) -> ifm_core::Result<Ifm64>,
{
    if args.cases == 0 {
        return Err(CliError::Input("--cases must be at least 1".into()));
    }
    if args.max_n == 0 || args.max_m == 0 {
        return Err(CliError::Input(
            "--max-n and --max-m must be at least 1".into(),
        ));
    }
    let budget = OracleBudget {
        max_n: args.max_n,
        max_m: args.max_m,
    };
    budget.check(args.max_n, args.max_m)?;
    match differential_check_with(args.cases, &budget, args.seed, power_fn) {
        Ok(r) => {
            let _ = writeln!(
                out,
                "oracle-check: {} trials, {} comparisons, max abs error {:e}, 0 mismatches",
                r.trials, r.comparisons, r.max_abs_error
            );
            Ok(EXIT_OK)
        }
        Err(OracleError::MismatchFound(m)) => {
            let msg = format!(
                "{}\ncounterexample:\n{}",
                OracleError::MismatchFound(m.clone()),
                print_matrix(&m.matrix, None)
            );
            Err(CliError::Mismatch(msg))
        }
        Err(OracleError::NoTrials) => Err(CliError::Input("--cases must be at least 1".into())),
        Err(OracleError::Ifm(e)) => Err(e.into()),
    }
}
