use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use hardy_prony::bernoulli::{gb_recover_iterative, GbConfig};
use hardy_prony::experiments::condnum::{allpass_poles, clustered_poles, condnum_demo};
use hardy_prony::experiments::delay::{delay_demo, DelayConfig, DelayMethod, DelayReport, DelaySystemSpec};
use hardy_prony::experiments::rkhs::{rkhs_compare, RkhsConfig, RkhsDemoSpec, RkhsReport};
use hardy_prony::experiments::synthetic::{random_signal, rng};
use hardy_prony::hardy::{disk_points, CircleSampling, DiskPoint, GeneratingSequence, DEFAULT_GRID};
use hardy_prony::io::{
    complex_json, complex_list_json, condition_json, lift_sidecar_json, read_circle_sampling, read_complex_csv,
    read_moments, recovery_result_json, write_circle_sampling, write_complex_csv,
};
use hardy_prony::lifting::{lift, InverseMap};
use hardy_prony::linear::{compare_conditioning, tm_triangular_recover, PoleOrder};
use hardy_prony::prony::{
    classical_prony, grop_moments, grop_recover, max_match_error, vandermonde_recover, CoefficientMethod, GropConfig,
};
use hardy_prony::Error;

const EXIT_INVALID: u8 = 2;
const EXIT_NON_CONVERGENCE: u8 = 3;

#[derive(Parser)]
#[command(name = "hprony", version, about = "Prony-type parameter recovery through rational pole finding in the Hardy space")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Number of boundary grid points.
    #[arg(long = "grid", global = true, value_name = "N")]
    grid: Option<usize>,
    /// Model order M.
    #[arg(long, global = true, value_name = "M")]
    order: Option<usize>,
    /// Convergence tolerance for iterative methods.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for synthetic data.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Rational Prony recovery from boundary samples.
    Grop(GropArgs),
    /// Generalized Bernoulli pole iteration with deflation.
    Bernoulli(BernoulliArgs),
    /// Classical Prony on a moment sequence.
    Classical(ClassicalArgs),
    /// Weighted Z-transform of a moment sequence onto the circle grid.
    Lift(LiftArgs),
    /// Linear coefficients for known poles by the TM triangular system.
    RecoverLinear(RecoverLinearArgs),
    /// Vandermonde vs TM triangular condition numbers.
    Condnum(CondnumArgs),
    /// Delayed LTI system identification.
    DelayDemo(DelayArgs),
    /// Legendre-kernel RKHS demo: GB vs full-order Prony.
    RkhsDemo(RkhsArgs),
}

#[derive(Args)]
struct GropArgs {
    /// Circle sampling CSV (`re,im`); a seeded random signal when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Hankel rows minus one (default 2M - 1).
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, value_enum, default_value_t = CoeffArg::Tm)]
    coefficients: CoeffArg,
    /// Solve rank-deficient systems in the minimum-norm sense.
    #[arg(long)]
    allow_rank_deficient: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    Tm,
    Vandermonde,
    None,
}

#[derive(Args)]
struct BernoulliArgs {
    /// Circle sampling CSV (`re,im`); a seeded random signal when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generating sequence CSV (`re,im`), one period.
    #[arg(long = "gen-seq", value_name = "CSVFILE")]
    gen_seq: Option<PathBuf>,
    /// Period of the generating sequence; zeros of this length without `--gen-seq`.
    #[arg(long)]
    period: Option<usize>,
    #[arg(long, default_value_t = 0)]
    offset: usize,
    #[arg(long, default_value_t = 200)]
    kmax: usize,
    /// Number of poles to extract.
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct ClassicalArgs {
    /// Moment sequence CSV (`m,re,im`).
    #[arg(long)]
    moments: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Identity,
    Conj,
    ExpLog,
    Scale,
}

#[derive(Args)]
struct LiftArgs {
    /// Moment sequence CSV (`m,re,im`).
    #[arg(long)]
    moments: PathBuf,
    /// Weight `w`; estimated from the trailing ratios when absent.
    #[arg(long)]
    weight: Option<f64>,
    #[arg(long, value_enum, default_value_t = MapArg::Identity)]
    map: MapArg,
    /// Sampling step for `--map exp-log`.
    #[arg(long, default_value_t = 1.0)]
    step: f64,
    /// Scale `C` for `--map scale`.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    /// Sidecar JSON path (default: `<out>.json`, or stderr without `--out`).
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoleOrderArg {
    Descending,
    Given,
}

#[derive(Args)]
struct RecoverLinearArgs {
    /// Poles CSV (`re,im`).
    #[arg(long)]
    poles: PathBuf,
    /// Circle sampling CSV (`re,im`).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = PoleOrderArg::Descending)]
    pole_order: PoleOrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorArg {
    Allpass,
    Clustered,
}

#[derive(Args)]
struct CondnumArgs {
    /// Poles CSV (`re,im`); generated from `--generator` when absent.
    #[arg(long)]
    poles: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GeneratorArg::Allpass)]
    generator: GeneratorArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DelayMethodArg {
    Grop,
    Gb,
    Classical,
    All,
}

#[derive(Args)]
struct DelayArgs {
    #[arg(long, value_enum, default_value_t = DelayMethodArg::All)]
    method: DelayMethodArg,
    /// Continuous-time poles CSV (`re,im`); the reference system when absent.
    #[arg(long, requires_all = ["coefficients", "tau"])]
    poles: Option<PathBuf>,
    /// Coefficients CSV (`re,im`).
    #[arg(long)]
    coefficients: Option<PathBuf>,
    /// Input delay.
    #[arg(long)]
    tau: Option<f64>,
    /// Sampling step; chosen from the spec when absent.
    #[arg(long)]
    m0: Option<usize>,
    /// Z-transform truncation length.
    #[arg(long, default_value_t = 200)]
    truncation: usize,
}

#[derive(Args)]
struct RkhsArgs {
    /// Number of poles GB extracts.
    #[arg(long, default_value_t = 2)]
    count: usize,
    #[arg(long, default_value_t = 600)]
    kmax: usize,
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    NonConvergence(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_non_convergence() {
            CliError::NonConvergence(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a subcommand produced: a report plus an exit status.
struct Output {
    json: Value,
    /// Rows for `--format csv`, already in the declared column layout.
    csv: Option<Csv>,
    non_convergence: Option<String>,
}

enum Csv {
    /// `re,im`
    Complex(Vec<Complex64>),
    /// `set,re,im`
    Labeled(Vec<(String, Complex64)>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(CliError::NonConvergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_NON_CONVERGENCE)
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let g = &cli.global;
    if let Some(n) = g.grid {
        if n < 2 {
            return Err(CliError::Invalid("--grid must be at least 2".into()));
        }
    }
    if let Some(t) = g.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Invalid("--tol must be positive".into()));
        }
    }
    let out = match &cli.command {
        Command::Grop(a) => cmd_grop(g, a)?,
        Command::Bernoulli(a) => cmd_bernoulli(g, a)?,
        Command::Classical(a) => cmd_classical(g, a)?,
        Command::Lift(a) => return cmd_lift(g, a),
        Command::RecoverLinear(a) => cmd_recover_linear(g, a)?,
        Command::Condnum(a) => cmd_condnum(g, a)?,
        Command::DelayDemo(a) => cmd_delay(g, a)?,
        Command::RkhsDemo(a) => cmd_rkhs(g, a)?,
    };
    emit(g, &out)?;
    match out.non_convergence {
        Some(msg) => Err(CliError::NonConvergence(msg)),
        None => Ok(()),
    }
}

fn emit(g: &Global, out: &Output) -> CliResult<()> {
    let mut w: Box<dyn Write> = match &g.out {
        Some(p) => Box::new(File::create(p).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    match (g.format, &out.csv) {
        (Format::Json, _) => {
            serde_json::to_writer_pretty(&mut w, &out.json).map_err(|e| CliError::Invalid(e.to_string()))?;
            writeln!(w)?;
        }
        (Format::Csv, Some(Csv::Complex(v))) => write_complex_csv(&mut w, v)?,
        (Format::Csv, Some(Csv::Labeled(rows))) => {
            writeln!(w, "set,re,im")?;
            for (label, z) in rows {
                writeln!(w, "{label},{:e},{:e}", z.re, z.im)?;
            }
        }
        (Format::Csv, None) => return Err(CliError::Invalid("this subcommand has no CSV output".into())),
    }
    w.flush()?;
    Ok(())
}

fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn require_order(g: &Global) -> CliResult<usize> {
    match g.order {
        Some(0) => Err(CliError::Invalid("--order must be at least 1".into())),
        Some(m) => Ok(m),
        None => Err(CliError::Invalid("--order is required".into())),
    }
}

/// Boundary samples from a file, or a seeded random signal with its ground truth.
fn sampling_or_synthetic(g: &Global, input: &Option<PathBuf>, order: usize) -> CliResult<(CircleSampling, Option<Value>)> {
    match input {
        Some(p) => {
            let s = read_circle_sampling(open(p)?)?;
            if let Some(n) = g.grid {
                if n != s.len() {
                    return Err(CliError::Invalid(format!("--grid {n} disagrees with {} samples in the input", s.len())));
                }
            }
            Ok((s, None))
        }
        None => {
            let set = random_signal(&mut rng(g.seed), order)?;
            let s = set.sampling(g.grid.unwrap_or(DEFAULT_GRID))?;
            let truth = json!({
                "seed": g.seed,
                "poles": complex_list_json(&set.poles.iter().map(|p| p.value()).collect::<Vec<_>>()),
                "coefficients": complex_list_json(&set.coefficients),
            });
            Ok((s, Some(truth)))
        }
    }
}

fn cmd_grop(g: &Global, a: &GropArgs) -> CliResult<Output> {
    let order = require_order(g)?;
    let (h, truth) = sampling_or_synthetic(g, &a.input, order)?;
    let mut cfg = GropConfig::new(order);
    cfg.rows = a.rows;
    cfg.allow_rank_deficient = a.allow_rank_deficient;
    cfg.coefficients = match a.coefficients {
        CoeffArg::Tm => CoefficientMethod::TmTriangular,
        CoeffArg::Vandermonde => CoefficientMethod::Vandermonde,
        CoeffArg::None => CoefficientMethod::None,
    };
    let r = grop_recover(&h, &cfg)?;
    let mut json = recovery_result_json(&r);
    if let Some(t) = truth {
        let true_poles: Vec<Complex64> = t["poles"]
            .as_array()
            .map(|v| v.iter().map(|z| Complex64::new(z["re"].as_f64().unwrap(), z["im"].as_f64().unwrap())).collect())
            .unwrap_or_default();
        json["ground_truth"] = t;
        json["max_pole_error"] = json!(max_match_error(&r.poles, &true_poles));
    }
    Ok(Output {
        json,
        csv: Some(Csv::Complex(r.poles)),
        non_convergence: None,
    })
}

fn cmd_bernoulli(g: &Global, a: &BernoulliArgs) -> CliResult<Output> {
    let gen = match (&a.gen_seq, a.period) {
        (Some(p), period) => {
            let entries = read_complex_csv(open(p)?)?;
            if let Some(period) = period {
                if period != entries.len() {
                    return Err(CliError::Invalid(format!(
                        "--period {period} disagrees with {} entries in the generating sequence",
                        entries.len()
                    )));
                }
            }
            GeneratingSequence::from_complex(&entries)?
        }
        (None, Some(0)) => return Err(CliError::Invalid("--period must be at least 1".into())),
        (None, Some(period)) => GeneratingSequence::new(vec![DiskPoint::origin(); period])?,
        (None, None) => GeneratingSequence::zero(),
    };
    let count = a.count.or(g.order).unwrap_or(1);
    if count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    let (h, truth) = sampling_or_synthetic(g, &a.input, count)?;
    let cfg = GbConfig {
        offset: a.offset,
        tol: g.tol.unwrap_or(GbConfig::default().tol),
        k_max: a.kmax,
        ..GbConfig::default()
    };
    let rec = gb_recover_iterative(&h, &gen, count, &cfg)?;
    let stages: Vec<Value> = rec
        .diagnostics
        .iter()
        .map(|d| {
            json!({
                "estimated_limit": complex_json(d.estimated_limit),
                "final_delta": d.final_delta,
                "converged": d.converged,
                "noise_limited": d.noise_limited,
                "estimated_rate": d.estimated_rate,
                "steps": d.steps,
                "aitken_depth": d.aitken_depth,
            })
        })
        .collect();
    let non_convergence = rec.terminated.clone().filter(|_| rec.poles.len() < count);
    let result = rec.clone().into_result();
    let mut json = recovery_result_json(&result);
    json["stages"] = Value::Array(stages);
    json["generating_sequence"] = complex_list_json(&rec.final_gen.entries().iter().map(|p| p.value()).collect::<Vec<_>>());
    if let Some(t) = truth {
        json["ground_truth"] = t;
    }
    Ok(Output {
        json,
        csv: Some(Csv::Complex(result.poles)),
        non_convergence,
    })
}

fn cmd_classical(g: &Global, a: &ClassicalArgs) -> CliResult<Output> {
    let order = require_order(g)?;
    let m = read_moments(open(&a.moments)?)?;
    let r = classical_prony(&m.values, order)?;
    Ok(Output {
        json: recovery_result_json(&r),
        csv: Some(Csv::Complex(r.poles)),
        non_convergence: None,
    })
}

/// The lifted function is always written as CSV; its metadata goes to the sidecar.
fn cmd_lift(g: &Global, a: &LiftArgs) -> CliResult<()> {
    let moments = read_moments(open(&a.moments)?)?;
    let map = match a.map {
        MapArg::Identity => InverseMap::Identity,
        MapArg::Conj => InverseMap::ConjScaleByW,
        MapArg::ExpLog => InverseMap::ExpLog { step: a.step },
        MapArg::Scale => InverseMap::ScaleByC { c: a.scale },
    };
    let lifted = lift(moments, a.weight, map)?;
    let s = lifted.sampling(g.grid.unwrap_or(DEFAULT_GRID))?;
    let sidecar = lift_sidecar_json(&lifted);
    match &g.out {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?;
            write_circle_sampling(f, &s)?;
        }
        None => write_circle_sampling(io::stdout().lock(), &s)?,
    }
    let sidecar_path = a.sidecar.clone().or_else(|| {
        g.out.as_ref().map(|p| {
            let mut q = p.clone().into_os_string();
            q.push(".json");
            PathBuf::from(q)
        })
    });
    let text = serde_json::to_string_pretty(&sidecar).map_err(|e| CliError::Invalid(e.to_string()))?;
    match sidecar_path {
        Some(p) => std::fs::write(&p, text + "\n").map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?,
        None => eprintln!("{text}"),
    }
    Ok(())
}

fn cmd_recover_linear(_g: &Global, a: &RecoverLinearArgs) -> CliResult<Output> {
    let raw = read_complex_csv(open(&a.poles)?)?;
    let poles = disk_points(&raw)?;
    let h = read_circle_sampling(open(&a.input)?)?;
    let order = match a.pole_order {
        PoleOrderArg::Descending => PoleOrder::DescendingModulus,
        PoleOrderArg::Given => PoleOrder::AsGiven,
    };
    let tm = tm_triangular_recover(&poles, &h, order)?;
    let cmp = compare_conditioning(&poles, order);
    let g = grop_moments(&h, poles.len());
    let (vd, _) = vandermonde_recover(&raw, &g.values)?;
    let json = json!({
        "poles": complex_list_json(&raw),
        "coefficients": complex_list_json(&tm.coefficients),
        "vandermonde_coefficients": complex_list_json(&vd),
        "diagnostics": {
            "tm_condition": condition_json(cmp.tm_triangular),
            "vandermonde_condition": condition_json(cmp.vandermonde),
            "method": "tm-triangular",
        },
    });
    Ok(Output {
        json,
        csv: Some(Csv::Complex(tm.coefficients)),
        non_convergence: None,
    })
}

fn cmd_condnum(g: &Global, a: &CondnumArgs) -> CliResult<Output> {
    let poles = match &a.poles {
        Some(p) => disk_points(&read_complex_csv(open(p)?)?)?,
        None => {
            let m = require_order(g)?;
            match a.generator {
                GeneratorArg::Allpass => allpass_poles(m, g.seed)?,
                GeneratorArg::Clustered => clustered_poles(m, g.seed)?,
            }
        }
    };
    let rep = condnum_demo(&poles, None)?;
    let values: Vec<Complex64> = poles.iter().map(|p| p.value()).collect();
    let json = json!({
        "paper_experiment": "condition-number-study",
        "size": rep.size,
        "vandermonde_condition": condition_json(rep.vandermonde),
        "tm_condition": condition_json(rep.tm_triangular),
        "ratio": condition_json(rep.ratio()),
        "min_boundary_distance": rep.min_boundary_distance,
        "poles": complex_list_json(&values),
    });
    Ok(Output {
        json,
        csv: Some(Csv::Complex(values)),
        non_convergence: None,
    })
}

fn delay_spec(a: &DelayArgs) -> CliResult<DelaySystemSpec> {
    match (&a.poles, &a.coefficients, a.tau) {
        (Some(p), Some(c), Some(tau)) => {
            let poles = read_complex_csv(open(p)?)?;
            let coeffs = read_complex_csv(open(c)?)?;
            Ok(DelaySystemSpec::new(poles, coeffs, tau)?)
        }
        (None, None, None) => Ok(DelaySystemSpec::reference()),
        _ => Err(CliError::Invalid("--poles, --coefficients and --tau go together".into())),
    }
}

fn delay_json(r: &DelayReport) -> Value {
    json!({
        "method": r.method.tag(),
        "m0": r.m0,
        "poles": complex_list_json(&r.poles),
        "alphas": complex_list_json(&r.alphas),
        "discarded_root": r.discarded.map(complex_json),
        "errors": r.errors,
        "max_error": r.max_error(),
        "result": recovery_result_json(&r.result),
        "lift": lift_sidecar_json(&r.lifted),
    })
}

fn cmd_delay(g: &Global, a: &DelayArgs) -> CliResult<Output> {
    let spec = delay_spec(a)?;
    let mut cfg = DelayConfig {
        m0: a.m0,
        truncation: a.truncation,
        n_grid: g.grid.unwrap_or(DEFAULT_GRID),
        ..DelayConfig::default()
    };
    if let Some(t) = g.tol {
        cfg.gb.tol = t;
    }
    let methods: &[DelayMethod] = match a.method {
        DelayMethodArg::Grop => &[DelayMethod::Grop],
        DelayMethodArg::Gb => &[DelayMethod::Gb],
        DelayMethodArg::Classical => &[DelayMethod::Classical],
        DelayMethodArg::All => &[DelayMethod::Grop, DelayMethod::Gb, DelayMethod::Classical],
    };
    let mut runs = Vec::new();
    let mut rows: Vec<(String, Complex64)> = spec.poles.iter().map(|&p| ("true".to_string(), p)).collect();
    let mut failure = None;
    for &m in methods {
        match delay_demo(&spec, m, &cfg) {
            Ok(r) => {
                rows.extend(r.poles.iter().map(|&p| (m.tag().to_string(), p)));
                runs.push(delay_json(&r));
            }
            Err(e) if e.is_non_convergence() && methods.len() > 1 => {
                runs.push(json!({"method": m.tag(), "error": e.to_string()}));
                failure = Some(format!("{}: {e}", m.tag()));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let json = json!({
        "paper_experiment": "delayed-lti",
        "spec": {
            "poles": complex_list_json(&spec.poles),
            "coefficients": complex_list_json(&spec.coefficients),
            "tau": spec.tau,
        },
        "runs": runs,
    });
    Ok(Output {
        json,
        csv: Some(Csv::Labeled(rows)),
        non_convergence: failure,
    })
}

fn rkhs_json(r: &RkhsReport) -> Value {
    json!({
        "values": complex_list_json(&r.poles),
        "nearest_errors": r.nearest_errors,
        "result": recovery_result_json(&r.result),
    })
}

fn cmd_rkhs(g: &Global, a: &RkhsArgs) -> CliResult<Output> {
    if a.count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    let spec = RkhsDemoSpec::reference(g.seed);
    let mut cfg = RkhsConfig::new(a.count);
    cfg.gb.k_max = a.kmax;
    if let Some(t) = g.tol {
        cfg.gb.tol = t;
    }
    if let Some(n) = g.grid {
        cfg.n_grid = n;
    }
    let cmp = rkhs_compare(&spec, a.count, &cfg)?;
    let truth: Vec<Complex64> = spec.poles.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut rows: Vec<(String, Complex64)> = truth.iter().map(|&p| ("true".to_string(), p)).collect();
    rows.extend(cmp.gb.poles.iter().map(|&p| ("gb".to_string(), p)));
    rows.extend(cmp.gop_reduced.poles.iter().map(|&p| ("gop-reduced".to_string(), p)));
    let non_convergence = (cmp.gb.poles.len() < a.count).then(|| format!("GB found {}/{} values", cmp.gb.poles.len(), a.count));
    let json = json!({
        "paper_experiment": "rkhs-kernel",
        "spec": {
            "degree": spec.degree,
            "poles": spec.poles,
            "coefficients": complex_list_json(&spec.coefficients),
            "scale": spec.scale,
        },
        "gb": rkhs_json(&cmp.gb),
        "gop_full": rkhs_json(&cmp.gop_full),
        "gop_reduced": rkhs_json(&cmp.gop_reduced),
        "contrast": cmp.contrast,
        "summary": cmp.summary,
    });
    Ok(Output {
        json,
        csv: Some(Csv::Labeled(rows)),
        non_convergence,
    })
}
