use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use super::{config_file, edge_list, eigen_csv, emit_histogram, Report, Seed};
use crate::eigensolve;
use crate::error::{Error, Result};
use crate::experiments::{self, identities, EnsembleConfig, ModelTemplate, Normalization};
use crate::graphgen::{self, Graph};
use crate::spectral_laws::{Esd, Interval};

/// Environment variable supplying the master seed when `--master-seed` is absent.
pub const SEED_ENV: &str = "SPECGRAPH_SEED";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "specgraph", version, about = "Spectra of random graphs: sampling, limit laws and ensemble checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample a graph and write its edge list.
    Sample(SampleArgs),
    /// Eigenvalues of a graph read from an edge list.
    Spectrum(SpectrumArgs),
    /// KS distance of ensemble spectra to the semicircle or Kesten–McKay law.
    Convergence(ConvergenceArgs),
    /// Eigenvalue counts in intervals against the semicircle mass.
    Concentration(ConcentrationArgs),
    /// Sup-norms of bulk eigenvectors of A / (sigma sqrt(n)).
    Delocalize(DelocalizeArgs),
    /// Trace moments against the semicircle moments.
    Moments(MomentsArgs),
    /// Semicircle Stieltjes transform on a grid.
    Stieltjes(StieltjesArgs),
    /// Exact matrix identities on random instances.
    Identities(IdentitiesArgs),
    /// Norm of the projection of a centered Bernoulli vector onto a random subspace.
    Projection(ProjectionArgs),
    /// Middle eigenvector against uniform points on the sphere (evidence only).
    Isotropy(IsotropyArgs),
    /// Largest eigenvalue, maximum degree and top eigenvector of G(n, p).
    TopEigen(TopEigenArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Master seed; defaults to $SPECGRAPH_SEED, then 0.
    #[arg(long)]
    master_seed: Option<u64>,
    /// Worker threads. Results do not depend on this.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Output path (report JSON unless the command says otherwise); stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key = value file with the same keys as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Leave the timestamp out of the report.
    #[arg(long)]
    no_timestamp: bool,
}

impl Common {
    fn seed(&self) -> Result<Seed> {
        if let Some(s) = self.master_seed {
            return Ok(Seed(s));
        }
        match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Seed)
                .map_err(|_| Error::invalid(format!("{SEED_ENV}={v:?} is not a 64-bit unsigned integer"))),
            Err(_) => Ok(Seed(0)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModelKind {
    Gnp,
    Gnd,
}

#[derive(Args, Debug, Serialize)]
struct ModelArgs {
    #[arg(long, value_enum, default_value = "gnp")]
    model: ModelKind,
    #[arg(long)]
    n: usize,
    /// Edge probability (gnp).
    #[arg(long)]
    p: Option<f64>,
    /// Degree (gnd).
    #[arg(long)]
    d: Option<usize>,
}

impl ModelArgs {
    fn template(&self) -> Result<ModelTemplate> {
        match self.model {
            ModelKind::Gnp => Ok(ModelTemplate::Gnp {
                p: self.p.ok_or_else(|| Error::invalid("--model gnp needs --p"))?,
            }),
            ModelKind::Gnd => Ok(ModelTemplate::Gnd {
                d: self.d.ok_or_else(|| Error::invalid("--model gnd needs --d"))?,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum NormalizationArg {
    CenteredGnp,
    UncenteredGnp,
    Regular,
    Raw,
}

impl From<NormalizationArg> for Normalization {
    fn from(n: NormalizationArg) -> Self {
        match n {
            NormalizationArg::CenteredGnp => Normalization::CenteredGnp,
            NormalizationArg::UncenteredGnp => Normalization::UncenteredGnp,
            NormalizationArg::Regular => Normalization::Regular,
            NormalizationArg::Raw => Normalization::RawAdjacency,
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct SampleArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Graph seed; defaults to the master seed.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct SpectrumArgs {
    /// Edge list to read.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "raw")]
    normalization: NormalizationArg,
    #[arg(long)]
    p: Option<f64>,
    /// Degree for the regular normalization; inferred from a regular graph if absent.
    #[arg(long)]
    d: Option<usize>,
    /// Also write a histogram (JSON) of the eigenvalues here.
    #[arg(long)]
    histogram: Option<PathBuf>,
    #[arg(long, default_value_t = 50)]
    bins: usize,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum LawArg {
    Semicircle,
    KestenMckay,
}

#[derive(Args, Debug, Serialize)]
struct ConvergenceArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "semicircle")]
    law: LawArg,
    #[arg(long, default_value_t = 50)]
    bins: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Pass when the mean KS distance is at most this.
    #[arg(long, default_value_t = 0.06)]
    ks_max: f64,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct ConcentrationArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Closed interval `a,b`; repeat for several.
    #[arg(long, allow_hyphen_values = true, default_values_t = vec!["-1,1".to_string()])]
    interval: Vec<String>,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Pass when every interval's failure fraction is at most this.
    #[arg(long, default_value_t = 0.05)]
    max_failure: f64,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct DelocalizeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0.5)]
    kappa: f64,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Multiplier for the bound, whose leading constant is unknown.
    #[arg(long, default_value_t = 1.0)]
    bound_constant: f64,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct MomentsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 6)]
    k_max: u32,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Even moments pass within this fraction of the Catalan number.
    #[arg(long, default_value_t = 0.1)]
    even_rel_tol: f64,
    /// Odd moments pass within this multiple of 1/sqrt(np).
    #[arg(long, default_value_t = 2.0)]
    odd_scale: f64,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct StieltjesArgs {
    #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
    re_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    re_max: f64,
    #[arg(long, default_value_t = 50)]
    re_points: usize,
    /// Imaginary parts, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.1, 1.0])]
    im: Vec<f64>,
    /// Pass when every fixed-point residual is at most this.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Also compare with the empirical transform of one centered G(n, p) sample.
    #[arg(long, requires = "p")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    p: Option<f64>,
    /// Fail when the empirical transform deviates by more than this.
    #[arg(long, requires = "n")]
    max_deviation: Option<f64>,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Which {
    Interlacing,
    MinorInterlacing,
    MinorStieltjes,
    EigvecEntry,
}

#[derive(Args, Debug, Serialize)]
struct IdentitiesArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Matrix size; defaults to 20, 20, 50 and 30 for the four checks.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    z_re: f64,
    #[arg(long, default_value_t = 0.1)]
    z_im: f64,
    /// Edge probability of the eigvec-entry adjacency matrices.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Gaussian perturbation added to the eigvec-entry matrices.
    #[arg(long, default_value_t = 0.01)]
    eps: f64,
    /// Largest allowed residual; 0 for the counting checks, 1e-8 otherwise.
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct ProjectionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    t: f64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Pass requires the mean norm within this of sigma sqrt(dim).
    #[arg(long, default_value_t = 0.5)]
    mean_tol: f64,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct IsotropyArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Sphere samples; defaults to the trial count.
    #[arg(long)]
    reference: Option<usize>,
    /// Use w = e_k.
    #[arg(long, default_value_t = 0)]
    w_index: usize,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct TopEigenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[command(flatten)]
    #[serde(skip)]
    common: Common,
}

/// Runs the command line and returns the process exit code: 0 when the
/// command's check passes, 1 when it fails, 2 for usage and input errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match merge_config_file(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(cli.command) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) | Error::Parse { .. } | Error::Io { .. } | Error::Json(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}

/// Splices `--config` file entries in right after the subcommand, skipping
/// keys that also appear on the command line.
fn merge_config_file(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let strs: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let mut path = None;
    for (i, a) in strs.iter().enumerate() {
        if a == "--config" {
            path = strs.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else { return Ok(args) };
    if strs.len() < 2 || strs[1].starts_with('-') {
        return Ok(args);
    }
    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let given: Vec<&str> = strs
        .iter()
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a))
        .collect();
    let entries: Vec<(String, String)> = config_file::parse_config_file(&text, &path)?
        .into_iter()
        .filter(|(k, _)| !given.contains(&k.as_str()))
        .collect();
    let mut merged = args[..2].to_vec();
    merged.extend(config_file::config_to_args(&entries));
    merged.extend_from_slice(&args[2..]);
    Ok(merged)
}

fn execute(command: Command) -> Result<bool> {
    match command {
        Command::Sample(a) => sample(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Convergence(a) => convergence(a),
        Command::Concentration(a) => concentration(a),
        Command::Delocalize(a) => delocalize(a),
        Command::Moments(a) => moments(a),
        Command::Stieltjes(a) => stieltjes(a),
        Command::Identities(a) => identities_cmd(a),
        Command::Projection(a) => projection(a),
        Command::Isotropy(a) => isotropy(a),
        Command::TopEigen(a) => top_eigen(a),
    }
}

/// Config echo: the command's arguments plus the resolved master seed.
fn echo(args: &impl Serialize, seed: Seed) -> Result<Value> {
    let mut v = serde_json::to_value(args)?;
    if let Value::Object(map) = &mut v {
        map.insert("master_seed".into(), json!(seed.0));
    }
    Ok(v)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn emit(common: &Common, command: &str, config: Value, result: &impl Serialize, pass: bool) -> Result<bool> {
    let mut report = Report::new(command, &config, result, pass)?;
    if !common.no_timestamp {
        report = report.with_timestamp();
    }
    write_output(&common.out, &report.to_json()?)?;
    if common.out.is_some() {
        println!("{command}: {}", if pass { "pass" } else { "FAIL" });
    }
    Ok(pass)
}

fn threaded<R: Send>(common: &Common, f: impl FnOnce() -> Result<R> + Send) -> Result<R> {
    experiments::with_threads(common.threads, f)?
}

fn sample(a: SampleArgs) -> Result<bool> {
    let seed = a.seed.unwrap_or(a.common.seed()?.0);
    let g = a.model.template()?.sample(a.model.n, Seed(seed))?;
    write_output(&a.common.out, &edge_list::format_edge_list(&g))?;
    Ok(true)
}

fn regular_degree(g: &Graph) -> Option<usize> {
    let degrees = graphgen::degree_sequence(g);
    let d = *degrees.first()?;
    degrees.iter().all(|&x| x == d).then_some(d)
}

fn spectrum(a: SpectrumArgs) -> Result<bool> {
    let g = edge_list::read_edge_list(&a.input)?;
    let normalization = Normalization::from(a.normalization);
    let model = match normalization {
        Normalization::CenteredGnp | Normalization::UncenteredGnp => ModelTemplate::Gnp {
            p: a.p.ok_or_else(|| Error::invalid("this normalization needs --p"))?,
        },
        Normalization::Regular => ModelTemplate::Gnd {
            d: match a.d.or_else(|| regular_degree(&g)) {
                Some(d) => d,
                None => return Err(Error::invalid("graph is not regular; pass --d")),
            },
        },
        Normalization::RawAdjacency => ModelTemplate::Gnp { p: 0.5 },
    };
    let m = experiments::normalize(&graphgen::adjacency_matrix(&g), model, normalization)?;
    let values = eigensolve::eigenvalues(&m)?;
    if let Some(path) = &a.histogram {
        let esd = Esd::new(values.clone())?;
        let (lo, hi) = if normalization == Normalization::RawAdjacency {
            (values[0] - 0.5, values[values.len() - 1] + 0.5)
        } else {
            experiments::SEMICIRCLE_HISTOGRAM_RANGE
        };
        let h = emit_histogram(&esd, a.bins, lo, hi)?;
        let text = serde_json::to_string_pretty(&h)? + "\n";
        std::fs::write(path, text).map_err(|e| Error::io(path, e))?;
    }
    write_output(&a.common.out, &eigen_csv::format_eigenvalues(&values))?;
    Ok(true)
}

fn convergence(a: ConvergenceArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let template = a.model.template()?;
    match a.law {
        LawArg::Semicircle => {
            let cfg = EnsembleConfig::new(template, a.model.n, a.trials, seed);
            let r = threaded(&a.common, || experiments::run_semicircle_convergence(&cfg, a.bins))?;
            let pass = r.mean_ks <= a.ks_max;
            emit(&a.common, "convergence", config, &r, pass)
        }
        LawArg::KestenMckay => {
            let d = match template {
                ModelTemplate::Gnd { d } => d,
                ModelTemplate::Gnp { .. } => return Err(Error::invalid("the Kesten–McKay law needs --model gnd")),
            };
            let r = threaded(&a.common, || {
                experiments::run_mckay_convergence(a.model.n, d, a.trials, seed, a.bins)
            })?;
            let pass = r.mean_ks <= a.ks_max;
            emit(&a.common, "convergence", config, &r, pass)
        }
    }
}

fn parse_interval(s: &str) -> Result<Interval> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::invalid(format!("interval {s:?} is not of the form a,b")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<f64>()
            .map_err(|_| Error::invalid(format!("bad interval endpoint {x:?}")))
    };
    Interval::new(parse(a)?, parse(b)?)
}

fn concentration(a: ConcentrationArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let intervals = a.interval.iter().map(|s| parse_interval(s)).collect::<Result<Vec<_>>>()?;
    let cfg = EnsembleConfig::new(a.model.template()?, a.model.n, a.trials, seed);
    let reports = threaded(&a.common, || {
        experiments::run_esd_concentration_multi(&cfg, &intervals, a.delta)
    })?;
    let pass = reports.iter().all(|r| r.failure_fraction <= a.max_failure);
    // one trial record per ensemble trial, with a count for every interval
    let trials: Vec<Value> = (0..a.trials)
        .map(|i| {
            json!({
                "index": i,
                "seed": cfg.trial_seed(i),
                "counts": reports.iter().map(|r| r.trials[i].count).collect::<Vec<_>>(),
                "failed": reports.iter().map(|r| r.trials[i].failed).collect::<Vec<_>>(),
            })
        })
        .collect();
    let intervals: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "interval": r.interval,
                "delta": r.delta,
                "expected_mass": r.expected_mass,
                "per_trial_counts": r.per_trial_counts,
                "failure_fraction": r.failure_fraction,
            })
        })
        .collect();
    emit(
        &a.common,
        "concentration",
        config,
        &json!({"intervals": intervals, "trials": trials}),
        pass,
    )
}

fn delocalize(a: DelocalizeArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let cfg = EnsembleConfig::gnp(a.n, a.p, a.trials, seed).with_normalization(Normalization::UncenteredGnp);
    let r = threaded(&a.common, || experiments::run_delocalization(&cfg, a.kappa))?;
    let limit = a.bound_constant * r.bound_value;
    let pass = r.per_trial_max_inf_norm.iter().all(|&x| x <= limit);
    emit(&a.common, "delocalize", config, &r, pass)
}

fn moments(a: MomentsArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let cfg = EnsembleConfig::gnp(a.n, a.p, a.trials, seed);
    let r = threaded(&a.common, || experiments::run_moment_check(&cfg, a.k_max))?;
    let pass = r.rows.iter().all(|row| {
        if row.k % 2 == 0 {
            row.deviation.abs() <= a.even_rel_tol * row.semicircle
        } else {
            row.deviation.abs() <= a.odd_scale * row.error_scale
        }
    });
    emit(&a.common, "moments", config, &r, pass)
}

fn stieltjes(a: StieltjesArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    if a.im.iter().any(|&im| !(im > 0.0)) {
        return Err(Error::invalid("every imaginary part must be positive"));
    }
    let grid = identities::stieltjes_grid(a.re_min, a.re_max, a.re_points, &a.im);
    let fixed = identities::check_stieltjes_fixed_point(&grid)?;
    let empirical = match (a.n, a.p) {
        (Some(n), Some(p)) => {
            let trial = seed.trial(0);
            let g = graphgen::sample_gnp(n, p, trial.0)?;
            let w = eigensolve::normalize_centered_gnp(&graphgen::adjacency_matrix(&g), p)?;
            let esd = Esd::new(eigensolve::eigenvalues(&w)?)?;
            Some((trial, esd))
        }
        _ => None,
    };
    let mut max_deviation: f64 = 0.0;
    let trials = grid
        .iter()
        .zip(&fixed.trials)
        .map(|(&z, case)| {
            let s = crate::spectral_laws::stieltjes_semicircle(z)?;
            let mut row = json!({"z": [z.re, z.im], "s": [s.re, s.im], "residual": case.residual});
            if let Some((_, esd)) = &empirical {
                let sn: Complex64 = esd.stieltjes(z)?;
                let dev = (sn - s).norm();
                max_deviation = max_deviation.max(dev);
                row["empirical"] = json!([sn.re, sn.im]);
                row["deviation"] = json!(dev);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pass = fixed.max_abs_residual <= a.tol;
    if let (Some(limit), Some(_)) = (a.max_deviation, &empirical) {
        pass &= max_deviation <= limit;
    }
    let result = json!({
        "points": grid.len(),
        "max_fixed_point_residual": fixed.max_abs_residual,
        "sample_seed": empirical.as_ref().map(|(s, _)| *s),
        "max_deviation": empirical.as_ref().map(|_| max_deviation),
        "trials": trials,
    });
    emit(&a.common, "stieltjes", config, &result, pass)
}

fn identities_cmd(a: IdentitiesArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let z = Complex64::new(a.z_re, a.z_im);
    let (report, default_tol) = threaded(&a.common, || {
        Ok(match a.which {
            Which::Interlacing => (identities::check_rank_one_interlacing(a.n.unwrap_or(20), a.trials, seed)?, 0.0),
            Which::MinorInterlacing => (identities::check_minor_interlacing(a.n.unwrap_or(20), a.trials, seed)?, 0.0),
            Which::MinorStieltjes => (
                identities::run_minor_stieltjes_checks(a.n.unwrap_or(50), z, a.trials, seed)?,
                1e-8,
            ),
            Which::EigvecEntry => (
                identities::run_eigvec_entry_checks(a.n.unwrap_or(30), a.p, a.eps, a.trials, seed)?,
                1e-8,
            ),
        })
    })?;
    let pass = report.max_abs_residual <= a.tol.unwrap_or(default_tol);
    emit(&a.common, "identities", config, &report, pass)
}

fn projection(a: ProjectionArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let r = threaded(&a.common, || {
        experiments::run_projection_concentration(a.n, a.p, a.dim, a.t, a.trials, seed)
    })?;
    let pass = r.deviation_frequency <= r.bound && (r.mean_norm - r.expected_norm).abs() <= a.mean_tol;
    emit(&a.common, "projection", config, &r, pass)
}

fn isotropy(a: IsotropyArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let n = a.model.n;
    if a.w_index >= n {
        return Err(Error::invalid(format!("--w-index {} out of range for n = {n}", a.w_index)));
    }
    let cfg = EnsembleConfig::new(a.model.template()?, n, a.trials, seed);
    let w = experiments::basis_vector(n, a.w_index);
    let reference = a.reference.unwrap_or(a.trials);
    let r = threaded(&a.common, || experiments::run_isotropy_check(&cfg, &w, reference))?;
    // evidence only: nothing to fail
    emit(&a.common, "isotropy", config, &r, true)
}

fn top_eigen(a: TopEigenArgs) -> Result<bool> {
    let seed = a.common.seed()?;
    let config = echo(&a, seed)?;
    let cfg = EnsembleConfig::gnp(a.n, a.p, a.trials, seed).with_normalization(Normalization::RawAdjacency);
    let r = threaded(&a.common, || experiments::run_top_eigen_check(&cfg))?;
    let pass = r.lambda_flags() == 0 && r.degree_flags() == 0 && r.inequality_failures() == 0;
    emit(&a.common, "top-eigen", config, &r, pass)
}
