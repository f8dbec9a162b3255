mod output;

use std::f64::consts::PI;
use std::fs;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isodens::calibration::{self, CalibrationCase, GraphExample};
use isodens::criteria;
use isodens::density::Density;
use isodens::error::Error;
use isodens::gaussmod;
use isodens::numeric::linspace;
use isodens::oracle::{self, CandidateSpec, ProbeConfig, REFINEMENT_SEGMENTS};
use isodens::profile::ProfileCurve;
use isodens::stationarity::{self, JunctionCheck};
use isodens::{ball, strip};

use output::Table;

#[derive(Parser)]
#[command(name = "isodens", version, about = "Isoperimetric profiles for planar densities")]
struct Cli {
    /// Print reports as JSON. This is the default when stdout is not a terminal.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print reports as text even when stdout is not a terminal.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strip density: λ outside |y| < 1.
    #[command(subcommand)]
    Strip(StripCmd),
    /// Ball density: λ inside the unit disk.
    #[command(subcommand)]
    Ball(BallCmd),
    /// Density exp(−x² − y⁴).
    #[command(subcommand)]
    Gaussmod(GaussCmd),
    /// Line density: 1 on the x axis, λ elsewhere.
    #[command(subcommand)]
    Line(LineCmd),
    /// Polygonal checks of the candidate boundaries.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Junction conditions of a candidate boundary.
    Check(CandidateArgs),
    /// Finite-difference residuals of the calibration examples.
    Calibrate(CalibrateArgs),
    #[command(subcommand)]
    Density(DensityCmd),
    /// Write all plot data and a summary of every reproduction check.
    ReproduceAll {
        #[arg(long, default_value = "reproduction")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    lambda: f64,
    #[arg(long, default_value_t = 400)]
    samples: usize,
    #[arg(long, default_value_t = 30.0)]
    v_max: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum StripCmd {
    Curves(CurveArgs),
    Crossover {
        #[arg(long)]
        lambda: f64,
    },
    /// Compare family iv with the equal-area family iii on an h grid.
    ScanIv {
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Minimum of 2 arc(x) − arc(2x) on [π/32, π/2].
    Arcgap,
    /// Area and perimeter of family iii as h runs between two values.
    Reversing {
        #[arg(long, default_value_t = 1.1)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        h_from: f64,
        #[arg(long, default_value_t = 0.8)]
        h_to: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BallCmd {
    Curves(CurveArgs),
    Crossover {
        #[arg(long)]
        lambda: f64,
    },
    /// Convexity classes of family b (λ > 1).
    Shapes {
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum GaussCmd {
    Curves {
        #[arg(long, default_value_t = 400)]
        samples: usize,
        #[arg(long, default_value_t = 2.0)]
        t_max: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Crossover,
}

#[derive(Subcommand)]
enum LineCmd {
    /// P²/A of the Snell-contact candidate against the bound 4πλ.
    Ratio {
        #[arg(long)]
        lambda: f64,
    },
}

#[derive(Args)]
struct CandidateArgs {
    /// One of strip:i..iv, ball:a|b|big|A|B|C, line, gauss:h|v, disk, halfspace.
    #[arg(long)]
    candidate: String,
    #[arg(long)]
    lambda: Option<f64>,
    /// Family parameter (area, h, half-angle or offset, depending on the family).
    #[arg(long = "param", visible_aliases = ["v", "h", "alpha", "beta", "beta-hat", "offset"])]
    param: Option<f64>,
}

#[derive(Subcommand)]
enum OracleCmd {
    Verify {
        #[command(flatten)]
        candidate: CandidateArgs,
        #[arg(long, default_value_t = 10_000)]
        segments: usize,
        /// Fit the convergence order over 1e3, 1e4 and 1e5 segments.
        #[arg(long)]
        refine: bool,
    },
    Probe {
        #[command(flatten)]
        candidate: CandidateArgs,
        #[arg(long, default_value_t = 2000)]
        segments: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1e-3)]
        magnitude: f64,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    Cone,
    Halfplane,
    ExpX,
}

#[derive(Args)]
struct CalibrateArgs {
    #[arg(long, value_enum)]
    case: Case,
    /// Grid step (cone, halfplane) or node count (exp-x).
    #[arg(long)]
    step: Option<f64>,
    #[arg(long, default_value_t = 3)]
    levels: usize,
}

#[derive(Subcommand)]
enum DensityCmd {
    /// Total mass of exp(−|x|^p − |y|^q).
    Mass {
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 4.0)]
        q: f64,
    },
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Run = Result<(), Failure>;

fn report<T: Serialize>(json: bool, value: &T) {
    if json {
        println!("{}", output::json(value));
    } else {
        print!("{}", output::human(value));
    }
}

fn curves_table(kind: &'static str, lambda: f64, curves: &[ProfileCurve]) -> Table {
    let mut t = Table::new(kind, vec!["family", "parameter", "area", "perimeter"]).meta("lambda", lambda);
    for c in curves {
        for p in &c.points {
            t.rows.push(vec![c.family.as_str().into(), p.parameter.into(), p.area.into(), p.perimeter.into()]);
        }
    }
    t
}

fn reversing_table(lambda: f64, h_from: f64, h_to: f64, samples: usize) -> Result<Table, Error> {
    let c = strip::reversing_curve(lambda, h_from, h_to, samples)?;
    let mut t = Table::new("strip-reversing", vec!["h", "area", "perimeter"]).meta("lambda", lambda);
    t.rows = c.points.iter().map(|p| vec![p.parameter.into(), p.area.into(), p.perimeter.into()]).collect();
    Ok(t)
}

fn gauss_table(samples: usize, t_max: f64) -> Result<Table, Error> {
    let mut t = Table::new("gaussmod-lines", vec!["orientation", "offset", "volume", "perimeter", "margin"]);
    for r in gaussmod::curves(samples, t_max)? {
        t.rows.push(vec![
            r.orientation.name().into(),
            r.offset.into(),
            r.volume.into(),
            r.perimeter.into(),
            r.margin.into(),
        ]);
    }
    Ok(t)
}

fn spec(c: &CandidateArgs) -> Result<CandidateSpec, Error> {
    CandidateSpec::parse(&c.candidate, c.lambda, c.param)
}

fn strip_cmd(cmd: StripCmd, json: bool) -> Run {
    match cmd {
        StripCmd::Curves(a) => {
            curves_table("strip-profiles", a.lambda, &strip::strip_curves(a.lambda, a.samples, a.v_max)?)
                .emit(a.out.as_deref())?;
        }
        StripCmd::Crossover { lambda } => report(json, &strip::crossover_v0(lambda)?),
        StripCmd::ScanIv { lambda, samples } => {
            if samples < 2 {
                return Err(Failure::Usage("--samples must be at least 2".into()));
            }
            let grid = linspace(0.01, 1.0, samples);
            report(json, &strip::iv_dominance_scan(lambda, &grid)?);
        }
        StripCmd::Arcgap => {
            let m = strip::arc_gap_min()?;
            #[derive(Serialize)]
            struct ArcGap {
                x: f64,
                value: f64,
                margin_over_quarter_pi: f64,
            }
            report(json, &ArcGap { x: m.x, value: m.value, margin_over_quarter_pi: m.value - PI / 4.0 });
        }
        StripCmd::Reversing { lambda, h_from, h_to, samples, out } => {
            reversing_table(lambda, h_from, h_to, samples)?.emit(out.as_deref())?;
        }
    }
    Ok(())
}

fn ball_cmd(cmd: BallCmd, json: bool) -> Run {
    match cmd {
        BallCmd::Curves(a) => {
            curves_table("ball-profiles", a.lambda, &ball::ball_curves(a.lambda, a.samples, a.v_max)?)
                .emit(a.out.as_deref())?;
        }
        BallCmd::Crossover { lambda } => {
            if lambda > 1.0 {
                report(json, &ball::crossover_gt1(lambda)?);
            } else {
                report(json, &ball::crossover_lt1(lambda)?);
            }
        }
        BallCmd::Shapes { lambda, samples } => {
            let (classes, transitions) = ball::shape_transitions(lambda, samples)?;
            #[derive(Serialize)]
            struct Shapes {
                lambda: f64,
                transitions: Vec<ball::ShapeTransition>,
                classes: Vec<(f64, ball::ShapeClass)>,
            }
            report(json, &Shapes { lambda, transitions, classes });
        }
    }
    Ok(())
}

fn oracle_cmd(cmd: OracleCmd, json: bool) -> Run {
    match cmd {
        OracleCmd::Verify { candidate, segments, refine } => {
            let s = spec(&candidate)?;
            if refine {
                report(json, &oracle::convergence(&s, &REFINEMENT_SEGMENTS)?);
            } else {
                report(json, &oracle::verify(&s, segments)?);
            }
        }
        OracleCmd::Probe { candidate, segments, trials, magnitude, seed } => {
            let s = spec(&candidate)?;
            let poly = oracle::sample_candidate(&s, segments)?;
            let cfg = ProbeConfig { magnitude, trials, seed, ..ProbeConfig::default() };
            report(json, &oracle::perturbation_probe(&poly, &s.density()?, &cfg)?);
        }
    }
    Ok(())
}

fn check_cmd(c: CandidateArgs, json: bool) -> Run {
    let s = spec(&c)?;
    let density = s.density()?;
    let checks = stationarity::junction_checks(&density, &s.boundary()?, 1e-9)?;
    #[derive(Serialize)]
    struct Checks {
        candidate: String,
        lambda: f64,
        parameter: f64,
        worst_defect: f64,
        junctions: Vec<JunctionCheck>,
    }
    let worst_defect = checks.iter().map(JunctionCheck::defect).fold(0.0, f64::max);
    report(json, &Checks { candidate: s.id.name().into(), lambda: s.lambda, parameter: s.parameter, worst_defect, junctions: checks });
    Ok(())
}

fn calibrate_cmd(a: CalibrateArgs, json: bool) -> Run {
    if a.levels < 2 {
        return Err(Failure::Usage("--levels must be at least 2".into()));
    }
    let case = match a.case {
        Case::Cone => CalibrationCase::cone(),
        Case::Halfplane => CalibrationCase::half_plane(),
        Case::ExpX => {
            let n = a.step.unwrap_or(51.0);
            if !(n >= 3.0 && n.fract() == 0.0) {
                return Err(Failure::Usage("exp-x takes an integer node count of at least 3".into()));
            }
            report(json, &calibration::mse_refinement(&GraphExample::ExpX { a: 0.0, b: 1.0 }, n as usize, a.levels)?);
            return Ok(());
        }
    };
    let h = a.step.unwrap_or(0.05);
    if !(h > 0.0) {
        return Err(Failure::Usage("--step must be positive".into()));
    }
    #[derive(Serialize)]
    struct Calibration {
        residuals: calibration::CalibrationResiduals,
        divergence_refinement: calibration::RefinementReport,
    }
    report(
        json,
        &Calibration {
            residuals: calibration::calibration_residuals(&case, h)?,
            divergence_refinement: calibration::divergence_refinement(&case, h, a.levels)?,
        },
    );
    Ok(())
}

#[derive(Serialize)]
struct Summary {
    all_pass: bool,
    files: Vec<String>,
    criteria: Vec<criteria::CriterionResult>,
}

fn reproduce_all(out: &Path, json: bool) -> Run {
    fs::create_dir_all(out)?;
    let mut files = Vec::new();
    let mut first_error = None;
    let mut write = |name: String, table: Result<Table, Error>| {
        let outcome = table.map_err(Failure::from).and_then(|t| Ok(t.emit(Some(&out.join(&name)))?));
        match outcome {
            Ok(()) => files.push(name),
            Err(e) => {
                eprintln!("{name}: {}", describe(&e));
                first_error.get_or_insert(e);
            }
        }
    };
    for lambda in [1.1, 2.0, 8.0, 1000.0] {
        // wide enough to pass the crossover v0 of each panel
        let v_max = (2.0 * PI * lambda + 10.0).min(8000.0);
        write(
            format!("strip_profiles_lambda_{lambda}.csv"),
            strip::strip_curves(lambda, 400, v_max).map(|c| curves_table("strip-profiles", lambda, &c)),
        );
    }
    write("strip_reversing_lambda_1.1.csv".into(), reversing_table(1.1, 1.0, 0.8, 500));
    write(
        "ball_profiles_lambda_2.csv".into(),
        ball::ball_curves(2.0, 400, 12.0).map(|c| curves_table("ball-profiles", 2.0, &c)),
    );
    write(
        "ball_profiles_lambda_0.5.csv".into(),
        ball::ball_curves(0.5, 400, 6.0).map(|c| curves_table("ball-profiles", 0.5, &c)),
    );
    write("gaussmod_lines.csv".into(), gauss_table(400, 2.0));

    let results = criteria::evaluate_all();
    let summary = Summary { all_pass: results.iter().all(|r| r.pass), files, criteria: results };
    fs::write(out.join("summary.json"), output::json(&summary))?;
    if json {
        println!("{}", output::json(&summary));
    } else {
        for r in &summary.criteria {
            println!("{}", r.line());
        }
        println!("wrote {} files and summary.json to {}", summary.files.len(), out.display());
    }
    first_error.map_or(Ok(()), Err)
}

fn run(cli: Cli) -> Run {
    let json = cli.json || (!cli.text && !std::io::stdout().is_terminal());
    match cli.command {
        Command::Strip(c) => strip_cmd(c, json),
        Command::Ball(c) => ball_cmd(c, json),
        Command::Gaussmod(GaussCmd::Curves { samples, t_max, out }) => {
            Ok(gauss_table(samples, t_max)?.emit(out.as_deref())?)
        }
        Command::Gaussmod(GaussCmd::Crossover) => {
            report(json, &gaussmod::crossover_y()?);
            Ok(())
        }
        Command::Line(LineCmd::Ratio { lambda }) => {
            #[derive(Serialize)]
            struct Ratio {
                lambda: f64,
                ratio: f64,
                bound: f64,
                margin: f64,
            }
            let ratio = strip::line_density_ratio(lambda)?;
            let bound = 4.0 * PI * lambda;
            report(json, &Ratio { lambda, ratio, bound, margin: bound - ratio });
            Ok(())
        }
        Command::Oracle(c) => oracle_cmd(c, json),
        Command::Check(c) => check_cmd(c, json),
        Command::Calibrate(a) => calibrate_cmd(a, json),
        Command::Density(DensityCmd::Mass { p, q }) => {
            #[derive(Serialize)]
            struct Mass {
                p: f64,
                q: f64,
                mass: f64,
            }
            let d = Density::gauss_with_exponents(p, q)?;
            report(json, &Mass { p, q, mass: d.total_mass() });
            Ok(())
        }
        Command::ReproduceAll { out } => reproduce_all(&out, json),
    }
}

fn describe(f: &Failure) -> String {
    match f {
        Failure::Core(e) => e.to_string(),
        Failure::Io(e) => format!("i/o error: {e}"),
        Failure::Usage(m) => m.clone(),
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Core(e) => e.exit_code() as u8,
        Failure::Io(_) => 2,
        Failure::Usage(_) => 1,
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("ISODENS_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("ISODENS_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", describe(&f));
            ExitCode::from(exit_code(&f))
        }
    }
}
