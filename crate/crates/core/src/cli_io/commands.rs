use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::brocard_pipeline::{classical_overlay, PipelineError};
use crate::exact_geom::{Point, Scalar};
use crate::scene_gen::{
    classical_brocard_scene, generate_scene, incentric_collapse_scene, SceneParams,
};
use crate::theorem_suite::{check_ids, run_suite_filtered};

use super::files::{Provenance, ReportFile, SceneEntry, SceneFile, SceneOutcome};
use super::svg::{render_svg, RenderOptions, DEFAULT_DIGITS, LAYERS};

/// Exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// A check failed or a scene was rejected.
    Fail = 1,
    Usage = 2,
    /// I/O, parse or generation failure.
    Runtime = 3,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(e as u8)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) => Exit::Usage,
            CliError::Runtime(_) => Exit::Runtime,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "brocard", version, about = "Exact generalized Brocard configurations")]
pub struct Cli {
    /// Directory for outputs whose path is not given.
    #[arg(long, global = true, env = "BROCARD_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write seeded random scenes (or a classical or collapse scene).
    Generate(GenerateArgs),
    /// Run the theorem suite on every scene of a file.
    Verify(VerifyArgs),
    /// Draw one scene as SVG.
    Render(RenderArgs),
    /// Run the suite and the classical overlay on a classical scene.
    Classical(ClassicalArgs),
}

#[derive(Debug, Args)]
pub struct CircleArgs {
    /// Center of the circle, "x,y".
    #[arg(long, default_value = "0,0", value_parser = parse_point)]
    pub center: Point,
    #[arg(long, default_value = "1", value_parser = parse_positive)]
    pub radius: Scalar,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Require incidence points inside the sides' segments.
    #[arg(long)]
    pub strict_segments: bool,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_numerator: u32,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_denominator: u32,
    /// Write the classical scene for `--params` instead.
    #[arg(long, requires = "params", conflicts_with = "collapse")]
    pub classical: bool,
    /// Three circle parameters for `--classical`, "t1,t2,t3".
    #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
    pub params: Option<ScalarList>,
    /// Write the collapsing scene (P = Q) instead.
    #[arg(long)]
    pub collapse: bool,
    #[command(flatten)]
    pub circle: CircleArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Comma-separated check ids; all checks when omitted.
    #[arg(long, value_delimiter = ',')]
    pub checks: Option<Vec<String>>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comma-separated layers: base, miquel, triangles, brocard-circle, steiner.
    #[arg(long, value_delimiter = ',')]
    pub layers: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
}

#[derive(Debug, Args)]
pub struct ClassicalArgs {
    /// Three distinct circle parameters, "t1,t2,t3".
    #[arg(long, value_parser = parse_scalars, allow_hyphen_values = true)]
    pub params: ScalarList,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub circle: CircleArgs,
}

/// Comma-separated rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarList(pub Vec<Scalar>);

fn parse_scalars(text: &str) -> Result<ScalarList, String> {
    text.split(',')
        .map(|t| t.trim().parse::<Scalar>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(ScalarList)
}

fn parse_point(text: &str) -> Result<Point, String> {
    match parse_scalars(text)?.0.as_slice() {
        [x, y] => Ok(Point::new(x.clone(), y.clone())),
        _ => Err("expected \"x,y\"".into()),
    }
}

fn parse_positive(text: &str) -> Result<Scalar, String> {
    let r: Scalar = text.parse().map_err(|e: crate::exact_geom::ParseScalarError| e.to_string())?;
    if r.is_positive() {
        Ok(r)
    } else {
        Err("must be positive".into())
    }
}

fn output_path(explicit: &Option<PathBuf>, out_dir: &Path, default: &str) -> PathBuf {
    explicit.clone().unwrap_or_else(|| out_dir.join(default))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn read_scenes(path: &Path) -> Result<(Vec<u8>, SceneFile), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
    let file = SceneFile::parse(&bytes).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
    Ok((bytes, file))
}

pub fn cmd_generate(args: &GenerateArgs, out_dir: &Path) -> Result<Exit, CliError> {
    let (center, radius) = (&args.circle.center, &args.circle.radius);
    let file = if args.collapse {
        SceneFile::new(Provenance::Collapse, vec![incentric_collapse_scene()])
    } else if args.classical {
        let params = args.params.clone().map(|l| l.0).unwrap_or_default();
        let [t1, t2, t3] = params.as_slice() else {
            return Err(CliError::Usage("--params needs three values".into()));
        };
        let scene = classical_brocard_scene([t1, t2, t3], center, radius)
            .map_err(|e| CliError::Usage(format!("no classical scene for these parameters: {e}")))?;
        SceneFile::new(
            Provenance::Classical { params, center: center.clone(), radius: radius.clone() },
            vec![scene],
        )
    } else {
        let scenes = (0..args.count)
            .into_par_iter()
            .map(|i| {
                let params = SceneParams {
                    seed: args.seed.wrapping_add(i),
                    center: center.clone(),
                    radius: radius.clone(),
                    max_numerator: args.max_numerator,
                    max_denominator: args.max_denominator,
                    strict_segments: args.strict_segments,
                    ..SceneParams::default()
                };
                generate_scene(&params).map_err(|e| CliError::Runtime(format!("seed {}: {e}", params.seed)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SceneFile::new(
            Provenance::Random {
                seed: args.seed,
                count: scenes.len(),
                center: center.clone(),
                radius: radius.clone(),
                max_numerator: args.max_numerator,
                max_denominator: args.max_denominator,
                strict_segments: args.strict_segments,
            },
            scenes,
        )
    };
    let path = output_path(&args.out, out_dir, "scenes.json");
    write_file(&path, &file.to_bytes())?;
    println!("wrote {} scene(s) to {}", file.scenes.len(), path.display());
    Ok(Exit::Ok)
}

/// Runs the suite on every scene, concurrently; entries are ordered by index.
pub fn verify_scenes(file: &SceneFile, input_digest: String, filter: Option<&[String]>) -> ReportFile {
    let entries: Vec<SceneEntry> = file
        .scenes
        .par_iter()
        .enumerate()
        .map(|(index, scene)| {
            let outcome = match run_suite_filtered(scene, filter) {
                Ok(report) => SceneOutcome::Report(report),
                Err(e) => {
                    let violations = match &e {
                        PipelineError::InvalidScene(v) => v.clone(),
                        _ => Vec::new(),
                    };
                    SceneOutcome::Error { message: e.to_string(), violations }
                }
            };
            SceneEntry { index, outcome }
        })
        .collect();
    ReportFile::new(input_digest, entries)
}

fn print_summary(report: &ReportFile) {
    let s = &report.summary;
    println!(
        "scenes: {}  pass: {}  fail: {}  degenerate: {}  rejected: {}",
        s.scenes, s.pass, s.fail, s.degenerate, s.errors
    );
    for (index, check, labels) in report.failures() {
        println!("FAIL scene {index} {check}: {}", labels.join("; "));
    }
    for entry in &report.scenes {
        if let SceneOutcome::Error { message, violations } = &entry.outcome {
            println!("REJECTED scene {}: {message}", entry.index);
            for v in violations {
                println!("  violation: {v}");
            }
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, out_dir: &Path) -> Result<Exit, CliError> {
    if let Some(filter) = &args.checks {
        let known = check_ids();
        if let Some(bad) = filter.iter().find(|c| !known.contains(&c.as_str())) {
            return Err(CliError::Usage(format!("unknown check {bad:?}; known: {}", known.join(", "))));
        }
    }
    let (bytes, file) = read_scenes(&args.input)?;
    let report = verify_scenes(&file, super::files::sha256_hex(&bytes), args.checks.as_deref());
    let path = output_path(&args.report, out_dir, "report.json");
    write_file(&path, &report.to_bytes())?;
    print_summary(&report);
    println!("report written to {}", path.display());
    Ok(if report.clean() { Exit::Ok } else { Exit::Fail })
}

pub fn cmd_render(args: &RenderArgs, out_dir: &Path) -> Result<Exit, CliError> {
    let layers = args.layers.clone().unwrap_or_else(|| LAYERS.iter().map(|s| s.to_string()).collect());
    if let Some(bad) = layers.iter().find(|l| !LAYERS.contains(&l.as_str())) {
        return Err(CliError::Usage(format!("unknown layer {bad:?}; known: {}", LAYERS.join(", "))));
    }
    let (_, file) = read_scenes(&args.input)?;
    let scene = file.scenes.get(args.index).ok_or_else(|| {
        CliError::Usage(format!("index {} out of range ({} scenes)", args.index, file.scenes.len()))
    })?;
    let svg = render_svg(scene, &RenderOptions { layers, digits: args.digits });
    let path = output_path(&args.out, out_dir, "figure.svg");
    write_file(&path, svg.as_bytes())?;
    println!("wrote {}", path.display());
    Ok(Exit::Ok)
}

fn show(p: &Point) -> String {
    format!("({}, {})", p.x, p.y)
}

pub fn cmd_classical(args: &ClassicalArgs, out_dir: &Path) -> Result<Exit, CliError> {
    let [t1, t2, t3] = args.params.0.as_slice() else {
        return Err(CliError::Usage("--params needs three values".into()));
    };
    if t1 == t2 || t2 == t3 || t1 == t3 {
        return Err(CliError::Usage("--params must be distinct".into()));
    }
    let (center, radius) = (&args.circle.center, &args.circle.radius);
    let scene = classical_brocard_scene([t1, t2, t3], center, radius)
        .map_err(|e| CliError::Usage(format!("no classical scene for these parameters: {e}")))?;
    let file = SceneFile::new(
        Provenance::Classical { params: args.params.0.clone(), center: center.clone(), radius: radius.clone() },
        vec![scene.clone()],
    );
    let report = verify_scenes(&file, super::files::sha256_hex(&file.to_bytes()), None);

    println!("A = {}  B = {}  C = {}", show(&scene.a), show(&scene.b), show(&scene.c));
    match classical_overlay(&scene) {
        Ok(ov) => {
            if ov.collapsed {
                println!("collapse: Ω = Ω′ = {}", show(&ov.omega));
            }
            println!("K = {}", show(&ov.k));
            println!("Ω = {}", show(&ov.omega));
            println!("Ω′ = {}", show(&ov.omega_prime));
            println!("tan ω = {}", ov.tan_brocard);
        }
        Err(e) => println!("overlay degenerate: {e}"),
    }
    if let Some(SceneOutcome::Report(r)) = report.scenes.first().map(|e| &e.outcome) {
        if r.collapsed {
            println!("configuration collapses (P = Q)");
        }
        for c in &r.checks {
            let reason = c.reason.as_deref().map(|r| format!(" ({r})")).unwrap_or_default();
            println!("{:<34} {}{reason}", c.check_id, c.status);
        }
    }
    let path = output_path(&args.report, out_dir, "classical_report.json");
    write_file(&path, &report.to_bytes())?;
    print_summary(&report);
    Ok(if report.clean() { Exit::Ok } else { Exit::Fail })
}

/// Parses `args` and runs the command; errors are printed to stderr.
pub fn run<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Usage } else { Exit::Ok };
        }
    };
    let out_dir = cli.out_dir.as_path();
    let result = match &cli.command {
        Command::Generate(a) => cmd_generate(a, out_dir),
        Command::Verify(a) => cmd_verify(a, out_dir),
        Command::Render(a) => cmd_render(a, out_dir),
        Command::Classical(a) => cmd_classical(a, out_dir),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit()
    })
}
