//! Batch front end for the `conefourier` library.
//!
//! [`run`] executes one [`JobRequest`] and returns the exit status together
//! with everything that should go to standard output. Inputs are JSON, given
//! as a file path, inline text, or `-` for standard input.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use conefourier::brion::{evaluate_detailed, polytope_combinatorics};
use conefourier::interpolation::{build_system, solve_exact_detailed};
use conefourier::random::{generic_cone, random_family, rng_from_seed, sphere_shell_cone};
use conefourier::triangulation::pulling_triangulation;
use conefourier::vervan::vervan_record;
use conefourier::{
    pk_via_interpolation, pk_via_triangulation, polytope_transform, Cone, DiagonalFamily, Error, Method, Vector,
};
use serde::Deserialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Transform,
    Compare,
    Vervan,
    BrionEval,
    Bench,
}

#[derive(Clone, Debug)]
pub struct JobRequest {
    pub command: Command,
    /// Path, inline JSON, or `-`.
    pub input: Option<String>,
    pub method: Method,
    pub seed: u64,
    pub random: Option<usize>,
    pub verbose: bool,
    pub output: Option<PathBuf>,
    pub csv: bool,
    /// Explicit diagonal family for `vervan`.
    pub family: Option<String>,
    /// Evaluation point for `brion-eval`.
    pub xi: Option<String>,
    pub dimension: Option<usize>,
    pub generators: Option<usize>,
}

impl JobRequest {
    pub fn new(command: Command) -> Self {
        JobRequest {
            command,
            input: None,
            method: Method::default(),
            seed: 0,
            random: None,
            verbose: false,
            output: None,
            csv: false,
            family: None,
            xi: None,
            dimension: None,
            generators: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

/// Input that cannot be turned into a request: unreadable files, bad JSON,
/// missing arguments.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

enum Failure {
    Usage(UsageError),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

type JobResult<T> = std::result::Result<T, Failure>;

pub fn error_object(e: &Error) -> Value {
    json!({ "code": e.code(), "message": e.to_string(), "context": e.context() })
}

pub fn usage_object(e: &UsageError) -> Value {
    json!({ "code": "usage", "message": e.0, "context": {} })
}

pub fn run(job: &JobRequest) -> Outcome {
    let mut lines = Vec::new();
    let result = match job.command {
        Command::Validate => validate(job, &mut lines),
        Command::Transform => transform(job, &mut lines),
        Command::Compare => compare(job, &mut lines),
        Command::Vervan => vervan(job, &mut lines),
        Command::BrionEval => brion_eval(job, &mut lines),
        Command::Bench => bench(job, &mut lines),
    };
    let status = match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Domain(e)) => {
            lines.push(error_object(&e).to_string());
            EXIT_DOMAIN
        }
        Err(Failure::Usage(e)) => {
            lines.push(usage_object(&e).to_string());
            EXIT_USAGE
        }
    };
    let mut stdout = lines.join("\n");
    stdout.push('\n');
    Outcome { status, stdout }
}

fn read_source(source: &str) -> std::result::Result<String, UsageError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| UsageError(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(source).map_err(|e| UsageError(format!("cannot read {source}: {e}")))
}

fn parse<T: for<'de> Deserialize<'de>>(source: &str, what: &str) -> std::result::Result<T, UsageError> {
    let text = read_source(source)?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("malformed {what}: {e}")))
}

fn required<'a>(value: &'a Option<String>, what: &str) -> std::result::Result<&'a str, UsageError> {
    value.as_deref().ok_or_else(|| UsageError(format!("missing {what}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCone {
    apex: Option<Vector>,
    generators: Vec<Vector>,
}

fn load_cone(job: &JobRequest) -> JobResult<Cone> {
    let raw: RawCone = parse(required(&job.input, "cone input")?, "cone JSON")?;
    let cone = match raw.apex {
        Some(apex) => Cone::new(apex, raw.generators)?,
        None => Cone::at_origin(raw.generators)?,
    };
    Ok(cone)
}

#[derive(Deserialize)]
struct RawPolytope {
    vertices: Vec<Vector>,
    #[serde(default)]
    xi: Option<Vector>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPoint {
    Bare(Vector),
    Request { xi: Vector },
}

fn emit(lines: &mut Vec<String>, value: &impl serde::Serialize) {
    lines.push(serde_json::to_string(value).expect("serializable output"));
}

fn validate(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let cone = load_cone(job)?;
    emit(lines, &cone.validate()?);
    Ok(())
}

fn transform(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let cone = load_cone(job)?;
    if !job.verbose {
        emit(lines, &job.method.numerator(&cone)?);
        return Ok(());
    }
    match job.method {
        Method::Interpolation => {
            cone.pointedness_witness()?;
            let system = build_system(&cone);
            let solution = solve_exact_detailed(&system)?;
            emit(
                lines,
                &json!({
                    "polynomial": solution.polynomial,
                    "system": {
                        "rows": system.rows,
                        "pivots": solution.pivot_rows,
                        "skipped": system.skipped,
                    },
                }),
            );
        }
        Method::Triangulation => {
            let polynomial = pk_via_triangulation(&cone)?;
            let triangulation = pulling_triangulation(&cone, 0)?;
            emit(lines, &json!({ "polynomial": polynomial, "triangulation": triangulation.simplices }));
        }
    }
    Ok(())
}

/// Shapes cycled through by randomized `compare` when no shape is given.
fn default_shapes() -> Vec<(usize, usize)> {
    (2..=4).flat_map(|d| (d..=d + 4).map(move |n| (d, n))).collect()
}

fn random_shapes(job: &JobRequest) -> std::result::Result<Vec<(usize, usize)>, UsageError> {
    match (job.dimension, job.generators) {
        (Some(d), Some(n)) if d >= 1 && n >= d => Ok(vec![(d, n)]),
        (Some(d), None) if d >= 1 => Ok((d..=d + 4).map(|n| (d, n)).collect()),
        (None, None) => Ok(default_shapes()),
        _ => Err(UsageError("need 1 <= dimension <= generators".into())),
    }
}

fn compare_one(cone: &Cone) -> JobResult<Value> {
    let triangulation = pk_via_triangulation(cone)?;
    let interpolation = pk_via_interpolation(cone)?;
    Ok(json!({
        "equal": triangulation == interpolation,
        "triangulation": triangulation,
        "interpolation": interpolation,
    }))
}

fn compare(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let Some(k) = job.random else {
        let cone = load_cone(job)?;
        lines.push(compare_one(&cone)?.to_string());
        return Ok(());
    };
    let shapes = random_shapes(job)?;
    let mut rng = rng_from_seed(job.seed);
    for i in 0..k {
        let (d, n) = shapes[i % shapes.len()];
        let cone = generic_cone(&mut rng, d, n);
        let mut record = compare_one(&cone)?;
        record["cone"] = serde_json::to_value(&cone).expect("serializable cone");
        lines.push(record.to_string());
    }
    Ok(())
}

fn vervan(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let cone = load_cone(job)?;
    let families = match (&job.family, job.random) {
        (Some(source), _) => {
            let raw: Vec<Vec<usize>> = parse(source, "diagonal family")?;
            vec![DiagonalFamily::for_cone(raw, &cone)?]
        }
        (None, Some(k)) => {
            let mut rng = rng_from_seed(job.seed);
            (0..k).map(|_| random_family(&mut rng, &cone)).collect()
        }
        (None, None) => conefourier::vervan::all_families(&cone),
    };
    for family in &families {
        emit(lines, &vervan_record(&cone, family)?);
    }
    Ok(())
}

fn brion_eval(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let raw: RawPolytope = parse(required(&job.input, "polytope input")?, "polytope JSON")?;
    let xi = match (&job.xi, raw.xi) {
        (Some(source), _) => match parse::<RawPoint>(source, "evaluation point")? {
            RawPoint::Bare(v) | RawPoint::Request { xi: v } => v,
        },
        (None, Some(v)) => v,
        (None, None) => return Err(UsageError("missing evaluation point (--xi)".into()).into()),
    };
    let polytope = polytope_combinatorics(raw.vertices)?;
    let transform = polytope_transform(&polytope, job.method)?;
    let evaluation = evaluate_detailed(&transform, &xi)?;
    if job.verbose {
        emit(
            lines,
            &json!({ "re": evaluation.value.re, "im": evaluation.value.im, "terms": evaluation.terms }),
        );
    } else {
        emit(lines, &evaluation.value);
    }
    Ok(())
}

#[derive(Debug, serde::Serialize)]
struct BenchRow {
    n: usize,
    d: usize,
    cones: usize,
    triangulation_seconds: f64,
    interpolation_seconds: f64,
    equal: bool,
}

fn bench(job: &JobRequest, lines: &mut Vec<String>) -> JobResult<()> {
    let per_shape = job.random.unwrap_or(5);
    let shapes = match (job.dimension, job.generators) {
        (None, None) => (3..=4).flat_map(|d| (d..=d + 4).map(move |n| (d, n))).collect(),
        _ => random_shapes(job)?,
    };
    let mut rng = rng_from_seed(job.seed);
    let mut rows = Vec::new();
    for (d, n) in shapes {
        // The shell in R^1 holds only two lattice points.
        if d < 3 {
            return Err(UsageError("bench needs dimension >= 3".into()).into());
        }
        let cones: Vec<Cone> = (0..per_shape).map(|_| sphere_shell_cone(&mut rng, d, n, 8)).collect();
        let start = Instant::now();
        let tri = cones.iter().map(pk_via_triangulation).collect::<Result<Vec<_>, _>>()?;
        let triangulation_seconds = start.elapsed().as_secs_f64();
        let start = Instant::now();
        let int = cones.iter().map(pk_via_interpolation).collect::<Result<Vec<_>, _>>()?;
        let interpolation_seconds = start.elapsed().as_secs_f64();
        rows.push(BenchRow {
            n,
            d,
            cones: per_shape,
            triangulation_seconds,
            interpolation_seconds,
            equal: tri == int,
        });
    }
    if job.csv {
        lines.push("n,d,cones,triangulation_seconds,interpolation_seconds,equal".into());
        for r in &rows {
            lines.push(format!(
                "{},{},{},{:.6},{:.6},{}",
                r.n, r.d, r.cones, r.triangulation_seconds, r.interpolation_seconds, r.equal
            ));
        }
    } else {
        emit(lines, &rows);
    }
    Ok(())
}
