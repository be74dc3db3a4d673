//! Command-line front end.
//!
//! Five subcommands cover the pipeline: `construct` writes a code
//! artifact, `analyze` turns one into a report, `dual` derives a dual
//! artifact, `covering-radius` runs the exact coset-depth search, and
//! `reproduce` re-runs the reference registry and compares against the
//! recorded outcomes.
//!
//! Artifacts and reports are JSON (see [`artifact`]); `--format text`
//! renders human-readable summaries instead. Everything an artifact
//! needs travels inside it, so commands compose through plain files.

pub mod artifact;
pub mod registry;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{analyze_code, covering_radius, Coverage, CoverageOptions, Report};
use crate::codes::{functional_dual, nullspace_dual, Code};
use crate::curves::{make_support, Curve, Point, Support, SupportRecipe};
use crate::gf::make_field;
use crate::linalg::Matrix;
use crate::{Error, Result};

use artifact::{lambda_indices, read_artifact, Artifact, DualMeta, Resolved};
use registry::{run_example, RunConfig, Status};

#[derive(Parser)]
#[command(
    name = "agcodes",
    version,
    about = "Construct and analyze extended and Roth-Lempel algebraic-geometry codes",
    after_help = "Artifacts are self-contained JSON files; every command reads and \
                  writes them so runs compose through the filesystem."
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for the enumeration kernels.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Memory allowance in bytes for covering-radius syndrome bitmaps.
    #[arg(long, global = true, default_value_t = 256 << 20)]
    bitmap_budget: u64,
    /// Stop the covering-radius search at this error weight (default: the
    /// redundancy, which always suffices).
    #[arg(long, global = true)]
    weight_cap: Option<usize>,
    /// Opt in to multi-minute covering-radius runs during `reproduce`.
    #[arg(long, global = true)]
    slow: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// The projective line (Reed-Solomon-style codes).
    Line,
    /// y² = x³ + ax + b.
    Elliptic,
    /// y^q0 + y = x^(q0+1) over GF(q0²).
    Hermitian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Rows are basis functions divided by the separating denominator;
    /// needs a fiber-complete support.
    Functional,
    /// Kernel of the generator; always available.
    Nullspace,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code and write its artifact.
    Construct(ConstructArgs),
    /// Distances, classification, and bound checks for an artifact.
    Analyze {
        artifact: PathBuf,
        /// Also measure the covering radius of the code.
        #[arg(long)]
        rho: bool,
        /// Also measure the covering radius of the dual code.
        #[arg(long)]
        rho_dual: bool,
    },
    /// Derive a dual-generator artifact from a primal one.
    Dual {
        artifact: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Functional)]
        method: Method,
    },
    /// Exact covering radius of the code in an artifact (of the dual
    /// code, if the artifact is a dual).
    CoveringRadius { artifact: PathBuf },
    /// Re-run reference constructions and compare with recorded outcomes.
    Reproduce {
        /// Registry id, or "all".
        #[arg(default_value = "all")]
        id: String,
        /// List the registry instead of running it.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// Curve family.
    #[arg(long, value_enum)]
    curve: FamilyArg,
    /// Field characteristic (odd prime).
    #[arg(long)]
    p: u32,
    /// Field extension degree.
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Elliptic coefficient a, as an element index.
    #[arg(long)]
    a: Option<u32>,
    /// Elliptic coefficient b, as an element index.
    #[arg(long)]
    b: Option<u32>,
    /// Hermitian parameter; the field must be GF(q0²).
    #[arg(long)]
    q0: Option<u32>,
    /// Support recipe: `all-affine`; `torsion-free-pairs[:T]` (complete
    /// x-fibers only, first T of them); `multiples-of:X,Y,N` (N multiples
    /// of the point with element indices X, Y); or an explicit list —
    /// `x,y;x,y;...` on a curve, `x,x,...` on the line.
    #[arg(long)]
    support: String,
    /// Divisor degree at infinity.
    #[arg(long)]
    m: usize,
    /// Code variant.
    #[arg(long, default_value = "plain")]
    variant: String,
    /// Roth-Lempel δ, as an element index.
    #[arg(long)]
    delta: Option<u32>,
}

/// Parse arguments from the process command line, run, and return the
/// exit code: 0 on success / all PASS, 1 on failures and errors (clap
/// itself exits 2 on usage errors).
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Construct(args) => cmd_construct(cli, args),
        Cmd::Analyze {
            artifact,
            rho,
            rho_dual,
        } => cmd_analyze(cli, artifact, *rho, *rho_dual),
        Cmd::Dual { artifact, method } => cmd_dual(cli, artifact, *method),
        Cmd::CoveringRadius { artifact } => cmd_covering_radius(cli, artifact),
        Cmd::Reproduce { id, list } => cmd_reproduce(cli, id, *list),
    }
}

fn coverage_options(cli: &Cli) -> CoverageOptions {
    CoverageOptions {
        workers: cli.workers,
        budget_bytes: cli.bitmap_budget,
        weight_cap: cli.weight_cap,
    }
}

/// Write `content` (with a trailing newline) to --out or stdout.
fn emit(cli: &Cli, content: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, format!("{content}\n")).map_err(Error::Io)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(cli: &Cli, value: &T) -> Result<()> {
    emit(cli, &serde_json::to_string_pretty(value)?)
}

fn cmd_construct(cli: &Cli, args: &ConstructArgs) -> Result<i32> {
    let field = make_field(args.p, args.e)?;
    let reject = |flag: &str, family: &str| -> Result<()> {
        Err(Error::BadCurve(format!(
            "--{flag} does not apply to the {family} family"
        )))
    };
    let curve = match args.curve {
        FamilyArg::Line => {
            if args.a.is_some() || args.b.is_some() {
                reject("a/--b", "line")?;
            }
            if args.q0.is_some() {
                reject("q0", "line")?;
            }
            Curve::line(field.clone())
        }
        FamilyArg::Elliptic => {
            if args.q0.is_some() {
                reject("q0", "elliptic")?;
            }
            let (a, b) = match (args.a, args.b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::BadCurve(
                        "the elliptic family needs --a and --b (element indices)".into(),
                    ))
                }
            };
            Curve::elliptic(
                field.clone(),
                field.el(a as u64)?,
                field.el(b as u64)?,
            )?
        }
        FamilyArg::Hermitian => {
            if args.a.is_some() || args.b.is_some() {
                reject("a/--b", "hermitian")?;
            }
            let q0 = args.q0.ok_or_else(|| {
                Error::BadCurve("the hermitian family needs --q0".into())
            })?;
            Curve::hermitian(field.clone(), q0)?
        }
    };
    let support = parse_support(&args.support, &curve)?;

    let code = match args.variant.as_str() {
        "plain" => Code::plain(curve, support, args.m)?,
        "extended" => Code::extended(curve, support, args.m)?,
        "roth-lempel" => {
            let delta = args.delta.ok_or_else(|| {
                Error::Unsupported("the roth-lempel variant needs --delta".into())
            })?;
            Code::roth_lempel(curve, support, args.m, field.el(delta as u64)?)?
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown variant {other:?}; expected plain, extended, or roth-lempel"
            )))
        }
    };

    let summary = format!(
        "[{}, {}] {} code: GF({}), genus {}, {} evaluation points, m = {}",
        code.n(),
        code.k(),
        code.variant().name(),
        code.curve().field().q(),
        code.curve().genus(),
        code.support_len(),
        code.m()
    );
    let art = Artifact::from_code(&code);
    match cli.format {
        Format::Json => {
            eprintln!("{summary}");
            emit_json(cli, &art)?;
        }
        Format::Text => {
            if let Some(path) = &cli.out {
                std::fs::write(path, serde_json::to_string_pretty(&art)?)?;
                eprintln!("wrote {}", path.display());
            }
            println!("{summary}");
        }
    }
    Ok(0)
}

/// Parse the --support flag against a built curve.
fn parse_support(spec: &str, curve: &Curve) -> Result<Support> {
    let field = curve.field().clone();
    let recipe = if spec == "all-affine" {
        SupportRecipe::AllAffine
    } else if spec == "torsion-free-pairs" || spec == "complete-fibers" {
        SupportRecipe::CompleteFibers { take: None }
    } else if let Some(t) = spec
        .strip_prefix("torsion-free-pairs:")
        .or_else(|| spec.strip_prefix("complete-fibers:"))
    {
        let take = t.parse().map_err(|_| {
            Error::BadSupport(format!("bad fiber count {t:?} in --support {spec:?}"))
        })?;
        SupportRecipe::CompleteFibers { take: Some(take) }
    } else if let Some(rest) = spec
        .strip_prefix("multiples-of:")
        .or_else(|| spec.strip_prefix("multiples:"))
    {
        let nums = parse_indices(rest, spec)?;
        if nums.len() != 3 {
            return Err(Error::BadSupport(format!(
                "--support {spec:?} needs X,Y,N (base point indices and a count)"
            )));
        }
        SupportRecipe::Multiples {
            base: Point::affine(field.el(nums[0])?, field.el(nums[1])?),
            count: nums[2] as usize,
        }
    } else {
        // An explicit list: bare x indices on the line, x,y;x,y;… pairs
        // on a curve.
        let points = if matches!(curve.family(), crate::curves::Family::Line) {
            parse_indices(spec, spec)?
                .into_iter()
                .map(|x| Ok(Point::on_line(field.el(x)?)))
                .collect::<Result<Vec<Point>>>()?
        } else {
            spec.split(';')
                .map(|pair| {
                    let nums = parse_indices(pair, spec)?;
                    if nums.len() != 2 {
                        return Err(Error::BadSupport(format!(
                            "point {pair:?} in --support {spec:?} must be x,y"
                        )));
                    }
                    Ok(Point::affine(field.el(nums[0])?, field.el(nums[1])?))
                })
                .collect::<Result<Vec<Point>>>()?
        };
        return Support::new(curve, &points);
    };
    make_support(curve, &recipe)
}

fn parse_indices(list: &str, whole: &str) -> Result<Vec<u64>> {
    list.split(',')
        .map(|tok| {
            tok.trim().parse::<u64>().map_err(|_| {
                Error::BadSupport(format!(
                    "bad element index {tok:?} in --support {whole:?}"
                ))
            })
        })
        .collect()
}

fn load(path: &PathBuf) -> Result<Resolved> {
    read_artifact(path)?.resolve()
}

fn require_primal(resolved: &Resolved, cmd: &str) -> Result<()> {
    if resolved.dual.is_some() {
        return Err(Error::Artifact(format!(
            "{cmd} expects a primal artifact, but this one stores a dual generator; \
             rerun against the artifact it was derived from"
        )));
    }
    Ok(())
}

/// Warn when a covering-radius run is about to enumerate a large space.
fn estimate_note(parity: &Matrix, workers: usize) {
    let q = parity.field().q() as f64;
    let syndromes = q.powi(parity.rows() as i32);
    if syndromes > 5e7 {
        eprintln!(
            "covering {syndromes:.2e} syndromes; expect minutes of work \
             (running with {workers} worker{})",
            if workers == 1 { "" } else { "s" }
        );
    }
}

fn render_report(report: &Report) -> String {
    let mut s = format!(
        "[{}, {}, {}] code, dual distance {}\ndefect {} / dual defect {} — {}\n",
        report.n, report.k, report.d, report.d_dual, report.defect, report.defect_dual,
        report.class
    );
    match (report.rho, report.rho_dual) {
        (Some(r), Some(rd)) => s.push_str(&format!("ρ = {r}, dual ρ = {rd}\n")),
        (Some(r), None) => s.push_str(&format!("ρ = {r}\n")),
        (None, Some(rd)) => s.push_str(&format!("dual ρ = {rd}\n")),
        (None, None) => {}
    }
    if report.bounds.is_empty() {
        s.push_str("bounds: none applicable");
    } else {
        s.push_str("bounds:");
        for b in &report.bounds {
            s.push_str(&format!(
                " {} {};",
                b.name,
                if b.pass { "PASS" } else { "FAIL" }
            ));
        }
    }
    s
}

fn cmd_analyze(cli: &Cli, path: &PathBuf, rho: bool, rho_dual: bool) -> Result<i32> {
    let resolved = load(path)?;
    require_primal(&resolved, "analyze")?;
    let code = resolved.code;

    let measured_rho = if rho {
        let parity = nullspace_dual(&code);
        estimate_note(&parity, cli.workers);
        Some(covering_radius(&parity, &coverage_options(cli))?.rho)
    } else {
        None
    };
    let measured_dual = if rho_dual {
        estimate_note(code.generator(), cli.workers);
        Some(covering_radius(code.generator(), &coverage_options(cli))?.rho)
    } else {
        None
    };

    let report = analyze_code(&code, measured_rho, measured_dual)?;
    match cli.format {
        Format::Json => emit_json(cli, &report)?,
        Format::Text => emit(cli, &render_report(&report))?,
    }
    Ok(if report.bounds.iter().all(|b| b.pass) {
        0
    } else {
        1
    })
}

fn cmd_dual(cli: &Cli, path: &PathBuf, method: Method) -> Result<i32> {
    let resolved = load(path)?;
    require_primal(&resolved, "dual")?;
    let code = resolved.code;

    let (generator, lambda, label) = match method {
        Method::Functional => {
            let fd = functional_dual(&code)?;
            let rendered: Vec<String> = fd
                .lambdas
                .iter()
                .map(|&l| code.curve().field().fmt_el(l))
                .collect();
            (
                fd.generator,
                Some(lambda_indices(&fd.lambdas)),
                format!("functional (λ = {})", rendered.join(", ")),
            )
        }
        Method::Nullspace => (nullspace_dual(&code), None, "nullspace".to_string()),
    };
    // The orthogonality verdict is recomputed here, at write time, and
    // travels with the artifact.
    let orthogonal = generator.mul(&code.generator().transpose())?.is_zero();
    let art = Artifact::from_dual(
        &code,
        &generator,
        DualMeta {
            method: match method {
                Method::Functional => "functional".into(),
                Method::Nullspace => "nullspace".into(),
            },
            lambda,
            orthogonal,
        },
    );
    let summary = format!(
        "[{}, {}] dual of the [{}, {}] {} code — {} — orthogonality {}",
        code.n(),
        code.n() - code.k(),
        code.n(),
        code.k(),
        code.variant().name(),
        label,
        if orthogonal { "PASS" } else { "FAIL" }
    );
    match cli.format {
        Format::Json => {
            eprintln!("{summary}");
            emit_json(cli, &art)?;
        }
        Format::Text => {
            if let Some(out) = &cli.out {
                std::fs::write(out, serde_json::to_string_pretty(&art)?)?;
                eprintln!("wrote {}", out.display());
            }
            println!("{summary}");
        }
    }
    Ok(if orthogonal { 0 } else { 1 })
}

#[derive(Serialize)]
struct CoverageJson {
    rho: usize,
    total_syndromes: u64,
    /// Syndromes first covered at each weight 0..=rho.
    newly_covered: Vec<u64>,
    /// A deepest hole, as element indices.
    witness: Vec<u32>,
}

fn coverage_json(c: &Coverage) -> CoverageJson {
    CoverageJson {
        rho: c.rho,
        total_syndromes: c.total_syndromes,
        newly_covered: c.newly_covered.clone(),
        witness: c.witness.iter().map(|e| e.0).collect(),
    }
}

fn cmd_covering_radius(cli: &Cli, path: &PathBuf) -> Result<i32> {
    let resolved = load(path)?;
    // For a primal artifact, measure ρ of the code; for a dual artifact,
    // the primal generator is exactly the parity-check matrix we need.
    let parity = match resolved.dual {
        None => nullspace_dual(&resolved.code),
        Some(_) => resolved.code.generator().clone(),
    };
    estimate_note(&parity, cli.workers);
    let cov = covering_radius(&parity, &coverage_options(cli))?;
    match cli.format {
        Format::Json => emit_json(cli, &coverage_json(&cov))?,
        Format::Text => {
            let witness: Vec<String> = cov
                .witness
                .iter()
                .map(|&e| parity.field().fmt_el(e))
                .collect();
            emit(
                cli,
                &format!(
                    "ρ = {} ({} syndromes; newly covered by weight: {:?})\n\
                     deepest hole: ({})",
                    cov.rho,
                    cov.total_syndromes,
                    cov.newly_covered,
                    witness.join(", ")
                ),
            )?;
        }
    }
    Ok(0)
}

fn cmd_reproduce(cli: &Cli, id: &str, list: bool) -> Result<i32> {
    if list {
        let lines: Vec<String> = registry::examples()
            .iter()
            .map(|(id, title)| format!("{id}  —  {title}"))
            .collect();
        emit(cli, &lines.join("\n"))?;
        return Ok(0);
    }
    let cfg = RunConfig {
        workers: cli.workers,
        budget_bytes: cli.bitmap_budget,
        slow: cli.slow,
    };
    let rows = run_example(id, &cfg)?;
    let (mut pass, mut fail, mut skip) = (0usize, 0usize, 0usize);
    for row in &rows {
        match row.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skip => skip += 1,
        }
    }
    match cli.format {
        Format::Json => emit_json(cli, &rows)?,
        Format::Text => {
            let mut text = String::new();
            for row in &rows {
                let status = match row.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let prov = match row.provenance {
                    registry::Provenance::Reported => "reported",
                    registry::Provenance::Derived => "derived",
                };
                text.push_str(&match row.status {
                    Status::Skip => format!(
                        "{status}  {:<17} {}: expected {} — {}  [{prov}]\n",
                        row.example, row.name, row.expected, row.computed
                    ),
                    _ => format!(
                        "{status}  {:<17} {}: expected {}, got {}  [{prov}]\n",
                        row.example, row.name, row.expected, row.computed
                    ),
                });
            }
            text.push_str(&format!(
                "{} checks: {pass} passed, {fail} failed, {skip} skipped",
                rows.len()
            ));
            emit(cli, &text)?;
        }
    }
    if fail > 0 {
        eprintln!("{fail} check(s) FAILED");
        Ok(1)
    } else {
        Ok(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Fe;

    fn gf9_elliptic() -> Curve {
        let f = make_field(3, 2).unwrap();
        Curve::elliptic(f, Fe(1), Fe(0)).unwrap()
    }

    #[test]
    fn support_flag_recipes() {
        let curve = gf9_elliptic();
        assert_eq!(parse_support("all-affine", &curve).unwrap().len(), 15);
        let paired = parse_support("torsion-free-pairs", &curve).unwrap();
        assert_eq!(paired.len(), 12);
        assert!(paired.fiber_complete());
        assert_eq!(
            parse_support("torsion-free-pairs:3", &curve).unwrap().len(),
            6
        );
        assert_eq!(
            parse_support("complete-fibers:3", &curve).unwrap().len(),
            6
        );
        // (0, 2) has order 23 on the q=19 curve.
        let f19 = make_field(19, 1).unwrap();
        let c19 = Curve::elliptic(f19.clone(), f19.from_int(-1), Fe(4)).unwrap();
        assert_eq!(
            parse_support("multiples-of:0,2,6", &c19).unwrap().len(),
            6
        );
        assert_eq!(parse_support("multiples:0,2,6", &c19).unwrap().len(), 6);
    }

    #[test]
    fn support_flag_explicit_lists() {
        let f = make_field(19, 1).unwrap();
        let line = Curve::line(f);
        let s = parse_support("1,2,3", &line).unwrap();
        assert_eq!(s.len(), 3);

        let curve = gf9_elliptic();
        // (1, θ²) and (1, θ⁶) — indices 4 and 8.
        let s = parse_support("1,4;1,8", &curve).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.fiber_complete());

        assert!(parse_support("1,4;9,9", &curve).is_err()); // off curve
        assert!(parse_support("1;2", &curve).is_err()); // not pairs
        assert!(parse_support("nonsense", &line).is_err());
    }

    #[test]
    fn cli_flag_shapes_parse() {
        use clap::CommandFactory;
        Cli::command().debug_assert();

        let cli = Cli::parse_from([
            "agcodes",
            "--workers",
            "4",
            "--format",
            "text",
            "reproduce",
            "EX-9-FULL",
        ]);
        assert_eq!(cli.workers, 4);
        assert!(matches!(
            cli.cmd,
            Cmd::Reproduce { ref id, list: false } if id == "EX-9-FULL"
        ));

        let cli = Cli::parse_from(["agcodes", "reproduce"]);
        assert!(matches!(cli.cmd, Cmd::Reproduce { ref id, .. } if id == "all"));
    }
}
