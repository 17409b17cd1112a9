//! Command-line front end: every subcommand is a thin adapter over one
//! library operation, reading JSON documents and writing a JSON result with a
//! `"status"` field to stdout (human summaries go to stderr).
//!
//! Exit codes: 0 success, 1 validation or precondition failure (structured
//! error with a witness in the message), 2 I/O or schema errors.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blockdiag::{self, DiagonalizerE};
use crate::frames::{self, FrameGramian};
use crate::galpha::{self};
use crate::fourier;
use crate::json::{
    matrix_to_json, vector_from_json, vector_to_json, CocycleDoc, CocycleRef, ComplexPair,
    FourierImageDoc, FrameVectorDoc, GroupDoc, IrreducibleSetDoc, RepDoc,
};
use crate::numerics::ToleranceConfig;
use crate::repn::ProjectiveRep;
use crate::selftest;
use crate::workspace::Workspace;

#[derive(Parser)]
#[command(
    name = "projframe",
    about = "Projective group frames: group matrices, the twisted Fourier transform, and tight-frame reconstruction",
    version
)]
pub struct Cli {
    /// Tolerance override `name=value`; repeatable. Names:
    /// structural_zero, projection, rank_cutoff, roundtrip.
    #[arg(long, global = true, value_name = "NAME=VALUE")]
    tol: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum ValidateKind {
    Group,
    Cocycle,
    Rep,
    Irrset,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a JSON document (group, cocycle, representation, or
    /// irreducible set).
    Validate {
        #[arg(value_enum)]
        kind: ValidateKind,
        file: PathBuf,
        /// Group context for cocycle documents with a by-name group.
        #[arg(long)]
        group: Option<String>,
        /// Cocycle context (built-in key like `klein:alpha`) for rep/irrset
        /// documents.
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Emit the regular alpha-representation of a built-in cocycle.
    RegularRep {
        #[arg(long)]
        cocycle: String,
    },
    /// Character of a representation: a built-in (`--rep key/label`) or a
    /// rep file with a cocycle context.
    Character {
        /// Built-in reference `set-key/label`, e.g. `d8:alpha/rho1`.
        #[arg(long, conflicts_with_all = ["rep_file", "cocycle"])]
        rep: Option<String>,
        #[arg(long, requires = "cocycle")]
        rep_file: Option<PathBuf>,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Fourier transform of a vector over a built-in irreducible set.
    Transform {
        /// Use the script variant (argument-reversed transform).
        #[arg(long)]
        variant: bool,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        irr: String,
    },
    /// Inverse Fourier transform of a block image.
    InverseTransform {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        irr: String,
    },
    /// Twisted convolution of two vectors.
    Convolve {
        #[arg(long)]
        nu: PathBuf,
        #[arg(long)]
        mu: PathBuf,
        #[arg(long)]
        cocycle: String,
    },
    /// Star-adjoint vector (Hermitian transpose in the algebra).
    Adjoint {
        #[arg(long)]
        nu: PathBuf,
        #[arg(long)]
        cocycle: String,
    },
    /// Block diagonalisation of a (G,alpha)-matrix by conj(E).
    Blockdiag {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Determinant via the block factorisation.
    Det {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Rank with its per-block certificate.
    Rank {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Gramian of the orbit of a vector under a built-in representation.
    Gramian {
        /// Built-in reference `set-key/label`, e.g. `klein:alpha/rho`.
        #[arg(long)]
        rep: String,
        #[arg(long)]
        v: PathBuf,
    },
    /// Tight-frame test on a Gramian document.
    Tightcheck {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Frame classification by the shape of the Fourier coefficients.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Reconstruct a frame vector from a Gramian.
    Construct {
        /// Accept any PSD Gramian (weighted frame), not only projections.
        #[arg(long)]
        psd: bool,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Dump a built-in worked dataset (group, cocycle, irreducibles).
    Examples {
        #[arg(value_parser = ["klein", "d8"])]
        name: String,
    },
    /// Run the acceptance suite.
    Selftest,
}

enum CliError {
    /// Exit code 1: validation or precondition failures.
    Validation(String),
    /// Exit code 2: I/O or schema problems.
    Schema(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Schema(_) => 2,
        }
    }

    fn to_value(&self) -> Value {
        let (kind, message) = match self {
            CliError::Validation(m) => ("validation", m),
            CliError::Schema(m) => ("schema", m),
        };
        json!({"status": "error", "kind": kind, "message": message})
    }
}

macro_rules! validation {
    ($($err:ty),*) => {
        $(impl From<$err> for CliError {
            fn from(e: $err) -> Self {
                CliError::Validation(e.to_string())
            }
        })*
    };
}

validation!(
    crate::group::GroupError,
    crate::cocycle::CocycleError,
    crate::repn::RepnError,
    crate::galpha::GAlphaError,
    crate::fourier::FourierError,
    crate::blockdiag::BlockDiagError,
    crate::frames::FrameError,
    crate::workspace::WorkspaceError,
    crate::numerics::NumericsError
);

impl From<crate::json::JsonError> for CliError {
    fn from(e: crate::json::JsonError) -> Self {
        match e {
            crate::json::JsonError::Parse(inner) => CliError::Schema(inner.to_string()),
            crate::json::JsonError::NonFinite { .. } => CliError::Schema(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Schema(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))
}

fn read_vector(path: &Path) -> Result<Vec<num_complex::Complex64>, CliError> {
    let pairs: Vec<ComplexPair> = parse_json(path)?;
    Ok(vector_from_json(&pairs, "vector file")?)
}

fn tolerances(overrides: &[String]) -> Result<ToleranceConfig, CliError> {
    let mut tol = ToleranceConfig::default();
    let mut apply = |spec: &str| -> Result<(), CliError> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| CliError::Schema(format!("bad tolerance spec `{spec}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|e| CliError::Schema(format!("bad tolerance value in `{spec}`: {e}")))?;
        tol.set(name.trim(), value)
            .map_err(|e| CliError::Schema(e.to_string()))
    };
    if let Ok(env) = std::env::var("PROJFRAME_TOL") {
        for spec in env.split(',').filter(|s| !s.trim().is_empty()) {
            apply(spec)?;
        }
    }
    for spec in overrides {
        apply(spec)?;
    }
    Ok(tol)
}

/// Looks up a built-in representation by `set-key/label`.
fn resolve_rep(ws: &Workspace, reference: &str) -> Result<(Arc<crate::repn::IrreducibleSet>, usize), CliError> {
    let (key, label) = reference
        .rsplit_once('/')
        .ok_or_else(|| CliError::Schema(format!("rep reference `{reference}` is not `set-key/label`")))?;
    let set = ws.irreducibles(key)?;
    let idx = set
        .index_of(label)
        .ok_or_else(|| CliError::Validation(format!("no representation labelled `{label}` in `{key}`")))?;
    Ok((set, idx))
}

fn load_gramian(ws: &Workspace, path: &Path, tol: &ToleranceConfig) -> Result<(FrameGramian, Arc<crate::repn::IrreducibleSet>), CliError> {
    let doc: crate::json::MatrixDoc = parse_json(path)?;
    let matrix = ws.load_matrix(doc)?;
    let set = ws.irreducibles_for(matrix.cocycle())?;
    let gramian = FrameGramian::from_matrix(matrix, tol)?;
    Ok((gramian, set))
}

fn run_command(cli: Cli) -> Result<Value, CliError> {
    let tol = tolerances(&cli.tol)?;
    let ws = Workspace::with_builtins(tol);
    match cli.command {
        Command::Validate {
            kind,
            file,
            group,
            cocycle,
        } => run_validate(&ws, kind, &file, group, cocycle, &tol),
        Command::RegularRep { cocycle } => {
            let c = ws.cocycle(&cocycle)?;
            let rep = ProjectiveRep::regular(c);
            eprintln!(
                "regular alpha-representation of {} ({} matrices of size {})",
                cocycle,
                rep.group().order(),
                rep.dim()
            );
            Ok(json!({"status": "ok", "rep": RepDoc::from_rep(&rep)}))
        }
        Command::Character {
            rep,
            rep_file,
            cocycle,
        } => {
            let (chi, dim) = match (rep, rep_file) {
                (Some(reference), None) => {
                    let (set, idx) = resolve_rep(&ws, &reference)?;
                    let r = set.rep(idx);
                    (r.character(), r.dim())
                }
                (None, Some(path)) => {
                    let key = cocycle.expect("clap enforces --cocycle with --rep-file");
                    let c = ws.cocycle(&key)?;
                    let doc: RepDoc = parse_json(&path)?;
                    let r = doc.into_rep(c, &tol)?;
                    (r.character(), r.dim())
                }
                _ => {
                    return Err(CliError::Schema(
                        "provide exactly one of --rep or --rep-file".to_string(),
                    ))
                }
            };
            Ok(json!({
                "status": "ok",
                "dim": dim,
                "values": vector_to_json(chi.values()),
            }))
        }
        Command::Transform { variant, f, irr } => {
            let set = ws.irreducibles(&irr)?;
            let vector = read_vector(&f)?;
            let image = if variant {
                fourier::forward_variant(&vector, &set)?
            } else {
                fourier::forward(&vector, &set)?
            };
            Ok(json!({"status": "ok", "image": FourierImageDoc::from_image(&image)}))
        }
        Command::InverseTransform { image, irr } => {
            let set = ws.irreducibles(&irr)?;
            let doc: FourierImageDoc = parse_json(&image)?;
            let image = doc.into_image(Arc::clone(&set))?;
            Ok(json!({"status": "ok", "values": vector_to_json(&fourier::inverse(&image))}))
        }
        Command::Convolve { nu, mu, cocycle } => {
            let c = ws.cocycle(&cocycle)?;
            let nu = read_vector(&nu)?;
            let mu = read_vector(&mu)?;
            let n = c.order();
            if nu.len() != n || mu.len() != n {
                return Err(CliError::Validation(format!(
                    "vectors must have length {n}, got {} and {}",
                    nu.len(),
                    mu.len()
                )));
            }
            let conv = galpha::alpha_convolve(&nu, &mu, &c);
            Ok(json!({"status": "ok", "values": vector_to_json(&conv)}))
        }
        Command::Adjoint { nu, cocycle } => {
            let c = ws.cocycle(&cocycle)?;
            let nu = read_vector(&nu)?;
            if nu.len() != c.order() {
                return Err(CliError::Validation(format!(
                    "vector must have length {}, got {}",
                    c.order(),
                    nu.len()
                )));
            }
            let adj = galpha::star_adjoint(&nu, &c)?;
            Ok(json!({"status": "ok", "values": vector_to_json(&adj)}))
        }
        Command::Blockdiag { matrix } => {
            let doc: crate::json::MatrixDoc = parse_json(&matrix)?;
            let m = ws.load_matrix(doc)?;
            let set = ws.irreducibles_for(m.cocycle())?;
            let e = DiagonalizerE::build(Arc::clone(&set), &tol)?;
            let blocks = blockdiag::block_diagonalize(&m, &e, &tol)?;
            let labels: Vec<String> = set
                .reps()
                .iter()
                .enumerate()
                .flat_map(|(idx, rep)| {
                    std::iter::repeat_n(set.label(idx).to_string(), rep.dim())
                })
                .collect();
            let blocks: Vec<Value> = labels
                .iter()
                .zip(&blocks)
                .map(|(label, block)| json!({"rho": label, "matrix": matrix_to_json(block)}))
                .collect();
            Ok(json!({"status": "ok", "blocks": blocks}))
        }
        Command::Det { matrix } => {
            let doc: crate::json::MatrixDoc = parse_json(&matrix)?;
            let m = ws.load_matrix(doc)?;
            let set = ws.irreducibles_for(m.cocycle())?;
            let det = blockdiag::determinant(&m, &set)?;
            eprintln!("det = {det}");
            Ok(json!({"status": "ok", "det": [det.re, det.im]}))
        }
        Command::Rank { matrix } => {
            let doc: crate::json::MatrixDoc = parse_json(&matrix)?;
            let m = ws.load_matrix(doc)?;
            let set = ws.irreducibles_for(m.cocycle())?;
            let cert = blockdiag::rank(&m, &set, &tol)?;
            let blocks: Vec<Value> = cert
                .blocks
                .iter()
                .map(|(label, block_rank, dim)| {
                    json!({"rho": label, "rank": block_rank, "dim": dim})
                })
                .collect();
            Ok(json!({"status": "ok", "rank": cert.rank, "blocks": blocks}))
        }
        Command::Gramian { rep, v } => {
            let (set, idx) = resolve_rep(&ws, &rep)?;
            let vector = read_vector(&v)?;
            let gramian = frames::gramian_of_orbit(set.rep(idx), &vector, &tol)?;
            let (key, _) = rep.rsplit_once('/').expect("validated above");
            let (group_name, _) = key.split_once(':').unwrap_or((key, ""));
            Ok(json!({
                "status": "ok",
                "matrix": crate::json::MatrixDoc::from_matrix(
                    gramian.matrix(),
                    group_name,
                    CocycleRef::Name(key.to_string()),
                ),
            }))
        }
        Command::Tightcheck { matrix } => {
            let (gramian, set) = load_gramian(&ws, &matrix, &tol)?;
            let report = frames::is_tight(&gramian, &set, &tol)?;
            eprintln!(
                "tight: {} (idempotent defect {:.3e}, hermitian defect {:.3e})",
                report.tight, report.max_idempotent_defect, report.max_hermitian_defect
            );
            Ok(json!({
                "status": "ok",
                "tight": report.tight,
                "failing": report.failing,
                "max_idempotent_defect": report.max_idempotent_defect,
                "max_hermitian_defect": report.max_hermitian_defect,
            }))
        }
        Command::Classify { matrix } => {
            let (gramian, set) = load_gramian(&ws, &matrix, &tol)?;
            let class = frames::classify(&gramian, &set, &tol)?;
            let blocks: Vec<Value> = class
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "rho": b.label,
                        "zero": b.zero,
                        "rank": b.rank,
                        "is_projection": b.is_projection,
                        "scalar": b.scalar.map(|s| [s.re, s.im]),
                    })
                })
                .collect();
            Ok(json!({"status": "ok", "class": class.tag.as_str(), "blocks": blocks}))
        }
        Command::Construct { psd, matrix } => {
            let (gramian, set) = load_gramian(&ws, &matrix, &tol)?;
            let constructed = if psd {
                frames::construct_from_psd(&gramian, &set, &tol)?
            } else {
                frames::construct_frame(&gramian, &set, &tol)?
            };
            eprintln!(
                "reconstructed frame in dimension {} with residual {:.3e}",
                constructed.vector.total_dim(),
                constructed.residual
            );
            Ok(json!({
                "status": "ok",
                "frame": FrameVectorDoc::from_frame_vector(&constructed.vector),
                "residual": constructed.residual,
                "total_dim": constructed.vector.total_dim(),
            }))
        }
        Command::Examples { name } => {
            let key = format!("{name}:alpha");
            let set = ws.irreducibles(&key)?;
            let cocycle = set.cocycle();
            Ok(json!({
                "status": "ok",
                "group": GroupDoc::from_group(set.group()),
                "cocycle": CocycleDoc::from_cocycle(cocycle, Some(&name)),
                "irreducibles": IrreducibleSetDoc::from_set(&set),
            }))
        }
        Command::Selftest => {
            let results = selftest::run_all();
            let mut all = true;
            for r in &results {
                eprintln!("{}", r.line());
                all &= r.passed;
            }
            let payload: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                        "millis": r.millis as u64,
                    })
                })
                .collect();
            if all {
                Ok(json!({"status": "ok", "criteria": payload}))
            } else {
                Err(CliError::Validation(
                    serde_json::to_string(&json!({"criteria": payload}))
                        .unwrap_or_else(|_| "selftest failed".to_string()),
                ))
            }
        }
    }
}

fn run_validate(
    ws: &Workspace,
    kind: ValidateKind,
    file: &Path,
    group: Option<String>,
    cocycle: Option<String>,
    tol: &ToleranceConfig,
) -> Result<Value, CliError> {
    match kind {
        ValidateKind::Group => {
            let doc: GroupDoc = parse_json(file)?;
            let g = doc.into_group()?;
            Ok(json!({
                "status": "ok",
                "kind": "group",
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "conjugacy_classes": g.conjugacy_classes().len(),
            }))
        }
        ValidateKind::Cocycle => {
            let doc: CocycleDoc = parse_json(file)?;
            let g = match (&doc.group, group) {
                (crate::json::GroupRef::Inline(inline), _) => Arc::new(inline.clone().into_group()?),
                (crate::json::GroupRef::Name(name), _) => ws.group(name)?,
            };
            let c = doc.into_cocycle(g, tol)?;
            Ok(json!({
                "status": "ok",
                "kind": "cocycle",
                "unitary": c.is_unitary(),
                "exact": c.is_exact(),
                "trivial": c.is_trivial(),
                "alpha_regular_classes": c.alpha_regular_class_count(tol),
            }))
        }
        ValidateKind::Rep => {
            let key = cocycle.ok_or_else(|| {
                CliError::Schema("validating a rep needs --cocycle KEY context".to_string())
            })?;
            let c = ws.cocycle(&key)?;
            let doc: RepDoc = parse_json(file)?;
            let rep = doc.into_rep(c, tol)?;
            let report = rep.validate(tol)?;
            Ok(json!({
                "status": "ok",
                "kind": "rep",
                "dim": rep.dim(),
                "unitary": rep.is_unitary(),
                "max_product_defect": report.max_product_defect,
                "irreducible": rep.is_irreducible().ok(),
            }))
        }
        ValidateKind::Irrset => {
            let key = cocycle.ok_or_else(|| {
                CliError::Schema("validating an irrset needs --cocycle KEY context".to_string())
            })?;
            let c = ws.cocycle(&key)?;
            let doc: IrreducibleSetDoc = parse_json(file)?;
            let set = doc.into_set(c, tol)?;
            let report = set.validate_complete(tol)?;
            Ok(json!({
                "status": "ok",
                "kind": "irrset",
                "members": set.len(),
                "sum_of_dim_squares": report.sum_of_dim_squares,
                "max_coordinate_defect": report.max_coordinate_defect,
            }))
        }
    }
}

/// Parses and runs an argument vector, returning the exit code and the JSON
/// payload that `main` prints to stdout. Exposed so tests can drive the CLI
/// exactly as the binary does.
pub fn run<I, T>(args: I) -> (i32, Value)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                eprintln!("{e}");
                return (0, json!({"status": "ok"}));
            }
            return (2, json!({"status": "error", "kind": "usage", "message": e.to_string()}));
        }
    };
    match run_command(cli) {
        Ok(value) => (0, value),
        Err(e) => (e.exit_code(), e.to_value()),
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let (code, value) = run(std::env::args_os());
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    code
}
