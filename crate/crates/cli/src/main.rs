//! `polyad`: batch verification of structure files.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyad_core::fincat::{arrow_category, FunctorData};
use polyad_core::hopfstruct::{
    decompose_hopf_module, decompose_hopf_representation, free_coinvariants_iso, free_hopf_module,
    module_coinvariants, representation_coinvariants, validate_hopf_module, validate_hopf_representation,
    HopfModule, HopfRepresentation,
};
use polyad_core::io::{self, AnyStructure, IoError, Structure, EXAMPLE_NAMES};
use polyad_core::lift::lift_fundamental_check;
use polyad_core::modrep::{restrict_module, validate_module, validate_representation};
use polyad_core::random::{random_hopf_representation, rng};
use polyad_core::rmatrix::{braided_restriction_check, check_rmatrix_shapes, validate_rmatrix};
use polyad_core::wrapup::{wrap, wrapped_fusion};
use polyad_core::{par, Check, Field, FieldSpec, PolyadError, Report};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "polyad", version, about = "Exact checks for Hopf polyalgebras and their representations")]
struct Cli {
    /// Field to work over; must agree with the file when the file names one.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Field used when neither the file nor --field names one.
    #[arg(long, global = true, env = "POLYAD_FIELD", default_value = "Q", hide_env_values = true)]
    default_field: FieldSpec,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Bialgebra,
    Hopf,
    Transitive,
    FusionIdentities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Rep,
    Mod,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the polybialgebra and every attached module, representation and R-matrix shape.
    Validate { file: PathBuf },
    /// Check one property of the polybialgebra.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        file: PathBuf,
    },
    /// Build the wrapped total algebra and export it as a structure file.
    Wrapup {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invertibility of the wrapped left fusion operator on free objects.
    WrappedFusion {
        file: PathBuf,
        /// Per-object dimensions of X, comma separated (default all 1).
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        /// Per-object dimensions of Y (default: same as X).
        #[arg(long, value_delimiter = ',')]
        ydims: Vec<usize>,
    },
    /// Lifted products, units and tensor functors on bimodules.
    LiftCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Coinvariant parts of attached Hopf modules and representations.
    Coinv {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
    },
    /// Decompose a Hopf representation or Hopf module through its coinvariants.
    Decompose {
        #[arg(value_enum)]
        kind: Kind,
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
    },
    /// Validate an R-matrix and the braiding it induces.
    Braiding {
        file: PathBuf,
        /// `attached` (the file's own R-matrix) or a path to a file of `[[rmatrix]]` tables.
        #[arg(long, default_value = "attached")]
        rmatrix: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Pull back along a functor and re-check the restricted structures.
    Restrict {
        file: PathBuf,
        /// `identity`, `arrow`, `point:<object>` or a path to a functor file.
        #[arg(long)]
        functor: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Fixture files.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Write the structure file of a named fixture.
    Generate {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List fixture names.
    List,
}

enum Failure {
    Malformed(String),
    Math(PolyadError),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Structure(p) => p.into(),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

impl From<PolyadError> for Failure {
    fn from(e: PolyadError) -> Self {
        match e {
            PolyadError::ShapeMismatch(_)
            | PolyadError::NotComposable { .. }
            | PolyadError::Category(_)
            | PolyadError::Functor(_)
            | PolyadError::Invalid(_) => Failure::Malformed(e.to_string()),
            other => Failure::Math(other),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.sequential {
        par::set_parallel(false);
    }
    let (code, report) = match execute(&cli) {
        Ok(None) => (0, None),
        Ok(Some(r)) => (if r.passed() { 0 } else { 1 }, Some(r)),
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            (2, None)
        }
        Err(Failure::Math(e)) => {
            let mut r = Report::new("polyad");
            r.push(Check::fail(error_kind(&e), e.to_string()));
            (1, Some(r))
        }
    };
    if let Some(r) = report {
        if cli.json {
            println!("{}", r.to_json());
        } else {
            println!("{r}");
        }
    }
    ExitCode::from(code)
}

fn error_kind(e: &PolyadError) -> &'static str {
    match e {
        PolyadError::NotGroupoid(_) => "NotGroupoid",
        PolyadError::NotConnected => "NotConnected",
        PolyadError::NotActionType(_) => "NotActionType",
        PolyadError::MiddleMismatch => "MiddleMismatch",
        PolyadError::HypothesisFailure(_) => "HypothesisFailure",
        PolyadError::RMatrixInvalid(_) => "RMatrixInvalid",
        PolyadError::Linalg(_) => "NotInvertible",
        _ => "error",
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("cannot read `{}`: {e}", path.display())))
}

fn execute(cli: &Cli) -> Result<Option<Report>, Failure> {
    let file = match &cli.command {
        Command::Examples { action } => return examples(cli, action),
        Command::Validate { file }
        | Command::Check { file, .. }
        | Command::Wrapup { file, .. }
        | Command::WrappedFusion { file, .. }
        | Command::LiftCheck { file, .. }
        | Command::Coinv { file, .. }
        | Command::Decompose { file, .. }
        | Command::Braiding { file, .. }
        | Command::Restrict { file, .. } => file,
    };
    let text = read_text(file)?;
    match io::parse_structure(&text, cli.default_field, cli.field)? {
        AnyStructure::Rationals(s) => run(cli, &s),
        AnyStructure::Prime(s) => run(cli, &s),
    }
    .map(Some)
}

/// `None` when the output is the fixture file itself.
fn examples(cli: &Cli, action: &ExamplesAction) -> Result<Option<Report>, Failure> {
    match action {
        ExamplesAction::List => {
            let mut r = Report::new("fixtures");
            for n in EXAMPLE_NAMES {
                r.note(*n);
            }
            Ok(Some(r))
        }
        ExamplesAction::Generate { name, out } => {
            let field = cli.field.unwrap_or(cli.default_field);
            let text = io::generate_example(name, field)?;
            match out {
                Some(p) => {
                    std::fs::write(p, &text).map_err(|e| Failure::Malformed(format!("cannot write `{}`: {e}", p.display())))?;
                    let mut r = Report::new(format!("fixture {name}"));
                    r.note(format!("written to {}", p.display()));
                    Ok(Some(r))
                }
                None => {
                    print!("{text}");
                    Ok(None)
                }
            }
        }
    }
}

fn dims_or_ones(dims: &[usize], n: usize) -> Result<Vec<usize>, Failure> {
    match dims.len() {
        0 => Ok(vec![1; n]),
        l if l == n => Ok(dims.to_vec()),
        l => Err(Failure::Malformed(format!("expected {n} dimensions (one per object), got {l}"))),
    }
}

fn hopf_modules<F: Field>(s: &Structure<F>) -> Vec<(String, HopfModule<F>)> {
    s.modules
        .iter()
        .filter_map(|m| {
            let coactions = m.coactions.clone()?;
            Some((m.name.clone(), HopfModule { module: m.module.clone(), coactions }))
        })
        .collect()
}

fn hopf_representations<F: Field>(s: &Structure<F>) -> Vec<(String, HopfRepresentation<F>)> {
    s.representations
        .iter()
        .filter_map(|r| {
            let coactions = r.coactions.clone()?;
            Some((r.name.clone(), HopfRepresentation { rep: r.rep.clone(), coactions }))
        })
        .collect()
}

fn run<F: Field>(cli: &Cli, s: &Structure<F>) -> Outcome {
    let b = &s.bialgebra;
    let cat = b.cat();
    let title = s.title.clone().unwrap_or_else(|| "structure".into());
    match &cli.command {
        Command::Validate { .. } => {
            let mut r = Report::new(format!("validate {title}"));
            r.absorb("algebra", b.algebra().validate());
            r.absorb("bialgebra", b.validate());
            for m in &s.modules {
                r.absorb(&format!("module {}", m.name), validate_module(b, &m.module)?);
            }
            for (name, hm) in hopf_modules(s) {
                r.absorb(&format!("Hopf module {name}"), validate_hopf_module(b, &hm)?);
            }
            for w in &s.representations {
                r.absorb(&format!("representation {}", w.name), validate_representation(b, &w.rep)?);
            }
            for (name, hr) in hopf_representations(s) {
                r.absorb(&format!("Hopf representation {name}"), validate_hopf_representation(b, &hr)?);
            }
            if let Some(rm) = &s.rmatrix {
                check_rmatrix_shapes(b, rm)?;
                r.push(Check::pass("R-matrix shapes"));
            }
            Ok(r)
        }
        Command::Check { property, .. } => Ok(match property {
            Property::Bialgebra => b.validate(),
            Property::Hopf => {
                let mut r = b.is_hopf().to_report(cat);
                if let Some(s) = b.antipode() {
                    r.push(Check::pass("antipode from the inverse left fusion operator").with_witness("S", &s));
                }
                r
            }
            Property::Transitive => b.is_transitive(),
            Property::FusionIdentities => b.check_fusion_identities(&[(1, 1, 1), (2, 1, 2)]),
        }),
        Command::Wrapup { out, .. } => {
            let t = wrap(b);
            let mut r = t.validate();
            let text = io::write_total_algebra(&t, &format!("wrap-up of {title}"))?;
            match out {
                Some(p) => {
                    std::fs::write(p, &text).map_err(|e| Failure::Malformed(format!("cannot write `{}`: {e}", p.display())))?;
                    r.note(format!("total algebra of dimension {} written to {}", t.dim(), p.display()));
                }
                None if !cli.json => println!("{text}"),
                None => {}
            }
            Ok(r)
        }
        Command::WrappedFusion { dims, ydims, .. } => {
            let x = dims_or_ones(dims, cat.num_objects())?;
            let y = if ydims.is_empty() { x.clone() } else { dims_or_ones(ydims, cat.num_objects())? };
            Ok(wrapped_fusion(b, &x, &y)?.to_report(cat))
        }
        Command::LiftCheck { max_dim, .. } => Ok(lift_fundamental_check(b, *max_dim).to_report(b)),
        Command::Coinv { dims, .. } => {
            let mut r = Report::new(format!("coinvariants over {title}"));
            for (name, hm) in hopf_modules(s) {
                let c = module_coinvariants(b, &hm)?;
                r.push(Check::pass(format!("Hopf module {name}")).with_detail(format!("coinvariant dims {:?}", c.dims())));
            }
            for (name, hr) in hopf_representations(s) {
                let c = representation_coinvariants(b, &hr)?;
                r.push(
                    Check::pass(format!("Hopf representation {name}")).with_detail(format!("coinvariant dims {:?}", c.dims())),
                );
            }
            let d = dims_or_ones(dims, cat.num_objects())?;
            r.absorb("free", free_coinvariants_iso(b, &d)?);
            Ok(r)
        }
        Command::Decompose { kind: Kind::Rep, dims, .. } => {
            let mut list = hopf_representations(s);
            if list.is_empty() {
                let d = dims_or_ones(dims, cat.num_objects())?;
                list.push(("random".into(), random_hopf_representation(b, &d, &mut rng(cli.seed))));
            }
            let mut r = Report::new(format!("Hopf representation decomposition over {title}"));
            for (name, hr) in list {
                r.absorb(&name, decompose_hopf_representation(b, &hr)?.report);
            }
            Ok(r)
        }
        Command::Decompose { kind: Kind::Mod, dims, .. } => {
            let mut list = hopf_modules(s);
            if list.is_empty() {
                let d = dims_or_ones(dims, cat.num_objects())?;
                list.push(("free".into(), free_hopf_module(b, &d)));
            }
            let mut r = Report::new(format!("Hopf module decomposition over {title}"));
            for (name, hm) in list {
                r.absorb(&name, decompose_hopf_module(b, &hm)?);
            }
            Ok(r)
        }
        Command::Braiding { rmatrix, max_dim, .. } => {
            let rm = load_rmatrix(s, rmatrix)?;
            Ok(validate_rmatrix(b, &rm, *max_dim, cli.seed)?)
        }
        Command::Restrict { functor, max_dim, .. } => {
            let f = load_functor(cat, functor)?;
            let pulled = b.pullback(&f)?;
            let mut r = Report::new(format!("restriction of {title} along {functor}"));
            r.absorb("pulled-back bialgebra", pulled.validate());
            for m in &s.modules {
                let x = restrict_module(&m.module, &f);
                r.absorb(&format!("restricted module {}", m.name), validate_module(&pulled, &x)?);
            }
            if let Some(rm) = &s.rmatrix {
                r.absorb("", braided_restriction_check(b, rm, &f, *max_dim)?);
            }
            Ok(r)
        }
        Command::Examples { .. } => unreachable!("handled before parsing"),
    }
}

fn load_rmatrix<F: Field>(s: &Structure<F>, source: &str) -> Result<Vec<polyad_core::Matrix<F>>, Failure> {
    if source == "attached" {
        return s
            .rmatrix
            .clone()
            .ok_or_else(|| Failure::Malformed("the structure file has no [[rmatrix]] tables".into()));
    }
    let text = read_text(Path::new(source))?;
    Ok(io::parse_rmatrix(&text, &s.bialgebra)?)
}

fn load_functor(cat: &polyad_core::FinCategory, spec: &str) -> Result<FunctorData, Failure> {
    match spec {
        "identity" => Ok(FunctorData::identity(cat)),
        "arrow" => Ok(arrow_category(cat).1),
        _ => {
            if let Some(o) = spec.strip_prefix("point:") {
                let o = cat
                    .find_object(o)
                    .ok_or_else(|| Failure::Malformed(format!("unknown object `{o}`")))?;
                return Ok(FunctorData::point(cat, o));
            }
            let text = read_text(Path::new(spec))?;
            Ok(io::parse_functor(&text, cat)?)
        }
    }
}
