//! The `blockcalc` command line. Every subcommand prints JSON on success.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use blockcalc_core::arith::{rat, totient};
use blockcalc_core::classify::{
    albert_filter, building_block_check, dimension_bookkeeping, is_gl2_type, AlbertType, EndomorphismDatum,
};
use blockcalc_core::cohom::{adjust_splitting_map, class_order, split_cocycle, splitting_field_of};
use blockcalc_core::csa::{
    format_places, grunwald_wang_search, hilbert_symbol, min_cyclotomic_splitting, LocalDegreeConstraint, PlaceQ,
    QuaternionAlgebraQ,
};
use blockcalc_core::pipeline::{run_pipeline_with, PipelineOptions, DEFAULT_SEARCH_CAP};
use blockcalc_core::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::InputError;
use crate::json::{rational, CyclotomicJson};
use crate::report::{emit_report, ReportFormat};
use crate::parse_cocycle;
use crate::parse_datum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_SEARCH_BOUND: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "blockcalc", version, about = "Cocycles, splitting maps and building blocks over Q")]
pub struct Cli {
    /// Upper bound for conductor and coefficient searches.
    #[arg(long, global = true, env = "BLOCKCALC_SEARCH_CAP", default_value_t = DEFAULT_SEARCH_CAP)]
    pub search_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct CocycleInput {
    /// Cocycle JSON file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the full construction on an isogeny datum.
    Pipeline {
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long = "out")]
        output: Option<PathBuf>,
        /// Aligned text instead of JSON.
        #[arg(long)]
        human: bool,
    },
    /// Order of the cohomology class of a cocycle, with a witness.
    CocycleOrder(CocycleInput),
    /// A splitting map for a cocycle of class order at most 2.
    Split {
        #[command(flatten)]
        input: CocycleInput,
        /// Require every value to lie in Q(zeta_W).
        #[arg(long)]
        conductor: Option<u64>,
    },
    /// Twist a splitting map until zeta_n lies in E_beta.
    Adjust {
        #[command(flatten)]
        input: CocycleInput,
        #[arg(long)]
        n: u64,
    },
    /// Local Hilbert symbol (a, b)_v.
    #[command(allow_negative_numbers = true)]
    Hilbert { a: String, b: String, v: String },
    /// Ramified places and Schur index of (a, b).
    #[command(allow_negative_numbers = true)]
    Ramify { a: String, b: String },
    /// Least cyclotomic field splitting (a, b).
    #[command(allow_negative_numbers = true)]
    SplitField { a: String, b: String },
    /// Cyclic abelian field of degree n with prescribed local degrees.
    Gw {
        #[arg(long = "deg")]
        deg: u64,
        /// place:divisor, for example 2:2 or inf:2.
        #[arg(long = "at", required = true)]
        at: Vec<String>,
    },
    /// Building-block and Albert verdicts for an endomorphism datum.
    Classify {
        #[arg(long)]
        f: u64,
        #[arg(long)]
        t: u64,
        #[arg(long = "type")]
        albert_type: String,
        #[arg(long = "dimB")]
        dim_b: u64,
        #[arg(long)]
        real_embedding: bool,
        /// Center totally real; defaults to true except for type IV.
        #[arg(long)]
        totally_real: Option<bool>,
        /// Degree of a splitting field, for the dimension bookkeeping.
        #[arg(long = "n-e")]
        n_e: Option<u64>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Input(InputError::Core(e)) | CliError::Core(e) => e.root(),
            CliError::Input(_) => return EXIT_INPUT,
        };
        match core {
            Error::UnsupportedClassOrder(_) => EXIT_UNSUPPORTED,
            Error::SearchBoundExceeded { .. } => EXIT_SEARCH_BOUND,
            Error::PipelineInvariantViolation { .. } => EXIT_FAILURE,
            _ => EXIT_INPUT,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(InputError::from)
}

fn algebra(a: &str, b: &str) -> Result<QuaternionAlgebraQ, CliError> {
    let (a, b) = (rational(a, "a")?, rational(b, "b")?);
    QuaternionAlgebraQ::new(a, b).map_err(|e| InputError::schema("a, b", e.to_string()).into())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// Executes a parsed command and returns its standard output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let cap = cli.search_cap;
    match &cli.command {
        Command::Pipeline { input, output, human } => {
            let d = parse_datum(&read(input)?)?;
            let r = run_pipeline_with(&d, &PipelineOptions { search_cap: cap })?;
            let text = emit_report(&r, if *human { ReportFormat::Human } else { ReportFormat::Json });
            match output {
                Some(p) => {
                    std::fs::write(p, &text).map_err(InputError::from)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::CocycleOrder(i) => {
            let c = parse_cocycle(&read(&i.input)?)?;
            let co = class_order(&c)?;
            let witness: Vec<String> = co.witness.iter().map(|v| v.display(c.basis()).to_string()).collect();
            Ok(pretty(&json!({"order": co.order, "witness": witness})))
        }
        Command::Split { input, conductor } => {
            let c = parse_cocycle(&read(&input.input)?)?;
            let beta = split_cocycle(&c, *conductor)?;
            let values: Vec<CyclotomicJson> = beta.values().iter().map(CyclotomicJson::from_element).collect();
            Ok(pretty(&json!({
                "group_order": beta.group().order(),
                "extended": beta.is_extended(),
                "projection": beta.projection(),
                "values": values,
            })))
        }
        Command::Adjust { input, n } => {
            let c = parse_cocycle(&read(&input.input)?)?;
            let co = class_order(&c)?;
            let beta = split_cocycle(&c, None)?;
            let adj = adjust_splitting_map(&beta, *n, co.order, &co.witness, c.basis())?;
            let field = splitting_field_of(&adj.beta)?;
            let values: Vec<CyclotomicJson> = adj.beta.values().iter().map(CyclotomicJson::from_element).collect();
            Ok(pretty(&json!({
                "m": co.order,
                "r": adj.r,
                "e": adj.e,
                "changed": adj.changed(),
                "chi_order": adj.chi.order(),
                "epsilon_order": adj.epsilon.order(),
                "E_beta_degree": field.degree,
                "contains_zeta_n": field.contains_zeta(*n),
                "group_order": adj.beta.group().order(),
                "values": values,
            })))
        }
        Command::Hilbert { a, b, v } => {
            let (qa, qb) = (rational(a, "a")?, rational(b, "b")?);
            let place: PlaceQ = v.parse().map_err(|e: Error| InputError::schema("v", e.to_string()))?;
            if qa == rat(0) || qb == rat(0) {
                return Err(InputError::schema("a, b", "Hilbert symbol needs nonzero arguments").into());
            }
            Ok(pretty(&json!({"symbol": hilbert_symbol(&qa, &qb, place)})))
        }
        Command::Ramify { a, b } => {
            let alg = algebra(a, b)?;
            let r = alg.ramification_data()?;
            Ok(pretty(&json!({"ramified": format_places(&r.places), "schur_index": r.schur_index})))
        }
        Command::SplitField { a, b } => {
            let alg = algebra(a, b)?;
            let m = min_cyclotomic_splitting(&alg, cap)?;
            Ok(pretty(&json!({"min_cyclotomic": m, "degree": totient(m)})))
        }
        Command::Gw { deg, at } => {
            let mut constraints = Vec::new();
            for (i, s) in at.iter().enumerate() {
                let path = format!("--at[{}]", i);
                let (p, k) = s.split_once(':').ok_or_else(|| InputError::schema(&path, "expected place:divisor"))?;
                let place: PlaceQ = p.parse().map_err(|e: Error| InputError::schema(&path, e.to_string()))?;
                let k: u64 = k.trim().parse().map_err(|_| InputError::schema(&path, "divisor is not an integer"))?;
                constraints.push(LocalDegreeConstraint::new(place, k)?);
            }
            let field = grunwald_wang_search(&constraints, *deg, cap)?;
            let local: Vec<Value> = constraints
                .iter()
                .map(|c| json!({"place": c.place.to_string(), "required": c.divisor, "local_degree": field.local_degree(c.place)}))
                .collect();
            Ok(pretty(&json!({
                "modulus": field.modulus(),
                "generators": field.generators(),
                "degree": field.degree(),
                "cyclic": field.is_cyclic(),
                "local_degrees": local,
            })))
        }
        Command::Classify { f, t, albert_type, dim_b, real_embedding, totally_real, n_e } => {
            let ty: AlbertType = albert_type.parse().map_err(|e: Error| InputError::schema("--type", e.to_string()))?;
            let d = EndomorphismDatum::new(*f, *t, ty, totally_real.unwrap_or(ty != AlbertType::IV), *dim_b)?;
            let av = albert_filter(&d, *real_embedding);
            let mut out = json!({
                "building_block": building_block_check(&d),
                "albert": {
                    "accepted": av.accepted,
                    "unconstrained": av.unconstrained,
                    "rule": av.rule,
                    "reason": av.reason,
                },
            });
            if let Some(n_e) = n_e {
                let s = dimension_bookkeeping(&d, *n_e)?;
                out["shape"] = json!({"dim_A": s.dim_a, "n": s.n, "field_degree": s.field_degree, "gl2_type": is_gl2_type(&s)});
            }
            Ok(pretty(&out))
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "blockcalc: {}", e);
            e.exit_code()
        }
    }
}
