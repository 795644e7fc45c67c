//! `hopfact`: verify twisted partial Hopf actions and build their partial
//! crossed products.
//!
//! Exit codes are a stable contract: 0 = all required checks passed,
//! 1 = a verification failure, 2 = a parse/input error, 3 = a span error
//! while expressing crossed-product elements.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfact_core::catalog;
use hopfact_core::io::render;
use hopfact_core::io::{parse_definition, DefinitionDocument, EvalContext, Value};
use hopfact_core::partial_action::Profile;
use hopfact_core::symbolic::{parse_polynomial, Parameter, Rational};
use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SPAN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hopfact",
    about = "Symbolic verifier for twisted partial Hopf actions and their crossed products",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the blocks of a definition file or catalog entry.
    Verify(VerifyArgs),
    /// Extract the crossed-product basis or emit its product table.
    Crossed(CrossedArgs),
    /// Evaluate an expression over an action (act, omega, sharp, products).
    Eval(EvalArgs),
    /// Catalog utilities.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Built-in catalog id (see `hopfact catalog list`).
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// Path to a definition file.
    #[arg(long)]
    input: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<(DefinitionDocument, String), (String, u8)> {
        match (&self.catalog, &self.input) {
            (Some(id), None) => {
                let entry = catalog::load_by_name(id)
                    .map_err(|e| (e.to_string(), EXIT_PARSE))?;
                Ok((entry.document, id.clone()))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| (format!("{path}: {e}"), EXIT_PARSE))?;
                let doc = parse_definition(&text)
                    .map_err(|e| (format!("{path}: {e}"), EXIT_PARSE))?;
                Ok((doc, path.clone()))
            }
            _ => Err((
                "exactly one of --catalog or --input is required".to_string(),
                EXIT_PARSE,
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Core,
    Crossed,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Profile {
        match p {
            ProfileArg::Core => Profile::Core,
            ProfileArg::Crossed => Profile::Crossed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// Human-readable report.
    Text,
    /// Line-delimited JSON records, one per entry.
    Jsonl,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which axioms gate the exit status: `core` requires E1-E4, `crossed`
    /// additionally requires E5-E6. All six are always reported.
    #[arg(long, value_enum, default_value = "core")]
    profile: ProfileArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    /// Sharp generators, rank and the selected basis.
    Basis,
    /// The full product table in basis coordinates.
    Table,
}

#[derive(Args)]
struct CrossedArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    emit: EmitArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Expression over basis labels, parameters, `act(h,a)`, `omega(h,l)`,
    /// `sharp(a,h)`, `+`, `-`, `*` and `^`.
    expression: String,
    /// Comma-separated parameter assignment, e.g. `k1=1,k2=2/3`.
    #[arg(long)]
    set: Option<String>,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    command: CatalogCommand,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in catalog entries.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("HOPFACT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Crossed(args) => crossed(args),
        Command::Eval(args) => eval(args),
        Command::Catalog(args) => match args.command {
            CatalogCommand::List => catalog_list(),
        },
    }
}

fn fail(message: &str, code: u8) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let (doc, source) = match args.input.load() {
        Ok(ok) => ok,
        Err((msg, code)) => return fail(&msg, code),
    };
    let profile: Profile = args.profile.into();
    let sections = render::document_verification(&doc, profile);
    let passed = render::sections_passed(&sections);
    match args.format {
        FormatArg::Text => {
            let profile_name = match profile {
                Profile::Core => "core",
                Profile::Crossed => "crossed",
            };
            let header = format!("hopfact verify: {source} (profile: {profile_name})");
            print!("{}", render::render_verify_text(&header, &sections));
        }
        FormatArg::Jsonl => {
            print!("{}", render::render_verify_records(&sections));
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}

fn crossed(args: CrossedArgs) -> ExitCode {
    let (doc, source) = match args.input.load() {
        Ok(ok) => ok,
        Err((msg, code)) => return fail(&msg, code),
    };
    let action = match doc.actions.as_slice() {
        [action] => action,
        [] => return fail(&format!("{source} defines no action"), EXIT_PARSE),
        _ => {
            return fail(
                &format!("{source} defines more than one action"),
                EXIT_PARSE,
            )
        }
    };
    // Emission requires the core profile to hold for the whole document.
    let sections = render::document_verification(&doc, Profile::Core);
    if !render::sections_passed(&sections) {
        eprintln!("error: core verification failed for {source}; run `hopfact verify` for the report");
        return ExitCode::from(EXIT_VERIFICATION);
    }
    let emit_table = matches!(args.emit, EmitArg::Table);
    let records = matches!(args.format, FormatArg::Jsonl);
    match render::crossed_emission(action, emit_table, records) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e.to_string(), EXIT_SPAN),
    }
}

fn parse_assignment(
    spec: &str,
    declared: &BTreeSet<String>,
) -> Result<BTreeMap<Parameter, Rational>, String> {
    let mut out = BTreeMap::new();
    for piece in spec.split(',').filter(|s| !s.trim().is_empty()) {
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| format!("bad assignment `{piece}`; expected name=value"))?;
        let name = name.trim();
        if !declared.contains(name) {
            return Err(format!("undeclared parameter `{name}`"));
        }
        let poly = parse_polynomial(value.trim()).map_err(|e| format!("`{piece}`: {e}"))?;
        let constant = poly
            .as_constant()
            .ok_or_else(|| format!("`{piece}`: value must be a rational constant"))?;
        out.insert(Parameter::new(name), constant);
    }
    Ok(out)
}

fn eval(args: EvalArgs) -> ExitCode {
    let (doc, source) = match args.input.load() {
        Ok(ok) => ok,
        Err((msg, code)) => return fail(&msg, code),
    };
    let parameters: BTreeSet<String> = doc.parameters.iter().cloned().collect();
    let assignment = match args.set.as_deref() {
        Some(spec) => match parse_assignment(spec, &parameters) {
            Ok(a) => a,
            Err(msg) => return fail(&msg, EXIT_PARSE),
        },
        None => BTreeMap::new(),
    };

    let action = doc.actions.first();
    let primary = match action {
        Some(a) => a.target().clone(),
        None => match doc.algebras.first() {
            Some(a) => a.clone(),
            None => match doc.hopfs.first() {
                Some(h) => h.algebra().clone(),
                None => return fail(&format!("{source} defines nothing to evaluate in"), EXIT_PARSE),
            },
        },
    };
    let secondary = action.map(|a| a.hopf_algebra().clone());
    let ctx = EvalContext {
        parameters: &parameters,
        primary: &primary,
        secondary: secondary.as_ref(),
        action,
    };
    match hopfact_core::io::eval_str(&ctx, &args.expression) {
        Ok(value) => {
            let value = specialize_value(value, &assignment);
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e.to_string(), EXIT_PARSE),
    }
}

fn specialize_value(value: Value, assignment: &BTreeMap<Parameter, Rational>) -> Value {
    if assignment.is_empty() {
        return value;
    }
    match value {
        Value::Scalar(p) => Value::Scalar(p.substitute(assignment)),
        Value::Elem(e) => Value::Elem(e.substitute(assignment)),
        Value::Tensor(t) => Value::Tensor(t.substitute(assignment)),
    }
}

fn catalog_list() -> ExitCode {
    for id in catalog::CatalogId::ALL {
        match catalog::load(id) {
            Ok(entry) => println!("{:<12} {}", id.as_str(), entry.note),
            Err(e) => return fail(&e.to_string(), EXIT_PARSE),
        }
    }
    ExitCode::SUCCESS
}
