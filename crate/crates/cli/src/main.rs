//! `normcross`: decide whether a divisor germ `{h = 0}` at the origin has
//! normal crossings, and inspect the certificates behind the answer.

mod commands;
mod corpus;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Ctx, IdealChoice, Output};
use normcross::logres::DEFAULT_SEED;
use normcross::poly::MonomialOrder;

const AFTER_HELP: &str = "\
Input files contain `key: value` lines:
  ring: x, y, z
  h: x*y*(x+y)*(x+y*z)
  factors: x, y, x+y, x+y*z        (optional)
  order: degrevlex                 (optional, used by `gb`)
  form: a1, ..., an | denominator  (optional, repeatable; `h` means the equation)
  field: a1, ..., an               (optional, repeatable)
  expect: key=value                (optional, read by `corpus`)

Exit codes: 0 yes / normal crossing, 1 no, 2 undecided, 3 input error, 4 internal error.

NORMCROSS_SEED sets the seed of the generic linear coordinate change used when
no coordinate gives an admissible residue denominator (default 1852015219).";

#[derive(Parser)]
#[command(name = "normcross", version, about = "Normal crossing tests for divisor germs over the rationals", after_help = AFTER_HELP)]
struct Cli {
    /// Emit a versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include per-step wall times (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    /// Seed for generic coordinate changes, decimal or 0x-prefixed hex.
    #[arg(long, global = true, env = "NORMCROSS_SEED", value_name = "SEED")]
    seed: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FileArgs {
    /// Input file, or `-` for standard input.
    file: PathBuf,
    /// Analyze at the point (a1, ..., an) instead of the origin.
    #[arg(long, value_name = "a1,...,an", allow_hyphen_values = true)]
    translate: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full normal crossing decision procedure.
    #[command(visible_alias = "is-nc")]
    Analyze(FileArgs),
    /// Saito's freeness criterion at the origin.
    IsFree(FileArgs),
    /// Radicality of the Jacobian ideal (h) + J_h at the origin.
    IsRadical(FileArgs),
    /// Groebner or standard basis of the singular locus or Jacobian ideal.
    Gb {
        #[command(flatten)]
        file: FileArgs,
        /// lex, degrevlex or ds (local); defaults to the file's `order:` or degrevlex.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value = "singular-locus")]
        ideal: IdealChoice,
    },
    /// Residues of the dual logarithmic basis and supplied forms on each component.
    Residues(FileArgs),
    /// Check supplied (or computed) bases for closed forms or commuting fields.
    VerifyBasis(FileArgs),
    /// Run every fixture of a corpus directory against its `expect:` lines.
    Corpus {
        /// Fixture directory (defaults to the bundled corpus).
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn parse_seed(s: &str) -> Result<u64, CliError> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|_| CliError::new("invalid-seed", format!("invalid seed '{s}'")))
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Analyze(_) => "analyze",
        Command::IsFree(_) => "is-free",
        Command::IsRadical(_) => "is-radical",
        Command::Gb { .. } => "gb",
        Command::Residues(_) => "residues",
        Command::VerifyBasis(_) => "verify-basis",
        Command::Corpus { .. } => "corpus",
    }
}

fn dispatch(cli: &Cli, ctx: &Ctx) -> Result<Output, CliError> {
    let file_verb = |args: &FileArgs| -> Result<commands::Prepared, CliError> {
        let req = commands::read_request(&args.file)?;
        commands::prepare(req, args.translate.as_deref())
    };
    match &cli.command {
        Command::Analyze(a) => commands::analyze(ctx, file_verb(a)?),
        Command::IsFree(a) => commands::is_free(ctx, file_verb(a)?),
        Command::IsRadical(a) => commands::is_radical(ctx, file_verb(a)?),
        Command::Gb { file, order, ideal } => {
            let order = match order {
                Some(o) => Some(match o.trim() {
                    "lex" => MonomialOrder::Lex,
                    "degrevlex" => MonomialOrder::DegRevLex,
                    "ds" => MonomialOrder::Ds,
                    other => {
                        return Err(CliError::new(
                            "unknown-order",
                            format!("unknown order '{other}' (expected lex, degrevlex or ds)"),
                        ))
                    }
                }),
                None => None,
            };
            commands::gb(ctx, file_verb(file)?, order, *ideal)
        }
        Command::Residues(a) => commands::residues(ctx, file_verb(a)?),
        Command::VerifyBasis(a) => commands::verify_basis(ctx, file_verb(a)?),
        Command::Corpus { dir } => {
            let dir = dir
                .clone()
                .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")));
            corpus::run(ctx, &dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = name(&cli.command);
    let mut ctx = Ctx {
        json: cli.json,
        timings: cli.timings,
        seed: DEFAULT_SEED,
    };
    let out = match cli.seed.as_deref().map(parse_seed).transpose() {
        Ok(seed) => {
            ctx.seed = seed.unwrap_or(DEFAULT_SEED);
            dispatch(&cli, &ctx).unwrap_or_else(|e| commands::error_output(&ctx, command, &e))
        }
        Err(e) => commands::error_output(&ctx, command, &e),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit as u8)
}
