mod input;
mod output;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use subcf::notation::{format_simple_cf, format_snumber, parse_snumber, Ending};
use subcf::stream::take;
use subcf::{
    compare, convergent_stream, decimal_digits, decode_rational, encode_rational, Error,
    RationalTail, SimpleCf, SourceRegistry, StreamError,
};

use input::{parse_rational, Operand};
use output::{Format, Printer};

const DEFAULT_TERMS: usize = 10;
const DEFAULT_FUEL: usize = 10_000;

const AFTER_HELP: &str = "\
Operands:
  p/q, p                 a rational
  '(s0, s1, ..., &)'     an s-number ending in 2's forever
  '(s0, s1, ..., ...)'   a truncated s-number (only the listed quotients)
  '[a0; a1, ...]'        a simple continued fraction, optionally ending in `, ...`
  const:NAME[:ARG]       a named constant: phi, pi, log2_3, sqrt:D (the `const:` may be dropped)

Exit status: 0 ok, 2 parse error, 3 fuel or table exhausted, 4 domain error.
Tables for pi and log2_3 are read from --data-dir or $SUBCF_DATA_DIR when set.";

#[derive(Parser)]
#[command(name = "subcf", version, about = "Exact reals as subtraction continued fractions", after_help = AFTER_HELP)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Upper bound on work for streams that may not settle: quotients
    /// inspected by `compare`, 2's scanned per run by `convert --to simple`,
    /// quotients pulled by `digits` and `convergents`
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    fuel: Option<u64>,

    /// Stop `convergents` at the first bracket of width at most p/q
    #[arg(long, global = true, value_name = "P/Q")]
    eps: Option<String>,

    /// Number of rows or terms to print [default: 10]
    #[arg(long, global = true)]
    terms: Option<usize>,

    /// Directory holding pi.txt and log2_3.txt
    #[arg(long, global = true, value_name = "DIR")]
    data_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the s-number of a rational
    Encode {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Print the value of a complete s-number literal
    Decode {
        #[arg(allow_hyphen_values = true)]
        snumber: String,
    },
    /// Print the table n, R_n, L_n, A_n
    Convergents {
        #[arg(allow_hyphen_values = true)]
        operand: String,
    },
    /// Convert between simple and subtraction continued fractions
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(allow_hyphen_values = true)]
        operand: String,
    },
    /// Compare two operands; prints <, =, > or ?n
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print decimal digits certified by the brackets, truncated toward zero
    Digits {
        #[arg(allow_hyphen_values = true)]
        operand: String,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// List the named constants, or print the leading terms of one
    Const { name: Option<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Simple,
    Subtraction,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<StreamError> for Failure {
    fn from(e: StreamError) -> Self {
        Failure::Lib(e.into())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ZeroDenominator => 2,
        Error::Stream(s) if s.is_exhaustion() => 3,
        _ => 4,
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Printer::new(cli.format);
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("subcf: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Lib(e)) => {
            eprintln!("subcf: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli, out: &mut Printer) -> Result<(), Failure> {
    let registry = match &cli.data_dir {
        Some(dir) => SourceRegistry::with_builtins(Some(dir.clone())),
        None => SourceRegistry::from_env(),
    };
    let fuel = cli.fuel.map(|f| f as usize);
    let operand = |text: &str| Operand::parse(text, &registry);

    match &cli.command {
        Command::Encode { value } => {
            let x = parse_rational(value)?;
            let t = encode_rational(&x);
            out.record(
                || t.to_string(),
                || json!({ "value": x.to_string(), "snumber": t.to_string(), "prefix": strings(t.prefix()) }),
            )?;
        }
        Command::Decode { snumber } => {
            let (quotients, ending) = parse_snumber(snumber)?;
            if ending == Ending::Truncated {
                return Err(Error::Domain(
                    "a literal ending in `...` has no exact value; try `digits` or `convergents`".into(),
                )
                .into());
            }
            let t = RationalTail::new(quotients)?;
            let x = decode_rational(&t);
            out.record(
                || x.to_string(),
                || json!({ "snumber": t.to_string(), "value": x.to_string() }),
            )?;
        }
        Command::Convergents { operand: text } => {
            let eps = cli.eps.as_deref().map(parse_rational).transpose()?;
            if eps.as_ref().is_some_and(|e| !e.is_positive()) {
                return Err(Error::Domain("eps must be positive".into()).into());
            }
            let limit = cli.terms.or(if eps.is_some() { None } else { Some(DEFAULT_TERMS) });
            let mut s = operand(text)?.into_snumber();
            if let Some(f) = fuel {
                s = s.with_budget(f);
            }
            out.text_only("n  R_n  L_n  A_n")?;
            let mut stream = convergent_stream(s);
            let mut rows = 0;
            while limit.is_none_or(|l| rows < l) {
                let rec = stream.next_record()?;
                out.record(
                    || format!("{}  {}  {}  {}", rec.n, rec.right, rec.left, rec.accuracy),
                    || {
                        json!({
                            "n": rec.n,
                            "right": rec.right.to_string(),
                            "left": rec.left.to_string(),
                            "accuracy": rec.accuracy.to_string(),
                        })
                    },
                )?;
                rows += 1;
                if eps.as_ref().is_some_and(|e| rec.width() <= *e) {
                    break;
                }
            }
        }
        Command::Convert { to, operand: text } => {
            let terms = cli.terms.unwrap_or(DEFAULT_TERMS);
            let operand = operand(text)?;
            let (quotients, complete, err) = match to {
                Target::Subtraction => {
                    let s = operand.into_snumber();
                    match s.as_rational_tail() {
                        Some(t) => (t.prefix().to_vec(), true, None),
                        None => {
                            let (q, err) = take(&mut s.into_quotients(), terms);
                            (q, false, err)
                        }
                    }
                }
                Target::Simple => match operand.into_simple(fuel.unwrap_or(DEFAULT_FUEL))? {
                    SimpleCf::Finite(f) => (f.terms().to_vec(), true, None),
                    SimpleCf::Generator(mut g) => {
                        let (q, err) = take(&mut g, terms);
                        (q, false, err)
                    }
                },
            };
            if !quotients.is_empty() {
                let rendered = match to {
                    Target::Subtraction => format_snumber(&quotients, complete),
                    Target::Simple => format_simple_cf(&quotients, complete),
                };
                let target = match to {
                    Target::Subtraction => "subtraction",
                    Target::Simple => "simple",
                };
                out.record(
                    || rendered.clone(),
                    || {
                        json!({
                            "to": target,
                            "text": rendered,
                            "terms": strings(&quotients),
                            "complete": complete,
                        })
                    },
                )?;
            }
            if let Some(e) = err {
                return Err(e.into());
            }
        }
        Command::Compare { a, b } => {
            let (a, b) = (operand(a)?.into_snumber(), operand(b)?.into_snumber());
            let c = compare(a, b, fuel.unwrap_or(DEFAULT_FUEL));
            out.record(|| c.to_string(), || json!({ "result": c.to_string() }))?;
        }
        Command::Digits { operand: text, count } => {
            let s = operand(text)?.into_snumber().with_budget(fuel.unwrap_or(DEFAULT_FUEL));
            let digits = decimal_digits(s, *count as usize)?;
            out.record(|| digits.clone(), || json!({ "digits": digits }))?;
        }
        Command::Const { name: None } => {
            for source in registry.iter() {
                out.record(
                    || format!("{:<8}{}", source.name(), source.summary()),
                    || json!({ "name": source.name(), "summary": source.summary() }),
                )?;
            }
        }
        Command::Const { name: Some(name) } => {
            let spec = name.strip_prefix("const:").unwrap_or(name);
            let (terms, complete, err) = match registry.open(spec)? {
                SimpleCf::Finite(f) => (f.terms().to_vec(), true, None),
                SimpleCf::Generator(mut g) => {
                    let (t, err) = take(&mut g, cli.terms.unwrap_or(DEFAULT_TERMS));
                    (t, false, err)
                }
            };
            if !terms.is_empty() {
                out.record(
                    || format_simple_cf(&terms, complete),
                    || json!({ "name": spec, "terms": strings(&terms), "complete": complete }),
                )?;
            }
            if let Some(e) = err {
                return Err(e.into());
            }
        }
    }
    Ok(())
}
