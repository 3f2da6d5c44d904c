//! Command-line front end for [`intorder_core`].
//!
//! [`run`] executes one invocation against arbitrary output streams and
//! returns the process exit code: 0 on success, 1 when a verification fails
//! and 2 for usage or parse errors.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use intorder_core::{
    bessel_row, general_power_normal_form, generalized_triangle, normal_order, verify_equivalence,
    verify_equivalence_with_samples, word_closed_form, BesselTriangle, Block, NormalForm, Word,
};

pub use parse::{parse_word, ParseError};
pub use render::{Format, NormalFormDoc, Ordered, TriangleKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "intorder", version, about = "Normal ordering of words in x and the integration operator I")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Fold the word with the integration-by-parts rule.
    Rewrite,
    /// Evaluate the chain-sum expansion.
    ClosedForm,
    /// Run both and fail unless they agree.
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal-order a word such as "x^2 I (x I)^3".
    Order {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "rewrite")]
        method: Method,
    },
    /// Normal form of (x^lambda I^delta)^n.
    Power {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        delta: u64,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rows 0..=n of the Bessel triangle.
    Bessel {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rows 1..=n of the generalized triangle for (x^lambda I^delta)^n.
    Table {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        delta: u64,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the normal form of a word against its action on monomials.
    Verify {
        expr: String,
        /// Number of sample points x^0, x^1, ...; defaults to S + T + 1.
        #[arg(long)]
        samples: Option<u64>,
    },
}

/// The two normal-ordering routes used by `order` and `verify`.
#[derive(Debug, Clone, Copy)]
pub struct Engines {
    pub rewrite: fn(&Word) -> NormalForm,
    pub closed_form: fn(&Word) -> NormalForm,
}

impl Default for Engines {
    fn default() -> Self {
        Engines { rewrite: normal_order, closed_form: word_closed_form }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(Engines::default(), args, out, err)
}

pub fn run_with<I, T>(engines: Engines, args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(engines, cli.command) {
        Ok(Outcome { stdout, code }) => {
            let _ = out.write_all(stdout.as_bytes());
            code
        }
        Err(Failure { message, code }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Outcome {
    stdout: String,
    code: i32,
}

struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { message: message.to_string(), code: EXIT_USAGE }
    }
}

fn ok(stdout: String) -> Result<Outcome, Failure> {
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn parse_expr(expr: &str) -> Result<Word, Failure> {
    parse_word(expr).map_err(|e| Failure::usage(format!("cannot parse {expr:?}: {e}")))
}

fn execute(engines: Engines, command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Order { expr, format, method } => {
            let word = parse_expr(&expr)?;
            let nf = match method {
                Method::Rewrite => (engines.rewrite)(&word),
                Method::ClosedForm => (engines.closed_form)(&word),
                Method::Both => {
                    let rewritten = (engines.rewrite)(&word);
                    let closed = (engines.closed_form)(&word);
                    if rewritten != closed {
                        return Err(Failure {
                            message: format!(
                                "methods disagree on {word}: rewrite gives {}, closed form gives {}",
                                render::nf_text(&rewritten),
                                render::nf_text(&closed)
                            ),
                            code: EXIT_VERIFY_FAILED,
                        });
                    }
                    rewritten
                }
            };
            ok(render::render_ordered(&Ordered::new(&word, nf), format))
        }
        Command::Power { lambda, delta, n, format } => {
            let nf = general_power_normal_form(lambda, delta, n).map_err(Failure::usage)?;
            let exponents = (u32::try_from(lambda), u32::try_from(delta), u32::try_from(n));
            let (Ok(l), Ok(d), Ok(n)) = exponents else {
                return Err(Failure::usage("exponents must fit in 32 bits"));
            };
            let word = Word::from_blocks([Block::x(l), Block::i(d)]).pow(n);
            ok(render::render_ordered(&Ordered::new(&word, nf), format))
        }
        Command::Bessel { n, format } => {
            let triangle = BesselTriangle::new(n);
            debug_assert_eq!(triangle.row(n), Some(bessel_row(n).as_slice()));
            ok(render::render_triangle(TriangleKind::Bessel, triangle.rows(), format))
        }
        Command::Table { lambda, delta, n, format } => {
            let table = generalized_triangle(lambda, delta, n).map_err(Failure::usage)?;
            ok(render::render_triangle(
                TriangleKind::Generalized { lambda, delta },
                table.rows(),
                format,
            ))
        }
        Command::Verify { expr, samples } => {
            let word = parse_expr(&expr)?;
            let nf = (engines.rewrite)(&word);
            let report = match samples {
                Some(k) => verify_equivalence_with_samples(&word, &nf, k),
                None => verify_equivalence(&word, &nf),
            };
            let code = if report.equal { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Outcome { stdout: render::render_report(&word, &nf, &report), code })
        }
    }
}
