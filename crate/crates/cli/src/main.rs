use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grassmann_core::buchberger::{compare_with_family, DEFAULT_CAP};
use grassmann_core::cohomology::{normal_form, standard_basis};
use grassmann_core::dual_classes::wbar_sequence;
use grassmann_core::f2poly::parse;
use grassmann_core::steenrod::immersion_obstruction_check;
use grassmann_core::{GrassmannContext, GroebnerFamily, MultiIndex, Polynomial};
use serde::Serialize;

/// Computations in the mod 2 cohomology of real Grassmannians G_{k,n}.
#[derive(Debug, Parser)]
#[command(name = "grassmann", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Gröbner basis elements g_M.
    Generate {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Only the element with this index, given as m2,...,mk.
        #[arg(long, value_delimiter = ',')]
        only_m: Option<Vec<u32>>,
    },
    /// Reduce a polynomial to its normal form.
    Reduce {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: u32,
        poly: String,
    },
    /// Print the dual class w̄_r.
    Dual {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        r: usize,
    },
    /// Compare the basis with one computed by Buchberger's algorithm.
    Verify {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: u32,
        /// Refuse instances with more basis elements than this.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Evaluate the immersion obstructions for G_{5,n}, n divisible by 8.
    ImmersionCheck {
        #[arg(short)]
        n: u32,
    },
    /// List the standard monomials, which form an additive basis.
    Basis {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
struct Record {
    #[serde(rename = "M")]
    m: Vec<u32>,
    lt: Vec<u32>,
    poly: Vec<Vec<u32>>,
}

enum Outcome {
    Done,
    Mismatch,
}

fn decreasing(p: &Polynomial) -> Vec<Vec<u32>> {
    p.terms().rev().map(|t| t.exponents().to_vec()).collect()
}

fn generate(
    out: &mut impl Write,
    ctx: GrassmannContext,
    format: Format,
    only: Option<Vec<u32>>,
) -> RunResult {
    let family = selected_elements(ctx, only.as_deref())?;
    match format {
        Format::Text => {
            for (m, g) in &family {
                writeln!(out, "g[{m}] = {g}")?;
            }
        }
        Format::Json => {
            let records: Vec<Record> = family
                .iter()
                .map(|(m, g)| Record {
                    m: m.entries().to_vec(),
                    lt: g
                        .leading_term()
                        .map(|t| t.exponents().to_vec())
                        .unwrap_or_default(),
                    poly: decreasing(g),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&records)?)?;
        }
    }
    Ok(Outcome::Done)
}

fn run(cli: Cli, out: &mut impl Write) -> RunResult {
    match cli.command {
        Command::Generate {
            k,
            n,
            format,
            only_m,
        } => generate(out, GrassmannContext::new(k, n)?, format, only_m),
        Command::Reduce { k, n, poly } => {
            let ctx = GrassmannContext::new(k, n)?;
            let f = parse(&poly, k)?;
            writeln!(out, "{}", normal_form(&f, &GroebnerFamily::lazy(ctx))?)?;
            Ok(Outcome::Done)
        }
        Command::Dual { k, r } => {
            if k < 1 {
                return Err(Failure("k must be at least 1".into()));
            }
            let seq = wbar_sequence(r, k);
            writeln!(out, "{}", seq[r])?;
            Ok(Outcome::Done)
        }
        Command::Verify { k, n, cap } => {
            let cmp = compare_with_family(&GrassmannContext::new(k, n)?, cap)?;
            if cmp.matches() {
                writeln!(
                    out,
                    "OK: reduced Groebner basis matches oracle ({} elements)",
                    cmp.family.len()
                )?;
                Ok(Outcome::Done)
            } else {
                writeln!(
                    out,
                    "MISMATCH: oracle has {} elements, family has {}",
                    cmp.oracle.len(),
                    cmp.family.len()
                )?;
                for g in cmp.oracle.iter().filter(|g| !cmp.family.contains(g)) {
                    writeln!(out, "oracle only: {g}")?;
                }
                for g in cmp.family.iter().filter(|g| !cmp.oracle.contains(g)) {
                    writeln!(out, "family only: {g}")?;
                }
                Ok(Outcome::Mismatch)
            }
        }
        Command::ImmersionCheck { n } => {
            let family = GroebnerFamily::lazy(GrassmannContext::new(5, n)?);
            let report = immersion_obstruction_check(n, &family)?;
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "n: {}", report.n)?;
            writeln!(out, "w2(nu): {}", report.w2_nu)?;
            writeln!(out, "Sq1(w4*w5^{}): {}", n - 1, report.sq1_value)?;
            writeln!(
                out,
                "(Sq2 + w2(nu))(w2*w5^{}): {}",
                n - 1,
                report.k1_obstruction_value
            )?;
            writeln!(
                out,
                "matches_expected: {}",
                yes_no(report.matches_expected())
            )?;
            writeln!(out, "lift_possible: {}", yes_no(report.lift_possible))?;
            Ok(Outcome::Done)
        }
        Command::Basis { k, n } => {
            let basis = standard_basis(&GrassmannContext::new(k, n)?);
            writeln!(out, "count: {}", basis.len())?;
            for m in &basis {
                writeln!(out, "{m}")?;
            }
            Ok(Outcome::Done)
        }
    }
}

/// Family elements for `generate`, optionally restricted to one index.
fn selected_elements(
    ctx: GrassmannContext,
    only: Option<&[u32]>,
) -> grassmann_core::Result<Vec<(MultiIndex, Polynomial)>> {
    match only {
        Some(entries) => {
            let m = MultiIndex::new(entries.to_vec())?;
            let g = GroebnerFamily::lazy(ctx).element(&m)?;
            Ok(vec![(m, (*g).clone())])
        }
        None => Ok(GroebnerFamily::build(ctx)
            .elements()
            .into_iter()
            .map(|(m, g)| (m, (*g).clone()))
            .collect()),
    }
}

/// An error reported to the user as one line on stderr.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type RunResult = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(Failure(message)) => {
            let _ = out.flush();
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
