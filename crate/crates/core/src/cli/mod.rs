//! The `redkron` command line.
//!
//! Results go to stdout, one per invocation: a text line (or block), or with
//! `--json` a key-sorted record `{command, inputs, result, timing_ms}`.
//! Timing and diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 failed verification
//! suite, 3 resource ceiling exceeded.

mod output;
mod suites;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{cc_type, classify_product};
use crate::characters::cycle_types;
use crate::error::Error;
use crate::partition::{parse_composition, parse_partition, Composition, Partition};
use crate::products::{outer_product, stable_level, straighten, Kernel, DEFAULT_LEVEL_LIMIT};

pub use output::OutputRecord;
pub use suites::{run_suite, Suite, SuiteReport, MONOTONE_SAMPLES};

pub const CACHE_DIR_ENV: &str = "REDKRON_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SUITE_FAILED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "redkron",
    version,
    about = "Exact Kronecker and reduced Kronecker products of symmetric group characters"
)]
struct Cli {
    /// Print one JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory of cached character tables (overrides REDKRON_CACHE_DIR).
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Largest level at which products are formed.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_LEVEL_LIMIT)]
    max_level: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoeffKind {
    Kron,
    Reduced,
    Lr,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductChoice {
    Kron,
    Reduced,
    Outer,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn composition_arg(s: &str) -> Result<Composition, String> {
    parse_composition(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ordinary Kronecker product [λ][μ] (equal sizes).
    Product {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Reduced Kronecker product [λ]• ⋆ [μ]•.
    Reduced {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Outer (Littlewood–Richardson) product [λ] ⊗ [μ].
    Outer {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// A single coefficient; for `lr` the first argument is the outer shape.
    Coeff {
        #[arg(long, value_enum)]
        kind: CoeffKind,
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// (components, constituents) of a product.
    Cctype {
        #[arg(long, value_enum)]
        kind: ProductChoice,
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Shape classification of [λ]• ⋆ [μ]•, checked against the product.
    Classify {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Straighten a Schur function indexed by any integer composition.
    Straighten {
        #[arg(value_parser = composition_arg, allow_hyphen_values = true)]
        alpha: Composition,
    },
    /// Level from which [λ[n]][μ[n]] is stable.
    Level {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// [λ[n]][μ[n]] at a given level.
    Atlevel {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Character table of S_n.
    Chartable {
        n: usize,
        /// Write chartable_<k>.json for every k ≤ n into the cache directory.
        #[arg(long)]
        write_cache: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Time character table construction for each level up to N.
    Bench {
        #[arg(long)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Kernel(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Kernel(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first), runs the command against the real
/// stdout and stderr and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Kernel(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ResourceLimit { .. } | Error::Overflow(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn kernel(cli: &Cli) -> Kernel {
    let k = Kernel::new().with_max_level(cli.max_level);
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
    match dir {
        Some(d) => k.with_cache_dir(d),
        None => k,
    }
}

fn two(lambda: &Partition, mu: &Partition) -> Value {
    output::partitions(&[("lambda", lambda), ("mu", mu)])
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let start = Instant::now();
    let kernel = kernel(cli);
    let mut code = EXIT_OK;
    let (name, inputs, rendered) = match &cli.command {
        Command::Product { lambda, mu } => {
            let d = kernel.kron_product(lambda, mu)?;
            ("product", two(lambda, mu), output::decomposition(&d))
        }
        Command::Reduced { lambda, mu } => {
            let d = kernel.reduced_product(lambda, mu)?;
            ("reduced", two(lambda, mu), output::decomposition(&d))
        }
        Command::Outer { lambda, mu } => (
            "outer",
            two(lambda, mu),
            output::decomposition(&outer_product(lambda, mu)),
        ),
        Command::Coeff {
            kind,
            lambda,
            mu,
            nu,
        } => {
            let (label, value) = match kind {
                CoeffKind::Kron => ("kron", kernel.kron_coeff(lambda, mu, nu)?),
                CoeffKind::Reduced => ("reduced", kernel.reduced_coeff(lambda, mu, nu)?),
                CoeffKind::Lr => ("lr", crate::products::lr_coeff(lambda, mu, nu)),
            };
            let mut inputs = output::partitions(&[("lambda", lambda), ("mu", mu), ("nu", nu)]);
            inputs["kind"] = json!(label);
            (
                "coeff",
                inputs,
                output::Rendered::new(json!(value), value.to_string()),
            )
        }
        Command::Cctype { kind, lambda, mu } => {
            let (label, d) = match kind {
                ProductChoice::Kron => ("kron", kernel.kron_product(lambda, mu)?),
                ProductChoice::Reduced => ("reduced", kernel.reduced_product(lambda, mu)?),
                ProductChoice::Outer => ("outer", outer_product(lambda, mu)),
            };
            let cc = cc_type(&d);
            let mut inputs = two(lambda, mu);
            inputs["kind"] = json!(label);
            (
                "cctype",
                inputs,
                output::Rendered::new(output::cc_type(&cc), cc.to_string()),
            )
        }
        Command::Classify { lambda, mu } => {
            let case = classify_product(lambda, mu);
            let product = kernel.reduced_product(lambda, mu)?;
            let computed = cc_type(&product);
            let agrees = case.expected_cc.is_none_or(|e| e == computed)
                && case.few_components() == (computed.components < 10)
                && case.multiplicity_free() == product.is_multiplicity_free();
            let expected_text = case
                .expected_cc
                .map_or("none".to_string(), |c| c.to_string());
            let text = format!(
                "case: {}\nexpected cc-type: {expected_text}\ncomputed cc-type: {computed}\nmultiplicity free: {}\nagrees: {agrees}",
                case.tag,
                case.multiplicity_free()
            );
            let value = json!({
                "case": case.tag.to_string(),
                "expected_cc": case.expected_cc.as_ref().map(output::cc_type),
                "computed_cc": output::cc_type(&computed),
                "multiplicity_free": case.multiplicity_free(),
                "agrees": agrees,
            });
            (
                "classify",
                two(lambda, mu),
                output::Rendered::new(value, text),
            )
        }
        Command::Straighten { alpha } => {
            let inputs = json!({ "alpha": alpha.entries() });
            (
                "straighten",
                inputs,
                output::straightened(&straighten(alpha)),
            )
        }
        Command::Level { lambda, mu } => {
            let level = stable_level(lambda, mu);
            (
                "level",
                two(lambda, mu),
                output::Rendered::new(json!(level), level.to_string()),
            )
        }
        Command::Atlevel { lambda, mu, n } => {
            let d = kernel.product_at_level(lambda, mu, *n)?;
            let mut inputs = two(lambda, mu);
            inputs["n"] = json!(n);
            ("atlevel", inputs, output::decomposition(&d))
        }
        Command::Chartable { n, write_cache } => {
            let table = kernel.store().table(*n)?;
            if *write_cache {
                let Some(dir) = kernel.store().cache_dir() else {
                    return Err(Failure::Usage(format!(
                        "--write-cache needs --cache-dir or {CACHE_DIR_ENV}"
                    )));
                };
                for level in 0..=*n {
                    let path = kernel.store().write_cache(level, dir)?;
                    writeln!(err, "wrote {}", path.display())?;
                }
            }
            let classes: Vec<&Partition> = table.classes().iter().map(|c| c.cycles()).collect();
            let rows: Vec<Vec<i64>> = (0..table.dim()).map(|r| table.row(r).to_vec()).collect();
            let mut text = vec![format!(
                "classes: {}",
                classes
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )];
            for (shape, row) in table.partitions().iter().zip(&rows) {
                let values: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                text.push(format!("{shape}: {}", values.join(" ")));
            }
            let value = json!({
                "classes": classes,
                "partitions": table.partitions(),
                "values": rows,
            });
            (
                "chartable",
                json!({ "n": n }),
                output::Rendered::new(value, text.join("\n")),
            )
        }
        Command::Verify {
            suite,
            max_size,
            threads,
        } => {
            let kernel = suites::kernel_for(*suite, kernel);
            let report = match threads {
                Some(t) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(*t)
                        .build()
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    pool.install(|| run_suite(&kernel, *suite, *max_size))?
                }
                None => run_suite(&kernel, *suite, *max_size)?,
            };
            if !report.passed {
                code = EXIT_SUITE_FAILED;
            }
            let inputs = json!({ "suite": suite.name(), "max_size": max_size });
            let value = serde_json::to_value(&report).map_err(Error::from)?;
            (
                "verify",
                inputs,
                output::Rendered::new(value, report.to_text()),
            )
        }
        Command::Bench { max_n } => {
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for n in 0..=*max_n {
                let t = Instant::now();
                let table = kernel.store().table(n)?;
                let table_ms = t.elapsed().as_secs_f64() * 1e3;
                text.push(format!(
                    "n={n} partitions={} classes={} table_ms={table_ms:.3}",
                    table.dim(),
                    cycle_types(n).len()
                ));
                rows.push(json!({ "n": n, "partitions": table.dim(), "table_ms": table_ms }));
            }
            (
                "bench",
                json!({ "max_n": max_n }),
                output::Rendered::new(json!(rows), text.join("\n")),
            )
        }
    };
    let record = OutputRecord {
        command: name.to_string(),
        inputs,
        result: rendered.value,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    output::emit(out, err, cli.json, &record, &rendered.text)?;
    Ok(code)
}
