//! `schubert`: command-line access to LR coefficients, Schubert problems,
//! compositions and wreath-product cycle types.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use schubert_core::composition::{
    classify, compose, find_composable_splits, verify_product, CompositionSpec, DEFAULT_SPLIT_CAP,
};
use schubert_core::grassmann::{class_product, delta, duality_nonzero};
use schubert_core::lr::{enumerate_glr_tableaux, lr_coef, lr_tableaux, multi_schur_product};
use schubert_core::oracle::exhaustive_check;
use schubert_core::partition::parse_partition_list;
use schubert_core::wreath::{cycle_type_table_capped, MAX_ORDER, MAX_POINTS};
use schubert_core::{Error, GrassmannianShape, Partition, SchubertProblem, SchurExpansion};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Exact Schubert calculus on Grassmannians")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Enumeration cap: maximum splits for find-splits/classify, maximum group
    /// order for wreath-table.
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Markdown,
}

/// A bracketed list of partitions, `[[2,1],[1],box(2,2)]`.
#[derive(Clone, Debug)]
struct PartitionList(Vec<Partition>);

impl FromStr for PartitionList {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_partition_list(s).map(PartitionList)
    }
}

#[derive(Args)]
struct ProblemArgs {
    /// JSON problem file `{"a":..,"b":..,"conditions":[..]}`; `-` reads stdin.
    #[arg(long, conflicts_with_all = ["a", "b", "conditions"])]
    input: Option<PathBuf>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    conditions: Option<PartitionList>,
}

#[derive(Subcommand)]
enum Command {
    /// The coefficient of S_lambda in S_mu * S_nu.
    Lrcoef {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Schur expansion of S_mu * S_nu, or of a product of several factors.
    SchurProduct {
        #[arg(long, requires = "nu", conflicts_with = "factors")]
        mu: Option<Partition>,
        #[arg(long, requires = "mu")]
        nu: Option<Partition>,
        #[arg(long)]
        factors: Option<PartitionList>,
    },
    /// LR tableaux of shape outer/inner with the given content.
    Tableaux {
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "[]")]
        inner: Partition,
        #[arg(long)]
        content: Partition,
    },
    /// Generalized LR tableaux of shape lambda with the given contents.
    GlrTableaux {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        contents: PartitionList,
    },
    /// Number of solutions of a Schubert problem.
    Delta(ProblemArgs),
    /// Product of Schubert classes in H*(G(a,b)).
    ClassProduct {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        factors: PartitionList,
    },
    /// Whether sigma_lambda * sigma_mu is nonzero in H*(G(a,b)).
    Duality {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Composes the base and fiber of a composition spec.
    Compose {
        /// JSON composition spec; `-` reads stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// Checks the product formula on a composition spec.
    VerifyProduct {
        #[arg(long)]
        input: PathBuf,
    },
    /// Lists composable splits of a Schubert problem.
    FindSplits(ProblemArgs),
    /// Block column, block row, composable or none.
    Classify(ProblemArgs),
    /// Cycle types of the wreath product of S_q by S_p.
    WreathTable {
        p: u32,
        q: u32,
        /// Same as --format markdown.
        #[arg(long)]
        markdown: bool,
    },
    /// Compares LR coefficients with the polynomial oracle exhaustively.
    OracleCheck {
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Parse { message: String, line: usize, column: usize },
    Validation { invariant: &'static str, error: Error },
    Io(String),
    /// Output was produced but the check it reports failed.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn invariant_name(e: &Error) -> &'static str {
    match e {
        Error::NotASchubertProblem { .. } => "codimension-sum",
        Error::ConditionNotInBox { .. } => "condition-in-box",
        Error::InvalidGrassmannian { .. } => "positive-dimensions",
        Error::SpecInvalid(_) => "composition-spec",
        _ => e.name(),
    }
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse {
        message: e.to_string(),
        line: e.line(),
        column: e.column(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    a: u32,
    b: u32,
    conditions: Vec<Partition>,
}

fn validated(raw: RawProblem) -> Result<SchubertProblem, Failure> {
    GrassmannianShape::new(raw.a, raw.b)
        .and_then(|g| SchubertProblem::new(g, raw.conditions))
        .map_err(|error| Failure::Validation {
            invariant: invariant_name(&error),
            error,
        })
}

fn read_problem(args: &ProblemArgs) -> Result<SchubertProblem, Failure> {
    if let Some(path) = &args.input {
        return validated(parse_json(&read_source(path)?)?);
    }
    match (args.a, args.b, &args.conditions) {
        (Some(a), Some(b), Some(c)) => validated(RawProblem {
            a,
            b,
            conditions: c.0.clone(),
        }),
        _ => Err(Failure::Usage(
            "give either --input or all of --a, --b and --conditions".into(),
        )),
    }
}

fn read_spec(path: &PathBuf) -> Result<CompositionSpec, Failure> {
    let spec: CompositionSpec = parse_json(&read_source(path)?)?;
    let v = spec.violations();
    if v.is_empty() {
        Ok(spec)
    } else {
        Err(Failure::Validation {
            invariant: "composition-spec",
            error: Error::SpecInvalid(v),
        })
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("domain types serialize")
}

fn render_expansion(x: &SchurExpansion, format: Format) -> String {
    match format {
        Format::Json => to_json(x),
        Format::Text => {
            if x.is_empty() {
                return "0".into();
            }
            x.iter()
                .map(|(p, c)| format!("{c} {p}"))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Format::Markdown => {
            let mut out = String::from("| Partition | Coefficient |\n|---|---:|");
            for (p, c) in x.iter() {
                write!(out, "\n| {p} | {c} |").unwrap();
            }
            out
        }
    }
}

fn unsupported(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Markdown {
        Err(Failure::Usage(format!("--format markdown is not available for {what}")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    let split_cap = cli.cap.map_or(DEFAULT_SPLIT_CAP, |c| c as usize);
    Ok(match cli.command {
        Command::Lrcoef { lambda, mu, nu } => lr_coef(&lambda, &mu, &nu).to_string(),
        Command::SchurProduct { mu, nu, factors } => {
            let factors = match (mu, nu, factors) {
                (Some(mu), Some(nu), None) => vec![mu, nu],
                (None, None, Some(f)) => f.0,
                _ => return Err(Failure::Usage("give --mu and --nu, or --factors".into())),
            };
            render_expansion(&multi_schur_product(&factors), format)
        }
        Command::Tableaux { outer, inner, content } => {
            unsupported(format, "tableaux")?;
            let all = lr_tableaux(&outer, &inner, &content)?;
            match format {
                Format::Text => all
                    .iter()
                    .map(|t| {
                        t.rows()
                            .iter()
                            .map(|r| format!("{r:?}").replace(' ', ""))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                _ => to_json(&all),
            }
        }
        Command::GlrTableaux { lambda, contents } => {
            unsupported(format, "glr-tableaux")?;
            let all = enumerate_glr_tableaux(&lambda, &contents.0);
            match format {
                Format::Text => all
                    .iter()
                    .map(|t| {
                        t.chain()
                            .iter()
                            .map(Partition::to_string)
                            .collect::<Vec<_>>()
                            .join(" < ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                _ => to_json(&all),
            }
        }
        Command::Delta(args) => delta(&read_problem(&args)?).to_string(),
        Command::ClassProduct { a, b, factors } => {
            let g = GrassmannianShape::new(a, b)?;
            render_expansion(&class_product(&factors.0, g)?, format)
        }
        Command::Duality { a, b, lambda, mu } => {
            let g = GrassmannianShape::new(a, b)?;
            duality_nonzero(&lambda, &mu, g)?.to_string()
        }
        Command::Compose { input } => {
            unsupported(format, "compose")?;
            let composed = compose(&read_spec(&input)?)?;
            match format {
                Format::Text => {
                    let g = composed.ambient();
                    let conds: Vec<String> = composed.conditions().iter().map(Partition::to_string).collect();
                    format!("G({},{}) {}", g.a, g.b, conds.join(" "))
                }
                _ => to_json(&composed),
            }
        }
        Command::VerifyProduct { input } => {
            unsupported(format, "verify-product")?;
            let check = verify_product(&read_spec(&input)?)?;
            let out = match format {
                Format::Text => format!(
                    "{} * {} = {} ({})",
                    check.delta_base,
                    check.delta_fiber,
                    check.delta_composed,
                    if check.holds { "holds" } else { "fails" }
                ),
                _ => to_json(&check),
            };
            if !check.holds {
                println!("{out}");
                return Err(Failure::Check("product formula fails".into()));
            }
            out
        }
        Command::FindSplits(args) => {
            unsupported(format, "find-splits")?;
            let splits = find_composable_splits(&read_problem(&args)?, split_cap);
            match format {
                Format::Text => splits
                    .iter()
                    .map(|s| {
                        let show = |v: &[Partition]| v.iter().map(Partition::to_string).collect::<Vec<_>>().join(",");
                        format!(
                            "mu={} nu={} rows={:?} cols={:?}",
                            show(&s.mu),
                            show(&s.nu),
                            s.row_budgets,
                            s.col_budgets
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                _ => to_json(&splits),
            }
        }
        Command::Classify(args) => {
            unsupported(format, "classify")?;
            let c = classify(&read_problem(&args)?, split_cap);
            match format {
                Format::Text => c.class.as_str().to_string(),
                _ => to_json(&c),
            }
        }
        Command::WreathTable { p, q, markdown } => {
            let table = cycle_type_table_capped(p, q, MAX_POINTS, cli.cap.unwrap_or(MAX_ORDER))?;
            if markdown || format == Format::Markdown {
                table.to_markdown().trim_end().to_string()
            } else if format == Format::Text {
                table
                    .rows
                    .iter()
                    .map(|(t, c)| format!("{t} {c}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                to_json(&table)
            }
        }
        Command::OracleCheck { max_weight } => {
            unsupported(format, "oracle-check")?;
            let report = exhaustive_check(max_weight);
            let out = match format {
                Format::Text => format!(
                    "checked {} triples, {} mismatches",
                    report.checked,
                    report.mismatches.len()
                ),
                _ => to_json(&json!({
                    "checked": report.checked,
                    "mismatches": report.mismatches,
                })),
            };
            if !report.mismatches.is_empty() {
                println!("{out}");
                return Err(Failure::Check(format!("{} mismatches", report.mismatches.len())));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(f) => {
            let body = match f {
                Failure::Domain(e) => json!({"error": e.name(), "message": e.to_string()}),
                Failure::Parse { message, line, column } => {
                    json!({"error": "ParseError", "message": message, "line": line, "column": column})
                }
                Failure::Validation { invariant, error } => json!({
                    "error": "ValidationError",
                    "invariant": invariant,
                    "message": error.to_string(),
                }),
                Failure::Io(message) => json!({"error": "IoError", "message": message}),
                Failure::Check(message) => json!({"error": "CheckFailed", "message": message}),
                Failure::Usage(_) => unreachable!(),
            };
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}
