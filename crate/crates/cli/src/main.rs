use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cylgf::cylindric::{enumerate, CylindricPartition};
use cylgf::genfun::{borodin, chain_series, sides_csv, catalog_sides, IdentityId};
use cylgf::slices::{decompose, flow_graph, ShapeLetters};
use cylgf::{Error, Profile, Series};

mod verify;

#[derive(Parser)]
#[command(name = "cylgf", version, about = "Generating functions of cylindric partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report timings on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of the generating function.
    Expand {
        #[arg(long)]
        profile: Profile,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Method::Borodin)]
        method: Method,
    },
    /// Brute-force count by (max part, size).
    Count {
        #[arg(long)]
        profile: Profile,
        #[arg(long)]
        order: usize,
    },
    /// Slice flow graph up to a weight.
    Flow {
        #[arg(long)]
        profile: Profile,
        #[arg(long)]
        max_weight: u32,
    },
    /// Check identities and lemmas.
    Verify {
        /// Identity tag such as `1.2`, `A1`, `gasper`, `L4.3(1,2)`.
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        /// Run the bundled parameter grid.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        order: Option<usize>,
        /// Power j in z = q^j for `--id gasper`.
        #[arg(long)]
        z_power: Option<u32>,
    },
    /// Slices of a cylindric partition given as JSON (inline or a file path).
    Decompose {
        #[arg(long)]
        partition: String,
        /// Also draw each slice.
        #[arg(long)]
        boards: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Borodin,
    Chain,
    ChainDistinct,
}

enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// A library contract was broken: exit 3.
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidProfile(_)
            | Error::InvalidPartition(_)
            | Error::InvalidSlice { .. }
            | Error::UnknownIdentity(_)
            | Error::ParameterOutOfRange(_)
            | Error::InvalidPochSpec(_) => Failure::Input(e.to_string()),
            _ => Failure::Contract(e.to_string()),
        }
    }
}

/// Rendered output and whether every check in it passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::Input(format!("format `{name}` is not available for `{command}`"))
}

fn series_output(series: &Series, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => series.to_string(),
        Format::Json => serde_json::to_string(series).map_err(|e| Failure::Contract(e.to_string()))?,
        Format::Csv => {
            let mut s = String::from("degree,coeff\n");
            for (n, c) in series.coeffs().iter().enumerate() {
                s.push_str(&format!("{n},{c}\n"));
            }
            s
        }
        Format::Dot => return Err(unsupported(format, "expand")),
    })
}

fn expand(profile: &Profile, order: usize, method: Method, format: Format) -> Result<Output, Failure> {
    let series = match method {
        Method::Borodin => borodin(profile, order)?,
        Method::Chain => chain_series(profile, order, false).marginal(),
        Method::ChainDistinct => chain_series(profile, order, true).marginal(),
    };
    Ok(Output::ok(series_output(&series, format)?))
}

fn count(profile: &Profile, order: usize, format: Format) -> Result<Output, Failure> {
    let table = enumerate(profile, order);
    Ok(Output::ok(match format {
        Format::Csv | Format::Text => table.to_csv(),
        Format::Json => {
            let entries: Vec<_> = table
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(m, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| **c > 0)
                        .map(move |(n, c)| json!({"max": m, "size": n, "count": c}))
                })
                .collect();
            json!({"profile": profile, "order": order, "entries": entries}).to_string()
        }
        Format::Dot => return Err(unsupported(format, "count")),
    }))
}

fn flow(profile: &Profile, max_weight: u32, format: Format) -> Result<Output, Failure> {
    let graph = flow_graph(profile, max_weight);
    let letters = ShapeLetters::new(profile);
    Ok(Output::ok(match format {
        Format::Dot => graph.to_dot(),
        Format::Text => {
            let mut s = format!("nodes: {}, edges: {}\n", graph.nodes().len(), graph.edges().len());
            for (u, v) in graph.labelled_edges(&letters) {
                s.push_str(&format!("{u} -> {v}\n"));
            }
            s
        }
        Format::Json => {
            let nodes: Vec<_> = graph
                .nodes()
                .iter()
                .map(|s| {
                    json!({
                        "label": letters.term(s),
                        "white": s.white(),
                        "weight": s.weight(),
                        "shape": s.shape().0,
                    })
                })
                .collect();
            json!({
                "profile": profile,
                "max_weight": max_weight,
                "nodes": nodes,
                "edges": graph.edges(),
            })
            .to_string()
        }
        Format::Csv => {
            let mut s = String::from("from,to\n");
            for (u, v) in graph.labelled_edges(&letters) {
                s.push_str(&format!("{u},{v}\n"));
            }
            s
        }
    }))
}

fn verify_one(raw: &str, order: usize, z_power: Option<u32>, format: Format) -> Result<Output, Failure> {
    let id = match (raw, z_power) {
        ("gasper", Some(j)) => IdentityId::Gasper(j),
        ("gasper", None) => return Err(Failure::Input("`--id gasper` needs `--z-power`".into())),
        (_, Some(_)) => return Err(Failure::Input("`--z-power` only applies to `--id gasper`".into())),
        (tag, None) => tag.parse()?,
    };
    if id == IdentityId::Gasper(0) {
        return Err(Failure::Input("`--z-power` must be at least 1".into()));
    }
    let outcome = verify::verify_identity(&id, order)?;
    let text = match format {
        Format::Text => outcome.text(),
        Format::Json => serde_json::to_string(&outcome).map_err(|e| Failure::Contract(e.to_string()))?,
        Format::Csv => {
            let (lhs, rhs) = catalog_sides(&id, order)?;
            sides_csv(&lhs, &rhs)?
        }
        Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok(Output {
        text,
        passed: outcome.passed(),
    })
}

fn verify_all(order: Option<usize>, format: Format) -> Result<Output, Failure> {
    let grid = verify::Grid::builtin();
    let grid = match order {
        Some(n) => grid.with_order(n),
        None => grid,
    };
    let report = verify::run_grid(&grid)?;
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for o in &report.identities {
                s.push_str(&o.text());
                s.push('\n');
            }
            s.push_str("family,n,m_vec,k_or_-,order,status\n");
            for l in &report.lemmas {
                s.push_str(&l.line);
                s.push('\n');
            }
            let ok_ids = report.identities.iter().filter(|o| o.passed()).count();
            let ok_lemmas = report.lemmas.iter().filter(|l| l.passed()).count();
            s.push_str(&format!(
                "identities {ok_ids}/{} passed, lemma points {ok_lemmas}/{} passed\n",
                report.identities.len(),
                report.lemmas.len()
            ));
            s
        }
        Format::Csv => {
            let mut s = String::from("item,order,status\n");
            for o in &report.identities {
                s.push_str(&format!("{},{},{}\n", o.id, o.order, o.status));
            }
            for l in &report.lemmas {
                s.push_str(&format!("{},{},{}\n", l.id, l.order, l.status));
            }
            s
        }
        Format::Json => serde_json::to_string(&report).map_err(|e| Failure::Contract(e.to_string()))?,
        Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok(Output {
        text,
        passed: report.passed(),
    })
}

fn read_partition(arg: &str) -> Result<CylindricPartition, Failure> {
    let raw = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&raw).map_err(|e| Failure::Input(format!("invalid partition: {e}")))
}

fn decompose_cmd(arg: &str, boards: bool, format: Format) -> Result<Output, Failure> {
    let partition = read_partition(arg)?;
    let letters = ShapeLetters::new(partition.profile());
    let levels = decompose(&partition);
    // highest level first
    let listing: Vec<_> = levels.iter().enumerate().rev().map(|(i, s)| (i + 1, s)).collect();
    let join = |v: &[u32], sep: &str| v.iter().map(u32::to_string).collect::<Vec<_>>().join(sep);
    Ok(Output::ok(match format {
        Format::Text => {
            let mut s = String::new();
            for (level, slice) in &listing {
                s.push_str(&format!(
                    "level {level}: t=({}) weight={} shape={} term={}\n",
                    join(slice.white(), ","),
                    slice.weight(),
                    slice.shape(),
                    letters.term(slice)
                ));
                if boards {
                    for line in slice.board().lines() {
                        s.push_str(&format!("  {line}\n"));
                    }
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("level,white,weight,shape,term\n");
            for (level, slice) in &listing {
                s.push_str(&format!(
                    "{level},{},{},{},{}\n",
                    join(slice.white(), ";"),
                    slice.weight(),
                    join(&slice.shape().0, ";"),
                    letters.term(slice)
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = listing
                .iter()
                .map(|(level, slice)| {
                    let mut v = json!({
                        "level": level,
                        "white": slice.white(),
                        "weight": slice.weight(),
                        "shape": slice.shape().0,
                        "term": letters.term(slice),
                    });
                    if boards {
                        v["board"] = json!(slice.board());
                    }
                    v
                })
                .collect();
            serde_json::Value::Array(rows).to_string()
        }
        Format::Dot => return Err(unsupported(format, "decompose")),
    }))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("CYLGF_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("CYLGF_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Contract(e.to_string()))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Expand { profile, order, method } => {
            expand(profile, *order, *method, cli.format.unwrap_or(Format::Text))
        }
        Command::Count { profile, order } => count(profile, *order, cli.format.unwrap_or(Format::Csv)),
        Command::Flow { profile, max_weight } => flow(profile, *max_weight, cli.format.unwrap_or(Format::Dot)),
        Command::Verify { id, all, order, z_power } => {
            let format = cli.format.unwrap_or(Format::Text);
            if *all {
                if z_power.is_some() {
                    return Err(Failure::Input("`--z-power` only applies to `--id gasper`".into()));
                }
                verify_all(*order, format)
            } else {
                let id = id.as_deref().expect("clap requires --id without --all");
                verify_one(id, order.unwrap_or(40), *z_power, format)
            }
        }
        Command::Decompose { partition, boards } => {
            decompose_cmd(partition, *boards, cli.format.unwrap_or(Format::Text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.verbose {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(mut output) => {
            if !output.text.is_empty() && !output.text.ends_with('\n') {
                output.text.push('\n');
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &output.text),
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if output.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Contract(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
