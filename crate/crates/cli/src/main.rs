use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use symcrystal::canonical::{bar_matrix, global_lower, multiplicity_polys, Block, Side};
use symcrystal::config::{JobConfig, Mode};
use symcrystal::freealg::{pbw_coords, pbw_element, WordVector};
use symcrystal::graph::crystal_graph;
use symcrystal::mseg::{cmp_cry_lex, Content, SymContent};
use symcrystal::theta::ThetaMultisegment;
use symcrystal::thetamod::{ptheta_vector, theta_coords, ThetaClassVector};
use symcrystal::verify::{run_suite, Suite, SuiteReport};
use symcrystal::{Error, Multisegment, Window};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "symcrystal", version, about = "Multisegment crystals, PBW and global bases, exactly")]
struct Cli {
    /// typeA or theta.
    #[arg(long, global = true, default_value = "typeA")]
    mode: Mode,
    /// Comma-separated odd indices.
    #[arg(long, global = true, default_value = "-3,-1,1,3", allow_hyphen_values = true)]
    window: Window,
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: u32,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for block-parallel commands.
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closure of the empty multisegment under the modified root operators.
    CrystalGraph {
        /// Follow only these indices.
        #[arg(long, allow_hyphen_values = true)]
        indices: Option<String>,
    },
    /// PBW element of a JSON multisegment as a word vector.
    Expand {
        /// JSON multisegment, or `-` for stdin.
        input: String,
    },
    /// PBW coordinates of a word expression such as `f[1]·f[3]`.
    Coords {
        /// Expression, or `-` for stdin.
        input: String,
    },
    /// Lower global basis matrices, one per block.
    GlobalBasis {
        #[command(flatten)]
        select: BlockSelect,
    },
    /// Bar matrices, one per block.
    BarMatrix {
        #[command(flatten)]
        select: BlockSelect,
    },
    /// Multiplicity polynomials of the upper global basis.
    Multiplicity {
        #[arg(long, allow_hyphen_values = true)]
        index: i32,
        /// E or F.
        #[arg(long, default_value = "E")]
        side: Side,
        #[command(flatten)]
        select: BlockSelect,
    },
    /// Runs a verification suite, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(clap::Args, Debug)]
struct BlockSelect {
    /// Only the block of this content (type A) or of these absolute values
    /// (theta), comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    content: Option<String>,
}

enum Failure {
    Usage(String),
    Counterexample(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidSegment { .. }
            | Error::NotThetaRestricted { .. }
            | Error::ZeroMultiplicity { .. }
            | Error::InvalidWindow(_)
            | Error::OutOfWindow { .. }
            | Error::Config(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        Ok(input.to_string())
    }
}

fn parse_ints(s: &str) -> Result<Vec<i32>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("'{t}' is not an integer"))))
        .collect()
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage("--format dot is only available for crystal-graph".into()))
    } else {
        Ok(())
    }
}

fn blocks(cli: &Cli, select: &BlockSelect) -> Result<Vec<Block>, Failure> {
    match &select.content {
        Some(c) => {
            let ix = parse_ints(c)?;
            for &i in &ix {
                cli.window.check(if cli.mode == Mode::Theta { i.abs() } else { i })?;
            }
            Ok(vec![match cli.mode {
                Mode::TypeA => Block::TypeA(Content::from_indices(ix)),
                Mode::Theta => Block::Theta(SymContent::from_abs(ix.iter().map(|i| i.unsigned_abs()))),
            }])
        }
        None => Ok(Block::all_up_to(cli.mode.into(), &cli.window, cli.max_degree)?),
    }
}

/// Maps `f` over the blocks on the configured pool, keeping block order.
fn per_block<T: Send>(
    cli: &Cli,
    blocks: &[Block],
    f: impl Fn(&Block) -> symcrystal::Result<T> + Sync,
) -> Result<Vec<T>, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallel.max(1))
        .build()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    let out: symcrystal::Result<Vec<T>> = pool.install(|| blocks.par_iter().map(&f).collect());
    Ok(out?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let config = JobConfig::new(cli.window.clone(), cli.max_degree, cli.mode)?;
    let window = &cli.window;
    match &cli.command {
        Command::CrystalGraph { indices } => {
            let ix = indices.as_deref().map(parse_ints).transpose()?;
            let g = crystal_graph(&config, ix.as_deref())?;
            Ok(match cli.format {
                Format::Text => g.to_text(),
                Format::Json => pretty(&g.to_json()),
                Format::Dot => g.to_dot(),
            })
        }
        Command::Expand { input } => {
            no_dot(cli.format)?;
            let m = Multisegment::from_json_str(&read_input(input)?)?;
            m.check_within(window)?;
            let text = match cli.mode {
                Mode::TypeA => pbw_element(window, &m)?.to_string(),
                Mode::Theta => ptheta_vector(window, &ThetaMultisegment::new(m.clone())?)?.to_string(),
            };
            Ok(match cli.format {
                Format::Json => pretty(&json!({ "multisegment": m, "vector": text })),
                _ => text + "\n",
            })
        }
        Command::Coords { input } => {
            no_dot(cli.format)?;
            let v = WordVector::parse(window, read_input(input)?.trim())?;
            let mut coords: Vec<(Multisegment, String)> = match cli.mode {
                Mode::TypeA => pbw_coords(&v)?.into_iter().map(|(m, c)| (m, c.to_string())).collect(),
                Mode::Theta => theta_coords(&ThetaClassVector::from_rep(v)?)?
                    .into_iter()
                    .map(|(m, c)| (m.into_inner(), c.to_string()))
                    .collect(),
            };
            coords.sort_by(|a, b| cmp_cry_lex(&b.0, &a.0).then_with(|| a.0.cmp(&b.0)));
            Ok(match cli.format {
                Format::Json => pretty(&json!(coords
                    .iter()
                    .map(|(m, c)| json!({ "multisegment": m, "coeff": c }))
                    .collect::<Vec<_>>())),
                _ => coords.iter().map(|(m, c)| format!("{m}: {c}\n")).collect(),
            })
        }
        Command::GlobalBasis { select } | Command::BarMatrix { select } => {
            no_dot(cli.format)?;
            let bl = blocks(cli, select)?;
            let lower = matches!(cli.command, Command::GlobalBasis { .. });
            let mats = per_block(cli, &bl, |b| if lower { global_lower(b) } else { bar_matrix(b) })?;
            Ok(match cli.format {
                Format::Json => pretty(&json!(mats.iter().map(|m| m.to_json()).collect::<Vec<_>>())),
                _ => mats.iter().map(|m| m.to_text()).collect::<Vec<_>>().join("\n"),
            })
        }
        Command::Multiplicity { index, side, select } => {
            no_dot(cli.format)?;
            window.check(*index)?;
            let bl = blocks(cli, select)?;
            let bl: Vec<Block> = bl
                .into_iter()
                .filter(|b| *side == Side::E || b.degree() < cli.max_degree || select.content.is_some())
                .collect();
            let tables = per_block(cli, &bl, |b| multiplicity_polys(b, *index, *side))?;
            let tables: Vec<_> = tables.into_iter().filter(|t| t.target.is_some()).collect();
            let mut warn = String::new();
            for t in &tables {
                for (b, b2) in &t.negative_at_one {
                    warn.push_str(&format!("warning: negative value at q = 1 for b={b}, b'={b2}\n"));
                }
            }
            eprint!("{warn}");
            Ok(match cli.format {
                Format::Json => pretty(&json!(tables.iter().map(|t| t.to_json()).collect::<Vec<_>>())),
                _ => tables.iter().map(|t| t.to_text()).collect(),
            })
        }
        Command::Verify { suite } => {
            no_dot(cli.format)?;
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let suites: Vec<Suite> = suites
                .into_iter()
                .filter(|s| !(suite == "all" && *s == Suite::ThetaDims && !window.is_symmetric()))
                .collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.parallel.max(1))
                .build()
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            let reports: symcrystal::Result<Vec<_>> =
                pool.install(|| suites.par_iter().map(|s| run_suite(*s, &config)).collect());
            verdict(&reports?, cli.format)
        }
    }
}

fn verdict(reports: &[SuiteReport], format: Format) -> Result<String, Failure> {
    let text = match format {
        Format::Json => pretty(&json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>())),
        _ => reports.iter().map(|r| r.to_text()).collect(),
    };
    if reports.iter().all(|r| r.passed()) {
        Ok(text)
    } else {
        Err(Failure::Counterexample(text))
    }
}

fn exit_code(outcome: &Result<String, Failure>) -> u8 {
    match outcome {
        Ok(_) => 0,
        Err(Failure::Counterexample(_) | Failure::Runtime(_)) => 1,
        Err(Failure::Usage(_)) => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli);
    match &outcome {
        Ok(out) | Err(Failure::Counterexample(out)) => print!("{out}"),
        Err(Failure::Runtime(msg) | Failure::Usage(msg)) => eprintln!("error: {msg}"),
    }
    ExitCode::from(exit_code(&outcome))
}
