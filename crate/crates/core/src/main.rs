//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on malformed input or domain errors, 2 when
//! `verify` finds a violated invariant.

use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ferrers_rsk::coxeter::CoxeterElement;
use ferrers_rsk::gk::{antichain_width, gk_invariant, gk_invariant_with_witnesses};
use ferrers_rsk::io::{self, FillingDoc};
use ferrers_rsk::rsk::{
    coxeter_rsk, gansner_rsk, invert_rsk, special_coxeter, LiftedFilling, RskVariant,
};
use ferrers_rsk::shapes::Filling;
use ferrers_rsk::verify::{self, VerifyOptions};
use ferrers_rsk::{dot, WeightedDag};

#[derive(Parser)]
#[command(
    name = "ferrers-rsk",
    about = "RSK correspondences on Ferrers shapes, Greene-Kleitman invariants and AR quivers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Args)]
struct FillingInput {
    /// Shape as comma-separated parts, e.g. 5,3,3,2
    #[arg(long)]
    shape: Option<String>,
    /// Path to a filling JSON document
    #[arg(long)]
    filling: String,
}

#[derive(Args)]
struct CoxeterInput {
    /// Cycle form, e.g. "1 3 4 7 9 8 6 5 2"
    #[arg(long, conflicts_with = "word")]
    coxeter: Option<String>,
    /// Word form, e.g. "s2 s1 s3 s6 s5 s4 s8 s7"
    #[arg(long)]
    word: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the classical correspondence to a filling
    Gansner {
        #[command(flatten)]
        filling: FillingInput,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Apply the Coxeter-parametrized correspondence to a filling
    Coxrsk {
        #[command(flatten)]
        filling: FillingInput,
        #[command(flatten)]
        coxeter: CoxeterInput,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print the Coxeter element whose correspondence is the classical one
    SpecialCoxeter {
        #[arg(long)]
        shape: String,
    },
    /// Recover the filling a correspondence sends to a given RPP
    Invert {
        /// Path to the target RPP as a filling JSON document
        #[arg(long)]
        rpp: String,
        #[arg(long)]
        shape: Option<String>,
        #[command(flatten)]
        coxeter: CoxeterInput,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Greene-Kleitman invariant of a weighted DAG
    Gk {
        /// Path to a DAG JSON document
        #[arg(long)]
        dag: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// With --format dot, highlight an optimal tuple of this many paths
        #[arg(long)]
        witness: Option<usize>,
    },
    /// Antichain width of a weighted DAG
    Width {
        #[arg(long)]
        dag: String,
    },
    /// Emit an AR quiver (or one slice) as Graphviz DOT
    Ar {
        #[command(flatten)]
        coxeter: CoxeterInput,
        /// Restrict to the slice with this index
        #[arg(long)]
        slice: Option<usize>,
        /// Weight the vertices by lifting this filling (JSON path)
        #[arg(long)]
        filling: Option<String>,
        #[arg(long)]
        shape: Option<String>,
    },
    /// List all Coxeter elements of a given degree, one cycle per line
    CoxeterList {
        #[arg(long)]
        n: usize,
    },
    /// Run the invariant battery; exits 2 on any violation
    Verify {
        /// Restrict the correspondence suites to these shapes (repeatable)
        #[arg(long)]
        shape: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_entry: u64,
        /// Sweep every Coxeter element instead of the distinguished pair
        #[arg(long)]
        all_coxeter: bool,
        /// Random instances per randomized suite
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version leave through clap's non-error path
            if e.use_stderr() {
                eprint!("{}", e);
                return ExitCode::from(1);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(1)
        }
    }
}

fn text(e: impl Display) -> String {
    e.to_string()
}

fn load_filling(input: &FillingInput) -> Result<Filling, String> {
    let raw =
        fs::read_to_string(&input.filling).map_err(|e| format!("{}: {}", input.filling, e))?;
    let filling = io::parse_filling_json(&raw).map_err(|e| format!("{}: {}", input.filling, e))?;
    if let Some(shape_arg) = &input.shape {
        let shape = io::parse_shape_arg(shape_arg).map_err(text)?;
        if filling.shape() != &shape {
            return Err(format!(
                "--shape {} disagrees with the document shape {}",
                shape,
                filling.shape()
            ));
        }
    }
    Ok(filling)
}

fn load_dag(path: &str) -> Result<WeightedDag, String> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    io::parse_dag_json(&raw).map_err(|e| format!("{}: {}", path, e))
}

fn parse_coxeter(input: &CoxeterInput) -> Result<Option<CoxeterElement>, String> {
    match (&input.coxeter, &input.word) {
        (Some(cycle), None) => Ok(Some(io::parse_cycle_arg(cycle).map_err(text)?)),
        (None, Some(word)) => Ok(Some(io::parse_word_arg(word).map_err(text)?)),
        (None, None) => Ok(None),
        (Some(_), Some(_)) => Err("--coxeter and --word are mutually exclusive".to_string()),
    }
}

fn require_coxeter(input: &CoxeterInput) -> Result<CoxeterElement, String> {
    parse_coxeter(input)?.ok_or_else(|| "one of --coxeter or --word is required".to_string())
}

fn emit_filling(f: &Filling, format: Format) -> Result<(), String> {
    match format {
        Format::Plain => println!("{}", f),
        Format::Json => {
            let doc = FillingDoc::from_filling(f);
            println!("{}", serde_json::to_string(&doc).map_err(text)?);
        }
        Format::Dot => return Err("fillings have no DOT form; use plain or json".to_string()),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gansner { filling, format } => {
            let f = load_filling(&filling)?;
            emit_filling(&gansner_rsk(&f), format)?;
        }
        Command::Coxrsk {
            filling,
            coxeter,
            format,
        } => {
            let f = load_filling(&filling)?;
            let c = require_coxeter(&coxeter)?;
            let g = coxeter_rsk(&c, &f).map_err(text)?;
            emit_filling(&g, format)?;
        }
        Command::SpecialCoxeter { shape } => {
            let shape = io::parse_shape_arg(&shape).map_err(text)?;
            println!("{}", special_coxeter(&shape));
        }
        Command::Invert {
            rpp,
            shape,
            coxeter,
            format,
        } => {
            let input = FillingInput {
                shape,
                filling: rpp,
            };
            let g = load_filling(&input)?;
            let variant = match parse_coxeter(&coxeter)? {
                Some(c) => RskVariant::Coxeter(c),
                None => RskVariant::Gansner,
            };
            match invert_rsk(&variant, &g).map_err(text)? {
                Some(f) => emit_filling(&f, format)?,
                None => {
                    return Err(
                        "no preimage: the target is not in the image of this map".to_string()
                    )
                }
            }
        }
        Command::Gk {
            dag,
            format,
            witness,
        } => {
            let dag = load_dag(&dag)?;
            match format {
                Format::Plain => {
                    let gk = gk_invariant(&dag);
                    let parts: Vec<String> = gk.parts().iter().map(|p| p.to_string()).collect();
                    println!("{}", parts.join(" "));
                }
                Format::Json => {
                    let gk = gk_invariant(&dag);
                    let value = serde_json::json!({
                        "parts": gk.parts(),
                        "prefix_maxima": gk.prefix_maxima(),
                        "width": gk.width(),
                    });
                    println!("{}", value);
                }
                Format::Dot => {
                    let highlight = match witness {
                        Some(ell) => {
                            let gk = gk_invariant_with_witnesses(&dag);
                            if ell == 0 || ell > gk.width() {
                                return Err(format!(
                                    "witness level {} out of range 1..={}",
                                    ell,
                                    gk.width()
                                ));
                            }
                            Some(gk.witnesses().unwrap()[ell - 1].clone())
                        }
                        None => None,
                    };
                    print!("{}", dot::weighted_dag(&dag, highlight.as_ref()));
                }
            }
        }
        Command::Width { dag } => {
            let dag = load_dag(&dag)?;
            println!("{}", antichain_width(&dag));
        }
        Command::Ar {
            coxeter,
            slice,
            filling,
            shape,
        } => {
            let c = require_coxeter(&coxeter)?;
            let lift = match filling {
                Some(path) => {
                    let input = FillingInput {
                        shape,
                        filling: path,
                    };
                    let f = load_filling(&input)?;
                    let expected = f.shape().hook_length() + 1;
                    if expected != c.degree() {
                        return Err(format!(
                            "element degree {} does not match the shape's {}",
                            c.degree(),
                            expected
                        ));
                    }
                    Some(LiftedFilling::new(&f))
                }
                None => None,
            };
            let quiver = c.ar_quiver();
            match slice {
                Some(m) => {
                    let s = quiver.slice(m).map_err(text)?;
                    print!("{}", dot::ar_slice(&s, lift.as_ref()));
                }
                None => print!("{}", dot::ar_quiver(&quiver, lift.as_ref())),
            }
        }
        Command::CoxeterList { n } => {
            for c in CoxeterElement::enumerate(n).map_err(text)? {
                println!("{}", c);
            }
        }
        Command::Verify {
            shape,
            max_entry,
            all_coxeter,
            samples,
            seed,
        } => {
            let shapes = if shape.is_empty() {
                None
            } else {
                let mut parsed = Vec::new();
                for s in &shape {
                    parsed.push(io::parse_shape_arg(s).map_err(text)?);
                }
                Some(parsed)
            };
            let defaults = VerifyOptions::default();
            let options = VerifyOptions {
                shapes,
                max_entry,
                all_coxeter,
                samples: samples.unwrap_or(defaults.samples),
                conservation_samples: samples.unwrap_or(defaults.conservation_samples),
                seed,
            };
            let report = verify::run(&options);
            print!("{}", report.render());
            if !report.passed() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
