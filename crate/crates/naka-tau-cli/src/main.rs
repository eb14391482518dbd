//! naka-tau: a command-line workbench for the tau-tilting theory of
//! Nakayama algebras.
//!
//! Algebras are given as JSON files
//! (`{"components":[{"kind":"cyclic","kupisch":[3,3,3,3]}]}`) or by the
//! built-in names a3, a4, d3, e5, n2. Modules use the text forms
//! `m:<comp>:<top>:<len>`, `p:<comp>:<vertex>` and `p:<comp>:<vertex>[1]`.
//! Exit codes: 0 success, 1 domain error, 2 usage error.

mod verify;

use clap::{Args, Parser, Subcommand};
use naka_tau::algebra::{parse_signed_list, Algebra, Pair};
use naka_tau::sequences::{ExcSeq, OrderedRigid};
use naka_tau::{disk, mutation, named, reduction, sequences, tilting};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "naka-tau", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArg {
    /// Built-in name (a3, a4, d3, e5, n2) or path to a JSON spec file
    #[arg(long)]
    algebra: String,
}

impl AlgebraArg {
    fn load(&self) -> Result<Algebra, String> {
        if let Some(alg) = named::by_name(&self.algebra) {
            return Ok(alg);
        }
        let raw = std::fs::read_to_string(&self.algebra)
            .map_err(|e| format!("cannot read {}: {e}", self.algebra))?;
        Algebra::parse_components(&raw)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate or list algebras
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Bongartz or co-Bongartz completion of a tau-rigid pair
    Complete {
        #[arg(value_parser = ["bongartz", "cobongartz"])]
        which: String,
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Comma-separated summands, e.g. `m:0:1:2,p:0:2[1]`
        #[arg(long)]
        pair: String,
        #[arg(long)]
        json: bool,
    },
    /// Jasso reduction: print the reduced algebra and its relative
    /// projectives
    Reduce {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        json: bool,
    },
    /// The signed tau-exceptional sequence of an ordered tau-rigid pair
    Psi {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Ordered comma-separated summands
        #[arg(long)]
        order: String,
        #[arg(long)]
        json: bool,
    },
    /// The ordered tau-rigid pair inducing a signed sequence
    PsiInv {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Comma-separated sequence entries
        #[arg(long)]
        seq: String,
        #[arg(long)]
        json: bool,
    },
    /// Left mutation of a TF-ordered module
    Mutate {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        order: String,
        /// Mutation position (1-indexed); defaults to the last pair
        #[arg(long)]
        pos: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The mutation orbit of a TF-ordered module at a position
    Orbit {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        order: String,
        #[arg(long)]
        pos: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Export the exchange graph or the TF-mutation graph
    Graph {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_parser = ["stautilt", "tf"], default_value = "stautilt")]
        kind: String,
        #[arg(long, value_parser = ["json", "dot"], default_value = "json")]
        format: String,
    },
    /// Run a verification suite
    Verify {
        /// hom-models, completions, emap, vmap, psi, mutation-cases,
        /// irregular, tf-counts, transitivity, braid, disk
        suite: String,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Draw a pair on the punctured disk
    Draw {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        pair: String,
        /// Complete the pair first
        #[arg(long, value_parser = ["bongartz", "cobongartz"])]
        complete: Option<String>,
        #[arg(long, value_parser = ["svg", "tikz"], default_value = "svg")]
        format: String,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<String>,
        /// Draw shifted projectives even where the signed model is not
        /// justified
        #[arg(long)]
        decorative: bool,
    },
}

#[derive(Subcommand)]
enum AlgebraAction {
    /// Check a spec file against the Kupisch constraints
    Validate {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in algebras
    List {
        #[arg(long)]
        json: bool,
    },
}

fn parse_pair(alg: &Algebra, s: &str) -> Result<Pair, String> {
    let entries = parse_signed_list(alg, s).map_err(|e| e.to_string())?;
    let pair = Pair::from_signed(&entries);
    if pair.size() != entries.len() {
        return Err("pair has repeated summands".into());
    }
    Ok(pair)
}

fn parse_order(alg: &Algebra, s: &str) -> Result<OrderedRigid, String> {
    let entries = parse_signed_list(alg, s).map_err(|e| e.to_string())?;
    OrderedRigid::new(alg, entries).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Algebra { action } => match action {
            AlgebraAction::Validate { algebra, json } => {
                let alg = algebra.load()?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({"valid": true, "rank": alg.rank(),
                                           "components": alg.components})
                    );
                } else {
                    println!("valid, rank {}", alg.rank());
                }
                Ok(())
            }
            AlgebraAction::List { json } => {
                if json {
                    let list: Vec<serde_json::Value> = named::NAMES
                        .iter()
                        .map(|n| {
                            let alg = named::by_name(n).unwrap();
                            serde_json::json!({"name": n, "rank": alg.rank(),
                                               "components": alg.components})
                        })
                        .collect();
                    println!("{}", serde_json::json!(list));
                } else {
                    for n in named::NAMES {
                        let alg = named::by_name(n).unwrap();
                        println!("{n}: {}", alg.to_spec_json());
                    }
                }
                Ok(())
            }
        },
        Command::Complete {
            which,
            algebra,
            pair,
            json,
        } => {
            let alg = algebra.load()?;
            let pair = parse_pair(&alg, &pair)?;
            let result = match which.as_str() {
                "bongartz" => tilting::bongartz(&alg, &pair),
                _ => tilting::cobongartz(&alg, &pair),
            }
            .map_err(|e| e.to_string())?;
            if json {
                let summands: Vec<String> =
                    result.summands().iter().map(|s| s.text(&alg)).collect();
                println!("{}", serde_json::json!({"completion": summands}));
            } else {
                println!("{}", result.text(&alg));
            }
            Ok(())
        }
        Command::Reduce { algebra, pair, json } => {
            let alg = algebra.load()?;
            let pair = parse_pair(&alg, &pair)?;
            let wide = reduction::jasso(&alg, &pair).map_err(|e| e.to_string())?;
            let rels: Vec<String> = wide
                .rel_projectives
                .iter()
                .map(|r| r.text(&alg))
                .collect();
            if json {
                println!(
                    "{}",
                    serde_json::json!({"gamma": {"components": wide.gamma.components},
                                       "rel_projectives": rels})
                );
            } else {
                println!("gamma: {}", wide.gamma.to_spec_json());
                println!("relative projectives: {}", rels.join(", "));
            }
            Ok(())
        }
        Command::Psi {
            algebra,
            order,
            json,
        } => {
            let alg = algebra.load()?;
            let t = parse_order(&alg, &order)?;
            let seq = sequences::psi(&alg, &t).map_err(|e| e.to_string())?;
            if json {
                let entries: Vec<String> =
                    seq.entries.iter().map(|e| e.text(&alg)).collect();
                println!("{}", serde_json::json!({"sequence": entries}));
            } else {
                println!("{}", seq.text(&alg));
            }
            Ok(())
        }
        Command::PsiInv { algebra, seq, json } => {
            let alg = algebra.load()?;
            let entries = parse_signed_list(&alg, &seq).map_err(|e| e.to_string())?;
            let t = sequences::psi_inverse(&alg, &ExcSeq { entries })
                .map_err(|e| e.to_string())?;
            if json {
                let entries: Vec<String> = t.entries.iter().map(|e| e.text(&alg)).collect();
                println!("{}", serde_json::json!({"order": entries}));
            } else {
                println!("{}", t.text(&alg));
            }
            Ok(())
        }
        Command::Mutate {
            algebra,
            order,
            pos,
            json,
        } => {
            let alg = algebra.load()?;
            let t = parse_order(&alg, &order)?;
            let pos = pos.unwrap_or_else(|| t.len().saturating_sub(1));
            let case = if pos + 1 == t.len() && t.len() >= 2 {
                let b = t.entries[t.len() - 2].module;
                let c = t.entries[t.len() - 1].module;
                mutation::classify_pair(&alg, &b, &c).ok()
            } else {
                None
            };
            let mutated = mutation::mutate_at(&alg, &t, pos).map_err(|e| e.to_string())?;
            if json {
                let entries: Vec<String> =
                    mutated.entries.iter().map(|e| e.text(&alg)).collect();
                println!(
                    "{}",
                    serde_json::json!({"case": case.map(|c| c.to_string()),
                                       "position": pos,
                                       "result": entries})
                );
            } else {
                if let Some(case) = case {
                    println!("case {case}");
                }
                println!("{}", mutated.text(&alg));
            }
            Ok(())
        }
        Command::Orbit {
            algebra,
            order,
            pos,
            json,
        } => {
            let alg = algebra.load()?;
            let t = parse_order(&alg, &order)?;
            let pos = pos.unwrap_or_else(|| t.len().saturating_sub(1));
            let orbit = mutation::orbit(&alg, &t, pos).map_err(|e| e.to_string())?;
            if json {
                let steps: Vec<Vec<String>> = orbit
                    .iter()
                    .map(|o| o.entries.iter().map(|e| e.text(&alg)).collect())
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({"length": orbit.len(), "position": pos,
                                       "orbit": steps})
                );
            } else {
                println!("length {}", orbit.len());
                for o in &orbit {
                    println!("{}", o.text(&alg));
                }
            }
            Ok(())
        }
        Command::Graph {
            algebra,
            kind,
            format,
        } => {
            let alg = algebra.load()?;
            let (nodes, edges): (Vec<String>, Vec<(usize, usize, String)>) =
                if kind == "stautilt" {
                    let g = tilting::enumerate_stautilt(&alg);
                    (
                        g.nodes.iter().map(|n| n.text(&alg)).collect(),
                        g.edges
                            .iter()
                            .map(|(a, b, x)| (*a, *b, x.text(&alg)))
                            .collect(),
                    )
                } else {
                    let g = mutation::mutation_graph(&alg);
                    (
                        g.nodes.iter().map(|n| n.text(&alg)).collect(),
                        g.edges
                            .iter()
                            .map(|(a, b, i)| (*a, *b, format!("{i}")))
                            .collect(),
                    )
                };
            if format == "dot" {
                println!("digraph {{");
                for (i, n) in nodes.iter().enumerate() {
                    println!("  n{i} [label=\"{n}\"];");
                }
                for (a, b, label) in &edges {
                    println!("  n{a} -> n{b} [label=\"{label}\"];");
                }
                println!("}}");
            } else {
                let edges: Vec<serde_json::Value> = edges
                    .iter()
                    .map(|(a, b, x)| {
                        serde_json::json!({"from": a, "to": b, "exchanged": x})
                    })
                    .collect();
                println!("{}", serde_json::json!({"nodes": nodes, "edges": edges}));
            }
            Ok(())
        }
        Command::Verify {
            suite,
            algebra,
            json,
        } => {
            let algebras: Vec<(String, Algebra)> = match algebra {
                Some(name) => {
                    let arg = AlgebraArg {
                        algebra: name.clone(),
                    };
                    vec![(name, arg.load()?)]
                }
                None => named::NAMES
                    .iter()
                    .map(|n| (n.to_string(), named::by_name(n).unwrap()))
                    .collect(),
            };
            let report = verify::run_suite(&suite, &algebras)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{}", report.to_text());
            }
            if report.passed {
                Ok(())
            } else {
                Err(format!("suite {suite} failed"))
            }
        }
        Command::Draw {
            algebra,
            pair,
            complete,
            format,
            output,
            decorative,
        } => {
            let alg = algebra.load()?;
            let mut pair = parse_pair(&alg, &pair)?;
            match complete.as_deref() {
                Some("bongartz") => {
                    pair = tilting::bongartz(&alg, &pair).map_err(|e| e.to_string())?
                }
                Some(_) => pair = tilting::cobongartz(&alg, &pair).map_err(|e| e.to_string())?,
                None => {}
            }
            let diagram =
                disk::diagram_of_pair(&alg, &pair, decorative).map_err(|e| e.to_string())?;
            let text = disk::render(&alg, &diagram, &format).map_err(|e| e.to_string())?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("cannot write {path}: {e}"))?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
