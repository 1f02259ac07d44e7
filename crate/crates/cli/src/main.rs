use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use fitch_core::io::{
    detect_format, graph_to_dot, parse_edgelist, parse_newick, serialize_arclist,
    serialize_edgelist, serialize_newick, tree_to_dot, Format,
};
use fitch_core::oracle::{check_report, realizable_graphs, Verdict};
use fitch_core::{
    directed_fitch, explain, explains, is_least_resolved, recognize, undirected_fitch, Explanation,
    LabeledTree, Recognition, SimpleGraph, TreeMode,
};

/// Fitch graphs of {0,1}-edge-labeled trees.
///
/// Trees are read as labeled Newick, graphs as edge lists. `-` reads from
/// stdin. Exit status: 0 accept, 1 reject, 2 usage or input error.
#[derive(Parser)]
#[command(name = "fitch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Fitch graph of a tree as an edge list.
    Compute {
        tree: PathBuf,
        /// Directed Fitch graph as an arc list; needs a rooted tree.
        #[arg(long)]
        directed: bool,
    },
    /// Decide whether a graph is complete multipartite.
    Recognize { graph: PathBuf },
    /// Print a tree explaining a graph, or the obstruction.
    Explain {
        graph: PathBuf,
        /// Contract one edge of the canonical tree where possible.
        #[arg(long)]
        minimal: bool,
    },
    /// Check whether a tree explains a graph.
    Verify {
        tree: PathBuf,
        graph: PathBuf,
        /// Also check that no edge can be contracted.
        #[arg(long)]
        least_resolved: bool,
    },
    /// Compare realizable and recognized graphs on n leaves exhaustively.
    Enumerate {
        n: usize,
        /// List every realizable graph.
        #[arg(long)]
        report: bool,
    },
    /// Export a tree or graph as DOT.
    Dot { input: PathBuf },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_tree(path: &Path) -> Result<LabeledTree> {
    let text = read_input(path)?;
    match detect_format(&text) {
        Some(Format::Newick) => {
            parse_newick(&text).with_context(|| format!("{}: invalid Newick", path.display()))
        }
        Some(Format::EdgeList) => bail!(
            "{}: expected a Newick tree, found an edge list",
            path.display()
        ),
        None => bail!("{}: empty input", path.display()),
    }
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    let text = read_input(path)?;
    match detect_format(&text) {
        Some(Format::EdgeList) => {
            parse_edgelist(&text).with_context(|| format!("{}: invalid edge list", path.display()))
        }
        Some(Format::Newick) => bail!(
            "{}: expected an edge list, found a Newick tree",
            path.display()
        ),
        None => bail!("{}: empty input", path.display()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs a command, writing results to `out`. `Ok(false)` is a clean reject.
fn run(command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Compute { tree, directed } => {
            let t = load_tree(&tree)?;
            if directed {
                if t.root().is_none() {
                    bail!(
                        "{}: directed Fitch graph needs a rooted tree",
                        tree.display()
                    );
                }
                write!(out, "{}", serialize_arclist(&directed_fitch(&t)?))?;
            } else {
                write!(out, "{}", serialize_edgelist(&undirected_fitch(&t)?))?;
            }
            Ok(true)
        }
        Command::Recognize { graph } => match recognize(&load_graph(&graph)?)? {
            Recognition::Multipartite(p) => {
                writeln!(out, "blocks: {p}")?;
                Ok(true)
            }
            Recognition::Forbidden(w) => {
                writeln!(out, "witness: {w}")?;
                Ok(false)
            }
        },
        Command::Explain { graph, minimal } => {
            let mode = if minimal {
                TreeMode::Minimal
            } else {
                TreeMode::Canonical
            };
            match explain(&load_graph(&graph)?, mode)? {
                Explanation::Tree(t) => {
                    writeln!(out, "{}", serialize_newick(&t)?)?;
                    Ok(true)
                }
                Explanation::Forbidden(w) => {
                    writeln!(out, "witness: {w}")?;
                    Ok(false)
                }
            }
        }
        Command::Verify {
            tree,
            graph,
            least_resolved,
        } => {
            let t = load_tree(&tree)?;
            let g = load_graph(&graph)?;
            let ok = explains(&t, &g)?;
            writeln!(out, "explains: {}", yes_no(ok))?;
            if !least_resolved {
                return Ok(ok);
            }
            let lr = ok && is_least_resolved(&t, &g)?;
            writeln!(out, "least-resolved: {}", yes_no(lr))?;
            Ok(lr)
        }
        Command::Enumerate { n, report } => {
            let r = realizable_graphs(n)?;
            write!(out, "{}", r.to_text(report))?;
            match check_report(&r)? {
                Verdict::Pass => {
                    writeln!(out, "status: PASS")?;
                    Ok(true)
                }
                Verdict::Counterexample { graph, direction } => {
                    let edges: Vec<String> =
                        graph.edges().map(|(a, b)| format!("{a}-{b}")).collect();
                    writeln!(out, "status: FAIL")?;
                    writeln!(out, "counterexample: {} ({direction:?})", edges.join(" "))?;
                    Ok(false)
                }
            }
        }
        Command::Dot { input } => {
            let text = read_input(&input)?;
            let dot = match detect_format(&text) {
                Some(Format::Newick) => tree_to_dot(
                    &parse_newick(&text)
                        .with_context(|| format!("{}: invalid Newick", input.display()))?,
                ),
                Some(Format::EdgeList) => graph_to_dot(
                    &parse_edgelist(&text)
                        .with_context(|| format!("{}: invalid edge list", input.display()))?,
                ),
                None => return Err(anyhow!("{}: empty input", input.display())),
            };
            write!(out, "{dot}")?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out).and_then(|accepted| {
        out.flush()?;
        Ok(accepted)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
