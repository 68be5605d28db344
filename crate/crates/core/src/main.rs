use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use invtree::enumeration::{enumerate_invertible, enumerate_trees, max_vertices_from_env};
use invtree::exchange::{exchange_candidates, normalize_move, verify_exchange_lemma};
use invtree::inverse::{exact_inverse, simple_graph_dot, InvertibleTree};
use invtree::poset::build_poset;
use invtree::spectral::{median_eigenvalue, spectrum, DEFAULT_TOL};
use invtree::verify::run_verification;
use invtree::{parse_tree, Edge, Error, Tree};

#[derive(Parser)]
#[command(
    name = "invtree",
    version,
    about = "Inverses of trees with perfect matchings"
)]
struct Cli {
    /// Largest vertex count to enumerate (overrides INVTREE_MAX_VERTICES).
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List one tree per isomorphism class.
    Enumerate {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        invertible_only: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Elist)]
        format: ListFormat,
        /// Directory for `.elist` files, or file for JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the inverse graph of a tree.
    Invert {
        /// `.elist` file, or `-` for stdin.
        tree: PathBuf,
        #[arg(long)]
        signed: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Elist)]
        format: GraphFormat,
    },
    /// Print eigenvalues in increasing order.
    Spectrum {
        tree: PathBuf,
        #[arg(long)]
        median: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Apply one tree-exchange step, or list the valid ones.
    Exchange {
        tree: PathBuf,
        /// Edge to insert, given either as e or as its image phi(e).
        #[arg(long, requires = "remove")]
        add: Option<Edge>,
        #[arg(long, requires = "add")]
        remove: Option<Edge>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Elist)]
        format: TreeFormat,
    },
    /// Build the exchange poset on invertible trees with 2n vertices.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
    },
    /// Check every result on all invertible trees up to 2 * max-n vertices.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Elist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Elist,
    Dot,
    Json,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Elist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

enum Failure {
    Input(String),
    Bound(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Ok(parse_tree(&text)?)
}

fn check_bound(vertices: usize, bound: usize) -> Result<(), Failure> {
    if vertices > bound {
        Err(Error::BoundExceeded {
            requested: vertices,
            bound,
        }
        .into())
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct ClassJson<'a> {
    code: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip)]
    _tree: &'a Tree,
}

#[derive(Serialize)]
struct SpectrumJson {
    values: Vec<f64>,
    median: Option<f64>,
    tol: f64,
}

#[derive(Serialize)]
struct ExchangeJson<'a> {
    #[serde(rename = "move")]
    mv: invtree::ExchangeMove,
    tree: &'a Tree,
    inverse_edges_before: usize,
    inverse_edges_after: usize,
    lemma_holds: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let bound = cli.max_vertices.unwrap_or_else(max_vertices_from_env);
    match cli.command {
        Command::Enumerate {
            vertices,
            invertible_only,
            format,
            out,
        } => {
            let classes = if invertible_only {
                enumerate_invertible(vertices, bound)?
            } else {
                enumerate_trees(vertices, bound)?
            };
            match format {
                ListFormat::Elist => {
                    if let Some(dir) = &out {
                        fs::create_dir_all(dir)?;
                        for (i, tree) in classes.representatives().enumerate() {
                            fs::write(dir.join(format!("{i:04}.elist")), tree.to_elist())?;
                        }
                    }
                    println!("{} classes", classes.len());
                }
                ListFormat::Json => {
                    let doc: Vec<ClassJson> = classes
                        .iter()
                        .map(|(code, t)| ClassJson {
                            code: code.to_string(),
                            n: t.n(),
                            edges: t.edges().iter().map(|e| [e.0, e.1]).collect(),
                            _tree: t,
                        })
                        .collect();
                    let text = serde_json::to_string_pretty(&doc).expect("serializable");
                    match &out {
                        Some(path) => {
                            fs::write(path, text + "\n")?;
                            println!("{} classes", classes.len());
                        }
                        None => println!("{text}"),
                    }
                }
            }
        }
        Command::Invert {
            tree,
            signed,
            format,
        } => {
            let tree = read_tree(&tree)?;
            let inv = InvertibleTree::new(tree.clone())?;
            let g = inv.inverse_graph();
            let text = match (format, signed) {
                (GraphFormat::Elist, true) => g.to_elist(),
                (GraphFormat::Elist, false) => g.underlying().to_elist(),
                (GraphFormat::Dot, true) => g.to_dot("inverse", Some(inv.matching())),
                (GraphFormat::Dot, false) => {
                    simple_graph_dot(&g.underlying(), "inverse", Some(inv.matching()))
                }
                (GraphFormat::Json, true) => g.to_json() + "\n",
                (GraphFormat::Json, false) => {
                    let edges: Vec<[usize; 2]> =
                        g.underlying().edges().map(|e| [e.0, e.1]).collect();
                    serde_json::to_string_pretty(&serde_json::json!({"n": g.n(), "edges": edges}))
                        .expect("serializable")
                        + "\n"
                }
                (GraphFormat::Matrix, _) => {
                    let m = if signed {
                        g.matrix()
                    } else {
                        exact_inverse(&tree)?
                    };
                    serde_json::to_string(&m).expect("serializable") + "\n"
                }
            };
            print!("{text}");
        }
        Command::Spectrum {
            tree,
            median,
            json,
            tol,
        } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Input("tolerance must be positive".into()));
            }
            let tree = read_tree(&tree)?;
            let eig = spectrum(&tree, tol);
            let med = if tree.n() % 2 == 0 {
                Some(median_eigenvalue(&tree)?)
            } else {
                None
            };
            if json {
                let doc = SpectrumJson {
                    values: eig.values.clone(),
                    median: med,
                    tol,
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else if median {
                let m = med.ok_or(Error::OddOrder(tree.n()))?;
                println!("{m:.7}");
            } else {
                for v in &eig.values {
                    println!("{v:.7}");
                }
            }
        }
        Command::Exchange {
            tree,
            add,
            remove,
            format,
        } => {
            let tree = read_tree(&tree)?;
            match (add, remove) {
                (Some(add), Some(remove)) => {
                    let mv = normalize_move(&tree, add, remove)?;
                    let report = verify_exchange_lemma(&tree, &mv)?;
                    match format {
                        TreeFormat::Elist => print!("{}", report.result.to_elist()),
                        TreeFormat::Json => {
                            let doc = ExchangeJson {
                                mv,
                                tree: &report.result,
                                inverse_edges_before: report.inverse_edges_before,
                                inverse_edges_after: report.inverse_edges_after,
                                lemma_holds: report.passed(),
                            };
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&doc).expect("serializable")
                            );
                        }
                    }
                    if !report.passed() {
                        eprintln!("exchange checks failed: {:?}", report.failures);
                        return Err(Failure::Verification);
                    }
                }
                _ => {
                    let moves = exchange_candidates(&tree)?;
                    match format {
                        TreeFormat::Elist => {
                            for m in &moves {
                                println!(
                                    "add {},{} remove {},{} source {},{}",
                                    m.add.0,
                                    m.add.1,
                                    m.remove.0,
                                    m.remove.1,
                                    m.source_inverse_edge.0,
                                    m.source_inverse_edge.1
                                );
                            }
                        }
                        TreeFormat::Json => {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&moves).expect("serializable")
                            )
                        }
                    }
                }
            }
        }
        Command::Poset { n, format } => {
            check_bound(2 * n, bound)?;
            let poset = build_poset(n, bound)?;
            match format {
                PosetFormat::Dot => print!("{}", poset.to_dot()),
                PosetFormat::Json => println!("{}", poset.to_json()),
            }
        }
        Command::Verify { max_n, json } => {
            check_bound(2 * max_n, bound)?;
            let report = run_verification(max_n, bound)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", report.render());
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("warning: {e}");
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
