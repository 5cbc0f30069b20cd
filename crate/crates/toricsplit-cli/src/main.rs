//! Command line front end: parses inputs, dispatches to the library and
//! renders deterministic text or JSON reports.
//!
//! Exit codes: 0 on success (whatever the mathematical answer), 2 on invalid
//! input, 3 when a configured resource cap is exceeded.

mod input;
mod report;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::process::ExitCode;

use toricsplit::config::{Limits, MoveVector};
use toricsplit::curve::{gorenstein_splitting, is_gorenstein, semigroup_profile};
use toricsplit::gluing::{detect_gluing, search_gluing, ColumnPartition};
use toricsplit::graph::{
    config_from_graph, four_cycle_system, tree_cover_check_with_limit, SimpleGraph,
};
use toricsplit::markov::{
    count_minimal_systems, enumerate_minimal_systems, markov_basis, minimal_system,
};
use toricsplit::splitting::{
    decide_splittable, enumerate_splittings, realize_splitting, verify_splitting, Splitting,
};
use toricsplit::{Configuration, Error, IntMatrix};

#[derive(Parser)]
#[command(
    name = "toricsplit",
    version,
    about = "Exact toric ideal splittings, minimal binomial generators, gluings and graph ideals"
)]
struct Cli {
    /// Render the report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the number of elements of a single fiber
    #[arg(long, global = true, default_value_t = 100_000)]
    max_fiber: usize,
    /// Cap on the number of enumerated minimal systems
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_systems: usize,
    /// Largest column count for the exhaustive gluing partition search
    #[arg(long, global = true, default_value_t = 16)]
    max_partitions: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Binomial generating set (Markov basis) of the toric ideal
    Markov { file: String },
    /// Minimal systems of binomial generators
    Minsys {
        file: String,
        /// Print only the number of distinct minimal systems
        #[arg(long)]
        count: bool,
        /// Enumerate all distinct minimal systems
        #[arg(long)]
        all: bool,
        /// Print only the indispensable generators
        #[arg(long)]
        indispensable: bool,
    },
    /// Splittability of the toric ideal
    Split {
        #[command(subcommand)]
        action: SplitAction,
    },
    /// Semigroup gluings
    Gluing {
        #[command(subcommand)]
        action: GluingAction,
    },
    /// Numerical semigroup profile (Apéry set, Frobenius number, gaps)
    Semigroup {
        /// Positive generators with gcd 1
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Also report whether the semigroup is symmetric (Gorenstein)
        #[arg(long)]
        gorenstein: bool,
        /// Construct and verify the monomial curve splitting (4 generators)
        #[arg(long)]
        split: bool,
    },
    /// Toric ideals of graphs
    Graph {
        #[command(subcommand)]
        family: GraphFamily,
    },
    /// Verify a claimed splitting: three matrix files A, A1, A2
    Verify { a: String, a1: String, a2: String },
}

#[derive(Subcommand)]
enum SplitAction {
    /// Decide splittability and print a witness partition if one exists
    Decide { file: String },
    /// Enumerate all splittings (as canonical subspace pairs)
    Enumerate { file: String },
    /// Realize the first splitting as integer matrices
    Construct { file: String },
}

#[derive(Subcommand)]
enum GluingAction {
    /// Check one column partition, e.g. --partition "1,2|3,4,5"
    Detect {
        file: String,
        #[arg(long)]
        partition: String,
    },
    /// Search all column partitions for a gluing
    Search { file: String },
}

#[derive(Args)]
struct GraphAnalyses {
    /// Run the splittability decision
    #[arg(long)]
    split: bool,
    /// Print the minimal generating system
    #[arg(long)]
    minsys: bool,
    /// Print the number of distinct minimal systems
    #[arg(long)]
    count: bool,
}

#[derive(Subcommand)]
enum GraphFamily {
    /// Complete bipartite graph K_{m,n}
    Bipartite {
        m: usize,
        n: usize,
        #[command(flatten)]
        analyses: GraphAnalyses,
    },
    /// Complete graph K_n
    Complete {
        n: usize,
        #[command(flatten)]
        analyses: GraphAnalyses,
    },
    /// Exhaustively check spanning-tree covers of K_n (n <= limit)
    Treecover {
        n: usize,
        /// Exhaustion limit for n
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
}

struct Report {
    text: String,
    json: Value,
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli) {
        Ok(report) => {
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("valid json")
                );
            } else {
                println!("{}", report.text.trim_end());
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let limits = Limits {
        max_fiber: cli.max_fiber,
        max_systems: cli.max_systems,
        max_partitions: cli.max_partitions,
    };
    let load = |path: &str| -> Result<(Configuration, Value), Failure> {
        let matrix = input::read_matrix(path)?;
        let input_json = json!({ "path": path, "matrix": report::matrix(&matrix) });
        let cfg = Configuration::with_limits(matrix, limits.clone())?;
        Ok((cfg, input_json))
    };

    match cli.command {
        Command::Markov { file } => {
            let (cfg, input_json) = load(&file)?;
            let basis = markov_basis(&cfg)?;
            let mut text = format!("markov basis: {} moves\n", basis.len());
            for m in &basis {
                writeln!(text, "{m}").unwrap();
            }
            let result = json!({ "moves": basis.iter().map(report::move_vec).collect::<Vec<_>>() });
            Ok(Report {
                text,
                json: report::envelope("markov", input_json, result),
            })
        }
        Command::Minsys {
            file,
            count,
            all,
            indispensable,
        } => {
            let (cfg, input_json) = load(&file)?;
            if count {
                let c = count_minimal_systems(&cfg)?;
                let result = json!({ "count": report::big(&c) });
                return Ok(Report {
                    text: format!("{c}\n"),
                    json: report::envelope("minsys.count", input_json, result),
                });
            }
            if all {
                let systems = enumerate_minimal_systems(&cfg)?;
                let mut text = format!("minimal systems: {}\n", systems.len());
                for (i, sys) in systems.iter().enumerate() {
                    let moves: Vec<String> = sys.moves().iter().map(|m| m.to_string()).collect();
                    writeln!(text, "system {}: {}", i + 1, moves.join(" ")).unwrap();
                }
                let result = json!({
                    "systems": systems.iter().map(report::minimal_system).collect::<Vec<_>>(),
                });
                return Ok(Report {
                    text,
                    json: report::envelope("minsys.all", input_json, result),
                });
            }
            let sys = minimal_system(&cfg)?;
            if indispensable {
                let mut text = format!("indispensable: {} moves\n", sys.indispensable().len());
                for m in sys.indispensable() {
                    writeln!(text, "{m}").unwrap();
                }
                let result = json!({
                    "indispensable": sys.indispensable().iter().map(report::move_vec).collect::<Vec<_>>(),
                });
                return Ok(Report {
                    text,
                    json: report::envelope("minsys.indispensable", input_json, result),
                });
            }
            let mut text = format!(
                "minimal system: {} moves ({} indispensable)\n",
                sys.len(),
                sys.indispensable().len()
            );
            for m in sys.moves() {
                let mark = if sys.indispensable().contains(m) {
                    " *"
                } else {
                    ""
                };
                writeln!(text, "{m}{mark}").unwrap();
            }
            for (degree, comps) in sys.betti() {
                let degree = MoveVector::new(degree.clone())
                    .map(|d| d.to_string())
                    .unwrap_or_else(|_| "[0]".into());
                writeln!(
                    text,
                    "degree {}: {} components, fiber size {}",
                    degree,
                    comps.count(),
                    comps.components().iter().map(|c| c.len()).sum::<usize>()
                )
                .unwrap();
            }
            let result = report::minimal_system(&sys);
            Ok(Report {
                text,
                json: report::envelope("minsys", input_json, result),
            })
        }
        Command::Split { action } => match action {
            SplitAction::Decide { file } => {
                let (cfg, input_json) = load(&file)?;
                let witness = decide_splittable(&cfg)?;
                let mut text = format!(
                    "splittable: {}\n",
                    if witness.is_some() { "yes" } else { "no" }
                );
                let result = match &witness {
                    None => json!({ "splittable": false }),
                    Some(w) => {
                        let c1: Vec<String> = w.c1.iter().map(|m| m.to_string()).collect();
                        let c2: Vec<String> = w.c2.iter().map(|m| m.to_string()).collect();
                        writeln!(text, "C1: {}", c1.join(" ")).unwrap();
                        writeln!(text, "C2: {}", c2.join(" ")).unwrap();
                        writeln!(text, "span1: {}", w.span1).unwrap();
                        writeln!(text, "span2: {}", w.span2).unwrap();
                        json!({
                            "splittable": true,
                            "C1": w.c1.iter().map(report::move_vec).collect::<Vec<_>>(),
                            "C2": w.c2.iter().map(report::move_vec).collect::<Vec<_>>(),
                            "span1": report::subspace(&w.span1),
                            "span2": report::subspace(&w.span2),
                        })
                    }
                };
                Ok(Report {
                    text,
                    json: report::envelope("split.decide", input_json, result),
                })
            }
            SplitAction::Enumerate { file } => {
                let (cfg, input_json) = load(&file)?;
                let splittings = enumerate_splittings(&cfg)?;
                let mut text = format!("splittings: {}\n", splittings.len());
                for (i, s) in splittings.iter().enumerate() {
                    let (p1, p2) = s.canonical_pair();
                    writeln!(text, "splitting {}: {} | {}", i + 1, p1, p2).unwrap();
                }
                let result = json!({
                    "splittings": splittings.iter().map(report::splitting).collect::<Vec<_>>(),
                });
                Ok(Report {
                    text,
                    json: report::envelope("split.enumerate", input_json, result),
                })
            }
            SplitAction::Construct { file } => {
                let (cfg, input_json) = load(&file)?;
                match decide_splittable(&cfg)? {
                    None => Ok(Report {
                        text: "splittable: no\n".into(),
                        json: report::envelope(
                            "split.construct",
                            input_json,
                            json!({ "splittable": false }),
                        ),
                    }),
                    Some(witness) => {
                        let splitting = realize_splitting(&cfg, witness)?;
                        let text = render_splitting(&splitting);
                        let result = report::splitting(&splitting);
                        Ok(Report {
                            text,
                            json: report::envelope("split.construct", input_json, result),
                        })
                    }
                }
            }
        },
        Command::Gluing { action } => match action {
            GluingAction::Detect { file, partition } => {
                let (cfg, input_json) = load(&file)?;
                let (s1, s2) = input::parse_partition(&partition)?;
                let partition = ColumnPartition::new(s1, s2, cfg.n())?;
                let cert = detect_gluing(&cfg, &partition)?;
                gluing_report("gluing.detect", input_json, cert)
            }
            GluingAction::Search { file } => {
                let (cfg, input_json) = load(&file)?;
                let cert = search_gluing(&cfg)?;
                gluing_report("gluing.search", input_json, cert)
            }
        },
        Command::Semigroup {
            generators,
            gorenstein,
            split,
        } => {
            let input_json = json!({ "generators": generators });
            let ns = semigroup_profile(&generators)?;
            let mut text = String::new();
            writeln!(
                text,
                "generators: {}",
                ns.generators()
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )
            .unwrap();
            writeln!(text, "frobenius: {}", ns.frobenius()).unwrap();
            writeln!(
                text,
                "gaps ({}): {}",
                ns.gaps().len(),
                ns.gaps()
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )
            .unwrap();
            writeln!(
                text,
                "apery (mod {}): {}",
                ns.generators()[0],
                ns.apery()
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )
            .unwrap();
            let mut result = report::semigroup(&ns);
            if gorenstein {
                let g = is_gorenstein(&ns);
                writeln!(text, "gorenstein: {g}").unwrap();
                result["gorenstein"] = json!(g);
            }
            if split {
                let rows: Vec<Vec<BigInt>> =
                    vec![generators.iter().map(|&g| BigInt::from(g)).collect()];
                let matrix = IntMatrix::from_rows(rows, generators.len())?;
                let cfg = Configuration::with_limits(matrix, limits.clone())?;
                let gs = gorenstein_splitting(&cfg)?;
                text.push_str(&render_splitting(&gs.splitting));
                result["splitting"] = report::splitting(&gs.splitting);
                if let Some((e1, e2)) = &gs.explicit {
                    writeln!(text, "explicit A1:\n{e1}explicit A2:\n{e2}").unwrap();
                    result["explicit"] =
                        json!({ "A1": report::matrix(e1), "A2": report::matrix(e2) });
                }
            }
            Ok(Report {
                text,
                json: report::envelope("semigroup", input_json, result),
            })
        }
        Command::Graph { family } => match family {
            GraphFamily::Bipartite { m, n, analyses } => {
                let g = SimpleGraph::complete_bipartite(m, n);
                let input_json = json!({ "graph": format!("K_{{{m},{n}}}") });
                let mut text = format!(
                    "graph: K_{{{m},{n}}} ({} vertices, {} edges)\n",
                    g.vertices(),
                    g.edges().len()
                );
                let cfg = Configuration::with_limits(
                    config_from_graph(&g)?.matrix().clone(),
                    limits.clone(),
                )?;
                let mut result = json!({
                    "vertices": g.vertices(),
                    "edges": g.edges().len(),
                    "kernel_dim": cfg.kernel().dim(),
                });
                writeln!(text, "kernel dimension: {}", cfg.kernel().dim()).unwrap();
                let sys = four_cycle_system(m, n)?;
                writeln!(text, "four-cycle system: {} moves", sys.len()).unwrap();
                result["four_cycle_moves"] = json!(sys.len());
                graph_analyses(&cfg, &analyses, &mut text, &mut result)?;
                if analyses.minsys {
                    for mv in sys.moves() {
                        writeln!(text, "{mv}").unwrap();
                    }
                    result["minsys"] = report::minimal_system(&sys);
                }
                Ok(Report {
                    text,
                    json: report::envelope("graph.bipartite", input_json, result),
                })
            }
            GraphFamily::Complete { n, analyses } => {
                let g = SimpleGraph::complete(n);
                let input_json = json!({ "graph": format!("K_{n}") });
                let mut text = format!(
                    "graph: K_{n} ({} vertices, {} edges)\n",
                    g.vertices(),
                    g.edges().len()
                );
                let cfg = Configuration::with_limits(
                    config_from_graph(&g)?.matrix().clone(),
                    limits.clone(),
                )?;
                let mut result = json!({
                    "vertices": g.vertices(),
                    "edges": g.edges().len(),
                    "kernel_dim": cfg.kernel().dim(),
                });
                writeln!(text, "kernel dimension: {}", cfg.kernel().dim()).unwrap();
                graph_analyses(&cfg, &analyses, &mut text, &mut result)?;
                if analyses.minsys {
                    let sys = minimal_system(&cfg)?;
                    for mv in sys.moves() {
                        writeln!(text, "{mv}").unwrap();
                    }
                    result["minsys"] = report::minimal_system(&sys);
                }
                Ok(Report {
                    text,
                    json: report::envelope("graph.complete", input_json, result),
                })
            }
            GraphFamily::Treecover { n, limit } => {
                let input_json = json!({ "n": n, "limit": limit });
                let ok = tree_cover_check_with_limit(n, limit)?;
                Ok(Report {
                    text: format!("tree cover check (n={n}): {ok}\n"),
                    json: report::envelope("graph.treecover", input_json, json!({ "holds": ok })),
                })
            }
        },
        Command::Verify { a, a1, a2 } => {
            let matrix_a = input::read_matrix(&a)?;
            let matrix_a1 = input::read_matrix(&a1)?;
            let matrix_a2 = input::read_matrix(&a2)?;
            let input_json = json!({
                "A": report::matrix(&matrix_a),
                "A1": report::matrix(&matrix_a1),
                "A2": report::matrix(&matrix_a2),
            });
            let cfg = Configuration::with_limits(matrix_a, limits)?;
            let r = verify_splitting(&cfg, &matrix_a1, &matrix_a2)?;
            Ok(Report {
                text: format!("{r}\n"),
                json: report::envelope("verify", input_json, report::verification(&r)),
            })
        }
    }
}

fn graph_analyses(
    cfg: &Configuration,
    analyses: &GraphAnalyses,
    text: &mut String,
    result: &mut Value,
) -> Result<(), Failure> {
    if analyses.count {
        let c = count_minimal_systems(cfg)?;
        writeln!(text, "minimal systems: {c}").unwrap();
        result["count"] = report::big(&c);
    }
    if analyses.split {
        let splittable = decide_splittable(cfg)?.is_some();
        writeln!(
            text,
            "splittable: {}",
            if splittable { "yes" } else { "no" }
        )
        .unwrap();
        result["splittable"] = json!(splittable);
    }
    Ok(())
}

fn gluing_report(
    verb: &str,
    input_json: Value,
    cert: Option<toricsplit::gluing::GluingCertificate>,
) -> Result<Report, Failure> {
    match cert {
        None => Ok(Report {
            text: "gluing: none\n".into(),
            json: report::envelope(verb, input_json, json!({ "gluing": false })),
        }),
        Some(cert) => {
            let mut text = String::from("gluing: yes\n");
            writeln!(
                text,
                "S1 (1-based): {}",
                cert.partition
                    .s1
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
            .unwrap();
            writeln!(
                text,
                "S2 (1-based): {}",
                cert.partition
                    .s2
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
            .unwrap();
            let fmt = |v: &[BigInt]| {
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(text, "a: [{}]", fmt(&cert.a)).unwrap();
            writeln!(text, "c: [{}]", fmt(&cert.c)).unwrap();
            writeln!(text, "d: [{}]", fmt(&cert.d)).unwrap();
            let mut result = json!({ "gluing": true });
            result["certificate"] = report::gluing_certificate(&cert);
            Ok(Report {
                text,
                json: report::envelope(verb, input_json, result),
            })
        }
    }
}

fn render_splitting(s: &Splitting) -> String {
    let mut text = String::from("splittable: yes\n");
    let (p1, p2) = s.canonical_pair();
    writeln!(text, "pair: {} | {}", p1, p2).unwrap();
    writeln!(text, "A1:\n{}", s.a1).unwrap();
    writeln!(text, "A2:\n{}", s.a2).unwrap();
    writeln!(text, "verified: {}", s.report.verdict()).unwrap();
    text
}
