//! `liec`: command-line front end.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 for an
//! answer (including "no coloring exists"), 2 for invalid input or a failed
//! precondition, 3 when the search budget ran out, 1 for internal faults.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use liec::decompose::{classify, DecomposabilityVerdict};
use liec::enumerate::{render_table, scan_gp, table1_row};
use liec::graph::{
    builtin_named, emit_graph6, gen_cycle, gen_generalized_petersen,
    gen_theta_family, gen_xi, parse_edge_list, parse_graph6, xi_ring_spec, GPSpec, Graph,
    RingPermutationSpec,
};
use liec::ring::color_ring_permutation_detailed;
use liec::solver::{chi_irr_with_witness, verify_liec, EdgeColoring};
use liec::xi::{build_code_digraph, xi_two_liec, xi_two_liec_exists};
use liec::Error;

#[derive(Parser)]
#[command(name = "liec", version, about = "Locally irregular edge-colorings")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Pretty-print JSON; `table1` also prints a text grid on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Irregular chromatic index by exact search.
    ChiIrr {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        /// Search node budget per value of k.
        #[arg(long)]
        budget: Option<u64>,
        /// Include the witness coloring.
        #[arg(long)]
        witness: bool,
    },
    /// Check a coloring (JSON file) against a graph.
    Verify {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Decomposability verdict.
    Classify {
        #[command(flatten)]
        src: GraphSource,
    },
    /// Constructive 3-coloring of a ring permutation graph.
    ColorRing {
        #[command(flatten)]
        spec: RingSource,
    },
    /// Does XI_n admit a 2-coloring?
    Xi {
        n: usize,
        /// Also emit the code digraph: `json` or `dot`.
        #[arg(long, value_parser = ["json", "dot"])]
        digraph: Option<String>,
        /// Include an explicit 2-coloring when one exists.
        #[arg(long)]
        witness: bool,
    },
    /// Cubic graphs of order n and girth >= g with no 2-coloring.
    Table1 {
        n: usize,
        girth: usize,
    },
    /// Generalized Petersen graphs of girth >= 5 with no 2-coloring.
    ScanGp {
        #[arg(long)]
        n_max: usize,
    },
    /// Emit a graph in graph6.
    Gen {
        #[command(flatten)]
        src: GraphSource,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long)]
    graph6: Option<String>,
    /// File holding graph6 or an edge list (`n m` header, then `u v` lines).
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    gp: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    #[arg(long, value_name = "N")]
    xi: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["K", "T"])]
    theta: Option<Vec<usize>>,
}

#[derive(Args)]
struct RingSource {
    #[arg(long, num_args = 2, value_names = ["N", "K"], conflicts_with_all = ["xi", "prism", "cycles"])]
    gp: Option<Vec<usize>>,
    #[arg(long, value_name = "N", conflicts_with_all = ["prism", "cycles"])]
    xi: Option<usize>,
    #[arg(long, value_name = "N", conflicts_with = "cycles")]
    prism: Option<usize>,
    /// Inner cycle lengths, comma separated; requires --phi.
    #[arg(long, value_delimiter = ',', requires = "phi")]
    cycles: Option<Vec<usize>>,
    /// Image of each outer vertex among the inner vertices, comma separated.
    #[arg(long, value_delimiter = ',', requires = "cycles")]
    phi: Option<Vec<usize>>,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn pair(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn read_file(path: &PathBuf) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(src: &GraphSource) -> std::result::Result<Graph, Failure> {
    let g = if let Some(s) = &src.graph6 {
        parse_graph6(s)?
    } else if let Some(p) = &src.file {
        let text = read_file(p)?;
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        match (lines.next(), lines.next()) {
            (Some(first), None) if !first.contains(char::is_whitespace) => parse_graph6(first)?,
            _ => parse_edge_list(&text)?,
        }
    } else if let Some(name) = &src.builtin {
        builtin_named(name)?
    } else if let Some(v) = &src.gp {
        let (n, k) = pair(v);
        gen_generalized_petersen(GPSpec::new(n, k)?)?
    } else if let Some(n) = src.cycle {
        gen_cycle(n)?
    } else if let Some(n) = src.xi {
        gen_xi(n)?
    } else if let Some(v) = &src.theta {
        let (k, t) = pair(v);
        gen_theta_family(k, t)?
    } else {
        return Err(invalid("no graph given"));
    };
    Ok(g)
}

fn load_ring(src: &RingSource) -> std::result::Result<RingPermutationSpec, Failure> {
    let spec = if let Some(v) = &src.gp {
        let (n, k) = pair(v);
        GPSpec::new(n, k)?.as_ring_spec()
    } else if let Some(n) = src.xi {
        xi_ring_spec(n)?
    } else if let Some(n) = src.prism {
        RingPermutationSpec::prism(n)?
    } else if let (Some(cycles), Some(phi)) = (&src.cycles, &src.phi) {
        RingPermutationSpec::new(phi.len(), cycles.clone(), phi.clone())?
    } else {
        return Err(invalid("give one of --gp, --xi, --prism, or --cycles with --phi"));
    };
    Ok(spec)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn run(cli: &Cli) -> Outcome {
    match &cli.cmd {
        Cmd::ChiIrr {
            src,
            k_max,
            budget,
            witness,
        } => {
            let g = load_graph(src)?;
            // A graph is decomposable iff every component is.
            for comp in g.components() {
                let (h, _) = g.induced_subgraph(&comp);
                if h.m() > 0 && !classify(&h)?.is_decomposable() {
                    return Ok(json!({"chi_irr": null, "reason": "non-decomposable"}));
                }
            }
            Ok(match chi_irr_with_witness(&g, *k_max, *budget)? {
                Some((k, col)) if *witness => json!({"chi_irr": k, "coloring": to_value(&col)}),
                Some((k, _)) => json!({"chi_irr": k}),
                None => json!({"chi_irr": null, "reason": "exceeds-k-max"}),
            })
        }
        Cmd::Verify { src, coloring } => {
            let g = load_graph(src)?;
            let col = EdgeColoring::from_json(&read_file(coloring)?)?;
            let violations = verify_liec(&g, &col)?;
            Ok(json!({"valid": violations.is_empty(), "violations": to_value(&violations)}))
        }
        Cmd::Classify { src } => {
            let g = load_graph(src)?;
            let verdict: DecomposabilityVerdict = classify(&g)?;
            Ok(to_value(&verdict))
        }
        Cmd::ColorRing { spec } => {
            let spec = load_ring(spec)?;
            let rc = color_ring_permutation_detailed(&spec)?;
            let mut v = to_value(&rc);
            v["spec"] = to_value(&spec);
            Ok(v)
        }
        Cmd::Xi {
            n,
            digraph,
            witness,
        } => {
            if *n < 2 {
                return Err(invalid(format!("XI_n needs n >= 2, got {n}")));
            }
            let exists = xi_two_liec_exists(*n);
            let mut v = json!({"n": n, "two_liec_exists": exists, "chi_irr": if exists { 2 } else { 3 }});
            if *witness && exists {
                let col = xi_two_liec(*n).ok_or_else(|| Failure {
                    code: 1,
                    msg: "closed walk exists but no coloring was assembled".into(),
                })?;
                v["coloring"] = to_value(&col);
            }
            match digraph.as_deref() {
                Some("json") => v["digraph"] = build_code_digraph().to_json(),
                Some("dot") => v["digraph"] = Value::String(build_code_digraph().to_dot()),
                _ => {}
            }
            Ok(v)
        }
        Cmd::Table1 { n, girth } => {
            let r = table1_row(*n, *girth)?;
            if cli.pretty {
                eprint!("{}", render_table(std::slice::from_ref(&r)));
            }
            let mut v = to_value(&r);
            v["count"] = json!(r.non_two_liec_count);
            Ok(v)
        }
        Cmd::ScanGp { n_max } => {
            let hits = scan_gp(*n_max)?;
            Ok(json!({"n_max": n_max, "hits": to_value(&hits)}))
        }
        Cmd::Gen { src } => {
            let g = load_graph(src)?;
            Ok(json!({"graph6": emit_graph6(&g)?, "n": g.n(), "m": g.m()}))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("liec: cannot set up {j} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(v) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&v)
            } else {
                serde_json::to_string(&v)
            };
            println!("{}", text.expect("JSON values serialize"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("liec: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
