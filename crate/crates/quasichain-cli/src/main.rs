//! Command-line front end for the quasichain library.
//!
//! Every subcommand reads and writes the canonical JSON formats on stdout,
//! with diagnostics on stderr. Exit codes: 0 on success, 1 when the input is
//! not quasi-chain (the witness certificate is printed), 2 on malformed
//! input or a violated oracle budget.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use quasichain::generators::{self, Family, GeneratorSpec};
use quasichain::graph::BipartiteGraph;
use quasichain::implicitrep::{
    adjacent_from_labels, assign_labels, contiguity_layout, VertexLabel,
};
use quasichain::letterrep::{decode_enhanced, decompose, encode_enhanced, EnhancedWord};
use quasichain::optimize::{
    balanced_biclique, independent_dominating_set, max_edge_biclique, BicliqueObjective,
};
use quasichain::oracles;
use quasichain::permute::{
    pattern_contains, qp_graph, qp_graph_star, recover_permutation, star_gadget, Permutation,
};
use quasichain::recognition::{is_quasi_chain, QuasiChainVerdict};
use quasichain::{Error, VertexRef};

#[derive(Parser)]
#[command(name = "quasichain", version, about = "Toolkit for quasi-chain bipartite graphs")]
struct Cli {
    /// Worker threads for internal solver parallelism; runs single-threaded
    /// when omitted.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide quasi-chain membership; prints the certificate.
    Recognize { graph: String },
    /// Encode a quasi-chain graph as an enhanced word (with vertex map).
    Encode { graph: String },
    /// Decode an enhanced word back to the canonical graph JSON.
    Decode { word: String },
    /// Split a quasi-chain graph into its chain part and two matchings.
    Decompose { graph: String },
    /// Print one adjacency label per line (`side:id:zKey:top:bottom`).
    Labels { graph: String },
    /// Decide adjacency from two label strings alone.
    Adjacent { label1: String, label2: String },
    /// Compute a vertex layout with at most 3 intervals per neighborhood.
    Contiguity { graph: String },
    /// Maximum edge or balanced biclique.
    Biclique {
        #[arg(long, value_enum, default_value_t = Objective::Edges)]
        objective: Objective,
        graph: String,
    },
    /// Minimum independent dominating set.
    Ids { graph: String },
    /// Generate a named family member or a random instance.
    Gen(GenArgs),
    /// Permutation operations.
    Perm {
        #[command(subcommand)]
        op: PermOp,
    },
    /// Star-gadget pair reducing colored containment to uncolored.
    Gadget { host: String, pattern: String },
    /// Budgeted brute-force reference solvers.
    Oracle {
        #[command(subcommand)]
        which: OracleOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    Edges,
    Balanced,
}

impl From<Objective> for BicliqueObjective {
    fn from(o: Objective) -> Self {
        match o {
            Objective::Edges => BicliqueObjective::Edges,
            Objective::Balanced => BicliqueObjective::Balanced,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Size parameter (part size for zn, base size for qn/dn, word length
    /// for random).
    #[arg(long)]
    n: usize,
    /// RNG seed; required for `random`.
    #[arg(long, required_if_eq("family", "random"))]
    seed: Option<u64>,
    /// Expected fraction of marked word positions for `random`.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Zn,
    Qn,
    Dn,
    Random,
}

#[derive(Subcommand)]
enum PermOp {
    /// Quasi-permutation graph of a permutation (`2,1,3` notation).
    Encode { perm: String },
    /// Order-faithful variant: prefix a fixed point, then encode.
    EncodeStar { perm: String },
    /// Recover the permutation from a quasi-permutation graph.
    Recover { graph: String },
    /// Does `rho` contain `pi` as a pattern?
    Contains { rho: String, pi: String },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Exhaustive forbidden-configuration search.
    QuasiChain { graph: String },
    /// Exact biclique by subset enumeration.
    Biclique {
        #[arg(long, value_enum, default_value_t = Objective::Edges)]
        objective: Objective,
        graph: String,
    },
    /// Exact minimum maximal independent set.
    Ids { graph: String },
    /// All independent sets.
    IndependentSets { graph: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    quasichain::batch::configure_threads(cli.jobs.unwrap_or(1));
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::NotQuasiChain(w)) => {
            println!(
                "{}",
                serde_json::to_string(&QuasiChainVerdict::Witness(w)).expect("serializable")
            );
            eprintln!("error: input graph is not quasi-chain");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::MalformedInput(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::MalformedInput(format!("{path}: {e}")))?
    };
    Ok(text)
}

fn read_graph(path: &str) -> Result<BipartiteGraph, Error> {
    BipartiteGraph::from_json(&read_input(path)?)
}

fn refs_json(refs: &[VertexRef]) -> serde_json::Value {
    serde_json::to_value(refs).expect("serializable")
}

#[derive(Serialize)]
struct EncodedJson {
    word: String,
    top: Vec<(usize, usize)>,
    bottom: Vec<(usize, usize)>,
    a: Vec<usize>,
    b: Vec<usize>,
}

/// Positions in the emitted maps are 1-based, matching the word JSON.
fn encoded_json(enc: &quasichain::letterrep::EncodedWord) -> String {
    let bump1 = |pairs: &[(usize, usize)]| -> Vec<(usize, usize)> {
        pairs.iter().map(|&(p, q)| (p + 1, q + 1)).collect()
    };
    let bump = |ps: &[usize]| -> Vec<usize> { ps.iter().map(|p| p + 1).collect() };
    let out = EncodedJson {
        word: enc.word.word_string(),
        top: bump1(enc.word.top()),
        bottom: bump1(enc.word.bottom()),
        a: bump(&enc.a_positions),
        b: bump(&enc.b_positions),
    };
    serde_json::to_string(&out).expect("serializable")
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Recognize { graph } => {
            let g = read_graph(&graph)?;
            match is_quasi_chain(&g) {
                QuasiChainVerdict::Witness(w) => return Err(Error::NotQuasiChain(w)),
                verdict => {
                    println!("{}", serde_json::to_string(&verdict).expect("serializable"))
                }
            }
        }
        Command::Encode { graph } => {
            let enc = encode_enhanced(&read_graph(&graph)?)?;
            println!("{}", encoded_json(&enc));
        }
        Command::Decode { word } => {
            let text = read_input(&word)?;
            let w = EnhancedWord::from_json(&text)?;
            let decoded = decode_enhanced(&w)?;
            let g = apply_position_maps(&text, &w, &decoded)?;
            println!("{}", g.to_canonical_json());
        }
        Command::Decompose { graph } => {
            let g = read_graph(&graph)?;
            let d = decompose(&g)?;
            let out = json!({
                "z": serde_json::from_str::<serde_json::Value>(&d.z.to_canonical_json())
                    .expect("valid graph json"),
                "h": { "bottom": d.bottom.edges, "top": d.top.edges },
            });
            println!("{out}");
        }
        Command::Labels { graph } => {
            let labels = assign_labels(&read_graph(&graph)?)?;
            print!("{}", labels.to_lines());
        }
        Command::Adjacent { label1, label2 } => {
            let l1 = VertexLabel::from_line(&label1)?;
            let l2 = VertexLabel::from_line(&label2)?;
            println!("{}", adjacent_from_labels(&l1, &l2));
        }
        Command::Contiguity { graph } => {
            let g = read_graph(&graph)?;
            let layout = contiguity_layout(&g)?;
            let intervals: Vec<serde_json::Value> = layout
                .intervals
                .iter()
                .map(|iv| json!({ "vertex": iv.vertex, "ranges": iv.ranges }))
                .collect();
            println!(
                "{}",
                json!({ "order": layout.order, "intervals": intervals })
            );
        }
        Command::Biclique { objective, graph } => {
            let g = read_graph(&graph)?;
            let sol = match objective {
                Objective::Edges => max_edge_biclique(&g)?,
                Objective::Balanced => balanced_biclique(&g)?,
            };
            print_biclique(objective, &sol);
        }
        Command::Ids { graph } => {
            let g = read_graph(&graph)?;
            let set = independent_dominating_set(&g)?;
            println!(
                "{}",
                json!({
                    "objective": "independent-dominating-set",
                    "size": set.len(),
                    "vertices": refs_json(&set),
                })
            );
        }
        Command::Gen(args) => {
            let spec = GeneratorSpec {
                family: match args.family {
                    FamilyArg::Zn => Family::Zn,
                    FamilyArg::Qn => Family::Qn,
                    FamilyArg::Dn => Family::Dn,
                    FamilyArg::Random => Family::Random,
                },
                n: args.n,
                seed: args.seed.unwrap_or(0),
                mark_density: args.density,
            };
            println!("{}", generators::generate(&spec)?.to_canonical_json());
        }
        Command::Perm { op } => run_perm(op)?,
        Command::Gadget { host, pattern } => {
            let g = read_graph(&host)?;
            let h = read_graph(&pattern)?;
            let gadget = star_gadget(&g, &h)?;
            let out = json!({
                "p": gadget.p,
                "gStar": serde_json::from_str::<serde_json::Value>(
                    &gadget.g_star.to_canonical_json()
                )
                .expect("valid graph json"),
                "hStar": serde_json::from_str::<serde_json::Value>(
                    &gadget.h_star.to_canonical_json()
                )
                .expect("valid graph json"),
            });
            println!("{out}");
        }
        Command::Oracle { which } => run_oracle(which)?,
    }
    Ok(())
}

fn run_perm(op: PermOp) -> Result<(), Error> {
    match op {
        PermOp::Encode { perm } => {
            let p: Permutation = perm.parse()?;
            println!("{}", qp_graph(&p).to_canonical_json());
        }
        PermOp::EncodeStar { perm } => {
            let p: Permutation = perm.parse()?;
            println!("{}", qp_graph_star(&p).to_canonical_json());
        }
        PermOp::Recover { graph } => {
            let p = recover_permutation(&read_graph(&graph)?)?;
            println!("{p}");
        }
        PermOp::Contains { rho, pi } => {
            let rho: Permutation = rho.parse()?;
            let pi: Permutation = pi.parse()?;
            println!("{}", pattern_contains(&rho, &pi)?);
        }
    }
    Ok(())
}

fn run_oracle(which: OracleOp) -> Result<(), Error> {
    match which {
        OracleOp::QuasiChain { graph } => {
            let g = read_graph(&graph)?;
            println!("{}", oracles::brute_quasi_chain(&g)?);
        }
        OracleOp::Biclique { objective, graph } => {
            let g = read_graph(&graph)?;
            let sol = oracles::brute_biclique(&g, objective.into())?;
            print_biclique(objective, &sol);
        }
        OracleOp::Ids { graph } => {
            let g = read_graph(&graph)?;
            let set = oracles::brute_independent_dominating(&g)?;
            println!(
                "{}",
                json!({
                    "objective": "independent-dominating-set",
                    "size": set.len(),
                    "vertices": refs_json(&set),
                })
            );
        }
        OracleOp::IndependentSets { graph } => {
            let g = read_graph(&graph)?;
            let sets = oracles::brute_independent_sets(&g)?;
            let unpacked: Vec<serde_json::Value> = sets
                .iter()
                .map(|&m| refs_json(&oracles::unpack_vertex_mask(&g, m)))
                .collect();
            println!("{}", json!({ "count": sets.len(), "sets": unpacked }));
        }
    }
    Ok(())
}

fn print_biclique(objective: Objective, sol: &quasichain::optimize::BicliqueSolution) {
    let (name, value) = match objective {
        Objective::Edges => ("edges", sol.edge_count),
        Objective::Balanced => ("balanced", sol.side_a.len()),
    };
    println!(
        "{}",
        json!({
            "objective": name,
            "value": value,
            "sideA": sol.side_a,
            "sideB": sol.side_b,
        })
    );
}

/// The encode envelope carries optional `a`/`b` arrays tying vertices to
/// 1-based word positions; honoring them makes decode(encode(g)) reproduce
/// g's exact labeling.
fn apply_position_maps(
    text: &str,
    w: &EnhancedWord,
    decoded: &quasichain::letterrep::DecodedWord,
) -> Result<BipartiteGraph, Error> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
    let get_map = |key: &str| -> Result<Option<Vec<usize>>, Error> {
        match value.get(key) {
            None => Ok(None),
            Some(v) => {
                let list: Vec<usize> = serde_json::from_value(v.clone())
                    .map_err(|e| Error::MalformedInput(format!("bad {key} map: {e}")))?;
                Ok(Some(
                    list.iter()
                        .map(|&p| {
                            p.checked_sub(1).ok_or_else(|| {
                                Error::MalformedInput("positions are 1-based".into())
                            })
                        })
                        .collect::<Result<_, _>>()?,
                ))
            }
        }
    };
    let (a_map, b_map) = (get_map("a")?, get_map("b")?);
    let (Some(a_map), Some(b_map)) = (a_map, b_map) else {
        return Ok(decoded.graph.clone());
    };
    if !is_position_permutation(&a_map, &decoded.a_positions)
        || !is_position_permutation(&b_map, &decoded.b_positions)
    {
        return Err(Error::MalformedInput(
            "position maps do not match the word's letter layout".into(),
        ));
    }
    let rank = |positions: &[usize], p: usize| positions.binary_search(&p).expect("checked");
    let mut edges = Vec::new();
    for (i, &pa) in a_map.iter().enumerate() {
        for (j, &pb) in b_map.iter().enumerate() {
            if decoded
                .graph
                .has_edge(rank(&decoded.a_positions, pa), rank(&decoded.b_positions, pb))
            {
                edges.push((i, j));
            }
        }
    }
    let _ = w;
    BipartiteGraph::new(a_map.len(), b_map.len(), &edges)
}

fn is_position_permutation(map: &[usize], positions: &[usize]) -> bool {
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    sorted == positions
}
