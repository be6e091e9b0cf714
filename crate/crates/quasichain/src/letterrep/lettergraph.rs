//! Generic letter graphs over an arbitrary decoder, and an exact lettericity
//! search at desk scale.
//!
//! A decoder is a set of ordered symbol pairs; a word over the alphabet
//! decodes to the graph on its positions where `i < j` are adjacent iff
//! `(w_i, w_j)` is in the decoder. The lettericity of a graph is the least
//! alphabet size realizing it.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::graph::{BipartiteGraph, Side};
use crate::{Error, Result};

/// Alphabet plus ordered-pair decoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterDecoder {
    alphabet: BTreeSet<char>,
    pairs: BTreeSet<(char, char)>,
}

impl LetterDecoder {
    pub fn new(
        alphabet: impl IntoIterator<Item = char>,
        pairs: impl IntoIterator<Item = (char, char)>,
    ) -> Result<Self> {
        let alphabet: BTreeSet<char> = alphabet.into_iter().collect();
        let pairs: BTreeSet<(char, char)> = pairs.into_iter().collect();
        for &(x, y) in &pairs {
            if !alphabet.contains(&x) || !alphabet.contains(&y) {
                return Err(Error::MalformedInput(format!(
                    "decoder pair ({x},{y}) uses symbols outside the alphabet"
                )));
            }
        }
        Ok(LetterDecoder { alphabet, pairs })
    }

    pub fn decodes(&self, earlier: char, later: char) -> bool {
        self.pairs.contains(&(earlier, later))
    }
}

/// Plain undirected graph on `0..n`, used for decoded letter graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BitSet>,
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Flattens a bipartite graph: A-vertices first, then B.
    pub fn from_bipartite(g: &BipartiteGraph) -> Self {
        let mut s = SimpleGraph::edgeless(g.vertex_count());
        for (a, b) in g.edges() {
            s.add_edge(a, g.size_a() + b);
        }
        s
    }

    /// Reinterprets the graph as bipartite given a part assignment per
    /// vertex; fails if an edge joins two vertices of the same part.
    /// Sub-indices follow vertex order within each part.
    pub fn bipartition(&self, side_of: &[Side]) -> Result<BipartiteGraph> {
        if side_of.len() != self.n {
            return Err(Error::MalformedInput(
                "part assignment length differs from vertex count".into(),
            ));
        }
        let a_ids: Vec<usize> = (0..self.n).filter(|&v| side_of[v] == Side::A).collect();
        let b_ids: Vec<usize> = (0..self.n).filter(|&v| side_of[v] == Side::B).collect();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                if side_of[u] == side_of[v] {
                    return Err(Error::MalformedInput(format!(
                        "edge ({u},{v}) joins two vertices of part {}",
                        side_of[u]
                    )));
                }
                let (x, y) = if side_of[u] == Side::A { (u, v) } else { (v, u) };
                edges.push((
                    a_ids.binary_search(&x).unwrap(),
                    b_ids.binary_search(&y).unwrap(),
                ));
            }
        }
        BipartiteGraph::new(a_ids.len(), b_ids.len(), &edges)
    }
}

/// Decodes a word under a decoder: one vertex per position, `i < j` adjacent
/// iff `(w_i, w_j)` is a decoder pair.
pub fn decode_letter_graph(decoder: &LetterDecoder, word: &str) -> Result<SimpleGraph> {
    let symbols: Vec<char> = word.chars().collect();
    for &c in &symbols {
        if !decoder.alphabet.contains(&c) {
            return Err(Error::MalformedInput(format!(
                "symbol {c:?} outside the decoder alphabet"
            )));
        }
    }
    let mut g = SimpleGraph::edgeless(symbols.len());
    for i in 0..symbols.len() {
        for j in i + 1..symbols.len() {
            if decoder.decodes(symbols[i], symbols[j]) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Input-size cap for the exact lettericity search.
pub const LETTERICITY_BUDGET: usize = 10;

/// Exact minimum alphabet size realizing `g` as a letter graph, or `None` if
/// it exceeds `kmax`.
///
/// For each `k` it enumerates all partitions of the vertices into exactly
/// `k` letter classes (restricted growth strings, killing letter-renaming
/// symmetry) and all decoders over `k` letters. A fixed assignment and
/// decoder admit a realizing vertex order iff the orientation constraints
/// they impose on every vertex pair are satisfiable and acyclic, which
/// replaces the search over vertex orderings exactly.
pub fn lettericity_bruteforce(g: &SimpleGraph, kmax: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if n > LETTERICITY_BUDGET {
        return Err(Error::Budget {
            what: "lettericity vertices",
            limit: LETTERICITY_BUDGET,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(Some(0));
    }
    for k in 1..=kmax.min(n) {
        let mut assignment = vec![0usize; n];
        if assignments_work(g, k, 1, &mut assignment) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Recursively extends a restricted growth string (vertex 0 is always letter
/// 0; each new vertex uses at most one letter beyond the maximum so far) and
/// tests every completion that uses exactly `k` letters.
fn assignments_work(g: &SimpleGraph, k: usize, depth: usize, assignment: &mut Vec<usize>) -> bool {
    let n = g.vertex_count();
    if depth == n {
        let used = assignment.iter().max().unwrap() + 1;
        return used == k && some_decoder_works(g, k, assignment);
    }
    let max_so_far = assignment[..depth].iter().max().copied().unwrap();
    for letter in 0..=(max_so_far + 1).min(k - 1) {
        assignment[depth] = letter;
        if assignments_work(g, k, depth + 1, assignment) {
            return true;
        }
    }
    false
}

fn some_decoder_works(g: &SimpleGraph, k: usize, assignment: &[usize]) -> bool {
    (0u32..1 << (k * k)).any(|decoder| order_exists(g, k, assignment, decoder))
}

/// With letters and decoder fixed, each vertex pair allows `u` before `v`
/// iff their adjacency matches the decoder entry for that orientation. A
/// valid vertex order exists iff no pair forbids both orientations and the
/// forced orientations form a DAG.
fn order_exists(g: &SimpleGraph, k: usize, assignment: &[usize], decoder: u32) -> bool {
    let n = g.vertex_count();
    let in_decoder = |x: usize, y: usize| decoder >> (x * k + y) & 1 == 1;
    let mut forced = vec![BitSet::new(n); n]; // forced[u] contains v when u must precede v
    for u in 0..n {
        for v in u + 1..n {
            let e = g.has_edge(u, v);
            let uv = in_decoder(assignment[u], assignment[v]) == e;
            let vu = in_decoder(assignment[v], assignment[u]) == e;
            match (uv, vu) {
                (false, false) => return false,
                (true, false) => forced[u].insert(v),
                (false, true) => forced[v].insert(u),
                (true, true) => {}
            }
        }
    }
    // Kahn: the forced digraph must be acyclic.
    let mut indegree = vec![0usize; n];
    for out in &forced {
        for v in out.iter() {
            indegree[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for v in forced[u].iter() {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen == n
}
