//! Permutations and quasi-permutation graphs.
//!
//! `qp_graph` maps an n-entry permutation to a bipartite graph on parts of
//! size 2n: a half-graph (`a_i ~ b_j` for `i <= j`) plus the matching
//! `a_{n+i} ~ b_{pi(i)}`. The map is a bijection onto quasi-permutation
//! graphs and `recover_permutation` inverts it from an arbitrary labeling.
//! Plain `qp_graph` preserves pattern containment only one way; prefixing a
//! fixed point (`qp_graph_star`) makes containment faithful in both
//! directions. `star_gadget` reduces colored containment to uncolored.

use std::str::FromStr;

use crate::graph::BipartiteGraph;
use crate::recognition::is_quasi_chain;
use crate::{Error, Result};

/// One-line-notation permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::MalformedInput(format!(
                    "{entries:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based application: `apply(i) = pi(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The prefixed-fixed-point permutation `(1, pi(1)+1, ..., pi(n)+1)`.
    pub fn star(&self) -> Permutation {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(1);
        entries.extend(self.entries.iter().map(|&e| e + 1));
        Permutation { entries }
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut entries: Vec<usize> = (1..=n).collect();
        permute_rec(&mut entries, 0, &mut out);
        out.sort_by(|x, y| x.entries.cmp(&y.entries));
        out
    }
}

fn permute_rec(entries: &mut Vec<usize>, from: usize, out: &mut Vec<Permutation>) {
    if from == entries.len() {
        out.push(Permutation {
            entries: entries.clone(),
        });
        return;
    }
    for i in from..entries.len() {
        entries.swap(from, i);
        permute_rec(entries, from + 1, out);
        entries.swap(from, i);
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation, e.g. `2,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let entries: Result<Vec<usize>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::MalformedInput(format!("bad entry {t:?}: {e}")))
            })
            .collect();
        Permutation::new(entries?)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// The quasi-permutation graph of `pi`: parts of size 2n, half-graph edges
/// `a_i b_j` for `i <= j`, plus the matching `a_{n+i} b_{pi(i)}`.
pub fn qp_graph(p: &Permutation) -> BipartiteGraph {
    let n = p.len();
    let mut edges = Vec::new();
    for i in 1..=2 * n {
        for j in i..=2 * n {
            edges.push((i - 1, j - 1));
        }
    }
    for i in 1..=n {
        edges.push((n + i - 1, p.apply(i) - 1));
    }
    BipartiteGraph::new(2 * n, 2 * n, &edges).unwrap()
}

/// The order-faithful variant `qp_graph(p.star())`, on parts of size 2n+2.
pub fn qp_graph_star(p: &Permutation) -> BipartiteGraph {
    qp_graph(&p.star())
}

/// Recovers the permutation from a quasi-permutation graph under arbitrary
/// vertex labels, then validates by exhibiting an isomorphism onto the
/// canonical construction.
///
/// The degree sequence of each part must be `(2,3,...,n+1,n+1,n+2,...,2n)`.
/// The unique A-vertex of degree `d` for `d = 2..=n` is the matched vertex
/// `a_{2n+2-d}`, and its unique neighbor of degree at most `n+1` pins the
/// corresponding entry; the remaining entry is forced.
pub fn recover_permutation(g: &BipartiteGraph) -> Result<Permutation> {
    let n2 = g.size_a();
    if g.size_b() != n2 || n2 == 0 || !n2.is_multiple_of(2) {
        return Err(Error::NotQuasiPermutation(format!(
            "parts must be equal, even and nonempty; got ({}, {})",
            g.size_a(),
            g.size_b()
        )));
    }
    let n = n2 / 2;

    let mut a_degrees: Vec<usize> = (0..n2).map(|a| g.row(a).count()).collect();
    let mut b_degrees: Vec<usize> = (0..n2).map(|b| g.col(b).count()).collect();
    let expected = claim_degree_sequence(n);
    a_degrees.sort_unstable();
    b_degrees.sort_unstable();
    if a_degrees != expected || b_degrees != expected {
        return Err(Error::NotQuasiPermutation(
            "degree multiset does not match a quasi-permutation graph".into(),
        ));
    }

    // pi(i) for i = 2..=n from the unique low-degree vertices.
    let mut entries = vec![0usize; n];
    for i in 2..=n {
        let d = n + 2 - i; // degree of a_{n+i}
        let a = unique_with_degree(g, d, true).ok_or_else(|| {
            Error::NotQuasiPermutation(format!("no unique A-vertex of degree {d}"))
        })?;
        // Among the neighbors {b_{n+i}, ..., b_{2n}, b_{pi(i)}} only the
        // matched one has degree at most n+1.
        let low: Vec<usize> = g
            .row(a)
            .iter()
            .filter(|&b| g.col(b).count() <= n + 1)
            .collect();
        if low.len() != 1 {
            return Err(Error::NotQuasiPermutation(format!(
                "matched neighbor of the degree-{d} vertex is not determined"
            )));
        }
        entries[i - 1] = g.col(low[0]).count() - 1;
    }
    // the missing value is forced
    let mut present = vec![false; n + 1];
    for &e in &entries[1..] {
        if e == 0 || e > n || present[e] {
            return Err(Error::NotQuasiPermutation(
                "recovered entries do not extend to a permutation".into(),
            ));
        }
        present[e] = true;
    }
    let missing = (1..=n).find(|&v| !present[v]).unwrap_or(1);
    entries[0] = missing;
    let p = Permutation::new(entries)
        .map_err(|e| Error::NotQuasiPermutation(e.to_string()))?;

    if find_canonical_isomorphism(g, &p).is_none() {
        return Err(Error::NotQuasiPermutation(
            "degree recovery succeeded but the graph is not isomorphic to the construction".into(),
        ));
    }
    Ok(p)
}

/// `(2,3,...,n+1,n+1,n+2,...,2n)` — the per-part degree multiset.
pub fn claim_degree_sequence(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (2..=n + 1).collect();
    v.extend(n + 1..=2 * n);
    v.sort_unstable();
    v
}

fn unique_with_degree(g: &BipartiteGraph, d: usize, side_a: bool) -> Option<usize> {
    let count = if side_a { g.size_a() } else { g.size_b() };
    let deg = |i: usize| {
        if side_a {
            g.row(i).count()
        } else {
            g.col(i).count()
        }
    };
    let mut found = None;
    for i in 0..count {
        if deg(i) == d {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// Sorts each part by degree (descending for A, ascending for B), trying
/// both orders of the single tied pair per side, and returns a relabeling
/// that makes `g` equal to `qp_graph(p)` if one exists.
fn find_canonical_isomorphism(g: &BipartiteGraph, p: &Permutation) -> Option<Vec<usize>> {
    let n2 = g.size_a();
    let reference = qp_graph(p);
    let mut a_order: Vec<usize> = (0..n2).collect();
    a_order.sort_by_key(|&a| (std::cmp::Reverse(g.row(a).count()), a));
    let mut b_order: Vec<usize> = (0..n2).collect();
    b_order.sort_by_key(|&b| (g.col(b).count(), b));

    // ties occur exactly between positions n-1 and n on each side
    let n = n2 / 2;
    let a_tied = n >= 1 && g.row(a_order[n - 1]).count() == g.row(a_order[n]).count();
    let b_tied = n >= 1 && g.col(b_order[n - 1]).count() == g.col(b_order[n]).count();
    for swap_a in [false, true] {
        if swap_a && !a_tied {
            continue;
        }
        for swap_b in [false, true] {
            if swap_b && !b_tied {
                continue;
            }
            let mut ao = a_order.clone();
            let mut bo = b_order.clone();
            if swap_a {
                ao.swap(n - 1, n);
            }
            if swap_b {
                bo.swap(n - 1, n);
            }
            let matches = (0..n2).all(|i| {
                (0..n2).all(|j| g.has_edge(ao[i], bo[j]) == reference.has_edge(i, j))
            });
            if matches {
                return Some(ao);
            }
        }
    }
    None
}

/// Hard cap for the pattern-containment oracle.
pub const PATTERN_BUDGET: usize = 10;

/// True iff `pi` occurs as a pattern in `rho`: some index-increasing
/// injection preserves the relative order of entries. Exponential oracle,
/// capped at [`PATTERN_BUDGET`] entries of `rho`.
pub fn pattern_contains(rho: &Permutation, pi: &Permutation) -> Result<bool> {
    if rho.len() > PATTERN_BUDGET {
        return Err(Error::Budget {
            what: "pattern_contains host entries",
            limit: PATTERN_BUDGET,
            actual: rho.len(),
        });
    }
    if pi.len() > rho.len() {
        return Ok(false);
    }
    let k = pi.len();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn go(rho: &[usize], pi: &[usize], chosen: &mut Vec<usize>, from: usize) -> bool {
        let t = chosen.len();
        if t == pi.len() {
            return true;
        }
        for i in from..rho.len() {
            let consistent = (0..t).all(|s| (pi[s] < pi[t]) == (rho[chosen[s]] < rho[i]));
            if consistent {
                chosen.push(i);
                if go(rho, pi, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(go(rho.entries(), pi.entries(), &mut chosen, 0))
}

/// Reduction payload from colored to uncolored containment: each graph gains
/// a star whose center is joined to every black vertex, sized past the
/// host's maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarGadget {
    pub g_star: BipartiteGraph,
    pub h_star: BipartiteGraph,
    /// Star size: one more than the host's maximum degree.
    pub p: usize,
}

/// Builds the gadget pair for host `g` and pattern `h`. Both inputs must be
/// connected; colored containment of `h` in `g` is then equivalent to
/// uncolored containment of `h_star` in `g_star`.
pub fn star_gadget(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<StarGadget> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = g.max_degree() + 1;
    Ok(StarGadget {
        g_star: attach_star(g, p),
        h_star: attach_star(h, p),
        p,
    })
}

/// Adds an A-side center adjacent to `p` fresh B-side leaves and to every
/// existing B-vertex.
fn attach_star(g: &BipartiteGraph, p: usize) -> BipartiteGraph {
    let center = g.size_a();
    let mut edges = g.edges();
    for b in 0..g.size_b() {
        edges.push((center, b));
    }
    for leaf in 0..p {
        edges.push((center, g.size_b() + leaf));
    }
    BipartiteGraph::new(g.size_a() + 1, g.size_b() + p, &edges).unwrap()
}

/// Quasi-chainness is preserved by the gadget; exposed for tests and the CLI.
pub fn gadget_outputs_quasi_chain(gadget: &StarGadget) -> bool {
    is_quasi_chain(&gadget.g_star).is_quasi_chain() && is_quasi_chain(&gadget.h_star).is_quasi_chain()
}
