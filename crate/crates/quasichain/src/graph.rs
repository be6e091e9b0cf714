//! Colored bipartite graphs with bitset adjacency.
//!
//! A [`BipartiteGraph`] has white part A and black part B with dense indices.
//! Adjacency is stored as one bitset over B per A-vertex; the B-side view is
//! derived on first use and cached. Graphs are immutable after construction,
//! every operation returns a new value, so certificates and maps handed out
//! by the algorithms never dangle.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::{Error, Result};

/// Which part of the bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
        })
    }
}

/// A vertex named by part and index within the part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn a(index: usize) -> Self {
        VertexRef { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        VertexRef { side: Side::B, index }
    }
}

/// A list of cross edges as `(a_index, b_index)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        EdgeList { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when no vertex endpoint repeats on either side.
    pub fn is_matching(&self) -> bool {
        let mut seen_a = std::collections::HashSet::new();
        let mut seen_b = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| seen_a.insert(a) && seen_b.insert(b))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
}

/// Bipartite graph with parts of fixed size and immutable adjacency.
#[derive(Clone)]
pub struct BipartiteGraph {
    size_a: usize,
    size_b: usize,
    rows: Vec<BitSet>,
    cols: OnceLock<Vec<BitSet>>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.size_a == other.size_a && self.size_b == other.size_b && self.rows == other.rows
    }
}

impl Eq for BipartiteGraph {}

impl std::hash::Hash for BipartiteGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.size_a.hash(state);
        self.size_b.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}, {}; {:?})", self.size_a, self.size_b, self.edges())
    }
}

impl BipartiteGraph {
    pub fn edgeless(size_a: usize, size_b: usize) -> Self {
        BipartiteGraph {
            size_a,
            size_b,
            rows: vec![BitSet::new(size_b); size_a],
            cols: OnceLock::new(),
        }
    }

    pub fn new(size_a: usize, size_b: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(size_a, size_b);
        for &(a, b) in edges {
            if a >= size_a {
                return Err(Error::InvalidVertex(VertexRef::a(a), size_a));
            }
            if b >= size_b {
                return Err(Error::InvalidVertex(VertexRef::b(b), size_b));
            }
            if g.rows[a].contains(b) {
                return Err(Error::DuplicateEdge(a, b));
            }
            g.rows[a].insert(b);
        }
        Ok(g)
    }

    pub fn complete(size_a: usize, size_b: usize) -> Self {
        let row = BitSet::from_indices(size_b, 0..size_b);
        BipartiteGraph {
            size_a,
            size_b,
            rows: vec![row; size_a],
            cols: OnceLock::new(),
        }
    }

    /// Builds a graph from a packed edge bitmask: bit `a * size_b + b` is the
    /// edge `(a, b)`. Handy for exhaustive catalog enumeration.
    pub fn from_mask(size_a: usize, size_b: usize, mask: u64) -> Self {
        debug_assert!(size_a * size_b <= 64);
        let mut g = Self::edgeless(size_a, size_b);
        for a in 0..size_a {
            for b in 0..size_b {
                if mask >> (a * size_b + b) & 1 == 1 {
                    g.rows[a].insert(b);
                }
            }
        }
        g
    }

    pub fn size_a(&self) -> usize {
        self.size_a
    }

    pub fn size_b(&self) -> usize {
        self.size_b
    }

    pub fn vertex_count(&self) -> usize {
        self.size_a + self.size_b
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.size_a && self.rows[a].contains(b)
    }

    /// Neighborhood of A-vertex `a` as a bitset over B.
    pub fn row(&self, a: usize) -> &BitSet {
        &self.rows[a]
    }

    /// Neighborhood of B-vertex `b` as a bitset over A (cached derived view).
    pub fn col(&self, b: usize) -> &BitSet {
        &self.cols.get_or_init(|| {
            let mut cols = vec![BitSet::new(self.size_a); self.size_b];
            for (a, row) in self.rows.iter().enumerate() {
                for b in row.iter() {
                    cols[b].insert(a);
                }
            }
            cols
        })[b]
    }

    pub fn side_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.size_a,
            Side::B => self.size_b,
        }
    }

    /// Neighborhood of any vertex, as a bitset over the opposite part.
    pub fn neighborhood(&self, v: VertexRef) -> &BitSet {
        match v.side {
            Side::A => self.row(v.index),
            Side::B => self.col(v.index),
        }
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        self.neighborhood(v).count()
    }

    pub fn check_ref(&self, v: VertexRef) -> Result<()> {
        if v.index < self.side_size(v.side) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v, self.side_size(v.side)))
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        (0..self.size_a)
            .map(VertexRef::a)
            .chain((0..self.size_b).map(VertexRef::b))
    }

    /// Edges in lexicographic `(a, b)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().map(|b| (a, b)));
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edge flip on all cross pairs; an involution.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        BipartiteGraph {
            size_a: self.size_a,
            size_b: self.size_b,
            rows: self.rows.iter().map(BitSet::complement).collect(),
            cols: OnceLock::new(),
        }
    }

    /// Swaps the two parts (A-vertex `i` becomes B-vertex `i`).
    pub fn reflect(&self) -> BipartiteGraph {
        let mut g = Self::edgeless(self.size_b, self.size_a);
        for a in 0..self.size_a {
            for b in self.rows[a].iter() {
                g.rows[b].insert(a);
            }
        }
        g
    }

    /// Edge present iff present in exactly one operand.
    pub fn symmetric_difference(&self, other: &BipartiteGraph) -> Result<BipartiteGraph> {
        if self.size_a != other.size_a || self.size_b != other.size_b {
            return Err(Error::PartSizeMismatch {
                left: (self.size_a, self.size_b),
                right: (other.size_a, other.size_b),
            });
        }
        Ok(BipartiteGraph {
            size_a: self.size_a,
            size_b: self.size_b,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(x, y)| x.symmetric_difference(y))
                .collect(),
            cols: OnceLock::new(),
        })
    }

    /// Subgraph induced by a set of vertices, plus the map back to the
    /// original indices. Duplicates are ignored; sub-indices follow original
    /// index order within each part.
    pub fn induced_subgraph(&self, vertices: &[VertexRef]) -> Result<(BipartiteGraph, SubgraphMap)> {
        for &v in vertices {
            self.check_ref(v)?;
        }
        let mut a_orig: Vec<usize> = vertices
            .iter()
            .filter(|v| v.side == Side::A)
            .map(|v| v.index)
            .collect();
        let mut b_orig: Vec<usize> = vertices
            .iter()
            .filter(|v| v.side == Side::B)
            .map(|v| v.index)
            .collect();
        a_orig.sort_unstable();
        a_orig.dedup();
        b_orig.sort_unstable();
        b_orig.dedup();

        let mut g = Self::edgeless(a_orig.len(), b_orig.len());
        for (ai, &a) in a_orig.iter().enumerate() {
            for (bi, &b) in b_orig.iter().enumerate() {
                if self.has_edge(a, b) {
                    g.rows[ai].insert(bi);
                }
            }
        }
        Ok((g, SubgraphMap { a_orig, b_orig }))
    }

    /// Removes a single vertex; convenience wrapper over `induced_subgraph`.
    pub fn remove_vertex(&self, v: VertexRef) -> Result<(BipartiteGraph, SubgraphMap)> {
        self.check_ref(v)?;
        let keep: Vec<VertexRef> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Single BFS component check over both parts; the empty graph counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        let total = self.vertex_count();
        if total == 0 {
            return false;
        }
        let start = if self.size_a > 0 { VertexRef::a(0) } else { VertexRef::b(0) };
        let mut seen_a = BitSet::new(self.size_a);
        let mut seen_b = BitSet::new(self.size_b);
        let mut queue = std::collections::VecDeque::from([start]);
        match start.side {
            Side::A => seen_a.insert(0),
            Side::B => seen_b.insert(0),
        }
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            let (nbrs, seen): (&BitSet, &mut BitSet) = match v.side {
                Side::A => (self.row(v.index), &mut seen_b),
                Side::B => (self.col(v.index), &mut seen_a),
            };
            for u in nbrs.iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    visited += 1;
                    queue.push_back(VertexRef {
                        side: v.side.opposite(),
                        index: u,
                    });
                }
            }
        }
        visited == total
    }

    /// Canonical JSON: `{"a":..,"b":..,"edges":[[a,b],..]}` with edges sorted
    /// lexicographically. Byte-stable for a given graph.
    pub fn to_canonical_json(&self) -> String {
        let json = GraphJson {
            a: self.size_a,
            b: self.size_b,
            edges: self.edges(),
        };
        serde_json::to_string(&json).expect("graph serialization cannot fail")
    }

    /// Parses the canonical JSON format, rejecting out-of-range indices and
    /// duplicate edges.
    pub fn from_json(text: &str) -> Result<Self> {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::new(json.a, json.b, &json.edges)
    }
}

/// Map from subgraph indices back to the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphMap {
    pub a_orig: Vec<usize>,
    pub b_orig: Vec<usize>,
}

impl SubgraphMap {
    pub fn to_original(&self, v: VertexRef) -> VertexRef {
        match v.side {
            Side::A => VertexRef::a(self.a_orig[v.index]),
            Side::B => VertexRef::b(self.b_orig[v.index]),
        }
    }
}

/// Outcome of the chain-graph test: perfect orderings or an induced 2P2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainVerdict {
    /// `order_a` has nested non-increasing neighborhoods, `order_b` nested
    /// non-decreasing.
    Chain {
        order_a: Vec<usize>,
        order_b: Vec<usize>,
    },
    TwoP2(TwoP2Witness),
}

impl ChainVerdict {
    pub fn is_chain(&self) -> bool {
        matches!(self, ChainVerdict::Chain { .. })
    }
}

/// Four vertices inducing two disjoint edges: `a[0]-b[0]` and `a[1]-b[1]`,
/// with both cross pairs non-adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoP2Witness {
    pub a: [usize; 2],
    pub b: [usize; 2],
}

impl TwoP2Witness {
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        self.a[0] != self.a[1]
            && self.b[0] != self.b[1]
            && g.has_edge(self.a[0], self.b[0])
            && g.has_edge(self.a[1], self.b[1])
            && !g.has_edge(self.a[0], self.b[1])
            && !g.has_edge(self.a[1], self.b[0])
    }
}

/// Decides whether the neighborhoods in each part form a chain under
/// inclusion. Orders are degree-sorted with ties by ascending index.
pub fn is_chain_graph(g: &BipartiteGraph) -> ChainVerdict {
    let mut order_a: Vec<usize> = (0..g.size_a()).collect();
    order_a.sort_by_key(|&a| (std::cmp::Reverse(g.row(a).count()), a));
    for w in order_a.windows(2) {
        let (prev, next) = (w[0], w[1]);
        if !g.row(next).is_subset(g.row(prev)) {
            // prev has at least as many neighbors, so both private sets are
            // nonempty and any private pair completes an induced 2P2.
            let b_next = g.row(next).difference(g.row(prev)).first().unwrap();
            let b_prev = g.row(prev).difference(g.row(next)).first().unwrap();
            return ChainVerdict::TwoP2(TwoP2Witness {
                a: [prev, next],
                b: [b_prev, b_next],
            });
        }
    }
    let mut order_b: Vec<usize> = (0..g.size_b()).collect();
    order_b.sort_by_key(|&b| (g.col(b).count(), b));
    for w in order_b.windows(2) {
        debug_assert!(g.col(w[0]).is_subset(g.col(w[1])));
    }
    ChainVerdict::Chain { order_a, order_b }
}

/// An induced-subgraph embedding of `h` into `g`. When `swapped` is set the
/// A-part of `h` maps into the B-part of `g` and vice versa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub a_map: Vec<usize>,
    pub b_map: Vec<usize>,
    pub swapped: bool,
}

impl Embedding {
    pub fn image(&self, v: VertexRef) -> VertexRef {
        let (side, index) = match v.side {
            Side::A => (Side::A, self.a_map[v.index]),
            Side::B => (Side::B, self.b_map[v.index]),
        };
        VertexRef {
            side: if self.swapped { side.opposite() } else { side },
            index,
        }
    }

    pub fn verify(&self, h: &BipartiteGraph, g: &BipartiteGraph) -> bool {
        let adjacent = |x: VertexRef, y: VertexRef| match (x.side, y.side) {
            (Side::A, Side::B) => g.has_edge(x.index, y.index),
            (Side::B, Side::A) => g.has_edge(y.index, x.index),
            _ => false,
        };
        let injective = {
            let mut images: Vec<VertexRef> = h.vertices().map(|v| self.image(v)).collect();
            images.sort_unstable();
            images.windows(2).all(|w| w[0] != w[1])
        };
        injective
            && (0..h.size_a()).all(|a| {
                (0..h.size_b()).all(|b| {
                    h.has_edge(a, b) == adjacent(self.image(VertexRef::a(a)), self.image(VertexRef::b(b)))
                })
            })
    }
}

/// Whether an embedding must preserve the coloring or may also swap parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedMode {
    Colored,
    /// Tries the color-preserving orientation, then the part swap.
    Uncolored,
}

/// Hard cap on the host size for the exponential embedding search.
pub const EMBED_BUDGET: usize = 24;

/// Exhaustive induced-subgraph embedding search, backtracking over h-vertices
/// in descending degree order with degree and adjacency pruning. Desk scale
/// only; errors out beyond [`EMBED_BUDGET`] host vertices.
pub fn find_embedding(
    h: &BipartiteGraph,
    g: &BipartiteGraph,
    mode: EmbedMode,
) -> Result<Option<Embedding>> {
    if h.vertex_count() > g.vertex_count() {
        return Err(Error::Budget {
            what: "find_embedding pattern larger than host",
            limit: g.vertex_count(),
            actual: h.vertex_count(),
        });
    }
    if g.vertex_count() > EMBED_BUDGET {
        return Err(Error::Budget {
            what: "find_embedding host vertices",
            limit: EMBED_BUDGET,
            actual: g.vertex_count(),
        });
    }
    if let Some(e) = embed_colored(h, g, false) {
        return Ok(Some(e));
    }
    if mode == EmbedMode::Uncolored {
        if let Some(mut e) = embed_colored(&h.reflect(), g, false) {
            // The reflected pattern's A-part is h's B-part; undo the relabel
            // and record the orientation instead.
            std::mem::swap(&mut e.a_map, &mut e.b_map);
            e.swapped = true;
            debug_assert!(e.verify(h, g));
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn embed_colored(h: &BipartiteGraph, g: &BipartiteGraph, _swapped: bool) -> Option<Embedding> {
    if h.size_a() > g.size_a() || h.size_b() > g.size_b() {
        return None;
    }
    let mut order: Vec<VertexRef> = h.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));

    let mut a_map = vec![usize::MAX; h.size_a()];
    let mut b_map = vec![usize::MAX; h.size_b()];
    let mut used_a = BitSet::new(g.size_a());
    let mut used_b = BitSet::new(g.size_b());

    #[allow(clippy::too_many_arguments)]
    fn go(
        h: &BipartiteGraph,
        g: &BipartiteGraph,
        order: &[VertexRef],
        depth: usize,
        a_map: &mut [usize],
        b_map: &mut [usize],
        used_a: &mut BitSet,
        used_b: &mut BitSet,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        let cap = match v.side {
            Side::A => g.size_a(),
            Side::B => g.size_b(),
        };
        // Candidate must be unused, have enough degree, and agree with every
        // already-placed opposite-side vertex on adjacency (induced).
        'cand: for c in 0..cap {
            let taken = match v.side {
                Side::A => used_a.contains(c),
                Side::B => used_b.contains(c),
            };
            if taken || g.degree(VertexRef { side: v.side, index: c }) < h.degree(v) {
                continue;
            }
            let other_map: &[usize] = match v.side {
                Side::A => b_map,
                Side::B => a_map,
            };
            for (u, &img) in other_map.iter().enumerate() {
                if img == usize::MAX {
                    continue;
                }
                let h_adj = match v.side {
                    Side::A => h.has_edge(v.index, u),
                    Side::B => h.has_edge(u, v.index),
                };
                let g_adj = match v.side {
                    Side::A => g.has_edge(c, img),
                    Side::B => g.has_edge(img, c),
                };
                if h_adj != g_adj {
                    continue 'cand;
                }
            }
            match v.side {
                Side::A => {
                    a_map[v.index] = c;
                    used_a.insert(c);
                }
                Side::B => {
                    b_map[v.index] = c;
                    used_b.insert(c);
                }
            }
            if go(h, g, order, depth + 1, a_map, b_map, used_a, used_b) {
                return true;
            }
            match v.side {
                Side::A => {
                    a_map[v.index] = usize::MAX;
                    used_a.remove(c);
                }
                Side::B => {
                    b_map[v.index] = usize::MAX;
                    used_b.remove(c);
                }
            }
        }
        false
    }

    if go(h, g, &order, 0, &mut a_map, &mut b_map, &mut used_a, &mut used_b) {
        let e = Embedding { a_map, b_map, swapped: false };
        debug_assert!(e.verify(h, g));
        Some(e)
    } else {
        None
    }
}

/// The minimal non-chain bipartite graph: two disjoint edges.
pub fn two_p2() -> BipartiteGraph {
    BipartiteGraph::new(2, 2, &[(0, 0), (1, 1)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k22() -> BipartiteGraph {
        BipartiteGraph::complete(2, 2)
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let c = k22().bipartite_complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.bipartite_complement(), k22());
    }

    #[test]
    fn complement_of_edgeless_is_complete() {
        assert_eq!(
            BipartiteGraph::edgeless(2, 2).bipartite_complement(),
            k22()
        );
    }

    #[test]
    fn symmetric_difference_basics() {
        let g = BipartiteGraph::new(3, 3, &[(0, 0), (1, 2), (2, 1)]).unwrap();
        let empty = BipartiteGraph::edgeless(3, 3);
        assert_eq!(g.symmetric_difference(&g).unwrap(), empty);
        assert_eq!(g.symmetric_difference(&empty).unwrap(), g);
        assert!(matches!(
            g.symmetric_difference(&k22()),
            Err(Error::PartSizeMismatch { .. })
        ));
    }

    #[test]
    fn induced_subgraph_identity_and_k11() {
        let g = k22();
        let all: Vec<VertexRef> = g.vertices().collect();
        let (sub, map) = g.induced_subgraph(&all).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map.a_orig, vec![0, 1]);

        let (sub, _) = g
            .induced_subgraph(&[VertexRef::a(1), VertexRef::b(0)])
            .unwrap();
        assert_eq!(sub, BipartiteGraph::complete(1, 1));
    }

    #[test]
    fn induced_subgraph_rejects_bad_ref() {
        assert!(k22().induced_subgraph(&[VertexRef::a(5)]).is_err());
    }

    #[test]
    fn nested_induction_equals_direct() {
        let g = BipartiteGraph::new(3, 4, &[(0, 0), (0, 1), (1, 1), (1, 3), (2, 2)]).unwrap();
        let s1 = [
            VertexRef::a(0),
            VertexRef::a(1),
            VertexRef::b(1),
            VertexRef::b(3),
        ];
        let s2 = [VertexRef::a(1), VertexRef::b(3)];
        let (g1, m1) = g.induced_subgraph(&s1).unwrap();
        // Re-express s2 in g1 coordinates and induce again.
        let s2_in_g1: Vec<VertexRef> = s2
            .iter()
            .map(|v| match v.side {
                Side::A => VertexRef::a(m1.a_orig.iter().position(|&x| x == v.index).unwrap()),
                Side::B => VertexRef::b(m1.b_orig.iter().position(|&x| x == v.index).unwrap()),
            })
            .collect();
        let (g12, _) = g1.induced_subgraph(&s2_in_g1).unwrap();
        let (g2, _) = g.induced_subgraph(&s2).unwrap();
        assert_eq!(g12, g2);
    }

    #[test]
    fn chain_verdict_on_z6() {
        let z6 = crate::generators::universal_chain(6);
        match is_chain_graph(&z6) {
            ChainVerdict::Chain { order_a, order_b } => {
                assert_eq!(order_a, vec![0, 1, 2, 3, 4, 5]);
                assert_eq!(order_b, vec![0, 1, 2, 3, 4, 5]);
            }
            ChainVerdict::TwoP2(_) => panic!("Z_6 is a chain graph"),
        }
    }

    #[test]
    fn chain_verdict_on_2p2() {
        let g = two_p2();
        match is_chain_graph(&g) {
            ChainVerdict::TwoP2(w) => assert!(w.verify(&g)),
            ChainVerdict::Chain { .. } => panic!("2P2 is not a chain graph"),
        }
    }

    #[test]
    fn chain_verdict_on_edgeless() {
        match is_chain_graph(&BipartiteGraph::edgeless(3, 3)) {
            ChainVerdict::Chain { order_a, order_b } => {
                assert_eq!(order_a, vec![0, 1, 2]);
                assert_eq!(order_b, vec![0, 1, 2]);
            }
            ChainVerdict::TwoP2(_) => panic!("edgeless graphs are chain graphs"),
        }
    }

    #[test]
    fn embedding_identity() {
        let g = BipartiteGraph::new(2, 3, &[(0, 0), (0, 2), (1, 1)]).unwrap();
        let e = find_embedding(&g, &g, EmbedMode::Colored).unwrap().unwrap();
        assert!(e.verify(&g, &g));
    }

    #[test]
    fn embedding_respects_size_guard() {
        let big = BipartiteGraph::edgeless(13, 13);
        assert!(find_embedding(&two_p2(), &big, EmbedMode::Colored).is_err());
        let small = BipartiteGraph::edgeless(1, 1);
        assert!(find_embedding(&two_p2(), &small, EmbedMode::Colored).is_err());
    }

    #[test]
    fn uncolored_embedding_tries_swap() {
        // K_{1,2} into the reflected host only fits after a part swap.
        let h = BipartiteGraph::new(1, 2, &[(0, 0), (0, 1)]).unwrap();
        let g = BipartiteGraph::new(2, 1, &[(0, 0), (1, 0)]).unwrap();
        assert!(find_embedding(&h, &g, EmbedMode::Colored).unwrap().is_none());
        let e = find_embedding(&h, &g, EmbedMode::Uncolored).unwrap().unwrap();
        assert!(e.swapped);
        assert!(e.verify(&h, &g));
    }

    #[test]
    fn json_round_trip_and_canonical_order() {
        let g = BipartiteGraph::new(2, 2, &[(1, 1), (0, 0), (0, 1)]).unwrap();
        let json = g.to_canonical_json();
        assert_eq!(json, r#"{"a":2,"b":2,"edges":[[0,0],[0,1],[1,1]]}"#);
        assert_eq!(BipartiteGraph::from_json(&json).unwrap(), g);
    }

    #[test]
    fn json_rejects_duplicates_and_range() {
        assert!(BipartiteGraph::from_json(r#"{"a":2,"b":2,"edges":[[0,0],[0,0]]}"#).is_err());
        assert!(BipartiteGraph::from_json(r#"{"a":2,"b":2,"edges":[[0,5]]}"#).is_err());
        assert!(BipartiteGraph::from_json("not json").is_err());
    }

    #[test]
    fn connectivity() {
        assert!(BipartiteGraph::complete(1, 1).is_connected());
        assert!(BipartiteGraph::new(1, 0, &[]).unwrap().is_connected());
        assert!(!two_p2().is_connected());
        assert!(!BipartiteGraph::edgeless(0, 0).is_connected());
        assert!(!BipartiteGraph::edgeless(1, 1).is_connected());
    }
}
