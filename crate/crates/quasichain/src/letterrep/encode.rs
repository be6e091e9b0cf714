//! Constructive enhanced letter representations.
//!
//! Every quasi-chain graph (or its bipartite complement) has a vertex of
//! degree at most one. The encoder peels such vertices one by one, applying
//! the complement or the part swap as needed so the peeled vertex is always
//! a low-degree B-vertex, then rebuilds the word in reverse: prefix a `b`,
//! and when the peeled vertex was pendant, first rewrite the word so its
//! support carries no top edge, then attach one from the new prefix letter.
//! Chain graphs short-circuit to a plain word. The whole pipeline is
//! polynomial in the vertex count.

use super::rewrite::{free_top_edge_tracked, TrackedWord};
use super::word::{decode_enhanced, EnhancedWord, Letter};
use crate::graph::{BipartiteGraph, EdgeList, Side, SubgraphMap, VertexRef};
use crate::recognition::is_quasi_chain;
use crate::{Error, Result};

/// Part-preserving graph transform applied before peeling a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    None,
    Complement,
    Reflect,
    ComplementReflect,
}

impl Transform {
    pub fn apply(self, g: &BipartiteGraph) -> BipartiteGraph {
        match self {
            Transform::None => g.clone(),
            Transform::Complement => g.bipartite_complement(),
            Transform::Reflect => g.reflect(),
            Transform::ComplementReflect => g.bipartite_complement().reflect(),
        }
    }
}

/// Finds a vertex that has degree at most 1 in part B after one of the four
/// transforms. Preference order: plain graph before complement, B-side
/// before A-side (the A-side is reached through the part swap), lowest index
/// first. Fails with the recognition witness when no candidate exists, which
/// only happens off the quasi-chain class.
pub fn peel_vertex(g: &BipartiteGraph) -> Result<(VertexRef, Transform)> {
    if g.vertex_count() == 0 {
        return Err(Error::Precondition("peel_vertex on an empty graph".into()));
    }
    let low = |deg: usize| deg <= 1;
    for b in 0..g.size_b() {
        if low(g.degree(VertexRef::b(b))) {
            return Ok((VertexRef::b(b), Transform::None));
        }
    }
    for a in 0..g.size_a() {
        if low(g.degree(VertexRef::a(a))) {
            return Ok((VertexRef::b(a), Transform::Reflect));
        }
    }
    for b in 0..g.size_b() {
        if g.size_a() - g.degree(VertexRef::b(b)) <= 1 {
            return Ok((VertexRef::b(b), Transform::Complement));
        }
    }
    for a in 0..g.size_a() {
        if g.size_b() - g.degree(VertexRef::a(a)) <= 1 {
            return Ok((VertexRef::b(a), Transform::ComplementReflect));
        }
    }
    match is_quasi_chain(g) {
        crate::recognition::QuasiChainVerdict::Witness(w) => Err(Error::NotQuasiChain(w)),
        crate::recognition::QuasiChainVerdict::Good { .. } => Err(Error::RewriteFailure(
            "quasi-chain graph without a low-degree vertex in graph or complement".into(),
        )),
    }
}

/// An enhanced word together with the vertex/position correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedWord {
    pub word: EnhancedWord,
    /// Word position of each A-vertex of the source graph.
    pub a_positions: Vec<usize>,
    pub b_positions: Vec<usize>,
}

impl EncodedWord {
    pub fn position_of(&self, v: VertexRef) -> usize {
        match v.side {
            Side::A => self.a_positions[v.index],
            Side::B => self.b_positions[v.index],
        }
    }

    /// Decodes the word and checks exact adjacency equality through the map.
    pub fn round_trips_to(&self, g: &BipartiteGraph) -> bool {
        let Ok(d) = decode_enhanced(&self.word) else {
            return false;
        };
        if d.graph.size_a() != g.size_a() || d.graph.size_b() != g.size_b() {
            return false;
        }
        let mut a_at = vec![usize::MAX; self.word.len()];
        let mut b_at = vec![usize::MAX; self.word.len()];
        for (i, &p) in d.a_positions.iter().enumerate() {
            a_at[p] = i;
        }
        for (i, &p) in d.b_positions.iter().enumerate() {
            b_at[p] = i;
        }
        for a in 0..g.size_a() {
            let da = a_at[self.a_positions[a]];
            if da == usize::MAX {
                return false;
            }
            for b in 0..g.size_b() {
                let db = b_at[self.b_positions[b]];
                if db == usize::MAX || d.graph.has_edge(da, db) != g.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

struct PeelRecord {
    transform: Transform,
    /// B-index of the removed vertex in the transformed stage graph.
    removed: usize,
    /// A-index (in the transformed stage graph) the vertex was pendant to.
    pendant_to: Option<usize>,
    /// Map from the next (smaller) stage back into the transformed graph.
    submap: SubgraphMap,
    #[cfg(debug_assertions)]
    transformed: BipartiteGraph,
    #[cfg(debug_assertions)]
    original: BipartiteGraph,
}

/// Produces an enhanced letter representation of a quasi-chain graph, with
/// the emitted map tying word positions to graph vertices. Marks in the
/// result sit on the lowest-index member of each run of equal letters.
pub fn encode_enhanced(g: &BipartiteGraph) -> Result<EncodedWord> {
    if let crate::recognition::QuasiChainVerdict::Witness(w) = is_quasi_chain(g) {
        return Err(Error::NotQuasiChain(w));
    }

    if let crate::graph::ChainVerdict::Chain { order_a, order_b } = crate::graph::is_chain_graph(g)
    {
        return Ok(encode_chain(g, &order_a, &order_b));
    }

    // Peel phase: record (transform, vertex) per step until empty.
    let mut records: Vec<PeelRecord> = Vec::new();
    let mut current = g.clone();
    while current.vertex_count() > 0 {
        let (vref, transform) = peel_vertex(&current)?;
        let transformed = transform.apply(&current);
        debug_assert_eq!(vref.side, Side::B);
        let nbhd = transformed.col(vref.index);
        debug_assert!(nbhd.count() <= 1);
        let pendant_to = nbhd.first();
        let (next, submap) = transformed.remove_vertex(vref)?;
        records.push(PeelRecord {
            transform,
            removed: vref.index,
            pendant_to,
            submap,
            #[cfg(debug_assertions)]
            transformed,
            #[cfg(debug_assertions)]
            original: current.clone(),
        });
        current = next;
    }

    // Rebuild phase, innermost stage outward. `table` names the current
    // stage vertex each word tag stands for.
    let mut word = TrackedWord::empty();
    let mut table: Vec<VertexRef> = Vec::new();
    for rec in records.iter().rev() {
        // lift tags from the smaller stage into the transformed graph
        for v in table.iter_mut() {
            *v = rec.submap.to_original(*v);
        }
        if let Some(x) = rec.pendant_to {
            let x_tag = tag_of(&table, VertexRef::a(x));
            free_top_edge_tracked(&mut word, x_tag)?;
            let new_tag = word.prefix(Letter::B);
            push_tag(&mut table, new_tag, VertexRef::b(rec.removed));
            let x_pos = word.pos_of_tag(x_tag);
            word.add_top_edge(0, x_pos)?;
        } else {
            let new_tag = word.prefix(Letter::B);
            push_tag(&mut table, new_tag, VertexRef::b(rec.removed));
        }
        #[cfg(debug_assertions)]
        debug_assert!(word.decodes_to(&rec.transformed, &table));

        match rec.transform {
            Transform::None => {}
            Transform::Complement => word = word.complemented(),
            Transform::Reflect => {
                word = word.reflected();
                flip_sides(&mut table);
            }
            Transform::ComplementReflect => {
                word = word.complemented().reflected();
                flip_sides(&mut table);
            }
        }
        #[cfg(debug_assertions)]
        debug_assert!(word.decodes_to(&rec.original, &table));
    }

    word.canonicalize_runs();
    let mut a_positions = vec![0; g.size_a()];
    let mut b_positions = vec![0; g.size_b()];
    for (tag, &v) in table.iter().enumerate() {
        let pos = word.pos_of_tag(tag as u32);
        match v.side {
            Side::A => a_positions[v.index] = pos,
            Side::B => b_positions[v.index] = pos,
        }
    }
    let out = EncodedWord {
        word: word.into_word(),
        a_positions,
        b_positions,
    };
    if !out.round_trips_to(g) {
        return Err(Error::RewriteFailure(
            "encoded word does not decode back to the input".into(),
        ));
    }
    Ok(out)
}

/// Plain word for a chain graph: walk the B-side in non-decreasing
/// neighborhood order, emitting each `b` after exactly its neighbors.
fn encode_chain(g: &BipartiteGraph, order_a: &[usize], order_b: &[usize]) -> EncodedWord {
    let mut a_positions = vec![0; g.size_a()];
    let mut b_positions = vec![0; g.size_b()];
    let mut letters = Vec::with_capacity(g.vertex_count());
    let mut next_a = 0usize;
    for &b in order_b {
        let t = g.col(b).count();
        while next_a < t {
            a_positions[order_a[next_a]] = letters.len();
            letters.push(Letter::A);
            next_a += 1;
        }
        b_positions[b] = letters.len();
        letters.push(Letter::B);
    }
    while next_a < g.size_a() {
        a_positions[order_a[next_a]] = letters.len();
        letters.push(Letter::A);
        next_a += 1;
    }
    let out = EncodedWord {
        word: EnhancedWord::plain(letters),
        a_positions,
        b_positions,
    };
    debug_assert!(out.round_trips_to(g));
    out
}

fn tag_of(table: &[VertexRef], v: VertexRef) -> u32 {
    table
        .iter()
        .position(|&u| u == v)
        .expect("vertex present in the tag table") as u32
}

fn push_tag(table: &mut Vec<VertexRef>, tag: u32, v: VertexRef) {
    debug_assert_eq!(tag as usize, table.len());
    table.push(v);
}

fn flip_sides(table: &mut [VertexRef]) {
    for v in table.iter_mut() {
        v.side = v.side.opposite();
    }
}

/// A quasi-chain graph split as `Z (+) H`: `Z` is the chain graph decoded
/// from the bare word; `H` is the marked matchings, `bottom` inside `E(Z)`
/// and `top` disjoint from it, at most two `H`-edges per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub z: BipartiteGraph,
    /// Edges removed from Z (vertex index pairs).
    pub bottom: EdgeList,
    /// Edges added on top of Z.
    pub top: EdgeList,
    pub encoding: EncodedWord,
}

impl Decomposition {
    /// H as a graph on the same parts.
    pub fn h_graph(&self) -> BipartiteGraph {
        let mut edges = self.bottom.edges.clone();
        edges.extend(self.top.edges.iter().copied());
        BipartiteGraph::new(self.z.size_a(), self.z.size_b(), &edges)
            .expect("matchings never repeat an edge")
    }

    /// Full invariant battery: chain Z, matchings, degree cap, and exact
    /// reconstruction of `g`.
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        if !crate::graph::is_chain_graph(&self.z).is_chain() {
            return false;
        }
        if !self.bottom.is_matching() || !self.top.is_matching() {
            return false;
        }
        if !self.bottom.edges.iter().all(|&(a, b)| self.z.has_edge(a, b)) {
            return false;
        }
        if self.top.edges.iter().any(|&(a, b)| self.z.has_edge(a, b)) {
            return false;
        }
        let h = self.h_graph();
        if h.vertices().any(|v| h.degree(v) > 2) {
            return false;
        }
        match self.z.symmetric_difference(&h) {
            Ok(rebuilt) => rebuilt == *g,
            Err(_) => false,
        }
    }
}

/// Splits a quasi-chain graph into its chain part and the two matchings, via
/// the enhanced encoding: the bare word gives Z, the marks give H.
pub fn decompose(g: &BipartiteGraph) -> Result<Decomposition> {
    let enc = encode_enhanced(g)?;
    let pos_to_vertex = position_table(&enc);
    let mut z = BipartiteGraph::edgeless(g.size_a(), g.size_b());
    let mut z_edges = Vec::new();
    for (a, &pa) in enc.a_positions.iter().enumerate() {
        for (b, &pb) in enc.b_positions.iter().enumerate() {
            if pa < pb {
                z_edges.push((a, b));
            }
        }
    }
    z = BipartiteGraph::new(z.size_a(), z.size_b(), &z_edges)?;

    let vertex_pair = |p: usize, q: usize| -> (usize, usize) {
        let (va, vb) = (pos_to_vertex[p], pos_to_vertex[q]);
        debug_assert!(va.side == Side::A && vb.side == Side::B);
        (va.index, vb.index)
    };
    let bottom = EdgeList::new(
        enc.word
            .bottom()
            .iter()
            .map(|&(pa, pb)| vertex_pair(pa, pb))
            .collect(),
    );
    let top = EdgeList::new(
        enc.word
            .top()
            .iter()
            .map(|&(pb, pa)| vertex_pair(pa, pb))
            .collect(),
    );
    let d = Decomposition {
        z,
        bottom,
        top,
        encoding: enc,
    };
    debug_assert!(d.verify(g));
    Ok(d)
}

fn position_table(enc: &EncodedWord) -> Vec<VertexRef> {
    let mut table = vec![VertexRef::a(usize::MAX); enc.word.len()];
    for (a, &p) in enc.a_positions.iter().enumerate() {
        table[p] = VertexRef::a(a);
    }
    for (b, &p) in enc.b_positions.iter().enumerate() {
        table[p] = VertexRef::b(b);
    }
    table
}

/// Rewrites an enhanced word so the given a-position carries no top edge,
/// returning the rewritten word and the position permutation
/// (`perm[old] = new`). The decoded graph is unchanged under the permutation.
pub fn free_top_edge(w: &EnhancedWord, x: usize) -> Result<(EnhancedWord, Vec<usize>)> {
    if x >= w.len() || w.letters()[x] != Letter::A {
        return Err(Error::Precondition(format!(
            "free_top_edge: {x} is not an a-position"
        )));
    }
    let mut t = TrackedWord::from_word(w);
    free_top_edge_tracked(&mut t, x as u32)?;
    let perm: Vec<usize> = (0..w.len()).map(|tag| t.pos_of_tag(tag as u32)).collect();
    Ok((t.into_word(), perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::is_chain_graph;
    use crate::recognition::unbalanced_2p3;

    #[test]
    fn peel_prefers_plain_b_side() {
        // K_{1,3} centered in A: every B-leaf qualifies, lowest index wins.
        let star = BipartiteGraph::new(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(
            peel_vertex(&star).unwrap(),
            (VertexRef::b(0), Transform::None)
        );

        // K_{3,3} is degree-0 everywhere in the complement.
        let k33 = BipartiteGraph::complete(3, 3);
        assert_eq!(
            peel_vertex(&k33).unwrap(),
            (VertexRef::b(0), Transform::Complement)
        );
    }

    #[test]
    fn peel_postcondition_on_q6() {
        let q6 = generators::antichain_q(6);
        let (v, t) = peel_vertex(&q6).unwrap();
        let transformed = t.apply(&q6);
        assert_eq!(v.side, Side::B);
        assert!(transformed.degree(v) <= 1);
        assert_eq!(t, Transform::None);
    }

    #[test]
    fn encode_k11() {
        let g = BipartiteGraph::complete(1, 1);
        let enc = encode_enhanced(&g).unwrap();
        assert!(enc.round_trips_to(&g));
        assert_eq!(enc.word.word_string(), "ab");
    }

    #[test]
    fn encode_rejects_forbidden_graph() {
        match encode_enhanced(&unbalanced_2p3()) {
            Err(Error::NotQuasiChain(w)) => assert!(w.verify(&unbalanced_2p3())),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn encode_round_trips_families() {
        for n in 1..=6 {
            let z = generators::universal_chain(n);
            let enc = encode_enhanced(&z).unwrap();
            assert!(enc.round_trips_to(&z));
            assert!(enc.word.top().is_empty() && enc.word.bottom().is_empty());

            let d = generators::double_chain(n);
            assert!(encode_enhanced(&d).unwrap().round_trips_to(&d));
            if n >= 2 {
                let q = generators::antichain_q(n);
                assert!(encode_enhanced(&q).unwrap().round_trips_to(&q));
            }
        }
    }

    #[test]
    fn encode_round_trips_random_words() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut tried = 0;
        for len in [4usize, 8, 12, 16, 20] {
            for _ in 0..40 {
                let w = generators::random_enhanced_word(len, 0.4, &mut rng);
                let g = crate::letterrep::decode_enhanced(&w).unwrap().graph;
                if !is_quasi_chain(&g).is_quasi_chain() {
                    continue;
                }
                tried += 1;
                let enc = encode_enhanced(&g).unwrap();
                assert!(enc.round_trips_to(&g), "failed on {}", w.to_json());
            }
        }
        assert!(tried > 50, "rejection sampling starved the test");
    }

    #[test]
    fn chain_graphs_encode_with_no_marks() {
        for seed in 0..30 {
            let g = generators::random_quasi_chain(14, 0.0, seed).unwrap();
            assert!(is_chain_graph(&g).is_chain());
            let enc = encode_enhanced(&g).unwrap();
            assert!(enc.word.top().is_empty() && enc.word.bottom().is_empty());
            assert!(enc.round_trips_to(&g));
        }
    }

    #[test]
    fn decompose_chain_graph_has_empty_h() {
        let z4 = generators::universal_chain(4);
        let d = decompose(&z4).unwrap();
        assert!(d.verify(&z4));
        assert_eq!(d.z, z4);
        assert!(d.bottom.is_empty() && d.top.is_empty());
    }

    #[test]
    fn decompose_marked_aababbab() {
        // The reference split of the marked word: Z is the plain-word graph,
        // H holds one removed and one added edge, and Z (+) H rebuilds g.
        let plain = EnhancedWord::from_str_plain("aababbab").unwrap();
        let w = EnhancedWord::new(plain.letters().to_vec(), vec![(4, 6)], vec![(0, 2)]).unwrap();
        let g = crate::letterrep::decode_enhanced(&w).unwrap().graph;
        let z = crate::letterrep::decode_enhanced(&plain).unwrap().graph;
        let h = BipartiteGraph::new(4, 4, &[(0, 0), (3, 1)]).unwrap();
        assert_eq!(z.symmetric_difference(&h).unwrap(), g);

        // our own decomposition need not equal the reference one, but it
        // must satisfy every invariant
        let d = decompose(&g).unwrap();
        assert!(d.verify(&g));
    }

    #[test]
    fn decompose_random_instances() {
        for seed in 0..40 {
            let g = generators::random_quasi_chain(20, 0.3, seed).unwrap();
            let d = decompose(&g).unwrap();
            assert!(d.verify(&g));
        }
    }

    #[test]
    fn free_top_edge_public_api() {
        let w = EnhancedWord::new(vec![Letter::B, Letter::A], vec![(0, 1)], vec![]).unwrap();
        let (out, perm) = free_top_edge(&w, 1).unwrap();
        assert_eq!(out.word_string(), "ab");
        assert!(out.top().is_empty());
        assert_eq!(perm, vec![1, 0]);

        // no-op when the position has no top edge
        let plain = EnhancedWord::from_str_plain("ab").unwrap();
        let (same, perm) = free_top_edge(&plain, 0).unwrap();
        assert_eq!(same, plain);
        assert_eq!(perm, vec![0, 1]);

        // b-positions are rejected
        assert!(free_top_edge(&plain, 1).is_err());
    }
}
