//! Implicit adjacency labels and contiguity layouts.
//!
//! Both are read off the chain-plus-matchings decomposition. Rank the
//! A-vertices by non-increasing neighborhood in Z; every Z-neighborhood of a
//! B-vertex is then a rank prefix, so a single threshold per B-vertex plus
//! the two matching partners decide adjacency:
//!
//! `adjacent(a, b) = [rank(a) <= threshold(b)] XOR [matched in H]`
//!
//! Packed labels take `1 + 3*ceil(log2(n+1))` bits for parts of size at most
//! n: the side bit, the rank or threshold, and one field per partner with
//! one value reserved for "absent". The same ordering laid out as A-block
//! then B-block makes every neighborhood a union of at most three intervals.

use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::letterrep::{decompose, Decomposition};
use crate::{Error, Result};

/// Per-vertex record of the implicit representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexLabel {
    pub side: Side,
    pub id: usize,
    /// A-side: 1-based nesting rank in Z. B-side: number of Z-neighbors
    /// under the A-ranking.
    pub z_key: usize,
    pub top_partner: Option<usize>,
    pub bottom_partner: Option<usize>,
}

impl VertexLabel {
    /// Text form `side:id:zKey:top:bottom` with `-` for absent partners.
    pub fn to_line(&self) -> String {
        let opt = |p: Option<usize>| p.map_or("-".to_string(), |v| v.to_string());
        format!(
            "{}:{}:{}:{}:{}",
            self.side,
            self.id,
            self.z_key,
            opt(self.top_partner),
            opt(self.bottom_partner)
        )
    }

    pub fn from_line(line: &str) -> Result<Self> {
        let parts: Vec<&str> = line.trim().split(':').collect();
        if parts.len() != 5 {
            return Err(Error::MalformedInput(format!(
                "label {line:?} must have 5 colon-separated fields"
            )));
        }
        let side = match parts[0] {
            "a" => Side::A,
            "b" => Side::B,
            other => {
                return Err(Error::MalformedInput(format!("bad side {other:?}")));
            }
        };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| Error::MalformedInput(format!("bad field {s:?}: {e}")))
        };
        let opt = |s: &str| -> Result<Option<usize>> {
            if s == "-" {
                Ok(None)
            } else {
                num(s).map(Some)
            }
        };
        Ok(VertexLabel {
            side,
            id: num(parts[1])?,
            z_key: num(parts[2])?,
            top_partner: opt(parts[3])?,
            bottom_partner: opt(parts[4])?,
        })
    }

    /// Packs side, zKey and both partner fields into `1 + 3*w` bits where
    /// `w = ceil(log2(n+1))`; the value `n` marks an absent partner. The id
    /// is the label's name and is not part of the packed payload.
    pub fn packed_bits(&self, max_part: usize) -> u128 {
        let w = field_width(max_part);
        let absent = max_part as u128;
        let z = match self.side {
            Side::A => (self.z_key - 1) as u128, // ranks are 1-based
            Side::B => self.z_key as u128,
        };
        let side_bit = match self.side {
            Side::A => 0u128,
            Side::B => 1,
        };
        let enc = |p: Option<usize>| p.map_or(absent, |v| v as u128);
        side_bit
            | z << 1
            | enc(self.top_partner) << (1 + w)
            | enc(self.bottom_partner) << (1 + 2 * w)
    }

    /// Bit length of [`Self::packed_bits`].
    pub fn packed_len(max_part: usize) -> usize {
        1 + 3 * field_width(max_part)
    }
}

/// `ceil(log2(n+1))`, the width that stores values `0..=n`.
pub fn field_width(n: usize) -> usize {
    usize::BITS as usize - n.leading_zeros() as usize
}

/// A complete label assignment for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    pub a_labels: Vec<VertexLabel>,
    pub b_labels: Vec<VertexLabel>,
}

impl LabelSet {
    pub fn label(&self, v: VertexRef) -> &VertexLabel {
        match v.side {
            Side::A => &self.a_labels[v.index],
            Side::B => &self.b_labels[v.index],
        }
    }

    pub fn max_part(&self) -> usize {
        self.a_labels.len().max(self.b_labels.len())
    }

    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for l in self.a_labels.iter().chain(&self.b_labels) {
            out.push_str(&l.to_line());
            out.push('\n');
        }
        out
    }

    /// Partner fields must point at each other.
    pub fn partners_consistent(&self) -> bool {
        let check = |labels: &[VertexLabel], others: &[VertexLabel]| {
            labels.iter().enumerate().all(|(i, l)| {
                let sym = |mine: Option<usize>, pick: fn(&VertexLabel) -> Option<usize>| match mine
                {
                    None => true,
                    Some(j) => others.get(j).is_some_and(|o| pick(o) == Some(i)),
                };
                sym(l.top_partner, |o| o.top_partner) && sym(l.bottom_partner, |o| o.bottom_partner)
            })
        };
        check(&self.a_labels, &self.b_labels) && check(&self.b_labels, &self.a_labels)
    }
}

/// Labels a quasi-chain graph so that [`adjacent_from_labels`] reproduces
/// its adjacency exactly.
pub fn assign_labels(g: &BipartiteGraph) -> Result<LabelSet> {
    let d = decompose(g)?;
    Ok(labels_from_decomposition(&d))
}

/// Same as [`assign_labels`] when a decomposition is already at hand.
pub fn labels_from_decomposition(d: &Decomposition) -> LabelSet {
    let z = &d.z;
    let rank_order = z_rank_order(z);
    let mut rank_of = vec![0usize; z.size_a()];
    for (r, &a) in rank_order.iter().enumerate() {
        rank_of[a] = r + 1;
    }
    let mut a_labels: Vec<VertexLabel> = (0..z.size_a())
        .map(|a| VertexLabel {
            side: Side::A,
            id: a,
            z_key: rank_of[a],
            top_partner: None,
            bottom_partner: None,
        })
        .collect();
    let mut b_labels: Vec<VertexLabel> = (0..z.size_b())
        .map(|b| VertexLabel {
            side: Side::B,
            id: b,
            z_key: z.col(b).count(),
            top_partner: None,
            bottom_partner: None,
        })
        .collect();
    for &(a, b) in &d.top.edges {
        a_labels[a].top_partner = Some(b);
        b_labels[b].top_partner = Some(a);
    }
    for &(a, b) in &d.bottom.edges {
        a_labels[a].bottom_partner = Some(b);
        b_labels[b].bottom_partner = Some(a);
    }
    LabelSet { a_labels, b_labels }
}

/// A-vertices by non-increasing Z-neighborhood size, ties by index. Nested
/// neighborhoods make any such order a containment order.
fn z_rank_order(z: &BipartiteGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..z.size_a()).collect();
    order.sort_by_key(|&a| (std::cmp::Reverse(z.row(a).count()), a));
    order
}

/// Adjacency from two labels alone: false on the same side, otherwise the
/// chain test XOR a mutual partner match.
pub fn adjacent_from_labels(u: &VertexLabel, v: &VertexLabel) -> bool {
    if u.side == v.side {
        return false;
    }
    let (a, b) = if u.side == Side::A { (u, v) } else { (v, u) };
    let chain = a.z_key <= b.z_key;
    let top = a.top_partner == Some(b.id) && b.top_partner == Some(a.id);
    let bottom = a.bottom_partner == Some(b.id) && b.bottom_partner == Some(a.id);
    chain != (top || bottom)
}

/// One vertex's neighborhood as index ranges into a layout order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSet {
    pub vertex: VertexRef,
    /// Disjoint, sorted, inclusive `(lo, hi)` ranges into the layout order.
    pub ranges: Vec<(usize, usize)>,
}

/// A vertex order in which every neighborhood is a union of at most three
/// intervals (exactly one on chain graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContiguityLayout {
    /// A-block in Z-rank order, then B-block by non-decreasing threshold.
    pub order: Vec<VertexRef>,
    pub intervals: Vec<IntervalSet>,
}

impl ContiguityLayout {
    pub fn max_interval_count(&self) -> usize {
        self.intervals.iter().map(|i| i.ranges.len()).max().unwrap_or(0)
    }

    /// Ranges must be disjoint, sorted, at most three, and cover exactly the
    /// vertex's neighborhood.
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        if self.order.len() != g.vertex_count() || self.intervals.len() != g.vertex_count() {
            return false;
        }
        for iv in &self.intervals {
            if iv.ranges.len() > 3 {
                return false;
            }
            for w in iv.ranges.windows(2) {
                if w[0].1 + 2 > w[1].0 {
                    return false;
                }
            }
            let mut covered: Vec<VertexRef> = Vec::new();
            for &(lo, hi) in &iv.ranges {
                if lo > hi || hi >= self.order.len() {
                    return false;
                }
                covered.extend(&self.order[lo..=hi]);
            }
            let mut expected: Vec<VertexRef> = match iv.vertex.side {
                Side::A => g.row(iv.vertex.index).iter().map(VertexRef::b).collect(),
                Side::B => g.col(iv.vertex.index).iter().map(VertexRef::a).collect(),
            };
            covered.sort_unstable();
            expected.sort_unstable();
            if covered != expected {
                return false;
            }
        }
        true
    }
}

/// Builds the contiguity layout from the decomposition ordering: Z makes
/// each neighborhood one interval, the bottom partner splits it in two, the
/// top partner adds a singleton.
pub fn contiguity_layout(g: &BipartiteGraph) -> Result<ContiguityLayout> {
    let d = decompose(g)?;
    let z = &d.z;
    let a_order = z_rank_order(z);
    let mut b_order: Vec<usize> = (0..z.size_b()).collect();
    b_order.sort_by_key(|&b| (z.col(b).count(), b));

    let order: Vec<VertexRef> = a_order
        .iter()
        .map(|&a| VertexRef::a(a))
        .chain(b_order.iter().map(|&b| VertexRef::b(b)))
        .collect();
    let mut pos = vec![0usize; g.vertex_count()];
    let slot = |v: VertexRef, size_a: usize| match v.side {
        Side::A => v.index,
        Side::B => size_a + v.index,
    };
    for (p, &v) in order.iter().enumerate() {
        pos[slot(v, g.size_a())] = p;
    }

    let intervals = order
        .iter()
        .map(|&v| {
            let nbrs: Vec<usize> = match v.side {
                Side::A => g.row(v.index).iter().map(|b| pos[slot(VertexRef::b(b), g.size_a())]).collect(),
                Side::B => g.col(v.index).iter().map(|a| pos[slot(VertexRef::a(a), g.size_a())]).collect(),
            };
            IntervalSet {
                vertex: v,
                ranges: pack_ranges(nbrs),
            }
        })
        .collect();

    let layout = ContiguityLayout { order, intervals };
    debug_assert!(layout.verify(g));
    if layout.max_interval_count() > 3 {
        return Err(Error::RewriteFailure(
            "layout exceeded three intervals per vertex".into(),
        ));
    }
    Ok(layout)
}

fn pack_ranges(mut positions: Vec<usize>) -> Vec<(usize, usize)> {
    positions.sort_unstable();
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    for p in positions {
        match ranges.last_mut() {
            Some(last) if last.1 + 1 == p => last.1 = p,
            _ => ranges.push((p, p)),
        }
    }
    ranges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn reconstructs(g: &BipartiteGraph) -> bool {
        let labels = assign_labels(g).unwrap();
        assert!(labels.partners_consistent());
        (0..g.size_a()).all(|a| {
            (0..g.size_b()).all(|b| {
                adjacent_from_labels(labels.label(VertexRef::a(a)), labels.label(VertexRef::b(b)))
                    == g.has_edge(a, b)
            })
        })
    }

    #[test]
    fn k11_labels() {
        let g = BipartiteGraph::complete(1, 1);
        let labels = assign_labels(&g).unwrap();
        let a = labels.label(VertexRef::a(0));
        let b = labels.label(VertexRef::b(0));
        assert_eq!((a.z_key, b.z_key), (1, 1));
        assert_eq!(a.top_partner, None);
        assert!(adjacent_from_labels(a, b));
        assert!(!adjacent_from_labels(a, a));
    }

    #[test]
    fn aababbab_graph_reconstructs() {
        let w = crate::letterrep::EnhancedWord::from_str_plain("aababbab").unwrap();
        let g = crate::letterrep::decode_enhanced(&w).unwrap().graph;
        assert!(reconstructs(&g));
    }

    #[test]
    fn random_instances_reconstruct() {
        for seed in 0..30 {
            let g = generators::random_quasi_chain(24, 0.3, seed).unwrap();
            assert!(reconstructs(&g));
        }
    }

    #[test]
    fn chain_rule_without_partners() {
        let a = VertexLabel {
            side: Side::A,
            id: 0,
            z_key: 2,
            top_partner: None,
            bottom_partner: None,
        };
        let b = VertexLabel {
            side: Side::B,
            id: 0,
            z_key: 3,
            top_partner: None,
            bottom_partner: None,
        };
        assert!(adjacent_from_labels(&a, &b));
        assert!(adjacent_from_labels(&b, &a));
    }

    #[test]
    fn chain_with_deleted_z_edge_answers_false() {
        // Constructed pair: rank 1 against threshold 3 with a mutual bottom
        // partner flips the chain edge off.
        let a = VertexLabel {
            side: Side::A,
            id: 0,
            z_key: 1,
            top_partner: None,
            bottom_partner: Some(2),
        };
        let b = VertexLabel {
            side: Side::B,
            id: 2,
            z_key: 3,
            top_partner: None,
            bottom_partner: Some(0),
        };
        assert!(!adjacent_from_labels(&a, &b));
        let plain = VertexLabel { bottom_partner: None, ..a };
        assert!(adjacent_from_labels(&plain, &b));
    }

    #[test]
    fn packed_length_meets_bound() {
        for n in [1usize, 2, 3, 4, 7, 8, 15, 60, 64] {
            let w = field_width(n);
            assert!(n < 1 << w, "width must store 0..=n");
            assert!(VertexLabel::packed_len(n) <= 3 * w + 3);
        }
        // spot check payload round trip of the packing
        let l = VertexLabel {
            side: Side::B,
            id: 5,
            z_key: 9,
            top_partner: Some(13),
            bottom_partner: None,
        };
        let n = 60;
        let w = field_width(n);
        let bits = l.packed_bits(n);
        assert_eq!(bits & 1, 1);
        assert_eq!(bits >> 1 & ((1 << w) - 1), 9);
        assert_eq!(bits >> (1 + w) & ((1 << w) - 1), 13);
        assert_eq!(bits >> (1 + 2 * w) & ((1 << w) - 1), n as u128);
        assert!(bits >> VertexLabel::packed_len(n) == 0);
    }

    #[test]
    fn label_lines_round_trip() {
        let l = VertexLabel {
            side: Side::A,
            id: 3,
            z_key: 2,
            top_partner: Some(5),
            bottom_partner: None,
        };
        assert_eq!(l.to_line(), "a:3:2:5:-");
        assert_eq!(VertexLabel::from_line("a:3:2:5:-").unwrap(), l);
        assert!(VertexLabel::from_line("c:1:1:-:-").is_err());
        assert!(VertexLabel::from_line("a:1:1").is_err());
    }

    #[test]
    fn z6_layout_is_single_intervals() {
        let layout = contiguity_layout(&generators::universal_chain(6)).unwrap();
        assert!(layout.verify(&generators::universal_chain(6)));
        assert_eq!(layout.max_interval_count(), 1);
    }

    #[test]
    fn k11_layout() {
        let g = BipartiteGraph::complete(1, 1);
        let layout = contiguity_layout(&g).unwrap();
        assert_eq!(layout.max_interval_count(), 1);
        assert!(layout.verify(&g));
    }

    #[test]
    fn random_layouts_stay_under_three() {
        for seed in 0..30 {
            let g = generators::random_quasi_chain(24, 0.35, seed).unwrap();
            let layout = contiguity_layout(&g).unwrap();
            assert!(layout.verify(&g));
            assert!(layout.max_interval_count() <= 3);
        }
    }
}
