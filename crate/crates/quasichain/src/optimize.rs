//! Exact polynomial-time optimization on quasi-chain graphs.
//!
//! Everything rests on one covering fact: a quasi-chain graph has O(n)
//! vertex subsets, each inducing max degree 1, that jointly contain every
//! independent set — the maximal independent sets of the chain part Z plus,
//! per bottom edge, the common non-neighbors of its endpoints. Bicliques are
//! independent sets of the bipartite complement (which is again quasi-chain),
//! so both biclique problems reduce to near-complete instances solved by a
//! closed formula; independent domination scans the cover members directly.

use serde::{Deserialize, Serialize};

use crate::batch;
use crate::bitset::BitSet;
use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::letterrep::{decompose, Decomposition};
use crate::recognition::is_quasi_chain;
use crate::{Error, Result};

/// Where a cover member came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Maximal independent set of Z cut at this 0-based rank: A-vertices of
    /// rank >= the cut, B-vertices of threshold <= it.
    MaximalIndependentInZ { rank_cut: usize },
    /// Non-neighbors of both endpoints of a bottom edge.
    BottomEdge { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMember {
    pub vertices: Vec<VertexRef>,
    pub provenance: Provenance,
}

/// The covering collection: every independent set of the host lies inside
/// some member, and each member induces max degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentCover {
    pub members: Vec<CoverMember>,
}

impl IndependentCover {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Max degree of the subgraph induced by `vertices` is at most 1.
pub fn induces_max_degree_one(g: &BipartiteGraph, vertices: &[VertexRef]) -> bool {
    let (in_a, in_b) = split_sides(g, vertices);
    in_a.iter().all(|a| g.row(a).intersection(&in_b).count() <= 1)
        && in_b.iter().all(|b| g.col(b).intersection(&in_a).count() <= 1)
}

fn split_sides(g: &BipartiteGraph, vertices: &[VertexRef]) -> (BitSet, BitSet) {
    let mut in_a = BitSet::new(g.size_a());
    let mut in_b = BitSet::new(g.size_b());
    for v in vertices {
        match v.side {
            Side::A => in_a.insert(v.index),
            Side::B => in_b.insert(v.index),
        }
    }
    (in_a, in_b)
}

/// Builds the cover from a decomposition of `g`. Non-maximal rank cuts
/// (possible under twin vertices) are discarded and duplicates removed; the
/// member count is at most `2n + 2`.
pub fn independent_cover(g: &BipartiteGraph, d: &Decomposition) -> Result<IndependentCover> {
    if !d.verify(g) {
        return Err(Error::Precondition(
            "independent_cover: not a valid decomposition of the graph".into(),
        ));
    }
    let z = &d.z;
    let mut rank_order: Vec<usize> = (0..z.size_a()).collect();
    rank_order.sort_by_key(|&a| (std::cmp::Reverse(z.row(a).count()), a));

    let mut members: Vec<CoverMember> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<VertexRef>> = std::collections::HashSet::new();
    for cut in 0..=z.size_a() {
        let mut vertices: Vec<VertexRef> = rank_order[cut..].iter().map(|&a| VertexRef::a(a)).collect();
        vertices.sort_by_key(|v| v.index);
        let threshold_cap = cut;
        for b in 0..z.size_b() {
            if z.col(b).count() <= threshold_cap {
                vertices.push(VertexRef::b(b));
            }
        }
        if is_maximal_independent_in_z(z, &vertices) && seen.insert(vertices.clone()) {
            members.push(CoverMember {
                vertices,
                provenance: Provenance::MaximalIndependentInZ { rank_cut: cut },
            });
        }
    }
    for &(a, b) in &d.bottom.edges {
        let mut vertices: Vec<VertexRef> = (0..g.size_a())
            .filter(|&a2| !g.has_edge(a2, b))
            .map(VertexRef::a)
            .collect();
        vertices.extend(
            (0..g.size_b())
                .filter(|&b2| !g.has_edge(a, b2))
                .map(VertexRef::b),
        );
        if seen.insert(vertices.clone()) {
            members.push(CoverMember {
                vertices,
                provenance: Provenance::BottomEdge { a, b },
            });
        }
    }

    let bound = 2 * g.vertex_count() + 2;
    if members.len() > bound {
        return Err(Error::Precondition(format!(
            "cover size {} exceeds the {bound} bound",
            members.len()
        )));
    }
    for m in &members {
        if !induces_max_degree_one(g, &m.vertices) {
            return Err(Error::Precondition(
                "cover member induces degree above 1".into(),
            ));
        }
    }
    Ok(IndependentCover { members })
}

fn is_maximal_independent_in_z(z: &BipartiteGraph, vertices: &[VertexRef]) -> bool {
    let (in_a, in_b) = split_sides(z, vertices);
    let independent = in_a.iter().all(|a| z.row(a).is_disjoint(&in_b));
    if !independent {
        return false;
    }
    let a_blocked = (0..z.size_a())
        .all(|a| in_a.contains(a) || !z.row(a).is_disjoint(&in_b));
    let b_blocked = (0..z.size_b())
        .all(|b| in_b.contains(b) || !z.col(b).is_disjoint(&in_a));
    a_blocked && b_blocked
}

/// Optimum of `(t-m+i) * (s-i)` over `0 <= i <= m`, with the smallest
/// optimal `i`: the max-edge biclique value of `K_{s,t}` minus an
/// `m`-matching, where `i` matched pairs lose their s-side endpoint.
pub fn near_complete_max_edge(s: usize, t: usize, m: usize) -> Result<(usize, usize)> {
    if !(m <= s && s <= t) {
        return Err(Error::Precondition(format!(
            "near_complete_max_edge needs m <= s <= t, got ({s},{t},{m})"
        )));
    }
    let mut best = (0usize, 0usize);
    for i in 0..=m {
        let value = (t - m + i) * (s - i);
        if value > best.1 {
            best = (i, value);
        }
    }
    Ok(best)
}

/// Balanced-biclique order of `K_{s,t}` minus an `m`-matching: `s` when the
/// matching fits entirely on the long side, otherwise `(t - m + s) / 2`.
pub fn near_complete_balanced(s: usize, t: usize, m: usize) -> Result<usize> {
    if !(m <= s && s <= t) {
        return Err(Error::Precondition(format!(
            "near_complete_balanced needs m <= s <= t, got ({s},{t},{m})"
        )));
    }
    Ok(if t - s >= m { s } else { (t - m + s) / 2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicliqueObjective {
    Edges,
    Balanced,
}

/// A complete bipartite subgraph given by its two vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueSolution {
    #[serde(rename = "sideA")]
    pub side_a: Vec<usize>,
    #[serde(rename = "sideB")]
    pub side_b: Vec<usize>,
    #[serde(rename = "edgeCount")]
    pub edge_count: usize,
}

impl BicliqueSolution {
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        self.edge_count == self.side_a.len() * self.side_b.len()
            && self
                .side_a
                .iter()
                .all(|&a| self.side_b.iter().all(|&b| g.has_edge(a, b)))
    }
}

/// One near-complete instance: the cover member split by side, with the
/// matching of complement edges inside it.
struct NearComplete {
    a_ids: Vec<usize>,
    b_ids: Vec<usize>,
    /// (index into a_ids, index into b_ids) pairs
    matching: Vec<(usize, usize)>,
}

impl NearComplete {
    fn from_member(gc: &BipartiteGraph, member: &CoverMember) -> Self {
        let a_ids: Vec<usize> = member
            .vertices
            .iter()
            .filter(|v| v.side == Side::A)
            .map(|v| v.index)
            .collect();
        let b_ids: Vec<usize> = member
            .vertices
            .iter()
            .filter(|v| v.side == Side::B)
            .map(|v| v.index)
            .collect();
        let mut matching = Vec::new();
        for (ai, &a) in a_ids.iter().enumerate() {
            for (bi, &b) in b_ids.iter().enumerate() {
                if gc.has_edge(a, b) {
                    matching.push((ai, bi));
                }
            }
        }
        NearComplete { a_ids, b_ids, matching }
    }

    /// Drops one endpoint per matched pair (`i` on the short side, the rest
    /// on the long side), optionally trimming to a target balanced order.
    fn solve(&self, objective: BicliqueObjective) -> Result<BicliqueSolution> {
        let a_short = self.a_ids.len() <= self.b_ids.len();
        let (s, t) = if a_short {
            (self.a_ids.len(), self.b_ids.len())
        } else {
            (self.b_ids.len(), self.a_ids.len())
        };
        let m = self.matching.len();
        // matched pairs keyed by short-side slot, ascending
        let mut pairs: Vec<(usize, usize)> = self
            .matching
            .iter()
            .map(|&(ai, bi)| if a_short { (ai, bi) } else { (bi, ai) })
            .collect();
        pairs.sort_unstable();

        let (drop_short_count, target) = match objective {
            BicliqueObjective::Edges => {
                let (i, _) = near_complete_max_edge(s, t, m)?;
                (i, None)
            }
            BicliqueObjective::Balanced => {
                let p = near_complete_balanced(s, t, m)?;
                let i = if t - s >= m { 0 } else { s - p };
                (i, Some(p))
            }
        };

        let drop_short: BitSet = BitSet::from_iter(
            pairs.iter().take(drop_short_count).map(|&(si, _)| si).collect::<Vec<_>>(),
        );
        let drop_long: BitSet =
            BitSet::from_iter(pairs.iter().skip(drop_short_count).map(|&(_, li)| li).collect::<Vec<_>>());
        let (short_ids, long_ids) = if a_short {
            (&self.a_ids, &self.b_ids)
        } else {
            (&self.b_ids, &self.a_ids)
        };
        let mut keep_short: Vec<usize> = (0..s).filter(|&i| !drop_short.contains(i)).collect();
        let mut keep_long: Vec<usize> = (0..t).filter(|&i| !drop_long.contains(i)).collect();
        if let Some(p) = target {
            keep_short.truncate(p);
            keep_long.truncate(p);
        }
        let short: Vec<usize> = keep_short.iter().map(|&i| short_ids[i]).collect();
        let long: Vec<usize> = keep_long.iter().map(|&i| long_ids[i]).collect();
        let (side_a, side_b) = if a_short { (short, long) } else { (long, short) };
        Ok(BicliqueSolution {
            edge_count: side_a.len() * side_b.len(),
            side_a,
            side_b,
        })
    }
}

fn biclique_via_cover(
    g: &BipartiteGraph,
    objective: BicliqueObjective,
) -> Result<BicliqueSolution> {
    if let crate::recognition::QuasiChainVerdict::Witness(w) = is_quasi_chain(g) {
        return Err(Error::NotQuasiChain(w));
    }
    let gc = g.bipartite_complement();
    let d = decompose(&gc)?;
    let cover = independent_cover(&gc, &d)?;
    let candidates: Vec<Result<BicliqueSolution>> = batch::map_slice(&cover.members, |member| {
        NearComplete::from_member(&gc, member).solve(objective)
    });
    let mut best = BicliqueSolution {
        side_a: vec![],
        side_b: vec![],
        edge_count: 0,
    };
    let mut best_key = 0usize;
    for c in candidates {
        let c = c?;
        let key = match objective {
            BicliqueObjective::Edges => c.edge_count,
            BicliqueObjective::Balanced => c.side_a.len().min(c.side_b.len()),
        };
        if key > best_key {
            best_key = key;
            best = c;
        }
    }
    if !best.verify(g) {
        return Err(Error::Precondition(
            "internal: candidate biclique is not complete in the host".into(),
        ));
    }
    Ok(best)
}

/// Maximum-edge biclique of a quasi-chain graph, solved through the
/// complement's cover. The empty biclique (value 0) is a legal answer for
/// edgeless inputs.
pub fn max_edge_biclique(g: &BipartiteGraph) -> Result<BicliqueSolution> {
    biclique_via_cover(g, BicliqueObjective::Edges)
}

/// Maximum balanced biclique, same pipeline with the balanced objective.
pub fn balanced_biclique(g: &BipartiteGraph) -> Result<BicliqueSolution> {
    biclique_via_cover(g, BicliqueObjective::Balanced)
}

/// Searches one cover member for an independent subset dominating all of
/// `g`, following the split into matched (degree-1) and free (degree-0)
/// vertices: the free part is mandatory, and a compatible pair of matched
/// vertices covering the leftover neighborhoods completes it.
pub fn dominating_subset_in(
    g: &BipartiteGraph,
    member: &[VertexRef],
) -> Result<Option<Vec<VertexRef>>> {
    if !induces_max_degree_one(g, member) {
        return Err(Error::Precondition(
            "dominating_subset_in: member induces degree above 1".into(),
        ));
    }
    let (in_a, in_b) = split_sides(g, member);
    // matching edges inside the member
    let mut matching: Vec<(usize, usize)> = Vec::new();
    for a in in_a.iter() {
        for b in g.row(a).intersection(&in_b).iter() {
            matching.push((a, b));
        }
    }
    let matched_a = BitSet::from_indices(g.size_a(), matching.iter().map(|&(a, _)| a));
    let matched_b = BitSet::from_indices(g.size_b(), matching.iter().map(|&(_, b)| b));
    let free_a = in_a.difference(&matched_a);
    let free_b = in_b.difference(&matched_b);

    // the member must dominate the graph at all
    let dominated = |a_side: bool, v: usize| -> bool {
        if a_side {
            in_a.contains(v) || !g.row(v).is_disjoint(&in_b)
        } else {
            in_b.contains(v) || !g.col(v).is_disjoint(&in_a)
        }
    };
    if !(0..g.size_a()).all(|a| dominated(true, a)) || !(0..g.size_b()).all(|b| dominated(false, b))
    {
        return Ok(None);
    }

    // outside vertices not already covered by the mandatory free part
    let leftover_a: Vec<usize> = (0..g.size_a())
        .filter(|&a| !in_a.contains(a) && g.row(a).is_disjoint(&free_b))
        .collect();
    let leftover_b: Vec<usize> = (0..g.size_b())
        .filter(|&b| !in_b.contains(b) && g.col(b).is_disjoint(&free_a))
        .collect();

    // who can cover them: matched A-vertices seeing all leftover B, and
    // matched B-vertices seeing all leftover A
    let covers_all_b = |a: usize| leftover_b.iter().all(|&b| g.has_edge(a, b));
    let covers_all_a = |b: usize| leftover_a.iter().all(|&a| g.has_edge(a, b));
    let x_choices: Vec<Option<usize>> = if leftover_b.is_empty() {
        vec![None]
    } else {
        matched_a.iter().filter(|&a| covers_all_b(a)).map(Some).collect()
    };
    let y_choices: Vec<Option<usize>> = if leftover_a.is_empty() {
        vec![None]
    } else {
        matched_b.iter().filter(|&b| covers_all_a(b)).map(Some).collect()
    };

    for &x in &x_choices {
        for &y in &y_choices {
            let conflicted = match (x, y) {
                (Some(x), Some(y)) => g.has_edge(x, y),
                _ => false,
            };
            if conflicted {
                continue;
            }
            // assemble: free part, the chosen pair, default endpoint elsewhere
            let mut set: Vec<VertexRef> = free_a.iter().map(VertexRef::a).collect();
            set.extend(free_b.iter().map(VertexRef::b));
            for &(a, b) in &matching {
                if y == Some(b) {
                    set.push(VertexRef::b(b));
                } else {
                    set.push(VertexRef::a(a));
                }
            }
            set.sort_unstable();
            if crate::oracles::is_independent_dominating(g, &set) {
                return Ok(Some(set));
            }
        }
    }
    Ok(None)
}

/// Minimum independent dominating set (minimum maximal independent set) of a
/// quasi-chain graph: scan every cover member and keep the smallest success.
/// The output is re-verified independent, dominating and maximal.
pub fn independent_dominating_set(g: &BipartiteGraph) -> Result<Vec<VertexRef>> {
    if let crate::recognition::QuasiChainVerdict::Witness(w) = is_quasi_chain(g) {
        return Err(Error::NotQuasiChain(w));
    }
    let d = decompose(g)?;
    let cover = independent_cover(g, &d)?;
    let results: Vec<Option<Vec<VertexRef>>> =
        batch::map_slice(&cover.members, |m| dominating_subset_in(g, &m.vertices))
            .into_iter()
            .collect::<Result<_>>()?;
    let best = results
        .into_iter()
        .flatten()
        .min_by_key(|s| s.len())
        .ok_or_else(|| {
            Error::Precondition("internal: no cover member yielded a dominating set".into())
        })?;
    debug_assert!(crate::oracles::is_independent_dominating(g, &best));
    if !crate::oracles::is_independent_dominating(g, &best) {
        return Err(Error::Precondition(
            "internal: candidate set failed verification".into(),
        ));
    }
    Ok(best)
}
