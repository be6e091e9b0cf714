//! Brute-force reference solvers. These define ground truth at desk scale;
//! every polynomial algorithm in the crate is tested against one of them.
//! Budgets are hard errors, never silent truncation.

use crate::bitset::BitSet;
use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::optimize::{BicliqueObjective, BicliqueSolution};
use crate::{Error, Result};

pub const QUASI_CHAIN_BUDGET: usize = 40;
pub const BICLIQUE_BUDGET: usize = 12;
pub const DOMINATION_BUDGET: usize = 22;
pub const INDEPENDENT_SETS_BUDGET: usize = 16;

fn check_budget(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Budget { what, limit, actual })
    } else {
        Ok(())
    }
}

/// Searches directly for six vertices inducing an unbalanced 2P3, trying
/// both center sides: centers are a same-side pair where each has two
/// private neighbors with respect to the other, and any such pair plus two
/// private leaves each induces the forbidden configuration.
pub fn brute_quasi_chain(g: &BipartiteGraph) -> Result<bool> {
    check_budget("brute_quasi_chain vertices", QUASI_CHAIN_BUDGET, g.vertex_count())?;
    for side in [Side::A, Side::B] {
        let n = g.side_size(side);
        for u in 0..n {
            for v in u + 1..n {
                let nu = g.neighborhood(VertexRef { side, index: u });
                let nv = g.neighborhood(VertexRef { side, index: v });
                if nu.difference(nv).count() >= 2 && nv.difference(nu).count() >= 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exact optimum by enumerating all subsets of the smaller part; for each
/// subset the best opposite side is its common neighborhood.
pub fn brute_biclique(g: &BipartiteGraph, objective: BicliqueObjective) -> Result<BicliqueSolution> {
    check_budget(
        "brute_biclique part size",
        BICLIQUE_BUDGET,
        g.size_a().max(g.size_b()),
    )?;
    let swap = g.size_b() < g.size_a();
    let host = if swap { g.reflect() } else { g.clone() };
    let n = host.size_a();

    let mut best = BicliqueSolution {
        side_a: vec![],
        side_b: vec![],
        edge_count: 0,
    };
    let mut best_value = 0usize;
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut common = BitSet::from_indices(host.size_b(), 0..host.size_b());
        for &a in &members {
            common = common.intersection(host.row(a));
        }
        let (value, keep_a, keep_b) = match objective {
            BicliqueObjective::Edges => {
                (members.len() * common.count(), members.clone(), common.iter().collect::<Vec<_>>())
            }
            BicliqueObjective::Balanced => {
                let p = members.len().min(common.count());
                (
                    p,
                    members.iter().copied().take(p).collect(),
                    common.iter().take(p).collect(),
                )
            }
        };
        if value > best_value {
            best_value = value;
            let (sa, sb) = if swap { (keep_b, keep_a) } else { (keep_a, keep_b) };
            best = BicliqueSolution {
                edge_count: sa.len() * sb.len(),
                side_a: sa,
                side_b: sb,
            };
        }
    }
    Ok(best)
}

/// Exact minimum maximal independent set, by increasing size.
pub fn brute_independent_dominating(g: &BipartiteGraph) -> Result<Vec<VertexRef>> {
    let n = g.vertex_count();
    check_budget("brute_independent_dominating vertices", DOMINATION_BUDGET, n)?;
    let all: Vec<VertexRef> = g.vertices().collect();
    for k in 0..=n {
        let mut chosen = Vec::with_capacity(k);
        if pick_dominating(g, &all, 0, k, &mut chosen) {
            return Ok(chosen);
        }
    }
    unreachable!("the full vertex set of one part always dominates a bipartite graph");
}

fn pick_dominating(
    g: &BipartiteGraph,
    all: &[VertexRef],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<VertexRef>,
) -> bool {
    if remaining == 0 {
        return is_independent_dominating(g, chosen);
    }
    for i in from..=all.len().saturating_sub(remaining) {
        chosen.push(all[i]);
        if pick_dominating(g, all, i + 1, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A set is independent dominating iff it is independent and every outside
/// vertex has a neighbor inside; that makes it maximal automatically.
pub fn is_independent_dominating(g: &BipartiteGraph, set: &[VertexRef]) -> bool {
    let mut in_a = BitSet::new(g.size_a());
    let mut in_b = BitSet::new(g.size_b());
    for v in set {
        match v.side {
            Side::A => in_a.insert(v.index),
            Side::B => in_b.insert(v.index),
        }
    }
    let independent = in_a.iter().all(|a| g.row(a).is_disjoint(&in_b));
    if !independent {
        return false;
    }
    let dominated_a = (0..g.size_a())
        .all(|a| in_a.contains(a) || !g.row(a).is_disjoint(&in_b));
    let dominated_b = (0..g.size_b())
        .all(|b| in_b.contains(b) || !g.col(b).is_disjoint(&in_a));
    dominated_a && dominated_b
}

/// All independent sets, as packed masks: bit `i` is A-vertex `i` for
/// `i < size_a`, then B-vertex `i - size_a`.
pub fn brute_independent_sets(g: &BipartiteGraph) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    check_budget("brute_independent_sets vertices", INDEPENDENT_SETS_BUDGET, n)?;
    let mut out = Vec::new();
    'mask: for mask in 0u32..1 << n {
        for a in 0..g.size_a() {
            if mask >> a & 1 == 1 {
                for b in g.row(a).iter() {
                    if mask >> (g.size_a() + b) & 1 == 1 {
                        continue 'mask;
                    }
                }
            }
        }
        out.push(mask);
    }
    Ok(out)
}

/// Unpacks a mask from [`brute_independent_sets`] into vertex refs.
pub fn unpack_vertex_mask(g: &BipartiteGraph, mask: u32) -> Vec<VertexRef> {
    (0..g.vertex_count())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| {
            if i < g.size_a() {
                VertexRef::a(i)
            } else {
                VertexRef::b(i - g.size_a())
            }
        })
        .collect()
}

/// Counts independent sets by the deletion recurrence i(G) = i(G-v) +
/// i(G-N[v]); used as an independent recount against the enumeration.
pub fn independent_set_count(g: &BipartiteGraph) -> u64 {
    fn go(g: &BipartiteGraph, alive_a: BitSet, alive_b: BitSet) -> u64 {
        let Some(a) = alive_a.first() else {
            // only B-vertices left, every subset is independent
            return 1u64 << alive_b.count();
        };
        let mut without = alive_a.clone();
        without.remove(a);
        let with_nbhd_removed = alive_b.difference(g.row(a));
        go(g, without.clone(), alive_b) + go(g, without, with_nbhd_removed)
    }
    go(
        g,
        BitSet::from_indices(g.size_a(), 0..g.size_a()),
        BitSet::from_indices(g.size_b(), 0..g.size_b()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::universal_chain;
    use crate::recognition::unbalanced_2p3;

    #[test]
    fn forbidden_graph_rejected_chain_accepted() {
        assert!(!brute_quasi_chain(&unbalanced_2p3()).unwrap());
        assert!(brute_quasi_chain(&universal_chain(6)).unwrap());
        assert!(brute_quasi_chain(&crate::generators::double_chain(3)).unwrap());
    }

    #[test]
    fn quasi_chain_budget_enforced() {
        let g = BipartiteGraph::edgeless(21, 21);
        assert!(matches!(brute_quasi_chain(&g), Err(Error::Budget { .. })));
    }

    #[test]
    fn biclique_on_k23_and_k44_minus_matching() {
        let k23 = BipartiteGraph::complete(2, 3);
        assert_eq!(brute_biclique(&k23, BicliqueObjective::Edges).unwrap().edge_count, 6);

        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    edges.push((a, b));
                }
            }
        }
        let k44_minus = BipartiteGraph::new(4, 4, &edges).unwrap();
        assert_eq!(
            brute_biclique(&k44_minus, BicliqueObjective::Edges).unwrap().edge_count,
            4
        );
        let bal = brute_biclique(&k44_minus, BicliqueObjective::Balanced).unwrap();
        assert_eq!(bal.side_a.len(), 2);
        assert_eq!(bal.side_b.len(), 2);
    }

    #[test]
    fn biclique_solution_is_complete_in_host() {
        let g = BipartiteGraph::new(3, 3, &[(0, 0), (0, 1), (1, 1), (2, 2)]).unwrap();
        let s = brute_biclique(&g, BicliqueObjective::Edges).unwrap();
        for &a in &s.side_a {
            for &b in &s.side_b {
                assert!(g.has_edge(a, b));
            }
        }
        assert_eq!(s.edge_count, s.side_a.len() * s.side_b.len());
    }

    #[test]
    fn domination_examples() {
        assert_eq!(
            brute_independent_dominating(&BipartiteGraph::complete(1, 1)).unwrap().len(),
            1
        );
        assert_eq!(brute_independent_dominating(&universal_chain(2)).unwrap().len(), 2);
        assert_eq!(
            brute_independent_dominating(&BipartiteGraph::edgeless(2, 2)).unwrap().len(),
            4
        );
    }

    #[test]
    fn independent_sets_of_k11_and_2p2() {
        let k11 = BipartiteGraph::complete(1, 1);
        assert_eq!(brute_independent_sets(&k11).unwrap().len(), 3);
        assert_eq!(brute_independent_sets(&crate::two_p2()).unwrap().len(), 9);
    }

    #[test]
    fn enumeration_count_matches_recurrence() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a = rng.random_range(0..=4);
            let b = rng.random_range(0..=4);
            let mask: u64 = rng.random::<u64>() & (crate::generators::mask_count(a, b) - 1);
            let g = BipartiteGraph::from_mask(a, b, mask);
            assert_eq!(
                brute_independent_sets(&g).unwrap().len() as u64,
                independent_set_count(&g)
            );
        }
    }
}
