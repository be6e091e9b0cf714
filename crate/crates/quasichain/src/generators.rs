//! Named graph families, seeded random instances, and exhaustive catalogs.
//!
//! `Z_n` is the universal chain graph; `Q_n` the pendant-decorated family
//! obtained from it by deleting the shifted matching (an induced-subgraph
//! antichain); `D_n` the double-chain family whose verticals are 2P2s.
//! Random quasi-chain instances come from decoding random enhanced words
//! with rejection sampling, reproducible from a 64-bit seed (ChaCha8).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::BipartiteGraph;
use crate::letterrep::{decode_enhanced, EnhancedWord, Letter};
use crate::recognition::is_quasi_chain;
use crate::{Error, Result};

/// Parameters for [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// Only used by [`Family::Random`].
    pub seed: u64,
    /// Expected fraction of word positions carrying a mark; only used by
    /// [`Family::Random`].
    pub mark_density: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Zn,
    Qn,
    Dn,
    Random,
}

pub fn generate(spec: &GeneratorSpec) -> Result<BipartiteGraph> {
    if spec.n == 0 {
        return Err(Error::MalformedInput("size parameter must be >= 1".into()));
    }
    if !(0.0..=1.0).contains(&spec.mark_density) {
        return Err(Error::MalformedInput(format!(
            "mark density {} outside [0,1]",
            spec.mark_density
        )));
    }
    match spec.family {
        Family::Zn => Ok(universal_chain(spec.n)),
        Family::Qn => {
            if spec.n < 2 {
                return Err(Error::MalformedInput("Q_n requires n >= 2".into()));
            }
            Ok(antichain_q(spec.n))
        }
        Family::Dn => Ok(double_chain(spec.n)),
        Family::Random => random_quasi_chain(spec.n, spec.mark_density, spec.seed),
    }
}

/// The universal chain graph `Z_n`: parts of size n, edge `(a_i, b_j)` iff
/// `i <= j` (1-based).
pub fn universal_chain(n: usize) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            edges.push((i, j));
        }
    }
    BipartiteGraph::new(n, n, &edges).unwrap()
}

/// `Q_n`: delete the matching `(a_i, b_{i+1})` from `Z_n`, then attach a
/// pendant B-vertex (index n) to `a_1` and a pendant A-vertex (index n) to
/// `b_n`. Requires n >= 2.
pub fn antichain_q(n: usize) -> BipartiteGraph {
    assert!(n >= 2, "Q_n requires n >= 2");
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            if j != i + 1 {
                edges.push((i, j));
            }
        }
    }
    edges.push((0, n)); // pendant b'_1 on a_1
    edges.push((n, n - 1)); // pendant a'_n on b_n
    BipartiteGraph::new(n + 1, n + 1, &edges).unwrap()
}

/// `D_n`: from `Z_{3n}` delete the matching `(a_i, b_{i+1})`, then drop every
/// vertex whose 1-based index is divisible by 3. Each vertical edge of `Z_n`
/// becomes a 2P2 rung.
pub fn double_chain(n: usize) -> BipartiteGraph {
    assert!(n >= 1, "D_n requires n >= 1");
    let survivors: Vec<usize> = (1..=3 * n).filter(|i| i % 3 != 0).collect();
    let mut edges = Vec::new();
    for (ai, &i) in survivors.iter().enumerate() {
        for (bi, &j) in survivors.iter().enumerate() {
            if i <= j && j != i + 1 {
                edges.push((ai, bi));
            }
        }
    }
    BipartiteGraph::new(2 * n, 2 * n, &edges).unwrap()
}

/// Maximum rejection-sampling attempts before giving up.
pub const SAMPLING_BUDGET: usize = 1000;

/// Decodes a random enhanced word of length `n` and rejection-tests it, since
/// not every enhanced word decodes to a quasi-chain graph. Deterministic for
/// a fixed seed.
pub fn random_quasi_chain(n: usize, mark_density: f64, seed: u64) -> Result<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_BUDGET {
        let w = random_enhanced_word(n, mark_density, &mut rng);
        let g = decode_enhanced(&w).expect("generated word is well formed").graph;
        if is_quasi_chain(&g).is_quasi_chain() {
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted(SAMPLING_BUDGET))
}

/// Uniform letters, then independent Bernoulli(mark_density) trials attach a
/// bottom mark to each `a` (toward a random free later `b`) and a top mark to
/// each `b` (toward a random free later `a`).
pub fn random_enhanced_word(n: usize, mark_density: f64, rng: &mut impl Rng) -> EnhancedWord {
    let letters: Vec<Letter> = (0..n)
        .map(|_| if rng.random_bool(0.5) { Letter::A } else { Letter::B })
        .collect();
    let mut bottom = Vec::new();
    let mut bottom_used = vec![false; n];
    for p in 0..n {
        if letters[p] == Letter::A && rng.random_bool(mark_density) {
            let frees: Vec<usize> = (p + 1..n)
                .filter(|&q| letters[q] == Letter::B && !bottom_used[q])
                .collect();
            if !frees.is_empty() {
                let q = frees[rng.random_range(0..frees.len())];
                bottom.push((p, q));
                bottom_used[p] = true;
                bottom_used[q] = true;
            }
        }
    }
    let mut top = Vec::new();
    let mut top_used = vec![false; n];
    for p in 0..n {
        if letters[p] == Letter::B && rng.random_bool(mark_density) {
            let frees: Vec<usize> = (p + 1..n)
                .filter(|&q| letters[q] == Letter::A && !top_used[q])
                .collect();
            if !frees.is_empty() {
                let q = frees[rng.random_range(0..frees.len())];
                top.push((p, q));
                top_used[p] = true;
                top_used[q] = true;
            }
        }
    }
    EnhancedWord::new(letters, top, bottom).expect("construction respects the invariants")
}

/// All `(size_a, size_b)` part splits with `size_a + size_b <= max_vertices`.
/// Includes empty parts and both orientations of each split.
pub fn part_splits(max_vertices: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_vertices {
        for a in 0..=total {
            out.push((a, total - a));
        }
    }
    out
}

/// Number of labeled bipartite graphs on a given split; the catalog mask
/// range is `0..mask_count(a, b)`.
pub fn mask_count(a: usize, b: usize) -> u64 {
    assert!(a * b < 64, "catalog split too large");
    1u64 << (a * b)
}
