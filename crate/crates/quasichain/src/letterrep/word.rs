//! Enhanced words and their decoder.
//!
//! A word over `{a, b}` decodes to the chain graph with an edge between each
//! `a` and every `b` after it. An *enhanced* word adds a bottom matching
//! (each pair `a` before `b`: delete that chain edge) and a top matching
//! (each pair `b` before `a`: add that edge). Every quasi-chain graph has an
//! enhanced letter representation; see the sibling `encode` module.

use serde::{Deserialize, Serialize};

use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(Error::MalformedInput(format!(
                "letter {other:?} outside the alphabet {{a, b}}"
            ))),
        }
    }
}

/// A word over `{a, b}` with a top matching and a bottom matching.
///
/// Positions are 0-based internally and 1-based in JSON. Top pairs are
/// `(b_pos, a_pos)` with `b_pos < a_pos`; bottom pairs are `(a_pos, b_pos)`
/// with `a_pos < b_pos`. Both pair lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnhancedWord {
    letters: Vec<Letter>,
    top: Vec<(usize, usize)>,
    bottom: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    word: String,
    top: Vec<(usize, usize)>,
    bottom: Vec<(usize, usize)>,
}

impl EnhancedWord {
    /// Validates letters at the referenced positions, pair orientation, and
    /// the matching property of each edge family.
    pub fn new(
        letters: Vec<Letter>,
        top: Vec<(usize, usize)>,
        bottom: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = letters.len();
        let mut top = top;
        let mut bottom = bottom;
        top.sort_unstable();
        bottom.sort_unstable();

        let mut top_used = vec![false; n];
        for &(pb, pa) in &top {
            if pb >= n || pa >= n {
                return Err(Error::MalformedInput(format!(
                    "top pair ({pb},{pa}) out of range for word of length {n}"
                )));
            }
            if !(pb < pa && letters[pb] == Letter::B && letters[pa] == Letter::A) {
                return Err(Error::MalformedInput(format!(
                    "top pair ({pb},{pa}) must be a b-position before an a-position"
                )));
            }
            if top_used[pb] || top_used[pa] {
                return Err(Error::MalformedInput(
                    "top edges do not form a matching".into(),
                ));
            }
            top_used[pb] = true;
            top_used[pa] = true;
        }
        let mut bottom_used = vec![false; n];
        for &(pa, pb) in &bottom {
            if pa >= n || pb >= n {
                return Err(Error::MalformedInput(format!(
                    "bottom pair ({pa},{pb}) out of range for word of length {n}"
                )));
            }
            if !(pa < pb && letters[pa] == Letter::A && letters[pb] == Letter::B) {
                return Err(Error::MalformedInput(format!(
                    "bottom pair ({pa},{pb}) must be an a-position before a b-position"
                )));
            }
            if bottom_used[pa] || bottom_used[pb] {
                return Err(Error::MalformedInput(
                    "bottom edges do not form a matching".into(),
                ));
            }
            bottom_used[pa] = true;
            bottom_used[pb] = true;
        }
        Ok(EnhancedWord { letters, top, bottom })
    }

    pub fn plain(letters: Vec<Letter>) -> Self {
        EnhancedWord {
            letters,
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    pub fn from_str_plain(word: &str) -> Result<Self> {
        let letters: Result<Vec<Letter>> = word.chars().map(Letter::from_char).collect();
        Ok(Self::plain(letters?))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn top(&self) -> &[(usize, usize)] {
        &self.top
    }

    pub fn bottom(&self) -> &[(usize, usize)] {
        &self.bottom
    }

    pub fn word_string(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }

    /// JSON with 1-based positions: `{"word":"aababbab","top":[[5,7]],"bottom":[[1,3]]}`.
    pub fn to_json(&self) -> String {
        let json = WordJson {
            word: self.word_string(),
            top: self.top.iter().map(|&(p, q)| (p + 1, q + 1)).collect(),
            bottom: self.bottom.iter().map(|&(p, q)| (p + 1, q + 1)).collect(),
        };
        serde_json::to_string(&json).expect("word serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: WordJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        let letters: Result<Vec<Letter>> = json.word.chars().map(Letter::from_char).collect();
        let shift = |pairs: Vec<(usize, usize)>| -> Result<Vec<(usize, usize)>> {
            pairs
                .into_iter()
                .map(|(p, q)| {
                    if p == 0 || q == 0 {
                        Err(Error::MalformedInput("positions are 1-based".into()))
                    } else {
                        Ok((p - 1, q - 1))
                    }
                })
                .collect()
        };
        EnhancedWord::new(letters?, shift(json.top)?, shift(json.bottom)?)
    }
}

/// Decoded graph plus the position correspondence: `a_positions[i]` is the
/// word position of A-vertex `i` (A-vertices are the a-positions in order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedWord {
    pub graph: BipartiteGraph,
    pub a_positions: Vec<usize>,
    pub b_positions: Vec<usize>,
}

impl DecodedWord {
    pub fn vertex_at(&self, pos: usize) -> Option<VertexRef> {
        if let Ok(i) = self.a_positions.binary_search(&pos) {
            return Some(VertexRef::a(i));
        }
        if let Ok(i) = self.b_positions.binary_search(&pos) {
            return Some(VertexRef::b(i));
        }
        None
    }

    pub fn position_of(&self, v: VertexRef) -> usize {
        match v.side {
            Side::A => self.a_positions[v.index],
            Side::B => self.b_positions[v.index],
        }
    }
}

/// Edge rule: a-position `p` and b-position `q` are adjacent iff
/// `[p < q] XOR [(p,q) in bottom] XOR [(q,p) in top]`.
pub fn decode_enhanced(w: &EnhancedWord) -> Result<DecodedWord> {
    let a_positions: Vec<usize> = (0..w.len())
        .filter(|&p| w.letters[p] == Letter::A)
        .collect();
    let b_positions: Vec<usize> = (0..w.len())
        .filter(|&p| w.letters[p] == Letter::B)
        .collect();
    let mut g = BipartiteGraph::edgeless(a_positions.len(), b_positions.len());
    let mut edges = Vec::new();
    for (i, &p) in a_positions.iter().enumerate() {
        for (j, &q) in b_positions.iter().enumerate() {
            let base = p < q;
            let flip = w.bottom.binary_search(&(p, q)).is_ok()
                || w.top.binary_search(&(q, p)).is_ok();
            if base != flip {
                edges.push((i, j));
            }
        }
    }
    g = BipartiteGraph::new(g.size_a(), g.size_b(), &edges)?;
    Ok(DecodedWord {
        graph: g,
        a_positions,
        b_positions,
    })
}

/// Word realization of the bipartite complement: reverse the word and mirror
/// the marks, swapping the top and bottom families.
///
/// Under the position mirror, A-vertex `i` of `w` corresponds to A-vertex
/// `numA - 1 - i` of the result (and likewise for B).
pub fn word_complement(w: &EnhancedWord) -> EnhancedWord {
    let n = w.len();
    let m = |p: usize| n - 1 - p;
    let letters: Vec<Letter> = w.letters.iter().rev().copied().collect();
    let top: Vec<(usize, usize)> = w.bottom.iter().map(|&(pa, pb)| (m(pb), m(pa))).collect();
    let bottom: Vec<(usize, usize)> = w.top.iter().map(|&(pb, pa)| (m(pa), m(pb))).collect();
    EnhancedWord::new(letters, top, bottom).expect("mirroring preserves the invariants")
}

/// Word realization of the part swap: reverse the word, swap the letters,
/// keep top edges top and bottom edges bottom (positions mirrored).
///
/// Under the correspondence, A-vertex `i` of `w` becomes B-vertex
/// `numA - 1 - i` of the result.
pub fn word_reflect(w: &EnhancedWord) -> EnhancedWord {
    let n = w.len();
    let m = |p: usize| n - 1 - p;
    let letters: Vec<Letter> = w
        .letters
        .iter()
        .rev()
        .map(|&l| match l {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        })
        .collect();
    let top: Vec<(usize, usize)> = w.top.iter().map(|&(pb, pa)| (m(pa), m(pb))).collect();
    let bottom: Vec<(usize, usize)> = w.bottom.iter().map(|&(pa, pb)| (m(pb), m(pa))).collect();
    EnhancedWord::new(letters, top, bottom).expect("mirroring preserves the invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn aababbab_word() -> EnhancedWord {
        EnhancedWord::from_str_plain("aababbab").unwrap()
    }

    /// The graph decoded from `aababbab`: a1,a2 see all four b's, a3 sees
    /// the last three, a4 only the last.
    pub(crate) fn aababbab_graph() -> BipartiteGraph {
        BipartiteGraph::new(
            4,
            4,
            &[
                (0, 0), (0, 1), (0, 2), (0, 3),
                (1, 0), (1, 1), (1, 2), (1, 3),
                (2, 1), (2, 2), (2, 3),
                (3, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn decode_plain_word() {
        let d = decode_enhanced(&aababbab_word()).unwrap();
        assert_eq!(d.graph, aababbab_graph());
        assert_eq!(d.a_positions, vec![0, 1, 3, 6]);
        assert_eq!(d.b_positions, vec![2, 4, 5, 7]);
    }

    #[test]
    fn decode_with_marks_flips_exactly_two_pairs() {
        // bottom (1,3) removes a1-b1, top (5,7) adds b2-a4 (1-based reading).
        let w = EnhancedWord::new(
            aababbab_word().letters().to_vec(),
            vec![(4, 6)],
            vec![(0, 2)],
        )
        .unwrap();
        let d = decode_enhanced(&w).unwrap();
        let mut expected = aababbab_graph().edges();
        expected.retain(|&e| e != (0, 0));
        expected.push((3, 1));
        expected.sort_unstable();
        assert_eq!(d.graph.edges(), expected);
    }

    #[test]
    fn complement_edges_pair_a_after_b() {
        // complement edges are exactly the (a, b) pairs with the a appearing
        // after the b in the word
        let d = decode_enhanced(&aababbab_word()).unwrap();
        let c = d.graph.bipartite_complement();
        for (i, &p) in d.a_positions.iter().enumerate() {
            for (j, &q) in d.b_positions.iter().enumerate() {
                assert_eq!(c.has_edge(i, j), p > q);
            }
        }
    }

    #[test]
    fn decode_ba_is_edgeless() {
        let d = decode_enhanced(&EnhancedWord::from_str_plain("ba").unwrap()).unwrap();
        assert_eq!(d.graph, BipartiteGraph::edgeless(1, 1));
    }

    #[test]
    fn constructor_rejects_malformed_marks() {
        let letters = aababbab_word().letters().to_vec();
        // wrong letter at endpoint
        assert!(EnhancedWord::new(letters.clone(), vec![(0, 1)], vec![]).is_err());
        // not a matching
        assert!(EnhancedWord::new(letters.clone(), vec![], vec![(0, 2), (0, 4)]).is_err());
        // out of range
        assert!(EnhancedWord::new(letters, vec![(4, 99)], vec![]).is_err());
    }

    #[test]
    fn json_round_trip_is_one_based() {
        let w = EnhancedWord::new(
            aababbab_word().letters().to_vec(),
            vec![(4, 6)],
            vec![(0, 2)],
        )
        .unwrap();
        let json = w.to_json();
        assert_eq!(json, r#"{"word":"aababbab","top":[[5,7]],"bottom":[[1,3]]}"#);
        assert_eq!(EnhancedWord::from_json(&json).unwrap(), w);
        assert!(EnhancedWord::from_json(r#"{"word":"ab","top":[[0,1]],"bottom":[]}"#).is_err());
    }

    #[test]
    fn complement_commutes_with_decode_under_mirror() {
        let w = EnhancedWord::new(
            aababbab_word().letters().to_vec(),
            vec![(4, 6)],
            vec![(0, 2)],
        )
        .unwrap();
        let g = decode_enhanced(&w).unwrap().graph;
        let gc = decode_enhanced(&word_complement(&w)).unwrap().graph;
        let expect = g.bipartite_complement();
        let (na, nb) = (g.size_a(), g.size_b());
        for i in 0..na {
            for j in 0..nb {
                assert_eq!(gc.has_edge(na - 1 - i, nb - 1 - j), expect.has_edge(i, j));
            }
        }
        // involution at the graph level
        let back = decode_enhanced(&word_complement(&word_complement(&w))).unwrap().graph;
        assert_eq!(back, g);
    }

    #[test]
    fn reflect_commutes_with_decode_under_mirror() {
        let w = EnhancedWord::new(
            aababbab_word().letters().to_vec(),
            vec![(4, 6)],
            vec![(0, 2)],
        )
        .unwrap();
        let g = decode_enhanced(&w).unwrap().graph;
        let gr = decode_enhanced(&word_reflect(&w)).unwrap().graph;
        let (na, nb) = (g.size_a(), g.size_b());
        assert_eq!((gr.size_a(), gr.size_b()), (nb, na));
        for i in 0..na {
            for j in 0..nb {
                // A-vertex i of w is B-vertex na-1-i of the reflection
                assert_eq!(gr.has_edge(nb - 1 - j, na - 1 - i), g.has_edge(i, j));
            }
        }
        let back = decode_enhanced(&word_reflect(&word_reflect(&w))).unwrap().graph;
        assert_eq!(back, g);
    }

    #[test]
    fn ab_and_marked_ba_decode_to_the_same_graph() {
        // two distinct enhanced words for K_{1,1}: representation is not unique
        let w1 = EnhancedWord::from_str_plain("ab").unwrap();
        let w2 = EnhancedWord::new(
            vec![Letter::B, Letter::A],
            vec![(0, 1)],
            vec![],
        )
        .unwrap();
        assert_ne!(w1, w2);
        assert_eq!(
            decode_enhanced(&w1).unwrap().graph,
            decode_enhanced(&w2).unwrap().graph
        );
    }
}
