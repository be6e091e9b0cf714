//! Decode-preserving word rewriting.
//!
//! [`TrackedWord`] is an enhanced word whose positions carry opaque vertex
//! tags, so the decoded graph can be compared across rewrites. Two primitive
//! moves exist, both local and both preserving the tagged decode:
//!
//! 1. swapping adjacent equal letters, carrying their marks over;
//! 2. swapping an adjacent `ab`/`ba` pair, exchanging the presence of a
//!    top or bottom mark between the two so their edge value is unchanged.
//!
//! On top of these, [`free_top_edge_tracked`] rewrites a word until a chosen
//! a-position loses its top edge. The move schedule mirrors the interval
//! reductions that make this always possible when the decoded graph stays
//! quasi-chain after attaching a pendant to that vertex; outside that region
//! it reports failure rather than loop, and a step ceiling of `16*(n+2)^2`
//! primitive moves guards against driver bugs.

use super::word::{EnhancedWord, Letter};
use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct TrackedWord {
    letters: Vec<Letter>,
    /// Stable vertex identity per position; meaning is owned by the caller.
    tags: Vec<u32>,
    /// tag -> current position
    tag_pos: Vec<usize>,
    /// Position of the top partner, if any (symmetric).
    top: Vec<Option<usize>>,
    bottom: Vec<Option<usize>>,
}

impl TrackedWord {
    pub fn empty() -> Self {
        TrackedWord {
            letters: Vec::new(),
            tags: Vec::new(),
            tag_pos: Vec::new(),
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    /// Tags are the original positions.
    pub fn from_word(w: &EnhancedWord) -> Self {
        let n = w.len();
        let mut t = TrackedWord {
            letters: w.letters().to_vec(),
            tags: (0..n as u32).collect(),
            tag_pos: (0..n).collect(),
            top: vec![None; n],
            bottom: vec![None; n],
        };
        for &(pb, pa) in w.top() {
            t.top[pb] = Some(pa);
            t.top[pa] = Some(pb);
        }
        for &(pa, pb) in w.bottom() {
            t.bottom[pa] = Some(pb);
            t.bottom[pb] = Some(pa);
        }
        t
    }

    pub fn into_word(self) -> EnhancedWord {
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for p in 0..self.len() {
            if let Some(q) = self.top[p] {
                if p < q {
                    top.push((p, q));
                }
            }
            if let Some(q) = self.bottom[p] {
                if p < q {
                    bottom.push((p, q));
                }
            }
        }
        EnhancedWord::new(self.letters, top, bottom)
            .expect("tracked words maintain the word invariants")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, p: usize) -> Letter {
        self.letters[p]
    }

    pub fn pos_of_tag(&self, tag: u32) -> usize {
        self.tag_pos[tag as usize]
    }

    pub fn top_partner(&self, p: usize) -> Option<usize> {
        self.top[p]
    }

    pub fn bottom_partner(&self, p: usize) -> Option<usize> {
        self.bottom[p]
    }

    /// Decoded adjacency between an a-position and a b-position.
    pub fn edge_between(&self, a_pos: usize, b_pos: usize) -> bool {
        debug_assert_eq!(self.letters[a_pos], Letter::A);
        debug_assert_eq!(self.letters[b_pos], Letter::B);
        let base = a_pos < b_pos;
        let marked = self.bottom[a_pos] == Some(b_pos) || self.top[b_pos] == Some(a_pos);
        base != marked
    }

    /// Prepends a letter (every existing position shifts right by one) and
    /// returns the new tag.
    pub fn prefix(&mut self, letter: Letter) -> u32 {
        let tag = self.tags.len() as u32;
        self.letters.insert(0, letter);
        self.tags.insert(0, tag);
        self.top.insert(0, None);
        self.bottom.insert(0, None);
        for q in self.top.iter_mut().chain(self.bottom.iter_mut()).flatten() {
            *q += 1;
        }
        for p in self.tag_pos.iter_mut() {
            *p += 1;
        }
        self.tag_pos.push(0);
        tag
    }

    pub fn add_top_edge(&mut self, b_pos: usize, a_pos: usize) -> Result<()> {
        if !(b_pos < a_pos
            && self.letters[b_pos] == Letter::B
            && self.letters[a_pos] == Letter::A
            && self.top[b_pos].is_none()
            && self.top[a_pos].is_none())
        {
            return Err(Error::RewriteFailure(format!(
                "cannot add top edge ({b_pos},{a_pos})"
            )));
        }
        self.top[b_pos] = Some(a_pos);
        self.top[a_pos] = Some(b_pos);
        Ok(())
    }

    /// Swaps adjacent equal letters at `p`, `p+1`, carrying marks over.
    pub fn swap_same(&mut self, p: usize) {
        debug_assert_eq!(self.letters[p], self.letters[p + 1]);
        // equal letters cannot be marked to each other, so partners are
        // elsewhere and only back-pointers need fixing
        debug_assert!(self.top[p] != Some(p + 1) && self.bottom[p] != Some(p + 1));
        self.swap_entries(p);
    }

    /// Swaps an adjacent `ab`/`ba` pair, exchanging the mark between them so
    /// the decoded edge value of the pair is preserved. Fails when the move
    /// would need a mark on an endpoint that already carries one of that
    /// family.
    pub fn swap_cross(&mut self, p: usize) -> Result<()> {
        let (x, y) = (p, p + 1);
        let (lx, ly) = (self.letters[x], self.letters[y]);
        debug_assert_ne!(lx, ly);
        let (a_pos, b_pos) = if lx == Letter::A { (x, y) } else { (y, x) };
        let edge = self.edge_between(a_pos, b_pos);

        // drop any mark between the two before swapping
        if self.bottom[x] == Some(y) {
            self.bottom[x] = None;
            self.bottom[y] = None;
        }
        if self.top[x] == Some(y) {
            self.top[x] = None;
            self.top[y] = None;
        }
        self.swap_entries(p);

        // letters swapped places: recompute the mark the pair now needs
        let (a_pos, b_pos) = if self.letters[x] == Letter::A { (x, y) } else { (y, x) };
        let base = a_pos < b_pos;
        if base != edge {
            if base {
                // a before b and the edge must be absent: bottom mark
                if self.bottom[a_pos].is_some() || self.bottom[b_pos].is_some() {
                    return Err(Error::RewriteFailure(format!(
                        "swap at {p} needs a bottom mark but an endpoint is taken"
                    )));
                }
                self.bottom[a_pos] = Some(b_pos);
                self.bottom[b_pos] = Some(a_pos);
            } else {
                if self.top[a_pos].is_some() || self.top[b_pos].is_some() {
                    return Err(Error::RewriteFailure(format!(
                        "swap at {p} needs a top mark but an endpoint is taken"
                    )));
                }
                self.top[b_pos] = Some(a_pos);
                self.top[a_pos] = Some(b_pos);
            }
        }
        debug_assert_eq!(self.edge_between(a_pos, b_pos), edge);
        Ok(())
    }

    fn swap_entries(&mut self, p: usize) {
        let q = p + 1;
        self.letters.swap(p, q);
        self.tags.swap(p, q);
        self.tag_pos[self.tags[p] as usize] = p;
        self.tag_pos[self.tags[q] as usize] = q;
        self.top.swap(p, q);
        self.bottom.swap(p, q);
        for moved in [p, q] {
            if let Some(partner) = self.top[moved] {
                self.top[partner] = Some(moved);
            }
            if let Some(partner) = self.bottom[moved] {
                self.bottom[partner] = Some(moved);
            }
        }
    }

    /// Reverses the word, mirroring marks and swapping the top and bottom
    /// families; realizes the bipartite complement of the decoded graph.
    pub fn complemented(&self) -> TrackedWord {
        let n = self.len();
        let m = |p: usize| n - 1 - p;
        let mut t = TrackedWord {
            letters: self.letters.iter().rev().copied().collect(),
            tags: self.tags.iter().rev().copied().collect(),
            tag_pos: vec![0; self.tag_pos.len()],
            top: vec![None; n],
            bottom: vec![None; n],
        };
        for (pos, &tag) in t.tags.iter().enumerate() {
            t.tag_pos[tag as usize] = pos;
        }
        for p in 0..n {
            if let Some(q) = self.top[p] {
                t.bottom[m(p)] = Some(m(q));
            }
            if let Some(q) = self.bottom[p] {
                t.top[m(p)] = Some(m(q));
            }
        }
        t
    }

    /// Reverses the word and swaps the letters, keeping each mark in its
    /// family; realizes the part swap of the decoded graph.
    pub fn reflected(&self) -> TrackedWord {
        let n = self.len();
        let m = |p: usize| n - 1 - p;
        let mut t = TrackedWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&l| match l {
                    Letter::A => Letter::B,
                    Letter::B => Letter::A,
                })
                .collect(),
            tags: self.tags.iter().rev().copied().collect(),
            tag_pos: vec![0; self.tag_pos.len()],
            top: vec![None; n],
            bottom: vec![None; n],
        };
        for (pos, &tag) in t.tags.iter().enumerate() {
            t.tag_pos[tag as usize] = pos;
        }
        for p in 0..n {
            if let Some(q) = self.top[p] {
                t.top[m(p)] = Some(m(q));
            }
            if let Some(q) = self.bottom[p] {
                t.bottom[m(p)] = Some(m(q));
            }
        }
        t
    }

    /// Bubbles marked positions to the front of each maximal run of equal
    /// letters (stable), the canonical placement for serialization.
    pub fn canonicalize_runs(&mut self) {
        let n = self.len();
        let mut run_start = 0;
        while run_start < n {
            let mut run_end = run_start + 1;
            while run_end < n && self.letters[run_end] == self.letters[run_start] {
                run_end += 1;
            }
            // insertion bubble: marked positions drift left past unmarked ones
            let marked =
                |t: &TrackedWord, p: usize| t.top[p].is_some() || t.bottom[p].is_some();
            let mut changed = true;
            while changed {
                changed = false;
                for p in run_start..run_end.saturating_sub(1) {
                    if !marked(self, p) && marked(self, p + 1) {
                        self.swap_same(p);
                        changed = true;
                    }
                }
            }
            run_start = run_end;
        }
    }

    /// Checks that the decoded graph equals `g` under `tag_vertex`, which
    /// names the graph vertex each tag stands for. Exercised by the encode
    /// pipeline's debug assertions after every rewrite.
    #[cfg_attr(not(debug_assertions), allow(dead_code))]
    pub fn decodes_to(&self, g: &BipartiteGraph, tag_vertex: &[VertexRef]) -> bool {
        if self.len() != g.vertex_count() {
            return false;
        }
        for p in 0..self.len() {
            let v = tag_vertex[self.tags[p] as usize];
            let expected_side = if self.letters[p] == Letter::A { Side::A } else { Side::B };
            if v.side != expected_side {
                return false;
            }
        }
        for p in 0..self.len() {
            if self.letters[p] != Letter::A {
                continue;
            }
            for q in 0..self.len() {
                if self.letters[q] != Letter::B {
                    continue;
                }
                let va = tag_vertex[self.tags[p] as usize];
                let vb = tag_vertex[self.tags[q] as usize];
                if self.edge_between(p, q) != g.has_edge(va.index, vb.index) {
                    return false;
                }
            }
        }
        true
    }
}

fn slide_right(w: &mut TrackedWord, from: usize, to: usize, moves: &mut usize) {
    for p in from..to {
        w.swap_same(p);
        *moves += 1;
    }
}

fn slide_left(w: &mut TrackedWord, from: usize, to: usize, moves: &mut usize) {
    for p in (to..from).rev() {
        w.swap_same(p);
        *moves += 1;
    }
}

/// Letters strictly between `p` and `q` are all `a`.
fn clear_a_path(w: &TrackedWord, p: usize, q: usize) -> bool {
    (p + 1..q).all(|r| w.letter(r) == Letter::A)
}

/// Rewrites `w` in place until the a-position tagged `x_tag` carries no top
/// edge. The decoded graph (under tags) is invariant throughout.
pub(crate) fn free_top_edge_tracked(w: &mut TrackedWord, x_tag: u32) -> Result<()> {
    let ceiling = 16 * (w.len() + 2) * (w.len() + 2);
    let mut moves = 0usize;

    loop {
        let x = w.pos_of_tag(x_tag);
        if w.letter(x) != Letter::A {
            return Err(Error::RewriteFailure(format!(
                "free_top_edge target at position {x} is not an a"
            )));
        }
        let Some(yp) = w.top_partner(x) else {
            return Ok(());
        };
        debug_assert!(yp < x);
        if moves > ceiling {
            return Err(Error::RewriteFailure(format!(
                "step ceiling {ceiling} exceeded; word {}, x at {x}, partner at {yp}",
                w.clone().into_word().to_json()
            )));
        }

        // adjacent partners: one cross swap deletes the top edge
        if yp + 1 == x {
            w.swap_cross(yp)?;
            moves += 1;
            continue;
        }
        // shrink the interval over equal letters
        if w.letter(x - 1) == Letter::A {
            w.swap_same(x - 1);
            moves += 1;
            continue;
        }
        if w.letter(yp + 1) == Letter::B {
            w.swap_same(yp);
            moves += 1;
            continue;
        }

        let a_star = yp + 1;
        let b_star = x - 1;
        debug_assert!(w.letter(a_star) == Letter::A && w.letter(b_star) == Letter::B);

        // remove a bottom edge lying inside the interval (clear slide path)
        if let Some((p, q)) = (a_star..b_star).find_map(|p| match w.bottom_partner(p) {
            Some(q) if w.letter(p) == Letter::A && p < q && q < x && clear_a_path(w, p, q) => {
                Some((p, q))
            }
            _ => None,
        }) {
            slide_right(w, p, q - 1, &mut moves);
            w.swap_cross(q - 1)?;
            moves += 1;
            continue;
        }
        // remove a top edge lying inside the interval (clear slide path)
        if let Some((p, q)) = (a_star..b_star + 1).find_map(|p| match w.top_partner(p) {
            Some(q) if w.letter(p) == Letter::B && p < q && q < x && clear_a_path(w, p, q) => {
                Some((p, q))
            }
            _ => None,
        }) {
            slide_left(w, q, p + 1, &mut moves);
            w.swap_cross(p)?;
            moves += 1;
            continue;
        }

        // pull x left past b_star, deleting the chain edge with a bottom mark
        if w.bottom_partner(b_star).is_none() && w.bottom_partner(x).is_none() {
            w.swap_cross(b_star)?;
            moves += 1;
            continue;
        }
        // push the partner right past a_star symmetrically
        if w.bottom_partner(yp).is_none() && w.bottom_partner(a_star).is_none() {
            w.swap_cross(yp)?;
            moves += 1;
            continue;
        }

        if w.bottom_partner(a_star) == Some(b_star) {
            // the interval endpoints are bottom-matched to each other
            if a_star + 1 == b_star {
                w.swap_cross(a_star)?;
                moves += 1;
                continue;
            }
            if w.letter(a_star + 1) == Letter::A {
                w.swap_same(a_star);
                moves += 1;
                continue;
            }
            if w.letter(b_star - 1) == Letter::B {
                w.swap_same(b_star - 1);
                moves += 1;
                continue;
            }
            // structure is now a* b .. a b*; turn one chain edge into a top
            // mark so the end of the interval opens up
            if w.top_partner(a_star).is_none() && w.top_partner(a_star + 1).is_none() {
                w.swap_cross(a_star)?;
                moves += 1;
                continue;
            }
            if w.top_partner(b_star - 1).is_none() && w.top_partner(b_star).is_none() {
                w.swap_cross(b_star - 1)?;
                moves += 1;
                continue;
            }
        } else {
            // endpoints not bottom-matched: introduce a top mark between
            // them, then the trailing a unblocks the x side
            if w.top_partner(a_star).is_none()
                && w.top_partner(b_star).is_none()
                && clear_a_path(w, a_star, b_star)
            {
                slide_right(w, a_star, b_star - 1, &mut moves);
                w.swap_cross(b_star - 1)?;
                moves += 1;
                continue;
            }
        }

        return Err(Error::RewriteFailure(format!(
            "no reduction applies; word {}, x at {x}, partner at {yp}",
            w.clone().into_word().to_json()
        )));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letterrep::word::decode_enhanced;

    fn graph_of(w: &EnhancedWord) -> BipartiteGraph {
        decode_enhanced(w).unwrap().graph
    }

    /// tag table for a standalone word: tag = original position, vertex =
    /// the decode at that time
    fn identity_tag_table(w: &EnhancedWord) -> Vec<VertexRef> {
        let d = decode_enhanced(w).unwrap();
        (0..w.len()).map(|p| d.vertex_at(p).unwrap()).collect()
    }

    #[test]
    fn swap_same_preserves_tagged_decode() {
        let w = EnhancedWord::new(
            EnhancedWord::from_str_plain("aababbab").unwrap().letters().to_vec(),
            vec![(4, 6)],
            vec![(0, 2)],
        )
        .unwrap();
        let table = identity_tag_table(&w);
        let g = graph_of(&w);
        let mut t = TrackedWord::from_word(&w);
        t.swap_same(0); // two leading a's
        assert!(t.decodes_to(&g, &table));
        t.swap_same(4); // two adjacent b's
        assert!(t.decodes_to(&g, &table));
    }

    #[test]
    fn swap_cross_all_four_orientations() {
        // ab with no mark <-> ba with top; ab with bottom <-> ba plain
        for (word, top, bottom) in [
            ("ab", vec![], vec![]),
            ("ba", vec![(0, 1)], vec![]),
            ("ab", vec![], vec![(0, 1)]),
            ("ba", vec![], vec![]),
        ] {
            let w = EnhancedWord::new(
                EnhancedWord::from_str_plain(word).unwrap().letters().to_vec(),
                top,
                bottom,
            )
            .unwrap();
            let table = identity_tag_table(&w);
            let g = graph_of(&w);
            let mut t = TrackedWord::from_word(&w);
            t.swap_cross(0).unwrap();
            assert!(t.decodes_to(&g, &table), "{word} swap lost the decode");
        }
    }

    #[test]
    fn free_adjacent_top_edge() {
        // ba with a top mark rewrites to plain ab
        let w = EnhancedWord::new(vec![Letter::B, Letter::A], vec![(0, 1)], vec![]).unwrap();
        let mut t = TrackedWord::from_word(&w);
        free_top_edge_tracked(&mut t, 1).unwrap();
        let out = t.into_word();
        assert_eq!(out.word_string(), "ab");
        assert!(out.top().is_empty() && out.bottom().is_empty());
    }

    #[test]
    fn free_is_noop_without_top_edge() {
        let w = EnhancedWord::from_str_plain("aabb").unwrap();
        let mut t = TrackedWord::from_word(&w);
        free_top_edge_tracked(&mut t, 0).unwrap();
        assert_eq!(t.into_word(), w);
    }

    #[test]
    fn free_top_edge_across_an_interval() {
        // b a a b a: top (0,4); x is the last a. The interval holds letters
        // that force same-letter slides and a mark exchange.
        let w = EnhancedWord::new(
            vec![Letter::B, Letter::A, Letter::A, Letter::B, Letter::A],
            vec![(0, 4)],
            vec![],
        )
        .unwrap();
        let table = identity_tag_table(&w);
        let g = graph_of(&w);
        let mut t = TrackedWord::from_word(&w);
        free_top_edge_tracked(&mut t, 4).unwrap();
        assert!(t.top_partner(t.pos_of_tag(4)).is_none());
        assert!(t.decodes_to(&g, &table));
    }

    #[test]
    fn canonicalize_moves_marks_to_run_start() {
        // a a b with the bottom mark on the second a
        let w = EnhancedWord::new(
            vec![Letter::A, Letter::A, Letter::B],
            vec![],
            vec![(1, 2)],
        )
        .unwrap();
        let table = identity_tag_table(&w);
        let g = graph_of(&w);
        let mut t = TrackedWord::from_word(&w);
        t.canonicalize_runs();
        assert!(t.decodes_to(&g, &table));
        let out = t.into_word();
        assert_eq!(out.bottom(), &[(0, 2)]);
    }

    #[test]
    fn prefix_shifts_marks() {
        let w = EnhancedWord::new(vec![Letter::B, Letter::A], vec![(0, 1)], vec![]).unwrap();
        let mut t = TrackedWord::from_word(&w);
        let tag = t.prefix(Letter::B);
        assert_eq!(t.pos_of_tag(tag), 0);
        let out = t.into_word();
        assert_eq!(out.word_string(), "bba");
        assert_eq!(out.top(), &[(1, 2)]);
    }
}
