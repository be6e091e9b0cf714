//! Enhanced letter representations of quasi-chain graphs plus generic
//! letter-graph machinery. See the submodules for the word algebra
//! ([`word`]), the decode-preserving rewrite system ([`rewrite`]), the
//! constructive encoder and decomposition ([`encode`]), and letter graphs
//! over arbitrary decoders ([`lettergraph`]).

mod encode;
mod lettergraph;
mod rewrite;
mod word;

pub use encode::{
    decompose, encode_enhanced, free_top_edge, peel_vertex, Decomposition, EncodedWord, Transform,
};
pub use lettergraph::{
    decode_letter_graph, lettericity_bruteforce, LetterDecoder, SimpleGraph, LETTERICITY_BUDGET,
};
pub use word::{decode_enhanced, word_complement, word_reflect, DecodedWord, EnhancedWord, Letter};
