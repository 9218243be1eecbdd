//! Exact combinatorics of primitive G-words and R-words: the word and
//! tree domain types, the predicates and constructive lemma operations,
//! the four bijections with decreasing 012-trees, updown (Euler) number
//! enumeration with an independent oracle, and the degree-by-degree
//! generator counts of slope-variety initial ideals.
//!
//! Everything is pure and deterministic. With the default `parallel`
//! feature the enumeration entry points use rayon internally; their
//! output is identical either way, and the always-sequential fallbacks
//! stay available in [`sequential`] for differential tests and
//! benchmarks.

pub mod bijections;
pub mod enumeration;
pub mod patterns;
pub mod selftest;
pub mod slope_ideal;
pub mod trees;
pub mod words;

pub use bijections::{phi, psi, strip, wrap, BijectionError};
pub use enumeration::{
    alternating_count_oracle, brute_force_words, count_words, euler_number, tree_words,
    CountMethod, CountRecord, EnumerationError,
};
pub use patterns::{
    extend_type_one, is_primitive, is_trimmed_member, is_word, merge_type_two, split, MergeError,
    PatternError, Variant,
};
pub use slope_ideal::{
    degree_count_table, generators, word_to_monomial, CountTable, Monomial, SlopeIdealError,
    SlopeVariable, TermOrder,
};
pub use trees::{enumerate_trees, DecreasingTree, TreeError, TreeParseError};
pub use words::{ParseWordError, Word, WordError};

/// Always-sequential versions of the data-parallel entry points. These
/// are the bodies used when the `parallel` feature is disabled; they
/// stay public so benchmarks and differential tests can compare them
/// against the defaults.
pub mod sequential {
    use crate::enumeration::EnumerationError;
    use crate::patterns::Variant;
    use crate::slope_ideal::{Monomial, TermOrder};
    use crate::trees::{DecreasingTree, TreeError};
    use crate::words::Word;

    pub fn brute_force_words(v: Variant, n: u32) -> Result<Vec<Word>, EnumerationError> {
        if n < 2 {
            return Err(EnumerationError::NTooSmall { n, min: 2 });
        }
        Ok(crate::enumeration::brute_force_seq(v, n))
    }

    pub fn tree_words(v: Variant, n: u32) -> Result<Vec<Word>, EnumerationError> {
        crate::enumeration::tree_words_seq(v, n)
    }

    pub fn enumerate_trees(labels: &[u32]) -> Result<Vec<DecreasingTree>, TreeError> {
        crate::trees::enumerate_trees_seq(labels)
    }

    pub fn generators(n: u32, order: TermOrder) -> Vec<Monomial> {
        crate::slope_ideal::generators_seq(n, order)
    }
}
