//! Squarefree monomial generators of the initial ideal of the slope
//! ideal, listed degree by degree.
//!
//! Under graded lex order the generators correspond to primitive
//! G-words, under reverse lex order to primitive R-words: a word
//! `w_1 ... w_r` on an r-subset of `{1, ..., n}` with `r >= 4`
//! contributes the monomial `m[w_1,w_2] * m[w_2,w_3] * ... *
//! m[w_{r-1},w_r]` of degree `r - 1`. The number of degree-d generators
//! is `C(n, d+1)` times the number of primitive words of length `d+1`.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::enumeration::{euler_number, tree_words, tree_words_seq};
use crate::patterns::Variant;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeIdealError {
    #[error("slope variables need two distinct positive indices, got ({0}, {1})")]
    BadIndexPair(u32, u32),
    #[error("a word of length {0} is too short to span a monomial; 2 digits are needed")]
    WordTooShort(usize),
    #[error("monomial is not squarefree: repeated factor {0}")]
    RepeatedFactor(SlopeVariable),
}

/// The slope variable `m[i,j]` with `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeVariable {
    i: u32,
    j: u32,
}

impl SlopeVariable {
    /// Builds `m[min(a,b), max(a,b)]`; the indices must be distinct and
    /// positive.
    pub fn new(a: u32, b: u32) -> Result<Self, SlopeIdealError> {
        if a == 0 || b == 0 || a == b {
            return Err(SlopeIdealError::BadIndexPair(a, b));
        }
        Ok(SlopeVariable {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn indices(self) -> (u32, u32) {
        (self.i, self.j)
    }
}

impl fmt::Display for SlopeVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{},{}]", self.i, self.j)
    }
}

/// A squarefree monomial in the slope variables, with factors kept in
/// ascending `(i, j)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<SlopeVariable>,
}

impl Monomial {
    pub fn new(mut factors: Vec<SlopeVariable>) -> Result<Self, SlopeIdealError> {
        factors.sort_unstable();
        for pair in factors.windows(2) {
            if pair[0] == pair[1] {
                return Err(SlopeIdealError::RepeatedFactor(pair[0]));
            }
        }
        Ok(Monomial { factors })
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SlopeVariable] {
        &self.factors
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for factor in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
            first = false;
        }
        Ok(())
    }
}

/// The two term orders under which the initial ideal is described.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Grlex,
    Revlex,
}

impl TermOrder {
    /// Which word family describes the generators under this order.
    pub fn variant(self) -> Variant {
        match self {
            TermOrder::Grlex => Variant::G,
            TermOrder::Revlex => Variant::R,
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Grlex => write!(f, "grlex"),
            TermOrder::Revlex => write!(f, "revlex"),
        }
    }
}

/// Reads off the monomial of a word: one factor per consecutive digit
/// pair. The degree is `len - 1`, and distinct digits make the result
/// squarefree.
pub fn word_to_monomial(w: &Word) -> Result<Monomial, SlopeIdealError> {
    if w.len() < 2 {
        return Err(SlopeIdealError::WordTooShort(w.len()));
    }
    let factors = w
        .digits()
        .windows(2)
        .map(|pair| SlopeVariable::new(pair[0], pair[1]))
        .collect::<Result<Vec<_>, _>>()?;
    Monomial::new(factors)
}

/// All r-subsets of `{1, ..., n}` in colexicographic order, as ascending
/// digit vectors.
fn subsets_colex(n: u32, r: usize) -> Vec<Vec<u32>> {
    let mut subsets: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(r);
    fn fill(n: u32, r: usize, from: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for d in from..=n {
            current.push(d);
            fill(n, r, d + 1, current, out);
            current.pop();
        }
    }
    fill(n, r, 1, &mut current, &mut subsets);
    subsets.sort_by_key(|s| {
        let mut key = s.clone();
        key.reverse();
        key
    });
    subsets
}

/// Relabels a word on `{1, ..., r}` through the order isomorphism onto
/// an ascending r-subset.
fn relabel(word: &Word, subset: &[u32]) -> Word {
    Word::from_digits_unchecked(
        word.digits()
            .iter()
            .map(|&d| subset[d as usize - 1])
            .collect(),
    )
}

fn monomials_for_subsets(subsets: &[Vec<u32>], words: &[Word]) -> Vec<Monomial> {
    subsets
        .iter()
        .flat_map(|subset| {
            words.iter().map(|word| {
                word_to_monomial(&relabel(word, subset)).expect("words have length >= 4")
            })
        })
        .collect()
}

/// The squarefree generators of the initial ideal for `n` points,
/// deduplicated and listed in a reproducible order: by word length, then
/// colexicographically by support subset, then lexicographically by
/// word. Empty for `n < 4`.
pub fn generators(n: u32, order: TermOrder) -> Vec<Monomial> {
    generators_impl(n, order, false)
}

/// Always-sequential version of [`generators`].
pub(crate) fn generators_seq(n: u32, order: TermOrder) -> Vec<Monomial> {
    generators_impl(n, order, true)
}

fn generators_impl(n: u32, order: TermOrder, force_seq: bool) -> Vec<Monomial> {
    let variant = order.variant();
    let mut all = Vec::new();
    for r in 4..=n {
        let words = if force_seq {
            tree_words_seq(variant, r)
        } else {
            tree_words(variant, r)
        }
        .expect("r >= 4");
        let subsets = subsets_colex(n, r as usize);
        #[cfg(feature = "parallel")]
        if !force_seq && subsets.len() * words.len() >= 10_000 {
            use rayon::prelude::*;
            all.extend(
                subsets
                    .par_iter()
                    .flat_map_iter(|subset| {
                        words.iter().map(move |word| {
                            word_to_monomial(&relabel(word, subset))
                                .expect("words have length >= 4")
                        })
                    })
                    .collect::<Vec<_>>(),
            );
            continue;
        }
        all.extend(monomials_for_subsets(&subsets, &words));
    }
    // duplicates are not expected (distinct words trace distinct edge
    // sets); the dedup pass verifies that rather than assuming it
    let mut seen = HashSet::with_capacity(all.len());
    all.retain(|m| seen.insert(m.clone()));
    all
}

/// Degree-indexed generator counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u32,
    pub order: TermOrder,
    entries: BTreeMap<u32, u128>,
}

impl CountTable {
    pub fn entries(&self) -> &BTreeMap<u32, u128> {
        &self.entries
    }

    pub fn count_at_degree(&self, d: u32) -> u128 {
        self.entries.get(&d).copied().unwrap_or(0)
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for step in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + step) / step;
    }
    acc
}

/// The number of degree-d generators for each d, via the closed count
/// `C(n, d+1)` times the updown number counting words of length `d+1`.
/// Degrees run from 3 to `n-1`; the table is empty for `n < 4`.
pub fn degree_count_table(n: u32, order: TermOrder) -> CountTable {
    let mut entries = BTreeMap::new();
    for d in 3..n {
        let count = binomial(n, d + 1) * euler_number(d - 1);
        if count > 0 {
            entries.insert(d, count);
        }
    }
    CountTable { n, order, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    #[test]
    fn monomials_from_words() {
        let m = word_to_monomial(&w("4213")).unwrap();
        assert_eq!(m.to_string(), "m[1,2]*m[1,3]*m[2,4]");
        assert_eq!(m.degree(), 3);
        assert_eq!(word_to_monomial(&w("21")).unwrap().to_string(), "m[1,2]");
        let m = word_to_monomial(&w("52314")).unwrap();
        assert_eq!(m.to_string(), "m[1,3]*m[1,4]*m[2,3]*m[2,5]");
        assert!(matches!(
            word_to_monomial(&w("7")),
            Err(SlopeIdealError::WordTooShort(1))
        ));
    }

    #[test]
    fn slope_variable_normalizes() {
        assert_eq!(SlopeVariable::new(4, 2).unwrap().indices(), (2, 4));
        assert!(SlopeVariable::new(3, 3).is_err());
        assert!(SlopeVariable::new(0, 3).is_err());
    }

    #[test]
    fn generator_listings() {
        assert!(generators(3, TermOrder::Grlex).is_empty());
        let only = generators(4, TermOrder::Grlex);
        assert_eq!(only, vec![word_to_monomial(&w("4213")).unwrap()]);
        let n6 = generators(6, TermOrder::Grlex);
        assert_eq!(n6.len(), 32);
        for d in [3usize, 4, 5] {
            let got = n6.iter().filter(|m| m.degree() == d).count();
            let want = degree_count_table(6, TermOrder::Grlex).count_at_degree(d as u32);
            assert_eq!(got as u128, want);
        }
    }

    #[test]
    fn degree_tables() {
        let t6 = degree_count_table(6, TermOrder::Grlex);
        assert_eq!(
            t6.entries().clone().into_iter().collect::<Vec<_>>(),
            vec![(3, 15), (4, 12), (5, 5)]
        );
        let t5 = degree_count_table(5, TermOrder::Grlex);
        assert_eq!(
            t5.entries().clone().into_iter().collect::<Vec<_>>(),
            vec![(3, 5), (4, 2)]
        );
        assert!(degree_count_table(3, TermOrder::Revlex)
            .entries()
            .is_empty());
        assert_eq!(
            degree_count_table(8, TermOrder::Grlex).entries(),
            degree_count_table(8, TermOrder::Revlex).entries()
        );
    }

    #[test]
    fn subset_order_is_colex() {
        assert_eq!(
            subsets_colex(4, 2),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }
}
