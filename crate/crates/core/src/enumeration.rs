//! Exhaustive and bijection-based enumeration of primitive words, and
//! the updown (Euler) numbers that count them.
//!
//! Two independent routes produce the primitive words on `{1, ..., n}`:
//! a pruned scan of the permutation space, and the image of the
//! decreasing-tree enumeration under the word/tree bijection. Both
//! return the same lexicographically sorted sequence. Likewise the
//! updown numbers come from the boustrophedon (Entringer) recurrence
//! and, independently, from exhaustively counting updown permutations.

use thiserror::Error;

use crate::bijections::{psi, wrap};
use crate::patterns::{is_primitive_slice, Variant};
use crate::trees;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} is too small; at least {min} is required")]
    NTooSmall { n: u32, min: u32 },
    #[error("n = {n} exceeds the practical bound {max} for exhaustive counting")]
    NTooLarge { n: u32, max: u32 },
}

/// How a word count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Scan of the pruned permutation space.
    Brute,
    /// Image of the decreasing-tree enumeration under the bijection.
    Tree,
}

/// A count of primitive words on `{1, ..., n}` for one variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRecord {
    pub n: u32,
    pub variant: Variant,
    pub count: u64,
    pub method: CountMethod,
}

/// Counts the primitive words on `{1, ..., n}` by the requested method.
pub fn count_words(
    v: Variant,
    n: u32,
    method: CountMethod,
) -> Result<CountRecord, EnumerationError> {
    let count = match method {
        CountMethod::Brute => brute_force_words(v, n)?.len() as u64,
        CountMethod::Tree => tree_words(v, n)?.len() as u64,
    };
    Ok(CountRecord {
        n,
        variant: v,
        count,
        method,
    })
}

/// Extends `prefix` by every permutation of `remaining` in ascending
/// order, testing each completed word. The first and last digits are
/// already fixed, so lexicographic recursion over the middle yields the
/// words in lexicographic order.
fn search_middle(
    v: Variant,
    prefix: &mut Vec<u32>,
    remaining: &mut Vec<u32>,
    last: u32,
    out: &mut Vec<Word>,
) {
    if remaining.is_empty() {
        prefix.push(last);
        if is_primitive_slice(v, prefix) {
            out.push(Word::from_digits_unchecked(prefix.clone()));
        }
        prefix.pop();
        return;
    }
    for idx in 0..remaining.len() {
        let digit = remaining.remove(idx);
        prefix.push(digit);
        search_middle(v, prefix, remaining, last, out);
        prefix.pop();
        remaining.insert(idx, digit);
    }
}

fn checked_word_length(n: u32) -> Result<(), EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::NTooSmall { n, min: 2 });
    }
    Ok(())
}

/// All primitive words on `{1, ..., n}` found by scanning permutations,
/// in lexicographic order. The first digit is pinned to `n` and the last
/// to `n-1` (both forced), so only `(n-2)!` candidates are tested.
pub fn brute_force_words(v: Variant, n: u32) -> Result<Vec<Word>, EnumerationError> {
    checked_word_length(n)?;
    #[cfg(feature = "parallel")]
    {
        Ok(brute_force_par(v, n))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(brute_force_seq(v, n))
    }
}

pub(crate) fn brute_force_seq(v: Variant, n: u32) -> Vec<Word> {
    let mut prefix = vec![n];
    let mut middle: Vec<u32> = (1..=n - 2).collect();
    let mut out = Vec::new();
    search_middle(v, &mut prefix, &mut middle, n - 1, &mut out);
    out
}

#[cfg(feature = "parallel")]
fn brute_force_par(v: Variant, n: u32) -> Vec<Word> {
    use rayon::prelude::*;

    // below ~9! candidates the fork overhead outweighs the scan
    if n < 10 {
        return brute_force_seq(v, n);
    }
    // partition the space by the second digit; branch order keeps the
    // concatenation lexicographic, and a final sort pins it down
    let firsts: Vec<u32> = (1..=n - 2).collect();
    let mut words: Vec<Word> = firsts
        .into_par_iter()
        .flat_map_iter(|second| {
            let mut prefix = vec![n, second];
            let mut middle: Vec<u32> = (1..=n - 2).filter(|&d| d != second).collect();
            let mut out = Vec::new();
            search_middle(v, &mut prefix, &mut middle, n - 1, &mut out);
            out
        })
        .collect();
    words.sort_unstable();
    words
}

/// All primitive words on `{1, ..., n}` obtained by wrapping the image
/// of every decreasing 012-tree on `{1, ..., n-2}`, in lexicographic
/// order. Equal to [`brute_force_words`] as a set.
pub fn tree_words(v: Variant, n: u32) -> Result<Vec<Word>, EnumerationError> {
    checked_word_length(n)?;
    let labels: Vec<u32> = (1..=n - 2).collect();
    let trees = trees::enumerate_trees(&labels).expect("initial segment is a valid label set");
    #[cfg(feature = "parallel")]
    if trees.len() >= 10_000 {
        use rayon::prelude::*;
        let mut words: Vec<Word> = trees.par_iter().map(|t| wrap(&psi(v, t))).collect();
        words.par_sort_unstable();
        return Ok(words);
    }
    let mut words: Vec<Word> = trees.iter().map(|t| wrap(&psi(v, t))).collect();
    words.sort_unstable();
    Ok(words)
}

pub(crate) fn tree_words_seq(v: Variant, n: u32) -> Result<Vec<Word>, EnumerationError> {
    checked_word_length(n)?;
    let labels: Vec<u32> = (1..=n - 2).collect();
    let trees = trees::enumerate_trees_seq(&labels).expect("initial segment is a valid label set");
    let mut words: Vec<Word> = trees.iter().map(|t| wrap(&psi(v, t))).collect();
    words.sort_unstable();
    Ok(words)
}

/// The n-th updown (Euler) number: the count of decreasing 012-trees on
/// n labels, with `euler_number(0) = 1` for the empty tree. Computed by
/// the boustrophedon recurrence `T(r,k) = T(r,k-1) + T(r-1,r-k)` in
/// exact u128 arithmetic, which holds through n = 38; beyond that the
/// checked addition panics rather than wrap.
pub fn euler_number(n: u32) -> u128 {
    let n = n as usize;
    let mut row: Vec<u128> = vec![1];
    for r in 1..=n {
        let mut next = vec![0u128; r + 1];
        for k in 1..=r {
            next[k] = next[k - 1]
                .checked_add(row[r - k])
                .expect("updown number overflow");
        }
        row = next;
    }
    row[n]
}

/// Counts the updown permutations `w_1 < w_2 > w_3 < ...` of
/// `{1, ..., n}` by exhaustive search, as an independent check on
/// [`euler_number`]. Practical for n up to 11; `n = 0` counts the empty
/// permutation.
pub fn alternating_count_oracle(n: u32) -> Result<u128, EnumerationError> {
    if n > 11 {
        return Err(EnumerationError::NTooLarge { n, max: 11 });
    }
    if n == 0 {
        return Ok(1);
    }
    let mut used = vec![false; n as usize + 1];
    Ok(count_updown_completions(
        &mut used,
        &mut Vec::with_capacity(n as usize),
    ))
}

/// Depth-first placement of the remaining digits; a placement is only
/// extended while the prefix still alternates, and each complete updown
/// permutation is reached exactly once.
fn count_updown_completions(used: &mut Vec<bool>, prefix: &mut Vec<u32>) -> u128 {
    let n = used.len() - 1;
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for d in 1..=n as u32 {
        if used[d as usize] {
            continue;
        }
        let pos = prefix.len() + 1; // 1-based position being filled
        if let Some(&prev) = prefix.last() {
            let ok = if pos.is_multiple_of(2) {
                prev < d
            } else {
                prev > d
            };
            if !ok {
                continue;
            }
        }
        used[d as usize] = true;
        prefix.push(d);
        total += count_updown_completions(used, prefix);
        prefix.pop();
        used[d as usize] = false;
    }
    total
}
