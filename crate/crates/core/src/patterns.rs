//! G-word and R-word predicates, primitivity, and the constructive
//! operations behind the recursive structure of primitive words.
//!
//! A word `w` on a ground set `P` with `n = |P| >= 2` is a G-word when
//! `w_1 = max(P)`, `w_n = max(P \ {w_1})`, and (for `n >= 4`)
//! `w_2 > w_{n-1}`; an R-word replaces the last comparison with
//! `w_2 < w_{n-1}`. A G-word (R-word) is primitive when no proper
//! consecutive subword of length >= 4, nor the reversal of one, is
//! itself a G-word (R-word). All predicates depend only on the relative
//! order of the digits, so they are invariant under order-preserving
//! relabelings of the ground set.

use std::fmt;

use thiserror::Error;

use crate::words::Word;

/// Selects between the G conditions and the R conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    G,
    R,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::G, Variant::R];

    /// The second-digit/penultimate-digit comparison: `>` for G, `<` for R.
    fn inner_cmp(self, second: u32, penultimate: u32) -> bool {
        match self {
            Variant::G => second > penultimate,
            Variant::R => second < penultimate,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::G => write!(f, "G"),
            Variant::R => write!(f, "R"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("word of length {len} is too short; at least {min} digits are required")]
    TooShort { len: usize, min: usize },
    #[error("word is not a permutation of {{1, ..., {n}}}")]
    NotOnInitialSegment { n: usize },
    #[error("word is not a primitive {variant}-word")]
    NotPrimitive { variant: Variant },
}

/// Precondition failures of [`merge_type_two`], split by kind so callers
/// can tell ground-set problems from word problems from the ordering
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("ground sets unsuitable: {0}")]
    Sets(&'static str),
    #[error("word precondition failed: {0}")]
    Words(&'static str),
    #[error("penultimate ordering violated: {left} <= {right}")]
    Ordering { left: u32, right: u32 },
}

/// First and last digits plus the variant comparison, on a raw slice.
/// `max1`/`max2` are the largest and second-largest digits of the slice.
#[inline]
fn is_word_conditions(v: Variant, w: &[u32], max1: u32, max2: u32) -> bool {
    let n = w.len();
    debug_assert!(n >= 2);
    w[0] == max1 && w[n - 1] == max2 && (n < 4 || v.inner_cmp(w[1], w[n - 2]))
}

fn two_largest(w: &[u32]) -> (u32, u32) {
    let mut max1 = 0;
    let mut max2 = 0;
    for &d in w {
        if d > max1 {
            max2 = max1;
            max1 = d;
        } else if d > max2 {
            max2 = d;
        }
    }
    (max1, max2)
}

pub(crate) fn is_word_slice(v: Variant, w: &[u32]) -> bool {
    let (max1, max2) = two_largest(w);
    is_word_conditions(v, w, max1, max2)
}

/// Primitivity scan on a raw slice. Windows are grown one digit at a time
/// so the running (max, second max) makes every window test O(1), for an
/// O(n^2) total; enumeration multiplies this by (n-2)!.
pub(crate) fn is_primitive_slice(v: Variant, w: &[u32]) -> bool {
    let n = w.len();
    if !is_word_slice(v, w) {
        return false;
    }
    if n < 5 {
        // the only window of length >= 4 is the word itself
        return true;
    }
    for i in 0..n - 3 {
        let mut max1 = 0;
        let mut max2 = 0;
        for (offset, &d) in w[i..].iter().enumerate() {
            if d > max1 {
                max2 = max1;
                max1 = d;
            } else if d > max2 {
                max2 = d;
            }
            let j = i + offset;
            if offset + 1 >= 4 && !(i == 0 && j == n - 1) {
                // forward: w[i..=j] as written
                if is_word_conditions(v, &w[i..=j], max1, max2) {
                    return false;
                }
                // reversed: first/last and second/penultimate swap roles
                if w[j] == max1 && w[i] == max2 && v.inner_cmp(w[j - 1], w[i + 1]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `w` is a G-word or R-word (primitive or not).
pub fn is_word(v: Variant, w: &Word) -> Result<bool, PatternError> {
    if w.len() < 2 {
        return Err(PatternError::TooShort {
            len: w.len(),
            min: 2,
        });
    }
    Ok(is_word_slice(v, w.digits()))
}

/// Whether `w` is a primitive G-word or R-word.
pub fn is_primitive(v: Variant, w: &Word) -> Result<bool, PatternError> {
    if w.len() < 2 {
        return Err(PatternError::TooShort {
            len: w.len(),
            min: 2,
        });
    }
    Ok(is_primitive_slice(v, w.digits()))
}

/// Membership in the trimmed set: `w` belongs when wrapping it in the two
/// forced outer digits yields a primitive word. The empty word is a
/// member (its wrap is the two-digit word `21`).
pub fn is_trimmed_member(v: Variant, w: &Word) -> bool {
    is_primitive_slice(v, crate::bijections::wrap(w).digits())
}

/// Splits a primitive word on `{1, ..., n}` at the position `k` of digit
/// `n-2` into the two shorter primitive words
/// `w_L = w_1 w_{k-1} ... w_2 w_k` and `w_R = w_n w_{k+1} ... w_{n-1} w_k`.
pub fn split(v: Variant, w: &Word) -> Result<(Word, Word), PatternError> {
    let n = w.len();
    if n < 3 {
        return Err(PatternError::TooShort { len: n, min: 3 });
    }
    if !w.is_on_initial_segment() {
        return Err(PatternError::NotOnInitialSegment { n });
    }
    if !is_primitive_slice(v, w.digits()) {
        return Err(PatternError::NotPrimitive { variant: v });
    }
    let d = w.digits();
    let k = d
        .iter()
        .position(|&x| x == n as u32 - 2)
        .expect("digit n-2 present on [n]");

    let mut left = Vec::with_capacity(k + 1);
    left.push(d[0]);
    left.extend(d[1..k].iter().rev());
    left.push(d[k]);

    let mut right = Vec::with_capacity(n - k);
    right.push(d[n - 1]);
    right.extend(&d[k + 1..n - 1]);
    right.push(d[k]);

    Ok((
        Word::from_digits_unchecked(left),
        Word::from_digits_unchecked(right),
    ))
}

/// Grows a primitive word on `{1, ..., n-1}` into one on `{1, ..., n}`:
/// for G the result is `(n, n-2, x_2, ..., x_{n-2}, n-1)`, for R it is
/// `(n, x_{n-2}, ..., x_2, n-2, n-1)`.
pub fn extend_type_one(v: Variant, x: &Word) -> Result<Word, PatternError> {
    let m = x.len();
    if m < 2 {
        return Err(PatternError::TooShort { len: m, min: 2 });
    }
    if !x.is_on_initial_segment() {
        return Err(PatternError::NotOnInitialSegment { n: m });
    }
    if !is_primitive_slice(v, x.digits()) {
        return Err(PatternError::NotPrimitive { variant: v });
    }
    let n = m as u32 + 1;
    let interior = &x.digits()[1..m - 1];
    let mut out = Vec::with_capacity(m + 1);
    out.push(n);
    match v {
        Variant::G => {
            out.push(n - 2);
            out.extend(interior);
        }
        Variant::R => {
            out.extend(interior.iter().rev());
            out.push(n - 2);
        }
    }
    out.push(n - 1);
    Ok(Word::from_digits_unchecked(out))
}

/// Merges two primitive words whose ground sets cover `{1, ..., n}` and
/// meet exactly in the digit `n-2`, which both words end with. With
/// `p = |x|` and `q = |y|`, the preconditions are `p, q >= 3`, the
/// ground-set conditions above, and `x_{p-1} > y_{q-1}`. The result is
/// `(n, x_{p-1}, ..., x_2, n-2, y_2, ..., y_{q-1}, n-1)` for G and
/// `(n, y_{q-1}, ..., y_2, n-2, x_2, ..., x_{p-1}, n-1)` for R.
pub fn merge_type_two(v: Variant, x: &Word, y: &Word) -> Result<Word, MergeError> {
    let p = x.len();
    let q = y.len();
    if p < 3 || q < 3 {
        return Err(MergeError::Sets("each part needs at least 3 digits"));
    }

    let set_x = x.ground_set();
    let set_y = y.ground_set();
    let mut union = set_x.clone();
    union.extend(&set_y);
    union.sort_unstable();
    union.dedup();
    let n = union.len();
    if n + 1 != p + q {
        return Err(MergeError::Sets(
            "ground sets must intersect in exactly one digit",
        ));
    }
    if union.iter().zip(1u32..).any(|(&d, expect)| d != expect) {
        return Err(MergeError::Sets("ground sets must cover {1, ..., n}"));
    }
    let shared = n as u32 - 2;
    if !(set_x.binary_search(&shared).is_ok() && set_y.binary_search(&shared).is_ok()) {
        return Err(MergeError::Sets("the shared digit must be n-2"));
    }

    if !is_primitive_slice(v, x.digits()) || !is_primitive_slice(v, y.digits()) {
        return Err(MergeError::Words("both parts must be primitive"));
    }
    if x.digits()[p - 1] != shared || y.digits()[q - 1] != shared {
        return Err(MergeError::Words("both parts must end with the digit n-2"));
    }

    let left = x.digits()[p - 2];
    let right = y.digits()[q - 2];
    if left <= right {
        return Err(MergeError::Ordering { left, right });
    }

    let x_interior = &x.digits()[1..p - 1];
    let y_interior = &y.digits()[1..q - 1];
    let mut out = Vec::with_capacity(n);
    out.push(n as u32);
    match v {
        Variant::G => {
            out.extend(x_interior.iter().rev());
            out.push(shared);
            out.extend(y_interior);
        }
        Variant::R => {
            out.extend(y_interior.iter().rev());
            out.push(shared);
            out.extend(x_interior);
        }
    }
    out.push(n as u32 - 1);
    Ok(Word::from_digits_unchecked(out))
}
