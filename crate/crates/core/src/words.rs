//! Words: finite sequences of distinct positive integers.
//!
//! A word is a permutation of its ground set (the set of digits it
//! contains); the ground set is an arbitrary finite subset of the
//! positive integers, not necessarily `{1, ..., n}`. Positions are
//! 1-based in the public operations, matching the usual `w[i,j]`
//! convention for consecutive subwords.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("digit 0 is not allowed; digits are positive integers")]
    ZeroDigit,
    #[error("duplicate digit {0}")]
    DuplicateDigit(u32),
    #[error("subword range [{i},{j}] is not valid for a word of length {n}")]
    RangeOutOfBounds { i: usize, j: usize, n: usize },
    #[error("digit {0} does not occur in the word")]
    DigitNotFound(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("invalid digit token '{0}'")]
    InvalidToken(String),
    #[error("compact form only allows the digits 1-9, found {0:?}")]
    BadCompactChar(char),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A sequence of pairwise-distinct positive integers.
///
/// The empty word is valid. Comparison order (`Ord`) is lexicographic on
/// the digit sequence, which is the order used for all enumeration
/// output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    digits: Vec<u32>,
}

impl Word {
    /// Builds a word, checking that the digits are positive and distinct.
    pub fn new(digits: Vec<u32>) -> Result<Self, WordError> {
        let mut seen = digits.clone();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(WordError::DuplicateDigit(pair[0]));
            }
        }
        if seen.first() == Some(&0) {
            return Err(WordError::ZeroDigit);
        }
        Ok(Word { digits })
    }

    /// Builds a word the caller has already proven distinct and positive.
    pub(crate) fn from_digits_unchecked(digits: Vec<u32>) -> Self {
        debug_assert!(Word::new(digits.clone()).is_ok());
        Word { digits }
    }

    pub fn empty() -> Self {
        Word { digits: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Largest digit, or `None` for the empty word.
    pub fn max_digit(&self) -> Option<u32> {
        self.digits.iter().copied().max()
    }

    /// The ground set as a sorted vector.
    pub fn ground_set(&self) -> Vec<u32> {
        let mut set = self.digits.clone();
        set.sort_unstable();
        set
    }

    /// True when the ground set is exactly `{1, ..., n}` for `n = len()`.
    pub fn is_on_initial_segment(&self) -> bool {
        self.ground_set()
            .iter()
            .zip(1u32..)
            .all(|(&d, expect)| d == expect)
    }

    /// The reversal `w*`: the digits read right to left.
    pub fn reverse(&self) -> Word {
        let mut digits = self.digits.clone();
        digits.reverse();
        Word { digits }
    }

    /// The consecutive subword `w[i,j]` (1-based, inclusive on both ends).
    pub fn subword(&self, i: usize, j: usize) -> Result<Word, WordError> {
        let n = self.len();
        if i < 1 || i > j || j > n {
            return Err(WordError::RangeOutOfBounds { i, j, n });
        }
        Ok(Word {
            digits: self.digits[i - 1..j].to_vec(),
        })
    }

    /// The unique word on `{1, ..., n}` with the digits in the same
    /// relative order: the digit of rank `k` becomes `k`.
    pub fn flatten(&self) -> Word {
        let sorted = self.ground_set();
        let digits = self
            .digits
            .iter()
            .map(|d| sorted.binary_search(d).expect("digit present") as u32 + 1)
            .collect();
        Word { digits }
    }

    /// True when the two words have the same relative digit order.
    pub fn pattern_equal(&self, other: &Word) -> bool {
        self.flatten() == other.flatten()
    }

    /// 1-based position of digit `d`.
    pub fn position_of(&self, d: u32) -> Result<usize, WordError> {
        self.digits
            .iter()
            .position(|&x| x == d)
            .map(|p| p + 1)
            .ok_or(WordError::DigitNotFound(d))
    }
}

impl fmt::Display for Word {
    /// Compact digit string when every digit is at most 9 (e.g. `254631`),
    /// comma-separated otherwise. A one-digit word above 9 keeps a
    /// trailing comma (`12,`) so that parsing round-trips; without it the
    /// text would re-parse as a compact two-digit word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_empty() && self.digits.iter().all(|&d| d <= 9) {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
        } else {
            let mut first = true;
            for d in &self.digits {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
                first = false;
            }
            if self.digits.len() == 1 {
                write!(f, ",")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts the comma-separated form always, and the compact form
    /// (one character per digit) when every digit is 1-9. A trailing comma
    /// is tolerated so one-digit words above 9 can be written (`12,`).
    /// The empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let digits = if s.contains(',') {
            let mut segments: Vec<&str> = s.split(',').collect();
            if segments.len() > 1 && segments.last().is_some_and(|t| t.trim().is_empty()) {
                segments.pop();
            }
            segments
                .into_iter()
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|_| ParseWordError::InvalidToken(tok.to_string()))
                })
                .collect::<Result<Vec<u32>, _>>()?
        } else {
            s.chars()
                .map(|c| match c {
                    '1'..='9' => Ok(c as u32 - '0' as u32),
                    other => Err(ParseWordError::BadCompactChar(other)),
                })
                .collect::<Result<Vec<u32>, _>>()?
        };
        Ok(Word::new(digits)?)
    }
}

/// Shorthand used throughout the tests.
#[cfg(test)]
pub(crate) fn w(s: &str) -> Word {
    s.parse().expect("test word literal")
}
