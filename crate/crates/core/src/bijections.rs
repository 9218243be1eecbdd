//! The bijections between trimmed primitive words and decreasing
//! 012-trees, one pair of mutually inverse maps per variant, together
//! with the wrap/strip moves between trimmed words and full primitive
//! words.
//!
//! A trimmed word is the interior of a primitive word: with
//! `m = max(digits)`, wrapping as `(m+2, w, m+1)` restores the two
//! forced outer digits. The maps here send trimmed members on a digit
//! set `P` to decreasing 012-trees on `P` and back.

use thiserror::Error;

use crate::patterns::{self, Variant};
use crate::trees::{DecreasingTree, Node};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("word is not a trimmed {variant}-member (its wrap is not a primitive {variant}-word)")]
    NotTrimmedMember { variant: Variant },
    #[error("strip needs a word of length >= 2 whose first digit is the maximum and last digit the second maximum")]
    NotWrapped,
}

/// Wraps a word in its two forced outer digits: `(m+2, w, m+1)` with
/// `m = max(digits)`. The empty word wraps to `21`.
pub fn wrap(w: &Word) -> Word {
    let m = w.max_digit().unwrap_or(0);
    let mut digits = Vec::with_capacity(w.len() + 2);
    digits.push(m.checked_add(2).expect("digit overflow in wrap"));
    digits.extend(w.digits());
    digits.push(m + 1);
    Word::from_digits_unchecked(digits)
}

/// Removes the outer digits of a wrapped word; inverse of [`wrap`] on
/// its image. The input must have length >= 2 with the maximum digit
/// first and the second maximum last.
pub fn strip(w: &Word) -> Result<Word, BijectionError> {
    let n = w.len();
    if n < 2 {
        return Err(BijectionError::NotWrapped);
    }
    let d = w.digits();
    let mut sorted = w.ground_set();
    let max1 = sorted.pop().expect("nonempty");
    let max2 = sorted.pop().expect("len >= 2");
    if d[0] != max1 || d[n - 1] != max2 {
        return Err(BijectionError::NotWrapped);
    }
    Ok(Word::from_digits_unchecked(d[1..n - 1].to_vec()))
}

/// Maps a trimmed member to its decreasing 012-tree. The recursion
/// branches on the position `k` of the maximum digit `m`: a boundary
/// position peels one subtree, an interior position splits the word
/// into two subtrees (the left part reversed).
pub fn phi(v: Variant, w: &Word) -> Result<DecreasingTree, BijectionError> {
    if !patterns::is_trimmed_member(v, w) {
        return Err(BijectionError::NotTrimmedMember { variant: v });
    }
    if w.is_empty() {
        return Ok(DecreasingTree::empty());
    }
    Ok(DecreasingTree::from_node(phi_node(v, w.digits())))
}

fn phi_node(v: Variant, w: &[u32]) -> Node {
    let n = w.len();
    debug_assert!(n > 0);
    let m = *w.iter().max().expect("nonempty");
    if n == 1 {
        return Node::leaf(m);
    }
    let k = w.iter().position(|&d| d == m).expect("max present");
    let reversed_prefix = |upto: usize| -> Vec<u32> { w[..upto].iter().rev().copied().collect() };
    let children = match v {
        // k = n-1 cannot happen for a trimmed G-member: the wrap forces
        // the first digit above the last
        Variant::G if k == 0 => vec![phi_node(v, &w[1..])],
        // symmetrically k = 0 cannot happen for a trimmed R-member
        Variant::R if k == n - 1 => vec![phi_node(v, &reversed_prefix(n - 1))],
        _ => {
            debug_assert!(k >= 1 && k <= n - 2, "interior maximum for {v}-member");
            vec![phi_node(v, &reversed_prefix(k)), phi_node(v, &w[k + 1..])]
        }
    };
    Node::from_parts_unchecked(m, children)
}

/// Maps a decreasing 012-tree to a trimmed member; inverse of [`phi`].
/// Total: every tree has a well-defined image.
pub fn psi(v: Variant, t: &DecreasingTree) -> Word {
    match t.node() {
        None => Word::empty(),
        Some(node) => Word::from_digits_unchecked(psi_digits(v, node)),
    }
}

fn psi_digits(v: Variant, node: &Node) -> Vec<u32> {
    match node.children.as_slice() {
        [] => vec![node.label],
        [only] => {
            let inner = psi_digits(v, only);
            match v {
                // (m, psi(T'))
                Variant::G => {
                    let mut out = vec![node.label];
                    out.extend(inner);
                    out
                }
                // (psi(T')*, m)
                Variant::R => {
                    let mut out: Vec<u32> = inner.into_iter().rev().collect();
                    out.push(node.label);
                    out
                }
            }
        }
        [a, b] => {
            let (first, second) = match v {
                // the subtree holding the smallest label goes second
                Variant::G => {
                    if a.min_label() < b.min_label() {
                        (b, a)
                    } else {
                        (a, b)
                    }
                }
                // the child word with the smaller last digit goes first
                Variant::R => (a, b),
            };
            let mut left = psi_digits(v, first);
            let mut right = psi_digits(v, second);
            if v == Variant::R {
                // the two last digits are distinct, so this never ties
                let l = *left.last().expect("child words are nonempty");
                let r = *right.last().expect("child words are nonempty");
                if l > r {
                    std::mem::swap(&mut left, &mut right);
                }
            }
            let mut out: Vec<u32> = left.into_iter().rev().collect();
            out.push(node.label);
            out.extend(right);
            out
        }
        more => unreachable!("decreasing 012-tree with {} children", more.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn t(s: &str) -> DecreasingTree {
        DecreasingTree::parse_bracket(s).expect("test tree literal")
    }

    #[test]
    fn wrap_examples() {
        assert_eq!(wrap(&w("254631")), w("82546317"));
        assert_eq!(wrap(&w("316254")), w("83162547"));
        assert_eq!(wrap(&Word::empty()), w("21"));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(strip(&w("82546317")).unwrap(), w("254631"));
        assert_eq!(strip(&w("21")).unwrap(), Word::empty());
        assert_eq!(strip(&w("4213")).unwrap(), w("21"));
        assert_eq!(strip(&wrap(&w("21"))).unwrap(), w("21"));
        assert!(matches!(strip(&w("7")), Err(BijectionError::NotWrapped)));
        assert!(matches!(strip(&w("123")), Err(BijectionError::NotWrapped)));
    }

    #[test]
    fn phi_worked_examples() {
        assert_eq!(
            phi(Variant::G, &w("254631")).unwrap(),
            t("[6,[5,[4],[2]],[3,[1]]]")
        );
        assert_eq!(
            phi(Variant::R, &w("316254")).unwrap(),
            t("[6,[5,[4],[2]],[3,[1]]]")
        );
        assert_eq!(phi(Variant::G, &w("7")).unwrap(), t("[7]"));
        assert_eq!(
            phi(Variant::G, &Word::empty()).unwrap(),
            DecreasingTree::empty()
        );
    }

    #[test]
    fn phi_rejects_non_members() {
        assert!(matches!(
            phi(Variant::R, &w("254631")),
            Err(BijectionError::NotTrimmedMember {
                variant: Variant::R
            })
        ));
        assert!(matches!(
            phi(Variant::G, &w("12")),
            Err(BijectionError::NotTrimmedMember {
                variant: Variant::G
            })
        ));
    }

    #[test]
    fn psi_worked_examples() {
        let tree = t("[6,[5,[4],[2]],[3,[1]]]");
        assert_eq!(psi(Variant::G, &tree), w("254631"));
        assert_eq!(psi(Variant::R, &tree), w("316254"));
        assert_eq!(psi(Variant::G, &DecreasingTree::empty()), Word::empty());
        assert_eq!(psi(Variant::R, &t("[9]")), w("9"));
    }

    #[test]
    fn psi_one_step_example() {
        let word = psi(Variant::G, &t("[2,[1]]"));
        assert_eq!(word, w("21"));
        let full = wrap(&word);
        assert_eq!(full, w("4213"));
        assert!(patterns::is_primitive(Variant::G, &full).unwrap());
    }
}
