//! Property and differential tests: structural invariants of words and
//! trees under random inputs, exhaustive pattern-equivalence checks at
//! small sizes, and equality of the parallel entry points with their
//! sequential fallbacks.

use std::collections::HashSet;

use proptest::prelude::*;

use updown::patterns::{is_primitive, is_word, Variant};
use updown::slope_ideal::TermOrder;
use updown::trees::DecreasingTree;
use updown::words::Word;
use updown::{brute_force_words, enumerate_trees, euler_number, sequential, tree_words};

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::btree_set(1u32..=999, 0..=max_len)
        .prop_map(|set| set.into_iter().collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|digits| Word::new(digits).expect("distinct positive digits"))
}

proptest! {
    #[test]
    fn reverse_is_an_involution(word in arb_word(12)) {
        prop_assert_eq!(word.reverse().reverse(), word);
    }

    #[test]
    fn flatten_is_idempotent_and_lands_on_the_initial_segment(word in arb_word(12)) {
        let flat = word.flatten();
        prop_assert_eq!(flat.flatten(), flat.clone());
        prop_assert!(flat.is_on_initial_segment());
        prop_assert!(word.pattern_equal(&flat));
    }

    #[test]
    fn position_of_finds_every_digit(word in arb_word(12)) {
        for &d in word.digits() {
            let pos = word.position_of(d).unwrap();
            prop_assert_eq!(word.digits()[pos - 1], d);
        }
    }

    #[test]
    fn display_and_parse_round_trip(word in arb_word(12)) {
        let text = word.to_string();
        prop_assert_eq!(text.parse::<Word>().unwrap(), word);
    }

    #[test]
    fn pattern_equivalence_matches_pairwise_comparisons(
        a in arb_word(8),
        b in arb_word(8),
    ) {
        prop_assert_eq!(a.pattern_equal(&b), pairwise_order_equal(&a, &b));
    }

    #[test]
    fn predicates_are_pattern_closed(word in arb_word(10)) {
        prop_assume!(word.len() >= 2);
        let flat = word.flatten();
        for v in Variant::BOTH {
            prop_assert_eq!(is_word(v, &word).unwrap(), is_word(v, &flat).unwrap());
            prop_assert_eq!(is_primitive(v, &word).unwrap(), is_primitive(v, &flat).unwrap());
        }
    }

    #[test]
    fn random_trees_round_trip_through_brackets(
        labels in prop::collection::btree_set(1u32..=200, 1..=12),
        seed in any::<u64>(),
    ) {
        let labels: Vec<u32> = labels.into_iter().collect();
        let tree = random_tree(&labels, seed);
        let text = tree.to_bracket();
        prop_assert_eq!(DecreasingTree::parse_bracket(&text).unwrap(), tree);
    }
}

fn pairwise_order_equal(a: &Word, b: &Word) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (x, y) = (a.digits(), b.digits());
    for i in 0..x.len() {
        for j in 0..x.len() {
            if (x[i] < x[j]) != (y[i] < y[j]) {
                return false;
            }
        }
    }
    true
}

/// Deterministic arbitrary decreasing 012-tree on the given label set.
fn random_tree(labels: &[u32], seed: u64) -> DecreasingTree {
    fn build(sorted: &[u32], state: &mut u64) -> DecreasingTree {
        let mut next = || {
            *state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            *state >> 33
        };
        let (&root, rest) = sorted.split_last().expect("nonempty");
        if rest.is_empty() {
            return DecreasingTree::leaf(root).unwrap();
        }
        let children = if rest.len() == 1 || next() % 2 == 0 {
            vec![build(rest, state)]
        } else {
            // put the smallest label in the second block, then deal the
            // others randomly, keeping the first block nonempty
            let mut first = vec![rest[rest.len() - 1]];
            let mut second = vec![rest[0]];
            for &label in &rest[1..rest.len() - 1] {
                if next() % 2 == 0 {
                    first.push(label);
                } else {
                    second.push(label);
                }
            }
            first.sort_unstable();
            second.sort_unstable();
            vec![build(&first, state), build(&second, state)]
        };
        DecreasingTree::new(root, children).expect("blocks are disjoint and below the root")
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let mut state = seed | 1;
    build(&sorted, &mut state)
}

#[test]
fn pattern_equivalence_is_exhaustively_correct_up_to_n5() {
    for n in 1u32..=5 {
        let perms = all_permutations(n);
        for a in &perms {
            for b in &perms {
                assert_eq!(a.pattern_equal(b), pairwise_order_equal(a, b), "{a} vs {b}");
            }
        }
    }
}

fn all_permutations(n: u32) -> Vec<Word> {
    fn extend(remaining: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
        if remaining.is_empty() {
            out.push(Word::new(prefix.clone()).unwrap());
            return;
        }
        for idx in 0..remaining.len() {
            let d = remaining.remove(idx);
            prefix.push(d);
            extend(remaining, prefix, out);
            prefix.pop();
            remaining.insert(idx, d);
        }
    }
    let mut out = Vec::new();
    extend(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

#[test]
fn tree_counts_match_updown_numbers_up_to_n10() {
    for n in 0u32..=10 {
        let labels: Vec<u32> = (1..=n).collect();
        let count = enumerate_trees(&labels).unwrap().len();
        assert_eq!(count as u128, euler_number(n), "n = {n}");
    }
}

#[test]
fn enumerated_trees_are_valid_and_serialize_injectively() {
    for n in 0u32..=8 {
        let labels: Vec<u32> = (1..=n).collect();
        let trees = enumerate_trees(&labels).unwrap();
        let mut seen = HashSet::new();
        for tree in &trees {
            assert!(revalidate(tree), "invalid tree {tree}");
            assert!(
                seen.insert(tree.to_bracket()),
                "duplicate serialization {tree}"
            );
            assert_eq!(
                DecreasingTree::parse_bracket(&tree.to_bracket()).unwrap(),
                tree.clone()
            );
        }
    }
}

/// Rebuilds a tree bottom-up through the validating constructor.
fn revalidate(tree: &DecreasingTree) -> bool {
    let Some(root) = tree.root_label() else {
        return tree.vertex_count() == 0;
    };
    let children = tree.children();
    if !children.iter().all(revalidate) {
        return false;
    }
    DecreasingTree::new(root, children).is_ok()
}

#[test]
fn pruned_scan_equals_the_unpruned_filter() {
    // brute_force_words pins the first digit to n and the last to n-1;
    // an unpruned filter over the whole symmetric group must agree
    for v in Variant::BOTH {
        for n in 2u32..=7 {
            let unpruned: Vec<Word> = all_permutations(n)
                .into_iter()
                .filter(|w| is_primitive(v, w).unwrap())
                .collect();
            assert_eq!(brute_force_words(v, n).unwrap(), unpruned, "{v}, n = {n}");
        }
    }
}

#[test]
fn predicate_verdicts_survive_relabeling_exhaustively() {
    // every permutation of [n], n <= 6, relabeled onto spread-out ground
    // sets: is_word and is_primitive verdicts never change
    for n in 2u32..=6 {
        for word in all_permutations(n) {
            for gap in [2u32, 7, 31] {
                let relabeled =
                    Word::new(word.digits().iter().map(|&d| 1 + (d - 1) * gap).collect()).unwrap();
                for v in Variant::BOTH {
                    assert_eq!(
                        is_word(v, &word).unwrap(),
                        is_word(v, &relabeled).unwrap(),
                        "{v}-word verdict for {word} vs {relabeled}"
                    );
                    assert_eq!(
                        is_primitive(v, &word).unwrap(),
                        is_primitive(v, &relabeled).unwrap(),
                        "{v} primitivity verdict for {word} vs {relabeled}"
                    );
                }
            }
        }
    }
}

#[test]
fn split_closure_holds_at_n10() {
    for v in Variant::BOTH {
        for word in brute_force_words(v, 10).unwrap() {
            let (left, right) = updown::split(v, &word).unwrap();
            assert!(is_primitive(v, &left).unwrap(), "left of {word}");
            assert!(is_primitive(v, &right).unwrap(), "right of {word}");
        }
    }
}

#[test]
fn generator_monomials_stay_inside_the_ground_set() {
    for order in [TermOrder::Grlex, TermOrder::Revlex] {
        for m in updown::generators(7, order) {
            for factor in m.factors() {
                let (i, j) = factor.indices();
                assert!(1 <= i && i < j && j <= 7, "factor {factor} out of range");
            }
        }
    }
}

#[test]
fn tree_route_equals_brute_force_up_to_n9() {
    for v in Variant::BOTH {
        for n in 2u32..=9 {
            assert_eq!(
                tree_words(v, n).unwrap(),
                brute_force_words(v, n).unwrap(),
                "variant {v}, n = {n}"
            );
        }
    }
}

#[test]
fn parallel_and_sequential_routes_agree() {
    for v in Variant::BOTH {
        for n in 2u32..=8 {
            assert_eq!(
                brute_force_words(v, n).unwrap(),
                sequential::brute_force_words(v, n).unwrap()
            );
            assert_eq!(
                tree_words(v, n).unwrap(),
                sequential::tree_words(v, n).unwrap()
            );
        }
    }
    for n in 0u32..=8 {
        let labels: Vec<u32> = (1..=n).collect();
        assert_eq!(
            enumerate_trees(&labels).unwrap(),
            sequential::enumerate_trees(&labels).unwrap()
        );
    }
    for order in [TermOrder::Grlex, TermOrder::Revlex] {
        for n in 1u32..=7 {
            assert_eq!(
                updown::generators(n, order),
                sequential::generators(n, order)
            );
        }
    }
}

#[test]
fn bijections_survive_deep_recursion() {
    // a 200-vertex chain maximizes tree height and recursion depth
    let mut chain = DecreasingTree::leaf(1).unwrap();
    for label in 2..=200 {
        chain = DecreasingTree::new(label, vec![chain]).unwrap();
    }
    for v in Variant::BOTH {
        let word = updown::psi(v, &chain);
        assert_eq!(word.len(), 200);
        assert!(updown::is_trimmed_member(v, &word));
        assert_eq!(updown::phi(v, &word).unwrap(), chain);
    }
    let text = chain.to_bracket();
    assert_eq!(DecreasingTree::parse_bracket(&text).unwrap(), chain);
}

#[test]
fn repeated_calls_are_deterministic() {
    for _ in 0..3 {
        assert_eq!(
            brute_force_words(Variant::G, 8).unwrap(),
            brute_force_words(Variant::G, 8).unwrap()
        );
        assert_eq!(
            enumerate_trees(&[1, 2, 3, 4, 5, 6, 7]).unwrap(),
            enumerate_trees(&[1, 2, 3, 4, 5, 6, 7]).unwrap()
        );
    }
}
