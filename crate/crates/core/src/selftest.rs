//! Self-check suites covering the crate's cross-cutting guarantees:
//! golden enumeration sets, equinumeracy of words and trees, bijection
//! round trips, the updown-number oracle, ideal generator counts, the
//! closure properties of split/extend/merge, the penultimate-digit law,
//! and pattern closure under relabeling.
//!
//! The suites are used both by the `acceptance` integration test target
//! and by the CLI `selftest` subcommand. Every check compares at least
//! two independent routes (exhaustive scan vs. bijection image, closed
//! formula vs. enumeration, recurrence vs. exhaustive count).

use crate::bijections::{phi, psi, strip, wrap};
use crate::enumeration::{alternating_count_oracle, brute_force_words, euler_number};
use crate::patterns::{
    extend_type_one, is_primitive, is_word, merge_type_two, split, MergeError, Variant,
};
use crate::slope_ideal::{degree_count_table, generators, TermOrder};
use crate::trees::enumerate_trees;
use crate::words::Word;

/// Result of one suite.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteOutcome {
    fn from_check(suite: &'static str, result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => SuiteOutcome {
                suite,
                passed: true,
                detail,
            },
            Err(detail) => SuiteOutcome {
                suite,
                passed: false,
                detail,
            },
        }
    }
}

/// Runs every suite, with per-suite ranges clamped to `max_n`.
pub fn run_all(max_n: u32) -> Vec<SuiteOutcome> {
    vec![
        SuiteOutcome::from_check("golden_sets", golden_sets(max_n)),
        SuiteOutcome::from_check("equinumeracy", equinumeracy(max_n)),
        SuiteOutcome::from_check("round_trips", round_trips(max_n)),
        SuiteOutcome::from_check("euler_oracle", euler_oracle(max_n)),
        SuiteOutcome::from_check("ideal_counts", ideal_counts(max_n)),
        SuiteOutcome::from_check("lemma_properties", lemma_properties(max_n)),
        SuiteOutcome::from_check("penultimate_digit", penultimate_digit(max_n)),
        SuiteOutcome::from_check("pattern_closure", pattern_closure(max_n)),
    ]
}

const GOLDEN_G: [(u32, &[&str]); 5] = [
    (2, &["21"]),
    (3, &["312"]),
    (4, &["4213"]),
    (5, &["52314", "53214"]),
    (6, &["623415", "624315", "642315", "634215", "643215"]),
];

const GOLDEN_R: [(u32, &[&str]); 5] = [
    (2, &["21"]),
    (3, &["312"]),
    (4, &["4123"]),
    (5, &["51324", "52134"]),
    (6, &["614235", "624135", "623145", "621435", "631245"]),
];

fn parse_words(texts: &[&str]) -> Vec<Word> {
    let mut words: Vec<Word> = texts
        .iter()
        .map(|t| t.parse().expect("golden word"))
        .collect();
    words.sort_unstable();
    words
}

/// Exhaustive search reproduces the known word sets for n = 2..6 exactly.
pub fn golden_sets(max_n: u32) -> Result<String, String> {
    let mut checked = 0;
    for (variant, table) in [(Variant::G, &GOLDEN_G), (Variant::R, &GOLDEN_R)] {
        for &(n, expected) in table.iter() {
            if n > max_n {
                continue;
            }
            let got = brute_force_words(variant, n).expect("n >= 2");
            let want = parse_words(expected);
            if got != want {
                return Err(format!(
                    "{variant}-words on [{n}]: expected {}, got {}",
                    render(&want),
                    render(&got)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} golden sets reproduced exactly"))
}

/// Expected counts for n = 2..10: both word families and the trees on
/// n-2 labels all agree.
const EXPECTED_COUNTS: [u64; 9] = [1, 1, 1, 2, 5, 16, 61, 272, 1385];

pub fn equinumeracy(max_n: u32) -> Result<String, String> {
    let hi = max_n.min(10);
    for n in 2..=hi {
        let g = brute_force_words(Variant::G, n).expect("n >= 2").len() as u64;
        let r = brute_force_words(Variant::R, n).expect("n >= 2").len() as u64;
        let e = euler_number(n - 2);
        let frozen = EXPECTED_COUNTS[(n - 2) as usize] as u128;
        if !(g as u128 == e && r as u128 == e && e == frozen) {
            return Err(format!(
                "n = {n}: |G| = {g}, |R| = {r}, updown = {e}, expected {frozen}"
            ));
        }
    }
    Ok(format!("counts agree for n = 2..{hi}"))
}

/// phi and psi are mutually inverse on every tree and every trimmed
/// member with at most `min(max_n, 9)` labels.
pub fn round_trips(max_n: u32) -> Result<String, String> {
    let cap = max_n.min(9);
    let mut trees_checked = 0usize;
    let mut words_checked = 0usize;
    for k in 0..=cap {
        let labels: Vec<u32> = (1..=k).collect();
        let trees = enumerate_trees(&labels).expect("valid label set");
        for v in Variant::BOTH {
            for tree in &trees {
                let word = psi(v, tree);
                let back = phi(v, &word)
                    .map_err(|e| format!("psi({v}, {tree}) = {word} is not a member: {e}"))?;
                if back != *tree {
                    return Err(format!("phi(psi({tree})) = {back} under {v}"));
                }
                trees_checked += 1;
            }
            for full in brute_force_words(v, k + 2).expect("k + 2 >= 2") {
                let trimmed = strip(&full).expect("primitive words are wrapped");
                let tree =
                    phi(v, &trimmed).map_err(|e| format!("strip({full}) not a {v}-member: {e}"))?;
                let back = psi(v, &tree);
                if back != trimmed {
                    return Err(format!("psi(phi({trimmed})) = {back} under {v}"));
                }
                if wrap(&back) != full {
                    return Err(format!("wrap(strip({full})) changed the word"));
                }
                words_checked += 1;
            }
        }
    }
    Ok(format!(
        "{trees_checked} tree round trips and {words_checked} word round trips"
    ))
}

/// The boustrophedon recurrence agrees with the exhaustive count of
/// updown permutations.
pub fn euler_oracle(max_n: u32) -> Result<String, String> {
    let hi = max_n.min(10);
    for n in 1..=hi {
        let fast = euler_number(n);
        let slow = alternating_count_oracle(n).expect("n <= 11");
        if fast != slow {
            return Err(format!(
                "n = {n}: recurrence gives {fast}, exhaustive count gives {slow}"
            ));
        }
    }
    if hi >= 7 && euler_number(7) != 272 {
        return Err("updown number at n = 7 is not 272".to_string());
    }
    Ok(format!(
        "recurrence matches the exhaustive count for n = 1..{hi}"
    ))
}

/// The generator listing matches the closed degree counts, for both
/// term orders.
pub fn ideal_counts(max_n: u32) -> Result<String, String> {
    if max_n >= 6 {
        let table = degree_count_table(6, TermOrder::Grlex);
        let expected = [(3u32, 15u128), (4, 12), (5, 5)];
        for (d, want) in expected {
            if table.count_at_degree(d) != want {
                return Err(format!(
                    "degree table for n = 6: degree {d} is {}, expected {want}",
                    table.count_at_degree(d)
                ));
            }
        }
        let total = generators(6, TermOrder::Grlex).len();
        if total != 32 {
            return Err(format!("n = 6 grlex generators: {total}, expected 32"));
        }
    }
    let hi = max_n.min(8);
    for n in 4..=hi {
        let table_g = degree_count_table(n, TermOrder::Grlex);
        let table_r = degree_count_table(n, TermOrder::Revlex);
        if table_g.entries() != table_r.entries() {
            return Err(format!("grlex and revlex tables differ at n = {n}"));
        }
        for order in [TermOrder::Grlex, TermOrder::Revlex] {
            let listing = generators(n, order);
            for (&d, &want) in table_g.entries() {
                let got = listing.iter().filter(|m| m.degree() == d as usize).count();
                if got as u128 != want {
                    return Err(format!(
                        "n = {n} {order}: {got} generators of degree {d}, formula gives {want}"
                    ));
                }
            }
            let total: u128 = table_g.entries().values().sum();
            if listing.len() as u128 != total {
                return Err(format!(
                    "n = {n} {order}: listing has {} monomials, formula total is {total}",
                    listing.len()
                ));
            }
        }
    }
    Ok(format!("listings match the closed counts for n = 4..{hi}"))
}

/// Split, extend, and merge all send primitive words to primitive words,
/// and merge undoes split whenever both parts are long enough.
pub fn lemma_properties(max_n: u32) -> Result<String, String> {
    let cap = max_n.min(9);
    let mut checks = 0usize;
    for v in Variant::BOTH {
        // split closure and the merge/split identity
        for n in 3..=cap {
            for word in brute_force_words(v, n).expect("n >= 3") {
                let (left, right) = split(v, &word).map_err(|e| format!("split({word}): {e}"))?;
                for part in [&left, &right] {
                    if !is_primitive(v, part).expect("split parts have length >= 2") {
                        return Err(format!("split({word}) part {part} is not primitive ({v})"));
                    }
                }
                let k = word.position_of(n - 2).expect("digit present");
                if k >= 3 && k <= n as usize - 2 {
                    let (x, y) = match v {
                        Variant::G => (&left, &right),
                        Variant::R => (&right, &left),
                    };
                    match merge_type_two(v, x, y) {
                        Ok(merged) if merged == word => {}
                        Ok(merged) => {
                            return Err(format!("merge(split({word})) = {merged} under {v}"))
                        }
                        Err(e) => {
                            return Err(format!("merge(split({word})) failed under {v}: {e}"))
                        }
                    }
                }
                checks += 1;
            }
        }
        // extend closure: inputs up to the cap, outputs one digit longer
        for m in 2..=cap {
            for x in brute_force_words(v, m).expect("m >= 2") {
                let grown = extend_type_one(v, &x).map_err(|e| format!("extend({x}): {e}"))?;
                if !is_primitive(v, &grown).expect("len >= 3") {
                    return Err(format!("extend({x}) = {grown} is not primitive ({v})"));
                }
                checks += 1;
            }
        }
        // merge closure over every pair meeting the preconditions
        for n in 5..=cap {
            for (x, y) in merge_candidates(v, n) {
                match merge_type_two(v, &x, &y) {
                    Ok(merged) => {
                        if !is_primitive(v, &merged).expect("len >= 5") {
                            return Err(format!(
                                "merge({x}, {y}) = {merged} is not primitive ({v})"
                            ));
                        }
                        checks += 1;
                    }
                    Err(MergeError::Ordering { .. }) => {
                        // the pair in the other order satisfies the
                        // comparison instead; nothing to check here
                    }
                    Err(e) => return Err(format!("merge({x}, {y}) rejected unexpectedly: {e}")),
                }
            }
        }
    }
    Ok(format!("{checks} lemma checks up to n = {cap}"))
}

/// All ordered pairs of primitive words on ground sets that satisfy the
/// set-shaped merge preconditions for `{1, ..., n}`: both parts contain
/// `n-2` as their final digit, and together they cover `[n]`.
fn merge_candidates(v: Variant, n: u32) -> Vec<(Word, Word)> {
    let shared = n - 2;
    let free: Vec<u32> = (1..=n).filter(|&d| d != shared).collect();
    let mut pairs = Vec::new();
    for mask in 0u64..(1 << free.len()) {
        let mut p = vec![shared];
        let mut q = vec![shared];
        for (bit, &d) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                p.push(d);
            } else {
                q.push(d);
            }
        }
        if p.len() < 3 || q.len() < 3 {
            continue;
        }
        p.sort_unstable();
        q.sort_unstable();
        // the final digit of a primitive word is the second-largest of
        // its ground set, so it equals n-2 only for these shapes
        if p[p.len() - 2] != shared || q[q.len() - 2] != shared {
            continue;
        }
        let words_p = primitive_words_on(v, &p);
        let words_q = primitive_words_on(v, &q);
        for x in &words_p {
            for y in &words_q {
                pairs.push((x.clone(), y.clone()));
            }
        }
    }
    pairs
}

/// Primitive words on an arbitrary ground set, by relabeling the words
/// on the initial segment of the same size.
fn primitive_words_on(v: Variant, set: &[u32]) -> Vec<Word> {
    brute_force_words(v, set.len() as u32)
        .expect("sets of size >= 3")
        .into_iter()
        .map(|word| {
            Word::new(word.digits().iter().map(|&d| set[d as usize - 1]).collect())
                .expect("relabeling keeps digits distinct")
        })
        .collect()
}

/// Every primitive G-word on 3 or more digits ends with `(..., 1, n-1)`.
/// The two-digit word `21` is the lone exception, so the check starts at
/// n = 3.
pub fn penultimate_digit(max_n: u32) -> Result<String, String> {
    let hi = max_n.min(10);
    for n in 3..=hi {
        for word in brute_force_words(Variant::G, n).expect("n >= 2") {
            let penultimate = word.digits()[n as usize - 2];
            if penultimate != 1 {
                return Err(format!("{word} has penultimate digit {penultimate}"));
            }
        }
    }
    Ok(format!("penultimate digit is 1 for n = 3..{hi}"))
}

/// Relabeling the digits order-preservingly never changes a predicate
/// verdict: 100 random relabelings per word.
pub fn pattern_closure(max_n: u32) -> Result<String, String> {
    let hi = max_n.min(6);
    let mut rng = SplitMix64::new(0x0123_4567_89ab_cdef);
    let mut checked = 0usize;
    for v in Variant::BOTH {
        for n in 2..=hi {
            for word in brute_force_words(v, n).expect("n >= 2") {
                for _ in 0..100 {
                    let relabeled = random_relabeling(&mut rng, &word);
                    if !word.pattern_equal(&relabeled) {
                        return Err(format!("relabeling of {word} is not order-preserving"));
                    }
                    if !is_word(v, &relabeled).expect("len >= 2") {
                        return Err(format!(
                            "{relabeled} (from {word}) lost the {v}-word property"
                        ));
                    }
                    if !is_primitive(v, &relabeled).expect("len >= 2") {
                        return Err(format!("{relabeled} (from {word}) lost primitivity ({v})"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} relabelings up to n = {hi}"))
}

fn random_relabeling(rng: &mut SplitMix64, word: &Word) -> Word {
    let n = word.len() as u32;
    // n distinct values from 1..=5n, kept in ascending order
    let mut values: Vec<u32> = Vec::with_capacity(n as usize);
    while values.len() < n as usize {
        let candidate = rng.next_range(5 * n) + 1;
        if !values.contains(&candidate) {
            values.push(candidate);
        }
    }
    values.sort_unstable();
    Word::new(
        word.digits()
            .iter()
            .map(|&d| values[d as usize - 1])
            .collect(),
    )
    .expect("distinct values stay distinct")
}

fn render(words: &[Word]) -> String {
    let texts: Vec<String> = words.iter().map(Word::to_string).collect();
    format!("{{{}}}", texts.join(", "))
}

/// Small deterministic generator so the relabeling suite is reproducible.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..bound`.
    pub(crate) fn next_range(&mut self, bound: u32) -> u32 {
        (self.next_u64() % bound as u64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_scale() {
        for outcome in run_all(6) {
            assert!(outcome.passed, "{}: {}", outcome.suite, outcome.detail);
        }
    }

    #[test]
    fn suites_are_vacuous_below_their_ranges() {
        for outcome in run_all(2) {
            assert!(outcome.passed, "{}: {}", outcome.suite, outcome.detail);
        }
    }
}
