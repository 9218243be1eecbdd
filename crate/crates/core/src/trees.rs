//! Decreasing 012-trees: rooted trees with distinct positive-integer
//! labels, at most two children per vertex, and every descendant smaller
//! than its ancestor. Children are unordered; serialization uses a
//! canonical order (children by decreasing root label) so equal trees
//! print identically.
//!
//! Bracket notation is the recursive form `[label,child,child]` with
//! decimal labels, e.g. `[6,[5,[4],[2]],[3,[1]]]`. The empty tree (the
//! single tree on the empty label set) is written `[]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("label 0 is not allowed; labels are positive integers")]
    ZeroLabel,
    #[error("a vertex may have at most 2 children, got {0}")]
    TooManyChildren(usize),
    #[error("the empty tree cannot be used as a child")]
    EmptyChild,
    #[error("child root {child} must be smaller than its parent {parent}")]
    ChildNotSmaller { child: u32, parent: u32 },
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeParseError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("trailing input at byte {pos}")]
    TrailingInput { pos: usize },
    #[error(transparent)]
    Invalid(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    pub(crate) label: u32,
    /// At most two entries, kept sorted by decreasing label.
    pub(crate) children: Vec<Node>,
}

impl Node {
    pub(crate) fn leaf(label: u32) -> Node {
        Node {
            label,
            children: Vec::new(),
        }
    }

    /// Assembles a node from children already known to be valid disjoint
    /// decreasing trees with roots below `label`.
    pub(crate) fn from_parts_unchecked(label: u32, mut children: Vec<Node>) -> Node {
        debug_assert!(children.len() <= 2);
        debug_assert!(children.iter().all(|c| c.label < label));
        children.sort_by_key(|c| std::cmp::Reverse(c.label));
        Node { label, children }
    }

    pub(crate) fn min_label(&self) -> u32 {
        self.children
            .iter()
            .map(Node::min_label)
            .min()
            .unwrap_or(self.label)
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for c in &self.children {
            c.collect_labels(out);
        }
    }

    fn write_bracket(&self, out: &mut String) {
        out.push('[');
        out.push_str(&self.label.to_string());
        for c in &self.children {
            out.push(',');
            c.write_bracket(out);
        }
        out.push(']');
    }
}

/// A decreasing 012-tree, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecreasingTree {
    node: Option<Node>,
}

impl DecreasingTree {
    /// The unique tree on the empty label set.
    pub fn empty() -> Self {
        DecreasingTree { node: None }
    }

    /// A single vertex.
    pub fn leaf(label: u32) -> Result<Self, TreeError> {
        if label == 0 {
            return Err(TreeError::ZeroLabel);
        }
        Ok(DecreasingTree {
            node: Some(Node::leaf(label)),
        })
    }

    /// Builds a tree from a root label and up to two child subtrees,
    /// validating the decreasing-label and distinctness conditions.
    pub fn new(label: u32, children: Vec<DecreasingTree>) -> Result<Self, TreeError> {
        if label == 0 {
            return Err(TreeError::ZeroLabel);
        }
        if children.len() > 2 {
            return Err(TreeError::TooManyChildren(children.len()));
        }
        let mut nodes = Vec::with_capacity(children.len());
        for child in children {
            nodes.push(child.node.ok_or(TreeError::EmptyChild)?);
        }
        let mut labels = vec![label];
        for node in &nodes {
            // the root of a decreasing tree is its maximum label
            if node.label >= label {
                return Err(TreeError::ChildNotSmaller {
                    child: node.label,
                    parent: label,
                });
            }
            node.collect_labels(&mut labels);
        }
        labels.sort_unstable();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(TreeError::DuplicateLabel(pair[0]));
            }
        }
        Ok(DecreasingTree {
            node: Some(Node::from_parts_unchecked(label, nodes)),
        })
    }

    pub(crate) fn from_node(node: Node) -> Self {
        DecreasingTree { node: Some(node) }
    }

    pub(crate) fn node(&self) -> Option<&Node> {
        self.node.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.node.is_none()
    }

    pub fn root_label(&self) -> Option<u32> {
        self.node.as_ref().map(|n| n.label)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        fn count(node: &Node) -> usize {
            1 + node.children.iter().map(count).sum::<usize>()
        }
        self.node.as_ref().map_or(0, count)
    }

    /// All labels, sorted ascending.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        if let Some(node) = &self.node {
            node.collect_labels(&mut out);
        }
        out.sort_unstable();
        out
    }

    /// The child subtrees of the root, in canonical order.
    pub fn children(&self) -> Vec<DecreasingTree> {
        self.node.as_ref().map_or_else(Vec::new, |n| {
            n.children
                .iter()
                .map(|c| DecreasingTree::from_node(c.clone()))
                .collect()
        })
    }

    /// Canonical bracket serialization.
    pub fn to_bracket(&self) -> String {
        match &self.node {
            None => "[]".to_string(),
            Some(node) => {
                let mut out = String::new();
                node.write_bracket(&mut out);
                out
            }
        }
    }

    /// Parses bracket notation; ASCII whitespace between tokens is
    /// tolerated, and children may appear in any order.
    pub fn parse_bracket(s: &str) -> Result<Self, TreeParseError> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        skip_ws(bytes, &mut pos);
        let tree = parse_tree(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(TreeParseError::TrailingInput { pos });
        }
        Ok(tree)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<DecreasingTree, TreeParseError> {
    if bytes.get(*pos) != Some(&b'[') {
        return Err(TreeParseError::Syntax {
            pos: *pos,
            expected: "'['",
        });
    }
    *pos += 1;
    skip_ws(bytes, pos);
    if bytes.get(*pos) == Some(&b']') {
        *pos += 1;
        return Ok(DecreasingTree::empty());
    }
    let label = parse_label(bytes, pos)?;
    let mut children = Vec::new();
    loop {
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(&b']') => {
                *pos += 1;
                return Ok(DecreasingTree::new(label, children)?);
            }
            Some(&b',') => {
                *pos += 1;
                skip_ws(bytes, pos);
                children.push(parse_tree(bytes, pos)?);
            }
            _ => {
                return Err(TreeParseError::Syntax {
                    pos: *pos,
                    expected: "',' or ']'",
                })
            }
        }
    }
}

fn parse_label(bytes: &[u8], pos: &mut usize) -> Result<u32, TreeParseError> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return Err(TreeParseError::Syntax {
            pos: start,
            expected: "a decimal label",
        });
    }
    std::str::from_utf8(&bytes[start..*pos])
        .expect("ascii digits")
        .parse()
        .map_err(|_| TreeParseError::Syntax {
            pos: start,
            expected: "a label below 2^32",
        })
}

impl fmt::Display for DecreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bracket())
    }
}

impl FromStr for DecreasingTree {
    type Err = TreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DecreasingTree::parse_bracket(s)
    }
}

fn checked_sorted_labels(labels: &[u32]) -> Result<Vec<u32>, TreeError> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted.first() == Some(&0) {
        return Err(TreeError::ZeroLabel);
    }
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(TreeError::DuplicateLabel(pair[0]));
        }
    }
    Ok(sorted)
}

fn into_sorted_trees(nodes: Vec<Node>) -> Vec<DecreasingTree> {
    let mut trees: Vec<DecreasingTree> = nodes.into_iter().map(DecreasingTree::from_node).collect();
    trees.sort_by_cached_key(DecreasingTree::to_bracket);
    trees
}

/// All decreasing 012-trees on the given label set, exactly once, sorted
/// by their canonical serialization. The empty set yields the empty tree.
pub fn enumerate_trees(labels: &[u32]) -> Result<Vec<DecreasingTree>, TreeError> {
    let sorted = checked_sorted_labels(labels)?;
    if sorted.is_empty() {
        return Ok(vec![DecreasingTree::empty()]);
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if sorted.len() >= 10 {
            let mut trees: Vec<DecreasingTree> = generate_par(&sorted)
                .into_par_iter()
                .map(DecreasingTree::from_node)
                .collect();
            trees.par_sort_by_cached_key(DecreasingTree::to_bracket);
            return Ok(trees);
        }
    }
    Ok(into_sorted_trees(generate(&sorted)))
}

/// Always-sequential version of [`enumerate_trees`].
pub(crate) fn enumerate_trees_seq(labels: &[u32]) -> Result<Vec<DecreasingTree>, TreeError> {
    let sorted = checked_sorted_labels(labels)?;
    if sorted.is_empty() {
        return Ok(vec![DecreasingTree::empty()]);
    }
    Ok(into_sorted_trees(generate(&sorted)))
}

/// The ways to hang the non-root labels below the root: either all of
/// them in one subtree, or a two-block partition. The block containing
/// the smallest label is designated second, so each unordered pair of
/// subtrees is produced exactly once.
fn root_partitions(rest: &[u32]) -> Vec<(Vec<u32>, Option<Vec<u32>>)> {
    debug_assert!(!rest.is_empty());
    // the 2^k masks would wrap at 64 labels; enumeration is hopeless
    // long before that, so fail loudly instead of silently truncating
    assert!(rest.len() <= 32, "label set too large to enumerate");
    let mut parts = vec![(rest.to_vec(), None)];
    let others = &rest[1..];
    for mask in 1u64..(1 << others.len()) {
        let mut first = Vec::new();
        let mut second = vec![rest[0]];
        for (bit, &label) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                first.push(label);
            } else {
                second.push(label);
            }
        }
        parts.push((first, Some(second)));
    }
    parts
}

fn expand_partition(root: u32, first: &[u32], second: Option<&[u32]>) -> Vec<Node> {
    let mut out = Vec::new();
    match second {
        None => {
            for t in generate(first) {
                out.push(Node::from_parts_unchecked(root, vec![t]));
            }
        }
        Some(second) => {
            let left = generate(first);
            let right = generate(second);
            for a in &left {
                for b in &right {
                    out.push(Node::from_parts_unchecked(root, vec![a.clone(), b.clone()]));
                }
            }
        }
    }
    out
}

/// Recursive generation over a sorted label slice: the root is the
/// maximum label, the rest is distributed over 0, 1, or 2 subtrees.
fn generate(labels: &[u32]) -> Vec<Node> {
    let (&root, rest) = labels.split_last().expect("nonempty label set");
    if rest.is_empty() {
        return vec![Node::leaf(root)];
    }
    root_partitions(rest)
        .into_iter()
        .flat_map(|(first, second)| expand_partition(root, &first, second.as_deref()))
        .collect()
}

#[cfg(feature = "parallel")]
fn generate_par(labels: &[u32]) -> Vec<Node> {
    use rayon::prelude::*;

    let (&root, rest) = labels.split_last().expect("nonempty label set");
    if rest.is_empty() {
        return vec![Node::leaf(root)];
    }
    root_partitions(rest)
        .into_par_iter()
        .flat_map_iter(|(first, second)| expand_partition(root, &first, second.as_deref()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DecreasingTree {
        DecreasingTree::parse_bracket(s).expect("test tree literal")
    }

    #[test]
    fn builds_the_example_tree() {
        let tree = DecreasingTree::new(
            6,
            vec![
                DecreasingTree::new(5, vec![t("[4]"), t("[2]")]).unwrap(),
                DecreasingTree::new(3, vec![t("[1]")]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(tree.to_bracket(), "[6,[5,[4],[2]],[3,[1]]]");
        assert_eq!(tree.vertex_count(), 6);
        assert_eq!(tree.labels(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn leaf_and_empty() {
        assert_eq!(DecreasingTree::leaf(7).unwrap().to_bracket(), "[7]");
        assert_eq!(DecreasingTree::empty().to_bracket(), "[]");
        assert_eq!(t("[]"), DecreasingTree::empty());
        assert_eq!(DecreasingTree::empty().vertex_count(), 0);
        assert!(matches!(DecreasingTree::leaf(0), Err(TreeError::ZeroLabel)));
    }

    #[test]
    fn rejects_invalid_trees() {
        assert!(matches!(
            DecreasingTree::new(3, vec![t("[5]")]),
            Err(TreeError::ChildNotSmaller {
                child: 5,
                parent: 3
            })
        ));
        assert!(matches!(
            DecreasingTree::new(9, vec![t("[1]"), t("[2]"), t("[3]")]),
            Err(TreeError::TooManyChildren(3))
        ));
        assert!(matches!(
            DecreasingTree::new(9, vec![t("[2,[1]]"), t("[3,[1]]")]),
            Err(TreeError::DuplicateLabel(1))
        ));
        assert!(matches!(
            DecreasingTree::new(9, vec![DecreasingTree::empty()]),
            Err(TreeError::EmptyChild)
        ));
    }

    #[test]
    fn children_are_unordered() {
        assert_eq!(t("[6,[3,[1]],[5,[4],[2]]]"), t("[6,[5,[4],[2]],[3,[1]]]"));
        assert_eq!(
            t("[6,[3,[1]],[5,[4],[2]]]").to_bracket(),
            "[6,[5,[4],[2]],[3,[1]]]"
        );
    }

    #[test]
    fn parser_tolerates_whitespace_and_reports_positions() {
        assert_eq!(
            t(" [6, [5,[4],[2]] , [3,[1]]] "),
            t("[6,[5,[4],[2]],[3,[1]]]")
        );
        assert!(matches!(
            DecreasingTree::parse_bracket("6,[5]]"),
            Err(TreeParseError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            DecreasingTree::parse_bracket("[6,[5]"),
            Err(TreeParseError::Syntax { .. })
        ));
        assert!(matches!(
            DecreasingTree::parse_bracket("[6,[5]]x"),
            Err(TreeParseError::TrailingInput { pos: 7 })
        ));
        assert!(matches!(
            DecreasingTree::parse_bracket("[3,[5]]"),
            Err(TreeParseError::Invalid(TreeError::ChildNotSmaller { .. }))
        ));
    }

    #[test]
    fn enumerates_small_label_sets() {
        assert_eq!(enumerate_trees(&[]).unwrap(), vec![DecreasingTree::empty()]);
        assert_eq!(enumerate_trees(&[1, 2]).unwrap(), vec![t("[2,[1]]")]);
        assert_eq!(
            enumerate_trees(&[1, 2, 3]).unwrap(),
            vec![t("[3,[2,[1]]]"), t("[3,[2],[1]]")]
        );
        assert_eq!(enumerate_trees(&[1, 2, 3, 4]).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_respects_arbitrary_label_sets() {
        let trees = enumerate_trees(&[2, 5, 9]).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(trees.iter().all(|t| t.labels() == vec![2, 5, 9]));
    }

    #[test]
    fn enumeration_rejects_bad_label_sets() {
        assert!(matches!(
            enumerate_trees(&[1, 0]),
            Err(TreeError::ZeroLabel)
        ));
        assert!(matches!(
            enumerate_trees(&[3, 3]),
            Err(TreeError::DuplicateLabel(3))
        ));
    }
}
