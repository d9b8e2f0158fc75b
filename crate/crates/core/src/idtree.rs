//! Increasing-decreasing (ID) trees and forests, their plane-tree forms,
//! postorder words, and the bijection onto D-cycles / D-permutations.
//!
//! An ID tree, rooted at its largest node, has every internal odd node
//! smaller than all of its descendants with all children even, and every
//! internal even node larger than all of its descendants with all children
//! odd.  The same conditions hold when rooting at the smallest node; both
//! rootings are evaluated here as a built-in self-check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::perm::Permutation;
use crate::setpart::{enumerate_partitions, SetPartition};

/// Unrooted labeled tree; edges normalized `(u, v)` with `u < v` and sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnrootedTree {
    nodes: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

impl UnrootedTree {
    pub fn new(mut nodes: Vec<u32>, edges: Vec<(u32, u32)>) -> Result<Self> {
        nodes.sort_unstable();
        nodes.dedup();
        let mut norm: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        norm.sort_unstable();
        norm.dedup();
        if norm.len() + 1 != nodes.len() {
            return Err(Error::Invalid("edge count must be node count - 1".into()));
        }
        let t = UnrootedTree { nodes, edges: norm };
        if !t.is_connected() {
            return Err(Error::Invalid("edges do not connect the node set".into()));
        }
        Ok(t)
    }

    pub fn singleton(label: u32) -> Self {
        UnrootedTree { nodes: vec![label], edges: Vec::new() }
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![self.nodes[0]];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            stack.extend(self.neighbors(v));
        }
        seen.len() == self.nodes.len()
    }
}

impl std::fmt::Debug for UnrootedTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "tree{:?}", self.edges)
    }
}

/// Rooted tree whose children are linearly ordered.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct PlaneTree {
    pub label: u32,
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf(label: u32) -> Self {
        PlaneTree { label, children: Vec::new() }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    /// Postorder word: children's words left to right, then the root.
    pub fn postorder(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        fn rec(t: &PlaneTree, out: &mut Vec<u32>) {
            for c in &t.children {
                rec(c, out);
            }
            out.push(t.label);
        }
        rec(self, &mut out);
        out
    }
}

impl std::fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.children.is_empty() {
            write!(f, "{}", self.label)
        } else {
            write!(f, "{}{:?}", self.label, self.children)
        }
    }
}

fn is_even(x: u32) -> bool {
    x % 2 == 0
}

/// Checks the ID conditions with the tree rooted at `root`; returns the
/// (min, max) of the whole subtree on success.
fn check_id_rooted(t: &UnrootedTree, v: u32, parent: Option<u32>) -> Option<(u32, u32)> {
    let children: Vec<u32> = t
        .neighbors(v)
        .into_iter()
        .filter(|&c| Some(c) != parent)
        .collect();
    let mut lo = v;
    let mut hi = v;
    let mut desc_lo = u32::MAX;
    let mut desc_hi = 0;
    for &c in &children {
        if is_even(v) == is_even(c) {
            return None; // children must alternate parity
        }
        let (clo, chi) = check_id_rooted(t, c, Some(v))?;
        lo = lo.min(clo);
        hi = hi.max(chi);
        desc_lo = desc_lo.min(clo);
        desc_hi = desc_hi.max(chi);
    }
    if !children.is_empty() {
        if is_even(v) {
            if v < desc_hi {
                return None; // even internal node must exceed all descendants
            }
        } else if v > desc_lo {
            return None; // odd internal node must be below all descendants
        }
    }
    Some((lo, hi))
}

/// ID test.  Evaluates the definition at the largest root and, as a
/// self-check, at the smallest root; the two must coincide.
pub fn is_id_tree(t: &UnrootedTree) -> bool {
    let largest = *t.nodes.last().unwrap();
    let smallest = t.nodes[0];
    let at_largest = check_id_rooted(t, largest, None).is_some();
    let at_smallest = check_id_rooted(t, smallest, None).is_some();
    assert_eq!(
        at_largest, at_smallest,
        "ID test must agree between largest-root and smallest-root forms: {t:?}"
    );
    at_largest
}

fn plane_form(t: &UnrootedTree, v: u32, parent: Option<u32>) -> PlaneTree {
    let mut children: Vec<u32> = t
        .neighbors(v)
        .into_iter()
        .filter(|&c| Some(c) != parent)
        .collect();
    if is_even(v) {
        children.sort_unstable(); // odd children increasing
    } else {
        children.sort_unstable_by(|a, b| b.cmp(a)); // even children decreasing
    }
    PlaneTree {
        label: v,
        children: children.into_iter().map(|c| plane_form(t, c, Some(v))).collect(),
    }
}

/// Plane form rooted at the largest node.
pub fn hat_form(t: &UnrootedTree) -> Result<PlaneTree> {
    if !is_id_tree(t) {
        return Err(Error::NotIdTree(format!("{t:?}")));
    }
    Ok(plane_form(t, *t.nodes.last().unwrap(), None))
}

/// Plane form rooted at the smallest node.
pub fn tilde_form(t: &UnrootedTree) -> Result<PlaneTree> {
    if !is_id_tree(t) {
        return Err(Error::NotIdTree(format!("{t:?}")));
    }
    Ok(plane_form(t, t.nodes[0], None))
}

/// Word with distinct letters satisfying: odd letters ascend into their
/// successor, even letters descend, an odd last letter is the minimum, an
/// even last letter is the maximum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WWord {
    letters: Vec<u32>,
}

impl WWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::NotWWord("empty word".into()));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotWWord(format!("repeated letter in {letters:?}")));
        }
        for i in 0..letters.len() - 1 {
            if !is_even(letters[i]) && letters[i] > letters[i + 1] {
                return Err(Error::NotWWord(format!(
                    "odd letter {} not followed by a larger letter",
                    letters[i]
                )));
            }
            if is_even(letters[i]) && letters[i] < letters[i + 1] {
                return Err(Error::NotWWord(format!(
                    "even letter {} not followed by a smaller letter",
                    letters[i]
                )));
            }
        }
        let last = *letters.last().unwrap();
        if !is_even(last) && last != sorted[0] {
            return Err(Error::NotWWord(format!("odd last letter {last} is not the minimum")));
        }
        if is_even(last) && last != *sorted.last().unwrap() {
            return Err(Error::NotWWord(format!("even last letter {last} is not the maximum")));
        }
        Ok(WWord { letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }
}

/// Postorder word of a plane form, validated as a member of the word class.
pub fn postorder_word(t: &PlaneTree) -> Result<WWord> {
    WWord::new(t.postorder())
}

/// Positions of right-to-left minima of `w`.
fn right_to_left_minima(w: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best = u32::MAX;
    for (i, &x) in w.iter().enumerate().rev() {
        if x < best {
            out.push(i);
            best = x;
        }
    }
    out.reverse();
    out
}

/// Positions of right-to-left maxima of `w`.
fn right_to_left_maxima(w: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best = 0;
    for (i, &x) in w.iter().enumerate().rev() {
        if x > best {
            out.push(i);
            best = x;
        }
    }
    out.reverse();
    out
}

/// Inverse of the postorder map: rebuilds the plane form of an ID tree from
/// its word by splitting at right-to-left minima (even last letter) or
/// maxima (odd last letter).
pub fn gamma(w: &WWord) -> PlaneTree {
    let letters = &w.letters;
    let m = letters.len();
    if m == 1 {
        return PlaneTree::leaf(letters[0]);
    }
    let prefix = &letters[..m - 1];
    let splits = if is_even(letters[m - 1]) {
        right_to_left_minima(prefix)
    } else {
        right_to_left_maxima(prefix)
    };
    let mut children = Vec::with_capacity(splits.len());
    let mut start = 0;
    for &j in &splits {
        let segment = prefix[start..=j].to_vec();
        let sub = WWord::new(segment).expect("segments of a valid word are valid words");
        children.push(gamma(&sub));
        start = j + 1;
    }
    PlaneTree { label: letters[m - 1], children }
}

/// The D-cycle carried by an ID tree: the cycle written by the postorder
/// word of the largest-root form.  The smallest-root form yields the same
/// permutation; both are computed and compared.
pub fn psi(t: &UnrootedTree) -> Result<Permutation> {
    let hat_word = postorder_word(&hat_form(t)?)?;
    let tilde_word = postorder_word(&tilde_form(t)?)?;
    let from_hat = Permutation::from_cycles(t.nodes.clone(), &[hat_word.letters().to_vec()])?;
    let from_tilde = Permutation::from_cycles(t.nodes.clone(), &[tilde_word.letters().to_vec()])?;
    assert_eq!(
        from_hat, from_tilde,
        "largest-root and smallest-root words must define the same cycle"
    );
    Ok(from_hat)
}

/// Forest of ID trees over disjoint label sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IdForest {
    trees: Vec<UnrootedTree>,
}

impl IdForest {
    pub fn new(mut trees: Vec<UnrootedTree>) -> Result<Self> {
        trees.sort();
        let mut all: Vec<u32> = trees.iter().flat_map(|t| t.nodes.iter().copied()).collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != len {
            return Err(Error::Invalid("trees must have disjoint node sets".into()));
        }
        for t in &trees {
            if !is_id_tree(t) {
                return Err(Error::NotIdTree(format!("{t:?}")));
            }
        }
        Ok(IdForest { trees })
    }

    pub fn trees(&self) -> &[UnrootedTree] {
        &self.trees
    }

    /// Number of trees, singletons included.
    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    pub fn ground(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.trees.iter().flat_map(|t| t.nodes.iter().copied()).collect();
        all.sort_unstable();
        all
    }

    /// Partition of the ground set into tree node sets.
    pub fn support(&self) -> SetPartition {
        let ground = self.ground();
        let blocks = self.trees.iter().map(|t| t.nodes.clone()).collect();
        SetPartition::new(ground, blocks).expect("trees partition the ground set")
    }
}

/// The D-permutation carried by an ID forest: one cycle per tree; the cycle
/// support equals the partition into tree node sets.
pub fn psi_forest(f: &IdForest) -> Result<Permutation> {
    let cycles: Vec<Vec<u32>> = f
        .trees
        .iter()
        .map(|t| Ok(postorder_word(&hat_form(t)?)?.letters().to_vec()))
        .collect::<Result<_>>()?;
    Permutation::from_cycles(f.ground(), &cycles)
}

const ID_ENUM_CAP: usize = 12;
const SPANNING_ROUTE_CAP: usize = 8;

/// All ID trees with node set exactly `nodes`, found by filtering spanning
/// trees of the Ferrers graph on `nodes` through the ID test.
pub fn id_trees_on(nodes: &[u32]) -> Result<Vec<UnrootedTree>> {
    if nodes.len() == 1 {
        return Ok(vec![UnrootedTree::singleton(nodes[0])]);
    }
    let g = FerrersGraph::new(nodes.to_vec())?;
    let edges = g.edges();
    let want = nodes.len() - 1;
    if edges.len() < want {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = Vec::new();
    fn rec(
        edges: &[(u32, u32)],
        nodes: &[u32],
        want: usize,
        start: usize,
        choice: &mut Vec<usize>,
        out: &mut Vec<UnrootedTree>,
    ) {
        if choice.len() == want {
            let es: Vec<(u32, u32)> = choice.iter().map(|&i| edges[i]).collect();
            if let Ok(t) = UnrootedTree::new(nodes.to_vec(), es) {
                if is_id_tree(&t) {
                    out.push(t);
                }
            }
            return;
        }
        if start + (want - choice.len()) > edges.len() {
            return;
        }
        for i in start..edges.len() {
            choice.push(i);
            rec(edges, nodes, want, i + 1, choice, out);
            choice.pop();
        }
    }
    rec(edges, nodes, want, 0, &mut choice, &mut out);
    out.sort();
    Ok(out)
}

/// ID forest enumeration by per-block spanning trees: partition the vertex
/// set into admissible blocks and take every combination of ID trees.
pub fn id_forests_by_spanning(vertices: &[u32], tree_count: Option<usize>) -> Result<Vec<IdForest>> {
    let parts = enumerate_partitions(
        vertices,
        &|b| b.len() == 1 || b[0] % 2 == 1,
        &|b| b.len() == 1 || (b[0] % 2 == 1 && b.last().unwrap() % 2 == 0),
    );
    let mut out = Vec::new();
    for p in parts {
        if let Some(k) = tree_count {
            if p.block_count() != k {
                continue;
            }
        }
        let per_block: Vec<Vec<UnrootedTree>> = p
            .blocks()
            .iter()
            .map(|b| id_trees_on(b))
            .collect::<Result<_>>()?;
        if per_block.iter().any(Vec::is_empty) {
            continue;
        }
        let mut combos: Vec<Vec<UnrootedTree>> = vec![Vec::new()];
        for trees in &per_block {
            let mut next = Vec::with_capacity(combos.len() * trees.len());
            for c in &combos {
                for t in trees {
                    let mut c = c.clone();
                    c.push(t.clone());
                    next.push(c);
                }
            }
            combos = next;
        }
        for trees in combos {
            out.push(IdForest::new(trees)?);
        }
    }
    out.sort();
    Ok(out)
}

/// ID forest enumeration through the NBC sets of the Ferrers graph: each
/// NBC edge set, read as a forest with its singleton components, is an ID
/// forest, and every ID forest arises once.
pub fn id_forests_by_nbc(vertices: &[u32], tree_count: Option<usize>) -> Result<Vec<IdForest>> {
    let g = FerrersGraph::new(vertices.to_vec())?;
    let mut out = Vec::new();
    for set in g.nbc_sets() {
        let support = g.partition_of_edge_set(&set);
        if let Some(k) = tree_count {
            if support.block_count() != k {
                continue;
            }
        }
        let trees: Vec<UnrootedTree> = support
            .blocks()
            .iter()
            .map(|b| {
                let es: Vec<(u32, u32)> = set
                    .iter()
                    .map(|&i| g.edges()[i])
                    .filter(|&(u, _)| b.binary_search(&u).is_ok())
                    .collect();
                UnrootedTree::new(b.clone(), es).expect("components of a forest are trees")
            })
            .collect();
        out.push(IdForest::new(trees)?);
    }
    out.sort();
    Ok(out)
}

/// Exhaustive, duplicate-free stream of ID forests on `vertices`,
/// optionally restricted to exactly `tree_count` trees.
pub fn enumerate_id_forests(vertices: &[u32], tree_count: Option<usize>) -> Result<Vec<IdForest>> {
    if vertices.len() > ID_ENUM_CAP {
        return Err(Error::SizeLimit {
            what: "ID forest enumeration",
            cap: ID_ENUM_CAP,
            got: vertices.len(),
        });
    }
    if vertices.len() <= SPANNING_ROUTE_CAP {
        id_forests_by_spanning(vertices, tree_count)
    } else {
        id_forests_by_nbc(vertices, tree_count)
    }
}

/// Report comparing the NBC-route forests with the spanning-route forests.
#[derive(Debug)]
pub struct NbcIdReport {
    pub matches: bool,
    pub count: usize,
    pub only_nbc: Vec<IdForest>,
    pub only_spanning: Vec<IdForest>,
}

/// Checks that the NBC forests of the Ferrers graph on `vertices` are
/// exactly the ID forests found by the spanning-tree route.
pub fn nbc_equals_id(vertices: &[u32]) -> Result<NbcIdReport> {
    let nbc = id_forests_by_nbc(vertices, None)?;
    let spanning = id_forests_by_spanning(vertices, None)?;
    let only_nbc: Vec<IdForest> = nbc.iter().filter(|f| !spanning.contains(f)).cloned().collect();
    let only_spanning: Vec<IdForest> =
        spanning.iter().filter(|f| !nbc.contains(f)).cloned().collect();
    Ok(NbcIdReport {
        matches: only_nbc.is_empty() && only_spanning.is_empty() && nbc.len() == spanning.len(),
        count: nbc.len(),
        only_nbc,
        only_spanning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 8-node running example: postorder words 42156378 and 56378421.
    fn example_tree() -> UnrootedTree {
        UnrootedTree::new(
            (1..=8).collect(),
            vec![(1, 2), (1, 4), (1, 8), (3, 6), (3, 8), (5, 6), (7, 8)],
        )
        .unwrap()
    }

    #[test]
    fn singleton_and_edge_are_id_trees() {
        assert!(is_id_tree(&UnrootedTree::singleton(5)));
        assert!(is_id_tree(&UnrootedTree::new(vec![1, 2], vec![(1, 2)]).unwrap()));
    }

    #[test]
    fn star_with_small_even_center_is_not_id() {
        // 2 adjacent to 1 and 3: rooted anywhere, even node 2 has descendant 3 > 2
        let t = UnrootedTree::new(vec![1, 2, 3], vec![(1, 2), (2, 3)]).unwrap();
        assert!(!is_id_tree(&t));
    }

    #[test]
    fn example_tree_postorder_words() {
        let t = example_tree();
        assert!(is_id_tree(&t));
        let hat = hat_form(&t).unwrap();
        assert_eq!(hat.postorder(), vec![4, 2, 1, 5, 6, 3, 7, 8]);
        let tilde = tilde_form(&t).unwrap();
        assert_eq!(tilde.postorder(), vec![5, 6, 3, 7, 8, 4, 2, 1]);
    }

    #[test]
    fn single_node_postorder_is_the_label() {
        let t = UnrootedTree::singleton(7);
        assert_eq!(hat_form(&t).unwrap().postorder(), vec![7]);
    }

    #[test]
    fn word_class_membership() {
        assert!(WWord::new(vec![4, 2, 1, 5, 6, 3, 7, 8]).is_ok());
        assert!(WWord::new(vec![5, 6, 3, 7, 8, 4, 2, 1]).is_ok());
        assert!(WWord::new(vec![2, 1, 5, 6, 4, 3, 7, 8]).is_ok());
        // odd letter followed by smaller letter
        assert!(WWord::new(vec![3, 1, 2]).is_err());
        // even last letter that is not the maximum
        assert!(WWord::new(vec![5, 6, 1, 2]).is_err());
        // odd last letter that is not the minimum
        assert!(WWord::new(vec![1, 6, 3]).is_err());
    }

    #[test]
    fn gamma_splits_at_right_to_left_minima() {
        let w = WWord::new(vec![2, 1, 5, 6, 4, 3, 7, 8]).unwrap();
        let t = gamma(&w);
        assert_eq!(t.label, 8);
        let segments: Vec<Vec<u32>> = t.children.iter().map(|c| c.postorder()).collect();
        assert_eq!(segments, vec![vec![2, 1], vec![5, 6, 4, 3], vec![7]]);
        assert_eq!(t.postorder(), w.letters());
    }

    #[test]
    fn gamma_of_single_letter_is_a_leaf() {
        let w = WWord::new(vec![9]).unwrap();
        assert_eq!(gamma(&w), PlaneTree::leaf(9));
    }

    #[test]
    fn gamma_postorder_round_trip_on_small_trees() {
        for n in 1..=6usize {
            let vertices: Vec<u32> = (1..=n as u32).collect();
            for forest in enumerate_id_forests(&vertices, Some(1)).unwrap() {
                let t = &forest.trees()[0];
                for form in [hat_form(t).unwrap(), tilde_form(t).unwrap()] {
                    let w = postorder_word(&form).unwrap();
                    assert_eq!(gamma(&w), form, "gamma(postorder(x)) = x");
                }
            }
        }
    }

    #[test]
    fn psi_of_example_tree_is_the_expected_cycle() {
        let p = psi(&example_tree()).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 5, 6, 3, 7, 8, 4, 2]]);
    }

    #[test]
    fn psi_of_single_edge() {
        let t = UnrootedTree::new(vec![1, 2], vec![(1, 2)]).unwrap();
        assert_eq!(psi(&t).unwrap().cycles(), vec![vec![1, 2]]);
    }

    #[test]
    fn psi_images_on_six_are_the_three_d_cycles() {
        let trees = id_trees_on(&[1, 2, 3, 4, 5, 6]).unwrap();
        let mut images: Vec<String> = trees.iter().map(|t| psi(t).unwrap().to_string()).collect();
        images.sort();
        assert_eq!(
            images,
            vec!["(1,3,5,6,4,2)", "(1,4,3,5,6,2)", "(1,5,6,3,4,2)"]
        );
    }

    #[test]
    fn forest_counts_on_four_by_tree_count() {
        let v: Vec<u32> = (1..=4).collect();
        let counts: Vec<usize> = (1..=4)
            .map(|k| enumerate_id_forests(&v, Some(k)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 3, 1]);
        assert_eq!(enumerate_id_forests(&v, None).unwrap().len(), 8);
    }

    #[test]
    fn spanning_tree_counts_match_genocchi_values() {
        assert_eq!(id_trees_on(&[1, 2]).unwrap().len(), 1);
        assert_eq!(id_trees_on(&[1, 2, 3, 4]).unwrap().len(), 1);
        assert_eq!(id_trees_on(&[1, 2, 3, 4, 5, 6]).unwrap().len(), 3);
    }

    #[test]
    fn total_forest_counts_match_median_genocchi_values() {
        let expected = [2usize, 8, 56, 608];
        for (n, &want) in (1..=4).zip(&expected) {
            let v: Vec<u32> = (1..=2 * n as u32).collect();
            assert_eq!(enumerate_id_forests(&v, None).unwrap().len(), want, "2n = {}", 2 * n);
        }
    }

    #[test]
    fn psi_forest_on_four_gives_the_eight_d_permutations() {
        let v: Vec<u32> = (1..=4).collect();
        let mut images: Vec<String> = enumerate_id_forests(&v, None)
            .unwrap()
            .iter()
            .map(|f| psi_forest(f).unwrap().to_string())
            .collect();
        images.sort();
        let mut expected = vec![
            "(1)(2)(3)(4)",
            "(1,2)(3)(4)",
            "(1,4)(2)(3)",
            "(1)(2)(3,4)",
            "(1,4,2)(3)",
            "(1,3,4)(2)",
            "(1,2)(3,4)",
            "(1,3,4,2)",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        expected.sort();
        assert_eq!(images, expected);
    }

    #[test]
    fn psi_forest_identity_on_singletons() {
        let f = IdForest::new((1..=4).map(UnrootedTree::singleton).collect()).unwrap();
        assert!(psi_forest(&f).unwrap().is_identity());
    }

    #[test]
    fn nbc_and_spanning_routes_agree() {
        for verts in [vec![1, 2], vec![1, 2, 3, 4], vec![1, 2, 3, 4, 5, 6], vec![2, 3, 5, 6]] {
            let report = nbc_equals_id(&verts).unwrap();
            assert!(report.matches, "mismatch on {verts:?}: {report:?}");
        }
        assert_eq!(nbc_equals_id(&[1, 2]).unwrap().count, 2);
        assert_eq!(nbc_equals_id(&[1, 2, 3, 4]).unwrap().count, 8);
    }

    #[test]
    fn size_cap_is_enforced() {
        let v: Vec<u32> = (1..=14).collect();
        assert!(matches!(
            enumerate_id_forests(&v, None),
            Err(crate::error::Error::SizeLimit { .. })
        ));
    }
}
