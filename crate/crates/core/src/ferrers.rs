//! Bipartite graphs joining each odd vertex to every larger even vertex,
//! their chromatic polynomials, and non-broken-circuit (NBC) enumeration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};
use crate::setpart::SetPartition;

/// Graph on a vertex set `V` with an edge `{u, v}` for every odd `u` and
/// even `v > u`.  Edges are stored as `(odd, even)` pairs in the fixed total
/// order: odd endpoint ascending, then even endpoint *descending*.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct FerrersGraph {
    vertices: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

/// Position of an edge in the fixed order; smaller key = earlier edge.
/// `{1,8} < {1,6} < {3,2}` under this order.
pub fn edge_order_key(e: (u32, u32)) -> (u32, std::cmp::Reverse<u32>) {
    (e.0, std::cmp::Reverse(e.1))
}

impl FerrersGraph {
    /// Build the graph on a sorted set of distinct positive vertices.
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Invalid("vertex set must be nonempty".into()));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) || vertices[0] == 0 {
            return Err(Error::Invalid("vertices must be sorted distinct positives".into()));
        }
        let mut edges = Vec::new();
        for &u in vertices.iter().filter(|v| *v % 2 == 1) {
            for &v in vertices.iter().filter(|v| *v % 2 == 0) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_by_key(|&e| edge_order_key(e));
        Ok(FerrersGraph { vertices, edges })
    }

    /// The graph on `[2n]`.
    pub fn on_2n(n: usize) -> Self {
        FerrersGraph::new((1..=2 * n as u32).collect()).expect("contiguous range is valid")
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Edges in the fixed total order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Chromatic polynomial by deletion-contraction.
    pub fn chromatic_polynomial(&self) -> Poly {
        let index_of = |x: u32| self.vertices.binary_search(&x).unwrap();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (index_of(u), index_of(v)))
            .collect();
        chromatic_of_edges(self.vertices.len(), &edges)
    }

    /// Brute-force count of proper colorings with `k` colors; oracle for the
    /// chromatic polynomial at small arguments.
    pub fn proper_colorings(&self, k: u32) -> u64 {
        let n = self.vertices.len();
        let index_of = |x: u32| self.vertices.binary_search(&x).unwrap();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (index_of(u), index_of(v)))
            .collect();
        let mut colors = vec![0u32; n];
        fn rec(i: usize, k: u32, colors: &mut [u32], edges: &[(usize, usize)]) -> u64 {
            if i == colors.len() {
                return 1;
            }
            let mut total = 0;
            'next: for c in 0..k {
                for &(u, v) in edges {
                    let (a, b) = (u.min(v), u.max(v));
                    if b == i && colors[a] == c {
                        continue 'next;
                    }
                }
                colors[i] = c;
                total += rec(i + 1, k, colors, edges);
            }
            total
        }
        rec(0, k, &mut colors, &edges)
    }

    /// All NBC edge sets, as sorted index lists into `edges()`.  Every
    /// emitted set is an acyclic, broken-circuit-free subset; the list is
    /// exhaustive and duplicate-free (sets are extended in edge order only).
    pub fn nbc_sets(&self) -> Vec<Vec<usize>> {
        let m = self.edges.len();
        let mut out = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        fn rec(g: &FerrersGraph, m: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(current.clone());
            for e in start..m {
                current.push(e);
                if g.is_nbc(current) {
                    rec(g, m, e + 1, current, out);
                }
                current.pop();
            }
        }
        rec(self, m, 0, &mut current, &mut out);
        out.sort();
        out
    }

    /// NBC test for a set of edge indices.  The set must be a forest and,
    /// for every non-member edge `f` whose endpoints the set connects, some
    /// edge on the connecting path must precede `f` in the edge order
    /// (otherwise the path is the broken circuit of the cycle closed by `f`).
    pub fn is_nbc(&self, set: &[usize]) -> bool {
        let Some(adj) = self.forest_adjacency(set) else {
            return false; // contains a cycle
        };
        for f in 0..self.edges.len() {
            if set.contains(&f) {
                continue;
            }
            let (u, v) = self.edges[f];
            if let Some(path) = path_in_forest(&adj, u, v) {
                let f_key = edge_order_key(self.edges[f]);
                if path.iter().all(|&e| f_key < edge_order_key(self.edges[e])) {
                    return false;
                }
            }
        }
        true
    }

    /// Adjacency (vertex -> (neighbor, edge index)) if `set` is a forest.
    fn forest_adjacency(&self, set: &[usize]) -> Option<std::collections::HashMap<u32, Vec<(u32, usize)>>> {
        let mut parent: std::collections::HashMap<u32, u32> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut std::collections::HashMap<u32, u32>, x: u32) -> u32 {
            let p = parent[&x];
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        let mut adj: std::collections::HashMap<u32, Vec<(u32, usize)>> = Default::default();
        for &e in set {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return None;
            }
            parent.insert(ru, rv);
            adj.entry(u).or_default().push((v, e));
            adj.entry(v).or_default().push((u, e));
        }
        Some(adj)
    }

    /// The partition of the vertex set into connected components of the
    /// subgraph `(V, set)`.
    pub fn partition_of_edge_set(&self, set: &[usize]) -> SetPartition {
        let mut parent: std::collections::HashMap<u32, u32> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut std::collections::HashMap<u32, u32>, x: u32) -> u32 {
            let p = parent[&x];
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        for &e in set {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent.insert(ru, rv);
            }
        }
        let mut groups: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for &v in &self.vertices {
            groups.entry(find(&mut parent, v)).or_default().push(v);
        }
        SetPartition::new(self.vertices.clone(), groups.into_values().collect())
            .expect("components partition the vertex set")
    }

    /// Whitney's sum over NBC sets: `sum_S (-1)^|S| t^(|V| - |S|)`.
    pub fn whitney_nbc_polynomial(&self) -> Poly {
        let n = self.vertices.len();
        let mut acc = Poly::zero();
        for s in self.nbc_sets() {
            let sign = if s.len() % 2 == 0 { 1 } else { -1 };
            acc = &acc + &Poly::monomial(Rat::from_integer(sign.into()), n - s.len());
        }
        acc
    }
}

/// Path between `u` and `v` in a forest given as adjacency lists, as the
/// list of edge indices, or `None` when they are in different components.
fn path_in_forest(
    adj: &std::collections::HashMap<u32, Vec<(u32, usize)>>,
    u: u32,
    v: u32,
) -> Option<Vec<usize>> {
    let mut stack = vec![(u, u, Vec::new())];
    while let Some((x, from, path)) = stack.pop() {
        if x == v {
            return Some(path);
        }
        if let Some(neigh) = adj.get(&x) {
            for &(y, e) in neigh {
                if y != from {
                    let mut next = path.clone();
                    next.push(e);
                    stack.push((y, x, next));
                }
            }
        }
    }
    None
}

/// Chromatic polynomial of an arbitrary multigraph by deletion-contraction.
/// Contraction may create parallel edges (collapsed: they constrain colors
/// identically) and loops (which force the zero polynomial).
pub fn chromatic_of_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Poly {
    let mut simple: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in edges {
        if u == v {
            return Poly::zero();
        }
        let key = (u.min(v), u.max(v));
        if !simple.contains(&key) {
            simple.push(key);
        }
    }
    match simple.pop() {
        None => Poly::t().pow(n_vertices as u32),
        Some((u, v)) => {
            let deleted = chromatic_of_edges(n_vertices, &simple);
            // contract v into u (u < v), then close the gap at index v
            let relabel = |x: usize| {
                let x = if x == v { u } else { x };
                if x > v {
                    x - 1
                } else {
                    x
                }
            };
            let contracted_edges: Vec<(usize, usize)> =
                simple.iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
            let contracted = chromatic_of_edges(n_vertices - 1, &contracted_edges);
            &deleted - &contracted
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_six_has_the_triangular_edge_set() {
        let g = FerrersGraph::on_2n(3);
        assert_eq!(
            g.edges(),
            &[(1, 6), (1, 4), (1, 2), (3, 6), (3, 4), (5, 6)]
        );
        let mut unordered: Vec<(u32, u32)> = g.edges().to_vec();
        unordered.sort();
        assert_eq!(
            unordered,
            vec![(1, 2), (1, 4), (1, 6), (3, 4), (3, 6), (5, 6)]
        );
    }

    #[test]
    fn single_even_vertex_has_no_edges() {
        let g = FerrersGraph::new(vec![2]).unwrap();
        assert!(g.edges().is_empty());
        assert_eq!(g.chromatic_polynomial(), Poly::t());
    }

    #[test]
    fn gamma_four_is_a_path() {
        let g = FerrersGraph::on_2n(2);
        let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
        edges.sort();
        assert_eq!(edges, vec![(1, 2), (1, 4), (3, 4)]);
        // path on 4 vertices: t (t-1)^3
        let expected = &Poly::t() * &Poly::t_plus(-1).pow(3);
        assert_eq!(g.chromatic_polynomial(), expected);
    }

    #[test]
    fn edge_order_matches_the_fixed_example() {
        let a = edge_order_key((1, 8));
        let b = edge_order_key((1, 6));
        let c = edge_order_key((3, 2));
        assert!(a < b && b < c);
    }

    #[test]
    fn chromatic_evaluations_match_brute_force_colorings() {
        for verts in [vec![1, 2, 3, 4], vec![1, 2, 3, 4, 5, 6], vec![2, 3, 6], vec![1, 4, 5, 8]] {
            let g = FerrersGraph::new(verts).unwrap();
            let ch = g.chromatic_polynomial();
            for k in 0..=4u32 {
                assert_eq!(
                    ch.eval_int(k as i64),
                    crate::poly::rat(g.proper_colorings(k) as i64),
                    "colorings with {k} colors"
                );
            }
        }
    }

    #[test]
    fn nbc_sets_of_a_single_edge_graph() {
        let g = FerrersGraph::new(vec![1, 2]).unwrap();
        assert_eq!(g.nbc_sets(), vec![vec![], vec![0]]);
    }

    #[test]
    fn gamma_six_has_three_spanning_nbc_trees() {
        let g = FerrersGraph::on_2n(3);
        let spanning: Vec<_> = g
            .nbc_sets()
            .into_iter()
            .filter(|s| s.len() == g.vertex_count() - 1)
            .collect();
        assert_eq!(spanning.len(), 3);
    }

    #[test]
    fn whitney_sum_equals_chromatic_polynomial() {
        for verts in [vec![1, 2], vec![1, 2, 3, 4], vec![1, 2, 3, 4, 5, 6], vec![3, 4, 6]] {
            let g = FerrersGraph::new(verts).unwrap();
            assert_eq!(g.whitney_nbc_polynomial(), g.chromatic_polynomial());
        }
    }

    #[test]
    fn nbc_sets_are_forests_and_closed_downward() {
        let g = FerrersGraph::on_2n(3);
        let sets = g.nbc_sets();
        for s in &sets {
            assert!(g.is_nbc(s));
            if !s.is_empty() {
                let mut smaller = s.clone();
                smaller.pop();
                assert!(sets.contains(&smaller), "downward closed");
            }
        }
    }

    #[test]
    fn loops_force_zero_chromatic_polynomial() {
        assert!(chromatic_of_edges(2, &[(0, 0)]).is_zero());
        // parallel edges collapse: path with doubled edge = path
        let doubled = chromatic_of_edges(2, &[(0, 1), (0, 1)]);
        assert_eq!(doubled, chromatic_of_edges(2, &[(0, 1)]));
    }
}
