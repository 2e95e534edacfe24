//! Minimum spanning tree and odd-degree vertex extraction.
//!
//! Prim's algorithm with dense O(n^2) key updates; the instances are complete
//! graphs so an adjacency-matrix scan beats heap bookkeeping. The start
//! vertex is fixed at 0 and key ties prefer the smallest vertex index, which
//! pins down one tree (and therefore one odd set) per instance.

use crate::instance::MetricInstance;

/// Spanning tree as an edge list (smaller endpoint first, sorted) plus its
/// total weight accumulated in insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree {
    edges: Vec<(usize, usize)>,
    weight: f64,
}

impl SpanningTree {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// Sorted vertices of odd degree in a spanning tree; always even in number.
#[derive(Debug, Clone, PartialEq)]
pub struct OddSet {
    vertices: Vec<usize>,
}

#[cfg(test)]
impl SpanningTree {
    pub(crate) fn test_tree(edges: Vec<(usize, usize)>, weight: f64) -> Self {
        Self { edges, weight }
    }
}

impl OddSet {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn minimum_spanning_tree(instance: &MetricInstance) -> SpanningTree {
    let n = instance.n();
    let mut in_tree = vec![false; n];
    let mut key = vec![f64::INFINITY; n];
    let mut parent = vec![0usize; n];
    in_tree[0] = true;
    for v in 1..n {
        key[v] = instance.weight(0, v);
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut weight = 0.0;
    for _ in 1..n {
        let mut u = usize::MAX;
        let mut best = f64::INFINITY;
        for v in 0..n {
            if !in_tree[v] && key[v] < best {
                best = key[v];
                u = v;
            }
        }
        in_tree[u] = true;
        weight += key[u];
        let p = parent[u];
        edges.push((p.min(u), p.max(u)));
        for v in 0..n {
            if !in_tree[v] && instance.weight(u, v) < key[v] {
                key[v] = instance.weight(u, v);
                parent[v] = u;
            }
        }
    }
    edges.sort_unstable();
    SpanningTree { edges, weight }
}

pub fn odd_degree_vertices(tree: &SpanningTree, n: usize) -> OddSet {
    let mut degree = vec![0usize; n];
    for &(u, v) in tree.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| degree[v] % 2 == 1).collect();
    debug_assert!(vertices.len() % 2 == 0, "odd-degree count must be even");
    OddSet { vertices }
}
