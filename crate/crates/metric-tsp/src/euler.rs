//! Multigraph union of tree and matching, and Eulerian circuit extraction.
//!
//! Adding a perfect matching on the odd-degree vertices to a spanning tree
//! makes every degree even, so the union (with multi-edges where tree and
//! matching overlap) carries an Eulerian circuit. Hierholzer's algorithm
//! extracts one; unused incident edges are taken in ascending neighbor order
//! so circuits are reproducible.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::instance::MetricInstance;
use crate::matching::Matching;
use crate::mst::SpanningTree;

/// Edge multiset over `n` vertices: unordered pair -> multiplicity, with the
/// total weight counted per multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Multigraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
    weight: f64,
}

impl Multigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Multiset entries as (u, v, multiplicity), u < v, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let key = (u.min(v), u.max(v));
        self.edges.get(&key).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// Total edge multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for (&(u, v), &m) in &self.edges {
            deg[u] += m as usize;
            deg[v] += m as usize;
        }
        deg
    }

    /// Smallest vertex with at least one incident edge.
    pub fn smallest_touched(&self) -> Option<usize> {
        self.degrees().iter().position(|&d| d > 0)
    }
}

/// Overlay the spanning tree and the matching into one multiset; edges picked
/// by both get multiplicity 2. Every degree comes out even: tree parity is
/// fixed exactly at the matched vertices.
pub fn union_multigraph(
    tree: &SpanningTree,
    matching: &Matching,
    instance: &MetricInstance,
) -> Multigraph {
    let n = instance.n();
    let mut edges: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for &(u, v) in tree.edges() {
        *edges.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    for &(u, v) in matching.pairs() {
        *edges.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    let weight = edges
        .iter()
        .map(|(&(u, v), &m)| instance.weight(u, v) * m as f64)
        .sum();
    Multigraph { n, edges, weight }
}

/// Hierholzer's algorithm. Consumes every edge exactly as often as its
/// multiplicity and returns the circuit as a closed vertex sequence starting
/// and ending at `start`.
pub fn eulerian_circuit(graph: &Multigraph, start: usize) -> Result<Vec<usize>, Error> {
    let degrees = graph.degrees();
    if let Some(v) = degrees.iter().position(|&d| d % 2 == 1) {
        return Err(Error::NoEulerianCircuit {
            reason: format!("vertex {v} has odd degree {}", degrees[v]),
        });
    }
    if degrees.get(start).copied().unwrap_or(0) == 0 {
        return Err(Error::NoEulerianCircuit {
            reason: format!("start vertex {start} has no incident edges"),
        });
    }
    // Connectivity over touched vertices.
    let mut adjacency: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); graph.n()];
    for (u, v, m) in graph.edges() {
        adjacency[u].insert(v, m);
        adjacency[v].insert(u, m);
    }
    let mut seen = vec![false; graph.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for (&u, _) in &adjacency[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    if let Some(v) = (0..graph.n()).find(|&v| degrees[v] > 0 && !seen[v]) {
        return Err(Error::NoEulerianCircuit {
            reason: format!("vertex {v} is not reachable from start {start}"),
        });
    }

    let mut path = vec![start];
    let mut circuit = Vec::with_capacity(graph.edge_count() + 1);
    while let Some(&v) = path.last() {
        let next = adjacency[v].iter().next().map(|(&u, _)| u);
        match next {
            Some(u) => {
                decrement(&mut adjacency, v, u);
                path.push(u);
            }
            None => {
                circuit.push(path.pop().expect("nonempty path"));
            }
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), graph.edge_count() + 1);
    debug_assert_eq!(circuit.first(), circuit.last());
    Ok(circuit)
}

fn decrement(adjacency: &mut [BTreeMap<usize, u32>], v: usize, u: usize) {
    for (a, b) in [(v, u), (u, v)] {
        let m = adjacency[a].get_mut(&b).expect("edge present");
        *m -= 1;
        if *m == 0 {
            adjacency[a].remove(&b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{induce_subgraph, min_weight_perfect_matching};
    use crate::mst::{minimum_spanning_tree, odd_degree_vertices};

    fn triangle() -> MetricInstance {
        MetricInstance::new(vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ])
        .unwrap()
    }

    #[test]
    fn path_tree_plus_matching_closes_the_triangle() {
        let m = MetricInstance::new(vec![
            vec![0.0, 1.0, 1.9],
            vec![1.0, 0.0, 1.0],
            vec![1.9, 1.0, 0.0],
        ])
        .unwrap();
        let tree = minimum_spanning_tree(&m);
        assert_eq!(tree.edges(), &[(0, 1), (1, 2)]);
        let odd = odd_degree_vertices(&tree, 3);
        assert_eq!(odd.vertices(), &[0, 2]);
        let sub = induce_subgraph(&m, &odd).unwrap();
        let matching = min_weight_perfect_matching(&sub);
        let mg = union_multigraph(&tree, &matching, &m);
        assert_eq!(mg.multiplicity(0, 1), 1);
        assert_eq!(mg.multiplicity(1, 2), 1);
        assert_eq!(mg.multiplicity(0, 2), 1);
        assert!(mg.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn overlap_doubles_the_shared_edge() {
        let tree = crate::mst::SpanningTree::test_tree(vec![(0, 1), (1, 2), (1, 3)], 3.0);
        let matching = crate::matching::Matching::test_matching(vec![(0, 1), (2, 3)], 2.0);
        let m = MetricInstance::new(vec![
            vec![0.0, 1.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0, 1.0],
            vec![1.0, 1.0, 0.0, 1.0],
            vec![1.0, 1.0, 1.0, 0.0],
        ])
        .unwrap();
        let mg = union_multigraph(&tree, &matching, &m);
        assert_eq!(mg.multiplicity(0, 1), 2);
        assert_eq!(mg.multiplicity(2, 3), 1);
        assert!(mg.degrees().iter().all(|&d| d % 2 == 0));
        assert_eq!(mg.weight(), 5.0);
    }

    #[test]
    fn pipeline_multigraphs_have_even_degrees() {
        for seed in 0..30 {
            let n = 10;
            let m = crate::corpus::euclidean_unit_square(n, 300 + seed).unwrap();
            let tree = minimum_spanning_tree(&m);
            let odd = odd_degree_vertices(&tree, n);
            let sub = induce_subgraph(&m, &odd).unwrap();
            let matching = min_weight_perfect_matching(&sub);
            let mg = union_multigraph(&tree, &matching, &m);
            assert!(mg.degrees().iter().all(|&d| d % 2 == 0));
            let expected = tree.weight() + matching.weight();
            assert!((mg.weight() - expected).abs() <= crate::fp_tolerance(expected));
        }
    }

    #[test]
    fn triangle_circuit_under_tie_break() {
        let m = triangle();
        let tree = minimum_spanning_tree(&m);
        let odd = odd_degree_vertices(&tree, 3);
        let sub = induce_subgraph(&m, &odd).unwrap();
        let matching = min_weight_perfect_matching(&sub);
        let mg = union_multigraph(&tree, &matching, &m);
        let circuit = eulerian_circuit(&mg, 0).unwrap();
        assert_eq!(circuit, vec![0, 1, 2, 0]);
    }

    #[test]
    fn doubled_edge_circuit() {
        let tree = crate::mst::SpanningTree::test_tree(vec![(0, 1)], 1.0);
        let matching = crate::matching::Matching::test_matching(vec![(0, 1)], 1.0);
        let m = triangle();
        let mg = union_multigraph(&tree, &matching, &m);
        assert_eq!(mg.multiplicity(0, 1), 2);
        let circuit = eulerian_circuit(&mg, 0).unwrap();
        assert_eq!(circuit, vec![0, 1, 0]);
    }

    #[test]
    fn circuit_consumes_the_exact_multiset() {
        for seed in 0..20 {
            let n = 12;
            let m = crate::corpus::euclidean_unit_square(n, 500 + seed).unwrap();
            let tree = minimum_spanning_tree(&m);
            let odd = odd_degree_vertices(&tree, n);
            let sub = induce_subgraph(&m, &odd).unwrap();
            let matching = min_weight_perfect_matching(&sub);
            let mg = union_multigraph(&tree, &matching, &m);
            let start = mg.smallest_touched().unwrap();
            let circuit = eulerian_circuit(&mg, start).unwrap();
            assert_eq!(circuit.len(), mg.edge_count() + 1);
            let mut consumed: BTreeMap<(usize, usize), u32> = BTreeMap::new();
            for pair in circuit.windows(2) {
                let key = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                *consumed.entry(key).or_insert(0) += 1;
            }
            let expected: BTreeMap<(usize, usize), u32> =
                mg.edges().map(|(u, v, m)| ((u, v), m)).collect();
            assert_eq!(consumed, expected);
            let circuit_weight: f64 = circuit
                .windows(2)
                .map(|pair| m.weight(pair[0], pair[1]))
                .sum();
            assert!((circuit_weight - mg.weight()).abs() <= crate::fp_tolerance(mg.weight()));
        }
    }

    #[test]
    fn odd_degree_is_rejected() {
        let tree = crate::mst::SpanningTree::test_tree(vec![(0, 1), (1, 2)], 2.0);
        let matching = crate::matching::Matching::test_matching(vec![], 0.0);
        let mg = union_multigraph(&tree, &matching, &triangle());
        assert!(matches!(
            eulerian_circuit(&mg, 0),
            Err(Error::NoEulerianCircuit { .. })
        ));
    }
}
