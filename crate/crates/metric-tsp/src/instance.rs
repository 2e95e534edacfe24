//! Graph data model and validation.
//!
//! [`MetricInstance`] is a complete undirected graph given by a symmetric
//! positive weight matrix; everything downstream consumes it. A
//! [`GeneralInstance`] is an arbitrary connected weighted graph and is the
//! input for covering-walk solving. [`Tour`] and [`Walk`] are the two
//! solution shapes: a Hamiltonian cycle as a vertex permutation, and a closed
//! vertex sequence that may repeat vertices and edges.

use serde::Serialize;

use crate::error::Error;

/// One violated triangle: `weights[i][k] > weights[i][j] + weights[j][k]`
/// beyond tolerance, i.e. the direct edge (i,k) is longer than the detour
/// through j. `deficit` is the amount by which the inequality fails.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub deficit: f64,
}

/// Structural checks shared by every square-matrix entry point: squareness,
/// symmetry, zero diagonal, positive finite off-diagonal entries.
fn check_matrix_shape(weights: &[Vec<f64>]) -> Result<(), Error> {
    let n = weights.len();
    for (row, r) in weights.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquareMatrix {
                row,
                expected: n,
                got: r.len(),
            });
        }
    }
    for i in 0..n {
        if weights[i][i] != 0.0 {
            return Err(Error::NonzeroDiagonal {
                i,
                weight: weights[i][i],
            });
        }
        for j in (i + 1)..n {
            let w = weights[i][j];
            if weights[j][i] != w {
                return Err(Error::AsymmetricWeight {
                    i,
                    j,
                    forward: w,
                    backward: weights[j][i],
                });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::NonpositiveWeight { i, j, weight: w });
            }
        }
    }
    Ok(())
}

/// Report every triangle-inequality violation of a square weight matrix.
///
/// A triple (i,j,k) with i < k and j distinct from both is reported when
/// `weights[i][k] > weights[i][j] + weights[j][k] + tau`; the symmetric twin
/// (k,j,i) is not repeated. Violations come back sorted lexicographically by
/// (i, j, k). Structural problems (non-square, asymmetric, nonpositive) are
/// errors, not violations.
pub fn validate_metric(weights: &[Vec<f64>], tau: f64) -> Result<Vec<MetricViolation>, Error> {
    check_matrix_shape(weights)?;
    let n = weights.len();
    if n < 3 {
        return Err(Error::TooFewVertices { n });
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if j == i {
                continue;
            }
            for k in (i + 1)..n {
                if k == j {
                    continue;
                }
                let deficit = weights[i][k] - (weights[i][j] + weights[j][k]);
                if deficit > tau {
                    out.push(MetricViolation { i, j, k, deficit });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.i, a.j, a.k).cmp(&(b.i, b.j, b.k)));
    Ok(out)
}

/// Complete undirected graph on `n >= 3` vertices with a symmetric positive
/// weight matrix. Immutable after construction; the diagonal is zero and
/// never read.
///
/// Construction checks shape, symmetry and positivity but not the triangle
/// inequality: near-metric inputs (e.g. rounded coordinate instances) must be
/// representable so that callers can validate explicitly or waive.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricInstance {
    n: usize,
    weights: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl MetricInstance {
    pub fn new(weights: Vec<Vec<f64>>) -> Result<Self, Error> {
        check_matrix_shape(&weights)?;
        let n = weights.len();
        if n < 3 {
            return Err(Error::TooFewVertices { n });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &weights {
            flat.extend_from_slice(row);
        }
        Ok(Self {
            n,
            weights: flat,
            labels: None,
        })
    }

    /// Build from a row-major flat matrix; used by generators that never
    /// materialize nested rows.
    pub fn from_flat(n: usize, weights: Vec<f64>) -> Result<Self, Error> {
        if weights.len() != n * n {
            return Err(Error::NonSquareMatrix {
                row: 0,
                expected: n,
                got: weights.len() / n.max(1),
            });
        }
        let rows: Vec<Vec<f64>> = (0..n).map(|i| weights[i * n..(i + 1) * n].to_vec()).collect();
        Self::new(rows)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.n {
            return Err(Error::NonSquareMatrix {
                row: 0,
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn max_weight(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m = m.max(self.weight(i, j));
            }
        }
        m
    }

    /// Default triangle-inequality tolerance: 1e-9 relative to the largest
    /// weight. Rounded coordinate instances can carry violations of a few
    /// ulps; exact-real inputs are far away from this threshold either way.
    pub fn default_metric_tolerance(&self) -> f64 {
        1e-9 * self.max_weight()
    }

    /// All triangle violations at tolerance `tau` (see [`validate_metric`]).
    pub fn metric_violations(&self, tau: f64) -> Vec<MetricViolation> {
        let rows: Vec<Vec<f64>> = (0..self.n)
            .map(|i| self.weights[i * self.n..(i + 1) * self.n].to_vec())
            .collect();
        validate_metric(&rows, tau).expect("constructed instance is structurally valid")
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.weights[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

/// Arbitrary connected weighted graph. Edges are undirected, stored with the
/// smaller endpoint first, deduplicated and sorted; weights are positive and
/// finite; connectivity is checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralInstance {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl GeneralInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::TooFewVertices { n });
        }
        let mut normalized: Vec<(usize, usize, f64)> = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { v: u.max(v), n });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::NonpositiveWeight { i: u, j: v, weight: w });
            }
            normalized.push((u.min(v), u.max(v), w));
        }
        normalized.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for pair in normalized.windows(2) {
            if (pair[0].0, pair[0].1) == (pair[1].0, pair[1].1) {
                return Err(Error::DuplicateEdge {
                    u: pair[0].0,
                    v: pair[0].1,
                });
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v, w) in &normalized {
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        for adj in &mut adjacency {
            adj.sort_by(|a, b| a.0.cmp(&b.0));
        }
        let g = Self {
            n,
            edges: normalized,
            adjacency,
        };
        if let Some(unreached) = g.first_unreachable(0) {
            return Err(Error::Disconnected {
                from: 0,
                to: unreached,
            });
        }
        Ok(g)
    }

    fn first_unreachable(&self, start: usize) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adjacency[v]
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<f64> {
        self.adjacency[u]
            .binary_search_by(|probe| probe.0.cmp(&v))
            .ok()
            .map(|idx| self.adjacency[u][idx].1)
    }
}

/// Pairwise-weight lookup shared by walk-weight computations over complete
/// and sparse graphs.
pub trait EdgeLookup {
    fn lookup(&self, u: usize, v: usize) -> Result<f64, Error>;
}

impl EdgeLookup for MetricInstance {
    fn lookup(&self, u: usize, v: usize) -> Result<f64, Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { v: u.max(v), n: self.n });
        }
        Ok(self.weight(u, v))
    }
}

impl EdgeLookup for GeneralInstance {
    fn lookup(&self, u: usize, v: usize) -> Result<f64, Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { v: u.max(v), n: self.n });
        }
        self.edge_weight(u, v).ok_or(Error::EdgeAbsent { u, v })
    }
}

/// Hamiltonian cycle as a vertex permutation with its cached cycle weight.
/// The weight is the canonical left-to-right sum over consecutive pairs
/// including the closing edge, so recomputation reproduces it bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct Tour {
    order: Vec<usize>,
    weight: f64,
}

impl Tour {
    pub fn new(order: Vec<usize>, instance: &MetricInstance) -> Result<Self, Error> {
        let n = instance.n();
        let mut counts = vec![0usize; n];
        for &v in &order {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            counts[v] += 1;
        }
        if order.len() != n {
            if let Some(v) = counts.iter().position(|&c| c == 0) {
                return Err(Error::MissingVertex { v });
            }
        }
        for (v, &c) in counts.iter().enumerate() {
            if c != 1 {
                return Err(Error::NotPermutation { v, count: c });
            }
        }
        let weight = cycle_weight(&order, instance);
        Ok(Self { order, weight })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// Canonical tour weight: left-to-right over `order`, closing edge last.
pub(crate) fn cycle_weight(order: &[usize], instance: &MetricInstance) -> f64 {
    let mut total = 0.0;
    for i in 0..order.len() {
        let a = order[i];
        let b = order[(i + 1) % order.len()];
        total += instance.weight(a, b);
    }
    total
}

/// Closed vertex sequence (first = last) with edge repetitions counted in the
/// weight. Validity against a particular graph is established at
/// construction through [`EdgeLookup`].
#[derive(Debug, Clone, PartialEq)]
pub struct Walk {
    sequence: Vec<usize>,
    weight: f64,
}

impl Walk {
    pub fn new<G: EdgeLookup>(sequence: Vec<usize>, graph: &G) -> Result<Self, Error> {
        if sequence.len() < 2 {
            return Err(Error::EmptyWalk);
        }
        let first = sequence[0];
        let last = *sequence.last().expect("nonempty");
        if first != last {
            return Err(Error::OpenWalk { first, last });
        }
        let mut weight = 0.0;
        for pair in sequence.windows(2) {
            weight += graph.lookup(pair[0], pair[1])?;
        }
        Ok(Self { sequence, weight })
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// True when every vertex of 0..n appears in the sequence.
    pub fn covers_all(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for &v in &self.sequence {
            if v < n {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}
