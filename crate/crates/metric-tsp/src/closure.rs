//! Shortest-path closure of a connected graph and walk re-expansion.
//!
//! The closure of a connected graph is the complete graph on the same
//! vertices whose weight for (i,j) is the shortest-path distance; it always
//! satisfies the triangle inequality, which is what lets covering-walk
//! instances be solved as tour instances and re-expanded afterwards.

use crate::error::Error;
use crate::instance::{GeneralInstance, MetricInstance, Tour, Walk};

/// A [`MetricInstance`] of shortest-path distances together with the
/// predecessor table and source graph needed to reconstruct one witness path
/// per vertex pair.
#[derive(Debug, Clone)]
pub struct MetricClosure {
    metric: MetricInstance,
    /// `pred[s * n + v]` is the predecessor of `v` on the chosen shortest
    /// path from `s`; `pred[s * n + s] == s`.
    pred: Vec<usize>,
    source: GeneralInstance,
}

impl MetricClosure {
    pub fn metric(&self) -> &MetricInstance {
        &self.metric
    }

    pub fn source(&self) -> &GeneralInstance {
        &self.source
    }

    /// The witness shortest path from `s` to `t`, inclusive of both ends.
    /// Every consecutive pair is an edge of the source graph.
    pub fn path(&self, s: usize, t: usize) -> Vec<usize> {
        let n = self.source.n();
        let mut rev = vec![t];
        let mut v = t;
        while v != s {
            v = self.pred[s * n + v];
            rev.push(v);
        }
        rev.reverse();
        rev
    }
}

/// All-pairs shortest paths by one Dijkstra run per source, dense O(n^2) per
/// run. Ties are broken toward the lexicographically smallest predecessor and
/// the smallest-index unvisited vertex, so witness paths are deterministic.
pub fn metric_closure(g: &GeneralInstance) -> Result<MetricClosure, Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n });
    }
    let mut dist = vec![0.0f64; n * n];
    let mut pred = vec![usize::MAX; n * n];
    for s in 0..n {
        let (d, p) = dijkstra(g, s);
        for v in 0..n {
            if d[v].is_infinite() {
                // Unreachable pairs cannot occur: connectivity is a
                // construction invariant of GeneralInstance.
                return Err(Error::Disconnected { from: s, to: v });
            }
            dist[s * n + v] = d[v];
            pred[s * n + v] = p[v];
        }
    }
    // Runs from different sources add the same path weights in different
    // orders and can disagree in the last ulp; mirror the smaller source's
    // value so the matrix is exactly symmetric.
    for s in 0..n {
        for v in (s + 1)..n {
            dist[v * n + s] = dist[s * n + v];
        }
    }
    let rows: Vec<Vec<f64>> = (0..n).map(|s| dist[s * n..(s + 1) * n].to_vec()).collect();
    let metric = MetricInstance::new(rows)?;
    Ok(MetricClosure {
        metric,
        pred,
        source: g.clone(),
    })
}

fn dijkstra(g: &GeneralInstance, source: usize) -> (Vec<f64>, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut pred = vec![usize::MAX; n];
    let mut done = vec![false; n];
    dist[source] = 0.0;
    pred[source] = source;
    for _ in 0..n {
        let mut u = usize::MAX;
        let mut best = f64::INFINITY;
        for v in 0..n {
            if !done[v] && dist[v] < best {
                best = dist[v];
                u = v;
            }
        }
        if u == usize::MAX {
            break;
        }
        done[u] = true;
        for &(v, w) in g.neighbors(u) {
            if done[v] {
                continue;
            }
            let candidate = dist[u] + w;
            if candidate < dist[v] || (candidate == dist[v] && u < pred[v]) {
                dist[v] = candidate;
                pred[v] = u;
            }
        }
    }
    (dist, pred)
}

/// Replace each tour edge by the closure's witness shortest path, producing a
/// closed walk in the source graph of the same total weight (identical
/// addends, reassociated).
pub fn expand_walk(tour: &Tour, closure: &MetricClosure) -> Result<Walk, Error> {
    let order = tour.order();
    let mut sequence = vec![order[0]];
    for i in 0..order.len() {
        let a = order[i];
        let b = order[(i + 1) % order.len()];
        let segment = closure.path(a, b);
        sequence.extend_from_slice(&segment[1..]);
    }
    let walk = Walk::new(sequence, closure.source())?;
    debug_assert!(
        (walk.weight() - tour.weight()).abs() <= crate::fp_tolerance(tour.weight()),
        "expanded walk weight {} drifted from tour weight {}",
        walk.weight(),
        tour.weight()
    );
    Ok(walk)
}
