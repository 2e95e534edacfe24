//! Seeded instance generators for tests, experiments and benchmarks.
//!
//! Everything here is deterministic per (family, n, seed): the RNG is a
//! fixed-algorithm stream cipher, so corpora are reproducible across runs and
//! platforms. The euclidean family is metric by construction (exact double
//! distances of points in the unit square); the closure family runs a random
//! connected sparse graph through its shortest-path closure, which is metric
//! by construction as well.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closure::metric_closure;
use crate::error::Error;
use crate::instance::{GeneralInstance, MetricInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFamily {
    /// n points drawn uniformly from the unit square, exact distances.
    EuclideanUnitSquare,
    /// Shortest-path closure of a random connected sparse graph.
    RandomMetricClosure,
    /// The random connected sparse graph itself (covering-walk input).
    RandomGraph,
}

impl InstanceFamily {
    pub fn name(&self) -> &'static str {
        match self {
            InstanceFamily::EuclideanUnitSquare => "euclidean-unit-square",
            InstanceFamily::RandomMetricClosure => "random-metric-closure",
            InstanceFamily::RandomGraph => "random-graph",
        }
    }
}

impl std::str::FromStr for InstanceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "euclidean-unit-square" => Ok(InstanceFamily::EuclideanUnitSquare),
            "random-metric-closure" => Ok(InstanceFamily::RandomMetricClosure),
            "random-graph" => Ok(InstanceFamily::RandomGraph),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl std::fmt::Display for InstanceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Either solution-space shape an instance family can produce.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratedInstance {
    Metric(MetricInstance),
    General(GeneralInstance),
}

pub fn generate(family: InstanceFamily, n: usize, seed: u64) -> Result<GeneratedInstance, Error> {
    match family {
        InstanceFamily::EuclideanUnitSquare => {
            euclidean_unit_square(n, seed).map(GeneratedInstance::Metric)
        }
        InstanceFamily::RandomMetricClosure => {
            random_metric_closure(n, seed).map(GeneratedInstance::Metric)
        }
        InstanceFamily::RandomGraph => random_connected_graph(n, seed).map(GeneratedInstance::General),
    }
}

/// The per-trial seed schedule used by experiments and the acceptance
/// corpora: a splitmix64 mix of base seed, instance size and trial index.
pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    splitmix64(
        base ^ (n as u64).wrapping_shl(40) ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
    )
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn euclidean_points(n: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect()
}

pub fn euclidean_unit_square(n: usize, seed: u64) -> Result<MetricInstance, Error> {
    if n < 3 {
        return Err(Error::TooFewVertices { n });
    }
    let points = euclidean_points(n, seed);
    metric_from_points(&points)
}

pub fn metric_from_points(points: &[(f64, f64)]) -> Result<MetricInstance, Error> {
    let n = points.len();
    let mut flat = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            let d = (dx * dx + dy * dy).sqrt();
            flat[i * n + j] = d;
            flat[j * n + i] = d;
        }
    }
    MetricInstance::from_flat(n, flat)
}

/// Random connected sparse graph: a random attachment tree plus about n/2
/// extra edges, weights uniform in (0,1].
pub fn random_connected_graph(n: usize, seed: u64) -> Result<GeneralInstance, Error> {
    if n < 3 {
        return Err(Error::TooFewVertices { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    let add = |edges: &mut Vec<(usize, usize, f64)>,
                   present: &mut Vec<bool>,
                   u: usize,
                   v: usize,
                   w: f64| {
        present[u * n + v] = true;
        present[v * n + u] = true;
        edges.push((u, v, w));
    };
    for v in 1..n {
        let u = rng.random_range(0..v);
        let w = 1.0 - rng.random::<f64>();
        add(&mut edges, &mut present, u, v, w);
    }
    let extra_target = n / 2;
    let mut added = 0;
    for _ in 0..4 * n {
        if added >= extra_target {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || present[u * n + v] {
            continue;
        }
        let w = 1.0 - rng.random::<f64>();
        add(&mut edges, &mut present, u, v, w);
        added += 1;
    }
    GeneralInstance::new(n, edges)
}

pub fn random_metric_closure(n: usize, seed: u64) -> Result<MetricInstance, Error> {
    let graph = random_connected_graph(n, seed)?;
    Ok(metric_closure(&graph)?.metric().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let a = euclidean_unit_square(5, 0).unwrap();
        let b = euclidean_unit_square(5, 0).unwrap();
        assert_eq!(a, b);
        let g1 = random_connected_graph(8, 17).unwrap();
        let g2 = random_connected_graph(8, 17).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn generated_metric_instances_validate() {
        for seed in 0..30 {
            let n = 4 + (seed as usize % 9);
            let e = euclidean_unit_square(n, seed).unwrap();
            assert!(e.metric_violations(crate::fp_tolerance(1.0)).is_empty());
            let c = random_metric_closure(n, seed).unwrap();
            assert!(c.metric_violations(crate::fp_tolerance(1.0)).is_empty());
        }
    }

    #[test]
    fn closure_family_matches_closure_of_persisted_graph() {
        let graph = random_connected_graph(6, 1).unwrap();
        let direct = random_metric_closure(6, 1).unwrap();
        let recomputed = metric_closure(&graph).unwrap();
        assert_eq!(&direct, recomputed.metric());
    }

    #[test]
    fn trial_seeds_spread() {
        let mut seen = std::collections::HashSet::new();
        for n in 4..=12 {
            for t in 0..50 {
                seen.insert(trial_seed(42, n, t));
            }
        }
        assert_eq!(seen.len(), 9 * 50);
    }

    #[test]
    fn unknown_family_is_an_input_error() {
        let err = "hexagonal".parse::<InstanceFamily>().unwrap_err();
        assert!(matches!(err, Error::UnknownFamily(_)));
    }
}
