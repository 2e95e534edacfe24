//! Minimum-weight perfect matching on the complete subgraph induced by the
//! odd-degree vertices.
//!
//! The production matcher is a primal-dual blossom algorithm
//! ([`min_weight_perfect_matching`]); [`oracle_perfect_matching`] is an
//! independent subset-DP solver used by tests to check it, and
//! [`max_weight_transform`] is the classical reduction that turns the
//! minimization problem into maximum-weight matching. The transform is kept
//! off the hot path: the blossom solves the minimization directly, and the
//! transform is cross-checked through the DP oracle instead.

mod blossom;

use crate::error::Error;
use crate::instance::MetricInstance;
use crate::mst::OddSet;

/// Complete subgraph induced by a vertex subset, carrying both the original
/// vertex ids and the induced weight submatrix in their sorted order.
#[derive(Debug, Clone, PartialEq)]
pub struct SubInstance {
    original_ids: Vec<usize>,
    weights: Vec<f64>,
}

impl SubInstance {
    pub fn from_parts(original_ids: Vec<usize>, weights: Vec<f64>) -> Result<Self, Error> {
        let k = original_ids.len();
        if k < 2 || k % 2 != 0 {
            return Err(Error::defect(format!(
                "subinstance must have a positive even vertex count, got {k}"
            )));
        }
        if weights.len() != k * k {
            return Err(Error::defect("subinstance weight matrix has wrong size"));
        }
        Ok(Self {
            original_ids,
            weights,
        })
    }

    pub fn size(&self) -> usize {
        self.original_ids.len()
    }

    pub fn original_ids(&self) -> &[usize] {
        &self.original_ids
    }

    /// Induced weight between local indices `a` and `b`.
    #[inline]
    pub fn weight(&self, a: usize, b: usize) -> f64 {
        self.weights[a * self.size() + b]
    }

    /// View the subinstance as a standalone complete instance (needs >= 3
    /// vertices); used when running tour oracles on the induced subgraph.
    pub fn to_metric(&self) -> Result<MetricInstance, Error> {
        MetricInstance::from_flat(self.size(), self.weights.clone())
    }
}

/// Project the parent instance onto the odd set. The set comes from a
/// spanning tree, so an odd cardinality can only mean a bug upstream.
pub fn induce_subgraph(parent: &MetricInstance, odd: &OddSet) -> Result<SubInstance, Error> {
    let ids = odd.vertices().to_vec();
    let k = ids.len();
    if k == 0 || k % 2 != 0 {
        return Err(Error::defect(format!(
            "odd-degree set has cardinality {k}; the handshake lemma guarantees an even count"
        )));
    }
    let mut weights = vec![0.0; k * k];
    for a in 0..k {
        for b in 0..k {
            if a != b {
                weights[a * k + b] = parent.weight(ids[a], ids[b]);
            }
        }
    }
    SubInstance::from_parts(ids, weights)
}

/// The reduction from minimum- to maximum-weight matching: replace every
/// weight by `2a - w` where `a` is the largest induced weight. All perfect
/// matchings have the same cardinality, so the argmin under `w` is the argmax
/// under the transform, and every transformed weight stays positive.
pub fn max_weight_transform(sub: &SubInstance) -> (Vec<f64>, f64) {
    let k = sub.size();
    let mut a = 0.0f64;
    for i in 0..k {
        for j in (i + 1)..k {
            a = a.max(sub.weight(i, j));
        }
    }
    let mut transformed = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                transformed[i * k + j] = 2.0 * a - sub.weight(i, j);
            }
        }
    }
    (transformed, a)
}

/// Perfect matching as disjoint vertex pairs in original ids, smaller id
/// first, sorted; weight is the left-to-right sum of pair weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    weight: f64,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

#[cfg(test)]
impl Matching {
    pub(crate) fn test_matching(pairs: Vec<(usize, usize)>, weight: f64) -> Self {
        Self { pairs, weight }
    }
}

fn matching_from_mate(sub: &SubInstance, mate: &[usize]) -> Matching {
    let mut pairs = Vec::with_capacity(sub.size() / 2);
    for v in 0..sub.size() {
        let m = mate[v];
        if v < m {
            pairs.push((sub.original_ids[v], sub.original_ids[m]));
        }
    }
    pairs.sort_unstable();
    // original_ids are sorted, so local order and id order agree; recompute
    // the weight over the sorted pair list to keep it canonical.
    let id_to_local: std::collections::HashMap<usize, usize> = sub
        .original_ids
        .iter()
        .enumerate()
        .map(|(local, &id)| (id, local))
        .collect();
    let weight = pairs
        .iter()
        .map(|&(x, y)| sub.weight(id_to_local[&x], id_to_local[&y]))
        .sum();
    Matching { pairs, weight }
}

/// Minimum-weight perfect matching via the primal-dual blossom method.
/// The subinstance is complete with an even vertex count, so a perfect
/// matching always exists.
pub fn min_weight_perfect_matching(sub: &SubInstance) -> Matching {
    let mate = blossom::min_weight_perfect_mate(sub.size(), |a, b| sub.weight(a, b));
    matching_from_mate(sub, &mate)
}

/// Exact minimum-weight perfect matching by dynamic programming over vertex
/// subsets, O(2^k * k^2). Independent of the blossom implementation; capped
/// at k = 20 vertices.
pub fn oracle_perfect_matching(sub: &SubInstance) -> Result<Matching, Error> {
    let k = sub.size();
    if k > 20 {
        return Err(Error::Capacity { n: k, limit: 20 });
    }
    let full: usize = (1 << k) - 1;
    let mut dp = vec![f64::INFINITY; full + 1];
    dp[0] = 0.0;
    for mask in 1..=full {
        if (mask as u32).count_ones() % 2 != 0 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        let mut best = f64::INFINITY;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let candidate = dp[rest & !(1 << j)] + sub.weight(i, j);
            if candidate < best {
                best = candidate;
            }
        }
        dp[mask] = best;
    }
    // Reconstruct, preferring the smallest partner on exact ties.
    let mut mate = vec![usize::MAX; k];
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        let mut chosen = usize::MAX;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if dp[rest & !(1 << j)] + sub.weight(i, j) == dp[mask] {
                chosen = j;
                break;
            }
        }
        if chosen == usize::MAX {
            return Err(Error::defect("matching DP reconstruction failed"));
        }
        mate[i] = chosen;
        mate[chosen] = i;
        mask = rest & !(1 << chosen);
    }
    Ok(matching_from_mate(sub, &mate))
}
