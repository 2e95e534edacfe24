//! Exact desk-scale reference solvers.
//!
//! [`exact_tsp`] is dynamic programming over (visited subset, endpoint)
//! states, feasible up to n = 16. [`exact_tsp_brute`] enumerates all
//! (n-1)!/2 tours up to n = 9 and exists to cross-check the DP.
//! [`problem_b_lower_bound`] is the optimal covering-walk weight of a
//! connected graph, obtained as the exact tour optimum of its shortest-path
//! closure; [`min_covering_walk_weight`] searches (vertex, visited-set)
//! states directly in the source graph and is the independent check for that
//! equality at tiny n.

use crate::closure::metric_closure;
use crate::error::Error;
use crate::instance::{GeneralInstance, MetricInstance, Tour};

pub const EXACT_TSP_LIMIT: usize = 16;
pub const BRUTE_LIMIT: usize = 9;

/// Globally minimum tour by Held-Karp dynamic programming, O(2^n * n^2).
///
/// The returned tour is canonically oriented: it starts at vertex 0 and its
/// second vertex is the smaller of 0's two tour neighbors. Ties inside the DP
/// prefer the smaller predecessor, so the result is deterministic.
pub fn exact_tsp(instance: &MetricInstance) -> Result<Tour, Error> {
    let n = instance.n();
    if n > EXACT_TSP_LIMIT {
        return Err(Error::Capacity {
            n,
            limit: EXACT_TSP_LIMIT,
        });
    }
    // Bit v of a mask stands for vertex v+1; vertex 0 is the fixed start.
    let m = n - 1;
    let full: usize = (1 << m) - 1;
    let mut dp = vec![f64::INFINITY; (full + 1) * m];
    let mut parent = vec![u8::MAX; (full + 1) * m];
    for v in 0..m {
        dp[(1 << v) * m + v] = instance.weight(0, v + 1);
    }
    for mask in 1..=full {
        for last in 0..m {
            if mask & (1 << last) == 0 {
                continue;
            }
            let cur = dp[mask * m + last];
            if !cur.is_finite() {
                continue;
            }
            let rest = full & !mask;
            let mut bits = rest;
            while bits != 0 {
                let next = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let nmask = mask | (1 << next);
                let cand = cur + instance.weight(last + 1, next + 1);
                if cand < dp[nmask * m + next] {
                    dp[nmask * m + next] = cand;
                    parent[nmask * m + next] = last as u8;
                }
            }
        }
    }
    let mut best = f64::INFINITY;
    let mut best_last = usize::MAX;
    for last in 0..m {
        let cand = dp[full * m + last] + instance.weight(last + 1, 0);
        if cand < best {
            best = cand;
            best_last = last;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    let mut last = best_last;
    while mask != 0 {
        order.push(last + 1);
        let p = parent[mask * m + last];
        mask &= !(1 << last);
        if mask == 0 {
            break;
        }
        last = p as usize;
    }
    order.push(0);
    order.reverse();
    canonicalize_orientation(&mut order);
    Tour::new(order, instance)
}

/// Rotate/flip so the tour starts at 0 with the smaller neighbor second.
fn canonicalize_orientation(order: &mut [usize]) {
    debug_assert_eq!(order[0], 0);
    let n = order.len();
    if n >= 3 && order[n - 1] < order[1] {
        order[1..].reverse();
    }
}

/// Minimum over all (n-1)!/2 tours by lexicographic enumeration; the
/// cross-oracle for [`exact_tsp`].
pub fn exact_tsp_brute(instance: &MetricInstance) -> Result<Tour, Error> {
    let n = instance.n();
    if n > BRUTE_LIMIT {
        return Err(Error::Capacity { n, limit: BRUTE_LIMIT });
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    order.push(0);
    let mut remaining: Vec<usize> = (1..n).collect();
    let mut best_weight = f64::INFINITY;
    let mut best_order: Vec<usize> = Vec::new();
    permute(
        instance,
        &mut order,
        &mut remaining,
        &mut best_weight,
        &mut best_order,
    );
    let mut best_order = best_order;
    canonicalize_orientation(&mut best_order);
    Tour::new(best_order, instance)
}

fn permute(
    instance: &MetricInstance,
    order: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    best_weight: &mut f64,
    best_order: &mut Vec<usize>,
) {
    if remaining.is_empty() {
        let n = order.len();
        // Each undirected tour appears twice; keep the orientation with the
        // smaller second vertex.
        if order[1] > order[n - 1] {
            return;
        }
        let weight = crate::instance::cycle_weight(order, instance);
        if weight < *best_weight {
            *best_weight = weight;
            *best_order = order.clone();
        }
        return;
    }
    for idx in 0..remaining.len() {
        let v = remaining.remove(idx);
        order.push(v);
        permute(instance, order, remaining, best_weight, best_order);
        order.pop();
        remaining.insert(idx, v);
    }
}

/// Optimal covering-walk weight of a connected graph: the exact tour optimum
/// of its shortest-path closure. The two quantities coincide because any
/// covering walk shortcuts to a closure tour of no greater weight, and any
/// closure tour expands to a covering walk of equal weight.
pub fn problem_b_lower_bound(graph: &GeneralInstance) -> Result<f64, Error> {
    let closure = metric_closure(graph)?;
    Ok(exact_tsp(closure.metric())?.weight())
}

/// Exact minimum weight of a closed walk visiting all vertices, by Dijkstra
/// over (vertex, visited-set) states in the source graph. States heavier than
/// `bound` (plus tolerance) are pruned, which keeps the search finite; pass
/// the closure-tour optimum as the bound. Returns infinity if no covering
/// walk within the bound exists, which would falsify the bound itself.
pub fn min_covering_walk_weight(graph: &GeneralInstance, bound: f64) -> Result<f64, Error> {
    let n = graph.n();
    if n > EXACT_TSP_LIMIT {
        return Err(Error::Capacity {
            n,
            limit: EXACT_TSP_LIMIT,
        });
    }
    let full: u32 = (1 << n) - 1;
    let cutoff = bound + crate::fp_tolerance(bound);
    let mut dist = vec![f64::INFINITY; (full as usize + 1) * n];
    let start_state = (1usize << 0) * n;
    dist[start_state] = 0.0;

    #[derive(PartialEq)]
    struct State {
        cost: f64,
        v: usize,
        mask: u32,
    }
    impl Eq for State {}
    impl Ord for State {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            // Min-heap on cost; tie-break for determinism.
            other
                .cost
                .total_cmp(&self.cost)
                .then_with(|| other.v.cmp(&self.v))
                .then_with(|| other.mask.cmp(&self.mask))
        }
    }
    impl PartialOrd for State {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }

    let mut heap = std::collections::BinaryHeap::new();
    heap.push(State {
        cost: 0.0,
        v: 0,
        mask: 1,
    });
    while let Some(State { cost, v, mask }) = heap.pop() {
        let key = mask as usize * n + v;
        if cost > dist[key] {
            continue;
        }
        if mask == full && v == 0 {
            return Ok(cost);
        }
        for &(u, w) in graph.neighbors(v) {
            let nmask = mask | (1 << u);
            let ncost = cost + w;
            if ncost > cutoff {
                continue;
            }
            let nkey = nmask as usize * n + u;
            if ncost < dist[nkey] {
                dist[nkey] = ncost;
                heap.push(State {
                    cost: ncost,
                    v: u,
                    mask: nmask,
                });
            }
        }
    }
    Ok(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn instance(weights: &[&[f64]]) -> MetricInstance {
        MetricInstance::new(weights.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triangle_is_forced() {
        let m = instance(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
        let t = exact_tsp(&m).unwrap();
        assert_eq!(t.weight(), 3.0);
        assert_eq!(t.order(), &[0, 1, 2]);
        let b = exact_tsp_brute(&m).unwrap();
        assert_eq!(b.weight(), 3.0);
    }

    #[test]
    fn unit_four_cycle_beats_the_diagonals() {
        let m = instance(&[
            &[0.0, 1.0, 2.0, 1.0],
            &[1.0, 0.0, 1.0, 2.0],
            &[2.0, 1.0, 0.0, 1.0],
            &[1.0, 2.0, 1.0, 0.0],
        ]);
        let t = exact_tsp(&m).unwrap();
        assert_eq!(t.weight(), 4.0);
        assert_eq!(t.order(), &[0, 1, 2, 3]);
        let b = exact_tsp_brute(&m).unwrap();
        assert_eq!(b.weight(), 4.0);
        assert_eq!(b.order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn dp_agrees_with_brute_force_at_n9() {
        let m = crate::corpus::euclidean_unit_square(9, 3).unwrap();
        let dp = exact_tsp(&m).unwrap();
        let brute = exact_tsp_brute(&m).unwrap();
        assert!((dp.weight() - brute.weight()).abs() <= crate::fp_tolerance(brute.weight()));
        assert_eq!(dp.order(), brute.order());
    }

    #[test]
    fn capacity_limits_are_reported() {
        let m = crate::corpus::euclidean_unit_square(17, 0).unwrap();
        assert!(matches!(
            exact_tsp(&m),
            Err(Error::Capacity { n: 17, limit: 16 })
        ));
        let m = crate::corpus::euclidean_unit_square(10, 0).unwrap();
        assert!(matches!(
            exact_tsp_brute(&m),
            Err(Error::Capacity { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn canonical_orientation_starts_low() {
        for seed in 0..10 {
            let m = crate::corpus::euclidean_unit_square(7, 40 + seed).unwrap();
            let t = exact_tsp(&m).unwrap();
            assert_eq!(t.order()[0], 0);
            assert!(t.order()[1] < t.order()[6]);
        }
    }

    #[test]
    fn path_graph_lower_bound_is_double_the_path() {
        let g = GeneralInstance::new(3, vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let bound = problem_b_lower_bound(&g).unwrap();
        assert_eq!(bound, 4.0);
        let direct = min_covering_walk_weight(&g, bound).unwrap();
        assert_eq!(direct, 4.0);
    }

    #[test]
    fn unit_triangle_lower_bound() {
        let g = GeneralInstance::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        assert_eq!(problem_b_lower_bound(&g).unwrap(), 3.0);
    }

    #[test]
    fn covering_walk_search_confirms_closure_optimum() {
        let g = crate::corpus::random_connected_graph(7, 11).unwrap();
        let bound = problem_b_lower_bound(&g).unwrap();
        let direct = min_covering_walk_weight(&g, bound).unwrap();
        assert!(
            (bound - direct).abs() <= crate::fp_tolerance(bound),
            "closure optimum {bound} vs direct search {direct}"
        );
    }

    #[test]
    fn exact_tour_dominates_spanning_tree() {
        for seed in 0..20 {
            let n = 5 + (seed as usize % 10);
            let m = crate::corpus::euclidean_unit_square(n, 600 + seed).unwrap();
            let tree = crate::mst::minimum_spanning_tree(&m);
            let tour = exact_tsp(&m).unwrap();
            assert!(tour.weight() >= tree.weight());
        }
    }
}
