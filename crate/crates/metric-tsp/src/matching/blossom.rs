// Minimum-weight perfect matching in a complete graph with an even number of
// vertices, by the primal-dual "blossom" method (Edmonds' blossom shrinking
// with Galil-style labeling). The data-structure layout follows the widely
// ported van Rantwijk implementation: vertices are trivial blossoms, shrunk
// blossoms take ids n..2n, edge endpoints are numbered 2e and 2e+1, and
// per-blossom least-slack edge lists make each dual adjustment O(n).
//
// This solves the minimization problem directly. Duals are kept feasible at
// every step:
//
//   slack(e) = w(e) - y_i - y_j                       (cross-blossom edges)
//   slack with blossoms = slack(e) + sum of z_B over blossoms containing both
//                         endpoints; must stay >= 0, z_B >= 0
//
// A dual adjustment by delta adds delta to y on S-vertices, subtracts it on
// T-vertices, adds 2*delta to z on top-level S-blossoms and subtracts 2*delta
// on top-level T-blossoms, so
//
//   delta2 = min slack over S-to-free edges,
//   delta3 = min slack/2 over S-to-S edges between distinct top blossoms,
//   delta4 = min z/2 over top-level T-blossoms (expansion when it hits 0).
//
// There is no early-termination delta: the input graph is complete with an
// even vertex count, so a perfect matching exists and every stage must
// augment. Complementary slackness is asserted at termination in debug
// builds, which certifies optimality of the returned matching.

const NONE: usize = usize::MAX;

/// Compute the minimum-weight perfect matching of the complete graph on `n`
/// vertices (n even) and return `mate`, with `mate[v]` the partner of `v`.
pub(crate) fn min_weight_perfect_mate<F>(n: usize, weight: F) -> Vec<usize>
where
    F: Fn(usize, usize) -> f64,
{
    assert!(n % 2 == 0, "perfect matching needs an even vertex count");
    if n == 0 {
        return Vec::new();
    }
    Solver::new(n, weight).solve()
}

struct Solver {
    n: usize,
    edges: Vec<(usize, usize)>,
    wt: Vec<f64>,
    /// Slack at or below this counts as tight. Sits far above the rounding
    /// drift of the dual updates and far below meaningful weight differences.
    eps: f64,
    scale: f64,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<f64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl Solver {
    fn new<F>(n: usize, weight: F) -> Self
    where
        F: Fn(usize, usize) -> f64,
    {
        let nedge = n * (n - 1) / 2;
        let mut edges = Vec::with_capacity(nedge);
        let mut wt = Vec::with_capacity(nedge);
        let mut maxw = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let w = weight(i, j);
                edges.push((i, j));
                wt.push(w);
                maxw = maxw.max(w.abs());
            }
        }
        let endpoint: Vec<usize> = (0..2 * nedge)
            .map(|p| {
                if p % 2 == 0 {
                    edges[p / 2].0
                } else {
                    edges[p / 2].1
                }
            })
            .collect();
        let mut neighbend = vec![Vec::new(); n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            neighbend[i].push(2 * e + 1);
            neighbend[j].push(2 * e);
        }
        // Feasible start: y_v = half the lightest edge at v, so
        // y_i + y_j <= w(i,j) everywhere with equality on locally lightest
        // edges.
        let mut dualvar = vec![f64::INFINITY; n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            let half = 0.5 * wt[e];
            dualvar[i] = dualvar[i].min(half);
            dualvar[j] = dualvar[j].min(half);
        }
        dualvar.extend(std::iter::repeat(0.0).take(n));
        let scale = maxw.max(1.0);
        Solver {
            n,
            edges,
            wt,
            eps: 1e-10 * scale,
            scale,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase: (0..n).chain(std::iter::repeat(NONE).take(n)).collect(),
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![Vec::new(); 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    #[inline]
    fn slack(&self, e: usize) -> f64 {
        let (i, j) = self.edges[e];
        self.wt[e] - self.dualvar[i] - self.dualvar[j]
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(t) = stack.pop() {
            if t < self.n {
                out.push(t);
            } else {
                stack.extend(self.blossomchilds[t].iter().copied());
            }
        }
        out
    }

    /// Python-style index (possibly negative) into a blossom's child list.
    fn child_at(&self, b: usize, j: isize) -> usize {
        let v = &self.blossomchilds[b];
        let idx = if j >= 0 {
            j as usize
        } else {
            (v.len() as isize + j) as usize
        };
        v[idx]
    }

    fn endp_at(&self, b: usize, j: isize) -> usize {
        let v = &self.blossomendps[b];
        let idx = if j >= 0 {
            j as usize
        } else {
            (v.len() as isize + j) as usize
        };
        v[idx]
    }

    /// Assign label `t` (1 = S, 2 = T) to the top-level blossom containing
    /// `w`, reached through remote endpoint `p`.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            // New S-blossom: scan all its vertices.
            let leaves = self.blossom_leaves(b);
            self.queue.extend(leaves);
        } else {
            // New T-blossom: its base's mate becomes an S-vertex. The base is
            // the only vertex of the blossom with an external matched edge.
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            let partner = self.endpoint[mbase];
            self.assign_label(partner, 1, mbase ^ 1);
        }
    }

    /// Trace back from endpoints `v` and `w` of a tight S-S edge. Returns the
    /// base vertex of the new blossom when both paths meet (same tree), or
    /// NONE when they reach distinct roots (augmenting path found).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            debug_assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                // Reached a single vertex (tree root).
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], 2);
                debug_assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Shrink the odd cycle through edge `e` with the given base into a new
    /// S-blossom, relabeling its T-sub-blossoms to S.
    fn add_blossom(&mut self, base: usize, e: usize) {
        let (mut v, mut w) = self.edges[e];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("free blossom id");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;

        let mut childs = Vec::new();
        let mut endps = Vec::new();
        // Walk up from v to the base...
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * e);
        // ...then down from the base to w.
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;

        debug_assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0.0;

        for leaf in self.blossom_leaves(b) {
            if self.label[self.inblossom[leaf]] == 2 {
                // Former T-vertex turns S: schedule a scan.
                self.queue.push(leaf);
            }
            self.inblossom[leaf] = b;
        }

        // Merge least-slack edge lists of the children into the new blossom.
        let mut bestedgeto = vec![NONE; 2 * self.n];
        for child_idx in 0..self.blossomchilds[b].len() {
            let bv = self.blossomchilds[b][child_idx];
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .iter()
                    .map(|&leaf| self.neighbend[leaf].iter().map(|&p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for e2 in nblist {
                    let (i0, j0) = self.edges[e2];
                    let j = if self.inblossom[j0] == b { i0 } else { j0 };
                    let bj = self.inblossom[j];
                    if bj != b && self.label[bj] == 1 {
                        let best = bestedgeto[bj];
                        if best == NONE || self.slack(e2) < self.slack(best) {
                            bestedgeto[bj] = e2;
                        }
                    }
                }
            }
            self.blossombestedges[bv].clear();
            self.bestedge[bv] = NONE;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&e2| e2 != NONE).collect();
        self.bestedge[b] = NONE;
        for idx in 0..self.blossombestedges[b].len() {
            let e2 = self.blossombestedges[b][idx];
            if self.bestedge[b] == NONE || self.slack(e2) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = e2;
            }
        }
    }

    /// Undo a blossom: promote its children to top level. When a T-blossom is
    /// expanded mid-stage (its z reached zero), the alternating path through
    /// it must be relabeled step by step.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for idx in 0..self.blossomchilds[b].len() {
            let s = self.blossomchilds[b][idx];
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] <= self.eps {
                self.expand_blossom(s, endstage);
            } else {
                for leaf in self.blossom_leaves(s) {
                    self.inblossom[leaf] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            debug_assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let len = self.blossomchilds[b].len() as isize;
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&c| c == entrychild)
                .expect("entry child in blossom") as isize;
            let (jstep, endptrick): (isize, usize) = if j & 1 != 0 {
                j -= len;
                (1, 0)
            } else {
                (-1, 1)
            };
            // Walk from the entry to the base, assigning alternating labels.
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = self.endp_at(b, j - endptrick as isize);
                self.label[self.endpoint[q ^ endptrick ^ 1]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                self.allowedge[q / 2] = true;
                j += jstep;
                p = self.endp_at(b, j - endptrick as isize) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // The base keeps label T without stepping through to its mate.
            let bv = self.child_at(b, j);
            let base_vertex = self.endpoint[p ^ 1];
            self.label[base_vertex] = 2;
            self.label[bv] = 2;
            self.labelend[base_vertex] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            // Remaining sub-blossoms keep their labels only if reached from
            // outside; otherwise they become unlabeled.
            j += jstep;
            while self.child_at(b, j) != entrychild {
                let bv = self.child_at(b, j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut reached = NONE;
                for leaf in self.blossom_leaves(bv) {
                    reached = leaf;
                    if self.label[leaf] != 0 {
                        break;
                    }
                }
                if reached != NONE && self.label[reached] != 0 {
                    debug_assert_eq!(self.label[reached], 2);
                    debug_assert_eq!(self.inblossom[reached], bv);
                    self.label[reached] = 0;
                    let base_mate = self.mate[self.blossombase[bv]];
                    self.label[self.endpoint[base_mate]] = 0;
                    let through = self.labelend[reached];
                    self.assign_label(reached, 2, through);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.labelend[b] = NONE;
        self.blossombase[b] = NONE;
        self.bestedge[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombestedges[b].clear();
        self.unusedblossoms.push(b);
    }

    /// Rotate the matching inside blossom `b` so that vertex `v` becomes its
    /// base, rematching along the internal cycle.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b]
            .iter()
            .position(|&c| c == t)
            .expect("sub-blossom present");
        let len = self.blossomchilds[b].len() as isize;
        let mut j = i as isize;
        let (jstep, endptrick): (isize, usize) = if i & 1 != 0 {
            j -= len;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t1 = self.child_at(b, j);
            let p = self.endp_at(b, j - endptrick as isize) ^ endptrick;
            if t1 >= self.n {
                let ep = self.endpoint[p];
                self.augment_blossom(t1, ep);
            }
            j += jstep;
            let t2 = self.child_at(b, j);
            if t2 >= self.n {
                let ep = self.endpoint[p ^ 1];
                self.augment_blossom(t2, ep);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    /// Flip matched and unmatched edges along the augmenting path through the
    /// tight edge `e` between two S-blossoms in different trees.
    fn augment_matching(&mut self, e: usize) {
        let (v, w) = self.edges[e];
        for &(start, start_p) in &[(v, 2 * e + 1), (w, 2 * e)] {
            let mut s = start;
            let mut p = start_p;
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                debug_assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break; // reached a tree root
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                debug_assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn solve(&mut self) -> Vec<usize> {
        for _stage in 0..self.n / 2 {
            for b in 0..2 * self.n {
                self.label[b] = 0;
                self.bestedge[b] = NONE;
            }
            for b in self.n..2 * self.n {
                self.blossombestedges[b].clear();
            }
            for a in self.allowedge.iter_mut() {
                *a = false;
            }
            self.queue.clear();
            for v in 0..self.n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    debug_assert_eq!(self.label[self.inblossom[v]], 1);
                    for idx in 0..self.neighbend[v].len() {
                        let p = self.neighbend[v][idx];
                        let e = p / 2;
                        let u = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[u] {
                            continue;
                        }
                        let mut eslack = 0.0;
                        if !self.allowedge[e] {
                            eslack = self.slack(e);
                            if eslack <= self.eps {
                                self.allowedge[e] = true;
                            }
                        }
                        if self.allowedge[e] {
                            if self.label[self.inblossom[u]] == 0 {
                                // Free blossom: label T; its base's mate turns S.
                                self.assign_label(u, 2, p ^ 1);
                            } else if self.label[self.inblossom[u]] == 1 {
                                // S-S edge: blossom or augmenting path.
                                let base = self.scan_blossom(v, u);
                                if base != NONE {
                                    self.add_blossom(base, e);
                                } else {
                                    self.augment_matching(e);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[u] == 0 {
                                // Vertex inside a T-blossom, first reached now;
                                // remembered for relabeling on expansion.
                                debug_assert_eq!(self.label[self.inblossom[u]], 2);
                                self.label[u] = 2;
                                self.labelend[u] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[u]] == 1 {
                            let bv = self.inblossom[v];
                            if self.bestedge[bv] == NONE
                                || eslack < self.slack(self.bestedge[bv])
                            {
                                self.bestedge[bv] = e;
                            }
                        } else if self.label[u] == 0
                            && (self.bestedge[u] == NONE
                                || eslack < self.slack(self.bestedge[u]))
                        {
                            self.bestedge[u] = e;
                        }
                    }
                    if augmented {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // No augmenting path under the current tight edges: adjust
                // duals until a new edge goes tight or a T-blossom empties.
                let mut deltatype = 0u8;
                let mut delta = f64::INFINITY;
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                for v in 0..self.n {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == 0 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * self.n {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let d = self.slack(self.bestedge[b]) / 2.0;
                        if deltatype == 0 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                    {
                        let d = self.dualvar[b] / 2.0;
                        if deltatype == 0 || d < delta {
                            delta = d;
                            deltatype = 4;
                            deltablossom = b;
                        }
                    }
                }
                assert!(
                    deltatype != 0,
                    "matching search stalled; cannot happen on a complete graph"
                );
                let delta = delta.max(0.0);
                for v in 0..self.n {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] += delta,
                        2 => self.dualvar[v] -= delta,
                        _ => unreachable!("vertex in marked blossom during delta"),
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += 2.0 * delta,
                            2 => self.dualvar[b] -= 2.0 * delta,
                            _ => unreachable!("marked blossom during delta"),
                        }
                    }
                }
                match deltatype {
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (i, j) = self.edges[deltaedge];
                        let v = if self.label[self.inblossom[i]] == 0 { j } else { i };
                        debug_assert_eq!(self.label[self.inblossom[v]], 1);
                        self.queue.push(v);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _) = self.edges[deltaedge];
                        debug_assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    _ => unreachable!(),
                }
            }
            debug_assert!(augmented, "every stage must augment");
            // Expand S-blossoms whose dual fell to zero; blossoms with
            // positive dual persist across stages.
            for b in self.n..2 * self.n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] <= self.eps
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        if cfg!(debug_assertions) {
            self.verify_optimum();
        }
        let mut out = vec![NONE; self.n];
        for v in 0..self.n {
            assert!(self.mate[v] != NONE, "matching is not perfect");
            out[v] = self.endpoint[self.mate[v]];
        }
        for v in 0..self.n {
            assert_eq!(out[out[v]], v, "mate pointers disagree");
        }
        out
    }

    /// Optimality certificate: dual feasibility, complementary slackness and
    /// fullness of positive-dual blossoms, all within a tolerance that covers
    /// the eps-tight edges admitted during the search.
    fn verify_optimum(&self) {
        let tol = 1e-6 * self.scale;
        for b in self.n..2 * self.n {
            assert!(self.dualvar[b] >= -tol, "blossom dual went negative");
        }
        for e in 0..self.edges.len() {
            let (i, j) = self.edges[e];
            let mut s = self.wt[e] - self.dualvar[i] - self.dualvar[j];
            // Add z of every blossom containing both endpoints.
            let chain = |mut v: usize| {
                let mut out = vec![v];
                while self.blossomparent[v] != NONE {
                    v = self.blossomparent[v];
                    out.push(v);
                }
                out.reverse();
                out
            };
            let ci = chain(i);
            let cj = chain(j);
            for (bi, bj) in ci.iter().zip(cj.iter()) {
                if bi != bj {
                    break;
                }
                if *bi >= self.n {
                    s += self.dualvar[*bi];
                }
            }
            assert!(
                s >= -tol,
                "edge ({i},{j}) has negative reduced cost {s}"
            );
            let matched = self.mate[i] != NONE && self.mate[i] / 2 == e;
            if matched {
                assert_eq!(self.mate[j] / 2, e);
                assert!(
                    s.abs() <= tol,
                    "matched edge ({i},{j}) is not tight: reduced cost {s}"
                );
            }
        }
        for b in self.n..2 * self.n {
            if self.blossombase[b] != NONE && self.dualvar[b] > tol {
                assert_eq!(self.blossomendps[b].len() % 2, 1);
                for (ix, &p) in self.blossomendps[b].iter().enumerate() {
                    if ix % 2 == 1 {
                        assert_eq!(self.mate[self.endpoint[p]], p ^ 1);
                        assert_eq!(self.mate[self.endpoint[p ^ 1]], p);
                    }
                }
            }
        }
    }
}
