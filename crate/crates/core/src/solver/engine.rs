//! Enumeration of closed bicliques with bound-driven pruning.
//!
//! A pair `(A, B)` of left and right vertex sets is closed when `B` is the
//! common neighbourhood of `A` and `A` is the common neighbourhood of `B`.
//! Every closed pair with non-empty `B` is visited exactly once: branches
//! extend `A` by one candidate at a time, absorb every candidate whose
//! neighbourhood already covers the shrunken `B`, and abandon a branch when a
//! previously processed vertex would be absorbed (that pair belongs to the
//! earlier branch).

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::bitset::BitSet;

/// Callbacks steering the enumeration.
pub(crate) trait Visitor {
    /// Called once per closed pair `(a, b)` with `b` non-empty.
    fn visit(&mut self, a: &[usize], b: &BitSet, b_count: usize);

    /// Whether every closed pair extending `a` by a non-empty subset of
    /// `cands` can be skipped. `degrees[i]` is `|N(cands[i]) ∩ b|`.
    fn prune(
        &self,
        a_len: usize,
        b: &BitSet,
        b_count: usize,
        cands: &[usize],
        degrees: &[usize],
    ) -> bool;

    /// Whether extending by a candidate, with at most `max_left` left vertices
    /// and right side `b`, can be skipped outright.
    fn prune_branch(&self, max_left: usize, b: &BitSet, b_count: usize) -> bool;

    /// Called once per expanded node; returning `false` stops the search.
    fn tick(&mut self) -> bool;
}

/// Node and time budget shared by every worker of one search.
pub(crate) struct Budget {
    nodes: AtomicU64,
    node_budget: u64,
    deadline: Instant,
    stopped: AtomicBool,
}

impl Budget {
    pub(crate) fn new(node_budget: u64, time_budget: std::time::Duration) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            node_budget,
            deadline: Instant::now() + time_budget,
            stopped: AtomicBool::new(false),
        }
    }

    /// Adds `n` nodes; returns `false` once a budget is exhausted.
    pub(crate) fn charge(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.node_budget || Instant::now() >= self.deadline {
            self.stopped.store(true, Ordering::Relaxed);
        }
        !self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

/// Per-worker node counter that charges the shared budget in batches.
pub(crate) struct Meter<'b> {
    budget: &'b Budget,
    pending: u64,
}

const METER_BATCH: u64 = 256;

impl<'b> Meter<'b> {
    pub(crate) fn new(budget: &'b Budget) -> Self {
        Meter { budget, pending: 0 }
    }

    pub(crate) fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= METER_BATCH {
            let n = std::mem::take(&mut self.pending);
            return self.budget.charge(n);
        }
        !self.budget.stopped()
    }

    pub(crate) fn flush(&mut self) {
        let n = std::mem::take(&mut self.pending);
        if n > 0 {
            self.budget.charge(n);
        }
    }
}

impl Drop for Meter<'_> {
    fn drop(&mut self) {
        self.flush();
    }
}

/// Starting point of an enumeration: the closure of the full right side and
/// the ordered candidate list.
pub(crate) struct Root {
    pub a0: Vec<usize>,
    pub b0: BitSet,
    pub b0_count: usize,
    pub cands: Vec<usize>,
}

pub(crate) struct ClosedEnumerator<'a> {
    /// Neighbourhood of each left vertex over the right side.
    adj: &'a [BitSet],
}

impl<'a> ClosedEnumerator<'a> {
    pub(crate) fn new(adj: &'a [BitSet]) -> Self {
        ClosedEnumerator { adj }
    }

    /// Root over the left vertices `left` and right side `b0`. Candidates
    /// are ordered by decreasing degree, ties by index.
    pub(crate) fn root(&self, left: &[usize], b0: BitSet) -> Root {
        let b0_count = b0.count();
        let mut a0 = Vec::new();
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &v in left {
            let d = self.adj[v].intersection_count(&b0);
            if d == b0_count && b0_count > 0 {
                a0.push(v);
            } else if d > 0 {
                cands.push((v, d));
            }
        }
        cands.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        Root {
            a0,
            b0,
            b0_count,
            cands: cands.into_iter().map(|(v, _)| v).collect(),
        }
    }

    /// Visits the root pair and enumerates everything below it.
    pub(crate) fn run<V: Visitor>(&self, root: &Root, v: &mut V) {
        if root.b0_count == 0 {
            return;
        }
        if !root.a0.is_empty() {
            v.visit(&root.a0, &root.b0, root.b0_count);
        }
        let mut a = root.a0.clone();
        self.expand(&mut a, &root.b0, &root.cands, &[], v);
    }

    /// Runs only the top-level branch `i` of `root`, treating the earlier
    /// candidates as already processed. Visiting the root pair itself is the
    /// caller's job.
    pub(crate) fn run_branch<V: Visitor>(&self, root: &Root, i: usize, v: &mut V) -> bool {
        let mut a = root.a0.clone();
        self.step(&mut a, &root.b0, &root.cands, i, &root.cands[..i], v)
    }

    fn expand<V: Visitor>(
        &self,
        a: &mut Vec<usize>,
        b: &BitSet,
        p: &[usize],
        q: &[usize],
        v: &mut V,
    ) -> bool {
        let mut processed: Vec<usize> = q.to_vec();
        for idx in 0..p.len() {
            if !self.step(a, b, p, idx, &processed, v) {
                return false;
            }
            processed.push(p[idx]);
        }
        true
    }

    /// Branch on `p[idx]` with `q` the processed vertices. Returns `false`
    /// once the visitor asks to stop.
    fn step<V: Visitor>(
        &self,
        a: &mut Vec<usize>,
        b: &BitSet,
        p: &[usize],
        idx: usize,
        q: &[usize],
        v: &mut V,
    ) -> bool {
        let x = p[idx];
        let b2 = b.intersection(&self.adj[x]);
        let b2_count = b2.count();
        if b2_count == 0 {
            return true;
        }
        let later = &p[idx + 1..];
        if v.prune_branch(a.len() + 1 + later.len(), &b2, b2_count) {
            return true;
        }
        if !v.tick() {
            return false;
        }
        let mut q2 = Vec::new();
        for &y in q {
            let c = self.adj[y].intersection_count(&b2);
            if c == b2_count {
                // Closure contains an earlier vertex: pair found in its branch.
                return true;
            }
            if c > 0 {
                q2.push(y);
            }
        }
        let mark = a.len();
        a.push(x);
        let mut p2 = Vec::new();
        let mut degrees = Vec::new();
        for &y in later {
            let c = self.adj[y].intersection_count(&b2);
            if c == b2_count {
                a.push(y);
            } else if c > 0 {
                p2.push(y);
                degrees.push(c);
            }
        }
        v.visit(a, &b2, b2_count);
        let mut go_on = true;
        if !p2.is_empty() && !v.prune(a.len(), &b2, b2_count, &p2, &degrees) {
            go_on = self.expand(a, &b2, &p2, &q2, v);
        }
        a.truncate(mark);
        go_on
    }
}

/// Upper bound on `|A'| · |B'|` over extensions of `A` (size `a_len`) by a
/// non-empty subset `S` of the candidates: `|B'| <= min_{p ∈ S} degree(p)`,
/// so the best extension by `j` vertices uses the `j` largest degrees.
pub(crate) fn degree_bound(a_len: usize, degrees: &[usize]) -> u128 {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|x, y| y.cmp(x));
    d.iter()
        .enumerate()
        .map(|(j, &deg)| (a_len + j + 1) as u128 * deg as u128)
        .max()
        .unwrap_or(0)
}
