use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use crate::bitset::BitSet;
use crate::count::Count;

use super::engine::{degree_bound, Budget, ClosedEnumerator, Meter, Visitor};
use super::instance::BicliqueInstance;
use super::{SearchLimits, SolveResult, SolveStats, Witness};

/// Witnesses at the best product seen so far by one worker.
pub(crate) struct Collector {
    pub level: Count,
    pub count: u64,
    pub kept: BTreeSet<Witness>,
    cap: usize,
}

impl Collector {
    pub(crate) fn new(cap: usize) -> Self {
        Collector {
            level: 0,
            count: 0,
            kept: BTreeSet::new(),
            cap,
        }
    }

    /// Offers a witness of product `value`; lower values are ignored and a
    /// higher value discards everything kept so far.
    pub(crate) fn offer(&mut self, value: Count, make: impl FnOnce() -> Witness) {
        if value < self.level {
            return;
        }
        if value > self.level {
            self.level = value;
            self.count = 0;
            self.kept.clear();
        }
        if value == 0 {
            return;
        }
        self.count += 1;
        self.kept.insert(make());
        if self.kept.len() > self.cap {
            self.kept.pop_last();
        }
    }

    /// Merges collectors, keeping those at the overall best level.
    pub(crate) fn merge(parts: Vec<Collector>, cap: usize) -> Collector {
        let level = parts.iter().map(|c| c.level).max().unwrap_or(0);
        let mut out = Collector::new(cap);
        out.level = level;
        for c in parts.into_iter().filter(|c| c.level == level) {
            out.count += c.count;
            out.kept.extend(c.kept);
        }
        while out.kept.len() > cap {
            out.kept.pop_last();
        }
        out
    }
}

struct PairVisitor<'a> {
    shared_best: &'a AtomicU64,
    meter: Meter<'a>,
    collector: Collector,
    /// Branching side is the instance's right side.
    swapped: bool,
}

impl PairVisitor<'_> {
    fn best(&self) -> u128 {
        (self.shared_best.load(Ordering::Relaxed) as u128).max(self.collector.level)
    }
}

impl Visitor for PairVisitor<'_> {
    fn visit(&mut self, a: &[usize], b: &BitSet, b_count: usize) {
        let value = a.len() as u128 * b_count as u128;
        if value < self.best() {
            return;
        }
        self.shared_best.fetch_max(value as u64, Ordering::Relaxed);
        let swapped = self.swapped;
        self.collector.offer(value, || {
            let mut a = a.to_vec();
            a.sort_unstable();
            let b = b.to_indices();
            Witness {
                parts: if swapped { vec![b, a] } else { vec![a, b] },
            }
        });
    }

    fn prune(
        &self,
        a_len: usize,
        _b: &BitSet,
        _b_count: usize,
        _cands: &[usize],
        degrees: &[usize],
    ) -> bool {
        degree_bound(a_len, degrees) < self.best()
    }

    fn prune_branch(&self, max_left: usize, _b: &BitSet, b_count: usize) -> bool {
        (max_left as u128 * b_count as u128) < self.best()
    }

    fn tick(&mut self) -> bool {
        self.meter.tick()
    }
}

/// Exact maximum of `|A|·|B|` over cross-`t`-intersecting `A ⊆ F`, `B ⊆ G`,
/// with every closed pair attaining it.
///
/// The smaller family is the branching side. Top-level branches are shared
/// among `limits.parallelism` workers; the optimum and witness list do not
/// depend on scheduling.
pub fn max_product_pair(inst: &BicliqueInstance, limits: &SearchLimits) -> SolveResult {
    let started = Instant::now();
    let swapped = inst.right.len() < inst.left.len();
    let (adj, n_left, n_right) = if swapped {
        (&inst.transposed, inst.right.len(), inst.left.len())
    } else {
        (&inst.adjacency, inst.left.len(), inst.right.len())
    };
    let budget = Budget::new(limits.node_budget, limits.time_budget);
    let shared_best = AtomicU64::new(0);
    let enumerator = ClosedEnumerator::new(adj);
    let left: Vec<usize> = (0..n_left).collect();
    let root = enumerator.root(&left, BitSet::new_filled(n_right));

    let new_visitor = || PairVisitor {
        shared_best: &shared_best,
        meter: Meter::new(&budget),
        collector: Collector::new(limits.witness_cap),
        swapped,
    };

    let mut collectors = Vec::new();
    if root.b0_count > 0 {
        let mut head = new_visitor();
        if !root.a0.is_empty() {
            head.visit(&root.a0, &root.b0, root.b0_count);
        }
        let workers = limits.parallelism.max(1).min(root.cands.len().max(1));
        if workers <= 1 {
            for i in 0..root.cands.len() {
                if !enumerator.run_branch(&root, i, &mut head) {
                    break;
                }
            }
            collectors.push(head.collector);
        } else {
            collectors.push(head.collector);
            let next = AtomicUsize::new(0);
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|_| {
                        scope.spawn(|| {
                            let mut v = new_visitor();
                            loop {
                                let i = next.fetch_add(1, Ordering::Relaxed);
                                if i >= root.cands.len() || !enumerator.run_branch(&root, i, &mut v)
                                {
                                    break;
                                }
                            }
                            v.collector
                        })
                    })
                    .collect();
                for h in handles {
                    collectors.push(h.join().expect("search worker panicked"));
                }
            });
        }
    }
    let merged = Collector::merge(collectors, limits.witness_cap);
    SolveResult {
        best_product: merged.level,
        witnesses: merged.kept.into_iter().collect(),
        witness_count: merged.count,
        optimal: !budget.stopped(),
        stats: SolveStats {
            nodes_explored: budget.nodes(),
            elapsed_us: started.elapsed().as_micros() as u64,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;
    use crate::generators::{gen_example1, gen_level};
    use crate::solver::build_instance;

    #[test]
    fn level_6_2_optimum_and_star_witnesses() {
        let f = gen_level(6, 2).unwrap();
        let inst = build_instance(&f, &f, 1).unwrap();
        let res = max_product_pair(&inst, &SearchLimits::default());
        assert!(res.optimal);
        assert_eq!(res.best_product, 25);
        assert_eq!(res.witness_count, 6);
        for w in &res.witnesses {
            assert_eq!(w.parts[0], w.parts[1]);
            let core = crate::family::common_core(&f.select(&w.parts[0]));
            assert_eq!(core.cardinality(), 1);
        }
    }

    #[test]
    fn example1_optimum() {
        let fams = gen_example1(1, &[2, 2], &[3, 2]).unwrap();
        let inst = build_instance(&fams[0], &fams[1], 1).unwrap();
        let res = max_product_pair(&inst, &SearchLimits::default());
        assert_eq!(res.best_product, 4);
        assert_eq!(res.witness_count, 1);
        let r1 = fams[0].set_of_labels(&["rho_1", "rho_2"]).unwrap();
        let w = &res.witnesses[0];
        assert_eq!(w.parts[0], vec![fams[0].index_of(&r1).unwrap()]);
        assert_eq!(w.parts[1], (0..4).collect::<Vec<_>>());
    }

    #[test]
    fn zero_edges() {
        let f = gen_level(5, 2).unwrap();
        let res = max_product_pair(
            &build_instance(&f, &f, 3).unwrap(),
            &SearchLimits::default(),
        );
        assert_eq!(res.best_product, 0);
        assert!(res.witnesses.is_empty());
        assert!(res.optimal);
    }

    #[test]
    fn empty_family() {
        let f = gen_level(5, 2).unwrap();
        let e = f.filter(|_| false);
        let res = max_product_pair(
            &build_instance(&f, &e, 1).unwrap(),
            &SearchLimits::default(),
        );
        assert_eq!(res.best_product, 0);
    }

    #[test]
    fn single_edge() {
        let (f, _) = build_family(&["1", "2"], &[vec![0, 1]]).unwrap();
        let res = max_product_pair(
            &build_instance(&f, &f, 1).unwrap(),
            &SearchLimits::default(),
        );
        assert_eq!(res.best_product, 1);
        assert_eq!(
            res.witnesses,
            vec![Witness {
                parts: vec![vec![0], vec![0]]
            }]
        );
    }

    #[test]
    fn tiny_node_budget_is_not_optimal() {
        let f = gen_level(7, 2).unwrap();
        let inst = build_instance(&f, &f, 1).unwrap();
        let res = max_product_pair(&inst, &SearchLimits::default().with_node_budget(1));
        assert!(!res.optimal);
    }

    #[test]
    fn witness_cap_keeps_smallest_and_counts_all() {
        let f = gen_level(6, 2).unwrap();
        let inst = build_instance(&f, &f, 1).unwrap();
        let full = max_product_pair(&inst, &SearchLimits::default());
        let capped = max_product_pair(&inst, &SearchLimits::default().with_witness_cap(2));
        assert_eq!(capped.witness_count, 6);
        assert_eq!(capped.witnesses, full.witnesses[..2].to_vec());
    }

    #[test]
    fn parallel_matches_sequential() {
        let f = gen_level(7, 2).unwrap();
        let g = gen_level(7, 3).unwrap();
        let inst = build_instance(&f, &g, 1).unwrap();
        let a = max_product_pair(&inst, &SearchLimits::default());
        let b = max_product_pair(&inst, &SearchLimits::default().with_parallelism(4));
        assert_eq!(
            (a.best_product, &a.witnesses, a.witness_count),
            (b.best_product, &b.witnesses, b.witness_count)
        );
    }
}
