use std::time::Instant;

use crate::bitset::{BitSet, WORD_BITS};
use crate::count::{checked_product, Count};
use crate::error::{Error, Result};
use crate::family::{align_all, SetFamily};

use super::engine::{Budget, ClosedEnumerator, Meter, Visitor};
use super::instance::adjacency;
use super::pair::Collector;
use super::{SearchLimits, SolveResult, SolveStats, Witness};

/// Precomputed adjacency for one level: members of family `level` against
/// the concatenation of all later families, each later family starting at a
/// word boundary.
struct Level {
    adj: Vec<BitSet>,
    /// `(family, first word, word count)` of each later family.
    segments: Vec<(usize, usize, usize)>,
    width: usize,
}

struct Data {
    sizes: Vec<usize>,
    levels: Vec<Level>,
}

impl Data {
    fn new(fams: &[SetFamily], t: usize) -> Data {
        let k = fams.len();
        let sizes: Vec<usize> = fams.iter().map(SetFamily::len).collect();
        let mut levels = Vec::with_capacity(k - 1);
        for i in 0..k - 1 {
            let mut segments = Vec::new();
            let mut word = 0;
            for (j, f) in fams.iter().enumerate().skip(i + 1) {
                let words = f.len().div_ceil(WORD_BITS);
                segments.push((j, word, words));
                word += words;
            }
            let width = word * WORD_BITS;
            let blocks: Vec<Vec<BitSet>> = segments
                .iter()
                .map(|&(j, _, _)| adjacency(&fams[i], &fams[j], t))
                .collect();
            let adj = (0..fams[i].len())
                .map(|a| {
                    let mut row = BitSet::new_empty(width);
                    for (s, &(_, start, _)) in segments.iter().enumerate() {
                        for b in blocks[s][a].iter() {
                            row.insert(start * WORD_BITS + b);
                        }
                    }
                    row
                })
                .collect();
            levels.push(Level {
                adj,
                segments,
                width,
            });
        }
        Data { sizes, levels }
    }

    /// Concatenates per-family candidate sets for the families after `level`.
    fn concat(&self, level: usize, cands: &[BitSet]) -> BitSet {
        let lv = &self.levels[level];
        let mut out = BitSet::new_empty(lv.width);
        for &(j, start, _) in &lv.segments {
            for b in cands[j].iter() {
                out.insert(start * WORD_BITS + b);
            }
        }
        out
    }

    fn segment_counts<'a>(
        &'a self,
        level: usize,
        b: &'a BitSet,
    ) -> impl Iterator<Item = usize> + 'a {
        let words = b.words();
        self.levels[level]
            .segments
            .iter()
            .map(move |&(_, start, n)| {
                words[start..start + n]
                    .iter()
                    .map(|w| w.count_ones() as usize)
                    .sum()
            })
    }

    fn split(&self, level: usize, b: &BitSet, cands: &mut [BitSet]) {
        for &(j, start, n) in &self.levels[level].segments {
            cands[j] = BitSet::from_word_slice(self.sizes[j], &b.words()[start..start + n]);
        }
    }
}

struct State<'b> {
    collector: Collector,
    meter: Meter<'b>,
}

struct TupleVisitor<'d, 's, 'b> {
    data: &'d Data,
    state: &'s mut State<'b>,
    level: usize,
    prefix: Count,
    /// Chosen parts for families `0..level`.
    parts: Vec<Vec<usize>>,
    /// Candidate members of every family; entries after `level` are
    /// refreshed from each visited pair.
    cands: Vec<BitSet>,
}

impl TupleVisitor<'_, '_, '_> {
    fn rest_bound(&self, b: &BitSet) -> Count {
        self.data
            .segment_counts(self.level, b)
            .fold(1, |acc: Count, c| acc.saturating_mul(c as Count))
    }
}

impl Visitor for TupleVisitor<'_, '_, '_> {
    fn visit(&mut self, a: &[usize], b: &BitSet, _b_count: usize) {
        let here = self.prefix.saturating_mul(a.len() as Count);
        if here.saturating_mul(self.rest_bound(b)) < self.state.collector.level {
            return;
        }
        let mut chosen = a.to_vec();
        chosen.sort_unstable();
        let mut cands = self.cands.clone();
        self.data.split(self.level, b, &mut cands);
        let mut parts = self.parts.clone();
        parts.push(chosen);
        let k = self.data.sizes.len();
        if self.level + 2 == k {
            let last = cands[k - 1].to_indices();
            let value = here.saturating_mul(last.len() as Count);
            parts.push(last);
            self.state.collector.offer(value, || Witness { parts });
            return;
        }
        let next = self.level + 1;
        let left = cands[next].to_indices();
        let b0 = self.data.concat(next, &cands);
        let enumerator = ClosedEnumerator::new(&self.data.levels[next].adj);
        let root = enumerator.root(&left, b0);
        let mut child = TupleVisitor {
            data: self.data,
            state: &mut *self.state,
            level: next,
            prefix: here,
            parts,
            cands,
        };
        enumerator.run(&root, &mut child);
    }

    fn prune(
        &self,
        a_len: usize,
        b: &BitSet,
        _b_count: usize,
        cands: &[usize],
        _degrees: &[usize],
    ) -> bool {
        let ub = self
            .prefix
            .saturating_mul((a_len + cands.len()) as Count)
            .saturating_mul(self.rest_bound(b));
        ub < self.state.collector.level
    }

    fn prune_branch(&self, max_left: usize, b: &BitSet, _b_count: usize) -> bool {
        let ub = self
            .prefix
            .saturating_mul(max_left as Count)
            .saturating_mul(self.rest_bound(b));
        ub < self.state.collector.level
    }

    fn tick(&mut self) -> bool {
        self.state.meter.tick()
    }
}

/// Exact maximum of `∏ |A_i|` over cross-`t`-intersecting tuples below
/// `families`, with every closed tuple attaining it.
///
/// The first part is enumerated over closed sets against the union of the
/// remaining families, the remaining families are restricted to the members
/// compatible with it, and the search recurses; the last part is then the
/// whole restricted family.
pub fn max_product_tuple(
    families: &[SetFamily],
    t: usize,
    limits: &SearchLimits,
) -> Result<SolveResult> {
    if families.len() < 2 {
        return Err(Error::param("a tuple search needs at least two families"));
    }
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    checked_product(families.iter().map(|f| f.len() as Count))?;
    let started = Instant::now();
    let fams = align_all(families)?;
    let data = Data::new(&fams, t);
    let budget = Budget::new(limits.node_budget, limits.time_budget);
    let mut state = State {
        collector: Collector::new(limits.witness_cap),
        meter: Meter::new(&budget),
    };
    let cands: Vec<BitSet> = fams.iter().map(|f| BitSet::new_filled(f.len())).collect();
    {
        let left: Vec<usize> = (0..fams[0].len()).collect();
        let b0 = data.concat(0, &cands);
        let enumerator = ClosedEnumerator::new(&data.levels[0].adj);
        let root = enumerator.root(&left, b0);
        let mut v = TupleVisitor {
            data: &data,
            state: &mut state,
            level: 0,
            prefix: 1,
            parts: Vec::new(),
            cands,
        };
        enumerator.run(&root, &mut v);
    }
    state.meter.flush();
    let collector = state.collector;
    Ok(SolveResult {
        best_product: collector.level,
        witnesses: collector.kept.into_iter().collect(),
        witness_count: collector.count,
        optimal: !budget.stopped(),
        stats: SolveStats {
            nodes_explored: budget.nodes(),
            elapsed_us: started.elapsed().as_micros() as u64,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_example1, gen_level};
    use crate::solver::{build_instance, max_product_pair};

    #[test]
    fn pair_case_matches_pair_solver() {
        let f = gen_level(6, 2).unwrap();
        let g = gen_level(6, 3).unwrap();
        let lim = SearchLimits::default();
        let tup = max_product_tuple(&[f.clone(), g.clone()], 1, &lim).unwrap();
        let pair = max_product_pair(&build_instance(&f, &g, 1).unwrap(), &lim);
        assert_eq!(tup.best_product, pair.best_product);
        assert_eq!(tup.witnesses, pair.witnesses);
    }

    #[test]
    fn three_levels() {
        let f = gen_level(5, 2).unwrap();
        let res =
            max_product_tuple(&[f.clone(), f.clone(), f], 1, &SearchLimits::default()).unwrap();
        assert_eq!(res.best_product, 64);
        assert_eq!(res.witness_count, 5);
    }

    #[test]
    fn example1_three_families() {
        let fams = gen_example1(1, &[2, 2, 2], &[2, 2, 1]).unwrap();
        let res = max_product_tuple(&fams, 1, &SearchLimits::default()).unwrap();
        assert_eq!(res.best_product, 2);
        assert_eq!(res.witness_count, 1);
        assert_eq!(res.witnesses[0].sizes(), vec![1, 1, 2]);
    }

    #[test]
    fn rejects_single_family() {
        let f = gen_level(4, 2).unwrap();
        assert!(max_product_tuple(&[f], 1, &SearchLimits::default()).is_err());
    }
}
