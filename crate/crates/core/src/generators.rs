//! Constructors for the standard family classes: levels, power sets,
//! integer sequences, permutations, multisets, compositions, set partitions
//! and the disjoint-blocks construction that separates the strict and strong
//! cross-star properties.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::combin::{for_each_combination, for_each_sequence};
use crate::count::{binomial, checked_product, Count};
use crate::error::{Error, Result};
use crate::family::{FamilyMeta, GroundSet, MemberSet, SetFamily};
use crate::label::StructuredLabel;

/// Size caps applied by the generators that can blow up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenLimits {
    /// Maximum number of members for sequence and permutation families.
    pub max_members: usize,
    /// Maximum `n` for set partitions of `[n]`.
    pub max_partition_n: usize,
}

impl Default for GenLimits {
    fn default() -> Self {
        GenLimits {
            max_members: 1_000_000,
            max_partition_n: 12,
        }
    }
}

fn family_over(ground: GroundSet, members: Vec<MemberSet>, meta: FamilyMeta) -> Result<SetFamily> {
    let (fam, _) = SetFamily::from_members(Arc::new(ground), members, meta)?;
    Ok(fam)
}

/// Index of each label, for generators that assemble members from labels.
struct LabelIndex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabelIndex {
    fn new(labels: Vec<StructuredLabel>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(|l| l.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        LabelIndex { labels, index }
    }

    fn get(&self, l: &StructuredLabel) -> usize {
        self.index[&l.to_string()]
    }

    fn ground(self) -> Result<GroundSet> {
        GroundSet::new(self.labels)
    }
}

/// All `r`-subsets of `[n]`.
pub fn gen_level(n: usize, r: usize) -> Result<SetFamily> {
    let ground = GroundSet::numbered(n)?;
    let mut members = Vec::new();
    for_each_combination(n, r, |c| {
        members.push(MemberSet::from_bits(BitSet::from_indices(
            n,
            c.iter().copied(),
        )))
    });
    family_over(
        ground,
        members,
        FamilyMeta::new("level").with("n", n).with("r", r),
    )
}

/// The power set `2^[n]`.
pub fn gen_powerset(n: usize, limits: &GenLimits) -> Result<SetFamily> {
    if n >= usize::BITS as usize || (1usize << n) > limits.max_members {
        return Err(Error::resource(format!(
            "power set of [{n}] exceeds the member cap"
        )));
    }
    let ground = GroundSet::numbered(n)?;
    let mut members = Vec::with_capacity(1 << n);
    for r in 0..=n {
        for_each_combination(n, r, |c| {
            members.push(MemberSet::from_bits(BitSet::from_indices(
                n,
                c.iter().copied(),
            )))
        });
    }
    family_over(ground, members, FamilyMeta::new("powerset").with("n", n))
}

/// Elements of the union of `base`, in ground order.
fn union_elements(base: &SetFamily) -> Vec<usize> {
    let mut all = BitSet::new_empty(base.ground().size());
    for m in base.members() {
        all.union_with(m.bits());
    }
    all.to_indices()
}

fn sequence_ground(base: &SetFamily, m: usize) -> LabelIndex {
    let mut labels = Vec::new();
    for x in union_elements(base) {
        for y in 1..=m {
            labels.push(StructuredLabel::pair(base.ground().label(x), y));
        }
    }
    LabelIndex::new(labels)
}

fn base_meta(mut meta: FamilyMeta, base: &SetFamily, m: usize) -> FamilyMeta {
    meta.params.insert("m".into(), m.into());
    meta.params
        .insert("base_class".into(), base.meta().class.clone().into());
    for (k, v) in &base.meta().params {
        meta.params.insert(format!("base_{k}"), v.clone());
    }
    meta
}

/// `S_{F,m}`: for each `X ∈ F`, all labellings of `X` by `[m]`, encoded as
/// sets of pairs `(x, y)`. The empty member of `F` contributes nothing.
pub fn gen_sequences(base: &SetFamily, m: usize, limits: &GenLimits) -> Result<SetFamily> {
    if m < 1 {
        return Err(Error::param("sequence alphabet size m must be at least 1"));
    }
    let mut total: Count = 0;
    for x in base.members().iter().filter(|x| x.cardinality() > 0) {
        let n = checked_product(std::iter::repeat_n(m as Count, x.cardinality()))?;
        total = total
            .checked_add(n)
            .ok_or(Error::Overflow("sequence family size"))?;
    }
    if total > limits.max_members as Count {
        return Err(Error::resource(format!(
            "sequence family would have {total} members (cap {})",
            limits.max_members
        )));
    }
    let idx = sequence_ground(base, m);
    let width = idx.labels.len();
    let mut members = Vec::with_capacity(total as usize);
    for x in base.members().iter().filter(|x| x.cardinality() > 0) {
        let elems = x.indices();
        for_each_sequence(elems.len(), m, |ys| {
            let bits = BitSet::from_indices(
                width,
                elems
                    .iter()
                    .zip(ys)
                    .map(|(&e, &y)| idx.get(&StructuredLabel::pair(base.ground().label(e), y + 1))),
            );
            members.push(MemberSet::from_bits(bits));
        });
    }
    let meta = base_meta(FamilyMeta::new("sequences"), base, m);
    family_over(idx.ground()?, members, meta)
}

/// `S*_{F,m}`: the members of `S_{F,m}` whose labels are pairwise distinct.
pub fn gen_permutations(base: &SetFamily, m: usize, limits: &GenLimits) -> Result<SetFamily> {
    if m < 1 {
        return Err(Error::param(
            "permutation alphabet size m must be at least 1",
        ));
    }
    let mut total: Count = 0;
    for x in base.members().iter().filter(|x| x.cardinality() > 0) {
        let r = x.cardinality() as u64;
        if r <= m as u64 {
            total = total
                .checked_add(crate::count::factorial_ratio(m as u64, m as u64 - r)?)
                .ok_or(Error::Overflow("permutation family size"))?;
        }
    }
    if total > limits.max_members as Count {
        return Err(Error::resource(format!(
            "permutation family would have {total} members (cap {})",
            limits.max_members
        )));
    }
    let idx = sequence_ground(base, m);
    let width = idx.labels.len();
    let mut members = Vec::with_capacity(total as usize);
    for x in base
        .members()
        .iter()
        .filter(|x| x.cardinality() > 0 && x.cardinality() <= m)
    {
        let elems = x.indices();
        let mut used = vec![false; m];
        let mut ys = Vec::with_capacity(elems.len());
        injections(elems.len(), m, &mut used, &mut ys, &mut |ys| {
            let bits = BitSet::from_indices(
                width,
                elems
                    .iter()
                    .zip(ys)
                    .map(|(&e, &y)| idx.get(&StructuredLabel::pair(base.ground().label(e), y + 1))),
            );
            members.push(MemberSet::from_bits(bits));
        });
    }
    let meta = base_meta(FamilyMeta::new("permutations"), base, m);
    family_over(idx.ground()?, members, meta)
}

fn injections(
    len: usize,
    m: usize,
    used: &mut [bool],
    ys: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if ys.len() == len {
        emit(ys);
        return;
    }
    for y in 0..m {
        if !used[y] {
            used[y] = true;
            ys.push(y);
            injections(len, m, used, ys, emit);
            ys.pop();
            used[y] = false;
        }
    }
}

/// Multisets of size `r` over `[n]`, each encoded as
/// `{(a, j) : j <= multiplicity of a}`.
pub fn gen_multisets(n: usize, r: usize) -> Result<SetFamily> {
    if n < 1 {
        return Err(Error::param("multisets need n >= 1"));
    }
    let mut labels = Vec::with_capacity(n * r);
    for a in 1..=n {
        for j in 1..=r {
            labels.push(StructuredLabel::pair(a, j));
        }
    }
    let width = labels.len();
    let mut members = Vec::new();
    // Multiplicity vectors summing to r.
    let mut mult = vec![0usize; n];
    fn rec(
        pos: usize,
        left: usize,
        mult: &mut [usize],
        r: usize,
        width: usize,
        out: &mut Vec<MemberSet>,
    ) {
        let n = mult.len();
        if pos == n - 1 {
            mult[pos] = left;
            let bits = BitSet::from_indices(
                width,
                mult.iter()
                    .enumerate()
                    .flat_map(|(a, &c)| (0..c).map(move |j| a * r + j)),
            );
            out.push(MemberSet::from_bits(bits));
            return;
        }
        for c in 0..=left {
            mult[pos] = c;
            rec(pos + 1, left - c, mult, r, width, out);
        }
    }
    rec(0, r, &mut mult, r, width, &mut members);
    family_over(
        GroundSet::new(labels.into_iter().map(|l| l.to_string()).collect())?,
        members,
        FamilyMeta::new("multisets").with("n", n).with("r", r),
    )
}

/// Compositions of `n` with `r` positive parts, encoded as `{(i, a_i)}`.
pub fn gen_compositions(n: usize, r: usize) -> Result<SetFamily> {
    if r < 1 || r > n {
        return Err(Error::param(format!(
            "compositions need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let max_part = n - r + 1;
    let mut labels = Vec::with_capacity(r * max_part);
    for i in 1..=r {
        for v in 1..=max_part {
            labels.push(StructuredLabel::pair(i, v));
        }
    }
    let width = labels.len();
    let mut members = Vec::new();
    let mut parts = vec![0usize; r];
    fn rec(
        pos: usize,
        left: usize,
        parts: &mut [usize],
        max_part: usize,
        width: usize,
        out: &mut Vec<MemberSet>,
    ) {
        let r = parts.len();
        if pos == r - 1 {
            parts[pos] = left;
            let bits = BitSet::from_indices(
                width,
                parts
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| i * max_part + (v - 1)),
            );
            out.push(MemberSet::from_bits(bits));
            return;
        }
        // Leave at least one for each remaining position.
        let remaining = r - pos - 1;
        for v in 1..=(left - remaining) {
            parts[pos] = v;
            rec(pos + 1, left - v, parts, max_part, width, out);
        }
    }
    rec(0, n, &mut parts, max_part, width, &mut members);
    family_over(
        GroundSet::new(labels.into_iter().map(|l| l.to_string()).collect())?,
        members,
        FamilyMeta::new("compositions").with("n", n).with("r", r),
    )
}

/// Partitions of `[n]` into exactly `r` blocks. Ground elements are the
/// blocks that can occur (non-empty subsets of size at most `n - r + 1`),
/// labelled `{a,b,...}`.
pub fn gen_partitions(n: usize, r: usize, limits: &GenLimits) -> Result<SetFamily> {
    if r < 1 || r > n {
        return Err(Error::param(format!(
            "partitions need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    if n > limits.max_partition_n {
        return Err(Error::resource(format!(
            "partitions of [{n}] exceed the cap n <= {}",
            limits.max_partition_n
        )));
    }
    let max_block = n - r + 1;
    // Blocks as bitmasks over [n], ordered lexicographically by element list.
    let mut blocks: Vec<Vec<u64>> = Vec::new();
    for size in 1..=max_block {
        for_each_combination(n, size, |c| {
            blocks.push(c.iter().map(|&i| i as u64 + 1).collect())
        });
    }
    blocks.sort();
    let labels: Vec<StructuredLabel> = blocks.iter().cloned().map(StructuredLabel::part).collect();
    let mask_index: HashMap<u32, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b.iter().fold(0u32, |acc, &e| acc | 1 << (e - 1)), i))
        .collect();
    let width = labels.len();

    // Restricted growth strings with exactly r blocks.
    let mut members = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(
        pos: usize,
        used: usize,
        r: usize,
        assign: &mut [usize],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let n = assign.len();
        if n - pos < r - used {
            return;
        }
        if pos == n {
            if used == r {
                emit(assign);
            }
            return;
        }
        let upper = (used + 1).min(r);
        for b in 0..upper {
            assign[pos] = b;
            rec(pos + 1, used.max(b + 1), r, assign, emit);
        }
    }
    rec(0, 0, r, &mut assign, &mut |a| {
        let mut masks = vec![0u32; r];
        for (e, &b) in a.iter().enumerate() {
            masks[b] |= 1 << e;
        }
        let bits = BitSet::from_indices(width, masks.iter().map(|m| mask_index[m]));
        members.push(MemberSet::from_bits(bits));
    });
    family_over(
        GroundSet::new(labels.into_iter().map(|l| l.to_string()).collect())?,
        members,
        FamilyMeta::new("partitions").with("n", n).with("r", r),
    )
}

/// The disjoint-blocks construction: families `F_1..F_k` over one fresh
/// ground set where, for `i < k`, `F_i = {T_i ∪ A_{i,j} : j <= q_i} ∪ {R_i}`
/// and `F_k = {T ∪ A_{k,j} : T ⊆ R_1, |T| = t, j <= q_k}`.
///
/// Ground labels are `t_i_j` (elements of `T_i`), `a_i_j_l` (elements of
/// `A_{i,j}`) and `rho_l` (the nested `R_1 ⊆ … ⊆ R_{k-1}`).
pub fn gen_example1(t: usize, r: &[usize], q: &[usize]) -> Result<Vec<SetFamily>> {
    let k = r.len();
    if k < 2 || q.len() != k {
        return Err(Error::param("need k >= 2 and |r| = |q| = k"));
    }
    if t < 1 || t >= r[0] || r.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::param("need 1 <= t < r_1 <= ... <= r_k"));
    }
    if q.iter().any(|&x| x < 1) {
        return Err(Error::param("need every q_i >= 1"));
    }
    let mut labels = Vec::new();
    for i in 1..=k {
        for j in 1..=t {
            labels.push(format!("t_{i}_{j}"));
        }
    }
    for i in 1..=k {
        for j in 1..=q[i - 1] {
            for l in 1..=(r[i - 1] - t) {
                labels.push(format!("a_{i}_{j}_{l}"));
            }
        }
    }
    for l in 1..=r[k - 2] {
        labels.push(format!("rho_{l}"));
    }
    let ground = Arc::new(GroundSet::new(labels)?);
    let width = ground.size();
    let ix = |s: String| ground.index_of(&s).expect("label generated above");
    let block = |i: usize, j: usize| -> Vec<usize> {
        (1..=(r[i - 1] - t))
            .map(|l| ix(format!("a_{i}_{j}_{l}")))
            .collect()
    };
    let mut out = Vec::with_capacity(k);
    let meta = |i: usize| {
        FamilyMeta::new("example1")
            .with("t", t)
            .with("r", r.to_vec())
            .with("q", q.to_vec())
            .with("index", i)
    };
    for i in 1..k {
        let core: Vec<usize> = (1..=t).map(|j| ix(format!("t_{i}_{j}"))).collect();
        let mut members = Vec::new();
        for j in 1..=q[i - 1] {
            let mut elems = core.clone();
            elems.extend(block(i, j));
            members.push(MemberSet::from_indices(width, &elems)?);
        }
        let rho: Vec<usize> = (1..=r[i - 1]).map(|l| ix(format!("rho_{l}"))).collect();
        members.push(MemberSet::from_indices(width, &rho)?);
        out.push(SetFamily::from_members(ground.clone(), members, meta(i))?.0);
    }
    let r1: Vec<usize> = (1..=r[0]).map(|l| ix(format!("rho_{l}"))).collect();
    let mut members = Vec::new();
    for_each_combination(r1.len(), t, |c| {
        for j in 1..=q[k - 1] {
            let mut elems: Vec<usize> = c.iter().map(|&i| r1[i]).collect();
            elems.extend(block(k, j));
            members.push(MemberSet::from_bits(BitSet::from_indices(width, elems)));
        }
    });
    out.push(SetFamily::from_members(ground.clone(), members, meta(k))?.0);
    Ok(out)
}

/// Random family of up to `count` distinct non-empty subsets of `[n]`, each of
/// size in `1..=max_size`.
pub fn gen_random<R: Rng + ?Sized>(
    n: usize,
    count: usize,
    max_size: usize,
    rng: &mut R,
) -> Result<SetFamily> {
    if n == 0 || max_size == 0 {
        return Err(Error::param(
            "random families need n >= 1 and max_size >= 1",
        ));
    }
    let ground = GroundSet::numbered(n)?;
    let max_size = max_size.min(n);
    let members = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            let elems = rand::seq::index::sample(rng, n, size);
            MemberSet::from_bits(BitSet::from_indices(n, elems))
        })
        .collect();
    let meta = FamilyMeta::new("random")
        .with("n", n)
        .with("count", count)
        .with("max_size", max_size);
    family_over(ground, members, meta)
}

/// A named family class with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum ClassParams {
    Level {
        n: usize,
        r: usize,
    },
    Powerset {
        n: usize,
    },
    /// `S_{F,m}` with `F = {[n]}`, or `F = C([n], base_r)` when given.
    Sequences {
        n: usize,
        m: usize,
        base_r: Option<usize>,
    },
    /// `S*_{F,m}` with the same choice of `F` as for sequences.
    Permutations {
        n: usize,
        m: usize,
        base_r: Option<usize>,
    },
    Multisets {
        n: usize,
        r: usize,
    },
    Compositions {
        n: usize,
        r: usize,
    },
    Partitions {
        n: usize,
        r: usize,
    },
    Example1 {
        t: usize,
        r: Vec<usize>,
        q: Vec<usize>,
    },
}

impl ClassParams {
    pub fn class_name(&self) -> &'static str {
        match self {
            ClassParams::Level { .. } => "level",
            ClassParams::Powerset { .. } => "powerset",
            ClassParams::Sequences { .. } => "sequences",
            ClassParams::Permutations { .. } => "permutations",
            ClassParams::Multisets { .. } => "multisets",
            ClassParams::Compositions { .. } => "compositions",
            ClassParams::Partitions { .. } => "partitions",
            ClassParams::Example1 { .. } => "example1",
        }
    }

    fn base(n: usize, base_r: Option<usize>) -> Result<SetFamily> {
        match base_r {
            Some(r) => gen_level(n, r),
            None => gen_level(n, n),
        }
    }

    /// Generates the families of this class; one family except for
    /// `example1`, which yields `k`.
    pub fn generate(&self, limits: &GenLimits) -> Result<Vec<SetFamily>> {
        Ok(match self {
            ClassParams::Level { n, r } => vec![gen_level(*n, *r)?],
            ClassParams::Powerset { n } => vec![gen_powerset(*n, limits)?],
            ClassParams::Sequences { n, m, base_r } => {
                vec![gen_sequences(&Self::base(*n, *base_r)?, *m, limits)?]
            }
            ClassParams::Permutations { n, m, base_r } => {
                vec![gen_permutations(&Self::base(*n, *base_r)?, *m, limits)?]
            }
            ClassParams::Multisets { n, r } => vec![gen_multisets(*n, *r)?],
            ClassParams::Compositions { n, r } => vec![gen_compositions(*n, *r)?],
            ClassParams::Partitions { n, r } => vec![gen_partitions(*n, *r, limits)?],
            ClassParams::Example1 { t, r, q } => gen_example1(*t, r, q)?,
        })
    }

    /// Generates a class expected to yield exactly one family.
    pub fn generate_one(&self, limits: &GenLimits) -> Result<SetFamily> {
        let mut fams = self.generate(limits)?;
        if fams.len() != 1 {
            return Err(Error::param(format!(
                "class {} yields {} families, expected one",
                self.class_name(),
                fams.len()
            )));
        }
        Ok(fams.pop().expect("length checked"))
    }

    /// Expected member count, where a closed form exists.
    pub fn expected_size(&self) -> Result<Option<Count>> {
        Ok(match self {
            ClassParams::Level { n, r } => Some(binomial(*n as u64, *r as u64)?),
            ClassParams::Multisets { n, r } => Some(binomial((*n + *r) as u64 - 1, *r as u64)?),
            ClassParams::Compositions { n, r } => Some(binomial(*n as u64 - 1, *r as u64 - 1)?),
            ClassParams::Partitions { n, r } => Some(crate::count::stirling(*n as u64, *r as u64)?),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::largest_stars;

    #[test]
    fn level_sizes() {
        assert_eq!(gen_level(4, 2).unwrap().len(), 6);
        assert_eq!(gen_level(6, 2).unwrap().len(), 15);
        assert!(gen_level(3, 5).unwrap().is_empty());
        assert_eq!(gen_level(0, 0).unwrap().len(), 1);
    }

    #[test]
    fn powerset_size() {
        assert_eq!(gen_powerset(4, &GenLimits::default()).unwrap().len(), 16);
    }

    #[test]
    fn sequences_examples() {
        let lim = GenLimits::default();
        let s = gen_sequences(&gen_level(2, 2).unwrap(), 3, &lim).unwrap();
        assert_eq!(s.len(), 9);
        assert!(s.members().iter().all(|m| m.cardinality() == 2));
        assert_eq!(largest_stars(&s, 1).l_value, 3);
        assert_eq!(largest_stars(&s, 2).l_value, 1);
        assert_eq!(s.ground().labels()[0], "(1,1)");

        let empty_base = gen_level(3, 4).unwrap();
        assert!(gen_sequences(&empty_base, 3, &lim).unwrap().is_empty());
        // {∅} contributes nothing either.
        let only_empty = gen_level(3, 0).unwrap();
        assert!(gen_sequences(&only_empty, 3, &lim).unwrap().is_empty());
    }

    #[test]
    fn sequence_cap() {
        let lim = GenLimits {
            max_members: 100,
            ..GenLimits::default()
        };
        assert!(matches!(
            gen_sequences(&gen_level(4, 4).unwrap(), 4, &lim),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn permutations_examples() {
        let lim = GenLimits::default();
        let p = gen_permutations(&gen_level(3, 3).unwrap(), 3, &lim).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(largest_stars(&p, 1).l_value, 2);
        assert!(gen_permutations(&gen_level(4, 4).unwrap(), 3, &lim)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn multisets_examples() {
        let m = gen_multisets(3, 2).unwrap();
        assert_eq!(m.len(), 6);
        assert!(m.members().iter().all(|x| x.cardinality() == 2));
        assert_eq!(largest_stars(&m, 1).l_value, 3);
        let zero = gen_multisets(3, 0).unwrap();
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn compositions_examples() {
        assert_eq!(gen_compositions(5, 3).unwrap().len(), 6);
        let c = gen_compositions(6, 3).unwrap();
        assert_eq!(largest_stars(&c, 1).l_value, 4);
        assert_eq!(largest_stars(&c, 2).l_value, 1);
        let ones = gen_compositions(3, 3).unwrap();
        assert_eq!(ones.len(), 1);
        let expect = ones.set_of_labels(&["(1,1)", "(2,1)", "(3,1)"]).unwrap();
        assert_eq!(ones.member(0), &expect);
        assert!(matches!(gen_compositions(3, 4), Err(Error::Parameter(_))));
        assert!(matches!(gen_compositions(3, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn partitions_examples() {
        let lim = GenLimits::default();
        let p = gen_partitions(4, 2, &lim).unwrap();
        assert_eq!(p.len(), 7);
        for m in p.members() {
            let mut covered = Vec::new();
            for i in m.iter() {
                let label = p.ground().label(i);
                let inner = &label[1..label.len() - 1];
                covered.extend(inner.split(',').map(|x| x.parse::<u64>().unwrap()));
            }
            covered.sort();
            assert_eq!(covered, vec![1, 2, 3, 4], "blocks disjoint and covering");
        }
        assert_eq!(
            largest_stars(&gen_partitions(5, 3, &lim).unwrap(), 1).l_value,
            7
        );
        assert!(matches!(
            gen_partitions(13, 2, &lim),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            gen_partitions(3, 4, &lim),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn example1_small_instance() {
        let fams = gen_example1(1, &[2, 2], &[3, 2]).unwrap();
        assert_eq!(fams[0].len(), 4);
        assert_eq!(fams[1].len(), 4);
        assert_eq!(largest_stars(&fams[0], 1).l_value, 3);
        assert_eq!(largest_stars(&fams[1], 1).l_value, 2);
        let r1 = fams[0].set_of_labels(&["rho_1", "rho_2"]).unwrap();
        assert!(fams[0].contains(&r1));
    }

    #[test]
    fn example1_rejects_bad_parameters() {
        assert!(gen_example1(1, &[2], &[1]).is_err());
        assert!(gen_example1(2, &[2, 3], &[1, 1]).is_err());
        assert!(gen_example1(1, &[3, 2], &[1, 1]).is_err());
        assert!(gen_example1(1, &[2, 2], &[0, 1]).is_err());
    }

    #[test]
    fn class_params_round_trip_through_json() {
        let p = ClassParams::Sequences {
            n: 2,
            m: 5,
            base_r: None,
        };
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["class"], "sequences");
        assert_eq!(serde_json::from_value::<ClassParams>(v).unwrap(), p);
    }
}
