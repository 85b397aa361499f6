//! Ground sets, member sets and set families, together with the
//! intersection predicates and star computations everything else builds on.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::bitset::BitSet;
use crate::combin::for_each_combination;
use crate::error::{Error, Result};

/// Default cap on ground-set size.
pub const DEFAULT_MAX_GROUND: usize = 1 << 20;

/// Environment variable overriding [`DEFAULT_MAX_GROUND`].
pub const MAX_GROUND_ENV: &str = "STARLAB_MAX_GROUND";

/// The active ground-set width guard.
pub fn max_ground() -> usize {
    std::env::var(MAX_GROUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUND)
}

/// An ordered universe of distinct labels. Element `i` is `labels[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        Self::with_limit(labels, max_ground())
    }

    pub fn with_limit(labels: Vec<String>, limit: usize) -> Result<Self> {
        if labels.len() > limit {
            return Err(Error::resource(format!(
                "ground set of {} elements exceeds the guard of {limit}",
                labels.len()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::encoding(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A subset of a ground set with its cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MemberSet {
    bits: BitSet,
    cardinality: usize,
}

impl MemberSet {
    pub fn from_bits(bits: BitSet) -> Self {
        let cardinality = bits.count();
        MemberSet { bits, cardinality }
    }

    pub fn empty(width: usize) -> Self {
        Self::from_bits(BitSet::new_empty(width))
    }

    pub fn full(width: usize) -> Self {
        Self::from_bits(BitSet::new_filled(width))
    }

    /// Checked construction from element indices.
    pub fn from_indices(width: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = BitSet::new_empty(width);
        for &i in indices {
            if i >= width {
                return Err(Error::encoding(format!(
                    "element index {i} out of range for ground set of size {width}"
                )));
            }
            bits.insert(i);
        }
        Ok(Self::from_bits(bits))
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn width(&self) -> usize {
        self.bits.domain_size()
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.to_indices()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    fn check_width(&self, other: &MemberSet) -> Result<()> {
        if self.width() != other.width() {
            return Err(Error::GroundMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(())
    }

    pub fn is_subset_of(&self, other: &MemberSet) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn intersection_size(&self, other: &MemberSet) -> Result<usize> {
        self.check_width(other)?;
        Ok(self.bits.intersection_count(&other.bits))
    }

    pub fn intersection(&self, other: &MemberSet) -> Result<MemberSet> {
        self.check_width(other)?;
        Ok(Self::from_bits(self.bits.intersection(&other.bits)))
    }

    pub fn difference(&self, other: &MemberSet) -> Result<MemberSet> {
        self.check_width(other)?;
        let mut bits = self.bits.clone();
        bits.subtract(&other.bits);
        Ok(Self::from_bits(bits))
    }
}

impl PartialOrd for MemberSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on the ascending element lists.
impl Ord for MemberSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp_lex(&other.bits)
    }
}

impl fmt::Debug for MemberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.bits, f)
    }
}

/// `|a ∩ b| >= t`.
pub fn t_intersects(a: &MemberSet, b: &MemberSet, t: usize) -> Result<bool> {
    a.check_width(b)?;
    Ok(a.bits.intersects_at_least(&b.bits, t))
}

/// Provenance attached to a family: the class that produced it and its
/// parameters. Carried through the JSON format unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FamilyMeta {
    pub class: String,
    pub params: BTreeMap<String, Value>,
}

impl FamilyMeta {
    pub fn new(class: impl Into<String>) -> Self {
        FamilyMeta {
            class: class.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn custom() -> Self {
        Self::new("custom")
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

/// A finite family of distinct subsets of a ground set, stored in canonical
/// order.
#[derive(Clone)]
pub struct SetFamily {
    ground: Arc<GroundSet>,
    members: Vec<MemberSet>,
    max_size: usize,
    meta: FamilyMeta,
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.same_ground(other) && self.members == other.members
    }
}

impl Eq for SetFamily {}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for m in &self.members {
            list.entry(&format_args!("{}", self.format_member(m)));
        }
        list.finish()
    }
}

impl SetFamily {
    /// Builds a canonical family, returning it with the number of duplicate
    /// members that were collapsed.
    pub fn from_members(
        ground: Arc<GroundSet>,
        mut members: Vec<MemberSet>,
        meta: FamilyMeta,
    ) -> Result<(Self, usize)> {
        if let Some(bad) = members.iter().find(|m| m.width() != ground.size()) {
            return Err(Error::GroundMismatch {
                left: bad.width(),
                right: ground.size(),
            });
        }
        members.sort();
        let before = members.len();
        members.dedup();
        let duplicates = before - members.len();
        Ok((Self::from_sorted(ground, members, meta), duplicates))
    }

    /// `members` must already be strictly increasing.
    pub(crate) fn from_sorted(
        ground: Arc<GroundSet>,
        members: Vec<MemberSet>,
        meta: FamilyMeta,
    ) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let max_size = members.iter().map(|m| m.cardinality).max().unwrap_or(0);
        SetFamily {
            ground,
            members,
            max_size,
            meta,
        }
    }

    pub fn empty(ground: Arc<GroundSet>) -> Self {
        Self::from_sorted(ground, Vec::new(), FamilyMeta::custom())
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn members(&self) -> &[MemberSet] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &MemberSet {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest `r` such that this is a `(<= r)`-family.
    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn meta(&self) -> &FamilyMeta {
        &self.meta
    }

    pub fn with_meta(mut self, meta: FamilyMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn same_ground(&self, other: &SetFamily) -> bool {
        Arc::ptr_eq(&self.ground, &other.ground) || self.ground == other.ground
    }

    pub fn index_of(&self, m: &MemberSet) -> Option<usize> {
        self.members.binary_search(m).ok()
    }

    pub fn contains(&self, m: &MemberSet) -> bool {
        self.index_of(m).is_some()
    }

    /// Member set from ground-set labels.
    pub fn set_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<MemberSet> {
        let mut bits = BitSet::new_empty(self.ground.size());
        for l in labels {
            let l = l.as_ref();
            let i = self
                .ground
                .index_of(l)
                .ok_or_else(|| Error::encoding(format!("unknown label {l:?}")))?;
            bits.insert(i);
        }
        Ok(MemberSet::from_bits(bits))
    }

    pub fn set_of_indices(&self, indices: &[usize]) -> Result<MemberSet> {
        MemberSet::from_indices(self.ground.size(), indices)
    }

    pub fn format_member(&self, m: &MemberSet) -> String {
        let parts: Vec<&str> = m.iter().map(|i| self.ground.label(i)).collect();
        format!("{{{}}}", parts.join(" "))
    }

    fn check_member(&self, m: &MemberSet) -> Result<()> {
        if m.width() != self.ground.size() {
            return Err(Error::GroundMismatch {
                left: m.width(),
                right: self.ground.size(),
            });
        }
        Ok(())
    }

    /// Subfamily of the members at `indices` (any order, duplicates ignored).
    pub fn select(&self, indices: &[usize]) -> SetFamily {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let members = idx.into_iter().map(|i| self.members[i].clone()).collect();
        Self::from_sorted(self.ground.clone(), members, FamilyMeta::custom())
    }

    /// Subfamily of members satisfying `keep`, canonical order preserved.
    pub fn filter<F: FnMut(&MemberSet) -> bool>(&self, mut keep: F) -> SetFamily {
        let members = self.members.iter().filter(|m| keep(m)).cloned().collect();
        Self::from_sorted(self.ground.clone(), members, FamilyMeta::custom())
    }

    /// Indices of members containing `t`.
    pub fn star_indices(&self, t: &MemberSet) -> Result<Vec<usize>> {
        self.check_member(t)?;
        Ok(self
            .members
            .iter()
            .enumerate()
            .filter(|(_, m)| t.bits.is_subset(&m.bits))
            .map(|(i, _)| i)
            .collect())
    }

    /// The star `F(T) = {A ∈ F : T ⊆ A}`.
    pub fn star_of(&self, t: &MemberSet) -> Result<SetFamily> {
        self.check_member(t)?;
        Ok(self.filter(|m| t.bits.is_subset(&m.bits)))
    }

    pub fn star_size(&self, t: &MemberSet) -> Result<usize> {
        self.check_member(t)?;
        Ok(self
            .members
            .iter()
            .filter(|m| t.bits.is_subset(&m.bits))
            .count())
    }

    /// Whether this family is a subfamily of `other` (same ground set).
    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.same_ground(other) && self.members.iter().all(|m| other.contains(m))
    }

    /// Re-encodes this family over `target`, mapping elements by label.
    pub fn reencode(&self, target: &Arc<GroundSet>) -> Result<SetFamily> {
        let map: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| {
                target.index_of(l).ok_or_else(|| {
                    Error::encoding(format!("label {l:?} missing from target ground"))
                })
            })
            .collect::<Result<_>>()?;
        let members = self
            .members
            .iter()
            .map(|m| {
                MemberSet::from_bits(BitSet::from_indices(
                    target.size(),
                    m.iter().map(|i| map[i]),
                ))
            })
            .collect();
        let (fam, _) = SetFamily::from_members(target.clone(), members, self.meta.clone())?;
        Ok(fam)
    }
}

/// Builds a canonical family from labels and index lists. Returns the family
/// and the number of collapsed duplicate members.
pub fn build_family<S: AsRef<str>>(
    labels: &[S],
    members: &[Vec<usize>],
) -> Result<(SetFamily, usize)> {
    let ground = GroundSet::new(labels.iter().map(|s| s.as_ref().to_string()).collect())?;
    let width = ground.size();
    let sets = members
        .iter()
        .map(|m| MemberSet::from_indices(width, m))
        .collect::<Result<Vec<_>>>()?;
    SetFamily::from_members(Arc::new(ground), sets, FamilyMeta::custom())
}

/// Largest `t`-stars of a family: `l(F,t)` with every maximizing `t`-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub t: usize,
    pub l_value: usize,
    /// Canonically ordered; empty iff `l_value == 0`.
    pub witnesses: Vec<MemberSet>,
}

/// Computes `l(F,t)` and all `t`-sets attaining it.
///
/// Only `t`-subsets of members can have non-empty stars, so those are the
/// only candidates scanned.
pub fn largest_stars(family: &SetFamily, t: usize) -> StarReport {
    let counts = star_counts(family, t);
    let l_value = counts.values().copied().max().unwrap_or(0);
    let width = family.ground.size();
    let mut witnesses: Vec<MemberSet> = counts
        .into_iter()
        .filter(|&(_, c)| c == l_value && l_value > 0)
        .map(|(k, _)| {
            MemberSet::from_bits(BitSet::from_indices(
                width,
                k.into_iter().map(|i| i as usize),
            ))
        })
        .collect();
    witnesses.sort();
    StarReport {
        t,
        l_value,
        witnesses,
    }
}

/// `l(F,t)` alone.
pub fn star_number(family: &SetFamily, t: usize) -> usize {
    star_counts(family, t).values().copied().max().unwrap_or(0)
}

/// Star size of every `t`-subset of a member that has a non-empty star.
pub fn star_counts(family: &SetFamily, t: usize) -> HashMap<Vec<u32>, usize> {
    let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
    for m in &family.members {
        if m.cardinality < t {
            continue;
        }
        let elems: Vec<u32> = m.iter().map(|i| i as u32).collect();
        for_each_combination(elems.len(), t, |idx| {
            let key: Vec<u32> = idx.iter().map(|&i| elems[i]).collect();
            *counts.entry(key).or_insert(0) += 1;
        });
    }
    counts
}

/// Whether `t_set` `t`-intersects every member of `family` (vacuously true
/// for the empty family).
pub fn is_t_transversal(t_set: &MemberSet, family: &SetFamily, t: usize) -> Result<bool> {
    family.check_member(t_set)?;
    Ok(family
        .members
        .iter()
        .all(|m| m.bits.intersects_at_least(&t_set.bits, t)))
}

/// Intersection of all members; the full ground set for the empty family.
pub fn common_core(family: &SetFamily) -> MemberSet {
    let mut bits = BitSet::new_filled(family.ground.size());
    for m in &family.members {
        bits.intersect_with(&m.bits);
    }
    MemberSet::from_bits(bits)
}

/// Whether the members share at least `t` common elements. The empty family
/// is never trivial.
pub fn is_trivial(family: &SetFamily, t: usize) -> bool {
    !family.is_empty() && common_core(family).cardinality() >= t
}

/// Declarative member filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// Members containing every element of the set.
    Contains(MemberSet),
    /// Members meeting the set in at least `at_least` elements.
    IntersectsAtLeast { set: MemberSet, at_least: usize },
    /// Members of exactly this cardinality.
    SizeEquals(usize),
}

impl Predicate {
    /// Parses the JSON form:
    /// `{"contains": [label..]}`, `{"intersects": [label..], "at_least": q}`
    /// or `{"size": k}`.
    pub fn from_json(value: &Value, family: &SetFamily) -> Result<Predicate> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::param("predicate must be a JSON object"))?;
        let labels = |key: &str| -> Result<MemberSet> {
            let arr = obj[key].as_array().ok_or_else(|| {
                Error::param(format!("predicate field {key:?} must be a list of labels"))
            })?;
            let labels = arr
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::param("predicate labels must be strings"))
                })
                .collect::<Result<Vec<_>>>()?;
            family.set_of_labels(&labels)
        };
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        match keys.as_slice() {
            ["contains"] => Ok(Predicate::Contains(labels("contains")?)),
            ["size"] => {
                let k = obj["size"]
                    .as_u64()
                    .ok_or_else(|| Error::param("predicate size must be a non-negative integer"))?;
                Ok(Predicate::SizeEquals(k as usize))
            }
            ["at_least", "intersects"] => {
                let q = obj["at_least"]
                    .as_u64()
                    .ok_or_else(|| Error::param("at_least must be a non-negative integer"))?;
                Ok(Predicate::IntersectsAtLeast {
                    set: labels("intersects")?,
                    at_least: q as usize,
                })
            }
            _ => Err(Error::param(format!("unknown predicate form {value}"))),
        }
    }

    fn check(&self, family: &SetFamily) -> Result<()> {
        match self {
            Predicate::Contains(s) | Predicate::IntersectsAtLeast { set: s, .. } => {
                family.check_member(s)
            }
            Predicate::SizeEquals(_) => Ok(()),
        }
    }

    pub fn matches(&self, m: &MemberSet) -> bool {
        match self {
            Predicate::Contains(s) => s.bits.is_subset(&m.bits),
            Predicate::IntersectsAtLeast { set, at_least } => {
                m.bits.intersects_at_least(&set.bits, *at_least)
            }
            Predicate::SizeEquals(k) => m.cardinality == *k,
        }
    }
}

pub fn subfamily_where(family: &SetFamily, predicate: &Predicate) -> Result<SetFamily> {
    predicate.check(family)?;
    Ok(family.filter(|m| predicate.matches(m)))
}

/// Re-encodes both families over the union of their labels (left labels
/// first). Labels present on one side only never intersect the other side.
pub fn align(left: &SetFamily, right: &SetFamily) -> Result<(SetFamily, SetFamily)> {
    if left.same_ground(right) {
        return Ok((left.clone(), right.clone()));
    }
    let mut labels: Vec<String> = left.ground.labels().to_vec();
    for l in right.ground.labels() {
        if left.ground.index_of(l).is_none() {
            labels.push(l.clone());
        }
    }
    let ground = Arc::new(GroundSet::new(labels)?);
    Ok((left.reencode(&ground)?, right.reencode(&ground)?))
}

/// Aligns any number of families onto one shared ground set.
pub fn align_all(families: &[SetFamily]) -> Result<Vec<SetFamily>> {
    let Some(first) = families.first() else {
        return Ok(Vec::new());
    };
    if families.iter().all(|f| f.same_ground(first)) {
        return Ok(families.to_vec());
    }
    let mut labels: Vec<String> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for f in families {
        for l in f.ground.labels() {
            if seen.insert(l.clone()) {
                labels.push(l.clone());
            }
        }
    }
    let ground = Arc::new(GroundSet::new(labels)?);
    families.iter().map(|f| f.reencode(&ground)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn level(n: usize, r: usize) -> SetFamily {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut members = Vec::new();
        for_each_combination(n, r, |c| members.push(c.to_vec()));
        build_family(&labels, &members).unwrap().0
    }

    fn set(f: &SetFamily, labels: &[&str]) -> MemberSet {
        f.set_of_labels(labels).unwrap()
    }

    #[test]
    fn build_family_examples() {
        let (f, dups) = build_family(&["a", "b", "c"], &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!((f.len(), f.max_size(), dups), (2, 2, 0));

        let (f, dups) = build_family(&["a", "b", "c"], &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((f.len(), dups), (1, 1));

        assert!(matches!(
            build_family(&["a", "b", "c"], &[vec![0, 9]]),
            Err(Error::Encoding(_))
        ));
        assert!(matches!(
            build_family(&["a", "a"], &[vec![0]]),
            Err(Error::Encoding(_))
        ));
    }

    #[test]
    fn empty_family_has_max_size_zero() {
        let (f, _) = build_family(&["a"], &[]).unwrap();
        assert_eq!(f.max_size(), 0);
        let (f, _) = build_family(&["a"], &[vec![]]).unwrap();
        assert_eq!((f.len(), f.max_size()), (1, 0));
    }

    #[test]
    fn t_intersects_examples() {
        let f = level(4, 1);
        let s12 = set(&f, &["1", "2"]);
        let s23 = set(&f, &["2", "3"]);
        assert!(t_intersects(&s12, &s23, 1).unwrap());
        assert!(!t_intersects(&s12, &s23, 2).unwrap());
        let a = set(&f, &["1", "2", "3"]);
        let b = set(&f, &["1", "2", "4"]);
        assert!(t_intersects(&a, &b, 2).unwrap());
        let other = MemberSet::empty(7);
        assert!(matches!(
            t_intersects(&a, &other, 1),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn star_of_examples() {
        let f = level(4, 2);
        let star = f.star_of(&set(&f, &["1"])).unwrap();
        assert_eq!(star.len(), 3);
        let expect: Vec<MemberSet> = [["1", "2"], ["1", "3"], ["1", "4"]]
            .iter()
            .map(|l| set(&f, l))
            .collect();
        assert_eq!(star.members(), expect.as_slice());
        assert_eq!(f.star_of(&set(&f, &["1", "2"])).unwrap().len(), 1);
        assert!(f.star_of(&set(&f, &["1", "2", "3"])).unwrap().is_empty());
    }

    #[test]
    fn largest_stars_examples() {
        let f = level(6, 2);
        let rep = largest_stars(&f, 1);
        assert_eq!(rep.l_value, 5);
        let expect: Vec<MemberSet> = (1..=6).map(|i| set(&f, &[&i.to_string()])).collect();
        assert_eq!(rep.witnesses, expect);

        let f = level(4, 2);
        let rep = largest_stars(&f, 2);
        assert_eq!(rep.l_value, 1);
        assert_eq!(rep.witnesses, f.members().to_vec());

        let singletons = level(4, 1);
        let rep = largest_stars(&singletons, 2);
        assert_eq!(rep.l_value, 0);
        assert!(rep.witnesses.is_empty());
    }

    #[test]
    fn transversal_examples() {
        let g = level(5, 1);
        let (a, _) = build_family(g.ground().labels(), &[vec![0, 2], vec![1, 3]]).unwrap();
        let a = a.reencode(g.ground()).unwrap();
        assert!(is_t_transversal(&set(&g, &["1", "2"]), &a, 1).unwrap());
        let (b, _) = build_family(g.ground().labels(), &[vec![0, 1, 2]]).unwrap();
        assert!(is_t_transversal(&set(&g, &["1", "2"]), &b, 2).unwrap());
        let (c, _) = build_family(g.ground().labels(), &[vec![0, 1]]).unwrap();
        assert!(!is_t_transversal(&set(&g, &["5"]), &c, 1).unwrap());
        assert!(
            is_t_transversal(&set(&g, &["5"]), &SetFamily::empty(g.ground().clone()), 3).unwrap()
        );
    }

    #[test]
    fn common_core_examples() {
        let labels = ["1", "2", "3", "4"];
        let (f, _) = build_family(&labels, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(common_core(&f).indices(), vec![0, 1]);
        assert!(is_trivial(&f, 2));
        let (f, _) = build_family(&labels, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(common_core(&f).indices().is_empty());
        let (f, _) = build_family(&["1", "2", "3"], &[]).unwrap();
        assert_eq!(common_core(&f).indices(), vec![0, 1, 2]);
        assert!(!is_trivial(&f, 1));
    }

    #[test]
    fn predicates() {
        let f = level(4, 2);
        let contains = Predicate::Contains(set(&f, &["1"]));
        assert_eq!(
            subfamily_where(&f, &contains).unwrap(),
            f.star_of(&set(&f, &["1"])).unwrap()
        );
        assert!(subfamily_where(&f, &Predicate::SizeEquals(99))
            .unwrap()
            .is_empty());

        let p = Predicate::from_json(
            &serde_json::json!({"intersects": ["1", "2", "3"], "at_least": 2}),
            &f,
        )
        .unwrap();
        assert_eq!(subfamily_where(&f, &p).unwrap().len(), 3);
        assert!(matches!(
            Predicate::from_json(&serde_json::json!({"frobnicate": 1}), &f),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn align_by_label() {
        let (a, _) = build_family(&["x", "y"], &[vec![0, 1]]).unwrap();
        let (b, _) = build_family(&["y", "z"], &[vec![0, 1]]).unwrap();
        let (a2, b2) = align(&a, &b).unwrap();
        assert!(a2.same_ground(&b2));
        assert_eq!(a2.ground().labels(), &["x", "y", "z"]);
        assert_eq!(a2.member(0).intersection_size(b2.member(0)).unwrap(), 1);
    }

    #[test]
    fn ground_guard() {
        let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        assert!(matches!(
            GroundSet::with_limit(labels, 5),
            Err(Error::Resource(_))
        ));
    }
}
