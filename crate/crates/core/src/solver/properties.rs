use serde::Serialize;

use crate::combin::for_each_combination;
use crate::count::{checked_product, Count};
use crate::error::{Error, Result};
use crate::family::{align_all, common_core, star_number, MemberSet, SetFamily};

use super::{
    build_instance, max_product_pair, max_product_tuple, SearchLimits, SolveResult, Witness,
};

/// Whether every member of each part `t`-intersects every member of every
/// other part. `parts[i]` indexes into `families[i]`.
pub fn is_cross_t_intersecting(
    families: &[SetFamily],
    parts: &[Vec<usize>],
    t: usize,
) -> Result<bool> {
    if families.len() != parts.len() {
        return Err(Error::param("one part per family is required"));
    }
    let fams = align_all(families)?;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &a in &parts[i] {
                for &b in &parts[j] {
                    let (x, y) = (fams[i].member(a), fams[j].member(b));
                    if !x.bits().intersects_at_least(y.bits(), t) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// A `t`-set `T` with `parts[i] = F_i(T)` for every `i`, if one exists.
/// Families must share a ground set; parts must be sorted.
pub fn conjugate_star_set(
    families: &[SetFamily],
    parts: &[Vec<usize>],
    t: usize,
) -> Option<MemberSet> {
    let width = families.first()?.ground().size();
    let mut core = MemberSet::full(width);
    let mut all_empty = true;
    for (f, p) in families.iter().zip(parts) {
        if !p.is_empty() {
            all_empty = false;
            let c = common_core(&f.select(p));
            core = core.intersection(&c).ok()?;
        }
    }
    if all_empty {
        // Every part empty: a t-set outside all members would do, but the
        // cases of interest never need it.
        return None;
    }
    let core_idx = core.indices();
    let mut found = None;
    for_each_combination(core_idx.len(), t, |pick| {
        if found.is_some() {
            return;
        }
        let set: Vec<usize> = pick.iter().map(|&i| core_idx[i]).collect();
        let tset = MemberSet::from_indices(width, &set).expect("core indices are in range");
        let matches = families
            .iter()
            .zip(parts)
            .all(|(f, p)| f.star_indices(&tset).map(|s| &s == p).unwrap_or(false));
        if matches {
            found = Some(tset);
        }
    });
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Holds,
    Fails,
    Inconclusive,
}

/// One property verdict. `t_set` is the witnessing `t`-set for the strong
/// properties; `counterexample` is a tuple of member indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub t_set: Option<Vec<String>>,
    pub counterexample: Option<Witness>,
    /// The equality clause concerns product zero and was not evaluated.
    pub degenerate: bool,
}

impl Verdict {
    fn holds(t_set: Option<Vec<String>>) -> Self {
        Verdict {
            status: VerdictStatus::Holds,
            t_set,
            counterexample: None,
            degenerate: false,
        }
    }

    fn fails(counterexample: Witness) -> Self {
        Verdict {
            status: VerdictStatus::Fails,
            t_set: None,
            counterexample: Some(counterexample),
            degenerate: false,
        }
    }

    fn inconclusive() -> Self {
        Verdict {
            status: VerdictStatus::Inconclusive,
            t_set: None,
            counterexample: None,
            degenerate: false,
        }
    }

    fn degenerate(mut self) -> Self {
        self.degenerate = true;
        self
    }

    pub fn holds_bool(&self) -> Option<bool> {
        match self.status {
            VerdictStatus::Holds => Some(true),
            VerdictStatus::Fails => Some(false),
            VerdictStatus::Inconclusive => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub t: usize,
    /// `l(F_i, t)` for each family.
    #[serde(serialize_with = "ser_counts")]
    pub star_sizes: Vec<Count>,
    #[serde(with = "crate::count::decimal")]
    pub star_product: Count,
    /// Largest `∏ |F_i(T)|` over `t`-sets `T`.
    #[serde(with = "crate::count::decimal")]
    pub best_conjugate_product: Count,
    pub solve: SolveResult,
    pub cross_t_star: Verdict,
    pub strict: Verdict,
    pub strong: Verdict,
    pub extrastrong: Verdict,
}

fn ser_counts<S: serde::Serializer>(v: &[Count], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl PropertyReport {
    /// `(d) ⇒ (b), (d) ⇒ (c), (b) ⇒ (a), (c) ⇒ (a)` on the decided verdicts.
    pub fn implications_hold(&self) -> bool {
        let imp = |p: &Verdict, q: &Verdict| {
            !(p.holds_bool() == Some(true) && q.holds_bool() == Some(false))
        };
        imp(&self.extrastrong, &self.strict)
            && imp(&self.extrastrong, &self.strong)
            && imp(&self.strict, &self.cross_t_star)
            && imp(&self.strong, &self.cross_t_star)
    }
}

/// The `t`-set maximizing `∏ |F_i(T)|` (first in canonical order) and that
/// product. Candidates are the `t`-subsets of members.
fn best_conjugate(fams: &[SetFamily], t: usize) -> Result<(Option<MemberSet>, Count)> {
    let width = fams[0].ground().size();
    let mut cands: Vec<Vec<usize>> = Vec::new();
    for f in fams {
        for m in f.members() {
            let idx = m.indices();
            for_each_combination(idx.len(), t, |pick| {
                cands.push(pick.iter().map(|&i| idx[i]).collect())
            });
        }
    }
    cands.sort();
    cands.dedup();
    let mut best: Option<(Vec<usize>, Count)> = None;
    for c in cands {
        let tset = MemberSet::from_indices(width, &c)?;
        let sizes: Vec<Count> = fams
            .iter()
            .map(|f| f.star_size(&tset).map(|s| s as Count))
            .collect::<Result<_>>()?;
        let p = checked_product(sizes)?;
        if best.as_ref().is_none_or(|(_, b)| p > *b) {
            best = Some((c, p));
        }
    }
    match best {
        Some((c, p)) => Ok((Some(MemberSet::from_indices(width, &c)?), p)),
        None => Ok((None, 0)),
    }
}

fn labels(f: &SetFamily, s: &MemberSet) -> Vec<String> {
    s.iter().map(|i| f.ground().label(i).to_string()).collect()
}

/// Decides the four cross-`t`-star properties of `families` from an exact
/// solve with the full witness list.
///
/// Witness and counterexample indices refer to the families re-encoded over
/// the union of their ground sets. When the product bound in an equality
/// clause is zero, the clause is not evaluated and the verdict is flagged
/// degenerate.
pub fn classify_properties(
    families: &[SetFamily],
    t: usize,
    limits: &SearchLimits,
) -> Result<PropertyReport> {
    if families.len() < 2 {
        return Err(Error::param("at least two families are required"));
    }
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let fams = align_all(families)?;
    let limits = limits.clone().with_witness_cap(usize::MAX);
    let solve = if fams.len() == 2 {
        max_product_pair(&build_instance(&fams[0], &fams[1], t)?, &limits)
    } else {
        max_product_tuple(&fams, t, &limits)?
    };
    let star_sizes: Vec<Count> = fams.iter().map(|f| star_number(f, t) as Count).collect();
    let star_product = checked_product(star_sizes.iter().copied())?;
    let (best_t, conj) = best_conjugate(&fams, t)?;
    let best = solve.best_product;

    if !solve.optimal {
        return Ok(PropertyReport {
            t,
            star_sizes,
            star_product,
            best_conjugate_product: conj,
            solve,
            cross_t_star: Verdict::inconclusive(),
            strict: Verdict::inconclusive(),
            strong: Verdict::inconclusive(),
            extrastrong: Verdict::inconclusive(),
        });
    }

    let first_witness = || {
        solve
            .witnesses
            .first()
            .cloned()
            .expect("positive optimum has a witness")
    };
    let non_conjugate = solve
        .witnesses
        .iter()
        .find(|w| conjugate_star_set(&fams, &w.parts, t).is_none())
        .cloned();
    let t_labels = best_t.as_ref().map(|s| labels(&fams[0], s));

    let cross_t_star = if best <= star_product {
        Verdict::holds(None)
    } else {
        Verdict::fails(first_witness())
    };

    // Tuples attaining a positive optimum are closed, so the witness list
    // holds all of them.
    let strict = if best > star_product {
        Verdict::fails(first_witness())
    } else if star_product == 0 {
        Verdict::holds(None).degenerate()
    } else if best < star_product {
        Verdict::holds(None)
    } else {
        match &non_conjugate {
            Some(w) => Verdict::fails(w.clone()),
            None => Verdict::holds(None),
        }
    };

    // Conjugate stars are themselves a feasible tuple, so `conj <= best`
    // and the strong property is exactly `conj == best`.
    let strong = if conj >= best {
        Verdict::holds(t_labels.clone())
    } else {
        Verdict::fails(first_witness())
    };

    let extrastrong = if conj < best {
        Verdict::fails(first_witness())
    } else if best == 0 {
        Verdict::holds(t_labels.clone()).degenerate()
    } else {
        match &non_conjugate {
            Some(w) => Verdict::fails(w.clone()),
            None => Verdict::holds(t_labels),
        }
    };

    Ok(PropertyReport {
        t,
        star_sizes,
        star_product,
        best_conjugate_product: conj,
        solve,
        cross_t_star,
        strict,
        strong,
        extrastrong,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Predicate;
    use crate::generators::{gen_example1, gen_level, gen_sequences, GenLimits};

    #[test]
    fn level_pair_has_all_properties() {
        let f = gen_level(6, 2).unwrap();
        let rep = classify_properties(&[f.clone(), f], 1, &SearchLimits::default()).unwrap();
        for v in [
            &rep.cross_t_star,
            &rep.strict,
            &rep.strong,
            &rep.extrastrong,
        ] {
            assert_eq!(v.status, VerdictStatus::Holds);
            assert!(!v.degenerate);
        }
        assert_eq!(rep.strong.t_set.as_deref(), Some(&["1".to_string()][..]));
        assert!(rep.implications_hold());
    }

    #[test]
    fn example1_strict_not_strong() {
        let fams = gen_example1(1, &[2, 2], &[3, 2]).unwrap();
        let rep = classify_properties(&fams, 1, &SearchLimits::default()).unwrap();
        assert_eq!(rep.star_product, 6);
        assert_eq!(rep.solve.best_product, 4);
        assert_eq!(rep.strict.status, VerdictStatus::Holds);
        assert_eq!(rep.strong.status, VerdictStatus::Fails);
        assert_eq!(rep.extrastrong.status, VerdictStatus::Fails);
        assert!(rep.implications_hold());
    }

    #[test]
    fn short_sequences_break_the_bound() {
        let (base, _) =
            crate::family::build_family(&["1", "2", "3", "4"], &[vec![0, 1, 2, 3]]).unwrap();
        let s = gen_sequences(&base, 2, &GenLimits::default()).unwrap();
        let rep =
            classify_properties(&[s.clone(), s.clone()], 2, &SearchLimits::default()).unwrap();
        assert_eq!(rep.star_product, 16);
        assert!(rep.solve.best_product >= 25);
        assert_eq!(rep.cross_t_star.status, VerdictStatus::Fails);
        assert!(rep.implications_hold());
        let first = ["(1,1)", "(2,1)", "(3,1)", "(4,1)"];
        let pred = Predicate::IntersectsAtLeast {
            set: s.set_of_labels(&first).unwrap(),
            at_least: 3,
        };
        assert_eq!(crate::family::subfamily_where(&s, &pred).unwrap().len(), 5);
    }

    #[test]
    fn conjugate_detection() {
        let f = gen_level(4, 2).unwrap();
        let one = f.set_of_labels(&["1"]).unwrap();
        let star = f.star_indices(&one).unwrap();
        let t =
            conjugate_star_set(&[f.clone(), f.clone()], &[star.clone(), star.clone()], 1).unwrap();
        assert_eq!(t, one);
        assert!(conjugate_star_set(&[f.clone(), f.clone()], &[star, vec![0]], 1).is_none());
    }

    #[test]
    fn cross_check_helper() {
        let f = gen_level(4, 2).unwrap();
        assert!(
            is_cross_t_intersecting(&[f.clone(), f.clone()], &[vec![0, 1], vec![0]], 1).unwrap()
        );
        // {1,2} and {3,4}
        let a = f.index_of(&f.set_of_labels(&["1", "2"]).unwrap()).unwrap();
        let b = f.index_of(&f.set_of_labels(&["3", "4"]).unwrap()).unwrap();
        assert!(!is_cross_t_intersecting(&[f.clone(), f], &[vec![a], vec![b]], 1).unwrap());
    }

    #[test]
    fn disjoint_singletons_are_degenerate_for_extrastrong() {
        let (f, _) = crate::family::build_family(&["1", "2"], &[vec![0]]).unwrap();
        let (g, _) = crate::family::build_family(&["1", "2"], &[vec![1]]).unwrap();
        let rep = classify_properties(&[f, g], 1, &SearchLimits::default()).unwrap();
        assert_eq!(rep.solve.best_product, 0);
        assert_eq!(rep.strict.status, VerdictStatus::Holds);
        assert!(rep.extrastrong.degenerate);
    }
}
