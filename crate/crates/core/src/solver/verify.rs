use std::collections::BTreeSet;

use serde::Serialize;

use crate::bounds::{threshold_holds, Side, ThresholdVerdict};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::family::{largest_stars, MemberSet, SetFamily};

use super::properties::conjugate_star_set;
use super::{build_instance, max_product_pair, SearchLimits, SolveResult, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "premise-unmet")]
    PremiseUnmet,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheckReport {
    #[serde(with = "crate::count::decimal")]
    pub best_product: Count,
    #[serde(with = "crate::count::decimal")]
    pub star_product: Count,
    pub holds: bool,
}

/// Equality-case check: every witness at `best = l(F,t)·l(G,t)` must be a
/// conjugate star pair, and every conjugate pair of largest stars must be a
/// witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessCheck {
    /// Whether the equality case arises (`best` equals a positive star product).
    pub applicable: bool,
    pub equality_witnesses: u64,
    /// Distinct pairs `(F(T), G(T))` with both stars largest.
    pub conjugate_pairs: u64,
    /// The `t`-set of each equality witness, in witness order.
    pub t_sets: Vec<Vec<String>>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub status: Status,
    pub premise_left: ThresholdVerdict,
    pub premise_right: ThresholdVerdict,
    pub bound_check: BoundCheckReport,
    pub uniqueness_check: UniquenessCheck,
    /// Set exactly when `status` is a violation.
    pub counterexample: Option<Witness>,
    pub solve: SolveResult,
}

/// Distinct conjugate pairs of largest stars, as sorted index lists.
fn largest_conjugate_pairs(f: &SetFamily, g: &SetFamily, t: usize) -> Result<BTreeSet<Witness>> {
    let lf = largest_stars(f, t);
    let lg = largest_stars(g, t);
    let mut out = BTreeSet::new();
    if lf.l_value == 0 || lg.l_value == 0 {
        return Ok(out);
    }
    let gw: BTreeSet<Vec<usize>> = lg.witnesses.iter().map(MemberSet::indices).collect();
    for w in &lf.witnesses {
        if gw.contains(&w.indices()) {
            out.insert(Witness {
                parts: vec![f.star_indices(w)?, g.star_indices(w)?],
            });
        }
    }
    Ok(out)
}

/// Exhaustive check of the product bound and its equality case for a
/// `(≤ r)`-family `f` and a `(≤ s)`-family `g`.
///
/// The solve always runs so that premise-unmet instances still report the
/// true optimum. Witness indices refer to the families over their common
/// ground set.
pub fn verify_main_theorem(
    f: &SetFamily,
    g: &SetFamily,
    r: usize,
    s: usize,
    t: usize,
    limits: &SearchLimits,
) -> Result<VerificationReport> {
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let premise_left = threshold_holds(f, r, s, t, Side::Left)?;
    let premise_right = threshold_holds(g, r, s, t, Side::Right)?;
    let inst = build_instance(f, g, t)?;
    let (f, g) = (&inst.left, &inst.right);
    let solve = max_product_pair(&inst, &limits.clone().with_witness_cap(usize::MAX));

    let star_product = premise_left
        .l_t
        .checked_mul(premise_right.l_t)
        .ok_or(Error::Overflow("star product"))?;
    let best = solve.best_product;
    let bound_check = BoundCheckReport {
        best_product: best,
        star_product,
        holds: best <= star_product,
    };

    let applicable = star_product > 0 && best == star_product;
    let mut t_sets = Vec::new();
    let mut counterexample = None;
    let mut conjugate_pairs = 0;
    if applicable {
        let pairs = largest_conjugate_pairs(f, g, t)?;
        conjugate_pairs = pairs.len() as u64;
        let fams = [f.clone(), g.clone()];
        for w in &solve.witnesses {
            match conjugate_star_set(&fams, &w.parts, t) {
                Some(ts) => {
                    t_sets.push(ts.iter().map(|i| f.ground().label(i).to_string()).collect())
                }
                None => {
                    counterexample.get_or_insert_with(|| w.clone());
                }
            }
        }
        if counterexample.is_none() {
            let found: BTreeSet<Witness> = solve.witnesses.iter().cloned().collect();
            if let Some(missing) = pairs.difference(&found).next() {
                counterexample = Some(missing.clone());
            }
        }
    }
    let uniqueness_check = UniquenessCheck {
        applicable,
        equality_witnesses: if applicable { solve.witness_count } else { 0 },
        conjugate_pairs,
        t_sets,
        holds: counterexample.is_none(),
    };

    let premises = premise_left.holds && premise_right.holds;
    let status = if !solve.optimal {
        Status::Inconclusive
    } else if !premises {
        Status::PremiseUnmet
    } else if !bound_check.holds {
        counterexample = solve.witnesses.first().cloned();
        Status::Violation
    } else if counterexample.is_some() {
        Status::Violation
    } else {
        Status::Verified
    };
    if status != Status::Violation {
        counterexample = None;
    }

    Ok(VerificationReport {
        status,
        premise_left,
        premise_right,
        bound_check,
        uniqueness_check,
        counterexample,
        solve,
    })
}
