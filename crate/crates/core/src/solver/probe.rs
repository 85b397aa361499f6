use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bounds::{c_threshold, threshold_holds, Ratio, Side};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::generators::{ClassParams, GenLimits};

use super::{build_instance, max_product_pair, SearchLimits};

/// One probe instance: `left` against `right`, or against itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub left: ClassParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<ClassParams>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Self-pairs of `make(n)` for `n` in `range`.
    pub fn sweep(
        range: std::ops::RangeInclusive<usize>,
        make: impl Fn(usize) -> ClassParams,
    ) -> Self {
        Corpus {
            entries: range
                .map(|n| CorpusEntry {
                    left: make(n),
                    right: None,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeInstance {
    pub left: ClassParams,
    pub right: ClassParams,
    pub ratio_f: Ratio,
    pub ratio_g: Ratio,
    #[serde(with = "crate::count::decimal")]
    pub best_product: Count,
    #[serde(with = "crate::count::decimal")]
    pub star_product: Count,
    pub bound_holds: bool,
    /// Both families meet the proven threshold.
    pub premise_holds: bool,
    pub optimal: bool,
}

impl ProbeInstance {
    /// The smaller of the two ratios; `None` if either is undefined.
    pub fn min_ratio(&self) -> Option<Ratio> {
        match self.ratio_f.compare(&self.ratio_g)? {
            Ordering::Greater => Some(self.ratio_g),
            _ => Some(self.ratio_f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    /// The proven threshold; the only bound the probe certifies anything about.
    #[serde(with = "crate::count::decimal")]
    pub proven_bound: Count,
    pub instances: Vec<ProbeInstance>,
    /// Largest minimum ratio at which the product bound failed.
    pub largest_failing_ratio: Option<Ratio>,
    /// Smallest minimum ratio from which every instance in the corpus holds.
    pub smallest_holding_ratio: Option<Ratio>,
    pub violations: usize,
    /// Some instance hit a search budget; its verdict counts as unknown.
    pub incomplete: bool,
    pub note: String,
}

/// Empirical sweep of the product bound against the star ratios of each
/// corpus instance.
pub fn chi_probe(
    r: usize,
    s: usize,
    t: usize,
    corpus: &Corpus,
    limits: &SearchLimits,
) -> Result<ProbeReport> {
    if corpus.entries.is_empty() {
        return Err(Error::param("probe corpus is empty"));
    }
    let c = c_threshold(r, s, t)?;
    let gen_limits = GenLimits::default();
    let mut instances = Vec::with_capacity(corpus.entries.len());
    for entry in &corpus.entries {
        let right_params = entry.right.clone().unwrap_or_else(|| entry.left.clone());
        let f = entry.left.generate_one(&gen_limits)?;
        let g = right_params.generate_one(&gen_limits)?;
        let vf = threshold_holds(&f, r, s, t, Side::Left)?;
        let vg = threshold_holds(&g, r, s, t, Side::Right)?;
        let solve = max_product_pair(
            &build_instance(&f, &g, t)?,
            &limits.clone().with_witness_cap(1),
        );
        let star_product = vf
            .l_t
            .checked_mul(vg.l_t)
            .ok_or(Error::Overflow("star product"))?;
        instances.push(ProbeInstance {
            left: entry.left.clone(),
            right: right_params,
            ratio_f: vf.ratio(),
            ratio_g: vg.ratio(),
            best_product: solve.best_product,
            star_product,
            bound_holds: solve.best_product <= star_product,
            premise_holds: vf.holds && vg.holds,
            optimal: solve.optimal,
        });
    }

    let ratio_max = |acc: Option<Ratio>, r: Ratio| match acc {
        Some(a) if a.compare(&r) != Some(Ordering::Less) => Some(a),
        _ => Some(r),
    };
    let largest_failing_ratio = instances
        .iter()
        .filter(|i| !i.bound_holds)
        .filter_map(ProbeInstance::min_ratio)
        .fold(None, ratio_max);
    let smallest_holding_ratio = instances
        .iter()
        .filter(|i| i.bound_holds && i.optimal)
        .filter_map(ProbeInstance::min_ratio)
        .filter(|r| match &largest_failing_ratio {
            Some(f) => r.compare(f) == Some(Ordering::Greater),
            None => true,
        })
        .fold(None, |acc: Option<Ratio>, r| match acc {
            Some(a) if a.compare(&r) != Some(Ordering::Greater) => Some(a),
            _ => Some(r),
        });
    let violations = instances.iter().filter(|i| !i.bound_holds).count();
    let incomplete = instances.iter().any(|i| !i.optimal);
    let note = if violations == 0 {
        format!("empirical only: no violations in this corpus; c({r},{s},{t}) = {c} remains the only proven bound")
    } else {
        format!("empirical only: {violations} violation(s) give a lower bound on the optimal threshold; c({r},{s},{t}) = {c} is the proven bound")
    };
    Ok(ProbeReport {
        r,
        s,
        t,
        proven_bound: c,
        instances,
        largest_failing_ratio,
        smallest_holding_ratio,
        violations,
        incomplete,
        note,
    })
}
