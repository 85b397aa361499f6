//! The threshold multiplier `c(r,s,t)`, star-size ratios and the two
//! transversal counting bounds.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::count::{binomial, gcd, Count};
use crate::error::{Error, Result};
use crate::family::{is_t_transversal, star_number, MemberSet, SetFamily};
use crate::generators::ClassParams;

/// `max{r·C(s,t), s·C(r,t)} + 1` when `t <= min(r,s)`, else `1`.
pub fn c_threshold(r: usize, s: usize, t: usize) -> Result<Count> {
    if r < 1 || s < 1 || t < 1 {
        return Err(Error::param("c(r,s,t) needs r, s, t >= 1"));
    }
    if t > r.min(s) {
        return Ok(1);
    }
    let a = (r as Count)
        .checked_mul(binomial(s as u64, t as u64)?)
        .ok_or(Error::Overflow("c threshold"))?;
    let b = (s as Count)
        .checked_mul(binomial(r as u64, t as u64)?)
        .ok_or(Error::Overflow("c threshold"))?;
    a.max(b)
        .checked_add(1)
        .ok_or(Error::Overflow("c threshold"))
}

/// A non-negative exact ratio with sentinels for a zero denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ratio {
    /// Reduced, `den > 0`.
    Finite { num: Count, den: Count },
    /// Positive over zero.
    Unbounded,
    /// Zero over zero.
    Undefined,
}

impl Ratio {
    pub fn new(num: Count, den: Count) -> Ratio {
        if den == 0 {
            return if num == 0 {
                Ratio::Undefined
            } else {
                Ratio::Unbounded
            };
        }
        let g = gcd(num, den);
        Ratio::Finite {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(v: Count) -> Ratio {
        Ratio::Finite { num: v, den: 1 }
    }

    /// Whether `numerator >= c · denominator`. Both sentinels satisfy every
    /// threshold, matching the literal inequality with a zero right side.
    pub fn at_least(&self, c: Count) -> bool {
        match *self {
            Ratio::Finite { num, den } => cmp_fractions(num, den, c, 1) != Ordering::Less,
            Ratio::Unbounded | Ratio::Undefined => true,
        }
    }

    /// Exact comparison of finite ratios; `Unbounded` sorts above every
    /// finite value. Returns `None` if either side is `Undefined`.
    pub fn compare(&self, other: &Ratio) -> Option<Ordering> {
        use Ratio::*;
        match (*self, *other) {
            (Undefined, _) | (_, Undefined) => None,
            (Unbounded, Unbounded) => Some(Ordering::Equal),
            (Unbounded, Finite { .. }) => Some(Ordering::Greater),
            (Finite { .. }, Unbounded) => Some(Ordering::Less),
            (Finite { num: a, den: b }, Finite { num: c, den: d }) => {
                Some(cmp_fractions(a, b, c, d))
            }
        }
    }
}

/// Compares `a/b` with `c/d` (`b, d > 0`) without overflow, by continued
/// fraction expansion.
fn cmp_fractions(a: Count, b: Count, c: Count, d: Count) -> Ordering {
    if let (Some(x), Some(y)) = (a.checked_mul(d), c.checked_mul(b)) {
        return x.cmp(&y);
    }
    let (qa, ra) = (a / b, a % b);
    let (qc, rc) = (c / d, c % d);
    match qa.cmp(&qc) {
        Ordering::Equal => match (ra == 0, rc == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            // ra/b vs rc/d is the reverse of b/ra vs d/rc.
            (false, false) => cmp_fractions(d, rc, b, ra),
        },
        ord => ord,
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite { num, den: 1 } => write!(f, "{num}"),
            Ratio::Finite { num, den } => write!(f, "{num}/{den}"),
            Ratio::Unbounded => f.write_str("unbounded"),
            Ratio::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `l(F,t) / l(F,t+1)` from exhaustive star scans.
pub fn star_ratio(family: &SetFamily, t: usize) -> Ratio {
    let lt = star_number(family, t) as Count;
    let lt1 = star_number(family, t + 1) as Count;
    Ratio::new(lt, lt1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioKind {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormRatio {
    pub ratio: Ratio,
    pub kind: RatioKind,
}

/// Closed-form value (or lower bound) of `l(F,t) / l(F,t+1)` for a class.
pub fn closed_form_ratio(params: &ClassParams, t: usize) -> Result<ClosedFormRatio> {
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let exact = |num: usize, den: usize| ClosedFormRatio {
        ratio: Ratio::new(num as Count, den as Count),
        kind: RatioKind::Exact,
    };
    let lower = |num: usize, den: usize| ClosedFormRatio {
        ratio: Ratio::new(num as Count, den as Count),
        kind: RatioKind::LowerBound,
    };
    match *params {
        ClassParams::Level { n, r: p } => {
            if p < t + 1 || p > n {
                return Err(Error::param(format!(
                    "level ratio needs t+1 <= p <= n (n={n}, p={p}, t={t})"
                )));
            }
            Ok(exact(n - t, p - t))
        }
        ClassParams::Multisets { n, r: p } => {
            if p < t + 1 || n < 1 {
                return Err(Error::param(format!(
                    "multiset ratio needs p >= t+1 and n >= 1 (n={n}, p={p}, t={t})"
                )));
            }
            Ok(exact(n + p - t - 1, p - t))
        }
        ClassParams::Compositions { n, r: p } => {
            if p < t + 1 || p > n {
                return Err(Error::param(format!(
                    "composition ratio needs t+1 <= p <= n (n={n}, p={p}, t={t})"
                )));
            }
            if p == t + 1 {
                // Fixing t coordinates leaves one coordinate, which is forced.
                Ok(exact(1, 1))
            } else {
                Ok(exact(n - t - 1, p - t - 1))
            }
        }
        ClassParams::Sequences { m, .. } => Ok(lower(m, 1)),
        ClassParams::Permutations { m, .. } => {
            if m < t {
                return Err(Error::param(format!(
                    "permutation ratio needs m >= t (m={m}, t={t})"
                )));
            }
            Ok(lower(m - t, 1))
        }
        ClassParams::Partitions { n, r } => {
            if !(t + 1 < r && r < n) {
                return Err(Error::param(format!(
                    "partition ratio needs t+1 < r < n (n={n}, r={r}, t={t})"
                )));
            }
            Ok(lower(n - t - 1, r - t - 1))
        }
        ClassParams::Powerset { .. } | ClassParams::Example1 { .. } => Err(Error::param(format!(
            "no closed-form ratio for class {}",
            params.class_name()
        ))),
    }
}

/// Which size bound of `c(r,s,t)` a family is declared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The `(<= r)` family.
    Left,
    /// The `(<= s)` family.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdVerdict {
    #[serde(with = "crate::count::decimal")]
    pub c_value: Count,
    #[serde(with = "crate::count::decimal")]
    pub l_t: Count,
    #[serde(with = "crate::count::decimal")]
    pub l_t1: Count,
    pub holds: bool,
}

impl ThresholdVerdict {
    pub fn ratio(&self) -> Ratio {
        Ratio::new(self.l_t, self.l_t1)
    }
}

/// Checks `l(F,t) >= c(r,s,t) · l(F,t+1)` for a family declared as the
/// `(<= r)` side or the `(<= s)` side.
pub fn threshold_holds(
    family: &SetFamily,
    r: usize,
    s: usize,
    t: usize,
    side: Side,
) -> Result<ThresholdVerdict> {
    let declared = match side {
        Side::Left => r,
        Side::Right => s,
    };
    if family.max_size() > declared {
        return Err(Error::param(format!(
            "family has a member of size {} but was declared a (<= {declared})-family",
            family.max_size()
        )));
    }
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let c_value = c_threshold(r, s, t)?;
    let l_t = star_number(family, t) as Count;
    let l_t1 = star_number(family, t + 1) as Count;
    let rhs = c_value
        .checked_mul(l_t1)
        .ok_or(Error::Overflow("threshold"))?;
    Ok(ThresholdVerdict {
        c_value,
        l_t,
        l_t1,
        holds: l_t >= rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub size: usize,
    #[serde(with = "crate::count::decimal")]
    pub bound: Count,
    pub satisfied: bool,
}

/// Result of a bound check whose preconditions may not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundOutcome {
    Checked(BoundCheck),
    PreconditionViolated(String),
}

impl BoundOutcome {
    pub fn satisfied(&self) -> Option<bool> {
        match self {
            BoundOutcome::Checked(c) => Some(c.satisfied),
            BoundOutcome::PreconditionViolated(_) => None,
        }
    }
}

fn check_base(t_set: &MemberSet, family: &SetFamily, sub: &SetFamily, t: usize) -> Option<String> {
    if t < 1 {
        return Some("t must be at least 1".into());
    }
    if t_set.width() != family.ground().size() || !family.same_ground(sub) {
        return Some("sets and families are over different ground sets".into());
    }
    if !sub.is_subfamily_of(family) {
        return Some("A is not a subfamily of F".into());
    }
    match is_t_transversal(t_set, sub, t) {
        Ok(true) => None,
        _ => Some("T is not a t-transversal of A".into()),
    }
}

/// `|A| <= C(|T|,t) · l(F,t)` for a `t`-transversal `T` of `A ⊆ F`.
pub fn transversal_bound(
    t_set: &MemberSet,
    family: &SetFamily,
    sub: &SetFamily,
    t: usize,
) -> Result<BoundOutcome> {
    if let Some(why) = check_base(t_set, family, sub, t) {
        return Ok(BoundOutcome::PreconditionViolated(why));
    }
    let l = star_number(family, t) as Count;
    let bound = binomial(t_set.cardinality() as u64, t as u64)?
        .checked_mul(l)
        .ok_or(Error::Overflow("transversal bound"))?;
    let size = sub.len();
    Ok(BoundOutcome::Checked(BoundCheck {
        size,
        bound,
        satisfied: size as Count <= bound,
    }))
}

/// `|A| <= |T \ X| · l(F,t+1)` for `A ⊆ F(X)`, `|X| = t`, `X ⊄ T` and `T` a
/// `t`-transversal of `A`.
pub fn refined_transversal_bound(
    t_set: &MemberSet,
    x: &MemberSet,
    family: &SetFamily,
    sub: &SetFamily,
    t: usize,
) -> Result<BoundOutcome> {
    if let Some(why) = check_base(t_set, family, sub, t) {
        return Ok(BoundOutcome::PreconditionViolated(why));
    }
    if x.width() != t_set.width() {
        return Ok(BoundOutcome::PreconditionViolated(
            "X is over a different ground set".into(),
        ));
    }
    if x.cardinality() != t {
        return Ok(BoundOutcome::PreconditionViolated(format!(
            "|X| = {} but t = {t}",
            x.cardinality()
        )));
    }
    if x.is_subset_of(t_set)? {
        return Ok(BoundOutcome::PreconditionViolated(
            "X is contained in T".into(),
        ));
    }
    if !sub.members().iter().all(|a| x.bits().is_subset(a.bits())) {
        return Ok(BoundOutcome::PreconditionViolated(
            "A is not inside the star F(X)".into(),
        ));
    }
    let l1 = star_number(family, t + 1) as Count;
    let outside = t_set.difference(x)?.cardinality() as Count;
    let bound = outside
        .checked_mul(l1)
        .ok_or(Error::Overflow("refined bound"))?;
    let size = sub.len();
    Ok(BoundOutcome::Checked(BoundCheck {
        size,
        bound,
        satisfied: size as Count <= bound,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_level, gen_multisets};

    #[test]
    fn c_threshold_examples() {
        assert_eq!(c_threshold(2, 3, 1).unwrap(), 7);
        assert_eq!(c_threshold(3, 3, 2).unwrap(), 10);
        assert_eq!(c_threshold(1, 2, 3).unwrap(), 1);
        assert_eq!(c_threshold(2, 2, 1).unwrap(), 5);
        assert!(c_threshold(0, 2, 1).is_err());
    }

    #[test]
    fn c_threshold_is_symmetric() {
        for r in 1..=8 {
            for s in 1..=8 {
                for t in 1..=8 {
                    assert_eq!(c_threshold(r, s, t).unwrap(), c_threshold(s, r, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn ratio_reduction_and_sentinels() {
        assert_eq!(Ratio::new(10, 4), Ratio::Finite { num: 5, den: 2 });
        assert_eq!(Ratio::new(1, 0), Ratio::Unbounded);
        assert_eq!(Ratio::new(0, 0), Ratio::Undefined);
        assert_eq!(Ratio::new(0, 7), Ratio::integer(0));
        assert!(Ratio::Unbounded.at_least(1000));
        assert!(Ratio::Undefined.at_least(1000));
        assert!(Ratio::new(5, 1).at_least(5));
        assert!(!Ratio::new(9, 2).at_least(5));
        assert_eq!(Ratio::new(7, 2).to_string(), "7/2");
    }

    #[test]
    fn ratio_comparison_survives_overflow() {
        let big = u128::MAX / 3;
        let a = Ratio::new(big, big - 1);
        let b = Ratio::new(big - 1, big - 2);
        assert_eq!(a.compare(&b), Some(Ordering::Less));
        assert_eq!(b.compare(&a), Some(Ordering::Greater));
        assert_eq!(a.compare(&a), Some(Ordering::Equal));
        assert_eq!(Ratio::Unbounded.compare(&a), Some(Ordering::Greater));
        assert_eq!(Ratio::Undefined.compare(&a), None);
    }

    #[test]
    fn star_ratio_examples() {
        assert_eq!(star_ratio(&gen_level(6, 2).unwrap(), 1), Ratio::integer(5));
        assert_eq!(
            star_ratio(&gen_multisets(3, 2).unwrap(), 1),
            Ratio::integer(3)
        );
        assert_eq!(star_ratio(&gen_level(4, 1).unwrap(), 1), Ratio::Unbounded);
        assert_eq!(star_ratio(&gen_level(4, 1).unwrap(), 2), Ratio::Undefined);
    }

    #[test]
    fn closed_form_examples() {
        let cf = closed_form_ratio(&ClassParams::Level { n: 6, r: 2 }, 1).unwrap();
        assert_eq!((cf.ratio, cf.kind), (Ratio::integer(5), RatioKind::Exact));
        let cf = closed_form_ratio(&ClassParams::Compositions { n: 6, r: 3 }, 1).unwrap();
        assert_eq!((cf.ratio, cf.kind), (Ratio::integer(4), RatioKind::Exact));
        let cf = closed_form_ratio(&ClassParams::Partitions { n: 6, r: 4 }, 2).unwrap();
        assert_eq!(
            (cf.ratio, cf.kind),
            (Ratio::integer(3), RatioKind::LowerBound)
        );
        let cf = closed_form_ratio(
            &ClassParams::Permutations {
                n: 3,
                m: 5,
                base_r: None,
            },
            2,
        )
        .unwrap();
        assert_eq!(cf.ratio, Ratio::integer(3));
        assert!(closed_form_ratio(&ClassParams::Level { n: 6, r: 1 }, 1).is_err());
        assert!(closed_form_ratio(&ClassParams::Powerset { n: 3 }, 1).is_err());
    }

    #[test]
    fn threshold_examples() {
        let v = threshold_holds(&gen_level(6, 2).unwrap(), 2, 2, 1, Side::Left).unwrap();
        assert_eq!((v.c_value, v.l_t, v.l_t1, v.holds), (5, 5, 1, true));
        let v = threshold_holds(&gen_level(5, 2).unwrap(), 2, 2, 1, Side::Left).unwrap();
        assert_eq!((v.l_t, v.holds), (4, false));
        let v = threshold_holds(&gen_level(5, 1).unwrap(), 2, 2, 1, Side::Right).unwrap();
        assert_eq!((v.l_t1, v.holds), (0, true));
        assert!(threshold_holds(&gen_level(5, 3).unwrap(), 2, 3, 1, Side::Left).is_err());
        assert!(threshold_holds(&gen_level(5, 3).unwrap(), 2, 3, 1, Side::Right).is_ok());
    }

    #[test]
    fn transversal_bound_examples() {
        let f = gen_level(6, 2).unwrap();
        let one = f.set_of_labels(&["1"]).unwrap();
        let a = f.star_of(&one).unwrap();
        let t = f.set_of_labels(&["1", "2"]).unwrap();
        let out = transversal_bound(&t, &f, &a, 1).unwrap();
        assert_eq!(
            out,
            BoundOutcome::Checked(BoundCheck {
                size: 5,
                bound: 10,
                satisfied: true
            })
        );

        let empty = f.filter(|_| false);
        assert_eq!(
            transversal_bound(&t, &f, &empty, 1).unwrap().satisfied(),
            Some(true)
        );

        let single = f.filter(|m| *m == t);
        let out = transversal_bound(&t, &f, &single, 2).unwrap();
        assert_eq!(
            out,
            BoundOutcome::Checked(BoundCheck {
                size: 1,
                bound: 1,
                satisfied: true
            })
        );

        let far = f.set_of_labels(&["5", "6"]).unwrap();
        assert!(matches!(
            transversal_bound(&far, &f, &a, 1).unwrap(),
            BoundOutcome::PreconditionViolated(_)
        ));
    }

    #[test]
    fn refined_bound_examples() {
        let f = gen_level(6, 2).unwrap();
        let x = f.set_of_labels(&["1"]).unwrap();
        let a = f.filter(|m| {
            *m == f.set_of_labels(&["1", "2"]).unwrap()
                || *m == f.set_of_labels(&["1", "3"]).unwrap()
        });
        let t = f.set_of_labels(&["2", "3"]).unwrap();
        let out = refined_transversal_bound(&t, &x, &f, &a, 1).unwrap();
        assert_eq!(
            out,
            BoundOutcome::Checked(BoundCheck {
                size: 2,
                bound: 2,
                satisfied: true
            })
        );

        let empty = f.filter(|_| false);
        assert_eq!(
            refined_transversal_bound(&t, &x, &f, &empty, 1)
                .unwrap()
                .satisfied(),
            Some(true)
        );

        let t_with_x = f.set_of_labels(&["1", "2"]).unwrap();
        assert!(matches!(
            refined_transversal_bound(&t_with_x, &x, &f, &a, 1).unwrap(),
            BoundOutcome::PreconditionViolated(_)
        ));
    }
}
