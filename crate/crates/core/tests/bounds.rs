mod common;

use common::{brute_stars, meet, members};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starlab_core::{
    binomial, closed_form_ratio, gen_random, refined_transversal_bound, star_ratio,
    transversal_bound, BoundOutcome, ClassParams, GenLimits, MemberSet, Ratio, RatioKind,
};

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

#[test]
fn transversal_bound_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(3..=8);
        let t = rng.gen_range(1..=2);
        let f = gen_random(n, rng.gen_range(1..=20), 4, &mut rng).unwrap();
        let t_idx = random_set(&mut rng, n);
        let ms = members(&f);
        let hit: Vec<usize> = (0..ms.len())
            .filter(|&i| meet(&ms[i], &t_idx) >= t)
            .collect();
        let chosen: Vec<usize> = hit.into_iter().filter(|_| rng.gen_bool(0.7)).collect();
        let sub = f.select(&chosen);
        let tset = MemberSet::from_indices(n, &t_idx).unwrap();
        match transversal_bound(&tset, &f, &sub, t).unwrap() {
            BoundOutcome::Checked(c) => {
                let (l, _) = brute_stars(&f, t);
                let bound = binomial(t_idx.len() as u64, t as u64).unwrap() * l as u128;
                assert_eq!(c.bound, bound);
                assert_eq!(c.size, chosen.len());
                assert!(
                    c.satisfied && (c.size as u128) <= bound,
                    "|A| = {} > {bound}",
                    c.size
                );
                checked += 1;
            }
            BoundOutcome::PreconditionViolated(why) => panic!("generated instance rejected: {why}"),
        }
    }
}

#[test]
fn refined_bound_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(3..=8);
        let t = rng.gen_range(1..=2);
        let f = gen_random(n, rng.gen_range(1..=20), 5, &mut rng).unwrap();
        let ms = members(&f);
        let Some(base) = ms
            .iter()
            .filter(|m| m.len() >= t)
            .collect::<Vec<_>>()
            .choose(&mut rng)
            .cloned()
        else {
            continue;
        };
        let x: Vec<usize> = base
            .choose_multiple(&mut rng, t)
            .copied()
            .collect::<Vec<_>>();
        let mut x = x;
        x.sort();
        let t_idx = random_set(&mut rng, n);
        if meet(&x, &t_idx) == t {
            continue;
        }
        let ok: Vec<usize> = (0..ms.len())
            .filter(|&i| meet(&ms[i], &x) == t && meet(&ms[i], &t_idx) >= t)
            .filter(|_| rng.gen_bool(0.8))
            .collect();
        let sub = f.select(&ok);
        let tset = MemberSet::from_indices(n, &t_idx).unwrap();
        let xset = MemberSet::from_indices(n, &x).unwrap();
        match refined_transversal_bound(&tset, &xset, &f, &sub, t).unwrap() {
            BoundOutcome::Checked(c) => {
                let (l1, _) = brute_stars(&f, t + 1);
                let outside = t_idx.iter().filter(|e| !x.contains(e)).count();
                let bound = outside as u128 * l1 as u128;
                assert_eq!(c.bound, bound);
                assert!(c.satisfied && (ok.len() as u128) <= bound);
                checked += 1;
            }
            BoundOutcome::PreconditionViolated(why) => panic!("generated instance rejected: {why}"),
        }
    }
}

#[test]
fn refined_bound_reports_preconditions() {
    let f = starlab_core::gen_level(6, 2).unwrap();
    let t = f.set_of_labels(&["1", "2"]).unwrap();
    let x = f.set_of_labels(&["1"]).unwrap();
    let sub = f.select(&[]);
    assert!(matches!(
        refined_transversal_bound(&t, &x, &f, &sub, 1).unwrap(),
        BoundOutcome::PreconditionViolated(_)
    ));
}

fn exact(params: ClassParams, t: usize) {
    let fam = params.generate_one(&GenLimits::default()).unwrap();
    let got = star_ratio(&fam, t);
    if !matches!(got, Ratio::Finite { .. }) {
        return;
    }
    let cf = closed_form_ratio(&params, t).unwrap();
    assert_eq!(cf.kind, RatioKind::Exact, "{params:?}");
    assert_eq!(got, cf.ratio, "{params:?} t={t}");
}

#[test]
fn closed_forms_match_star_scans() {
    for n in 1..=9 {
        for r in 2..=4 {
            for t in 1..r {
                if r <= n {
                    exact(ClassParams::Level { n, r }, t);
                }
                exact(ClassParams::Multisets { n, r }, t);
                if r <= n {
                    exact(ClassParams::Compositions { n, r }, t);
                }
            }
        }
    }
}

#[test]
fn partition_ratio_lower_bound() {
    for n in 4..=8 {
        for r in 3..n {
            for t in 1..r - 1 {
                let params = ClassParams::Partitions { n, r };
                let fam = params.generate_one(&GenLimits::default()).unwrap();
                let cf = closed_form_ratio(&params, t).unwrap();
                assert_eq!(cf.kind, RatioKind::LowerBound);
                assert_eq!(
                    cf.ratio,
                    Ratio::new((n - t - 1) as u128, (r - t - 1) as u128)
                );
                let got = star_ratio(&fam, t);
                assert_ne!(
                    got.compare(&cf.ratio),
                    Some(std::cmp::Ordering::Less),
                    "P({n},{r}) t={t}"
                );
            }
        }
    }
}
