//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search code; families are read only through their member lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use starlab_core::combin::for_each_combination;
use starlab_core::{build_family, SetFamily};

pub fn members(f: &SetFamily) -> Vec<Vec<usize>> {
    f.members().iter().map(|m| m.indices()).collect()
}

pub fn meet(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

pub fn contains_all(member: &[usize], t_set: &[usize]) -> bool {
    meet(member, t_set) == t_set.len()
}

/// `l(F,t)` and its maximizing `t`-sets, scanning every `t`-subset of the
/// ground set.
pub fn brute_stars(f: &SetFamily, t: usize) -> (usize, Vec<Vec<usize>>) {
    let ms = members(f);
    let mut best = 0;
    let mut wit = Vec::new();
    for_each_combination(f.ground().size(), t, |ts| {
        let c = ms.iter().filter(|m| contains_all(m, ts)).count();
        if c > best {
            best = c;
            wit.clear();
        }
        if c == best && c > 0 {
            wit.push(ts.to_vec());
        }
    });
    (best, wit)
}

/// Compatibility masks: `adj[i]` has bit `j` iff `|F_i ∩ G_j| >= t`.
pub fn compat(f: &[Vec<usize>], g: &[Vec<usize>], t: usize) -> Vec<u64> {
    assert!(g.len() <= 64);
    f.iter()
        .map(|a| {
            g.iter()
                .enumerate()
                .filter(|(_, b)| meet(a, b) >= t)
                .fold(0u64, |m, (j, _)| m | (1 << j))
        })
        .collect()
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Exhaustive maximum of `∏ |A_i|` over cross-`t`-intersecting tuples, with
/// every tuple attaining a positive maximum. Parts are member index lists.
pub fn tuple_oracle(fams: &[SetFamily], t: usize) -> (u128, BTreeSet<Vec<Vec<usize>>>) {
    let ms: Vec<Vec<Vec<usize>>> = fams.iter().map(members).collect();
    let k = fams.len();
    // adj[i][j][a]: members of family j compatible with member a of family i
    let adj: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| (0..k).map(|j| compat(&ms[i], &ms[j], t)).collect())
        .collect();
    let full: Vec<u64> = ms
        .iter()
        .map(|m| {
            if m.len() == 64 {
                !0
            } else {
                (1u64 << m.len()) - 1
            }
        })
        .collect();
    let mut best = 0u128;
    let mut wit = BTreeSet::new();
    let mut chosen: Vec<u64> = Vec::new();
    rec(&adj, &full, 0, &mut chosen, &mut best, &mut wit);
    (best, wit)
}

fn rec(
    adj: &[Vec<Vec<u64>>],
    full: &[u64],
    level: usize,
    chosen: &mut Vec<u64>,
    best: &mut u128,
    wit: &mut BTreeSet<Vec<Vec<usize>>>,
) {
    let k = full.len();
    let mut allowed = full[level];
    for (i, &c) in chosen.iter().enumerate() {
        for a in bits(c) {
            allowed &= adj[i][level][a];
        }
    }
    let offer = |chosen: &Vec<u64>, best: &mut u128, wit: &mut BTreeSet<Vec<Vec<usize>>>| {
        let p: u128 = chosen.iter().map(|c| c.count_ones() as u128).product();
        if p > *best {
            *best = p;
            wit.clear();
        }
        if p == *best && p > 0 {
            wit.insert(chosen.iter().map(|&c| bits(c)).collect());
        }
    };
    if level + 1 == k {
        chosen.push(allowed);
        offer(chosen, best, wit);
        chosen.pop();
        return;
    }
    // every submask of `allowed`
    let mut sub = allowed;
    loop {
        chosen.push(sub);
        rec(adj, full, level + 1, chosen, best, wit);
        chosen.pop();
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & allowed;
    }
}

pub fn pair_oracle(f: &SetFamily, g: &SetFamily, t: usize) -> (u128, BTreeSet<Vec<Vec<usize>>>) {
    tuple_oracle(&[f.clone(), g.clone()], t)
}

/// Recheck that `parts` is cross-`t`-intersecting from raw member lists.
pub fn recheck_cross(fams: &[SetFamily], parts: &[Vec<usize>], t: usize) -> bool {
    let ms: Vec<Vec<Vec<usize>>> = fams.iter().map(members).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &a in &parts[i] {
                for &b in &parts[j] {
                    if meet(&ms[i][a], &ms[j][b]) < t {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn family(n: usize, sets: &[Vec<usize>]) -> SetFamily {
    build_family(&numbered(n), sets).unwrap().0
}

/// Random family over `[n]`, `n` in `ground`, at most `max_members` members
/// of sizes `1..=max_size`.
pub fn arb_family(
    ground: std::ops::RangeInclusive<usize>,
    max_members: usize,
    max_size: usize,
) -> impl Strategy<Value = SetFamily> {
    ground.prop_flat_map(move |n| {
        let member = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=max_size.min(n));
        proptest::collection::vec(member, 0..=max_members).prop_map(move |sets| family(n, &sets))
    })
}
