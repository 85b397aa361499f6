//! Small enumeration helpers shared by the generators and star scans.

/// Calls `f` with every `k`-subset of `0..n` as an ascending index slice, in
/// lexicographic order. `k = 0` yields the empty slice once.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // Find the rightmost position that can still advance.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `k`-subsets of `items`, preserving the order of `items`.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for_each_combination(items.len(), k, |idx| {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
    });
    out
}

/// Every sequence in `[0, m)^len`, lexicographic.
pub fn for_each_sequence<F: FnMut(&[usize])>(len: usize, m: usize, mut f: F) {
    if m == 0 && len > 0 {
        return;
    }
    let mut seq = vec![0usize; len];
    loop {
        f(&seq);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < m {
                break;
            }
            seq[i] = 0;
        }
    }
}
