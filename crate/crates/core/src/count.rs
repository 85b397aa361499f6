//! Exact integer counting helpers.
//!
//! All counts are `u128` with checked arithmetic; overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

pub type Count = u128;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<Count> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: Count = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc
            .checked_mul((n - i) as Count)
            .ok_or(Error::Overflow("binomial"))?
            / (i + 1) as Count;
    }
    Ok(acc)
}

/// Falling factorial `a! / b!` for `b <= a`.
pub fn factorial_ratio(a: u64, b: u64) -> Result<Count> {
    if b > a {
        return Err(Error::param(format!(
            "factorial ratio {a}!/{b}! is not integral"
        )));
    }
    ((b + 1)..=a).try_fold(1 as Count, |acc, i| {
        acc.checked_mul(i as Count)
            .ok_or(Error::Overflow("factorial ratio"))
    })
}

/// Stirling number of the second kind `s_{n,r}` via
/// `s_{n,r} = s_{n-1,r-1} + r s_{n-1,r}` with `s_{n,1} = s_{n,n} = 1`.
pub fn stirling(n: u64, r: u64) -> Result<Count> {
    if n < 1 || r < 1 || r > n {
        return Err(Error::param(format!(
            "stirling number s({n},{r}) requires n >= 1 and 1 <= r <= n"
        )));
    }
    // row[j] holds s_{i,j} for the current i; row[0] is the s_{i,0} = 0 column.
    let r = r as usize;
    let mut row: Vec<Count> = vec![0; r + 1];
    row[1] = 1;
    for i in 2..=n as usize {
        for j in (2..=r.min(i)).rev() {
            let grown = (j as Count)
                .checked_mul(row[j])
                .and_then(|v| v.checked_add(row[j - 1]))
                .ok_or(Error::Overflow("stirling number"))?;
            row[j] = grown;
        }
    }
    Ok(row[r])
}

pub fn checked_product<I: IntoIterator<Item = Count>>(values: I) -> Result<Count> {
    values.into_iter().try_fold(1 as Count, |acc, v| {
        acc.checked_mul(v).ok_or(Error::Overflow("product"))
    })
}

pub fn gcd(mut a: Count, mut b: Count) -> Count {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Serde adapter rendering exact integers as decimal strings.
pub mod decimal {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}
