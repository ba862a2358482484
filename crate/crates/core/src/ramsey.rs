//! Ramsey numbers and the degree cap for `{K_{1,s}, K_t}`-free graphs.
//!
//! A vertex whose neighbourhood has `R(s, t-1)` vertices sees either `s`
//! pairwise non-adjacent neighbours (an induced `K_{1,s}`) or `t-1` pairwise
//! adjacent ones (a `K_t`). So a graph free of both has maximum degree at
//! most `R(s, t-1) - 1`.
//!
//! Any upper bound on `R(s, t-1)` may replace the exact value in the Rule 1
//! kernel. A larger cap `d'` only shrinks the set of vertices above the cap,
//! and the deletion-set layers of `G` minus the high-degree deletions still
//! live in a graph of maximum degree at most `d'`, so the depth bound and the
//! keep-radius argument go through unchanged. The radius and the size bound
//! both grow with `d'`, so a loose bound costs kernel size, never safety.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyBound {
    pub s: usize,
    pub t: usize,
    pub value: u64,
    pub exact: bool,
}

/// Known two-colour Ramsey numbers `R(s, t)` with `3 <= s <= t`.
const KNOWN: &[(usize, usize, u64)] = &[
    // Greenwood and Gleason, 1955
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (4, 4, 18),
    // Kéry, 1964
    (3, 6, 18),
    // Kalbfleisch, 1966; Graver and Yackel, 1968
    (3, 7, 23),
    // McKay and Zhang, 1992
    (3, 8, 28),
    // Grinstead and Roberts, 1982
    (3, 9, 36),
    // McKay and Radziszowski, 1995
    (4, 5, 25),
];

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Exact `R(s, t)` when known, otherwise `C(s+t-2, s-1)`.
pub fn ramsey_upper(s: usize, t: usize) -> Result<RamseyBound> {
    if s < 1 || t < 1 {
        return invalid(format!("Ramsey arguments must be positive, got ({s}, {t})"));
    }
    let (lo, hi) = (s.min(t), s.max(t));
    let exact = match lo {
        1 => Some(1),
        2 => Some(hi as u64),
        _ => KNOWN.iter().find(|&&(a, b, _)| a == lo && b == hi).map(|&(_, _, r)| r),
    };
    if let Some(value) = exact {
        return Ok(RamseyBound { s, t, value, exact: true });
    }
    let value = binomial((s + t - 2) as u64, (s - 1) as u64)
        .ok_or_else(|| crate::Error::InvalidArgument(format!("R({s}, {t}) bound overflows")))?;
    Ok(RamseyBound { s, t, value, exact: false })
}

/// Maximum degree of a `{K_{1,s}, K_t}`-free graph: `R(s, t-1) - 1`.
pub fn degree_cap(s: usize, t: usize) -> Result<usize> {
    if s < 2 || t < 2 {
        return invalid(format!("degree cap needs s >= 2 and t >= 2, got ({s}, {t})"));
    }
    Ok(ramsey_upper(s, t - 1)?.value as usize - 1)
}
