//! Keep-radii and kernel size bounds.
//!
//! Both rules delete vertices whose distance to a center set exceeds
//! `(offset + log_b k) * D` with `b = 2δ / (2δ - 1)`. Distances are integers,
//! so the rule only needs the largest integer `r` below that real threshold,
//! and `r <= (offset + log_b k) * D` is equivalent to
//! `(2δ)^(r - offset*D) <= k^D * (2δ - 1)^(r - offset*D)`, which is checked
//! exactly on big integers.
//!
//! The size bounds `coef * δ^e * k^(pD+1)` are irrational for `k > 1`; they
//! are evaluated in 192-bit binary floating point and rounded up.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::UBig;
use serde::{Deserialize, Serialize};

type Real = FBig<HalfEven, 2>;

const PRECISION: usize = 192;

fn real(n: u64) -> Real {
    Real::from(n).with_precision(PRECISION).value()
}

/// `log_{2δ/(2δ-1)} δ`.
pub fn exponent_p(delta: usize) -> f64 {
    let d = delta as f64;
    d.ln() / (2.0 * d / (2.0 * d - 1.0)).ln()
}

/// `(offset + log_{2δ/(2δ-1)} k) * D` as a float, for reporting.
pub fn threshold_value(delta: usize, diameter: usize, budget: usize, offset: usize) -> f64 {
    let d = delta as f64;
    let base = 2.0 * d / (2.0 * d - 1.0);
    (offset as f64 + (budget as f64).ln() / base.ln()) * diameter as f64
}

/// Largest integer `r` with `r <= (offset + log_{2δ/(2δ-1)} k) * D`.
///
/// Requires `δ >= 1`, `k >= 1`, `D >= 1`.
pub fn keep_radius(delta: usize, diameter: usize, budget: usize, offset: usize) -> usize {
    let num = UBig::from(2 * delta);
    let den = UBig::from(2 * delta - 1);
    let rhs_scale = UBig::from(budget).pow(diameter);
    let base = offset * diameter;
    // invariant: lhs = (2δ)^e, rhs = k^D (2δ-1)^e with e = r - base
    let mut lhs = UBig::ONE;
    let mut rhs = rhs_scale;
    let mut r = base;
    loop {
        let next_lhs = &lhs * &num;
        let next_rhs = &rhs * &den;
        if next_lhs > next_rhs {
            return r;
        }
        lhs = next_lhs;
        rhs = next_rhs;
        r += 1;
    }
}

/// A rounded-up size bound; `saturated` means the true value exceeds
/// `u64::MAX` and `value` is `u64::MAX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeBound {
    pub value: u64,
    pub saturated: bool,
}

impl SizeBound {
    fn exact(v: Option<u64>) -> Self {
        match v {
            Some(value) => SizeBound { value, saturated: false },
            None => SizeBound { value: u64::MAX, saturated: true },
        }
    }
}

/// `ceil(coef * δ^delta_exp * k^(pD + 1))` with `p = log_{2δ/(2δ-1)} δ`.
pub fn size_bound(coef: u64, delta: usize, delta_exp: u32, budget: usize, diameter: usize) -> SizeBound {
    let head = (delta as u64).checked_pow(delta_exp).and_then(|x| x.checked_mul(coef));
    if budget == 1 {
        return SizeBound::exact(head);
    }
    let dl = real(delta as u64);
    let base = real(2 * delta as u64) / real(2 * delta as u64 - 1);
    let p = dl.ln() / base.ln();
    let k_exp = p * real(diameter as u64) + real(1);
    let log_value = real(coef).ln() + real(delta_exp as u64) * dl.ln() + k_exp * real(budget as u64).ln();
    if log_value >= real(u64::MAX).ln() {
        return SizeBound::exact(None);
    }
    let value = log_value.exp().ceil().to_int().value();
    SizeBound::exact(u64::try_from(value).ok())
}
