//! Necessary-condition checks on derivative and coefficient data.
//!
//! `hl_conclusion_check` verifies the derivative-sign conclusion forced
//! by positivity on the rank-one test family: with parameters
//! 0 ≤ p ≤ q ≤ n (and p = 0 when the base point is 0), the orders
//! m_0 < … < m_{q−1} consist of the forced block 0..p−1 followed by the
//! lowest orders ≥ p of nonzero derivatives, and every derivative up to
//! m_{q−1} must be nonnegative.  When fewer nonzero orders exist the
//! check applies to the ones present.
//!
//! `maclaurin_sign_check` enforces the coefficient counting rule for
//! power series preservers: every negative coefficient needs at least n
//! positive coefficients below it, and on an unbounded domain also at
//! least n positive coefficients above it.

use super::profile::{DerivProfile, ProfileTooShort, Sign};
use crate::ring::Rational;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Integer-detection tolerance for power-function exponents.
pub const FH_INT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HlError {
    #[error("need 0 ≤ p ≤ q ≤ n, got p={p}, q={q}, n={n}")]
    BadRange { p: usize, q: usize, n: usize },
    #[error("p must be 0 when the base point is 0")]
    PositivePAtZeroBase,
    #[error(transparent)]
    TooShort(#[from] ProfileTooShort),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

/// Orders examined, their derivative signs, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConclusionReport {
    pub orders: Vec<usize>,
    pub signs: Vec<i8>,
    pub verdict: Verdict,
    /// Lowest order with a negative derivative, when the check fails.
    #[serde(skip)]
    pub first_negative: Option<usize>,
}

impl ConclusionReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Check the derivative-sign conclusion for the given profile.
pub fn hl_conclusion_check(
    profile: &DerivProfile,
    n: usize,
    p: usize,
    q: usize,
) -> Result<ConclusionReport, HlError> {
    if !(p <= q && q <= n && n >= 1) {
        return Err(HlError::BadRange { p, q, n });
    }
    if profile.base().is_zero() && p != 0 {
        return Err(HlError::PositivePAtZeroBase);
    }

    let mut orders: Vec<usize> = (0..p).collect();
    orders.extend(profile.lowest_alive(p, q - p)?);

    let too_short = |_| ProfileTooShort {
        known: profile.known_len(),
    };
    let mut signs = Vec::with_capacity(orders.len());
    for &k in &orders {
        let s = profile.sign(k).ok_or(()).map_err(too_short)?;
        signs.push(s.as_i8());
    }

    let mut verdict = Verdict::Pass;
    let mut first_negative = None;
    if let Some(&top) = orders.last() {
        for k in 0..=top {
            match profile.sign(k) {
                Some(Sign::Negative) => {
                    verdict = Verdict::Fail;
                    first_negative = Some(k);
                    break;
                }
                Some(_) => {}
                None => return Err(too_short(()).into()),
            }
        }
    }

    Ok(ConclusionReport {
        orders,
        signs,
        verdict,
        first_negative,
    })
}

/// Result of the coefficient counting rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCheckReport {
    pub pass: bool,
    pub first_offending_index: Option<usize>,
    pub n: usize,
    pub unbounded: bool,
}

impl SignCheckReport {
    pub fn summary(&self) -> String {
        let domain = if self.unbounded { "unbounded" } else { "bounded" };
        match self.first_offending_index {
            None => format!(
                "coefficient sign rule holds for n = {} on a {domain} domain",
                self.n
            ),
            Some(i) => format!(
                "coefficient sign rule fails for n = {} on a {domain} domain: \
                 negative coefficient at index {i} lacks {} positive coefficients {}",
                self.n,
                self.n,
                if self.unbounded { "on each side" } else { "below it" }
            ),
        }
    }
}

/// Every negative coefficient needs ≥ n positive coefficients at lower
/// indices; with `unbounded` also ≥ n positive ones at higher indices.
pub fn maclaurin_sign_check(coeffs: &[Rational], n: usize, unbounded: bool) -> SignCheckReport {
    assert!(n >= 1);
    let positives_above: Vec<usize> = {
        let mut suffix = vec![0usize; coeffs.len() + 1];
        for i in (0..coeffs.len()).rev() {
            suffix[i] = suffix[i + 1] + usize::from(coeffs[i].is_positive());
        }
        suffix
    };

    let mut positives_below = 0usize;
    let mut first_offending_index = None;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_negative() {
            let below_ok = positives_below >= n;
            let above_ok = !unbounded || positives_above[i + 1] >= n;
            if !(below_ok && above_ok) {
                first_offending_index = Some(i);
                break;
            }
        }
        positives_below += usize::from(c.is_positive());
    }
    SignCheckReport {
        pass: first_offending_index.is_none(),
        first_offending_index,
        n,
        unbounded,
    }
}

/// Negative exponent supplied to [`fh_predict`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("power-function exponent must be nonnegative")]
pub struct NegativeAlpha;

/// Whether x^alpha preserves positivity entrywise in dimension n on
/// (0,∞): true exactly for nonnegative integers (within 1e-12) and for
/// alpha ≥ n − 2.
pub fn fh_predict(alpha: f64, n: usize) -> Result<bool, NegativeAlpha> {
    assert!(n >= 1);
    if !(alpha >= 0.0) {
        return Err(NegativeAlpha);
    }
    let is_integer = (alpha - alpha.round()).abs() <= FH_INT_TOL;
    Ok(is_integer || alpha >= n as f64 - 2.0)
}
