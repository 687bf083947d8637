//! Derivative profiles: the signs of f^(k)(a) for k = 0, 1, 2, …
//!
//! A profile stores explicitly known derivative values up to some order
//! plus a tail marker describing every order beyond them.  Zero-ness is
//! always derived from the stored values at query time, never cached.
//! Numeric profiles carry per-order error estimates and treat a value
//! as zero when it is indistinguishable from zero at that accuracy.

use crate::ring::{factorial, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Absolute half-width of the band around zero inside which a numeric
/// derivative estimate is classified as zero.
pub const NUMERIC_ZERO_ABS_TOL: f64 = 1e-6;

/// Multiplier on a numeric estimate's own error bound; the zero band is
/// the larger of this and [`NUMERIC_ZERO_ABS_TOL`].
pub const NUMERIC_ZERO_ERR_FACTOR: f64 = 8.0;

/// Sign of a single derivative value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Self {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_numeric(value: f64, error: f64) -> Self {
        let band = NUMERIC_ZERO_ABS_TOL.max(NUMERIC_ZERO_ERR_FACTOR * error);
        if value.abs() <= band {
            Sign::Zero
        } else if value > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// What the profile asserts about every order beyond the stored ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    /// All higher derivatives vanish (polynomials).
    AllZero,
    /// All higher derivatives are strictly positive (e.g. exp at any point).
    AllPositive,
    /// Nothing is known beyond the stored orders.
    Unknown,
}

#[derive(Clone, Debug)]
enum ProfileData {
    Exact(Vec<Rational>),
    Numeric { values: Vec<f64>, errors: Vec<f64> },
}

/// Error from [`DerivProfile::parse`] on a malformed spec string.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct ProfileParseError(String);

/// Error returned when a decision would depend on derivative orders the
/// profile does not cover.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("derivative profile only known through order {known}; the decision depends on higher orders")]
pub struct ProfileTooShort {
    pub known: usize,
}

/// Derivative data of one function at one base point.
#[derive(Clone, Debug)]
pub struct DerivProfile {
    base: Rational,
    data: ProfileData,
    tail: Tail,
}

impl DerivProfile {
    // ---- constructors ----

    /// Exact values f^(k)(a) for k = 0..values.len(); `tail` covers the rest.
    pub fn from_values(base: Rational, values: Vec<Rational>, tail: Tail) -> Self {
        assert!(!base.is_negative(), "base point must be nonnegative");
        DerivProfile {
            base,
            data: ProfileData::Exact(values),
            tail,
        }
    }

    /// Numeric estimates with per-order error bounds; the tail is unknown.
    pub fn from_numeric(base: Rational, values: Vec<f64>, errors: Vec<f64>) -> Self {
        assert!(!base.is_negative(), "base point must be nonnegative");
        assert_eq!(values.len(), errors.len());
        DerivProfile {
            base,
            data: ProfileData::Numeric { values, errors },
            tail: Tail::Unknown,
        }
    }

    /// exp at 0: every derivative equals 1.
    pub fn exp() -> Self {
        DerivProfile::from_values(
            Rational::zero(),
            vec![Rational::one(); 9],
            Tail::AllPositive,
        )
    }

    /// x^k at 0: the single nonzero derivative is f^(k)(0) = k!.
    pub fn monomial(k: usize) -> Self {
        let mut values = vec![Rational::zero(); k + 1];
        values[k] = Rational::from(factorial(k as u64));
        DerivProfile::from_values(Rational::zero(), values, Tail::AllZero)
    }

    /// x^j + x^k at 0 for j < k: exactly two nonzero derivatives.
    pub fn two_term(j: usize, k: usize) -> Self {
        assert!(j < k, "orders must be distinct and increasing");
        let mut values = vec![Rational::zero(); k + 1];
        values[j] = Rational::from(factorial(j as u64));
        values[k] = Rational::from(factorial(k as u64));
        DerivProfile::from_values(Rational::zero(), values, Tail::AllZero)
    }

    /// The zero function.
    pub fn all_zero() -> Self {
        DerivProfile::from_values(Rational::zero(), Vec::new(), Tail::AllZero)
    }

    /// Parse a profile spec: `exp`, `monomial:K`, `two-term:J:K`,
    /// `all-zero`, or an explicit comma-separated derivative list
    /// (based at 0, with `explicit_tail` covering the unlisted orders).
    pub fn parse(spec: &str, explicit_tail: Tail) -> Result<Self, ProfileParseError> {
        let err = |msg: String| Err(ProfileParseError(msg));
        match spec {
            "exp" => return Ok(DerivProfile::exp()),
            "all-zero" | "all_zero" => return Ok(DerivProfile::all_zero()),
            _ => {}
        }
        if let Some(k) = spec.strip_prefix("monomial:") {
            return match k.parse::<usize>() {
                Ok(k) => Ok(DerivProfile::monomial(k)),
                Err(_) => err(format!("monomial profile needs an integer exponent, got '{k}'")),
            };
        }
        if let Some(rest) = spec
            .strip_prefix("two-term:")
            .or_else(|| spec.strip_prefix("two_term:"))
        {
            let Some((j, k)) = rest.split_once(':') else {
                return err(format!("two-term profile is two-term:J:K, got '{spec}'"));
            };
            let (Ok(j), Ok(k)) = (j.parse::<usize>(), k.parse::<usize>()) else {
                return err(format!("two-term exponents must be integers, got '{rest}'"));
            };
            if j >= k {
                return err(format!("two-term exponents must increase, got {j} and {k}"));
            }
            return Ok(DerivProfile::two_term(j, k));
        }
        let values: Result<Vec<Rational>, _> = spec
            .split(',')
            .map(|s| std::str::FromStr::from_str(s.trim()))
            .collect();
        match values {
            Ok(values) => Ok(DerivProfile::from_values(
                Rational::zero(),
                values,
                explicit_tail,
            )),
            Err(_) => err(format!(
                "profile must be a built-in name or a derivative list, got '{spec}'"
            )),
        }
    }

    // ---- queries ----

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Number of orders with explicitly stored values.
    pub fn known_len(&self) -> usize {
        match &self.data {
            ProfileData::Exact(v) => v.len(),
            ProfileData::Numeric { values, .. } => values.len(),
        }
    }

    /// Sign of f^(k)(a), or `None` when order k lies beyond the stored
    /// values and the tail is unknown.
    pub fn sign(&self, k: usize) -> Option<Sign> {
        if k < self.known_len() {
            Some(match &self.data {
                ProfileData::Exact(v) => Sign::of_rational(&v[k]),
                ProfileData::Numeric { values, errors } => Sign::of_numeric(values[k], errors[k]),
            })
        } else {
            match self.tail {
                Tail::AllZero => Some(Sign::Zero),
                Tail::AllPositive => Some(Sign::Positive),
                Tail::Unknown => None,
            }
        }
    }

    /// f^(k)(a) as a float, for reporting; `None` beyond the stored
    /// orders unless the tail pins the value to zero.
    pub fn value_f64(&self, k: usize) -> Option<f64> {
        if k < self.known_len() {
            Some(match &self.data {
                ProfileData::Exact(v) => v[k].to_f64(),
                ProfileData::Numeric { values, .. } => values[k],
            })
        } else if self.tail == Tail::AllZero {
            Some(0.0)
        } else {
            None
        }
    }

    /// Orders of the lowest `count` nonzero derivatives at order ≥ `from`,
    /// in increasing order.  Stops early (shorter result) when the tail
    /// is all-zero; errs when the answer would depend on unknown orders.
    pub fn lowest_alive(&self, from: usize, count: usize) -> Result<Vec<usize>, ProfileTooShort> {
        let mut found = Vec::with_capacity(count);
        let mut k = from;
        while found.len() < count {
            if k >= self.known_len() && self.tail == Tail::AllZero {
                break;
            }
            match self.sign(k) {
                Some(Sign::Zero) => {}
                Some(_) => found.push(k),
                None => {
                    return Err(ProfileTooShort {
                        known: self.known_len(),
                    })
                }
            }
            k += 1;
        }
        Ok(found)
    }
}
