//! Truncated power series in one variable `t` over any carrier.
//!
//! A series knows its coefficients for degrees `0..=cutoff` and nothing
//! above; binary operations narrow to the smaller cutoff.  Exact
//! scalars (and fully-known polynomials in `t`) use the [`UNLIMITED`]
//! cutoff so constants never narrow a computation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Carrier, Rational};

/// Cutoff sentinel for series whose every coefficient is known.
pub const UNLIMITED: usize = usize::MAX;

/// Power series known through degree `cutoff` (inclusive).
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are trimmed,
/// so the vector may be shorter than `cutoff + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Carrier> {
    cutoff: usize,
    coeffs: Vec<C>,
}

impl<C: Carrier> TruncSeries<C> {
    pub fn new(cutoff: usize, mut coeffs: Vec<C>) -> Self {
        if cutoff != UNLIMITED {
            coeffs.truncate(cutoff + 1);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TruncSeries { cutoff, coeffs }
    }

    pub fn from_fn(cutoff: usize, f: impl FnMut(usize) -> C) -> Self {
        assert!(cutoff != UNLIMITED, "unbounded coefficient function");
        Self::new(cutoff, (0..=cutoff).map(f).collect())
    }

    /// Constant series, exact at every degree.
    pub fn scalar(c: C) -> Self {
        Self::new(UNLIMITED, vec![c])
    }

    pub fn monomial(cutoff: usize, degree: usize, coeff: C) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(cutoff, coeffs)
    }

    /// The variable `t` itself, exact.
    pub fn var() -> Self {
        Self::monomial(UNLIMITED, 1, C::one())
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Coefficient of `t^k`; asking above the cutoff is a caller bug.
    pub fn coeff(&self, k: usize) -> C {
        assert!(k <= self.cutoff, "coefficient t^{k} is beyond the cutoff");
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficients `t^0..=t^upto` as a dense vector.
    pub fn coeff_vec(&self, upto: usize) -> Vec<C> {
        (0..=upto).map(|k| self.coeff(k)).collect()
    }

    /// Narrow to `min(cutoff, new_cutoff)`.
    pub fn truncated(&self, new_cutoff: usize) -> Self {
        Self::new(self.cutoff.min(new_cutoff), self.coeffs.clone())
    }

    /// Formal derivative; a bounded cutoff drops by one.
    pub fn derivative(&self) -> Self {
        let cutoff = if self.cutoff == UNLIMITED {
            UNLIMITED
        } else {
            assert!(self.cutoff >= 1, "derivative of a degree-0 truncation");
            self.cutoff - 1
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| C::from_int(k as i64) * c.clone())
            .collect();
        Self::new(cutoff, coeffs)
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        Self::new(
            self.cutoff,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        )
    }

    /// Largest degree with a (stored) nonzero coefficient.
    pub fn degree_hint(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }
}

impl TruncSeries<Rational> {
    /// Series with the given exact rational coefficients from degree 0.
    pub fn from_rationals(cutoff: usize, coeffs: &[Rational]) -> Self {
        Self::new(cutoff, coeffs.to_vec())
    }
}

impl<C: Carrier> Add for TruncSeries<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let cutoff = self.cutoff.min(rhs.cutoff);
        let n = self
            .coeffs
            .len()
            .max(rhs.coeffs.len())
            .min(cutoff.saturating_add(1));
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(C::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(C::zero);
            coeffs.push(a + b);
        }
        Self::new(cutoff, coeffs)
    }
}

impl<C: Carrier> Sub for TruncSeries<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Carrier> Neg for TruncSeries<C> {
    type Output = Self;
    fn neg(self) -> Self {
        TruncSeries {
            cutoff: self.cutoff,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Carrier> Mul for TruncSeries<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let cutoff = self.cutoff.min(rhs.cutoff);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(cutoff, Vec::new());
        }
        let top = (self.coeffs.len() + rhs.coeffs.len() - 2).min(cutoff);
        let mut coeffs = vec![C::zero(); top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > top {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > top {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(cutoff, coeffs)
    }
}

impl<C: Carrier> Zero for TruncSeries<C> {
    fn zero() -> Self {
        Self::new(UNLIMITED, Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Carrier> One for TruncSeries<C> {
    fn one() -> Self {
        Self::scalar(C::one())
    }
}

impl<C: Carrier> Carrier for TruncSeries<C> {
    fn from_rational(r: &Rational) -> Self {
        Self::scalar(C::from_rational(r))
    }
}

/// Renders like `2*t + 24*t^2 + O(t^3)`; the tail marker names the
/// first unknown degree and is omitted for exact series.
impl fmt::Display for TruncSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        if self.cutoff == UNLIMITED {
            if first {
                f.write_str("0")?;
            }
        } else {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "O(t^{})", self.cutoff + 1)?;
        }
        Ok(())
    }
}
