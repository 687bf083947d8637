//! Functions presented by their Taylor expansion at a base point.

use num_traits::{One, Zero};

use crate::ring::rational::factorial;
use crate::ring::{binomial, Rational, RingMatrix, TruncSeries, UNLIMITED};

/// `f(base + x) = Σ_m coeffs[m] · x^m`, known through `x^cutoff`.
///
/// Polynomials carry the unlimited cutoff and support exact
/// recentering; truncated presentations refuse to answer beyond what
/// they know.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesFunction {
    base: Rational,
    series: TruncSeries<Rational>,
}

impl SeriesFunction {
    pub fn new(base: Rational, series: TruncSeries<Rational>) -> Self {
        SeriesFunction { base, series }
    }

    /// Taylor coefficients (not derivatives) at `base`.
    pub fn from_maclaurin(base: Rational, coeffs: &[Rational], cutoff: usize) -> Self {
        assert!(coeffs.len() <= cutoff.saturating_add(1), "more coefficients than the cutoff admits");
        SeriesFunction {
            base,
            series: TruncSeries::from_rationals(cutoff, coeffs),
        }
    }

    /// Global polynomial `Σ coeffs[m] x^m`, expanded at 0.
    pub fn polynomial(coeffs: &[Rational]) -> Self {
        SeriesFunction {
            base: Rational::zero(),
            series: TruncSeries::from_rationals(UNLIMITED, coeffs),
        }
    }

    /// `1/(1-x)` at 0: every Taylor coefficient is 1.
    pub fn geometric(cutoff: usize) -> Self {
        SeriesFunction {
            base: Rational::zero(),
            series: TruncSeries::from_fn(cutoff, |_| Rational::one()),
        }
    }

    /// `(1-cx)/(1-x)` at 0: coefficient 1, then `1-c` forever.
    pub fn frobenius(c: &Rational, cutoff: usize) -> Self {
        let jump = Rational::one() - c.clone();
        SeriesFunction {
            base: Rational::zero(),
            series: TruncSeries::from_fn(cutoff, |m| {
                if m == 0 {
                    Rational::one()
                } else {
                    jump.clone()
                }
            }),
        }
    }

    pub fn base_point(&self) -> &Rational {
        &self.base
    }

    pub fn series(&self) -> &TruncSeries<Rational> {
        &self.series
    }

    pub fn cutoff(&self) -> usize {
        self.series.cutoff()
    }

    /// Coefficient of `x^m` in the expansion at the base point.
    pub fn maclaurin(&self, m: usize) -> Rational {
        self.series.coeff(m)
    }

    /// `f^(m)` at the base point, i.e. `m!` times the coefficient.
    pub fn derivative_at_base(&self, m: usize) -> Rational {
        Rational::from(factorial(m as u64)) * self.maclaurin(m)
    }

    /// Degrees `<= upto` with a nonzero coefficient.
    pub fn nonzero_support(&self, upto: usize) -> Vec<usize> {
        (0..=upto).filter(|&m| !self.maclaurin(m).is_zero()).collect()
    }

    /// Exact re-expansion of a polynomial at a new base point.
    pub fn recentered(&self, new_base: &Rational) -> SeriesFunction {
        assert!(
            self.cutoff() == UNLIMITED,
            "only exact polynomials can be recentered"
        );
        let shift = new_base - &self.base;
        SeriesFunction {
            base: new_base.clone(),
            series: taylor_shift(&self.series, &shift, &Rational::one()),
        }
    }

    /// The series of `f(base + t·w)` in `t`.
    pub fn entry_series(&self, w: &Rational, cutoff: usize) -> TruncSeries<Rational> {
        assert!(
            cutoff <= self.cutoff(),
            "function only known through degree {}",
            self.cutoff()
        );
        TruncSeries::from_fn(cutoff, |m| self.maclaurin(m) * w.pow(m as i64))
    }

    /// Matrix of series `f(base + t·u_j·v_k)`.
    pub fn entrywise_rank_one(
        &self,
        u: &[Rational],
        v: &[Rational],
        cutoff: usize,
    ) -> RingMatrix<TruncSeries<Rational>> {
        assert_eq!(u.len(), v.len(), "u and v must have equal length");
        RingMatrix::from_fn(u.len(), |j, k| {
            self.entry_series(&(&u[j] * &v[k]), cutoff)
        })
    }
}

/// Coefficients of `g(x) = f(shift + scale·x)`, treating the stored
/// coefficients of `f` as exact (unknown tail taken to be zero).
pub fn taylor_shift(
    f: &TruncSeries<Rational>,
    shift: &Rational,
    scale: &Rational,
) -> TruncSeries<Rational> {
    let top = match f.degree_hint() {
        Some(d) => d,
        None => return TruncSeries::new(f.cutoff(), Vec::new()),
    };
    let mut coeffs = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut acc = Rational::zero();
        for m in k..=top {
            let c = f.coeff(m);
            if c.is_zero() {
                continue;
            }
            acc += c
                * Rational::from(binomial(m as u64, k as u64))
                * shift.pow((m - k) as i64)
                * scale.pow(k as i64);
        }
        coeffs.push(acc);
    }
    TruncSeries::new(f.cutoff(), coeffs)
}
