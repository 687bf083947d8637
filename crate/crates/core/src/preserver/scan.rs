//! Grid scan of entrywise maps over a rank-one test family.
//!
//! For f applied entrywise to the family matrices a·𝟙 + t·uuᵀ, the scan
//! samples t on a uniform grid over [0, ε·(1−10⁻⁶)], records every
//! point whose image fails the PSD check, and attaches the
//! derivative-sign conclusion when derivative data for f at a is
//! available.  A clean grid never certifies anything — it only means no
//! counterexample was sampled — while a single violation falsifies the
//! positivity hypothesis outright.

use super::family::TestFamily;
use super::finitediff::{finite_diff_derivs, FD_BASE_STEP, MAX_FD_ORDER};
use super::hl::{hl_conclusion_check, ConclusionReport, HlError};
use super::profile::{DerivProfile, Tail};
use super::psd::{is_psd_exact, is_psd_numeric, PsdError, MAX_EXACT_PSD_N};
use crate::detident::SeriesFunction;
use crate::ring::{Rational, RingMatrix, UNLIMITED};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

/// Default number of grid points.
pub const DEFAULT_GRID: usize = 200;

/// The entrywise function being scanned.
#[derive(Debug, Clone)]
pub enum FnSpec {
    /// Exact polynomial Σ c_m x^m given by its coefficients.
    Poly(Vec<Rational>),
    /// Exact truncated expansion around a base point, evaluated as the
    /// polynomial it stores; its base must match the family's.
    Series(SeriesFunction),
    /// x^alpha on [0,∞), evaluated in floating point.
    Power(f64),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ScanError {
    #[error("exact positivity certification needs dimension ≤ {MAX_EXACT_PSD_N}, got {0}")]
    ExactDimTooLarge(usize),
    #[error("series is expanded at {0} but the family sits at {1}")]
    BaseMismatch(Rational, Rational),
    #[error("power-function exponent must be nonnegative")]
    NegativeAlpha,
    #[error(transparent)]
    Psd(#[from] PsdError),
}

/// Witness value attached to a violation: the first negative
/// characteristic-polynomial coefficient (exact path) or the minimum
/// eigenvalue (numeric path).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CertValue {
    Exact(Rational),
    Approx(f64),
}

/// One grid point whose image matrix is not PSD.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub t: Rational,
    pub min_eig_or_coeff: CertValue,
}

/// Full scan outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PreserverReport {
    pub family: TestFamily,
    pub grid_size: usize,
    pub violations: Vec<Violation>,
    pub conclusion: Option<ConclusionReport>,
    /// Why the conclusion is absent, when it is.
    #[serde(skip)]
    pub conclusion_note: Option<String>,
}

impl PreserverReport {
    pub fn has_violation(&self) -> bool {
        !self.violations.is_empty()
    }

    /// No sampled violation and no failed conclusion.  An absent
    /// conclusion does not fail the report.
    pub fn passes(&self) -> bool {
        !self.has_violation() && self.conclusion.as_ref().map_or(true, |c| c.passed())
    }

    pub fn summary(&self) -> String {
        let mut s = if self.violations.is_empty() {
            format!(
                "no violation sampled on a {}-point grid (grid scans falsify, never certify)",
                self.grid_size
            )
        } else {
            format!(
                "{} of {} grid points violate positivity, first at t = {}",
                self.violations.len(),
                self.grid_size,
                self.violations[0].t
            )
        };
        match (&self.conclusion, &self.conclusion_note) {
            (Some(c), _) => {
                let orders = c
                    .orders
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                s.push_str(&format!(
                    "; derivative conclusion {} on orders ({orders})",
                    c.verdict
                ));
            }
            (None, Some(note)) => s.push_str(&format!("; derivative conclusion unavailable: {note}")),
            (None, None) => {}
        }
        s
    }
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Derivative profile of the function under test at the family's base point,
/// when the description carries enough information to build one.
fn derivative_profile(f: &FnSpec, family: &TestFamily) -> Result<DerivProfile, ScanError> {
    let a = family.a();
    match f {
        FnSpec::Poly(coeffs) => {
            let at_a = SeriesFunction::polynomial(coeffs).recentered(a);
            let values = match at_a.series().degree_hint() {
                None => Vec::new(),
                Some(d) => (0..=d).map(|m| at_a.derivative_at_base(m)).collect(),
            };
            Ok(DerivProfile::from_values(a.clone(), values, Tail::AllZero))
        }
        FnSpec::Series(sf) => {
            let tail = if sf.cutoff() == UNLIMITED {
                Tail::AllZero
            } else {
                Tail::Unknown
            };
            let top = sf.series().degree_hint().unwrap_or(0);
            let upto = if sf.cutoff() == UNLIMITED {
                top
            } else {
                sf.cutoff()
            };
            let values = (0..=upto).map(|m| sf.derivative_at_base(m)).collect();
            Ok(DerivProfile::from_values(a.clone(), values, tail))
        }
        FnSpec::Power(alpha) => {
            let d = finite_diff_derivs(
                |x| x.powf(*alpha),
                a.to_f64(),
                MAX_FD_ORDER,
                FD_BASE_STEP,
                Some(0.0),
            );
            Ok(d.profile(a.clone()))
        }
    }
}

/// Scan the family grid and attach the derivative-sign conclusion.
/// `tol` is the relative eigenvalue tolerance of the numeric PSD check.
pub fn hl_hypothesis_scan(
    f: &FnSpec,
    family: &TestFamily,
    grid: usize,
    tol: f64,
) -> Result<PreserverReport, ScanError> {
    let n = family.n();
    match f {
        FnSpec::Poly(_) | FnSpec::Series(_) => {
            if n > MAX_EXACT_PSD_N {
                return Err(ScanError::ExactDimTooLarge(n));
            }
        }
        FnSpec::Power(alpha) => {
            if !(*alpha >= 0.0) {
                return Err(ScanError::NegativeAlpha);
            }
        }
    }
    if let FnSpec::Series(sf) = f {
        if sf.base_point() != family.a() {
            return Err(ScanError::BaseMismatch(
                sf.base_point().clone(),
                family.a().clone(),
            ));
        }
    }

    let mut violations = Vec::new();
    for t in family.t_grid(grid) {
        let x = family.matrix_at(&t);
        match f {
            FnSpec::Poly(coeffs) => {
                let fm = RingMatrix::from_fn(n, |j, k| horner(coeffs, &x[(j, k)]));
                let v = is_psd_exact(&fm)?;
                if !v.is_psd {
                    let coeff = v.first_negative_coeff().unwrap().clone();
                    violations.push(Violation {
                        t,
                        min_eig_or_coeff: CertValue::Exact(coeff),
                    });
                }
            }
            FnSpec::Series(sf) => {
                let top = sf.series().degree_hint().unwrap_or(0);
                let coeffs = sf.series().coeff_vec(top.min(sf.cutoff()));
                let base = sf.base_point();
                let fm = RingMatrix::from_fn(n, |j, k| {
                    horner(&coeffs, &(x[(j, k)].clone() - base.clone()))
                });
                let v = is_psd_exact(&fm)?;
                if !v.is_psd {
                    let coeff = v.first_negative_coeff().unwrap().clone();
                    violations.push(Violation {
                        t,
                        min_eig_or_coeff: CertValue::Exact(coeff),
                    });
                }
            }
            FnSpec::Power(alpha) => {
                let fm = RingMatrix::from_fn(n, |j, k| x[(j, k)].to_f64().powf(*alpha));
                let v = is_psd_numeric(&fm, tol)?;
                if !v.is_psd {
                    violations.push(Violation {
                        t,
                        min_eig_or_coeff: CertValue::Approx(v.min_eigenvalue().unwrap()),
                    });
                }
            }
        }
    }

    let profile = derivative_profile(f, family)?;
    let (conclusion, conclusion_note) = match hl_conclusion_check(&profile, n, 0, n) {
        Ok(c) => (Some(c), None),
        Err(HlError::TooShort(e)) => (None, Some(e.to_string())),
        Err(e) => (None, Some(e.to_string())),
    };

    Ok(PreserverReport {
        family: family.clone(),
        grid_size: grid,
        violations,
        conclusion,
        conclusion_note,
    })
}
