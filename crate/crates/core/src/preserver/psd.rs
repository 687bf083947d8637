//! Positive-semidefiniteness certificates for symmetric matrices.
//!
//! Exact path: the characteristic polynomial det(xI − A) is computed by
//! the Faddeev–LeVerrier recurrence over the rationals and written as
//! Σ_k (−1)^k e_k x^{n−k}.  For a symmetric matrix (real spectrum) A is
//! PSD exactly when every e_k ≥ 0, and the list e_1..e_n is the
//! certificate.  Numeric path: cyclic Jacobi diagonalization with the
//! minimum eigenvalue as certificate.

use crate::ring::{Rational, RingMatrix};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Largest dimension accepted by the exact certifier.
pub const MAX_EXACT_PSD_N: usize = 8;

/// Default relative eigenvalue tolerance for the numeric certifier.
pub const PSD_EIG_TOL: f64 = 1e-9;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm falls below
/// this multiple of the matrix norm.
pub const JACOBI_OFF_TOL: f64 = 1e-13;

/// Maximum admitted relative asymmetry of a numeric input.
pub const SYMMETRY_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PsdError {
    #[error("matrix is not symmetric (entries ({0},{1}) and ({1},{0}) differ)")]
    NotSymmetric(usize, usize),
    #[error("matrix contains a non-finite entry at ({0},{1})")]
    NonFinite(usize, usize),
    #[error("Jacobi iteration failed to converge in {0} sweeps")]
    NoConvergence(usize),
}

/// Which certifier produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsdMethod {
    ExactCharpoly,
    Jacobi,
}

/// The evidence backing a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    /// e_1..e_n with det(xI − A) = Σ_k (−1)^k e_k x^{n−k}; all ≥ 0 iff PSD.
    CharPolyCoeffs(Vec<Rational>),
    /// Minimum eigenvalue from Jacobi diagonalization.
    MinEigenvalue(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsdVerdict {
    pub is_psd: bool,
    pub method: PsdMethod,
    pub certificate: Certificate,
}

impl PsdVerdict {
    /// First e_k < 0 for exact verdicts (negative semidefiniteness witness).
    pub fn first_negative_coeff(&self) -> Option<&Rational> {
        match &self.certificate {
            Certificate::CharPolyCoeffs(e) => e.iter().find(|c| c.is_negative()),
            Certificate::MinEigenvalue(_) => None,
        }
    }

    pub fn min_eigenvalue(&self) -> Option<f64> {
        match &self.certificate {
            Certificate::MinEigenvalue(x) => Some(*x),
            Certificate::CharPolyCoeffs(_) => None,
        }
    }
}

/// Exact PSD decision for a symmetric rational matrix of dimension ≤ 8.
pub fn is_psd_exact(a: &RingMatrix<Rational>) -> Result<PsdVerdict, PsdError> {
    let n = a.n();
    assert!(
        n <= MAX_EXACT_PSD_N,
        "exact PSD certification is limited to dimension {MAX_EXACT_PSD_N}"
    );
    for j in 0..n {
        for k in (j + 1)..n {
            if a[(j, k)] != a[(k, j)] {
                return Err(PsdError::NotSymmetric(j, k));
            }
        }
    }

    // Faddeev–LeVerrier: M_k = A·M_{k−1} + c_{k−1}·I, c_k = −tr(A·M_k)/k,
    // where det(xI − A) = x^n + c_1 x^{n−1} + … + c_n and e_k = (−1)^k c_k.
    let mut m = RingMatrix::from_fn(n, |_, _| Rational::zero());
    let mut c_prev = Rational::one();
    let mut elementary = Vec::with_capacity(n);
    for k in 1..=n {
        let mut am = a.mul_mat(&m);
        for i in 0..n {
            let bumped = am[(i, i)].clone() + c_prev.clone();
            am.set(i, i, bumped);
        }
        m = am;
        let prod = a.mul_mat(&m);
        let c_k = -(prod.trace() / Rational::from_int(k as i64));
        let e_k = if k % 2 == 0 { c_k.clone() } else { -c_k.clone() };
        elementary.push(e_k);
        c_prev = c_k;
    }

    let is_psd = elementary.iter().all(|e| !e.is_negative());
    Ok(PsdVerdict {
        is_psd,
        method: PsdMethod::ExactCharpoly,
        certificate: Certificate::CharPolyCoeffs(elementary),
    })
}

/// Numeric PSD decision by cyclic Jacobi diagonalization.  `tol` scales
/// the admitted negative slack: PSD iff λ_min ≥ −tol·(1 + ‖A‖_F).
pub fn is_psd_numeric(a: &RingMatrix<f64>, tol: f64) -> Result<PsdVerdict, PsdError> {
    let n = a.n();
    let mut w = vec![vec![0.0f64; n]; n];
    let mut frob = 0.0;
    for j in 0..n {
        for k in 0..n {
            let x = a[(j, k)];
            if !x.is_finite() {
                return Err(PsdError::NonFinite(j, k));
            }
            w[j][k] = x;
            frob += x * x;
        }
    }
    let frob = frob.sqrt();
    for j in 0..n {
        for k in (j + 1)..n {
            if (w[j][k] - w[k][j]).abs() > SYMMETRY_REL_TOL * (1.0 + frob) {
                return Err(PsdError::NotSymmetric(j, k));
            }
            let avg = 0.5 * (w[j][k] + w[k][j]);
            w[j][k] = avg;
            w[k][j] = avg;
        }
    }

    const MAX_SWEEPS: usize = 40;
    let target = JACOBI_OFF_TOL * frob;
    let mut converged = n <= 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut off = 0.0;
        for j in 0..n {
            for k in (j + 1)..n {
                off += 2.0 * w[j][k] * w[j][k];
            }
        }
        if off.sqrt() <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if w[p][q] == 0.0 {
                    continue;
                }
                let tau = (w[q][q] - w[p][p]) / (2.0 * w[p][q]);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let (wip, wiq) = (w[i][p], w[i][q]);
                    w[i][p] = c * wip - s * wiq;
                    w[i][q] = s * wip + c * wiq;
                }
                for i in 0..n {
                    let (wpi, wqi) = (w[p][i], w[q][i]);
                    w[p][i] = c * wpi - s * wqi;
                    w[q][i] = s * wpi + c * wqi;
                }
            }
        }
    }
    if !converged {
        return Err(PsdError::NoConvergence(MAX_SWEEPS));
    }

    let min_eig = (0..n).map(|i| w[i][i]).fold(f64::INFINITY, f64::min);
    Ok(PsdVerdict {
        is_psd: min_eig >= -tol * (1.0 + frob),
        method: PsdMethod::Jacobi,
        certificate: Certificate::MinEigenvalue(min_eig),
    })
}
