//! The rank-one perturbation test family a·𝟙 + t·uuᵀ.
//!
//! A canonical family requires a ≥ 0, ε > 0, and pairwise distinct
//! coordinates u_k inside the open interval (0,1); the relaxed
//! constructor admits any distinct positive coordinates but marks the
//! family non-canonical so downstream reports can exclude it from
//! claims that depend on the canonical hypotheses.

use crate::ring::{Rational, RingMatrix};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("base point a must be nonnegative")]
    NegativeBase,
    #[error("interval length epsilon must be positive")]
    NonpositiveEpsilon,
    #[error("u must have at least one coordinate")]
    EmptyU,
    #[error("coordinates u[{0}] and u[{1}] coincide")]
    DuplicateU(usize, usize),
    #[error("coordinate u[{0}] = {1} lies outside the open interval (0,1)")]
    URange(usize, Rational),
    #[error("coordinate u[{0}] = {1} must be positive")]
    UNonpositive(usize, Rational),
}

/// One test family: the matrices a·𝟙 + t·uuᵀ for t ∈ [0, ε).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TestFamily {
    a: Rational,
    epsilon: Rational,
    u: Vec<Rational>,
    n: usize,
    #[serde(skip)]
    canonical: bool,
}

impl TestFamily {
    /// Canonical constructor: u must be pairwise distinct inside (0,1).
    pub fn new(a: Rational, epsilon: Rational, u: Vec<Rational>) -> Result<Self, FamilyError> {
        let fam = TestFamily::relaxed(a, epsilon, u)?;
        for (k, x) in fam.u.iter().enumerate() {
            if !x.is_positive() || *x >= Rational::one() {
                return Err(FamilyError::URange(k, x.clone()));
            }
        }
        Ok(TestFamily {
            canonical: true,
            ..fam
        })
    }

    /// Relaxed constructor: any pairwise distinct positive u.  The
    /// family is flagged canonical only if u also fits inside (0,1).
    pub fn relaxed(a: Rational, epsilon: Rational, u: Vec<Rational>) -> Result<Self, FamilyError> {
        if a.is_negative() {
            return Err(FamilyError::NegativeBase);
        }
        if !epsilon.is_positive() {
            return Err(FamilyError::NonpositiveEpsilon);
        }
        if u.is_empty() {
            return Err(FamilyError::EmptyU);
        }
        for (k, x) in u.iter().enumerate() {
            if !x.is_positive() {
                return Err(FamilyError::UNonpositive(k, x.clone()));
            }
            for (j, y) in u.iter().enumerate().take(k) {
                if x == y {
                    return Err(FamilyError::DuplicateU(j, k));
                }
            }
        }
        let canonical = u.iter().all(|x| *x < Rational::one());
        let n = u.len();
        Ok(TestFamily {
            a,
            epsilon,
            u,
            n,
            canonical,
        })
    }

    /// Default family with the geometric coordinates u_k = (1/2)^k,
    /// k = 1..n, which are distinct and inside (0,1) for every n.
    pub fn geometric(a: Rational, epsilon: Rational, n: usize) -> Result<Self, FamilyError> {
        let half = Rational::from_int(1) / Rational::from_int(2);
        let u = (1..=n as i64).map(|k| half.pow(k)).collect();
        TestFamily::new(a, epsilon, u)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// The matrix a·𝟙 + t·uuᵀ.
    pub fn matrix_at(&self, t: &Rational) -> RingMatrix<Rational> {
        build_test_matrix(&self.a, t, &self.u)
    }

    /// `grid` evenly spaced t values covering [0, ε·(1 − 10⁻⁶)],
    /// endpoints included (a single point degenerates to t = 0).
    pub fn t_grid(&self, grid: usize) -> Vec<Rational> {
        assert!(grid >= 1, "grid needs at least one point");
        let top = self.epsilon.clone()
            * (Rational::from_int(999_999) / Rational::from_int(1_000_000));
        if grid == 1 {
            return vec![Rational::zero()];
        }
        (0..grid)
            .map(|j| {
                top.clone() * Rational::from_int(j as i64) / Rational::from_int(grid as i64 - 1)
            })
            .collect()
    }

    /// Family of dimension n+1 extending this one: the extra coordinate
    /// is distinct from the existing ones and keeps the family canonical.
    pub fn extended(&self) -> TestFamily {
        let mut next = self.u.last().unwrap().clone() * (Rational::from_int(1) / Rational::from_int(2));
        while self.u.contains(&next) || !next.is_positive() || next >= Rational::one() {
            next = next * (Rational::from_int(1) / Rational::from_int(2));
        }
        let mut u = self.u.clone();
        u.push(next);
        if self.canonical {
            TestFamily::new(self.a.clone(), self.epsilon.clone(), u).unwrap()
        } else {
            TestFamily::relaxed(self.a.clone(), self.epsilon.clone(), u).unwrap()
        }
    }
}

/// Entry (j,k) of the test matrix: a + t·u_j·u_k.
pub fn build_test_matrix(a: &Rational, t: &Rational, u: &[Rational]) -> RingMatrix<Rational> {
    RingMatrix::from_fn(u.len(), |j, k| {
        a.clone() + t.clone() * u[j].clone() * u[k].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    #[test]
    fn geometric_coordinates() {
        let fam = TestFamily::geometric(rat("1"), rat("1"), 3).unwrap();
        assert_eq!(fam.u(), &[rat("1/2"), rat("1/4"), rat("1/8")]);
        assert_eq!(fam.n(), 3);
        assert!(fam.is_canonical());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            TestFamily::new(rat("-1"), rat("1"), vec![rat("1/2")]),
            Err(FamilyError::NegativeBase)
        );
        assert_eq!(
            TestFamily::new(rat("0"), rat("0"), vec![rat("1/2")]),
            Err(FamilyError::NonpositiveEpsilon)
        );
        assert_eq!(
            TestFamily::new(rat("0"), rat("1"), vec![]),
            Err(FamilyError::EmptyU)
        );
        assert_eq!(
            TestFamily::new(rat("0"), rat("1"), vec![rat("1/2"), rat("1/2")]),
            Err(FamilyError::DuplicateU(0, 1))
        );
        assert_eq!(
            TestFamily::new(rat("0"), rat("1"), vec![rat("1/2"), rat("1")]),
            Err(FamilyError::URange(1, rat("1")))
        );
        assert_eq!(
            TestFamily::new(rat("0"), rat("1"), vec![rat("0")]),
            Err(FamilyError::UNonpositive(0, rat("0")))
        );
    }

    #[test]
    fn relaxed_admits_large_u_as_noncanonical() {
        let fam = TestFamily::relaxed(rat("1"), rat("2"), vec![rat("1/2"), rat("3")]).unwrap();
        assert!(!fam.is_canonical());
        let fam = TestFamily::relaxed(rat("1"), rat("2"), vec![rat("1/2"), rat("1/3")]).unwrap();
        assert!(fam.is_canonical());
    }

    #[test]
    fn matrix_entries() {
        let fam = TestFamily::new(rat("1"), rat("1"), vec![rat("1/2"), rat("1/4")]).unwrap();
        let m = fam.matrix_at(&rat("2"));
        assert_eq!(m[(0, 0)], rat("3/2")); // 1 + 2·(1/2)²
        assert_eq!(m[(0, 1)], rat("5/4")); // 1 + 2·(1/2)(1/4)
        assert_eq!(m[(1, 1)], rat("9/8")); // 1 + 2·(1/4)²
        assert_eq!(m[(0, 1)], m[(1, 0)]);
    }

    #[test]
    fn grid_covers_just_below_epsilon() {
        let fam = TestFamily::geometric(rat("0"), rat("2"), 2).unwrap();
        let g = fam.t_grid(5);
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], rat("0"));
        assert_eq!(g[4], rat("2") * rat("999999/1000000"));
        assert_eq!(g[1], rat("999999/2000000"));
        assert_eq!(fam.t_grid(1), vec![rat("0")]);
    }

    #[test]
    fn extension_keeps_leading_block() {
        let fam = TestFamily::geometric(rat("1"), rat("1"), 2).unwrap();
        let big = fam.extended();
        assert_eq!(big.n(), 3);
        assert!(big.is_canonical());
        let t = rat("1/3");
        let small = fam.matrix_at(&t);
        let large = big.matrix_at(&t);
        for j in 0..2 {
            for k in 0..2 {
                assert_eq!(small[(j, k)], large[(j, k)]);
            }
        }
    }

    #[test]
    fn rank_one_matrices_are_psd_for_nonneg_functions() {
        // the identity function x ↦ x on the family keeps every grid
        // matrix PSD: a·𝟙 + t·uuᵀ is a sum of two PSD matrices
        let fam = TestFamily::geometric(rat("1"), rat("1"), 3).unwrap();
        for t in fam.t_grid(7) {
            let v = crate::preserver::psd::is_psd_exact(&fam.matrix_at(&t)).unwrap();
            assert!(v.is_psd);
        }
    }
}
