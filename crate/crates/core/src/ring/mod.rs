//! Scalar carriers: exact rationals, sparse multivariate polynomials,
//! truncated power series, and dense matrices over any of them.
//!
//! Everything downstream is generic over [`Carrier`], a commutative
//! ring with identity that can absorb exact rational constants.  The
//! same determinant or Schur-sum code therefore runs over `Rational`
//! (exact numerics), `MultiPoly` (symbolic identities), nested
//! `TruncSeries<MultiPoly>` (universal series coefficients), or `f64`
//! (fast floating point).

pub mod matrix;
pub mod multipoly;
pub mod rational;
pub mod series;

pub use matrix::{solve_exact, RingMatrix};
pub use multipoly::MultiPoly;
pub use rational::{binomial, factorial, multinomial, Rational};
pub use series::{TruncSeries, UNLIMITED};

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring with identity that can absorb rational scalars.
///
/// `compatible` reports whether two values may legally meet in a binary
/// operation; carriers with extra shape (variable arity) override it,
/// plain scalars are compatible with everything.
pub trait Carrier:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }
}

impl Carrier for f64 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
}
