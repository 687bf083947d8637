//! Schur polynomials built two independent ways: as column-strict
//! tableau sums and as alternant/Vandermonde quotients.
//!
//! Degree tuples are the primary index: `s` for the tuple
//! `(n_0 > n_1 > ... > n_{N-1} >= 0)` in `N` variables is the classical
//! Schur polynomial of the shape obtained by subtracting the staircase
//! `(N-1, ..., 1, 0)`.  Tuples with repeated entries are legal input
//! and give the zero polynomial.

pub mod partition;
pub mod schur;
pub mod tableau;

pub use partition::{enumerate_strict, PartitionTuple, TupleError};
pub use schur::{schur_at, schur_bialternant, schur_tableaux, vandermonde_at, vandermonde_poly};
pub use tableau::{enumerate_ssyt, Tableau};
