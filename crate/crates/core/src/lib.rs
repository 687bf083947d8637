//! Exact-arithmetic Schur polynomials, determinantal power-series
//! identities, and entrywise positivity-preserver verification.
//!
//! The crate is layered: [`ring`] provides the scalar carriers
//! (rationals, sparse multivariate polynomials, truncated series,
//! matrices), [`symmetric`] builds Schur polynomials two independent
//! ways, [`detident`] expands determinants of entrywise-transformed
//! rank-one families as power series and cross-checks the expansions,
//! and [`preserver`] turns those identities into positivity
//! certificates and counterexample searches.  The `schurlab` binary
//! exposes all of it behind a reproducible, JSON-reporting CLI.

pub mod cli;
pub mod detident;
pub mod preserver;
pub mod ring;
pub mod rng;
pub mod suite;
pub mod symmetric;
