//! Determinants of entrywise-transformed rank-one families, expanded
//! as exact power series in the perturbation parameter and cross-checked
//! against two independent reconstructions.
//!
//! The three routes for det f[a + t·u vᵀ]:
//!   1. direct — entrywise series substitution, then a determinant over
//!      the truncated-series ring;
//!   2. Schur sum — Vandermonde² times a sum of paired Schur values
//!      weighted by Taylor coefficients, one strict degree tuple per
//!      t-power;
//!   3. Cauchy–Binet — minors of the two moment matrices over the
//!      support of the coefficient sequence.
//! Any disagreement is a bug in exactly one place, which is the point.

pub mod calculus;
pub mod delta;
pub mod identities;
pub mod series_fn;

pub use calculus::{
    check_calculus_laws, DiffCalculus, FormalCalculus, NumFun, NumericCalculus,
};
pub use delta::{delta_series, phorn_derivative};
pub use identities::{
    cauchy_binet_series, schur_sum_series, verify_cauchy, verify_frobenius, verify_tsymm,
    ExpansionReport,
};
pub use series_fn::SeriesFunction;
