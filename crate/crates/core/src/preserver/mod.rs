//! Positivity machinery: PSD certification, the a·𝟙 + t·uuᵀ test
//! family, admissible derivative-order tuples, and the necessary-
//! condition checks and hypothesis scans they feed.
//!
//! Everything that can be exact is exact (rational matrices, char-poly
//! sign certificates, derivative profiles of polynomials); floating
//! point appears only in the numeric PSD path and in finite-difference
//! derivative estimates for non-polynomial functions like x^α.

pub mod admissible;
pub mod family;
pub mod finitediff;
pub mod hl;
pub mod profile;
pub mod psd;
pub mod scan;

pub use admissible::{admissible_characterize, is_admissible, AdmissibleLaw, AdmissibleOutcome};
pub use family::{build_test_matrix, FamilyError, TestFamily};
pub use finitediff::{finite_diff_derivs, NumericDerivs, MAX_FD_ORDER};
pub use hl::{
    fh_predict, hl_conclusion_check, maclaurin_sign_check, ConclusionReport, SignCheckReport,
    Verdict,
};
pub use profile::{DerivProfile, ProfileParseError, ProfileTooShort, Sign, Tail};
pub use psd::{is_psd_exact, is_psd_numeric, Certificate, PsdError, PsdVerdict, PSD_EIG_TOL};
pub use scan::{
    hl_hypothesis_scan, CertValue, FnSpec, PreserverReport, ScanError, Violation, DEFAULT_GRID,
};
