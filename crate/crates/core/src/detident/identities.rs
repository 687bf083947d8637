//! Independent reconstructions of the perturbation determinant and the
//! reports that compare them.

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::ring::{Rational, RingMatrix, TruncSeries};
use crate::symmetric::{enumerate_strict, schur_at, vandermonde_at};

use super::delta::delta_series;
use super::series_fn::SeriesFunction;

/// Vandermonde² times the paired-Schur sum, one strict degree tuple
/// per t-power, weighted by the Taylor coefficients of `f`.
pub fn schur_sum_series(
    f: &SeriesFunction,
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> TruncSeries<Rational> {
    let n = u.len();
    assert_eq!(v.len(), n, "u and v must have equal length");
    let vv = vandermonde_at(u) * vandermonde_at(v);
    TruncSeries::from_fn(cutoff, |total| {
        if vv.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for tuple in enumerate_strict(total as u32, n) {
            let mut term = Rational::one();
            for &m in tuple.parts() {
                term *= f.maclaurin(m as usize);
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            acc += term * schur_at(&tuple, u) * schur_at(&tuple, v);
        }
        acc * vv.clone()
    })
}

/// Third route: moment-matrix minors.  The determinant equals the sum
/// over n-element degree subsets S of the coefficient support of
/// Π f_m · det(u_j^m) · det(v_k^m) · t^(Σ S).
pub fn cauchy_binet_series(
    f: &SeriesFunction,
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> TruncSeries<Rational> {
    let n = u.len();
    assert_eq!(v.len(), n, "u and v must have equal length");
    let support = f.nonzero_support(cutoff);
    let mut coeffs = vec![Rational::zero(); cutoff + 1];
    for combo in support.iter().copied().combinations(n) {
        let total: usize = combo.iter().sum();
        if total > cutoff {
            continue;
        }
        let mut term = Rational::one();
        for &m in &combo {
            term *= f.maclaurin(m);
        }
        let minor = |pts: &[Rational]| {
            RingMatrix::from_fn(n, |j, i| pts[j].pow(combo[i] as i64)).det_exact()
        };
        term *= minor(u) * minor(v);
        if !term.is_zero() {
            coeffs[total] += term;
        }
    }
    TruncSeries::new(cutoff, coeffs)
}

/// Comparison of two (or three) expansion routes, coefficient by
/// coefficient.  `vanishing_verified_below` records through which
/// degree the leading-coefficient vanishing was confirmed on every
/// route (C(n,2) when fully confirmed).
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionReport {
    pub identity: String,
    pub n: usize,
    pub cutoff: usize,
    #[serde(rename = "match")]
    pub is_match: bool,
    pub first_mismatch_degree: Option<usize>,
    pub lhs_coeffs: Vec<Rational>,
    pub rhs_coeffs: Vec<Rational>,
    #[serde(skip)]
    pub vanishing_verified_below: usize,
}

impl ExpansionReport {
    fn build(
        identity: &str,
        n: usize,
        cutoff: usize,
        routes: &[Vec<Rational>],
    ) -> ExpansionReport {
        assert!(routes.len() >= 2);
        let first_mismatch_degree = (0..=cutoff)
            .find(|&d| routes.windows(2).any(|w| w[0][d] != w[1][d]));
        let triangle = n * (n - 1) / 2;
        let vanishing_verified_below = (0..triangle.min(cutoff + 1))
            .take_while(|&d| routes.iter().all(|r| r[d].is_zero()))
            .count();
        ExpansionReport {
            identity: identity.to_string(),
            n,
            cutoff,
            is_match: first_mismatch_degree.is_none(),
            first_mismatch_degree,
            lhs_coeffs: routes[0].clone(),
            rhs_coeffs: routes[routes.len() - 1].clone(),
            vanishing_verified_below,
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        if self.is_match {
            format!(
                "{}: n={} match through t^{} (vanishing confirmed below t^{})",
                self.identity, self.n, self.cutoff, self.vanishing_verified_below
            )
        } else {
            format!(
                "{}: n={} MISMATCH at t^{}",
                self.identity,
                self.n,
                self.first_mismatch_degree.unwrap()
            )
        }
    }
}

/// Geometric-coefficient family: direct determinant vs Schur sum.
pub fn verify_cauchy(u: &[Rational], v: &[Rational], cutoff: usize) -> ExpansionReport {
    let f = SeriesFunction::geometric(cutoff);
    let lhs = delta_series(&f, u, v, cutoff).coeff_vec(cutoff);
    let rhs = schur_sum_series(&f, u, v, cutoff).coeff_vec(cutoff);
    ExpansionReport::build("cauchy", u.len(), cutoff, &[lhs, rhs])
}

/// Any coefficient presentation: direct determinant vs Schur sum vs
/// moment-matrix minors, all exact.
pub fn verify_tsymm(
    f: &SeriesFunction,
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> ExpansionReport {
    let lhs = delta_series(f, u, v, cutoff).coeff_vec(cutoff);
    let mid = cauchy_binet_series(f, u, v, cutoff).coeff_vec(cutoff);
    let rhs = schur_sum_series(f, u, v, cutoff).coeff_vec(cutoff);
    ExpansionReport::build("tsymm", u.len(), cutoff, &[lhs, mid, rhs])
}

/// The one-parameter rational family with coefficient 1 then `1-c`:
/// direct determinant vs generic Schur sum vs the regrouped closed
/// form that splits tuples on whether they contain degree zero.
pub fn verify_frobenius(
    c: &Rational,
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> ExpansionReport {
    let n = u.len();
    let f = SeriesFunction::frobenius(c, cutoff);
    let lhs = delta_series(&f, u, v, cutoff).coeff_vec(cutoff);
    let mid = schur_sum_series(&f, u, v, cutoff).coeff_vec(cutoff);

    let vv = vandermonde_at(u) * vandermonde_at(v);
    let jump = Rational::one() - c.clone();
    let scale = vv * jump.pow(n as i64 - 1);
    let closed = TruncSeries::from_fn(cutoff, |total| {
        if scale.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for tuple in enumerate_strict(total as u32, n) {
            let has_zero = tuple.parts().last() == Some(&0);
            let mut term = schur_at(&tuple, u) * schur_at(&tuple, v);
            if !has_zero {
                term *= jump.clone();
            }
            acc += term;
        }
        acc * scale.clone()
    })
    .coeff_vec(cutoff);

    ExpansionReport::build("frobenius", n, cutoff, &[lhs, mid, closed])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qs(ns: &[i64]) -> Vec<Rational> {
        ns.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn cauchy_example_matches() {
        let r = verify_cauchy(&qs(&[1, 2]), &qs(&[1, 3]), 3);
        assert!(r.is_match);
        assert_eq!(r.lhs_coeffs, qs(&[0, 2, 24, 194]));
        assert_eq!(r.rhs_coeffs, qs(&[0, 2, 24, 194]));
        assert_eq!(r.first_mismatch_degree, None);
        assert_eq!(r.vanishing_verified_below, 1);
    }

    #[test]
    fn cauchy_in_three_variables() {
        let r = verify_cauchy(&qs(&[1, 2, 4]), &qs(&[2, 3, 5]), 8);
        assert!(r.is_match);
        assert_eq!(r.vanishing_verified_below, 3);
    }

    #[test]
    fn report_serializes_with_expected_keys() {
        let r = verify_cauchy(&qs(&[1, 2]), &qs(&[1, 3]), 2);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["identity"], "cauchy");
        assert_eq!(json["n"], 2);
        assert_eq!(json["cutoff"], 2);
        assert_eq!(json["match"], true);
        assert!(json["first_mismatch_degree"].is_null());
        assert_eq!(json["lhs_coeffs"][1], "2");
        assert!(json.get("vanishing_verified_below").is_none());
    }

    #[test]
    fn frobenius_example() {
        let r = verify_frobenius(&q(2), &qs(&[1, 2]), &qs(&[1, 3]), 2);
        assert!(r.is_match);
        assert_eq!(r.lhs_coeffs, qs(&[0, -2, -24]));
    }

    #[test]
    fn frobenius_degenerate_values() {
        // c = 1 collapses to the all-ones matrix: zero for n >= 2
        let r = verify_frobenius(&q(1), &qs(&[1, 2]), &qs(&[1, 3]), 4);
        assert!(r.is_match);
        assert!(r.lhs_coeffs.iter().all(|c| c.is_zero()));
        // c = 0 is the geometric family again
        let r0 = verify_frobenius(&q(0), &qs(&[1, 2]), &qs(&[1, 3]), 3);
        assert!(r0.is_match);
        assert_eq!(r0.lhs_coeffs, qs(&[0, 2, 24, 194]));
    }

    #[test]
    fn tsymm_three_routes_on_a_polynomial() {
        let f = SeriesFunction::polynomial(&qs(&[3, -1, 0, 2, 1]));
        let r = verify_tsymm(&f, &qs(&[1, 2, 3]), &qs(&[-1, 2, 5]), 10);
        assert!(r.is_match, "{}", r.summary());
        assert_eq!(r.vanishing_verified_below, 3);
    }

    #[test]
    fn cauchy_binet_equals_direct_on_sparse_support() {
        let f = SeriesFunction::polynomial(&qs(&[0, 5, 0, 0, -2, 7]));
        let u = qs(&[2, 3]);
        let v = qs(&[1, 4]);
        let direct = delta_series(&f, &u, &v, 9);
        let cb = cauchy_binet_series(&f, &u, &v, 9);
        assert_eq!(direct, cb);
        // fewer nonzero coefficients than n: identically zero
        let thin = SeriesFunction::polynomial(&qs(&[0, 5]));
        assert!(cauchy_binet_series(&thin, &qs(&[1, 2]), &qs(&[1, 3]), 6).is_zero());
        assert!(delta_series(&thin, &qs(&[1, 2]), &qs(&[1, 3]), 6).is_zero());
    }

    #[test]
    fn mismatch_reporting() {
        let lhs = qs(&[0, 1, 2]);
        let rhs = qs(&[0, 1, 3]);
        let r = ExpansionReport::build("cauchy", 2, 2, &[lhs, rhs]);
        assert!(!r.is_match);
        assert_eq!(r.first_mismatch_degree, Some(2));
        assert!(r.summary().contains("MISMATCH"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn routes_agree_on_random_polynomials(
                coeffs in proptest::collection::vec(-4i64..5, 1..7),
                mut picks in proptest::collection::vec(-3i64..4, 6),
            ) {
                picks.sort_unstable();
                picks.dedup();
                prop_assume!(picks.len() >= 4);
                let u: Vec<Rational> = picks[..2].iter().map(|&x| Rational::from_int(x)).collect();
                let v: Vec<Rational> = picks[2..4].iter().map(|&x| Rational::from_int(x)).collect();
                let f = SeriesFunction::polynomial(
                    &coeffs.iter().map(|&c| Rational::from_int(c)).collect::<Vec<_>>(),
                );
                let r = verify_tsymm(&f, &u, &v, 8);
                prop_assert!(r.is_match, "{}", r.summary());
            }
        }
    }
}
