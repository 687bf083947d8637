//! The perturbation determinant and its derivatives at zero.

use num_traits::Zero;

use crate::ring::{multinomial, Rational, TruncSeries};
use crate::symmetric::{enumerate_strict, schur_at, vandermonde_at};

use super::series_fn::SeriesFunction;

/// det f[base + t·u vᵀ] as an exact series in t through `cutoff`.
pub fn delta_series(
    f: &SeriesFunction,
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> TruncSeries<Rational> {
    assert!(!u.is_empty(), "need at least a 1x1 family");
    f.entrywise_rank_one(u, v, cutoff).det_laplace()
}

/// The `order`-th t-derivative of [`delta_series`] at t = 0, computed
/// independently as a multinomial-weighted sum of paired Schur values
/// over strict degree tuples.  Vanishes for `order` below C(n,2) and
/// whenever fewer than n derivative orders of `f` are nonzero at the
/// base point.
pub fn phorn_derivative(
    f: &SeriesFunction,
    u: &[Rational],
    v: &[Rational],
    order: usize,
) -> Rational {
    let n = u.len();
    assert_eq!(v.len(), n, "u and v must have equal length");
    assert!(n >= 1, "need at least a 1x1 family");
    let vv = vandermonde_at(u) * vandermonde_at(v);
    let mut acc = Rational::zero();
    for tuple in enumerate_strict(order as u32, n) {
        let parts: Vec<u64> = tuple.parts().iter().map(|&p| p as u64).collect();
        let mut term = Rational::from(multinomial(&parts));
        for &m in tuple.parts() {
            term *= f.derivative_at_base(m as usize);
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        term *= schur_at(&tuple, u) * schur_at(&tuple, v);
        acc += term;
    }
    acc * vv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::factorial;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qs(ns: &[i64]) -> Vec<Rational> {
        ns.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn geometric_two_by_two_series() {
        let f = SeriesFunction::geometric(3);
        let d = delta_series(&f, &qs(&[1, 2]), &qs(&[1, 3]), 3);
        assert_eq!(d.coeff_vec(3), qs(&[0, 2, 24, 194]));
        assert_eq!(d.to_string(), "2*t + 24*t^2 + 194*t^3 + O(t^4)");
    }

    #[test]
    fn derivative_formula_matches_series() {
        let f = SeriesFunction::geometric(4);
        let u = qs(&[1, 2]);
        let v = qs(&[1, 3]);
        assert_eq!(phorn_derivative(&f, &u, &v, 1), q(2));
        assert_eq!(phorn_derivative(&f, &u, &v, 2), q(48));
        let d = delta_series(&f, &u, &v, 4);
        for order in 0..=4usize {
            assert_eq!(
                phorn_derivative(&f, &u, &v, order),
                Rational::from(factorial(order as u64)) * d.coeff(order),
                "order {order}"
            );
        }
    }

    #[test]
    fn vanishing_below_the_triangle_number() {
        let f = SeriesFunction::geometric(6);
        let u = qs(&[1, 2, 4]);
        let v = qs(&[1, 3, 5]);
        let d = delta_series(&f, &u, &v, 6);
        // C(3,2) = 3: degrees 0..2 vanish
        assert!(d.coeff(0).is_zero());
        assert!(d.coeff(1).is_zero());
        assert!(d.coeff(2).is_zero());
        assert!(!d.coeff(3).is_zero());
        assert!(phorn_derivative(&f, &u, &v, 2).is_zero());
        assert!(!phorn_derivative(&f, &u, &v, 3).is_zero());
    }

    #[test]
    fn few_nonzero_derivatives_kill_every_order() {
        // n = 3 but f has only two nonzero coefficients
        let f = SeriesFunction::polynomial(&qs(&[5, 0, 7]));
        let u = qs(&[1, 2, 3]);
        let v = qs(&[2, 5, 7]);
        for order in 0..=8usize {
            assert!(phorn_derivative(&f, &u, &v, order).is_zero(), "order {order}");
        }
        let d = delta_series(&f, &u, &v, 8);
        assert!(d.is_zero());
    }

    #[test]
    fn one_by_one_family_is_the_function_itself() {
        let f = SeriesFunction::polynomial(&qs(&[1, 4, 9]));
        let d = delta_series(&f, &qs(&[3]), &qs(&[2]), 2);
        // f(6t) = 1 + 24 t + 324 t^2
        assert_eq!(d.coeff_vec(2), qs(&[1, 24, 324]));
        assert_eq!(phorn_derivative(&f, &qs(&[3]), &qs(&[2]), 1), q(24));
    }
}
