//! Finite-difference derivative estimation with error estimates.
//!
//! Stencil weights are solved exactly over the rationals from the node
//! Vandermonde system, so the only floating-point error sources are the
//! function evaluations themselves.  Each order is evaluated at three
//! step sizes (h, h/2, h/4) and Richardson-extrapolated twice; the gap
//! between the extrapolated value and the finest raw value is reported
//! as the error estimate.  The step grows with the order (higher
//! derivatives need coarser steps to beat roundoff) and shrinks to keep
//! every sample inside a left-bounded domain, falling back to a purely
//! one-sided stencil at the left endpoint itself.

use super::profile::DerivProfile;
use crate::ring::{factorial, solve_exact, Rational, RingMatrix};
use num_traits::Zero;

/// Highest supported derivative order.
pub const MAX_FD_ORDER: usize = 8;

/// Default base step; the order-k step is `base · 1.35^k`.
pub const FD_BASE_STEP: f64 = 0.05;

const FD_STEP_GROWTH: f64 = 1.35;
const FD_DOMAIN_FRACTION: f64 = 0.9;
const FD_EXTRA_NODES: usize = 5;

/// Derivative estimates f(a), f'(a), …, with per-order error estimates.
#[derive(Debug, Clone)]
pub struct NumericDerivs {
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
}

impl NumericDerivs {
    /// Package the estimates as a derivative profile at `base`.
    pub fn profile(&self, base: Rational) -> DerivProfile {
        DerivProfile::from_numeric(base, self.values.clone(), self.errors.clone())
    }
}

/// Exact weights w with Σ w_i x_i^j = δ_{jk}·k! for j = 0..nodes.len().
fn stencil_weights(nodes: &[i64], k: usize) -> Vec<f64> {
    let r = nodes.len();
    assert!(k < r);
    let a = RingMatrix::from_fn(r, |j, i| Rational::from_int(nodes[i]).pow(j as i64));
    let b: Vec<Rational> = (0..r)
        .map(|j| {
            if j == k {
                Rational::from(factorial(k as u64))
            } else {
                Rational::zero()
            }
        })
        .collect();
    let w = solve_exact(&a, &b).expect("distinct stencil nodes form an invertible system");
    w.iter().map(Rational::to_f64).collect()
}

/// Σ w_i (f(a + x_i h) − f(a)) / h^k; the subtraction is exact for
/// constants because the weights of a k ≥ 1 stencil sum to zero.
fn apply_stencil<F: Fn(f64) -> f64>(f: &F, a: f64, nodes: &[i64], w: &[f64], h: f64, k: usize) -> f64 {
    let fa = f(a);
    let mut s = 0.0;
    for (&x, &wi) in nodes.iter().zip(w) {
        s += wi * (f(a + x as f64 * h) - fa);
    }
    s / h.powi(k as i32)
}

/// Estimate f(a), f'(a), …, f^(k_max)(a).  `left_limit` restricts all
/// samples to stay right of the domain's left end; when a sits at (or
/// too close to) that end the stencil becomes one-sided.
pub fn finite_diff_derivs<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    k_max: usize,
    base_step: f64,
    left_limit: Option<f64>,
) -> NumericDerivs {
    assert!(k_max <= MAX_FD_ORDER, "supported orders stop at {MAX_FD_ORDER}");
    assert!(base_step > 0.0 && base_step.is_finite());
    assert!(a.is_finite());
    if let Some(l) = left_limit {
        assert!(a >= l, "base point must lie inside the domain");
    }

    let mut values = Vec::with_capacity(k_max + 1);
    let mut errors = Vec::with_capacity(k_max + 1);
    values.push(f(a));
    errors.push(values[0].abs() * 1e-15);

    for k in 1..=k_max {
        let grown = base_step * FD_STEP_GROWTH.powi(k as i32);
        let m = k / 2 + (FD_EXTRA_NODES + 1) / 2;
        let clamped = match left_limit {
            None => grown,
            Some(l) => grown.min(FD_DOMAIN_FRACTION * (a - l) / m as f64),
        };
        let (nodes, h, p) = if clamped >= base_step / 16.0 {
            let nodes: Vec<i64> = (-(m as i64)..=m as i64).collect();
            let mut p = nodes.len() - k;
            if p % 2 == 1 {
                p += 1;
            }
            (nodes, clamped, p)
        } else {
            let r = k + FD_EXTRA_NODES;
            ((0..r as i64).collect(), grown, FD_EXTRA_NODES)
        };

        let w = stencil_weights(&nodes, k);
        let v0 = apply_stencil(&f, a, &nodes, &w, h, k);
        let v1 = apply_stencil(&f, a, &nodes, &w, h / 2.0, k);
        let v2 = apply_stencil(&f, a, &nodes, &w, h / 4.0, k);
        let w0 = 2f64.powi(p as i32);
        let r0 = (w0 * v1 - v0) / (w0 - 1.0);
        let r1 = (w0 * v2 - v1) / (w0 - 1.0);
        let w1 = 2f64.powi(p as i32 + 1);
        let extrap = (w1 * r1 - r0) / (w1 - 1.0);

        values.push(extrap);
        errors.push((extrap - v2).abs().max(extrap.abs() * f64::EPSILON));
    }

    NumericDerivs { values, errors }
}
