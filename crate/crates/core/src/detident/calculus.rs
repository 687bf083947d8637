//! A tiny differential calculus, instantiated both formally and
//! numerically so the same law checks exercise exact series algebra
//! and floating-point differentiation.

use std::rc::Rc;


use crate::ring::{Rational, TruncSeries};

use super::series_fn::taylor_shift;

/// Functions closed under differentiation, ring operations, rational
/// scaling, and affine substitution `x ↦ shift + scale·x`.
pub trait DiffCalculus {
    type Fun: Clone;

    fn derive(&self, f: &Self::Fun) -> Self::Fun;
    fn add(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun;
    fn mul(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun;
    fn scale(&self, r: &Rational, f: &Self::Fun) -> Self::Fun;
    fn compose_affine(&self, f: &Self::Fun, shift: &Rational, scale: &Rational) -> Self::Fun;
    fn eq(&self, f: &Self::Fun, g: &Self::Fun) -> bool;
}

/// Exact truncated-series model; `derive` is the formal derivative and
/// drops the cutoff by one, `eq` compares through the common cutoff.
pub struct FormalCalculus;

impl DiffCalculus for FormalCalculus {
    type Fun = TruncSeries<Rational>;

    fn derive(&self, f: &Self::Fun) -> Self::Fun {
        f.derivative()
    }

    fn add(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun {
        f.clone() + g.clone()
    }

    fn mul(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun {
        f.clone() * g.clone()
    }

    fn scale(&self, r: &Rational, f: &Self::Fun) -> Self::Fun {
        f.mul_coeff(r)
    }

    fn compose_affine(&self, f: &Self::Fun, shift: &Rational, scale: &Rational) -> Self::Fun {
        taylor_shift(f, shift, scale)
    }

    fn eq(&self, f: &Self::Fun, g: &Self::Fun) -> bool {
        let d = f.cutoff().min(g.cutoff());
        f.truncated(d) == g.truncated(d)
    }
}

/// Sampled floating-point function.
#[derive(Clone)]
pub struct NumFun(Rc<dyn Fn(f64) -> f64>);

impl NumFun {
    pub fn new(f: impl Fn(f64) -> f64 + 'static) -> Self {
        NumFun(Rc::new(f))
    }

    pub fn from_poly(coeffs: &[Rational]) -> Self {
        let cs: Vec<f64> = coeffs.iter().map(|c| c.to_f64()).collect();
        NumFun::new(move |x| cs.iter().rev().fold(0.0, |acc, c| acc * x + c))
    }

    pub fn call(&self, x: f64) -> f64 {
        (self.0)(x)
    }
}

/// Central-difference model on a fixed sample grid.
pub struct NumericCalculus {
    pub step: f64,
    pub tol: f64,
    pub samples: Vec<f64>,
}

impl Default for NumericCalculus {
    fn default() -> Self {
        NumericCalculus {
            step: 1e-5,
            tol: 1e-8,
            samples: (-8..=8).map(|k| k as f64 / 8.0).collect(),
        }
    }
}

impl DiffCalculus for NumericCalculus {
    type Fun = NumFun;

    fn derive(&self, f: &Self::Fun) -> Self::Fun {
        let f = f.clone();
        let h = self.step;
        NumFun::new(move |x| (f.call(x + h) - f.call(x - h)) / (2.0 * h))
    }

    fn add(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun {
        let (f, g) = (f.clone(), g.clone());
        NumFun::new(move |x| f.call(x) + g.call(x))
    }

    fn mul(&self, f: &Self::Fun, g: &Self::Fun) -> Self::Fun {
        let (f, g) = (f.clone(), g.clone());
        NumFun::new(move |x| f.call(x) * g.call(x))
    }

    fn scale(&self, r: &Rational, f: &Self::Fun) -> Self::Fun {
        let f = f.clone();
        let c = r.to_f64();
        NumFun::new(move |x| c * f.call(x))
    }

    fn compose_affine(&self, f: &Self::Fun, shift: &Rational, scale: &Rational) -> Self::Fun {
        let f = f.clone();
        let (b, c) = (shift.to_f64(), scale.to_f64());
        NumFun::new(move |x| f.call(b + c * x))
    }

    fn eq(&self, f: &Self::Fun, g: &Self::Fun) -> bool {
        self.samples
            .iter()
            .all(|&x| (f.call(x) - g.call(x)).abs() <= self.tol)
    }
}

/// Checks the five laws on concrete elements; returns the names of the
/// laws that failed (empty = all hold).
pub fn check_calculus_laws<C: DiffCalculus>(
    calc: &C,
    f: &C::Fun,
    g: &C::Fun,
    r: &Rational,
    shift: &Rational,
    scale: &Rational,
) -> Vec<&'static str> {
    let mut failed = Vec::new();

    let additive = calc.eq(
        &calc.derive(&calc.add(f, g)),
        &calc.add(&calc.derive(f), &calc.derive(g)),
    );
    if !additive {
        failed.push("derive-additive");
    }

    let homogeneous = calc.eq(
        &calc.derive(&calc.scale(r, f)),
        &calc.scale(r, &calc.derive(f)),
    );
    if !homogeneous {
        failed.push("derive-homogeneous");
    }

    let leibniz = calc.eq(
        &calc.derive(&calc.mul(f, g)),
        &calc.add(
            &calc.mul(&calc.derive(f), g),
            &calc.mul(f, &calc.derive(g)),
        ),
    );
    if !leibniz {
        failed.push("leibniz");
    }

    let chain = calc.eq(
        &calc.derive(&calc.compose_affine(f, shift, scale)),
        &calc.scale(scale, &calc.compose_affine(&calc.derive(f), shift, scale)),
    );
    if !chain {
        failed.push("affine-chain");
    }

    let multiplicative = calc.eq(
        &calc.compose_affine(&calc.mul(f, g), shift, scale),
        &calc.mul(
            &calc.compose_affine(f, shift, scale),
            &calc.compose_affine(g, shift, scale),
        ),
    );
    if !multiplicative {
        failed.push("compose-multiplicative");
    }

    failed
}
