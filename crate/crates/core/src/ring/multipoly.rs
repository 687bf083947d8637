//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors of a fixed arity; constants
//! carry arity 0 and promote on demand, so scalar results mix freely
//! with honest polynomials.  Mixing two non-constant polynomials of
//! different arity is a caller bug and panics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Carrier, Rational};

/// Polynomial in `num_vars` variables, stored as exponent-vector ↦
/// nonzero coefficient.  Keys all have length `num_vars`; iteration
/// order is ascending lexicographic.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { num_vars: 0, terms }
    }

    /// The variable with 0-based index `i` among `num_vars`.
    pub fn var(i: usize, num_vars: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of {num_vars}");
        let mut exps = vec![0u32; num_vars];
        exps[i] = 1;
        Self::monomial(num_vars, exps, Rational::one())
    }

    pub fn monomial(num_vars: usize, exps: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector has wrong arity");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultiPoly { num_vars, terms }
    }

    pub fn from_terms(num_vars: usize, terms: Vec<(Vec<u32>, Rational)>) -> Self {
        let mut p = MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        };
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), num_vars, "exponent vector has wrong arity");
            p.accumulate(exps, coeff);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Ascending-lex iteration over (exponents, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        assert_eq!(exps.len(), self.num_vars, "exponent vector has wrong arity");
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn accumulate(&mut self, exps: Vec<u32>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn reshaped(&self, num_vars: usize) -> Self {
        if self.num_vars == num_vars {
            return self.clone();
        }
        assert!(
            self.is_constant(),
            "mixing polynomials over {} and {} variables",
            self.num_vars,
            num_vars
        );
        match self.as_constant() {
            Some(c) => {
                let mut terms = BTreeMap::new();
                if !c.is_zero() {
                    terms.insert(vec![0; num_vars], c);
                }
                MultiPoly { num_vars, terms }
            }
            None => unreachable!(),
        }
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.num_vars == b.num_vars {
            (a.clone(), b.clone())
        } else if a.is_constant() {
            (a.reshaped(b.num_vars), b.clone())
        } else {
            (a.clone(), b.reshaped(a.num_vars))
        }
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly {
                num_vars: self.num_vars,
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.clone(), q * c))
                .collect(),
        }
    }

    fn leading_term(&self) -> (&Vec<u32>, &Rational) {
        self.terms.iter().next_back().expect("zero polynomial")
    }

    /// Exact quotient `self / divisor`, or `None` when not divisible.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (mut rem, div) = Self::unify(self, divisor);
        let nv = rem.num_vars;
        let mut quot = MultiPoly {
            num_vars: nv,
            terms: BTreeMap::new(),
        };
        while !rem.is_zero() {
            let (r_exps, r_coeff) = {
                let (e, c) = rem.leading_term();
                (e.clone(), c.clone())
            };
            let (d_exps, d_coeff) = div.leading_term();
            // lex order is multiplicative, so a stuck leading term can
            // never be cancelled later: not divisible
            if r_exps.iter().zip(d_exps).any(|(&r, &d)| r < d) {
                return None;
            }
            let q_exps: Vec<u32> = r_exps.iter().zip(d_exps).map(|(&r, &d)| r - d).collect();
            let q_coeff = &r_coeff / d_coeff;
            let step = MultiPoly::monomial(nv, q_exps, q_coeff);
            rem = rem - step.clone() * div.clone();
            let (e, c) = step.terms.into_iter().next().unwrap();
            quot.accumulate(e, c);
        }
        Some(quot)
    }

    /// Evaluate in any carrier; `vals[i]` substitutes variable `i`.
    pub fn eval<C: Carrier>(&self, vals: &[C]) -> C {
        assert!(
            vals.len() >= self.num_vars,
            "need {} values, got {}",
            self.num_vars,
            vals.len()
        );
        let mut acc = C::zero();
        for (exps, coeff) in &self.terms {
            let mut term = C::from_rational(coeff);
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term * vals[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Relabel variables: old index `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vars, "permutation has wrong arity");
        let mut p = MultiPoly {
            num_vars: self.num_vars,
            terms: BTreeMap::new(),
        };
        for (exps, coeff) in &self.terms {
            let mut new_exps = vec![0u32; self.num_vars];
            for (i, &e) in exps.iter().enumerate() {
                new_exps[perm[i]] = e;
            }
            p.accumulate(new_exps, coeff.clone());
        }
        p
    }

    /// Render with caller-chosen variable names (descending lex).
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exps, coeff) in self.terms.iter().rev() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.num_vars == other.num_vars {
            return self.terms == other.terms;
        }
        match (self.as_constant(), other.as_constant()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        let (mut a, b) = Self::unify(&self, &rhs);
        for (exps, coeff) in b.terms {
            a.accumulate(exps, coeff);
        }
        a
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .into_iter()
                .map(|(e, c)| (e, -c))
                .collect(),
        }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let (a, b) = Self::unify(&self, &rhs);
        let mut out = MultiPoly {
            num_vars: a.num_vars,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.accumulate(exps, ca * cb);
            }
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
}

impl Carrier for MultiPoly {
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(r.clone())
    }

    fn compatible(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars || self.is_constant() || other.is_constant()
    }
}

/// Default rendering uses `u1..un`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| format!("u{}", i + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: usize) -> MultiPoly {
        MultiPoly::var(i, 2)
    }

    #[test]
    fn display_rules() {
        let p = u(0).clone() + u(1);
        assert_eq!(p.to_string(), "u1 + u2");
        let q = MultiPoly::monomial(2, vec![2, 0], Rational::new(3, 2))
            + MultiPoly::var(1, 2).mul_scalar(&Rational::from_int(-1));
        assert_eq!(q.to_string(), "3/2*u1^2 - u2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::constant(Rational::new(-1, 3)).to_string(), "-1/3");
    }

    #[test]
    fn constant_promotion() {
        let c = MultiPoly::constant(Rational::from_int(2));
        let p = u(0) * c.clone() + c;
        assert_eq!(p.coeff(&[1, 0]), Rational::from_int(2));
        assert_eq!(p.coeff(&[0, 0]), Rational::from_int(2));
        assert_eq!(
            MultiPoly::constant(Rational::from_int(3)),
            MultiPoly::monomial(2, vec![0, 0], Rational::from_int(3))
        );
    }

    #[test]
    #[should_panic(expected = "mixing polynomials")]
    fn arity_mismatch_panics() {
        let _ = MultiPoly::var(0, 2) + MultiPoly::var(0, 3);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = u(0) + u(1) - u(0);
        assert_eq!(p, u(1));
        let z = p.clone() - p;
        assert!(z.is_zero());
        assert_eq!(z.term_count(), 0);
    }

    #[test]
    fn exact_division() {
        // (u1^2 - u2^2) / (u1 - u2) = u1 + u2
        let num = u(0) * u(0) - u(1) * u(1);
        let den = u(0) - u(1);
        assert_eq!(num.div_exact(&den).unwrap(), u(0) + u(1));
        // non-divisible
        let stuck = (u(0) * u(0) + MultiPoly::one()).div_exact(&den);
        assert!(stuck.is_none());
    }

    #[test]
    fn eval_in_carriers() {
        let p = u(0) * u(0) + u(1).mul_scalar(&Rational::new(1, 2));
        let exact = p.eval(&[Rational::from_int(3), Rational::from_int(4)]);
        assert_eq!(exact, Rational::from_int(11));
        let approx = p.eval(&[3.0f64, 4.0]);
        assert!((approx - 11.0).abs() < 1e-12);
    }

    #[test]
    fn permutation_detects_symmetry() {
        let sym = u(0) * u(1) + u(0) + u(1);
        assert_eq!(sym.permuted(&[1, 0]), sym);
        let asym = u(0) * u(0) + u(1);
        assert_ne!(asym.permuted(&[1, 0]), asym);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = MultiPoly> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0u32..4, 2),
                    (-6i64..7).prop_map(Rational::from_int),
                ),
                0..4,
            )
            .prop_map(|terms| MultiPoly::from_terms(2, terms))
        }

        proptest! {
            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                prop_assert_eq!(
                    (a.clone() * b.clone()) * c.clone(),
                    a.clone() * (b.clone() * c.clone())
                );
                prop_assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
                prop_assert_eq!(a.clone() - a.clone(), MultiPoly::zero());
                prop_assert_eq!(a.clone() * MultiPoly::one(), a.clone());
            }

            #[test]
            fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                let prod = a.clone() * b.clone();
                prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
            }
        }
    }
}
