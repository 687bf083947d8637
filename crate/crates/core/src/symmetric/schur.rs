//! The two Schur constructions and their evaluated forms.

use num_traits::{One, Zero};

use crate::ring::{MultiPoly, Rational, RingMatrix};

use super::partition::PartitionTuple;
use super::tableau::enumerate_ssyt;

/// Tableau-sum Schur polynomial in `num_vars = tuple.len()` variables.
/// Zero when the tuple repeats a part.
pub fn schur_tableaux(tuple: &PartitionTuple, num_vars: usize) -> MultiPoly {
    assert_eq!(
        num_vars,
        tuple.len(),
        "degree tuple length must match the variable count"
    );
    let Some(shape) = tuple.shape() else {
        return MultiPoly::from_terms(num_vars, Vec::new());
    };
    let mut acc = MultiPoly::from_terms(num_vars, Vec::new());
    for t in enumerate_ssyt(&shape, num_vars) {
        acc = acc + MultiPoly::monomial(num_vars, t.content(num_vars), Rational::one());
    }
    acc
}

/// Π over j < k of (u_j - u_k).
pub fn vandermonde_poly(num_vars: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for j in 0..num_vars {
        for k in j + 1..num_vars {
            acc = acc * (MultiPoly::var(j, num_vars) - MultiPoly::var(k, num_vars));
        }
    }
    acc
}

/// Π over j < k of (u_j - u_k) at rational points.
pub fn vandermonde_at(points: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 0..points.len() {
        for k in j + 1..points.len() {
            acc *= &points[j] - &points[k];
        }
    }
    acc
}

/// Alternant matrix: row `j` holds `u_j` raised to each tuple entry.
fn alternant(tuple: &PartitionTuple, num_vars: usize) -> RingMatrix<MultiPoly> {
    RingMatrix::from_fn(num_vars, |j, i| {
        MultiPoly::monomial(
            num_vars,
            {
                let mut e = vec![0u32; num_vars];
                e[j] = tuple.parts()[i];
                e
            },
            Rational::one(),
        )
    })
}

/// Schur polynomial as det(alternant) / Vandermonde.
pub fn schur_bialternant(tuple: &PartitionTuple, num_vars: usize) -> MultiPoly {
    assert_eq!(
        num_vars,
        tuple.len(),
        "degree tuple length must match the variable count"
    );
    if num_vars == 0 {
        return MultiPoly::one();
    }
    let det = alternant(tuple, num_vars).det_laplace();
    det.div_exact(&vandermonde_poly(num_vars))
        .expect("alternant is divisible by the Vandermonde product")
}

/// Schur value at rational points: bialternant quotient when the
/// points are pairwise distinct, tableau sum otherwise.
pub fn schur_at(tuple: &PartitionTuple, points: &[Rational]) -> Rational {
    assert_eq!(
        points.len(),
        tuple.len(),
        "degree tuple length must match the point count"
    );
    if points.is_empty() {
        return Rational::one();
    }
    let v = vandermonde_at(points);
    if v.is_zero() {
        return schur_tableaux(tuple, points.len()).eval(points);
    }
    if !tuple.is_strict() {
        return Rational::zero();
    }
    let n = points.len();
    let det = RingMatrix::from_fn(n, |j, i| points[j].pow(tuple.parts()[i] as i64)).det_exact();
    det / v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(parts: &[u32]) -> PartitionTuple {
        PartitionTuple::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn two_variable_values() {
        let u1 = MultiPoly::var(0, 2);
        let u2 = MultiPoly::var(1, 2);
        assert_eq!(schur_tableaux(&t(&[2, 0]), 2), u1.clone() + u2.clone());
        assert_eq!(schur_tableaux(&t(&[2, 0]), 2).to_string(), "u1 + u2");
        assert_eq!(schur_tableaux(&t(&[2, 1]), 2), u1.clone() * u2.clone());
        assert_eq!(
            schur_tableaux(&t(&[3, 0]), 2),
            u1.clone() * u1.clone() + u1.clone() * u2.clone() + u2.clone() * u2.clone()
        );
        assert!(schur_tableaux(&t(&[1, 0]), 2).is_one());
        assert!(schur_tableaux(&t(&[2, 2]), 2).is_zero());
    }

    #[test]
    fn constructions_agree_on_examples() {
        for (parts, vars) in [
            (vec![2u32, 0], 2usize),
            (vec![2, 1], 2),
            (vec![3, 0], 2),
            (vec![1, 0], 2),
            (vec![2, 2], 2),
            (vec![4, 2, 0], 3),
            (vec![5, 3, 1], 3),
            (vec![3, 2, 1, 0], 4),
            (vec![6, 3, 1, 0], 4),
            (vec![7], 1),
        ] {
            let tuple = PartitionTuple::new(parts).unwrap();
            assert_eq!(
                schur_tableaux(&tuple, vars),
                schur_bialternant(&tuple, vars),
                "tuple {tuple}"
            );
        }
    }

    #[test]
    fn staircase_gives_one() {
        assert!(schur_bialternant(&t(&[2, 1, 0]), 3).is_one());
        assert!(schur_tableaux(&t(&[3, 2, 1, 0]), 4).is_one());
    }

    #[test]
    fn kostka_multiplicities() {
        // shape (2,1) in 3 variables: monomial u1^2 u2 appears once,
        // u1 u2 u3 twice
        let s = schur_tableaux(&t(&[4, 2, 0]), 3);
        assert_eq!(s.coeff(&[2, 1, 0]), q(1));
        assert_eq!(s.coeff(&[1, 1, 1]), q(2));
        assert_eq!(s.coeff(&[3, 0, 0]), q(0));
    }

    #[test]
    fn schur_polynomials_are_symmetric() {
        for parts in [vec![3u32, 1, 0], vec![4, 2, 1], vec![5, 2, 0]] {
            let tuple = PartitionTuple::new(parts).unwrap();
            let s = schur_tableaux(&tuple, 3);
            for perm in [[1usize, 0, 2], [0, 2, 1], [2, 0, 1]] {
                assert_eq!(s.permuted(&perm), s, "tuple {tuple} perm {perm:?}");
            }
        }
    }

    #[test]
    fn evaluation_routes_agree() {
        let tuple = t(&[4, 2, 0]);
        let pts = [q(1), q(2), q(3)];
        let direct = schur_at(&tuple, &pts);
        let via_poly = schur_tableaux(&tuple, 3).eval(&pts[..]);
        assert_eq!(direct, via_poly);
        // repeated coordinates fall back to the tableau sum
        let rep = [q(2), q(2), q(1)];
        assert_eq!(
            schur_at(&tuple, &rep),
            schur_tableaux(&tuple, 3).eval(&rep[..])
        );
        // non-strict tuple vanishes at distinct points
        assert_eq!(schur_at(&t(&[2, 2]), &[q(1), q(2)]), q(0));
    }

    #[test]
    fn single_variable_power() {
        assert_eq!(
            schur_tableaux(&t(&[5]), 1),
            MultiPoly::monomial(1, vec![5], q(1))
        );
        assert_eq!(schur_at(&t(&[5]), &[q(2)]), q(32));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn tableaux_match_bialternant(mut parts in proptest::collection::vec(0u32..9, 1..4)) {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                parts.dedup();
                let n = parts.len();
                let tuple = PartitionTuple::new(parts).unwrap();
                prop_assert_eq!(
                    schur_tableaux(&tuple, n),
                    schur_bialternant(&tuple, n)
                );
            }

            #[test]
            fn evaluation_matches_polynomial(
                mut parts in proptest::collection::vec(0u32..7, 2..4),
                xs in proptest::collection::vec(-5i64..6, 3),
            ) {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let n = parts.len();
                let tuple = PartitionTuple::new(parts).unwrap();
                let pts: Vec<Rational> = xs[..n].iter().map(|&x| Rational::from_int(x)).collect();
                prop_assert_eq!(
                    schur_at(&tuple, &pts),
                    schur_tableaux(&tuple, n).eval(&pts[..])
                );
            }
        }
    }
}
