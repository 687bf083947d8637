//! Dense square matrices over a carrier, with exact determinants.
//!
//! `det_laplace` works over any carrier (no division) and is meant for
//! the small orders this crate deals in; `det_exact` is the O(n^3)
//! Gaussian route for rational entries.

use num_traits::{One, Zero};

use super::{Carrier, Rational};

/// Row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<C: Carrier> {
    n: usize,
    data: Vec<C>,
}

impl<C: Carrier> RingMatrix<C> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        assert!(n >= 1, "empty matrix");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        RingMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "not square");
        RingMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { C::one() } else { C::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.n + j] = v;
    }

    pub fn map<D: Carrier>(&self, f: impl Fn(&C) -> D) -> RingMatrix<D> {
        RingMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> C {
        let mut acc = C::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self::from_fn(self.n, |i, j| {
            let mut acc = C::zero();
            for k in 0..self.n {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        Self::from_fn(self.n - 1, |i, j| {
            let r = if i < row { i } else { i + 1 };
            let c = if j < col { j } else { j + 1 };
            self.get(r, c).clone()
        })
    }

    /// Division-free determinant by first-row expansion.
    pub fn det_laplace(&self) -> C {
        if self.n == 1 {
            return self.data[0].clone();
        }
        let mut acc = C::zero();
        for j in 0..self.n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let term = a.clone() * self.minor(0, j).det_laplace();
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
}

impl<C: Carrier> std::ops::Index<(usize, usize)> for RingMatrix<C> {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        self.get(i, j)
    }
}

impl RingMatrix<Rational> {
    /// Exact determinant by Gaussian elimination with pivoting.
    pub fn det_exact(&self) -> Rational {
        let n = self.n;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= pivot.clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        det
    }
}

/// Solve `a x = b` exactly; `None` when `a` is singular.
pub fn solve_exact(a: &RingMatrix<Rational>, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.n();
    assert_eq!(b.len(), n, "dimension mismatch");
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| a.get(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, col);
        let pivot = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &pivot;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MultiPoly;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> RingMatrix<Rational> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn small_determinants() {
        assert_eq!(mat(&[&[7]]).det_laplace(), q(7));
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).det_laplace(), q(-2));
        // Sarrus: 0 + 0 + 1 - 3 - 4 - 0 = -6
        let a = mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 0]]);
        assert_eq!(a.det_laplace(), q(-6));
        assert_eq!(a.det_exact(), q(-6));
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det_exact(), q(0));
    }

    #[test]
    fn symbolic_determinant() {
        // det [[x, 1], [1, x]] = x^2 - 1
        let x = MultiPoly::var(0, 1);
        let m = RingMatrix::from_rows(vec![
            vec![x.clone(), MultiPoly::one()],
            vec![MultiPoly::one(), x.clone()],
        ]);
        assert_eq!(m.det_laplace(), x.clone() * x - MultiPoly::one());
    }

    #[test]
    fn product_and_trace() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul_mat(&b), mat(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), q(5));
        assert_eq!(RingMatrix::<Rational>::identity(3).det_laplace(), q(1));
    }

    #[test]
    fn exact_solve() {
        let a = mat(&[&[2, 1, -1], &[-3, -1, 2], &[-2, 1, 2]]);
        let b = vec![q(8), q(-11), q(-3)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![q(2), q(3), q(-1)]);
        let singular = mat(&[&[1, 1], &[1, 1]]);
        assert!(solve_exact(&singular, &[q(1), q(2)]).is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = RingMatrix<Rational>> {
            proptest::collection::vec((-9i64..10).prop_map(Rational::from_int), n * n)
                .prop_map(move |data| {
                    RingMatrix::from_fn(n, |i, j| data[i * n + j].clone())
                })
        }

        proptest! {
            #[test]
            fn laplace_matches_gaussian(n in 1usize..5, seed in proptest::collection::vec(-9i64..10, 16)) {
                let m = RingMatrix::from_fn(n, |i, j| Rational::from_int(seed[i * 4 + j]));
                prop_assert_eq!(m.det_laplace(), m.det_exact());
            }

            #[test]
            fn det_is_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
                prop_assert_eq!(
                    a.mul_mat(&b).det_exact(),
                    a.det_exact() * b.det_exact()
                );
            }
        }
    }
}
