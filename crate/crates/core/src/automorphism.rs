//! Algebra automorphisms and their integer powers.

use std::borrow::Cow;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};

/// Power tables larger than this many matrix entries are not cached.
const POWER_CACHE_ENTRIES: usize = 1 << 22;
/// Give up on order computation past this many iterations.
const MAX_ORDER_SEARCH: u64 = 1 << 24;

/// A verified automorphism `x -> M x` (column `k` of `M` is the image of the
/// `k`-th basis element). Its order is computed once; negative powers reduce
/// modulo the order.
#[derive(Debug, Clone)]
pub struct Automorphism {
    matrix: Matrix,
    order: u64,
    powers: Vec<Matrix>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    pub fn new(alg: &Algebra, matrix: Matrix) -> Result<Self> {
        let n = alg.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::NotAutomorphism(format!(
                "matrix is {}x{}, algebra has dimension {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.field() != alg.field() {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.inverse().is_none() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        if matrix.mul_vec(&alg.one()) != alg.one() {
            return Err(Error::NotAutomorphism("does not fix the unit".into()));
        }
        let images: Vec<Vector> = (0..n).map(|k| matrix.column(k)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = matrix.mul_vec(alg.basis_product(i, j));
                let rhs = alg.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotAutomorphism(format!(
                        "phi(e{i} e{j}) != phi(e{i}) phi(e{j})"
                    )));
                }
            }
        }
        Self::with_order(matrix)
    }

    fn with_order(matrix: Matrix) -> Result<Self> {
        let n = matrix.rows();
        let mut order = 1u64;
        let mut cur = matrix.clone();
        let mut powers = vec![Matrix::identity(matrix.field(), n)];
        let mut caching = true;
        while !cur.is_identity() {
            if caching {
                powers.push(cur.clone());
                if powers.len() * n * n > POWER_CACHE_ENTRIES {
                    caching = false;
                    powers.clear();
                }
            }
            cur = cur.mul(&matrix);
            order += 1;
            if order > MAX_ORDER_SEARCH {
                return Err(Error::too_large("automorphism order", order, MAX_ORDER_SEARCH));
            }
        }
        Ok(Self {
            matrix,
            order,
            powers,
        })
    }

    pub fn identity(alg: &Algebra) -> Self {
        let m = Matrix::identity(alg.field(), alg.dim());
        Self {
            powers: vec![m.clone()],
            matrix: m,
            order: 1,
        }
    }

    /// Conjugation `x -> u x u^{-1}` by a unit `u`.
    pub fn inner(alg: &Algebra, u: &[u32]) -> Result<Self> {
        let u_inv = alg
            .is_unit(u)
            .ok_or_else(|| Error::NotAutomorphism("conjugating element is not a unit".into()))?;
        let columns: Vec<Vector> = (0..alg.dim())
            .map(|k| alg.mul(&alg.mul(u, &alg.basis_element(k)), &u_inv))
            .collect();
        Self::new(alg, Matrix::from_columns(alg.field(), alg.dim(), &columns))
    }

    /// `alpha1 x alpha2` on the direct product of the two algebras.
    pub fn product(
        prod: &Algebra,
        a: &Automorphism,
        b: &Automorphism,
    ) -> Result<Self> {
        let (n1, n2) = (a.matrix.rows(), b.matrix.rows());
        if n1 + n2 != prod.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let mut m = Matrix::zeros(prod.field(), n1 + n2, n1 + n2);
        for r in 0..n1 {
            for c in 0..n1 {
                m.set(r, c, a.matrix.get(r, c));
            }
        }
        for r in 0..n2 {
            for c in 0..n2 {
                m.set(n1 + r, n1 + c, b.matrix.get(r, c));
            }
        }
        Self::new(prod, m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `k mod order` in `0..order`.
    pub fn reduce_exponent(&self, k: i64) -> u64 {
        k.rem_euclid(self.order as i64) as u64
    }

    /// Matrix of `alpha^k`, for any integer `k`.
    pub fn power_matrix(&self, k: i64) -> Cow<'_, Matrix> {
        let e = self.reduce_exponent(k);
        if !self.powers.is_empty() {
            Cow::Borrowed(&self.powers[e as usize])
        } else {
            Cow::Owned(self.matrix.pow(e))
        }
    }

    pub fn apply(&self, x: &[u32]) -> Vector {
        self.matrix.mul_vec(x)
    }

    pub fn apply_power(&self, k: i64, x: &[u32]) -> Vector {
        if self.order == 1 {
            return x.to_vec();
        }
        self.power_matrix(k).mul_vec(x)
    }

    /// Image of a subspace under `alpha^k`.
    pub fn apply_to_subspace(&self, k: i64, s: &Subspace) -> Subspace {
        s.image_col(&self.power_matrix(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2xf2() -> Algebra {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        Algebra::direct_product(&f2, &f2).unwrap()
    }

    #[test]
    fn swap_has_order_two() {
        let a = f2xf2();
        let swap = Matrix::from_columns(a.field(), 2, &[vec![0, 1], vec![1, 0]]);
        let alpha = Automorphism::new(&a, swap).unwrap();
        assert_eq!(alpha.order(), 2);
        assert_eq!(alpha.apply(&[1, 0]), vec![0, 1]);
        assert_eq!(alpha.apply_power(-1, &[1, 0]), vec![0, 1]);
        assert_eq!(alpha.apply_power(2, &[1, 0]), vec![1, 0]);
    }

    #[test]
    fn non_multiplicative_map_is_rejected() {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let dual = Algebra::new(
            f2.field(),
            vec!["1".into(), "t".into()],
            vec![1, 0],
            &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])],
        )
        .unwrap();
        // t -> 1 + t is not multiplicative: (1+t)^2 = 1 != 0.
        let m = Matrix::from_columns(dual.field(), 2, &[vec![1, 0], vec![1, 1]]);
        assert!(matches!(Automorphism::new(&dual, m), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn unit_must_be_fixed() {
        let a = f2xf2();
        let m = Matrix::from_columns(a.field(), 2, &[vec![1, 0], vec![1, 1]]);
        assert!(Automorphism::new(&a, m).is_err());
    }

    #[test]
    fn inner_automorphisms_of_m2() {
        let m2 = Algebra::matrix_algebra(2, 2).unwrap();
        // [[1,1],[0,1]] has order 2, [[0,1],[1,1]] has order 3 in GL_2(F_2).
        let a = Automorphism::inner(&m2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(a.order(), 2);
        let b = Automorphism::inner(&m2, &[0, 1, 1, 1]).unwrap();
        assert_eq!(b.order(), 3);
        for k in -4i64..5 {
            let x = vec![1, 1, 0, 0];
            let back = b.apply_power(-k, &b.apply_power(k, &x));
            assert_eq!(back, x);
        }
    }
}
