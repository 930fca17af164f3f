//! Quotient algebras `A / I`.

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::ideal::{is_alpha_ideal, Ideal};
use crate::linalg::{Matrix, Subspace, Vector};

/// `A / I` written on the complement basis given by the non-pivot columns of
/// `I`, together with the projection `A -> A / I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Algebra,
    /// Row-vector matrix of the projection (`dim A` x `dim A/I`).
    pub projection: Matrix,
    /// `complement[k]` is the basis index of `A` lifting quotient basis `k`.
    pub complement: Vec<usize>,
    kernel: Subspace,
}

impl Quotient {
    pub fn project(&self, x: &[u32]) -> Vector {
        self.projection.vec_mul(x)
    }

    /// The canonical lift: coordinates placed on the complement columns.
    pub fn lift(&self, x: &[u32]) -> Vector {
        let mut v = vec![0; self.projection.rows()];
        for (k, &c) in self.complement.iter().enumerate() {
            v[c] = x[k];
        }
        v
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// The automorphism induced on `A / I` by an alpha with `alpha(I) = I`.
    pub fn induced_automorphism(&self, alpha: &Automorphism) -> Result<Automorphism> {
        let ideal = Ideal::from_subspace_unchecked(self.kernel.clone());
        if !is_alpha_ideal(&ideal, alpha) {
            return Err(Error::NotAlphaIdeal);
        }
        let m = self.algebra.dim();
        let columns: Vec<Vector> = self
            .complement
            .iter()
            .map(|&c| {
                let img = alpha.apply(&crate::linalg::unit_vector(self.projection.rows(), c));
                self.project(&img)
            })
            .collect();
        Automorphism::new(&self.algebra, Matrix::from_columns(self.algebra.field(), m, &columns))
    }
}

/// Builds `A / I` and verifies that the projection is a surjective
/// homomorphism with kernel exactly `I`.
pub fn quotient_algebra(alg: &Algebra, ideal: &Ideal) -> Result<Quotient> {
    let s = ideal.subspace();
    if s.ambient() != alg.dim() {
        return Err(Error::AlgebraMismatch);
    }
    if ideal.is_whole() {
        return Err(Error::NotProper);
    }
    let n = alg.dim();
    let complement = s.non_pivots();
    let m = complement.len();
    let project = |x: &[u32]| -> Vector {
        let r = s.reduce(x);
        complement.iter().map(|&c| r[c]).collect()
    };
    let proj_rows: Vec<Vector> = (0..n).map(|i| project(&alg.basis_element(i))).collect();
    let projection = Matrix::from_rows(alg.field(), m, &proj_rows);

    let mut table = vec![0u32; m * m * m];
    for (a, &ca) in complement.iter().enumerate() {
        for (b, &cb) in complement.iter().enumerate() {
            let prod = project(alg.basis_product(ca, cb));
            let base = (a * m + b) * m;
            table[base..base + m].copy_from_slice(&prod);
        }
    }
    let unit = project(&alg.one());
    let names = complement
        .iter()
        .map(|&c| format!("[{}]", alg.basis_names()[c]))
        .collect();
    let quotient = Algebra::from_table(alg.field(), names, unit, table);

    // projection(e_i e_j) = projection(e_i) projection(e_j)
    for i in 0..n {
        for j in 0..n {
            let lhs = projection.vec_mul(alg.basis_product(i, j));
            let rhs = quotient.mul(projection.row(i), projection.row(j));
            if lhs != rhs {
                return Err(Error::Inconsistent(format!(
                    "projection is not multiplicative on e{i}, e{j}"
                )));
            }
        }
    }
    let kernel = Subspace::span(alg.field(), n, &projection.left_nullspace());
    if kernel != *s || projection.rank() != m {
        return Err(Error::Inconsistent("projection kernel differs from the ideal".into()));
    }
    Ok(Quotient {
        algebra: quotient,
        projection,
        complement,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_mod_t_is_f2() {
        let f = crate::field::PrimeField::new(2).unwrap();
        let a = Algebra::new(
            f,
            vec!["1".into(), "t".into()],
            vec![1, 0],
            &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])],
        )
        .unwrap();
        let t = Ideal::generated_by(&a, &[vec![0, 1]]);
        let q = quotient_algebra(&a, &t).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        q.algebra.check_axioms().unwrap();
        assert_eq!(q.project(&[1, 1]), vec![1]);
        assert_eq!(q.project(&[0, 1]), vec![0]);
    }

    #[test]
    fn product_mod_component() {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let a = Algebra::direct_product(&f2, &f2).unwrap();
        let i = Ideal::generated_by(&a, &[vec![1, 0]]);
        let q = quotient_algebra(&a, &i).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.algebra.one(), vec![1]);
    }

    #[test]
    fn mod_zero_is_identity_and_whole_is_rejected() {
        let m2 = Algebra::matrix_algebra(2, 2).unwrap();
        let q = quotient_algebra(&m2, &Ideal::zero(&m2)).unwrap();
        assert_eq!(q.algebra, m2);
        assert!(q.projection.is_identity());
        assert_eq!(
            quotient_algebra(&m2, &Ideal::whole(&m2)).unwrap_err(),
            Error::NotProper
        );
    }

    #[test]
    fn induced_automorphism_requires_stability() {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let a = Algebra::direct_product(&f2, &f2).unwrap();
        let swap = Automorphism::new(
            &a,
            Matrix::from_columns(a.field(), 2, &[vec![0, 1], vec![1, 0]]),
        )
        .unwrap();
        let i = Ideal::generated_by(&a, &[vec![1, 0]]);
        let q = quotient_algebra(&a, &i).unwrap();
        assert_eq!(q.induced_automorphism(&swap).unwrap_err(), Error::NotAlphaIdeal);
        let q0 = quotient_algebra(&a, &Ideal::zero(&a)).unwrap();
        assert_eq!(q0.induced_automorphism(&swap).unwrap().order(), 2);
    }
}
