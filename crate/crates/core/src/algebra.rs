//! Finite-dimensional associative unital algebras over `F_p`, given by
//! structure constants.
//!
//! Elements are coordinate vectors in the algebra's basis. The algebra owns
//! the structure constants together with the left and right multiplication
//! matrices of its basis elements, which every ideal and module computation
//! reuses.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{self, Matrix, Subspace, Vector};

#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    /// `table[(i * dim + j) * dim + k]` is the `k`-th coordinate of `e_i e_j`.
    table: Vec<u32>,
    unit: Vector,
    basis_names: Vec<String>,
    /// `right_mul[k]` is the matrix of `x -> x e_k` acting on row vectors.
    right_mul: Vec<Matrix>,
    /// `left_mul[k]` is the matrix of `x -> e_k x` acting on row vectors.
    left_mul: Vec<Matrix>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .field("basis", &self.basis_names)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.table == other.table
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from the products of basis elements and checks the
    /// associativity and unit axioms on every basis triple.
    ///
    /// `products` lists `(i, j, e_i e_j)`; omitted pairs multiply to zero.
    pub fn new(
        field: PrimeField,
        basis_names: Vec<String>,
        unit: Vector,
        products: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::BadSpec("dimension must be positive".into()));
        }
        if unit.len() != dim {
            return Err(Error::BadSpec(format!(
                "unit has length {}, expected {dim}",
                unit.len()
            )));
        }
        let mut table = vec![0u32; dim * dim * dim];
        for (i, j, v) in products {
            if *i >= dim || *j >= dim {
                return Err(Error::BadSpec(format!("product index ({i}, {j}) out of range")));
            }
            if v.len() != dim {
                return Err(Error::BadSpec(format!(
                    "product e{i} e{j} has length {}, expected {dim}",
                    v.len()
                )));
            }
            let base = (i * dim + j) * dim;
            for (k, &c) in v.iter().enumerate() {
                table[base + k] = c % field.p();
            }
        }
        let unit = unit.iter().map(|&c| c % field.p()).collect();
        let alg = Self::from_table(field, basis_names, unit, table);
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Builds an algebra whose axioms hold by construction. Callers are
    /// expected to run [`Algebra::check_axioms`] in tests.
    pub(crate) fn from_table(
        field: PrimeField,
        basis_names: Vec<String>,
        unit: Vector,
        table: Vec<u32>,
    ) -> Self {
        let dim = basis_names.len();
        debug_assert_eq!(table.len(), dim * dim * dim);
        let mut alg = Self {
            field,
            dim,
            table,
            unit,
            basis_names,
            right_mul: Vec::new(),
            left_mul: Vec::new(),
        };
        alg.right_mul = (0..dim)
            .map(|k| {
                let rows: Vec<Vector> = (0..dim).map(|i| alg.basis_product(i, k).to_vec()).collect();
                Matrix::from_rows(field, dim, &rows)
            })
            .collect();
        alg.left_mul = (0..dim)
            .map(|k| {
                let rows: Vec<Vector> = (0..dim).map(|i| alg.basis_product(k, i).to_vec()).collect();
                Matrix::from_rows(field, dim, &rows)
            })
            .collect();
        alg
    }

    /// Exhaustive associativity and unit check on basis elements.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let ei = linalg::unit_vector(n, i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return Err(Error::NoUnit);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let eij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.right_mul[k].vec_mul(&eij);
                    let ejk = self.basis_product(j, k);
                    let right = self.left_mul[i].vec_mul(ejk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// The full matrix algebra `M_k(F_p)` on matrix units `e_rs`, indexed
    /// `r * k + s`.
    pub fn matrix_algebra(k: usize, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::BadSpec("matrix size must be at least 1".into()));
        }
        let dim = k * k;
        let mut table = vec![0u32; dim * dim * dim];
        for r in 0..k {
            for s in 0..k {
                for u in 0..k {
                    // e_rs e_su = e_ru
                    let (i, j, out) = (r * k + s, s * k + u, r * k + u);
                    table[(i * dim + j) * dim + out] = 1;
                }
            }
        }
        let mut unit = vec![0u32; dim];
        for r in 0..k {
            unit[r * k + r] = 1;
        }
        let names = (0..k)
            .flat_map(|r| (0..k).map(move |s| format!("e{}{}", r + 1, s + 1)))
            .collect();
        Ok(Self::from_table(field, names, unit, table))
    }

    /// The product ring `A1 x A2` with componentwise multiplication.
    pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::AlgebraMismatch);
        }
        let (n1, n2) = (a.dim, b.dim);
        let dim = n1 + n2;
        let mut table = vec![0u32; dim * dim * dim];
        for i in 0..n1 {
            for j in 0..n1 {
                let src = a.basis_product(i, j);
                let base = (i * dim + j) * dim;
                table[base..base + n1].copy_from_slice(src);
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                let src = b.basis_product(i, j);
                let base = ((n1 + i) * dim + (n1 + j)) * dim + n1;
                table[base..base + n2].copy_from_slice(src);
            }
        }
        let mut unit = a.unit.clone();
        unit.extend_from_slice(&b.unit);
        let names = a
            .basis_names
            .iter()
            .map(|s| format!("({s},0)"))
            .chain(b.basis_names.iter().map(|s| format!("(0,{s})")))
            .collect();
        Ok(Self::from_table(a.field, names, unit, table))
    }

    /// The same algebra written in a new basis: the `k`-th new basis element
    /// is column `k` of `change` (in old coordinates).
    pub fn change_basis(&self, change: &Matrix) -> Result<Self> {
        let inv = change
            .inverse()
            .ok_or_else(|| Error::BadSpec("basis change is singular".into()))?;
        let n = self.dim;
        let new_basis: Vec<Vector> = (0..n).map(|k| change.column(k)).collect();
        let mut table = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = inv.mul_vec(&self.mul(&new_basis[i], &new_basis[j]));
                let base = (i * n + j) * n;
                table[base..base + n].copy_from_slice(&prod);
            }
        }
        let unit = inv.mul_vec(&self.unit);
        let names = (0..n).map(|k| format!("f{k}")).collect();
        Ok(Self::from_table(self.field, names, unit, table))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Number of elements `p^dim`, saturating.
    pub fn cardinality(&self) -> u64 {
        self.field.size_of_space(self.dim)
    }

    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let base = (i * self.dim + j) * self.dim;
        &self.table[base..base + self.dim]
    }

    pub fn right_mul_matrices(&self) -> &[Matrix] {
        &self.right_mul
    }

    pub fn left_mul_matrices(&self) -> &[Matrix] {
        &self.left_mul
    }

    /// Left and right multiplication matrices together; ideals are the
    /// subspaces stable under all of them.
    pub fn two_sided_matrices(&self) -> Vec<Matrix> {
        self.left_mul.iter().chain(&self.right_mul).cloned().collect()
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.dim]
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        linalg::unit_vector(self.dim, i)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vector {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let n = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = (x as u64 * y as u64) % p;
                let base = (i * n + j) * n;
                for (slot, &t) in acc.iter_mut().zip(&self.table[base..base + n]) {
                    *slot += c * t as u64;
                }
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    /// Multiplication with a length check, for elements of unknown origin.
    pub fn try_mul(&self, a: &[u32], b: &[u32]) -> Result<Vector> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.mul(a, b))
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        linalg::vec_add(self.field, a, b)
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vector {
        linalg::vec_sub(self.field, a, b)
    }

    pub fn neg(&self, a: &[u32]) -> Vector {
        linalg::vec_neg(self.field, a)
    }

    pub fn scale(&self, a: &[u32], s: u32) -> Vector {
        linalg::vec_scale(self.field, a, s)
    }

    /// Matrix of `z -> x z` on row vectors.
    pub fn left_matrix(&self, x: &[u32]) -> Matrix {
        let rows: Vec<Vector> = (0..self.dim)
            .map(|i| self.right_mul[i].vec_mul(x))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    /// Matrix of `z -> z x` on row vectors.
    pub fn right_matrix(&self, x: &[u32]) -> Matrix {
        let rows: Vec<Vector> = (0..self.dim)
            .map(|i| self.left_mul[i].vec_mul(x))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    /// Two-sided inverse of `x`, if `x` is a unit.
    ///
    /// Solves `x g = 1` and `g' x = 1` separately; both are solvable exactly
    /// when `x` is a unit, and then `g = g'`.
    pub fn is_unit(&self, x: &[u32]) -> Option<Vector> {
        // g -> x g is g * left_matrix(x) on row vectors.
        let g = self.left_matrix(x).transpose().solve(&self.unit)?;
        let h = self.right_matrix(x).transpose().solve(&self.unit)?;
        (g == h).then_some(g)
    }

    /// `x^k` for `k >= 0`.
    pub fn pow(&self, x: &[u32], k: u64) -> Vector {
        let mut result = self.one();
        for _ in 0..k {
            result = self.mul(&result, x);
        }
        result
    }

    pub fn is_nilpotent(&self, x: &[u32]) -> bool {
        let mut cur = x.to_vec();
        for _ in 0..=self.dim {
            if linalg::is_zero(&cur) {
                return true;
            }
            cur = self.mul(&cur, x);
        }
        linalg::is_zero(&cur)
    }

    /// Center `{z : z e_k = e_k z for all k}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // z (R_k - L_k) = 0 for every k; stack the differences side by side.
        let mut big = Matrix::zeros(self.field, n, n * n);
        for k in 0..n {
            let diff = self.right_mul[k].add(&self.left_mul[k].scale(self.field.p() - 1));
            for r in 0..n {
                for c in 0..n {
                    big.set(r, k * n + c, diff.get(r, c));
                }
            }
        }
        Subspace::span(self.field, n, &big.left_nullspace())
    }

    /// Pretty form `2*e11 + e12` for reports.
    pub fn format_element(&self, x: &[u32]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.basis_names[i].clone()
                } else {
                    format!("{c}*{}", self.basis_names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
