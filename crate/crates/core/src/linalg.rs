//! Dense linear algebra over `F_p`: matrices, reduced echelon forms and
//! canonical subspaces.
//!
//! Vectors are plain `Vec<u32>` with entries in `0..p`. Matrices act on row
//! vectors from the right (`v * M`) unless a method says otherwise.

use crate::field::PrimeField;

pub type Vector = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a square matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(field: PrimeField, n: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, n, columns.len());
        for (k, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), n, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, k, x % field.p());
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.field.p() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot += a * other.get(k, c) as u64;
                }
            }
            for (c, a) in acc.iter().enumerate() {
                out.set(r, c, (a % p) as u32);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vector {
        assert_eq!(v.len(), self.rows);
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.cols];
        for (r, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = self.row(r);
            for (slot, &m) in acc.iter_mut().zip(row) {
                *slot += x as u64 * m as u64;
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Vector {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, r * m.cols + k);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for k in 0..m.cols {
                let v = f.mul(m.get(r, k), inv);
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for k in 0..m.cols {
                    let v = f.sub(m.get(i, k), f.mul(factor, m.get(r, k)));
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Basis of `{x : M x = 0}` (column vectors).
    pub fn nullspace(&self) -> Vec<Vector> {
        let f = self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(red.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Basis of `{x : x M = 0}` (row vectors).
    pub fn left_nullspace(&self) -> Vec<Vector> {
        self.transpose().nullspace()
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[u32]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r] % f.p());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(r, self.cols);
        }
        Some(x)
    }
}

/// Vector helpers.
pub fn vec_add(f: PrimeField, a: &[u32], b: &[u32]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: PrimeField, a: &[u32], b: &[u32]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_neg(f: PrimeField, a: &[u32]) -> Vector {
    a.iter().map(|&x| f.neg(x)).collect()
}

pub fn vec_scale(f: PrimeField, a: &[u32], s: u32) -> Vector {
    a.iter().map(|&x| f.mul(x, s)).collect()
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Incrementally built echelon basis. Rows are normalized to a leading one
/// and reduced against all earlier rows, so a vector reduced against the rows
/// in insertion order has zeros in every pivot column.
#[derive(Debug, Clone)]
pub struct EchelonBuilder {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Self {
            field: s.field,
            ambient: s.ambient,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u32]) -> Vector {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    /// Inserts `v`; returns the normalized new row if `v` was independent.
    pub fn insert(&mut self, v: &[u32]) -> Option<&Vector> {
        assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(v);
        let pc = r.iter().position(|&x| x != 0)?;
        let inv = self.field.inv(r[pc]).expect("nonzero");
        for x in r.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(r);
        self.pivots.push(pc);
        self.rows.last()
    }

    pub fn finish(self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.rows)
    }
}

/// A subspace of `F_p^n` stored as a reduced row echelon basis. Two equal
/// subspaces have identical representations, so `==` and `Hash` are
/// subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows: Vec<Vector> = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Self {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let (red, pivots) = Matrix::from_rows(field, ambient, vectors).rref();
        let rows = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Self {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the corresponding unit vectors span a
    /// complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Canonical representative of `v` modulo this subspace: it vanishes in
    /// every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&pc| v[pc]).collect();
        let rebuilt = self.combine(&coords);
        (rebuilt == v).then_some(coords)
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[u32]) -> Vector {
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.ambient];
        for (&c, row) in coeffs.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(row) {
                *a += c as u64 * r as u64;
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn perp(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        let m = Matrix::from_rows(self.field, self.ambient, &self.rows);
        Subspace::span(self.field, self.ambient, &m.nullspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        self.perp().sum(&other.perp()).perp()
    }

    /// Image under `v -> v * m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self.rows.iter().map(|r| m.vec_mul(r)).collect();
        Subspace::span(self.field, m.cols(), &imgs)
    }

    /// Image under the column convention `v -> m v`.
    pub fn image_col(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self.rows.iter().map(|r| m.mul_vec(r)).collect();
        Subspace::span(self.field, m.rows(), &imgs)
    }

    /// Number of elements, saturating.
    pub fn cardinality(&self) -> u64 {
        self.field.size_of_space(self.dim())
    }

    /// Every element of the subspace, in odometer order of the coordinates.
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        CoefficientOdometer::new(self.field.p(), self.dim(), false).map(|c| self.combine(&c))
    }

    /// One nonzero element per line through the origin: those whose first
    /// nonzero coordinate equals one.
    pub fn projective_elements(&self) -> impl Iterator<Item = Vector> + '_ {
        CoefficientOdometer::new(self.field.p(), self.dim(), true).map(|c| self.combine(&c))
    }
}

/// Enumerates `F_p^d`, optionally restricted to normalized nonzero vectors.
struct CoefficientOdometer {
    p: u32,
    current: Option<Vector>,
    normalized: bool,
}

impl CoefficientOdometer {
    fn new(p: u32, d: usize, normalized: bool) -> Self {
        Self {
            p,
            current: Some(vec![0; d]),
            normalized,
        }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        for i in (0..cur.len()).rev() {
            cur[i] += 1;
            if cur[i] < self.p {
                return;
            }
            cur[i] = 0;
        }
        self.current = None;
    }

    fn acceptable(&self, v: &[u32]) -> bool {
        !self.normalized || v.iter().find(|&&x| x != 0) == Some(&1)
    }
}

impl Iterator for CoefficientOdometer {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        loop {
            let cur = self.current.clone()?;
            self.advance();
            if self.acceptable(&cur) {
                return Some(cur);
            }
        }
    }
}

/// Smallest subspace containing `seed` and stable under `v -> v * g` for
/// every `g` in `generators`.
pub fn close_under(seed: &Subspace, generators: &[Matrix]) -> Subspace {
    let mut builder = EchelonBuilder::from_subspace(seed);
    let mut queue: Vec<Vector> = seed.basis().to_vec();
    while let Some(v) = queue.pop() {
        for g in generators {
            let w = g.vec_mul(&v);
            if let Some(row) = builder.insert(&w) {
                queue.push(row.clone());
            }
        }
    }
    builder.finish()
}

/// Cyclic submodule `v R` generated by a single vector.
pub fn spin(field: PrimeField, v: &[u32], generators: &[Matrix]) -> Subspace {
    let seed = Subspace::span(field, v.len(), &[v.to_vec()]);
    close_under(&seed, generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(f(5), 3, &[vec![1, 2, 3], vec![0, 1, 4], vec![2, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = Matrix::from_rows(f(2), 2, &[vec![1, 1], vec![1, 1]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn intersection_and_sum_dimensions() {
        let a = Subspace::span(f(3), 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let b = Subspace::span(f(3), 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.intersect(&b).contains(&[0, 2, 0, 0]));
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(f(2), 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(f(2), 3, &[vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(a, b);
    }

    #[test]
    fn solve_and_nullspace() {
        let m = Matrix::from_rows(f(7), 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.nullspace().len(), 2);
        for v in m.nullspace() {
            assert!(is_zero(&m.mul_vec(&v)));
        }
        let x = m.solve(&[1, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 2]);
        assert!(m.solve(&[1, 1]).is_none());
    }

    #[test]
    fn enumeration_counts() {
        let s = Subspace::span(f(3), 3, &[vec![1, 0, 2], vec![0, 1, 1]]);
        assert_eq!(s.elements().count(), 9);
        assert_eq!(s.projective_elements().count(), 4);
        assert!(s.elements().all(|v| s.contains(&v)));
    }

    #[test]
    fn coordinates_recover_combination() {
        let s = Subspace::span(f(5), 4, &[vec![1, 2, 0, 3], vec![0, 0, 1, 4]]);
        let v = s.combine(&[3, 2]);
        assert_eq!(s.coordinates(&v), Some(vec![3, 2]));
        assert_eq!(s.coordinates(&[0, 1, 0, 0]), None);
    }
}
