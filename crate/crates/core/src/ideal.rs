//! Two-sided and right ideals, their lattice operations, and orbits under an
//! automorphism.

use std::collections::HashSet;

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{close_under, Matrix, Subspace, Vector};

/// A two-sided ideal, stored as a canonical subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(IdealKey);

/// A right ideal, stored as a canonical subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RightIdeal(IdealKey);

/// Ordering wrapper so ideal lists can be sorted deterministically
/// (by dimension, then basis).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct IdealKey(Subspace);

impl PartialOrd for IdealKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IdealKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.dim(), self.0.basis()).cmp(&(other.0.dim(), other.0.basis()))
    }
}

fn check_ambient(alg: &Algebra, s: &Subspace) -> Result<()> {
    if s.ambient() != alg.dim() || s.field() != alg.field() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

impl Ideal {
    pub fn zero(alg: &Algebra) -> Self {
        Ideal(IdealKey(Subspace::zero(alg.field(), alg.dim())))
    }

    pub fn whole(alg: &Algebra) -> Self {
        Ideal(IdealKey(Subspace::full(alg.field(), alg.dim())))
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn generated_by(alg: &Algebra, gens: &[Vector]) -> Self {
        let seed = Subspace::span(alg.field(), alg.dim(), gens);
        Ideal(IdealKey(close_under(&seed, &alg.two_sided_matrices())))
    }

    /// Wraps a subspace after checking it is closed under both
    /// multiplications.
    pub fn from_subspace(alg: &Algebra, s: Subspace) -> Result<Self> {
        check_ambient(alg, &s)?;
        if !is_stable(&s, &alg.two_sided_matrices()) {
            return Err(Error::BadSpec("subspace is not a two-sided ideal".into()));
        }
        Ok(Ideal(IdealKey(s)))
    }

    pub(crate) fn from_subspace_unchecked(s: Subspace) -> Self {
        Ideal(IdealKey(s))
    }

    pub fn subspace(&self) -> &Subspace {
        &self.0 .0
    }

    pub fn dim(&self) -> usize {
        self.subspace().dim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace().is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.subspace().is_full()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.subspace().contains(x)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.subspace().is_subspace_of(other.subspace())
    }

    /// `IJ`: the ideal spanned by all products of basis elements.
    pub fn product(&self, alg: &Algebra, other: &Ideal) -> Result<Ideal> {
        check_ambient(alg, self.subspace())?;
        check_ambient(alg, other.subspace())?;
        let mut prods = Vec::with_capacity(self.dim() * other.dim());
        for a in self.subspace().basis() {
            for b in other.subspace().basis() {
                prods.push(alg.mul(a, b));
            }
        }
        Ok(Ideal::generated_by(alg, &prods))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.subspace().ambient() != other.subspace().ambient() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Ideal(IdealKey(self.subspace().sum(other.subspace()))))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.subspace().ambient() != other.subspace().ambient() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Ideal(IdealKey(self.subspace().intersect(other.subspace()))))
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, alg: &Algebra, k: usize) -> Result<Ideal> {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(alg, self)?;
        }
        Ok(acc)
    }

    pub fn is_nilpotent(&self, alg: &Algebra) -> Result<bool> {
        let mut acc = self.clone();
        for _ in 0..=alg.dim() {
            if acc.is_zero() {
                return Ok(true);
            }
            acc = acc.product(alg, self)?;
        }
        Ok(acc.is_zero())
    }

    /// `alpha^k(I)`.
    pub fn image(&self, alpha: &Automorphism, k: i64) -> Ideal {
        Ideal(IdealKey(alpha.apply_to_subspace(k, self.subspace())))
    }

    pub fn format(&self, alg: &Algebra) -> String {
        let gens: Vec<String> = self
            .subspace()
            .basis()
            .iter()
            .map(|v| alg.format_element(v))
            .collect();
        format!("<{}>", gens.join(", "))
    }
}

impl RightIdeal {
    pub fn zero(alg: &Algebra) -> Self {
        RightIdeal(IdealKey(Subspace::zero(alg.field(), alg.dim())))
    }

    /// Smallest right ideal containing `gens`.
    pub fn generated_by(alg: &Algebra, gens: &[Vector]) -> Self {
        let seed = Subspace::span(alg.field(), alg.dim(), gens);
        RightIdeal(IdealKey(close_under(&seed, alg.right_mul_matrices())))
    }

    pub fn from_subspace(alg: &Algebra, s: Subspace) -> Result<Self> {
        check_ambient(alg, &s)?;
        if !is_stable(&s, alg.right_mul_matrices()) {
            return Err(Error::BadSpec("subspace is not a right ideal".into()));
        }
        Ok(RightIdeal(IdealKey(s)))
    }

    pub fn subspace(&self) -> &Subspace {
        &self.0 .0
    }

    pub fn dim(&self) -> usize {
        self.subspace().dim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace().is_zero()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.subspace().contains(x)
    }
}

impl From<Ideal> for RightIdeal {
    fn from(i: Ideal) -> Self {
        RightIdeal(i.0)
    }
}

/// `true` if `s * g` lies in `s` for every generator.
pub fn is_stable(s: &Subspace, generators: &[Matrix]) -> bool {
    s.basis()
        .iter()
        .all(|v| generators.iter().all(|g| s.contains(&g.vec_mul(v))))
}

/// `alpha(I) = I`.
pub fn is_alpha_ideal(ideal: &Ideal, alpha: &Automorphism) -> bool {
    ideal.image(alpha, 1) == *ideal
}

/// `I, alpha(I), alpha^2(I), ...` up to the first repetition.
pub fn alpha_orbit(ideal: &Ideal, alpha: &Automorphism) -> Vec<Ideal> {
    let mut orbit = vec![ideal.clone()];
    loop {
        let next = orbit.last().expect("nonempty").image(alpha, 1);
        if next == orbit[0] {
            return orbit;
        }
        orbit.push(next);
    }
}

/// Intersection of an orbit.
pub fn orbit_intersection(alg: &Algebra, orbit: &[Ideal]) -> Result<Ideal> {
    let mut acc = Ideal::whole(alg);
    for i in orbit {
        acc = acc.intersect(i)?;
    }
    Ok(acc)
}

/// Row-vector matrix of `alpha`, for subspace closure.
fn alpha_row_matrix(alpha: &Automorphism) -> Matrix {
    alpha.matrix().transpose()
}

/// Smallest alpha-ideal containing `gens`.
pub fn alpha_ideal_generated_by(
    alg: &Algebra,
    alpha: &Automorphism,
    gens: &[Vector],
) -> Ideal {
    let mut mats = alg.two_sided_matrices();
    mats.push(alpha_row_matrix(alpha));
    let seed = Subspace::span(alg.field(), alg.dim(), gens);
    Ideal(IdealKey(close_under(&seed, &mats)))
}

/// Every alpha-ideal of `alg`, sorted by dimension then basis.
///
/// Each alpha-ideal is the sum of the alpha-ideals generated by its
/// elements, so the lattice is the closure under sums of the principal
/// alpha-ideals. Requires `|A| <= limits.enum_cap`.
pub fn enumerate_alpha_ideals(
    alg: &Algebra,
    alpha: &Automorphism,
    limits: &Limits,
) -> Result<Vec<Ideal>> {
    let size = alg.cardinality();
    if size > limits.enum_cap {
        return Err(Error::too_large("algebra for ideal enumeration", size, limits.enum_cap));
    }
    let full = Subspace::full(alg.field(), alg.dim());
    let mut principal: HashSet<Ideal> = HashSet::new();
    for x in full.projective_elements() {
        principal.insert(alpha_ideal_generated_by(alg, alpha, &[x]));
    }
    let principal: Vec<Ideal> = principal.into_iter().collect();

    let mut lattice: HashSet<Ideal> = HashSet::new();
    lattice.insert(Ideal::zero(alg));
    let mut frontier = vec![Ideal::zero(alg)];
    while let Some(current) = frontier.pop() {
        for p in &principal {
            let s = current.sum(p)?;
            if lattice.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut out: Vec<Ideal> = lattice.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every two-sided ideal of `alg`.
pub fn enumerate_ideals(alg: &Algebra, limits: &Limits) -> Result<Vec<Ideal>> {
    enumerate_alpha_ideals(alg, &Automorphism::identity(alg), limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2xf2() -> (Algebra, Automorphism) {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let a = Algebra::direct_product(&f2, &f2).unwrap();
        let swap = Matrix::from_columns(a.field(), 2, &[vec![0, 1], vec![1, 0]]);
        let alpha = Automorphism::new(&a, swap).unwrap();
        (a, alpha)
    }

    fn dual() -> Algebra {
        let f = crate::field::PrimeField::new(2).unwrap();
        Algebra::new(
            f,
            vec!["1".into(), "t".into()],
            vec![1, 0],
            &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])],
        )
        .unwrap()
    }

    #[test]
    fn orthogonal_components_multiply_to_zero() {
        let (a, _) = f2xf2();
        let i = Ideal::generated_by(&a, &[vec![1, 0]]);
        let j = Ideal::generated_by(&a, &[vec![0, 1]]);
        assert!(i.product(&a, &j).unwrap().is_zero());
        assert!(i.sum(&j).unwrap().is_whole());
        assert!(i.intersect(&j).unwrap().is_zero());
    }

    #[test]
    fn square_of_t_is_zero() {
        let a = dual();
        let t = Ideal::generated_by(&a, &[vec![0, 1]]);
        assert_eq!(t.dim(), 1);
        assert!(t.product(&a, &t).unwrap().is_zero());
        assert!(t.is_nilpotent(&a).unwrap());
    }

    #[test]
    fn swap_orbit_has_length_two() {
        let (a, alpha) = f2xf2();
        let i = Ideal::generated_by(&a, &[vec![1, 0]]);
        let orbit = alpha_orbit(&i, &alpha);
        assert_eq!(orbit.len(), 2);
        assert_eq!(orbit[1], Ideal::generated_by(&a, &[vec![0, 1]]));
        assert!(is_alpha_ideal(&Ideal::zero(&a), &alpha));
        assert!(!is_alpha_ideal(&i, &alpha));
        let id = Automorphism::identity(&a);
        assert_eq!(alpha_orbit(&i, &id).len(), 1);
    }

    #[test]
    fn ideal_lattices() {
        let (a, alpha) = f2xf2();
        let limits = Limits::default();
        assert_eq!(enumerate_ideals(&a, &limits).unwrap().len(), 4);
        assert_eq!(enumerate_alpha_ideals(&a, &alpha, &limits).unwrap().len(), 2);
        let m2 = Algebra::matrix_algebra(2, 2).unwrap();
        assert_eq!(enumerate_ideals(&m2, &limits).unwrap().len(), 2);
        assert_eq!(enumerate_ideals(&dual(), &limits).unwrap().len(), 3);
    }

    #[test]
    fn right_ideal_of_matrix_unit_is_a_row() {
        let m2 = Algebra::matrix_algebra(2, 2).unwrap();
        let r = RightIdeal::generated_by(&m2, &[vec![1, 0, 0, 0]]);
        assert_eq!(r.dim(), 2);
        assert!(r.contains(&[0, 1, 0, 0]));
        assert!(!r.contains(&[0, 0, 1, 0]));
        assert!(Ideal::from_subspace(&m2, r.subspace().clone()).is_err());
    }
}
