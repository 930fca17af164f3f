//! Truncated skew power series `A[[y; alpha]] / (y^N)`.
//!
//! A series is stored by its left coefficients, `f = sum a_i y^i`, and
//! multiplication follows `y a = alpha(a) y`:
//!
//! ```text
//! (sum a_i y^i)(sum b_j y^j) = sum_k ( sum_{i+j=k} a_i alpha^i(b_j) ) y^k
//! ```
//!
//! Binary operations return the smaller of the two precisions.

use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::radical::jacobson_radical;

/// Precision used when a caller does not pick one.
pub const DEFAULT_PRECISION: usize = 8;

/// The pair `(A, alpha)` defining `A[[y; alpha]]` and `A[[y, 1/y; alpha]]`.
#[derive(Debug)]
pub struct SkewContext {
    algebra: Arc<Algebra>,
    alpha: Automorphism,
    semiprime: OnceLock<bool>,
}

impl SkewContext {
    pub fn new(algebra: Arc<Algebra>, alpha: Automorphism) -> Result<Arc<Self>> {
        let m = alpha.matrix();
        if m.rows() != algebra.dim() || m.field() != algebra.field() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Arc::new(Self {
            algebra,
            alpha,
            semiprime: OnceLock::new(),
        }))
    }

    /// The untwisted power series ring `A[[y]]`.
    pub fn untwisted(algebra: Arc<Algebra>) -> Arc<Self> {
        let alpha = Automorphism::identity(&algebra);
        Arc::new(Self {
            algebra,
            alpha,
            semiprime: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn alpha(&self) -> &Automorphism {
        &self.alpha
    }

    /// `alpha^k(a)` for any integer `k`.
    pub fn twist(&self, k: i64, a: &[u32]) -> Vector {
        self.alpha.apply_power(k, a)
    }

    /// Same algebra and same automorphism.
    pub fn same_as(&self, other: &SkewContext) -> bool {
        std::ptr::eq(self, other) || (self.algebra == other.algebra && self.alpha == other.alpha)
    }

    /// Whether `A` is semiprime (zero radical); computed once.
    pub fn coefficient_ring_is_semiprime(&self) -> Result<bool> {
        if let Some(&b) = self.semiprime.get() {
            return Ok(b);
        }
        let b = jacobson_radical(&self.algebra)?.is_zero();
        Ok(*self.semiprime.get_or_init(|| b))
    }
}

pub(crate) fn check_same(a: &SkewContext, b: &SkewContext) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// `sum_{i < N} a_i y^i  (mod y^N)`.
#[derive(Debug, Clone)]
pub struct SkewSeries {
    ctx: Arc<SkewContext>,
    coeffs: Vec<Vector>,
}

impl PartialEq for SkewSeries {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewSeries {}

impl SkewSeries {
    pub fn from_coeffs(ctx: &Arc<SkewContext>, coeffs: Vec<Vector>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadSpec("precision must be at least 1".into()));
        }
        let n = ctx.algebra.dim();
        let p = ctx.algebra.field().p();
        if coeffs.iter().any(|c| c.len() != n) {
            return Err(Error::AlgebraMismatch);
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.into_iter().map(|x| x % p).collect())
            .collect();
        Ok(Self {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    /// The series `sum y^i b_i` with the given right coefficients.
    pub fn from_right_coeffs(ctx: &Arc<SkewContext>, right: Vec<Vector>) -> Result<Self> {
        let left = right
            .iter()
            .enumerate()
            .map(|(i, b)| ctx.twist(i as i64, b))
            .collect();
        Self::from_coeffs(ctx, left)
    }

    pub fn zero(ctx: &Arc<SkewContext>, precision: usize) -> Self {
        assert!(precision >= 1, "precision must be at least 1");
        Self {
            ctx: ctx.clone(),
            coeffs: vec![ctx.algebra.zero(); precision],
        }
    }

    /// `a y^k`.
    pub fn monomial(ctx: &Arc<SkewContext>, a: &[u32], k: usize, precision: usize) -> Self {
        let mut s = Self::zero(ctx, precision);
        if k < precision {
            s.coeffs[k] = a.to_vec();
        }
        s
    }

    pub fn constant(ctx: &Arc<SkewContext>, a: &[u32], precision: usize) -> Self {
        Self::monomial(ctx, a, 0, precision)
    }

    pub fn one(ctx: &Arc<SkewContext>, precision: usize) -> Self {
        Self::constant(ctx, &ctx.algebra.one(), precision)
    }

    /// `y^k`.
    pub fn y_power(ctx: &Arc<SkewContext>, k: usize, precision: usize) -> Self {
        Self::monomial(ctx, &ctx.algebra.one(), k, precision)
    }

    /// Uniformly random coefficients.
    pub fn random<R: Rng + ?Sized>(ctx: &Arc<SkewContext>, precision: usize, rng: &mut R) -> Self {
        let p = ctx.algebra.field().p();
        let n = ctx.algebra.dim();
        let coeffs = (0..precision)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        Self {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn context(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &[u32] {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| linalg::is_zero(c))
    }

    /// Reduce to a smaller precision.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision >= 1 && precision <= self.precision());
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs[..precision].to_vec(),
        }
    }

    /// Agreement modulo `y^k` (`k` at most both precisions).
    pub fn congruent_mod(&self, other: &SkewSeries, k: usize) -> bool {
        self.ctx.same_as(&other.ctx)
            && k <= self.precision()
            && k <= other.precision()
            && self.coeffs[..k] == other.coeffs[..k]
    }

    pub fn add(&self, other: &SkewSeries) -> Result<SkewSeries> {
        check_same(&self.ctx, &other.ctx)?;
        let alg = &self.ctx.algebra;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| alg.add(a, b))
            .collect();
        Ok(Self {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &SkewSeries) -> Result<SkewSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewSeries {
        let alg = &self.ctx.algebra;
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| alg.neg(a)).collect(),
        }
    }

    pub fn mul(&self, other: &SkewSeries) -> Result<SkewSeries> {
        check_same(&self.ctx, &other.ctx)?;
        let alg = &self.ctx.algebra;
        let n = self.precision().min(other.precision());
        let mut out = vec![alg.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if linalg::is_zero(a) {
                continue;
            }
            let twist = self.ctx.alpha.power_matrix(i as i64);
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if linalg::is_zero(b) {
                    continue;
                }
                let term = alg.mul(a, &twist.mul_vec(b));
                out[i + j] = alg.add(&out[i + j], &term);
            }
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            coeffs: out,
        })
    }

    /// `c f` for a constant `c`.
    pub fn left_scale(&self, c: &[u32]) -> SkewSeries {
        let alg = &self.ctx.algebra;
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| alg.mul(c, a)).collect(),
        }
    }

    /// `f c` for a constant `c`: `a_i y^i c = a_i alpha^i(c) y^i`.
    pub fn right_scale(&self, c: &[u32]) -> SkewSeries {
        let alg = &self.ctx.algebra;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| alg.mul(a, &self.ctx.twist(i as i64, c)))
            .collect();
        Self {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// `y^k f`: coefficient `alpha^k(a_i)` at degree `i + k`.
    pub fn y_power_times(&self, k: usize) -> SkewSeries {
        let alg = &self.ctx.algebra;
        let n = self.precision();
        let mut out = vec![alg.zero(); n];
        for i in 0..n.saturating_sub(k) {
            out[i + k] = self.ctx.twist(k as i64, &self.coeffs[i]);
        }
        Self {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    /// `f y^k`: coefficient `a_i` at degree `i + k`.
    pub fn times_y_power(&self, k: usize) -> SkewSeries {
        let alg = &self.ctx.algebra;
        let n = self.precision();
        let mut out = vec![alg.zero(); n];
        for i in 0..n.saturating_sub(k) {
            out[i + k] = self.coeffs[i].clone();
        }
        Self {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    /// `b_i` with `f = sum y^i b_i`, namely `b_i = alpha^{-i}(a_i)`.
    pub fn to_right_coefficients(&self) -> Vec<Vector> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| self.ctx.twist(-(i as i64), a))
            .collect()
    }

    /// The image in `B / <y>`, which is `A`.
    pub fn reduce_mod_y(&self) -> Vector {
        self.coeffs[0].clone()
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !linalg::is_zero(c))
            .ok_or(Error::ZeroToPrecision(self.precision() as i64))
    }

    /// Applies `alpha` to every coefficient (the extension with
    /// `alpha(y) = y`).
    pub fn extend_alpha(&self) -> SkewSeries {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ctx.alpha.apply(a)).collect(),
        }
    }

    /// Two-sided inverse of a series whose constant term is a unit.
    ///
    /// With `h = a_0^{-1} f = 1 + h_1 y + ...`, the right inverse
    /// `u = 1 + u_1 y + ...` of `h` satisfies
    /// `u_k = -(h_1 alpha(u_{k-1}) + h_2 alpha^2(u_{k-2}) + ... + h_k)`;
    /// then `f^{-1} = u a_0^{-1}`. Both `f g = 1` and `g f = 1` are checked.
    pub fn invert_unit(&self) -> Result<SkewSeries> {
        let alg = &self.ctx.algebra;
        let a0_inv = alg.is_unit(&self.coeffs[0]).ok_or(Error::NonUnitConstantTerm)?;
        let h = self.left_scale(&a0_inv);
        let n = self.precision();
        let mut u: Vec<Vector> = Vec::with_capacity(n);
        u.push(alg.one());
        for k in 1..n {
            let mut acc = alg.zero();
            for i in 1..=k {
                let term = alg.mul(&h.coeffs[i], &self.ctx.twist(i as i64, &u[k - i]));
                acc = alg.add(&acc, &term);
            }
            u.push(alg.neg(&acc));
        }
        let u = Self {
            ctx: self.ctx.clone(),
            coeffs: u,
        };
        let g = u.right_scale(&a0_inv);
        let one = Self::one(&self.ctx, n);
        if self.mul(&g)? != one || g.mul(self)? != one {
            return Err(Error::Inconsistent("inverse check failed".into()));
        }
        Ok(g)
    }

    /// A series `g` with `f g f != 0 (mod y^N)`, for `A` semiprime.
    ///
    /// With `i = val(f)` and leading coefficient `a`, pick `c` with
    /// `a c a != 0` (the unit first, then basis elements) and
    /// `k = (-i) mod ord(alpha)`; then `g = alpha^{-i}(c) y^k` makes the
    /// coefficient of `y^{2i+k}` in `f g f` equal to `a c a`.
    pub fn semiprime_witness(&self) -> Result<SkewSeries> {
        if !self.ctx.coefficient_ring_is_semiprime()? {
            return Err(Error::NotSemiprime);
        }
        let alg = &self.ctx.algebra;
        let i = self.valuation()?;
        let order = self.ctx.alpha.order() as usize;
        let k = (order - i % order) % order;
        let need = 2 * i + k + 1;
        if self.precision() < need {
            return Err(Error::PrecisionTooSmall {
                need,
                have: self.precision(),
            });
        }
        let a = &self.coeffs[i];
        let c = std::iter::once(alg.one())
            .chain((0..alg.dim()).map(|b| alg.basis_element(b)))
            .find(|c| !linalg::is_zero(&alg.mul(&alg.mul(a, c), a)))
            .ok_or_else(|| Error::Inconsistent("a A a = 0 in a semiprime ring".into()))?;
        let g = Self::monomial(&self.ctx, &self.ctx.twist(-(i as i64), &c), k, self.precision());
        let fgf = self.mul(&g)?.mul(self)?;
        if fgf.is_zero() {
            return Err(Error::Inconsistent("witness product vanished".into()));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn swap_ctx() -> Arc<SkewContext> {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let a = Algebra::direct_product(&f2, &f2).unwrap();
        let swap = Matrix::from_columns(a.field(), 2, &[vec![0, 1], vec![1, 0]]);
        let alpha = Automorphism::new(&a, swap).unwrap();
        SkewContext::new(Arc::new(a), alpha).unwrap()
    }

    fn dual_ctx() -> Arc<SkewContext> {
        let f = crate::field::PrimeField::new(2).unwrap();
        let a = Algebra::new(
            f,
            vec!["1".into(), "t".into()],
            vec![1, 0],
            &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])],
        )
        .unwrap();
        SkewContext::untwisted(Arc::new(a))
    }

    #[test]
    fn y_times_a_is_alpha_a_times_y() {
        let ctx = swap_ctx();
        let y = SkewSeries::y_power(&ctx, 1, 4);
        let a = SkewSeries::constant(&ctx, &[1, 0], 4);
        let lhs = y.mul(&a).unwrap();
        let rhs = SkewSeries::constant(&ctx, &[0, 1], 4).mul(&y).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, SkewSeries::monomial(&ctx, &[0, 1], 1, 4));
    }

    #[test]
    fn twisted_square_vanishes() {
        let ctx = swap_ctx();
        let f = SkewSeries::monomial(&ctx, &[1, 0], 1, 4);
        assert!(f.mul(&f).unwrap().is_zero());
    }

    #[test]
    fn additive_inverse_and_unit() {
        let ctx = swap_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = SkewSeries::random(&ctx, 5, &mut rng);
        assert!(f.add(&f.neg()).unwrap().is_zero());
        assert_eq!(f.mul(&SkewSeries::one(&ctx, 5)).unwrap(), f);
        assert_eq!(SkewSeries::one(&ctx, 5).mul(&f).unwrap(), f);
    }

    #[test]
    fn shifts_agree_with_multiplication() {
        let ctx = swap_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = SkewSeries::random(&ctx, 6, &mut rng);
        for k in 0..4 {
            let yk = SkewSeries::y_power(&ctx, k, 6);
            assert_eq!(f.y_power_times(k), yk.mul(&f).unwrap());
            assert_eq!(f.times_y_power(k), f.mul(&yk).unwrap());
        }
        assert_eq!(
            SkewSeries::one(&ctx, 4).times_y_power(2),
            SkewSeries::y_power(&ctx, 2, 4)
        );
    }

    #[test]
    fn right_coefficients() {
        let ctx = swap_ctx();
        let f = SkewSeries::monomial(&ctx, &[1, 0], 1, 3);
        assert_eq!(f.to_right_coefficients()[1], vec![0, 1]);
        let c = SkewSeries::constant(&ctx, &[1, 0], 3);
        assert_eq!(c.to_right_coefficients(), c.coeffs().to_vec());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = SkewSeries::random(&ctx, 5, &mut rng);
        assert_eq!(SkewSeries::from_right_coeffs(&ctx, g.to_right_coefficients()).unwrap(), g);
    }

    #[test]
    fn reduction_mod_y() {
        let ctx = dual_ctx();
        let f = SkewSeries::from_coeffs(&ctx, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(f.reduce_mod_y(), vec![1, 0]);
        assert_eq!(SkewSeries::y_power(&ctx, 1, 3).reduce_mod_y(), vec![0, 0]);
    }

    #[test]
    fn valuations() {
        let ctx = dual_ctx();
        let f = SkewSeries::y_power(&ctx, 2, 5)
            .add(&SkewSeries::y_power(&ctx, 3, 5))
            .unwrap();
        assert_eq!(f.valuation().unwrap(), 2);
        assert_eq!(
            SkewSeries::zero(&ctx, 4).valuation(),
            Err(Error::ZeroToPrecision(4))
        );
    }

    #[test]
    fn inversion_examples() {
        let ctx = swap_ctx();
        let one = SkewSeries::one(&ctx, 6);
        assert_eq!(one.invert_unit().unwrap(), one);
        let f = SkewSeries::from_coeffs(&ctx, vec![vec![1, 1], vec![1, 0], vec![0, 0], vec![0, 0]])
            .unwrap();
        assert_eq!(f.invert_unit().unwrap(), f);

        let d = dual_ctx();
        let g = SkewSeries::from_coeffs(&d, vec![vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(g.invert_unit().unwrap(), g);
        let bad = SkewSeries::from_coeffs(&d, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(bad.invert_unit(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn extension_of_alpha() {
        let ctx = swap_ctx();
        let f = SkewSeries::from_coeffs(&ctx, vec![vec![1, 0], vec![1, 0]]).unwrap();
        let g = SkewSeries::from_coeffs(&ctx, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(f.extend_alpha(), g);
        let y = SkewSeries::y_power(&ctx, 1, 3);
        assert_eq!(y.extend_alpha(), y);
    }

    #[test]
    fn semiprime_witness_examples() {
        let f2 = Algebra::matrix_algebra(1, 2).unwrap();
        let ctx = SkewContext::untwisted(Arc::new(f2));
        let y = SkewSeries::y_power(&ctx, 1, 3);
        let g = y.semiprime_witness().unwrap();
        assert_eq!(g, SkewSeries::one(&ctx, 3));

        let sw = swap_ctx();
        let f = SkewSeries::monomial(&sw, &[1, 0], 1, 4);
        let g = f.semiprime_witness().unwrap();
        assert_eq!(g, SkewSeries::y_power(&sw, 1, 4));
        assert_eq!(
            f.mul(&g).unwrap().mul(&f).unwrap(),
            SkewSeries::monomial(&sw, &[1, 0], 3, 4)
        );
        let short = SkewSeries::monomial(&sw, &[1, 0], 1, 3);
        assert_eq!(
            short.semiprime_witness(),
            Err(Error::PrecisionTooSmall { need: 4, have: 3 })
        );
        let dual = SkewSeries::one(&dual_ctx(), 3);
        assert_eq!(dual.semiprime_witness(), Err(Error::NotSemiprime));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = SkewSeries::one(&swap_ctx(), 3);
        let b = SkewSeries::one(&dual_ctx(), 3);
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch));
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
    }
}
