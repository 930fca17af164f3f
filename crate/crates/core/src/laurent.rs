//! Skew Laurent series `A[[y, 1/y; alpha]]` with valuation and relative
//! precision.
//!
//! A nonzero value is `y^v`-scaled: coefficients `a_v, ..., a_{v+r-1}` with
//! `a_v != 0`, known modulo `y^{v+r}`. Zero carries only the exponent `P` of
//! the `O(y^P)` it is known to.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::series::{check_same, SkewContext, SkewSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Zero { precision: i64 },
    Nonzero { valuation: i64, coeffs: Vec<Vector> },
}

#[derive(Debug, Clone)]
pub struct SkewLaurent {
    ctx: Arc<SkewContext>,
    repr: Repr,
}

impl PartialEq for SkewLaurent {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.repr == other.repr
    }
}

impl Eq for SkewLaurent {}

impl SkewLaurent {
    /// `O(y^precision)`.
    pub fn zero(ctx: &Arc<SkewContext>, precision: i64) -> Self {
        Self {
            ctx: ctx.clone(),
            repr: Repr::Zero { precision },
        }
    }

    /// `sum_k coeffs[k] y^{valuation + k}`, normalized so the leading
    /// coefficient is nonzero.
    pub fn from_parts(ctx: &Arc<SkewContext>, valuation: i64, coeffs: Vec<Vector>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadSpec("relative precision must be at least 1".into()));
        }
        let n = ctx.algebra().dim();
        let p = ctx.algebra().field().p();
        if coeffs.iter().any(|c| c.len() != n) {
            return Err(Error::AlgebraMismatch);
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.into_iter().map(|x| x % p).collect())
            .collect();
        Ok(Self::normalized(ctx, valuation, coeffs))
    }

    fn normalized(ctx: &Arc<SkewContext>, valuation: i64, mut coeffs: Vec<Vector>) -> Self {
        let end = valuation + coeffs.len() as i64;
        match coeffs.iter().position(|c| !linalg::is_zero(c)) {
            None => Self::zero(ctx, end),
            Some(lead) => {
                coeffs.drain(..lead);
                Self {
                    ctx: ctx.clone(),
                    repr: Repr::Nonzero {
                        valuation: valuation + lead as i64,
                        coeffs,
                    },
                }
            }
        }
    }

    /// `a y^k` known to relative precision `relprec`.
    pub fn monomial(ctx: &Arc<SkewContext>, a: &[u32], k: i64, relprec: usize) -> Self {
        assert!(relprec >= 1);
        let mut coeffs = vec![ctx.algebra().zero(); relprec];
        coeffs[0] = a.to_vec();
        Self::normalized(ctx, k, coeffs)
    }

    /// `y^k`.
    pub fn y_power(ctx: &Arc<SkewContext>, k: i64, relprec: usize) -> Self {
        Self::monomial(ctx, &ctx.algebra().one(), k, relprec)
    }

    pub fn from_series(f: &SkewSeries) -> Self {
        Self::normalized(f.context(), 0, f.coeffs().to_vec())
    }

    /// Random series with the given valuation and a nonzero leading
    /// coefficient.
    pub fn random<R: Rng + ?Sized>(
        ctx: &Arc<SkewContext>,
        valuation: i64,
        relprec: usize,
        rng: &mut R,
    ) -> Self {
        let mut coeffs = SkewSeries::random(ctx, relprec, rng).coeffs().to_vec();
        let p = ctx.algebra().field().p();
        while linalg::is_zero(&coeffs[0]) {
            coeffs[0] = (0..ctx.algebra().dim()).map(|_| rng.gen_range(0..p)).collect();
        }
        Self::normalized(ctx, valuation, coeffs)
    }

    pub fn context(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn valuation(&self) -> Result<i64> {
        match &self.repr {
            Repr::Zero { precision } => Err(Error::ZeroToPrecision(*precision)),
            Repr::Nonzero { valuation, .. } => Ok(*valuation),
        }
    }

    /// Number of known coefficients from the valuation on; 0 for zero.
    pub fn relprec(&self) -> usize {
        match &self.repr {
            Repr::Zero { .. } => 0,
            Repr::Nonzero { coeffs, .. } => coeffs.len(),
        }
    }

    /// The exponent `P` with the value known modulo `y^P`.
    pub fn absolute_precision(&self) -> i64 {
        match &self.repr {
            Repr::Zero { precision } => *precision,
            Repr::Nonzero { valuation, coeffs } => valuation + coeffs.len() as i64,
        }
    }

    /// Stored coefficients starting at the valuation.
    pub fn coeffs(&self) -> &[Vector] {
        match &self.repr {
            Repr::Zero { .. } => &[],
            Repr::Nonzero { coeffs, .. } => coeffs,
        }
    }

    /// Coefficient of `y^k`, or `None` beyond the known precision.
    pub fn coeff(&self, k: i64) -> Option<Vector> {
        if k >= self.absolute_precision() {
            return None;
        }
        match &self.repr {
            Repr::Nonzero { valuation, coeffs } if k >= *valuation => {
                Some(coeffs[(k - valuation) as usize].clone())
            }
            _ => Some(self.ctx.algebra().zero()),
        }
    }

    pub fn leading_coefficient(&self) -> Result<&[u32]> {
        match &self.repr {
            Repr::Zero { precision } => Err(Error::ZeroToPrecision(*precision)),
            Repr::Nonzero { coeffs, .. } => Ok(&coeffs[0]),
        }
    }

    pub fn neg(&self) -> Self {
        let alg = self.ctx.algebra();
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Nonzero { valuation, coeffs } => Self {
                ctx: self.ctx.clone(),
                repr: Repr::Nonzero {
                    valuation: *valuation,
                    coeffs: coeffs.iter().map(|a| alg.neg(a)).collect(),
                },
            },
        }
    }

    pub fn add(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        check_same(&self.ctx, &other.ctx)?;
        let end = self.absolute_precision().min(other.absolute_precision());
        let start = [&self.repr, &other.repr]
            .iter()
            .filter_map(|r| match r {
                Repr::Nonzero { valuation, .. } => Some(*valuation),
                Repr::Zero { .. } => None,
            })
            .min();
        let start = match start {
            Some(s) if s < end => s,
            _ => return Ok(Self::zero(&self.ctx, end)),
        };
        let alg = self.ctx.algebra();
        let coeffs = (start..end)
            .map(|k| alg.add(&self.coeff(k).unwrap(), &other.coeff(k).unwrap()))
            .collect();
        Ok(Self::normalized(&self.ctx, start, coeffs))
    }

    pub fn sub(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        self.add(&other.neg())
    }

    /// `(a y^i)(b y^j) = a alpha^i(b) y^{i+j}`, relative precision the
    /// minimum of the two.
    pub fn mul(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        check_same(&self.ctx, &other.ctx)?;
        let (v1, a, v2, b) = match (&self.repr, &other.repr) {
            (Repr::Zero { precision: p1 }, Repr::Zero { precision: p2 }) => {
                return Ok(Self::zero(&self.ctx, p1 + p2))
            }
            (Repr::Zero { precision }, Repr::Nonzero { valuation, .. })
            | (Repr::Nonzero { valuation, .. }, Repr::Zero { precision }) => {
                return Ok(Self::zero(&self.ctx, precision + valuation))
            }
            (
                Repr::Nonzero { valuation: v1, coeffs: a },
                Repr::Nonzero { valuation: v2, coeffs: b },
            ) => (*v1, a, *v2, b),
        };
        let alg = self.ctx.algebra();
        let r = a.len().min(b.len());
        let mut out = vec![alg.zero(); r];
        for (i, ai) in a.iter().take(r).enumerate() {
            if linalg::is_zero(ai) {
                continue;
            }
            let twist = self.ctx.alpha().power_matrix(v1 + i as i64);
            for (j, bj) in b.iter().take(r - i).enumerate() {
                if linalg::is_zero(bj) {
                    continue;
                }
                let term = alg.mul(ai, &twist.mul_vec(bj));
                out[i + j] = alg.add(&out[i + j], &term);
            }
        }
        Ok(Self::normalized(&self.ctx, v1 + v2, out))
    }

    /// Applies `alpha` to every coefficient, fixing `y`.
    pub fn extend_alpha(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Nonzero { valuation, coeffs } => Self {
                ctx: self.ctx.clone(),
                repr: Repr::Nonzero {
                    valuation: *valuation,
                    coeffs: coeffs.iter().map(|a| self.ctx.alpha().apply(a)).collect(),
                },
            },
        }
    }

    /// `y f y^{-1}`, computed by multiplication.
    pub fn conjugate_by_y(&self) -> Result<Self> {
        let r = self.relprec().max(1);
        let y = Self::y_power(&self.ctx, 1, r);
        let y_inv = Self::y_power(&self.ctx, -1, r);
        y.mul(self)?.mul(&y_inv)
    }

    /// Inverse of a nonzero series with a unit leading coefficient.
    ///
    /// Writes `f = y^v h` with `h` a power series whose constant term is
    /// `alpha^{-v}(a_v)`, so `f^{-1} = h^{-1} y^{-v}`.
    pub fn inverse(&self) -> Result<Self> {
        let (v, coeffs) = match &self.repr {
            Repr::Zero { precision } => return Err(Error::ZeroToPrecision(*precision)),
            Repr::Nonzero { valuation, coeffs } => (*valuation, coeffs),
        };
        let h_coeffs = coeffs.iter().map(|a| self.ctx.twist(-v, a)).collect();
        let h = SkewSeries::from_coeffs(&self.ctx, h_coeffs)?;
        let u = h.invert_unit()?;
        let g = Self::normalized(&self.ctx, -v, u.coeffs().to_vec());
        let one = Self::y_power(&self.ctx, 0, coeffs.len());
        if self.mul(&g)? != one || g.mul(self)? != one {
            return Err(Error::Inconsistent("Laurent inverse check failed".into()));
        }
        Ok(g)
    }

    /// A series `g` with `f g f != 0` for `A` semiprime: `g = alpha^{-i}(c) y^{-i}`
    /// where `i = val(f)` and `a c a != 0` for the leading coefficient `a`.
    pub fn semiprime_witness(&self) -> Result<Self> {
        if !self.ctx.coefficient_ring_is_semiprime()? {
            return Err(Error::NotSemiprime);
        }
        let alg = self.ctx.algebra();
        let i = self.valuation()?;
        let a = self.leading_coefficient()?;
        let c = std::iter::once(alg.one())
            .chain((0..alg.dim()).map(|b| alg.basis_element(b)))
            .find(|c| !linalg::is_zero(&alg.mul(&alg.mul(a, c), a)))
            .ok_or_else(|| Error::Inconsistent("a A a = 0 in a semiprime ring".into()))?;
        let g = Self::monomial(&self.ctx, &self.ctx.twist(-i, &c), -i, self.relprec());
        if self.mul(&g)?.mul(self)?.is_zero() {
            return Err(Error::Inconsistent("witness product vanished".into()));
        }
        Ok(g)
    }
}
