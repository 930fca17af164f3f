//! Induced ideals `I[[y; alpha]] = IB` of an alpha-ideal `I` of `A`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ideal::{is_alpha_ideal, Ideal, RightIdeal};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::quotient::{quotient_algebra, Quotient};
use crate::series::{check_same, SkewContext, SkewSeries};

#[derive(Debug)]
pub struct InducedIdealView {
    ctx: Arc<SkewContext>,
    ideal: Ideal,
    generators: Vec<Vector>,
    quotient: OnceLock<(Quotient, Arc<SkewContext>)>,
}

impl InducedIdealView {
    /// `generators` default to a basis of `I`; any list given must generate
    /// `I` as a right ideal.
    pub fn new(ctx: &Arc<SkewContext>, ideal: Ideal, generators: Option<Vec<Vector>>) -> Result<Self> {
        let alg = ctx.algebra();
        if ideal.subspace().ambient() != alg.dim() {
            return Err(Error::AlgebraMismatch);
        }
        if !is_alpha_ideal(&ideal, ctx.alpha()) {
            return Err(Error::NotAlphaIdeal);
        }
        let generators = generators.unwrap_or_else(|| ideal.subspace().basis().to_vec());
        if generators.iter().any(|g| g.len() != alg.dim()) {
            return Err(Error::AlgebraMismatch);
        }
        if RightIdeal::generated_by(alg, &generators).subspace() != ideal.subspace() {
            return Err(Error::BadSpec(
                "generators do not generate the ideal as a right ideal".into(),
            ));
        }
        Ok(Self {
            ctx: ctx.clone(),
            ideal,
            generators,
            quotient: OnceLock::new(),
        })
    }

    pub fn context(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// All left coefficients lie in `I`; the right coefficients are checked
    /// as well and must agree.
    pub fn contains(&self, f: &SkewSeries) -> bool {
        let left = f.coeffs().iter().all(|a| self.ideal.contains(a));
        let right = f.to_right_coefficients().iter().all(|b| self.ideal.contains(b));
        assert_eq!(left, right, "left and right coefficient membership disagree");
        left
    }

    /// Series `s_j` with `f = sum_j g_j s_j`, solved degree by degree.
    pub fn rewrite_in_generators(&self, f: &SkewSeries) -> Result<Vec<SkewSeries>> {
        check_same(&self.ctx, f.context())?;
        if !self.contains(f) {
            return Err(Error::NotInIdeal);
        }
        let alg = self.ctx.algebra();
        let n = alg.dim();
        let m = self.generators.len();
        if m == 0 {
            return Ok(Vec::new());
        }
        // rows j*n + k: g_j e_k
        let mut rows = Vec::with_capacity(m * n);
        for g in &self.generators {
            for k in 0..n {
                rows.push(alg.mul(g, &alg.basis_element(k)));
            }
        }
        let system = Matrix::from_rows(alg.field(), n, &rows).transpose();
        let mut parts = vec![Vec::with_capacity(f.precision()); m];
        for h in f.coeffs() {
            let r = system.solve(h).ok_or(Error::NotInIdeal)?;
            for (j, part) in parts.iter_mut().enumerate() {
                part.push(r[j * n..(j + 1) * n].to_vec());
            }
        }
        let parts = parts
            .into_iter()
            .map(|c| SkewSeries::from_coeffs(&self.ctx, c))
            .collect::<Result<Vec<_>>>()?;
        let mut total = SkewSeries::zero(&self.ctx, f.precision());
        for (g, s) in self.generators.iter().zip(&parts) {
            total = total.add(&s.left_scale(g))?;
        }
        if total != *f {
            return Err(Error::Inconsistent("generator rewrite does not reproduce the series".into()));
        }
        Ok(parts)
    }

    fn quotient_parts(&self) -> Result<&(Quotient, Arc<SkewContext>)> {
        if let Some(q) = self.quotient.get() {
            return Ok(q);
        }
        let q = quotient_algebra(self.ctx.algebra(), &self.ideal)?;
        let alpha = q.induced_automorphism(self.ctx.alpha())?;
        let ctx = SkewContext::new(Arc::new(q.algebra.clone()), alpha)?;
        Ok(self.quotient.get_or_init(|| (q, ctx)))
    }

    /// The context `(A/I, induced alpha)`.
    pub fn quotient_context(&self) -> Result<Arc<SkewContext>> {
        Ok(self.quotient_parts()?.1.clone())
    }

    /// The image of `f` in `(A/I)[[y; alpha]]`.
    pub fn reduce(&self, f: &SkewSeries) -> Result<SkewSeries> {
        check_same(&self.ctx, f.context())?;
        let (q, qctx) = self.quotient_parts()?;
        SkewSeries::from_coeffs(qctx, f.coeffs().iter().map(|a| q.project(a)).collect())
    }

    /// The coefficient ideal as a subspace of `A`.
    pub fn coefficient_space(&self) -> &Subspace {
        self.ideal.subspace()
    }
}
