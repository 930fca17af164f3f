//! Truncation rings `B_N = A[y; alpha] / (y^N)` and the scenario checks run
//! on them: rank equality, uniserial chains, induced ideals and the
//! alpha-prime and semiprime transfers.

use std::sync::Arc;
use std::time::Instant;

use serde_json::json;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::goldie::{goldie_rank, simple_right_ideal_decomposition};
use crate::ideal::{alpha_orbit, enumerate_alpha_ideals, is_alpha_ideal, Ideal, RightIdeal};
use crate::limits::Limits;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::module::{uniform_dimension, uniform_dimension_oracle, FiniteModule};
use crate::primes::{alpha_prime_violation, enumerate_prime_ideals, is_alpha_prime};
use crate::quotient::{quotient_algebra, Quotient};
use crate::radical::{jacobson_radical, square_zero_element};
use crate::report::{Report, Status};
use crate::series::{check_same, SkewContext, SkewSeries};

/// `B_N` as an algebra with basis `e_s y^i`, index `i * dim A + s`.
#[derive(Debug, Clone)]
pub struct TruncationRing {
    ctx: Arc<SkewContext>,
    precision: usize,
    algebra: Arc<Algebra>,
}

/// Builds `B_N` from `(e_s y^i)(e_t y^j) = e_s alpha^i(e_t) y^{i+j}`, zero
/// once `i + j >= N`. Requires `N * dim A <= limits.dim_cap`.
pub fn build_truncation(
    ctx: &Arc<SkewContext>,
    precision: usize,
    limits: &Limits,
) -> Result<TruncationRing> {
    if precision == 0 {
        return Err(Error::BadSpec("precision must be at least 1".into()));
    }
    let a = ctx.algebra();
    let d = a.dim();
    let dim = d * precision;
    if dim > limits.dim_cap {
        return Err(Error::too_large(
            "truncation ring dimension",
            dim as u64,
            limits.dim_cap as u64,
        ));
    }
    let mut table = vec![0u32; dim * dim * dim];
    for i in 0..precision {
        let images: Vec<Vector> = (0..d)
            .map(|t| ctx.twist(i as i64, &a.basis_element(t)))
            .collect();
        for s in 0..d {
            let es = a.basis_element(s);
            for (t, img) in images.iter().enumerate() {
                let prod = a.mul(&es, img);
                for j in 0..precision - i {
                    let base = ((i * d + s) * dim + j * d + t) * dim + (i + j) * d;
                    table[base..base + d].copy_from_slice(&prod);
                }
            }
        }
    }
    let names = (0..precision)
        .flat_map(|i| {
            a.basis_names().iter().map(move |n| match i {
                0 => n.clone(),
                1 => format!("{n}*y"),
                _ => format!("{n}*y^{i}"),
            })
        })
        .collect();
    let mut unit = vec![0; dim];
    unit[..d].copy_from_slice(&a.one());
    Ok(TruncationRing {
        ctx: ctx.clone(),
        precision,
        algebra: Arc::new(Algebra::from_table(a.field(), names, unit, table)),
    })
}

impl TruncationRing {
    pub fn context(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    fn coefficient_dim(&self) -> usize {
        self.ctx.algebra().dim()
    }

    /// `a y^i`.
    pub fn monomial(&self, a: &[u32], i: usize) -> Vector {
        let d = self.coefficient_dim();
        let mut v = vec![0; self.algebra.dim()];
        if i < self.precision {
            v[i * d..(i + 1) * d].copy_from_slice(a);
        }
        v
    }

    /// The inclusion `A -> B_N`.
    pub fn embed(&self, a: &[u32]) -> Vector {
        self.monomial(a, 0)
    }

    pub fn y_elem(&self) -> Vector {
        self.monomial(&self.ctx.algebra().one(), 1)
    }

    /// The element of `B_N` represented by `f mod y^N`.
    pub fn from_series(&self, f: &SkewSeries) -> Result<Vector> {
        check_same(&self.ctx, f.context())?;
        if f.precision() < self.precision {
            return Err(Error::PrecisionTooSmall {
                need: self.precision,
                have: f.precision(),
            });
        }
        Ok(f.coeffs()[..self.precision].concat())
    }

    pub fn to_series(&self, x: &[u32]) -> SkewSeries {
        let d = self.coefficient_dim();
        let coeffs = x.chunks(d).map(<[u32]>::to_vec).collect();
        SkewSeries::from_coeffs(&self.ctx, coeffs).expect("coefficients have the right length")
    }

    /// `span { x y^i : x in s, i < N }`.
    pub fn coefficient_span(&self, s: &Subspace) -> Subspace {
        let gens: Vec<Vector> = (0..self.precision)
            .flat_map(|i| s.basis().iter().map(move |x| self.monomial(x, i)))
            .collect();
        Subspace::span(self.algebra.field(), self.algebra.dim(), &gens)
    }

    /// `s y^k` for a subspace `s` of `B_N`.
    pub fn times_y_power(&self, s: &Subspace, k: usize) -> Subspace {
        let yk = self.algebra.pow(&self.y_elem(), k as u64);
        s.image(&self.algebra.right_matrix(&yk))
    }

    /// Checks the axioms of `B_N`, agreement with series multiplication on
    /// basis pairs, `y^N = 0`, that `A -> B_N` is a homomorphism, that `y`
    /// is normal, and that `B_1` is `A`.
    pub fn check_invariants(&self) -> Result<()> {
        let b = &self.algebra;
        b.check_axioms()?;
        let n = b.dim();
        for i in 0..n {
            let fi = self.to_series(&b.basis_element(i));
            for j in 0..n {
                let fj = self.to_series(&b.basis_element(j));
                if self.from_series(&fi.mul(&fj)?)? != b.basis_product(i, j) {
                    return Err(Error::Inconsistent(format!(
                        "truncation product of basis {i}, {j} disagrees with series product"
                    )));
                }
            }
        }
        let y = self.y_elem();
        if !linalg::is_zero(&b.pow(&y, self.precision as u64))
            || (self.precision > 1 && linalg::is_zero(&b.pow(&y, self.precision as u64 - 1)))
        {
            return Err(Error::Inconsistent("y does not have nilpotency index N".into()));
        }
        let a = self.ctx.algebra();
        for s in 0..a.dim() {
            for t in 0..a.dim() {
                let lhs = self.embed(a.basis_product(s, t));
                let rhs = b.mul(&self.embed(&a.basis_element(s)), &self.embed(&a.basis_element(t)));
                if lhs != rhs {
                    return Err(Error::Inconsistent("A -> B_N is not multiplicative".into()));
                }
            }
        }
        let full = Subspace::full(b.field(), n);
        let yb = full.image(&b.left_matrix(&y));
        let by = full.image(&b.right_matrix(&y));
        if yb != by {
            return Err(Error::Inconsistent("y B_N differs from B_N y".into()));
        }
        if self.precision == 1 && **b != **a {
            return Err(Error::Inconsistent("B_1 differs from A".into()));
        }
        Ok(())
    }
}

/// `V B_N` as a subspace of `B_N`.
pub fn induced_span(v: &RightIdeal, t: &TruncationRing) -> Subspace {
    t.coefficient_span(v.subspace())
}

/// `V B_N` as a right `B_N`-module.
pub fn induced_module(v: &RightIdeal, t: &TruncationRing) -> Result<FiniteModule> {
    let span = induced_span(v, t);
    let regular = FiniteModule::regular(t.algebra.clone());
    if regular.generated_by(&span.basis().iter().map(|x| x.to_vec()).collect::<Vec<_>>()) != span {
        return Err(Error::Inconsistent("V B_N is not closed under B_N".into()));
    }
    regular.submodule(&span)
}

fn is_simple(alg: &Algebra, v: &RightIdeal, limits: &Limits) -> Result<bool> {
    if v.is_zero() {
        return Ok(false);
    }
    let s = v.subspace();
    if s.cardinality() > limits.scan_cap {
        return Err(Error::too_large("right ideal for simplicity scan", s.cardinality(), limits.scan_cap));
    }
    let regular = FiniteModule::regular(Arc::new(alg.clone()));
    Ok(s.projective_elements().all(|x| regular.cyclic(&x) == *s))
}

/// Oracle comparison recorded into `report`; returns whether it ran.
fn oracle_check(
    report: &mut Report,
    name: &str,
    module: &FiniteModule,
    expected: usize,
    limits: &Limits,
) -> Result<bool> {
    if !limits.oracle_applies(module.cardinality()) {
        report.skip(format!("{name}: oracle disabled or module above enumeration cap"));
        return Ok(false);
    }
    let oracle = uniform_dimension_oracle(module, limits)?;
    report.check(
        name,
        oracle == expected,
        json!({"socle_method": expected, "oracle": oracle}),
    );
    Ok(true)
}

/// `V B_N` has exactly the `N + 1` submodules `V B_N y^i`, forming a chain.
pub fn verify_uniserial_chain(v: &RightIdeal, t: &TruncationRing, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let a = t.ctx.algebra();
    let mut report = Report::new(format!(
        "uniserial chain of V B_{} for V = {}",
        t.precision,
        a.format_element(&v.subspace().basis().first().cloned().unwrap_or_else(|| a.zero()))
    ));
    if !is_simple(a, v, limits)? {
        return Err(Error::BadSpec("V is not a simple right ideal".into()));
    }
    let span = induced_span(v, t);
    let module = induced_module(v, t)?;
    let subs = module.enumerate_submodules(limits)?;
    let expected: Vec<Subspace> = (0..=t.precision)
        .map(|i| {
            let s = t.times_y_power(&span, i);
            let coords: Vec<Vector> = s
                .basis()
                .iter()
                .map(|x| span.coordinates(x).expect("V B_N y^i lies in V B_N"))
                .collect();
            Subspace::span(a.field(), span.dim(), &coords)
        })
        .collect();
    report.check(
        "submodule_count",
        subs.len() == t.precision + 1,
        json!({"found": subs.len(), "expected": t.precision + 1}),
    );
    let mut expected_sorted = expected.clone();
    expected_sorted.sort_by(|x, y| (x.dim(), x.basis()).cmp(&(y.dim(), y.basis())));
    let is_chain = subs.windows(2).all(|w| w[0].is_subspace_of(&w[1]));
    let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
    report.check(
        "submodules_are_y_power_chain",
        is_chain && subs == expected_sorted,
        json!({"dimensions": dims}),
    );
    let udim = uniform_dimension(&module, limits)?;
    report.check("uniform", udim == 1, json!({"uniform_dimension": udim}));
    oracle_check(&mut report, "oracle_concordance", &module, udim, limits)?;
    Ok(report.finish(started))
}

/// `udim(B_N) = rank A`, each `V_i B_N` uniform, and `B_N = sum V_i B_N`
/// direct, for semiprime `A`.
pub fn verify_rank_theorem(ctx: &Arc<SkewContext>, precision: usize, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let mut report = Report::new(format!("rank equality at N = {precision}"));
    let a = ctx.algebra();
    let d = goldie_rank(a, limits)?;
    let t = build_truncation(ctx, precision, limits)?;
    let regular = FiniteModule::regular(t.algebra.clone());
    let u = uniform_dimension(&regular, limits)?;
    report.check(
        "rank_equality",
        u == d,
        json!({"goldie_rank_A": d, "uniform_dimension_B_N": u, "N": precision}),
    );

    let parts = simple_right_ideal_decomposition(a, limits)?;
    let mut udims = Vec::new();
    let mut total = Subspace::zero(a.field(), t.algebra.dim());
    let mut dim_sum = 0;
    let mut modules = Vec::new();
    for v in &parts {
        let span = induced_span(v, &t);
        let m = induced_module(v, &t)?;
        udims.push(uniform_dimension(&m, limits)?);
        dim_sum += span.dim();
        total = total.sum(&span);
        modules.push(m);
    }
    report.check(
        "induced_summands_uniform",
        udims.iter().all(|&x| x == 1),
        json!({"uniform_dimensions": udims}),
    );
    report.check(
        "induced_decomposition_direct",
        dim_sum == t.algebra.dim() && total.is_full(),
        json!({"summand_dimension_sum": dim_sum, "dim_B_N": t.algebra.dim()}),
    );

    let mut checked = 0;
    let mut agree = true;
    let mut mismatches = Vec::new();
    for (name, m, expected) in std::iter::once(("regular", &regular, u))
        .chain(modules.iter().map(|m| ("summand", m, 1)))
    {
        if !limits.oracle_applies(m.cardinality()) {
            continue;
        }
        let o = uniform_dimension_oracle(m, limits)?;
        checked += 1;
        if o != expected {
            agree = false;
            mismatches.push(json!({"module": name, "socle_method": expected, "oracle": o}));
        }
    }
    if checked > 0 {
        report.check(
            "oracle_concordance",
            agree,
            json!({"modules_checked": checked, "mismatches": mismatches}),
        );
    } else {
        report.skip("oracle_concordance: oracle disabled or modules above enumeration cap");
    }
    report.certify(
        "laurent_rank",
        "the Laurent ring is the localization of the power series ring at the regular normal \
         element y, so its rank equals rank A; certified, not independently measured",
    );
    Ok(report.finish(started))
}

/// Independent right ideals `K_i` of `A` induce independent `K_i B_N`.
pub fn verify_uniform_lower_bound(
    ctx: &Arc<SkewContext>,
    precision: usize,
    ideals: &[RightIdeal],
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let a = ctx.algebra();
    let mut report = Report::new(format!(
        "uniform dimension lower bound for {} right ideals at N = {precision}",
        ideals.len()
    ));
    let mut base = Subspace::zero(a.field(), a.dim());
    for k in ideals {
        let next = base.sum(k.subspace());
        if next.dim() != base.dim() + k.dim() {
            return Err(Error::BadSpec("right ideals do not form a direct sum".into()));
        }
        base = next;
    }
    let t = build_truncation(ctx, precision, limits)?;
    let spans: Vec<Subspace> = ideals.iter().map(|k| induced_span(k, &t)).collect();
    let mut total = Subspace::zero(a.field(), t.algebra.dim());
    let mut dim_sum = 0;
    for s in &spans {
        total = total.sum(s);
        dim_sum += s.dim();
    }
    report.check(
        "induced_independent",
        total.dim() == dim_sum,
        json!({"dimension_of_sum": total.dim(), "sum_of_dimensions": dim_sum}),
    );
    let nonzero = ideals.iter().filter(|k| !k.is_zero()).count();
    report.check(
        "induced_nonzero",
        ideals.iter().zip(&spans).all(|(k, s)| k.is_zero() || !s.is_zero()),
        json!({"nonzero_ideals": nonzero}),
    );
    let regular = FiniteModule::regular(t.algebra.clone());
    let u = uniform_dimension(&regular, limits)?;
    report.check(
        "uniform_dimension_lower_bound",
        u >= nonzero,
        json!({"uniform_dimension_B_N": u, "independent_ideals": nonzero}),
    );
    Ok(report.finish(started))
}

/// `I B_N` for an alpha-ideal `I`, with the quotient comparison.
#[derive(Debug, Clone)]
pub struct InducedTruncation {
    /// `I B_N` as an ideal of `B_N`.
    pub ideal: Ideal,
    /// `B_N / I B_N`, absent when `I = A`.
    pub quotient: Option<Quotient>,
    /// The truncation ring of `(A/I, induced alpha)`, absent when `I = A`.
    pub quotient_truncation: Option<TruncationRing>,
    pub report: Report,
}

fn products_span(alg: &Algebra, left: &[Vector], right: &[Vector]) -> Subspace {
    let prods: Vec<Vector> = left
        .iter()
        .flat_map(|x| right.iter().map(move |y| alg.mul(x, y)))
        .collect();
    Subspace::span(alg.field(), alg.dim(), &prods)
}

fn basis_of(alg: &Algebra) -> Vec<Vector> {
    (0..alg.dim()).map(|k| alg.basis_element(k)).collect()
}

/// Checks that the coefficientwise, `I B_N` and `B_N I` descriptions agree
/// and that `B_N / I B_N` is isomorphic to the truncation of
/// `(A/I)[[y; alpha]]` through the coefficientwise projection.
pub fn induced_ideal_truncated(
    ideal: &Ideal,
    t: &TruncationRing,
    limits: &Limits,
) -> Result<InducedTruncation> {
    let started = Instant::now();
    let ctx = &t.ctx;
    let a = ctx.algebra();
    if !is_alpha_ideal(ideal, ctx.alpha()) {
        return Err(Error::NotAlphaIdeal);
    }
    let b = &t.algebra;
    let mut report = Report::new(format!(
        "induced ideal {} at N = {}",
        ideal.format(a),
        t.precision
    ));
    let coefficientwise = t.coefficient_span(ideal.subspace());
    let embedded: Vec<Vector> = ideal.subspace().basis().iter().map(|x| t.embed(x)).collect();
    let bb = basis_of(b);
    let right_induced = products_span(b, &embedded, &bb);
    let left_induced = products_span(b, &bb, &embedded);
    report.check(
        "descriptions_agree",
        coefficientwise == right_induced && right_induced == left_induced,
        json!({
            "coefficientwise_dim": coefficientwise.dim(),
            "I_B_N_dim": right_induced.dim(),
            "B_N_I_dim": left_induced.dim(),
        }),
    );
    let induced = Ideal::from_subspace(b, coefficientwise.clone());
    report.check("two_sided", induced.is_ok(), json!({"dim": coefficientwise.dim()}));
    let induced = induced?;

    if ideal.is_whole() {
        report.check(
            "quotient_isomorphism",
            induced.is_whole(),
            json!("I = A: both quotients are zero"),
        );
        return Ok(InducedTruncation {
            ideal: induced,
            quotient: None,
            quotient_truncation: None,
            report: report.finish(started),
        });
    }

    let q_b = quotient_algebra(b, &induced)?;
    let q_a = quotient_algebra(a, ideal)?;
    let alpha_q = q_a.induced_automorphism(ctx.alpha())?;
    let qctx = SkewContext::new(Arc::new(q_a.algebra.clone()), alpha_q)?;
    let tq = build_truncation(&qctx, t.precision, limits)?;
    let d = a.dim();
    let dq = q_a.algebra.dim();
    // coefficientwise projection B_N -> (A/I)_N
    let phi_rows: Vec<Vector> = (0..b.dim())
        .map(|k| {
            let (i, s) = (k / d, k % d);
            tq.monomial(&q_a.project(&a.basis_element(s)), i)
        })
        .collect();
    let phi = Matrix::from_rows(a.field(), tq.algebra.dim(), &phi_rows);
    let multiplicative = (0..b.dim()).all(|i| {
        (0..b.dim()).all(|j| {
            phi.vec_mul(b.basis_product(i, j)) == tq.algebra.mul(phi.row(i), phi.row(j))
        })
    });
    let surjective = phi.rank() == tq.algebra.dim();
    let kernel = Subspace::span(a.field(), b.dim(), &phi.left_nullspace());
    let psi_rows: Vec<Vector> = (0..q_b.algebra.dim())
        .map(|k| phi.vec_mul(&q_b.lift(&q_b.algebra.basis_element(k))))
        .collect();
    let psi = Matrix::from_rows(a.field(), tq.algebra.dim(), &psi_rows);
    let qb = &q_b.algebra;
    let psi_iso = psi.rows() == psi.cols()
        && psi.inverse().is_some()
        && (0..qb.dim()).all(|i| {
            (0..qb.dim()).all(|j| {
                psi.vec_mul(qb.basis_product(i, j)) == tq.algebra.mul(psi.row(i), psi.row(j))
            })
        });
    report.check(
        "quotient_isomorphism",
        multiplicative && surjective && kernel == coefficientwise && psi_iso,
        json!({
            "projection_multiplicative": multiplicative,
            "projection_surjective": surjective,
            "kernel_is_induced_ideal": kernel == coefficientwise,
            "quotient_map_bijective_homomorphism": psi_iso,
            "dim_quotient": dq * t.precision,
        }),
    );
    Ok(InducedTruncation {
        ideal: induced,
        quotient: Some(q_b),
        quotient_truncation: Some(tq),
        report: report.finish(started),
    })
}

/// Decides whether `0` is alpha-prime in `A` and transfers the answer to
/// the power series and Laurent rings, with truncated witnesses.
pub fn alpha_prime_transfer(ctx: &Arc<SkewContext>, precision: usize, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let a = ctx.algebra();
    let alpha = ctx.alpha();
    let mut report = Report::new(format!("alpha-prime transfer at N = {precision}"));
    let t = build_truncation(ctx, precision, limits)?;
    let b = &t.algebra;
    let zero = Ideal::zero(a);
    let prime = is_alpha_prime(a, alpha, &zero, limits)?;
    if prime {
        let orbit = enumerate_prime_ideals(a, limits)?
            .into_iter()
            .map(|p| alpha_orbit(&p, alpha))
            .find(|o| {
                o.iter()
                    .try_fold(Ideal::whole(a), |acc, p| acc.intersect(p))
                    .map(|i| i.is_zero())
                    .unwrap_or(false)
            });
        report.check(
            "coefficient_ring_alpha_prime",
            orbit.is_some(),
            json!({
                "alpha_prime": true,
                "prime_orbit": orbit.unwrap_or_default().iter().map(|p| p.format(a)).collect::<Vec<_>>(),
            }),
        );
        let chain = "A is alpha-prime";
        report.certify("power_series_alpha_prime", format!("{chain}, so the power series ring is alpha-prime"));
        report.certify("laurent_alpha_prime", format!("{chain}, so the Laurent ring is alpha-prime"));
        report.certify(
            "laurent_prime",
            format!("{chain}; every ideal of the Laurent ring is an alpha-ideal, so it is prime"),
        );
        report.certify(
            "power_series_prime",
            format!("{chain} and A is noetherian (finite-dimensional), so the power series ring is prime"),
        );
    } else {
        let (i, j) = alpha_prime_violation(a, alpha, &zero, limits)?
            .ok_or_else(|| Error::Inconsistent("no witness pair for a non-alpha-prime zero ideal".into()))?;
        let ib = Ideal::from_subspace(b, t.coefficient_span(i.subspace()))?;
        let jb = Ideal::from_subspace(b, t.coefficient_span(j.subspace()))?;
        let prod_a = i.product(a, &j)?;
        let prod_b = ib.product(b, &jb)?;
        let sound = !i.is_zero()
            && !j.is_zero()
            && is_alpha_ideal(&i, alpha)
            && is_alpha_ideal(&j, alpha)
            && prod_a.is_zero()
            && !ib.is_zero()
            && !jb.is_zero()
            && prod_b.is_zero();
        report.check(
            "coefficient_ring_alpha_prime",
            true,
            json!({"alpha_prime": false}),
        );
        report.check(
            "induced_zero_product",
            sound,
            json!({
                "I": i.format(a),
                "J": j.format(a),
                "dim_I_B_N": ib.dim(),
                "dim_J_B_N": jb.dim(),
                "product_in_B_N_zero": prod_b.is_zero(),
            }),
        );
        report.certify(
            "power_series_alpha_prime_falsified",
            "I B and J B are nonzero alpha-ideals with (I B)(J B) inside (I J) B = 0",
        );
    }

    // contractions of induced alpha-prime ideals
    let embedded_a = Subspace::span(
        a.field(),
        b.dim(),
        &basis_of(a).iter().map(|x| t.embed(x)).collect::<Vec<_>>(),
    );
    let mut contracted = 0;
    let mut bad = Vec::new();
    for i in enumerate_alpha_ideals(a, alpha, limits)? {
        if i.is_whole() || !is_alpha_prime(a, alpha, &i, limits)? {
            continue;
        }
        let w = t.coefficient_span(i.subspace());
        let back = w.intersect(&embedded_a);
        let coords: Vec<Vector> = back.basis().iter().map(|x| x[..a.dim()].to_vec()).collect();
        let c = Ideal::from_subspace(a, Subspace::span(a.field(), a.dim(), &coords))?;
        contracted += 1;
        if c != i || !is_alpha_prime(a, alpha, &c, limits)? {
            bad.push(i.format(a));
        }
    }
    report.check(
        "contractions_alpha_prime",
        bad.is_empty(),
        json!({"alpha_prime_ideals_checked": contracted, "failures": bad}),
    );

    let radical = jacobson_radical(a)?;
    if radical.is_zero() {
        let why = "A is semiprime and noetherian";
        report.certify("power_series_semiprime", format!("{why}, so the power series ring is semiprime"));
        report.certify("laurent_semiprime", format!("{why}, so the Laurent ring is semiprime"));
    } else {
        let mut index = 1;
        while !radical.power(a, index)?.is_zero() {
            index += 1;
        }
        let jb = Ideal::from_subspace(b, t.coefficient_span(radical.subspace()))?;
        let nilpotent_in_b = jb.power(b, index)?.is_zero() && !jb.is_zero();
        let witness_x = if a.cardinality() <= limits.scan_cap {
            square_zero_element(a, limits)?.map(|x| a.format_element(&x))
        } else {
            None
        };
        report.check(
            "semiprime_contrapositive",
            nilpotent_in_b,
            json!({
                "radical": radical.format(a),
                "nilpotency_index": index,
                "square_zero_element": witness_x,
            }),
        );
    }
    Ok(report.finish(started))
}

/// Whether an alpha-prime transfer report certified the power series ring.
pub fn transfer_certified(report: &Report) -> bool {
    report
        .claim("power_series_alpha_prime")
        .map(|c| c.status == Status::Certified)
        .unwrap_or(false)
}

/// For an alpha-ideal `I` with `A/I` semiprime: `rank A/I = udim(B_N/IB_N)`
/// and `I` is alpha-prime exactly when the transfer certifies `A/I`.
pub fn verify_induced_corollary(
    ctx: &Arc<SkewContext>,
    ideal: &Ideal,
    precision: usize,
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let a = ctx.algebra();
    if !is_alpha_ideal(ideal, ctx.alpha()) {
        return Err(Error::NotAlphaIdeal);
    }
    if ideal.is_whole() {
        return Err(Error::NotProper);
    }
    let q_a = quotient_algebra(a, ideal)?;
    if !jacobson_radical(&q_a.algebra)?.is_zero() {
        return Err(Error::NotSemiprime);
    }
    let mut report = Report::new(format!(
        "induced ideal corollary for {} at N = {precision}",
        ideal.format(a)
    ));
    let t = build_truncation(ctx, precision, limits)?;
    let it = induced_ideal_truncated(ideal, &t, limits)?;
    report.absorb("induced", it.report);
    let q_b = it.quotient.expect("proper ideal has a quotient");
    let tq = it.quotient_truncation.expect("proper ideal has a quotient");
    let rank = goldie_rank(&q_a.algebra, limits)?;
    let qmod = FiniteModule::regular(Arc::new(q_b.algebra.clone()));
    let u = uniform_dimension(&qmod, limits)?;
    let u_trunc = uniform_dimension(&FiniteModule::regular(tq.algebra.clone()), limits)?;
    report.check(
        "quotient_rank_equality",
        u == rank && u_trunc == rank,
        json!({"rank_A_mod_I": rank, "udim_B_N_mod_IB_N": u, "udim_truncation_of_quotient": u_trunc}),
    );
    oracle_check(&mut report, "oracle_concordance", &qmod, u, limits)?;
    let i_prime = is_alpha_prime(a, ctx.alpha(), ideal, limits)?;
    let transfer = alpha_prime_transfer(tq.context(), precision, limits)?;
    let certified = transfer_certified(&transfer);
    report.check(
        "alpha_prime_biconditional",
        i_prime == certified,
        json!({"I_alpha_prime": i_prime, "quotient_transfer_certified": certified}),
    );
    report.certify(
        "induced_semiprime",
        "A/I is semiprime, so B/IB, isomorphic to (A/I)[[y; alpha]], is semiprime",
    );
    Ok(report.finish(started))
}
