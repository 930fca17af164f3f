//! Scenario orchestration: the full check of one context, and the built-in
//! self-test over the catalog.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::catalog;
use crate::error::{Error, Result};
use crate::goldie::{goldie_rank, simple_right_ideal_decomposition};
use crate::ideal::{enumerate_alpha_ideals, Ideal};
use crate::induced::InducedIdealView;
use crate::laurent::SkewLaurent;
use crate::limits::Limits;
use crate::linalg::{self, Subspace, Vector};
use crate::module::{peel_simple_summands, FiniteModule};
use crate::primes::is_alpha_prime;
use crate::quotient::quotient_algebra;
use crate::radical::{is_semiprime, jacobson_radical};
use crate::report::{Report, Status};
use crate::series::{SkewContext, SkewSeries};
use crate::truncation::{
    alpha_prime_transfer, build_truncation, induced_ideal_truncated, induced_span,
    verify_induced_corollary, verify_rank_theorem, verify_uniform_lower_bound,
    verify_uniserial_chain, TruncationRing,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub precision: usize,
    /// Random cases per sampled law.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            precision: crate::series::DEFAULT_PRECISION,
            samples: 200,
            seed: 0x5eed,
        }
    }
}

/// Absorbs a sub-scenario; a cap overrun becomes a skip, an internal
/// inconsistency a failed claim.
fn run_part(report: &mut Report, prefix: &str, part: Result<Report>) -> Result<()> {
    match part {
        Ok(r) => report.absorb(prefix, r),
        Err(Error::TooLarge { what, size, cap }) => {
            report.skip(format!("{prefix}: {what} has size {size}, cap {cap}"))
        }
        Err(Error::Inconsistent(msg)) => report.check(prefix, false, json!(msg)),
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Random series with a unit constant term.
pub fn random_unit_series<R: Rng + ?Sized>(ctx: &Arc<SkewContext>, n: usize, rng: &mut R) -> SkewSeries {
    loop {
        let f = SkewSeries::random(ctx, n, rng);
        if ctx.algebra().is_unit(f.coeff(0)).is_some() {
            return f;
        }
    }
}

/// Random series with valuation exactly `v < n`.
pub fn random_series_with_valuation<R: Rng + ?Sized>(
    ctx: &Arc<SkewContext>,
    n: usize,
    v: usize,
    rng: &mut R,
) -> SkewSeries {
    loop {
        let f = SkewSeries::random(ctx, n, rng);
        if linalg::is_zero(f.coeff(v)) {
            continue;
        }
        let mut coeffs = f.coeffs().to_vec();
        for c in coeffs.iter_mut().take(v) {
            *c = ctx.algebra().zero();
        }
        return SkewSeries::from_coeffs(ctx, coeffs).expect("same shape");
    }
}

/// Random element of `I[[y; alpha]]` at precision `n`.
pub fn random_induced_member<R: Rng + ?Sized>(
    ctx: &Arc<SkewContext>,
    ideal: &Subspace,
    n: usize,
    rng: &mut R,
) -> SkewSeries {
    let p = ctx.algebra().field().p();
    let coeffs = (0..n)
        .map(|_| {
            let c: Vector = (0..ideal.dim()).map(|_| rng.gen_range(0..p)).collect();
            ideal.combine(&c)
        })
        .collect();
    SkewSeries::from_coeffs(ctx, coeffs).expect("same shape")
}

/// Valuations `i < n` with `n > 2i + ((-i) mod ord(alpha))`.
pub fn witness_valuations(ctx: &SkewContext, n: usize) -> Vec<usize> {
    let order = ctx.alpha().order() as usize;
    (0..n)
        .filter(|&i| 2 * i + (order - i % order) % order < n)
        .collect()
}

/// Sampled ring laws for series, Laurent series and the truncation ring.
pub fn check_series_laws(
    report: &mut Report,
    ctx: &Arc<SkewContext>,
    t: &TruncationRing,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let n = t.precision();
    let alg = ctx.algebra();
    let b = t.algebra();

    let mut bad = 0;
    for _ in 0..samples {
        let f = SkewSeries::random(ctx, n, rng);
        let g = SkewSeries::random(ctx, n, rng);
        let h = SkewSeries::random(ctx, n, rng);
        if f.mul(&g)?.mul(&h)? != f.mul(&g.mul(&h)?)? {
            bad += 1;
        }
    }
    report.check("series/associativity", bad == 0, json!({"cases": samples, "failures": bad}));

    let mut bad_relation = Vec::new();
    let y = SkewSeries::y_power(ctx, 1, n.max(2));
    for k in 0..alg.dim() {
        let a = SkewSeries::constant(ctx, &alg.basis_element(k), n.max(2));
        let alpha_a = SkewSeries::constant(ctx, &ctx.alpha().apply(&alg.basis_element(k)), n.max(2));
        if y.mul(&a)? != alpha_a.mul(&y)? {
            bad_relation.push(k);
        }
    }
    report.check("series/defining_relation", bad_relation.is_empty(), json!({"failing_basis": bad_relation}));

    let mut graded_cases = 0;
    let mut graded_bad = 0;
    for s in 0..alg.dim() {
        for u in 0..alg.dim() {
            let (es, eu) = (alg.basis_element(s), alg.basis_element(u));
            for i in 0..n {
                for j in 0..n - i {
                    let lhs = SkewSeries::monomial(ctx, &es, i, n)
                        .mul(&SkewSeries::monomial(ctx, &eu, j, n))?;
                    let rhs = SkewSeries::monomial(ctx, &alg.mul(&es, &ctx.twist(i as i64, &eu)), i + j, n);
                    graded_cases += 1;
                    if lhs != rhs {
                        graded_bad += 1;
                    }
                }
            }
        }
    }
    report.check("series/graded_law", graded_bad == 0, json!({"cases": graded_cases, "failures": graded_bad}));

    let mut bad = 0;
    for _ in 0..samples {
        let f = random_unit_series(ctx, n, rng);
        let g = f.invert_unit()?;
        let one = SkewSeries::one(ctx, n);
        if f.mul(&g)? != one || g.mul(&f)? != one {
            bad += 1;
        }
    }
    report.check("series/inversion", bad == 0, json!({"cases": samples, "failures": bad}));

    let mut bad_hom = 0;
    let mut bad_ext = 0;
    let mut bad_trunc = 0;
    for _ in 0..samples {
        let f = SkewSeries::random(ctx, n, rng);
        let g = SkewSeries::random(ctx, n, rng);
        let fg = f.mul(&g)?;
        if fg.reduce_mod_y() != alg.mul(&f.reduce_mod_y(), &g.reduce_mod_y()) {
            bad_hom += 1;
        }
        if fg.extend_alpha() != f.extend_alpha().mul(&g.extend_alpha())? {
            bad_ext += 1;
        }
        if t.from_series(&fg)? != b.mul(&t.from_series(&f)?, &t.from_series(&g)?) {
            bad_trunc += 1;
        }
    }
    report.check("series/reduce_mod_y_multiplicative", bad_hom == 0, json!({"cases": samples, "failures": bad_hom}));
    report.check("series/extend_alpha_multiplicative", bad_ext == 0, json!({"cases": samples, "failures": bad_ext}));
    report.check("truncation/agrees_with_series", bad_trunc == 0, json!({"cases": samples, "failures": bad_trunc}));

    let mut bad = 0;
    for k in 0..samples {
        let v = (k % 7) as i64 - 3;
        let f = SkewLaurent::random(ctx, v, n, rng);
        if f.conjugate_by_y()? != f.extend_alpha() {
            bad += 1;
        }
    }
    report.check("laurent/conjugation_is_extension", bad == 0, json!({"cases": samples, "failures": bad}));

    let mut bad = 0;
    let mut cases = 0;
    for k in 0..samples {
        let f = SkewLaurent::random(ctx, (k % 5) as i64 - 2, n, rng);
        if alg.is_unit(f.leading_coefficient()?).is_none() {
            continue;
        }
        cases += 1;
        let g = f.inverse()?;
        let one = SkewLaurent::y_power(ctx, 0, n);
        if f.mul(&g)? != one || g.mul(&f)? != one {
            bad += 1;
        }
    }
    report.check("laurent/unit_leading_term_invertible", bad == 0, json!({"cases": cases, "failures": bad}));
    Ok(())
}

/// `f g f != 0` for the witness `g`, sampled over random `f` meeting the
/// precision bound, in both the power series and Laurent rings.
pub fn check_semiprime_witnesses(
    report: &mut Report,
    ctx: &Arc<SkewContext>,
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let vals = witness_valuations(ctx, n);
    let mut bad = 0;
    for k in 0..samples {
        let v = vals[k % vals.len()];
        let f = random_series_with_valuation(ctx, n, v, rng);
        let g = f.semiprime_witness()?;
        if f.mul(&g)?.mul(&f)?.is_zero() {
            bad += 1;
        }
    }
    report.check(
        "semiprime_witness/power_series",
        bad == 0,
        json!({"cases": samples, "failures": bad, "valuations": vals}),
    );
    let mut bad = 0;
    for k in 0..samples {
        let f = SkewLaurent::random(ctx, (k % 7) as i64 - 3, n, rng);
        let g = f.semiprime_witness()?;
        if f.mul(&g)?.mul(&f)?.is_zero() {
            bad += 1;
        }
    }
    report.check("semiprime_witness/laurent", bad == 0, json!({"cases": samples, "failures": bad}));
    Ok(())
}

/// Membership, rewriting in generators, product containment and reduction
/// for the induced ideal of `ideal`.
pub fn check_induced_sampling(
    report: &mut Report,
    prefix: &str,
    ctx: &Arc<SkewContext>,
    ideal: &Ideal,
    lattice: &[Ideal],
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let alg = ctx.algebra();
    let view = InducedIdealView::new(ctx, ideal.clone(), None)?;
    let mut bad = 0;
    for _ in 0..samples {
        let f = random_induced_member(ctx, ideal.subspace(), n, rng);
        let parts = view.rewrite_in_generators(&f)?;
        let mut total = SkewSeries::zero(ctx, n);
        for (g, s) in view.generators().iter().zip(&parts) {
            total = total.add(&s.left_scale(g))?;
        }
        if !view.contains(&f) || total != f {
            bad += 1;
        }
    }
    report.check(
        format!("{prefix}/rewrite_in_generators"),
        bad == 0,
        json!({"cases": samples, "failures": bad, "generators": view.generators().len()}),
    );

    let mut bad = 0;
    let mut cases = 0;
    for other in lattice {
        let prod = ideal.product(alg, other)?;
        let prod_view = InducedIdealView::new(ctx, prod, None)?;
        for _ in 0..samples.div_ceil(lattice.len().max(1)) {
            let f = random_induced_member(ctx, ideal.subspace(), n, rng);
            let g = random_induced_member(ctx, other.subspace(), n, rng);
            cases += 1;
            if !prod_view.contains(&f.mul(&g)?) {
                bad += 1;
            }
        }
    }
    report.check(
        format!("{prefix}/product_containment"),
        bad == 0,
        json!({"cases": cases, "failures": bad}),
    );

    if !ideal.is_whole() {
        let mut bad = 0;
        for _ in 0..samples {
            let f = SkewSeries::random(ctx, n, rng);
            let g = SkewSeries::random(ctx, n, rng);
            let hom = view.reduce(&f.mul(&g)?)? == view.reduce(&f)?.mul(&view.reduce(&g)?)?;
            let kernel = view.reduce(&f)?.is_zero() == view.contains(&f);
            let member = random_induced_member(ctx, ideal.subspace(), n, rng);
            if !hom || !kernel || !view.reduce(&member)?.is_zero() {
                bad += 1;
            }
        }
        report.check(
            format!("{prefix}/reduction_homomorphism"),
            bad == 0,
            json!({"cases": samples, "failures": bad}),
        );
    }
    Ok(())
}

/// Runs every applicable check on one context at the given precision.
pub fn verify_context(
    name: &str,
    ctx: &Arc<SkewContext>,
    options: &VerifyOptions,
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let n = options.precision;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut report = Report::new(format!("verify {name} at N = {n}"));
    let alg = ctx.algebra();
    let t = build_truncation(ctx, n, limits)?;
    match t.check_invariants() {
        Ok(()) => report.check("truncation/invariants", true, json!({"dim_B_N": t.algebra().dim()})),
        Err(Error::Inconsistent(m)) => report.check("truncation/invariants", false, json!(m)),
        Err(e) => return Err(e),
    }
    check_series_laws(&mut report, ctx, &t, options.samples, &mut rng)?;

    let semiprime = is_semiprime(alg, limits)?;
    report.check("coefficient_ring/semiprime_decided", true, json!({"semiprime": semiprime}));
    if semiprime {
        run_part(&mut report, "rank", verify_rank_theorem(ctx, n, limits))?;
        let parts = simple_right_ideal_decomposition(alg, limits)?;
        for (i, v) in parts.iter().enumerate() {
            let size = induced_span(v, &t).cardinality();
            if !limits.oracle_applies(size) && size > limits.enum_cap {
                report.skip(format!("uniserial/V{i}: |V B_N| = {size} above enumeration cap"));
                continue;
            }
            run_part(&mut report, &format!("uniserial/V{i}"), verify_uniserial_chain(v, &t, limits))?;
        }
        check_semiprime_witnesses(&mut report, ctx, n, options.samples, &mut rng)?;
    }

    let regular = FiniteModule::regular(alg.clone());
    let independent: Vec<_> = peel_simple_summands(&regular, &regular.socle()?, limits)?
        .into_iter()
        .map(|s| crate::ideal::RightIdeal::from_subspace(alg, s))
        .collect::<Result<_>>()?;
    run_part(
        &mut report,
        "lower_bound",
        verify_uniform_lower_bound(ctx, n, &independent, limits),
    )?;
    run_part(&mut report, "alpha_prime", alpha_prime_transfer(ctx, n, limits))?;

    match enumerate_alpha_ideals(alg, ctx.alpha(), limits) {
        Ok(lattice) => {
            let mut checked = 0;
            for (k, ideal) in lattice.iter().enumerate() {
                let prefix = format!("induced/I{k}");
                match induced_ideal_truncated(ideal, &t, limits) {
                    Ok(it) => report.absorb(&prefix, it.report),
                    Err(e) => run_part(&mut report, &prefix, Err(e))?,
                }
                let samples = options.samples.div_ceil(2).max(100);
                check_induced_sampling(&mut report, &prefix, ctx, ideal, &lattice, n, samples, &mut rng)?;
                if !ideal.is_whole() {
                    checked += 1;
                    is_alpha_prime(alg, ctx.alpha(), ideal, limits)
                        .map(|_| ())
                        .or_else(|e| match e {
                            Error::Inconsistent(m) => {
                                report.check(format!("{prefix}/alpha_prime_methods_agree"), false, json!(m));
                                Ok(())
                            }
                            e => Err(e),
                        })?;
                    let q = quotient_algebra(alg, ideal)?;
                    if jacobson_radical(&q.algebra)?.is_zero() {
                        run_part(
                            &mut report,
                            &format!("corollary/I{k}"),
                            verify_induced_corollary(ctx, ideal, n, limits),
                        )?;
                    }
                }
                report
                    .claims
                    .iter_mut()
                    .filter(|c| c.name.starts_with(&format!("{prefix}/")) && c.witness.is_object())
                    .for_each(|c| c.witness["ideal"] = json!(ideal.format(alg)));
            }
            let agree = !report
                .claims
                .iter()
                .any(|c| c.name.ends_with("alpha_prime_methods_agree") && c.status == Status::Fail);
            report.check(
                "alpha_prime/methods_agree",
                agree,
                json!({"alpha_ideals": lattice.len(), "proper_checked": checked}),
            );
        }
        Err(Error::TooLarge { what, size, cap }) => {
            report.skip(format!("induced: {what} has size {size}, cap {cap}"))
        }
        Err(e) => return Err(e),
    }
    Ok(report.finish(started))
}

/// Rank equality at each precision in `precisions`, without the other
/// scenario parts.
pub fn rank_sweep(
    ctx: &Arc<SkewContext>,
    precisions: &[usize],
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let mut report = Report::new("rank equality sweep");
    let d = goldie_rank(ctx.algebra(), limits)?;
    for &n in precisions {
        run_part(&mut report, &format!("N{n}"), verify_rank_theorem(ctx, n, limits))?;
    }
    report.check("goldie_rank", true, json!({"rank": d}));
    Ok(report.finish(started))
}

/// The built-in suite: every catalog context through [`verify_context`] at
/// `options.precision`, plus rank sweeps over `N = 1..=4` for the semiprime
/// ones. Contexts run in parallel.
pub fn selftest(options: &VerifyOptions, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let entries = catalog::builtin()?;
    let parts: Vec<(String, Result<Report>)> = entries
        .par_iter()
        .map(|e| {
            let run = || -> Result<Report> {
                let mut r = verify_context(&e.name, &e.ctx, options, limits)?;
                if is_semiprime(e.ctx.algebra(), limits)? {
                    let sweep = rank_sweep(&e.ctx, &[1, 2, 3, 4], limits)?;
                    r.absorb("rank_sweep", sweep);
                }
                Ok(r)
            };
            (e.name.clone(), run())
        })
        .collect();
    let mut report = Report::new(format!("selftest at N = {}", options.precision));
    for (name, part) in parts {
        run_part(&mut report, &name, part)?;
    }
    Ok(report.finish(started))
}
