//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewrank_core::catalog::{self, Entry};
use skewrank_core::goldie::simple_right_ideal_decomposition;
use skewrank_core::ideal::enumerate_alpha_ideals;
use skewrank_core::induced::InducedIdealView;
use skewrank_core::primes::{is_alpha_prime_by_definition, is_alpha_prime_by_orbits};
use skewrank_core::quotient::quotient_algebra;
use skewrank_core::radical::jacobson_radical;
use skewrank_core::scenario::{
    random_induced_member, random_series_with_valuation, random_unit_series, witness_valuations,
};
use skewrank_core::truncation::{
    alpha_prime_transfer, build_truncation, induced_ideal_truncated, induced_span,
    transfer_certified, verify_induced_corollary, verify_rank_theorem, verify_uniserial_chain,
};
use skewrank_core::{Limits, Report, SkewContext, SkewLaurent, SkewSeries, Status};

const SAMPLES: usize = 1000;
const N: usize = 8;

/// Goldie ranks of the semisimple catalog algebras, by hand.
const EXPECTED_RANKS: &[(&str, usize)] = &[
    ("F2", 1),
    ("F3", 1),
    ("F2xF2/swap", 2),
    ("F2xF2/id", 2),
    ("M2(F2)/id", 2),
    ("M2(F2)/conj[[1,1],[0,1]]", 2),
    ("M2(F2)/conj[[0,1],[1,1]]", 2),
    ("M2(F3)/id", 2),
    ("M2(F3)/conj[[1,1],[0,1]]", 2),
    ("M2(F2)xF2/id", 3),
    ("M2(F2)xF2/conj[[1,1],[0,1]]", 3),
];

type Outcome = Result<String, String>;

struct Suite {
    entries: Vec<Entry>,
    limits: Limits,
    /// Oracle concordance claims gathered from criteria 1, 2 and 7.
    concordance: Vec<(String, Status)>,
}

impl Suite {
    fn entry(&self, name: &str) -> &Entry {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("missing catalog entry {name}"))
    }

    fn semisimple(&self) -> impl Iterator<Item = (&Entry, usize)> {
        EXPECTED_RANKS.iter().map(|&(n, d)| (self.entry(n), d))
    }

    fn collect_concordance(&mut self, prefix: &str, report: &Report) {
        for c in &report.claims {
            if c.name.ends_with("oracle_concordance") {
                self.concordance.push((format!("{prefix}/{}", c.name), c.status));
            }
        }
    }
}

fn failing_claims(report: &Report) -> Vec<String> {
    report.failures().map(|c| format!("{}: {}", c.name, c.witness)).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rank_equality(s: &mut Suite) -> Outcome {
    let started = Instant::now();
    let mut cases = 0;
    let entries: Vec<(Arc<SkewContext>, String, usize)> = s
        .semisimple()
        .map(|(e, d)| (e.ctx.clone(), e.name.clone(), d))
        .collect();
    for (ctx, name, d) in entries {
        for n in [2, 3, 4] {
            let r = verify_rank_theorem(&ctx, n, &s.limits).map_err(|e| format!("{name} N={n}: {e}"))?;
            let c = r.claim("rank_equality").ok_or("no rank_equality claim")?;
            let u = c.witness["uniform_dimension_B_N"].as_u64().unwrap_or(0) as usize;
            if u != d || c.status != Status::Pass {
                return Err(format!("{name} N={n}: udim(B_N) = {u}, rank A = {d}"));
            }
            if !r.passed() {
                return Err(format!("{name} N={n}: {:?}", failing_claims(&r)));
            }
            s.collect_concordance(&format!("{name}/N{n}"), &r);
            cases += 1;
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}, limit 60 s"));
    }
    Ok(format!("{cases} (context, N) cases in {} ms", elapsed.as_millis()))
}

fn uniserial(s: &mut Suite) -> Outcome {
    let mut checked = 0;
    let mut skipped = 0;
    let entries: Vec<(Arc<SkewContext>, String)> =
        s.semisimple().map(|(e, _)| (e.ctx.clone(), e.name.clone())).collect();
    for (ctx, name) in entries {
        let parts = simple_right_ideal_decomposition(ctx.algebra(), &s.limits).map_err(|e| e.to_string())?;
        for n in [2, 3, 4] {
            let t = build_truncation(&ctx, n, &s.limits).map_err(|e| e.to_string())?;
            for (i, v) in parts.iter().enumerate() {
                if induced_span(v, &t).cardinality() > 1 << 12 {
                    skipped += 1;
                    continue;
                }
                let r = verify_uniserial_chain(v, &t, &s.limits).map_err(|e| format!("{name} V{i} N={n}: {e}"))?;
                let found = r
                    .claim("submodule_count")
                    .and_then(|c| c.witness["found"].as_u64())
                    .unwrap_or(0) as usize;
                if found != n + 1 || !r.passed() {
                    return Err(format!(
                        "{name} V{i} N={n}: {found} submodules, expected {}; {:?}",
                        n + 1,
                        failing_claims(&r)
                    ));
                }
                s.collect_concordance(&format!("{name}/V{i}/N{n}"), &r);
                checked += 1;
            }
        }
    }
    if checked == 0 {
        return Err("no module within the enumeration cap".into());
    }
    Ok(format!("{checked} modules enumerated, {skipped} above 2^12"))
}

fn inversion(s: &mut Suite) -> Outcome {
    for (k, e) in s.entries.iter().enumerate() {
        let mut r = rng(300 + k as u64);
        let one = SkewSeries::one(&e.ctx, N);
        for _ in 0..SAMPLES {
            let f = random_unit_series(&e.ctx, N, &mut r);
            let g = f.invert_unit().map_err(|err| format!("{}: {err}", e.name))?;
            if g.mul(&f).map_err(|x| x.to_string())? != one || f.mul(&g).map_err(|x| x.to_string())? != one {
                return Err(format!("{}: inverse fails for {:?}", e.name, f.coeffs()));
            }
        }
    }
    Ok(format!("{SAMPLES} units in each of {} contexts", s.entries.len()))
}

fn arithmetic_laws(s: &mut Suite) -> Outcome {
    let mut graded = 0;
    for (k, e) in s.entries.iter().enumerate() {
        let ctx = &e.ctx;
        let alg = ctx.algebra();
        let mut r = rng(400 + k as u64);
        for _ in 0..SAMPLES {
            let f = SkewSeries::random(ctx, N, &mut r);
            let g = SkewSeries::random(ctx, N, &mut r);
            let h = SkewSeries::random(ctx, N, &mut r);
            let lhs = f.mul(&g).and_then(|x| x.mul(&h)).map_err(|x| x.to_string())?;
            let rhs = g.mul(&h).and_then(|x| f.mul(&x)).map_err(|x| x.to_string())?;
            if lhs != rhs {
                return Err(format!("{}: associativity fails", e.name));
            }
        }
        let y = SkewSeries::y_power(ctx, 1, N);
        for s_idx in 0..alg.dim() {
            let a = alg.basis_element(s_idx);
            let ya = y.mul(&SkewSeries::constant(ctx, &a, N)).map_err(|x| x.to_string())?;
            let alpha_a_y = SkewSeries::monomial(ctx, &ctx.alpha().apply(&a), 1, N);
            if ya != alpha_a_y {
                return Err(format!("{}: y e{s_idx} != alpha(e{s_idx}) y", e.name));
            }
            for t_idx in 0..alg.dim() {
                let b = alg.basis_element(t_idx);
                for i in 0..N {
                    for j in 0..N - i {
                        let prod = SkewSeries::monomial(ctx, &a, i, N)
                            .mul(&SkewSeries::monomial(ctx, &b, j, N))
                            .map_err(|x| x.to_string())?;
                        let expected = alg.mul(&a, &ctx.alpha().apply_power(i as i64, &b));
                        let coeffs = prod.coeffs();
                        let ok = (0..N).all(|k| {
                            if k == i + j {
                                coeffs[k] == expected
                            } else {
                                coeffs[k].iter().all(|&c| c == 0)
                            }
                        });
                        if !ok {
                            return Err(format!("{}: graded law fails at e{s_idx} y^{i} e{t_idx} y^{j}", e.name));
                        }
                        graded += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{SAMPLES} triples per context, {graded} graded basis products"
    ))
}

fn alpha_prime_equivalence(s: &mut Suite) -> Outcome {
    let mut ideals_checked = 0;
    for e in &s.entries {
        let alg = e.ctx.algebra();
        if alg.cardinality() > 1 << 12 {
            continue;
        }
        for ideal in enumerate_alpha_ideals(alg, e.ctx.alpha(), &s.limits).map_err(|x| x.to_string())? {
            let by_def = is_alpha_prime_by_definition(alg, e.ctx.alpha(), &ideal, &s.limits)
                .map_err(|x| x.to_string())?;
            let by_orbit = is_alpha_prime_by_orbits(alg, e.ctx.alpha(), &ideal, &s.limits)
                .map_err(|x| x.to_string())?;
            if by_def != by_orbit {
                return Err(format!(
                    "{}: ideal {} definition {by_def}, orbits {by_orbit}",
                    e.name,
                    ideal.format(alg)
                ));
            }
            ideals_checked += 1;
        }
    }
    for name in [
        "F2xF2/swap",
        "M2(F2)/id",
        "M2(F2)/conj[[1,1],[0,1]]",
        "M2(F2)/conj[[0,1],[1,1]]",
    ] {
        let r = alpha_prime_transfer(&s.entry(name).ctx, N, &s.limits).map_err(|x| x.to_string())?;
        if !transfer_certified(&r) || !r.passed() {
            return Err(format!("{name}: transfer not certified; {:?}", failing_claims(&r)));
        }
    }
    let r = alpha_prime_transfer(&s.entry("F2xF2/id").ctx, N, &s.limits).map_err(|x| x.to_string())?;
    let witness = r.claim("induced_zero_product").ok_or("F2xF2/id: no zero-product witness")?;
    if transfer_certified(&r) || witness.status != Status::Pass || !r.passed() {
        return Err(format!("F2xF2/id: not falsified; {:?}", failing_claims(&r)));
    }
    Ok(format!(
        "{ideals_checked} alpha-ideals agree; 4 transfers certified; F2xF2/id falsified by I = {}, J = {}",
        witness.witness["I"], witness.witness["J"]
    ))
}

fn semiprime_witness(s: &mut Suite) -> Outcome {
    let mut contexts = 0;
    for (k, (e, _)) in s.semisimple().enumerate() {
        let ctx = &e.ctx;
        let vals = witness_valuations(ctx, N);
        let mut r = rng(600 + k as u64);
        for i in 0..SAMPLES {
            let f = random_series_with_valuation(ctx, N, vals[i % vals.len()], &mut r);
            let g = f.semiprime_witness().map_err(|x| format!("{}: {x}", e.name))?;
            let fgf = f.mul(&g).and_then(|x| x.mul(&f)).map_err(|x| x.to_string())?;
            if fgf.is_zero() {
                return Err(format!("{}: f g f = 0 for f = {:?}", e.name, f.coeffs()));
            }
            let f = SkewLaurent::random(ctx, (i % 7) as i64 - 3, N, &mut r);
            let g = f.semiprime_witness().map_err(|x| format!("{}: {x}", e.name))?;
            let fgf = f.mul(&g).and_then(|x| x.mul(&f)).map_err(|x| x.to_string())?;
            if fgf.is_zero() {
                return Err(format!("{}: Laurent f g f = 0", e.name));
            }
        }
        contexts += 1;
    }
    Ok(format!("{SAMPLES} series and {SAMPLES} Laurent series in each of {contexts} contexts"))
}

fn induced_ideals(s: &mut Suite) -> Outcome {
    const NI: usize = 4;
    let mut ideals = 0;
    let mut corollaries = 0;
    let entries: Vec<(Arc<SkewContext>, String)> =
        s.entries.iter().map(|e| (e.ctx.clone(), e.name.clone())).collect();
    for (k, (ctx, name)) in entries.into_iter().enumerate() {
        let alg = ctx.algebra();
        let t = build_truncation(&ctx, NI, &s.limits).map_err(|x| x.to_string())?;
        let mut r = rng(700 + k as u64);
        for (j, ideal) in enumerate_alpha_ideals(alg, ctx.alpha(), &s.limits)
            .map_err(|x| x.to_string())?
            .iter()
            .enumerate()
        {
            let label = format!("{name} I{j} = {}", ideal.format(alg));
            let it = induced_ideal_truncated(ideal, &t, &s.limits).map_err(|x| format!("{label}: {x}"))?;
            for claim in ["descriptions_agree", "two_sided", "quotient_isomorphism"] {
                if it.report.claim(claim).map(|c| c.status) != Some(Status::Pass) {
                    return Err(format!("{label}: {claim} does not pass"));
                }
            }
            let view = InducedIdealView::new(&ctx, ideal.clone(), None).map_err(|x| x.to_string())?;
            for _ in 0..100 {
                let f = random_induced_member(&ctx, ideal.subspace(), N, &mut r);
                let parts = view.rewrite_in_generators(&f).map_err(|x| format!("{label}: {x}"))?;
                let mut total = SkewSeries::zero(&ctx, N);
                for (g, sj) in view.generators().iter().zip(&parts) {
                    total = total.add(&sj.left_scale(g)).map_err(|x| x.to_string())?;
                }
                if total != f {
                    return Err(format!("{label}: rewrite does not reconstruct the member"));
                }
            }
            if !ideal.is_whole() {
                let q = quotient_algebra(alg, ideal).map_err(|x| x.to_string())?;
                if jacobson_radical(&q.algebra).map_err(|x| x.to_string())?.is_zero() {
                    let rep = verify_induced_corollary(&ctx, ideal, NI, &s.limits)
                        .map_err(|x| format!("{label}: {x}"))?;
                    let c = rep.claim("quotient_rank_equality").ok_or("no quotient_rank_equality")?;
                    if c.status != Status::Pass || !rep.passed() {
                        return Err(format!("{label}: {:?}", failing_claims(&rep)));
                    }
                    s.collect_concordance(&format!("{name}/I{j}"), &rep);
                    corollaries += 1;
                }
            }
            ideals += 1;
        }
    }
    Ok(format!(
        "{ideals} alpha-ideals at N = {NI}, 100 rewrites each, {corollaries} semiprime quotients"
    ))
}

fn conjugation(s: &mut Suite) -> Outcome {
    for (k, e) in s.entries.iter().enumerate() {
        let mut r = rng(800 + k as u64);
        for i in 0..SAMPLES {
            let f = SkewLaurent::random(&e.ctx, (i % 9) as i64 - 4, N, &mut r);
            if f.conjugate_by_y().map_err(|x| x.to_string())? != f.extend_alpha() {
                return Err(format!("{}: y f y^-1 != alpha(f)", e.name));
            }
        }
    }
    Ok(format!("{SAMPLES} Laurent series in each of {} contexts", s.entries.len()))
}

fn oracle_concordance(s: &mut Suite) -> Outcome {
    if s.concordance.is_empty() {
        return Err("no oracle comparison ran".into());
    }
    let bad: Vec<_> = s.concordance.iter().filter(|(_, st)| *st != Status::Pass).collect();
    if !bad.is_empty() {
        return Err(format!("{bad:?}"));
    }
    Ok(format!("{} modules agree with the backtracking oracle", s.concordance.len()))
}

fn selftest(_: &mut Suite) -> Outcome {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_skewrank"))
        .args(["selftest", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}, limit 5 min"));
    }
    Ok(format!("exit 0 in {} ms", elapsed.as_millis()))
}

fn main() -> ExitCode {
    let mut suite = Suite {
        entries: catalog::builtin().expect("catalog builds"),
        limits: Limits::default(),
        concordance: Vec::new(),
    };
    let criteria: [(&str, fn(&mut Suite) -> Outcome); 10] = [
        ("rank equality", rank_equality),
        ("uniserial induced modules", uniserial),
        ("inversion", inversion),
        ("arithmetic laws", arithmetic_laws),
        ("alpha-prime equivalence and transfer", alpha_prime_equivalence),
        ("semiprime witness", semiprime_witness),
        ("induced ideals", induced_ideals),
        ("conjugation equals extension", conjugation),
        ("oracle concordance", oracle_concordance),
        ("selftest", selftest),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run(&mut suite) {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
