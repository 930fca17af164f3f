//! Prime ideals, alpha-primeness, and central idempotents.

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::ideal::{alpha_orbit, enumerate_alpha_ideals, is_alpha_ideal, orbit_intersection, Ideal};
use crate::limits::Limits;
use crate::linalg::{self, Subspace, Vector};
use crate::quotient::quotient_algebra;
use crate::radical::jacobson_radical;

/// Primitive idempotents of the center of a semisimple algebra, by
/// exhaustive search over the center. Requires `|Z| <= limits.center_cap`.
pub fn primitive_central_idempotents(alg: &Algebra, limits: &Limits) -> Result<Vec<Vector>> {
    let z = alg.center();
    let size = z.cardinality();
    if size > limits.center_cap {
        return Err(Error::too_large("center for idempotent search", size, limits.center_cap));
    }
    let idempotents: Vec<Vector> = z
        .elements()
        .filter(|e| !linalg::is_zero(e) && alg.mul(e, e) == *e)
        .collect();
    let mut primitive: Vec<Vector> = idempotents
        .iter()
        .filter(|e| {
            !idempotents
                .iter()
                .any(|f| f != *e && alg.mul(f, e) == *f)
        })
        .cloned()
        .collect();
    primitive.sort();
    let total = primitive
        .iter()
        .fold(alg.zero(), |acc, e| alg.add(&acc, e));
    if total != alg.one() {
        return Err(Error::Inconsistent(
            "primitive central idempotents do not sum to one".into(),
        ));
    }
    Ok(primitive)
}

/// All prime ideals: the preimages of the maximal ideals of `A / J`, one per
/// primitive central idempotent of `A / J`.
pub fn enumerate_prime_ideals(alg: &Algebra, limits: &Limits) -> Result<Vec<Ideal>> {
    let j = jacobson_radical(alg)?;
    let q = quotient_algebra(alg, &j)?;
    let qa = &q.algebra;
    let mut primes = Vec::new();
    for e in primitive_central_idempotents(qa, limits)? {
        let complement = qa.sub(&qa.one(), &e);
        // kernel of the block projection x -> x e
        let block_kernel: Vec<Vector> = (0..qa.dim())
            .map(|k| qa.mul(&qa.basis_element(k), &complement))
            .collect();
        let mut gens: Vec<Vector> = block_kernel.iter().map(|v| q.lift(v)).collect();
        gens.extend(j.subspace().basis().iter().cloned());
        let s = Subspace::span(alg.field(), alg.dim(), &gens);
        primes.push(Ideal::from_subspace(alg, s)?);
    }
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Definitional alpha-primeness: `I` is proper and no alpha-ideals `I', J'`
/// outside `I` have `I' J'` inside `I`. Returns such a pair when one exists.
pub fn alpha_prime_violation(
    alg: &Algebra,
    alpha: &Automorphism,
    ideal: &Ideal,
    limits: &Limits,
) -> Result<Option<(Ideal, Ideal)>> {
    if !is_alpha_ideal(ideal, alpha) {
        return Err(Error::NotAlphaIdeal);
    }
    let lattice = enumerate_alpha_ideals(alg, alpha, limits)?;
    let outside: Vec<&Ideal> = lattice.iter().filter(|i| !i.is_subset_of(ideal)).collect();
    for a in &outside {
        for b in &outside {
            if a.product(alg, b)?.is_subset_of(ideal) {
                return Ok(Some(((*a).clone(), (*b).clone())));
            }
        }
    }
    Ok(None)
}

/// Alpha-primeness by brute force over the alpha-ideal lattice.
pub fn is_alpha_prime_by_definition(
    alg: &Algebra,
    alpha: &Automorphism,
    ideal: &Ideal,
    limits: &Limits,
) -> Result<bool> {
    if ideal.is_whole() {
        if !is_alpha_ideal(ideal, alpha) {
            return Err(Error::NotAlphaIdeal);
        }
        return Ok(false);
    }
    Ok(alpha_prime_violation(alg, alpha, ideal, limits)?.is_none())
}

/// Alpha-primeness via orbits: `I` is alpha-prime iff it is the
/// intersection of the alpha-orbit of some prime ideal.
pub fn is_alpha_prime_by_orbits(
    alg: &Algebra,
    alpha: &Automorphism,
    ideal: &Ideal,
    limits: &Limits,
) -> Result<bool> {
    if !is_alpha_ideal(ideal, alpha) {
        return Err(Error::NotAlphaIdeal);
    }
    for p in enumerate_prime_ideals(alg, limits)? {
        if orbit_intersection(alg, &alpha_orbit(&p, alpha))? == *ideal {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Alpha-primeness with both methods. The orbit method always runs; the
/// definitional method runs when the algebra has at most `limits.enum_cap`
/// elements, and a disagreement is an error.
pub fn is_alpha_prime(
    alg: &Algebra,
    alpha: &Automorphism,
    ideal: &Ideal,
    limits: &Limits,
) -> Result<bool> {
    let by_orbits = is_alpha_prime_by_orbits(alg, alpha, ideal, limits)?;
    if limits.oracle_applies(alg.cardinality()) {
        let by_definition = is_alpha_prime_by_definition(alg, alpha, ideal, limits)?;
        if by_definition != by_orbits {
            return Err(Error::Inconsistent(format!(
                "alpha-prime: definition says {by_definition}, orbit characterization says {by_orbits}"
            )));
        }
    }
    Ok(by_orbits)
}
