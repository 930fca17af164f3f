//! Jacobson radical and semiprimeness of finite-dimensional algebras over
//! `F_p`.
//!
//! The production path is the iterated trace-functional method for algebras
//! over prime fields: with `l = floor(log_p n)` and
//! `g_i(x) = Tr(L(x)^(p^i)) / p^i mod p` computed on an integer lift of the
//! left regular representation,
//!
//! ```text
//! I_{-1} = A,   I_i = { x in I_{i-1} : g_i(x b) = 0 for all b in A },
//! ```
//!
//! and `I_l` is the radical. Each `g_i` is additive on `I_{i-1}`, so every
//! step is a kernel computation. The elementwise definition
//! `{x : 1 - xy is a unit for all y}` is kept as an oracle for small
//! algebras.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ideal::{is_stable, Ideal};
use crate::limits::Limits;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::quotient::quotient_algebra;

/// Jacobson radical, verified to be a nilpotent two-sided ideal whose
/// quotient has zero radical.
pub fn jacobson_radical(alg: &Algebra) -> Result<Ideal> {
    let j = radical_by_traces(alg);
    if !is_stable(j.subspace(), &alg.two_sided_matrices()) {
        return Err(Error::Inconsistent("radical is not a two-sided ideal".into()));
    }
    if !j.is_nilpotent(alg)? {
        return Err(Error::Inconsistent("radical is not nilpotent".into()));
    }
    if !j.is_zero() {
        let q = quotient_algebra(alg, &j)?;
        if !radical_by_traces(&q.algebra).is_zero() {
            return Err(Error::Inconsistent("quotient by the radical is not semisimple".into()));
        }
    }
    Ok(j)
}

/// `true` iff the radical vanishes. On algebras with at most
/// `limits.enum_cap` elements the answer is cross-checked against the
/// definition (no nonzero `x` with `x A x = 0`).
pub fn is_semiprime(alg: &Algebra, limits: &Limits) -> Result<bool> {
    let by_radical = jacobson_radical(alg)?.is_zero();
    if limits.oracle_applies(alg.cardinality()) {
        let by_definition = is_semiprime_by_definition(alg, limits)?;
        if by_definition != by_radical {
            return Err(Error::Inconsistent(format!(
                "radical test says semiprime = {by_radical}, element scan says {by_definition}"
            )));
        }
    }
    Ok(by_radical)
}

/// Element scan: semiprime iff no nonzero `x` has `x e_k x = 0` for every
/// basis element `e_k`.
pub fn is_semiprime_by_definition(alg: &Algebra, limits: &Limits) -> Result<bool> {
    Ok(square_zero_element(alg, limits)?.is_none())
}

/// A nonzero `x` with `x A x = 0`, if one exists.
pub fn square_zero_element(alg: &Algebra, limits: &Limits) -> Result<Option<Vector>> {
    let size = alg.cardinality();
    if size > limits.scan_cap {
        return Err(Error::too_large("algebra for element scan", size, limits.scan_cap));
    }
    let full = Subspace::full(alg.field(), alg.dim());
    for x in full.projective_elements() {
        let kills = (0..alg.dim())
            .all(|k| linalg::is_zero(&alg.mul(&alg.mul(&x, &alg.basis_element(k)), &x)));
        if kills {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Oracle: `{x : 1 - x y is a unit for every y}` by exhaustive scan.
/// Requires `|A|^2 <= limits.scan_cap`.
pub fn radical_by_quasi_regularity(alg: &Algebra, limits: &Limits) -> Result<Ideal> {
    let size = alg.cardinality();
    let work = size.saturating_mul(size);
    if work > limits.scan_cap {
        return Err(Error::too_large("quasi-regularity scan (|A|^2)", work, limits.scan_cap));
    }
    let full = Subspace::full(alg.field(), alg.dim());
    let all: Vec<Vector> = full.elements().collect();
    let one = alg.one();
    let members: Vec<Vector> = all
        .iter()
        .filter(|x| {
            all.iter()
                .all(|y| alg.is_unit(&alg.sub(&one, &alg.mul(x, y))).is_some())
        })
        .cloned()
        .collect();
    let s = Subspace::span(alg.field(), alg.dim(), &members);
    // The scan returns a set; it must already be a subspace.
    if s.cardinality() != members.len() as u64 {
        return Err(Error::Inconsistent("quasi-regular elements do not form a subspace".into()));
    }
    Ideal::from_subspace(alg, s)
}

/// The trace-functional iteration; see the module docs.
pub(crate) fn radical_by_traces(alg: &Algebra) -> Ideal {
    let n = alg.dim();
    let f = alg.field();
    let p = f.p() as u64;
    let mut levels = 0u32;
    while p.pow(levels + 1) <= n as u64 {
        levels += 1;
    }
    let mut current = Subspace::full(f, n);
    for i in 0..=levels {
        if current.is_zero() {
            break;
        }
        let modulus = p.pow(i + 1);
        let scale = p.pow(i);
        let basis = current.basis().to_vec();
        // functional[r][j] = g_i(x_r e_j)
        let mut functional = Matrix::zeros(f, basis.len(), n);
        for (r, x) in basis.iter().enumerate() {
            for j in 0..n {
                let z = alg.mul(x, &alg.basis_element(j));
                let t = lifted_trace_of_power(&alg.left_matrix(&z), p, i, modulus);
                debug_assert_eq!(t % scale, 0, "trace not divisible by p^i");
                functional.set(r, j, ((t / scale) % p) as u32);
            }
        }
        let kernel: Vec<Vector> = functional
            .left_nullspace()
            .iter()
            .map(|c| current.combine(c))
            .collect();
        current = Subspace::span(f, n, &kernel);
    }
    Ideal::from_subspace_unchecked(current)
}

/// `Tr(M^(p^i)) mod modulus` for the integer lift of `M` with entries in
/// `0..p`.
fn lifted_trace_of_power(m: &Matrix, p: u64, i: u32, modulus: u64) -> u64 {
    let n = m.rows();
    let mut cur: Vec<u64> = (0..n * n).map(|k| m.get(k / n, k % n) as u64).collect();
    for _ in 0..i {
        cur = int_pow(&cur, n, p, modulus);
    }
    (0..n).map(|d| cur[d * n + d]).sum::<u64>() % modulus
}

fn int_mul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
        for c in 0..n {
            out[r * n + c] %= modulus;
        }
    }
    out
}

fn int_pow(a: &[u64], n: usize, mut e: u64, modulus: u64) -> Vec<u64> {
    let mut result: Vec<u64> = (0..n * n).map(|k| u64::from(k / n == k % n)).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = int_mul(&result, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_mul(&base, &base, n, modulus);
        }
    }
    result
}
