//! Simple right ideal decompositions and Goldie rank of semisimple algebras.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ideal::RightIdeal;
use crate::limits::Limits;
use crate::module::{peel_simple_summands, uniform_dimension, uniform_dimension_oracle, FiniteModule};
use crate::radical::jacobson_radical;

/// `A = V_1 + ... + V_d` (direct) with every `V_i` a simple right ideal.
pub fn simple_right_ideal_decomposition(
    alg: &Algebra,
    limits: &Limits,
) -> Result<Vec<RightIdeal>> {
    if !jacobson_radical(alg)?.is_zero() {
        return Err(Error::NotSemiprime);
    }
    let regular = FiniteModule::regular(Arc::new(alg.clone()));
    let summands = peel_simple_summands(&regular, &regular.full(), limits)?;
    summands
        .into_iter()
        .map(|s| RightIdeal::from_subspace(alg, s))
        .collect()
}

/// Goldie rank of a semiprime algebra: the number of simple summands of the
/// regular right module.
///
/// Cross-checked against the socle-length uniform dimension of the regular
/// module and, for algebras with at most `limits.enum_cap` elements, against
/// the backtracking oracle.
pub fn goldie_rank(alg: &Algebra, limits: &Limits) -> Result<usize> {
    let d = simple_right_ideal_decomposition(alg, limits)?.len();
    let regular = FiniteModule::regular(Arc::new(alg.clone()));
    let udim = uniform_dimension(&regular, limits)?;
    if udim != d {
        return Err(Error::Inconsistent(format!(
            "decomposition has {d} summands but uniform dimension is {udim}"
        )));
    }
    if limits.oracle_applies(alg.cardinality()) {
        let oracle = uniform_dimension_oracle(&regular, limits)?;
        if oracle != d {
            return Err(Error::Inconsistent(format!(
                "decomposition has {d} summands but the oracle finds {oracle}"
            )));
        }
    }
    Ok(d)
}
