//! Built-in test contexts.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::Result;
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::series::SkewContext;

/// `F_p[t] / (t^2)` with basis `1, t`.
pub fn dual_numbers(p: u32) -> Result<Algebra> {
    Algebra::new(
        PrimeField::new(p)?,
        vec!["1".into(), "t".into()],
        vec![1, 0],
        &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])],
    )
}

/// A named context from the built-in suite.
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub ctx: Arc<SkewContext>,
}

fn entry(name: &str, alg: &Arc<Algebra>, alpha: Automorphism) -> Result<Entry> {
    Ok(Entry {
        name: name.to_string(),
        ctx: SkewContext::new(alg.clone(), alpha)?,
    })
}

fn untwisted(name: &str, alg: &Arc<Algebra>) -> Entry {
    Entry {
        name: name.to_string(),
        ctx: SkewContext::untwisted(alg.clone()),
    }
}

/// The built-in suite, in a fixed order.
pub fn builtin() -> Result<Vec<Entry>> {
    let f2 = Arc::new(Algebra::matrix_algebra(1, 2)?);
    let f3 = Arc::new(Algebra::matrix_algebra(1, 3)?);
    let f2xf2 = Arc::new(Algebra::direct_product(&f2, &f2)?);
    let swap = Automorphism::new(
        &f2xf2,
        Matrix::from_columns(f2xf2.field(), 2, &[vec![0, 1], vec![1, 0]]),
    )?;
    let m2f2 = Arc::new(Algebra::matrix_algebra(2, 2)?);
    let m2f3 = Arc::new(Algebra::matrix_algebra(2, 3)?);
    let conj2 = Automorphism::inner(&m2f2, &[1, 1, 0, 1])?;
    let conj3 = Automorphism::inner(&m2f2, &[0, 1, 1, 1])?;
    let conj_f3 = Automorphism::inner(&m2f3, &[1, 1, 0, 1])?;
    let m2xf2 = Arc::new(Algebra::direct_product(&m2f2, &f2)?);
    let conj_x_id = Automorphism::product(&m2xf2, &conj2, &Automorphism::identity(&f2))?;
    let dual = Arc::new(dual_numbers(2)?);
    let m2xdual = Arc::new(Algebra::direct_product(&m2f2, &dual)?);
    let conj_x_dual = Automorphism::product(&m2xdual, &conj3, &Automorphism::identity(&dual))?;

    Ok(vec![
        untwisted("F2", &f2),
        untwisted("F3", &f3),
        entry("F2xF2/swap", &f2xf2, swap)?,
        untwisted("F2xF2/id", &f2xf2),
        untwisted("M2(F2)/id", &m2f2),
        entry("M2(F2)/conj[[1,1],[0,1]]", &m2f2, conj2.clone())?,
        entry("M2(F2)/conj[[0,1],[1,1]]", &m2f2, conj3.clone())?,
        untwisted("M2(F3)/id", &m2f3),
        entry("M2(F3)/conj[[1,1],[0,1]]", &m2f3, conj_f3)?,
        untwisted("M2(F2)xF2/id", &m2xf2),
        entry("M2(F2)xF2/conj[[1,1],[0,1]]", &m2xf2, conj_x_id)?,
        untwisted("F2[t]/(t^2)", &dual),
        untwisted("M2(F2)xF2[t]/(t^2)/id", &m2xdual),
        entry("M2(F2)xF2[t]/(t^2)/conj[[0,1],[1,1]]", &m2xdual, conj_x_dual)?,
    ])
}

/// Looks up a built-in context by name.
pub fn lookup(name: &str) -> Result<Option<Entry>> {
    Ok(builtin()?.into_iter().find(|e| e.name == name))
}
