//! JSON documents: ring specs, series, and ideal generator lists.
//!
//! Ring spec:
//!
//! ```json
//! {"field": {"p": 2}, "dim": 2, "basis": ["1", "t"], "unit": [1, 0],
//!  "mul": [[0, 0, [1, 0]], [0, 1, [0, 1]], [1, 0, [0, 1]]],
//!  "automorphism": [[1, 0], [0, 1]]}
//! ```
//!
//! `mul` entries omitted mean a zero product. Column `k` of `automorphism`
//! is the image of basis element `k`; it may also be `{"inner": [..]}` for
//! conjugation `x -> u x u^{-1}`, and defaults to the identity. The ring part
//! may be replaced by `{"matrix": {"k": 2, "p": 2}}` or
//! `{"product": [spec, spec, ...]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::laurent::SkewLaurent;
use crate::linalg::{Matrix, Vector};
use crate::series::{SkewContext, SkewSeries};

fn bad(msg: impl Into<String>) -> Error {
    Error::BadSpec(msg.into())
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("{what} must be a nonnegative integer")))
}

fn as_vector(v: &Value, len: usize, p: u32, what: &str) -> Result<Vector> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?;
    if arr.len() != len {
        return Err(bad(format!("{what} has length {}, expected {len}", arr.len())));
    }
    arr.iter()
        .map(|x| {
            x.as_i64()
                .map(|c| c.rem_euclid(p as i64) as u32)
                .ok_or_else(|| bad(format!("{what} entries must be integers")))
        })
        .collect()
}

/// Parses the ring part of a spec document.
pub fn parse_algebra(v: &Value) -> Result<Algebra> {
    let obj = v.as_object().ok_or_else(|| bad("ring spec must be a JSON object"))?;
    if let Some(m) = obj.get("matrix") {
        let k = as_usize(m.get("k").ok_or_else(|| bad("matrix shorthand needs k"))?, "matrix.k")?;
        let p = as_usize(m.get("p").ok_or_else(|| bad("matrix shorthand needs p"))?, "matrix.p")?;
        if k == 0 {
            return Err(bad("matrix.k must be at least 1"));
        }
        return Algebra::matrix_algebra(k, p as u32);
    }
    if let Some(parts) = obj.get("product") {
        let parts = parts.as_array().ok_or_else(|| bad("product must be an array"))?;
        let mut iter = parts.iter();
        let first = iter.next().ok_or_else(|| bad("product must not be empty"))?;
        let mut acc = parse_algebra(first)?;
        for part in iter {
            acc = Algebra::direct_product(&acc, &parse_algebra(part)?)?;
        }
        return Ok(acc);
    }
    let p = obj
        .get("field")
        .and_then(|f| f.get("p"))
        .ok_or_else(|| bad("missing field.p"))?;
    let p = p.as_u64().ok_or_else(|| bad("field.p must be an integer"))?;
    let field = PrimeField::new(u32::try_from(p).map_err(|_| Error::BadField(u32::MAX))?)?;
    let dim = as_usize(obj.get("dim").ok_or_else(|| bad("missing dim"))?, "dim")?;
    let names = match obj.get("basis") {
        Some(b) => b
            .as_array()
            .ok_or_else(|| bad("basis must be an array of strings"))?
            .iter()
            .map(|x| x.as_str().map(String::from).ok_or_else(|| bad("basis names must be strings")))
            .collect::<Result<Vec<_>>>()?,
        None => (0..dim).map(|i| format!("e{i}")).collect(),
    };
    if names.len() != dim {
        return Err(bad(format!("basis has {} names, expected {dim}", names.len())));
    }
    let unit = as_vector(obj.get("unit").ok_or_else(|| bad("missing unit"))?, dim, field.p(), "unit")?;
    let mut products = Vec::new();
    if let Some(mul) = obj.get("mul") {
        for entry in mul.as_array().ok_or_else(|| bad("mul must be an array"))? {
            let e = entry
                .as_array()
                .filter(|e| e.len() == 3)
                .ok_or_else(|| bad("mul entries must be [i, j, [coefficients]]"))?;
            let i = as_usize(&e[0], "mul index")?;
            let j = as_usize(&e[1], "mul index")?;
            let c = as_vector(&e[2], dim, field.p(), "mul coefficients")?;
            products.push((i, j, c));
        }
    }
    Algebra::new(field, names, unit, &products)
}

/// Parses an automorphism entry for `alg`; `None` means the identity.
pub fn parse_automorphism(alg: &Algebra, v: Option<&Value>) -> Result<Automorphism> {
    let v = match v {
        None | Some(Value::Null) => return Ok(Automorphism::identity(alg)),
        Some(v) => v,
    };
    let p = alg.field().p();
    if let Some(u) = v.get("inner") {
        let u = as_vector(u, alg.dim(), p, "inner")?;
        return Automorphism::inner(alg, &u);
    }
    let rows = v
        .as_array()
        .ok_or_else(|| bad("automorphism must be a dim x dim array"))?;
    if rows.len() != alg.dim() {
        return Err(bad(format!("automorphism has {} rows, expected {}", rows.len(), alg.dim())));
    }
    let rows = rows
        .iter()
        .map(|r| as_vector(r, alg.dim(), p, "automorphism row"))
        .collect::<Result<Vec<_>>>()?;
    Automorphism::new(alg, Matrix::from_rows(alg.field(), alg.dim(), &rows))
}

/// Parses a full spec document into a skew context.
pub fn parse_context(text: &str) -> Result<Arc<SkewContext>> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let alg = parse_algebra(&v)?;
    let alpha = parse_automorphism(&alg, v.get("automorphism"))?;
    SkewContext::new(Arc::new(alg), alpha)
}

/// The explicit form of an algebra (no shorthands).
pub fn algebra_to_value(alg: &Algebra) -> Value {
    let mut mul = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let c = alg.basis_product(i, j);
            if c.iter().any(|&x| x != 0) {
                mul.push(json!([i, j, c]));
            }
        }
    }
    json!({
        "field": {"p": alg.field().p()},
        "dim": alg.dim(),
        "basis": alg.basis_names(),
        "unit": alg.one(),
        "mul": mul,
    })
}

/// The explicit form of a context, automorphism included.
pub fn context_to_value(ctx: &SkewContext) -> Value {
    let mut v = algebra_to_value(ctx.algebra());
    let m = ctx.alpha().matrix();
    v["automorphism"] = json!((0..m.rows()).map(|r| m.row(r).to_vec()).collect::<Vec<_>>());
    v
}

/// `{"precision": N, "coeffs": [...]}`, with `"valuation"` for Laurent
/// series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    pub precision: usize,
    pub coeffs: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<i64>,
}

impl SeriesDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| bad(format!("invalid series document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series documents serialize")
    }

    fn coefficient_vectors(&self, ctx: &SkewContext) -> Result<Vec<Vector>> {
        if self.precision == 0 {
            return Err(bad("precision must be at least 1"));
        }
        if self.coeffs.len() != self.precision {
            return Err(bad(format!(
                "{} coefficients given for precision {}",
                self.coeffs.len(),
                self.precision
            )));
        }
        let p = ctx.algebra().field().p() as i64;
        let n = ctx.algebra().dim();
        self.coeffs
            .iter()
            .map(|c| {
                if c.len() != n {
                    Err(bad(format!("coefficient has length {}, expected {n}", c.len())))
                } else {
                    Ok(c.iter().map(|x| x.rem_euclid(p) as u32).collect())
                }
            })
            .collect()
    }

    pub fn to_series(&self, ctx: &Arc<SkewContext>) -> Result<SkewSeries> {
        if self.valuation.is_some() {
            return Err(bad("power series documents carry no valuation"));
        }
        SkewSeries::from_coeffs(ctx, self.coefficient_vectors(ctx)?)
    }

    pub fn to_laurent(&self, ctx: &Arc<SkewContext>) -> Result<SkewLaurent> {
        SkewLaurent::from_parts(ctx, self.valuation.unwrap_or(0), self.coefficient_vectors(ctx)?)
    }

    pub fn from_series(f: &SkewSeries) -> Self {
        Self {
            precision: f.precision(),
            coeffs: f
                .coeffs()
                .iter()
                .map(|c| c.iter().map(|&x| x as i64).collect())
                .collect(),
            valuation: None,
        }
    }

    /// Zero is written as one zero coefficient placed just below its
    /// precision.
    pub fn from_laurent(f: &SkewLaurent) -> Self {
        let n = f.context().algebra().dim();
        let (valuation, coeffs) = match f.valuation() {
            Ok(v) => (
                v,
                f.coeffs()
                    .iter()
                    .map(|c| c.iter().map(|&x| x as i64).collect())
                    .collect::<Vec<_>>(),
            ),
            Err(_) => (f.absolute_precision() - 1, vec![vec![0; n]]),
        };
        Self {
            precision: coeffs.len(),
            coeffs,
            valuation: Some(valuation),
        }
    }
}

/// Parses `"v1;v2;..."` with entries separated by commas or spaces.
pub fn parse_vectors(text: &str, dim: usize, p: u32) -> Result<Vec<Vector>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|part| {
            let coords = part
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<i64>()
                        .map(|x| x.rem_euclid(p as i64) as u32)
                        .map_err(|_| bad(format!("bad coordinate {s:?}")))
                })
                .collect::<Result<Vector>>()?;
            if coords.len() != dim {
                return Err(bad(format!("vector {part:?} has length {}, expected {dim}", coords.len())));
            }
            Ok(coords)
        })
        .collect()
}
