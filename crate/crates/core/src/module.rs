//! Finite right modules over finite-dimensional algebras, their submodule
//! lattices, and uniform dimension.

use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{close_under, spin, Matrix, Subspace, Vector};
use crate::radical::jacobson_radical;

/// A right module given by one action matrix per ring basis element:
/// `m * e_k = m * action[k]` on row vectors.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    ring: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl FiniteModule {
    /// Checks `action[i] * action[j] = sum_k c_ij^k action[k]` and that the
    /// unit acts as the identity.
    pub fn new(ring: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != ring.dim() {
            return Err(Error::BadSpec(format!(
                "{} action matrices for a ring of dimension {}",
                action.len(),
                ring.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::BadSpec("action matrices have the wrong shape".into()));
        }
        let module = Self { ring, dim, action };
        module.check_axioms()?;
        Ok(module)
    }

    pub fn regular(ring: Arc<Algebra>) -> Self {
        let action = ring.right_mul_matrices().to_vec();
        Self {
            dim: ring.dim(),
            ring,
            action,
        }
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.ring.dim();
        if !self.element_action(&self.ring.one()).is_identity() && self.dim > 0 {
            return Err(Error::BadSpec("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.element_action(self.ring.basis_product(i, j));
                if lhs != rhs {
                    return Err(Error::BadSpec(format!(
                        "module axiom fails for basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<Algebra> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn cardinality(&self) -> u64 {
        self.ring.field().size_of_space(self.dim)
    }

    /// Matrix of `m -> m x` for a ring element `x`.
    pub fn element_action(&self, x: &[u32]) -> Matrix {
        let f = self.ring.field();
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                acc = acc.add(&self.action[k].scale(c));
            }
        }
        acc
    }

    pub fn act(&self, m: &[u32], x: &[u32]) -> Vector {
        self.element_action(x).vec_mul(m)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.ring.field(), self.dim)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        crate::ideal::is_stable(s, &self.action)
    }

    /// Smallest submodule containing `gens`.
    pub fn generated_by(&self, gens: &[Vector]) -> Subspace {
        let seed = Subspace::span(self.ring.field(), self.dim, gens);
        close_under(&seed, &self.action)
    }

    pub fn cyclic(&self, v: &[u32]) -> Subspace {
        spin(self.ring.field(), v, &self.action)
    }

    /// The submodule `s` as a module in its own right, in the coordinates of
    /// its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> Result<FiniteModule> {
        if !self.is_submodule(s) {
            return Err(Error::BadSpec("subspace is not a submodule".into()));
        }
        let f = self.ring.field();
        let d = s.dim();
        let action = self
            .action
            .iter()
            .map(|a| {
                let rows: Vec<Vector> = s
                    .basis()
                    .iter()
                    .map(|b| {
                        s.coordinates(&a.vec_mul(b))
                            .expect("image lies in a stable subspace")
                    })
                    .collect();
                Matrix::from_rows(f, d, &rows)
            })
            .collect();
        Ok(FiniteModule {
            ring: self.ring.clone(),
            dim: d,
            action,
        })
    }

    /// `{m : m J = 0}` where `J` is the radical of the ring: the socle.
    pub fn socle(&self) -> Result<Subspace> {
        let j = jacobson_radical(&self.ring)?;
        let f = self.ring.field();
        if j.is_zero() || self.dim == 0 {
            return Ok(self.full());
        }
        let mats: Vec<Matrix> = j
            .subspace()
            .basis()
            .iter()
            .map(|x| self.element_action(x))
            .collect();
        let mut big = Matrix::zeros(f, self.dim, self.dim * mats.len());
        for (t, m) in mats.iter().enumerate() {
            for r in 0..self.dim {
                for c in 0..self.dim {
                    big.set(r, t * self.dim + c, m.get(r, c));
                }
            }
        }
        Ok(Subspace::span(f, self.dim, &big.left_nullspace()))
    }

    /// Every distinct nonzero cyclic submodule. Requires
    /// `|M| <= limits.enum_cap`.
    pub fn cyclic_submodules(&self, limits: &Limits) -> Result<Vec<Subspace>> {
        let size = self.cardinality();
        if size > limits.enum_cap {
            return Err(Error::too_large("module for enumeration", size, limits.enum_cap));
        }
        let mut seen: HashSet<Subspace> = HashSet::new();
        for v in self.full().projective_elements() {
            seen.insert(self.cyclic(&v));
        }
        let mut out: Vec<Subspace> = seen.into_iter().collect();
        out.sort_by(|a, b| (a.dim(), a.basis()).cmp(&(b.dim(), b.basis())));
        Ok(out)
    }

    /// Every submodule, as the closure of the cyclic submodules under sums.
    /// Requires `|M| <= limits.enum_cap`.
    pub fn enumerate_submodules(&self, limits: &Limits) -> Result<Vec<Subspace>> {
        let cyclics = self.cyclic_submodules(limits)?;
        let zero = Subspace::zero(self.ring.field(), self.dim);
        let mut all: HashSet<Subspace> = HashSet::new();
        all.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(cur) = frontier.pop() {
            for c in &cyclics {
                if c.is_subspace_of(&cur) {
                    continue;
                }
                let s = cur.sum(c);
                if all.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        let mut out: Vec<Subspace> = all.into_iter().collect();
        out.sort_by(|a, b| (a.dim(), a.basis()).cmp(&(b.dim(), b.basis())));
        Ok(out)
    }
}

/// Splits a semisimple submodule `within` into simple summands.
///
/// Repeatedly takes the cyclic submodule of least dimension generated by a
/// vector outside the part already covered; ties go to the lexicographically
/// smallest generator. Such a cyclic submodule is simple, so it meets the
/// covered part trivially. Requires `|within| <= limits.scan_cap`.
pub fn peel_simple_summands(
    module: &FiniteModule,
    within: &Subspace,
    limits: &Limits,
) -> Result<Vec<Subspace>> {
    let size = within.cardinality();
    if size > limits.scan_cap {
        return Err(Error::too_large("semisimple part for peeling", size, limits.scan_cap));
    }
    let mut candidates: Vec<(usize, Vector, Subspace)> = within
        .projective_elements()
        .map(|v| {
            let c = module.cyclic(&v);
            (c.dim(), v, c)
        })
        .collect();
    candidates.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let mut covered = Subspace::zero(within.field(), within.ambient());
    let mut summands = Vec::new();
    for (_, v, c) in candidates {
        if covered == *within {
            break;
        }
        if covered.contains(&v) {
            continue;
        }
        if !c.is_subspace_of(within) {
            return Err(Error::Inconsistent("peeled part is not semisimple".into()));
        }
        let next = covered.sum(&c);
        if next.dim() != covered.dim() + c.dim() {
            return Err(Error::Inconsistent(
                "minimal cyclic submodule meets the covered part".into(),
            ));
        }
        covered = next;
        summands.push(c);
    }
    if covered != *within {
        return Err(Error::Inconsistent("peeling did not exhaust the submodule".into()));
    }
    Ok(summands)
}

/// Uniform dimension as the composition length of the socle.
pub fn uniform_dimension(module: &FiniteModule, limits: &Limits) -> Result<usize> {
    if module.dim() == 0 {
        return Ok(0);
    }
    let soc = module.socle()?;
    Ok(peel_simple_summands(module, &soc, limits)?.len())
}

/// Oracle: the largest number of nonzero cyclic submodules whose sum is
/// direct, by backtracking. Requires `|M| <= limits.enum_cap`.
///
/// Any independent family can be shrunk to one of the same size made of
/// minimal cyclic submodules, so only those are searched.
pub fn uniform_dimension_oracle(module: &FiniteModule, limits: &Limits) -> Result<usize> {
    if module.dim() == 0 {
        return Ok(0);
    }
    let cyclics = module.cyclic_submodules(limits)?;
    let minimal: Vec<Subspace> = cyclics
        .iter()
        .filter(|c| {
            !cyclics
                .iter()
                .any(|d| d.dim() < c.dim() && d.is_subspace_of(c))
        })
        .cloned()
        .collect();
    let min_dim = minimal.iter().map(Subspace::dim).min().unwrap_or(1);
    let mut best = 0;
    let zero = Subspace::zero(module.ring().field(), module.dim());
    backtrack(&minimal, 0, &zero, 0, min_dim, module.dim(), &mut best);
    Ok(best)
}

fn backtrack(
    cands: &[Subspace],
    start: usize,
    sum: &Subspace,
    count: usize,
    min_dim: usize,
    total: usize,
    best: &mut usize,
) {
    *best = (*best).max(count);
    if count + (total - sum.dim()) / min_dim <= *best {
        return;
    }
    for (i, c) in cands.iter().enumerate().skip(start) {
        let next = sum.sum(c);
        if next.dim() == sum.dim() + c.dim() {
            backtrack(cands, i + 1, &next, count + 1, min_dim, total, best);
        }
    }
}
