//! Parabolic subalgebras of `gl(N)`, socle filtrations and essentiality.
//!
//! The distinguished subspace is `D = span(e_1*, …, e_b*)` inside `ℂᴺ*`, the
//! finite stand-in for `V_* ⊆ V*`. Its stabilizer is spanned by the units
//! `E_ij` with `i ≥ b` or `j < b`; the nilradical is spanned by those with
//! `i ≥ b > j`, which send the complement into `D`.

use num_traits::{One, Zero};

use super::module::{ExplicitModule, Generator};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, CancelToken, Echelon, Matrix, Rational, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    rank: usize,
    b: usize,
    levi: Vec<Generator>,
    nilradical: Vec<Generator>,
}

impl ParabolicData {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the distinguished subspace.
    pub fn distinguished_dim(&self) -> usize {
        self.b
    }

    pub fn levi(&self) -> &[Generator] {
        &self.levi
    }

    pub fn nilradical(&self) -> &[Generator] {
        &self.nilradical
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.levi.iter().chain(&self.nilradical).copied().collect()
    }

    /// Raising operators of the Levi factor `gl(b) ⊕ gl(N-b)`.
    pub fn levi_raising(&self) -> Vec<Generator> {
        self.levi
            .iter()
            .copied()
            .filter(|g| g.row < g.col)
            .collect()
    }

    fn in_nilradical(&self, g: Generator) -> bool {
        g.row >= self.b && g.col < self.b
    }
}

pub fn parabolic(rank: usize, b: usize) -> Result<ParabolicData> {
    if b == 0 || b >= rank {
        return Err(Error::InvalidParabolic { rank, b });
    }
    let mut levi = Vec::new();
    let mut nilradical = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            let g = Generator::unit(i, j);
            if (i < b) == (j < b) {
                levi.push(g);
            } else if i >= b && j < b {
                nilradical.push(g);
            }
        }
    }
    let data = ParabolicData {
        rank,
        b,
        levi,
        nilradical,
    };
    // nilradical units are off-diagonal, so each squares to zero; check the
    // ideal property on the formal brackets
    for x in data.generators() {
        for &y in &data.nilradical {
            if x.bracket(y).iter().any(|(g, _)| !data.in_nilradical(*g)) {
                return Err(Error::BracketViolation(x.to_string(), y.to_string()));
            }
        }
    }
    Ok(data)
}

/// Ascending chain of subspaces, the last being the whole module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    steps: Vec<Subspace>,
}

impl Filtration {
    pub fn new(steps: Vec<Subspace>) -> Result<Self> {
        for (i, w) in steps.windows(2).enumerate() {
            if !w[0].is_subspace_of(&w[1]) {
                return Err(Error::NotAscending { step: i + 1 });
            }
        }
        Ok(Filtration { steps })
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `dim M_k - dim M_{k-1}`, with `M_{-1} = 0`.
    pub fn layer_dims(&self) -> Vec<usize> {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|s| {
                let d = s.dim() - prev;
                prev = s.dim();
                d
            })
            .collect()
    }
}

/// The Lie algebra whose module structure a socle is taken over.
#[derive(Clone, Debug)]
pub enum Algebra {
    Parabolic(ParabolicData),
    /// The Lie algebra generated by the given units (possibly none).
    Generators(Vec<Generator>),
}

impl Algebra {
    pub fn generators(&self) -> Vec<Generator> {
        match self {
            Algebra::Parabolic(p) => p.generators(),
            Algebra::Generators(g) => g.clone(),
        }
    }
}

/// `{v ∈ top : x v ∈ lower for every x in gens}`.
fn preimage_of_invariants(
    module: &ExplicitModule,
    top: &Subspace,
    lower: &Subspace,
    gens: &[Generator],
    cancel: &CancelToken,
) -> Result<Subspace> {
    let mats = gens
        .iter()
        .map(|g| module.action_of(*g))
        .collect::<Result<Vec<_>>>()?;
    // column c holds the images of basis vector c under every generator,
    // reduced modulo `lower` and concatenated
    let images: Vec<Vec<Rational>> = top
        .basis()
        .iter()
        .map(|t| {
            mats.iter()
                .flat_map(|m| lower.reduce(&m.apply(t)))
                .collect()
        })
        .collect();
    cancel.check()?;
    let k = top.dim();
    let rows: Vec<Vec<Rational>> = (0..mats.len() * module.dim())
        .map(|r| images.iter().map(|col| col[r].clone()).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    let kernel = nullspace(rows, k, cancel)?;
    let mut vectors: Vec<Vec<Rational>> = kernel.iter().map(|c| top.combine(c)).collect();
    vectors.extend(lower.basis().iter().cloned());
    Subspace::span(module.dim(), vectors, cancel)
}

/// Iterated nilradical invariants: `M_1 = M^n`, `M_{i+1}/M_i = (M/M_i)^n`.
pub fn socle_filtration_parabolic(
    module: &ExplicitModule,
    parabolic: &ParabolicData,
    cancel: &CancelToken,
) -> Result<Filtration> {
    let whole = Subspace::full(module.dim());
    let mut current = Subspace::zero(module.dim());
    let mut steps = Vec::new();
    while current.dim() < module.dim() {
        let next =
            preimage_of_invariants(module, &whole, &current, parabolic.nilradical(), cancel)?;
        if next.dim() == current.dim() {
            return Err(Error::NotNilpotent);
        }
        steps.push(next.clone());
        current = next;
    }
    if steps.is_empty() {
        steps.push(whole);
    }
    Filtration::new(steps)
}

/// Socle of `module` over `algebra`.
///
/// Over a parabolic this is the joint kernel of the nilradical. Otherwise it
/// is the annihilator of the Jacobson radical of the associative algebra `A`
/// generated by the action; in characteristic zero that radical is the
/// radical of the trace form `(a, b) ↦ tr(ab)` on `A`. The generic route
/// builds `A` explicitly and is meant for small modules.
pub fn socle(module: &ExplicitModule, algebra: &Algebra, cancel: &CancelToken) -> Result<Subspace> {
    match algebra {
        Algebra::Parabolic(p) => module.joint_kernel(p.nilradical(), cancel),
        Algebra::Generators(gens) => trace_form_socle(module, gens, cancel),
    }
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.rows().iter().flatten().cloned().collect()
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.nrows();
    let mut s = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.get(i, j), b.get(j, i));
            if !x.is_zero() && !y.is_zero() {
                s += x * y;
            }
        }
    }
    s
}

fn trace_form_socle(
    module: &ExplicitModule,
    gens: &[Generator],
    cancel: &CancelToken,
) -> Result<Subspace> {
    let d = module.dim();
    let mats = gens
        .iter()
        .map(|g| Ok(module.action_of(*g)?.to_dense()))
        .collect::<Result<Vec<_>>>()?;
    let mut ech = Echelon::new(d * d);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue = vec![Matrix::identity(d)];
    while let Some(a) = queue.pop() {
        cancel.check()?;
        if !ech.push(flatten(&a)) {
            continue;
        }
        for x in &mats {
            queue.push(x.mul(&a)?);
        }
        basis.push(a);
    }
    let gram: Vec<Vec<Rational>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| trace_of_product(a, b)).collect())
        .collect();
    let radical = nullspace(gram, basis.len(), cancel)?;
    let mut rows = Vec::new();
    for coeffs in radical {
        let mut j = Matrix::zeros(d, d);
        for (c, a) in coeffs.iter().zip(&basis) {
            if !c.is_zero() {
                j = Matrix::from_rows(
                    j.rows()
                        .iter()
                        .zip(a.rows())
                        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + c * y).collect())
                        .collect(),
                )?;
            }
        }
        rows.extend(j.into_rows());
    }
    let kernel = nullspace(rows, d, cancel)?;
    Subspace::span(d, kernel, cancel)
}

/// Whether `M^{p+1}/M^p` contains the socle of `M^{p+2}/M^p` for every `p`
/// (with `M^{-1} = 0`). For finite-length modules containing the socle is
/// the same as being essential.
pub fn is_essential_filtration(
    module: &ExplicitModule,
    filtration: &Filtration,
    algebra: &Algebra,
    cancel: &CancelToken,
) -> Result<bool> {
    let gens = algebra.generators();
    for (i, step) in filtration.steps().iter().enumerate() {
        if step.ambient() != module.dim() {
            return Err(Error::SizeMismatch(format!(
                "step {i} lives in another module"
            )));
        }
        if !module.is_invariant(step, &gens)? {
            return Err(Error::NotInvariant {
                generator: format!("some generator at step {i}"),
            });
        }
    }
    match filtration.steps().last() {
        Some(top) if top.dim() == module.dim() => {}
        _ => {
            return Err(Error::SizeMismatch(
                "filtration must end at the whole module".into(),
            ))
        }
    }
    let mut chain = vec![Subspace::zero(module.dim())];
    chain.extend(filtration.steps().iter().cloned());
    for w in chain.windows(3) {
        let (lower, mid, top) = (&w[0], &w[1], &w[2]);
        let soc = match algebra {
            Algebra::Parabolic(p) => {
                preimage_of_invariants(module, top, lower, p.nilradical(), cancel)?
            }
            Algebra::Generators(gens) => {
                let (quotient, complement) = module.subquotient(top, lower, gens, cancel)?;
                let s = trace_form_socle(&quotient, gens, cancel)?;
                let lifted: Vec<Vec<Rational>> =
                    s.basis().iter().map(|c| complement.combine(c)).collect();
                Subspace::span(module.dim(), lifted, cancel)?
            }
        };
        if !soc.is_subspace_of(mid) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The binary-word filtration of `(ℂᴺ*)^{⊗m}`: step `k` is spanned by the
/// words with at most `k` tensorands outside the distinguished block.
pub fn grade_filtration(module: &ExplicitModule, parabolic: &ParabolicData) -> Result<Filtration> {
    let shape = module.shape().ok_or(Error::NotTensorModule)?;
    let grades: Vec<usize> = (0..module.dim())
        .map(|i| {
            let b = parabolic.distinguished_dim();
            shape.word(i).dual.iter().filter(|&&k| k >= b).count()
        })
        .collect();
    let steps = (0..=shape.dual)
        .map(|k| {
            Subspace::coordinate(
                module.dim(),
                grades
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| g <= k)
                    .map(|(i, _)| i),
            )
        })
        .collect();
    Filtration::new(steps)
}

/// Number of simple Levi constituents in each layer: the dimension of the
/// Levi highest-weight vectors of the layer.
pub fn layer_constituent_counts(
    module: &ExplicitModule,
    filtration: &Filtration,
    parabolic: &ParabolicData,
    cancel: &CancelToken,
) -> Result<Vec<usize>> {
    let mut lower = Subspace::zero(module.dim());
    let mut counts = Vec::new();
    for top in filtration.steps() {
        let (layer, _) = module.subquotient(top, &lower, parabolic.levi(), cancel)?;
        counts.push(layer.joint_kernel(&parabolic.levi_raising(), cancel)?.dim());
        lower = top.clone();
    }
    Ok(counts)
}

/// The `0 ⊆ L ⊆ trivial ⊕ trivial` example over the zero algebra: `L` is an
/// invariant line that misses half of the socle.
pub fn trivial_pair_counterexample() -> Result<(ExplicitModule, Filtration)> {
    use super::module::BasisLabel;
    let module = ExplicitModule::new(
        2,
        Vec::new(),
        vec![BasisLabel::Vector(0), BasisLabel::Vector(1)],
    )?;
    let line = Subspace::span(
        2,
        vec![vec![Rational::one(), Rational::one()]],
        &CancelToken::new(),
    )?;
    let filtration = Filtration::new(vec![line, Subspace::full(2)])?;
    Ok((module, filtration))
}
