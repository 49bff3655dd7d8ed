use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::BruteConfig;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, q, CancelToken, Echelon, Matrix, Rational, Subspace};

/// The matrix unit `E_{row,col}` of `gl(N)`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub fn unit(row: usize, col: usize) -> Self {
        Generator { row, col }
    }

    /// `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`, as a formal combination.
    pub fn bracket(self, other: Generator) -> Vec<(Generator, i64)> {
        let mut terms: BTreeMap<Generator, i64> = BTreeMap::new();
        if self.col == other.row {
            *terms
                .entry(Generator::unit(self.row, other.col))
                .or_default() += 1;
        }
        if other.col == self.row {
            *terms
                .entry(Generator::unit(other.row, self.col))
                .or_default() -= 1;
        }
        terms.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.row + 1, self.col + 1)
    }
}

/// A basis word of `(ℂᴺ*)^{⊗m} ⊗ (ℂᴺ)^{⊗n}`, 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorWord {
    pub dual: Vec<usize>,
    pub primal: Vec<usize>,
}

impl TensorWord {
    /// `gl(N)` weight: `-1` per dual index, `+1` per primal index.
    pub fn weight(&self, rank: usize) -> Vec<i64> {
        let mut w = vec![0i64; rank];
        for &i in &self.dual {
            w[i] -= 1;
        }
        for &i in &self.primal {
            w[i] += 1;
        }
        w
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dual
            .iter()
            .map(|i| format!("e{}*", i + 1))
            .chain(self.primal.iter().map(|i| format!("e{}", i + 1)))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("⊗"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Word(TensorWord),
    /// The `k`-th basis vector of a derived (restricted or quotient) module.
    Vector(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Word(w) => write!(f, "{w}"),
            BasisLabel::Vector(k) => write!(f, "v{k}"),
        }
    }
}

/// Shape of a module built by [`build_tensor_module`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorShape {
    pub rank: usize,
    pub dual: usize,
    pub primal: usize,
}

impl TensorShape {
    pub fn word(&self, mut index: usize) -> TensorWord {
        let len = self.dual + self.primal;
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = index % self.rank;
            index /= self.rank;
        }
        let primal = digits.split_off(self.dual);
        TensorWord {
            dual: digits,
            primal,
        }
    }

    pub fn index(&self, word: &TensorWord) -> usize {
        word.dual
            .iter()
            .chain(&word.primal)
            .fold(0, |acc, &d| acc * self.rank + d)
    }

    pub fn dim(&self) -> usize {
        self.rank.pow((self.dual + self.primal) as u32)
    }
}

/// Square sparse matrix stored by columns: `cols[j]` is the image of the
/// `j`-th basis vector as sorted `(row, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn from_columns(cols: Vec<Vec<(usize, Rational)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| {
                let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
                for (i, v) in c {
                    *merged.entry(i).or_insert_with(Rational::zero) += v;
                }
                merged.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { cols }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let cols = (0..m.ncols())
            .map(|j| {
                (0..m.nrows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { cols }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        SparseMatrix::from_columns(
            entries
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i, v.clone())])
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols.len()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn to_dense(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.iter().all(|(i, _)| *i == j))
    }

    /// Diagonal entry `(j, j)`.
    pub fn diagonal_entry(&self, j: usize) -> Rational {
        self.cols[j]
            .iter()
            .find(|(i, _)| *i == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, b) in col {
                    for (i, a) in &self.cols[*k] {
                        *acc.entry(*i).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { cols }
    }

    pub fn linear_combination(terms: &[(&SparseMatrix, Rational)], dim: usize) -> SparseMatrix {
        let cols = (0..dim)
            .map(|j| {
                terms
                    .iter()
                    .flat_map(|(m, c)| m.cols[j].iter().map(move |(i, v)| (*i, v * c)))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// A finite-dimensional module: a vector space with exact rational action
/// matrices indexed by `gl(N)` matrix units.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    dim: usize,
    action: Vec<(Generator, SparseMatrix)>,
    labels: Vec<BasisLabel>,
    shape: Option<TensorShape>,
}

/// Number of generator pairs whose bracket is spot-checked on construction.
const BRACKET_SAMPLE: usize = 24;
/// Number of basis columns each spot check looks at.
const COLUMN_SAMPLE: usize = 16;

impl ExplicitModule {
    pub fn new(
        dim: usize,
        action: Vec<(Generator, SparseMatrix)>,
        labels: Vec<BasisLabel>,
    ) -> Result<Self> {
        Self::with_shape(dim, action, labels, None)
    }

    fn with_shape(
        dim: usize,
        action: Vec<(Generator, SparseMatrix)>,
        labels: Vec<BasisLabel>,
        shape: Option<TensorShape>,
    ) -> Result<Self> {
        if labels.len() != dim {
            return Err(Error::SizeMismatch(format!(
                "{} labels for a {dim}-dimensional module",
                labels.len()
            )));
        }
        for (g, m) in &action {
            if m.dim() != dim || m.cols.iter().flatten().any(|(i, _)| *i >= dim) {
                return Err(Error::SizeMismatch(format!(
                    "action of {g} is not {dim} x {dim}"
                )));
            }
        }
        let module = ExplicitModule {
            dim,
            action,
            labels,
            shape,
        };
        module.spot_check_brackets()?;
        Ok(module)
    }

    /// Checks `[A_x, A_y] = A_{[x,y]}` on a deterministic sample of generator
    /// pairs and basis columns.
    fn spot_check_brackets(&self) -> Result<()> {
        let gens = self.generators();
        let pairs: Vec<(Generator, Generator)> = gens
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .filter(|(x, y)| x < y)
            .collect();
        if pairs.is_empty() {
            return Ok(());
        }
        let stride = (pairs.len() / BRACKET_SAMPLE).max(1);
        let col_stride = (self.dim / COLUMN_SAMPLE).max(1);
        for &(x, y) in pairs.iter().step_by(stride) {
            let bracket = x.bracket(y);
            let Some(expected) = bracket
                .iter()
                .map(|(g, c)| self.action_of(*g).ok().map(|m| (m, q(*c))))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            let ax = self.action_of(x)?;
            let ay = self.action_of(y)?;
            for j in (0..self.dim).step_by(col_stride) {
                let mut e = vec![Rational::zero(); self.dim];
                e[j] = Rational::one();
                let xy = ax.apply(&ay.apply(&e));
                let yx = ay.apply(&ax.apply(&e));
                let mut diff: Vec<Rational> = xy.iter().zip(&yx).map(|(a, b)| a - b).collect();
                for (m, c) in &expected {
                    for (i, v) in m.column(j) {
                        diff[*i] -= v * c;
                    }
                }
                if !is_zero_vec(&diff) {
                    return Err(Error::BracketViolation(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn shape(&self) -> Option<TensorShape> {
        self.shape
    }

    pub fn action(&self) -> &[(Generator, SparseMatrix)] {
        &self.action
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.action.iter().map(|(g, _)| *g).collect()
    }

    pub fn action_of(&self, g: Generator) -> Result<&SparseMatrix> {
        self.action
            .iter()
            .find(|(h, _)| *h == g)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }

    /// `Σ c_g A_g`.
    pub fn combination(&self, terms: &[(Generator, Rational)]) -> Result<SparseMatrix> {
        let mats = terms
            .iter()
            .map(|(g, c)| Ok((self.action_of(*g)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::linear_combination(&mats, self.dim))
    }

    /// The submodule `sub` as a module in its own right, in the coordinates
    /// of the stored basis of `sub`.
    pub fn restrict(&self, sub: &Subspace, cancel: &CancelToken) -> Result<ExplicitModule> {
        if sub.ambient() != self.dim {
            return Err(Error::SizeMismatch(
                "subspace lives in another module".into(),
            ));
        }
        let mut action = Vec::with_capacity(self.action.len());
        for (g, m) in &self.action {
            cancel.check()?;
            let cols = sub
                .basis()
                .iter()
                .map(|b| {
                    let image = m.apply(b);
                    let coords = sub.coordinates(&image).ok_or_else(|| Error::NotInvariant {
                        generator: g.to_string(),
                    })?;
                    Ok(coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect())
                })
                .collect::<Result<Vec<_>>>()?;
            action.push((*g, SparseMatrix { cols }));
        }
        let labels = (0..sub.dim()).map(BasisLabel::Vector).collect();
        ExplicitModule::new(sub.dim(), action, labels)
    }

    /// The subquotient `top / lower` (with `lower ⊆ top`, both invariant
    /// under `gens`) as a module over `gens`. Returns the module and the span
    /// of the chosen complement vectors, whose stored basis gives the
    /// coordinates.
    pub fn subquotient(
        &self,
        top: &Subspace,
        lower: &Subspace,
        gens: &[Generator],
        cancel: &CancelToken,
    ) -> Result<(ExplicitModule, Subspace)> {
        if !lower.is_subspace_of(top) {
            return Err(Error::NotAscending { step: 0 });
        }
        let complement = Subspace::span(self.dim, top.complement_of(lower), cancel)?;
        let mut action = Vec::with_capacity(gens.len());
        for g in gens {
            cancel.check()?;
            let m = self.action_of(*g)?;
            let cols = complement
                .basis()
                .iter()
                .map(|b| {
                    let image = lower.reduce(&m.apply(b));
                    let coords =
                        complement
                            .coordinates(&image)
                            .ok_or_else(|| Error::NotInvariant {
                                generator: g.to_string(),
                            })?;
                    Ok(coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect())
                })
                .collect::<Result<Vec<_>>>()?;
            action.push((*g, SparseMatrix { cols }));
        }
        let labels = (0..complement.dim()).map(BasisLabel::Vector).collect();
        Ok((
            ExplicitModule::new(complement.dim(), action, labels)?,
            complement,
        ))
    }

    pub fn is_invariant(&self, sub: &Subspace, gens: &[Generator]) -> Result<bool> {
        for g in gens {
            let m = self.action_of(*g)?;
            if !sub.basis().iter().all(|b| sub.contains(&m.apply(b))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest subspace containing `vectors` and stable under `gens`.
    pub fn generated_submodule(
        &self,
        vectors: &[Vec<Rational>],
        gens: &[Generator],
        cancel: &CancelToken,
    ) -> Result<Subspace> {
        let mats = gens
            .iter()
            .map(|g| self.action_of(*g))
            .collect::<Result<Vec<_>>>()?;
        let mut ech = Echelon::new(self.dim);
        let mut queue: Vec<Vec<Rational>> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            cancel.check()?;
            if !ech.push(v.clone()) {
                continue;
            }
            for m in &mats {
                queue.push(m.apply(&v));
            }
        }
        ech.into_subspace(cancel)
    }

    /// Joint kernel of the given generators.
    pub fn joint_kernel(&self, gens: &[Generator], cancel: &CancelToken) -> Result<Subspace> {
        let mut rows = Vec::new();
        for g in gens {
            rows.extend(self.action_of(*g)?.to_dense().into_rows());
        }
        let basis = crate::linalg::nullspace(rows, self.dim, cancel)?;
        Subspace::span(self.dim, basis, cancel)
    }
}

/// `(ℂᴺ*)^{⊗m} ⊗ (ℂᴺ)^{⊗n}` with the action of every matrix unit of
/// `gl(N)`. On `V` the unit acts by `E_ij e_k = δ_jk e_i`; on the dual, by
/// minus right multiplication of row vectors, so `E_ij e_k* = -δ_ki e_j*`.
pub fn build_tensor_module(
    rank: usize,
    m: usize,
    n: usize,
    cfg: &BruteConfig,
) -> Result<ExplicitModule> {
    if rank == 0 {
        return Err(Error::SizeMismatch("rank must be positive".into()));
    }
    let needed = (rank as u128)
        .checked_pow((m + n) as u32)
        .unwrap_or(u128::MAX);
    if needed > cfg.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }
    let shape = TensorShape {
        rank,
        dual: m,
        primal: n,
    };
    let dim = shape.dim();
    let words: Vec<TensorWord> = (0..dim).map(|i| shape.word(i)).collect();
    let mut action = Vec::with_capacity(rank * rank);
    for a in 0..rank {
        for b in 0..rank {
            cfg.cancel.check()?;
            let cols = words
                .iter()
                .map(|w| {
                    let mut col = Vec::new();
                    for (pos, &d) in w.dual.iter().enumerate() {
                        if d == a {
                            let mut t = w.clone();
                            t.dual[pos] = b;
                            col.push((shape.index(&t), q(-1)));
                        }
                    }
                    for (pos, &d) in w.primal.iter().enumerate() {
                        if d == b {
                            let mut t = w.clone();
                            t.primal[pos] = a;
                            col.push((shape.index(&t), q(1)));
                        }
                    }
                    col
                })
                .collect();
            action.push((Generator::unit(a, b), SparseMatrix::from_columns(cols)));
        }
    }
    let labels = words.into_iter().map(BasisLabel::Word).collect();
    ExplicitModule::with_shape(dim, action, labels, Some(shape))
}

/// Joint kernel of all `m·n` contractions pairing a dual tensorand with a
/// primal one.
pub fn traceless_subspace(module: &ExplicitModule, cancel: &CancelToken) -> Result<Subspace> {
    let shape = module.shape().ok_or(Error::NotTensorModule)?;
    if shape.dual == 0 || shape.primal == 0 {
        return Ok(Subspace::full(module.dim()));
    }
    let target = TensorShape {
        rank: shape.rank,
        dual: shape.dual - 1,
        primal: shape.primal - 1,
    };
    let tdim = target.dim();
    let mut rows = Vec::new();
    for i in 0..shape.dual {
        for j in 0..shape.primal {
            cancel.check()?;
            let mut block = vec![vec![Rational::zero(); module.dim()]; tdim];
            for (col, w) in (0..module.dim()).map(|c| (c, shape.word(c))) {
                if w.dual[i] != w.primal[j] {
                    continue;
                }
                let mut t = w.clone();
                t.dual.remove(i);
                t.primal.remove(j);
                block[target.index(&t)][col] += Rational::one();
            }
            rows.extend(block);
        }
    }
    let basis = crate::linalg::nullspace(rows, module.dim(), cancel)?;
    Subspace::span(module.dim(), basis, cancel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> BruteConfig {
        BruteConfig::default()
    }

    #[test]
    fn dual_action_sign_convention() {
        let m = build_tensor_module(2, 1, 0, &cfg()).unwrap();
        assert_eq!(m.dim(), 2);
        let e12 = m.action_of(Generator::unit(0, 1)).unwrap();
        // e1* ↦ -e2*, e2* ↦ 0
        assert_eq!(e12.column(0), &[(1, q(-1))]);
        assert!(e12.column(1).is_empty());
        let e11 = m.action_of(Generator::unit(0, 0)).unwrap();
        assert_eq!(e11.column(0), &[(0, q(-1))]);
    }

    #[test]
    fn pairing_is_invariant_under_traceless_generators() {
        let m = build_tensor_module(3, 1, 1, &cfg()).unwrap();
        assert_eq!(m.dim(), 9);
        let shape = m.shape().unwrap();
        let mut v = vec![Rational::zero(); 9];
        for i in 0..3 {
            v[shape.index(&TensorWord {
                dual: vec![i],
                primal: vec![i],
            })] = q(1);
        }
        for (g, a) in m.action() {
            let image = a.apply(&v);
            // the pairing is killed by every unit, diagonal ones included
            assert!(is_zero_vec(&image), "{g}");
        }
    }

    #[test]
    fn diagonal_eigenvalues_on_dual_square() {
        let m = build_tensor_module(2, 2, 0, &cfg()).unwrap();
        let e11 = m.action_of(Generator::unit(0, 0)).unwrap();
        assert!(e11.is_diagonal());
        let mut eig: Vec<Rational> = (0..4).map(|j| e11.diagonal_entry(j)).collect();
        eig.sort();
        assert_eq!(eig, vec![q(-2), q(-1), q(-1), q(0)]);
    }

    #[test]
    fn budget_is_enforced() {
        let small = BruteConfig {
            budget: 100,
            ..BruteConfig::default()
        };
        assert_eq!(
            build_tensor_module(5, 3, 0, &small).unwrap_err(),
            Error::BudgetExceeded {
                needed: 125,
                budget: 100
            }
        );
    }

    #[test]
    fn traceless_dimensions() {
        let token = CancelToken::new();
        let dims: Vec<usize> = [(3, 1, 1), (2, 1, 1), (3, 2, 1)]
            .iter()
            .map(|&(n, a, b)| {
                let m = build_tensor_module(n, a, b, &cfg()).unwrap();
                traceless_subspace(&m, &token).unwrap().dim()
            })
            .collect();
        // 27 - 6 for (3,2,1): the two contractions onto ℂ³* are jointly onto
        assert_eq!(dims, vec![8, 3, 21]);
    }

    #[test]
    fn traceless_subspace_is_invariant() {
        let token = CancelToken::new();
        let m = build_tensor_module(3, 2, 1, &cfg()).unwrap();
        let t = traceless_subspace(&m, &token).unwrap();
        assert!(m.is_invariant(&t, &m.generators()).unwrap());
        let r = m.restrict(&t, &token).unwrap();
        assert_eq!(r.dim(), 21);
    }

    #[test]
    fn bracket_violations_are_caught() {
        // E12 given the shape of E21
        let e11 = SparseMatrix::diagonal(&[q(1), q(0)]);
        let e12 = SparseMatrix::from_columns(vec![vec![(1, q(1))], vec![]]);
        let labels = vec![BasisLabel::Vector(0), BasisLabel::Vector(1)];
        let err = ExplicitModule::new(
            2,
            vec![(Generator::unit(0, 0), e11), (Generator::unit(0, 1), e12)],
            labels,
        )
        .unwrap_err();
        assert!(matches!(err, Error::BracketViolation(..)));
    }

    #[test]
    fn restrict_rejects_non_invariant_subspaces() {
        let token = CancelToken::new();
        let m = build_tensor_module(2, 1, 0, &cfg()).unwrap();
        let line = Subspace::coordinate(2, [1]);
        // E21 sends e2* to -e1*
        assert!(matches!(
            m.restrict(&line, &token),
            Err(Error::NotInvariant { .. })
        ));
    }
}
