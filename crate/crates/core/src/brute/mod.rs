//! Explicit finite-rank modules over `gl(N)` and its parabolic subalgebras.

pub mod dump;
pub mod module;
pub mod parabolic;
pub mod weights;
pub mod young;

pub use module::{
    build_tensor_module, traceless_subspace, BasisLabel, ExplicitModule, Generator, SparseMatrix,
    TensorShape, TensorWord,
};
pub use parabolic::{
    grade_filtration, is_essential_filtration, layer_constituent_counts, parabolic, socle,
    socle_filtration_parabolic, trivial_pair_counterexample, Algebra, Filtration, ParabolicData,
};
pub use weights::{highest_weight_multiplicity, vandermonde_span, weight_decompose, Weight};
pub use young::{schur_module, young_project, YoungSymmetrizer};

use crate::linalg::CancelToken;

/// Default cap on the number of tensor basis words.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Clone, Debug)]
pub struct BruteConfig {
    pub budget: usize,
    pub cancel: CancelToken,
}

impl Default for BruteConfig {
    fn default() -> Self {
        BruteConfig {
            budget: DEFAULT_BUDGET,
            cancel: CancelToken::new(),
        }
    }
}

impl BruteConfig {
    pub fn with_budget(budget: usize) -> Self {
        BruteConfig {
            budget,
            ..Self::default()
        }
    }
}
