//! Exact finite-dimensional *-algebras `M_{n1} ⊕ … ⊕ M_{ns}` over the
//! Gaussian rationals, their partitions of unity and abelian fragments.

pub mod algebra;
pub mod format;
pub mod lattice;
pub mod linear;
pub mod partition;
pub mod scalar;
pub mod spectral;

pub use algebra::{jordan_product, AlgElement, FinDimAlgebra, Matrix};
pub use format::{parse_algebra_file, AlgebraFile};
pub use lattice::{generated_projection_lattice, projection_join, projection_meet, projection_oml};
pub use linear::{commutant, double_commutant, generated_algebra, LinearMap, Span};
pub use partition::{set_partitions, AbelianFragment, PartitionOfUnity};
pub use scalar::{GaussScalar, ParseScalarError};
pub use spectral::{atoms_of_abelian, spectral_decompose, SpectralElement};

use thiserror::Error;

use crate::oml::OmlError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatalgError {
    #[error("summand dimensions {0:?} must be a non-empty list of positive sizes")]
    InvalidDims(Vec<usize>),
    #[error("elements belong to different algebras")]
    ParentMismatch,
    #[error("expected {expected} coefficients, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("{0} is not a projection")]
    NotProjection(String),
    #[error("a partition of unity may not contain the zero projection")]
    ZeroAtom,
    #[error("projections {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("projections do not sum to the identity")]
    NotUnity,
    #[error("inconsistent linear data: {0}")]
    InconsistentLinearData(String),
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("`{0}` and `{1}` are the same partition")]
    DuplicatePartition(String, String),
    #[error("the fragment must contain the trivial partition")]
    MissingTrivial,
    #[error("the fragment is not closed under coarsening: missing {0}")]
    NotCoarseningClosed(String),
    #[error("elements do not commute pairwise")]
    NotAbelian,
    #[error("element is not self-adjoint")]
    NotSelfAdjoint,
    #[error("spectrum is not rational")]
    NonRationalSpectrum,
    #[error("repeated eigenvalue")]
    RepeatedEigenvalue,
    #[error("generated lattice exceeds {0} elements")]
    LatticeTooLarge(usize),
    #[error("projection set is not closed under complement")]
    NotComplementClosed,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Oml(#[from] OmlError),
}

pub type Result<T> = std::result::Result<T, MatalgError>;
