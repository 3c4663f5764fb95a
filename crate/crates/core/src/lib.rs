//! Exact approximation ratios of `(β, β⁻)`-EDCS matching sparsifiers via a
//! factor-revealing LP, with tight-instance construction and verification.

pub mod certificate;
pub mod edcs;
pub mod error;
pub mod export;
pub mod graph;
pub mod instance;
pub mod lp;
pub mod matching;
pub mod profiles;
pub mod rational;
pub mod report;
pub mod roundtrip;
pub mod scalar;
pub mod simplex;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Edge, Matching};
pub use instance::{EdcsInstance, GraphFile};
pub use lp::LinearProgram;
pub use profiles::{EdgeProfile, Params, VertexProfile};
pub use scalar::{Rational, Scalar};

pub type ExactSolveResult = simplex::SolveResult<Rational>;
pub type FloatSolveResult = simplex::SolveResult<f64>;
pub type ExactAssignment = lp::Assignment<Rational>;
pub type FloatAssignment = lp::Assignment<f64>;
pub type ExactFeasibilityReport = lp::FeasibilityReport<Rational>;
pub type FloatFeasibilityReport = lp::FeasibilityReport<f64>;
