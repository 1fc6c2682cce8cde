//! Finite discrete groupoids with a cocycle, their graded convolution
//! algebras, and the H-triple verifiers.

mod algebra;
mod decompose;
mod groupoid;
mod htriple;

pub use algebra::{
    arrow_span, check_bisection, cocycle_component, convolve, indicator, steinberg_algebra,
    SteinbergElement,
};
pub use decompose::{decompose_indicator, BisectionChoice, Decomposition, FactorOrder, IndicatorTerm};
pub use groupoid::{Arrow, ArrowSet, FiniteGroupoid};
pub use htriple::{
    check_htriple_generation, check_htriple_hypothesis, check_htriple_products, check_unperforated,
    compare_inverses, e_star_htriple, product_closure, render_factorization, steinberg_annihilator,
    steinberg_realization_data, AnnihilatorComparison, HTriple, InverseComparison,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("arrow `{0}` is declared twice")]
    DuplicateArrow(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("groupoid axiom fails: {0}")]
    Axiom(String),
    #[error("cocycle is not additive on ({left}, {right})")]
    Cocycle { left: String, right: String },
    #[error("arrow `{arrow}` does not have degree {expected}")]
    WrongDegree { arrow: String, expected: i64 },
    #[error("{{{0}}} is not a bisection")]
    NotBisection(String),
    #[error("arrow `{0}` is not a product of the given sets")]
    NotGenerated(String),
    #[error("H-triple hypothesis fails: {0}")]
    Hypothesis(String),
}
