//! Builders for Leavitt path algebras, crossed products by automorphisms,
//! corner skew Laurent polynomial rings and boundary-path groupoids.

mod base;
mod boundary;
mod corner;
mod crossed;
mod graph;
mod lpa;

pub use base::{BaseRing, LinearMap};
pub use boundary::boundary_path_groupoid;
pub use corner::{
    build_corner_skew, CornerSkew, CornerSkewRules, CornerSkewSpec, CsComb, CsRule, CsWord, Letter,
    RewriteStep,
};
pub use crossed::{build_crossed_product, CrossedProduct, CrossedProductSpec};
pub use graph::{Edge, Graph, Path};
pub use lpa::{
    build_cohn, build_lpa, lpa_normal_form, CriticalPairReport, Gen, Lpa, LpaRules, Word, WordComb,
};

use thiserror::Error;

use crate::exactlin::LinalgError;
use crate::graded::GradedError;
use crate::steinberg::GroupoidError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("name `{0}` is used twice")]
    DuplicateName(String),
    #[error("`{0}` is not a valid vertex or edge name")]
    BadName(String),
    #[error("cannot parse `{text}` at position {position}: {message}")]
    Parse {
        text: String,
        position: usize,
        message: String,
    },
    #[error("`{0}` has a term outside the degree window")]
    OutsideWindow(String),
    #[error("invalid base ring: {0}")]
    InvalidRing(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid corner skew data: {0}")]
    InvalidCornerSkew(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}
