//! Plain-text input documents, builders for every instance family, and reports.

mod build;
mod document;
mod report;

use thiserror::Error;

pub use build::{
    base_ring_from, corner_skew_from, crossed_product_from, graph_document, graph_from, graph_sections,
    groupoid_document, groupoid_from, groupoid_sections, htriple_from, instance_from, Instance, Settings,
};
pub use document::{list, DocKind, Document, Section};
pub use report::{emit, Format, Report};

use crate::graded::GradedError;
use crate::instances::InstanceError;
use crate::steinberg::GroupoidError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("empty document")]
    EmptyDocument,
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("missing [{section}] {key}")]
    Missing { section: String, key: String },
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
}

impl IoError {
    /// Parse-level problems, as opposed to failures while building an instance.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            IoError::EmptyDocument
                | IoError::Syntax { .. }
                | IoError::Missing { .. }
                | IoError::Semantic(_)
                | IoError::Instance(
                    InstanceError::UnknownVertex { .. }
                        | InstanceError::DuplicateName(_)
                        | InstanceError::BadName(_)
                        | InstanceError::Parse { .. }
                )
        )
    }
}
