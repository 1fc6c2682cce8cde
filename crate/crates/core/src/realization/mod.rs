//! Checks that a graded algebra is generated by an R-system through `(R, I, J)`.

mod conditions;
mod verify;

use thiserror::Error;

pub use conditions::{
    check_condition_1, check_condition_2, check_condition_2_on, check_condition_3, check_condition_4,
    check_ideal_identity, Condition2, IdentityComparison,
};
pub use verify::{check_strongly_graded_realization, check_graded_uniqueness, verify_realization, StrongGradingReport, UniquenessReport, GradedMap, RealizationReport};

use crate::exactlin::Subspace;
use crate::graded::{GradedAlgebra, GradedError};

/// `R ⊆ A₀` with `I ⊆ A₁` and `J ⊆ A₋₁`, all as subspaces of `a`.
#[derive(Clone, Debug)]
pub struct RealizationData {
    pub a: GradedAlgebra,
    pub r: Subspace,
    pub i: Subspace,
    pub j: Subspace,
}

impl RealizationData {
    pub fn new(a: GradedAlgebra, r: Subspace, i: Subspace, j: Subspace) -> Self {
        RealizationData { a, r, i, j }
    }
}

#[derive(Debug, Error)]
pub enum RealizationError {
    #[error("map is not graded: {0}")]
    NotGraded(String),
    #[error("map is not multiplicative at {0}")]
    NotHomomorphism(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Field, SparseVec};
    use crate::graded::Window;
    use crate::verdict::Witness;

    /// `K·1 ⊕ span{x, i, j}` with every product among `x, i, j` zero.
    fn square_zero() -> GradedAlgebra {
        let f = Field::Rational;
        let labels = vec![("1", 0), ("x", 0), ("i", 1), ("j", -1)];
        GradedAlgebra::from_fn(
            "square-zero",
            f,
            Window::new(-1, 1, 4),
            labels.into_iter().map(|(l, d)| (l.to_string(), d)).collect(),
            |p, q| match (p, q) {
                (0, k) | (k, 0) => Some(SparseVec::unit(f, k)),
                _ => Some(SparseVec::zero()),
            },
        )
        .unwrap()
    }

    fn span(a: &GradedAlgebra, labels: &[&str]) -> Subspace {
        let v: Vec<_> = labels.iter().map(|l| a.basis_element(l).unwrap()).collect();
        Subspace::span(a.field(), &v).unwrap()
    }

    #[test]
    fn square_zero_fails_only_condition_4() {
        let a = square_zero();
        let d = RealizationData::new(a.clone(), span(&a, &["1", "x"]), span(&a, &["i"]), span(&a, &["j"]));
        assert!(check_condition_1(&d).passed());
        let c4 = check_condition_4(&d);
        assert!(c4.failed());
        let Some(Witness::Nonzero { element, .. }) = c4.witness else { panic!("witness") };
        assert_eq!(a.display(&element), "x");
    }

    #[test]
    fn escape_witness_replays() {
        let a = square_zero();
        let d = RealizationData::new(a.clone(), span(&a, &["x"]), span(&a, &["i"]), span(&a, &["j", "1"]));
        let c1 = check_condition_1(&d);
        assert!(c1.failed());
        let Some(Witness::Escape { left, right, .. }) = c1.witness else { panic!("witness") };
        let p = a.mul(&left, &right).unwrap();
        assert!(!d.i.contains(&p) || !d.r.contains(&p) || !d.j.contains(&p));
    }
}
