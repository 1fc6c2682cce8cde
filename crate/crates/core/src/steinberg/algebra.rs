use crate::exactlin::{Field, SparseVec, Subspace};
use crate::graded::{GradedAlgebra, Window};

use super::{ArrowSet, FiniteGroupoid};

/// A finitely supported function on arrows, keyed by arrow index.
pub type SteinbergElement = SparseVec;

/// `(f * g)(γ) = Σ_{αβ = γ} f(α) g(β)`.
pub fn convolve(g: &FiniteGroupoid, f: &SteinbergElement, h: &SteinbergElement) -> SteinbergElement {
    let mut out = SparseVec::zero();
    for (a, x) in f.iter() {
        for (b, y) in h.iter() {
            if let Some(c) = g.compose(*a, *b) {
                out.add_at(c, &(x * y));
            }
        }
    }
    out
}

/// `1_B`.
pub fn indicator(field: Field, set: &ArrowSet) -> SteinbergElement {
    set.iter().map(|k| (*k, field.one())).collect()
}

pub fn check_bisection(g: &FiniteGroupoid, set: &ArrowSet) -> bool {
    g.is_bisection(set)
}

/// Restriction of `f` to `c⁻¹(n)`.
pub fn cocycle_component(g: &FiniteGroupoid, f: &SteinbergElement, n: i64) -> SteinbergElement {
    f.restricted(|k| g.degree(k) == n)
}

/// `span{1_γ : γ ∈ set}`.
pub fn arrow_span(field: Field, set: &ArrowSet) -> Subspace {
    let vecs: Vec<SparseVec> = set.iter().map(|k| SparseVec::unit(field, *k)).collect();
    Subspace::span(field, &vecs).expect("single field")
}

/// The convolution algebra graded by the cocycle, on the arrow basis.
pub fn steinberg_algebra(g: &FiniteGroupoid, field: Field) -> GradedAlgebra {
    let window = Window::default().covering(g.degrees());
    let labels = g
        .arrows()
        .iter()
        .map(|a| (a.name.clone(), a.degree))
        .collect();
    GradedAlgebra::from_fn("A_K(G)", field, window, labels, |a, b| {
        Some(match g.compose(a, b) {
            Some(c) => SparseVec::unit(field, c),
            None => SparseVec::zero(),
        })
    })
    .expect("arrow names are distinct and degrees lie in the window")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{boundary_path_groupoid, Graph};

    fn e_star() -> FiniteGroupoid {
        boundary_path_groupoid(&Graph::e_star()).unwrap()
    }

    #[test]
    fn single_composable_pair() {
        let g = e_star();
        let f = Field::Rational;
        let x = g.arrow_set(&["(v,-1,f)"]).unwrap();
        let y = g.arrow_set(&["(f,1,v)"]).unwrap();
        let out = convolve(&g, &indicator(f, &x), &indicator(f, &y));
        assert_eq!(out, indicator(f, &g.arrow_set(&["(v,0,v)"]).unwrap()));
    }

    #[test]
    fn unit_space_is_identity() {
        let g = e_star();
        let f = Field::Rational;
        let one = indicator(f, &g.units());
        let x = indicator(f, &g.arrow_set(&["(ef,1,g)", "(v,-2,eg)"]).unwrap());
        assert_eq!(convolve(&g, &one, &x), x);
        assert_eq!(convolve(&g, &x, &one), x);
    }

    #[test]
    fn bisections_and_components() {
        let g = e_star();
        assert!(check_bisection(&g, &g.units()));
        assert!(!check_bisection(&g, &g.arrow_set(&["(f,1,v)", "(g,1,v)"]).unwrap()));
        let a = steinberg_algebra(&g, Field::Rational);
        assert_eq!(a.degree_component(1).unwrap().len(), 6);
        let all = indicator(Field::Rational, &(0..g.len()).collect());
        assert!(cocycle_component(&g, &all, 5).is_zero());
    }
}
