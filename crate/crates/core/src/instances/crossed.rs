use std::collections::BTreeMap;

use crate::exactlin::{SparseVec, Subspace};
use crate::graded::{check_strongly_graded, Element, GradedAlgebra, Window};
use crate::realization::RealizationData;

use super::{BaseRing, InstanceError, LinearMap};

/// Data for `R ×_φ Z`: a base ring and an automorphism.
#[derive(Clone, Debug)]
pub struct CrossedProductSpec {
    pub base: BaseRing,
    pub phi: LinearMap,
    pub window: Window,
}

impl CrossedProductSpec {
    /// `K^2` with the coordinate swap.
    pub fn swap_k2(field: crate::exactlin::Field, window: Window) -> Self {
        CrossedProductSpec {
            base: BaseRing::diagonal(field, 2),
            phi: LinearMap::new(vec![SparseVec::unit(field, 1), SparseVec::unit(field, 0)]),
            window,
        }
    }

    /// `K` with the identity: the Laurent polynomials.
    pub fn laurent(field: crate::exactlin::Field, window: Window) -> Self {
        CrossedProductSpec {
            base: BaseRing::scalars(field),
            phi: LinearMap::identity(field, 1),
            window,
        }
    }

    /// Checks that `phi` is a multiplicative bijection of the base ring.
    pub fn validate(&self) -> Result<LinearMap, InstanceError> {
        let d = self.base.dim();
        if self.phi.images.len() != d {
            return Err(InstanceError::NotAutomorphism(format!(
                "expected {d} images, found {}",
                self.phi.images.len()
            )));
        }
        self.base
            .check_multiplicative(&self.phi)
            .map_err(InstanceError::NotAutomorphism)?;
        self.phi
            .inverse(self.base.field())
            .ok_or_else(|| InstanceError::NotAutomorphism("map is not invertible".into()))
    }
}

/// The windowed crossed product with homogeneous basis `[b, k]`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    spec: CrossedProductSpec,
    algebra: GradedAlgebra,
    strongly_graded: bool,
}

/// Builds `[r1, k1][r2, k2] = [r1 φ^{k1}(r2), k1 + k2]` on the window.
pub fn build_crossed_product(spec: &CrossedProductSpec) -> Result<CrossedProduct, InstanceError> {
    let inverse = spec.validate()?;
    let base = &spec.base;
    let field = base.field();
    let d = base.dim();
    let w = spec.window;
    let span = (w.max_degree - w.min_degree).max(w.max_degree.abs()).max(w.min_degree.abs());
    let mut powers: BTreeMap<i64, LinearMap> = BTreeMap::new();
    powers.insert(0, LinearMap::identity(field, d));
    for k in 1..=span {
        let up = spec.phi.compose(&powers[&(k - 1)]);
        let down = inverse.compose(&powers[&(1 - k)]);
        powers.insert(k, up);
        powers.insert(-k, down);
    }
    let degrees: Vec<i64> = w.degrees().collect();
    let mut labels = Vec::new();
    for k in &degrees {
        for b in base.labels() {
            labels.push((format!("[{b},{k}]"), *k));
        }
    }
    let index = |b: usize, k: i64| ((k - w.min_degree) as usize) * d + b;
    let algebra = GradedAlgebra::from_fn(
        format!("{} x_phi Z", base.name()),
        field,
        w,
        labels,
        |x, y| {
            let (k1, b1) = (degrees[x / d], x % d);
            let (k2, b2) = (degrees[y / d], y % d);
            if !w.contains(k1 + k2) {
                return None;
            }
            let r = base.mul(&base.basis(b1), &powers[&k1].apply(&base.basis(b2)));
            Some(r.reindexed(|b| index(b, k1 + k2)))
        },
    )?;
    let strongly_graded = check_strongly_graded(&algebra).holds();
    Ok(CrossedProduct {
        spec: spec.clone(),
        algebra,
        strongly_graded,
    })
}

impl CrossedProduct {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn spec(&self) -> &CrossedProductSpec {
        &self.spec
    }

    pub fn strongly_graded(&self) -> bool {
        self.strongly_graded
    }

    /// The element `[r, k]`.
    pub fn element(&self, r: &SparseVec, k: i64) -> Element {
        let d = self.spec.base.dim();
        let min = self.spec.window.min_degree;
        r.reindexed(|b| ((k - min) as usize) * d + b)
    }

    /// The base-ring coordinate `r` of a degree-`k` element `[r, k]`.
    pub fn coordinate(&self, x: &Element, k: i64) -> SparseVec {
        let d = self.spec.base.dim();
        let offset = ((k - self.spec.window.min_degree) as usize) * d;
        x.restricted(|i| (offset..offset + d).contains(&i))
            .reindexed(|i| i - offset)
    }

    /// `R = A_0`, `I = A_1`, `J = A_{-1}`.
    pub fn realization_data(&self) -> RealizationData {
        RealizationData::new(
            self.algebra.clone(),
            self.algebra.component_space(0),
            self.algebra.component_space(1),
            self.algebra.component_space(-1),
        )
    }

    pub fn component(&self, k: i64) -> Subspace {
        self.algebra.component_space(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn swap_product_example() {
        let f = Field::Rational;
        let cp = build_crossed_product(&CrossedProductSpec::swap_k2(f, Window::default())).unwrap();
        let a = cp.algebra();
        let x = cp.element(&SparseVec::unit(f, 0), 1);
        assert!(a.mul(&x, &x).unwrap().is_zero());
        let y = cp.element(&SparseVec::unit(f, 1), 1);
        assert_eq!(a.mul(&x, &y).unwrap(), cp.element(&SparseVec::unit(f, 0), 2));
        assert!(cp.strongly_graded());
    }

    #[test]
    fn laurent_inverse_pair() {
        let f = Field::Rational;
        let cp = build_crossed_product(&CrossedProductSpec::laurent(f, Window::default())).unwrap();
        let one = SparseVec::unit(f, 0);
        let prod = cp.algebra().mul(&cp.element(&one, 1), &cp.element(&one, -1)).unwrap();
        assert_eq!(prod, cp.element(&one, 0));
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let f = Field::Rational;
        let mut spec = CrossedProductSpec::swap_k2(f, Window::default());
        spec.phi = LinearMap::new(vec![SparseVec::unit(f, 0), SparseVec::unit(f, 0)]);
        assert!(matches!(
            build_crossed_product(&spec),
            Err(InstanceError::NotAutomorphism(_))
        ));
    }
}
