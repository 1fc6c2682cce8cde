use crate::exactlin::{combine, span_basis, Field, SparseVec, Subspace};

use crate::graded::{GradedAlgebra, Window};

use super::InstanceError;

/// A finite-dimensional unital algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct BaseRing {
    name: String,
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    one: SparseVec,
}

impl BaseRing {
    /// Validates associativity and finds the unit.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<SparseVec>>,
    ) -> Result<Self, InstanceError> {
        let name = name.into();
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(InstanceError::InvalidRing(format!("{name}: table is not {n}×{n}")));
        }
        let mut ring = BaseRing {
            name,
            field,
            labels,
            table,
            one: SparseVec::zero(),
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = ring.mul(&ring.table[i][j], &ring.basis(k));
                    let right = ring.mul(&ring.basis(i), &ring.table[j][k]);
                    if left != right {
                        return Err(InstanceError::InvalidRing(format!(
                            "{}: product is not associative on ({}, {}, {})",
                            ring.name, ring.labels[i], ring.labels[j], ring.labels[k]
                        )));
                    }
                }
            }
        }
        ring.one = ring
            .find_unit()
            .ok_or_else(|| InstanceError::InvalidRing(format!("{}: no unit", ring.name)))?;
        Ok(ring)
    }

    /// The field itself, basis `1`.
    pub fn scalars(field: Field) -> Self {
        BaseRing::new("K", field, vec!["1".into()], vec![vec![SparseVec::unit(field, 0)]])
            .expect("valid")
    }

    /// `K^n` with orthogonal idempotents `e1..en`.
    pub fn diagonal(field: Field, n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { SparseVec::unit(field, i) } else { SparseVec::zero() })
                    .collect()
            })
            .collect();
        BaseRing::new(format!("K^{n}"), field, labels, table).expect("valid")
    }

    /// `M_n(K)` with matrix units `E11..Enn` (row-major).
    pub fn matrices(field: Field, n: usize) -> Self {
        let labels = (0..n * n)
            .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
            .collect();
        let table = (0..n * n)
            .map(|a| {
                (0..n * n)
                    .map(|b| {
                        let (i, j) = (a / n, a % n);
                        let (k, l) = (b / n, b % n);
                        if j == k {
                            SparseVec::unit(field, i * n + l)
                        } else {
                            SparseVec::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        BaseRing::new(format!("M_{n}(K)"), field, labels, table).expect("valid")
    }

    fn find_unit(&self) -> Option<SparseVec> {
        let n = self.dim();
        let columns: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut col = SparseVec::zero();
                for b in 0..n {
                    col.axpy_shifted(&self.field.one(), &self.table[i][b], 2 * b * n);
                    col.axpy_shifted(&self.field.one(), &self.table[b][i], (2 * b + 1) * n);
                }
                col
            })
            .collect();
        let mut rhs = SparseVec::zero();
        for b in 0..n {
            rhs.add_at(2 * b * n + b, &self.field.one());
            rhs.add_at((2 * b + 1) * n + b, &self.field.one());
        }
        let basis: Vec<SparseVec> = (0..n).map(|i| self.basis(i)).collect();
        crate::exactlin::solve(&columns, &rhs)
            .ok()
            .flatten()
            .map(|c| combine(&c, &basis))
    }

    /// Parses a combination of basis labels such as `e1 - 2 e2`.
    pub fn parse_element(&self, text: &str) -> Result<SparseVec, InstanceError> {
        let labels = self.labels.iter().map(|l| (l.clone(), 0)).collect();
        let view = GradedAlgebra::from_fn(self.name.clone(), self.field, Window::new(0, 0, 1), labels, |i, j| {
            Some(self.table[i][j].clone())
        })?;
        Ok(view.parse_element(text)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.field, i)
    }

    pub fn one(&self) -> &SparseVec {
        &self.one
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.axpy(&(x * y), &self.table[*i][*j]);
            }
        }
        out
    }

    pub fn display(&self, x: &SparseVec) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .enumerate()
            .map(|(k, (i, c))| crate::exactlin::signed_term(c, &self.labels[*i], k == 0))
            .collect()
    }

    /// Checks that `map` (images of basis labels) is multiplicative.
    pub fn check_multiplicative(&self, map: &LinearMap) -> Result<(), String> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = map.apply(&self.table[i][j]);
                let rhs = self.mul(&map.apply(&self.basis(i)), &map.apply(&self.basis(j)));
                if lhs != rhs {
                    return Err(format!(
                        "map is not multiplicative on ({}, {})",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A linear map given by the images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub images: Vec<SparseVec>,
}

impl LinearMap {
    pub fn new(images: Vec<SparseVec>) -> Self {
        LinearMap { images }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap::new((0..n).map(|i| SparseVec::unit(field, i)).collect())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        combine(v, &self.images)
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap::new(inner.images.iter().map(|v| self.apply(v)).collect())
    }

    pub fn rank(&self) -> usize {
        span_basis(&self.images).expect("single field").len()
    }

    /// Inverse of a bijective map on an `n`-dimensional space.
    pub fn inverse(&self, field: Field) -> Option<LinearMap> {
        let n = self.images.len();
        if self.rank() != n {
            return None;
        }
        let images = (0..n)
            .map(|i| {
                crate::exactlin::in_span(&SparseVec::unit(field, i), &self.images)
                    .ok()
                    .flatten()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LinearMap::new(images))
    }

    /// Preimage of `v` inside the domain, when `v` lies in the image.
    pub fn preimage(&self, v: &SparseVec) -> Option<SparseVec> {
        crate::exactlin::in_span(v, &self.images).ok().flatten()
    }

    pub fn image(&self, field: Field) -> Subspace {
        Subspace::span(field, &self.images).expect("single field")
    }
}
