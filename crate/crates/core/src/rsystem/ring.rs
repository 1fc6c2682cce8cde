use crate::exactlin::{kernel, Field, SparseVec, Subspace};
use crate::graded::{Element, GradedAlgebra};

use super::RSystemError;

/// A finite-dimensional ring on a fixed basis; not necessarily unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl FiniteRing {
    pub fn new(field: Field, labels: Vec<String>, table: Vec<Vec<SparseVec>>) -> Self {
        FiniteRing { field, labels, table }
    }

    /// `K` with basis `1`.
    pub fn scalars(field: Field) -> Self {
        FiniteRing::new(field, vec!["1".into()], vec![vec![SparseVec::unit(field, 0)]])
    }

    /// A subring `r` of `a`, on the RREF basis of `r`; also returns that basis.
    pub fn from_subspace(a: &GradedAlgebra, r: &Subspace) -> Result<(Self, Vec<Element>), RSystemError> {
        let basis = r.basis().to_vec();
        let mut table = Vec::with_capacity(basis.len());
        for x in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for y in &basis {
                let xy = a.mul(x, y)?;
                let coords = r.coordinates(&xy).ok_or_else(|| {
                    RSystemError::Precondition(format!(
                        "R is not closed under products: {} · {}",
                        a.display(x),
                        a.display(y)
                    ))
                })?;
                row.push(coords);
            }
            table.push(row);
        }
        let labels = basis.iter().map(|x| a.display(x)).collect();
        Ok((FiniteRing::new(a.field(), labels, table), basis))
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

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
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

    /// The ring as a bimodule over itself.
    pub fn regular_bimodule(&self) -> Bimodule {
        let n = self.dim();
        Bimodule {
            labels: self.labels.clone(),
            left: self.table.clone(),
            right: (0..n).map(|m| (0..n).map(|r| self.table[m][r].clone()).collect()).collect(),
        }
    }

    pub fn full_space(&self) -> Subspace {
        let vecs: Vec<SparseVec> = (0..self.dim()).map(|i| self.basis(i)).collect();
        Subspace::span(self.field, &vecs).expect("single field")
    }

    pub fn is_ideal(&self, j: &Subspace) -> bool {
        j.basis().iter().all(|x| {
            (0..self.dim()).all(|r| {
                j.contains(&self.mul(&self.basis(r), x)) && j.contains(&self.mul(x, &self.basis(r)))
            })
        })
    }

    /// `{r ∈ R : r·x = x·r = 0 for all x ∈ j}`.
    pub fn perp(&self, j: &Subspace) -> Subspace {
        let n = self.dim();
        let columns: Vec<SparseVec> = (0..n)
            .map(|r| {
                let mut col = SparseVec::zero();
                for (k, x) in j.basis().iter().enumerate() {
                    col.axpy_shifted(&self.field.one(), &self.mul(&self.basis(r), x), 2 * k * n);
                    col.axpy_shifted(&self.field.one(), &self.mul(x, &self.basis(r)), (2 * k + 1) * n);
                }
                col
            })
            .collect();
        let found = kernel(self.field, &columns).expect("single field");
        Subspace::span(self.field, &found).expect("single field")
    }
}

/// An `R`-bimodule on a fixed basis: `left[r][m] = r·m`, `right[m][r] = m·r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub labels: Vec<String>,
    pub left: Vec<Vec<SparseVec>>,
    pub right: Vec<Vec<SparseVec>>,
}

impl Bimodule {
    /// A subspace `m` of `a` stable under the ring `r` (with basis `r_basis`) on both sides.
    pub fn from_subspace(
        a: &GradedAlgebra,
        r_basis: &[Element],
        m: &Subspace,
    ) -> Result<(Self, Vec<Element>), RSystemError> {
        let basis = m.basis().to_vec();
        let coords = |x: &Element, y: &Element, left: bool| -> Result<SparseVec, RSystemError> {
            let p = if left { a.mul(x, y)? } else { a.mul(y, x)? };
            m.coordinates(&p).ok_or_else(|| {
                RSystemError::Precondition(format!("module is not stable: {}", a.display(&p)))
            })
        };
        let left = r_basis
            .iter()
            .map(|r| basis.iter().map(|x| coords(r, x, true)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let right = basis
            .iter()
            .map(|x| r_basis.iter().map(|r| coords(r, x, false)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let labels = basis.iter().map(|x| a.display(x)).collect();
        Ok((Bimodule { labels, left, right }, basis))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn act_left(&self, r: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, x) in r.iter() {
            for (k, y) in m.iter() {
                out.axpy(&(x * y), &self.left[*i][*k]);
            }
        }
        out
    }

    pub fn act_right(&self, m: &SparseVec, r: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (k, x) in m.iter() {
            for (i, y) in r.iter() {
                out.axpy(&(x * y), &self.right[*k][*i]);
            }
        }
        out
    }
}

/// `M ⊗_R N` as a quotient of the free tensor product; quotient basis vectors
/// are the non-pivot free tensors `m_a ⊗ n_b`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: Bimodule,
    /// `(a, b)` for each quotient basis vector.
    pub factors: Vec<(usize, usize)>,
    relations: Subspace,
    position: Vec<Option<usize>>,
    right_dim: usize,
}

impl TensorProduct {
    pub fn new(ring: &FiniteRing, m: &Bimodule, n: &Bimodule, cap: usize) -> Result<Self, RSystemError> {
        let field = ring.field();
        let (dm, dn) = (m.dim(), n.dim());
        let free = dm * dn;
        if free > cap {
            return Err(RSystemError::Capacity { needed: free, cap });
        }
        let pure = |x: &SparseVec, y: &SparseVec| -> SparseVec {
            let mut out = SparseVec::zero();
            for (a, s) in x.iter() {
                for (b, t) in y.iter() {
                    out.add_at(a * dn + b, &(s * t));
                }
            }
            out
        };
        let mut rels = Vec::new();
        for a in 0..dm {
            for r in 0..ring.dim() {
                for b in 0..dn {
                    let lhs = pure(&m.right[a][r], &SparseVec::unit(field, b));
                    let rhs = pure(&SparseVec::unit(field, a), &n.left[r][b]);
                    let rel = lhs.sub(&rhs);
                    if !rel.is_zero() {
                        rels.push(rel);
                    }
                }
            }
        }
        let relations = Subspace::span(field, &rels)?;
        let pivots: std::collections::BTreeSet<usize> =
            relations.basis().iter().filter_map(|v| v.leading().map(|(i, _)| i)).collect();
        let free_basis: Vec<usize> = (0..free).filter(|k| !pivots.contains(k)).collect();
        let mut position = vec![None; free];
        for (j, k) in free_basis.iter().enumerate() {
            position[*k] = Some(j);
        }
        let factors: Vec<(usize, usize)> = free_basis.iter().map(|k| (k / dn, k % dn)).collect();
        let mut tp = TensorProduct {
            module: Bimodule {
                labels: factors
                    .iter()
                    .map(|(a, b)| format!("({})⊗({})", m.labels[*a], n.labels[*b]))
                    .collect(),
                left: Vec::new(),
                right: Vec::new(),
            },
            factors,
            relations,
            position,
            right_dim: dn,
        };
        let left = (0..ring.dim())
            .map(|r| {
                tp.factors
                    .iter()
                    .map(|(a, b)| tp.class_of(&pure(&m.left[r][*a], &SparseVec::unit(field, *b))))
                    .collect()
            })
            .collect();
        let right = tp
            .factors
            .iter()
            .map(|(a, b)| {
                (0..ring.dim())
                    .map(|r| tp.class_of(&pure(&SparseVec::unit(field, *a), &n.right[*b][r])))
                    .collect()
            })
            .collect();
        tp.module.left = left;
        tp.module.right = right;
        Ok(tp)
    }

    /// Quotient coordinates of a free tensor.
    pub fn class_of(&self, free: &SparseVec) -> SparseVec {
        let rem = self.relations.reduce(free);
        rem.iter()
            .map(|(k, c)| (self.position[*k].expect("remainders avoid pivots"), c.clone()))
            .collect()
    }

    /// Quotient coordinates of `m ⊗ n`.
    pub fn pure_class(&self, m: &SparseVec, n: &SparseVec) -> SparseVec {
        let mut free = SparseVec::zero();
        for (a, s) in m.iter() {
            for (b, t) in n.iter() {
                free.add_at(a * self.right_dim + b, &(s * t));
            }
        }
        self.class_of(&free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_tensor_is_one_dimensional() {
        let k = FiniteRing::scalars(Field::Rational);
        let m = k.regular_bimodule();
        let t = TensorProduct::new(&k, &m, &m, 100).unwrap();
        assert_eq!(t.module.dim(), 1);
    }

    #[test]
    fn orthogonal_idempotents_kill_mixed_tensors() {
        // R = K², M = M·e1, N = e2·N: M ⊗_R N = 0.
        let f = Field::Rational;
        let e = |i: usize| SparseVec::unit(f, i);
        let z = SparseVec::zero;
        let ring = FiniteRing::new(f, vec!["e1".into(), "e2".into()], vec![vec![e(0), z()], vec![z(), e(1)]]);
        let m = Bimodule {
            labels: vec!["m".into()],
            left: vec![vec![e(0)], vec![z()]],
            right: vec![vec![e(0), z()]],
        };
        let n = Bimodule {
            labels: vec!["n".into()],
            left: vec![vec![z()], vec![e(0)]],
            right: vec![vec![z(), e(0)]],
        };
        assert_eq!(TensorProduct::new(&ring, &m, &n, 100).unwrap().module.dim(), 0);
        assert!(matches!(
            TensorProduct::new(&ring, &m, &n, 0),
            Err(RSystemError::Capacity { .. })
        ));
    }
}
