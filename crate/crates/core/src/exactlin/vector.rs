use std::collections::btree_map;
use std::collections::BTreeMap;

use super::{Field, Scalar};

/// Sparse vector over interned basis indices. Zero coordinates are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    coords: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_index` over `field`.
    pub fn unit(field: Field, index: usize) -> Self {
        Self::monomial(index, field.one())
    }

    pub fn monomial(index: usize, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_at(index, &coeff);
        v
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        values
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Dense coordinates `0..len` (missing entries are `field` zeros).
    pub fn to_dense(&self, field: Field, len: usize) -> Vec<Scalar> {
        (0..len)
            .map(|i| self.get(i).cloned().unwrap_or_else(|| field.zero()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.coords.get(&index)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, usize, Scalar> {
        self.coords.iter()
    }

    /// Coordinates with index at least `start`, in increasing order.
    pub fn iter_from(&self, start: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coords.range(start..).map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.keys().copied()
    }

    /// Smallest index with a nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.coords.iter().next().map(|(i, c)| (*i, c))
    }

    /// Field of the stored coordinates, if any.
    pub fn field(&self) -> Option<Field> {
        self.coords.values().next().map(Scalar::field)
    }

    pub(crate) fn fields(&self) -> impl Iterator<Item = Field> + '_ {
        self.coords.values().map(Scalar::field)
    }

    pub fn add_at(&mut self, index: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.coords.entry(index) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn axpy(&mut self, factor: &Scalar, other: &SparseVec) {
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_at(*i, &(factor * c));
        }
    }

    /// `self += factor * other`, with `other`'s indices shifted by `offset`.
    pub fn axpy_shifted(&mut self, factor: &Scalar, other: &SparseVec, offset: usize) {
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_at(i + offset, &(factor * c));
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::zero();
        }
        self.coords
            .iter()
            .map(|(i, c)| (*i, factor * c))
            .collect()
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_at(*i, c);
        }
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_at(*i, &(-c));
        }
        out
    }

    pub fn neg(&self) -> SparseVec {
        self.coords.iter().map(|(i, c)| (*i, -c)).collect()
    }

    /// Keeps the coordinates for which `keep` holds.
    pub fn restricted(&self, mut keep: impl FnMut(usize) -> bool) -> SparseVec {
        self.coords
            .iter()
            .filter(|(i, _)| keep(**i))
            .map(|(i, c)| (*i, c.clone()))
            .collect()
    }

    /// Re-indexes coordinates through `map`, summing collisions.
    pub fn reindexed(&self, mut map: impl FnMut(usize) -> usize) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, c) in self.iter() {
            out.add_at(map(*i), c);
        }
        out
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        let mut v = SparseVec::zero();
        for (i, c) in iter {
            v.add_at(i, &c);
        }
        v
    }
}

/// `Σ coeffs[k] * vectors[k]` for a sparse coefficient vector.
pub fn combine(coeffs: &SparseVec, vectors: &[SparseVec]) -> SparseVec {
    let mut out = SparseVec::zero();
    for (k, c) in coeffs.iter() {
        out.axpy(c, &vectors[*k]);
    }
    out
}
