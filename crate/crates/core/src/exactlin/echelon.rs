//! Incremental Gaussian elimination with combination tracking.

use std::collections::BTreeMap;

use super::{Field, SparseVec};

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    /// Coefficients of this row in terms of the inserted vectors.
    combo: SparseVec,
}

/// Row echelon form built one vector at a time. Every stored row has leading
/// coefficient one; the stored combinations express each row through the
/// vectors passed to [`Echelon::insert`], numbered in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<Row>,
    pivot_row: BTreeMap<usize, usize>,
    inserted: usize,
}

/// Result of inserting a vector.
#[derive(Clone, Debug)]
pub enum Insert {
    /// The vector was independent and became a new row.
    NewPivot(usize),
    /// The vector was dependent; the payload is a nonzero relation among the
    /// inserted vectors (coefficients by insertion number).
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Reduces `v`, returning the remainder and the combination of inserted
    /// vectors that was subtracted (`v = remainder + Σ combo_k * inserted_k`).
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut used = SparseVec::zero();
        let mut cursor = 0usize;
        loop {
            let next = rem
                .iter_from(cursor)
                .find(|(i, _)| self.pivot_row.contains_key(i))
                .map(|(i, c)| (i, c.clone()));
            let Some((pivot, coeff)) = next else { break };
            let row = &self.rows[self.pivot_row[&pivot]];
            rem.axpy(&-&coeff, &row.vec);
            used.axpy(&coeff, &row.combo);
            cursor = pivot + 1;
        }
        (rem, used)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts the next vector (numbered `self.inserted()`).
    pub fn insert(&mut self, v: &SparseVec) -> Insert {
        let index = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce(v);
        if rem.is_zero() {
            let mut relation = used.neg();
            relation.add_at(index, &self.field.one());
            return Insert::Dependent(relation);
        }
        let (pivot, lead) = rem.leading().map(|(i, c)| (i, c.clone())).expect("nonzero");
        let inv = lead.inverse().expect("nonzero pivot");
        let mut combo = used.neg();
        combo.add_at(index, &self.field.one());
        let row = Row {
            vec: rem.scaled(&inv),
            combo: combo.scaled(&inv),
        };
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        Insert::NewPivot(pivot)
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Basis in reduced row echelon form, ordered by pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = Vec::with_capacity(self.rows.len());
        // Back-substitute from the largest pivot down.
        let order: Vec<usize> = self.pivot_row.values().rev().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for r in order {
            let mut v = self.rows[r].vec.clone();
            let pivot = v.leading().expect("nonzero row").0;
            for (p, reduced) in done.iter() {
                if let Some(c) = v.get(*p).cloned() {
                    v.axpy(&-&c, reduced);
                }
            }
            done.insert(pivot, v);
        }
        rows.extend(done.into_values());
        rows
    }
}
