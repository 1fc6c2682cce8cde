use super::{combine, Echelon, Field, Insert, LinalgError, SparseVec};

/// The common field of all stored coordinates, `None` when every vector is zero.
fn common_field<'a>(
    vectors: impl IntoIterator<Item = &'a SparseVec>,
) -> Result<Option<Field>, LinalgError> {
    let mut field = None;
    for v in vectors {
        for f in v.fields() {
            match field {
                None => field = Some(f),
                Some(g) if g != f => return Err(LinalgError::DomainMismatch),
                Some(_) => {}
            }
        }
    }
    Ok(field)
}

/// Reduced row echelon basis of the span; empty for all-zero input.
pub fn span_basis(vectors: &[SparseVec]) -> Result<Vec<SparseVec>, LinalgError> {
    let Some(field) = common_field(vectors)? else {
        return Ok(Vec::new());
    };
    let mut ech = Echelon::new(field);
    for v in vectors {
        ech.insert(v);
    }
    Ok(ech.reduced_basis())
}

/// Coefficients `c` with `v = Σ c_k basis[k]`, or `None` when `v` is outside
/// the span. The coefficient vector is sparse, so `v = 0` yields the empty vector.
pub fn in_span(v: &SparseVec, basis: &[SparseVec]) -> Result<Option<SparseVec>, LinalgError> {
    let Some(field) = common_field(basis.iter().chain(std::iter::once(v)))? else {
        return Ok(Some(SparseVec::zero()));
    };
    if v.is_zero() {
        return Ok(Some(SparseVec::zero()));
    }
    let mut ech = Echelon::new(field);
    for b in basis {
        ech.insert(b);
    }
    let (rem, used) = ech.reduce(v);
    Ok(rem.is_zero().then_some(used))
}

/// Alias of [`in_span`] phrased as solving `Σ x_k columns[k] = rhs`.
pub fn solve(columns: &[SparseVec], rhs: &SparseVec) -> Result<Option<SparseVec>, LinalgError> {
    in_span(rhs, columns)
}

/// Basis of `{c : Σ c_k columns[k] = 0}`.
pub fn kernel(field: Field, columns: &[SparseVec]) -> Result<Vec<SparseVec>, LinalgError> {
    if let Some(f) = common_field(columns)? {
        if f != field {
            return Err(LinalgError::DomainMismatch);
        }
    }
    let mut ech = Echelon::new(field);
    let mut relations = Vec::new();
    for c in columns {
        if let Insert::Dependent(rel) = ech.insert(c) {
            relations.push(rel);
        }
    }
    Ok(relations)
}

/// Basis of `span(a) ∩ span(b)`.
pub fn span_intersect(a: &[SparseVec], b: &[SparseVec]) -> Result<Vec<SparseVec>, LinalgError> {
    let Some(field) = common_field(a.iter().chain(b))? else {
        return Ok(Vec::new());
    };
    let columns: Vec<SparseVec> = a.iter().chain(b).cloned().collect();
    let n = a.len();
    let common: Vec<SparseVec> = kernel(field, &columns)?
        .iter()
        .map(|rel| combine(&rel.restricted(|k| k < n), a))
        .collect();
    span_basis(&common)
}

/// A subspace stored by its reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    basis: Vec<SparseVec>,
    ech: Echelon,
}

impl Subspace {
    pub fn zero(field: Field) -> Self {
        Subspace {
            field,
            basis: Vec::new(),
            ech: Echelon::new(field),
        }
    }

    pub fn span(field: Field, vectors: &[SparseVec]) -> Result<Self, LinalgError> {
        if let Some(f) = common_field(vectors)? {
            if f != field {
                return Err(LinalgError::DomainMismatch);
            }
        }
        let basis = span_basis(vectors)?;
        let mut ech = Echelon::new(field);
        for b in &basis {
            ech.insert(b);
        }
        Ok(Subspace { field, basis, ech })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduced echelon basis, ordered by pivot.
    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.ech.contains(v)
    }

    /// Remainder of `v` modulo the subspace; zero iff `v` is contained.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.ech.reduce(v).0
    }

    /// Coordinates of `v` in [`Subspace::basis`], `None` if `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.ech.reduce(v);
        rem.is_zero().then_some(used)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<SparseVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.field, &all).expect("same field")
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let common = span_intersect(&self.basis, &other.basis).expect("same field");
        Subspace::span(self.field, &common).expect("same field")
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.basis == other.basis
    }
}

impl Eq for Subspace {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> SparseVec {
        let f = Field::Rational;
        SparseVec::from_dense(&v.iter().map(|x| f.from_i64(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn basis_examples() {
        assert!(span_basis(&[]).unwrap().is_empty());
        assert_eq!(span_basis(&[q(&[1, 0]), q(&[2, 0])]).unwrap(), vec![q(&[1, 0])]);
        assert_eq!(span_basis(&[q(&[1, 1]), q(&[1, -1])]).unwrap().len(), 2);
        let mixed = [q(&[1]), SparseVec::unit(Field::Prime(5), 0)];
        assert_eq!(span_basis(&mixed), Err(LinalgError::DomainMismatch));
    }

    #[test]
    fn membership_examples() {
        assert_eq!(in_span(&q(&[0, 0]), &[q(&[1, 0])]).unwrap(), Some(SparseVec::zero()));
        let c = in_span(&q(&[3, 0]), &[q(&[1, 0])]).unwrap().unwrap();
        assert_eq!(c.to_dense(Field::Rational, 1), vec![Field::Rational.from_i64(3)]);
        assert_eq!(in_span(&q(&[1, 1]), &[q(&[1, 0])]).unwrap(), None);
    }

    #[test]
    fn intersection_examples() {
        let a = [q(&[1, 0]), q(&[0, 1])];
        assert_eq!(span_intersect(&a, &a).unwrap(), span_basis(&a).unwrap());
        assert!(span_intersect(&[q(&[1, 0])], &[q(&[0, 1])]).unwrap().is_empty());
        assert_eq!(span_intersect(&a, &[q(&[1, 1])]).unwrap(), vec![q(&[1, 1])]);
    }

    #[test]
    fn kernel_relations_vanish() {
        let cols = [q(&[1, 2]), q(&[2, 4]), q(&[0, 1]), q(&[1, 3])];
        let ker = kernel(Field::Rational, &cols).unwrap();
        assert_eq!(ker.len(), 2);
        for rel in &ker {
            assert!(combine(rel, &cols).is_zero());
        }
    }

    fn arb_vectors(field: Field) -> impl Strategy<Value = Vec<SparseVec>> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..6).prop_map(move |rows| {
            rows.iter()
                .map(|r| SparseVec::from_dense(&r.iter().map(|x| field.from_i64(*x)).collect::<Vec<_>>()))
                .collect()
        })
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rational), Just(Field::Prime(3)), Just(Field::Prime(7))]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn dimension_formula((v, w) in arb_field().prop_flat_map(|f| (arb_vectors(f), arb_vectors(f)))) {
            let both: Vec<SparseVec> = v.iter().chain(&w).cloned().collect();
            let sum = span_basis(&both).unwrap().len();
            let cap = span_intersect(&v, &w).unwrap().len();
            let dv = span_basis(&v).unwrap().len();
            let dw = span_basis(&w).unwrap().len();
            prop_assert_eq!(sum + cap, dv + dw);
        }

        #[test]
        fn membership_matches_rank(
            (v, x) in arb_field().prop_flat_map(|f| (arb_vectors(f), arb_vectors(f)))
        ) {
            let basis = span_basis(&v).unwrap();
            for candidate in &x {
                let mut extended = basis.clone();
                extended.push(candidate.clone());
                let grows = span_basis(&extended).unwrap().len() > basis.len();
                let coeffs = in_span(candidate, &basis).unwrap();
                prop_assert_eq!(coeffs.is_some(), !grows);
                if let Some(c) = coeffs {
                    prop_assert_eq!(combine(&c, &basis), candidate.clone());
                }
            }
        }
    }
}
