use crate::exactlin::SparseVec;

use super::{products_span, Element, GradedAlgebra, GradedError};

/// First failure found by [`check_grading`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingViolation {
    /// `label` occurs in `a·b` but has degree other than `|a| + |b|`.
    Degree { a: usize, b: usize, label: usize },
    /// `(a·b)·c ≠ a·(b·c)`.
    Associativity { a: usize, b: usize, c: usize },
}

#[derive(Clone, Debug)]
pub struct GradingReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub violation: Option<GradingViolation>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive graded multiplicativity and associativity over windowed labels.
/// Pairs and triples whose products leave the window are skipped.
pub fn check_grading(a: &GradedAlgebra) -> GradingReport {
    let n = a.dim();
    let mut report = GradingReport {
        pairs_checked: 0,
        triples_checked: 0,
        violation: None,
    };
    for i in 0..n {
        for j in 0..n {
            let Some(p) = a.basis_product(i, j) else { continue };
            report.pairs_checked += 1;
            let expected = a.label_degree(i) + a.label_degree(j);
            if let Some(label) = p.indices().find(|k| a.label_degree(*k) != expected) {
                report.violation = Some(GradingViolation::Degree { a: i, b: j, label });
                return report;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = a.basis_product(i, j) else { continue };
            for k in 0..n {
                let Some(jk) = a.basis_product(j, k) else { continue };
                let left = a.try_mul(ij, &a.unit_vector(k));
                let right = a.try_mul(&a.unit_vector(i), jk);
                let (Some(left), Some(right)) = (left, right) else { continue };
                report.triples_checked += 1;
                if left != right {
                    report.violation = Some(GradingViolation::Associativity { a: i, b: j, c: k });
                    return report;
                }
            }
        }
    }
    report
}

#[derive(Clone, Debug)]
pub struct StrongGrading {
    pub pairs_checked: usize,
    /// `(m, n, label)`: a label of degree `m + n` outside `span(A_m A_n)`.
    pub failure: Option<(i64, i64, usize)>,
}

impl StrongGrading {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Tests `span(A_m A_n) = A_{m+n}` for all `m, n` with `m, n, m + n` in the window.
pub fn check_strongly_graded(a: &GradedAlgebra) -> StrongGrading {
    let w = a.window();
    let mut out = StrongGrading {
        pairs_checked: 0,
        failure: None,
    };
    for m in w.degrees() {
        for n in w.degrees() {
            if !w.contains(m + n) {
                continue;
            }
            out.pairs_checked += 1;
            let span = products_span(a, &a.component_space(m), &a.component_space(n))
                .expect("products stay in the window");
            let target = a.degree_component(m + n).expect("in window");
            if let Some(missing) = target
                .into_iter()
                .find(|l| !span.contains(&a.unit_vector(*l)))
            {
                out.failure = Some((m, n, missing));
                return out;
            }
        }
    }
    out
}

/// Upper bound on degree-zero idempotent labels searched when no unit exists.
const MAX_IDEMPOTENT_LABELS: usize = 16;

/// A degree-zero idempotent `e` with `e x e = x` for every input.
///
/// The unit is tried first. Otherwise sums of pairwise orthogonal idempotent
/// degree-zero labels are searched, smallest families first.
pub fn check_graded_local_units(
    a: &GradedAlgebra,
    xs: &[Element],
) -> Result<Option<Element>, GradedError> {
    if xs.iter().any(|x| !a.is_homogeneous(x)) {
        return Err(GradedError::NotHomogeneous);
    }
    let absorbs = |e: &Element| -> bool {
        xs.iter().all(|x| {
            a.try_mul(e, x)
                .and_then(|ex| a.try_mul(&ex, e))
                .is_some_and(|exe| &exe == x)
        })
    };
    if let Some(unit) = a.unit() {
        return Ok(absorbs(&unit).then_some(unit));
    }
    let zero = a.degree_component(0).unwrap_or_default();
    let idempotents: Vec<usize> = zero
        .into_iter()
        .filter(|i| a.basis_product(*i, *i) == Some(&a.unit_vector(*i)))
        .take(MAX_IDEMPOTENT_LABELS)
        .collect();
    let orthogonal = |i: usize, j: usize| {
        a.basis_product(i, j).is_some_and(SparseVec::is_zero)
            && a.basis_product(j, i).is_some_and(SparseVec::is_zero)
    };
    let k = idempotents.len();
    let mut masks: Vec<u32> = (0..(1u32 << k)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let members: Vec<usize> = (0..k)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| idempotents[b])
            .collect();
        let pairwise = members
            .iter()
            .enumerate()
            .all(|(p, i)| members[p + 1..].iter().all(|j| orthogonal(*i, *j)));
        if !pairwise {
            continue;
        }
        let mut e = SparseVec::zero();
        for m in &members {
            e.add_at(*m, &a.field().one());
        }
        if absorbs(&e) {
            return Ok(Some(e));
        }
    }
    Ok(None)
}
