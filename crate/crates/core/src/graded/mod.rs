//! Z-graded algebras given by windowed structure constants on homogeneous basis labels.

mod checks;
mod subspaces;

pub use checks::{
    check_graded_local_units, check_grading, check_strongly_graded, GradingReport,
    GradingViolation, StrongGrading,
};
pub use subspaces::{
    annihilator_meets_perp, left_annihilator, perp_ideal, products_span, subring_generated,
    Closure, GeneratedSpan, SubspaceSpec,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::exactlin::{signed_term, Field, LinalgError, SparseVec, Subspace};

/// A formal linear combination of basis labels, keyed by label index.
pub type Element = SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("degree {degree} lies outside the window {min}..={max}")]
    WindowExceeded { degree: i64, min: i64, max: i64 },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot parse element `{0}`")]
    BadElement(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Degree window and word-length bound shared by every exhaustive check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub min_degree: i64,
    pub max_degree: i64,
    pub max_word_len: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            min_degree: -4,
            max_degree: 4,
            max_word_len: 8,
        }
    }
}

impl Window {
    pub fn new(min_degree: i64, max_degree: i64, max_word_len: usize) -> Self {
        Window {
            min_degree,
            max_degree,
            max_word_len,
        }
    }

    pub fn contains(&self, degree: i64) -> bool {
        (self.min_degree..=self.max_degree).contains(&degree)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.max_degree
    }

    /// The smallest window containing `self` and every degree in `degrees`.
    pub fn covering(self, degrees: impl IntoIterator<Item = i64>) -> Self {
        let mut w = self;
        for d in degrees {
            w.min_degree = w.min_degree.min(d);
            w.max_degree = w.max_degree.max(d);
        }
        w
    }

    fn exceeded(&self, degree: i64) -> GradedError {
        GradedError::WindowExceeded {
            degree,
            min: self.min_degree,
            max: self.max_degree,
        }
    }
}

/// A graded algebra truncated to a degree window.
///
/// Every basis label is homogeneous. `table[i][j]` is the normal form of the
/// product of labels `i` and `j`, or `None` when the product falls outside
/// the window.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    name: String,
    field: Field,
    window: Window,
    labels: Vec<String>,
    degrees: Vec<i64>,
    index: HashMap<String, usize>,
    table: Vec<Vec<Option<SparseVec>>>,
}

impl GradedAlgebra {
    /// Builds the structure-constant table from `product(i, j)`. Labels whose
    /// degree lies outside `window` are rejected.
    pub fn from_fn(
        name: impl Into<String>,
        field: Field,
        window: Window,
        labels: Vec<(String, i64)>,
        mut product: impl FnMut(usize, usize) -> Option<SparseVec>,
    ) -> Result<Self, GradedError> {
        let mut index = HashMap::new();
        for (k, (label, degree)) in labels.iter().enumerate() {
            if !window.contains(*degree) {
                return Err(window.exceeded(*degree));
            }
            if index.insert(label.clone(), k).is_some() {
                return Err(GradedError::DuplicateLabel(label.clone()));
            }
        }
        let n = labels.len();
        let table = (0..n)
            .map(|i| (0..n).map(|j| product(i, j)).collect())
            .collect();
        let (labels, degrees) = labels.into_iter().unzip();
        Ok(GradedAlgebra {
            name: name.into(),
            field,
            window,
            labels,
            degrees,
            index,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The basis element with the given label.
    pub fn basis_element(&self, label: &str) -> Result<Element, GradedError> {
        self.index_of(label)
            .map(|i| SparseVec::unit(self.field, i))
            .ok_or_else(|| GradedError::UnknownLabel(label.to_string()))
    }

    pub fn unit_vector(&self, i: usize) -> Element {
        SparseVec::unit(self.field, i)
    }

    /// Basis labels of degree `n`.
    pub fn degree_component(&self, n: i64) -> Result<Vec<usize>, GradedError> {
        if !self.window.contains(n) {
            return Err(self.window.exceeded(n));
        }
        Ok((0..self.dim()).filter(|i| self.degrees[*i] == n).collect())
    }

    /// The degree-`n` component as a subspace (zero outside the window).
    pub fn component_space(&self, n: i64) -> Subspace {
        let vectors: Vec<SparseVec> = (0..self.dim())
            .filter(|i| self.degrees[*i] == n)
            .map(|i| self.unit_vector(i))
            .collect();
        Subspace::span(self.field, &vectors).expect("single field")
    }

    /// The whole windowed algebra as a subspace.
    pub fn full_space(&self) -> Subspace {
        let vectors: Vec<SparseVec> = (0..self.dim()).map(|i| self.unit_vector(i)).collect();
        Subspace::span(self.field, &vectors).expect("single field")
    }

    /// Product of two basis labels, `None` when it leaves the window.
    pub fn basis_product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.table[i][j].as_ref()
    }

    /// Bilinear extension of the table; `None` if any needed product leaves the window.
    pub fn try_mul(&self, a: &Element, b: &Element) -> Option<Element> {
        let mut out = SparseVec::zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let p = self.table[*i][*j].as_ref()?;
                out.axpy(&(x * y), p);
            }
        }
        Some(out)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, GradedError> {
        self.try_mul(a, b).ok_or_else(|| {
            let degree = a
                .indices()
                .flat_map(|i| b.indices().map(move |j| (i, j)))
                .find(|(i, j)| self.table[*i][*j].is_none())
                .map(|(i, j)| self.degrees[i] + self.degrees[j])
                .unwrap_or(self.window.max_degree + 1);
            self.window.exceeded(degree)
        })
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, x: &Element) -> Option<i64> {
        let mut degrees = x.indices().map(|i| self.degrees[i]);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, x: &Element) -> bool {
        x.is_zero() || self.degree_of(x).is_some()
    }

    /// Homogeneous components of `x`; they partition its terms.
    pub fn degree_components(&self, x: &Element) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (i, c) in x.iter() {
            out.entry(self.degrees[*i]).or_default().add_at(*i, c);
        }
        out
    }

    /// Human-readable form such as `ee* - 2 u`.
    pub fn display(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.iter()
            .enumerate()
            .map(|(k, (i, c))| signed_term(c, &self.labels[*i], k == 0))
            .collect()
    }

    /// Parses `2 u + 1/2 ee* - (f,0,g)`: signed terms, each an optional scalar
    /// followed by a basis label. Parentheses protect signs inside labels.
    pub fn parse_element(&self, text: &str) -> Result<Element, GradedError> {
        let bad = || GradedError::BadElement(text.to_string());
        let mut out = SparseVec::zero();
        for (negative, term) in split_signed_terms(text).ok_or_else(bad)? {
            if term == "0" {
                continue;
            }
            let (coeff, label) = match term.split_once(char::is_whitespace) {
                Some((c, rest)) if self.index_of(term).is_none() => {
                    (self.field.parse_scalar(c)?, rest.trim())
                }
                _ => (self.field.one(), term),
            };
            let idx = self
                .index_of(label)
                .ok_or_else(|| GradedError::UnknownLabel(label.to_string()))?;
            let coeff = if negative { -coeff } else { coeff };
            out.add_at(idx, &coeff);
        }
        Ok(out)
    }

    /// Same algebra with product `i·j` replaced by `value`.
    pub fn with_product_override(&self, i: usize, j: usize, value: Option<SparseVec>) -> Self {
        let mut out = self.clone();
        out.table[i][j] = value;
        out.name = format!("{} (product {}·{} overridden)", self.name, self.labels[i], self.labels[j]);
        out
    }

    /// Same table with a different word-length bound for generated spans.
    pub fn with_word_len(&self, max_word_len: usize) -> Self {
        let mut out = self.clone();
        out.window.max_word_len = max_word_len;
        out
    }

    /// Same ring with every label placed in degree zero.
    pub fn with_trivial_grading(&self) -> Self {
        let mut out = self.clone();
        out.degrees = vec![0; self.dim()];
        out.window.min_degree = out.window.min_degree.min(0);
        out.window.max_degree = out.window.max_degree.max(0);
        out.name = format!("{} (trivially graded)", self.name);
        out
    }

    /// The multiplicative identity if the windowed algebra has one.
    pub fn unit(&self) -> Option<Element> {
        let zero = self.component_space(0);
        let n = self.dim();
        // e·b = b and b·e = b for every basis label b, as one linear system.
        let columns: Vec<SparseVec> = zero
            .basis()
            .iter()
            .map(|z| {
                let mut col = SparseVec::zero();
                for b in 0..n {
                    let bv = self.unit_vector(b);
                    let left = self.try_mul(z, &bv)?;
                    let right = self.try_mul(&bv, z)?;
                    col.axpy_shifted(&self.field.one(), &left, 2 * b * n);
                    col.axpy_shifted(&self.field.one(), &right, (2 * b + 1) * n);
                }
                Some(col)
            })
            .collect::<Option<_>>()?;
        let mut rhs = SparseVec::zero();
        for b in 0..n {
            rhs.add_at(2 * b * n + b, &self.field.one());
            rhs.add_at((2 * b + 1) * n + b, &self.field.one());
        }
        let coeffs = crate::exactlin::solve(&columns, &rhs).ok()??;
        Some(crate::exactlin::combine(&coeffs, zero.basis()))
    }
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {} (dim {}, degrees {}..={})",
            self.name,
            self.field,
            self.dim(),
            self.window.min_degree,
            self.window.max_degree
        )
    }
}

/// Splits `a - b + c` into `(negative, term)` pairs. A sign is an operator
/// only at the start or after whitespace or another sign, and never inside
/// parentheses, so labels such as `t^-1` or `(v,-1,f)` stay intact.
fn split_signed_terms(text: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut start = 0usize;
    let mut prev: Option<char> = None;
    for (pos, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-'
                if depth == 0
                    && prev.is_none_or(|p| p.is_whitespace() || p == '+' || p == '-') =>
            {
                let term = text[start..pos].trim();
                if !term.is_empty() {
                    out.push((negative, term));
                    negative = false;
                }
                if ch == '-' {
                    negative = !negative;
                }
                start = pos + ch.len_utf8();
            }
            _ => {}
        }
        prev = Some(ch);
    }
    if depth != 0 {
        return None;
    }
    let term = text[start..].trim();
    if term.is_empty() {
        return (start == 0).then_some(out);
    }
    out.push((negative, term));
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Truncated Laurent polynomials `t^n`, `n` in the window.
    fn laurent(window: Window) -> GradedAlgebra {
        let labels: Vec<(String, i64)> = window.degrees().map(|n| (format!("t^{n}"), n)).collect();
        let base = window.min_degree;
        GradedAlgebra::from_fn("K[t,t^-1]", Field::Rational, window, labels, |i, j| {
            let d = i as i64 + j as i64 + 2 * base;
            window.contains(d).then(|| SparseVec::unit(Field::Rational, (d - base) as usize))
        })
        .unwrap()
    }

    #[test]
    fn components_and_window() {
        let a = laurent(Window::default());
        assert_eq!(a.degree_component(2).unwrap().len(), 1);
        assert!(matches!(
            a.degree_component(5),
            Err(GradedError::WindowExceeded { degree: 5, .. })
        ));
        let t3 = a.basis_element("t^3").unwrap();
        let t2 = a.basis_element("t^2").unwrap();
        assert!(a.mul(&t3, &t2).is_err());
        assert_eq!(a.unit(), Some(a.basis_element("t^0").unwrap()));
    }

    #[test]
    fn parse_and_display() {
        let a = laurent(Window::default());
        let x = a.parse_element("2 t^1 - 1/2 t^-1 + t^0").unwrap();
        assert_eq!(a.display(&x), "-1/2 t^-1 + t^0 + 2 t^1");
        assert_eq!(x.len(), 3);
        assert_eq!(x.get(a.index_of("t^-1").unwrap()), Some(&Field::Rational.ratio(-1, 2).unwrap()));
        assert!(a.parse_element("t^9").is_err());
        assert!(a.parse_element("0").unwrap().is_zero());
    }

    #[test]
    fn trivial_grading_keeps_products() {
        let a = laurent(Window::new(-1, 1, 4)).with_trivial_grading();
        assert_eq!(a.degree_component(0).unwrap().len(), 3);
        assert!(a.degree_component(1).unwrap().is_empty());
    }
}
