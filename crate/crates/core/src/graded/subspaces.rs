use crate::exactlin::{combine, kernel, Echelon, Insert, SparseVec, Subspace};

use super::{Element, GradedAlgebra, GradedError};

/// Which multiplications a [`SubspaceSpec`] is closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    None,
    LeftIdeal,
    RightIdeal,
    TwoSided,
    Subring,
}

/// Generators plus a closure rule; materialized inside a windowed algebra.
#[derive(Clone, Debug)]
pub struct SubspaceSpec {
    pub generators: Vec<Element>,
    pub closure: Closure,
}

impl SubspaceSpec {
    pub fn new(generators: Vec<Element>, closure: Closure) -> Self {
        SubspaceSpec { generators, closure }
    }

    pub fn span(generators: Vec<Element>) -> Self {
        Self::new(generators, Closure::None)
    }

    /// Span of `generators` closed under the declared operations against every
    /// windowed basis label (or against itself, for `Subring`). Products that
    /// leave the window are dropped.
    pub fn materialize(&self, a: &GradedAlgebra) -> Result<Subspace, GradedError> {
        let mut ech = Echelon::new(a.field());
        let mut members: Vec<Element> = Vec::new();
        let mut frontier: Vec<Element> = Vec::new();
        for g in &self.generators {
            if let Insert::NewPivot(_) = ech.insert(g) {
                members.push(g.clone());
                frontier.push(g.clone());
            }
        }
        let labels: Vec<Element> = (0..a.dim()).map(|i| a.unit_vector(i)).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                let mut candidates = Vec::new();
                match self.closure {
                    Closure::None => {}
                    Closure::LeftIdeal => candidates.extend(labels.iter().filter_map(|b| a.try_mul(b, x))),
                    Closure::RightIdeal => candidates.extend(labels.iter().filter_map(|b| a.try_mul(x, b))),
                    Closure::TwoSided => {
                        candidates.extend(labels.iter().filter_map(|b| a.try_mul(b, x)));
                        candidates.extend(labels.iter().filter_map(|b| a.try_mul(x, b)));
                    }
                    Closure::Subring => {
                        for y in &members {
                            candidates.extend(a.try_mul(x, y));
                            candidates.extend(a.try_mul(y, x));
                        }
                    }
                }
                for c in candidates {
                    if let Insert::NewPivot(_) = ech.insert(&c) {
                        next.push(c);
                    }
                }
            }
            members.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(Subspace::span(a.field(), &members)?)
    }
}

fn products(a: &GradedAlgebra, x: &Element, ys: &[Element], left: bool) -> Result<SparseVec, GradedError> {
    let n = a.dim();
    let mut col = SparseVec::zero();
    for (l, y) in ys.iter().enumerate() {
        let p = if left { a.mul(x, y)? } else { a.mul(y, x)? };
        col.axpy_shifted(&a.field().one(), &p, l * n);
    }
    Ok(col)
}

/// `span{x·y : x ∈ basis(xs), y ∈ basis(ys)}`.
pub fn products_span(a: &GradedAlgebra, xs: &Subspace, ys: &Subspace) -> Result<Subspace, GradedError> {
    let mut out = Vec::new();
    for x in xs.basis() {
        for y in ys.basis() {
            out.push(a.mul(x, y)?);
        }
    }
    Ok(Subspace::span(a.field(), &out)?)
}

/// `{r ∈ R : r·x = 0 for all x ∈ I}`.
pub fn left_annihilator(a: &GradedAlgebra, r: &Subspace, i: &Subspace) -> Result<Subspace, GradedError> {
    let columns = r
        .basis()
        .iter()
        .map(|x| products(a, x, i.basis(), true))
        .collect::<Result<Vec<_>, _>>()?;
    let found: Vec<Element> = kernel(a.field(), &columns)?
        .iter()
        .map(|rel| combine(rel, r.basis()))
        .collect();
    Ok(Subspace::span(a.field(), &found)?)
}

/// `J^⊥ = {r ∈ R : r·y = y·r = 0 for all y ∈ J}`; `J` must be a two-sided ideal of `R`.
pub fn perp_ideal(a: &GradedAlgebra, r: &Subspace, j: &Subspace) -> Result<Subspace, GradedError> {
    if !r.contains_subspace(j) {
        return Err(GradedError::Precondition("J is not contained in R".into()));
    }
    for x in r.basis() {
        for y in j.basis() {
            let xy = a.mul(x, y)?;
            let yx = a.mul(y, x)?;
            if !j.contains(&xy) || !j.contains(&yx) {
                return Err(GradedError::Precondition(format!(
                    "J is not a two-sided ideal of R: {} · {} escapes J",
                    a.display(x),
                    a.display(y)
                )));
            }
        }
    }
    let columns = r
        .basis()
        .iter()
        .map(|x| {
            let mut col = products(a, x, j.basis(), true)?;
            let right = products(a, x, j.basis(), false)?;
            col.axpy_shifted(&a.field().one(), &right, j.dim() * a.dim());
            Ok(col)
        })
        .collect::<Result<Vec<_>, GradedError>>()?;
    let found: Vec<Element> = kernel(a.field(), &columns)?
        .iter()
        .map(|rel| combine(rel, r.basis()))
        .collect();
    Ok(Subspace::span(a.field(), &found)?)
}

/// `ann_R(I) ∩ ann_R(I)^⊥`; zero exactly when the annihilator meets its perp trivially.
pub fn annihilator_meets_perp(a: &GradedAlgebra, r: &Subspace, i: &Subspace) -> Result<Subspace, GradedError> {
    let ann = left_annihilator(a, r, i)?;
    let perp = perp_ideal(a, r, &ann)?;
    Ok(ann.intersect(&perp))
}

/// Windowed span of products of generator elements.
#[derive(Clone, Debug)]
pub struct GeneratedSpan {
    pub space: Subspace,
    /// The span stopped growing before the word-length bound.
    pub saturated: bool,
    /// Some product of spanning words left the degree window.
    pub window_truncated: bool,
    /// Longest word length that still contributed new vectors.
    pub length_reached: usize,
}

/// Span of all words of length `1..=max_word_len` in generator basis elements.
pub fn subring_generated(a: &GradedAlgebra, gens: &[Subspace]) -> GeneratedSpan {
    let letters: Vec<Element> = gens.iter().flat_map(|g| g.basis().iter().cloned()).collect();
    let mut ech = Echelon::new(a.field());
    let mut members = Vec::new();
    let mut frontier = Vec::new();
    for x in &letters {
        if let Insert::NewPivot(_) = ech.insert(x) {
            members.push(x.clone());
            frontier.push(x.clone());
        }
    }
    let max_len = a.window().max_word_len.max(1);
    let mut window_truncated = false;
    let mut length_reached = usize::from(!members.is_empty());
    let mut saturated = frontier.is_empty();
    for len in 2..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in &letters {
                match a.try_mul(w, x) {
                    Some(p) => {
                        if let Insert::NewPivot(_) = ech.insert(&p) {
                            next.push(p);
                        }
                    }
                    None => window_truncated = true,
                }
            }
        }
        if next.is_empty() {
            saturated = true;
            break;
        }
        length_reached = len;
        members.extend(next.iter().cloned());
        frontier = next;
    }
    GeneratedSpan {
        space: Subspace::span(a.field(), &members).expect("single field"),
        saturated,
        window_truncated,
        length_reached,
    }
}
