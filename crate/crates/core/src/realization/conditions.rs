use crate::exactlin::{combine, kernel, solve, SparseVec, Subspace};
use crate::graded::{left_annihilator, perp_ideal, products_span, Element, GradedAlgebra, GradedError};
use crate::rsystem::{canonical_max_ideal, lift, RSystem};
use crate::verdict::{CheckResult, Outcome, Witness};

use super::RealizationData;

/// Window overflow is inconclusive; a violated precondition makes the check inapplicable.
pub(crate) fn guard(name: &str, err: GradedError) -> CheckResult {
    match err {
        GradedError::WindowExceeded { .. } => CheckResult::new(name, Outcome::Inconclusive, err.to_string()),
        other => CheckResult::new(name, Outcome::NotApplicable, other.to_string()),
    }
}

fn first_escape(
    a: &GradedAlgebra,
    xs: &Subspace,
    ys: &Subspace,
    target: &Subspace,
) -> Result<Option<(Element, Element)>, GradedError> {
    for x in xs.basis() {
        for y in ys.basis() {
            if !target.contains(&a.mul(x, y)?) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// `RI, IR ⊆ I`, `RJ, JR ⊆ J` and `JI ⊆ R`, on basis products.
pub fn check_condition_1(d: &RealizationData) -> CheckResult {
    let name = "condition-1";
    let a = &d.a;
    let cases = [
        (&d.r, &d.i, &d.i, "RI ⊆ I", "I"),
        (&d.i, &d.r, &d.i, "IR ⊆ I", "I"),
        (&d.r, &d.j, &d.j, "RJ ⊆ J", "J"),
        (&d.j, &d.r, &d.j, "JR ⊆ J", "J"),
        (&d.j, &d.i, &d.r, "JI ⊆ R", "R"),
        (&d.r, &d.r, &d.r, "RR ⊆ R", "R"),
    ];
    for (xs, ys, target, law, label) in cases {
        match first_escape(a, xs, ys, target) {
            Err(e) => return guard(name, e),
            Ok(Some((x, y))) => {
                let text = format!("{} · {} = {}", a.display(&x), a.display(&y), a.display(&a.mul(&x, &y).expect("computed")));
                return CheckResult::fail(name, format!("{law} fails")).with_witness(
                    Witness::Escape {
                        left: x,
                        right: y,
                        target: label.into(),
                    },
                    text,
                );
            }
            Ok(None) => {}
        }
    }
    CheckResult::pass(name, "all containments hold on basis products")
}

/// `x ∈ span(IJ)` with `x·s = s` for every sample `s` (or `s·x = s` when `right`).
fn fixing_element(
    a: &GradedAlgebra,
    ij: &Subspace,
    samples: &[Element],
    right: bool,
) -> Result<Option<Element>, GradedError> {
    let one = a.field().one();
    let n = a.dim();
    let mut columns = Vec::new();
    for z in ij.basis() {
        let mut col = SparseVec::zero();
        for (k, s) in samples.iter().enumerate() {
            let p = if right { a.mul(s, z)? } else { a.mul(z, s)? };
            col.axpy_shifted(&one, &p, k * n);
        }
        columns.push(col);
    }
    let mut rhs = SparseVec::zero();
    for (k, s) in samples.iter().enumerate() {
        rhs.axpy_shifted(&one, s, k * n);
    }
    Ok(solve(&columns, &rhs)?.map(|c| combine(&c, ij.basis())))
}

/// Local units from `IJ`: the fixing elements `a` (for `I`) and `b` (for `J`).
#[derive(Clone, Debug)]
pub struct Condition2 {
    pub check: CheckResult,
    pub a: Option<Element>,
    pub b: Option<Element>,
}

/// `a ∈ span(IJ)` with `a·i = i` and `b ∈ span(IJ)` with `j·b = j` on the samples.
pub fn check_condition_2_on(d: &RealizationData, is: &[Element], js: &[Element]) -> Condition2 {
    let name = "condition-2";
    let a = &d.a;
    let run = || -> Result<Condition2, GradedError> {
        let ij = products_span(a, &d.i, &d.j)?;
        let fix_a = fixing_element(a, &ij, is, false)?;
        let fix_b = fixing_element(a, &ij, js, true)?;
        let check = match (&fix_a, &fix_b) {
            (Some(x), Some(y)) => CheckResult::pass(name, format!("a = {}, b = {}", a.display(x), a.display(y))),
            _ => {
                let (samples, right) = if fix_a.is_none() { (is, false) } else { (js, true) };
                let mut lone = None;
                for s in samples {
                    if fixing_element(a, &ij, std::slice::from_ref(s), right)?.is_none() {
                        lone = Some(s.clone());
                        break;
                    }
                }
                let side = if right { "j·b = j" } else { "a·i = i" };
                let fail = CheckResult::fail(name, format!("no element of span(IJ) gives {side} on all samples"));
                match lone {
                    Some(s) => {
                        let text = format!("{} is fixed by nothing in span(IJ)", a.display(&s));
                        fail.with_witness(
                            Witness::Unfixable {
                                sample: s,
                                span: "IJ".into(),
                            },
                            text,
                        )
                    }
                    None => fail.with_note("each sample is fixable alone, but not jointly"),
                }
            }
        };
        Ok(Condition2 {
            check,
            a: fix_a,
            b: fix_b,
        })
    };
    run().unwrap_or_else(|e| Condition2 {
        check: guard(name, e),
        a: None,
        b: None,
    })
}

/// [`check_condition_2_on`] with the full bases of `I` and `J` as samples.
pub fn check_condition_2(d: &RealizationData) -> Condition2 {
    check_condition_2_on(d, d.i.basis(), d.j.basis())
}

/// For `r ∈ ann_R(I)^⊥` and `a ∈ span(IJ)`, `r - a ∈ ann_{A₀}(I)` forces `a ∈ R`.
pub fn check_condition_3(d: &RealizationData) -> CheckResult {
    let name = "condition-3";
    let a = &d.a;
    let run = || -> Result<CheckResult, GradedError> {
        let ij = products_span(a, &d.i, &d.j)?;
        if d.r.contains_subspace(&ij) {
            return Ok(CheckResult::pass(name, "span(IJ) ⊆ R"));
        }
        let ann_r = left_annihilator(a, &d.r, &d.i)?;
        let perp = perp_ideal(a, &d.r, &ann_r)?;
        let ann_a0 = left_annihilator(a, &a.component_space(0), &d.i)?;
        let (np, nz) = (perp.dim(), ij.dim());
        let columns: Vec<SparseVec> = perp
            .basis()
            .iter()
            .cloned()
            .chain(ij.basis().iter().map(SparseVec::neg))
            .chain(ann_a0.basis().iter().map(SparseVec::neg))
            .collect();
        for rel in kernel(a.field(), &columns)? {
            let r = combine(&rel.restricted(|k| k < np), perp.basis());
            let x = combine(&rel.restricted(|k| k >= np && k < np + nz).reindexed(|k| k - np), ij.basis());
            if !d.r.contains(&x) {
                let text = format!("r = {}, a = {}", a.display(&r), a.display(&x));
                return Ok(CheckResult::fail(name, "a pair (r, a) has a ∉ R").with_witness(Witness::Pair { r, a: x }, text));
            }
        }
        Ok(CheckResult::pass(name, format!("every admissible pair has a ∈ R (dim ann_R(I)^⊥ = {np})")))
    };
    run().unwrap_or_else(|e| guard(name, e))
}

/// `ann_R(I) ∩ ann_R(I)^⊥ = 0`.
pub fn check_condition_4(d: &RealizationData) -> CheckResult {
    let name = "condition-4";
    let a = &d.a;
    let run = || -> Result<CheckResult, GradedError> {
        let ann = left_annihilator(a, &d.r, &d.i)?;
        let meet = ann.intersect(&perp_ideal(a, &d.r, &ann)?);
        Ok(match meet.basis().first() {
            Some(x) => {
                let text = format!("{} lies in ann_R(I) ∩ ann_R(I)^⊥", a.display(x));
                CheckResult::fail(name, format!("intersection has dimension {}", meet.dim())).with_witness(
                    Witness::Nonzero {
                        element: x.clone(),
                        space: "ann_R(I) ∩ ann_R(I)^⊥".into(),
                    },
                    text,
                )
            }
            None => CheckResult::pass(name, format!("dim ann_R(I) = {}, intersection is zero", ann.dim())),
        })
    };
    run().unwrap_or_else(|e| guard(name, e))
}

/// Both sides of `Δ⁻¹(F_J(I)) ∩ ann_R(I)^⊥ = IJ ∩ R`.
#[derive(Clone, Debug)]
pub struct IdentityComparison {
    /// From the R-system: the canonical ideal, lifted into `A`.
    pub left: Subspace,
    /// From products in `A`: `span(IJ) ∩ R`.
    pub right: Subspace,
    pub check: CheckResult,
}

/// `Err` carries the not-applicable or inconclusive result when a side cannot be formed.
pub fn check_ideal_identity(d: &RealizationData) -> Result<IdentityComparison, Box<CheckResult>> {
    let name = "ideal-identity";
    let a = &d.a;
    let (sys, rep) = RSystem::from_realization(d)
        .map_err(|e| Box::new(CheckResult::new(name, Outcome::NotApplicable, e.to_string())))?;
    let canonical = canonical_max_ideal(&sys);
    let lifted: Vec<Element> = canonical.ideal.basis().iter().map(|c| lift(c, &rep.sigma)).collect();
    let left = Subspace::span(a.field(), &lifted).expect("single field");
    let right = products_span(a, &d.i, &d.j).map_err(|e| Box::new(guard(name, e)))?.intersect(&d.r);
    let render = |s: &Subspace| {
        let parts: Vec<String> = s.basis().iter().map(|x| a.display(x)).collect();
        format!("span{{{}}}", parts.join(", "))
    };
    let check = if left.same_as(&right) {
        CheckResult::pass(name, format!("both sides are {}", render(&left)))
    } else {
        CheckResult::fail(name, "sides differ").with_note(format!("left {}, right {}", render(&left), render(&right)))
    };
    Ok(IdentityComparison { left, right, check })
}
