use std::collections::BTreeMap;

use crate::exactlin::{Subspace, SparseVec};
use crate::graded::{
    annihilator_meets_perp, check_graded_local_units, check_strongly_graded, products_span, subring_generated,
    Element, GeneratedSpan, GradedAlgebra,
};
use crate::rsystem::{
    canonical_max_ideal, check_covariant_rep, check_cp_invariant, check_fs_full, check_system, RSystem,
};
use crate::verdict::{Certificate, CheckResult, Outcome};

use super::conditions::guard;
use super::{
    check_condition_1, check_condition_2, check_condition_2_on, check_condition_3, check_condition_4,
    check_ideal_identity, IdentityComparison, RealizationData, RealizationError,
};

/// Every check run on one realization, in order.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub checks: Vec<CheckResult>,
    pub identity: Option<IdentityComparison>,
    pub generated: GeneratedSpan,
    pub certificate: Certificate,
}

impl RealizationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn not_applicable(name: &str, why: &str) -> CheckResult {
    CheckResult::new(name, Outcome::NotApplicable, why)
}

/// Conditions 1 to 4, the ideal identity, the R-system checks on the
/// inclusion representation, and generation of `A` by `R ∪ I ∪ J`.
pub fn verify_realization(d: &RealizationData) -> RealizationReport {
    let mut checks = vec![
        check_condition_1(d),
        check_condition_2(d).check,
        check_condition_3(d),
        check_condition_4(d),
    ];
    let conditions_hold = checks.iter().all(CheckResult::passed);
    let system_names = ["ideal-identity", "r-system", "fs", "covariant-rep", "canonical-ideal", "cp-invariant"];
    let mut identity = None;
    if !checks[0].passed() {
        let why = if checks[0].failed() {
            "condition 1 fails"
        } else {
            "condition 1 is undecided in the window"
        };
        checks.extend(system_names.iter().map(|n| not_applicable(n, why)));
    } else {
        match check_ideal_identity(d) {
            Ok(cmp) => {
                let mut c = cmp.check.clone();
                if !conditions_hold && c.failed() {
                    c = not_applicable("ideal-identity", "conditions 2 to 4 do not all hold, so the sides may differ");
                }
                checks.push(c);
                identity = Some(cmp);
            }
            Err(c) => checks.push(*c),
        }
        match RSystem::from_realization(d) {
            Ok((sys, rep)) => {
                checks.push(check_system(&sys));
                checks.push(check_fs_full(&sys));
                checks.push(check_covariant_rep(&sys, &rep));
                let canonical = canonical_max_ideal(&sys);
                checks.push(canonical.check.clone());
                checks.push(check_cp_invariant(&sys, &rep, &canonical.ideal));
            }
            Err(e) => checks.extend(system_names[1..].iter().map(|n| not_applicable(n, &e.to_string()))),
        }
    }
    let generated = subring_generated(&d.a, &[d.r.clone(), d.i.clone(), d.j.clone()]);
    checks.push(generation_check(&d.a, &generated));
    checks.push(sigma_injective(d));
    let certificate = Certificate::from_checks(&checks);
    RealizationReport {
        checks,
        identity,
        generated,
        certificate,
    }
}

fn generation_check(a: &GradedAlgebra, g: &GeneratedSpan) -> CheckResult {
    let name = "generation";
    let full = a.dim();
    if g.space.dim() == full {
        CheckResult::pass(name, format!("R ∪ I ∪ J spans all {full} basis elements by length {}", g.length_reached))
    } else if g.saturated && !g.window_truncated {
        CheckResult::fail(name, format!("generated span has dimension {} of {full}", g.space.dim()))
    } else {
        CheckResult::new(
            name,
            Outcome::Inconclusive,
            format!("dimension {} of {full} before the window or word bound", g.space.dim()),
        )
    }
}

/// The inclusion of `R` is injective on `A₀ ∩ R`; the check guards the basis of `R`.
fn sigma_injective(d: &RealizationData) -> CheckResult {
    let name = "sigma-injective";
    let rank = Subspace::span(d.a.field(), d.r.basis()).expect("single field").dim();
    if rank == d.r.dim() {
        CheckResult::pass(name, format!("σ has rank {rank} on R"))
    } else {
        CheckResult::fail(name, format!("σ has rank {rank} < dim R = {}", d.r.dim()))
    }
}

/// Strongly graded conditions for `(A₀, A₁, A₋₁)` plus the full realization checks.
#[derive(Clone, Debug)]
pub struct StrongGradingReport {
    pub checks: Vec<CheckResult>,
    pub realization: Option<RealizationReport>,
    pub certificate: Certificate,
}

/// `A_{±n} = span(A_{±1}^n)` in the window, local units in `A₁A₋₁`, and
/// `ann_{A₀}(A₁) ∩ ann_{A₀}(A₁)^⊥ = 0`; on success the canonical realization is verified.
pub fn check_strongly_graded_realization(a: &GradedAlgebra) -> StrongGradingReport {
    let d = RealizationData::new(a.clone(), a.component_space(0), a.component_space(1), a.component_space(-1));
    let mut checks = vec![powers_check(a)];
    let is = d.i.basis().to_vec();
    let js = d.j.basis().to_vec();
    let mut units = check_condition_2_on(&d, &is, &js).check;
    units.name = "strong-local-units".into();
    checks.push(units);
    checks.push(match annihilator_meets_perp(a, &d.r, &d.i) {
        Ok(meet) if meet.is_zero() => CheckResult::pass("strong-annihilator", "ann ∩ ann^⊥ = 0"),
        Ok(meet) => CheckResult::fail("strong-annihilator", format!("ann ∩ ann^⊥ has dimension {}", meet.dim()))
            .with_note(a.display(&meet.basis()[0])),
        Err(e) => guard("strong-annihilator", e),
    });
    let realization = checks.iter().all(CheckResult::passed).then(|| verify_realization(&d));
    let mut all = checks.clone();
    if let Some(r) = &realization {
        all.extend(r.checks.iter().cloned());
    }
    StrongGradingReport {
        certificate: Certificate::from_checks(&all),
        checks,
        realization,
    }
}

fn powers_check(a: &GradedAlgebra) -> CheckResult {
    let name = "strong-generation";
    let w = a.window();
    for sign in [1i64, -1] {
        let one = a.component_space(sign);
        let mut power = one.clone();
        let mut n = 1i64;
        while w.contains(sign * (n + 1)) {
            n += 1;
            power = match products_span(a, &power, &one) {
                Ok(p) => p,
                Err(e) => return guard(name, e),
            };
            let target = a.component_space(sign * n);
            if !power.same_as(&target) {
                return CheckResult::fail(
                    name,
                    format!("span(A_{}^{n}) has dimension {} but A_{} has {}", sign, power.dim(), sign * n, target.dim()),
                );
            }
        }
    }
    CheckResult::pass(name, format!("A_n = span(A_±1^n) for degrees {}..={}", w.min_degree, w.max_degree))
}

/// A degree-preserving linear map into `target`, by images of basis elements.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub target: GradedAlgebra,
    pub images: Vec<Element>,
}

impl GradedMap {
    pub fn apply(&self, x: &Element) -> Element {
        crate::exactlin::combine(x, &self.images)
    }
}

#[derive(Clone, Debug)]
pub struct UniquenessReport {
    /// Strong grading and graded local units of the source.
    pub precondition: CheckResult,
    pub injective_on_zero: bool,
    /// `dim ker φ|_{A_n}` per degree; only filled when `φ` is injective on `A₀`.
    pub kernel_dims: BTreeMap<i64, usize>,
    pub verdict: CheckResult,
}

/// A homomorphism injective on `A₀` out of a strongly graded algebra with
/// graded local units is injective; `NotApplicable` when `A₀` is not mapped injectively.
pub fn check_graded_uniqueness(a: &GradedAlgebra, phi: &GradedMap) -> Result<UniquenessReport, RealizationError> {
    if phi.images.len() != a.dim() {
        return Err(RealizationError::NotGraded(format!(
            "{} images for {} basis elements",
            phi.images.len(),
            a.dim()
        )));
    }
    let b = &phi.target;
    for (k, img) in phi.images.iter().enumerate() {
        let n = a.label_degree(k);
        if !img.is_zero() && b.degree_of(img) != Some(n) {
            return Err(RealizationError::NotGraded(format!(
                "{} has degree {n} but maps to {}",
                a.label(k),
                b.display(img)
            )));
        }
    }
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let Some(xy) = a.basis_product(x, y) else { continue };
            let Some(rhs) = b.try_mul(&phi.images[x], &phi.images[y]) else { continue };
            if phi.apply(xy) != rhs {
                return Err(RealizationError::NotHomomorphism(format!("φ({} · {})", a.label(x), a.label(y))));
            }
        }
    }
    let strong = check_strongly_graded(a);
    let homogeneous: Vec<Element> = (0..a.dim()).map(|k| a.unit_vector(k)).collect();
    let units = check_graded_local_units(a, &homogeneous)?;
    let precondition = match (&strong.failure, &units) {
        (None, Some(_)) => CheckResult::pass("uniqueness-precondition", "strongly graded with graded local units"),
        (Some((m, n, l)), _) => CheckResult::new(
            "uniqueness-precondition",
            Outcome::NotApplicable,
            format!("{} ∉ span(A_{m} A_{n})", a.label(*l)),
        ),
        (None, None) => CheckResult::new("uniqueness-precondition", Outcome::NotApplicable, "no graded local unit found"),
    };
    let rank = |labels: &[usize]| {
        let imgs: Vec<SparseVec> = labels.iter().map(|k| phi.images[*k].clone()).collect();
        Subspace::span(b.field(), &imgs).expect("single field").dim()
    };
    let zero = a.degree_component(0).unwrap_or_default();
    let injective_on_zero = rank(&zero) == zero.len();
    let mut kernel_dims = BTreeMap::new();
    let verdict = if !precondition.passed() {
        not_applicable("graded-uniqueness", "precondition fails")
    } else if !injective_on_zero {
        not_applicable("graded-uniqueness", "φ is not injective on A₀")
    } else {
        for n in a.window().degrees() {
            let labels = a.degree_component(n).unwrap_or_default();
            kernel_dims.insert(n, labels.len() - rank(&labels));
        }
        match kernel_dims.iter().find(|(_, k)| **k > 0) {
            None => CheckResult::pass("graded-uniqueness", "φ is injective in every degree of the window"),
            Some((n, k)) => CheckResult::fail("graded-uniqueness", format!("kernel of dimension {k} in degree {n}")),
        }
    };
    Ok(UniquenessReport {
        precondition,
        injective_on_zero,
        kernel_dims,
        verdict,
    })
}
