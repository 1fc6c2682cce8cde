use std::collections::{BTreeMap, VecDeque};

use crate::exactlin::Field;
use crate::graded::left_annihilator;
use crate::realization::RealizationData;
use crate::verdict::{CheckResult, Witness};

use super::{arrow_span, steinberg_algebra, ArrowSet, FiniteGroupoid, GroupoidError};

/// Arrow sets `H₀ ⊆ c⁻¹(0)`, `H₁ ⊆ c⁻¹(1)`, `H₋₁ ⊆ c⁻¹(-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTriple {
    pub h0: ArrowSet,
    pub h1: ArrowSet,
    pub hm1: ArrowSet,
}

impl HTriple {
    pub fn new(g: &FiniteGroupoid, h0: ArrowSet, h1: ArrowSet, hm1: ArrowSet) -> Result<Self, GroupoidError> {
        for (set, n) in [(&h0, 0), (&h1, 1), (&hm1, -1)] {
            if let Some(k) = set.iter().find(|k| **k >= g.len() || g.degree(**k) != n) {
                return Err(GroupoidError::WrongDegree {
                    arrow: g.arrows().get(*k).map_or_else(|| k.to_string(), |a| a.name.clone()),
                    expected: n,
                });
            }
        }
        Ok(HTriple { h0, h1, hm1 })
    }

    pub fn from_names(g: &FiniteGroupoid, h0: &[&str], h1: &[&str], hm1: &[&str]) -> Result<Self, GroupoidError> {
        HTriple::new(g, g.arrow_set(h0)?, g.arrow_set(h1)?, g.arrow_set(hm1)?)
    }

    /// `(c⁻¹(0), c⁻¹(1), c⁻¹(-1))`.
    pub fn full(g: &FiniteGroupoid) -> Self {
        HTriple {
            h0: g.degree_set(0),
            h1: g.degree_set(1),
            hm1: g.degree_set(-1),
        }
    }

    pub fn generators(&self) -> ArrowSet {
        self.h0.iter().chain(&self.h1).chain(&self.hm1).copied().collect()
    }
}

fn first_escape(g: &FiniteGroupoid, xs: &ArrowSet, ys: &ArrowSet, target: &ArrowSet) -> Option<(usize, usize, usize)> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| (*x, *y)))
        .find_map(|(x, y)| g.compose(x, y).filter(|z| !target.contains(z)).map(|z| (x, y, z)))
}

/// Closure of `H₀`, `H₁`, `H₋₁` under the products the realization needs, and
/// `r(H₁) ∪ s(H₋₁) ⊆ H₁H₋₁`.
pub fn check_htriple_products(g: &FiniteGroupoid, h: &HTriple) -> CheckResult {
    let name = "htriple-products";
    let cases: [(&ArrowSet, &ArrowSet, &ArrowSet, &str); 6] = [
        (&h.h0, &h.h0, &h.h0, "H0"),
        (&h.h0, &h.h1, &h.h1, "H1"),
        (&h.h1, &h.h0, &h.h1, "H1"),
        (&h.h0, &h.hm1, &h.hm1, "H-1"),
        (&h.hm1, &h.h0, &h.hm1, "H-1"),
        (&h.hm1, &h.h1, &h.h0, "H0"),
    ];
    for (xs, ys, target, label) in &cases {
        if let Some((x, y, z)) = first_escape(g, xs, ys, target) {
            let text = format!("{} {} = {} not in {label}", g.name(x), g.name(y), g.name(z));
            return CheckResult::fail(name, format!("a product escapes {label}")).with_witness(
                Witness::ArrowProduct {
                    left: x,
                    right: y,
                    product: z,
                    target: label.to_string(),
                },
                text,
            );
        }
    }
    let h1hm1 = g.set_product(&h.h1, &h.hm1);
    let needed = g.set_ranges(&h.h1).into_iter().chain(g.set_sources(&h.hm1));
    for u in needed {
        if !h1hm1.contains(&u) {
            let text = format!("{} is not a product of H1 and H-1", g.name(u));
            return CheckResult::fail(name, "r(H1) or s(H-1) is not covered by H1 H-1").with_witness(
                Witness::Arrow {
                    arrow: u,
                    requirement: "r(H1) ∪ s(H-1) ⊆ H1 H-1".into(),
                },
                text,
            );
        }
    }
    CheckResult::pass(
        name,
        format!("|H0| = {}, |H1| = {}, |H-1| = {}", h.h0.len(), h.h1.len(), h.hm1.len()),
    )
}

/// `s(B) ∩ r(H₁) = ∅ ⇒ s(B) ⊆ H₀` for bisections `B ⊆ H₀`. Both sides are
/// unions over the arrows of `B`, so singletons suffice.
pub fn check_htriple_hypothesis(g: &FiniteGroupoid, h: &HTriple) -> CheckResult {
    let name = "htriple-hypothesis";
    if g.units().is_subset(&h.h0) {
        return CheckResult::pass(name, "unit space lies in H0");
    }
    let closed = g.set_product(&h.h0, &h.h0).is_subset(&h.h0) && g.set_inverse(&h.h0).is_subset(&h.h0);
    if closed {
        return CheckResult::pass(name, "H0 is a subgroupoid");
    }
    let ranges = g.set_ranges(&h.h1);
    for gamma in &h.h0 {
        let s = g.source(*gamma);
        if !ranges.contains(&s) && !h.h0.contains(&s) {
            let text = format!("B = {{{}}}: s(B) = {} misses r(H1) and H0", g.name(*gamma), g.name(s));
            return CheckResult::fail(name, "a source outside r(H1) is missing from H0").with_witness(
                Witness::Arrow {
                    arrow: *gamma,
                    requirement: "s(B) ∩ r(H1) = ∅ implies s(B) ⊆ H0".into(),
                },
                text,
            );
        }
    }
    CheckResult::pass(name, "checked on singleton bisections")
}

/// Shortest factorizations of every arrow reachable from `generators`.
pub fn product_closure(g: &FiniteGroupoid, generators: &ArrowSet) -> BTreeMap<usize, Vec<usize>> {
    let mut found: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for x in generators {
        found.insert(*x, vec![*x]);
        queue.push_back(*x);
    }
    while let Some(x) = queue.pop_front() {
        for y in generators {
            if let Some(z) = g.compose(x, *y) {
                if !found.contains_key(&z) {
                    let mut word = found[&x].clone();
                    word.push(*y);
                    found.insert(z, word);
                    queue.push_back(z);
                }
            }
        }
    }
    found
}

pub fn render_factorization(g: &FiniteGroupoid, word: &[usize]) -> String {
    word.iter().map(|k| g.name(*k)).collect::<Vec<_>>().join(" ")
}

/// Every arrow is a product of arrows from `H₀ ∪ H₁ ∪ H₋₁`.
pub fn check_htriple_generation(g: &FiniteGroupoid, h: &HTriple) -> (CheckResult, BTreeMap<usize, Vec<usize>>) {
    let name = "htriple-generation";
    let closure = product_closure(g, &h.generators());
    let result = match (0..g.len()).find(|k| !closure.contains_key(k)) {
        Some(k) => CheckResult::fail(
            name,
            format!("{} of {} arrows reached", closure.len(), g.len()),
        )
        .with_witness(
            Witness::Arrow {
                arrow: k,
                requirement: "product of H0, H1, H-1 arrows".into(),
            },
            format!("{} is not a product of generators", g.name(k)),
        ),
        None => CheckResult::pass(name, format!("all {} arrows reached", g.len())),
    };
    (result, closure)
}

/// Left annihilator of `A_K(H₁)` in `A_K(H₀)`, by the arrow formula and by
/// linear algebra.
#[derive(Clone, Debug)]
pub struct AnnihilatorComparison {
    /// `{γ ∈ H₀ : s(γ) ∉ r(H₁)}`; its indicators span the annihilator.
    pub formula: ArrowSet,
    pub brute_force: crate::exactlin::Subspace,
    pub agree: bool,
}

pub fn steinberg_annihilator(g: &FiniteGroupoid, h0: &ArrowSet, h1: &ArrowSet, field: Field) -> AnnihilatorComparison {
    let ranges = g.set_ranges(h1);
    let formula: ArrowSet = h0.iter().copied().filter(|k| !ranges.contains(&g.source(*k))).collect();
    let a = steinberg_algebra(g, field);
    let brute_force = left_annihilator(&a, &arrow_span(field, h0), &arrow_span(field, h1))
        .expect("finite groupoid algebras have no window overflow");
    let agree = brute_force.same_as(&arrow_span(field, &formula));
    AnnihilatorComparison {
        formula,
        brute_force,
        agree,
    }
}

/// Every `g ∈ c⁻¹(n)`, `1 ≤ n ≤ max_n`, is a product of `n` arrows of degree one.
pub fn check_unperforated(g: &FiniteGroupoid, max_n: i64) -> CheckResult {
    let name = "unperforated";
    let ones = g.degree_set(1);
    let mut reach: BTreeMap<usize, Vec<usize>> = ones.iter().map(|k| (*k, vec![*k])).collect();
    for n in 1..=max_n {
        if n > 1 {
            let mut next = BTreeMap::new();
            for (x, word) in &reach {
                for y in &ones {
                    if let Some(z) = g.compose(*x, *y) {
                        next.entry(z).or_insert_with(|| {
                            let mut w = word.clone();
                            w.push(*y);
                            w
                        });
                    }
                }
            }
            reach = next;
        }
        if let Some(k) = g.degree_set(n).into_iter().find(|k| !reach.contains_key(k)) {
            return CheckResult::fail(name, format!("degree {n} arrow has no factorization")).with_witness(
                Witness::Arrow {
                    arrow: k,
                    requirement: format!("product of {n} degree-one arrows"),
                },
                format!("{} is not a product of {n} arrows in G1", g.name(k)),
            );
        }
    }
    CheckResult::pass(name, format!("degrees 1..={max_n} factor through G1"))
}

/// Whether `H₀` is a subgroupoid, and where `(H₁)⁻¹` and `H₋₁` differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseComparison {
    pub h0_inverse_closed: bool,
    pub h0_product_closed: bool,
    /// Arrows of `(H₁)⁻¹` missing from `H₋₁`.
    pub missing_from_hm1: ArrowSet,
    /// Arrows of `H₋₁` missing from `(H₁)⁻¹`.
    pub extra_in_hm1: ArrowSet,
}

impl InverseComparison {
    pub fn equal(&self) -> bool {
        self.missing_from_hm1.is_empty() && self.extra_in_hm1.is_empty()
    }

    /// A subgroupoid `H₀` forces `H₋₁ = (H₁)⁻¹` once the product checks pass.
    pub fn consistent(&self) -> bool {
        !(self.h0_inverse_closed && self.h0_product_closed) || self.equal()
    }
}

pub fn compare_inverses(g: &FiniteGroupoid, h: &HTriple) -> InverseComparison {
    let inv = g.set_inverse(&h.h1);
    InverseComparison {
        h0_inverse_closed: g.set_inverse(&h.h0).is_subset(&h.h0),
        h0_product_closed: g.set_product(&h.h0, &h.h0).is_subset(&h.h0),
        missing_from_hm1: inv.difference(&h.hm1).copied().collect(),
        extra_in_hm1: h.hm1.difference(&inv).copied().collect(),
    }
}

/// `A = A_K(G)`, `R = A_K(H₀)`, `I = A_K(H₁)`, `J = A_K(H₋₁)`, after the three
/// H-triple checks pass.
pub fn steinberg_realization_data(
    g: &FiniteGroupoid,
    h: &HTriple,
    field: Field,
) -> Result<(RealizationData, InverseComparison), GroupoidError> {
    for check in [
        check_htriple_products(g, h),
        check_htriple_hypothesis(g, h),
        check_htriple_generation(g, h).0,
    ] {
        if !check.passed() {
            return Err(GroupoidError::Hypothesis(check.to_string()));
        }
    }
    let a = steinberg_algebra(g, field);
    let data = RealizationData::new(
        a,
        arrow_span(field, &h.h0),
        arrow_span(field, &h.h1),
        arrow_span(field, &h.hm1),
    );
    Ok((data, compare_inverses(g, h)))
}

/// The H-sets of the worked example on the boundary-path groupoid of `E*`.
pub fn e_star_htriple(g: &FiniteGroupoid) -> Result<HTriple, GroupoidError> {
    HTriple::from_names(
        g,
        &["(g,0,g)", "(eg,0,eg)", "(v,0,v)", "(f,0,f)", "(f,0,g)"],
        &["(ef,1,f)", "(ef,1,g)", "(eg,1,g)", "(eg,1,f)", "(f,1,v)", "(g,1,v)"],
        &["(f,-1,ef)", "(f,-1,eg)", "(v,-1,f)", "(v,-1,g)"],
    )
}
