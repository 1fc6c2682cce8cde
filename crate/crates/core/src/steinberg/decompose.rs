use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::exactlin::{Field, SparseVec};

use super::{convolve, indicator, ArrowSet, FiniteGroupoid, GroupoidError, SteinbergElement};

/// How arrows are factored through the sets `D₁, …, D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorOrder {
    /// Shortest word, each letter from any `D_i`.
    Free,
    /// Exactly one letter from each of `D₁, …, D_n`, in that order.
    Fixed,
}

/// Which bisection around each factor arrow is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BisectionChoice {
    Singleton,
    /// Grow `{γ_i}` inside its `D` while `r` and `s` stay injective.
    Greedy,
}

/// `1_{B₁} * ⋯ * 1_{B_n}` with `B_i ⊆ D_{sets[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorTerm {
    pub sets: Vec<usize>,
    pub factors: Vec<ArrowSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<IndicatorTerm>,
}

impl Decomposition {
    pub fn evaluate(&self, g: &FiniteGroupoid, field: Field) -> SteinbergElement {
        let mut out = SparseVec::zero();
        for t in &self.terms {
            out = out.add(&term_value(g, field, t));
        }
        out
    }

    /// Support of each product, via set products of its factors.
    pub fn supports(&self, g: &FiniteGroupoid) -> Vec<ArrowSet> {
        self.terms
            .iter()
            .map(|t| {
                let mut it = t.factors.iter();
                let first = it.next().cloned().unwrap_or_default();
                it.fold(first, |acc, b| g.set_product(&acc, b))
            })
            .collect()
    }

    /// Every factor is a bisection inside its `D`, and the supports partition `c`.
    pub fn is_valid_for(&self, g: &FiniteGroupoid, c: &ArrowSet, ds: &[ArrowSet]) -> bool {
        let factors_ok = self.terms.iter().all(|t| {
            t.factors
                .iter()
                .zip(&t.sets)
                .all(|(b, d)| g.is_bisection(b) && b.is_subset(&ds[*d]))
        });
        let supports = self.supports(g);
        let total: usize = supports.iter().map(BTreeSet::len).sum();
        let union: ArrowSet = supports.into_iter().flatten().collect();
        factors_ok && total == union.len() && &union == c
    }

    pub fn render(&self, g: &FiniteGroupoid) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                t.factors
                    .iter()
                    .map(|b| format!("1_{{{}}}", g.set_names(b).join(", ")))
                    .collect::<Vec<_>>()
                    .join(" * ")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn term_value(g: &FiniteGroupoid, field: Field, t: &IndicatorTerm) -> SteinbergElement {
    let mut it = t.factors.iter();
    let first = indicator(field, it.next().expect("terms are nonempty"));
    it.fold(first, |acc, b| convolve(g, &acc, &indicator(field, b)))
}

type Factorization = Vec<(usize, usize)>;

fn free_factorizations(g: &FiniteGroupoid, ds: &[ArrowSet]) -> BTreeMap<usize, Factorization> {
    let letters: Vec<(usize, usize)> = ds
        .iter()
        .enumerate()
        .flat_map(|(d, set)| set.iter().map(move |x| (d, *x)))
        .collect();
    let mut found: BTreeMap<usize, Factorization> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &(d, x) in &letters {
        if let std::collections::btree_map::Entry::Vacant(e) = found.entry(x) {
            e.insert(vec![(d, x)]);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(d, y) in &letters {
            if let Some(z) = g.compose(x, y) {
                if !found.contains_key(&z) {
                    let mut w = found[&x].clone();
                    w.push((d, y));
                    found.insert(z, w);
                    queue.push_back(z);
                }
            }
        }
    }
    found
}

fn fixed_factorizations(g: &FiniteGroupoid, ds: &[ArrowSet]) -> BTreeMap<usize, Factorization> {
    let Some(first) = ds.first() else { return BTreeMap::new() };
    let mut reach: BTreeMap<usize, Factorization> = first.iter().map(|x| (*x, vec![(0, *x)])).collect();
    for (d, set) in ds.iter().enumerate().skip(1) {
        let mut next = BTreeMap::new();
        for (x, w) in &reach {
            for y in set {
                if let Some(z) = g.compose(*x, *y) {
                    next.entry(z).or_insert_with(|| {
                        let mut w = w.clone();
                        w.push((d, *y));
                        w
                    });
                }
            }
        }
        reach = next;
    }
    reach
}

fn grow_bisection(g: &FiniteGroupoid, seed: usize, within: &ArrowSet) -> ArrowSet {
    let mut out: ArrowSet = [seed].into();
    let mut ranges: BTreeSet<usize> = [g.range(seed)].into();
    let mut sources: BTreeSet<usize> = [g.source(seed)].into();
    for x in within {
        if !ranges.contains(&g.range(*x)) && !sources.contains(&g.source(*x)) {
            ranges.insert(g.range(*x));
            sources.insert(g.source(*x));
            out.insert(*x);
        }
    }
    out
}

/// Writes `1_C` as a sum of products of indicators of bisections, each inside
/// one of `ds`. Each term's last factor is cut down to the part landing in
/// `C` minus what earlier terms cover, so the supports are disjoint.
pub fn decompose_indicator(
    g: &FiniteGroupoid,
    c: &ArrowSet,
    ds: &[ArrowSet],
    order: FactorOrder,
    choice: BisectionChoice,
) -> Result<Decomposition, GroupoidError> {
    if !g.is_bisection(c) {
        return Err(GroupoidError::NotBisection(g.set_names(c).join(" ")));
    }
    let factorizations = match order {
        FactorOrder::Free => free_factorizations(g, ds),
        FactorOrder::Fixed => fixed_factorizations(g, ds),
    };
    if let Some(bad) = c.iter().find(|x| !factorizations.contains_key(x)) {
        return Err(GroupoidError::NotGenerated(g.name(*bad).to_string()));
    }
    let mut covered = ArrowSet::new();
    let mut terms = Vec::new();
    for gamma in c {
        if covered.contains(gamma) {
            continue;
        }
        let word = &factorizations[gamma];
        let mut factors: Vec<ArrowSet> = word
            .iter()
            .map(|(d, x)| match choice {
                BisectionChoice::Singleton => [*x].into(),
                BisectionChoice::Greedy => grow_bisection(g, *x, &ds[*d]),
            })
            .collect();
        let last = factors.pop().expect("factorizations are nonempty");
        let prefix = factors
            .iter()
            .skip(1)
            .fold(factors.first().cloned(), |acc, b| acc.map(|a| g.set_product(&a, b)));
        let land = |beta: usize| -> Option<usize> {
            match &prefix {
                None => Some(beta),
                Some(p) => p.iter().find_map(|x| g.compose(*x, beta)),
            }
        };
        let trimmed: ArrowSet = last
            .iter()
            .copied()
            .filter(|b| land(*b).is_some_and(|z| c.contains(&z) && !covered.contains(&z)))
            .collect();
        covered.extend(trimmed.iter().filter_map(|b| land(*b)));
        factors.push(trimmed);
        terms.push(IndicatorTerm {
            sets: word.iter().map(|(d, _)| *d).collect(),
            factors,
        });
    }
    Ok(Decomposition { terms })
}
