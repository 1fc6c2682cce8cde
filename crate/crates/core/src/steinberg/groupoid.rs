use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use super::GroupoidError;

pub type ArrowSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// Index of the unit `r(γ)`.
    pub range: usize,
    /// Index of the unit `s(γ)`.
    pub source: usize,
    pub inverse: usize,
    /// Cocycle value `c(γ)`.
    pub degree: i64,
}

/// A finite discrete groupoid with a `Z`-valued cocycle.
///
/// `γδ` is defined exactly when `s(γ) = r(δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    arrows: Vec<Arrow>,
    compose: Vec<Vec<Option<usize>>>,
    index: HashMap<String, usize>,
}

impl FiniteGroupoid {
    /// Validates the groupoid axioms and the cocycle law.
    pub fn new(
        arrows: Vec<Arrow>,
        products: &BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, GroupoidError> {
        let n = arrows.len();
        let mut index = HashMap::new();
        for (k, a) in arrows.iter().enumerate() {
            if index.insert(a.name.clone(), k).is_some() {
                return Err(GroupoidError::DuplicateArrow(a.name.clone()));
            }
            if a.range >= n || a.source >= n || a.inverse >= n {
                return Err(GroupoidError::Axiom(format!("{} refers to a missing arrow", a.name)));
            }
        }
        let mut compose = vec![vec![None; n]; n];
        for (&(a, b), &c) in products {
            if a >= n || b >= n || c >= n {
                return Err(GroupoidError::Axiom("product refers to a missing arrow".into()));
            }
            compose[a][b] = Some(c);
        }
        let g = FiniteGroupoid {
            arrows,
            compose,
            index,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GroupoidError> {
        let axiom = |m: String| Err(GroupoidError::Axiom(m));
        let n = self.len();
        for (k, a) in self.arrows.iter().enumerate() {
            for u in [a.range, a.source] {
                let unit = &self.arrows[u];
                if unit.range != u || unit.source != u || unit.inverse != u {
                    return axiom(format!("{} is not a unit", unit.name));
                }
            }
            if self.arrows[a.inverse].inverse != k {
                return axiom(format!("inverse of {} is not an involution", a.name));
            }
            if self.compose[k][a.inverse] != Some(a.range) || self.compose[a.inverse][k] != Some(a.source) {
                return axiom(format!("{} composed with its inverse is not a unit", a.name));
            }
            if self.compose[a.range][k] != Some(k) || self.compose[k][a.source] != Some(k) {
                return axiom(format!("units do not fix {}", a.name));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.arrows[a].source == self.arrows[b].range;
                match self.compose[a][b] {
                    Some(c) if composable => {
                        if self.arrows[c].range != self.arrows[a].range
                            || self.arrows[c].source != self.arrows[b].source
                        {
                            return axiom(format!("{}{} has the wrong endpoints", self.name(a), self.name(b)));
                        }
                        if self.arrows[c].degree != self.arrows[a].degree + self.arrows[b].degree {
                            return Err(GroupoidError::Cocycle {
                                left: self.name(a).to_string(),
                                right: self.name(b).to_string(),
                            });
                        }
                    }
                    None if !composable => {}
                    _ => {
                        return axiom(format!(
                            "product {}{} defined iff s = r fails",
                            self.name(a),
                            self.name(b)
                        ))
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.compose[a][b] else { continue };
                for c in 0..n {
                    if let Some(bc) = self.compose[b][c] {
                        if self.compose[ab][c] != self.compose[a][bc] {
                            return axiom(format!(
                                "product is not associative on ({}, {}, {})",
                                self.name(a),
                                self.name(b),
                                self.name(c)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Disjoint pair groupoids: one arrow `(x,m,y)` per ordered pair in a
    /// class, with `m = w(x) - w(y)` from the given weights.
    pub fn pair_classes(classes: Vec<Vec<(String, i64)>>) -> Result<Self, GroupoidError> {
        let mut arrows = Vec::new();
        let mut products = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for class in &classes {
            let base = arrows.len();
            let k = class.len();
            for (x, _) in class {
                if !seen.insert(x.clone()) {
                    return Err(GroupoidError::DuplicateArrow(x.clone()));
                }
            }
            let at = |i: usize, j: usize| base + i * k + j;
            for (i, (x, wx)) in class.iter().enumerate() {
                for (j, (y, wy)) in class.iter().enumerate() {
                    let m = wx - wy;
                    arrows.push(Arrow {
                        name: format!("({x},{m},{y})"),
                        range: at(i, i),
                        source: at(j, j),
                        inverse: at(j, i),
                        degree: m,
                    });
                }
            }
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        products.insert((at(i, j), at(j, l)), at(i, l));
                    }
                }
            }
        }
        FiniteGroupoid::new(arrows, &products)
    }

    /// The cyclic group of order `n` in degree zero.
    pub fn cyclic_group(n: usize) -> Result<Self, GroupoidError> {
        if n == 0 {
            return Err(GroupoidError::Axiom("a group needs at least one element".into()));
        }
        let arrows = (0..n)
            .map(|k| Arrow {
                name: format!("g^{k}"),
                range: 0,
                source: 0,
                inverse: (n - k) % n,
                degree: 0,
            })
            .collect();
        let products = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a, b), (a + b) % n)))
            .collect();
        FiniteGroupoid::new(arrows, &products)
    }

    /// Disjoint pair classes on at most `max_arrows` arrows with weights in `-2..=2`.
    pub fn random_pair_classes(rng: &mut impl Rng, max_arrows: usize) -> Self {
        let mut classes = Vec::new();
        let mut used = 0;
        let mut point = 0;
        loop {
            let room = ((max_arrows - used) as f64).sqrt() as usize;
            if room == 0 {
                break;
            }
            let size = rng.gen_range(1..=room.min(4));
            let class = (0..size)
                .map(|_| {
                    point += 1;
                    (format!("p{point}"), rng.gen_range(-2..=2))
                })
                .collect();
            classes.push(class);
            used += size * size;
            if rng.gen_bool(0.35) {
                break;
            }
        }
        FiniteGroupoid::pair_classes(classes).expect("pair classes are groupoids")
    }

    /// A random bisection: arrows visited in random order, kept while `r` and `s` stay injective.
    pub fn random_bisection(&self, rng: &mut impl Rng) -> ArrowSet {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.shuffle(rng);
        let keep = rng.gen_range(1..=self.len().max(1));
        let (mut ranges, mut sources) = (BTreeSet::new(), BTreeSet::new());
        let mut out = ArrowSet::new();
        for k in order.into_iter().take(keep) {
            if !ranges.contains(&self.range(k)) && !sources.contains(&self.source(k)) {
                ranges.insert(self.range(k));
                sources.insert(self.source(k));
                out.insert(k);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, k: usize) -> &Arrow {
        &self.arrows[k]
    }

    pub fn name(&self, k: usize) -> &str {
        &self.arrows[k].name
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Arrow indices for `names`, failing on the first unknown one.
    pub fn arrow_set(&self, names: &[&str]) -> Result<ArrowSet, GroupoidError> {
        names
            .iter()
            .map(|n| {
                self.arrow_index(n)
                    .ok_or_else(|| GroupoidError::UnknownArrow(n.to_string()))
            })
            .collect()
    }

    pub fn set_names(&self, set: &ArrowSet) -> Vec<String> {
        set.iter().map(|k| self.name(*k).to_string()).collect()
    }

    pub fn is_unit(&self, k: usize) -> bool {
        self.arrows[k].range == k
    }

    pub fn units(&self) -> ArrowSet {
        (0..self.len()).filter(|k| self.is_unit(*k)).collect()
    }

    pub fn range(&self, k: usize) -> usize {
        self.arrows[k].range
    }

    pub fn source(&self, k: usize) -> usize {
        self.arrows[k].source
    }

    pub fn inverse(&self, k: usize) -> usize {
        self.arrows[k].inverse
    }

    pub fn degree(&self, k: usize) -> i64 {
        self.arrows[k].degree
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose[a][b]
    }

    /// `c⁻¹(n)`.
    pub fn degree_set(&self, n: i64) -> ArrowSet {
        (0..self.len()).filter(|k| self.degree(*k) == n).collect()
    }

    /// Attained cocycle values, ascending.
    pub fn degrees(&self) -> BTreeSet<i64> {
        self.arrows.iter().map(|a| a.degree).collect()
    }

    /// `XY = {xy : x ∈ X, y ∈ Y composable}`.
    pub fn set_product(&self, xs: &ArrowSet, ys: &ArrowSet) -> ArrowSet {
        let mut out = ArrowSet::new();
        for x in xs {
            for y in ys {
                if let Some(z) = self.compose(*x, *y) {
                    out.insert(z);
                }
            }
        }
        out
    }

    pub fn set_inverse(&self, xs: &ArrowSet) -> ArrowSet {
        xs.iter().map(|x| self.inverse(*x)).collect()
    }

    pub fn set_ranges(&self, xs: &ArrowSet) -> ArrowSet {
        xs.iter().map(|x| self.range(*x)).collect()
    }

    pub fn set_sources(&self, xs: &ArrowSet) -> ArrowSet {
        xs.iter().map(|x| self.source(*x)).collect()
    }

    /// `r` and `s` are injective on `set`.
    pub fn is_bisection(&self, set: &ArrowSet) -> bool {
        self.set_ranges(set).len() == set.len() && self.set_sources(set).len() == set.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pair_groupoid_composition() {
        let g = FiniteGroupoid::pair_classes(vec![vec![("a".into(), 0), ("b".into(), 2)]]).unwrap();
        assert_eq!(g.len(), 4);
        let ab = g.arrow_index("(a,-2,b)").unwrap();
        let ba = g.arrow_index("(b,2,a)").unwrap();
        assert_eq!(g.compose(ab, ba), g.arrow_index("(a,0,a)"));
        assert_eq!(g.degree_set(1).len(), 0);
        assert_eq!(g.degree_set(2).len(), 1);
    }

    #[test]
    fn cyclic_group_has_one_unit() {
        let g = FiniteGroupoid::cyclic_group(3).unwrap();
        assert_eq!(g.units().len(), 1);
        assert_eq!(g.compose(1, 2), Some(0));
    }

    #[test]
    fn broken_cocycle_is_rejected() {
        let mut products = BTreeMap::new();
        products.insert((0, 0), 0);
        let arrows = vec![Arrow {
            name: "u".into(),
            range: 0,
            source: 0,
            inverse: 0,
            degree: 1,
        }];
        assert!(matches!(
            FiniteGroupoid::new(arrows, &products),
            Err(GroupoidError::Cocycle { .. })
        ));
    }

    #[test]
    fn random_groupoids_respect_the_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = FiniteGroupoid::random_pair_classes(&mut rng, 30);
            assert!(!g.is_empty() && g.len() <= 30);
        }
    }
}
