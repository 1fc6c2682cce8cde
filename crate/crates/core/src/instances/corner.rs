//! Corner skew Laurent polynomial rings `R[t₊, t₋, α]` by traced word rewriting.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactlin::{Scalar, SparseVec, Subspace};
use crate::graded::{GradedAlgebra, Window};
use crate::realization::RealizationData;

use super::{BaseRing, InstanceError, LinearMap};

/// `t₋` has degree `+1`, `t₊` degree `-1`, `φ(b)` degree `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    TMinus,
    TPlus,
    Phi(usize),
}

pub type CsWord = Vec<Letter>;

/// Rewrite rules, named by their left-hand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CsRule {
    /// `φ(a) φ(b) → φ(ab)`
    PhiPhi,
    /// `t₋ t₊ → 1`
    MinusPlus,
    /// `t₊ t₋ → φ(p)`
    PlusMinus,
    /// `φ(r) t₋ → t₋ φ(α(r))`
    PhiMinus,
    /// `t₊ φ(r) → φ(α(r)) t₊`
    PlusPhi,
    /// `t₋ φ(r) t₊ → φ(α⁻¹(p r p))`
    MinusPhiPlus,
    /// A word without `φ` is padded with `φ(1)`.
    PadUnit,
}

impl fmt::Display for CsRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CsRule::PhiPhi => "phi(a)phi(b) -> phi(ab)",
            CsRule::MinusPlus => "t- t+ -> 1",
            CsRule::PlusMinus => "t+ t- -> phi(p)",
            CsRule::PhiMinus => "phi(r) t- -> t- phi(alpha(r))",
            CsRule::PlusPhi => "t+ phi(r) -> phi(alpha(r)) t+",
            CsRule::MinusPhiPlus => "t- phi(r) t+ -> phi(alpha^-1(prp))",
            CsRule::PadUnit => "pad with phi(1)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: CsRule,
    pub position: usize,
}

pub type CsComb = BTreeMap<CsWord, Scalar>;

/// `(rule, start, end, replacement)` for one rewrite position.
type Redex = (CsRule, usize, usize, Vec<(CsWord, Scalar)>);

fn add_term(out: &mut CsComb, w: CsWord, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let sum = match out.get(&w) {
        Some(old) => old + c,
        None => c.clone(),
    };
    if sum.is_zero() {
        out.remove(&w);
    } else {
        out.insert(w, sum);
    }
}

/// `R`, an idempotent `p` and an isomorphism `α: R → pRp`.
#[derive(Clone, Debug)]
pub struct CornerSkewSpec {
    pub base: BaseRing,
    pub p: SparseVec,
    pub alpha: LinearMap,
    pub window: Window,
}

impl CornerSkewSpec {
    /// `R = K`, `p = 1`, `α = id`: the Laurent polynomials.
    pub fn laurent(field: crate::exactlin::Field, window: Window) -> Self {
        CornerSkewSpec {
            base: BaseRing::scalars(field),
            p: SparseVec::unit(field, 0),
            alpha: LinearMap::identity(field, 1),
            window,
        }
    }

    /// Checks `p² = p` and that `α` is a multiplicative bijection onto `pRp`.
    pub fn validate(&self) -> Result<(), InstanceError> {
        let r = &self.base;
        let bad = |m: &str| Err(InstanceError::InvalidCornerSkew(m.to_string()));
        if r.mul(&self.p, &self.p) != self.p {
            return bad("p is not idempotent");
        }
        if self.alpha.images.len() != r.dim() {
            return bad("alpha must give one image per basis label");
        }
        r.check_multiplicative(&self.alpha)
            .map_err(InstanceError::InvalidCornerSkew)?;
        if self.alpha.rank() != r.dim() {
            return bad("alpha is not injective");
        }
        let corner: Vec<SparseVec> = (0..r.dim())
            .map(|b| r.mul(&r.mul(&self.p, &r.basis(b)), &self.p))
            .collect();
        let corner = Subspace::span(r.field(), &corner)?;
        let image = self.alpha.image(r.field());
        if !image.same_as(&corner) {
            return bad("alpha does not map onto pRp");
        }
        Ok(())
    }
}

/// The rewriting system of a validated [`CornerSkewSpec`].
#[derive(Clone, Debug)]
pub struct CornerSkewRules {
    spec: CornerSkewSpec,
}

impl CornerSkewRules {
    pub fn new(spec: &CornerSkewSpec) -> Result<Self, InstanceError> {
        spec.validate()?;
        Ok(CornerSkewRules { spec: spec.clone() })
    }

    pub fn spec(&self) -> &CornerSkewSpec {
        &self.spec
    }

    fn phis(&self, r: &SparseVec) -> Vec<(CsWord, Scalar)> {
        r.iter().map(|(b, c)| (vec![Letter::Phi(*b)], c.clone())).collect()
    }

    /// Redex at the leftmost position: the rule, its span and replacement.
    fn first_redex(&self, w: &[Letter]) -> Option<Redex> {
        let base = &self.spec.base;
        for k in 0..w.len() {
            if k + 2 < w.len() {
                if let (Letter::TMinus, Letter::Phi(b), Letter::TPlus) = (w[k], w[k + 1], w[k + 2]) {
                    let prp = base.mul(&base.mul(&self.spec.p, &base.basis(b)), &self.spec.p);
                    let pre = self.spec.alpha.preimage(&prp).expect("alpha maps onto pRp");
                    return Some((CsRule::MinusPhiPlus, k, 3, self.phis(&pre)));
                }
            }
            if k + 1 >= w.len() {
                break;
            }
            let found = match (w[k], w[k + 1]) {
                (Letter::Phi(a), Letter::Phi(b)) => {
                    Some((CsRule::PhiPhi, self.phis(&base.mul(&base.basis(a), &base.basis(b)))))
                }
                (Letter::TMinus, Letter::TPlus) => {
                    Some((CsRule::MinusPlus, vec![(Vec::new(), base.field().one())]))
                }
                (Letter::TPlus, Letter::TMinus) => Some((CsRule::PlusMinus, self.phis(&self.spec.p))),
                (Letter::Phi(a), Letter::TMinus) => {
                    let image = self.spec.alpha.apply(&base.basis(a));
                    let rep = image
                        .iter()
                        .map(|(b, c)| (vec![Letter::TMinus, Letter::Phi(*b)], c.clone()))
                        .collect();
                    Some((CsRule::PhiMinus, rep))
                }
                (Letter::TPlus, Letter::Phi(a)) => {
                    let image = self.spec.alpha.apply(&base.basis(a));
                    let rep = image
                        .iter()
                        .map(|(b, c)| (vec![Letter::Phi(*b), Letter::TPlus], c.clone()))
                        .collect();
                    Some((CsRule::PlusPhi, rep))
                }
                _ => None,
            };
            if let Some((rule, rep)) = found {
                return Some((rule, k, 2, rep));
            }
        }
        None
    }

    /// Reduces to canonical shapes `t₋ⁿ φ(r)`, `φ(r)` or `φ(r) t₊ⁿ`, recording
    /// every rule application.
    pub fn reduce_traced(&self, input: &CsComb) -> (CsComb, Vec<RewriteStep>) {
        let one = self.spec.base.one().clone();
        let mut out = CsComb::new();
        let mut trace = Vec::new();
        let mut stack: Vec<(CsWord, Scalar)> = input.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = stack.pop() {
            match self.first_redex(&w) {
                Some((rule, pos, len, rep)) => {
                    trace.push(RewriteStep { rule, position: pos });
                    for (r, rc) in rep {
                        let mut nw = w[..pos].to_vec();
                        nw.extend(r);
                        nw.extend_from_slice(&w[pos + len..]);
                        stack.push((nw, &c * &rc));
                    }
                }
                None if !w.iter().any(|l| matches!(l, Letter::Phi(_))) => {
                    // Irreducible φ-free words are t₋ⁿ or t₊ⁿ.
                    let minus = w.first() == Some(&Letter::TMinus);
                    trace.push(RewriteStep {
                        rule: CsRule::PadUnit,
                        position: if minus { w.len() } else { 0 },
                    });
                    for (b, bc) in one.iter() {
                        let mut nw = w.clone();
                        if minus {
                            nw.push(Letter::Phi(*b));
                        } else {
                            nw.insert(0, Letter::Phi(*b));
                        }
                        add_term(&mut out, nw, &(&c * bc));
                    }
                }
                None => add_term(&mut out, w, &c),
            }
        }
        (out, trace)
    }

    pub fn reduce_word(&self, w: &[Letter]) -> (CsComb, Vec<RewriteStep>) {
        let mut input = CsComb::new();
        add_term(&mut input, w.to_vec(), &self.spec.base.field().one());
        self.reduce_traced(&input)
    }

    pub fn degree(w: &[Letter]) -> i64 {
        w.iter()
            .map(|l| match l {
                Letter::TMinus => 1,
                Letter::TPlus => -1,
                Letter::Phi(_) => 0,
            })
            .sum()
    }

    /// Whether `w` is `t₋ⁿ φ(b)`, `φ(b)` or `φ(b) t₊ⁿ`.
    pub fn is_canonical(w: &[Letter]) -> bool {
        let phis: Vec<usize> = w
            .iter()
            .enumerate()
            .filter(|(_, l)| matches!(l, Letter::Phi(_)))
            .map(|(k, _)| k)
            .collect();
        let [k] = phis[..] else { return false };
        w[..k].iter().all(|l| *l == Letter::TMinus)
            && w[k + 1..].iter().all(|l| *l == Letter::TPlus)
            && (k == 0 || k == w.len() - 1)
    }

    pub fn word_name(&self, w: &[Letter]) -> String {
        let labels = self.spec.base.labels();
        let mut parts = Vec::new();
        let mut k = 0;
        while k < w.len() {
            let run = w[k..].iter().take_while(|l| **l == w[k]).count();
            let name = match w[k] {
                Letter::TMinus => "t-".to_string(),
                Letter::TPlus => "t+".to_string(),
                Letter::Phi(b) => format!("phi({})", labels[b]),
            };
            match (w[k], run) {
                (Letter::Phi(_), _) => {
                    parts.push(name);
                    k += 1;
                    continue;
                }
                (_, 1) => parts.push(name),
                _ => parts.push(format!("{name}^{run}")),
            }
            k += run;
        }
        parts.join(" ")
    }
}

/// Windowed corner skew ring on its canonical basis.
#[derive(Clone, Debug)]
pub struct CornerSkew {
    rules: CornerSkewRules,
    algebra: GradedAlgebra,
    words: Vec<CsWord>,
    index: HashMap<CsWord, usize>,
}

pub fn build_corner_skew(spec: &CornerSkewSpec) -> Result<CornerSkew, InstanceError> {
    let rules = CornerSkewRules::new(spec)?;
    let d = spec.base.dim();
    let w = spec.window;
    let mut words: Vec<CsWord> = Vec::new();
    for n in w.degrees() {
        for b in 0..d {
            let mut word = Vec::new();
            if n > 0 {
                word.extend(std::iter::repeat_n(Letter::TMinus, n as usize));
                word.push(Letter::Phi(b));
            } else {
                word.push(Letter::Phi(b));
                word.extend(std::iter::repeat_n(Letter::TPlus, n.unsigned_abs() as usize));
            }
            words.push(word);
        }
    }
    let index: HashMap<CsWord, usize> = words.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    let labels = words
        .iter()
        .map(|x| (rules.word_name(x), CornerSkewRules::degree(x)))
        .collect();
    let algebra = GradedAlgebra::from_fn(
        format!("{}[t+, t-, alpha]", spec.base.name()),
        spec.base.field(),
        w,
        labels,
        |i, j| {
            if !w.contains(CornerSkewRules::degree(&words[i]) + CornerSkewRules::degree(&words[j])) {
                return None;
            }
            let mut x = words[i].clone();
            x.extend_from_slice(&words[j]);
            let (nf, _) = rules.reduce_word(&x);
            let mut out = SparseVec::zero();
            for (word, c) in &nf {
                out.add_at(*index.get(word)?, c);
            }
            Some(out)
        },
    )?;
    Ok(CornerSkew {
        rules,
        algebra,
        words,
        index,
    })
}

impl CornerSkew {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn rules(&self) -> &CornerSkewRules {
        &self.rules
    }

    pub fn word(&self, label: usize) -> &CsWord {
        &self.words[label]
    }

    /// Coordinates of a reduced combination, `None` outside the window.
    pub fn element_of(&self, comb: &CsComb) -> Option<SparseVec> {
        let mut out = SparseVec::zero();
        for (w, c) in comb {
            out.add_at(*self.index.get(w)?, c);
        }
        Some(out)
    }

    /// `R = A_0`, `I = A_1`, `J = A_{-1}`.
    pub fn realization_data(&self) -> RealizationData {
        RealizationData::new(
            self.algebra.clone(),
            self.algebra.component_space(0),
            self.algebra.component_space(1),
            self.algebra.component_space(-1),
        )
    }
}
