//! Leavitt path algebras (and their Cohn algebras) via oriented string rewriting.

use std::collections::{BTreeMap, HashMap};

use crate::exactlin::{Field, Scalar, SparseVec, Subspace};
use crate::graded::{Element, GradedAlgebra, Window};
use crate::realization::RealizationData;

use super::{Graph, InstanceError, Path};

/// A generator: vertex `v`, edge `e` or ghost edge `e*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Vertex(usize),
    Edge(usize),
    Ghost(usize),
}

pub type Word = Vec<Gen>;

/// Finite linear combination of generator words.
pub type WordComb = BTreeMap<Word, Scalar>;

fn add_term(out: &mut WordComb, w: Word, c: &Scalar) {
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

/// Length-two rewriting rules for the path algebra relations.
///
/// Rules: non-composable pairs vanish; vertices are absorbed; `e* f → δ s(e)`;
/// and, when `cuntz_krieger` holds, `e_v e_v* → v − Σ_{f ≠ e_v, r(f) = v} f f*`
/// for the special edge `e_v`, the least-named edge with range `v`.
#[derive(Clone, Debug)]
pub struct LpaRules {
    graph: Graph,
    field: Field,
    cuntz_krieger: bool,
    special: Vec<Option<usize>>,
}

/// Outcome of comparing both reductions of every overlapping redex triple.
#[derive(Clone, Debug)]
pub struct CriticalPairReport {
    pub checked: usize,
    pub failures: Vec<(Word, WordComb, WordComb)>,
}

impl CriticalPairReport {
    pub fn confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LpaRules {
    pub fn new(graph: &Graph, field: Field, cuntz_krieger: bool) -> Self {
        let special = (0..graph.vertices().len())
            .map(|v| graph.range_inverse(v).first().copied())
            .collect();
        LpaRules {
            graph: graph.clone(),
            field,
            cuntz_krieger,
            special,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cuntz_krieger(&self) -> bool {
        self.cuntz_krieger
    }

    /// Special edge of a regular vertex.
    pub fn special_edge(&self, v: usize) -> Option<usize> {
        self.special[v]
    }

    pub fn generators(&self) -> Vec<Gen> {
        let n = self.graph.vertices().len();
        let m = self.graph.edges().len();
        (0..n)
            .map(Gen::Vertex)
            .chain((0..m).map(Gen::Edge))
            .chain((0..m).map(Gen::Ghost))
            .collect()
    }

    fn range(&self, g: Gen) -> usize {
        match g {
            Gen::Vertex(v) => v,
            Gen::Edge(e) => self.graph.edges()[e].range,
            Gen::Ghost(e) => self.graph.edges()[e].source,
        }
    }

    fn source(&self, g: Gen) -> usize {
        match g {
            Gen::Vertex(v) => v,
            Gen::Edge(e) => self.graph.edges()[e].source,
            Gen::Ghost(e) => self.graph.edges()[e].range,
        }
    }

    pub fn degree(word: &[Gen]) -> i64 {
        word.iter()
            .map(|g| match g {
                Gen::Vertex(_) => 0,
                Gen::Edge(_) => 1,
                Gen::Ghost(_) => -1,
            })
            .sum()
    }

    pub fn gen_name(&self, g: Gen) -> String {
        match g {
            Gen::Vertex(v) => self.graph.vertices()[v].clone(),
            Gen::Edge(e) => self.graph.edges()[e].name.clone(),
            Gen::Ghost(e) => format!("{}*", self.graph.edges()[e].name),
        }
    }

    pub fn word_name(&self, w: &[Gen]) -> String {
        w.iter().map(|g| self.gen_name(*g)).collect()
    }

    /// Replacement for the pair `x y`, or `None` if the pair is irreducible.
    /// An empty replacement means the pair is zero.
    pub fn rewrite_pair(&self, x: Gen, y: Gen) -> Option<Vec<(Word, Scalar)>> {
        let one = self.field.one();
        if self.source(x) != self.range(y) {
            return Some(Vec::new());
        }
        match (x, y) {
            (Gen::Vertex(_), _) => Some(vec![(vec![y], one)]),
            (_, Gen::Vertex(_)) => Some(vec![(vec![x], one)]),
            (Gen::Ghost(e), Gen::Edge(f)) => Some(if e == f {
                vec![(vec![Gen::Vertex(self.graph.edges()[e].source)], one)]
            } else {
                Vec::new()
            }),
            (Gen::Edge(e), Gen::Ghost(f))
                if self.cuntz_krieger && e == f && self.special[self.range(x)] == Some(e) =>
            {
                let v = self.range(x);
                let mut out = vec![(vec![Gen::Vertex(v)], one)];
                for h in self.graph.range_inverse(v) {
                    if h != e {
                        out.push((vec![Gen::Edge(h), Gen::Ghost(h)], self.field.from_i64(-1)));
                    }
                }
                Some(out)
            }
            _ => None,
        }
    }

    fn first_redex(&self, w: &[Gen]) -> Option<(usize, Vec<(Word, Scalar)>)> {
        (0..w.len().saturating_sub(1))
            .find_map(|k| self.rewrite_pair(w[k], w[k + 1]).map(|rep| (k, rep)))
    }

    pub fn is_irreducible(&self, w: &[Gen]) -> bool {
        self.first_redex(w).is_none()
    }

    /// Applies the rule at `pos` once.
    pub fn step_at(&self, w: &[Gen], pos: usize) -> Option<WordComb> {
        let rep = self.rewrite_pair(w[pos], w[pos + 1])?;
        let mut out = WordComb::new();
        for (r, c) in rep {
            let mut nw = w[..pos].to_vec();
            nw.extend(r);
            nw.extend_from_slice(&w[pos + 2..]);
            add_term(&mut out, nw, &c);
        }
        Some(out)
    }

    /// Unique irreducible form, reducing leftmost redexes first.
    pub fn normalize(&self, input: &WordComb) -> WordComb {
        let mut out = WordComb::new();
        let mut stack: Vec<(Word, Scalar)> = input.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = stack.pop() {
            match self.first_redex(&w) {
                None => add_term(&mut out, w, &c),
                Some((pos, rep)) => {
                    for (r, rc) in rep {
                        let mut nw = w[..pos].to_vec();
                        nw.extend(r);
                        nw.extend_from_slice(&w[pos + 2..]);
                        stack.push((nw, &c * &rc));
                    }
                }
            }
        }
        out
    }

    pub fn normalize_word(&self, w: &[Gen]) -> WordComb {
        let mut input = WordComb::new();
        add_term(&mut input, w.to_vec(), &self.field.one());
        self.normalize(&input)
    }

    /// Checks every overlap `x y z` of two redexes for joinability.
    pub fn critical_pairs(&self) -> CriticalPairReport {
        let gens = self.generators();
        let mut report = CriticalPairReport {
            checked: 0,
            failures: Vec::new(),
        };
        for &x in &gens {
            for &y in &gens {
                if self.rewrite_pair(x, y).is_none() {
                    continue;
                }
                for &z in &gens {
                    if self.rewrite_pair(y, z).is_none() {
                        continue;
                    }
                    report.checked += 1;
                    let w = vec![x, y, z];
                    let left = self.normalize(&self.step_at(&w, 0).expect("redex"));
                    let right = self.normalize(&self.step_at(&w, 1).expect("redex"));
                    if left != right {
                        report.failures.push((w, left, right));
                    }
                }
            }
        }
        report
    }

    /// The word `α β*` for paths with `s(α) = s(β)`.
    pub fn monomial(&self, alpha: &Path, beta: &Path) -> Word {
        match (alpha, beta) {
            (Path::Vertex(v), Path::Vertex(_)) => vec![Gen::Vertex(*v)],
            _ => {
                let mut w = Vec::new();
                if let Path::Edges(es) = alpha {
                    w.extend(es.iter().map(|e| Gen::Edge(*e)));
                }
                if let Path::Edges(es) = beta {
                    w.extend(es.iter().rev().map(|e| Gen::Ghost(*e)));
                }
                w
            }
        }
    }

    /// Parses sums such as `ee* + ff* - 2 u` or `1/2 e f*`. Generator names
    /// are matched greedily (longest first); `*` after an edge name makes it a ghost.
    pub fn parse_expression(&self, text: &str) -> Result<WordComb, InstanceError> {
        let mut names: Vec<(String, Gen)> = Vec::new();
        for (k, v) in self.graph.vertices().iter().enumerate() {
            names.push((v.clone(), Gen::Vertex(k)));
        }
        for (k, e) in self.graph.edges().iter().enumerate() {
            names.push((e.name.clone(), Gen::Edge(k)));
        }
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));

        let mut out = WordComb::new();
        let mut negative = false;
        let mut term_start = 0usize;
        let mut terms: Vec<(bool, usize, usize)> = Vec::new();
        for (pos, ch) in text.char_indices() {
            if ch == '+' || ch == '-' {
                if !text[term_start..pos].trim().is_empty() {
                    terms.push((negative, term_start, pos));
                    negative = false;
                }
                if ch == '-' {
                    negative = !negative;
                }
                term_start = pos + 1;
            }
        }
        if text[term_start..].trim().is_empty() {
            return Err(InstanceError::Parse {
                text: text.to_string(),
                position: text.len(),
                message: "expected a term".into(),
            });
        } else {
            terms.push((negative, term_start, text.len()));
        }

        for (neg, start, end) in terms {
            let term = &text[start..end];
            let lead = term.len() - term.trim_start().len();
            let body = term.trim();
            let coeff_len = body
                .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                .unwrap_or(body.len());
            let (coeff, mut rest, mut offset) = if coeff_len > 0 {
                let c = self.field.parse_scalar(&body[..coeff_len]).map_err(|e| InstanceError::Parse {
                    text: text.to_string(),
                    position: start + lead,
                    message: e.to_string(),
                })?;
                (c, &body[coeff_len..], start + lead + coeff_len)
            } else {
                (self.field.one(), body, start + lead)
            };
            let mut word = Word::new();
            loop {
                let trimmed = rest.trim_start();
                offset += rest.len() - trimmed.len();
                rest = trimmed;
                if rest.is_empty() {
                    break;
                }
                let Some((name, g)) = names.iter().find(|(n, _)| rest.starts_with(n.as_str())) else {
                    return Err(InstanceError::Parse {
                        text: text.to_string(),
                        position: offset,
                        message: "unknown generator".into(),
                    });
                };
                let mut g = *g;
                rest = &rest[name.len()..];
                offset += name.len();
                if let Some(after) = rest.strip_prefix('*') {
                    match g {
                        Gen::Edge(e) => g = Gen::Ghost(e),
                        _ => {
                            return Err(InstanceError::Parse {
                                text: text.to_string(),
                                position: offset,
                                message: "only edges have ghosts".into(),
                            })
                        }
                    }
                    rest = after;
                    offset += 1;
                }
                word.push(g);
            }
            if word.is_empty() {
                return Err(InstanceError::Parse {
                    text: text.to_string(),
                    position: start + lead,
                    message: "term has no generators".into(),
                });
            }
            let c = if neg { -coeff } else { coeff };
            add_term(&mut out, word, &c);
        }
        Ok(out)
    }
}

/// A Leavitt path algebra (or Cohn algebra) with its normal-form basis.
#[derive(Clone, Debug)]
pub struct Lpa {
    rules: LpaRules,
    algebra: GradedAlgebra,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

/// The Leavitt path algebra `L_K(E)` on normal-form monomials `α β*`.
///
/// For acyclic graphs every path is kept and the window widens to cover all
/// degrees. For graphs with cycles, paths longer than `max_word_len` and
/// degrees outside the window are truncated.
pub fn build_lpa(graph: &Graph, field: Field, window: Window) -> Result<Lpa, InstanceError> {
    Lpa::build(graph, field, window, true)
}

/// The Cohn path algebra: every Leavitt relation except the Cuntz-Krieger one.
pub fn build_cohn(graph: &Graph, field: Field, window: Window) -> Result<Lpa, InstanceError> {
    Lpa::build(graph, field, window, false)
}

/// Normal form of an expression in the generators of `lpa`.
pub fn lpa_normal_form(lpa: &Lpa, expr: &str) -> Result<Element, InstanceError> {
    lpa.normal_form(expr)
}

impl Lpa {
    fn build(graph: &Graph, field: Field, window: Window, cuntz_krieger: bool) -> Result<Self, InstanceError> {
        let rules = LpaRules::new(graph, field, cuntz_krieger);
        let (max_len, window) = match graph.longest_path() {
            Some(l) => (l, window.covering([-(l as i64), l as i64])),
            None => (window.max_word_len, window),
        };
        let paths = graph.paths(max_len);
        let mut words: Vec<Word> = Vec::new();
        for alpha in &paths {
            for beta in &paths {
                if graph.path_source(alpha) != graph.path_source(beta) {
                    continue;
                }
                let w = rules.monomial(alpha, beta);
                if !window.contains(LpaRules::degree(&w)) || !rules.is_irreducible(&w) {
                    continue;
                }
                words.push(w);
            }
        }
        words.sort_by(|a, b| {
            LpaRules::degree(a)
                .cmp(&LpaRules::degree(b))
                .then(a.len().cmp(&b.len()))
                .then(a.cmp(b))
        });
        let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let labels: Vec<(String, i64)> = words
            .iter()
            .map(|w| (rules.word_name(w), LpaRules::degree(w)))
            .collect();
        let name = format!(
            "{}({} vertices, {} edges)",
            if cuntz_krieger { "L_K" } else { "C_K" },
            graph.vertices().len(),
            graph.edges().len()
        );
        let algebra = GradedAlgebra::from_fn(name, field, window, labels, |i, j| {
            let mut w = words[i].clone();
            w.extend_from_slice(&words[j]);
            let nf = rules.normalize_word(&w);
            let mut out = SparseVec::zero();
            for (word, c) in &nf {
                out.add_at(*index.get(word)?, c);
            }
            Some(out)
        })?;
        Ok(Lpa {
            rules,
            algebra,
            words,
            index,
        })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn rules(&self) -> &LpaRules {
        &self.rules
    }

    pub fn graph(&self) -> &Graph {
        self.rules.graph()
    }

    pub fn word(&self, label: usize) -> &Word {
        &self.words[label]
    }

    /// Coordinates of a combination of words, after normalizing.
    pub fn element_of(&self, comb: &WordComb) -> Option<Element> {
        let nf = self.rules.normalize(comb);
        let mut out = SparseVec::zero();
        for (w, c) in &nf {
            out.add_at(*self.index.get(w)?, c);
        }
        Some(out)
    }

    pub fn normal_form(&self, expr: &str) -> Result<Element, InstanceError> {
        let comb = self.rules.parse_expression(expr)?;
        self.element_of(&comb).ok_or(InstanceError::OutsideWindow(expr.to_string()))
    }

    fn span_of(&self, gens: impl Iterator<Item = Gen>) -> Subspace {
        let vectors: Vec<Element> = gens
            .map(|g| self.element_of(&[(vec![g], self.rules.field.one())].into_iter().collect()))
            .map(|v| v.expect("generators are normal monomials"))
            .collect();
        Subspace::span(self.algebra.field(), &vectors).expect("single field")
    }

    /// `span E⁰`.
    pub fn vertex_space(&self) -> Subspace {
        self.span_of((0..self.graph().vertices().len()).map(Gen::Vertex))
    }

    /// `span E¹`.
    pub fn edge_space(&self) -> Subspace {
        self.span_of((0..self.graph().edges().len()).map(Gen::Edge))
    }

    /// `span (E¹)*`.
    pub fn ghost_space(&self) -> Subspace {
        self.span_of((0..self.graph().edges().len()).map(Gen::Ghost))
    }

    /// `R = span E⁰`, `I = span E¹`, `J = span (E¹)*`.
    pub fn realization_data(&self) -> RealizationData {
        RealizationData::new(
            self.algebra.clone(),
            self.vertex_space(),
            self.edge_space(),
            self.ghost_space(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e_star() -> Lpa {
        build_lpa(&Graph::e_star(), Field::Rational, Window::default()).unwrap()
    }

    #[test]
    fn e_star_dimension_and_confluence() {
        let lpa = e_star();
        assert_eq!(lpa.algebra().dim(), 25);
        let report = lpa.rules().critical_pairs();
        assert!(report.checked > 0);
        assert!(report.confluent(), "{:?}", report.failures);
    }

    #[test]
    fn relation_examples() {
        let lpa = e_star();
        assert!(lpa.normal_form("ee* + ff* + gg* - u - w").unwrap().is_zero());
        assert_eq!(lpa.normal_form("vv").unwrap(), lpa.normal_form("v").unwrap());
        assert_eq!(lpa.normal_form("ew").unwrap(), lpa.normal_form("e").unwrap());
        assert!(lpa.normal_form("e*f").unwrap().is_zero());
        assert!(lpa.normal_form("eu").unwrap().is_zero());
        assert_eq!(lpa.normal_form("f*f").unwrap(), lpa.normal_form("v").unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let lpa = e_star();
        match lpa.normal_form("ee* + x") {
            Err(InstanceError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        assert!(lpa.normal_form("u*").is_err());
        assert!(lpa.normal_form("u +").is_err());
    }

    #[test]
    fn cohn_algebra_keeps_special_pairs() {
        let cohn = build_cohn(&Graph::e_star(), Field::Rational, Window::default()).unwrap();
        assert_eq!(cohn.algebra().dim(), 30);
        assert!(cohn.rules().critical_pairs().confluent());
        assert!(!cohn.normal_form("ff* + gg* - w").unwrap().is_zero());
    }

    #[test]
    fn single_vertex_is_the_field() {
        let g = Graph::new(&["x"], &[]).unwrap();
        let lpa = build_lpa(&g, Field::Prime(5), Window::default()).unwrap();
        assert_eq!(lpa.algebra().dim(), 1);
    }
}
