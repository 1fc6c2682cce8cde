//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Each criterion recomputes its expected values through code paths separate
//! from the verifier under test (path counting, direct arrow composition,
//! hand-built automorphisms) before comparing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gradedcp::exactlin::{kernel, solve, Field, SparseVec, Subspace};
use gradedcp::graded::{products_span, GradedAlgebra, Window};
use gradedcp::instances::{
    boundary_path_groupoid, build_cohn, build_corner_skew, build_crossed_product, build_lpa, CornerSkewRules,
    CornerSkewSpec, CrossedProductSpec, CsRule, Graph, Letter,
};
use gradedcp::io::{graph_from, groupoid_from, htriple_from, Document};
use gradedcp::realization::{
    check_condition_1, check_condition_2, check_condition_3, check_condition_4, check_graded_uniqueness,
    check_ideal_identity, verify_realization, GradedMap, RealizationData,
};
use gradedcp::rsystem::{check_fs_full, check_pi_null_sums, tensor_power_system, RSystem};
use gradedcp::steinberg::{
    check_htriple_generation, check_htriple_hypothesis, check_htriple_products, compare_inverses,
    decompose_indicator, e_star_htriple, steinberg_annihilator, steinberg_realization_data, ArrowSet,
    BisectionChoice, FactorOrder, FiniteGroupoid, HTriple,
};
use gradedcp::verdict::{Certificate, Outcome, Witness};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

const F: Field = Field::Rational;

fn window() -> Window {
    Window::new(-4, 4, 8)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn corpus(name: &str) -> Document {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    Document::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn span_of(a: &GradedAlgebra, exprs: &[&str]) -> Subspace {
    let v: Vec<SparseVec> = exprs.iter().map(|e| a.parse_element(e).unwrap()).collect();
    Subspace::span(a.field(), &v).unwrap()
}

fn two_sink_graph() -> Graph {
    Graph::new(&["a", "b", "x"], &[("h", "a", "x"), ("k", "b", "x")]).unwrap()
}

/// Every instance with realization data used by several criteria.
fn instances() -> Vec<(&'static str, RealizationData)> {
    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let h = e_star_htriple(&g).unwrap();
    vec![
        ("lpa E*", build_lpa(&Graph::e_star(), F, window()).unwrap().realization_data()),
        ("lpa two sinks", build_lpa(&two_sink_graph(), F, window()).unwrap().realization_data()),
        (
            "crossed K^2 swap",
            build_crossed_product(&CrossedProductSpec::swap_k2(F, Window::new(-3, 3, 6)))
                .unwrap()
                .realization_data(),
        ),
        (
            "corner skew Laurent",
            build_corner_skew(&CornerSkewSpec::laurent(F, window())).unwrap().realization_data(),
        ),
        ("steinberg E*", steinberg_realization_data(&g, &h, F).unwrap().0),
    ]
}

fn c1_pipeline() -> Verdict {
    let start = Instant::now();
    let doc = corpus("e_star_htriple.doc");
    let g = groupoid_from(&doc).map_err(|e| e.to_string())?;
    let h = htriple_from(&doc, &g).map_err(|e| e.to_string())?;
    for check in [
        check_htriple_products(&g, &h),
        check_htriple_hypothesis(&g, &h),
        check_htriple_generation(&g, &h).0,
    ] {
        ensure(check.passed(), format!("{check}"))?;
    }
    let cmp = compare_inverses(&g, &h);
    let key = g.arrow_index("(g,-1,ef)").ok_or("no arrow (g,-1,ef)")?;
    ensure(cmp.missing_from_hm1.contains(&key), "(g,-1,ef) not reported missing from H-1")?;
    // Independent: (ef,1,g) ∈ H1 and its inverse is not in H-1.
    let ef1g = g.arrow_index("(ef,1,g)").unwrap();
    ensure(h.h1.contains(&ef1g) && g.inverse(ef1g) == key && !h.hm1.contains(&key), "oracle disagrees")?;
    let (data, _) = steinberg_realization_data(&g, &h, F).map_err(|e| e.to_string())?;
    let report = verify_realization(&data);
    ensure(
        report.certificate == Certificate::WindowedCertified,
        format!("certificate {}", report.certificate),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 1.0, format!("took {elapsed:?}"))?;
    Ok(format!("windowed-certified, (g,-1,ef) detected, {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn c2_dimensions() -> Verdict {
    const EXPECTED: [usize; 5] = [2, 6, 9, 6, 2];
    let graph = graph_from(&corpus("e_star.graph")).map_err(|e| e.to_string())?;
    let lpa = build_lpa(&graph, F, window()).unwrap();
    let groupoid = boundary_path_groupoid(&graph).unwrap();
    let by_rewriting: Vec<usize> = (-2..=2).map(|n| lpa.algebra().degree_component(n).unwrap().len()).collect();
    let by_arrows: Vec<usize> = (-2..=2).map(|n| groupoid.degree_set(n).len()).collect();
    // Pairs of paths out of a common sink, by length difference.
    let paths = graph.paths(graph.longest_path().unwrap_or(0));
    let mut by_pairs = vec![0usize; 5];
    for sink in graph.sinks() {
        let lens: Vec<i64> = paths
            .iter()
            .filter(|p| graph.path_source(p) == sink)
            .map(|p| Graph::path_len(p) as i64)
            .collect();
        for a in &lens {
            for b in &lens {
                if (a - b).abs() <= 2 {
                    by_pairs[(a - b + 2) as usize] += 1;
                }
            }
        }
    }
    ensure(by_rewriting == EXPECTED, format!("rewriting basis {by_rewriting:?}"))?;
    ensure(by_arrows == EXPECTED, format!("arrow enumeration {by_arrows:?}"))?;
    ensure(by_pairs == EXPECTED, format!("path pairs {by_pairs:?}"))?;
    Ok(format!("{EXPECTED:?} from rewriting, arrows and path pairs"))
}

fn c3_identity() -> Verdict {
    let mut done = Vec::new();
    let lpa = build_lpa(&Graph::e_star(), F, window()).unwrap();
    let cases = [
        ("lpa E*", lpa.realization_data()),
        ("lpa two sinks", build_lpa(&two_sink_graph(), F, window()).unwrap().realization_data()),
        (
            "crossed K^2 swap",
            build_crossed_product(&CrossedProductSpec::swap_k2(F, Window::new(-3, 3, 6)))
                .unwrap()
                .realization_data(),
        ),
    ];
    for (name, d) in &cases {
        let cmp = check_ideal_identity(d).map_err(|c| format!("{name}: {c}"))?;
        ensure(cmp.left.same_as(&cmp.right), format!("{name}: sides differ"))?;
        // Oracle for the right side: products i·j by hand, then membership in R.
        let mut ij = Vec::new();
        for x in d.i.basis() {
            for y in d.j.basis() {
                ij.push(d.a.mul(x, y).unwrap());
            }
        }
        let right = Subspace::span(F, &ij).unwrap().intersect(&d.r);
        ensure(right.same_as(&cmp.right), format!("{name}: IJ ∩ R oracle differs"))?;
        done.push(format!("{name} dim {}", cmp.left.dim()));
    }
    let e = &cases[0].1;
    let uw = span_of(&e.a, &["u", "w"]);
    let cmp = check_ideal_identity(e).unwrap();
    ensure(cmp.left.same_as(&uw), "E*: left side is not span{u, w}")?;
    Ok(format!("{}; E* gives span{{u, w}}", done.join(", ")))
}

fn c4_fs_tensor() -> Verdict {
    let mut count = 0;
    for (name, d) in instances() {
        let (sys, _) = RSystem::from_realization(&d).map_err(|e| format!("{name}: {e}"))?;
        if !check_fs_full(&sys).passed() {
            continue;
        }
        for n in [2, 3] {
            let p = tensor_power_system(&sys, n).map_err(|e| format!("{name} n={n}: {e}"))?;
            let c = check_fs_full(&p);
            ensure(c.passed(), format!("{name} n={n}: {c}"))?;
        }
        count += 1;
    }
    ensure(count >= 3, format!("only {count} instances pass check_fs"))?;
    Ok(format!("{count} instances, powers 2 and 3"))
}

/// `1_C` re-convolved by direct arrow composition, with supports checked to partition `C`.
fn replay_decomposition(
    g: &FiniteGroupoid,
    c: &ArrowSet,
    ds: &[ArrowSet],
    order: FactorOrder,
    choice: BisectionChoice,
) -> Result<(), String> {
    let dec = decompose_indicator(g, c, ds, order, choice).map_err(|e| e.to_string())?;
    let mut total: BTreeMap<usize, i64> = BTreeMap::new();
    let mut covered = BTreeSet::new();
    for t in &dec.terms {
        let mut value: BTreeMap<usize, i64> = t.factors[0].iter().map(|k| (*k, 1)).collect();
        for (b, d) in t.factors.iter().zip(&t.sets) {
            ensure(b.is_subset(&ds[*d]), "factor leaves its D")?;
            let rs: BTreeSet<usize> = b.iter().map(|k| g.range(*k)).collect();
            let ss: BTreeSet<usize> = b.iter().map(|k| g.source(*k)).collect();
            ensure(rs.len() == b.len() && ss.len() == b.len(), "factor is not a bisection")?;
        }
        for b in &t.factors[1..] {
            let mut next = BTreeMap::new();
            for (x, cx) in &value {
                for y in b {
                    if let Some(z) = g.compose(*x, *y) {
                        *next.entry(z).or_insert(0) += cx;
                    }
                }
            }
            value = next;
        }
        for (k, v) in value {
            if v != 0 {
                ensure(covered.insert(k), "supports overlap")?;
                *total.entry(k).or_insert(0) += v;
            }
        }
    }
    let expected: BTreeMap<usize, i64> = c.iter().map(|k| (*k, 1)).collect();
    ensure(total == expected, "terms do not sum to 1_C")
}

/// `D₁` = arrows out of each class's hub, `D₂` = arrows into it; every arrow is `d₁d₂`.
fn hub_sets(g: &FiniteGroupoid) -> [ArrowSet; 2] {
    let mut hub = BTreeMap::new();
    for u in g.units() {
        let orbit = (0..g.len()).filter(|k| g.range(*k) == u).map(|k| g.source(k));
        hub.insert(u, orbit.min().unwrap());
    }
    let d1 = (0..g.len()).filter(|k| g.source(*k) == hub[&g.range(*k)]).collect();
    let d2 = (0..g.len()).filter(|k| g.range(*k) == hub[&g.source(*k)]).collect();
    [d1, d2]
}

fn c5_decomposition() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let h = e_star_htriple(&g).unwrap();
    let ds = [h.h0.clone(), h.h1.clone(), h.hm1.clone()];
    for n in 0..100 {
        let c = g.random_bisection(&mut rng);
        let choice = if n % 2 == 0 { BisectionChoice::Singleton } else { BisectionChoice::Greedy };
        replay_decomposition(&g, &c, &ds, FactorOrder::Free, choice)
            .map_err(|e| format!("E* case {n} ({}): {e}", g.set_names(&c).join(" ")))?;
    }
    let mut arrows = 0;
    for n in 0..20 {
        let fg = FiniteGroupoid::random_pair_classes(&mut rng, 30);
        arrows = arrows.max(fg.len());
        let ds = hub_sets(&fg);
        for k in 0..5 {
            let c = fg.random_bisection(&mut rng);
            let choice = if k % 2 == 0 { BisectionChoice::Singleton } else { BisectionChoice::Greedy };
            replay_decomposition(&fg, &c, &ds, FactorOrder::Fixed, choice)
                .map_err(|e| format!("groupoid {n} case {k}: {e}"))?;
        }
    }
    Ok(format!("100 E* bisections, 20 groupoids (≤ {arrows} arrows) × 5 in fixed order"))
}

/// Kernel of `f ↦ (f * δ_b)_b` on `span(H₀)`, by direct composition.
fn annihilator_oracle(g: &FiniteGroupoid, h0: &ArrowSet, h1: &ArrowSet) -> Subspace {
    let n = g.len();
    let cols: Vec<SparseVec> = h0
        .iter()
        .map(|a| {
            let mut col = SparseVec::zero();
            for (j, b) in h1.iter().enumerate() {
                if let Some(z) = g.compose(*a, *b) {
                    col.add_at(j * n + z, &F.one());
                }
            }
            col
        })
        .collect();
    let basis: Vec<SparseVec> = h0.iter().map(|a| SparseVec::unit(F, *a)).collect();
    let found: Vec<SparseVec> = kernel(F, &cols)
        .unwrap()
        .iter()
        .map(|v| gradedcp::exactlin::combine(v, &basis))
        .collect();
    Subspace::span(F, &found).unwrap()
}

fn c6_annihilator() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let e = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let subset = |s: &ArrowSet, rng: &mut ChaCha8Rng| -> ArrowSet { s.iter().copied().filter(|_| rng.gen_bool(0.5)).collect() };
    for n in 0..200 {
        let g = if n < 100 { e.clone() } else { FiniteGroupoid::random_pair_classes(&mut rng, 30) };
        let h0 = subset(&g.degree_set(0), &mut rng);
        let h1 = subset(&g.degree_set(1), &mut rng);
        let cmp = steinberg_annihilator(&g, &h0, &h1, F);
        let formula: Vec<SparseVec> = cmp.formula.iter().map(|k| SparseVec::unit(F, *k)).collect();
        let formula = Subspace::span(F, &formula).unwrap();
        let oracle = annihilator_oracle(&g, &h0, &h1);
        ensure(cmp.agree, format!("pair {n}: verifier reports disagreement"))?;
        ensure(formula.same_as(&oracle), format!("pair {n}: formula differs from oracle"))?;
    }
    Ok("200 pairs, zero mismatches".into())
}

fn c7_uniqueness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let spec = CrossedProductSpec::swap_k2(F, Window::new(-3, 3, 6));
    let cp = build_crossed_product(&spec).unwrap();
    let a = cp.algebra().clone();
    let base = &spec.base;
    let w = spec.window;
    let phi_pow = |r: &SparseVec, k: i64| -> SparseVec {
        if k.rem_euclid(2) == 1 {
            r.reindexed(|b| 1 - b)
        } else {
            r.clone()
        }
    };
    let invert = |u: &SparseVec| -> SparseVec { u.iter().map(|(b, c)| (*b, c.inverse().unwrap())).collect() };
    for n in 0..20 {
        // u_{k+l} = u_k φ^k(u_l) with u_1 = (x, y) a unit; τ ∈ {id, swap} commutes with φ.
        let mut pick = || loop {
            let v = rng.gen_range(-5i64..=5);
            if v != 0 {
                return F.from_i64(v);
            }
        };
        let u1: SparseVec = [(0usize, pick()), (1usize, pick())].into_iter().collect();
        let swap = rng.gen_bool(0.5);
        let mut u: BTreeMap<i64, SparseVec> = BTreeMap::new();
        u.insert(0, base.one().clone());
        for k in 0..w.max_degree {
            let next = base.mul(&u[&k], &phi_pow(&u1, k));
            u.insert(k + 1, next);
        }
        let um1 = invert(&phi_pow(&u1, -1));
        for k in (w.min_degree + 1..=0).rev() {
            let next = base.mul(&u[&k], &phi_pow(&um1, k));
            u.insert(k - 1, next);
        }
        let images: Vec<SparseVec> = (0..a.dim())
            .map(|label| {
                let k = a.label_degree(label);
                let b = label - ((k - w.min_degree) as usize) * base.dim();
                let tb = if swap { 1 - b } else { b };
                cp.element(&base.mul(&base.basis(tb), &u[&k]), k)
            })
            .collect();
        let map = GradedMap {
            target: a.clone(),
            images,
        };
        let report = check_graded_uniqueness(&a, &map).map_err(|e| format!("map {n}: {e}"))?;
        ensure(report.precondition.passed(), format!("map {n}: {}", report.precondition))?;
        ensure(report.verdict.passed(), format!("map {n}: {}", report.verdict))?;
        ensure(report.kernel_dims.values().all(|d| *d == 0), format!("map {n}: nonzero kernel"))?;
    }
    let zero = GradedMap {
        target: a.clone(),
        images: vec![SparseVec::zero(); a.dim()],
    };
    let report = check_graded_uniqueness(&a, &zero).map_err(|e| e.to_string())?;
    ensure(!report.injective_on_zero, "zero map reported injective on A0")?;
    ensure(
        report.verdict.outcome == Outcome::NotApplicable,
        format!("zero map: {}", report.verdict),
    )?;
    Ok("20 automorphisms with zero kernel; zero map not-applicable".into())
}

fn c8_pi_null_sums() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut names = Vec::new();
    let cohn = build_cohn(&Graph::e_star(), F, window()).unwrap().realization_data();
    for (name, d) in instances().into_iter().chain([("cohn E*", cohn)]) {
        let (sys, rep) = RSystem::from_realization(&d).map_err(|e| format!("{name}: {e}"))?;
        let c = check_pi_null_sums(&sys, &rep, 20, &mut rng);
        ensure(c.passed(), format!("{name}: {c}"))?;
        names.push(name);
    }
    Ok(format!("20 sums on each of {}", names.join(", ")))
}

fn c9_corner_skew() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let spec = CornerSkewSpec::laurent(F, window());
    let rules = CornerSkewRules::new(&spec).map_err(|e| e.to_string())?;
    let letters = [Letter::TMinus, Letter::TPlus, Letter::Phi(0)];
    let mut saw = BTreeSet::new();
    for n in 0..500 {
        let len = rng.gen_range(1..=10);
        let w: Vec<Letter> = (0..len).map(|_| letters[rng.gen_range(0..3)]).collect();
        let (comb, steps) = rules.reduce_word(&w);
        saw.extend(steps.iter().map(|s| s.rule));
        // Laurent oracle: a single canonical monomial of the same degree, coefficient one.
        ensure(comb.len() == 1, format!("word {n}: {} terms", comb.len()))?;
        let (out, c) = comb.iter().next().unwrap();
        ensure(c.is_one(), format!("word {n}: coefficient {c}"))?;
        ensure(CornerSkewRules::is_canonical(out), format!("word {n}: {}", rules.word_name(out)))?;
        let degree: i64 = w
            .iter()
            .map(|l| match l {
                Letter::TMinus => 1,
                Letter::TPlus => -1,
                Letter::Phi(_) => 0,
            })
            .sum();
        ensure(CornerSkewRules::degree(out) == degree, format!("word {n}: degree changed"))?;
        let shape_ok = match degree {
            0 => out == &vec![Letter::Phi(0)],
            d if d > 0 => out.len() == d as usize + 1 && out[..d as usize].iter().all(|l| *l == Letter::TMinus),
            d => out.len() == (-d) as usize + 1 && out[1..].iter().all(|l| *l == Letter::TPlus),
        };
        ensure(shape_ok, format!("word {n}: shape {}", rules.word_name(out)))?;
    }
    let (mp, steps) = rules.reduce_word(&[Letter::TMinus, Letter::TPlus]);
    ensure(steps.first().map(|s| s.rule) == Some(CsRule::MinusPlus), "t- t+ does not start with t- t+ -> 1")?;
    ensure(mp.keys().eq([vec![Letter::Phi(0)]].iter()), "t- t+ does not reduce to 1")?;
    let (pm, steps) = rules.reduce_word(&[Letter::TPlus, Letter::TMinus]);
    ensure(steps.first().map(|s| s.rule) == Some(CsRule::PlusMinus), "t+ t- does not start with t+ t- -> phi(p)")?;
    ensure(pm.keys().eq([vec![Letter::Phi(0)]].iter()), "t+ t- does not reduce to phi(p)")?;
    ensure(saw.contains(&CsRule::MinusPlus) && saw.contains(&CsRule::PlusMinus), "random traces miss a rule")?;
    Ok(format!("500 words canonical; {} rules exercised", saw.len()))
}

/// `K·1 ⊕ span{x, i, j}` with every product among `x, i, j` zero.
fn square_zero() -> GradedAlgebra {
    let labels = vec![("1".to_string(), 0), ("x".into(), 0), ("i".into(), 1), ("j".into(), -1)];
    GradedAlgebra::from_fn("square-zero", F, Window::new(-1, 1, 4), labels, |p, q| match (p, q) {
        (0, k) | (k, 0) => Some(SparseVec::unit(F, k)),
        _ => Some(SparseVec::zero()),
    })
    .unwrap()
}

/// Arrows reachable as products of generators, by breadth-first composition.
fn closure(g: &FiniteGroupoid, gens: &ArrowSet) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = gens.clone();
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for y in gens {
            if let Some(z) = g.compose(x, *y) {
                if seen.insert(z) {
                    queue.push_back(z);
                }
            }
        }
    }
    seen
}

fn c10_fault_injection() -> Verdict {
    let mut detected = Vec::new();
    let lpa = build_lpa(&Graph::e_star(), F, window()).unwrap();
    let base = lpa.realization_data();
    let a = &base.a;

    // (1) u added to J: j·i leaves R.
    let mut d = base.clone();
    d.j = d.j.sum(&span_of(a, &["u"]));
    let c = check_condition_1(&d);
    let Some(Witness::Escape { left, right, target }) = c.witness.clone() else {
        return Err(format!("condition 1: {c}"));
    };
    let space = match target.as_str() {
        "I" => &d.i,
        "J" => &d.j,
        _ => &d.r,
    };
    ensure(c.failed() && !space.contains(&a.mul(&left, &right).unwrap()), "condition 1 witness does not replay")?;
    detected.push("condition 1");

    // (2) J = span{f*}: nothing in span(IJ) fixes e.
    let mut d = base.clone();
    d.j = span_of(a, &["f*"]);
    let c = check_condition_2(&d).check;
    let Some(Witness::Unfixable { sample, .. }) = c.witness.clone() else {
        return Err(format!("condition 2: {c}"));
    };
    let ij = products_span(a, &d.i, &d.j).unwrap();
    let cols: Vec<SparseVec> = ij.basis().iter().map(|z| a.mul(z, &sample).unwrap()).collect();
    let rcols: Vec<SparseVec> = ij.basis().iter().map(|z| a.mul(&sample, z).unwrap()).collect();
    let unfixable = solve(&cols, &sample).unwrap().is_none() || solve(&rcols, &sample).unwrap().is_none();
    ensure(c.failed() && unfixable, "condition 2 witness does not replay")?;
    detected.push("condition 2");

    // (3) Cohn algebra: u - ee* kills I, u is in the perp, ee* is not in R.
    let cohn = build_cohn(&Graph::e_star(), F, window()).unwrap();
    let d = cohn.realization_data();
    let c = check_condition_3(&d);
    let Some(Witness::Pair { r, a: x }) = c.witness.clone() else {
        return Err(format!("condition 3: {c}"));
    };
    let ca = &d.a;
    let kills = d.i.basis().iter().all(|i| ca.mul(&r.sub(&x), i).unwrap().is_zero());
    let ann: Vec<SparseVec> = d
        .r
        .basis()
        .iter()
        .filter(|y| d.i.basis().iter().all(|i| ca.mul(y, i).unwrap().is_zero()))
        .cloned()
        .collect();
    let in_perp = ann.iter().all(|y| ca.mul(&r, y).unwrap().is_zero() && ca.mul(y, &r).unwrap().is_zero());
    let in_ij = products_span(ca, &d.i, &d.j).unwrap().contains(&x);
    ensure(c.failed() && kills && in_perp && in_ij && d.r.contains(&r) && !d.r.contains(&x), "condition 3 witness does not replay")?;
    detected.push("condition 3");

    // (4) Square-zero extension: x annihilates I and lies in its own perp.
    let sq = square_zero();
    let d = RealizationData::new(sq.clone(), span_of(&sq, &["1", "x"]), span_of(&sq, &["i"]), span_of(&sq, &["j"]));
    let c = check_condition_4(&d);
    let Some(Witness::Nonzero { element, .. }) = c.witness.clone() else {
        return Err(format!("condition 4: {c}"));
    };
    let ok = !element.is_zero()
        && d.r.contains(&element)
        && sq.mul(&element, &sq.basis_element("i").unwrap()).unwrap().is_zero()
        && sq.mul(&element, &element).unwrap().is_zero();
    ensure(c.failed() && ok, "condition 4 witness does not replay")?;
    detected.push("condition 4");

    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let h = e_star_htriple(&g).unwrap();
    let idx = |n: &str| g.arrow_index(n).unwrap();

    // H-products: (g,0,f) added to H0 sends (f,-1,ef) to (g,-1,ef) ∉ H-1.
    let mut bad = h.clone();
    bad.h0.insert(idx("(g,0,f)"));
    let c = check_htriple_products(&g, &bad);
    let Some(Witness::ArrowProduct { left, right, product, .. }) = c.witness.clone() else {
        return Err(format!("h-products: {c}"));
    };
    ensure(
        c.failed() && g.compose(left, right) == Some(product) && !bad.hm1.contains(&product) && !bad.h1.contains(&product) && !bad.h0.contains(&product),
        "product witness does not replay",
    )?;
    detected.push("h-products");

    // H-coverage: H1 = {(f,1,v)}, H-1 = {(v,-1,g)} leaves r(H1) uncovered.
    let cover = HTriple::new(&g, h.h0.clone(), [idx("(f,1,v)")].into(), [idx("(v,-1,g)")].into()).unwrap();
    let c = check_htriple_products(&g, &cover);
    let Some(Witness::Arrow { arrow, .. }) = c.witness.clone() else {
        return Err(format!("h-coverage: {c}"));
    };
    let mut products = BTreeSet::new();
    for x in &cover.h1 {
        for y in &cover.hm1 {
            products.extend(g.compose(*x, *y));
        }
    }
    let needed = cover.h1.iter().map(|k| g.range(*k)).chain(cover.hm1.iter().map(|k| g.source(*k)));
    ensure(
        c.failed() && needed.collect::<BTreeSet<_>>().contains(&arrow) && !products.contains(&arrow),
        "coverage witness does not replay",
    )?;
    detected.push("h-coverage");

    // H-hypothesis: without (g,0,g) and (g,1,v), s((f,0,g)) is in neither r(H1) nor H0.
    let mut bad = h.clone();
    bad.h0.remove(&idx("(g,0,g)"));
    bad.h1.remove(&idx("(g,1,v)"));
    let c = check_htriple_hypothesis(&g, &bad);
    let Some(Witness::Arrow { arrow, .. }) = c.witness.clone() else {
        return Err(format!("h-hypothesis: {c}"));
    };
    let s = g.source(arrow);
    let ranges: BTreeSet<usize> = bad.h1.iter().map(|k| g.range(*k)).collect();
    ensure(
        c.failed() && bad.h0.contains(&arrow) && !ranges.contains(&s) && !bad.h0.contains(&s),
        "hypothesis witness does not replay",
    )?;
    detected.push("h-hypothesis");

    // H-generation: units alone reach only units.
    let units = HTriple::new(&g, g.units(), ArrowSet::new(), ArrowSet::new()).unwrap();
    let c = check_htriple_generation(&g, &units).0;
    let Some(Witness::Arrow { arrow, .. }) = c.witness.clone() else {
        return Err(format!("h-generation: {c}"));
    };
    ensure(c.failed() && !closure(&g, &units.generators()).contains(&arrow), "generation witness does not replay")?;
    detected.push("h-generation");

    ensure(detected.len() == 8, format!("{} of 8 detected", detected.len()))?;
    Ok(format!("8 of 8 refuted with replayed witnesses: {}", detected.join(", ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("worked example pipeline", c1_pipeline),
        ("graded dimensions agree", c2_dimensions),
        ("ideal identity", c3_identity),
        ("FS under tensor powers", c4_fs_tensor),
        ("indicator decomposition", c5_decomposition),
        ("annihilator formula", c6_annihilator),
        ("strongly graded uniqueness", c7_uniqueness),
        ("pi on null sums", c8_pi_null_sums),
        ("corner skew normal form", c9_corner_skew),
        ("fault injection", c10_fault_injection),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
