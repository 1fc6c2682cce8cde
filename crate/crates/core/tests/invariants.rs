use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gradedcp::exactlin::{Field, SparseVec, Subspace};
use gradedcp::graded::{subring_generated, GradedAlgebra, Window};
use gradedcp::instances::{
    boundary_path_groupoid, build_corner_skew, build_crossed_product, build_lpa, CornerSkewSpec, CrossedProductSpec,
    Graph,
};
use gradedcp::realization::{verify_realization, RealizationData};
use gradedcp::rsystem::{check_adjoint, pi_map, rank_one, CovariantRep, FiniteRankOp, RSystem};
use gradedcp::steinberg::{
    check_htriple_generation, check_htriple_hypothesis, check_htriple_products, cocycle_component, compare_inverses,
    convolve, decompose_indicator, indicator, BisectionChoice, FactorOrder, FiniteGroupoid, HTriple,
    SteinbergElement,
};
use gradedcp::verdict::Certificate;

const F: Field = Field::Rational;

fn algebras() -> &'static [GradedAlgebra] {
    static CELL: OnceLock<Vec<GradedAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| {
        let w = Window::new(-3, 3, 6);
        let two_sinks = Graph::new(&["a", "b", "x"], &[("h", "a", "x"), ("k", "b", "x")]).unwrap();
        vec![
            build_lpa(&Graph::e_star(), F, w).unwrap().algebra().clone(),
            build_lpa(&two_sinks, F, w).unwrap().algebra().clone(),
            build_crossed_product(&CrossedProductSpec::swap_k2(F, w)).unwrap().algebra().clone(),
            build_corner_skew(&CornerSkewSpec::laurent(F, w)).unwrap().algebra().clone(),
        ]
    })
}

fn systems() -> &'static [(RSystem, CovariantRep)] {
    static CELL: OnceLock<Vec<(RSystem, CovariantRep)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let w = Window::new(-3, 3, 6);
        let data = [
            build_lpa(&Graph::e_star(), F, w).unwrap().realization_data(),
            build_crossed_product(&CrossedProductSpec::swap_k2(F, w)).unwrap().realization_data(),
            build_corner_skew(&CornerSkewSpec::laurent(F, w)).unwrap().realization_data(),
        ];
        data.iter().map(|d| RSystem::from_realization(d).unwrap()).collect()
    })
}

fn small_ints(dim: usize, len: usize) -> impl Strategy<Value = SparseVec> {
    prop::collection::vec((0..dim.max(1), -3i64..=3), 0..=len)
        .prop_map(|terms| {
            let mut v = SparseVec::zero();
            for (k, c) in terms {
                v.add_at(k, &F.from_i64(c));
            }
            v
        })
}

fn groupoid() -> impl Strategy<Value = FiniteGroupoid> {
    any::<u64>().prop_map(|seed| FiniteGroupoid::random_pair_classes(&mut ChaCha8Rng::seed_from_u64(seed), 30))
}

fn element(g: &FiniteGroupoid) -> impl Strategy<Value = SteinbergElement> {
    small_ints(g.len(), 6)
}

fn rank_one_op(sys: &RSystem) -> impl Strategy<Value = FiniteRankOp> {
    (small_ints(sys.q.dim(), 3), small_ints(sys.p.dim(), 3)).prop_map(|(q, p)| rank_one(q, p))
}

fn system_and_ops(count: usize) -> impl Strategy<Value = (usize, Vec<FiniteRankOp>)> {
    (0..systems().len()).prop_flat_map(move |n| {
        let sys = &systems()[n].0;
        (Just(n), prop::collection::vec(rank_one_op(sys), count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_graded_and_associative(n in 0..4usize, (i, j, k) in (0..1000usize, 0..1000usize, 0..1000usize)) {
        let a = &algebras()[n];
        let (i, j, k) = (i % a.dim(), j % a.dim(), k % a.dim());
        if let Some(ij) = a.basis_product(i, j) {
            let d = a.label_degree(i) + a.label_degree(j);
            prop_assert!(ij.indices().all(|l| a.label_degree(l) == d));
            let (x, y, z) = (a.unit_vector(i), a.unit_vector(j), a.unit_vector(k));
            let left = a.try_mul(ij, &z);
            let right = a.try_mul(&x, &a.try_mul(&y, &z).unwrap_or_default());
            if let (Some(l), Some(r), true) = (left, right, a.basis_product(j, k).is_some()) {
                prop_assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn generated_span_is_monotone_and_idempotent(n in 0..4usize, picks in prop::collection::vec(0..1000usize, 1..4)) {
        let a = &algebras()[n];
        let gens: Vec<SparseVec> = picks.iter().map(|p| a.unit_vector(p % a.dim())).collect();
        let gen = Subspace::span(F, &gens).unwrap();
        let small = subring_generated(&a.with_word_len(2), std::slice::from_ref(&gen));
        let full = subring_generated(a, std::slice::from_ref(&gen));
        prop_assert!(full.space.contains_subspace(&small.space));
        if full.saturated && !full.window_truncated {
            let again = subring_generated(a, std::slice::from_ref(&full.space));
            prop_assert!(again.space.same_as(&full.space));
        }
    }

    #[test]
    fn rank_one_operators_are_adjointable((n, op) in system_and_ops(1)) {
        prop_assert!(check_adjoint(&systems()[n].0, &op[0]));
    }

    #[test]
    fn pi_is_multiplicative((n, ops) in system_and_ops(2)) {
        let (sys, rep) = &systems()[n];
        let (x, y) = (&ops[0], &ops[1]);
        let (Some(px), Some(py)) = (pi_map(rep, x), pi_map(rep, y)) else { return Ok(()) };
        if let (Some(xy), Some(prod)) = (pi_map(rep, &x.compose(sys, y)), rep.target.try_mul(&px, &py)) {
            prop_assert_eq!(xy, prod);
        }
    }

    #[test]
    fn convolution_is_associative_and_unital((g, f, h, k) in groupoid().prop_flat_map(|g| {
        let (a, b, c) = (element(&g), element(&g), element(&g));
        (Just(g), a, b, c)
    })) {
        prop_assert_eq!(convolve(&g, &convolve(&g, &f, &h), &k), convolve(&g, &f, &convolve(&g, &h, &k)));
        let one = indicator(F, &g.units());
        prop_assert_eq!(convolve(&g, &one, &f), f.clone());
        prop_assert_eq!(convolve(&g, &f, &one), f);
    }

    #[test]
    fn convolution_respects_the_cocycle((g, f, h) in groupoid().prop_flat_map(|g| {
        let (a, b) = (element(&g), element(&g));
        (Just(g), a, b)
    })) {
        for m in g.degrees() {
            for n in g.degrees() {
                let p = convolve(&g, &cocycle_component(&g, &f, m), &cocycle_component(&g, &h, n));
                prop_assert!(p.indices().all(|c| g.degree(c) == m + n));
            }
        }
    }

    #[test]
    fn decompositions_reconvolve(g in groupoid(), seed in any::<u64>(), greedy in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = g.random_bisection(&mut rng);
        let ds: Vec<_> = g.degrees().into_iter().map(|d| g.degree_set(d)).collect();
        let choice = if greedy { BisectionChoice::Greedy } else { BisectionChoice::Singleton };
        let dec = decompose_indicator(&g, &c, &ds, FactorOrder::Free, choice).unwrap();
        prop_assert!(dec.is_valid_for(&g, &c, &ds));
        prop_assert_eq!(dec.evaluate(&g, F), indicator(F, &c));
    }

    #[test]
    fn inverse_closed_h0_forces_inverse_hm1(g in groupoid(), mask in any::<u64>()) {
        let h1: std::collections::BTreeSet<usize> = g.degree_set(1).into_iter().enumerate()
            .filter(|(n, _)| mask >> (n % 64) & 1 == 1).map(|(_, k)| k).collect();
        let hm1 = g.degree_set(-1);
        let h = HTriple::new(&g, g.degree_set(0), h1, hm1).unwrap();
        let cmp = compare_inverses(&g, &h);
        let passes = check_htriple_products(&g, &h).passed()
            && check_htriple_hypothesis(&g, &h).passed()
            && check_htriple_generation(&g, &h).0.passed();
        if cmp.h0_inverse_closed && cmp.h0_product_closed && passes {
            prop_assert!(cmp.equal());
        }
    }
}

/// `R = A`, `I = J = 0` certifies whenever `A` is closed in its window; a
/// truncated algebra can only be undecided, never refuted.
#[test]
fn trivial_realizations_certify() {
    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let steinberg = gradedcp::steinberg::steinberg_algebra(&g, F);
    for a in algebras().iter().chain([&steinberg]) {
        let d = RealizationData::new(a.clone(), a.full_space(), Subspace::zero(F), Subspace::zero(F));
        let report = verify_realization(&d);
        let closed = (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_product(i, j).is_some()));
        let expected = if closed { Certificate::WindowedCertified } else { Certificate::InconclusiveWindow };
        assert_eq!(report.certificate, expected, "{}", a.name());
    }
}
