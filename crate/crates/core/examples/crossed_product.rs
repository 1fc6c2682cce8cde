//! `K² ⋊ ℤ` by the coordinate swap: strong grading, the realization criterion for
//! strongly graded rings, and uniqueness for graded maps injective on `A₀`.

use gradedcp::exactlin::{Field, SparseVec};
use gradedcp::graded::{check_strongly_graded, Window};
use gradedcp::instances::{build_crossed_product, CrossedProductSpec};
use gradedcp::realization::{check_strongly_graded_realization, check_graded_uniqueness, GradedMap};

fn main() {
    let spec = CrossedProductSpec::swap_k2(Field::Rational, Window::new(-3, 3, 6));
    let cp = build_crossed_product(&spec).unwrap();
    let a = cp.algebra();
    println!("{}: dim {} in the window", a.name(), a.dim());
    println!("strongly graded: {}", check_strongly_graded(a).holds());

    let report = check_strongly_graded_realization(a);
    for c in &report.checks {
        println!("  {c}");
    }
    println!("certificate: {}", report.certificate);

    let identity = GradedMap {
        target: a.clone(),
        images: (0..a.dim()).map(|k| a.unit_vector(k)).collect(),
    };
    let out = check_graded_uniqueness(a, &identity).unwrap();
    println!("identity map: {} ; kernel dims {:?}", out.verdict, out.kernel_dims);

    let zero = GradedMap {
        target: a.clone(),
        images: vec![SparseVec::zero(); a.dim()],
    };
    println!("zero map: {}", check_graded_uniqueness(a, &zero).unwrap().verdict);
}
