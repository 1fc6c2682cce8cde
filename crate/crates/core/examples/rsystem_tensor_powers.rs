//! The R-system `(A₋₁, A₁, ψ)` of the `E*` path algebra, its tensor powers,
//! condition (FS) and the canonical faithful ideal.

use gradedcp::exactlin::Field;
use gradedcp::graded::Window;
use gradedcp::instances::{build_lpa, Graph};
use gradedcp::rsystem::{
    canonical_max_ideal, check_covariant_rep, check_fs_full, check_system, render, tensor_power_system, RSystem,
};

fn main() {
    let lpa = build_lpa(&Graph::e_star(), Field::Rational, Window::new(-4, 4, 8)).unwrap();
    let (sys, rep) = RSystem::from_realization(&lpa.realization_data()).unwrap();
    println!("dim R = {}, dim P = {}, dim Q = {}", sys.ring.dim(), sys.p.dim(), sys.q.dim());
    println!("{}", check_system(&sys));
    println!("{}", check_covariant_rep(&sys, &rep));
    println!("{}", check_fs_full(&sys));

    let ideal = canonical_max_ideal(&sys);
    let basis: Vec<String> = ideal.ideal.basis().iter().map(|x| render(&sys, x)).collect();
    println!("canonical ideal: span{{{}}}", basis.join(", "));

    for n in [2, 3] {
        let power = tensor_power_system(&sys, n).unwrap();
        println!("power {n}: dim P = {}, {}", power.p.dim(), check_fs_full(&power));
    }
}
