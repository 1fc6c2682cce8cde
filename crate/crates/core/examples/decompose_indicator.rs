//! Writes the indicator of a bisection as a sum of products of bisections
//! drawn from `H₀`, `H₁`, `H₋₁`, then re-convolves the result.

use gradedcp::exactlin::Field;
use gradedcp::instances::{boundary_path_groupoid, Graph};
use gradedcp::steinberg::{decompose_indicator, e_star_htriple, indicator, BisectionChoice, FactorOrder};

fn main() {
    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let h = e_star_htriple(&g).unwrap();
    let ds = [h.h0.clone(), h.h1.clone(), h.hm1.clone()];
    let c = g.arrow_set(&["(ef,2,v)", "(g,-1,eg)"]).unwrap();
    for choice in [BisectionChoice::Singleton, BisectionChoice::Greedy] {
        let dec = decompose_indicator(&g, &c, &ds, FactorOrder::Free, choice).unwrap();
        println!("{choice:?}: {}", dec.render(&g));
        assert_eq!(dec.evaluate(&g, Field::Rational), indicator(Field::Rational, &c));
    }
    println!("both re-convolve to 1_C");
}
