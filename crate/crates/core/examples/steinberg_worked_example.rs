//! Boundary-path groupoid of `E*` with the H-triple that generates it: the
//! three hypotheses, the inverse-set comparison, the annihilator formula and
//! the realization of the graded Steinberg algebra.

use gradedcp::exactlin::Field;
use gradedcp::instances::{boundary_path_groupoid, Graph};
use gradedcp::realization::verify_realization;
use gradedcp::steinberg::{
    check_htriple_generation, check_htriple_hypothesis, check_htriple_products, compare_inverses, e_star_htriple,
    render_factorization, steinberg_annihilator, steinberg_realization_data,
};

fn main() {
    let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
    let h = e_star_htriple(&g).unwrap();
    println!("{} arrows, {} units", g.len(), g.units().len());
    println!("H0  = {{{}}}", g.set_names(&h.h0).join(" "));
    println!("H1  = {{{}}}", g.set_names(&h.h1).join(" "));
    println!("H-1 = {{{}}}", g.set_names(&h.hm1).join(" "));

    println!("{}", check_htriple_products(&g, &h));
    println!("{}", check_htriple_hypothesis(&g, &h));
    let (generation, words) = check_htriple_generation(&g, &h);
    println!("{generation}");
    for (arrow, word) in words.iter().take(4) {
        println!("  {} = {}", g.name(*arrow), render_factorization(&g, word));
    }

    let cmp = compare_inverses(&g, &h);
    println!("inverse of H1 missing from H-1: {}", g.set_names(&cmp.missing_from_hm1).join(" "));

    let ann = steinberg_annihilator(&g, &h.h0, &h.h1, Field::Rational);
    println!("annihilator of H1 in span(H0): {{{}}}, agrees: {}", g.set_names(&ann.formula).join(" "), ann.agree);

    let (data, _) = steinberg_realization_data(&g, &h, Field::Rational).unwrap();
    println!("certificate: {}", verify_realization(&data).certificate);
}
