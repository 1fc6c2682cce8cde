//! Corner skew Laurent ring `K[t₊, t₋; α]` with `α = id`: rewriting traces to
//! the canonical shapes and the realization certificate.

use gradedcp::exactlin::Field;
use gradedcp::graded::Window;
use gradedcp::instances::{build_corner_skew, CornerSkewRules, CornerSkewSpec, Letter};
use gradedcp::realization::verify_realization;

fn main() {
    let spec = CornerSkewSpec::laurent(Field::Rational, Window::new(-4, 4, 8));
    let rules = CornerSkewRules::new(&spec).unwrap();
    let words = [
        vec![Letter::TMinus, Letter::TPlus],
        vec![Letter::TPlus, Letter::TMinus],
        vec![Letter::TPlus, Letter::TMinus, Letter::TMinus, Letter::Phi(0), Letter::TMinus],
    ];
    for w in &words {
        let (comb, steps) = rules.reduce_word(w);
        let out: Vec<String> = comb.iter().map(|(word, c)| format!("{c}·{}", rules.word_name(word))).collect();
        println!("{} -> {} in {} steps", rules.word_name(w), out.join(" + "), steps.len());
        for s in &steps {
            println!("    {:?}", s.rule);
        }
    }
    let cs = build_corner_skew(&spec).unwrap();
    println!("{}: {}", cs.algebra().name(), verify_realization(&cs.realization_data()).certificate);
}
