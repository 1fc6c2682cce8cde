//! Exact spans, intersections, kernels and membership over ℚ and 𝔽₇.

use gradedcp::exactlin::{kernel, in_span, Field, SparseVec, Subspace};

fn vec(f: Field, xs: &[i64]) -> SparseVec {
    SparseVec::from_dense(&xs.iter().map(|x| f.from_i64(*x)).collect::<Vec<_>>())
}

fn show(f: Field, v: &SparseVec, n: usize) -> String {
    let xs: Vec<String> = v.to_dense(f, n).iter().map(|x| x.to_string()).collect();
    format!("({})", xs.join(", "))
}

fn main() {
    for f in [Field::Rational, Field::Prime(7)] {
        let v = Subspace::span(f, &[vec(f, &[1, 2, 0]), vec(f, &[0, 1, 1])]).unwrap();
        let w = Subspace::span(f, &[vec(f, &[1, 3, 1]), vec(f, &[0, 0, 1])]).unwrap();
        let cap = v.intersect(&w);
        println!("over {f}: dim V = {}, dim W = {}, dim V+W = {}, dim V∩W = {}", v.dim(), w.dim(), v.sum(&w).dim(), cap.dim());

        let target = vec(f, &[2, 5, 1]);
        match in_span(&target, v.basis()).unwrap() {
            Some(c) => println!("  (2,5,1) has coordinates {} in the echelon basis of V", show(f, &c, v.dim())),
            None => println!("  (2,5,1) is not in V"),
        }

        let cols = [vec(f, &[1, 1]), vec(f, &[2, 2]), vec(f, &[0, 7])];
        for k in kernel(f, &cols).unwrap() {
            println!("  kernel vector {}", show(f, &k, cols.len()));
        }
    }
}
