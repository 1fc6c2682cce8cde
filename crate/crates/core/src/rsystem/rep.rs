use rand::Rng;

use crate::exactlin::{combine, kernel, SparseVec, Subspace};
use crate::graded::{Element, GradedAlgebra};
use crate::verdict::{CheckResult, Outcome};

use super::{
    delta_as_finite_rank, grid_combination, theta_grid, tower_reps, tensor_tower, FiniteRankOp, RSystem,
    RSystemError, DEFAULT_TENSOR_CAP,
};

/// `(S, T, σ)` into a graded algebra, by images of the basis vectors of `P`, `Q`, `R`.
#[derive(Clone, Debug)]
pub struct CovariantRep {
    pub target: GradedAlgebra,
    pub s: Vec<Element>,
    pub t: Vec<Element>,
    pub sigma: Vec<Element>,
}

impl CovariantRep {
    pub fn s_of(&self, p: &SparseVec) -> Element {
        combine(p, &self.s)
    }

    pub fn t_of(&self, q: &SparseVec) -> Element {
        combine(q, &self.t)
    }

    pub fn sigma_of(&self, r: &SparseVec) -> Element {
        combine(r, &self.sigma)
    }
}

/// `σ` multiplicative, `S` and `T` compatible with
/// `σ` on both sides, and `σ(ψ(p ⊗ q)) = S(p)T(q)`.
pub fn check_covariant_rep(sys: &RSystem, rep: &CovariantRep) -> CheckResult {
    let name = "covariant-rep";
    let a = &rep.target;
    let f = sys.field();
    let unit = |i| SparseVec::unit(f, i);
    let mut inconclusive = false;
    let mut first_failure: Option<CheckResult> = None;
    let mut check = |lhs: Option<Element>, rhs: Option<Element>, law: &str, at: String| {
        if first_failure.is_some() {
            return;
        }
        match (lhs, rhs) {
            (Some(l), Some(r)) if l != r => {
                first_failure = Some(CheckResult::fail(name, format!("{law} fails")).with_note(at));
            }
            (Some(_), Some(_)) => {}
            _ => inconclusive = true,
        }
    };
    let n = sys.ring.dim();
    for r in 0..n {
        for s in 0..n {
            check(
                Some(rep.sigma_of(sys.ring.basis_product(r, s))),
                a.try_mul(&rep.sigma[r], &rep.sigma[s]),
                "σ(rs) = σ(r)σ(s)",
                format!("r = {}, s = {}", sys.ring.labels()[r], sys.ring.labels()[s]),
            );
        }
        for k in 0..sys.p.dim() {
            let at = format!("r = {}, p = {}", sys.ring.labels()[r], sys.p.labels[k]);
            check(
                Some(rep.s_of(&sys.p.act_right(&unit(k), &unit(r)))),
                a.try_mul(&rep.s[k], &rep.sigma[r]),
                "S(pr) = S(p)σ(r)",
                at.clone(),
            );
            check(
                Some(rep.s_of(&sys.p.act_left(&unit(r), &unit(k)))),
                a.try_mul(&rep.sigma[r], &rep.s[k]),
                "S(rp) = σ(r)S(p)",
                at,
            );
        }
        for k in 0..sys.q.dim() {
            let at = format!("r = {}, q = {}", sys.ring.labels()[r], sys.q.labels[k]);
            check(
                Some(rep.t_of(&sys.q.act_right(&unit(k), &unit(r)))),
                a.try_mul(&rep.t[k], &rep.sigma[r]),
                "T(qr) = T(q)σ(r)",
                at.clone(),
            );
            check(
                Some(rep.t_of(&sys.q.act_left(&unit(r), &unit(k)))),
                a.try_mul(&rep.sigma[r], &rep.t[k]),
                "T(rq) = σ(r)T(q)",
                at,
            );
        }
    }
    for p in 0..sys.p.dim() {
        for q in 0..sys.q.dim() {
            check(
                Some(rep.sigma_of(&sys.psi[p][q])),
                a.try_mul(&rep.s[p], &rep.t[q]),
                "σ(ψ(p ⊗ q)) = S(p)T(q)",
                format!("p = {}, q = {}", sys.p.labels[p], sys.q.labels[q]),
            );
        }
    }
    match first_failure {
        Some(fail) => fail,
        None if inconclusive => CheckResult::new(name, Outcome::Inconclusive, "a product left the window"),
        None => CheckResult::pass(name, "σ, S and T are compatible on bases"),
    }
}

/// `π_{T,S}(Σ θ_{q,p}) = Σ T(q)S(p)`; `None` when a product leaves the window.
pub fn pi_map(rep: &CovariantRep, op: &FiniteRankOp) -> Option<Element> {
    let mut out = SparseVec::zero();
    for (q, p) in &op.terms {
        out = out.add(&rep.target.try_mul(&rep.t_of(q), &rep.s_of(p))?);
    }
    Some(out)
}

/// Random formal sums over the basis grid whose matrix on `Q` vanishes must
/// map to zero.
pub fn check_pi_null_sums(sys: &RSystem, rep: &CovariantRep, samples: usize, rng: &mut impl Rng) -> CheckResult {
    let name = "pi-well-defined";
    let f = sys.field();
    let mats: Vec<SparseVec> = theta_grid(sys).iter().map(|op| op.matrix_q(sys)).collect();
    let null = kernel(f, &mats).expect("single field");
    for k in 0..samples {
        let mut coeffs = SparseVec::zero();
        for v in &null {
            coeffs.axpy(&f.from_i64(rng.gen_range(-3..=3)), v);
        }
        let op = grid_combination(sys, &coeffs);
        debug_assert!(op.matrix_q(sys).is_zero());
        match pi_map(rep, &op) {
            None => return CheckResult::new(name, Outcome::Inconclusive, "a product left the window"),
            Some(x) if !x.is_zero() => {
                return CheckResult::fail(name, format!("sample {k} maps to a nonzero element"))
                    .with_note(rep.target.display(&x))
            }
            Some(_) => {}
        }
    }
    CheckResult::pass(
        name,
        format!("{samples} null sums from a {}-dimensional null space", null.len()),
    )
}

/// `π(Δ(x)) = σ(x)` on a basis of `j`.
pub fn check_cp_invariant(sys: &RSystem, rep: &CovariantRep, j: &Subspace) -> CheckResult {
    let name = "cp-invariant";
    for x in j.basis() {
        let Some(op) = delta_as_finite_rank(sys, x) else {
            return CheckResult::fail(name, "Δ(x) is not finite rank").with_note(rep.target.display(&rep.sigma_of(x)));
        };
        let Some(value) = pi_map(rep, &op) else {
            return CheckResult::new(name, Outcome::Inconclusive, "a product left the window");
        };
        let expected = rep.sigma_of(x);
        if value != expected {
            return CheckResult::fail(name, "π(Δ(x)) differs from σ(x)").with_note(format!(
                "σ(x) = {}, π(Δ(x)) = {}",
                rep.target.display(&expected),
                rep.target.display(&value)
            ));
        }
    }
    CheckResult::pass(name, format!("holds on a {}-dimensional ideal", j.dim()))
}

/// `span{T^{⊗m}(q) S^{⊗n}(p) : m - n = t, m, n ≤ cap}`.
pub fn toeplitz_graded_span(sys: &RSystem, rep: &CovariantRep, t: i64, cap: usize) -> Result<Subspace, RSystemError> {
    let a = &rep.target;
    let levels = tensor_tower(sys, cap, DEFAULT_TENSOR_CAP)?;
    let reps = tower_reps(rep, &levels)?;
    let mut out = Vec::new();
    for m in 0..=cap {
        let n = m as i64 - t;
        if n < 0 || n as usize > cap {
            continue;
        }
        let (tm, sn) = (&reps[m].t, &reps[n as usize].s);
        for x in tm {
            for y in sn {
                if let Some(p) = a.try_mul(x, y) {
                    out.push(p);
                }
            }
        }
    }
    Ok(Subspace::span(a.field(), &out)?)
}
