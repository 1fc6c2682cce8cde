use crate::exactlin::{combine, kernel, solve, SparseVec, Subspace};
use crate::verdict::CheckResult;

use super::{RSystem, RSystemError};

/// Matrices on a module basis, flattened column-major: entry `(row, col)`
/// sits at `col * dim + row`.
pub type OperatorMatrix = SparseVec;

/// A formal sum `Σ θ_{q_k, p_k}`, acting on `Q` by `x ↦ Σ q_k ψ(p_k ⊗ x)` and
/// on `P` by the adjoint `y ↦ Σ ψ(y ⊗ q_k) p_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteRankOp {
    pub terms: Vec<(SparseVec, SparseVec)>,
}

impl FiniteRankOp {
    pub fn zero() -> Self {
        FiniteRankOp::default()
    }

    pub fn is_formally_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply_q(&self, sys: &RSystem, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (q, p) in &self.terms {
            out = out.add(&sys.q.act_right(q, &sys.psi(p, x)));
        }
        out
    }

    pub fn apply_p(&self, sys: &RSystem, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (q, p) in &self.terms {
            out = out.add(&sys.p.act_left(&sys.psi(y, q), p));
        }
        out
    }

    pub fn matrix_q(&self, sys: &RSystem) -> OperatorMatrix {
        matrix(sys.q.dim(), |k| self.apply_q(sys, &SparseVec::unit(sys.field(), k)))
    }

    pub fn matrix_p(&self, sys: &RSystem) -> OperatorMatrix {
        matrix(sys.p.dim(), |k| self.apply_p(sys, &SparseVec::unit(sys.field(), k)))
    }

    pub fn scaled(&self, c: &crate::exactlin::Scalar) -> Self {
        FiniteRankOp {
            terms: self.terms.iter().map(|(q, p)| (q.scaled(c), p.clone())).collect(),
        }
    }

    pub fn plus(&self, other: &FiniteRankOp) -> Self {
        FiniteRankOp {
            terms: self.terms.iter().chain(&other.terms).cloned().collect(),
        }
    }

    /// `θ_{q₁,p₁} ∘ θ_{q₂,p₂} = θ_{q₁ ψ(p₁ ⊗ q₂), p₂}`, termwise.
    pub fn compose(&self, sys: &RSystem, inner: &FiniteRankOp) -> Self {
        let mut terms = Vec::new();
        for (q1, p1) in &self.terms {
            for (q2, p2) in &inner.terms {
                terms.push((sys.q.act_right(q1, &sys.psi(p1, q2)), p2.clone()));
            }
        }
        FiniteRankOp { terms }
    }
}

pub(crate) fn matrix(dim: usize, mut column: impl FnMut(usize) -> SparseVec) -> OperatorMatrix {
    let mut out = SparseVec::zero();
    for k in 0..dim {
        let col = column(k);
        if let Some(f) = col.field() {
            out.axpy_shifted(&f.one(), &col, k * dim);
        }
    }
    out
}

/// `θ_{q,p}`.
pub fn rank_one(q: SparseVec, p: SparseVec) -> FiniteRankOp {
    FiniteRankOp { terms: vec![(q, p)] }
}

/// `θ_{q_a, p_b}` for basis vectors, indexed `a * dim P + b`.
pub fn theta_grid(sys: &RSystem) -> Vec<FiniteRankOp> {
    let f = sys.field();
    (0..sys.q.dim())
        .flat_map(|a| (0..sys.p.dim()).map(move |b| rank_one(SparseVec::unit(f, a), SparseVec::unit(f, b))))
        .collect()
}

/// Formal sum `Σ c_k grid_k`.
pub fn grid_combination(sys: &RSystem, coeffs: &SparseVec) -> FiniteRankOp {
    let grid = theta_grid(sys);
    FiniteRankOp {
        terms: coeffs
            .iter()
            .map(|(k, c)| (grid[*k].terms[0].0.scaled(c), grid[*k].terms[0].1.clone()))
            .collect(),
    }
}

/// `ψ(p' ⊗ θ_{q,p}(x)) = ψ(θ_{p,q}(p') ⊗ x)` on all basis vectors.
pub fn check_adjoint(sys: &RSystem, op: &FiniteRankOp) -> bool {
    let f = sys.field();
    (0..sys.p.dim()).all(|a| {
        (0..sys.q.dim()).all(|b| {
            let (pp, x) = (SparseVec::unit(f, a), SparseVec::unit(f, b));
            sys.psi(&pp, &op.apply_q(sys, &x)) == sys.psi(&op.apply_p(sys, &pp), &x)
        })
    })
}

/// Operators fixing the inputs of condition (FS).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsWitness {
    /// In `F_P(Q)`, fixes every given `q`.
    pub theta: FiniteRankOp,
    /// Acts on `P` through the adjoint, fixes every given `p`.
    pub phi: FiniteRankOp,
}

/// Solves for `Θ` and `Φ` over the grid of basis rank-one operators.
pub fn check_fs(sys: &RSystem, qs: &[SparseVec], ps: &[SparseVec]) -> Option<FsWitness> {
    let grid = theta_grid(sys);
    let one = sys.field().one();
    let (dq, dp) = (sys.q.dim(), sys.p.dim());
    let stack = |apply: &dyn Fn(&FiniteRankOp, &SparseVec) -> SparseVec, xs: &[SparseVec], dim: usize| {
        let columns: Vec<SparseVec> = grid
            .iter()
            .map(|op| {
                let mut col = SparseVec::zero();
                for (i, x) in xs.iter().enumerate() {
                    col.axpy_shifted(&one, &apply(op, x), i * dim);
                }
                col
            })
            .collect();
        let mut rhs = SparseVec::zero();
        for (i, x) in xs.iter().enumerate() {
            rhs.axpy_shifted(&one, x, i * dim);
        }
        solve(&columns, &rhs).ok().flatten()
    };
    let theta = stack(&|op, x| op.apply_q(sys, x), qs, dq)?;
    let phi = stack(&|op, y| op.apply_p(sys, y), ps, dp)?;
    Some(FsWitness {
        theta: grid_combination(sys, &theta),
        phi: grid_combination(sys, &phi),
    })
}

/// Condition (FS) on the full bases of `P` and `Q`.
pub fn check_fs_full(sys: &RSystem) -> CheckResult {
    let f = sys.field();
    let qs: Vec<SparseVec> = (0..sys.q.dim()).map(|k| SparseVec::unit(f, k)).collect();
    let ps: Vec<SparseVec> = (0..sys.p.dim()).map(|k| SparseVec::unit(f, k)).collect();
    match check_fs(sys, &qs, &ps) {
        Some(w) => CheckResult::pass(
            "fs",
            format!("Θ with {} terms, Φ with {} terms", w.theta.terms.len(), w.phi.terms.len()),
        ),
        None => CheckResult::fail("fs", "no finite-rank operator fixes the full bases"),
    }
}

/// `(Δ(r), Γ(r))`: `x ↦ r·x` on `Q` and `y ↦ y·r` on `P`.
pub fn delta_gamma(sys: &RSystem, r: &SparseVec) -> (OperatorMatrix, OperatorMatrix) {
    let f = sys.field();
    let delta = matrix(sys.q.dim(), |k| sys.q.act_left(r, &SparseVec::unit(f, k)));
    let gamma = matrix(sys.p.dim(), |k| sys.p.act_right(&SparseVec::unit(f, k), r));
    (delta, gamma)
}

/// `ψ(p ⊗ Δ(r)x) = ψ(Γ(r)p ⊗ x)` on basis vectors.
pub fn delta_gamma_adjoint(sys: &RSystem, r: &SparseVec) -> bool {
    let f = sys.field();
    (0..sys.p.dim()).all(|a| {
        (0..sys.q.dim()).all(|b| {
            let (p, x) = (SparseVec::unit(f, a), SparseVec::unit(f, b));
            sys.psi(&p, &sys.q.act_left(r, &x)) == sys.psi(&sys.p.act_right(&p, r), &x)
        })
    })
}

fn delta_columns(sys: &RSystem) -> Vec<OperatorMatrix> {
    (0..sys.ring.dim())
        .map(|r| delta_gamma(sys, &sys.ring.basis(r)).0)
        .collect()
}

/// `F_P(Q)` as a space of matrices on `Q`.
pub fn finite_rank_space(sys: &RSystem) -> Subspace {
    let mats: Vec<SparseVec> = theta_grid(sys).iter().map(|op| op.matrix_q(sys)).collect();
    Subspace::span(sys.field(), &mats).expect("single field")
}

pub fn ker_delta(sys: &RSystem) -> Subspace {
    let rels = kernel(sys.field(), &delta_columns(sys)).expect("single field");
    Subspace::span(sys.field(), &rels).expect("single field")
}

/// `Δ⁻¹(F_P(Q))`.
pub fn delta_preimage_finite_rank(sys: &RSystem) -> Subspace {
    let d = sys.ring.dim();
    let mut columns = delta_columns(sys);
    columns.extend(finite_rank_space(sys).basis().iter().map(SparseVec::neg));
    let found: Vec<SparseVec> = kernel(sys.field(), &columns)
        .expect("single field")
        .iter()
        .map(|rel| rel.restricted(|k| k < d))
        .collect();
    Subspace::span(sys.field(), &found).expect("single field")
}

/// Coefficients on [`theta_grid`] expressing `Δ(x)`, if it has finite rank.
pub fn delta_as_finite_rank(sys: &RSystem, x: &SparseVec) -> Option<FiniteRankOp> {
    let mats: Vec<SparseVec> = theta_grid(sys).iter().map(|op| op.matrix_q(sys)).collect();
    let coeffs = solve(&mats, &delta_gamma(sys, x).0).ok().flatten()?;
    Some(grid_combination(sys, &coeffs))
}

/// `Δ(J) ⊆ F_P(Q)` and `J ∩ ker Δ = 0`.
pub fn compatible_ideal_check(sys: &RSystem, j: &Subspace) -> Result<(CheckResult, CheckResult), RSystemError> {
    if !sys.ring.is_ideal(j) {
        return Err(RSystemError::Precondition("J is not a two-sided ideal of R".into()));
    }
    let compatible = match j.basis().iter().find(|x| delta_as_finite_rank(sys, x).is_none()) {
        Some(x) => CheckResult::fail("psi-compatible", "Δ(x) is not finite rank")
            .with_note(format!("x = {}", render(sys, x))),
        None => CheckResult::pass("psi-compatible", format!("dim J = {}", j.dim())),
    };
    let meet = j.intersect(&ker_delta(sys));
    let faithful = match meet.basis().first() {
        Some(x) => CheckResult::fail("faithful", "J meets ker Δ").with_note(format!("x = {}", render(sys, x))),
        None => CheckResult::pass("faithful", "J ∩ ker Δ = 0"),
    };
    Ok((compatible, faithful))
}

/// Ring element in terms of the ring's basis labels.
pub fn render(sys: &RSystem, x: &SparseVec) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .enumerate()
        .map(|(k, (i, c))| crate::exactlin::signed_term(c, &format!("[{}]", sys.ring.labels()[*i]), k == 0))
        .collect()
}

/// `Δ⁻¹(F_P(Q)) ∩ (ker Δ)^⊥` with the uniqueness hypothesis `J ∩ ker Δ = 0`.
#[derive(Clone, Debug)]
pub struct CanonicalIdeal {
    pub ideal: Subspace,
    pub ker_delta: Subspace,
    pub check: CheckResult,
}

pub fn canonical_max_ideal(sys: &RSystem) -> CanonicalIdeal {
    let kd = ker_delta(sys);
    let ideal = delta_preimage_finite_rank(sys).intersect(&sys.ring.perp(&kd));
    let meet = ideal.intersect(&kd);
    let check = if !meet.is_zero() {
        CheckResult::fail("canonical-ideal", "J ∩ ker Δ is nonzero")
            .with_note(format!("x = {}", render(sys, &meet.basis()[0])))
    } else if !sys.ring.is_ideal(&ideal) {
        CheckResult::fail("canonical-ideal", "the intersection is not a two-sided ideal")
    } else {
        CheckResult::pass("canonical-ideal", format!("dim J = {}", ideal.dim()))
    };
    CanonicalIdeal {
        ideal,
        ker_delta: kd,
        check,
    }
}

/// Elements of `basis` combined by ring coordinates.
pub fn lift(coords: &SparseVec, basis: &[SparseVec]) -> SparseVec {
    combine(coords, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn scalar_theta_is_identity() {
        let f = Field::Rational;
        let sys = RSystem::scalars(f);
        let op = rank_one(SparseVec::unit(f, 0), SparseVec::unit(f, 0));
        assert_eq!(op.matrix_q(&sys), SparseVec::unit(f, 0));
        assert!(check_adjoint(&sys, &op));
        assert!(rank_one(SparseVec::zero(), SparseVec::unit(f, 0)).matrix_q(&sys).is_zero());
    }

    #[test]
    fn fs_on_empty_inputs_is_zero() {
        let sys = RSystem::scalars(Field::Rational);
        let w = check_fs(&sys, &[], &[]).unwrap();
        assert!(w.theta.matrix_q(&sys).is_zero());
    }

    #[test]
    fn zero_pairing_has_no_fs_witness() {
        let f = Field::Rational;
        let mut sys = RSystem::scalars(f);
        sys.psi = vec![vec![SparseVec::zero()]];
        assert!(check_fs(&sys, &[SparseVec::unit(f, 0)], &[]).is_none());
        let c = canonical_max_ideal(&sys);
        assert!(c.ideal.is_zero());
    }

    #[test]
    fn scalar_canonical_ideal_is_everything() {
        let sys = RSystem::scalars(Field::Rational);
        assert_eq!(canonical_max_ideal(&sys).ideal.dim(), 1);
    }
}
