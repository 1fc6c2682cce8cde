use crate::exactlin::{Field, SparseVec};
use crate::graded::Element;
use crate::realization::RealizationData;
use crate::verdict::CheckResult;

use super::{Bimodule, CovariantRep, FiniteRing, RSystemError, TensorProduct};

/// Free tensor dimension above which tensor powers are refused.
pub const DEFAULT_TENSOR_CAP: usize = 4096;

/// `(P, Q, ψ)` with `psi[p][q] = ψ(p ⊗ q)` in ring coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSystem {
    pub ring: FiniteRing,
    pub p: Bimodule,
    pub q: Bimodule,
    pub psi: Vec<Vec<SparseVec>>,
}

impl RSystem {
    pub fn field(&self) -> Field {
        self.ring.field()
    }

    /// `R = P = Q = K` with `ψ` the multiplication.
    pub fn scalars(field: Field) -> Self {
        let ring = FiniteRing::scalars(field);
        let m = ring.regular_bimodule();
        RSystem {
            psi: vec![vec![SparseVec::unit(field, 0)]],
            ring,
            p: m.clone(),
            q: m,
        }
    }

    pub fn psi(&self, p: &SparseVec, q: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (a, x) in p.iter() {
            for (b, y) in q.iter() {
                out.axpy(&(x * y), &self.psi[*a][*b]);
            }
        }
        out
    }

    fn unit(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.field(), i)
    }

    /// `(J, I, ψ(j ⊗ i) = ji)` over `R`, with the inclusion representation into `A`.
    pub fn from_realization(data: &RealizationData) -> Result<(Self, CovariantRep), RSystemError> {
        let a = &data.a;
        let (ring, r_basis) = FiniteRing::from_subspace(a, &data.r)?;
        let (p, j_basis) = Bimodule::from_subspace(a, &r_basis, &data.j)?;
        let (q, i_basis) = Bimodule::from_subspace(a, &r_basis, &data.i)?;
        let psi = j_basis
            .iter()
            .map(|j| {
                i_basis
                    .iter()
                    .map(|i| {
                        let ji = a.mul(j, i)?;
                        data.r.coordinates(&ji).ok_or_else(|| {
                            RSystemError::Precondition(format!("JI escapes R: {}", a.display(&ji)))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rep = CovariantRep {
            target: a.clone(),
            s: j_basis,
            t: i_basis,
            sigma: r_basis,
        };
        Ok((RSystem { ring, p, q, psi }, rep))
    }
}

/// Bimodule axioms for `P` and `Q`, and `ψ` balanced and `R`-bilinear, on basis triples.
pub fn check_system(sys: &RSystem) -> CheckResult {
    let name = "r-system";
    let ring = &sys.ring;
    let n = ring.dim();
    for (label, m) in [("P", &sys.p), ("Q", &sys.q)] {
        for r in 0..n {
            for s in 0..n {
                let rs = ring.basis_product(r, s);
                for k in 0..m.dim() {
                    let x = sys.unit(k);
                    let (br, bs) = (sys.unit(r), sys.unit(s));
                    let checks = [
                        (m.act_left(rs, &x), m.act_left(&br, &m.act_left(&bs, &x)), "(rs)m = r(sm)"),
                        (m.act_right(&x, rs), m.act_right(&m.act_right(&x, &br), &bs), "m(rs) = (mr)s"),
                        (
                            m.act_right(&m.act_left(&br, &x), &bs),
                            m.act_left(&br, &m.act_right(&x, &bs)),
                            "(rm)s = r(ms)",
                        ),
                    ];
                    for (lhs, rhs, law) in checks {
                        if lhs != rhs {
                            return CheckResult::fail(name, format!("{label} violates {law}")).with_note(format!(
                                "r = {}, s = {}, m = {}",
                                ring.labels()[r],
                                ring.labels()[s],
                                m.labels[k]
                            ));
                        }
                    }
                }
            }
        }
    }
    for a in 0..sys.p.dim() {
        for b in 0..sys.q.dim() {
            let (p, q) = (sys.unit(a), sys.unit(b));
            let value = sys.psi(&p, &q);
            for r in 0..n {
                let br = sys.unit(r);
                let checks = [
                    (sys.psi(&sys.p.act_left(&br, &p), &q), ring.mul(&br, &value), "ψ(rp ⊗ q) = rψ(p ⊗ q)"),
                    (sys.psi(&p, &sys.q.act_right(&q, &br)), ring.mul(&value, &br), "ψ(p ⊗ qr) = ψ(p ⊗ q)r"),
                    (
                        sys.psi(&sys.p.act_right(&p, &br), &q),
                        sys.psi(&p, &sys.q.act_left(&br, &q)),
                        "ψ(pr ⊗ q) = ψ(p ⊗ rq)",
                    ),
                ];
                for (lhs, rhs, law) in checks {
                    if lhs != rhs {
                        return CheckResult::fail(name, format!("ψ violates {law}")).with_note(format!(
                            "p = {}, q = {}, r = {}",
                            sys.p.labels[a],
                            sys.q.labels[b],
                            ring.labels()[r]
                        ));
                    }
                }
            }
        }
    }
    CheckResult::pass(
        name,
        format!("dim R = {}, dim P = {}, dim Q = {}", n, sys.p.dim(), sys.q.dim()),
    )
}

/// One level of the tensor tower; `p_factors[k] = (a, b)` means basis vector
/// `k` of `P^{⊗n}` is `p_a ⊗ p'_b` with `p'_b` from level `n - 1`, and
/// `q_factors[k] = (c, d)` means `q'_c ⊗ q_d`.
#[derive(Clone, Debug)]
pub struct TensorLevel {
    pub system: RSystem,
    pub p_factors: Vec<(usize, usize)>,
    pub q_factors: Vec<(usize, usize)>,
}

/// Levels `0..=n`: `(R, R, multiplication)`, the system itself, then
/// `ψ^{⊗n}((p ⊗ p') ⊗ (q ⊗ q')) = ψ(p · ψ^{⊗(n-1)}(p' ⊗ q) ⊗ q')`.
pub fn tensor_tower(sys: &RSystem, n: usize, cap: usize) -> Result<Vec<TensorLevel>, RSystemError> {
    let ring = &sys.ring;
    let regular = ring.regular_bimodule();
    let zero = RSystem {
        ring: ring.clone(),
        p: regular.clone(),
        q: regular,
        psi: (0..ring.dim())
            .map(|r| (0..ring.dim()).map(|s| ring.basis_product(r, s).clone()).collect())
            .collect(),
    };
    let mut levels = vec![TensorLevel {
        system: zero,
        p_factors: Vec::new(),
        q_factors: Vec::new(),
    }];
    if n >= 1 {
        levels.push(TensorLevel {
            system: sys.clone(),
            p_factors: Vec::new(),
            q_factors: Vec::new(),
        });
    }
    for _ in 2..=n {
        let prev = &levels.last().expect("nonempty").system;
        let pt = TensorProduct::new(ring, &sys.p, &prev.p, cap)?;
        let qt = TensorProduct::new(ring, &prev.q, &sys.q, cap)?;
        let psi = pt
            .factors
            .iter()
            .map(|(a, b)| {
                qt.factors
                    .iter()
                    .map(|(c, d)| {
                        let inner = prev.psi(&sys.unit(*b), &sys.unit(*c));
                        let p = sys.p.act_right(&sys.unit(*a), &inner);
                        sys.psi(&p, &sys.unit(*d))
                    })
                    .collect()
            })
            .collect();
        let system = RSystem {
            ring: ring.clone(),
            p: pt.module.clone(),
            q: qt.module.clone(),
            psi,
        };
        levels.push(TensorLevel {
            system,
            p_factors: pt.factors,
            q_factors: qt.factors,
        });
    }
    Ok(levels)
}

/// `(P^{⊗n}, Q^{⊗n}, ψ^{⊗n})`.
pub fn tensor_power_system(sys: &RSystem, n: usize) -> Result<RSystem, RSystemError> {
    Ok(tensor_tower(sys, n, DEFAULT_TENSOR_CAP)?
        .pop()
        .expect("tower has n + 1 levels")
        .system)
}

/// Images of the level-`n` bases under `S^{⊗n}` and `T^{⊗n}`, with
/// `S^{⊗0} = T^{⊗0} = σ`.
pub fn rep_tensor_power(
    sys: &RSystem,
    rep: &CovariantRep,
    n: usize,
) -> Result<(RSystem, CovariantRep), RSystemError> {
    let levels = tensor_tower(sys, n, DEFAULT_TENSOR_CAP)?;
    let reps = tower_reps(rep, &levels)?;
    let sys_n = levels.into_iter().last().expect("nonempty").system;
    Ok((sys_n, reps.into_iter().last().expect("nonempty")))
}

/// One representation per tower level.
pub fn tower_reps(rep: &CovariantRep, levels: &[TensorLevel]) -> Result<Vec<CovariantRep>, RSystemError> {
    let a = &rep.target;
    let mut out = vec![CovariantRep {
        target: a.clone(),
        s: rep.sigma.clone(),
        t: rep.sigma.clone(),
        sigma: rep.sigma.clone(),
    }];
    if levels.len() > 1 {
        out.push(rep.clone());
    }
    for level in levels.iter().skip(2) {
        let prev = out.last().expect("nonempty");
        let s: Vec<Element> = level
            .p_factors
            .iter()
            .map(|(x, y)| a.mul(&rep.s[*x], &prev.s[*y]))
            .collect::<Result<_, _>>()?;
        let t: Vec<Element> = level
            .q_factors
            .iter()
            .map(|(x, y)| a.mul(&prev.t[*x], &rep.t[*y]))
            .collect::<Result<_, _>>()?;
        out.push(CovariantRep {
            target: a.clone(),
            s,
            t,
            sigma: rep.sigma.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_system_powers() {
        let f = Field::Rational;
        let sys = RSystem::scalars(f);
        assert!(check_system(&sys).passed());
        for n in 0..=3 {
            let p = tensor_power_system(&sys, n).unwrap();
            assert!(check_system(&p).passed());
            assert_eq!(p.p.dim(), 1);
            assert_eq!(p.psi[0][0], SparseVec::unit(f, 0));
        }
    }

    #[test]
    fn corrupted_psi_is_caught() {
        let f = Field::Rational;
        let mut sys = RSystem::scalars(f);
        sys.ring = FiniteRing::new(f, vec!["1".into()], vec![vec![SparseVec::unit(f, 0).scaled(&f.from_i64(2))]]);
        assert!(check_system(&sys).failed());
    }
}
