//! Linear degeneracy and straightness of rarefaction curves at rational samples.
//!
//! With `C(u, t) = det(K(u) - t h(u)^2 I)` and `v(u) = A(u, λ(u))` a column of the
//! adjugate of that matrix, `∇λ = -∇_u C / C_t` and
//! `C_t · Dv[v] = Σ_j v_j (C_t ∂_j A - A_t ∂_j C)`, all evaluated at the root `λ`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{fmt_point, isolate_pinned, nonvanishing_column, FluxSystem, JetData};
use crate::arith::{IsolatingInterval, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    LinearDegeneracy,
    StraightRarefaction,
}

/// A sample where a condition fails, for the eigenvalue family `family` (0-based, in
/// increasing order of the eigenvalues).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: Condition,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub u: Vec<Rational>,
    pub family: usize,
    pub eigenvalue: IsolatingInterval,
    /// `∇λ · v` with `v` normalized by its first nonzero coordinate, when `λ` is rational.
    #[serde(with = "crate::arith::serde_rational::option")]
    pub value: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CheckOutcome {
    HoldsAtSamples { samples: usize },
    Fails { witness: Witness },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::HoldsAtSamples { .. })
    }
}

struct RootData<'a> {
    jet: &'a JetData,
    iv: &'a IsolatingInterval,
    col: usize,
}

impl RootData<'_> {
    fn zero(&self, p: &UniPoly) -> bool {
        p.vanishes_at_root(&self.jet.det, self.iv)
    }

    fn v(&self, k: usize) -> &UniPoly {
        &self.jet.adj[k][self.col]
    }

    /// `Σ_j ∂_j C · v_j`, proportional to `∇λ · v`.
    fn degeneracy(&self) -> UniPoly {
        let m = self.jet.adj.len();
        (0..m).fold(UniPoly::zero(), |acc, j| acc.add(&self.jet.det_eps[j].mul(self.v(j))))
    }

    /// `C_t · Dv[v]`.
    fn derivative_along(&self) -> Vec<UniPoly> {
        let m = self.jet.adj.len();
        let ct = self.jet.det.derivative();
        (0..m)
            .map(|k| {
                let at = self.v(k).derivative();
                (0..m).fold(UniPoly::zero(), |acc, j| {
                    let term = ct.mul(&self.jet.adj_eps[j][k][self.col]).sub(&at.mul(&self.jet.det_eps[j]));
                    acc.add(&self.v(j).mul(&term))
                })
            })
            .collect()
    }

    fn degeneracy_value(&self) -> Option<Rational> {
        let r = self.iv.exact.as_ref()?;
        let m = self.jet.adj.len();
        let lead = (0..m).map(|k| self.v(k).eval(r)).find(|x| !x.is_zero())?;
        let ct = self.jet.det.derivative().eval(r);
        Some(-self.degeneracy().eval(r) / (ct * lead))
    }
}

enum SampleResult {
    Ok,
    NotStrict,
    Fail(Witness),
}

fn check_sample(sys: &FluxSystem, u: &[Rational], families: &[usize], conditions: &[Condition]) -> Result<SampleResult> {
    let m = sys.m();
    let jet = sys.jets(u)?;
    let roots = isolate_pinned(&jet.det)?;
    if roots.len() != m || roots.iter().any(|iv| iv.multiplicity != 1) {
        return Ok(SampleResult::NotStrict);
    }
    for &i in families {
        if i >= m {
            return Err(Error::Invalid(format!("family {i} of a system with {m} unknowns")));
        }
        let iv = &roots[i];
        let col = nonvanishing_column(&jet.adj, &jet.det, iv)
            .ok_or_else(|| Error::Contract(format!("simple eigenvalue without eigenvector at {}", fmt_point(u))))?;
        let rd = RootData { jet: &jet, iv, col };
        let witness = |condition, value| Witness { condition, u: u.to_vec(), family: i, eigenvalue: iv.clone(), value };
        for &cond in conditions {
            match cond {
                Condition::LinearDegeneracy => {
                    if !rd.zero(&rd.degeneracy()) {
                        return Ok(SampleResult::Fail(witness(cond, rd.degeneracy_value())));
                    }
                }
                Condition::StraightRarefaction => {
                    let w = rd.derivative_along();
                    for a in 0..m {
                        for b in a + 1..m {
                            let minor = rd.v(a).mul(&w[b]).sub(&rd.v(b).mul(&w[a]));
                            if !rd.zero(&minor) {
                                return Ok(SampleResult::Fail(witness(cond, None)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(SampleResult::Ok)
}

fn run_check(sys: &FluxSystem, samples: &[Vec<Rational>], families: &[usize], conditions: &[Condition]) -> Result<(usize, CheckOutcome)> {
    if samples.is_empty() {
        return Err(Error::Invalid("empty sample list".into()));
    }
    let results: Vec<Result<SampleResult>> = samples.par_iter().map(|u| check_sample(sys, u, families, conditions)).collect();
    let mut checked = 0;
    let mut skipped = 0;
    for r in results {
        match r? {
            SampleResult::Ok => checked += 1,
            SampleResult::NotStrict => skipped += 1,
            SampleResult::Fail(witness) => return Ok((skipped, CheckOutcome::Fails { witness })),
        }
    }
    Ok((skipped, CheckOutcome::HoldsAtSamples { samples: checked }))
}

fn strict_only(sys: &FluxSystem, samples: &[Vec<Rational>], family: usize, cond: Condition) -> Result<CheckOutcome> {
    let (skipped, out) = run_check(sys, samples, &[family], &[cond])?;
    if skipped > 0 {
        let u = samples
            .iter()
            .find(|u| matches!(check_sample(sys, u, &[], &[]), Ok(SampleResult::NotStrict)))
            .expect("a skipped sample exists");
        return Err(Error::Sample(format!("not strictly hyperbolic at {}", fmt_point(u))));
    }
    Ok(out)
}

/// `L_i(λ_i) = 0` at every sample; every sample must be strictly hyperbolic.
pub fn linear_degeneracy_check(sys: &FluxSystem, samples: &[Vec<Rational>], family: usize) -> Result<CheckOutcome> {
    strict_only(sys, samples, family, Condition::LinearDegeneracy)
}

/// `v_i ∧ Dv_i[v_i] = 0` at every sample; every sample must be strictly hyperbolic.
pub fn straight_rarefaction_check(sys: &FluxSystem, samples: &[Vec<Rational>], family: usize) -> Result<CheckOutcome> {
    strict_only(sys, samples, family, Condition::StraightRarefaction)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TempleVerdict {
    TempleAtSamples,
    NotTemple { witness: Witness },
    /// No sample was strictly hyperbolic.
    NotStrictlyHyperbolic {
        #[serde(with = "crate::arith::serde_rational::vec")]
        u: Vec<Rational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TempleReport {
    pub verdict: TempleVerdict,
    pub samples: usize,
    /// Samples where the system is not strictly hyperbolic; they are not checked.
    pub skipped: usize,
    pub certificate: &'static str,
}

const CERTIFICATE: &str = "sample-based: the conditions were verified exactly at the listed rational samples only";

/// Linear degeneracy and straight rarefaction curves for every family, at the strictly
/// hyperbolic samples.
pub fn is_temple(sys: &FluxSystem, samples: &[Vec<Rational>]) -> Result<TempleReport> {
    let families: Vec<usize> = (0..sys.m()).collect();
    let conds = [Condition::LinearDegeneracy, Condition::StraightRarefaction];
    let (skipped, out) = run_check(sys, samples, &families, &conds)?;
    let verdict = match out {
        CheckOutcome::Fails { witness } => TempleVerdict::NotTemple { witness },
        CheckOutcome::HoldsAtSamples { samples: 0 } => TempleVerdict::NotStrictlyHyperbolic { u: samples[0].clone() },
        CheckOutcome::HoldsAtSamples { .. } => TempleVerdict::TempleAtSamples,
    };
    Ok(TempleReport { verdict, samples: samples.len(), skipped, certificate: CERTIFICATE })
}

/// `k` seeded integer samples in `[-bound, bound]^m` avoiding the poles of the flux.
pub fn random_samples(sys: &FluxSystem, k: usize, seed: u64, bound: i64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let u: Vec<Rational> = (0..sys.m()).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect();
        if !sys.denominator().eval(&u).is_zero() {
            out.push(u);
        }
    }
    out
}
