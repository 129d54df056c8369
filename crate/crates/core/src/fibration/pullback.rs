//! Pullbacks of a fibration over the disk along a regular map, recorded as a
//! meridian plan: target meridian `i` is sent to a conjugate `W_i ξ_{j_i} W_i⁻¹`
//! of a source meridian, traversed with local degree `r_i = ±1`.

use super::{LefschetzFibration, Sign, SignedCycle};
use crate::error::{Error, Result};
use crate::mapping::{act_on_curve, evaluate, MCWord};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanEntry {
    /// 0-based index of the source cycle.
    pub source: usize,
    pub conjugator: MCWord,
    /// Local degree of the map at the preimage critical point.
    pub degree: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeridianPlan {
    pub entries: Vec<PlanEntry>,
}

impl MeridianPlan {
    pub fn identity(u: &LefschetzFibration) -> Self {
        MeridianPlan {
            entries: (0..u.len())
                .map(|i| PlanEntry {
                    source: i,
                    conjugator: MCWord::empty(u.fiber()),
                    degree: Sign::Positive,
                })
                .collect(),
        }
    }

    /// Every local degree is `+1`: the map is an orientation-preserving immersion.
    pub fn is_immersion(&self) -> bool {
        self.entries.iter().all(|e| e.degree == Sign::Positive)
    }

    pub fn max_conjugator_len(&self) -> usize {
        self.entries.iter().map(|e| e.conjugator.len()).max().unwrap_or(0)
    }
}

fn signed_power(m: &IntMatrix, inverse: &IntMatrix, sign: Sign) -> IntMatrix {
    match sign {
        Sign::Positive => m.clone(),
        Sign::Negative => inverse.clone(),
    }
}

pub fn pullback(u: &LefschetzFibration, plan: &MeridianPlan) -> Result<LefschetzFibration> {
    if !u.base().is_disk() {
        return Err(Error::Unsupported("pullbacks are taken from fibrations over the disk".into()));
    }
    let mut cycles = Vec::with_capacity(plan.entries.len());
    for (i, e) in plan.entries.iter().enumerate() {
        let src = u.cycles().get(e.source).ok_or_else(|| {
            Error::input(format!(
                "plan entry {} refers to cycle {} of {}",
                i + 1,
                e.source + 1,
                u.len()
            ))
        })?;
        if e.conjugator.surface() != u.fiber() {
            return Err(Error::input(format!(
                "plan entry {} conjugates on {}, fiber is {}",
                i + 1,
                e.conjugator.surface(),
                u.fiber()
            )));
        }
        let curve = act_on_curve(&e.conjugator, &src.curve)?;
        let cycle = SignedCycle::new(curve, e.degree.times(src.sign));

        // ω_f(meridian) = (W T W⁻¹)^r must be the twist of the new cycle.
        let w = evaluate(&e.conjugator)?.matrix;
        let w_inv = evaluate(&e.conjugator.inverse())?.matrix;
        let t = src.twist();
        let conj = w.mul(&t.matrix()).mul(&w_inv);
        let conj_inv = w.mul(&t.inverse().matrix()).mul(&w_inv);
        if cycle.twist().matrix() != signed_power(&conj, &conj_inv, e.degree) {
            return Err(Error::Internal(format!(
                "monodromy of target meridian {} does not factor through the source",
                i + 1
            )));
        }
        cycles.push(cycle);
    }
    LefschetzFibration::over_disk(u.fiber(), cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{global_conjugate, u_11, u_g1};

    #[test]
    fn identity_plan() {
        let u = u_g1(3).unwrap();
        assert_eq!(pullback(&u, &MeridianPlan::identity(&u)).unwrap(), u);
    }

    #[test]
    fn orientation_reversal_flips_a_sign() {
        let u = u_11().unwrap();
        let mut plan = MeridianPlan::identity(&u);
        plan.entries[0].degree = Sign::Negative;
        let f = pullback(&u, &plan).unwrap();
        assert_eq!(f.cycles()[0].curve, u.cycles()[0].curve);
        assert_eq!(f.cycles()[0].sign, Sign::Negative);
        assert_eq!(f.cycles()[1], u.cycles()[1]);
        assert!(!plan.is_immersion());
    }

    #[test]
    fn conjugated_plan_matches_global_conjugation() {
        let u = u_g1(2).unwrap();
        let w = MCWord::twists(u.fiber(), vec![u.twists()[3].clone(), u.twists()[1].inverse()]).unwrap();
        let mut plan = MeridianPlan::identity(&u);
        for e in &mut plan.entries {
            e.conjugator = w.clone();
        }
        assert_eq!(pullback(&u, &plan).unwrap(), global_conjugate(&u, &w).unwrap());
    }

    #[test]
    fn invalid_plans() {
        let u = u_11().unwrap();
        let mut plan = MeridianPlan::identity(&u);
        plan.entries[1].source = 5;
        assert!(matches!(pullback(&u, &plan), Err(Error::Input(_))));
    }
}
