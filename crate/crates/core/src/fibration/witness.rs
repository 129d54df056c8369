//! Search for a meridian plan exhibiting a target fibration as a pullback of
//! a source fibration over the disk.
//!
//! For each target cycle `d` the conjugators `W` are enumerated by length,
//! then lexicographically, over the alphabet `t_{c}, t_{c}⁻¹` for the
//! distinct source cycle curves `c` (freely reduced words only). A word
//! matches source cycle `j` when `W⁻¹(d) = ±c_j` and the classes agree. A
//! match with the right sign anywhere within the depth beats an
//! orientation-reversing one.

use super::pullback::{pullback, MeridianPlan, PlanEntry};
use super::{LefschetzFibration, Sign};
use crate::error::{Error, Result};
use crate::homology::HomologyClass;
use crate::mapping::{twist_vector, Curve, Letter, MCWord, TwistGen};

pub const DEFAULT_WITNESS_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// All local degrees are `+1`.
    Immersion(MeridianPlan),
    /// A plan using at least one orientation-reversing disk.
    Plan(MeridianPlan),
    /// Some target cycles (0-based) had no match within the depth.
    Unknown { unmatched: Vec<usize> },
}

impl WitnessOutcome {
    pub fn plan(&self) -> Option<&MeridianPlan> {
        match self {
            WitnessOutcome::Immersion(p) | WitnessOutcome::Plan(p) => Some(p),
            WitnessOutcome::Unknown { .. } => None,
        }
    }
}

struct Search<'a> {
    u: &'a LefschetzFibration,
    alphabet: Vec<TwistGen>,
    target: &'a Curve,
    sign: Sign,
    word: Vec<usize>,
    /// First match of any sign: (letters, source index).
    fallback: Option<(Vec<usize>, usize)>,
}

impl Search<'_> {
    fn matching_source(&self, v: &HomologyClass) -> (Option<usize>, Option<usize>) {
        let mut same_sign = None;
        let mut any = None;
        for (j, c) in self.u.cycles().iter().enumerate() {
            if c.curve.cls() == self.target.cls() && c.curve.hom().equal_up_to_sign(v) {
                any.get_or_insert(j);
                if c.sign == self.sign {
                    same_sign.get_or_insert(j);
                }
            }
        }
        (same_sign, any)
    }

    /// Words of exactly `remaining` more letters extending `self.word`, with
    /// `v = W⁻¹(d)` for the current prefix `W`.
    fn dfs(&mut self, v: &HomologyClass, remaining: usize) -> Option<usize> {
        if remaining == 0 {
            let (same, any) = self.matching_source(v);
            if let Some(j) = same {
                return Some(j);
            }
            if let (Some(j), None) = (any, &self.fallback) {
                self.fallback = Some((self.word.clone(), j));
            }
            return None;
        }
        for k in 0..self.alphabet.len() {
            // letters 2m and 2m+1 are mutually inverse
            if self.word.last().is_some_and(|&last| last ^ 1 == k) {
                continue;
            }
            let inv = self.alphabet[k].inverse();
            let next = twist_vector(&inv.curve, inv.handed, v);
            self.word.push(k);
            if let Some(j) = self.dfs(&next, remaining - 1) {
                return Some(j);
            }
            self.word.pop();
        }
        None
    }
}

fn word_from(u: &LefschetzFibration, alphabet: &[TwistGen], letters: &[usize]) -> Result<MCWord> {
    MCWord::new(
        u.fiber(),
        letters.iter().map(|&k| Letter::Twist(alphabet[k].clone())).collect(),
    )
}

pub fn substitution_witness(
    u: &LefschetzFibration,
    f: &LefschetzFibration,
    depth: usize,
) -> Result<WitnessOutcome> {
    if u.fiber() != f.fiber() {
        return Err(Error::input(format!(
            "source fiber {} differs from target fiber {}",
            u.fiber(),
            f.fiber()
        )));
    }
    if !u.base().is_disk() || !f.base().is_disk() {
        return Err(Error::Unsupported("witness search needs both fibrations over the disk".into()));
    }
    let mut alphabet: Vec<TwistGen> = Vec::new();
    for c in u.cycles() {
        if !alphabet.iter().any(|t| t.curve.same_curve(&c.curve)) {
            alphabet.push(TwistGen::right(c.curve.clone()));
            alphabet.push(TwistGen::left(c.curve.clone()));
        }
    }

    let mut entries = Vec::with_capacity(f.len());
    let mut unmatched = Vec::new();
    for (i, target) in f.cycles().iter().enumerate() {
        let mut search = Search {
            u,
            alphabet: alphabet.clone(),
            target: &target.curve,
            sign: target.sign,
            word: Vec::new(),
            fallback: None,
        };
        let mut found = None;
        for len in 0..=depth {
            search.word.clear();
            if let Some(j) = search.dfs(target.curve.hom(), len) {
                found = Some((search.word.clone(), j, Sign::Positive));
                break;
            }
        }
        let found = found.or_else(|| search.fallback.take().map(|(w, j)| (w, j, Sign::Negative)));
        match found {
            Some((letters, j, degree)) => entries.push(PlanEntry {
                source: j,
                conjugator: word_from(u, &alphabet, &letters)?,
                degree,
            }),
            None => unmatched.push(i),
        }
    }
    if !unmatched.is_empty() {
        return Ok(WitnessOutcome::Unknown { unmatched });
    }

    let plan = MeridianPlan { entries };
    let image = pullback(u, &plan)?;
    for (i, (x, y)) in image.cycles().iter().zip(f.cycles()).enumerate() {
        if !x.same_as(y) {
            return Err(Error::Internal(format!(
                "witness plan does not reproduce target cycle {}",
                i + 1
            )));
        }
    }
    Ok(if plan.is_immersion() {
        WitnessOutcome::Immersion(plan)
    } else {
        WitnessOutcome::Plan(plan)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{global_conjugate, u_11, u_g1, SignedCycle};
    use crate::homology::SurfaceSpec;

    #[test]
    fn identical_fibrations_give_the_identity() {
        let u = u_g1(2).unwrap();
        let out = substitution_witness(&u, &u, 4).unwrap();
        assert_eq!(out, WitnessOutcome::Immersion(MeridianPlan::identity(&u)));
    }

    #[test]
    fn finds_global_conjugates() {
        let u = u_g1(2).unwrap();
        let t = u.twists();
        let w = MCWord::twists(u.fiber(), vec![t[0].clone(), t[2].inverse(), t[4].clone()]).unwrap();
        let f = global_conjugate(&u, &w).unwrap();
        let out = substitution_witness(&u, &f, 3).unwrap();
        let WitnessOutcome::Immersion(plan) = out else { panic!("{out:?}") };
        assert!(plan.max_conjugator_len() <= 3);
    }

    #[test]
    fn sign_mismatch_needs_orientation_reversal() {
        let s = SurfaceSpec::new(1, 2);
        let a = Curve::from_homology(s, HomologyClass::from_i64(&[1, 0, 0]), "a").unwrap();
        let d = Curve::from_homology(s, HomologyClass::from_i64(&[0, 0, 1]), "d").unwrap();
        let u = LefschetzFibration::over_disk(
            s,
            vec![SignedCycle::new(a, Sign::Positive), SignedCycle::new(d.clone(), Sign::Negative)],
        )
        .unwrap();
        let f = LefschetzFibration::over_disk(s, vec![SignedCycle::new(d, Sign::Positive)]).unwrap();
        let out = substitution_witness(&u, &f, 2).unwrap();
        let WitnessOutcome::Plan(plan) = out else { panic!("{out:?}") };
        assert_eq!(plan.entries[0].source, 1);
        assert_eq!(plan.entries[0].degree, Sign::Negative);
    }

    #[test]
    fn unreachable_targets_are_unknown() {
        let u = u_11().unwrap();
        let s = u.fiber();
        // 5α₁ + 2β₁ needs longer words
        let far = Curve::from_homology(s, HomologyClass::from_i64(&[5, 2]), "x").unwrap();
        let f = LefschetzFibration::over_disk(s, vec![SignedCycle::new(far, Sign::Positive)]).unwrap();
        assert_eq!(
            substitution_witness(&u, &f, 1).unwrap(),
            WitnessOutcome::Unknown { unmatched: vec![0] }
        );
    }

    #[test]
    fn fiber_mismatch() {
        assert!(matches!(
            substitution_witness(&u_11().unwrap(), &u_g1(2).unwrap(), 2),
            Err(Error::Input(_))
        ));
    }
}
