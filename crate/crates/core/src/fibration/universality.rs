//! Checks of the conditions characterizing universal fibrations: surjective
//! permutation monodromy, surjective Lefschetz monodromy, and every curve
//! class realized by a vanishing cycle (with both signs, for strong
//! universality).

use std::collections::BTreeSet;

use super::{LefschetzFibration, Sign};
use crate::curves::{enumerate_classes, CurveClass};
use crate::error::Result;
use crate::oracle::{SurjectivityOracle, SurjectivityVerdict};
use crate::perm::perm_group_surjective;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityReport {
    pub cond_perm: bool,
    pub cond_lef: SurjectivityVerdict,
    pub cond2: bool,
    pub cond2strong: bool,
    /// Classes of the fiber with no vanishing cycle.
    pub missing_classes: Vec<CurveClass>,
    /// Realized classes whose vanishing cycles all have the same sign.
    pub single_sign_classes: Vec<CurveClass>,
    pub universal: Verdict,
    pub strongly_universal: Verdict,
}

pub fn universality_report(u: &LefschetzFibration) -> Result<UniversalityReport> {
    universality_report_with(u, &SurjectivityOracle::default())
}

pub fn universality_report_with(
    u: &LefschetzFibration,
    oracle: &SurjectivityOracle,
) -> Result<UniversalityReport> {
    let fiber = u.fiber();
    let cond_perm = if fiber.boundary <= 1 {
        true
    } else {
        let perms: Vec<_> = u.bundle().iter().map(|g| g.perm().clone()).collect();
        perm_group_surjective(&perms, fiber.boundary)?
    };
    let cond_lef = oracle.verdict(&u.twists(), &u.bundle_reps(), fiber);

    let signs_of = |cls: &CurveClass| -> BTreeSet<Sign> {
        u.cycles()
            .iter()
            .filter(|c| c.curve.cls() == *cls)
            .map(|c| c.sign)
            .collect()
    };
    let classes = enumerate_classes(fiber);
    let missing_classes: Vec<_> = classes.iter().filter(|c| signs_of(c).is_empty()).copied().collect();
    let single_sign_classes: Vec<_> = classes.iter().filter(|c| signs_of(c).len() == 1).copied().collect();
    let cond2 = missing_classes.is_empty();
    let cond2strong = cond2 && single_sign_classes.is_empty();

    // A surjectivity obstruction refutes universality only when the twists
    // are the whole monodromy, i.e. over the disk.
    let lef_refuted = cond_lef.is_obstructed() && u.base().is_disk();
    let verdict = |class_condition: bool| {
        if !cond_perm || !class_condition || lef_refuted {
            Verdict::No
        } else if cond_lef.is_certified() {
            Verdict::Yes
        } else {
            Verdict::Unknown
        }
    };
    Ok(UniversalityReport {
        universal: verdict(cond2),
        strongly_universal: verdict(cond2strong),
        cond_perm,
        cond_lef,
        cond2,
        cond2strong,
        missing_classes,
        single_sign_classes,
    })
}
