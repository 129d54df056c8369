//! Stabilization and destabilization over the disk.
//!
//! Stabilizing attaches a 1-handle to the fiber and a vanishing cycle running
//! over it once; the total space does not change. At the homology resolution
//! the moves are these linear re-coordinatizations (`F = F_{g,b}`):
//!
//! * genus up (`b ≥ 2`): the handle joins `∂_{b−1}` to `∂_b`. `δ_{b−1}` becomes
//!   `β_{g+1}`, the handle core closes up to `α_{g+1}`, and the new cycle is `α_{g+1}`.
//! * boundary up (`b ≥ 1`): both feet on `∂_b`, splitting it in two. A new
//!   coordinate `δ_b` is appended (zero on old classes); the new cycle is `δ_b`.
//!
//! Destabilization along generator `k` needs exactly one cycle with
//! coefficient `±1` at `k` and every other cycle with `0` there; that cycle
//! is removed and
//!
//! * `k` in the pair `(α_p, β_p)`: the pair is dropped and the coefficient of
//!   its other member becomes a new last boundary coordinate (`F_{g−1,b+1}`);
//! * `k = δ_j`: the coordinate is deleted (`F_{g,b−1}`).
//!
//! The criterion is homological; it is sufficient for the reductions of the
//! catalog fibrations, not a test for the geometric arc condition.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::invariants::total_space_invariants;
use super::{LefschetzFibration, Sign, SignedCycle};
use crate::curves::{CurveClass, Side};
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceSpec};
use crate::mapping::{boundary_indicator, Curve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizationMode {
    GenusUp,
    BoundaryUp,
}

/// Class of a transported curve, with the separating side that avoids the
/// last boundary component named explicitly.
enum Target {
    NonSeparating,
    Separating { far: Side, near: Side },
}

fn target_of(c: &Curve) -> Target {
    match c.separating_sides() {
        None => Target::NonSeparating,
        Some(sides) => Target::Separating {
            far: sides.far,
            near: sides.near,
        },
    }
}

/// Rebuilds a curve on `surface`; `Err` carries a description of what failed.
fn rebuild(surface: SurfaceSpec, old: &Curve, hom: Vec<BigInt>, target: Target) -> std::result::Result<Curve, String> {
    let hom = HomologyClass { coords: hom };
    let (cls, far) = match target {
        Target::NonSeparating => (CurveClass::NonSeparating, None),
        Target::Separating { far, near } => (CurveClass::separating(far, near), Some(far)),
    };
    let curve = Curve::new(surface, cls, hom, old.label()).map_err(|e| e.to_string())?;
    if let Some(far) = far {
        let read = curve.separating_sides().map(|s| s.far);
        if read != Some(far) {
            return Err(format!(
                "curve '{}' would become {} with an ambiguous side reading",
                old.label(),
                curve.cls()
            ));
        }
    }
    Ok(curve)
}

fn require_disk(f: &LefschetzFibration, what: &str) -> Result<()> {
    if f.base().is_disk() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what} is only implemented over the disk")))
    }
}

fn check_invariants(before: &LefschetzFibration, after: &LefschetzFibration) -> Result<()> {
    let a = total_space_invariants(before)?;
    let b = total_space_invariants(after)?;
    if (a.euler, a.h1_free_rank, &a.h1_torsion, a.h2_rank)
        != (b.euler, b.h1_free_rank, &b.h1_torsion, b.h2_rank)
    {
        return Err(Error::Internal(format!(
            "(de)stabilization changed the total space: {a:?} -> {b:?}"
        )));
    }
    Ok(())
}

pub fn stabilize(f: &LefschetzFibration, mode: StabilizationMode, sign: Sign) -> Result<LefschetzFibration> {
    require_disk(f, "stabilization")?;
    let s = f.fiber();
    let (g, b) = (s.genus, s.boundary);
    let precondition = |msg: String| Error::input(msg);
    let (new_surface, new_hom, new_label): (SurfaceSpec, Vec<BigInt>, String);
    let mut cycles = Vec::with_capacity(f.len() + 1);
    match mode {
        StabilizationMode::GenusUp => {
            if b < 2 {
                return Err(precondition(format!(
                    "genus stabilization joins two boundary components; {s} has {b}"
                )));
            }
            new_surface = SurfaceSpec::new(g + 1, b - 1);
            let last = s.delta(b - 1);
            for c in f.cycles() {
                let x = &c.curve.hom().coords;
                let mut y: Vec<BigInt> = x[..2 * g].to_vec();
                y.push(BigInt::zero());
                y.push(x[last].clone());
                y.extend_from_slice(&x[2 * g..last]);
                let target = match target_of(&c.curve) {
                    Target::Separating { far, near } if x[last].is_zero() => Target::Separating {
                        far,
                        near: Side::new(near.genus + 1, near.boundary - 1),
                    },
                    _ => Target::NonSeparating,
                };
                let curve = rebuild(new_surface, &c.curve, y, target).map_err(precondition)?;
                cycles.push(SignedCycle::new(curve, c.sign));
            }
            let k = new_surface.alpha(g + 1);
            new_hom = new_surface.basis_class(k).coords;
            new_label = format!("s_{}", new_surface.basis_name(k));
        }
        StabilizationMode::BoundaryUp => {
            if b < 1 {
                return Err(precondition(format!("{s} has no boundary to stabilize along")));
            }
            new_surface = SurfaceSpec::new(g, b + 1);
            for c in f.cycles() {
                let mut y = c.curve.hom().coords.clone();
                y.push(BigInt::zero());
                let target = match target_of(&c.curve) {
                    Target::Separating { far, near } => Target::Separating {
                        far,
                        near: Side::new(near.genus, near.boundary + 1),
                    },
                    t => t,
                };
                let curve = rebuild(new_surface, &c.curve, y, target).map_err(precondition)?;
                cycles.push(SignedCycle::new(curve, c.sign));
            }
            let k = new_surface.delta(b);
            new_hom = new_surface.basis_class(k).coords;
            new_label = format!("s_{}", new_surface.basis_name(k));
        }
    }
    let new_curve = Curve::from_homology(new_surface, HomologyClass { coords: new_hom }, new_label)?;
    cycles.push(SignedCycle::new(new_curve, sign));
    let out = LefschetzFibration::over_disk(new_surface, cycles)?;
    check_invariants(f, &out)?;
    Ok(out)
}

/// Destabilizes along the 0-based basis generator `k` of the fiber.
pub fn destabilize(f: &LefschetzFibration, k: usize) -> Result<LefschetzFibration> {
    require_disk(f, "destabilization")?;
    let s = f.fiber();
    let (g, b) = (s.genus, s.boundary);
    if k >= s.rank() {
        return Err(Error::input(format!(
            "generator index {k} out of range for {s} (rank {})",
            s.rank()
        )));
    }
    let name = s.basis_name(k);
    let hits: Vec<usize> = f
        .cycles()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.curve.hom().coords[k].is_zero())
        .map(|(i, _)| i)
        .collect();
    let removed = match hits.as_slice() {
        [i] if f.cycles()[*i].curve.hom().coords[k].abs().is_one() => *i,
        [i] => {
            return Err(Error::not_applicable(format!(
                "cycle '{}' meets {name} with coefficient {}",
                f.cycles()[*i].curve.label(),
                f.cycles()[*i].curve.hom().coords[k]
            )))
        }
        [] => return Err(Error::not_applicable(format!("no cycle meets {name}"))),
        _ => {
            return Err(Error::not_applicable(format!(
                "{} cycles meet {name}",
                hits.len()
            )))
        }
    };
    let fail = |msg: String| Error::not_applicable(format!("destabilizing along {name}: {msg}"));

    let mut cycles = Vec::with_capacity(f.len() - 1);
    let new_surface;
    if k < 2 * g {
        if b == 0 {
            return Err(fail("a closed fiber has no boundary to absorb the handle".into()));
        }
        let p = k / 2;
        let partner = if k.is_multiple_of(2) { k + 1 } else { k - 1 };
        new_surface = SurfaceSpec::new(g - 1, b + 1);
        for (i, c) in f.cycles().iter().enumerate() {
            if i == removed {
                continue;
            }
            let x = &c.curve.hom().coords;
            let mut y: Vec<BigInt> = Vec::with_capacity(new_surface.rank());
            y.extend_from_slice(&x[..2 * p]);
            y.extend_from_slice(&x[2 * p + 2..]);
            y.push(x[partner].clone());
            let target = match target_of(&c.curve) {
                Target::NonSeparating => {
                    let probe = HomologyClass { coords: y.clone() };
                    if new_surface.symplectic_part(&probe).iter().all(|v| v.is_zero()) {
                        let (far, _) = boundary_indicator(&new_surface, &probe).ok_or_else(|| {
                            fail(format!("curve '{}' would not be simple", c.curve.label()))
                        })?;
                        Target::Separating {
                            far: Side::new(0, far.len()),
                            near: Side::new(g - 1, b + 1 - far.len()),
                        }
                    } else {
                        Target::NonSeparating
                    }
                }
                Target::Separating { far, near } => {
                    let genus = near.genus.checked_sub(1).ok_or_else(|| {
                        fail(format!(
                            "separating curve '{}' has no genus on the side of the handle",
                            c.curve.label()
                        ))
                    })?;
                    Target::Separating {
                        far,
                        near: Side::new(genus, near.boundary + 1),
                    }
                }
            };
            cycles.push(SignedCycle::new(rebuild(new_surface, &c.curve, y, target).map_err(fail)?, c.sign));
        }
    } else {
        new_surface = SurfaceSpec::new(g, b - 1);
        for (i, c) in f.cycles().iter().enumerate() {
            if i == removed {
                continue;
            }
            let mut y = c.curve.hom().coords.clone();
            y.remove(k);
            let target = match target_of(&c.curve) {
                Target::Separating { far, near } => Target::Separating {
                    far,
                    near: Side::new(near.genus, near.boundary - 1),
                },
                t => t,
            };
            cycles.push(SignedCycle::new(rebuild(new_surface, &c.curve, y, target).map_err(fail)?, c.sign));
        }
    }
    let out = LefschetzFibration::over_disk(new_surface, cycles)?;
    check_invariants(f, &out)?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// 0-based generator of the fiber before the step.
    pub generator: usize,
    pub generator_name: String,
    pub fiber_before: SurfaceSpec,
    pub removed: SignedCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub fibration: LefschetzFibration,
    pub steps: Vec<ReductionStep>,
    /// The budget ran out while a destabilization was still available.
    pub exhausted: bool,
}

fn first_destabilization(f: &LefschetzFibration) -> Result<Option<(usize, LefschetzFibration)>> {
    for k in 0..f.fiber().rank() {
        match destabilize(f, k) {
            Ok(next) => return Ok(Some((k, next))),
            Err(Error::NotApplicable(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Greedy destabilization, always along the lowest applicable generator.
pub fn reduce(f: &LefschetzFibration, budget: usize) -> Result<Reduction> {
    require_disk(f, "reduction")?;
    let mut current = f.clone();
    let mut steps = Vec::new();
    while let Some((k, next)) = first_destabilization(&current)? {
        if steps.len() == budget {
            return Ok(Reduction {
                fibration: current,
                steps,
                exhausted: true,
            });
        }
        let removed = current
            .cycles()
            .iter()
            .find(|c| !c.curve.hom().coords[k].is_zero())
            .cloned()
            .expect("destabilization removed a cycle meeting the generator");
        steps.push(ReductionStep {
            generator: k,
            generator_name: current.fiber().basis_name(k),
            fiber_before: current.fiber(),
            removed,
        });
        current = next;
    }
    Ok(Reduction {
        fibration: current,
        steps,
        exhausted: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{u_11, u_g1};

    #[test]
    fn u11_reduces_to_the_disk() {
        let r = reduce(&u_11().unwrap(), 100).unwrap();
        assert_eq!(r.steps.len(), 2);
        assert!(!r.exhausted);
        assert!(r.fibration.is_empty());
        assert_eq!(r.fibration.fiber(), SurfaceSpec::new(0, 1));
        assert_eq!(
            r.steps.iter().map(|s| s.generator_name.as_str()).collect::<Vec<_>>(),
            ["a1", "d1"]
        );
    }

    #[test]
    fn ug1_reduces_to_pants() {
        for g in 2..=5 {
            let r = reduce(&u_g1(g).unwrap(), 100).unwrap();
            let f = &r.fibration;
            assert_eq!(f.fiber(), SurfaceSpec::new(0, 3), "g = {g}");
            assert_eq!(f.sign_counts(), (1, 2), "g = {g}");
            for c in f.cycles() {
                assert_eq!(c.curve.cls(), CurveClass::separating(Side::new(0, 1), Side::new(0, 2)));
            }
        }
    }

    #[test]
    fn budget_is_respected() {
        let r = reduce(&u_11().unwrap(), 1).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.steps.len(), 1);
        let again = reduce(&r.fibration, 5).unwrap();
        assert_eq!(again.steps.len(), 1);
        let terminal = reduce(&again.fibration, 5).unwrap();
        assert!(terminal.steps.is_empty());
        assert_eq!(terminal.fibration, again.fibration);
    }

    #[test]
    fn round_trips() {
        let u = u_11().unwrap();
        let up = stabilize(&u, StabilizationMode::BoundaryUp, Sign::Negative).unwrap();
        assert_eq!(up.fiber(), SurfaceSpec::new(1, 2));
        assert_eq!(up.len(), 3);
        assert_eq!(destabilize(&up, up.fiber().delta(1)).unwrap(), u);

        let g_up = stabilize(&up, StabilizationMode::GenusUp, Sign::Positive).unwrap();
        assert_eq!(g_up.fiber(), SurfaceSpec::new(2, 1));
        assert_eq!(destabilize(&g_up, 2).unwrap(), up);
    }

    #[test]
    fn preconditions() {
        let u = u_11().unwrap();
        assert!(matches!(
            stabilize(&u, StabilizationMode::GenusUp, Sign::Positive),
            Err(Error::Input(_))
        ));
        // α₁ and β₁ of u_{g,1} are each met by several cycles
        let u2 = u_g1(2).unwrap();
        assert!(matches!(destabilize(&u2, 1), Err(Error::NotApplicable(_))));
        assert!(destabilize(&u2, 9).is_err());
    }
}
