//! Elementary changes of Hurwitz system, and global conjugation.
//!
//! With `T_i = t_{c_i}^{ε_i}` and `t_{φ(c)} = φ t_c φ⁻¹`, the move
//!
//! * `R` at `i`: `(c_i^{ε_i}, c_{i+1}^{ε_{i+1}}) ↦ (c_{i+1}^{ε_{i+1}}, t_{c_{i+1}}^{−ε_{i+1}}(c_i)^{ε_i})`
//! * `L` at `i`: `(c_i^{ε_i}, c_{i+1}^{ε_{i+1}}) ↦ (t_{c_i}^{ε_i}(c_{i+1})^{ε_{i+1}}, c_i^{ε_i})`
//!
//! keeps `T_i T_{i+1}`, hence the whole product. `L` and `R` are mutually
//! inverse. A transported cycle keeps its label.

use std::fmt;
use std::str::FromStr;

use super::{LefschetzFibration, SignedCycle};
use crate::error::{Error, Result};
use crate::mapping::{act_on_curve, evaluate, Curve, MCWord, TwistGen};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HurwitzDirection {
    L,
    R,
}

impl HurwitzDirection {
    pub fn inverse(self) -> Self {
        match self {
            HurwitzDirection::L => HurwitzDirection::R,
            HurwitzDirection::R => HurwitzDirection::L,
        }
    }
}

impl FromStr for HurwitzDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(HurwitzDirection::L),
            "R" | "r" => Ok(HurwitzDirection::R),
            _ => Err(Error::input(format!("move direction must be L or R, got '{s}'"))),
        }
    }
}

impl fmt::Display for HurwitzDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HurwitzDirection::L => "L",
            HurwitzDirection::R => "R",
        })
    }
}

/// Applies `T^{±1}` (the signed twist of `by`, or its inverse) to `c`, keeping `c`'s label.
fn transport(c: &Curve, by: &SignedCycle, inverse: bool) -> Result<Curve> {
    let t: TwistGen = if inverse { by.twist().inverse() } else { by.twist() };
    let w = MCWord::twists(c.surface(), vec![t])?;
    Ok(act_on_curve(&w, c)?.with_label(c.label()))
}

/// Hurwitz move at the 0-based position `i`, acting on entries `i` and `i + 1`.
pub fn hurwitz_move(
    f: &LefschetzFibration,
    i: usize,
    direction: HurwitzDirection,
) -> Result<LefschetzFibration> {
    let n = f.len();
    if i + 1 >= n {
        return Err(Error::input(format!(
            "Hurwitz move at position {} needs two cycles there; the sequence has {n}",
            i + 1
        )));
    }
    let mut cycles = f.cycles().to_vec();
    let (x, y) = (&f.cycles()[i], &f.cycles()[i + 1]);
    let (first, second) = match direction {
        HurwitzDirection::R => (
            y.clone(),
            SignedCycle::new(transport(&x.curve, y, true)?, x.sign),
        ),
        HurwitzDirection::L => (
            SignedCycle::new(transport(&y.curve, x, false)?, y.sign),
            x.clone(),
        ),
    };
    cycles[i] = first;
    cycles[i + 1] = second;
    Ok(f.with_cycles(cycles))
}

/// Changes the fiber identification by `w`: cycles `c ↦ w(c)` and bundle
/// generators `B ↦ w B w⁻¹`. The ordered product is conjugated by `w`.
pub fn global_conjugate(f: &LefschetzFibration, w: &MCWord) -> Result<LefschetzFibration> {
    if w.surface() != f.fiber() {
        return Err(Error::input(format!(
            "conjugating word lives on {}, fiber is {}",
            w.surface(),
            f.fiber()
        )));
    }
    if w.is_empty() {
        return Ok(f.clone());
    }
    let cycles = f
        .cycles()
        .iter()
        .map(|c| Ok(SignedCycle::new(act_on_curve(w, &c.curve)?, c.sign)))
        .collect::<Result<Vec<_>>>()?;
    let rep = evaluate(w)?;
    let rep_inv = evaluate(&w.inverse())?;
    let bundle = f
        .bundle()
        .iter()
        .map(|g| g.conjugated(&rep, &rep_inv))
        .collect::<Result<Vec<_>>>()?;
    LefschetzFibration::new(f.fiber(), f.base(), cycles, bundle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{u_11, u_g1, Sign};
    use crate::homology::{HomologyClass, SurfaceSpec};

    #[test]
    fn r_then_l_is_identity_with_labels() {
        let u = u_g1(3).unwrap();
        for i in 0..u.len() - 1 {
            let r = hurwitz_move(&u, i, HurwitzDirection::R).unwrap();
            assert_eq!(hurwitz_move(&r, i, HurwitzDirection::L).unwrap(), u);
            let l = hurwitz_move(&u, i, HurwitzDirection::L).unwrap();
            assert_eq!(hurwitz_move(&l, i, HurwitzDirection::R).unwrap(), u);
        }
    }

    #[test]
    fn moves_keep_the_product() {
        let u = u_g1(2).unwrap();
        let p = u.monodromy_product();
        let mut f = u.clone();
        for (i, d) in [(0, "R"), (2, "L"), (3, "R"), (1, "R"), (0, "L")] {
            f = hurwitz_move(&f, i, d.parse().unwrap()).unwrap();
            assert_eq!(f.monodromy_product(), p);
        }
    }

    #[test]
    fn u11_right_move() {
        // (a, b⁻) ↦ (b⁻, t_b(a)): with b = β₁ a left twist inverted is right-handed,
        // and t_β(α) = α + ⟨β, α⟩β = α − β.
        let u = u_11().unwrap();
        let f = hurwitz_move(&u, 0, HurwitzDirection::R).unwrap();
        assert_eq!(f.cycles()[0], u.cycles()[1]);
        assert_eq!(f.cycles()[1].curve.hom(), &HomologyClass::from_i64(&[1, -1]));
        assert_eq!(f.cycles()[1].sign, Sign::Positive);
        assert_eq!(f.cycles()[1].curve.label(), "a");
    }

    #[test]
    fn disjoint_cycles_just_swap() {
        let s = SurfaceSpec::new(2, 1);
        let x = Curve::from_homology(s, HomologyClass::from_i64(&[1, 0, 0, 0]), "x").unwrap();
        let y = Curve::from_homology(s, HomologyClass::from_i64(&[0, 0, 1, 0]), "y").unwrap();
        let f = LefschetzFibration::over_disk(
            s,
            vec![SignedCycle::new(x.clone(), Sign::Positive), SignedCycle::new(y.clone(), Sign::Negative)],
        )
        .unwrap();
        let r = hurwitz_move(&f, 0, HurwitzDirection::R).unwrap();
        assert_eq!(r.cycles()[0].curve, y);
        assert_eq!(r.cycles()[1].curve, x);
    }

    #[test]
    fn index_out_of_range() {
        let u = u_11().unwrap();
        assert!(hurwitz_move(&u, 1, HurwitzDirection::R).is_err());
    }

    #[test]
    fn conjugation_round_trip() {
        let u = u_g1(2).unwrap();
        let w = MCWord::twists(u.fiber(), vec![u.twists()[2].clone(), u.twists()[0].inverse()]).unwrap();
        assert_eq!(global_conjugate(&u, &MCWord::empty(u.fiber())).unwrap(), u);
        let f = global_conjugate(&u, &w).unwrap();
        let back = global_conjugate(&f, &w.inverse()).unwrap();
        assert!(back.same_as(&u));
        let m = evaluate(&w).unwrap().matrix;
        assert_eq!(f.monodromy_product().mul(&m), m.mul(&u.monodromy_product()));
    }
}
