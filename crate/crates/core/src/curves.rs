//! Homeomorphism classes of homologically essential simple closed curves.
//!
//! A non-separating curve always cuts `F_{g,b}` into `F_{g−1,b+2}`, so there is
//! one such class when `g ≥ 1`. A separating curve is determined by the
//! unordered pair of (genus, boundary components of `F`) on its two sides,
//! since homeomorphisms may permute boundary components. It is
//! null-homologous exactly when one side contains no boundary component of
//! `F`, so essential separating classes have `b₁, b₂ ≥ 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::homology::SurfaceSpec;

/// One complementary piece of a separating curve: its genus and how many
/// boundary components of the ambient surface it contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub genus: usize,
    pub boundary: usize,
}

impl Side {
    pub const fn new(genus: usize, boundary: usize) -> Self {
        Side { genus, boundary }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveClass {
    NonSeparating,
    /// Normalized so that `side_a ≤ side_b` lexicographically.
    Separating { side_a: Side, side_b: Side },
}

impl CurveClass {
    /// Separating class with canonical side order.
    pub fn separating(x: Side, y: Side) -> Self {
        let (side_a, side_b) = if x <= y { (x, y) } else { (y, x) };
        CurveClass::Separating { side_a, side_b }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, CurveClass::Separating { .. })
    }

    /// Checks that the class exists and is essential on `surface`.
    pub fn validate(&self, surface: &SurfaceSpec) -> Result<()> {
        match *self {
            CurveClass::NonSeparating => {
                if surface.genus == 0 {
                    return Err(Error::input(format!(
                        "{surface} has genus 0 and no non-separating curves"
                    )));
                }
            }
            CurveClass::Separating { side_a, side_b } => {
                if side_a > side_b {
                    return Err(Error::input("separating class sides are not normalized"));
                }
                if side_a.genus + side_b.genus != surface.genus
                    || side_a.boundary + side_b.boundary != surface.boundary
                {
                    return Err(Error::input(format!(
                        "split {self} does not add up to {surface}"
                    )));
                }
                if side_a.boundary == 0 || side_b.boundary == 0 {
                    return Err(Error::input(format!(
                        "split {self} is null-homologous (a side has no boundary)"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::NonSeparating => write!(f, "nonsep"),
            CurveClass::Separating { side_a, side_b } => write!(
                f,
                "sep{{({},{}),({},{})}}",
                side_a.genus, side_a.boundary, side_b.genus, side_b.boundary
            ),
        }
    }
}

/// All classes of `C_{g,b}`, duplicate-free and in canonical order
/// (non-separating first, then separating splits in lexicographic order).
pub fn enumerate_classes(surface: SurfaceSpec) -> Vec<CurveClass> {
    let (g, b) = (surface.genus, surface.boundary);
    let mut out = Vec::new();
    if g >= 1 {
        out.push(CurveClass::NonSeparating);
    }
    for g1 in 0..=g {
        for b1 in 1..b {
            let x = Side::new(g1, b1);
            let y = Side::new(g - g1, b - b1);
            if x <= y {
                out.push(CurveClass::Separating { side_a: x, side_b: y });
            }
        }
    }
    out.sort();
    out
}

/// Closed-form size of `C_{g,b}`:
/// `⌊b/2⌋` for `g = 0` and `⌊(gb − g + b)/2⌋ + 1` for `g ≥ 1` when `b ≥ 1`;
/// for closed surfaces, 1 if `g ≥ 1` and 0 for the sphere.
pub fn class_count(surface: SurfaceSpec) -> u64 {
    let (g, b) = (surface.genus as u64, surface.boundary as u64);
    match (g, b) {
        (0, _) => b / 2,
        (_, 0) => 1,
        _ => (g * b + b - g) / 2 + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sep(g1: usize, b1: usize, g2: usize, b2: usize) -> CurveClass {
        CurveClass::separating(Side::new(g1, b1), Side::new(g2, b2))
    }

    #[test]
    fn torus_with_one_hole() {
        assert_eq!(
            enumerate_classes(SurfaceSpec::new(1, 1)),
            vec![CurveClass::NonSeparating]
        );
        assert_eq!(class_count(SurfaceSpec::new(1, 1)), 1);
    }

    #[test]
    fn four_holed_sphere() {
        assert_eq!(
            enumerate_classes(SurfaceSpec::new(0, 4)),
            vec![sep(0, 1, 0, 3), sep(0, 2, 0, 2)]
        );
        assert_eq!(class_count(SurfaceSpec::new(0, 4)), 2);
    }

    #[test]
    fn disk_and_sphere_have_none() {
        assert!(enumerate_classes(SurfaceSpec::new(0, 1)).is_empty());
        assert!(enumerate_classes(SurfaceSpec::new(0, 0)).is_empty());
        assert_eq!(class_count(SurfaceSpec::new(0, 0)), 0);
    }

    #[test]
    fn genus_two_three_holes() {
        let classes = enumerate_classes(SurfaceSpec::new(2, 3));
        assert_eq!(
            classes,
            vec![
                CurveClass::NonSeparating,
                sep(0, 1, 2, 2),
                sep(0, 2, 2, 1),
                sep(1, 1, 1, 2),
            ]
        );
        assert_eq!(class_count(SurfaceSpec::new(2, 3)), 4);
    }

    #[test]
    fn closed_surfaces() {
        assert_eq!(class_count(SurfaceSpec::new(1, 0)), 1);
        assert_eq!(enumerate_classes(SurfaceSpec::new(3, 0)), vec![CurveClass::NonSeparating]);
    }

    #[test]
    fn normalization_and_validation() {
        let s = SurfaceSpec::new(1, 2);
        assert_eq!(sep(1, 1, 0, 1), sep(0, 1, 1, 1));
        assert!(sep(0, 1, 1, 1).validate(&s).is_ok());
        assert!(sep(1, 0, 0, 2).validate(&s).is_err());
        assert!(sep(0, 1, 0, 1).validate(&s).is_err());
        assert!(CurveClass::NonSeparating.validate(&SurfaceSpec::new(0, 5)).is_err());
        let unnormalized = CurveClass::Separating {
            side_a: Side::new(1, 1),
            side_b: Side::new(0, 1),
        };
        assert!(unnormalized.validate(&s).is_err());
    }
}
