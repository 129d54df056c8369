//! The standard twist-generator configuration of `F_{g,1}`.
//!
//! Curves `b₁, b₂, a₁, …, a_g, c₁, …, c_{g−1}` in a Humphries chain
//! `b₁ – a₁ – c₁ – a₂ – c₂ – ⋯ – a_g` with `b₂` attached to `a₂`. Homology:
//!
//! | curve | class           |
//! |-------|-----------------|
//! | `a_i` | `α_i`           |
//! | `b₁`  | `β₁`            |
//! | `b₂`  | `β₂`            |
//! | `c_i` | `β_i + β_{i+1}` |
//!
//! Curves adjacent in the configuration pair to `±1`, all others to `0`. For
//! `g = 1` the catalog is the pair `a = α₁`, `b = β₁`.

use crate::curves::CurveClass;
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceSpec};
use crate::mapping::Curve;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    surface: SurfaceSpec,
    curves: Vec<Curve>,
}

impl Catalog {
    /// Catalog for genus `g ≥ 1` on `surface` (boundary coordinates are zero).
    pub fn for_surface(surface: SurfaceSpec) -> Result<Self> {
        let g = surface.genus;
        if g == 0 {
            return Err(Error::input("the generator catalog needs genus at least 1"));
        }
        let basis = |k: usize| surface.basis_class(k);
        let nonsep = |hom: HomologyClass, label: String| {
            Curve::new(surface, CurveClass::NonSeparating, hom, label)
        };
        let mut curves = Vec::with_capacity(2 * g + 1);
        if g == 1 {
            curves.push(nonsep(basis(surface.alpha(1)), "a".into())?);
            curves.push(nonsep(basis(surface.beta(1)), "b".into())?);
        } else {
            curves.push(nonsep(basis(surface.beta(1)), "b1".into())?);
            curves.push(nonsep(basis(surface.beta(2)), "b2".into())?);
            for i in 1..=g {
                curves.push(nonsep(basis(surface.alpha(i)), format!("a{i}"))?);
            }
            for i in 1..g {
                let hom = basis(surface.beta(i)).add(&basis(surface.beta(i + 1)));
                curves.push(nonsep(hom, format!("c{i}"))?);
            }
        }
        Ok(Catalog { surface, curves })
    }

    /// Catalog on `F_{g,1}`.
    pub fn genus(g: usize) -> Result<Self> {
        Catalog::for_surface(SurfaceSpec::new(g, 1))
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    /// Curves in monodromy-sequence order: `(a, b)` for genus 1,
    /// `(b₁, b₂, a₁, …, a_g, c₁, …, c_{g−1})` otherwise.
    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn get(&self, label: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.label() == label)
    }

    /// Pairs of labels joined by an edge of the configuration graph.
    pub fn adjacency(&self) -> Vec<(String, String)> {
        let g = self.surface.genus;
        let mut edges = Vec::new();
        let e = |x: String, y: String| (x, y);
        if g == 1 {
            edges.push(e("a".into(), "b".into()));
            return edges;
        }
        edges.push(e("b1".into(), "a1".into()));
        edges.push(e("b2".into(), "a2".into()));
        for i in 1..g {
            edges.push(e(format!("a{i}"), format!("c{i}")));
            edges.push(e(format!("c{i}"), format!("a{}", i + 1)));
        }
        edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    #[test]
    fn sizes_and_labels() {
        assert_eq!(Catalog::genus(1).unwrap().curves().len(), 2);
        for g in 2..=6 {
            let cat = Catalog::genus(g).unwrap();
            assert_eq!(cat.curves().len(), 2 * g + 1);
            assert!(cat.get("b2").is_some());
            assert!(cat.get(&format!("c{}", g - 1)).is_some());
        }
        assert!(Catalog::genus(0).is_err());
    }

    #[test]
    fn chain_adjacency_is_algebraic() {
        for g in 1..=6 {
            let cat = Catalog::genus(g).unwrap();
            let s = cat.surface();
            let edges = cat.adjacency();
            for x in cat.curves() {
                for y in cat.curves() {
                    let p = s.pairing(x.hom(), y.hom()).unwrap();
                    let adjacent = edges.iter().any(|(u, v)| {
                        (u == x.label() && v == y.label()) || (v == x.label() && u == y.label())
                    });
                    if adjacent {
                        assert_eq!(p.abs(), BigInt::from(1), "{x} {y}");
                    } else {
                        assert!(p.is_zero(), "{x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn spans_the_symplectic_lattice() {
        for g in 1..=6 {
            let cat = Catalog::genus(g).unwrap();
            let cols: Vec<_> = cat.curves().iter().map(|c| c.hom().coords.clone()).collect();
            let m = IntMatrix::from_columns(2 * g, &cols);
            assert_eq!(crate::matrix::cokernel_invariants(&m), (0, vec![]));
        }
    }
}
