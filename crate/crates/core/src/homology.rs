//! Integer first homology of a compact oriented surface `F_{g,b}`.
//!
//! Basis order is `(α₁, β₁, …, α_g, β_g, δ₁, …, δ_{b−1})` with `⟨α_i, β_i⟩ = +1`
//! and every other basis pairing zero. The class of the last boundary
//! component is not stored: `δ_b = −(δ₁ + … + δ_{b−1})`. Every other module
//! works in this basis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The surface `F_{g,b}`: genus and number of boundary components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceSpec {
    pub genus: usize,
    pub boundary: usize,
}

impl SurfaceSpec {
    pub const fn new(genus: usize, boundary: usize) -> Self {
        SurfaceSpec { genus, boundary }
    }

    /// Rank of `H₁`: `2g + max(b − 1, 0)`.
    pub fn rank(&self) -> usize {
        2 * self.genus + self.boundary.saturating_sub(1)
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }

    pub fn symplectic_rank(&self) -> usize {
        2 * self.genus
    }

    /// Number of stored boundary coordinates.
    pub fn delta_count(&self) -> usize {
        self.boundary.saturating_sub(1)
    }

    /// Coordinate index of `α_i` (1-based `i`).
    pub fn alpha(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.genus);
        2 * (i - 1)
    }

    /// Coordinate index of `β_i` (1-based `i`).
    pub fn beta(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.genus);
        2 * (i - 1) + 1
    }

    /// Coordinate index of `δ_j` for `1 ≤ j ≤ b − 1`.
    pub fn delta(&self, j: usize) -> usize {
        assert!(j >= 1 && j < self.boundary);
        2 * self.genus + j - 1
    }

    pub fn is_delta_index(&self, k: usize) -> bool {
        k >= 2 * self.genus && k < self.rank()
    }

    /// Name of basis coordinate `k`, e.g. `a2`, `b1`, `d3`.
    pub fn basis_name(&self, k: usize) -> String {
        if k < 2 * self.genus {
            let letter = if k.is_multiple_of(2) { 'a' } else { 'b' };
            format!("{letter}{}", k / 2 + 1)
        } else {
            format!("d{}", k - 2 * self.genus + 1)
        }
    }

    /// Gram matrix `J` of the intersection pairing, `J[i][j] = ⟨e_i, e_j⟩`.
    pub fn pairing_form(&self) -> PairingForm {
        let n = self.rank();
        let mut j = IntMatrix::zeros(n, n);
        for i in 1..=self.genus {
            j.set(self.alpha(i), self.beta(i), BigInt::one());
            j.set(self.beta(i), self.alpha(i), -BigInt::one());
        }
        PairingForm { matrix: j }
    }

    pub fn zero_class(&self) -> HomologyClass {
        HomologyClass::zero(self.rank())
    }

    pub fn basis_class(&self, k: usize) -> HomologyClass {
        let mut c = self.zero_class();
        c.coords[k] = BigInt::one();
        c
    }

    /// Class of the `j`-th boundary component, `1 ≤ j ≤ b`, including the implicit last one.
    pub fn boundary_class(&self, j: usize) -> HomologyClass {
        assert!(j >= 1 && j <= self.boundary);
        if j < self.boundary {
            return self.basis_class(self.delta(j));
        }
        let mut c = self.zero_class();
        for k in 1..self.boundary {
            c.coords[self.delta(k)] = -BigInt::one();
        }
        c
    }

    pub fn check_class(&self, x: &HomologyClass) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::input(format!(
                "homology class has {} coordinates, F_{{{},{}}} has rank {}",
                x.len(),
                self.genus,
                self.boundary,
                self.rank()
            )));
        }
        Ok(())
    }

    /// Algebraic intersection number `⟨x, y⟩`.
    pub fn pairing(&self, x: &HomologyClass, y: &HomologyClass) -> Result<BigInt> {
        self.check_class(x)?;
        self.check_class(y)?;
        let mut sum = BigInt::zero();
        for i in 1..=self.genus {
            let (a, b) = (self.alpha(i), self.beta(i));
            sum += &x.coords[a] * &y.coords[b] - &x.coords[b] * &y.coords[a];
        }
        Ok(sum)
    }

    /// The projection to `(α, β)` coordinates, i.e. the image in `H₁` of the capped-off surface.
    pub fn symplectic_part<'a>(&self, x: &'a HomologyClass) -> &'a [BigInt] {
        &x.coords[..2 * self.genus]
    }

    pub fn delta_part<'a>(&self, x: &'a HomologyClass) -> &'a [BigInt] {
        &x.coords[2 * self.genus..]
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{},{}}}", self.genus, self.boundary)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingForm {
    pub matrix: IntMatrix,
}

impl PairingForm {
    /// `Mᵀ J M = J`.
    pub fn is_preserved_by(&self, m: &IntMatrix) -> bool {
        m.rows() == self.matrix.rows()
            && m.is_square()
            && m.transpose().mul(&self.matrix).mul(m) == self.matrix
    }
}

/// Coordinates of a class in the fixed basis of `H₁(F_{g,b})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    pub coords: Vec<BigInt>,
}

impl HomologyClass {
    pub fn zero(rank: usize) -> Self {
        HomologyClass {
            coords: vec![BigInt::zero(); rank],
        }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        HomologyClass {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Homologically essential means nonzero in `H₁(F)`.
    pub fn is_essential(&self) -> bool {
        !self.is_zero()
    }

    /// gcd of the coordinates (0 for the zero class).
    pub fn content(&self) -> BigInt {
        self.coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn neg(&self) -> HomologyClass {
        HomologyClass {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &HomologyClass) -> HomologyClass {
        assert_eq!(self.len(), other.len());
        HomologyClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> HomologyClass {
        HomologyClass {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Equal up to sign, i.e. the same unoriented curve class.
    pub fn equal_up_to_sign(&self, other: &HomologyClass) -> bool {
        self == other
            || (self.len() == other.len()
                && self.coords.iter().zip(&other.coords).all(|(a, b)| *a == -b))
    }

    /// Largest absolute coordinate; used to bound random searches.
    pub fn max_abs(&self) -> BigInt {
        self.coords.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Free-function form of [`HomologyClass::is_essential`].
pub fn is_essential(x: &HomologyClass) -> bool {
    x.is_essential()
}

/// Free-function form of [`SurfaceSpec::pairing`].
pub fn pairing(surface: &SurfaceSpec, x: &HomologyClass, y: &HomologyClass) -> Result<BigInt> {
    surface.pairing(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_euler() {
        assert_eq!(SurfaceSpec::new(1, 1).rank(), 2);
        assert_eq!(SurfaceSpec::new(0, 4).rank(), 3);
        assert_eq!(SurfaceSpec::new(2, 0).rank(), 4);
        assert_eq!(SurfaceSpec::new(0, 0).rank(), 0);
        assert_eq!(SurfaceSpec::new(3, 1).euler(), -5);
        assert_eq!(SurfaceSpec::new(0, 3).euler(), -1);
    }

    #[test]
    fn basis_pairings() {
        let s = SurfaceSpec::new(1, 1);
        let a = s.basis_class(s.alpha(1));
        let b = s.basis_class(s.beta(1));
        assert_eq!(s.pairing(&a, &b).unwrap(), BigInt::from(1));
        assert_eq!(s.pairing(&b, &a).unwrap(), BigInt::from(-1));
        assert_eq!(s.pairing(&a, &a).unwrap(), BigInt::zero());
    }

    #[test]
    fn boundary_classes_are_degenerate() {
        let s = SurfaceSpec::new(1, 2);
        let d1 = s.basis_class(s.delta(1));
        let a1 = s.basis_class(s.alpha(1));
        assert_eq!(s.pairing(&d1, &a1).unwrap(), BigInt::zero());
        assert_eq!(s.boundary_class(2), d1.neg());
    }

    #[test]
    fn bilinear_expansion_genus_two() {
        // ⟨α₁ + α₂, β₁⟩ = ⟨α₁, β₁⟩ + ⟨α₂, β₁⟩ = 1 + 0
        let s = SurfaceSpec::new(2, 1);
        let x = s.basis_class(s.alpha(1)).add(&s.basis_class(s.alpha(2)));
        let y = s.basis_class(s.beta(1));
        assert_eq!(s.pairing(&x, &y).unwrap(), BigInt::from(1));
    }

    #[test]
    fn dimension_mismatch_is_input_error() {
        let s = SurfaceSpec::new(1, 1);
        let x = HomologyClass::from_i64(&[1, 0, 0]);
        assert!(matches!(s.pairing(&x, &x), Err(Error::Input(_))));
    }

    #[test]
    fn essential_classes() {
        assert!(!is_essential(&HomologyClass::zero(2)));
        let s = SurfaceSpec::new(1, 1);
        assert!(is_essential(&s.basis_class(s.alpha(1))));
        let p = SurfaceSpec::new(0, 3);
        assert!(is_essential(&p.basis_class(p.delta(1))));
    }

    #[test]
    fn pairing_form_shape() {
        let s = SurfaceSpec::new(2, 3);
        let j = s.pairing_form();
        assert_eq!(j.matrix.rank(), 4);
        assert_eq!(j.matrix.transpose(), {
            let mut neg = j.matrix.clone();
            for r in 0..neg.rows() {
                for c in 0..neg.cols() {
                    let v = -neg.get(r, c).clone();
                    neg.set(r, c, v);
                }
            }
            neg
        });
    }

    #[test]
    fn basis_names() {
        let s = SurfaceSpec::new(2, 3);
        let names: Vec<_> = (0..s.rank()).map(|k| s.basis_name(k)).collect();
        assert_eq!(names, ["a1", "b1", "a2", "b2", "d1", "d2"]);
    }
}
