//! Lefschetz fibrations over bounded surfaces, given by their monodromy:
//! an ordered sequence of signed vanishing cycles (read off a Hurwitz system
//! of meridians) plus one bundle generator per free loop of the base.
//!
//! The ordered product `T₁ T₂ ⋯ T_n`, with `T_i = t_{c_i}^{ε_i}`, is the
//! monodromy around the outer boundary of the disk containing the critical
//! values.

mod hurwitz;
mod invariants;
mod pullback;
mod stabilization;
mod universality;
mod witness;

pub use hurwitz::{global_conjugate, hurwitz_move, HurwitzDirection};
pub use invariants::{total_space_invariants, InvariantReport};
pub use pullback::{pullback, MeridianPlan, PlanEntry};
pub use stabilization::{destabilize, reduce, stabilize, Reduction, ReductionStep, StabilizationMode};
pub use universality::{universality_report, universality_report_with, UniversalityReport, Verdict};
pub use witness::{substitution_witness, WitnessOutcome, DEFAULT_WITNESS_DEPTH};

use std::fmt;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::homology::SurfaceSpec;
use crate::mapping::{BundleGen, Curve, HomPermRep, TwistGen};
use crate::matrix::IntMatrix;

/// The base surface `S`, of genus `h` with `d ≥ 1` boundary components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseSurface {
    genus: usize,
    boundary: usize,
}

impl BaseSurface {
    pub fn new(genus: usize, boundary: usize) -> Result<Self> {
        if boundary == 0 {
            return Err(Error::Unsupported(
                "closed base surfaces are not supported; the base needs boundary".into(),
            ));
        }
        Ok(BaseSurface { genus, boundary })
    }

    pub const fn disk() -> Self {
        BaseSurface { genus: 0, boundary: 1 }
    }

    pub const fn annulus() -> Self {
        BaseSurface { genus: 0, boundary: 2 }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Rank of `π₁(S)`: `2h + d − 1`.
    pub fn free_loop_count(&self) -> usize {
        2 * self.genus + self.boundary - 1
    }

    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.boundary == 1
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.boundary)
    }
}

/// Sign of a critical point: positive singularities have right-handed
/// monodromy, negative (achiral) ones left-handed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(Error::input(format!("sign must be 1 or -1, got {v}"))),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedCycle {
    pub curve: Curve,
    pub sign: Sign,
}

impl SignedCycle {
    pub fn new(curve: Curve, sign: Sign) -> Self {
        SignedCycle { curve, sign }
    }

    /// The monodromy `t_c^ε` of a meridian around this critical value.
    pub fn twist(&self) -> TwistGen {
        match self.sign {
            Sign::Positive => TwistGen::right(self.curve.clone()),
            Sign::Negative => TwistGen::left(self.curve.clone()),
        }
    }

    /// Same curve (up to orientation) and sign; labels ignored.
    pub fn same_as(&self, other: &SignedCycle) -> bool {
        self.sign == other.sign && self.curve.same_curve(&other.curve)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LefschetzFibration {
    fiber: SurfaceSpec,
    base: BaseSurface,
    cycles: Vec<SignedCycle>,
    bundle: Vec<BundleGen>,
}

impl LefschetzFibration {
    pub fn new(
        fiber: SurfaceSpec,
        base: BaseSurface,
        cycles: Vec<SignedCycle>,
        bundle: Vec<BundleGen>,
    ) -> Result<Self> {
        for (i, c) in cycles.iter().enumerate() {
            if c.curve.surface() != fiber {
                return Err(Error::input(format!(
                    "cycle {} ('{}') lives on {}, fiber is {fiber}",
                    i + 1,
                    c.curve.label(),
                    c.curve.surface()
                )));
            }
        }
        if bundle.len() != base.free_loop_count() {
            return Err(Error::input(format!(
                "base {base} has {} free loops but {} bundle generators were given",
                base.free_loop_count(),
                bundle.len()
            )));
        }
        if let Some(g) = bundle.iter().find(|g| g.surface() != fiber) {
            return Err(Error::input(format!(
                "bundle generator '{}' lives on {}, fiber is {fiber}",
                g.label(),
                g.surface()
            )));
        }
        Ok(LefschetzFibration {
            fiber,
            base,
            cycles,
            bundle,
        })
    }

    /// Fibration over the disk.
    pub fn over_disk(fiber: SurfaceSpec, cycles: Vec<SignedCycle>) -> Result<Self> {
        LefschetzFibration::new(fiber, BaseSurface::disk(), cycles, Vec::new())
    }

    pub fn fiber(&self) -> SurfaceSpec {
        self.fiber
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn cycles(&self) -> &[SignedCycle] {
        &self.cycles
    }

    pub fn bundle(&self) -> &[BundleGen] {
        &self.bundle
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn twists(&self) -> Vec<TwistGen> {
        self.cycles.iter().map(SignedCycle::twist).collect()
    }

    pub fn bundle_reps(&self) -> Vec<HomPermRep> {
        self.bundle.iter().map(BundleGen::rep).collect()
    }

    /// `(#positive, #negative)`.
    pub fn sign_counts(&self) -> (usize, usize) {
        let pos = self.cycles.iter().filter(|c| c.sign == Sign::Positive).count();
        (pos, self.cycles.len() - pos)
    }

    /// The ordered product `T₁ T₂ ⋯ T_n` of signed twist matrices.
    pub fn monodromy_product(&self) -> IntMatrix {
        self.cycles
            .iter()
            .fold(IntMatrix::identity(self.fiber.rank()), |acc, c| {
                acc.mul(&c.twist().matrix())
            })
    }

    /// Equality of fiber, base, signed cycles (up to curve orientation) and
    /// bundle actions, ignoring labels.
    pub fn same_as(&self, other: &LefschetzFibration) -> bool {
        self.fiber == other.fiber
            && self.base == other.base
            && self.cycles.len() == other.cycles.len()
            && self.cycles.iter().zip(&other.cycles).all(|(x, y)| x.same_as(y))
            && self.bundle.len() == other.bundle.len()
            && self
                .bundle
                .iter()
                .zip(&other.bundle)
                .all(|(x, y)| x.matrix() == y.matrix() && x.perm() == y.perm())
    }

    pub(crate) fn with_cycles(&self, cycles: Vec<SignedCycle>) -> LefschetzFibration {
        LefschetzFibration {
            fiber: self.fiber,
            base: self.base,
            cycles,
            bundle: self.bundle.clone(),
        }
    }
}

fn signed(curve: &Curve, sign: Sign) -> SignedCycle {
    SignedCycle::new(curve.clone(), sign)
}

/// `u_{g,1}` for `g ≥ 2`: the catalog sequence `(b₁⁻, b₂, a₁, …, a_g, c₁⁻, c₂, …, c_{g−1})`.
pub fn u_g1(g: usize) -> Result<LefschetzFibration> {
    if g < 2 {
        return Err(Error::input(format!("u_g1 needs g >= 2, got {g}")));
    }
    let cat = Catalog::genus(g)?;
    let cycles = cat
        .curves()
        .iter()
        .map(|c| {
            let sign = if c.label() == "b1" || c.label() == "c1" {
                Sign::Negative
            } else {
                Sign::Positive
            };
            signed(c, sign)
        })
        .collect();
    LefschetzFibration::over_disk(cat.surface(), cycles)
}

/// `u_{1,1}`: fiber `F_{1,1}`, sequence `(a, b⁻)`.
pub fn u_11() -> Result<LefschetzFibration> {
    genus_one(SurfaceSpec::new(1, 1), Sign::Negative)
}

/// `u_{1,0}`: closed torus fiber, sequence `(a, b⁻)`.
pub fn u_10() -> Result<LefschetzFibration> {
    genus_one(SurfaceSpec::new(1, 0), Sign::Negative)
}

/// `p_g`: the catalog sequence of `F_{g,1}` with every sign positive.
pub fn p_g(g: usize) -> Result<LefschetzFibration> {
    if g == 0 {
        return Err(Error::input("p_g needs g >= 1"));
    }
    if g == 1 {
        return genus_one(SurfaceSpec::new(1, 1), Sign::Positive);
    }
    let cat = Catalog::genus(g)?;
    let cycles = cat.curves().iter().map(|c| signed(c, Sign::Positive)).collect();
    LefschetzFibration::over_disk(cat.surface(), cycles)
}

fn genus_one(fiber: SurfaceSpec, second: Sign) -> Result<LefschetzFibration> {
    let cat = Catalog::for_surface(fiber)?;
    let a = cat.get("a").expect("genus one catalog has a");
    let b = cat.get("b").expect("genus one catalog has b");
    LefschetzFibration::over_disk(fiber, vec![signed(a, Sign::Positive), signed(b, second)])
}

/// Names accepted by [`build`].
pub const BUILD_NAMES: [&str; 4] = ["u_g1", "u_11", "u_10", "p_g"];

/// Builds a named fibration; `g` is required by `u_g1` and `p_g` and
/// rejected by the others.
pub fn build(name: &str, g: Option<usize>) -> Result<LefschetzFibration> {
    match (name, g) {
        ("u_g1", Some(g)) => u_g1(g),
        ("p_g", Some(g)) => p_g(g),
        ("u_11", None) => u_11(),
        ("u_10", None) => u_10(),
        ("u_g1" | "p_g", None) => Err(Error::input(format!("{name} needs a genus"))),
        ("u_11" | "u_10", Some(_)) => Err(Error::input(format!("{name} takes no genus"))),
        _ => Err(Error::input(format!(
            "unknown fibration '{name}'; expected one of {}",
            BUILD_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signs(f: &LefschetzFibration) -> String {
        f.cycles().iter().map(|c| c.sign.symbol()).collect()
    }

    #[test]
    fn constructors() {
        let u = u_11().unwrap();
        assert_eq!(u.fiber(), SurfaceSpec::new(1, 1));
        assert_eq!(signs(&u), "+-");
        let u3 = u_g1(3).unwrap();
        assert_eq!(u3.len(), 7);
        assert_eq!(signs(&u3), "-++++-+");
        assert_eq!(u3.fiber(), SurfaceSpec::new(3, 1));
        let p = p_g(2).unwrap();
        assert_eq!(signs(&p), "+++++");
        assert_eq!(u_10().unwrap().fiber(), SurfaceSpec::new(1, 0));
        assert!(u_g1(1).is_err());
        assert!(p_g(0).is_err());
    }

    #[test]
    fn build_dispatch() {
        assert_eq!(build("u_g1", Some(2)).unwrap(), u_g1(2).unwrap());
        assert!(build("u_11", Some(2)).is_err());
        assert!(build("p_g", None).is_err());
        assert!(build("nope", None).is_err());
    }

    #[test]
    fn base_surfaces() {
        assert_eq!(BaseSurface::disk().free_loop_count(), 0);
        assert_eq!(BaseSurface::annulus().free_loop_count(), 1);
        assert_eq!(BaseSurface::new(1, 2).unwrap().free_loop_count(), 3);
        assert!(BaseSurface::new(1, 0).is_err());
    }

    #[test]
    fn bundle_count_is_checked() {
        let u = u_11().unwrap();
        assert!(LefschetzFibration::new(u.fiber(), BaseSurface::annulus(), u.cycles().to_vec(), vec![]).is_err());
        let id = BundleGen::identity(u.fiber(), "g");
        assert!(LefschetzFibration::new(u.fiber(), BaseSurface::annulus(), u.cycles().to_vec(), vec![id]).is_ok());
    }
}
