//! Mapping classes at the (homology action, boundary permutation) resolution.
//!
//! A curve is a [`CurveClass`] together with a homology vector. Words in Dehn
//! twists and bundle generators act right to left, as maps: the word
//! `l₁ l₂ ⋯ l_k` sends `x` to `l₁(l₂(⋯ l_k(x)))`.
//!
//! A right-handed twist about `c` acts on homology by the transvection
//! `x ↦ x + ⟨c, x⟩ c`; left-handed twists use coefficient `−1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curves::{CurveClass, Side};
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceSpec};
use crate::matrix::IntMatrix;
use crate::perm::Perm;

/// Coefficient of the transvection realizing a right-handed twist.
pub const RIGHT_HANDED_COEFFICIENT: i64 = 1;

/// A simple closed curve at the implemented resolution.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    surface: SurfaceSpec,
    cls: CurveClass,
    hom: HomologyClass,
    label: String,
}

/// The two sides of a separating curve: the one avoiding the last boundary
/// component of `F`, and the one containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingSides {
    /// 1-based boundary components on the side away from the last one.
    pub far_components: Vec<usize>,
    pub far: Side,
    pub near: Side,
}

impl Curve {
    pub fn new(
        surface: SurfaceSpec,
        cls: CurveClass,
        hom: HomologyClass,
        label: impl Into<String>,
    ) -> Result<Self> {
        let curve = Curve {
            surface,
            cls,
            hom,
            label: label.into(),
        };
        curve.validate()?;
        Ok(curve)
    }

    /// Builds a curve whose class is read off its homology: non-separating when
    /// the class survives capping off the boundary, otherwise separating with
    /// all of the genus on the side of the last boundary component.
    pub fn from_homology(
        surface: SurfaceSpec,
        hom: HomologyClass,
        label: impl Into<String>,
    ) -> Result<Self> {
        surface.check_class(&hom)?;
        let cls = if surface.symplectic_part(&hom).iter().any(|c| !c.is_zero()) {
            CurveClass::NonSeparating
        } else {
            let (far, _) = boundary_indicator(&surface, &hom).ok_or_else(|| {
                Error::input(format!("{hom:?} is not the class of a separating curve"))
            })?;
            CurveClass::separating(
                Side::new(0, far.len()),
                Side::new(surface.genus, surface.boundary - far.len()),
            )
        };
        Curve::new(surface, cls, hom, label)
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn cls(&self) -> CurveClass {
        self.cls
    }

    pub fn hom(&self) -> &HomologyClass {
        &self.hom
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same class and the same homology up to orientation; labels are ignored.
    pub fn same_curve(&self, other: &Curve) -> bool {
        self.surface == other.surface
            && self.cls == other.cls
            && self.hom.equal_up_to_sign(&other.hom)
    }

    fn validate(&self) -> Result<()> {
        let s = &self.surface;
        s.check_class(&self.hom)?;
        self.cls.validate(s)?;
        if !self.hom.is_essential() {
            return Err(Error::input(format!(
                "curve '{}' is null-homologous (not allowable)",
                self.label
            )));
        }
        match self.cls {
            CurveClass::NonSeparating => {
                // Capping the boundary off keeps a non-separating curve simple and
                // non-separating, so its closed-surface class is primitive.
                let symp = HomologyClass {
                    coords: s.symplectic_part(&self.hom).to_vec(),
                };
                if !symp.is_primitive() {
                    return Err(Error::input(format!(
                        "non-separating curve '{}' needs a primitive nonzero (α, β) part, got {:?}",
                        self.label, self.hom
                    )));
                }
            }
            CurveClass::Separating { side_a, side_b } => {
                let (far, _) = boundary_indicator(s, &self.hom).ok_or_else(|| {
                    Error::input(format!(
                        "separating curve '{}' must be ± a sum of distinct boundary classes, got {:?}",
                        self.label, self.hom
                    ))
                })?;
                let k = far.len();
                if k != side_a.boundary && k != side_b.boundary {
                    return Err(Error::input(format!(
                        "curve '{}' encloses {k} boundary components, inconsistent with {}",
                        self.label, self.cls
                    )));
                }
            }
        }
        Ok(())
    }

    /// Reads which side of a separating curve carries which genus.
    ///
    /// The boundary components are determined by the homology; when both
    /// sides contain the same number of them, the far side is taken to be the
    /// one with the smaller `(genus, boundary)`.
    pub fn separating_sides(&self) -> Option<SeparatingSides> {
        let CurveClass::Separating { side_a, side_b } = self.cls else {
            return None;
        };
        let (far_components, _) = boundary_indicator(&self.surface, &self.hom)?;
        let k = far_components.len();
        let (far, near) = if side_a.boundary == k { (side_a, side_b) } else { (side_b, side_a) };
        Some(SeparatingSides {
            far_components,
            far,
            near,
        })
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}{:?}", self.label, self.cls, self.hom)
    }
}

/// If `hom` is `±(δ_{i₁} + … + δ_{i_k})` for a proper nonempty set of boundary
/// components not containing the last one, returns those 1-based indices and the sign.
pub fn boundary_indicator(surface: &SurfaceSpec, hom: &HomologyClass) -> Option<(Vec<usize>, i8)> {
    if surface.symplectic_part(hom).iter().any(|c| !c.is_zero()) {
        return None;
    }
    let deltas = surface.delta_part(hom);
    let mut sign: i8 = 0;
    let mut members = Vec::new();
    for (j, c) in deltas.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_one() {
            1
        } else if *c == -BigInt::one() {
            -1
        } else {
            return None;
        };
        if sign != 0 && s != sign {
            return None;
        }
        sign = s;
        members.push(j + 1);
    }
    if members.is_empty() {
        None
    } else {
        Some((members, sign))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn coefficient(self) -> i64 {
        match self {
            Handedness::Right => RIGHT_HANDED_COEFFICIENT,
            Handedness::Left => -RIGHT_HANDED_COEFFICIENT,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

/// Homology matrix of a Dehn twist: `x ↦ x + h⟨c, x⟩ c`.
pub fn twist_matrix(c: &Curve, handed: Handedness) -> IntMatrix {
    let s = c.surface();
    let n = s.rank();
    let hom = &c.hom().coords;
    // row vector cᵀJ, so that ⟨c, x⟩ = (cᵀJ)·x
    let mut cj = vec![BigInt::zero(); n];
    for i in 1..=s.genus {
        let (a, b) = (s.alpha(i), s.beta(i));
        cj[b] = hom[a].clone();
        cj[a] = -hom[b].clone();
    }
    let h = BigInt::from(handed.coefficient());
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        if hom[i].is_zero() {
            continue;
        }
        let hc = &h * &hom[i];
        for k in 0..n {
            if !cj[k].is_zero() {
                let v = m.get(i, k) + &hc * &cj[k];
                m.set(i, k, v);
            }
        }
    }
    m
}

/// Image of a single vector under a twist, without forming the matrix.
pub fn twist_vector(c: &Curve, handed: Handedness, x: &HomologyClass) -> HomologyClass {
    let s = c.surface();
    let p = s.pairing(c.hom(), x).expect("same surface");
    if p.is_zero() {
        return x.clone();
    }
    x.add(&c.hom().scaled(&(p * handed.coefficient())))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistGen {
    pub curve: Curve,
    pub handed: Handedness,
}

impl TwistGen {
    pub fn right(curve: Curve) -> Self {
        TwistGen {
            curve,
            handed: Handedness::Right,
        }
    }

    pub fn left(curve: Curve) -> Self {
        TwistGen {
            curve,
            handed: Handedness::Left,
        }
    }

    pub fn inverse(&self) -> Self {
        TwistGen {
            curve: self.curve.clone(),
            handed: self.handed.inverse(),
        }
    }

    pub fn matrix(&self) -> IntMatrix {
        twist_matrix(&self.curve, self.handed)
    }

    fn name(&self) -> String {
        match self.handed {
            Handedness::Right => format!("t_{}", self.curve.label()),
            Handedness::Left => format!("t_{}^-1", self.curve.label()),
        }
    }
}

/// A mapping class of `F` that may permute boundary components, known by its
/// action on homology and on the boundary components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleGen {
    surface: SurfaceSpec,
    matrix: IntMatrix,
    inverse: IntMatrix,
    perm: Perm,
    label: String,
}

impl BundleGen {
    pub fn new(
        surface: SurfaceSpec,
        matrix: IntMatrix,
        perm: Perm,
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        let n = surface.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::input(format!(
                "bundle generator '{label}' matrix is {}x{}, expected {n}x{n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if perm.degree() != surface.boundary {
            return Err(Error::input(format!(
                "bundle generator '{label}' permutes {} points, surface has {} boundary components",
                perm.degree(),
                surface.boundary
            )));
        }
        if !surface.pairing_form().is_preserved_by(&matrix) {
            return Err(Error::input(format!(
                "bundle generator '{label}' does not preserve the intersection form"
            )));
        }
        for j in 1..surface.boundary {
            let image = HomologyClass {
                coords: matrix.mul_vec(&surface.boundary_class(j).coords),
            };
            if image != surface.boundary_class(perm.apply(j - 1) + 1) {
                return Err(Error::input(format!(
                    "bundle generator '{label}' sends δ{j} off the boundary component its permutation prescribes"
                )));
            }
        }
        let inverse = matrix.inverse().ok_or_else(|| {
            Error::input(format!("bundle generator '{label}' is not invertible over Z"))
        })?;
        Ok(BundleGen {
            surface,
            matrix,
            inverse,
            perm,
            label,
        })
    }

    pub fn identity(surface: SurfaceSpec, label: impl Into<String>) -> Self {
        let n = surface.rank();
        BundleGen {
            surface,
            matrix: IntMatrix::identity(n),
            inverse: IntMatrix::identity(n),
            perm: Perm::identity(surface.boundary),
            label: label.into(),
        }
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rep(&self) -> HomPermRep {
        HomPermRep {
            matrix: self.matrix.clone(),
            perm: self.perm.clone(),
        }
    }

    pub fn inverse_rep(&self) -> HomPermRep {
        HomPermRep {
            matrix: self.inverse.clone(),
            perm: self.perm.inverse(),
        }
    }

    /// `w ∘ self ∘ w⁻¹`, keeping the label.
    pub fn conjugated(&self, w: &HomPermRep, w_inv: &HomPermRep) -> Result<BundleGen> {
        let rep = w.compose(&self.rep()).compose(w_inv);
        BundleGen::new(self.surface, rep.matrix, rep.perm, self.label.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Twist(TwistGen),
    Bundle { gen: BundleGen, inverse: bool },
}

impl Letter {
    pub fn surface(&self) -> SurfaceSpec {
        match self {
            Letter::Twist(t) => t.curve.surface(),
            Letter::Bundle { gen, .. } => gen.surface(),
        }
    }

    pub fn inverse(&self) -> Letter {
        match self {
            Letter::Twist(t) => Letter::Twist(t.inverse()),
            Letter::Bundle { gen, inverse } => Letter::Bundle {
                gen: gen.clone(),
                inverse: !inverse,
            },
        }
    }

    pub fn rep(&self) -> HomPermRep {
        match self {
            Letter::Twist(t) => HomPermRep {
                matrix: t.matrix(),
                perm: Perm::identity(t.curve.surface().boundary),
            },
            Letter::Bundle { gen, inverse: false } => gen.rep(),
            Letter::Bundle { gen, inverse: true } => gen.inverse_rep(),
        }
    }

    fn name(&self) -> String {
        match self {
            Letter::Twist(t) => t.name(),
            Letter::Bundle { gen, inverse: false } => gen.label().to_string(),
            Letter::Bundle { gen, inverse: true } => format!("{}^-1", gen.label()),
        }
    }
}

/// A word in twists and bundle generators on one surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MCWord {
    surface: SurfaceSpec,
    letters: Vec<Letter>,
}

impl MCWord {
    pub fn empty(surface: SurfaceSpec) -> Self {
        MCWord {
            surface,
            letters: Vec::new(),
        }
    }

    pub fn new(surface: SurfaceSpec, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.surface() != surface) {
            return Err(Error::input(format!(
                "letter {} lives on {}, word is on {surface}",
                l.name(),
                l.surface()
            )));
        }
        Ok(MCWord { surface, letters })
    }

    pub fn twists(surface: SurfaceSpec, twists: Vec<TwistGen>) -> Result<Self> {
        MCWord::new(surface, twists.into_iter().map(Letter::Twist).collect())
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> MCWord {
        MCWord {
            surface: self.surface,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Concatenation `self · other` (as maps: `other` acts first).
    pub fn then(&self, other: &MCWord) -> Result<MCWord> {
        if self.surface != other.surface {
            return Err(Error::input("words live on different surfaces"));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(MCWord {
            surface: self.surface,
            letters,
        })
    }

    pub fn name(&self) -> String {
        if self.letters.is_empty() {
            return "id".into();
        }
        self.letters.iter().map(Letter::name).collect::<Vec<_>>().join(" ")
    }
}

/// Action of a mapping class on `H₁(F)` and on the boundary components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPermRep {
    pub matrix: IntMatrix,
    pub perm: Perm,
}

impl HomPermRep {
    pub fn identity(surface: SurfaceSpec) -> Self {
        HomPermRep {
            matrix: IntMatrix::identity(surface.rank()),
            perm: Perm::identity(surface.boundary),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HomPermRep) -> HomPermRep {
        HomPermRep {
            matrix: self.matrix.mul(&other.matrix),
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.perm.is_identity()
    }
}

pub fn evaluate(w: &MCWord) -> Result<HomPermRep> {
    let s = w.surface();
    let form = s.pairing_form();
    let mut acc = HomPermRep::identity(s);
    for l in w.letters() {
        if l.surface() != s {
            return Err(Error::input("word mixes surfaces"));
        }
        acc = acc.compose(&l.rep());
    }
    if !form.is_preserved_by(&acc.matrix) {
        return Err(Error::Internal(format!(
            "evaluation of {} does not preserve the intersection form",
            w.name()
        )));
    }
    Ok(acc)
}

/// Image of a curve under a word; the class is unchanged and the label
/// records the word applied.
pub fn act_on_curve(w: &MCWord, c: &Curve) -> Result<Curve> {
    if w.surface() != c.surface() {
        return Err(Error::input(format!(
            "word on {} applied to curve on {}",
            w.surface(),
            c.surface()
        )));
    }
    if w.is_empty() {
        return Ok(c.clone());
    }
    let hom = apply_word(w, c.hom());
    Curve::new(
        c.surface(),
        c.cls(),
        hom,
        format!("[{}]({})", w.name(), c.label()),
    )
}

/// Applies a word to a homology class letter by letter, rightmost first.
pub fn apply_word(w: &MCWord, x: &HomologyClass) -> HomologyClass {
    let mut v = x.clone();
    for l in w.letters().iter().rev() {
        v = match l {
            Letter::Twist(t) => twist_vector(&t.curve, t.handed, &v),
            Letter::Bundle { .. } => HomologyClass {
                coords: l.rep().matrix.mul_vec(&v.coords),
            },
        };
    }
    v
}
