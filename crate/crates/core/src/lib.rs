//! Lefschetz fibrations over surfaces, described by monodromy: homology of
//! the fiber, curve classes, mapping class words, and the algorithms that
//! manipulate and classify fibrations.

pub mod catalog;
pub mod curves;
pub mod error;
pub mod fibration;
pub mod homology;
pub mod io;
pub mod mapping;
pub mod matrix;
pub mod oracle;
pub mod perm;

pub use catalog::Catalog;
pub use curves::{class_count, enumerate_classes, CurveClass, Side};
pub use error::{Error, Result};
pub use fibration::{
    build, destabilize, global_conjugate, hurwitz_move, p_g, pullback, reduce, stabilize,
    substitution_witness, total_space_invariants, u_10, u_11, u_g1, universality_report,
    BaseSurface, HurwitzDirection, InvariantReport, LefschetzFibration, MeridianPlan, PlanEntry,
    Reduction, Sign, SignedCycle, StabilizationMode, UniversalityReport, Verdict, WitnessOutcome,
};
pub use homology::{is_essential, pairing, HomologyClass, PairingForm, SurfaceSpec};
pub use mapping::{
    act_on_curve, apply_word, evaluate, twist_matrix, BundleGen, Curve, Handedness, HomPermRep,
    Letter, MCWord, TwistGen,
};
pub use matrix::{cokernel_invariants, smith_normal_form, IntMatrix, SmithDecomposition};
pub use oracle::{
    mcg_surjectivity_oracle, Certificate, Obstruction, SurjectivityOracle, SurjectivityVerdict,
};
pub use perm::{perm_group_surjective, Perm};
