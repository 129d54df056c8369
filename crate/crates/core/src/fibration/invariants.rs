//! Homology of the total space over the disk from its handle decomposition
//! `V = (B² × F) ∪ H₁² ∪ ⋯ ∪ H_n²`.
//!
//! `B² × F` contributes the cells of `F`; each 2-handle is attached along a
//! vanishing cycle, so the cellular boundary `C₂ → C₁ = H₁(F)` has the cycle
//! classes as columns. A closed fiber has a 2-cell of its own, with zero
//! boundary.

use num_bigint::BigInt;

use super::LefschetzFibration;
use crate::error::{Error, Result};
use crate::matrix::{cokernel_invariants, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantReport {
    pub euler: i64,
    pub h1_free_rank: usize,
    /// Invariant factors `> 1` of the torsion of `H₁(V)`.
    pub h1_torsion: Vec<BigInt>,
    pub h2_rank: usize,
    pub positive: usize,
    pub negative: usize,
    pub allowable: bool,
}

/// The cellular boundary map `C₂ → C₁` of the total space.
pub fn boundary_matrix(f: &LefschetzFibration) -> IntMatrix {
    let fiber = f.fiber();
    let mut columns: Vec<Vec<BigInt>> = f.cycles().iter().map(|c| c.curve.hom().coords.clone()).collect();
    if fiber.boundary == 0 {
        columns.push(vec![BigInt::from(0); fiber.rank()]);
    }
    IntMatrix::from_columns(fiber.rank(), &columns)
}

pub fn total_space_invariants(f: &LefschetzFibration) -> Result<InvariantReport> {
    if !f.base().is_disk() {
        return Err(Error::Unsupported(format!(
            "total-space invariants are only computed over the disk, base is {}",
            f.base()
        )));
    }
    let d = boundary_matrix(f);
    let (h1_free_rank, h1_torsion) = cokernel_invariants(&d);
    let rank = d.rows() - h1_free_rank;
    let (positive, negative) = f.sign_counts();
    Ok(InvariantReport {
        euler: f.fiber().euler() + f.len() as i64,
        h1_free_rank,
        h1_torsion,
        h2_rank: d.cols() - rank,
        positive,
        negative,
        allowable: f.cycles().iter().all(|c| c.curve.hom().is_essential()),
    })
}
