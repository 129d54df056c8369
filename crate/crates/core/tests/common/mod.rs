//! Random fibrations and words for the property and acceptance suites.
#![allow(dead_code)]

use mfib::{
    Curve, HomologyClass, LefschetzFibration, MCWord, Sign, SignedCycle, SurfaceSpec, TwistGen,
};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A surface with `H₁` of rank at most `max_rank` (and `b ≤ 6`).
pub fn random_surface(rng: &mut TestRng, max_rank: usize, closed_ok: bool) -> SurfaceSpec {
    loop {
        let g = rng.gen_range(0..=max_rank / 2);
        let b = rng.gen_range(if closed_ok { 0 } else { 1 }..=6);
        let s = SurfaceSpec::new(g, b);
        // skip surfaces with no essential curves at all
        if s.rank() <= max_rank && (g >= 1 || b >= 2) {
            return s;
        }
    }
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |a, &b| a.gcd(&b))
}

/// An essential simple curve (class read off the homology).
pub fn random_curve(rng: &mut TestRng, s: SurfaceSpec, label: &str) -> Curve {
    let n = s.symplectic_rank();
    let d = s.delta_count();
    loop {
        let separating = s.genus == 0 || (d > 0 && rng.gen_bool(0.25));
        let mut coords = vec![0i64; s.rank()];
        if separating {
            if d == 0 {
                continue;
            }
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            for x in coords[n..].iter_mut() {
                if rng.gen_bool(0.5) {
                    *x = sign;
                }
            }
        } else {
            for x in coords.iter_mut() {
                *x = rng.gen_range(-2..=2);
            }
            if gcd_all(&coords[..n]) != 1 {
                continue;
            }
        }
        if let Ok(c) = Curve::from_homology(s, HomologyClass::from_i64(&coords), label) {
            return c;
        }
    }
}

pub fn random_sign(rng: &mut TestRng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn random_fibration_on(rng: &mut TestRng, s: SurfaceSpec, max_n: usize) -> LefschetzFibration {
    let n = rng.gen_range(0..=max_n);
    let cycles = (0..n)
        .map(|i| SignedCycle::new(random_curve(rng, s, &format!("c{}", i + 1)), random_sign(rng)))
        .collect();
    LefschetzFibration::over_disk(s, cycles).unwrap()
}

pub fn random_fibration(rng: &mut TestRng, max_rank: usize, max_n: usize) -> LefschetzFibration {
    let s = random_surface(rng, max_rank, true);
    random_fibration_on(rng, s, max_n)
}

/// A word of `len` twists (either handedness) about the given curves.
pub fn random_word(rng: &mut TestRng, s: SurfaceSpec, curves: &[Curve], len: usize) -> MCWord {
    let letters = (0..len)
        .map(|_| {
            let c = curves[rng.gen_range(0..curves.len())].clone();
            if rng.gen_bool(0.5) {
                TwistGen::right(c)
            } else {
                TwistGen::left(c)
            }
        })
        .collect();
    MCWord::twists(s, letters).unwrap()
}

/// Random integer matrix with entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut TestRng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
