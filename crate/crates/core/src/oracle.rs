//! Three-verdict test for surjectivity of the Lefschetz monodromy onto `M_{g,b}`.
//!
//! `Certified` is only returned for a recognized generating set;
//! `Obstructed` only with a finite computed obstruction. Everything else is
//! `Unknown`: homology data alone never proves surjectivity.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::catalog::Catalog;
use crate::curves::{CurveClass, Side};
use crate::homology::{HomologyClass, SurfaceSpec};
use crate::mapping::{HomPermRep, TwistGen};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `M_{0,0}` and `M_{0,1}` are trivial.
    TrivialGroup,
    /// `M_{0,2} ≅ Z` is generated by the twist about the core curve.
    AnnulusCore,
    /// `M_{0,3} ≅ Z³` is generated by the three boundary-parallel twists.
    PantsBoundaryTwists,
    /// Genus one, at most one boundary component: two curves meeting once.
    TorusPair { first: String, second: String },
    /// Every curve of the standard configuration occurs among the twists.
    StandardConfiguration { genus: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    NoTwists,
    /// Only boundary-parallel twists: they are central, `M_{g,b}` is not abelian.
    CentralTwistsOnly,
    /// Some boundary-parallel twist of `M_{0,3}` is missing (1-based component).
    MissingBoundaryTwist { component: usize },
    /// Transvection centers mod `p` span a proper subspace.
    ModPSpan { p: u64, dimension: usize, expected: usize },
    /// Transvection centers mod `p` split into mutually orthogonal families.
    ModPReducible { p: u64 },
    /// The generated subgroup of `Sp(2g, p)` was enumerated and is too small.
    ModPClosure { p: u64, order: usize, expected: u128 },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::NoTwists => write!(f, "no twists; the mapping class group is nontrivial"),
            Obstruction::CentralTwistsOnly => {
                write!(f, "only boundary-parallel (central) twists; the mapping class group is not abelian")
            }
            Obstruction::MissingBoundaryTwist { component } => {
                write!(f, "no twist parallel to boundary component {component}")
            }
            Obstruction::ModPSpan { p, dimension, expected } => write!(
                f,
                "mod-{p} transvection centers span dimension {dimension} < {expected}"
            ),
            Obstruction::ModPReducible { p } => {
                write!(f, "mod-{p} transvection centers split into orthogonal families")
            }
            Obstruction::ModPClosure { p, order, expected } => write!(
                f,
                "mod-{p} symplectic closure too small: order {order}, Sp has order {expected}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjectivityVerdict {
    Certified(Certificate),
    Obstructed(Obstruction),
    Unknown,
}

impl SurjectivityVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, SurjectivityVerdict::Certified(_))
    }

    pub fn is_obstructed(&self) -> bool {
        matches!(self, SurjectivityVerdict::Obstructed(_))
    }
}

/// Configuration for [`mcg_surjectivity_oracle`].
#[derive(Clone, Debug)]
pub struct SurjectivityOracle {
    pub primes: Vec<u64>,
    /// Largest subgroup of `Sp(2g, p)` enumerated element by element.
    pub closure_cap: usize,
    /// Largest orbit of transvection centers computed under bundle conjugation.
    pub orbit_cap: usize,
}

impl Default for SurjectivityOracle {
    fn default() -> Self {
        SurjectivityOracle {
            primes: vec![2, 3, 5],
            closure_cap: 50_000,
            orbit_cap: 200_000,
        }
    }
}

pub fn mcg_surjectivity_oracle(twists: &[TwistGen], surface: SurfaceSpec) -> SurjectivityVerdict {
    SurjectivityOracle::default().verdict(twists, &[], surface)
}

impl SurjectivityOracle {
    /// Verdict for the subgroup generated by all conjugates of `twists` under
    /// the group generated by `twists` and `bundle`. With an empty `bundle`
    /// this is the subgroup generated by `twists`.
    pub fn verdict(
        &self,
        twists: &[TwistGen],
        bundle: &[HomPermRep],
        surface: SurfaceSpec,
    ) -> SurjectivityVerdict {
        debug_assert!(twists.iter().all(|t| t.curve.surface() == surface));
        if let Some(cert) = certificate(twists, surface) {
            return SurjectivityVerdict::Certified(cert);
        }
        if let Some(obs) = self.obstruction(twists, bundle, surface) {
            return SurjectivityVerdict::Obstructed(obs);
        }
        SurjectivityVerdict::Unknown
    }

    /// Just the obstruction search, skipping certificates.
    pub fn obstruction(
        &self,
        twists: &[TwistGen],
        bundle: &[HomPermRep],
        s: SurfaceSpec,
    ) -> Option<Obstruction> {
        let (g, b) = (s.genus, s.boundary);
        if g == 0 && b <= 1 {
            return None;
        }
        if twists.is_empty() {
            return Some(Obstruction::NoTwists);
        }
        if g == 0 && b == 3 {
            let mut hit = covered_boundary_components(twists, s);
            // conjugating by bundle elements permutes the boundary twists
            loop {
                let before = hit.clone();
                for rep in bundle {
                    for &j in &before {
                        hit.insert(rep.perm.apply(j - 1) + 1);
                    }
                }
                if hit == before {
                    break;
                }
            }
            return (1..=3)
                .find(|j| !hit.contains(j))
                .map(|component| Obstruction::MissingBoundaryTwist { component });
        }
        if g == 0 && b == 2 {
            return None;
        }
        let all_central = twists.iter().all(|t| is_boundary_parallel(t.curve.cls()));
        if all_central {
            return Some(Obstruction::CentralTwistsOnly);
        }
        if g == 0 {
            return None;
        }
        for &p in &self.primes {
            if let Some(obs) = self.mod_p_obstruction(twists, bundle, s, p) {
                return Some(obs);
            }
        }
        None
    }

    fn mod_p_obstruction(
        &self,
        twists: &[TwistGen],
        bundle: &[HomPermRep],
        s: SurfaceSpec,
        p: u64,
    ) -> Option<Obstruction> {
        let n = s.symplectic_rank();
        let mut centers: Vec<Vec<u64>> = twists
            .iter()
            .map(|t| reduce_mod(s.symplectic_part(t.curve.hom()), p))
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        if !bundle.is_empty() {
            let mats: Vec<Vec<Vec<u64>>> = bundle
                .iter()
                .map(|rep| symplectic_block_mod(&rep.matrix, n, p))
                .collect();
            centers = orbit_closure(centers, &mats, p, self.orbit_cap)?;
        }
        centers.sort();
        centers.dedup();

        let dimension = rank_mod_p(&centers, n, p);
        if dimension < n {
            return Some(Obstruction::ModPSpan { p, dimension, expected: n });
        }
        if !orthogonality_graph_connected(&centers, p) {
            return Some(Obstruction::ModPReducible { p });
        }
        // a closure that cannot fit under the cap is never conclusive
        let expected = symplectic_group_order(s.genus, p).filter(|&e| e <= self.closure_cap as u128)?;
        let order = transvection_closure(&centers, p, self.closure_cap)?;
        ((order as u128) < expected).then_some(Obstruction::ModPClosure { p, order, expected })
    }
}

fn is_boundary_parallel(cls: CurveClass) -> bool {
    match cls {
        CurveClass::Separating { side_a, side_b } => {
            side_a == Side::new(0, 1) || side_b == Side::new(0, 1)
        }
        CurveClass::NonSeparating => false,
    }
}

fn covered_boundary_components(twists: &[TwistGen], s: SurfaceSpec) -> HashSet<usize> {
    (1..=s.boundary)
        .filter(|&j| {
            let bj = s.boundary_class(j);
            twists.iter().any(|t| t.curve.hom().equal_up_to_sign(&bj))
        })
        .collect()
}

fn certificate(twists: &[TwistGen], s: SurfaceSpec) -> Option<Certificate> {
    let (g, b) = (s.genus, s.boundary);
    match (g, b) {
        (0, 0) | (0, 1) => Some(Certificate::TrivialGroup),
        (0, 2) => (!twists.is_empty()).then_some(Certificate::AnnulusCore),
        (0, 3) => (covered_boundary_components(twists, s).len() == 3)
            .then_some(Certificate::PantsBoundaryTwists),
        (1, 0) | (1, 1) => {
            // Non-separating curves in F_{1,0} and F_{1,1} are determined by their
            // homology class, and a pair with ⟨x, y⟩ = ±1 is carried to (a, b).
            for (i, x) in twists.iter().enumerate() {
                for y in &twists[i + 1..] {
                    let p = s.pairing(x.curve.hom(), y.curve.hom()).ok()?;
                    if p.abs() == BigInt::from(1) {
                        return Some(Certificate::TorusPair {
                            first: x.curve.label().to_string(),
                            second: y.curve.label().to_string(),
                        });
                    }
                }
            }
            None
        }
        (_, 0) | (_, 1) => {
            let catalog = Catalog::for_surface(s).ok()?;
            let complete = catalog.curves().iter().all(|c| {
                twists.iter().any(|t| {
                    t.curve.cls() == CurveClass::NonSeparating
                        && t.curve.hom().equal_up_to_sign(c.hom())
                })
            });
            complete.then_some(Certificate::StandardConfiguration { genus: g })
        }
        _ => None,
    }
}

fn reduce_mod(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    v.iter()
        .map(|x| x.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect()
}

/// The action on `H₁ / radical`, i.e. on the `(α, β)` block, reduced mod `p`.
fn symplectic_block_mod(m: &crate::matrix::IntMatrix, n: usize, p: u64) -> Vec<Vec<u64>> {
    (0..n).map(|i| reduce_mod(&m.row(i)[..n], p)).collect()
}

fn mat_vec_mod(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p)
        .collect()
}

fn symp_pairing_mod(x: &[u64], y: &[u64], p: u64) -> u64 {
    let mut s = 0u64;
    for i in (0..x.len()).step_by(2) {
        s = (s + x[i] * y[i + 1] % p + (p - x[i + 1] * y[i] % p)) % p;
    }
    s
}

fn transvect_mod(c: &[u64], x: &[u64], p: u64) -> Vec<u64> {
    let k = symp_pairing_mod(c, x, p);
    x.iter().zip(c).map(|(xi, ci)| (xi + k * ci) % p).collect()
}

fn orbit_closure(
    centers: Vec<Vec<u64>>,
    bundle: &[Vec<Vec<u64>>],
    p: u64,
    cap: usize,
) -> Option<Vec<Vec<u64>>> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue: VecDeque<Vec<u64>> = VecDeque::new();
    let gens = centers.clone();
    for c in centers {
        if seen.insert(c.clone()) {
            queue.push_back(c);
        }
    }
    while let Some(v) = queue.pop_front() {
        let mut images: Vec<Vec<u64>> = bundle.iter().map(|m| mat_vec_mod(m, &v, p)).collect();
        images.extend(gens.iter().map(|c| transvect_mod(c, &v, p)));
        for w in images {
            if seen.insert(w.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

fn rank_mod_p(vectors: &[Vec<u64>], n: usize, p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| x % p).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for k in 0..n {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime
    let mut result = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn orthogonality_graph_connected(centers: &[Vec<u64>], p: u64) -> bool {
    if centers.is_empty() {
        return true;
    }
    let mut seen = vec![false; centers.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..centers.len() {
            if !seen[j] && symp_pairing_mod(&centers[i], &centers[j], p) != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// `|Sp(2g, p)| = p^{g²} ∏_{i=1}^{g} (p^{2i} − 1)`, or `None` on overflow.
pub fn symplectic_group_order(g: usize, p: u64) -> Option<u128> {
    let p = p as u128;
    let mut order = p.checked_pow((g * g) as u32)?;
    for i in 1..=g {
        order = order.checked_mul(p.checked_pow(2 * i as u32)? - 1)?;
    }
    Some(order)
}

/// Order of the group generated by the transvections about `centers` in
/// `Sp(n, p)`, or `None` when it exceeds `cap`.
fn transvection_closure(centers: &[Vec<u64>], p: u64, cap: usize) -> Option<usize> {
    let n = centers.first().map_or(0, |c| c.len());
    let gens: Vec<Vec<u8>> = centers
        .iter()
        .map(|c| {
            let mut m = identity_flat(n);
            for col in 0..n {
                let mut e = vec![0u64; n];
                e[col] = 1;
                let img = transvect_mod(c, &e, p);
                for row in 0..n {
                    m[row * n + col] = img[row] as u8;
                }
            }
            m
        })
        .collect();
    let id = identity_flat(n);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = mat_mul_flat(g, &x, n, p);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

fn identity_flat(n: usize) -> Vec<u8> {
    let mut m = vec![0u8; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul_flat(a: &[u8], b: &[u8], n: usize, p: u64) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0u64;
            for k in 0..n {
                s += a[i * n + k] as u64 * b[k * n + j] as u64;
            }
            out[i * n + j] = (s % p) as u8;
        }
    }
    out
}

/// Symplectic part reduced mod `p`, exposed for tests.
pub fn symplectic_residue(s: &SurfaceSpec, x: &HomologyClass, p: u64) -> Vec<u64> {
    reduce_mod(s.symplectic_part(x), p)
}

/// `true` when every entry of `v` is zero mod `p`.
pub fn vanishes_mod(v: &[BigInt], p: u64) -> bool {
    let pb = BigInt::from(p);
    v.iter().all(|x| x.mod_floor(&pb).is_zero())
}
