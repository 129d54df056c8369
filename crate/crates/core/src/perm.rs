//! Permutations of boundary components and a small Schreier–Sims.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree accepted by [`perm_group_surjective`].
pub const MAX_PERM_DEGREE: usize = 10;

/// A permutation of `{0, …, n−1}`; `p.apply(i)` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From 1-based images, as written in fibration files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::input("permutation entries are 1-based"));
        }
        Perm::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Permutation of `n` points given by disjoint cycles (0-based).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= n || q >= n {
                    return Err(Error::input("cycle entry out of range"));
                }
                images[p] = q;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_based())
    }
}

struct Level {
    base: usize,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`, for `p` in the orbit.
    transversal: Vec<Option<Perm>>,
}

/// Base and strong generating set for the group generated by some permutations.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    /// Strong generators, tagged with the first level whose base point they move.
    strong: Vec<(usize, Perm)>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for g in generators {
            assert_eq!(g.degree(), degree);
            if !g.is_identity() {
                let residue = chain.sift(g, 0);
                if !residue.1.is_identity() {
                    chain.add_strong(residue.0, residue.1);
                }
            }
        }
        chain.complete();
        chain
    }

    /// Order of the group as a product of basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.sift(g, 0).1.is_identity()
    }

    fn add_strong(&mut self, level: usize, g: Perm) {
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&i| g.apply(i) != i)
                .expect("non-identity residue moves a point");
            self.levels.push(Level {
                base,
                orbit: vec![base],
                transversal: Vec::new(),
            });
        }
        self.strong.push((level, g));
    }

    fn generators_from(&self, level: usize) -> Vec<&Perm> {
        self.strong
            .iter()
            .filter(|(l, _)| *l >= level)
            .map(|(_, g)| g)
            .collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let gens: Vec<Perm> = self.generators_from(level).into_iter().cloned().collect();
        let lvl = &mut self.levels[level];
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[lvl.base] = Some(Perm::identity(self.degree));
        let mut orbit = vec![lvl.base];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            for s in &gens {
                let q = s.apply(p);
                if transversal[q].is_none() {
                    let u = s.compose(transversal[p].as_ref().unwrap());
                    transversal[q] = Some(u);
                    orbit.push(q);
                }
            }
            k += 1;
        }
        lvl.orbit = orbit;
        lvl.transversal = transversal;
    }

    /// Sifts `g` from `level` down; returns the level where it fell out and the residue.
    fn sift(&self, g: &Perm, level: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(level) {
            let image = h.apply(lvl.base);
            match lvl.transversal.get(image).and_then(|u| u.as_ref()) {
                Some(u) => h = u.inverse().compose(&h),
                None => return (i, h),
            }
        }
        (self.levels.len(), h)
    }

    fn complete(&mut self) {
        'restart: loop {
            for level in (0..self.levels.len()).rev() {
                self.rebuild_orbit(level);
            }
            for level in (0..self.levels.len()).rev() {
                let gens: Vec<Perm> = self.generators_from(level).into_iter().cloned().collect();
                let orbit = self.levels[level].orbit.clone();
                for &p in &orbit {
                    let up = self.levels[level].transversal[p].clone().unwrap();
                    for s in &gens {
                        let q = s.apply(p);
                        let uq = self.levels[level].transversal[q].as_ref().unwrap();
                        let schreier = uq.inverse().compose(s).compose(&up);
                        let (at, residue) = self.sift(&schreier, level + 1);
                        if !residue.is_identity() {
                            self.add_strong(at, residue);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Whether `perms` generate the full symmetric group on `b` points.
pub fn perm_group_surjective(perms: &[Perm], b: usize) -> Result<bool> {
    if b == 0 {
        return Err(Error::input("permutation degree must be at least 1"));
    }
    if b > MAX_PERM_DEGREE {
        return Err(Error::Capacity(format!(
            "permutation degree {b} exceeds {MAX_PERM_DEGREE}"
        )));
    }
    if let Some(p) = perms.iter().find(|p| p.degree() != b) {
        return Err(Error::input(format!(
            "permutation of degree {} where {b} was expected",
            p.degree()
        )));
    }
    let chain = StabilizerChain::new(b, perms);
    Ok(chain.order() == factorial(b))
}
