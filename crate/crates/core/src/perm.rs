//! Permutations on `{1..degree}` and generator sets.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as 0-based images: point `i` maps to `self.0[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            let p = p as usize;
            if p >= images.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAGroup(format!("images {images:?} do not form a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `{1..degree}` from 1-based disjoint or
    /// overlapping cycles, composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Perm::identity(degree);
        for cycle in cycles {
            let mut img: Vec<u32> = (0..degree as u32).collect();
            let mut seen = vec![false; degree];
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::NotAGroup(format!("point {p} outside 1..{degree}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::NotAGroup(format!("point {p} repeated in cycle {cycle:?}")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                img[p - 1] = (next - 1) as u32;
            }
            acc = acc.then(&Perm(img));
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Apply `self` first, then `other` (right action, `x^(ab) = (x^a)^b`).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.0[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of a permutation group of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGenSet {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl PermutationGenSet {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::bad_parameter("perm", "degree must be at least 1"));
        }
        if generators.is_empty() {
            return Err(Error::bad_parameter("perm", "generator list is empty"));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::bad_parameter("perm", format!("generator {g} has degree {} not {degree}", g.degree())));
        }
        Ok(PermutationGenSet { degree, generators })
    }

    /// Generators given as lists of 1-based cycles; the degree is the
    /// largest point mentioned (at least 1).
    pub fn from_cycle_lists(gens: &[Vec<Vec<usize>>]) -> Result<Self> {
        let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1).max(1);
        let generators = gens.iter().map(|c| Perm::from_cycles(degree, c)).collect::<Result<Vec<_>>>()?;
        Self::new(degree, generators)
    }
}
