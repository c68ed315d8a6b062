use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of {0, …, d − 1}, stored as its image array.
///
/// Products compose left to right: `p.then(q)` applies `p` first, so
/// `(p·q)(i) = q(p(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for (i, &x) in images.iter().enumerate() {
            if x >= images.len() {
                return Err(Error::MalformedPermutation(format!(
                    "image {x} of {i} is out of range for degree {}",
                    images.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::MalformedPermutation(format!("{x} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// The cycle (0 1 … m−1) on `degree` points, fixing the rest.
    pub fn canonical_cycle(degree: usize, m: usize) -> Self {
        assert!(m <= degree);
        let mut images: Vec<usize> = (0..degree).collect();
        if m >= 2 {
            for (i, image) in images.iter_mut().take(m).enumerate() {
                *image = (i + 1) % m;
            }
        }
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (j, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut touched[x], true) {
                    return Err(Error::MalformedPermutation(format!("cycles are not disjoint in 0..{degree}")));
                }
                images[x] = cycle[(j + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        e = e.abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `σ⁻¹ · self · σ` under the left-to-right convention.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.inverse().then(self).then(sigma)
    }

    /// [a, b] = a·b·a⁻¹·b⁻¹.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b).then(&a.inverse()).then(&b.inverse())
    }

    /// Cycle lengths, fixed points included, sorted non-increasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    /// `Some(m)` if the cycle type is (m, 1, …, 1) with m >= 2.
    pub fn single_cycle_length(&self) -> Option<usize> {
        let moved = self.images.iter().enumerate().filter(|&(i, &x)| i != x).count();
        (moved >= 2 && self.cycle_type()[0] == moved).then_some(moved)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation, e.g. `(0 1 2)(3 4)`; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Size of the orbit of 0 under the group generated by `gens`.
pub fn orbit_of_zero(degree: usize, gens: &[&Permutation]) -> usize {
    if degree == 0 {
        return 0;
    }
    let mut seen = vec![false; degree];
    let mut stack = vec![0];
    seen[0] = true;
    let mut size = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                size += 1;
                stack.push(y);
            }
        }
    }
    size
}

/// All permutations of {0, …, degree − 1} in lexicographic order of images.
pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..degree).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..degree).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..degree).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
