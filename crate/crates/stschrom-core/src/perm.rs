//! One-line permutations of {0, .., n-1}.
//!
//! Permutation actions are written as exponents (x^T); here
//! `apply` is that action and `then` composes left to right, so
//! `a.then(b)` sends x to b(a(x)).

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    NotBijective,
    DomainMismatch,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotBijective => write!(f, "images do not form a bijection"),
            PermError::DomainMismatch => write!(f, "permutations act on different domains"),
        }
    }
}

impl core::error::Error for PermError {}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(PermError::NotBijective);
            }
            seen[i as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// x -> other(self(x)).
    pub fn then(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.len() != other.len() {
            return Err(PermError::DomainMismatch);
        }
        Ok(Permutation {
            images: self.images.iter().map(|&y| other.apply(y)).collect(),
        })
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// The cycle through `x`, starting at `x`.
    pub fn orbit(&self, x: u32) -> Vec<u32> {
        let mut orbit = alloc::vec![x];
        let mut y = self.apply(x);
        while y != x {
            orbit.push(y);
            y = self.apply(y);
        }
        orbit
    }
}
