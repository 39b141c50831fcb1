use std::fmt;

use super::Partition;

/// A permutation of {0, .., n-1} in one-line form: `images[i]` is the image
/// of `i`. Displayed in 1-based cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from one-line images; panics unless the images are a
    /// permutation of 0..n.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!(v < n && !seen[v], "images are not a bijection on 0..{n}");
            seen[v] = true;
        }
        Permutation { images }
    }

    /// Builds from disjoint cycles over 0..n. Elements absent from every
    /// cycle are fixed points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                assert!(a < n, "cycle element {a} out of range");
                assert!(!used[a], "element {a} appears in two cycles");
                used[a] = true;
                images[a] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition applying `other` first: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// The cycles, each starting at its minimum, ordered by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of cycles, written kappa(pi).
    pub fn num_cycles(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        count
    }

    /// The cycle-type rho(pi) as a partition of n.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (idx, a) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", a + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
