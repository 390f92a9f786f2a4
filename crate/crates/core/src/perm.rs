//! Permutations on points 1..n, stored as 0-based image arrays.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>, // images[i] = image of point i (0-based)
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Build from a 0-based image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::MalformedPermutation { degree: n });
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint-cycle notation with 1-based points, e.g.
    /// `from_cycles(10, &[&[1, 2], &[3, 4]])` for (1 2)(3 4).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > degree || to == 0 || to > degree {
                    return Err(Error::MalformedPermutation { degree });
                }
                images[from - 1] = to - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Left-to-right composition: (p.compose(q))(x) = q(p(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// True for even permutations. Counted via cycle structure.
    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points; identity renders as "()".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert!(p.is_even());
        assert!(p.compose(&p).is_identity());
    }

    #[test]
    fn composition_order() {
        // (1 2) then (2 3) sends 1 -> 2 -> 3.
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        assert_eq!(a.compose(&b).apply(0), 2);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn parity() {
        assert!(Perm::from_cycles(4, &[&[1, 2, 3]]).unwrap().is_even());
        assert!(!Perm::from_cycles(4, &[&[3, 4]]).unwrap().is_even());
        assert!(Perm::identity(6).is_even());
    }

    #[test]
    fn inverse() {
        let p = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
