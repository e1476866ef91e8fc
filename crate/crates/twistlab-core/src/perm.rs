//! Permutations of `{1..size}` (stored 0-based).

use std::fmt;

/// A permutation σ of `{0..size-1}`; `images[i] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(size: usize) -> Self {
        Perm { images: (0..size).collect() }
    }

    /// Builds a permutation from its image list, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, String> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(format!("not a bijection on 0..{n}: images {images:?}"));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..size).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Composition `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.size(), other.size());
        Perm { images: (0..self.size()).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.size()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// All `size!` permutations, in lexicographic order of their image lists.
    pub fn all(size: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..size).collect();
        loop {
            out.push(Perm { images: images.clone() });
            // Next lexicographic permutation.
            let Some(i) = (0..size.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..size).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|&i| i + 1).collect();
        write!(f, "Perm{one_based:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_perms_count_and_order() {
        assert_eq!(Perm::all(0).len(), 1);
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(4).len(), 24);
        let p3 = Perm::all(3);
        assert!(p3[0].is_identity());
        assert_eq!(p3[1], Perm::from_images(vec![0, 2, 1]).unwrap());
    }

    #[test]
    fn compose_and_inverse() {
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
        let s = Perm::transposition(3, 0, 1);
        let t = Perm::transposition(3, 1, 2);
        // (s∘t)(i) = s(t(i)): t sends 2→1, then s sends 1→0.
        assert_eq!(s.compose(&t).apply(2), 0);
    }

    #[test]
    fn from_images_validates() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 2]).is_err());
        assert!(Perm::from_images(vec![1, 0, 2]).is_ok());
    }
}
