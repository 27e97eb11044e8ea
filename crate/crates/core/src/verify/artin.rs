//! The Artin action of the type-A braid group on a free group.

use super::GroupElement;
use crate::presentations::{FreeWord, Letter};

/// Letters of the free group `F(x_0, …, x_{k−1})`: `±(a+1)` for `x_a^{±1}`.
type Word = Vec<i32>;

fn reduce_push(out: &mut Word, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Image of `w` under the endomorphism with generator images `images`.
fn substitute(images: &[Word], w: &[i32]) -> Word {
    let mut out = Word::new();
    for &l in w {
        let img = &images[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            img.iter().for_each(|&x| reduce_push(&mut out, x));
        } else {
            img.iter().rev().for_each(|&x| reduce_push(&mut out, -x));
        }
    }
    out
}

/// An automorphism of a free group, stored with its inverse. Products
/// compose as maps: `(a·b)(x) = a(b(x))`.
#[derive(Clone, Debug)]
pub struct FreeGroupAuto {
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl PartialEq for FreeGroupAuto {
    /// Automorphisms agree iff they agree on the generators.
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for FreeGroupAuto {}

impl FreeGroupAuto {
    pub fn identity(rank: usize) -> Self {
        let id: Vec<Word> = (1..=rank as i32).map(|a| vec![a]).collect();
        FreeGroupAuto {
            images: id.clone(),
            inverse_images: id,
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// Image of `x_a` as a word in `x0, x1, …`.
    pub fn image(&self, a: usize) -> FreeWord {
        FreeWord::from_letters(
            self.images[a]
                .iter()
                .map(|&l| Letter::new(format!("x{}", l.unsigned_abs() - 1), l < 0)),
        )
    }

    /// Whether the stored inverse really inverts the images.
    pub fn is_consistent(&self) -> bool {
        let id: Vec<Word> = (1..=self.rank() as i32).map(|a| vec![a]).collect();
        self.images.iter().map(|w| substitute(&self.inverse_images, w)).eq(id.iter().cloned())
            && self.inverse_images.iter().map(|w| substitute(&self.images, w)).eq(id)
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }
}

impl GroupElement for FreeGroupAuto {
    fn mul(&self, other: &Self) -> Self {
        FreeGroupAuto {
            images: other.images.iter().map(|w| substitute(&self.images, w)).collect(),
            inverse_images: self
                .inverse_images
                .iter()
                .map(|w| substitute(&other.inverse_images, w))
                .collect(),
        }
    }

    fn inv(&self) -> Self {
        FreeGroupAuto {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }
}

/// `g_0, …, g_{n−1}` acting on `F(x_0, …, x_n)`:
/// `g_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`.
pub fn artin_rep(n: usize) -> Vec<FreeGroupAuto> {
    (0..n)
        .map(|i| {
            let mut g = FreeGroupAuto::identity(n + 1);
            let (a, b) = (i as i32 + 1, i as i32 + 2);
            g.images[i] = vec![a, b, -a];
            g.images[i + 1] = vec![a];
            g.inverse_images[i] = vec![b];
            g.inverse_images[i + 1] = vec![-b, a, b];
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_consistent() {
        for g in artin_rep(4) {
            assert!(g.is_consistent());
            assert!(g.mul(&g.inv()).is_identity());
        }
    }

    #[test]
    fn braid_relations_hold() {
        let g = artin_rep(2);
        let lhs = g[0].mul(&g[1]).mul(&g[0]);
        let rhs = g[1].mul(&g[0]).mul(&g[1]);
        assert_eq!(lhs, rhs);
        assert_ne!(g[0].mul(&g[1]), g[1].mul(&g[0]));
        let g = artin_rep(4);
        assert_eq!(g[0].mul(&g[2]), g[2].mul(&g[0]));
        assert_eq!(g[1].mul(&g[3]), g[3].mul(&g[1]));
    }

    #[test]
    fn square_of_generator() {
        let g = artin_rep(1);
        let sq = g[0].mul(&g[0]);
        assert_eq!(sq.image(1).to_string(), "x0 x1 x0^-1");
        assert_eq!(sq.image(0).to_string(), "x0 x1 x0 x1^-1 x0^-1");
        assert!(!sq.is_identity());
        assert!(FreeGroupAuto::identity(3).is_identity());
    }
}
