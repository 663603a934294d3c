//! Elements of the symmetric group Σ_n.
//!
//! Images are exposed 1-based, matching the index convention used everywhere
//! else in the crate. Composition follows function notation:
//! `a.compose(&b)` is `a ∘ b`, i.e. `b` is applied first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: map[i] = σ(i + 1) - 1
    map: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            map: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// The transposition exchanging `a` and `b` (1-based) in Σ_n.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n, "transposition out of range");
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a - 1, b - 1);
        Permutation { map }
    }

    /// The order-reversing involution i ↦ n + 1 - i.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            map: (0..n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// σ(i) for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Permutation {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x] = i;
        }
        Permutation { map }
    }

    /// σ^p, with σ^0 the identity.
    pub fn pow(&self, p: usize) -> Permutation {
        (0..p).fold(Permutation::identity(self.degree()), |acc, _| acc.compose(self))
    }

    /// 0 for even permutations, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        let mut seen = vec![false; self.map.len()];
        let mut transpositions = 0usize;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.map[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        (transpositions % 2) as u8
    }

    pub fn sign(&self) -> i32 {
        if self.parity() == 0 {
            1
        } else {
            -1
        }
    }

    /// Applies the slot permutation Φ_σ to a pure tensor `x_1 ⊗ … ⊗ x_n`:
    /// position `j` of the result holds `x_{σ⁻¹(j)}`.
    pub fn permute_slots<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(xs.len(), self.degree(), "slot count differs from permutation degree");
        let inv = self.inverse();
        inv.map.iter().map(|&src| xs[src].clone()).collect()
    }

    /// All of Σ_n in lexicographic order of image tuples.
    pub fn all(n: usize) -> Vec<Permutation> {
        let total: usize = (1..=n).product();
        (0..total).map(|r| Permutation::unrank(n, r)).collect()
    }

    /// Lexicographic rank in Σ_n (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.map.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.map[i + 1..].iter().filter(|&&x| x < self.map[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let map = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { map }
    }

    /// The permutation of `Σ_{Σ sizes}` that moves whole blocks the way `self`
    /// moves single points.
    ///
    /// Block `j` (of size `sizes[j-1]`) holds consecutive points. With `β` the
    /// result, `β⁻¹` lists the points of blocks `σ⁻¹(1), σ⁻¹(2), …` in order;
    /// this is the permutation for which `(f·σ) ∘_i g = (f ∘_{σ(i)} g)·β`.
    pub fn block_permutation(&self, sizes: &[usize]) -> Permutation {
        assert_eq!(sizes.len(), self.degree(), "one block size per point");
        let mut starts = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in sizes {
            starts.push(acc);
            acc += s;
        }
        let inv = self.inverse();
        let seq: Vec<usize> = inv
            .map
            .iter()
            .flat_map(|&block| (starts[block]..starts[block] + sizes[block]).collect::<Vec<_>>())
            .collect();
        // seq is β⁻¹ (0-based)
        Permutation { map: seq }.inverse()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 3]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_images(&[2, 1, 3]).unwrap();
        let b = Permutation::from_images(&[1, 3, 2]).unwrap();
        // (a∘b)(2) = a(3) = 3, (a∘b)(3) = a(2) = 1
        assert_eq!(a.compose(&b).images(), vec![2, 3, 1]);
        assert_eq!(b.compose(&a).images(), vec![3, 1, 2]);
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::transposition(5, 1, 3).sign(), -1);
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap().sign(), 1);
        assert_eq!(Permutation::reversal(3).sign(), -1);
        assert_eq!(Permutation::reversal(5).sign(), 1);
    }

    #[test]
    fn rank_unrank_enumerates_lexicographically() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for (r, p) in all.iter().enumerate() {
            assert_eq!(p.rank(), r);
        }
        for w in all.windows(2) {
            assert!(w[0].images() < w[1].images());
        }
    }

    #[test]
    fn permute_slots_matches_phi_formula() {
        let tau12 = Permutation::transposition(3, 1, 2);
        assert_eq!(tau12.permute_slots(&['a', 'b', 'c']), vec!['b', 'a', 'c']);
        let cyc = Permutation::from_images(&[2, 3, 1]).unwrap();
        // position j receives x_{σ⁻¹(j)}; σ⁻¹ = (3,1,2)
        assert_eq!(cyc.permute_slots(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    #[test]
    fn pow_wraps_to_identity() {
        let c = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert!(c.pow(3).is_identity());
        assert!(c.pow(0).is_identity());
        assert_eq!(c.pow(2), c.inverse());
    }
}
