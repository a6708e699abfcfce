//! Permutations of `{1..n}` and their interaction with braid words.
//!
//! Composition convention, fixed once for the whole crate: words act top
//! to bottom, so `compose(p, q)` applies `p` first and then `q`, and
//! `Permutation::of_word` is a homomorphism for left-to-right word order.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Gen};

/// A bijection of `{1..n}`, stored as the image list: `image[i-1]` is
/// where strand `i` ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Build from an image list (1-based targets). Fails unless the list
    /// is a bijection.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &t in &image {
            if t == 0 || t > n || seen[t - 1] {
                return Err(Error::Parse(format!("not a permutation image: {image:?}")));
            }
            seen[t - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition `(a b)` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Permutation { image }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &t)| t == k + 1)
    }

    /// Apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: self.image.iter().map(|&t| other.apply(t)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (k, &t) in self.image.iter().enumerate() {
            image[t - 1] = k + 1;
        }
        Permutation { image }
    }

    /// The permutation underlying a word: classical and virtual crossings
    /// both transpose their two strands, connectors act trivially.
    pub fn of_word(w: &BraidWord) -> Permutation {
        // position_of[i-1] tracks where strand i currently sits; each
        // crossing swaps the strands occupying positions k, k+1
        let mut position_of: Vec<usize> = (1..=w.n).collect();
        let mut strand_at: Vec<usize> = (1..=w.n).collect();
        for g in &w.gens {
            let k = match *g {
                Gen::Sigma { i, .. } | Gen::V { i } => i,
                Gen::Mu { .. } => continue,
            };
            let (a, b) = (strand_at[k - 1], strand_at[k]);
            strand_at[k - 1] = b;
            strand_at[k] = a;
            position_of[a - 1] = k + 1;
            position_of[b - 1] = k;
        }
        Permutation { image: position_of }
    }

    /// Deterministic factorization into adjacent transpositions: bubble
    /// sort the target arrangement and reverse the recorded swaps. At
    /// most `n(n-1)/2` tokens; a single transposition `(i j)` comes out
    /// as the palindrome `v_i v_{i+1} .. v_{j-1} .. v_{i+1} v_i`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n();
        // arrangement to reach: strand at final position p is inv(p)
        let mut arr: Vec<usize> = self.inverse().image.clone();
        let mut swaps = Vec::new();
        loop {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1) {
                if arr[k] > arr[k + 1] {
                    arr.swap(k, k + 1);
                    swaps.push(k + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let gens = swaps.into_iter().rev().map(Gen::v).collect();
        BraidWord { n, gens }
    }

    /// Relabel a connector token by this permutation: `Mu(i, j)` becomes
    /// `Mu(p(i), p(j))` with the sign kept.
    pub fn act(&self, g: Gen) -> Result<Gen> {
        match g {
            Gen::Mu { i, j, inv } => Ok(Gen::Mu {
                i: self.apply(i),
                j: self.apply(j),
                inv,
            }),
            other => Err(Error::NotAConnector(other.to_string())),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, t) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn permutation_of_generators() {
        let p = Permutation::of_word(&word("s1", 3));
        assert_eq!(p.image(), &[2, 1, 3]);
        let p = Permutation::of_word(&word("m1,3", 3));
        assert!(p.is_identity());
        // leftmost applied first: strand 1 goes 1 -> 2 -> 3
        let p = Permutation::of_word(&word("v1 v2", 3));
        assert_eq!(p.image(), &[3, 1, 2]);
    }

    #[test]
    fn of_word_is_homomorphism() {
        let a = word("s1 v2 m1,3 S2", 3);
        let b = word("v1 s2 M3,1", 3);
        let lhs = Permutation::of_word(&a.concat(&b));
        let rhs = Permutation::of_word(&a).compose(&Permutation::of_word(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn to_word_round_trips_exhaustively_n4() {
        // all permutations of 4 points
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for k in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(k, n);
                    out.push(q);
                }
            }
            out
        }
        for image in perms(4) {
            let p = Permutation::from_image(image).unwrap();
            let w = p.to_word();
            assert!(w.len() <= 6);
            assert_eq!(Permutation::of_word(&w), p);
        }
    }

    #[test]
    fn to_word_transposition_is_the_standard_palindrome() {
        let p = Permutation::transposition(4, 1, 3);
        assert_eq!(p.to_word(), word("v1 v2 v1", 4));
        let p = Permutation::transposition(5, 2, 5);
        assert_eq!(p.to_word(), word("v2 v3 v4 v3 v2", 5));
        let p = Permutation::transposition(4, 2, 3);
        assert_eq!(p.to_word(), word("v2", 4));
        assert!(Permutation::identity(4).to_word().is_empty());
    }

    #[test]
    fn act_on_connectors() {
        let p = Permutation::transposition(3, 2, 3);
        assert_eq!(p.act(Gen::mu(1, 2)).unwrap(), Gen::mu(1, 3));
        let p = Permutation::transposition(3, 1, 2);
        assert_eq!(p.act(Gen::mu(1, 2)).unwrap(), Gen::mu(2, 1));
        let id = Permutation::identity(3);
        assert_eq!(id.act(Gen::mu_inv(3, 1)).unwrap(), Gen::mu_inv(3, 1));
        assert!(id.act(Gen::v(1)).is_err());
    }

    #[test]
    fn act_composes() {
        let p = Permutation::transposition(4, 1, 2);
        let q = Permutation::transposition(4, 2, 4);
        let g = Gen::mu(1, 3);
        let both = p.compose(&q);
        assert_eq!(
            q.act(p.act(g).unwrap()).unwrap(),
            both.act(g).unwrap()
        );
    }
}
