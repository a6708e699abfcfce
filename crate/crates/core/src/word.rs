//! Generator alphabet and words for the virtual braid group and its
//! stringy reformulation.
//!
//! A word is read left to right in diagram stacking order: the leftmost
//! token sits at the top of the braid diagram and is applied first when
//! computing the underlying permutation.

use std::fmt;

use crate::error::{Error, Result};

/// A single generator token.
///
/// Strand indices are 1-based. `Sigma` and `V` act on strands `i, i+1`
/// (so `1 <= i <= n-1`); `Mu` connects two distinct strands `i, j` with
/// `1 <= i, j <= n`. `V` is self-inverse and carries no sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// Classical crossing `s<i>` (`inv` marks the inverse crossing).
    Sigma { i: usize, inv: bool },
    /// Virtual crossing `v<i>`.
    V { i: usize },
    /// Connector `m<i>,<j>` between strands `i` and `j`.
    Mu { i: usize, j: usize, inv: bool },
}

impl Gen {
    pub fn sigma(i: usize) -> Self {
        Gen::Sigma { i, inv: false }
    }

    pub fn sigma_inv(i: usize) -> Self {
        Gen::Sigma { i, inv: true }
    }

    pub fn v(i: usize) -> Self {
        Gen::V { i }
    }

    pub fn mu(i: usize, j: usize) -> Self {
        Gen::Mu { i, j, inv: false }
    }

    pub fn mu_inv(i: usize, j: usize) -> Self {
        Gen::Mu { i, j, inv: true }
    }

    /// The inverse token (`V` is its own inverse).
    pub fn inverse(self) -> Self {
        match self {
            Gen::Sigma { i, inv } => Gen::Sigma { i, inv: !inv },
            Gen::V { i } => Gen::V { i },
            Gen::Mu { i, j, inv } => Gen::Mu { i, j, inv: !inv },
        }
    }

    /// True when `self` and `other` cancel as an adjacent pair: formal
    /// inverses, or two equal virtual crossings (v_i^2 = 1).
    pub fn cancels(self, other: Gen) -> bool {
        match (self, other) {
            (Gen::V { i }, Gen::V { i: k }) => i == k,
            (a, b) => a.inverse() == b,
        }
    }

    /// Validate the token's indices against a strand count.
    pub fn check(&self, n: usize) -> Result<()> {
        match *self {
            Gen::Sigma { i, .. } | Gen::V { i } => {
                if i == 0 || i + 1 > n {
                    Err(Error::IndexOutOfRange { index: i, n })
                } else {
                    Ok(())
                }
            }
            Gen::Mu { i, j, .. } => {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
                if j == 0 || j > n {
                    return Err(Error::IndexOutOfRange { index: j, n });
                }
                if i == j {
                    return Err(Error::EqualMuIndices(i));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Sigma { i, inv: false } => write!(f, "s{i}"),
            Gen::Sigma { i, inv: true } => write!(f, "S{i}"),
            Gen::V { i } => write!(f, "v{i}"),
            Gen::Mu { i, j, inv: false } => write!(f, "m{i},{j}"),
            Gen::Mu { i, j, inv: true } => write!(f, "M{i},{j}"),
        }
    }
}

/// A word in the generators, together with its strand count.
///
/// The empty word is the identity element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub gens: Vec<Gen>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, gens: Vec::new() }
    }

    pub fn new(n: usize, gens: Vec<Gen>) -> Result<Self> {
        for g in &gens {
            g.check(n)?;
        }
        Ok(BraidWord { n, gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Parse the whitespace-separated token grammar:
    /// `s<i>` / `S<i>` for classical crossings, `v<i>` for virtual
    /// crossings (an uppercase `V<i>` is accepted and normalized), and
    /// `m<i>,<j>` / `M<i>,<j>` for connectors.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for tok in text.split_whitespace() {
            gens.push(parse_token(tok)?);
        }
        BraidWord::new(n, gens)
    }

    /// Cancel adjacent inverse pairs and doubled virtual crossings until
    /// none remain. Idempotent and length-nonincreasing.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Gen> = Vec::with_capacity(self.gens.len());
        for &g in &self.gens {
            match out.last() {
                Some(&top) if top.cancels(g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        BraidWord { n: self.n, gens: out }
    }

    /// Group inverse: reversed token order with each sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            gens: self.gens.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Concatenation (`self` stacked above `other`).
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.n, other.n);
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        BraidWord { n: self.n, gens }
    }

    /// True when only `Sigma`/`V` tokens occur.
    pub fn is_classical(&self) -> bool {
        !self.gens.iter().any(|g| matches!(g, Gen::Mu { .. }))
    }

    /// True when only `Mu` tokens occur.
    pub fn is_pure_connectors(&self) -> bool {
        self.gens
            .iter()
            .all(|g| matches!(g, Gen::Mu { .. }))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<Gen> {
    let mut chars = tok.chars();
    let head = chars
        .next()
        .ok_or_else(|| Error::Parse("empty token".into()))?;
    let rest = chars.as_str();
    let bad = || Error::Parse(format!("malformed token `{tok}`"));
    match head {
        's' | 'S' => {
            let i: usize = rest.parse().map_err(|_| bad())?;
            Ok(Gen::Sigma { i, inv: head == 'S' })
        }
        // the inverse marker on a virtual crossing is accepted and dropped
        'v' | 'V' => {
            let i: usize = rest.parse().map_err(|_| bad())?;
            Ok(Gen::V { i })
        }
        'm' | 'M' => {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let i: usize = a.parse().map_err(|_| bad())?;
            let j: usize = b.parse().map_err(|_| bad())?;
            Ok(Gen::Mu { i, j, inv: head == 'M' })
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mixed_word() {
        let w = BraidWord::parse("s1 v2 S1", 3).unwrap();
        assert_eq!(
            w.gens,
            vec![Gen::sigma(1), Gen::v(2), Gen::sigma_inv(1)]
        );
        let w = BraidWord::parse("m1,3 M3,1", 3).unwrap();
        assert_eq!(w.gens, vec![Gen::mu(1, 3), Gen::mu_inv(3, 1)]);
    }

    #[test]
    fn parse_rejects_bad_indices() {
        assert!(BraidWord::parse("v0", 3).is_err());
        assert!(BraidWord::parse("s3", 3).is_err());
        assert!(BraidWord::parse("m2,2", 3).is_err());
        assert!(BraidWord::parse("m1,4", 3).is_err());
        assert!(BraidWord::parse("w1", 3).is_err());
        assert!(BraidWord::parse("m1", 3).is_err());
    }

    #[test]
    fn parse_normalizes_inverse_virtual() {
        let w = BraidWord::parse("V2", 3).unwrap();
        assert_eq!(w.gens, vec![Gen::v(2)]);
    }

    #[test]
    fn display_round_trip() {
        for text in ["s1 v2 S1", "m1,3 M3,1 v1", "1"] {
            let w = BraidWord::parse(if text == "1" { "" } else { text }, 4).unwrap();
            let shown = w.to_string();
            let back = BraidWord::parse(if shown == "1" { "" } else { &shown }, 4).unwrap();
            assert_eq!(w, back);
        }
    }

    #[test]
    fn free_reduce_examples() {
        let w = BraidWord::parse("v1 v1", 2).unwrap();
        assert!(w.free_reduce().is_empty());
        let w = BraidWord::parse("s1 S1", 2).unwrap();
        assert!(w.free_reduce().is_empty());
        let w = BraidWord::parse("s1 v2", 3).unwrap();
        assert_eq!(w.free_reduce(), w);
        // nested cancellation
        let w = BraidWord::parse("s1 v2 v2 S1 m1,2", 3).unwrap();
        assert_eq!(w.free_reduce(), BraidWord::parse("m1,2", 3).unwrap());
    }

    #[test]
    fn invert_examples() {
        let w = BraidWord::parse("s1 v2", 3).unwrap();
        assert_eq!(w.inverse(), BraidWord::parse("v2 S1", 3).unwrap());
        assert!(BraidWord::identity(3).inverse().is_empty());
        let w = BraidWord::parse("m1,2", 3).unwrap();
        assert_eq!(w.inverse(), BraidWord::parse("M1,2", 3).unwrap());
    }

    #[test]
    fn word_times_inverse_reduces_to_identity() {
        let w = BraidWord::parse("s1 v2 m1,3 M2,1 S2", 3).unwrap();
        assert!(w.concat(&w.inverse()).free_reduce().is_empty());
        assert!(w.inverse().concat(&w).free_reduce().is_empty());
    }
}
