//! Presentation-change maps between the classical and stringy generator
//! sets, slide normalization onto the pure-times-permutation form, and a
//! conservative word-equality certifier.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rep::VirtualRep;
use crate::word::{BraidWord, Gen};

/// Rewrite a classical/virtual word over connectors: `s_i -> m_{i,i+1} v_i`,
/// `S_i -> v_i M_{i,i+1}`, virtual crossings unchanged. The result is
/// freely reduced. Connector tokens in the input are an error.
pub fn to_stringy(w: &BraidWord) -> Result<BraidWord> {
    let mut gens = Vec::with_capacity(2 * w.len());
    for &g in &w.gens {
        match g {
            Gen::Sigma { i, inv: false } => {
                gens.push(Gen::mu(i, i + 1));
                gens.push(Gen::v(i));
            }
            Gen::Sigma { i, inv: true } => {
                gens.push(Gen::v(i));
                gens.push(Gen::mu_inv(i, i + 1));
            }
            Gen::V { .. } => gens.push(g),
            Gen::Mu { .. } => return Err(Error::UnexpectedConnector),
        }
    }
    Ok(BraidWord { n: w.n, gens }.free_reduce())
}

/// Expansion of a single connector into classical/virtual generators:
/// `m_{i,i+1} = s_i v_i`, adjacent cases directly; a general `m_{i,j}`
/// with `i < j` through its symmetric virtual conjugate, and `m_{j,i}`
/// by a further conjugation with the transposition word `t_{ij}`.
fn expand_connector(n: usize, i: usize, j: usize, inv: bool) -> Vec<Gen> {
    debug_assert!(i != j);
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    // m_{lo,hi} = v_{hi-1} .. v_{lo+1}  (s_lo v_lo)  v_{lo+1} .. v_{hi-1}
    let mut core = Vec::new();
    for k in (lo + 1..hi).rev() {
        core.push(Gen::v(k));
    }
    core.push(Gen::sigma(lo));
    core.push(Gen::v(lo));
    for k in lo + 1..hi {
        core.push(Gen::v(k));
    }
    let word = if i < j {
        core
    } else {
        // m_{hi,lo} = t_{lo,hi} m_{lo,hi} t_{lo,hi}
        let t = Permutation::transposition(n, lo, hi).to_word().gens;
        let mut out = t.clone();
        out.extend_from_slice(&core);
        out.extend_from_slice(&t);
        out
    };
    if inv {
        BraidWord { n, gens: word }.inverse().gens
    } else {
        word
    }
}

/// Rewrite every connector token into classical/virtual generators.
/// Accepts mixed words; the result is freely reduced and has the same
/// underlying permutation.
pub fn to_classical(w: &BraidWord) -> BraidWord {
    let mut gens = Vec::new();
    for &g in &w.gens {
        match g {
            Gen::Mu { i, j, inv } => gens.extend(expand_connector(w.n, i, j, inv)),
            other => gens.push(other),
        }
    }
    BraidWord { n: w.n, gens }.free_reduce()
}

/// Slide normal form: every connector moved to the front, leaving a
/// permutation at the bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideNormal {
    /// Connector-only prefix, freely reduced.
    pub pure: BraidWord,
    /// The permutation carried by the virtual tail; always equals the
    /// permutation of the input word.
    pub tail: Permutation,
}

impl SlideNormal {
    /// Reassemble as `pure * tail.to_word()`.
    pub fn to_word(&self) -> BraidWord {
        self.pure.concat(&self.tail.to_word())
    }
}

/// Sweep the word once, carrying the accumulated permutation of the
/// virtual prefix and relabeling each connector by its inverse action;
/// classical crossings are first rewritten over connectors. O(len * n).
pub fn slide_normalize(w: &BraidWord) -> SlideNormal {
    let stringy = match to_stringy(w) {
        Ok(sw) => sw,
        // mixed words: rewrite only the classical tokens
        Err(_) => {
            let mut gens = Vec::new();
            for &g in &w.gens {
                match g {
                    Gen::Sigma { i, inv: false } => {
                        gens.push(Gen::mu(i, i + 1));
                        gens.push(Gen::v(i));
                    }
                    Gen::Sigma { i, inv: true } => {
                        gens.push(Gen::v(i));
                        gens.push(Gen::mu_inv(i, i + 1));
                    }
                    other => gens.push(other),
                }
            }
            BraidWord { n: w.n, gens }
        }
    };
    let mut prefix = Permutation::identity(w.n);
    let mut prefix_inv = Permutation::identity(w.n);
    let mut pure = Vec::new();
    for &g in &stringy.gens {
        match g {
            Gen::V { i } => {
                let t = Permutation::transposition(w.n, i, i + 1);
                prefix = prefix.compose(&t);
                prefix_inv = t.compose(&prefix_inv);
            }
            Gen::Mu { i, j, inv } => pure.push(Gen::Mu {
                i: prefix_inv.apply(i),
                j: prefix_inv.apply(j),
                inv,
            }),
            Gen::Sigma { .. } => unreachable!("classical tokens were rewritten"),
        }
    }
    SlideNormal {
        pure: BraidWord { n: w.n, gens: pure }.free_reduce(),
        tail: prefix,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::NotEqual => "not-equal",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Conservative equality certificate. `Equal` and `NotEqual` are proofs;
/// `Unknown` is an honest refusal (no decision procedure is attempted).
pub fn certify_equal(w1: &BraidWord, w2: &BraidWord, reps: &[&VirtualRep]) -> Result<Verdict> {
    if w1.n != w2.n {
        return Err(Error::Dimension(format!(
            "strand counts differ: {} vs {}",
            w1.n, w2.n
        )));
    }
    if Permutation::of_word(w1) != Permutation::of_word(w2) {
        return Ok(Verdict::NotEqual);
    }
    let n1 = slide_normalize(w1);
    let n2 = slide_normalize(w2);
    if n1 == n2 {
        return Ok(Verdict::Equal);
    }
    for rep in reps {
        if rep.eval(w1)? != rep.eval(w2)? {
            return Ok(Verdict::NotEqual);
        }
    }
    Ok(Verdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn stringy_images_of_generators() {
        assert_eq!(to_stringy(&word("s1", 2)).unwrap(), word("m1,2 v1", 2));
        assert_eq!(to_stringy(&word("v2", 3)).unwrap(), word("v2", 3));
        assert_eq!(to_stringy(&word("S1", 2)).unwrap(), word("v1 M1,2", 2));
        assert!(to_stringy(&word("m1,2", 2)).is_err());
        // F(s1) * F(S1) reduces to nothing
        let prod = to_stringy(&word("s1", 2))
            .unwrap()
            .concat(&to_stringy(&word("S1", 2)).unwrap());
        assert!(prod.free_reduce().is_empty());
    }

    #[test]
    fn classical_images_of_connectors() {
        assert_eq!(to_classical(&word("m1,2", 2)), word("s1 v1", 2));
        assert_eq!(to_classical(&word("m1,3", 3)), word("v2 s1 v1 v2", 3));
        assert_eq!(to_classical(&word("v1", 2)), word("v1", 2));
        // m2,1 = t12 m12 t12 = v1 s1 v1 v1 -> v1 s1
        assert_eq!(to_classical(&word("m2,1", 2)), word("v1 s1", 2));
    }

    #[test]
    fn classical_preserves_permutation() {
        for text in ["m1,3 v2 m3,1", "m2,1 M1,3 v1 v2", "m3,2 m1,2 M2,3"] {
            let w = word(text, 3);
            assert_eq!(
                Permutation::of_word(&to_classical(&w)),
                Permutation::of_word(&w)
            );
        }
    }

    #[test]
    fn round_trip_classical_words() {
        for text in ["s1", "S2 v1 s1", "s1 s2 s1 v2", "v1 v2 S1 S1 s2"] {
            let w = word(text, 3);
            let back = to_classical(&to_stringy(&w).unwrap());
            assert_eq!(back, w.free_reduce());
        }
    }

    #[test]
    fn slide_normalize_examples() {
        let sn = slide_normalize(&word("v1 m1,2", 2));
        assert_eq!(sn.pure, word("m2,1", 2));
        assert_eq!(sn.tail, Permutation::transposition(2, 1, 2));

        let sn = slide_normalize(&word("s1", 2));
        assert_eq!(sn.pure, word("m1,2", 2));
        assert_eq!(sn.tail, Permutation::transposition(2, 1, 2));

        let w = word("m1,2 m3,4", 4);
        let sn = slide_normalize(&w);
        assert_eq!(sn.pure, w);
        assert!(sn.tail.is_identity());
    }

    #[test]
    fn slide_tail_is_the_word_permutation() {
        for text in ["s1 v2 m1,3", "m2,1 v1 v2 S2", "v2 v1 m1,2 m2,3 v1"] {
            let w = word(text, 3);
            let sn = slide_normalize(&w);
            assert_eq!(sn.tail, Permutation::of_word(&w));
            assert!(sn.pure.is_pure_connectors());
        }
    }

    /// Naive right-to-left sweep used as an independent oracle for
    /// confluence of the sliding rules.
    fn slide_normalize_rtl(w: &BraidWord) -> SlideNormal {
        let stringy = {
            let mut gens = Vec::new();
            for &g in &w.gens {
                match g {
                    Gen::Sigma { i, inv: false } => {
                        gens.push(Gen::mu(i, i + 1));
                        gens.push(Gen::v(i));
                    }
                    Gen::Sigma { i, inv: true } => {
                        gens.push(Gen::v(i));
                        gens.push(Gen::mu_inv(i, i + 1));
                    }
                    other => gens.push(other),
                }
            }
            BraidWord { n: w.n, gens }
        };
        let mut pure: Vec<Gen> = Vec::new();
        let mut tail = Permutation::identity(w.n);
        for &g in stringy.gens.iter().rev() {
            match g {
                Gen::Mu { .. } => pure.insert(0, g),
                Gen::V { i } => {
                    let t = Permutation::transposition(w.n, i, i + 1);
                    // push the virtual crossing right through every
                    // connector collected so far, relabeling each
                    for p in pure.iter_mut() {
                        *p = t.act(*p).unwrap();
                    }
                    tail = t.compose(&tail);
                }
                Gen::Sigma { .. } => unreachable!(),
            }
        }
        SlideNormal {
            pure: BraidWord { n: w.n, gens: pure }.free_reduce(),
            tail,
        }
    }

    #[test]
    fn sliding_is_confluent() {
        let words = [
            "s1 v2 m1,3 M2,1 v1",
            "v1 v2 v3 m1,4 s2 S3",
            "m2,1 m4,3 v2 v1 m1,3 v3",
        ];
        for text in words {
            let w = word(text, 4);
            assert_eq!(slide_normalize(&w), slide_normalize_rtl(&w));
        }
    }

    #[test]
    fn certify_trivial_cases() {
        let reps: [&VirtualRep; 0] = [];
        assert_eq!(
            certify_equal(&word("v1 v1", 2), &BraidWord::identity(2), &reps).unwrap(),
            Verdict::Equal
        );
        // same permutation, different normal forms: without a separating
        // representation this must stay honest
        assert_eq!(
            certify_equal(&word("s1", 2), &word("v1", 2), &reps).unwrap(),
            Verdict::Unknown
        );
        // different permutations are refuted outright
        assert_eq!(
            certify_equal(&word("s1", 3), &word("v2", 3), &reps).unwrap(),
            Verdict::NotEqual
        );
    }
}
