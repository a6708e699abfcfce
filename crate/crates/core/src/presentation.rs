//! Relator tables for the virtual braid group, its stringy and reduced
//! forms, the pure subgroup, the one-object category presentation, and
//! the forbidden-move families.
//!
//! Relators are stored one-sided (`lhs * rhs^{-1}`), exactly as built
//! from the defining equations. Involution relators such as `v1 v1` and
//! `m1,2 M1,2` are kept literally: running `free_reduce` on them would
//! erase them, since free reduction implements those very rules.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Gen};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Sigma,
    V,
    Mu,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub n: usize,
    pub generators: Vec<GenKind>,
    pub relators: Vec<BraidWord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationName {
    VbFull,
    VbReduced,
    Vs,
    VsReduced,
    Vp,
    Sc,
}

impl PresentationName {
    pub const ALL: [PresentationName; 6] = [
        PresentationName::VbFull,
        PresentationName::VbReduced,
        PresentationName::Vs,
        PresentationName::VsReduced,
        PresentationName::Vp,
        PresentationName::Sc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresentationName::VbFull => "vb_full",
            PresentationName::VbReduced => "vb_reduced",
            PresentationName::Vs => "vs",
            PresentationName::VsReduced => "vs_reduced",
            PresentationName::Vp => "vp",
            PresentationName::Sc => "sc",
        }
    }
}

impl fmt::Display for PresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PresentationName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vb_full" => PresentationName::VbFull,
            "vb_reduced" => PresentationName::VbReduced,
            "vs" => PresentationName::Vs,
            "vs_reduced" => PresentationName::VsReduced,
            "vp" => PresentationName::Vp,
            "sc" => PresentationName::Sc,
            other => return Err(Error::UnknownPresentation(other.into())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenName {
    Classical,
    Stringy,
}

impl FromStr for ForbiddenName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "classical" | "forbidden_classical" => ForbiddenName::Classical,
            "stringy" | "forbidden_stringy" => ForbiddenName::Stringy,
            other => return Err(Error::UnknownPresentation(other.into())),
        })
    }
}

/// One-sided relator from an equation `lhs = rhs`.
fn relator(n: usize, lhs: Vec<Gen>, rhs: Vec<Gen>) -> BraidWord {
    let lhs = BraidWord { n, gens: lhs };
    let rhs = BraidWord { n, gens: rhs };
    lhs.concat(&rhs.inverse())
}

fn s(i: usize) -> Gen {
    Gen::sigma(i)
}
fn si(i: usize) -> Gen {
    Gen::sigma_inv(i)
}
fn v(i: usize) -> Gen {
    Gen::v(i)
}
fn m(i: usize, j: usize) -> Gen {
    Gen::mu(i, j)
}

/// Symmetric-group relators (S1), (S2), (S3) on `n` strands.
fn symmetric_relators(n: usize) -> Vec<BraidWord> {
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(relator(n, vec![v(i), v(i)], vec![]));
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(relator(
            n,
            vec![v(i), v(i + 1), v(i)],
            vec![v(i + 1), v(i), v(i + 1)],
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            rels.push(relator(n, vec![v(i), v(j)], vec![v(j), v(i)]));
        }
    }
    rels
}

fn vb_full(n: usize) -> Vec<BraidWord> {
    let mut rels = Vec::new();
    // (B1)
    for i in 1..n.saturating_sub(1) {
        rels.push(relator(
            n,
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        ));
    }
    // (B2)
    for i in 1..n {
        for j in i + 2..n {
            rels.push(relator(n, vec![s(i), s(j)], vec![s(j), s(i)]));
        }
    }
    rels.extend(symmetric_relators(n));
    // (M1)
    for i in 1..n.saturating_sub(1) {
        rels.push(relator(
            n,
            vec![v(i), s(i + 1), v(i)],
            vec![v(i + 1), s(i), v(i + 1)],
        ));
    }
    // (M2), both placements of the crossing against a distant virtual
    for i in 1..n {
        for j in 1..n {
            if j + 1 < i || i + 1 < j {
                rels.push(relator(n, vec![s(i), v(j)], vec![v(j), s(i)]));
            }
        }
    }
    rels
}

fn vb_reduced(n: usize) -> Vec<BraidWord> {
    let mut rels = symmetric_relators(n);
    for j in 3..n {
        rels.push(relator(n, vec![s(1), v(j)], vec![v(j), s(1)]));
    }
    if n >= 3 {
        let a = vec![v(1), s(1), v(1)];
        let b = vec![v(2), s(1), v(2)];
        let mut lhs = a.clone();
        lhs.extend_from_slice(&b);
        lhs.extend_from_slice(&a);
        let mut rhs = b.clone();
        rhs.extend_from_slice(&a);
        rhs.extend_from_slice(&b);
        rels.push(relator(n, lhs, rhs));
    }
    if n >= 4 {
        let conj = vec![v(2), v(3), v(1), v(2), s(1), v(2), v(1), v(3), v(2)];
        let mut lhs = vec![s(1)];
        lhs.extend_from_slice(&conj);
        let mut rhs = conj;
        rhs.push(s(1));
        rels.push(relator(n, lhs, rhs));
    }
    rels
}

/// All ordered pairs of distinct strands.
fn connector_indices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn vs(n: usize) -> Vec<BraidWord> {
    let mut rels = Vec::new();
    // conjugation action of each generating transposition on each
    // connector: v_k m_{i,j} v_k = m_{(k k+1)i, (k k+1)j}
    for k in 1..n {
        let swap = |t: usize| {
            if t == k {
                k + 1
            } else if t == k + 1 {
                k
            } else {
                t
            }
        };
        for (i, j) in connector_indices(n) {
            rels.push(relator(
                n,
                vec![v(k), m(i, j), v(k)],
                vec![m(swap(i), swap(j))],
            ));
        }
    }
    // basic algebraic braiding relation
    if n >= 3 {
        rels.push(relator(
            n,
            vec![m(1, 2), m(1, 3), m(2, 3)],
            vec![m(2, 3), m(1, 3), m(1, 2)],
        ));
    }
    // basic commuting relation
    if n >= 4 {
        rels.push(relator(n, vec![m(1, 2), m(3, 4)], vec![m(3, 4), m(1, 2)]));
    }
    rels.extend(symmetric_relators(n));
    rels
}

fn vs_reduced(n: usize) -> Vec<BraidWord> {
    let mut rels = Vec::new();
    for j in 3..n {
        rels.push(relator(n, vec![m(1, 2), v(j)], vec![v(j), m(1, 2)]));
    }
    if n >= 3 {
        // m12 . v2 m12 v2 . v1v2 m12 v2v1 = v1v2 m12 v2v1 . v2 m12 v2 . m12
        let a = vec![m(1, 2)];
        let b = vec![v(2), m(1, 2), v(2)];
        let c = vec![v(1), v(2), m(1, 2), v(2), v(1)];
        let mut lhs = a.clone();
        lhs.extend_from_slice(&b);
        lhs.extend_from_slice(&c);
        let mut rhs = c;
        rhs.extend_from_slice(&b);
        rhs.extend_from_slice(&a);
        rels.push(relator(n, lhs, rhs));
    }
    if n >= 4 {
        let conj = vec![v(2), v(3), v(1), v(2), m(1, 2), v(2), v(1), v(3), v(2)];
        let mut lhs = vec![m(1, 2)];
        lhs.extend_from_slice(&conj);
        let mut rhs = conj;
        rhs.push(m(1, 2));
        rels.push(relator(n, lhs, rhs));
    }
    rels.extend(symmetric_relators(n));
    rels
}

fn vp(n: usize) -> Vec<BraidWord> {
    let mut rels = Vec::new();
    // three-term algebraic braiding relators over all ordered triples
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && j != k && i != k {
                    rels.push(relator(
                        n,
                        vec![m(i, j), m(i, k), m(j, k)],
                        vec![m(j, k), m(i, k), m(i, j)],
                    ));
                }
            }
        }
    }
    // disjoint-pair commutators
    for (i, j) in connector_indices(n) {
        for (k, l) in connector_indices(n) {
            if i != k && i != l && j != k && j != l && (i, j) < (k, l) {
                rels.push(relator(n, vec![m(i, j), m(k, l)], vec![m(k, l), m(i, j)]));
                rels.push(relator(n, vec![m(k, l), m(i, j)], vec![m(i, j), m(k, l)]));
            }
        }
    }
    dedup_words(rels)
}

fn sc(n: usize) -> Vec<BraidWord> {
    let mut rels = vec![
        relator(n, vec![m(1, 2), Gen::mu_inv(1, 2)], vec![]),
        relator(n, vec![Gen::mu_inv(1, 2), m(1, 2)], vec![]),
    ];
    rels.extend(vs_reduced(n));
    dedup_words(rels)
}

fn dedup_words(rels: Vec<BraidWord>) -> Vec<BraidWord> {
    let mut seen = std::collections::HashSet::new();
    rels.into_iter()
        .filter(|w| seen.insert(w.gens.clone()))
        .collect()
}

/// The relator table of a named presentation, instantiated on `n` strands.
pub fn relators(name: PresentationName, n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::TooFewStrands {
            name: name.as_str(),
            min: 2,
            n,
        });
    }
    let (generators, rels) = match name {
        PresentationName::VbFull => (vec![GenKind::Sigma, GenKind::V], vb_full(n)),
        PresentationName::VbReduced => (vec![GenKind::Sigma, GenKind::V], vb_reduced(n)),
        PresentationName::Vs => (vec![GenKind::Mu, GenKind::V], vs(n)),
        PresentationName::VsReduced => (vec![GenKind::Mu, GenKind::V], vs_reduced(n)),
        PresentationName::Vp => (vec![GenKind::Mu], vp(n)),
        PresentationName::Sc => (vec![GenKind::Mu, GenKind::V], sc(n)),
    };
    Ok(Presentation {
        name: name.as_str().into(),
        n,
        generators,
        relators: rels,
    })
}

/// Forbidden-move relator tables. These are expected to FAIL in any
/// faithful-enough representation; they are shipped for refutation.
pub fn forbidden_relators(name: ForbiddenName, n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::TooFewStrands {
            name: match name {
                ForbiddenName::Classical => "forbidden_classical",
                ForbiddenName::Stringy => "forbidden_stringy",
            },
            min: 3,
            n,
        });
    }
    let mut rels = Vec::new();
    match name {
        ForbiddenName::Classical => {
            for i in 1..n - 1 {
                // F1: s_i v_{i+1} s_i^{-1} = s_{i+1}^{-1} v_i s_{i+1}
                rels.push(relator(
                    n,
                    vec![s(i), v(i + 1), si(i)],
                    vec![si(i + 1), v(i), s(i + 1)],
                ));
                // F2: s_i^{-1} v_{i+1} s_i = s_{i+1} v_i s_{i+1}^{-1}
                rels.push(relator(
                    n,
                    vec![si(i), v(i + 1), s(i)],
                    vec![s(i + 1), v(i), si(i + 1)],
                ));
            }
        }
        ForbiddenName::Stringy => {
            for i in 1..n - 1 {
                // SF1: m_{i,i+2} m_{i+1,i+2} = m_{i+1,i+2} m_{i,i+2}
                rels.push(relator(
                    n,
                    vec![m(i, i + 2), m(i + 1, i + 2)],
                    vec![m(i + 1, i + 2), m(i, i + 2)],
                ));
                // SF2: m_{i,i+2} m_{i,i+1} = m_{i,i+1} m_{i,i+2}
                rels.push(relator(
                    n,
                    vec![m(i, i + 2), m(i, i + 1)],
                    vec![m(i, i + 1), m(i, i + 2)],
                ));
            }
        }
    }
    Ok(Presentation {
        name: match name {
            ForbiddenName::Classical => "forbidden_classical".into(),
            ForbiddenName::Stringy => "forbidden_stringy".into(),
        },
        n,
        generators: match name {
            ForbiddenName::Classical => vec![GenKind::Sigma, GenKind::V],
            ForbiddenName::Stringy => vec![GenKind::Mu],
        },
        relators: rels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn choose(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    #[test]
    fn every_relator_has_trivial_permutation() {
        for n in 2..=6 {
            for name in PresentationName::ALL {
                let p = relators(name, n).unwrap();
                for r in &p.relators {
                    assert!(
                        Permutation::of_word(r).is_identity(),
                        "{} n={} relator {} has nontrivial permutation",
                        p.name,
                        n,
                        r
                    );
                }
            }
            if n >= 3 {
                for f in [ForbiddenName::Classical, ForbiddenName::Stringy] {
                    let p = forbidden_relators(f, n).unwrap();
                    for r in &p.relators {
                        assert!(Permutation::of_word(r).is_identity());
                    }
                }
            }
        }
    }

    #[test]
    fn relators_use_only_admitted_generators() {
        for n in 2..=5 {
            for name in PresentationName::ALL {
                let p = relators(name, n).unwrap();
                for r in &p.relators {
                    for g in &r.gens {
                        let kind = match g {
                            crate::word::Gen::Sigma { .. } => GenKind::Sigma,
                            crate::word::Gen::V { .. } => GenKind::V,
                            crate::word::Gen::Mu { .. } => GenKind::Mu,
                        };
                        assert!(p.generators.contains(&kind), "{} uses {:?}", p.name, kind);
                    }
                }
            }
        }
    }

    #[test]
    fn vb_full_contains_the_expected_relator_forms() {
        let p = relators(PresentationName::VbFull, 3).unwrap();
        let b1 = BraidWord::parse("s1 s2 s1 S2 S1 S2", 3).unwrap();
        let m1 = BraidWord::parse("v1 s2 v1 v2 S1 v2", 3).unwrap();
        assert!(p.relators.contains(&b1));
        assert!(p.relators.contains(&m1));
    }

    #[test]
    fn vp_counts_match_the_orbit_combinatorics() {
        // exactly 6*C(n,3) braiding relators and 24*C(n,4) commutators,
        // with no formally identical duplicates to remove
        for n in 2..=6 {
            let p = relators(PresentationName::Vp, n).unwrap();
            let aybe = p.relators.iter().filter(|w| w.len() == 6).count();
            let comm = p.relators.iter().filter(|w| w.len() == 4).count();
            assert_eq!(aybe, 6 * choose(n, 3), "n={n}");
            assert_eq!(comm, 24 * choose(n, 4), "n={n}");
            assert_eq!(p.relators.len(), aybe + comm);
        }
        // VP_2 is free: empty relator list
        assert!(relators(PresentationName::Vp, 2).unwrap().relators.is_empty());
    }

    #[test]
    fn vp_three_strands_is_exactly_the_six_braiding_relators() {
        let p = relators(PresentationName::Vp, 3).unwrap();
        assert_eq!(p.relators.len(), 6);
        let base = BraidWord::parse("m1,2 m1,3 m2,3 M1,2 M1,3 M2,3", 3).unwrap();
        assert!(p.relators.contains(&base));
    }

    #[test]
    fn forbidden_tables() {
        let p = forbidden_relators(ForbiddenName::Stringy, 3).unwrap();
        let sf1 = BraidWord::parse("m1,3 m2,3 M1,3 M2,3", 3).unwrap();
        assert!(p.relators.contains(&sf1));
        let p = forbidden_relators(ForbiddenName::Classical, 3).unwrap();
        let f1 = BraidWord::parse("s1 v2 S1 S2 v1 s2", 3).unwrap();
        assert!(p.relators.contains(&f1));
        assert!(forbidden_relators(ForbiddenName::Stringy, 2).is_err());
    }

    #[test]
    fn orbit_action_maps_relators_to_relators() {
        // relabeling every connector of a vp relator by a permutation
        // lands on another relator of the same table
        let n = 4;
        let p = relators(PresentationName::Vp, n).unwrap();
        let perms = [
            Permutation::transposition(n, 1, 2),
            Permutation::transposition(n, 2, 4),
            Permutation::from_image(vec![2, 3, 4, 1]).unwrap(),
        ];
        for tau in &perms {
            for r in &p.relators {
                let mapped = BraidWord {
                    n,
                    gens: r.gens.iter().map(|&g| tau.act(g).unwrap()).collect(),
                };
                assert!(p.relators.contains(&mapped));
            }
        }
    }

    #[test]
    fn too_few_strands_is_an_error() {
        assert!(relators(PresentationName::Vp, 1).is_err());
    }
}
