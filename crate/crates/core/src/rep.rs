//! Evaluation of braid words as exact matrices, from an algebraic
//! Yang-Baxter operator (for the full generator set) or a braided Hecke
//! operator (for classical/virtual words), plus relator verification.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{
    check_aybe, check_braided_ybe, check_hecke_quadratic, embed_pair, perm_operator, swap_operator,
    ExactMatrix,
};
use crate::perm::Permutation;
use crate::presentation::Presentation;
use crate::ring::Value;
use crate::word::{BraidWord, Gen};

/// A validated algebraic Yang-Baxter operator on `V (x) V`.
///
/// Connectors map to the operator embedded at their factor pair (the
/// reversed pair `m_{j,i}` with `j > i` lands on the swap-conjugated
/// matrix automatically), virtual crossings to factor swaps, classical
/// crossings through `s_i = m_{i,i+1} v_i`.
#[derive(Debug, Clone)]
pub struct VirtualRep {
    pub name: String,
    pub d: usize,
    rho: ExactMatrix,
    rho_inv: ExactMatrix,
}

impl VirtualRep {
    /// Validation happens here: `rho` must pass the algebraic
    /// Yang-Baxter check and be invertible over its ring.
    pub fn new(name: impl Into<String>, rho: ExactMatrix, d: usize) -> Result<Self> {
        if rho.rows != d * d || rho.cols != d * d {
            return Err(Error::Dimension(format!(
                "operator must be {0}x{0}",
                d * d
            )));
        }
        if !check_aybe(&rho, d)? {
            return Err(Error::FailedCheck(
                "operator fails the algebraic Yang-Baxter equation".into(),
            ));
        }
        let rho_inv = rho.inverse().map_err(|_| {
            Error::FailedCheck("Yang-Baxter operator is not invertible over its ring".into())
        })?;
        Ok(VirtualRep {
            name: name.into(),
            d,
            rho,
            rho_inv,
        })
    }

    pub fn rho(&self) -> &ExactMatrix {
        &self.rho
    }

    fn token_matrix(&self, g: Gen, n: usize) -> Result<ExactMatrix> {
        let d = self.d;
        let ring = self.rho.ring;
        match g {
            Gen::Mu { i, j, inv } => {
                let op = if inv { &self.rho_inv } else { &self.rho };
                embed_pair(op, i, j, n, d)
            }
            Gen::V { i } => Ok(perm_operator(
                &Permutation::transposition(n, i, i + 1),
                d,
                ring,
            )),
            Gen::Sigma { i, inv } => {
                let p = perm_operator(&Permutation::transposition(n, i, i + 1), d, ring);
                if inv {
                    // (m v)^{-1} = v m^{-1}
                    let m = embed_pair(&self.rho_inv, i, i + 1, n, d)?;
                    p.mul(&m)
                } else {
                    let m = embed_pair(&self.rho, i, i + 1, n, d)?;
                    m.mul(&p)
                }
            }
        }
    }

    /// Evaluate one word: the token-wise matrix product in word order.
    pub fn eval(&self, w: &BraidWord) -> Result<ExactMatrix> {
        self.evaluator(w.n).eval(w)
    }

    /// An evaluator that caches token matrices for a fixed strand count.
    pub fn evaluator(&self, n: usize) -> Evaluator<'_> {
        Evaluator {
            rep: self,
            n,
            cache: HashMap::new(),
        }
    }
}

pub struct Evaluator<'a> {
    rep: &'a VirtualRep,
    n: usize,
    cache: HashMap<Gen, ExactMatrix>,
}

impl Evaluator<'_> {
    pub fn eval(&mut self, w: &BraidWord) -> Result<ExactMatrix> {
        debug_assert_eq!(w.n, self.n);
        let dim = self.rep.d.pow(self.n as u32);
        let mut acc = ExactMatrix::identity(self.rep.rho.ring, dim);
        for &g in &w.gens {
            if !self.cache.contains_key(&g) {
                let m = self.rep.token_matrix(g, self.n)?;
                self.cache.insert(g, m);
            }
            acc = acc.mul(&self.cache[&g])?;
        }
        Ok(acc)
    }
}

/// A validated braided Hecke operator: classical crossings map to the
/// operator placed at adjacent factors, virtual crossings to swaps.
#[derive(Debug, Clone)]
pub struct HeckeRep {
    pub name: String,
    pub d: usize,
    pub z: Value,
    r: ExactMatrix,
    r_inv: ExactMatrix,
}

impl HeckeRep {
    pub fn new(name: impl Into<String>, r: ExactMatrix, z: Value, d: usize) -> Result<Self> {
        if !check_braided_ybe(&r, d)? {
            return Err(Error::FailedCheck(
                "Hecke operator fails the braided Yang-Baxter equation".into(),
            ));
        }
        if !check_hecke_quadratic(&r, &z)? {
            return Err(Error::FailedCheck(
                "Hecke operator fails the quadratic relation".into(),
            ));
        }
        let r_inv = r.inverse().map_err(|_| {
            Error::FailedCheck("Hecke operator is not invertible over its ring".into())
        })?;
        Ok(HeckeRep {
            name: name.into(),
            d,
            z,
            r,
            r_inv,
        })
    }

    pub fn r(&self) -> &ExactMatrix {
        &self.r
    }

    /// Evaluate a classical/virtual word. Connector tokens are an error.
    pub fn eval(&self, w: &BraidWord) -> Result<ExactMatrix> {
        let d = self.d;
        let ring = self.r.ring;
        let dim = d.pow(w.n as u32);
        let mut acc = ExactMatrix::identity(ring, dim);
        let mut cache: HashMap<Gen, ExactMatrix> = HashMap::new();
        for &g in &w.gens {
            if !cache.contains_key(&g) {
                let m = match g {
                    Gen::Sigma { i, inv } => {
                        embed_pair(if inv { &self.r_inv } else { &self.r }, i, i + 1, w.n, d)?
                    }
                    Gen::V { i } => {
                        perm_operator(&Permutation::transposition(w.n, i, i + 1), d, ring)
                    }
                    Gen::Mu { .. } => return Err(Error::UnexpectedConnector),
                };
                cache.insert(g, m);
            }
            acc = acc.mul(&cache[&g])?;
        }
        Ok(acc)
    }
}

/// Outcome of evaluating every relator of a presentation.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub presentation: String,
    pub n: usize,
    pub total: usize,
    /// Indices (into the relator table) of relators that did NOT map to
    /// the identity matrix.
    pub failures: Vec<usize>,
}

impl VerifyReport {
    pub fn pass_count(&self) -> usize {
        self.total - self.failures.len()
    }

    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate each relator and report the ones that fail to die.
pub fn verify_relators(pres: &Presentation, rep: &VirtualRep) -> Result<VerifyReport> {
    let mut ev = rep.evaluator(pres.n);
    let mut failures = Vec::new();
    for (k, r) in pres.relators.iter().enumerate() {
        if !ev.eval(r)?.is_identity() {
            failures.push(k);
        }
    }
    Ok(VerifyReport {
        presentation: pres.name.clone(),
        n: pres.n,
        total: pres.relators.len(),
        failures,
    })
}

/// Same report against the Hecke evaluation (classical tables only).
pub fn verify_relators_hecke(pres: &Presentation, rep: &HeckeRep) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    for (k, r) in pres.relators.iter().enumerate() {
        if !rep.eval(r)?.is_identity() {
            failures.push(k);
        }
    }
    Ok(VerifyReport {
        presentation: pres.name.clone(),
        n: pres.n,
        total: pres.relators.len(),
        failures,
    })
}

/// The braided form of an algebraic operator: `B = rho * P`.
pub fn braided_from_algebraic(rho: &ExactMatrix, d: usize) -> Result<ExactMatrix> {
    rho.mul(&swap_operator(d, rho.ring))
}

/// The algebraic form of a braided operator: `rho = B * P`.
pub fn algebraic_from_braided(b: &ExactMatrix, d: usize) -> Result<ExactMatrix> {
    b.mul(&swap_operator(d, b.ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::matrix::check_aybe;
    use crate::presentation::{relators, PresentationName};
    use crate::rewrite::{slide_normalize, to_stringy};
    use crate::ring::Ring;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn empty_and_involution_words() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        let m = rep.eval(&BraidWord::identity(3)).unwrap();
        assert!(m.is_identity());
        let m = rep.eval(&word("v1 v1", 3)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn aybe_relator_dies_matching_the_matrix_oracle() {
        // the basic braiding relator of (vp, 3) dies exactly when the
        // operator passes the matrix-level Yang-Baxter check
        let rep = builtins::virtual_rep("hecke2").unwrap();
        assert!(check_aybe(rep.rho(), 2).unwrap());
        let r = word("m1,2 m1,3 m2,3 M1,2 M1,3 M2,3", 3);
        assert!(rep.eval(&r).unwrap().is_identity());
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        let a = word("s1 v2 m1,3", 3);
        let b = word("M2,1 s2 v1", 3);
        let lhs = rep.eval(&a.concat(&b)).unwrap();
        let rhs = rep.eval(&a).unwrap().mul(&rep.eval(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn equivariance_under_conjugation() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        let n = 4;
        let p = Permutation::from_image(vec![3, 1, 4, 2]).unwrap();
        let tw = p.to_word();
        for (i, j) in [(1, 2), (3, 1), (2, 4)] {
            let conj = tw
                .inverse()
                .concat(&BraidWord::new(n, vec![Gen::mu(i, j)]).unwrap())
                .concat(&tw);
            let direct = BraidWord::new(n, vec![p.act(Gen::mu(i, j)).unwrap()]).unwrap();
            assert_eq!(rep.eval(&conj).unwrap(), rep.eval(&direct).unwrap());
        }
    }

    #[test]
    fn sigma_factorizes_as_connector_times_swap() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        let lhs = rep.eval(&word("s1", 2)).unwrap();
        let rhs = rep
            .eval(&word("m1,2", 2))
            .unwrap()
            .mul(&rep.eval(&word("v1", 2)).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // and S1 is its exact inverse
        assert!(rep
            .eval(&word("s1 S1", 2))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn slide_normal_form_preserves_the_value() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        for text in ["s1 v2 m1,3 S2", "v1 m2,3 v2 m1,2", "S1 S1 v2 m3,1"] {
            let w = word(text, 3);
            let sn = slide_normalize(&w);
            let lhs = rep.eval(&w).unwrap();
            let rhs = rep
                .eval(&sn.pure)
                .unwrap()
                .mul(&rep.eval(&sn.tail.to_word()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn stringy_rewrite_preserves_the_value() {
        let rep = builtins::virtual_rep("hecke2").unwrap();
        for text in ["s1 s2 S1", "v1 s2 v2 S2 s1"] {
            let w = word(text, 3);
            assert_eq!(
                rep.eval(&w).unwrap(),
                rep.eval(&to_stringy(&w).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn degenerate_identity_rep_kills_everything() {
        let rep = builtins::virtual_rep("identity2").unwrap();
        for name in [PresentationName::VbFull, PresentationName::Vp] {
            let pres = relators(name, 3).unwrap();
            assert!(verify_relators(&pres, &rep).unwrap().all_pass());
        }
        // even the forbidden tables die under the degenerate operator
        let forb =
            crate::presentation::forbidden_relators(crate::presentation::ForbiddenName::Stringy, 3)
                .unwrap();
        assert!(verify_relators(&forb, &rep).unwrap().all_pass());
    }

    #[test]
    fn hecke_rep_basics() {
        let hk = builtins::hecke_rep("hecke2").unwrap();
        // quadratic relation at the word level: T(s1)^2 - z T(s1) - I = 0
        let t = hk.eval(&word("s1", 2)).unwrap();
        let t2 = hk.eval(&word("s1 s1", 2)).unwrap();
        let rhs = t
            .scale(&hk.z)
            .add(&ExactMatrix::identity(Ring::Laurent, 4))
            .unwrap();
        assert_eq!(t2, rhs);
        // braid relator dies
        assert!(hk
            .eval(&word("s1 s2 s1 S2 S1 S2", 3))
            .unwrap()
            .is_identity());
        // mixed relator dies for factor-placed operators
        assert!(hk
            .eval(&word("v1 s2 v1 v2 S1 v2", 3))
            .unwrap()
            .is_identity());
        assert!(hk.eval(&word("m1,2", 2)).is_err());
    }
}
