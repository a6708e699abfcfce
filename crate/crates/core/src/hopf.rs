//! Finite-dimensional bialgebra/Hopf-algebra data given by structure
//! constants, with exact axiom checkers for the Hopf, quasitriangular,
//! ribbon, and right-integral layers.
//!
//! Bilinearity reduces every axiom to finitely many basis checks, so
//! each checker simply enumerates basis elements and compares exact
//! coefficient vectors.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::ring::{value_from_json, Ring, Value};

/// Element of the algebra (or of a tensor power): a dense coefficient
/// vector over the basis (respectively over product basis indices).
pub type Elem = Vec<Value>;

#[derive(Debug, Clone)]
pub struct HopfData {
    pub name: String,
    pub ring: Ring,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Elem,
    pub counit: Elem,
    /// `mult[i][j]` is the coefficient vector of `e_i * e_j`.
    pub mult: Vec<Vec<Elem>>,
    /// Sparse coproduct: `comult[k]` lists `(i, j, c)` with
    /// `Delta(e_k) = sum c * e_i (x) e_j`.
    pub comult: Vec<Vec<(usize, usize, Value)>>,
    /// Antipode as a matrix on coefficient vectors.
    pub antipode: Vec<Vec<Value>>,
    /// Optional special grouplike `G`.
    pub grouplike: Option<Elem>,
    /// Optional Yang-Baxter element as a list of pairs: `rho = sum a (x) b`.
    pub yang_baxter: Option<Vec<(Elem, Elem)>>,
    /// Optional right integral functional.
    pub integral: Option<Elem>,
}

impl HopfData {
    pub fn zero(&self) -> Elem {
        vec![Value::zero(self.ring); self.dim]
    }

    pub fn basis_elem(&self, k: usize) -> Elem {
        let mut e = self.zero();
        e[k] = Value::one(self.ring);
        e
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn apply_antipode(&self, a: &Elem) -> Elem {
        self.apply_matrix(&self.antipode, a)
    }

    fn apply_matrix(&self, m: &[Vec<Value>], a: &Elem) -> Elem {
        let mut out = self.zero();
        for (r, row) in m.iter().enumerate() {
            let mut acc = Value::zero(self.ring);
            for (c, mc) in row.iter().enumerate() {
                if !mc.is_zero() && !a[c].is_zero() {
                    acc = &acc + &(mc * &a[c]);
                }
            }
            out[r] = acc;
        }
        out
    }

    /// `s^p` for any integer power (negative powers use the inverse
    /// antipode, which must exist as an exact matrix inverse).
    pub fn antipode_power(&self, a: &Elem, p: i64) -> Result<Elem> {
        if p == 0 {
            return Ok(a.clone());
        }
        let m = if p > 0 {
            self.antipode.clone()
        } else {
            self.antipode_inverse()?
        };
        let mut out = a.clone();
        for _ in 0..p.unsigned_abs() {
            out = self.apply_matrix(&m, &out);
        }
        Ok(out)
    }

    pub fn antipode_inverse(&self) -> Result<Vec<Vec<Value>>> {
        let m = self.antipode_matrix().inverse()?;
        Ok((0..self.dim)
            .map(|r| (0..self.dim).map(|c| m.get(r, c).clone()).collect())
            .collect())
    }

    fn antipode_matrix(&self) -> ExactMatrix {
        let rows = self
            .antipode
            .iter()
            .map(|r| r.to_vec())
            .collect::<Vec<_>>();
        ExactMatrix::from_rows(self.ring, rows).expect("antipode matrix is well formed")
    }

    pub fn counit_of(&self, a: &Elem) -> Value {
        let mut acc = Value::zero(self.ring);
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&self.counit[k] * c);
            }
        }
        acc
    }

    pub fn integral_of(&self, a: &Elem) -> Result<Value> {
        let lam = self
            .integral
            .as_ref()
            .ok_or(Error::MissingStructure("integral"))?;
        let mut acc = Value::zero(self.ring);
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&lam[k] * c);
            }
        }
        Ok(acc)
    }

    /// Invert an algebra element by solving `a * y = 1` as a linear
    /// system in the left-multiplication operator.
    pub fn invert_elem(&self, a: &Elem) -> Result<Elem> {
        let mut cols = Vec::new();
        for c in 0..self.dim {
            cols.push(self.mul(a, &self.basis_elem(c)));
        }
        let mut m = ExactMatrix::zero(self.ring, self.dim, self.dim);
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        let inv = m.inverse().map_err(|_| Error::NotInvertible)?;
        let mut y = self.zero();
        for r in 0..self.dim {
            let mut acc = Value::zero(self.ring);
            for (c, u) in self.unit.iter().enumerate() {
                if !u.is_zero() {
                    acc = &acc + &(inv.get(r, c) * u);
                }
            }
            y[r] = acc;
        }
        // left inverses of algebra elements need not be two-sided in a
        // noncommutative algebra; reject one-sided accidents
        if !self.is_unit_elem(&self.mul(&y, a)) || !self.is_unit_elem(&self.mul(a, &y)) {
            return Err(Error::NotInvertible);
        }
        Ok(y)
    }

    pub fn is_unit_elem(&self, a: &Elem) -> bool {
        a == &self.unit
    }

    /// Integer power of an invertible element.
    pub fn elem_power(&self, a: &Elem, p: i64) -> Result<Elem> {
        let base = if p >= 0 { a.clone() } else { self.invert_elem(a)? };
        let mut out = self.unit.clone();
        for _ in 0..p.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        Ok(out)
    }

    /// Drinfeld element `u = sum s(b) a` for `rho = sum a (x) b`.
    pub fn drinfeld_u(&self) -> Result<Elem> {
        let rho = self
            .yang_baxter
            .as_ref()
            .ok_or(Error::MissingStructure("yang_baxter"))?;
        let mut u = self.zero();
        for (a, b) in rho {
            let t = self.mul(&self.apply_antipode(b), a);
            for (k, v) in t.iter().enumerate() {
                u[k] = &u[k] + v;
            }
        }
        Ok(u)
    }

    // ---- tensor-power helpers (dense vectors over product indices) ----

    pub fn tensor_dim(&self, k: usize) -> usize {
        self.dim.pow(k as u32)
    }

    pub fn tensor_unit(&self, k: usize) -> Elem {
        let mut acc = vec![Value::one(self.ring)];
        for _ in 0..k {
            acc = self.tensor_of(&acc, &self.unit);
        }
        acc
    }

    /// Outer tensor product of a `j`-fold and a 1-fold element.
    fn tensor_of(&self, a: &[Value], b: &Elem) -> Vec<Value> {
        let mut out = vec![Value::zero(self.ring); a.len() * self.dim];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[i * self.dim + j] = ca * cb;
                }
            }
        }
        out
    }

    /// Componentwise product in `A^{(x) k}`.
    pub fn tensor_mul(&self, k: usize, a: &[Value], b: &[Value]) -> Vec<Value> {
        let mut out = vec![Value::zero(self.ring); self.tensor_dim(k)];
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (ib, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                // multiply factorwise: the result fans out over products
                let mut terms: Vec<(usize, Value)> = vec![(0, ca * cb)];
                let mut sa = ia;
                let mut sb = ib;
                let mut digits_a = vec![0usize; k];
                let mut digits_b = vec![0usize; k];
                for t in (0..k).rev() {
                    digits_a[t] = sa % self.dim;
                    digits_b[t] = sb % self.dim;
                    sa /= self.dim;
                    sb /= self.dim;
                }
                for t in 0..k {
                    let prod = &self.mult[digits_a[t]][digits_b[t]];
                    let mut next = Vec::new();
                    for (idx, coeff) in &terms {
                        for (e, pc) in prod.iter().enumerate() {
                            if !pc.is_zero() {
                                next.push((idx * self.dim + e, coeff * pc));
                            }
                        }
                    }
                    terms = next;
                }
                for (idx, coeff) in terms {
                    out[idx] = &out[idx] + &coeff;
                }
            }
        }
        out
    }

    /// `rho` as a dense element of `A (x) A`.
    pub fn rho_tensor(&self) -> Result<Vec<Value>> {
        let rho = self
            .yang_baxter
            .as_ref()
            .ok_or(Error::MissingStructure("yang_baxter"))?;
        let mut out = vec![Value::zero(self.ring); self.tensor_dim(2)];
        for (a, b) in rho {
            let t = self.tensor_of(a, b);
            for (i, v) in t.iter().enumerate() {
                out[i] = &out[i] + v;
            }
        }
        Ok(out)
    }

    /// Place a two-fold tensor into factors `(i, j)` of `A^{(x) 3}`
    /// (1-based), unit elsewhere.
    pub fn rho_placed(&self, i: usize, j: usize) -> Result<Vec<Value>> {
        let rho = self
            .yang_baxter
            .as_ref()
            .ok_or(Error::MissingStructure("yang_baxter"))?;
        let mut out = vec![Value::zero(self.ring); self.tensor_dim(3)];
        for (a, b) in rho {
            let mut factors: [&Elem; 3] = [&self.unit, &self.unit, &self.unit];
            factors[i - 1] = a;
            factors[j - 1] = b;
            let mut acc = vec![Value::one(self.ring)];
            for f in factors {
                acc = self.tensor_of(&acc, f);
            }
            for (t, v) in acc.iter().enumerate() {
                out[t] = &out[t] + v;
            }
        }
        Ok(out)
    }

    /// Coproduct of a general element, as a dense 2-tensor.
    pub fn delta(&self, a: &Elem) -> Vec<Value> {
        let mut out = vec![Value::zero(self.ring); self.tensor_dim(2)];
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, d) in &self.comult[k] {
                let idx = i * self.dim + j;
                out[idx] = &out[idx] + &(c * d);
            }
        }
        out
    }

    pub fn load(json: &str) -> Result<HopfData> {
        let raw: RawHopf = serde_json::from_str(json)?;
        raw.build()
    }
}

// --- deserialization ------------------------------------------------------

#[derive(Deserialize)]
struct RawHopf {
    #[serde(default)]
    name: String,
    ring: Ring,
    dim: usize,
    #[serde(default)]
    basis: Vec<String>,
    unit: Vec<serde_json::Value>,
    counit: Vec<serde_json::Value>,
    mult: Vec<Vec<Vec<serde_json::Value>>>,
    comult: Vec<Vec<(usize, usize, serde_json::Value)>>,
    antipode: Vec<Vec<serde_json::Value>>,
    #[serde(default)]
    grouplike: Option<Vec<serde_json::Value>>,
    #[serde(default)]
    yang_baxter: Option<Vec<(Vec<serde_json::Value>, Vec<serde_json::Value>)>>,
    #[serde(default)]
    integral: Option<Vec<serde_json::Value>>,
}

impl RawHopf {
    fn build(self) -> Result<HopfData> {
        let ring = self.ring;
        let dim = self.dim;
        let vecv = |v: &[serde_json::Value]| -> Result<Elem> {
            if v.len() != dim {
                return Err(Error::Parse(format!(
                    "expected vector of length {dim}, got {}",
                    v.len()
                )));
            }
            v.iter().map(|x| value_from_json(ring, x)).collect()
        };
        if self.mult.len() != dim || self.comult.len() != dim || self.antipode.len() != dim {
            return Err(Error::Parse("structure-constant tables must be dim-sized".into()));
        }
        let mut mult = Vec::with_capacity(dim);
        for row in &self.mult {
            if row.len() != dim {
                return Err(Error::Parse("mult table must be dim x dim".into()));
            }
            mult.push(row.iter().map(|v| vecv(v)).collect::<Result<Vec<_>>>()?);
        }
        let comult = self
            .comult
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(i, j, c)| {
                        if *i >= dim || *j >= dim {
                            return Err(Error::Parse("comult index out of range".into()));
                        }
                        Ok((*i, *j, value_from_json(ring, c)?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let antipode = self
            .antipode
            .iter()
            .map(|r| vecv(r))
            .collect::<Result<Vec<_>>>()?;
        let basis = if self.basis.len() == dim {
            self.basis
        } else {
            (0..dim).map(|k| format!("e{k}")).collect()
        };
        Ok(HopfData {
            name: self.name,
            ring,
            dim,
            basis,
            unit: vecv(&self.unit)?,
            counit: vecv(&self.counit)?,
            mult,
            comult,
            antipode,
            grouplike: self.grouplike.as_deref().map(vecv).transpose()?,
            yang_baxter: self
                .yang_baxter
                .map(|pairs| {
                    pairs
                        .iter()
                        .map(|(a, b)| Ok((vecv(a)?, vecv(b)?)))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?,
            integral: self.integral.as_deref().map(vecv).transpose()?,
        })
    }
}

impl<'de> Deserialize<'de> for HopfData {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawHopf::deserialize(de)?;
        raw.build().map_err(|e| D::Error::custom(e.to_string()))
    }
}

// --- axiom checkers -------------------------------------------------------

/// Outcome of one named family of axiom checks.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub name: String,
    pub items: Vec<(String, bool)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }

    fn push(&mut self, label: impl Into<String>, ok: bool) {
        self.items.push((label.into(), ok));
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for (label, ok) in &self.items {
            writeln!(f, "  {} {}", if *ok { "pass" } else { "FAIL" }, label)?;
        }
        Ok(())
    }
}

fn elems_eq(a: &[Value], b: &[Value]) -> bool {
    a == b
}

/// Bialgebra plus antipode axioms, checked basis element by basis element.
pub fn check_hopf_axioms(h: &HopfData) -> AxiomReport {
    let mut rep = AxiomReport {
        name: format!("hopf axioms ({})", h.name),
        items: Vec::new(),
    };
    let dim = h.dim;

    let mut assoc = true;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let l = h.mul(&h.mult[i][j].clone(), &h.basis_elem(k));
                let r = h.mul(&h.basis_elem(i), &h.mult[j][k].clone());
                if !elems_eq(&l, &r) {
                    assoc = false;
                }
            }
        }
    }
    rep.push("multiplication associative", assoc);

    let mut unit_ok = true;
    for i in 0..dim {
        let e = h.basis_elem(i);
        if !elems_eq(&h.mul(&h.unit, &e), &e) || !elems_eq(&h.mul(&e, &h.unit), &e) {
            unit_ok = false;
        }
    }
    rep.push("two-sided unit", unit_ok);

    let mut coassoc = true;
    for k in 0..dim {
        // (Delta (x) 1) Delta vs (1 (x) Delta) Delta as dense 3-tensors
        let mut l = vec![Value::zero(h.ring); h.tensor_dim(3)];
        let mut r = vec![Value::zero(h.ring); h.tensor_dim(3)];
        for (i, j, c) in &h.comult[k] {
            for (p, q, c2) in &h.comult[*i] {
                let idx = (p * dim + q) * dim + j;
                l[idx] = &l[idx] + &(c * c2);
            }
            for (p, q, c2) in &h.comult[*j] {
                let idx = (i * dim + p) * dim + q;
                r[idx] = &r[idx] + &(c * c2);
            }
        }
        if !elems_eq(&l, &r) {
            coassoc = false;
        }
    }
    rep.push("comultiplication coassociative", coassoc);

    let mut counit_ok = true;
    for k in 0..dim {
        let mut left = h.zero();
        let mut right = h.zero();
        for (i, j, c) in &h.comult[k] {
            left[*j] = &left[*j] + &(&h.counit[*i] * c);
            right[*i] = &right[*i] + &(&h.counit[*j] * c);
        }
        let e = h.basis_elem(k);
        if !elems_eq(&left, &e) || !elems_eq(&right, &e) {
            counit_ok = false;
        }
    }
    rep.push("counit law", counit_ok);

    let mut delta_hom = true;
    for i in 0..dim {
        for j in 0..dim {
            let prod = h.delta(&h.mult[i][j].clone());
            let l = h.delta(&h.basis_elem(i));
            let r = h.delta(&h.basis_elem(j));
            if !elems_eq(&prod, &h.tensor_mul(2, &l, &r)) {
                delta_hom = false;
            }
        }
    }
    rep.push("coproduct is an algebra map", delta_hom);

    let unit_delta = elems_eq(&h.delta(&h.unit), &h.tensor_unit(2));
    rep.push("coproduct of the unit", unit_delta);

    let mut eps_hom = true;
    for i in 0..dim {
        for j in 0..dim {
            let prod = h.counit_of(&h.mult[i][j].clone());
            let sep = &h.counit[i] * &h.counit[j];
            if prod != sep {
                eps_hom = false;
            }
        }
    }
    eps_hom &= h.counit_of(&h.unit).is_one();
    rep.push("counit is an algebra map", eps_hom);

    let mut antipode_ok = true;
    for k in 0..dim {
        let mut l = h.zero();
        let mut r = h.zero();
        for (i, j, c) in &h.comult[k] {
            let t = h.mul(&h.apply_antipode(&h.basis_elem(*i)), &h.basis_elem(*j));
            for (t_idx, v) in t.iter().enumerate() {
                l[t_idx] = &l[t_idx] + &(c * v);
            }
            let t = h.mul(&h.basis_elem(*i), &h.apply_antipode(&h.basis_elem(*j)));
            for (t_idx, v) in t.iter().enumerate() {
                r[t_idx] = &r[t_idx] + &(c * v);
            }
        }
        let want: Elem = h
            .unit
            .iter()
            .map(|u| &h.counit[k] * u)
            .collect();
        if !elems_eq(&l, &want) || !elems_eq(&r, &want) {
            antipode_ok = false;
        }
    }
    rep.push("antipode law (both sides)", antipode_ok);

    rep
}

/// Quasitriangular axioms for the stored `rho`, including invertibility,
/// the Drinfeld element, and the algebraic Yang-Baxter equation in
/// `A (x) A (x) A` form.
pub fn check_quasitriangular(h: &HopfData) -> Result<AxiomReport> {
    let mut rep = AxiomReport {
        name: format!("quasitriangular ({})", h.name),
        items: Vec::new(),
    };
    let rho = h.rho_tensor()?;

    // (1) rho Delta(x) = Delta'(x) rho for every basis x
    let mut intertwine = true;
    for k in 0..h.dim {
        let d = h.delta(&h.basis_elem(k));
        let mut dp = vec![Value::zero(h.ring); h.tensor_dim(2)];
        for (i, j, c) in &h.comult[k] {
            let idx = j * h.dim + i;
            dp[idx] = &dp[idx] + c;
        }
        let l = h.tensor_mul(2, &rho, &d);
        let r = h.tensor_mul(2, &dp, &rho);
        if !elems_eq(&l, &r) {
            intertwine = false;
        }
    }
    rep.push("rho Delta = Delta' rho", intertwine);

    // (2) rho13 rho12 = (1 (x) Delta) rho ; rho13 rho23 = (Delta (x) 1) rho
    let r12 = h.rho_placed(1, 2)?;
    let r13 = h.rho_placed(1, 3)?;
    let r23 = h.rho_placed(2, 3)?;
    let pairs = h.yang_baxter.as_ref().unwrap();
    let mut one_delta = vec![Value::zero(h.ring); h.tensor_dim(3)];
    let mut delta_one = vec![Value::zero(h.ring); h.tensor_dim(3)];
    for (a, b) in pairs {
        let db = h.delta(b);
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (idx, c) in db.iter().enumerate() {
                if !c.is_zero() {
                    let t = ia * h.dim * h.dim + idx;
                    one_delta[t] = &one_delta[t] + &(ca * c);
                }
            }
        }
        let da = h.delta(a);
        for (idx, c) in da.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (ib, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    let t = idx * h.dim + ib;
                    delta_one[t] = &delta_one[t] + &(c * cb);
                }
            }
        }
    }
    rep.push(
        "rho13 rho12 = (1 x Delta) rho",
        elems_eq(&h.tensor_mul(3, &r13, &r12), &one_delta),
    );
    rep.push(
        "rho13 rho23 = (Delta x 1) rho",
        elems_eq(&h.tensor_mul(3, &r13, &r23), &delta_one),
    );

    // inverse: (s (x) 1) rho is a two-sided inverse, and equals (1 (x) s^{-1}) rho
    let mut rho_s1 = vec![Value::zero(h.ring); h.tensor_dim(2)];
    for (a, b) in pairs {
        let sa = h.apply_antipode(a);
        for (i, ca) in sa.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    let idx = i * h.dim + j;
                    rho_s1[idx] = &rho_s1[idx] + &(ca * cb);
                }
            }
        }
    }
    let unit2 = h.tensor_unit(2);
    let inv_ok = elems_eq(&h.tensor_mul(2, &rho, &rho_s1), &unit2)
        && elems_eq(&h.tensor_mul(2, &rho_s1, &rho), &unit2);
    rep.push("rho^{-1} = (s x 1) rho", inv_ok);

    let s_inv = h.antipode_inverse()?;
    let mut rho_1si = vec![Value::zero(h.ring); h.tensor_dim(2)];
    for (a, b) in pairs {
        let sb = h.apply_matrix(&s_inv, b);
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in sb.iter().enumerate() {
                if !cb.is_zero() {
                    let idx = i * h.dim + j;
                    rho_1si[idx] = &rho_1si[idx] + &(ca * cb);
                }
            }
        }
    }
    rep.push("(1 x s^{-1}) rho = (s x 1) rho", elems_eq(&rho_1si, &rho_s1));

    // Drinfeld element: u invertible with s^2(x) = u x u^{-1}
    let u = h.drinfeld_u()?;
    match h.invert_elem(&u) {
        Ok(u_inv) => {
            let mut conj_ok = true;
            for k in 0..h.dim {
                let l = h.apply_antipode(&h.apply_antipode(&h.basis_elem(k)));
                let r = h.mul(&h.mul(&u, &h.basis_elem(k)), &u_inv);
                if !elems_eq(&l, &r) {
                    conj_ok = false;
                }
            }
            rep.push("s^2(x) = u x u^{-1}", conj_ok);
        }
        Err(_) => rep.push("s^2(x) = u x u^{-1} (u invertible)", false),
    }

    // algebraic Yang-Baxter equation in A (x) A (x) A
    let lhs = h.tensor_mul(3, &h.tensor_mul(3, &r12, &r13), &r23);
    let rhs = h.tensor_mul(3, &h.tensor_mul(3, &r23, &r13), &r12);
    rep.push("rho12 rho13 rho23 = rho23 rho13 rho12", elems_eq(&lhs, &rhs));

    Ok(rep)
}

/// Ribbon layer: the stored grouplike makes `v = G^{-1} u` central and
/// antipode-invariant, with `s^2` acting as conjugation by `G`.
pub fn check_ribbon(h: &HopfData) -> Result<AxiomReport> {
    let mut rep = AxiomReport {
        name: format!("ribbon ({})", h.name),
        items: Vec::new(),
    };
    let g = h
        .grouplike
        .as_ref()
        .ok_or(Error::MissingStructure("grouplike"))?
        .clone();

    let dg = h.delta(&g);
    let mut gg = vec![Value::zero(h.ring); h.tensor_dim(2)];
    for (i, ca) in g.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in g.iter().enumerate() {
            if !cb.is_zero() {
                gg[i * h.dim + j] = ca * cb;
            }
        }
    }
    rep.push("Delta(G) = G x G", elems_eq(&dg, &gg));
    rep.push("eps(G) = 1", h.counit_of(&g).is_one());

    let g_inv = h.invert_elem(&g)?;
    rep.push(
        "s(G) = G^{-1}",
        elems_eq(&h.apply_antipode(&g), &g_inv),
    );

    let mut conj = true;
    for k in 0..h.dim {
        let l = h.apply_antipode(&h.apply_antipode(&h.basis_elem(k)));
        let r = h.mul(&h.mul(&g, &h.basis_elem(k)), &g_inv);
        if !elems_eq(&l, &r) {
            conj = false;
        }
    }
    rep.push("s^2(x) = G x G^{-1}", conj);

    let u = h.drinfeld_u()?;
    let v = h.mul(&g_inv, &u);
    let mut central = true;
    for k in 0..h.dim {
        let e = h.basis_elem(k);
        if !elems_eq(&h.mul(&v, &e), &h.mul(&e, &v)) {
            central = false;
        }
    }
    rep.push("v = G^{-1} u is central", central);
    rep.push("s(v) = v", elems_eq(&h.apply_antipode(&v), &v));
    rep.push(
        "s(u) = G^{-1} u G^{-1}",
        elems_eq(&h.apply_antipode(&u), &h.mul(&h.mul(&g_inv, &u), &g_inv)),
    );

    Ok(rep)
}

/// Right-integral identity `lambda(x) 1 = sum lambda(x_1) x_2` on every
/// basis element.
pub fn check_right_integral(h: &HopfData) -> Result<AxiomReport> {
    let lam = h
        .integral
        .as_ref()
        .ok_or(Error::MissingStructure("integral"))?;
    let mut rep = AxiomReport {
        name: format!("right integral ({})", h.name),
        items: Vec::new(),
    };
    let mut ok = true;
    for k in 0..h.dim {
        let mut acc = h.zero();
        for (i, j, c) in &h.comult[k] {
            acc[*j] = &acc[*j] + &(&lam[*i] * c);
        }
        let want: Elem = h.unit.iter().map(|u| &lam[k] * u).collect();
        if !elems_eq(&acc, &want) {
            ok = false;
        }
    }
    rep.push("lambda(x) 1 = sum lambda(x1) x2", ok);
    let nonzero = lam.iter().any(|c| !c.is_zero());
    rep.push("lambda is nonzero", nonzero);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn trivial_hopf_algebra_passes() {
        let h = builtins::hopf_data("trivial1").unwrap();
        assert!(check_hopf_axioms(&h).all_pass());
        assert!(check_quasitriangular(&h).unwrap().all_pass());
        assert!(check_ribbon(&h).unwrap().all_pass());
        assert!(check_right_integral(&h).unwrap().all_pass());
    }

    #[test]
    fn group_algebra_of_order_two_passes() {
        let h = builtins::hopf_data("group2").unwrap();
        assert!(check_hopf_axioms(&h).all_pass());
        assert!(check_quasitriangular(&h).unwrap().all_pass());
        assert!(check_right_integral(&h).unwrap().all_pass());
    }

    #[test]
    fn four_dimensional_example_passes_everything() {
        let h = builtins::hopf_data("sweedler4").unwrap();
        assert!(check_hopf_axioms(&h).all_pass());
        let qt = check_quasitriangular(&h).unwrap();
        assert!(qt.all_pass(), "{qt}");
        let rb = check_ribbon(&h).unwrap();
        assert!(rb.all_pass(), "{rb}");
        assert!(check_right_integral(&h).unwrap().all_pass());
    }

    #[test]
    fn drinfeld_element_of_the_four_dimensional_example() {
        let h = builtins::hopf_data("sweedler4").unwrap();
        let u = h.drinfeld_u().unwrap();
        // u comes out as the grouplike generator
        assert_eq!(u, h.grouplike.clone().unwrap());
    }

    #[test]
    fn corrupting_the_antipode_is_caught() {
        let mut h = builtins::hopf_data("group2").unwrap();
        h.antipode[1][1] = Value::from_int(h.ring, -1);
        assert!(!check_hopf_axioms(&h).all_pass());
    }

    #[test]
    fn antipode_powers_invert() {
        let h = builtins::hopf_data("sweedler4").unwrap();
        for k in 0..h.dim {
            let e = h.basis_elem(k);
            let fwd = h.antipode_power(&e, 3).unwrap();
            let back = h.antipode_power(&fwd, -3).unwrap();
            assert_eq!(back, e);
        }
    }
}
