//! Dense matrices over the exact rings, tensor-product machinery, and
//! the Yang-Baxter / Hecke checkers.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ring::{value_from_json, Ring, Value};

/// Row-major dense matrix, homogeneous over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    pub ring: Ring,
    entries: Vec<Value>,
}

impl ExactMatrix {
    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            ring,
            entries: vec![Value::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = ExactMatrix::zero(ring, n, n);
        for k in 0..n {
            m.set(k, k, Value::one(ring));
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Value>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for v in row {
                if v.ring() != ring {
                    return Err(Error::RingMismatch(ring.name(), v.ring().name()));
                }
                entries.push(v);
            }
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            ring,
            entries,
        })
    }

    pub fn get(&self, r: usize, c: usize) -> &Value {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Value) {
        debug_assert_eq!(v.ring(), self.ring);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.name(), other.ring.name()));
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zero(self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c);
                    let v = &(a * b) + cur;
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.name(), other.ring.name()));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch in add".into()));
        }
        let mut out = self.clone();
        for k in 0..out.entries.len() {
            out.entries[k] = &out.entries[k] + &other.entries[k];
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Value) -> ExactMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = &*e * s;
        }
        out
    }

    /// Kronecker product; the left factor is the most significant index.
    pub fn kron(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.name(), other.ring.name()));
        }
        let mut out = ExactMatrix::zero(self.ring, self.rows * other.rows, self.cols * other.cols);
        for ra in 0..self.rows {
            for ca in 0..self.cols {
                let a = self.get(ra, ca);
                if a.is_zero() {
                    continue;
                }
                for rb in 0..other.rows {
                    for cb in 0..other.cols {
                        let b = other.get(rb, cb);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(ra * other.rows + rb, ca * other.cols + cb, a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by cofactor expansion. Intended for the small square
    /// matrices handled by `inverse`; practical up to dimension ~8.
    pub fn det(&self) -> Result<Value> {
        if self.rows != self.cols {
            return Err(Error::Dimension("det of non-square matrix".into()));
        }
        Ok(det_rec(self))
    }

    /// Exact inverse via adjugate over the ring. Succeeds iff the
    /// determinant is a unit of the ring.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        let n = self.rows;
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let det = self.det()?;
        let det_inv = det.inverse()?;
        let mut adj = ExactMatrix::zero(self.ring, n, n);
        for r in 0..n {
            for c in 0..n {
                let minor = self.minor(r, c);
                let cof = det_rec(&minor);
                let signed = if (r + c) % 2 == 0 { cof } else { -&cof };
                adj.set(c, r, &signed * &det_inv);
            }
        }
        Ok(adj)
    }

    fn minor(&self, row: usize, col: usize) -> ExactMatrix {
        let n = self.rows;
        let mut out = ExactMatrix::zero(self.ring, n - 1, n - 1);
        let mut rr = 0;
        for r in 0..n {
            if r == row {
                continue;
            }
            let mut cc = 0;
            for c in 0..n {
                if c == col {
                    continue;
                }
                out.set(rr, cc, self.get(r, c).clone());
                cc += 1;
            }
            rr += 1;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ExactMatrix> {
        let ring: Ring = serde_json::from_value(
            v.get("ring")
                .cloned()
                .ok_or_else(|| Error::Parse("matrix json lacks `ring`".into()))?,
        )?;
        let rows = v
            .get("rows")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("matrix json lacks `rows`".into()))? as usize;
        let cols = v
            .get("cols")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("matrix json lacks `cols`".into()))? as usize;
        let raw = v
            .get("entries")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("matrix json lacks `entries`".into()))?;
        if raw.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries, got {}",
                rows * cols,
                raw.len()
            )));
        }
        let entries = raw
            .iter()
            .map(|e| value_from_json(ring, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            rows,
            cols,
            ring,
            entries,
        })
    }
}

fn det_rec(m: &ExactMatrix) -> Value {
    let n = m.rows;
    if n == 0 {
        return Value::one(m.ring);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Value::zero(m.ring);
    for c in 0..n {
        let a = m.get(0, c);
        if a.is_zero() {
            continue;
        }
        let sub = m.minor(0, c);
        let term = a * &det_rec(&sub);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("ExactMatrix", 5)?;
        st.serialize_field("format", &1)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.entries)?;
        st.end()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The operator on `V^{\otimes n}` (dim `d^n`) permuting tensor factors:
/// position `k` of the output reads position `p(k)` of the input, which
/// makes the map a homomorphism for apply-leftmost-first composition.
pub fn perm_operator(p: &Permutation, d: usize, ring: Ring) -> ExactMatrix {
    let n = p.n();
    let dim = d.pow(n as u32);
    let mut m = ExactMatrix::zero(ring, dim, dim);
    let one = Value::one(ring);
    for col in 0..dim {
        // digits of the column multi-index, most significant first
        let mut digits = vec![0usize; n];
        let mut rem = col;
        for k in (0..n).rev() {
            digits[k] = rem % d;
            rem /= d;
        }
        let mut row = 0usize;
        for k in 0..n {
            row = row * d + digits[p.apply(k + 1) - 1];
        }
        m.set(row, col, one.clone());
    }
    m
}

/// Embed a `d^2 x d^2` operator so it acts on tensor factors `(i, j)`
/// (in that order) of `V^{\otimes n}` and trivially elsewhere.
pub fn embed_pair(
    op: &ExactMatrix,
    i: usize,
    j: usize,
    n: usize,
    d: usize,
) -> Result<ExactMatrix> {
    if op.rows != d * d || op.cols != d * d {
        return Err(Error::Dimension(format!(
            "pair operator must be {0}x{0}",
            d * d
        )));
    }
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Dimension(format!(
            "invalid factor pair ({i},{j}) for n = {n}"
        )));
    }
    let dim = d.pow(n as u32);
    let mut m = ExactMatrix::zero(op.ring, dim, dim);
    let strides: Vec<usize> = (0..n).map(|k| d.pow((n - 1 - k) as u32)).collect();
    let (si, sj) = (strides[i - 1], strides[j - 1]);
    // enumerate the "context" = all factors other than i, j
    let others: Vec<usize> = (0..n).filter(|&k| k != i - 1 && k != j - 1).collect();
    let ctx_count = d.pow(others.len() as u32);
    for ctx in 0..ctx_count {
        let mut base = 0usize;
        let mut rem = ctx;
        for &k in others.iter().rev() {
            base += (rem % d) * strides[k];
            rem /= d;
        }
        for a_out in 0..d {
            for b_out in 0..d {
                let row = base + a_out * si + b_out * sj;
                for a_in in 0..d {
                    for b_in in 0..d {
                        let v = op.get(a_out * d + b_out, a_in * d + b_in);
                        if v.is_zero() {
                            continue;
                        }
                        let col = base + a_in * si + b_in * sj;
                        m.set(row, col, v.clone());
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Algebraic Yang-Baxter test on `V^{\otimes 3}`:
/// `rho_12 rho_13 rho_23 = rho_23 rho_13 rho_12`, exactly.
pub fn check_aybe(rho: &ExactMatrix, d: usize) -> Result<bool> {
    let r12 = embed_pair(rho, 1, 2, 3, d)?;
    let r13 = embed_pair(rho, 1, 3, 3, d)?;
    let r23 = embed_pair(rho, 2, 3, 3, d)?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    Ok(lhs == rhs)
}

/// Braided Yang-Baxter test:
/// `(B x I)(I x B)(B x I) = (I x B)(B x I)(I x B)`, exactly.
pub fn check_braided_ybe(b: &ExactMatrix, d: usize) -> Result<bool> {
    if b.rows != d * d || b.cols != d * d {
        return Err(Error::Dimension(format!("operator must be {0}x{0}", d * d)));
    }
    let id = ExactMatrix::identity(b.ring, d);
    let b1 = b.kron(&id)?;
    let b2 = id.kron(b)?;
    let lhs = b1.mul(&b2)?.mul(&b1)?;
    let rhs = b2.mul(&b1)?.mul(&b2)?;
    Ok(lhs == rhs)
}

/// Quadratic Hecke test: `R^2 = z R + I`, exactly.
pub fn check_hecke_quadratic(r: &ExactMatrix, z: &Value) -> Result<bool> {
    if r.rows != r.cols {
        return Err(Error::Dimension("Hecke operator must be square".into()));
    }
    if z.ring() != r.ring {
        return Err(Error::RingMismatch(r.ring.name(), z.ring().name()));
    }
    let lhs = r.mul(r)?;
    let rhs = r.scale(z).add(&ExactMatrix::identity(r.ring, r.rows))?;
    Ok(lhs == rhs)
}

/// The `d^2 x d^2` factor swap.
pub fn swap_operator(d: usize, ring: Ring) -> ExactMatrix {
    let p = Permutation::transposition(2, 1, 2);
    perm_operator(&p, d, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> Value {
        Value::from_int(Ring::Int, k)
    }

    fn diag(entries: &[i64]) -> ExactMatrix {
        let n = entries.len();
        let mut m = ExactMatrix::zero(Ring::Int, n, n);
        for (k, &e) in entries.iter().enumerate() {
            m.set(k, k, int(e));
        }
        m
    }

    #[test]
    fn kron_basics() {
        let i2 = ExactMatrix::identity(Ring::Int, 2);
        let i1 = ExactMatrix::identity(Ring::Int, 1);
        assert_eq!(i2.kron(&i2).unwrap(), ExactMatrix::identity(Ring::Int, 4));
        let a = diag(&[2, 3]);
        assert_eq!(a.kron(&i1).unwrap(), a);
        let b = diag(&[5, 7]);
        assert_eq!(a.kron(&b).unwrap(), diag(&[10, 14, 15, 21]));
    }

    #[test]
    fn perm_operator_is_a_homomorphism() {
        let d = 2;
        let p = Permutation::from_image(vec![2, 3, 1]).unwrap();
        let q = Permutation::transposition(3, 1, 3);
        let lhs = perm_operator(&p.compose(&q), d, Ring::Int);
        let rhs = perm_operator(&p, d, Ring::Int)
            .mul(&perm_operator(&q, d, Ring::Int))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(perm_operator(&Permutation::identity(3), d, Ring::Int).is_identity());
    }

    #[test]
    fn swap_is_the_four_by_four_swap() {
        let p = swap_operator(2, Ring::Int);
        let mut expect = ExactMatrix::zero(Ring::Int, 4, 4);
        expect.set(0, 0, int(1));
        expect.set(1, 2, int(1));
        expect.set(2, 1, int(1));
        expect.set(3, 3, int(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn embed_pair_basics() {
        let d = 2;
        let rho = diag(&[1, 2, 3, 4]);
        assert_eq!(embed_pair(&rho, 1, 2, 2, d).unwrap(), rho);
        let id4 = ExactMatrix::identity(Ring::Int, 4);
        assert!(embed_pair(&id4, 2, 4, 4, d).unwrap().is_identity());
        // reversed pair equals swap conjugation
        let p = swap_operator(d, Ring::Int);
        let conj = p.mul(&rho).unwrap().mul(&p).unwrap();
        assert_eq!(embed_pair(&rho, 2, 1, 2, d).unwrap(), conj);
        assert!(embed_pair(&rho, 1, 1, 3, d).is_err());
    }

    #[test]
    fn embed_pair_respects_relabeling() {
        // conjugating by perm_operator(p)^{-1} relabels the factor pair by p
        let d = 2;
        let mut rho = diag(&[1, 1, 1, 1]);
        rho.set(1, 2, int(5));
        rho.set(0, 3, int(-2));
        let p = Permutation::from_image(vec![3, 1, 4, 2]).unwrap();
        let mp = perm_operator(&p, d, Ring::Int);
        let mp_inv = perm_operator(&p.inverse(), d, Ring::Int);
        for (i, j) in [(1, 2), (2, 1), (1, 4), (3, 2)] {
            let lhs = mp_inv
                .mul(&embed_pair(&rho, i, j, 4, d).unwrap())
                .unwrap()
                .mul(&mp)
                .unwrap();
            let rhs = embed_pair(&rho, p.apply(i), p.apply(j), 4, d).unwrap();
            assert_eq!(lhs, rhs, "pair ({i},{j})");
        }
    }

    #[test]
    fn aybe_trivial_cases() {
        let d = 2;
        assert!(check_aybe(&ExactMatrix::identity(Ring::Int, 4), d).unwrap());
        assert!(check_aybe(&diag(&[2, 3, 5, 7]), d).unwrap());
        assert!(check_braided_ybe(&swap_operator(d, Ring::Int), d).unwrap());
        assert!(check_braided_ybe(&ExactMatrix::identity(Ring::Int, 4), d).unwrap());
    }

    #[test]
    fn hecke_quadratic_trivial_cases() {
        let i4 = ExactMatrix::identity(Ring::Int, 4);
        assert!(check_hecke_quadratic(&i4, &int(0)).unwrap());
        assert!(!check_hecke_quadratic(&i4, &int(1)).unwrap());
    }

    #[test]
    fn inverse_over_each_ring() {
        // integer matrix with unit determinant
        let m = ExactMatrix::from_rows(
            Ring::Int,
            vec![vec![int(1), int(2)], vec![int(0), int(1)]],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        // laurent matrix with monomial determinant
        let q = Value::monomial(1);
        let one = Value::one(Ring::Laurent);
        let zero = Value::zero(Ring::Laurent);
        let m = ExactMatrix::from_rows(
            Ring::Laurent,
            vec![vec![q.clone(), one.clone()], vec![zero, one]],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
        // non-unit determinant over the integers
        let m = diag(&[2, 1]);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = diag(&[1, -4]);
        let js = m.to_json();
        assert_eq!(js.get("format").and_then(|v| v.as_i64()), Some(1));
        assert_eq!(ExactMatrix::from_json(&js).unwrap(), m);
    }
}
