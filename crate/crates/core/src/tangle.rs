//! Rotational virtual tangle diagrams as bottom-to-top slice lists, their
//! exact matrix evaluation, and the regular-isotopy move checker for the
//! matrix data driving the evaluation.

use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::{check_braided_ybe, ExactMatrix};
use crate::ring::Ring;

/// One elementary tile. Widths: identity/crossings/virtual keep strand
/// count, a cup creates two strands, a cap closes two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tile {
    Id,
    PosCrossing,
    NegCrossing,
    Virtual,
    Cup,
    Cap,
}

impl Tile {
    pub fn arity_in(self) -> usize {
        match self {
            Tile::Id => 1,
            Tile::PosCrossing | Tile::NegCrossing | Tile::Virtual | Tile::Cap => 2,
            Tile::Cup => 0,
        }
    }

    pub fn arity_out(self) -> usize {
        match self {
            Tile::Id => 1,
            Tile::PosCrossing | Tile::NegCrossing | Tile::Virtual | Tile::Cup => 2,
            Tile::Cap => 0,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Tile::Id => "i",
            Tile::PosCrossing => "x+",
            Tile::NegCrossing => "x-",
            Tile::Virtual => "o",
            Tile::Cup => "u",
            Tile::Cap => "n",
        }
    }

    fn from_token(tok: &str) -> Option<Tile> {
        Some(match tok {
            "i" => Tile::Id,
            "x+" => Tile::PosCrossing,
            "x-" => Tile::NegCrossing,
            "o" => Tile::Virtual,
            "u" => Tile::Cup,
            "n" => Tile::Cap,
            _ => return None,
        })
    }
}

/// Placement of a tile inside a slice: which strand positions it consumes
/// below and produces above (0-based starts).
#[derive(Debug, Clone, Copy)]
pub struct Placement {
    pub tile: Tile,
    pub in_start: usize,
    pub out_start: usize,
}

/// A diagram: slices listed bottom to top; each slice is a tile list
/// read left to right. Consecutive strand counts must match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleDiagram {
    slices: Vec<Vec<Tile>>,
    inputs: usize,
    outputs: usize,
}

impl TangleDiagram {
    pub fn new(slices: Vec<Vec<Tile>>) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::Parse("empty diagram".into()));
        }
        let inputs: usize = slices[0].iter().map(|t| t.arity_in()).sum();
        let mut width = inputs;
        for (k, slice) in slices.iter().enumerate() {
            let consumed: usize = slice.iter().map(|t| t.arity_in()).sum();
            if consumed != width {
                return Err(Error::BadSlice {
                    slice: k + 1,
                    msg: format!("consumes {consumed} strands but {width} arrive"),
                });
            }
            width = slice.iter().map(|t| t.arity_out()).sum();
        }
        Ok(TangleDiagram {
            slices,
            inputs,
            outputs: width,
        })
    }

    /// Parse the slice grammar: slices separated by `/`, tiles separated
    /// by whitespace, `#` starts a comment running to end of line.
    pub fn parse(text: &str) -> Result<Self> {
        let cleaned: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        let mut slices = Vec::new();
        for part in cleaned.split('/') {
            let tiles = part
                .split_whitespace()
                .map(|tok| {
                    Tile::from_token(tok)
                        .ok_or_else(|| Error::Parse(format!("unknown tile `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !tiles.is_empty() {
                slices.push(tiles);
            }
        }
        TangleDiagram::new(slices)
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn is_closed(&self) -> bool {
        self.inputs == 0 && self.outputs == 0
    }

    pub fn slices(&self) -> &[Vec<Tile>] {
        &self.slices
    }

    /// Tile placements of slice `k`, with strand offsets.
    pub fn placements(&self, k: usize) -> Vec<Placement> {
        let mut out = Vec::new();
        let (mut i_at, mut o_at) = (0, 0);
        for &tile in &self.slices[k] {
            out.push(Placement {
                tile,
                in_start: i_at,
                out_start: o_at,
            });
            i_at += tile.arity_in();
            o_at += tile.arity_out();
        }
        out
    }

    /// Evaluate against matrix data by tensoring each slice and
    /// multiplying bottom to top. Closed diagrams yield a 1x1 scalar.
    pub fn evaluate(&self, data: &RibbonMatrixData) -> Result<ExactMatrix> {
        let d = data.d;
        let mut acc = ExactMatrix::identity(data.ring(), d.pow(self.inputs as u32));
        for slice in &self.slices {
            let mut m: Option<ExactMatrix> = None;
            for &tile in slice {
                let t = data.tile_matrix(tile);
                m = Some(match m {
                    None => t.clone(),
                    Some(prev) => prev.kron(t)?,
                });
            }
            let m = m.expect("slices are nonempty");
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, slice) in self.slices.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            for (t, tile) in slice.iter().enumerate() {
                if t > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", tile.token())?;
            }
        }
        Ok(())
    }
}

/// Matrix data for the five non-identity tiles. `cup` is a `d^2 x 1`
/// column, `cap` a `1 x d^2` row.
#[derive(Debug, Clone)]
pub struct RibbonMatrixData {
    pub name: String,
    pub d: usize,
    pub pos: ExactMatrix,
    pub neg: ExactMatrix,
    pub virt: ExactMatrix,
    pub cup: ExactMatrix,
    pub cap: ExactMatrix,
    id: ExactMatrix,
}

impl RibbonMatrixData {
    pub fn new(
        name: impl Into<String>,
        d: usize,
        pos: ExactMatrix,
        neg: ExactMatrix,
        virt: ExactMatrix,
        cup: ExactMatrix,
        cap: ExactMatrix,
    ) -> Result<Self> {
        let ring = pos.ring;
        for (what, m, rows, cols) in [
            ("pos crossing", &pos, d * d, d * d),
            ("neg crossing", &neg, d * d, d * d),
            ("virtual crossing", &virt, d * d, d * d),
            ("cup", &cup, d * d, 1),
            ("cap", &cap, 1, d * d),
        ] {
            if m.rows != rows || m.cols != cols {
                return Err(Error::Dimension(format!(
                    "{what} must be {rows}x{cols}, got {}x{}",
                    m.rows, m.cols
                )));
            }
            if m.ring != ring {
                return Err(Error::RingMismatch(ring.name(), m.ring.name()));
            }
        }
        Ok(RibbonMatrixData {
            name: name.into(),
            d,
            pos,
            neg,
            virt,
            cup,
            cap,
            id: ExactMatrix::identity(ring, d),
        })
    }

    pub fn ring(&self) -> Ring {
        self.pos.ring
    }

    pub fn tile_matrix(&self, tile: Tile) -> &ExactMatrix {
        match tile {
            Tile::Id => &self.id,
            Tile::PosCrossing => &self.pos,
            Tile::NegCrossing => &self.neg,
            Tile::Virtual => &self.virt,
            Tile::Cup => &self.cup,
            Tile::Cap => &self.cap,
        }
    }

    pub fn load(json: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            name: String,
            d: usize,
            pos: serde_json::Value,
            neg: serde_json::Value,
            #[serde(rename = "virtual")]
            virt: serde_json::Value,
            cup: serde_json::Value,
            cap: serde_json::Value,
        }
        let raw: Raw = serde_json::from_str(json)?;
        RibbonMatrixData::new(
            raw.name,
            raw.d,
            ExactMatrix::from_json(&raw.pos)?,
            ExactMatrix::from_json(&raw.neg)?,
            ExactMatrix::from_json(&raw.virt)?,
            ExactMatrix::from_json(&raw.cup)?,
            ExactMatrix::from_json(&raw.cap)?,
        )
    }

    /// The scalar a free loop contributes: `cap . cup`.
    pub fn loop_value(&self) -> Result<ExactMatrix> {
        self.cap.mul(&self.cup)
    }
}

/// Exact matrix identities for regular isotopy with respect to the
/// vertical direction. The classical swing moves exchange the crossing
/// sign, which is what the canonical data satisfies: a crossing carried
/// across an extremum turns over relative to the vertical.
pub fn check_move_invariance(data: &RibbonMatrixData) -> Result<AxReport> {
    let d = data.d;
    let id = &data.id;
    let k = |a: &ExactMatrix, b: &ExactMatrix| a.kron(b);
    let idn = ExactMatrix::identity(data.ring(), d);

    let mut items: Vec<(String, bool)> = Vec::new();
    let id2 = ExactMatrix::identity(data.ring(), d * d);

    // move 0: cancellation of consecutive maxima and minima
    items.push((
        "0a: (cap x 1)(1 x cup) = 1".into(),
        k(&data.cap, id)?.mul(&k(id, &data.cup)?)? == idn,
    ));
    items.push((
        "0b: (1 x cap)(cup x 1) = 1".into(),
        k(id, &data.cap)?.mul(&k(&data.cup, id)?)? == idn,
    ));

    // move II: inverse crossings
    items.push(("IIa: pos . neg = 1".into(), data.pos.mul(&data.neg)? == id2));
    items.push(("IIb: neg . pos = 1".into(), data.neg.mul(&data.pos)? == id2));

    // move III: braided Yang-Baxter for the positive crossing
    items.push((
        "III: braided Yang-Baxter".into(),
        check_braided_ybe(&data.pos, d)?,
    ));

    // move IV, classical swings (crossing sign flips across the extremum)
    items.push((
        "IVa: (cap x 1)(1 x pos) = (1 x cap)(neg x 1)".into(),
        k(&data.cap, id)?.mul(&k(id, &data.pos)?)?
            == k(id, &data.cap)?.mul(&k(&data.neg, id)?)?,
    ));
    items.push((
        "IVb: (cap x 1)(1 x neg) = (1 x cap)(pos x 1)".into(),
        k(&data.cap, id)?.mul(&k(id, &data.neg)?)?
            == k(id, &data.cap)?.mul(&k(&data.pos, id)?)?,
    ));
    items.push((
        "IVc: (pos x 1)(1 x cup) = (1 x neg)(cup x 1)".into(),
        k(&data.pos, id)?.mul(&k(id, &data.cup)?)?
            == k(id, &data.neg)?.mul(&k(&data.cup, id)?)?,
    ));
    items.push((
        "IVd: (neg x 1)(1 x cup) = (1 x pos)(cup x 1)".into(),
        k(&data.neg, id)?.mul(&k(id, &data.cup)?)?
            == k(id, &data.pos)?.mul(&k(&data.cup, id)?)?,
    ));

    // move IV, virtual swings
    items.push((
        "IVe: (cap x 1)(1 x virt) = (1 x cap)(virt x 1)".into(),
        k(&data.cap, id)?.mul(&k(id, &data.virt)?)?
            == k(id, &data.cap)?.mul(&k(&data.virt, id)?)?,
    ));
    items.push((
        "IVf: (virt x 1)(1 x cup) = (1 x virt)(cup x 1)".into(),
        k(&data.virt, id)?.mul(&k(id, &data.cup)?)?
            == k(id, &data.virt)?.mul(&k(&data.cup, id)?)?,
    ));

    // move V: virtual involution, virtual braiding, and the detour of a
    // classical crossing across a virtual strand
    items.push(("Va: virt . virt = 1".into(), data.virt.mul(&data.virt)? == id2));
    items.push((
        "Vb: virtual Yang-Baxter".into(),
        check_braided_ybe(&data.virt, d)?,
    ));
    for (label, c) in [("Vc(pos)", &data.pos), ("Vd(neg)", &data.neg)] {
        let l = k(&data.virt, id)?
            .mul(&k(id, c)?)?
            .mul(&k(&data.virt, id)?)?;
        let r = k(id, &data.virt)?
            .mul(&k(c, id)?)?
            .mul(&k(id, &data.virt)?)?;
        items.push((format!("{label}: detour across a virtual"), l == r));
    }

    Ok(AxReport {
        name: format!("move invariance ({})", data.name),
        items,
    })
}

/// Pass/fail listing shared by the move checker.
#[derive(Debug, Clone)]
pub struct AxReport {
    pub name: String,
    pub items: Vec<(String, bool)>,
}

impl AxReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for AxReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for (label, ok) in &self.items {
            writeln!(f, "  {} {}", if *ok { "pass" } else { "FAIL" }, label)?;
        }
        Ok(())
    }
}
