//! Concentration of a closed diagram's crossing decorations into cyclic
//! trace words, rotation numbers, and numeric evaluation against
//! Hopf-algebra data.
//!
//! Conventions, fixed once and pinned by the bundled seven-slice
//! example: turning is counted only at cups and caps, a counterclockwise
//! half-turn is `+1`; each traversal starts at the component's earliest
//! cup, entering its left limb downward; a positive crossing carries the
//! left half of the Yang-Baxter element on its top-left leg and the
//! right half on its top-right leg, a negative crossing carries the
//! antipoded left half below-left and the right half below-right.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::{Elem, HopfData};
use crate::ring::Value;
use crate::tangle::{TangleDiagram, Tile};

/// Which half of the Yang-Baxter element a token carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// left tensor factor
    E,
    /// right tensor factor
    EPrime,
}

/// One decoration in a cyclic trace word: `s^power(side-half)` of the
/// crossing's element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceToken {
    pub crossing: usize,
    pub side: Side,
    pub power: i64,
}

/// The cyclic decoration word of one closed component, with the
/// component's rotation recorded as a grouplike exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceWord {
    pub tokens: Vec<TraceToken>,
    pub g_exp: i64,
}

impl TraceWord {
    /// Canonical representative of the cyclic/rebasing class: among all
    /// rotations (a token moved past the grouplike marker gains `2 g`
    /// antipode powers) shifted so the first token has power zero, pick
    /// the lexicographically least token sequence, comparing with
    /// crossing ids renumbered by first appearance so the choice does
    /// not depend on incoming id labels.
    pub fn canonical(&self) -> TraceWord {
        TraceWord {
            tokens: relabel_by_appearance(&best_rotation(self)),
            g_exp: self.g_exp,
        }
    }
}

/// The winning rotation, returned with its original crossing ids.
fn best_rotation(w: &TraceWord) -> Vec<TraceToken> {
    let m = w.tokens.len();
    if m == 0 {
        return Vec::new();
    }
    let mut best: Option<(Vec<(usize, u8, i64)>, Vec<TraceToken>)> = None;
    for start in 0..m {
        let mut cand = Vec::with_capacity(m);
        for k in 0..m {
            let idx = (start + k) % m;
            let mut tok = w.tokens[idx];
            if start + k >= m {
                tok.power += 2 * w.g_exp;
            }
            cand.push(tok);
        }
        let shift = cand[0].power;
        for t in cand.iter_mut() {
            t.power -= shift;
        }
        let key = token_seq_key(&relabel_by_appearance(&cand));
        if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
            best = Some((key, cand));
        }
    }
    best.unwrap().1
}

fn relabel_by_appearance(tokens: &[TraceToken]) -> Vec<TraceToken> {
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    tokens
        .iter()
        .map(|t| {
            let next = relabel.len() + 1;
            let id = *relabel.entry(t.crossing).or_insert(next);
            TraceToken {
                crossing: id,
                ..*t
            }
        })
        .collect()
}

fn token_seq_key(tokens: &[TraceToken]) -> Vec<(usize, u8, i64)> {
    tokens
        .iter()
        .map(|t| (t.crossing, if t.side == Side::E { 0 } else { 1 }, t.power))
        .collect()
}

/// Canonicalize each component's rotation, then renumber crossing ids by
/// first appearance across the whole list (ids can be shared between
/// components, so the global renumbering happens after rotations are
/// fixed).
pub fn canonical_words(words: &[TraceWord]) -> Vec<TraceWord> {
    let rotated: Vec<TraceWord> = words
        .iter()
        .map(|w| TraceWord {
            tokens: best_rotation(w),
            g_exp: w.g_exp,
        })
        .collect();
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    for w in &rotated {
        for t in &w.tokens {
            let next = relabel.len() + 1;
            relabel.entry(t.crossing).or_insert(next);
        }
    }
    rotated
        .into_iter()
        .map(|w| TraceWord {
            tokens: w
                .tokens
                .into_iter()
                .map(|mut t| {
                    t.crossing = relabel[&t.crossing];
                    t
                })
                .collect(),
            g_exp: w.g_exp,
        })
        .collect()
}

/// Equality of trace-word lists up to cyclic rotation and rebasing.
pub fn words_equal_cyclic(a: &[TraceWord], b: &[TraceWord]) -> bool {
    canonical_words(a) == canonical_words(b)
}

fn side_name(crossing: usize, side: Side) -> String {
    let letter = match crossing {
        1 => "e",
        2 => "f",
        3 => "g",
        4 => "h",
        k => return format!("x{}{}", k, if side == Side::EPrime { "'" } else { "" }),
    };
    match side {
        Side::E => letter.to_string(),
        Side::EPrime => format!("{letter}'"),
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TR[")?;
        let mut wrote = false;
        for t in &self.tokens {
            if wrote {
                write!(f, " ")?;
            }
            let name = side_name(t.crossing, t.side);
            match t.power {
                0 => write!(f, "{name}")?,
                1 => write!(f, "s({name})")?,
                p => write!(f, "s^{p}({name})")?,
            }
            wrote = true;
        }
        match self.g_exp {
            0 => {
                if !wrote {
                    write!(f, "1")?;
                }
            }
            1 => {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "G")?;
            }
            g => {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "G^{g}")?;
            }
        }
        write!(f, "]")
    }
}

// --- traversal ------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Dir {
    Up,
    Down,
}

/// A point on a slice boundary: boundary `level` (0 = bottom of the
/// diagram), strand `pos` (0-based), moving `dir`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Cursor {
    level: usize,
    pos: usize,
    dir: Dir,
}

#[derive(Debug, Clone, Copy)]
enum Event {
    /// A decoration met along the strand; `base_power` is 1 for the
    /// antipoded half on a negative crossing.
    Decoration {
        crossing: (usize, usize),
        side: Side,
        base_power: i64,
    },
    /// Half-turn at a cup or cap, counterclockwise positive.
    Extremum { sign: i64 },
}

struct Walker<'a> {
    diagram: &'a TangleDiagram,
    placements: Vec<Vec<crate::tangle::Placement>>,
}

impl<'a> Walker<'a> {
    fn new(diagram: &'a TangleDiagram) -> Self {
        let placements = (0..diagram.slices().len())
            .map(|k| diagram.placements(k))
            .collect();
        Walker {
            diagram,
            placements,
        }
    }

    fn tile_at_input(&self, slice: usize, pos: usize) -> (usize, &crate::tangle::Placement) {
        for (idx, p) in self.placements[slice].iter().enumerate() {
            if p.tile.arity_in() > 0 && pos >= p.in_start && pos < p.in_start + p.tile.arity_in() {
                return (idx, p);
            }
        }
        unreachable!("validated diagram covers every input position");
    }

    fn tile_at_output(&self, slice: usize, pos: usize) -> (usize, &crate::tangle::Placement) {
        for (idx, p) in self.placements[slice].iter().enumerate() {
            if p.tile.arity_out() > 0
                && pos >= p.out_start
                && pos < p.out_start + p.tile.arity_out()
            {
                return (idx, p);
            }
        }
        unreachable!("validated diagram covers every output position");
    }

    /// Advance one step, emitting any events met at the tile crossed.
    fn step(&self, c: Cursor, events: &mut Vec<Event>) -> Cursor {
        match c.dir {
            Dir::Up => {
                let slice = c.level;
                let (idx, p) = self.tile_at_input(slice, c.pos);
                let off = c.pos - p.in_start;
                match p.tile {
                    Tile::Id => Cursor {
                        level: slice + 1,
                        pos: p.out_start,
                        dir: Dir::Up,
                    },
                    Tile::Virtual => Cursor {
                        level: slice + 1,
                        pos: p.out_start + 1 - off,
                        dir: Dir::Up,
                    },
                    Tile::PosCrossing => {
                        // decoration sits on the upper leg, met after the
                        // crossing point on an upward pass
                        let out_off = 1 - off;
                        events.push(Event::Decoration {
                            crossing: (slice, idx),
                            side: if out_off == 0 { Side::E } else { Side::EPrime },
                            base_power: 0,
                        });
                        Cursor {
                            level: slice + 1,
                            pos: p.out_start + out_off,
                            dir: Dir::Up,
                        }
                    }
                    Tile::NegCrossing => {
                        // decoration sits on the lower leg, met before the
                        // crossing point on an upward pass
                        events.push(Event::Decoration {
                            crossing: (slice, idx),
                            side: if off == 0 { Side::E } else { Side::EPrime },
                            base_power: if off == 0 { 1 } else { 0 },
                        });
                        Cursor {
                            level: slice + 1,
                            pos: p.out_start + 1 - off,
                            dir: Dir::Up,
                        }
                    }
                    Tile::Cap => {
                        // entering left limb turns clockwise, right limb
                        // counterclockwise
                        events.push(Event::Extremum {
                            sign: if off == 0 { -1 } else { 1 },
                        });
                        Cursor {
                            level: slice,
                            pos: p.in_start + 1 - off,
                            dir: Dir::Down,
                        }
                    }
                    Tile::Cup => unreachable!("cups have no bottom ports"),
                }
            }
            Dir::Down => {
                let slice = c.level - 1;
                let (idx, p) = self.tile_at_output(slice, c.pos);
                let off = c.pos - p.out_start;
                match p.tile {
                    Tile::Id => Cursor {
                        level: slice,
                        pos: p.in_start,
                        dir: Dir::Down,
                    },
                    Tile::Virtual => Cursor {
                        level: slice,
                        pos: p.in_start + 1 - off,
                        dir: Dir::Down,
                    },
                    Tile::PosCrossing => {
                        events.push(Event::Decoration {
                            crossing: (slice, idx),
                            side: if off == 0 { Side::E } else { Side::EPrime },
                            base_power: 0,
                        });
                        Cursor {
                            level: slice,
                            pos: p.in_start + 1 - off,
                            dir: Dir::Down,
                        }
                    }
                    Tile::NegCrossing => {
                        let in_off = 1 - off;
                        events.push(Event::Decoration {
                            crossing: (slice, idx),
                            side: if in_off == 0 { Side::E } else { Side::EPrime },
                            base_power: if in_off == 0 { 1 } else { 0 },
                        });
                        Cursor {
                            level: slice,
                            pos: p.in_start + in_off,
                            dir: Dir::Down,
                        }
                    }
                    Tile::Cup => {
                        // entering left limb turns counterclockwise
                        events.push(Event::Extremum {
                            sign: if off == 0 { 1 } else { -1 },
                        });
                        Cursor {
                            level: c.level,
                            pos: p.out_start + 1 - off,
                            dir: Dir::Up,
                        }
                    }
                    Tile::Cap => unreachable!("caps have no top ports"),
                }
            }
        }
    }
}

/// Traverse every closed component, in order of each component's
/// earliest cup. Returns per-component event lists.
fn traverse(diagram: &TangleDiagram) -> Result<Vec<Vec<Event>>> {
    if !diagram.is_closed() {
        return Err(Error::NotClosed);
    }
    let walker = Walker::new(diagram);
    let mut visited: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut components = Vec::new();
    for (s, slice) in diagram.slices().iter().enumerate() {
        let _ = slice;
        for p in &walker.placements[s] {
            if p.tile != Tile::Cup {
                continue;
            }
            let start = Cursor {
                level: s + 1,
                pos: p.out_start,
                dir: Dir::Down,
            };
            if visited.contains(&(start.level, start.pos)) {
                continue;
            }
            let mut events = Vec::new();
            let mut cur = start;
            loop {
                visited.insert((cur.level, cur.pos));
                cur = walker.step(cur, &mut events);
                if cur == start {
                    break;
                }
            }
            components.push(events);
        }
    }
    Ok(components)
}

/// Whitney rotation index of each closed component: half the sum of the
/// signed half-turns collected at cups and caps.
pub fn rotation_numbers(diagram: &TangleDiagram) -> Result<Vec<i64>> {
    let comps = traverse(diagram)?;
    Ok(comps
        .iter()
        .map(|events| {
            let total: i64 = events
                .iter()
                .map(|e| match e {
                    Event::Extremum { sign } => *sign,
                    _ => 0,
                })
                .sum();
            debug_assert_eq!(total % 2, 0, "closed curves turn an integer amount");
            total / 2
        })
        .collect())
}

/// Concentrate every decoration of a closed diagram into one cyclic word
/// per component.
///
/// Decorations are read in traversal order from a basepoint placed just
/// before the first decoration; each token's antipode power is the
/// number of counterclockwise extrema (minus clockwise ones) separating
/// it from the basepoint, plus its own antipode for a negative crossing.
/// The residual rotation becomes the grouplike exponent. The result is
/// canonicalized, so any basepoint yields the same output.
pub fn concentrate(diagram: &TangleDiagram) -> Result<Vec<TraceWord>> {
    let comps = traverse(diagram)?;
    let mut crossing_ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut words = Vec::new();
    for events in &comps {
        // rotate events so a decoration comes first (if any)
        let first_dec = events
            .iter()
            .position(|e| matches!(e, Event::Decoration { .. }));
        let g_exp: i64 = events
            .iter()
            .map(|e| match e {
                Event::Extremum { sign } => *sign,
                _ => 0,
            })
            .sum::<i64>()
            / 2;
        let mut tokens = Vec::new();
        if let Some(fd) = first_dec {
            let mut acc = 0i64;
            for k in 0..events.len() {
                match events[(fd + k) % events.len()] {
                    Event::Decoration {
                        crossing,
                        side,
                        base_power,
                    } => {
                        let next = crossing_ids.len() + 1;
                        let id = *crossing_ids.entry(crossing).or_insert(next);
                        tokens.push(TraceToken {
                            crossing: id,
                            side,
                            power: acc + base_power,
                        });
                    }
                    Event::Extremum { sign } => acc += sign,
                }
            }
        }
        words.push(TraceWord { tokens, g_exp });
    }
    // each crossing must appear exactly once per side across the diagram
    let mut seen: HashMap<(usize, Side), usize> = HashMap::new();
    for w in &words {
        for t in &w.tokens {
            *seen.entry((t.crossing, t.side)).or_insert(0) += 1;
        }
    }
    debug_assert!(seen.values().all(|&c| c == 1));
    Ok(canonical_words(&words))
}

/// Numeric evaluation of trace words against Hopf data: sum over all
/// assignments of the Yang-Baxter pairs to crossings of the product of
/// per-component integrals.
pub fn evaluate_trace(words: &[TraceWord], h: &HopfData) -> Result<Value> {
    let pairs = h
        .yang_baxter
        .as_ref()
        .ok_or(Error::MissingStructure("yang_baxter"))?;
    let g = h
        .grouplike
        .as_ref()
        .ok_or(Error::MissingStructure("grouplike"))?;
    if h.integral.is_none() {
        return Err(Error::MissingStructure("integral"));
    }
    let words = canonical_words(words);
    let mut ids: Vec<usize> = Vec::new();
    for w in &words {
        for t in &w.tokens {
            if !ids.contains(&t.crossing) {
                ids.push(t.crossing);
            }
        }
    }
    // precompute grouplike powers per component
    let mut g_pow: HashMap<i64, Elem> = HashMap::new();
    for w in &words {
        g_pow
            .entry(w.g_exp)
            .or_insert(h.elem_power(g, w.g_exp)?);
    }
    let mut total = Value::zero(h.ring);
    let mut assignment = vec![0usize; ids.len()];
    loop {
        // product over components of the integral of the token product
        let mut factor = Value::one(h.ring);
        for w in &words {
            let mut prod = h.unit.clone();
            for t in &w.tokens {
                let slot = ids.iter().position(|&k| k == t.crossing).unwrap();
                let (a, b) = &pairs[assignment[slot]];
                let half = match t.side {
                    Side::E => a,
                    Side::EPrime => b,
                };
                let dec = h.antipode_power(half, t.power)?;
                prod = h.mul(&prod, &dec);
            }
            prod = h.mul(&prod, &g_pow[&w.g_exp]);
            factor = &factor * &h.integral_of(&prod)?;
        }
        total = &total + &factor;
        // next assignment
        let mut k = 0;
        loop {
            if k == assignment.len() {
                return Ok(total);
            }
            assignment[k] += 1;
            if assignment[k] < pairs.len() {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn circle_rotation_is_plus_one() {
        let d = TangleDiagram::parse("u / n").unwrap();
        assert_eq!(rotation_numbers(&d).unwrap(), vec![1]);
    }

    #[test]
    fn zero_rotation_curve_through_a_virtual() {
        let d = TangleDiagram::parse("u / o / n").unwrap();
        assert_eq!(rotation_numbers(&d).unwrap(), vec![0]);
    }

    #[test]
    fn trefoil_rotation_is_two() {
        let d = builtins::tangle("virtual-trefoil").unwrap();
        assert_eq!(rotation_numbers(&d).unwrap(), vec![2]);
    }

    #[test]
    fn rotation_requires_closed() {
        let d = TangleDiagram::parse("x+").unwrap();
        assert!(rotation_numbers(&d).is_err());
    }

    #[test]
    fn crossing_free_circle_concentrates_to_a_grouplike_power() {
        let d = TangleDiagram::parse("u / n").unwrap();
        let w = concentrate(&d).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0].tokens.is_empty());
        assert_eq!(w[0].g_exp, 1);
        assert_eq!(w[0].to_string(), "TR[G]");
    }

    #[test]
    fn disjoint_circles_give_independent_words() {
        // two circles side by side
        let d = TangleDiagram::parse("u / i i u / n n").unwrap();
        let w = concentrate(&d).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|t| t.tokens.is_empty()));
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let w = TraceWord {
            tokens: vec![
                TraceToken {
                    crossing: 1,
                    side: Side::EPrime,
                    power: 0,
                },
                TraceToken {
                    crossing: 2,
                    side: Side::E,
                    power: 1,
                },
                TraceToken {
                    crossing: 1,
                    side: Side::E,
                    power: 2,
                },
                TraceToken {
                    crossing: 2,
                    side: Side::EPrime,
                    power: 3,
                },
            ],
            g_exp: 2,
        };
        // rebase across one extremum and rotate one token past the marker
        let mut tokens = w.tokens.clone();
        let first = tokens.remove(0);
        let mut moved = first;
        moved.power += 2 * w.g_exp;
        tokens.push(moved);
        for t in tokens.iter_mut() {
            t.power -= 1;
        }
        let shifted = TraceWord {
            tokens,
            g_exp: w.g_exp,
        };
        assert_eq!(w.canonical(), shifted.canonical());
        assert!(words_equal_cyclic(&[w], &[shifted]));
    }

    #[test]
    fn trefoil_matches_the_expected_cyclic_word() {
        let d = builtins::tangle("virtual-trefoil").unwrap();
        let got = concentrate(&d).unwrap();
        let expect = TraceWord {
            tokens: vec![
                TraceToken {
                    crossing: 1,
                    side: Side::EPrime,
                    power: 0,
                },
                TraceToken {
                    crossing: 2,
                    side: Side::E,
                    power: 1,
                },
                TraceToken {
                    crossing: 1,
                    side: Side::E,
                    power: 2,
                },
                TraceToken {
                    crossing: 2,
                    side: Side::EPrime,
                    power: 3,
                },
            ],
            g_exp: 2,
        };
        assert!(words_equal_cyclic(&got, &[expect]));
        assert_eq!(got[0].g_exp, 2);
    }

    #[test]
    fn trefoil_word_survives_reslicing_and_rebasing() {
        let base = builtins::tangle("virtual-trefoil").unwrap();
        let variants = [
            // identity padding
            "u / i i u / i i i i / i o i / x+ i i / i i x+ / i n i / n",
            // commuting tiles split across slices the other way
            "u / i i u / i o i / i i x+ / x+ i i / i n i / n",
            // commuting tiles merged into one slice
            "u / i i u / i o i / x+ x+ / i n i / n",
        ];
        let want = concentrate(&base).unwrap();
        for text in variants {
            let d = TangleDiagram::parse(text).unwrap();
            let got = concentrate(&d).unwrap();
            assert!(words_equal_cyclic(&got, &want), "variant `{text}`");
        }
    }

    #[test]
    fn circle_trace_value_is_the_integral_of_g() {
        let h = builtins::hopf_data("sweedler4").unwrap();
        let d = TangleDiagram::parse("u / n").unwrap();
        let words = concentrate(&d).unwrap();
        let v = evaluate_trace(&words, &h).unwrap();
        // lambda(G) for this algebra is zero
        assert!(v.is_zero());
        let empty: Vec<TraceWord> = Vec::new();
        assert!(evaluate_trace(&empty, &h).unwrap().is_one());
    }

    #[test]
    fn trace_value_is_cyclic_invariant() {
        let h = builtins::hopf_data("sweedler4").unwrap();
        let d = builtins::tangle("virtual-trefoil").unwrap();
        let words = concentrate(&d).unwrap();
        let v1 = evaluate_trace(&words, &h).unwrap();
        // rotate the word by hand; evaluation canonicalizes first
        let w = &words[0];
        for start in 1..w.tokens.len() {
            let mut tokens = Vec::new();
            for k in 0..w.tokens.len() {
                let idx = (start + k) % w.tokens.len();
                let mut t = w.tokens[idx];
                if start + k >= w.tokens.len() {
                    t.power += 2 * w.g_exp;
                }
                tokens.push(t);
            }
            let rotated = TraceWord {
                tokens,
                g_exp: w.g_exp,
            };
            let v2 = evaluate_trace(&[rotated], &h).unwrap();
            assert_eq!(v1, v2, "rotation {start}");
        }
    }
}
