//! Double-stranded alignments.
//!
//! A strand is a sequence of blocks; block `b` at index `j` is its unit
//! repeated `growth * j + base` times. The top strand spells the core words
//! `r_j`, the bottom strand the procedure words `s_j`. Pumped windows are
//! insertion points shared by both strands: going from `j` to `j + 1`
//! inserts the same number of symbols at the same position on both sides.

use std::fmt;

pub(crate) fn char_len(s: &str) -> usize {
    s.chars().count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub unit: String,
    pub growth: usize,
    pub base: usize,
}

impl Block {
    pub fn fixed(text: &str) -> Block {
        Block {
            unit: text.to_string(),
            growth: 0,
            base: 1,
        }
    }

    /// `unit^(growth * j + 1)`
    pub fn periodic(unit: &str, growth: usize) -> Block {
        Block {
            unit: unit.to_string(),
            growth,
            base: 1,
        }
    }

    pub fn unit_len(&self) -> usize {
        char_len(&self.unit)
    }

    pub fn len_at(&self, j: usize) -> usize {
        self.unit_len() * (self.growth * j + self.base)
    }

    /// Symbols added per unit step of `j`.
    pub fn step(&self) -> usize {
        self.unit_len() * self.growth
    }

    pub fn at(&self, j: usize) -> String {
        self.unit.repeat(self.growth * j + self.base)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub blocks: Vec<Block>,
}

impl Strand {
    pub fn new(blocks: Vec<Block>) -> Strand {
        Strand { blocks }
    }

    pub fn at(&self, j: usize) -> String {
        self.blocks.iter().map(|b| b.at(j)).collect()
    }

    pub fn len_at(&self, j: usize) -> usize {
        self.blocks.iter().map(|b| b.len_at(j)).sum()
    }

    /// Start and end of block `b` within the word at index `j`.
    pub fn bounds(&self, b: usize, j: usize) -> (usize, usize) {
        let start: usize = self.blocks[..b].iter().map(|x| x.len_at(j)).sum();
        (start, start + self.blocks[b].len_at(j))
    }
}

/// A pumped window: which top and bottom block it lives in and how many
/// symbols it inserts per step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub top: usize,
    pub bottom: usize,
    pub len: usize,
}

/// Where a pumped window sits inside its periodic blocks at `j0`: the
/// lengths of the block prefixes before it (the alpha/beta style splits).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowOffset {
    pub top: usize,
    pub bottom: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Carved {
    pub j0: usize,
    pub xi: Vec<String>,
    pub mu: Vec<String>,
    /// One per pumped window; `None` for empty windows.
    pub offsets: Vec<Option<WindowOffset>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CarveFailure {
    /// 1-based pumped-window number.
    pub window: usize,
    pub detail: String,
}

impl fmt::Display for CarveFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pumped window {}: {}", self.window, self.detail)
    }
}

fn check_shape(top: &Strand, bottom: &Strand, windows: &[WindowSpec]) -> Result<(), CarveFailure> {
    let fail = |window: usize, detail: String| Err(CarveFailure { window, detail });
    for (m, w) in windows.iter().enumerate() {
        for (side, strand, b) in [("top", top, w.top), ("bottom", bottom, w.bottom)] {
            let unit = strand.blocks[b].unit_len();
            let ok = if unit == 0 {
                w.len == 0
            } else {
                w.len % unit == 0
            };
            if !ok {
                return fail(
                    m + 1,
                    format!(
                        "length {} is not a multiple of the {side} unit length {unit}",
                        w.len
                    ),
                );
            }
        }
    }
    for (side, strand, pick) in [
        (
            "top",
            top,
            (|w: &WindowSpec| w.top) as fn(&WindowSpec) -> usize,
        ),
        ("bottom", bottom, |w: &WindowSpec| w.bottom),
    ] {
        for (b, block) in strand.blocks.iter().enumerate() {
            let inserted: usize = windows.iter().filter(|w| pick(w) == b).map(|w| w.len).sum();
            if inserted != block.step() {
                let window = windows
                    .iter()
                    .position(|w| pick(w) == b)
                    .map_or(0, |m| m + 1);
                return fail(
                    window,
                    format!(
                        "{side} block {b} grows by {} per step but its windows insert {inserted}",
                        block.step()
                    ),
                );
            }
        }
    }
    if top.len_at(0) != bottom.len_at(0) || top.len_at(1) != bottom.len_at(1) {
        return fail(0, "the strands differ in length".into());
    }
    Ok(())
}

/// Smallest insertion points at index `j0`, or the first window that
/// cannot be placed. Insertion points are non-decreasing and each must lie
/// inside both of its blocks.
fn place(
    top: &Strand,
    bottom: &Strand,
    windows: &[WindowSpec],
    j0: usize,
) -> Result<Vec<usize>, CarveFailure> {
    let mut points = Vec::with_capacity(windows.len());
    let mut prev = 0;
    for (m, w) in windows.iter().enumerate() {
        if w.len == 0 {
            points.push(prev);
            continue;
        }
        let (ts, te) = top.bounds(w.top, j0);
        let (bs, be) = bottom.bounds(w.bottom, j0);
        let f = prev.max(ts).max(bs);
        if f > te.min(be) {
            return Err(CarveFailure {
                window: m + 1,
                detail: format!(
                    "at j0={j0} the window needs offset {f} but top block {} spans {ts}..{te} \
                     and bottom block {} spans {bs}..{be}",
                    w.top, w.bottom
                ),
            });
        }
        points.push(f);
        prev = f;
    }
    Ok(points)
}

/// Finds the smallest `j0 <= bound` at which every window fits and cuts
/// the windows out of `r_{j0+1}` and `s_{j0+1}`.
pub(crate) fn carve(
    top: &Strand,
    bottom: &Strand,
    windows: &[WindowSpec],
    bound: usize,
) -> Result<Carved, CarveFailure> {
    check_shape(top, bottom, windows)?;
    let mut last = None;
    for j0 in 0..=bound {
        let points = match place(top, bottom, windows, j0) {
            Ok(points) => points,
            Err(e) => {
                last = Some(e);
                continue;
            }
        };
        let r: Vec<char> = top.at(j0 + 1).chars().collect();
        let s: Vec<char> = bottom.at(j0 + 1).chars().collect();
        let cut = |v: &[char], a: usize, b: usize| v[a..b].iter().collect::<String>();
        let (mut xi, mut mu, mut offsets) = (Vec::new(), Vec::new(), Vec::new());
        let mut cursor = 0;
        let mut inserted = 0;
        for (w, &f) in windows.iter().zip(&points) {
            let start = f + inserted;
            xi.push(cut(&r, cursor, start));
            mu.push(cut(&s, cursor, start));
            xi.push(cut(&r, start, start + w.len));
            mu.push(cut(&s, start, start + w.len));
            offsets.push((w.len > 0).then(|| WindowOffset {
                top: f - top.bounds(w.top, j0).0,
                bottom: f - bottom.bounds(w.bottom, j0).0,
            }));
            cursor = start + w.len;
            inserted += w.len;
        }
        xi.push(cut(&r, cursor, r.len()));
        mu.push(cut(&s, cursor, s.len()));
        return Ok(Carved {
            j0,
            xi,
            mu,
            offsets,
        });
    }
    Err(last.expect("the loop ran at least once"))
}
