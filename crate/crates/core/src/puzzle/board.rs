//! Row-by-row enumeration of puzzle fillings.
//!
//! Row `r` (counting from the apex) holds `r + 1` upward and `r` downward unit
//! triangles, alternating from the left. Filling a row only needs the labels
//! on the bottoms of the row above, so rows are processed as a transfer
//! operator on these frontiers and fillings sharing a frontier are counted
//! together.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::pieces::{Cell, Label, PieceSet};

/// How the three boundary words are laid along the sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryReading {
    /// North-west word starts at the bottom-left corner (else at the apex).
    pub nw_from_bottom: bool,
    /// North-east word starts at the apex (else at the bottom-right corner).
    pub ne_from_apex: bool,
    /// South word starts at the bottom-right corner (else bottom-left).
    pub s_from_right: bool,
}

impl BoundaryReading {
    /// All three sides read clockwise.
    pub const CLOCKWISE: BoundaryReading = BoundaryReading {
        nw_from_bottom: true,
        ne_from_apex: true,
        s_from_right: true,
    };
}

/// Boundary labels expressed per row.
struct Frame {
    left: Vec<Label>,
    right: Vec<Label>,
    bottom: Vec<Label>,
}

impl Frame {
    fn new(reading: BoundaryReading, nw: &[Label], ne: &[Label], s: &[Label]) -> Self {
        let n = nw.len();
        let pick = |word: &[Label], forward: bool, i: usize| {
            if forward {
                word[i]
            } else {
                word[n - 1 - i]
            }
        };
        Frame {
            left: (0..n).map(|r| pick(nw, !reading.nw_from_bottom, r)).collect(),
            right: (0..n).map(|r| pick(ne, reading.ne_from_apex, r)).collect(),
            bottom: (0..n).map(|j| pick(s, !reading.s_from_right, j)).collect(),
        }
    }
}

/// A fully assigned board: `rows[r]` lists the cells of row `r` from left to
/// right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleBoard {
    pub rows: Vec<Vec<Cell>>,
}

impl PuzzleBoard {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Plain-text dump, one row per line. Private labels print as `*`.
    pub fn render(&self) -> String {
        let show = |l: Label| {
            if l < super::pieces::FIRST_AUX {
                char::from(b'0' + l)
            } else {
                '*'
            }
        };
        let mut out = String::new();
        let n = self.rows.len();
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(&" ".repeat(2 * (n - 1 - r)));
            for cell in row {
                let (open, close) = match cell.orientation {
                    super::pieces::Orientation::Up => ('/', '\\'),
                    super::pieces::Orientation::Down => ('\\', '/'),
                };
                let _ = write!(
                    out,
                    "{open}{}{}{}{close}",
                    show(cell.slash),
                    show(cell.horizontal),
                    show(cell.backslash)
                );
            }
            out.push('\n');
        }
        out
    }
}

/// Lookup tables over a [`PieceSet`].
#[derive(Clone, Debug)]
pub struct Tiler {
    labels: usize,
    /// Upward cells by their `/` label: `(\, horizontal)`.
    up_by_slash: Vec<Vec<(Label, Label)>>,
    /// Downward cells by `(horizontal, \)`: the `/` labels.
    down_by_top_left: Vec<Vec<Label>>,
    reading: BoundaryReading,
}

impl Tiler {
    pub fn new(pieces: &PieceSet, reading: BoundaryReading) -> Self {
        let labels = pieces.label_count();
        let mut up_by_slash = vec![Vec::new(); labels];
        let mut down_by_top_left = vec![Vec::new(); labels * labels];
        for c in pieces.cells() {
            match c.orientation {
                super::pieces::Orientation::Up => {
                    up_by_slash[c.slash as usize].push((c.backslash, c.horizontal))
                }
                super::pieces::Orientation::Down => down_by_top_left
                    [c.horizontal as usize * labels + c.backslash as usize]
                    .push(c.slash),
            }
        }
        Tiler {
            labels,
            up_by_slash,
            down_by_top_left,
            reading,
        }
    }

    /// Number of fillings with the given boundary words (all of one length).
    pub fn count(&self, nw: &[Label], ne: &[Label], s: &[Label]) -> u64 {
        let n = nw.len();
        assert!(ne.len() == n && s.len() == n, "boundary words differ in length");
        if n == 0 {
            return 1;
        }
        let frame = Frame::new(self.reading, nw, ne, s);
        let mut layer: HashMap<Vec<Label>, u64> = HashMap::from([(Vec::new(), 1)]);
        for r in 0..n {
            let target = (r == n - 1).then_some(frame.bottom.as_slice());
            let mut next: HashMap<Vec<Label>, u64> = HashMap::new();
            let mut bottom = Vec::with_capacity(r + 1);
            for (top, ways) in &layer {
                self.extend_row(
                    top,
                    frame.left[r],
                    frame.right[r],
                    target,
                    &mut bottom,
                    &mut |b: &[Label]| *next.entry(b.to_vec()).or_default() += ways,
                );
            }
            if next.is_empty() {
                return 0;
            }
            layer = next;
        }
        layer.get(frame.bottom.as_slice()).copied().unwrap_or(0)
    }

    fn extend_row(
        &self,
        top: &[Label],
        incoming: Label,
        right: Label,
        target: Option<&[Label]>,
        bottom: &mut Vec<Label>,
        emit: &mut impl FnMut(&[Label]),
    ) {
        let j = bottom.len();
        let last = j == top.len();
        for &(backslash, horizontal) in &self.up_by_slash[incoming as usize] {
            if target.is_some_and(|t| t[j] != horizontal) {
                continue;
            }
            bottom.push(horizontal);
            if last {
                if backslash == right {
                    emit(bottom);
                }
            } else {
                let key = top[j] as usize * self.labels + backslash as usize;
                for &slash in &self.down_by_top_left[key] {
                    self.extend_row(top, slash, right, target, bottom, emit);
                }
            }
            bottom.pop();
        }
    }

    /// Every filling, up to `limit` of them.
    pub fn enumerate(&self, nw: &[Label], ne: &[Label], s: &[Label], limit: usize) -> Vec<PuzzleBoard> {
        let n = nw.len();
        assert!(ne.len() == n && s.len() == n, "boundary words differ in length");
        let frame = Frame::new(self.reading, nw, ne, s);
        let mut out = Vec::new();
        let mut rows = Vec::new();
        self.enumerate_rows(&frame, &[], &mut rows, &mut out, limit);
        out
    }

    fn enumerate_rows(
        &self,
        frame: &Frame,
        top: &[Label],
        rows: &mut Vec<Vec<Cell>>,
        out: &mut Vec<PuzzleBoard>,
        limit: usize,
    ) {
        let n = frame.left.len();
        let r = rows.len();
        if r == n {
            if top == frame.bottom.as_slice() && out.len() < limit {
                out.push(PuzzleBoard { rows: rows.clone() });
            }
            return;
        }
        let mut row_fills: Vec<Vec<Cell>> = Vec::new();
        let target = (r == n - 1).then_some(frame.bottom.as_slice());
        self.row_cells(top, frame.left[r], frame.right[r], target, &mut Vec::new(), &mut row_fills);
        for cells in row_fills {
            if out.len() >= limit {
                return;
            }
            let bottom: Vec<Label> = cells.iter().step_by(2).map(|c| c.horizontal).collect();
            rows.push(cells);
            self.enumerate_rows(frame, &bottom, rows, out, limit);
            rows.pop();
        }
    }

    fn row_cells(
        &self,
        top: &[Label],
        incoming: Label,
        right: Label,
        target: Option<&[Label]>,
        cells: &mut Vec<Cell>,
        out: &mut Vec<Vec<Cell>>,
    ) {
        let j = cells.len() / 2;
        for &(backslash, horizontal) in &self.up_by_slash[incoming as usize] {
            if target.is_some_and(|t| t[j] != horizontal) {
                continue;
            }
            cells.push(Cell::up(horizontal, incoming, backslash));
            if j == top.len() {
                if backslash == right {
                    out.push(cells.clone());
                }
            } else {
                let key = top[j] as usize * self.labels + backslash as usize;
                for &slash in &self.down_by_top_left[key] {
                    cells.push(Cell::down(top[j], slash, backslash));
                    self.row_cells(top, slash, right, target, cells, out);
                    cells.pop();
                }
            }
            cells.pop();
        }
    }
}
