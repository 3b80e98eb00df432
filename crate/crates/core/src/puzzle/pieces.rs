//! Puzzle pieces, cut into labelled unit triangles.
//!
//! A puzzle lives on the triangular grid. Edges have one of three directions:
//! horizontal, `/` and `\`. An upward unit triangle has a horizontal bottom
//! edge, a `/` left edge and a `\` right edge; a downward one has a horizontal
//! top edge, a `\` left edge and a `/` right edge.
//!
//! Every piece is stored as the set of unit triangles it covers. Edges inside
//! a piece carry private labels (numbered from [`FIRST_AUX`]) that no other
//! piece uses, so a tiling by unit triangles with matching edges is the same
//! thing as a tiling by pieces. Stretchable rhombi are chains of unit rhombi
//! glued along private labels; a chain can only start and end with its
//! designated end segments, which makes every length available at once.

use std::collections::BTreeSet;

pub type Label = u8;

/// Labels `0..FIRST_AUX` are the visible alphabet; larger labels never reach
/// the boundary.
pub const FIRST_AUX: Label = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Up,
    Down,
}

/// A unit triangle with labels on its horizontal, `/` and `\` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub orientation: Orientation,
    pub horizontal: Label,
    pub slash: Label,
    pub backslash: Label,
}

impl Cell {
    pub fn up(horizontal: Label, slash: Label, backslash: Label) -> Self {
        Cell {
            orientation: Orientation::Up,
            horizontal,
            slash,
            backslash,
        }
    }

    pub fn down(horizontal: Label, slash: Label, backslash: Label) -> Self {
        Cell {
            orientation: Orientation::Down,
            horizontal,
            slash,
            backslash,
        }
    }

    /// Rotation by 60 degrees counterclockwise about a vertex.
    ///
    /// Horizontal edges become `/` edges, `/` become `\` and `\` become
    /// horizontal; upward triangles turn into downward ones and back.
    pub fn rotate60(self) -> Cell {
        Cell {
            orientation: match self.orientation {
                Orientation::Up => Orientation::Down,
                Orientation::Down => Orientation::Up,
            },
            slash: self.horizontal,
            backslash: self.slash,
            horizontal: self.backslash,
        }
    }

    fn map_labels(self, f: impl Fn(Label) -> Label) -> Cell {
        Cell {
            orientation: self.orientation,
            horizontal: f(self.horizontal),
            slash: f(self.slash),
            backslash: f(self.backslash),
        }
    }
}

/// Which way the slanted sides of a horizontal parallelogram lean.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lean {
    /// `/ /`: the top edge is shifted right of the bottom edge.
    Right,
    /// `\ \`: the top edge is shifted left of the bottom edge.
    Left,
}

/// Where the filler labels of a stretched rhombus go on its top edge; the
/// bottom edge gets them on the opposite side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filler {
    AfterTop,
    BeforeTop,
}

/// A rhombus drawn as a horizontal parallelogram: `across` on the two
/// horizontal edges, `side` on the slanted ones. With a `stretch` label the
/// piece may be lengthened by inserting any number of `stretch` labels next
/// to `across` on the top and bottom edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RhombusSpec {
    pub lean: Lean,
    pub across: Label,
    pub side: Label,
    pub stretch: Option<(Label, Filler)>,
}

/// Triangles and rhombi making up a piece set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PieceConvention {
    pub triangles: Vec<Label>,
    pub rhombi: Vec<RhombusSpec>,
}

/// A closed, rotation-complete set of unit cells.
#[derive(Clone, Debug)]
pub struct PieceSet {
    cells: Vec<Cell>,
    label_count: usize,
}

struct AuxAlloc(Label);

impl AuxAlloc {
    fn next(&mut self) -> Label {
        let l = self.0;
        self.0 = self.0.checked_add(1).expect("too many private labels");
        l
    }
}

/// A unit rhombus of a horizontal parallelogram: one up and one down cell.
fn unit_rhombus(
    lean: Lean,
    left: Label,
    right: Label,
    top: Label,
    bottom: Label,
    inner: Label,
) -> [Cell; 2] {
    match lean {
        // up cell on the left, sharing its `\` edge with the down cell
        Lean::Right => [Cell::up(bottom, left, inner), Cell::down(top, right, inner)],
        // down cell on the left, sharing its `/` edge with the up cell
        Lean::Left => [Cell::down(top, inner, left), Cell::up(bottom, inner, right)],
    }
}

fn rotations(cells: &[Cell], turns: usize) -> Vec<Cell> {
    let mut out = cells.to_vec();
    for _ in 0..turns {
        out = out.into_iter().map(Cell::rotate60).collect();
    }
    out
}

impl PieceSet {
    pub fn build(convention: &PieceConvention) -> Self {
        let mut cells = BTreeSet::new();
        for &t in &convention.triangles {
            // rotations by 120 degrees fix a monochrome triangle
            cells.insert(Cell::up(t, t, t));
            cells.insert(Cell::down(t, t, t));
        }
        let mut aux = AuxAlloc(FIRST_AUX);
        for spec in &convention.rhombi {
            // a rhombus is fixed by the half turn, so three rotations give
            // every orientation exactly once
            for turns in 0..3 {
                let mut piece = Vec::new();
                let (a, s) = (spec.across, spec.side);
                piece.extend(unit_rhombus(spec.lean, s, s, a, a, aux.next()));
                if let Some((fill, side)) = spec.stretch {
                    let link = aux.next();
                    let (first_top, first_bottom, last_top, last_bottom) = match side {
                        Filler::AfterTop => (a, fill, fill, a),
                        Filler::BeforeTop => (fill, a, a, fill),
                    };
                    piece.extend(unit_rhombus(spec.lean, s, link, first_top, first_bottom, aux.next()));
                    piece.extend(unit_rhombus(spec.lean, link, link, fill, fill, aux.next()));
                    piece.extend(unit_rhombus(spec.lean, link, s, last_top, last_bottom, aux.next()));
                }
                cells.extend(rotations(&piece, turns));
            }
        }
        let label_count = aux.0 as usize;
        PieceSet {
            cells: cells.into_iter().collect(),
            label_count,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// One more than the largest label in use.
    pub fn label_count(&self) -> usize {
        self.label_count
    }

    /// The same set with every visible label passed through `f`.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Self {
        let g = |l: Label| if l < FIRST_AUX { f(l) } else { l };
        PieceSet {
            cells: self.cells.iter().map(|c| c.map_labels(g)).collect(),
            label_count: self.label_count,
        }
    }
}

/// The pieces for Grassmannian puzzles: monochrome 0- and 1-triangles and the
/// 0/1 rhombus.
pub fn one_step_convention() -> PieceConvention {
    PieceConvention {
        triangles: vec![0, 1],
        rhombi: vec![RhombusSpec {
            lean: ONE_STEP_LEAN,
            across: 0,
            side: 1,
            stretch: None,
        }],
    }
}

/// The six piece types for two-step flag varieties: three monochrome
/// triangles, the 0/1 rhombus stretched by `2`s, the rigid 0/2 rhombus and
/// the 1/2 rhombus stretched by `0`s.
pub fn two_step_convention() -> PieceConvention {
    PieceConvention {
        triangles: vec![0, 1, 2],
        rhombi: vec![
            RhombusSpec {
                lean: Lean::Left,
                across: 0,
                side: 1,
                stretch: Some((2, Filler::AfterTop)),
            },
            RhombusSpec {
                lean: Lean::Left,
                across: 0,
                side: 2,
                stretch: None,
            },
            RhombusSpec {
                lean: Lean::Right,
                across: 2,
                side: 1,
                stretch: Some((0, Filler::BeforeTop)),
            },
        ],
    }
}

/// The parallelogram with `0` on its horizontal edges leans this way when
/// boundaries are read clockwise.
pub const ONE_STEP_LEAN: Lean = Lean::Left;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_has_order_six() {
        let c = Cell::up(0, 1, 2);
        let mut r = c;
        for _ in 0..6 {
            r = r.rotate60();
        }
        assert_eq!(r, c);
        assert_eq!(c.rotate60().rotate60().rotate60(), Cell::down(0, 1, 2));
    }

    #[test]
    fn piece_sets_are_rotation_closed_on_visible_cells() {
        for conv in [one_step_convention(), two_step_convention()] {
            let set = PieceSet::build(&conv);
            let visible: BTreeSet<Cell> = set
                .cells()
                .iter()
                .copied()
                .filter(|c| c.horizontal < FIRST_AUX && c.slash < FIRST_AUX && c.backslash < FIRST_AUX)
                .collect();
            for c in &visible {
                assert!(visible.contains(&c.rotate60()), "{c:?}");
            }
        }
    }

    #[test]
    fn one_step_cell_count() {
        // 4 monochrome cells + 3 orientations x 2 cells
        assert_eq!(PieceSet::build(&one_step_convention()).cells().len(), 10);
    }
}
