//! Puzzle counting for Grassmannians and two-step flag varieties.

mod board;
mod pieces;

use std::sync::OnceLock;

pub use board::{BoundaryReading, PuzzleBoard, Tiler};
pub use pieces::{
    one_step_convention, two_step_convention, Cell, Filler, Label, Lean, Orientation,
    PieceConvention, PieceSet, RhombusSpec, FIRST_AUX,
};

use crate::combinat::{Alphabet, LabelString};
use crate::error::{Error, Result};

/// How boundary words are laid on the triangle.
pub const READING: BoundaryReading = BoundaryReading::CLOCKWISE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PuzzleKind {
    OneStep,
    TwoStep,
}

impl PuzzleKind {
    pub fn tiler(self) -> &'static Tiler {
        static ONE: OnceLock<Tiler> = OnceLock::new();
        static TWO: OnceLock<Tiler> = OnceLock::new();
        match self {
            PuzzleKind::OneStep => {
                ONE.get_or_init(|| Tiler::new(&PieceSet::build(&one_step_convention()), READING))
            }
            PuzzleKind::TwoStep => {
                TWO.get_or_init(|| Tiler::new(&PieceSet::build(&two_step_convention()), READING))
            }
        }
    }

    fn validate(self, nw: &LabelString, ne: &LabelString, s: &LabelString) -> Result<()> {
        let sides = [nw, ne, s];
        if sides.iter().any(|x| x.len() != nw.len()) {
            return Err(Error::Boundary(format!(
                "side lengths differ: {}, {}, {}",
                nw.len(),
                ne.len(),
                s.len()
            )));
        }
        match self {
            PuzzleKind::OneStep => {
                if let Some(bad) = sides.iter().find(|x| x.count(2) > 0) {
                    return Err(Error::BadString(format!("{bad} is not a 01-string")));
                }
            }
            PuzzleKind::TwoStep => {
                for symbol in 0..3 {
                    let counts = sides.map(|x| x.count(symbol));
                    if counts.iter().any(|&c| c != counts[0]) {
                        return Err(Error::Boundary(format!(
                            "sides carry different numbers of {symbol}s: {counts:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of puzzles with the given north-west, north-east and south
    /// labels.
    pub fn count(self, nw: &LabelString, ne: &LabelString, s: &LabelString) -> Result<u64> {
        self.validate(nw, ne, s)?;
        Ok(self.tiler().count(nw.symbols(), ne.symbols(), s.symbols()))
    }

    /// Up to `limit` explicit puzzles.
    pub fn enumerate(
        self,
        nw: &LabelString,
        ne: &LabelString,
        s: &LabelString,
        limit: usize,
    ) -> Result<Vec<PuzzleBoard>> {
        self.validate(nw, ne, s)?;
        Ok(self.tiler().enumerate(nw.symbols(), ne.symbols(), s.symbols(), limit))
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            PuzzleKind::OneStep => Alphabet::Binary,
            PuzzleKind::TwoStep => Alphabet::Ternary,
        }
    }
}

pub fn count_puzzles_1step(nw: &LabelString, ne: &LabelString, s: &LabelString) -> Result<u64> {
    PuzzleKind::OneStep.count(nw, ne, s)
}

pub fn count_puzzles_2step(nw: &LabelString, ne: &LabelString, s: &LabelString) -> Result<u64> {
    PuzzleKind::TwoStep.count(nw, ne, s)
}
