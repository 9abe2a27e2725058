//! Oriented link presentations: braid words, sliced (Morse) diagrams and
//! planar diagram codes, plus the skein and doubling constructions.

mod braid;
mod double;
mod planar;
mod sliced;

use thiserror::Error;

pub use braid::{cable2, make_unlink, skein_triple, BraidWord, CrossingSite, SkeinTriple};
pub use double::{twisted_double, Clasp, TwistedDouble};
pub use planar::{Corner, PdCrossing, PlanarDiagram};
pub use sliced::{Slice, SlicedDiagram};

/// The oriented diagram of a braid closure.
pub type LinkDiagram = PlanarDiagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("crossing site {site} out of range for a word of length {len}")]
    SiteOutOfRange { site: usize, len: usize },
    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("slice {index}: {reason}")]
    BadSlice { index: usize, reason: &'static str },
    #[error("invalid diagram: {0}")]
    BadDiagram(String),
}

pub fn parse_braid(text: &str) -> Result<BraidWord, LinkError> {
    BraidWord::parse(text)
}

pub fn braid_closure(b: &BraidWord) -> LinkDiagram {
    b.closure_sliced().to_planar()
}
