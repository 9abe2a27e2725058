//! Exact invariants of oriented links presented as closed braids, and of
//! their double branched covers.

pub mod algebra;
pub mod covers;
pub mod links;
pub mod harness;
pub mod jones;
pub mod lescop;
pub mod report;
pub mod seifert;
pub mod symforms;
