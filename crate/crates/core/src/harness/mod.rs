//! Corpus files, batch verification and report formatting.
//!
//! A corpus is a text file of `name | braid | tags` records; `#` starts a
//! comment and blank lines are skipped.

mod golden;
mod output;
mod verify;

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::links::BraidWord;

pub use golden::{parse_golden, Golden, GOLDEN_HEADER};
pub use output::{render, render_record, render_rows, Format};
pub use verify::{
    compute_row, random_bordered_checks, run_verification, CheckKind, EntryReport, InvariantRow, SuiteReport,
    VerificationReport, VerifyConfig, AFFINE_COMPANIONS, AFFINE_TWISTS,
};




#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("{0}")]
    Io(String),
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub braid: BraidWord,
    pub tags: BTreeSet<String>,
}

const BUNDLED: &str = include_str!("../../data/corpus.txt");
const BUNDLED_GOLDEN: &str = include_str!("../../data/golden.txt");

/// The corpus shipped with the crate.
pub fn bundled_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED).expect("bundled corpus is valid")
}

/// Golden values recorded for the bundled corpus.
pub fn bundled_golden() -> Golden {
    parse_golden(BUNDLED_GOLDEN).expect("bundled golden file is valid")
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {}", path.display(), e)))?;
    parse_corpus(&text)
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, HarnessError> {
    let mut out = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split('|').map(str::trim).collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(HarnessError::Parse { line, msg: "expected `name | braid | tags`".into() });
        }
        let name = fields[0];
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(HarnessError::Parse { line, msg: "names must be nonempty and contain no spaces".into() });
        }
        let braid = BraidWord::from_str(fields[1]).map_err(|e| HarnessError::Parse { line, msg: e.to_string() })?;
        let tags = fields.get(2).map(|t| t.split_whitespace().map(String::from).collect()).unwrap_or_default();
        if seen.insert(name.to_string(), line).is_some() {
            return Err(HarnessError::DuplicateName { line, name: name.to_string() });
        }
        out.push(CorpusEntry { name: name.to_string(), braid, tags });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_is_valid() {
        let c = bundled_corpus();
        assert!(c.len() >= 15);
        for name in ["unknot", "hopf", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "whitehead", "borromean"] {
            assert!(c.iter().any(|e| e.name == name), "{}", name);
        }
        for k in 2..=6 {
            let e = c.iter().find(|e| e.name == format!("unlink{}", k)).unwrap();
            assert_eq!(e.braid.components(), k);
        }
    }

    #[test]
    fn single_record() {
        let c = parse_corpus("3_1 | 2; 1 1 1 | knot\n").unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].tags.contains("knot"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_corpus("# c\nok | 2; 1\nbad | 2; 3\n").unwrap_err(),
            HarnessError::Parse { line: 3, msg: "letter 3 out of range for 2 strands".into() }
        );
        assert!(matches!(parse_corpus("x | 2; 1\nx | 2; 1 1\n"), Err(HarnessError::DuplicateName { line: 2, .. })));
        assert!(matches!(parse_corpus("no pipes here\n"), Err(HarnessError::Parse { line: 1, .. })));
    }
}
