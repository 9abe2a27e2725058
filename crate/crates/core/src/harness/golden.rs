//! Golden values: one `lambda2 <name> <value>` or `affine <m> <a> <b>` per line.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{HarnessError, VerificationReport};

pub const GOLDEN_HEADER: &str = "# knotcover golden values, format 1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Golden {
    pub lambda2: BTreeMap<String, String>,
    pub affine: BTreeMap<i64, (String, String)>,
}

impl Golden {
    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self, HarnessError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {}", path.display(), e)))?;
        parse_golden(&text)
    }

    /// Golden values recorded from a passing run.
    pub fn from_report(r: &VerificationReport) -> Self {
        let lambda2 = r.rows.iter().filter_map(|row| Some((row.name.clone(), row.lambda2.clone()?))).collect();
        let affine = r.affine.iter().map(|f| (f.m, (f.a.to_string(), f.b.to_string()))).collect();
        Self { lambda2, affine }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{GOLDEN_HEADER}\n");
        for (name, v) in &self.lambda2 {
            writeln!(s, "lambda2 {name} {v}").unwrap();
        }
        for (m, (a, b)) in &self.affine {
            writeln!(s, "affine {m} {a} {b}").unwrap();
        }
        s
    }
}

pub fn parse_golden(text: &str) -> Result<Golden, HarnessError> {
    let mut g = Golden::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |msg: &str| HarnessError::Parse { line, msg: msg.to_string() };
        let f: Vec<&str> = body.split_whitespace().collect();
        let valid_rational = |s: &str| s.parse::<crate::algebra::Rational>().is_ok();
        match f.as_slice() {
            ["lambda2", name, v] if valid_rational(v) => {
                g.lambda2.insert(name.to_string(), v.to_string());
            }
            ["affine", m, a, b] if valid_rational(a) && valid_rational(b) => {
                let m = m.parse().map_err(|_| bad("bad twist count"))?;
                g.affine.insert(m, (a.to_string(), b.to_string()));
            }
            _ => return Err(bad("expected `lambda2 <name> <q>` or `affine <m> <a> <b>`")),
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = parse_golden("# x\nlambda2 3_1 -1/6\naffine -2 1/2 0\n").unwrap();
        assert_eq!(g.lambda2["3_1"], "-1/6");
        assert_eq!(g.affine[&-2], ("1/2".to_string(), "0".to_string()));
        assert_eq!(parse_golden(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_golden("lambda2 x"), Err(HarnessError::Parse { line: 1, .. })));
        assert!(matches!(parse_golden("\nlambda2 x 1/0x"), Err(HarnessError::Parse { line: 2, .. })));
    }
}
