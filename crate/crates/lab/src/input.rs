//! Text inputs: braid words, PD codes, pretzel tuples, catalog labels, or a
//! file holding one of these.

use std::path::Path;

use anyhow::{bail, Context, Result};
use knotlab_core::diagram::build::{pretzel, TwistScheme};
use knotlab_core::diagram::{Braid, Diagram};

use crate::catalog;

#[derive(Clone, Debug)]
pub struct Parsed {
    pub diagram: Diagram,
    pub braid: Option<Braid>,
    /// Normalized form of the input, good for reproducing it.
    pub canonical: String,
}

/// Expands `(..)^k` groups in a braid word body: `"(2 3 -2)^2 1"`.
pub fn expand_powers(word: &str) -> Result<String> {
    let mut out = String::new();
    let mut rest = word;
    while let Some(open) = rest.find('(') {
        out.push_str(&rest[..open]);
        let close = rest[open..].find(')').map(|c| c + open).context("unclosed `(` in braid word")?;
        let group = &rest[open + 1..close];
        let after = &rest[close + 1..];
        let (times, tail) = match after.strip_prefix('^') {
            Some(a) => {
                let end = a.find(|c: char| !c.is_ascii_digit()).unwrap_or(a.len());
                (a[..end].parse::<usize>().context("bad exponent after `)^`")?, &a[end..])
            }
            None => (1, after),
        };
        for _ in 0..times {
            out.push(' ');
            out.push_str(group);
            out.push(' ');
        }
        rest = tail;
    }
    out.push_str(rest);
    Ok(out.split_whitespace().collect::<Vec<_>>().join(" "))
}

pub fn parse_braid(s: &str) -> Result<Braid> {
    let (n, w) = s.split_once(':').context("braid words look like `strands: g1 g2 ...`")?;
    let text = format!("{}: {}", n.trim(), expand_powers(w)?);
    Braid::parse(&text).with_context(|| format!("parsing braid {s:?}"))
}

/// `pretzel: 3 3 3 -1`, every twist region reverse-oriented.
fn parse_pretzel(body: &str) -> Result<Diagram> {
    let entries = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().with_context(|| format!("bad pretzel entry {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(pretzel(&entries, &[TwistScheme::Reverse])?)
}

pub fn parse_literal(s: &str) -> Result<Parsed> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix("pretzel:") {
        let d = parse_pretzel(body)?;
        return Ok(Parsed { diagram: d, braid: None, canonical: format!("pretzel: {}", body.trim()) });
    }
    if s.contains("X[") || s == "PD[]" {
        let d = Diagram::parse_pd(s).context("parsing PD code")?;
        return Ok(Parsed { canonical: d.to_pd(), diagram: d, braid: None });
    }
    if s.contains(':') {
        let b = parse_braid(s)?;
        let d = Diagram::from_braid(&b);
        return Ok(Parsed { diagram: d, canonical: b.to_string(), braid: Some(b) });
    }
    if let Some(e) = catalog::catalog().into_iter().find(|e| e.label == s) {
        return parse_literal(&e.input);
    }
    bail!("cannot read {s:?}: expected a braid `n: w...`, a PD code `X[..] ...`, `pretzel: a b ...`, a catalog label or a file")
}

/// A literal, or the contents of a file when `s` names one.
pub fn parse_input(s: &str) -> Result<Parsed> {
    let p = Path::new(s);
    if p.is_file() {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {s}"))?;
        return parse_literal(&text);
    }
    parse_literal(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_expand() {
        assert_eq!(expand_powers("(2 3 -2 1 2 -1)^2 1").unwrap(), "2 3 -2 1 2 -1 2 3 -2 1 2 -1 1");
        assert_eq!(parse_braid("3: (1 2)^3").unwrap().word.len(), 6);
        assert!(expand_powers("(1 2").is_err());
    }

    #[test]
    fn literal_kinds() {
        assert_eq!(parse_literal("2: 1 1 1").unwrap().diagram.crossing_count(), 3);
        assert_eq!(parse_literal("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap().diagram.crossing_count(), 3);
        assert_eq!(parse_literal("pretzel: 3 3 3 -1").unwrap().diagram.crossing_count(), 10);
        assert_eq!(parse_literal("brep").unwrap().braid.unwrap().strands, 4);
        assert!(parse_literal("nonsense").is_err());
    }
}
