//! Facet-file and coloring-file formats.
//!
//! Facet files: '#' comment lines, an optional leading `name=` token,
//! then a nested list `[[v,v,v],[...],...]` of 1-based vertex labels,
//! whitespace-insensitive. The writer emits sorted facets one per
//! line, so written files re-ingest to an equal complex.
//!
//! Coloring files: '#' header comments recording k, s and the complex
//! name, then one `vertex<TAB>color` line per vertex.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use stschrom_core::coloring::Coloring;
use stschrom_core::complex::{SimplicialComplex, Vertex};

/// A character stream that remembers line and column for errors.
struct Scanner {
    chars: Vec<(char, usize, usize)>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        let mut chars = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            if line.trim_start().starts_with('#') {
                continue;
            }
            for (col, c) in line.chars().enumerate() {
                if !c.is_whitespace() {
                    chars.push((c, ln + 1, col + 1));
                }
            }
        }
        Scanner { chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _, _)| c)
    }

    fn here(&self) -> (usize, usize) {
        self.chars
            .get(self.pos.min(self.chars.len().saturating_sub(1)))
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((0, 0))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            got => {
                let (l, c) = self.here();
                bail!("line {l} col {c}: expected '{want}', found {got:?}")
            }
        }
    }

    fn number(&mut self) -> Result<Vertex> {
        let (l, c) = self.here();
        let mut digits = String::new();
        while let Some(ch) = self.peek() {
            if ch.is_ascii_digit() {
                digits.push(ch);
                self.pos += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            bail!("line {l} col {c}: expected a vertex number");
        }
        digits
            .parse()
            .map_err(|_| anyhow!("line {l} col {c}: vertex number out of range"))
    }
}

/// Parses facet-file text into a complex.
pub fn parse_facet_text(text: &str) -> Result<SimplicialComplex> {
    // optional leading name= token (up to the first '[')
    let mut name = None;
    let mut scanner = Scanner::new(text);
    let head: String = scanner
        .chars
        .iter()
        .map(|&(c, _, _)| c)
        .take_while(|&c| c != '[')
        .collect();
    if let Some(rest) = head.strip_prefix("name=") {
        name = Some(rest.to_string());
        scanner.pos = head.chars().count();
    } else if !head.is_empty() {
        bail!("unexpected text before the facet list: {head:?}");
    }
    scanner.expect('[')?;
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    if scanner.peek() == Some(']') {
        scanner.pos += 1;
    } else {
        loop {
            scanner.expect('[')?;
            let mut facet = vec![scanner.number()?];
            while scanner.peek() == Some(',') {
                scanner.pos += 1;
                facet.push(scanner.number()?);
            }
            scanner.expect(']')?;
            facets.push(facet);
            match scanner.peek() {
                Some(',') => scanner.pos += 1,
                Some(']') => {
                    scanner.pos += 1;
                    break;
                }
                _ => {
                    let (l, c) = scanner.here();
                    bail!("line {l} col {c}: expected ',' or ']'");
                }
            }
        }
    }
    if scanner.pos != scanner.chars.len() {
        let (l, c) = scanner.here();
        bail!("line {l} col {c}: trailing text after the facet list");
    }
    let complex = SimplicialComplex::build(&facets)?;
    Ok(match name {
        Some(n) => complex.with_name(&n),
        None => complex,
    })
}

/// Renders a complex in the canonical format: sorted facets, one per
/// line. `extra_comments` go first, one '#' line each.
pub fn facet_text(complex: &SimplicialComplex, extra_comments: &[String]) -> String {
    let mut out = String::new();
    for c in extra_comments {
        let _ = writeln!(out, "# {c}");
    }
    if let Some(n) = complex.name() {
        let _ = writeln!(out, "name={n}");
    }
    let facets = complex.facets();
    let _ = writeln!(out, "[");
    for (i, f) in facets.iter().enumerate() {
        let row: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let sep = if i + 1 == facets.len() { "" } else { "," };
        let _ = writeln!(out, "[{}]{}", row.join(","), sep);
    }
    let _ = writeln!(out, "]");
    out
}

/// Renders a coloring file.
pub fn coloring_text(coloring: &Coloring, s: u32, complex_name: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# k={} s={} complex={}",
        coloring.k,
        s,
        complex_name.unwrap_or("unnamed")
    );
    for (v, c) in &coloring.assignment {
        let _ = writeln!(out, "{v}\t{c}");
    }
    out
}

/// Parses a coloring file; k comes from the header when present,
/// otherwise from the largest color used.
pub fn parse_coloring_text(text: &str) -> Result<Coloring> {
    let mut k = None;
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            for tok in comment.split_whitespace() {
                if let Some(val) = tok.strip_prefix("k=") {
                    k = Some(val.parse()?);
                }
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (v, c) = match (parts.next(), parts.next(), parts.next()) {
            (Some(v), Some(c), None) => (v, c),
            _ => bail!("line {}: expected 'vertex<TAB>color'", ln + 1),
        };
        let v: Vertex = v
            .parse()
            .map_err(|_| anyhow!("line {}: bad vertex {v:?}", ln + 1))?;
        let c: u32 = c
            .parse()
            .map_err(|_| anyhow!("line {}: bad color {c:?}", ln + 1))?;
        if assignment.insert(v, c).is_some() {
            bail!("line {}: vertex {v} assigned twice", ln + 1);
        }
    }
    if assignment.is_empty() {
        bail!("empty coloring file");
    }
    let k = k.unwrap_or_else(|| assignment.values().cloned().max().unwrap());
    Ok(Coloring { k, assignment })
}
