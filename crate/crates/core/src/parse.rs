//! Text formats for graph inputs.
//!
//! * edge-list files: first line `n m`, then `m` lines `u v` (0-based);
//!   blank lines and lines starting with `#` are ignored.
//! * circulant specs: `C<n>(<s1>,<s2>,...)`, e.g. `C6(1,3)`.
//! * cobordism specs: `COB<n>(<jumps1>|<jumps2>)`, e.g. `COB3(1|1)`.
//!
//! Errors carry 1-based line and column numbers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{CirculantSpec, CobordismSpec, Multigraph};

/// Where a graph came from; circulant and cobordism sources keep their
/// structure so the companion-matrix fast paths can use it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    EdgeList(Multigraph),
    Circulant(CirculantSpec),
    Cobordism(CobordismSpec),
}

impl GraphSource {
    pub fn graph(&self) -> Multigraph {
        match self {
            GraphSource::EdgeList(g) => g.clone(),
            GraphSource::Circulant(spec) => spec.graph(),
            GraphSource::Cobordism(spec) => spec.graph(),
        }
    }

    /// Parses a circulant or cobordism spec string.
    pub fn parse_spec(s: &str) -> Result<Self> {
        if s.trim_start().starts_with("COB") {
            s.parse().map(GraphSource::Cobordism)
        } else {
            s.parse().map(GraphSource::Circulant)
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::EdgeList(g) => write!(
                f,
                "edge list ({} vertices, {} edges)",
                g.n_vertices(),
                g.edge_count()
            ),
            GraphSource::Circulant(spec) => spec.fmt(f),
            GraphSource::Cobordism(spec) => spec.fmt(f),
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    /// Column offset of `text` within its line.
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let trimmed = text.trim_start();
        Cursor {
            text: trimmed.trim_end(),
            pos: 0,
            base: text.len() - trimmed.len(),
        }
    }

    fn column(&self) -> usize {
        self.base + self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(1, self.column(), message)
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.text[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected a nonnegative integer"));
        }
        let value = self.text[self.pos..self.pos + digits]
            .parse()
            .map_err(|_| self.error("integer too large"))?;
        self.pos += digits;
        Ok(value)
    }

    /// Comma-separated integers up to (not including) one of `terminators`.
    fn jump_list(&mut self, terminators: &[char]) -> Result<Vec<usize>> {
        let mut jumps = Vec::new();
        if self.peek().is_some_and(|c| terminators.contains(&c)) {
            return Ok(jumps);
        }
        loop {
            jumps.push(self.number()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if terminators.contains(&c) => return Ok(jumps),
                _ => return Err(self.error("expected `,` or end of jump list")),
            }
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

impl FromStr for CirculantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        c.expect_str("C")?;
        let n = c.number()?;
        c.expect_str("(")?;
        let start = c.column();
        let jumps = c.jump_list(&[')'])?;
        c.expect_str(")")?;
        c.finish()?;
        CirculantSpec::new(n, jumps).map_err(|e| Error::parse(1, start, e.to_string()))
    }
}

impl FromStr for CobordismSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        c.expect_str("COB")?;
        let n = c.number()?;
        c.expect_str("(")?;
        let start = c.column();
        let jumps1 = c.jump_list(&['|'])?;
        c.expect_str("|")?;
        let jumps2 = c.jump_list(&[')'])?;
        c.expect_str(")")?;
        c.finish()?;
        CobordismSpec::new(n, jumps1, jumps2).map_err(|e| Error::parse(1, start, e.to_string()))
    }
}

/// Parses the edge-list file format.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input, expected header `n m`"))?;
    let [(n, _), (m, _)] = two_numbers(header_no, header)?;

    let mut g = Multigraph::empty(n);
    let mut read = 0;
    for (line_no, line) in lines {
        if read == m {
            return Err(Error::parse(
                line_no,
                1,
                format!("more edge lines than the {m} declared in the header"),
            ));
        }
        let [(u, u_col), (v, v_col)] = two_numbers(line_no, line)?;
        g.add_edge(u, v).map_err(|e| {
            let column = match e {
                Error::VertexOutOfRange { vertex, .. } if vertex == u => u_col,
                Error::VertexOutOfRange { .. } | Error::LoopEdge(_) => v_col,
                _ => u_col,
            };
            Error::parse(line_no, column, e.to_string())
        })?;
        read += 1;
    }
    if read < m {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("header declares {m} edges but only {read} were given"),
        ));
    }
    Ok(g)
}

/// The two integers on a line, each with its 1-based column.
fn two_numbers(line_no: usize, line: &str) -> Result<[(usize, usize); 2]> {
    let mut out = [(0usize, 0usize); 2];
    let mut fields = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain([(line.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                fields.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if fields.len() != 2 {
        let column = fields.get(2).map_or(line.len() + 1, |(s, _)| s + 1);
        return Err(Error::parse(
            line_no,
            column,
            format!("expected two integers, found {} fields", fields.len()),
        ));
    }
    for (slot, (col, field)) in out.iter_mut().zip(fields) {
        let value = field.parse().map_err(|_| {
            Error::parse(
                line_no,
                col + 1,
                format!("`{field}` is not a nonnegative integer"),
            )
        })?;
        *slot = (value, col + 1);
    }
    Ok(out)
}
