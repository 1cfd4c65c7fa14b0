//! Plain-text instance files.
//!
//! ```text
//! n B
//! 1 w_1 c ...
//! ...
//! n w_n c ...
//! ```
//!
//! Item lines list the item id, its weight, then its conflicts. The writer
//! lists each edge once, on the line of its lower endpoint, in ascending
//! order, fields separated by one space, every line ending in `\n`. The
//! parser accepts any whitespace, blank lines, and conflicts in either
//! direction.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bppc::{BppcError, BppcInstance};
use crate::graph::Graph;

/// `line` is 1-based; 0 means the error is about the file as a whole.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| err(line, format!("{what} {tok:?} is not a nonnegative integer")))
}

pub fn parse_instance(text: &str) -> Result<BppcInstance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(0, "empty file"))?;
    let mut toks = header.split_whitespace();
    let n: usize = field(toks.next(), hline, "item count")?;
    let capacity: u64 = field(toks.next(), hline, "capacity")?;
    if toks.next().is_some() {
        return Err(err(hline, "header must be `n B`"));
    }

    let mut weights = Vec::with_capacity(n);
    let mut graph = Graph::empty(n);
    let mut last_line = hline;
    for expected in 1..=n {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, format!("missing line for item {expected}")))?;
        last_line = ln;
        let mut toks = l.split_whitespace();
        let id: usize = field(toks.next(), ln, "item id")?;
        if id != expected {
            return Err(err(ln, format!("expected item {expected}, found {id}")));
        }
        let w: u64 = field(toks.next(), ln, "weight")?;
        if w > capacity {
            return Err(err(ln, format!("weight {w} exceeds capacity {capacity}")));
        }
        weights.push(w);
        for tok in toks {
            let c: usize = field(Some(tok), ln, "conflict")?;
            if c == 0 || c > n {
                return Err(err(ln, format!("conflict {c} outside 1..={n}")));
            }
            if c == id {
                return Err(err(ln, format!("item {id} conflicts with itself")));
            }
            graph.link(id - 1, c - 1);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, format!("unexpected content after {n} items")));
    }
    BppcInstance::new(graph, weights, capacity).map_err(|e: BppcError| err(0, e.to_string()))
}

pub fn write_instance(inst: &BppcInstance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    writeln!(out, "{} {}", inst.n(), inst.capacity()).unwrap();
    for v in 1..=inst.n() {
        write!(out, "{} {}", v, inst.weight(v)).unwrap();
        for u in g.neighbors(v).filter(|&u| u > v) {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out
}
