//! The `almg v1` text format.
//!
//! ```text
//! almg v1
//! size 2
//! zero 0
//! table add
//! 0 1
//! 1 1
//! table join
//! ...
//! ```
//!
//! Four `table` blocks (add, join, meet, star, any order, each exactly once),
//! each followed by `size` rows of `size` entries. An entry is a decimal
//! index or `?` for an undefined cell. `#` starts a comment.

use std::fmt::Write as _;

use crate::algebra::{Op, PartialAlgebra, Structure, MAX_SIZE};
use crate::error::{Error, Result};

pub const HEADER: &str = "almg v1";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an algebra file. Undefined cells are allowed; use
/// [`PartialAlgebra::to_finite`] to demand a total algebra.
pub fn parse_algebra(text: &str) -> Result<PartialAlgebra> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut expect = |what: &str| -> Result<(usize, &str)> {
        lines
            .next()
            .ok_or_else(|| err(text.lines().count().max(1), format!("unexpected end of file, expected {what}")))
    };

    let (ln, header) = expect("header")?;
    if header.split_whitespace().collect::<Vec<_>>() != ["almg", "v1"] {
        return Err(err(ln, format!("expected header `{HEADER}`, found `{header}`")));
    }
    let size_line = expect("`size`")?;
    let size = keyword_value(size_line, "size")?;
    if size == 0 || size > MAX_SIZE {
        return Err(err(size_line.0, format!("size must be in 1..={MAX_SIZE}")));
    }
    let zero_line = expect("`zero`")?;
    let zero = keyword_value(zero_line, "zero")?;
    if zero >= size {
        return Err(err(zero_line.0, format!("zero {zero} out of range for size {size}")));
    }

    let mut tables: [Option<Vec<Option<usize>>>; 4] = Default::default();
    for _ in 0..4 {
        let (ln, line) = expect("`table <name>`")?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        let op = match parts.as_slice() {
            ["table", name] => Op::from_name(name)
                .ok_or_else(|| err(ln, format!("unknown table `{name}`, expected add|join|meet|star")))?,
            _ => return Err(err(ln, format!("expected `table <name>`, found `{line}`"))),
        };
        let slot = &mut tables[op as usize];
        if slot.is_some() {
            return Err(err(ln, format!("duplicate table `{op}`")));
        }
        let mut cells = Vec::with_capacity(size * size);
        for row in 0..size {
            let (ln, line) = expect(&format!("row {row} of table `{op}`"))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != size {
                return Err(err(
                    ln,
                    format!("table `{op}` row {row} has {} entries, expected {size}", entries.len()),
                ));
            }
            for e in entries {
                cells.push(parse_entry(e, size).map_err(|m| err(ln, m))?);
            }
        }
        *slot = Some(cells);
    }
    if let Some((ln, line)) = lines.next() {
        return Err(err(ln, format!("trailing content `{line}`")));
    }
    let tables = tables.map(|t| t.expect("all four tables were read"));
    PartialAlgebra::new(size, zero, tables)
}

fn keyword_value((ln, line): (usize, &str), key: &str) -> Result<usize> {
    match line.split_whitespace().collect::<Vec<_>>().as_slice() {
        [k, v] if *k == key => v
            .parse()
            .map_err(|_| err(ln, format!("`{key}` expects a non-negative integer, found `{v}`"))),
        _ => Err(err(ln, format!("expected `{key} <n>`, found `{line}`"))),
    }
}

fn parse_entry(e: &str, size: usize) -> std::result::Result<Option<usize>, String> {
    if e == "?" {
        return Ok(None);
    }
    let v: usize = e
        .parse()
        .map_err(|_| format!("invalid entry `{e}`"))?;
    if v >= size {
        return Err(format!("entry {v} out of range for size {size}"));
    }
    Ok(Some(v))
}

/// Serializes any algebra; undefined cells are written as `?`.
/// `comments` are emitted as `#` lines after the header.
pub fn write_algebra<S: Structure + ?Sized>(alg: &S, comments: &[String]) -> String {
    let n = alg.size();
    let width = (n.saturating_sub(1)).to_string().len().max(1);
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "size {n}");
    let _ = writeln!(out, "zero {}", alg.zero());
    for op in Op::ALL {
        let _ = writeln!(out, "table {op}");
        for a in 0..n {
            let row: Vec<String> = (0..n)
                .map(|b| match alg.cell(op, a, b) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "?"),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
