//! The `.sg` Cayley-table text format.
//!
//! ```text
//! # B2
//! 5
//! zero: 0
//! 0 0 0 0 0
//! 0 1 2 0 0
//! 0 0 0 1 2
//! 0 3 4 0 0
//! 0 0 0 3 4
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Row `x` lists
//! `x·0 … x·(n−1)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

pub fn parse(text: &str) -> Result<Semigroup> {
    let mut all = parse_many(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 0,
            message: "no table found".into(),
        }),
        k => Err(Error::Parse {
            line: 0,
            message: format!("expected one table, found {k}"),
        }),
    }
}

/// Parses a stream of concatenated tables, as written by `semilab enumerate`.
pub fn parse_many(text: &str) -> Result<Vec<Semigroup>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut out = Vec::new();
    while let Some((line, header)) = lines.next() {
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected the element count, found {header:?}"),
        })?;
        let mut zero = None;
        if let Some((zline, l)) = lines.peek().copied() {
            if let Some(rest) = l.strip_prefix("zero:") {
                lines.next();
                zero = Some(rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: zline,
                    message: format!("bad zero declaration {l:?}"),
                })?);
            }
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (rline, l) = lines.next().ok_or(Error::Parse {
                line,
                message: format!("table ends after {r} of {n} rows"),
            })?;
            let row = l
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: rline,
                        message: format!("bad entry {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: rline,
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            rows.push(row);
        }
        out.push(Semigroup::from_rows(&rows, zero)?);
    }
    Ok(out)
}

/// Renders a table; the zero line is written whenever the semigroup has one.
pub fn write(s: &Semigroup, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{}", s.size());
    if let Some(z) = s.zero() {
        let _ = writeln!(out, "zero: {z}");
    }
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
