use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::trigrid::{CellSet, UpCell, MAX_N};

/// A cell set as read from a file: ambient size, cells, optional label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSetDocument {
    pub n: u32,
    pub cells: Vec<[u32; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl CellSetDocument {
    pub fn from_cellset(s: &CellSet, label: Option<String>) -> Self {
        CellSetDocument {
            n: s.n(),
            cells: s.to_triples(),
            label,
        }
    }

    pub fn to_cellset(&self) -> CellSet {
        CellSet::from_cells(self.n, self.cells.iter().map(|&c| UpCell::from(c)))
            .expect("validated on parse")
    }

    /// The structured (JSON) form, which [`parse_cellset`] reads back.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    /// The plain form: `n` on the first line, then one triple per line.
    /// The label, if any, is kept as a comment and is not read back.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.label {
            out.push_str(&format!("# {label}\n"));
        }
        out.push_str(&format!("{}\n", self.n));
        for [a, b, c] in &self.cells {
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }
}

/// Where in the input a problem sits: a line of plain input or a JSON path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Field(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Field(p) => f.write_str(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{at}: malformed input: {reason}")]
    Malformed { at: Location, reason: String },
    #[error("missing n: {0}")]
    MissingN(String),
    #[error("{at}: n = {n} is out of range 1..={max}", max = MAX_N)]
    BadN { at: Location, n: u64 },
    #[error("{at}: coordinate sum {sum} ≠ n−1 = {expected}")]
    WrongSum {
        at: Location,
        sum: u64,
        expected: u32,
    },
    #[error("{at}: duplicate cell ({}, {}, {}), first given at {first}", cell[0], cell[1], cell[2])]
    Duplicate {
        at: Location,
        cell: [u32; 3],
        first: Location,
    },
}

fn check_cells(n: u32, cells: &[([u32; 3], Location)]) -> Result<(), ParseError> {
    let mut seen: HashMap<[u32; 3], &Location> = HashMap::new();
    for (cell, at) in cells {
        let sum = cell.iter().map(|&x| x as u64).sum::<u64>();
        if sum != n as u64 - 1 {
            return Err(ParseError::WrongSum {
                at: at.clone(),
                sum,
                expected: n - 1,
            });
        }
        if let Some(first) = seen.insert(*cell, at) {
            return Err(ParseError::Duplicate {
                at: at.clone(),
                cell: *cell,
                first: first.clone(),
            });
        }
    }
    Ok(())
}

fn check_n(n: u64, at: Location) -> Result<u32, ParseError> {
    if n == 0 || n > MAX_N as u64 {
        return Err(ParseError::BadN { at, n });
    }
    Ok(n as u32)
}

fn parse_json(text: &str) -> Result<CellSetDocument, ParseError> {
    let malformed = |at: &str, reason: String| ParseError::Malformed {
        at: Location::Field(at.into()),
        reason,
    };
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Malformed {
        at: Location::Line(e.line()),
        reason: format!("invalid JSON: {e}"),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| malformed("document", "expected an object".into()))?;
    let n = match obj.get("n") {
        None => {
            return Err(ParseError::MissingN(
                "the document has no \"n\" field".into(),
            ))
        }
        Some(v) => v
            .as_u64()
            .ok_or_else(|| malformed("n", format!("expected a positive integer, got {v}")))?,
    };
    let n = check_n(n, Location::Field("n".into()))?;
    let raw = obj
        .get("cells")
        .ok_or_else(|| malformed("document", "missing \"cells\" field".into()))?
        .as_array()
        .ok_or_else(|| malformed("cells", "expected an array of triples".into()))?;
    let mut cells = Vec::with_capacity(raw.len());
    for (i, entry) in raw.iter().enumerate() {
        let at = format!("cells[{i}]");
        let triple = entry
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| malformed(&at, format!("expected a triple [a, b, c], got {entry}")))?;
        let mut cell = [0u32; 3];
        for (slot, x) in cell.iter_mut().zip(triple) {
            *slot = x
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| {
                    malformed(&at, format!("expected nonnegative integers, got {entry}"))
                })?;
        }
        cells.push((cell, Location::Field(at)));
    }
    check_cells(n, &cells)?;
    let label = match obj.get("label") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(v) => return Err(malformed("label", format!("expected a string, got {v}"))),
    };
    Ok(CellSetDocument {
        n,
        cells: cells.into_iter().map(|(c, _)| c).collect(),
        label,
    })
}

fn parse_plain(text: &str) -> Result<CellSetDocument, ParseError> {
    let mut n: Option<u32> = None;
    let mut cells = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let at = Location::Line(i + 1);
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let numbers: Result<Vec<u64>, _> = fields.iter().map(|f| f.parse::<u64>()).collect();
        let numbers = numbers.map_err(|_| ParseError::Malformed {
            at: at.clone(),
            reason: format!("expected nonnegative integers, got {content:?}"),
        })?;
        match (n, numbers.len()) {
            (None, 1) => n = Some(check_n(numbers[0], at)?),
            (None, 3) => {
                return Err(ParseError::MissingN(format!(
                    "{at} holds a triple, but the first line must give n"
                )))
            }
            (Some(_), 3) => {
                let mut cell = [0u32; 3];
                for (slot, &x) in cell.iter_mut().zip(&numbers) {
                    *slot = u32::try_from(x).map_err(|_| ParseError::Malformed {
                        at: at.clone(),
                        reason: format!("coordinate {x} is too large"),
                    })?;
                }
                cells.push((cell, at));
            }
            _ => {
                return Err(ParseError::Malformed {
                    at,
                    reason: format!(
                        "expected {}, got {content:?}",
                        if n.is_none() { "n" } else { "a triple a b c" }
                    ),
                })
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::MissingN("the input is empty".into()))?;
    check_cells(n, &cells)?;
    Ok(CellSetDocument {
        n,
        cells: cells.into_iter().map(|(c, _)| c).collect(),
        label: None,
    })
}

/// Reads either the structured form `{"n": .., "cells": [[a, b, c], ..]}`
/// or the plain form (first line `n`, then one triple per line, `#` starts
/// a comment).
pub fn parse_cellset(text: &str) -> Result<CellSetDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}
