use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::MatroidContext;
use crate::combin::{binomial, masks_of_size};
use crate::error::{Error, Result};
use crate::trigrid::{tri, CellSet};

/// Maximum number of subsets (or pairs, or placements) a scan may examine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 20);
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

impl FromStr for Budget {
    type Err = String;

    /// Accepts a positive integer or the word `default`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "default" {
            return Ok(Budget::DEFAULT);
        }
        match s.parse::<u64>() {
            Ok(0) => Err("budget must be positive".into()),
            Ok(v) => Ok(Budget(v)),
            Err(e) => Err(format!("invalid budget {s:?}: {e}")),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Bases,
    Circuits,
    Flats,
    Independents,
}

impl FromStr for SetKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bases" => Ok(SetKind::Bases),
            "circuits" => Ok(SetKind::Circuits),
            "flats" => Ok(SetKind::Flats),
            "independents" => Ok(SetKind::Independents),
            _ => Err(format!(
                "unknown set kind {s:?} (expected bases, circuits, flats or independents)"
            )),
        }
    }
}

impl SetKind {
    /// Cardinalities that can hold a set of this kind in `T_n`.
    fn sizes(self, n: u32) -> std::ops::RangeInclusive<u32> {
        let ground = tri(n) as u32;
        match self {
            SetKind::Bases => n..=n,
            SetKind::Circuits => 1..=(n + 1).min(ground),
            SetKind::Flats => 0..=ground,
            SetKind::Independents => 0..=n,
        }
    }
}

/// Lazy stream of the qualifying subsets, in canonical order: by
/// cardinality, then by increasing bitmask.
pub struct Enumeration<'a> {
    ctx: &'a MatroidContext,
    kind: SetKind,
    masks: Box<dyn Iterator<Item = u64> + 'a>,
    scanned: u64,
}

impl Enumeration<'_> {
    /// Subsets scanned so far (qualifying or not).
    pub fn scanned(&self) -> u64 {
        self.scanned
    }
}

impl Iterator for Enumeration<'_> {
    type Item = CellSet;

    fn next(&mut self) -> Option<CellSet> {
        let n = self.ctx.n();
        for mask in self.masks.by_ref() {
            self.scanned += 1;
            let s = CellSet::from_mask(n, mask).expect("mask within ground set");
            let keep = match self.kind {
                SetKind::Bases => self.ctx.is_basis(&s),
                SetKind::Circuits => self.ctx.is_circuit(&s),
                SetKind::Flats => self.ctx.is_flat_closure(&s),
                SetKind::Independents => self.ctx.is_independent(&s),
            };
            if keep {
                return Some(s);
            }
        }
        None
    }
}

/// Streams every subset of the given kind. Fails up front when the number
/// of candidate subsets exceeds the budget.
pub fn enumerate(ctx: &MatroidContext, kind: SetKind, budget: Budget) -> Result<Enumeration<'_>> {
    let n = ctx.n();
    let ground = tri(n) as u32;
    let sizes = kind.sizes(n);
    let universe = sizes
        .clone()
        .map(|k| binomial(ground as u64, k as u64))
        .fold(0u64, u64::saturating_add);
    if ground > 63 || universe > budget.0 {
        return Err(Error::ResourceLimit {
            what: format!("enumerating {kind:?} of T_{n} needs {universe} subset scans"),
            limit: budget.0,
        });
    }
    let masks = Box::new(sizes.flat_map(move |k| masks_of_size(ground, k)));
    Ok(Enumeration {
        ctx,
        kind,
        masks,
        scanned: 0,
    })
}
