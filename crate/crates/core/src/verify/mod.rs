//! Cross-checks of the tiling characterizations against the definition-based
//! oracles, exhaustive when the universe fits the budget and sampled with a
//! seeded generator otherwise.
//!
//! Every check walks an indexed universe of items (subsets, pairs of
//! subsets, or tile placements against triangles). Each item either
//! agrees, disagrees, or is skipped because a solver ran out of search
//! nodes. Items whose premise does not hold (a non-circuit for a claim
//! about circuits) count as agreements but not as applicable.

mod checks;
mod universe;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Budget, MatroidContext};
use crate::trigrid::CellSet;

use universe::{Item, Universe};

/// Largest `n` the harness accepts: the ground set must fit a 64-bit mask
/// and pair universes must fit a 64-bit index.
pub const MAX_VERIFY_N: u32 = 8;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0;

/// Disagreements listed per report; the total is always counted.
pub const DISAGREEMENT_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    Axioms,
    BasisTiling,
    IndepTiling,
    RankNumerology,
    CircuitHull,
    CircuitTiling,
    FlatGeometric,
    LemmaBorder,
    LemmaSaturated,
    CircuitShapes,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Axioms,
        TheoremId::BasisTiling,
        TheoremId::IndepTiling,
        TheoremId::RankNumerology,
        TheoremId::CircuitHull,
        TheoremId::CircuitTiling,
        TheoremId::FlatGeometric,
        TheoremId::LemmaBorder,
        TheoremId::LemmaSaturated,
        TheoremId::CircuitShapes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Axioms => "axioms",
            TheoremId::BasisTiling => "basis_tiling",
            TheoremId::IndepTiling => "indep_tiling",
            TheoremId::RankNumerology => "rank_numerology",
            TheoremId::CircuitHull => "circuit_hull",
            TheoremId::CircuitTiling => "circuit_tiling",
            TheoremId::FlatGeometric => "flat_geometric",
            TheoremId::LemmaBorder => "lemma_border",
            TheoremId::LemmaSaturated => "lemma_saturated",
            TheoremId::CircuitShapes => "circuit_shapes",
        }
    }

    pub fn expectation(self) -> Expectation {
        match self {
            TheoremId::FlatGeometric | TheoremId::CircuitShapes => Expectation::Informational,
            _ => Expectation::MustAgree,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                format!(
                    "unknown theorem {s:?} (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// Whether a check must report zero disagreements, or only documents what
/// it finds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    MustAgree,
    Informational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetStatus {
    /// The whole universe was examined.
    Exhaustive,
    /// The universe exceeded the budget; a seeded sample of `budget` items
    /// was examined.
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub seed: u64,
    /// Record wall-clock time in reports. Off by default so that reports
    /// are byte-identical across runs.
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::DEFAULT,
            seed: DEFAULT_SEED,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    /// Position in the check's universe.
    pub index: u64,
    pub cells: Vec<CellSet>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub n: u32,
    pub expectation: Expectation,
    pub budget: Budget,
    pub budget_status: BudgetStatus,
    pub seed: u64,
    /// Size of the full universe.
    pub universe: u64,
    pub examined: u64,
    /// Examined items whose premise held.
    pub applicable: u64,
    pub agreements: u64,
    pub disagreement_total: u64,
    /// First disagreements in universe order, each re-checked before
    /// being listed.
    pub disagreements: Vec<Disagreement>,
    /// Items abandoned because a solver hit its node budget.
    pub skipped: u64,
    /// Per-category item counts, where the check defines categories.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub histogram: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    /// Must-agree checks pass with no disagreement and nothing skipped;
    /// informational checks pass once they run.
    pub ok: bool,
}

pub(crate) enum Outcome {
    /// The claim's premise does not hold for this item.
    Vacuous,
    Agree,
    Disagree {
        cells: Vec<CellSet>,
        detail: String,
    },
    Skip(String),
}

pub(crate) struct Eval {
    outcome: Outcome,
    tag: Option<String>,
}

impl Eval {
    fn new(outcome: Outcome) -> Self {
        Eval { outcome, tag: None }
    }

    fn tagged(outcome: Outcome, tag: impl Into<String>) -> Self {
        Eval {
            outcome,
            tag: Some(tag.into()),
        }
    }
}

type EvalFn<'a> = Box<dyn Fn(&Item) -> Eval + Sync + 'a>;

pub(crate) struct Plan<'a> {
    universe: Universe,
    eval: EvalFn<'a>,
}

#[derive(Default)]
struct Tally {
    examined: u64,
    applicable: u64,
    agreements: u64,
    disagreement_total: u64,
    skipped: u64,
    disagreements: Vec<Disagreement>,
    histogram: BTreeMap<String, u64>,
    skip_reasons: BTreeMap<String, u64>,
}

impl Tally {
    /// Appends a tally covering later indices.
    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.applicable += other.applicable;
        self.agreements += other.agreements;
        self.disagreement_total += other.disagreement_total;
        self.skipped += other.skipped;
        let room = DISAGREEMENT_CAP - self.disagreements.len();
        self.disagreements
            .extend(other.disagreements.into_iter().take(room));
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        for (k, v) in other.skip_reasons {
            *self.skip_reasons.entry(k).or_default() += v;
        }
        self
    }

    fn record(&mut self, plan: &Plan<'_>, index: u64) {
        let item = plan.universe.get(index);
        let eval = (plan.eval)(&item);
        self.examined += 1;
        if let Some(tag) = eval.tag {
            *self.histogram.entry(tag).or_default() += 1;
        }
        match eval.outcome {
            Outcome::Vacuous => self.agreements += 1,
            Outcome::Agree => {
                self.applicable += 1;
                self.agreements += 1;
            }
            Outcome::Disagree { cells, detail } => {
                // re-run from a freshly decoded item before reporting
                let again = (plan.eval)(&plan.universe.get(index));
                match again.outcome {
                    Outcome::Disagree { detail: d2, .. } if d2 == detail => {
                        self.applicable += 1;
                        self.disagreement_total += 1;
                        if self.disagreements.len() < DISAGREEMENT_CAP {
                            self.disagreements.push(Disagreement {
                                index,
                                cells,
                                detail,
                            });
                        }
                    }
                    _ => {
                        self.skipped += 1;
                        *self
                            .skip_reasons
                            .entry("disagreement not reproduced".into())
                            .or_default() += 1;
                    }
                }
            }
            Outcome::Skip(reason) => {
                self.skipped += 1;
                *self.skip_reasons.entry(reason).or_default() += 1;
            }
        }
    }
}

/// Universe positions to examine: everything if it fits the budget, else a
/// sorted uniform sample of `budget` distinct positions.
fn select(len: u64, opts: &VerifyOptions) -> (Vec<u64>, BudgetStatus) {
    if len <= opts.budget.0 {
        return ((0..len).collect(), BudgetStatus::Exhaustive);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut picked: Vec<u64> =
        rand::seq::index::sample(&mut rng, len as usize, opts.budget.0 as usize)
            .into_iter()
            .map(|i| i as u64)
            .collect();
    picked.sort_unstable();
    (picked, BudgetStatus::Sampled)
}

const CHUNK: usize = 256;

/// Runs one check. Disagreements never abort the run.
pub fn check(
    ctx: &MatroidContext,
    theorem: TheoremId,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let n = ctx.n();
    if n > MAX_VERIFY_N {
        return Err(Error::param(format!(
            "verification supports n <= {MAX_VERIFY_N}, got n = {n}"
        )));
    }
    let start = Instant::now();
    let plan = checks::plan(ctx, theorem)?;
    let (indices, budget_status) = select(plan.universe.len(), opts);
    let tally = indices
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut t = Tally::default();
            for &i in chunk {
                t.record(&plan, i);
            }
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);

    let expectation = theorem.expectation();
    let mut notes: Vec<String> = tally
        .skip_reasons
        .iter()
        .map(|(reason, count)| format!("skipped {count}: {reason}"))
        .collect();
    notes.extend(checks::notes(ctx, theorem, &tally.histogram));
    let ok = match expectation {
        Expectation::MustAgree => tally.disagreement_total == 0 && tally.skipped == 0,
        Expectation::Informational => true,
    };
    Ok(VerifyReport {
        theorem,
        n,
        expectation,
        budget: opts.budget,
        budget_status,
        seed: opts.seed,
        universe: plan.universe.len(),
        examined: tally.examined,
        applicable: tally.applicable,
        agreements: tally.agreements,
        disagreement_total: tally.disagreement_total,
        disagreements: tally.disagreements,
        skipped: tally.skipped,
        histogram: tally.histogram,
        notes,
        runtime_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
        ok,
    })
}

/// Every check at the context's `n`, in [`TheoremId::ALL`] order.
pub fn verify_all(ctx: &MatroidContext, opts: &VerifyOptions) -> Result<Vec<VerifyReport>> {
    TheoremId::ALL
        .iter()
        .map(|&t| check(ctx, t, opts))
        .collect()
}
