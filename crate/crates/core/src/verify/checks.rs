use std::collections::BTreeMap;

use super::universe::{Block, Item, Universe};
use super::{Eval, Outcome, Plan, TheoremId};
use crate::error::{Error, Result};
use crate::matroid::{normalized_shape, MatroidContext};
use crate::tiler::{
    all_placements, lozenge_tiling, max_rhombi_tiling, tile_border_check, tile_exact,
    validate_tiling, HoleyRegion, Objective, SearchBudget, TileKind, TileRequest,
};
use crate::trigrid::{binom2, tri, tri_intersect, tri_join, triangular_hull, CellSet, LatticeTri};

/// Node budget for each exact-cover search made on behalf of one item.
const ITEM_NODES: u64 = 2_000_000;

fn disagree(cells: Vec<CellSet>, detail: impl Into<String>) -> Outcome {
    Outcome::Disagree {
        cells,
        detail: detail.into(),
    }
}

fn verdict(
    ok: bool,
    cells: impl FnOnce() -> Vec<CellSet>,
    detail: impl FnOnce() -> String,
) -> Outcome {
    if ok {
        Outcome::Agree
    } else {
        disagree(cells(), detail())
    }
}

fn set(item: &Item) -> &CellSet {
    match item {
        Item::Set(s) => s,
        _ => unreachable!("check expects single sets"),
    }
}

/// Feasibility of an exact tiling, with solver exhaustion as a skip.
fn feasible(
    region: &HoleyRegion,
    req: &TileRequest,
) -> std::result::Result<Option<crate::tiler::Tiling>, Outcome> {
    match tile_exact(region, req) {
        Ok(t) => Ok(t),
        Err(Error::ResourceLimit { what, .. }) => Err(Outcome::Skip(what)),
        Err(e) => Err(Outcome::Skip(e.to_string())),
    }
}

pub(super) fn plan<'a>(ctx: &'a MatroidContext, theorem: TheoremId) -> Result<Plan<'a>> {
    let n = ctx.n();
    let ground = tri(n) as u32;
    let plan = match theorem {
        TheoremId::Axioms => {
            let mut u = Universe::new(n).sets(0..=n);
            for ka in 0..n {
                for kb in ka + 1..=n {
                    u.push(Block::Pairs { ka, kb });
                }
            }
            u.push(Block::Pairs { ka: n, kb: n });
            Plan {
                universe: u,
                eval: Box::new(move |item| axioms(ctx, item)),
            }
        }
        TheoremId::BasisTiling => Plan {
            universe: Universe::new(n).sets(n..=n),
            eval: Box::new(move |item| {
                let s = set(item);
                let basis = ctx.is_basis(s);
                let tiling = lozenge_tiling(&HoleyRegion::new(s.clone()));
                let valid = tiling
                    .as_ref()
                    .is_none_or(|t| validate_tiling(t).is_valid());
                let outcome = verdict(
                    basis == tiling.is_some() && valid,
                    || vec![s.clone()],
                    || {
                        format!(
                            "is_basis = {basis}, lozenge tiling found = {}, valid = {valid}",
                            tiling.is_some()
                        )
                    },
                );
                Eval::tagged(outcome, if basis { "basis" } else { "non-basis" })
            }),
        },
        TheoremId::IndepTiling => Plan {
            universe: Universe::new(n).sets(0..=ground),
            eval: Box::new(move |item| {
                let s = set(item);
                let indep = ctx.is_independent(s);
                let tag = if indep { "independent" } else { "dependent" };
                let req = TileRequest::new(&[TileKind::Rhombus, TileKind::Trapezoid1])
                    .budget(SearchBudget(ITEM_NODES));
                let tiling = match feasible(&HoleyRegion::new(s.clone()), &req) {
                    Ok(t) => t,
                    Err(skip) => return Eval::tagged(skip, tag),
                };
                let (valid, t1) = match &tiling {
                    Some(t) => {
                        let check = validate_tiling(t);
                        (check.is_valid(), check.counts.t1 as i64)
                    }
                    None => (true, n as i64 - s.len() as i64),
                };
                let expected_t1 = n as i64 - s.len() as i64;
                let outcome = verdict(
                    indep == tiling.is_some() && valid && t1 == expected_t1,
                    || vec![s.clone()],
                    || {
                        format!(
                            "is_independent = {indep}, tiling found = {}, valid = {valid}, t1 = {t1} (expected {expected_t1})",
                            tiling.is_some()
                        )
                    },
                );
                Eval::tagged(outcome, tag)
            }),
        },
        TheoremId::RankNumerology => Plan {
            universe: Universe::new(n).sets(0..=ground),
            eval: Box::new(move |item| {
                let s = set(item);
                let r = ctx.rank(s);
                let t = max_rhombi_tiling(&HoleyRegion::new(s.clone()));
                let check = validate_tiling(&t);
                let c = check.counts;
                let lost = s.len() - r;
                let want = (binom2(n) - lost, lost, n as usize - r);
                let got = (c.rhombus, c.unit_down, c.unit_up);
                let by_matching = ctx.rank_via_matching(s).expect("same n");
                let outcome = verdict(
                    check.is_valid() && got == want && by_matching == r,
                    || vec![s.clone()],
                    || {
                        format!(
                            "(rhombi, unit down, unit up) = {got:?}, expected {want:?}; rank {r}, matching rank {by_matching}, valid = {}",
                            check.is_valid()
                        )
                    },
                );
                Eval::tagged(outcome, format!("rank {r}"))
            }),
        },
        TheoremId::CircuitHull => Plan {
            universe: Universe::new(n).sets(1..=n + 1),
            eval: Box::new(move |item| {
                let s = set(item);
                if !ctx.is_circuit(s) {
                    return Eval::new(Outcome::Vacuous);
                }
                let hull = triangular_hull(s).expect("nonempty");
                let strict = ctx.strictly_oversaturated(s);
                let nullity = s.len() - ctx.rank(s);
                let outcome = verdict(
                    strict == [hull] && nullity == 1,
                    || vec![s.clone()],
                    || {
                        format!("strictly over-saturated {strict:?}, hull {hull}, |c| - r(c) = {nullity}")
                    },
                );
                Eval::tagged(outcome, format!("circuits of size {}", s.len()))
            }),
        },
        TheoremId::CircuitTiling => Plan {
            universe: Universe::new(n).sets(3..=ground),
            eval: Box::new(move |item| circuit_tiling(ctx, set(item))),
        },
        TheoremId::FlatGeometric => {
            Plan {
                universe: Universe::new(n).sets(0..=ground),
                eval: Box::new(move |item| {
                    let s = set(item);
                    let closed = ctx.is_flat_closure(s);
                    let geometric = ctx.is_flat_geometric(s);
                    let outcome = verdict(
                        closed == geometric,
                        || vec![s.clone()],
                        || format!("closure flat = {closed}, geometric flat = {geometric}"),
                    );
                    let below_n = geometric_below_n(ctx, s);
                    let by_rank = geometric_by_rank(ctx, s);
                    Eval::tagged(
                    outcome,
                    format!("closure={closed} literal={geometric} below_n={below_n} by_rank={by_rank}"),
                )
                }),
            }
        }
        TheoremId::LemmaBorder => {
            let placements = all_placements(n, &[TileKind::Rhombus, TileKind::Trapezoid1]);
            let tris = ctx.triangles();
            let mut u = Universe::new(n);
            u.push(Block::Plain {
                len: (placements.len() * tris.len()) as u64,
            });
            Plan {
                universe: u,
                eval: Box::new(move |item| {
                    let Item::Plain { index, .. } = item else {
                        unreachable!()
                    };
                    let tile = &placements[*index as usize / tris.len()];
                    let t = &tris[*index as usize % tris.len()];
                    let ok = tile_border_check(t, tile).expect("rhombus or t1");
                    let (ups, downs) = tile.cells_inside(t);
                    let outcome = verdict(
                        ok,
                        || vec![CellSet::from_cells(n, tile.ups.iter().copied()).expect("same n")],
                        || format!("{tile} has {downs} down and {ups} up cells inside {t}"),
                    );
                    Eval::tagged(
                        outcome,
                        format!("{} with (up, down) inside = ({ups}, {downs})", tile.kind),
                    )
                }),
            }
        }
        TheoremId::LemmaSaturated => Plan {
            universe: Universe::new(n).sets(0..=n),
            eval: Box::new(move |item| lemma_saturated(ctx, set(item))),
        },
        TheoremId::CircuitShapes => {
            let reference = if n >= 2 {
                Some(normalized_shape(&LatticeTri::new(0, 0, n - 2, 2)?.cells())?)
            } else {
                None
            };
            Plan {
                universe: Universe::new(n).sets(1..=n + 1),
                eval: Box::new(move |item| {
                    let s = set(item);
                    if !ctx.is_circuit(s) {
                        return Eval::new(Outcome::Vacuous);
                    }
                    let shape = normalized_shape(s).expect("nonempty");
                    let outcome = verdict(
                        reference.as_ref() == Some(&shape),
                        || vec![s.clone()],
                        || format!("shape {shape:?} differs from a size-2 triangle"),
                    );
                    Eval::tagged(outcome, format!("size {}: {shape:?}", s.len()))
                }),
            }
        }
    };
    Ok(plan)
}

fn axioms(ctx: &MatroidContext, item: &Item) -> Eval {
    let n = ctx.n() as usize;
    match item {
        Item::Set(s) => {
            let indep = ctx.is_independent(s);
            if s.is_empty() {
                return Eval::tagged(
                    verdict(indep, Vec::new, || "the empty set is dependent".into()),
                    "empty set",
                );
            }
            if !indep {
                return Eval::new(Outcome::Vacuous);
            }
            let bad = s.iter().find(|&x| !ctx.is_independent(&s.without(x)));
            Eval::tagged(
                verdict(
                    bad.is_none(),
                    || vec![s.clone()],
                    || format!("removing {} gives a dependent set", bad.unwrap()),
                ),
                "hereditary",
            )
        }
        Item::Pair(a, b) if a.len() == n && b.len() == n => {
            if !ctx.is_basis(a) || !ctx.is_basis(b) {
                return Eval::new(Outcome::Vacuous);
            }
            let only_a = a.difference(b).expect("same n");
            let only_b = b.difference(a).expect("same n");
            let stuck = only_a.iter().find(|&x| {
                let rest = a.without(x);
                !only_b
                    .iter()
                    .any(|y| ctx.is_basis(&rest.with(y).expect("same n")))
            });
            Eval::tagged(
                verdict(
                    stuck.is_none(),
                    || vec![a.clone(), b.clone()],
                    || format!("no element of B2 \\ B1 replaces {}", stuck.unwrap()),
                ),
                "basis exchange",
            )
        }
        Item::Pair(a, b) => {
            if !ctx.is_independent(a) || !ctx.is_independent(b) {
                return Eval::new(Outcome::Vacuous);
            }
            let only_b = b.difference(a).expect("same n");
            let ok = only_b
                .iter()
                .any(|x| ctx.is_independent(&a.with(x).expect("same n")));
            Eval::tagged(
                verdict(
                    ok,
                    || vec![a.clone(), b.clone()],
                    || "no element of I2 \\ I1 extends I1".into(),
                ),
                "augmentation",
            )
        }
        Item::Plain { .. } => unreachable!(),
    }
}

fn circuit_tiling(ctx: &MatroidContext, s: &CellSet) -> Eval {
    let n = ctx.n();
    let region = HoleyRegion::new(s.clone());
    let trapezoids = || TileRequest::trapezoids().budget(SearchBudget(ITEM_NODES));
    let circuit = ctx.is_circuit(s);

    if s.len() == 3 {
        if !circuit {
            return Eval::new(Outcome::Vacuous);
        }
        let outcome = match feasible(&region, &trapezoids()) {
            Ok(t) => verdict(
                t.is_none(),
                || vec![s.clone()],
                || "a size-3 circuit admits a trapezoid tiling".into(),
            ),
            Err(skip) => skip,
        };
        return Eval::tagged(outcome, "size-3 circuit");
    }

    let hull = triangular_hull(s).expect("nonempty");
    let cond1 = ctx.strictly_oversaturated(s) == [hull];
    let (cond2, tag) = if !cond1 {
        (
            false,
            if circuit {
                "circuit failing (1)"
            } else {
                "fails (1)"
            },
        )
    } else {
        let at = |t2: usize| {
            let req = trapezoids().objective(Objective::RequireExact(TileKind::Trapezoid2, t2));
            feasible(&region, &req)
        };
        let zero = match at(0) {
            Ok(t) => t.is_some(),
            Err(skip) => return Eval::new(skip),
        };
        let one = match at(1) {
            Ok(t) => t,
            Err(skip) => return Eval::new(skip),
        };
        if let Some(t) = &one {
            if !validate_tiling(t).is_valid() {
                return Eval::new(disagree(
                    vec![s.clone()],
                    "solver returned an invalid tiling",
                ));
            }
        }
        let min_is_one = !zero && one.is_some();
        let tag = match (circuit, min_is_one) {
            (true, _) => "circuit",
            (false, true) => "non-circuit passing (1) and (2)",
            (false, false) => "fails (2)",
        };
        (min_is_one, tag)
    };
    let outcome = verdict(
        circuit == (cond1 && cond2),
        || vec![s.clone()],
        || {
            format!("is_circuit = {circuit}, condition (1) = {cond1}, condition (2) = {cond2} at n = {n}")
        },
    );
    Eval::tagged(outcome, tag)
}

fn lemma_saturated(ctx: &MatroidContext, s: &CellSet) -> Eval {
    if !ctx.is_independent(s) {
        return Eval::new(Outcome::Vacuous);
    }
    let saturated = |t: &LatticeTri| s.intersection_len(&t.cells()) == t.k as usize;
    let sat: Vec<LatticeTri> = ctx
        .triangles_with_cells()
        .filter(|(t, m)| s.intersection_len(m) == t.k as usize)
        .map(|(t, _)| *t)
        .collect();
    for (i, t) in sat.iter().enumerate() {
        for u in &sat[i + 1..] {
            let Some(meet) = tri_intersect(t, u).expect("same n") else {
                continue;
            };
            let join = tri_join(t, u).expect("same n");
            if !saturated(&meet) || !saturated(&join) {
                return Eval::new(disagree(
                    vec![s.clone()],
                    format!("{t} and {u} saturated; meet {meet} or join {join} is not"),
                ));
            }
        }
    }
    Eval::new(Outcome::Agree)
}

/// The literal flat test restricted to triangles smaller than `T_n`.
fn geometric_below_n(ctx: &MatroidContext, s: &CellSet) -> bool {
    ctx.saturations(s)
        .filter(|(t, _)| t.k < ctx.n())
        .all(|(_, sat)| !sat.is_over() || sat.complete)
}

/// The flat test with over-saturation measured by rank: every triangle of
/// size `k` on which `s` has rank `k` lies inside `s`.
fn geometric_by_rank(ctx: &MatroidContext, s: &CellSet) -> bool {
    ctx.triangles_with_cells().all(|(t, m)| {
        m.is_subset(s) || ctx.rank(&s.intersection(m).expect("same n")) < t.k as usize
    })
}

/// Summary lines derived from the histogram and, for the flat check at
/// `n = 3`, the status of the known candidate counterexample.
pub(super) fn notes(
    ctx: &MatroidContext,
    theorem: TheoremId,
    histogram: &BTreeMap<String, u64>,
) -> Vec<String> {
    let mut out = Vec::new();
    match theorem {
        TheoremId::FlatGeometric => {
            let mut literal = 0;
            let mut below_n = 0;
            let mut by_rank = 0;
            for (tag, count) in histogram {
                let closed = tag.contains("closure=true");
                literal += count * (closed != tag.contains("literal=true")) as u64;
                below_n += count * (closed != tag.contains("below_n=true")) as u64;
                by_rank += count * (closed != tag.contains("by_rank=true")) as u64;
            }
            out.push(format!(
                "sets on which the closure test disagrees with: the literal triangle test {literal}, \
                 the test over triangles smaller than T_n {below_n}, the rank-based test {by_rank}"
            ));
            if ctx.n() == 3 {
                let probe =
                    CellSet::from_cells(3, [[2, 0, 0], [1, 1, 0], [1, 0, 1]].map(Into::into))
                        .expect("cells of T_3");
                let closed = ctx.is_flat_closure(&probe);
                let literal = ctx.is_flat_geometric(&probe);
                let status = match (closed, literal) {
                    (true, false) => "closed but rejected by the literal triangle test (T_3 is saturated, not complete)",
                    (a, b) if a == b => "both tests agree",
                    _ => "rejected by closure but accepted by the literal test",
                };
                out.push(format!(
                    "candidate {probe}: closure flat = {closed}, literal flat = {literal}; {status}"
                ));
            }
        }
        TheoremId::IndepTiling if (ctx.n() as usize) > binom2(ctx.n()) => {
            out.push(format!(
                "the empty set needs {} type-1 trapezoids, but T_{} has only {} down cells",
                ctx.n(),
                ctx.n(),
                binom2(ctx.n())
            ));
        }
        TheoremId::CircuitShapes => {
            let shapes = histogram.len();
            let size3 = histogram
                .keys()
                .filter(|k| k.starts_with("size 3:"))
                .count();
            out.push(format!(
                "{shapes} distinct circuit shapes among examined circuits; {size3} shape(s) among size-3 circuits"
            ));
        }
        _ => {}
    }
    out
}
