//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code with the text to print.
//!
//! Exit codes: 0 predicate true or success, 1 predicate false or
//! infeasible, 2 usage or input error, 3 resource budget exhausted.

mod input;
mod render;

pub use input::{parse_cellset, CellSetDocument, Location, ParseError};
pub use render::{render_ascii, render_svg};

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::matroid::{enumerate, Budget, MatroidContext, SetKind};
use crate::tiler::{
    annulus_tiling, max_rhombi_tiling, min_type2, reconfigure_up, tile_exact, validate_tiling,
    HoleyRegion, Objective, SearchBudget, TileKind, TileRequest, Tiling,
};
use crate::trigrid::{triangular_hull, CellSet, LatticeTri};
use crate::verify::{check, verify_all, TheoremId, VerifyOptions, DEFAULT_SEED};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
    Ascii,
    JsonReport,
}

#[derive(Debug, Parser)]
#[command(
    name = "trimat",
    version,
    about = "Tiling matroids on the subdivided triangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Io {
    /// Size of the ambient triangle T_n; must match the cell file if both are given.
    #[arg(long)]
    n: Option<u32>,
    /// Cell set file (structured or plain); `-` is not supported, pass a path.
    #[arg(long, value_name = "PATH")]
    cells: Option<PathBuf>,
    /// Use every up cell of T_n as the cell set.
    #[arg(long, conflicts_with = "cells")]
    full: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct SearchArgs {
    /// Search-node budget for exact tiling (a count or `default`).
    #[arg(long)]
    budget: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is the cell set independent?
    Indep(#[command(flatten)] Io),
    /// Rank of the cell set.
    Rank(#[command(flatten)] Io),
    /// Closure of the cell set.
    Closure(#[command(flatten)] Io),
    /// Is the cell set a basis?
    Basis(#[command(flatten)] Io),
    /// Is the cell set a circuit?
    Circuit(#[command(flatten)] Io),
    /// Is the cell set a flat?
    Flat(#[command(flatten)] Io),
    /// Triangular hull of the cell set.
    Hull(#[command(flatten)] Io),
    /// Tile the holey region of the cell set.
    Tile {
        #[command(flatten)]
        io: Io,
        /// Allowed tile kinds: rhombus, t1, t2, up, down.
        #[arg(long, value_delimiter = ',', default_value = "rhombus,t1")]
        tiles: Vec<TileKind>,
        /// `min-t2` or `exact-t1=<k>`.
        #[arg(long)]
        objective: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Fewest type-2 trapezoids in a rhombus/trapezoid tiling of the holey region.
    #[command(name = "min-type2")]
    MinType2 {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Constructive tiling of T_n minus a lattice triangle.
    Annulus {
        #[command(flatten)]
        io: Io,
        /// The removed triangle as `p,q,r,k`.
        #[arg(long, value_name = "P,Q,R,K")]
        tri: String,
    },
    /// List every basis, circuit, flat or independent set of T_n.
    Enum {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        kind: SetKind,
        /// Maximum number of subsets to scan (a count or `default`).
        #[arg(long, default_value = "default")]
        budget: Budget,
    },
    /// Cross-check the tiling characterizations against the oracles.
    Verify {
        #[command(flatten)]
        io: Io,
        /// One theorem id; all of them if omitted.
        #[arg(long)]
        theorem: Option<TheoremId>,
        /// Items examined per check before sampling (a count or `default`).
        #[arg(long, default_value = "default")]
        budget: Budget,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include wall-clock times (reports are then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Draw a tiling of the holey region as SVG or ASCII.
    Render {
        #[command(flatten)]
        io: Io,
        /// A saved tiling (JSON from `tile` or `annulus`) to draw instead.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["cells", "full", "tiles"])]
        tiling: Option<PathBuf>,
        /// Tile kinds; with trapezoids an exact tiling is searched, otherwise
        /// a maximum-rhombi tiling is drawn.
        #[arg(long, value_delimiter = ',')]
        tiles: Option<Vec<TileKind>>,
        /// Slide unit down triangles up before drawing.
        #[arg(long)]
        reconfigure: bool,
    },
}

/// Exit code and text produced by one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<(i32, String), Failure>;

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

impl Io {
    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            return Err(usage(format!(
                "format {f:?} is not available for this command"
            )));
        }
        Ok(f)
    }

    /// The cell set named by `--cells` or `--full`, or the empty set of
    /// `T_n` when neither is given.
    fn cellset(&self) -> Result<CellSet, Failure> {
        if let Some(path) = &self.cells {
            let doc = parse_cellset(&read_file(path)?)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if let Some(n) = self.n {
                if n != doc.n {
                    return Err(usage(format!(
                        "--n {n} does not match n = {} in {}",
                        doc.n,
                        path.display()
                    )));
                }
            }
            return Ok(doc.to_cellset());
        }
        let n = self.n.ok_or_else(|| usage("give --n or --cells"))?;
        if self.full {
            Ok(CellSet::full(n)?)
        } else {
            Ok(CellSet::empty(n)?)
        }
    }

    fn require_n(&self) -> Result<u32, Failure> {
        self.n.ok_or_else(|| usage("--n is required"))
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

fn predicate(truth: bool, fmt: Format, text: String, data: serde_json::Value) -> (i32, String) {
    let code = if truth { EXIT_TRUE } else { EXIT_FALSE };
    let out = match fmt {
        Format::Json => {
            let mut obj = json!({ "result": truth });
            if let serde_json::Value::Object(extra) = data {
                obj.as_object_mut().unwrap().extend(extra);
            }
            json_text(&obj)
        }
        _ if text.is_empty() => format!("{truth}\n"),
        _ => format!("{truth}\n{text}"),
    };
    (code, out)
}

fn search_budget(arg: &SearchArgs) -> Result<SearchBudget, Failure> {
    match arg.budget.as_deref() {
        None | Some("default") => Ok(SearchBudget::default()),
        Some(s) => match s.parse::<u64>() {
            Ok(v) if v > 0 => Ok(SearchBudget(v)),
            _ => Err(usage(format!(
                "invalid budget {s:?}: expected a positive integer or `default`"
            ))),
        },
    }
}

fn tiling_output(t: &Tiling, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let check = validate_tiling(t);
            json_text(&json!({ "tiling": t, "counts": check.counts, "valid": check.is_valid() }))
        }
        Format::Svg => render_svg(t),
        Format::Ascii => render_ascii(t),
        _ => {
            let mut out = format!("{}\n", t.counts());
            for tile in &t.tiles {
                out.push_str(&format!("{tile}\n"));
            }
            out
        }
    }
}

const TILING_FORMATS: &[Format] = &[Format::Text, Format::Json, Format::Svg, Format::Ascii];
const PLAIN_FORMATS: &[Format] = &[Format::Text, Format::Json];

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Indep(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let v = ctx.violation(&s);
            let text = v
                .map(|(t, c)| format!("triangle {t} holds {c} cells, more than its size {}\n", t.k))
                .unwrap_or_default();
            let data = json!({ "violation": v.map(|(t, c)| json!({ "triangle": t, "count": c })) });
            Ok(predicate(v.is_none(), fmt, text, data))
        }
        Command::Rank(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let basis = ctx.greedy_basis(&s);
            Ok((
                EXIT_TRUE,
                match fmt {
                    Format::Json => {
                        json_text(&json!({ "rank": basis.len(), "independent_subset": basis }))
                    }
                    _ => format!("{}\n", basis.len()),
                },
            ))
        }
        Command::Closure(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let cl = ctx.closure(&s);
            Ok((
                EXIT_TRUE,
                match fmt {
                    Format::Json => json_text(&CellSetDocument::from_cellset(&cl, None)),
                    _ => format!("{cl}\n"),
                },
            ))
        }
        Command::Basis(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let basis = ctx.is_basis(&s);
            let v = ctx.violation(&s);
            let text = if basis {
                String::new()
            } else if let Some((t, c)) = v {
                format!(
                    "dependent: triangle {t} holds {c} cells, more than its size {}\n",
                    t.k
                )
            } else {
                format!("independent but has {} cells, not {}\n", s.len(), s.n())
            };
            let data = json!({ "size": s.len(), "violation": v.map(|(t, c)| json!({ "triangle": t, "count": c })) });
            Ok(predicate(basis, fmt, text, data))
        }
        Command::Circuit(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let circuit = ctx.is_circuit(&s);
            let strict = ctx.strictly_oversaturated(&s);
            let text = if circuit {
                format!("hull {}\n", triangular_hull(&s)?)
            } else if ctx.is_independent(&s) {
                "independent\n".to_string()
            } else {
                let smaller = s
                    .iter()
                    .find(|&u| !ctx.is_independent(&s.without(u)))
                    .expect("dependent");
                format!("dependent after removing {smaller}\n")
            };
            let hull = if s.is_empty() {
                None
            } else {
                Some(triangular_hull(&s)?)
            };
            let data = json!({ "hull": hull, "strictly_oversaturated": strict });
            Ok(predicate(circuit, fmt, text, data))
        }
        Command::Flat(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let ctx = MatroidContext::new(s.n())?;
            let flat = ctx.is_flat_closure(&s);
            let geometric = ctx.is_flat_geometric(&s);
            let decomposition = if flat {
                Some(ctx.flat_decomposition(&s)?)
            } else {
                None
            };
            let mut text = format!("literal triangle test: {geometric}\n");
            if let Some(d) = &decomposition {
                let tris: Vec<String> = d.triangles.iter().map(|t| t.to_string()).collect();
                text.push_str(&format!("maximal complete triangles: {}\n", tris.join(" ")));
                if !d.is_disjoint_cover() {
                    text.push_str(&format!(
                        "uncovered {}, overlapping pairs {}\n",
                        d.uncovered,
                        d.overlaps.len()
                    ));
                }
            } else {
                text.push_str(&format!("closure {}\n", ctx.closure(&s)));
            }
            let data = json!({ "geometric": geometric, "decomposition": decomposition });
            Ok(predicate(flat, fmt, text, data))
        }
        Command::Hull(io) => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let hull = triangular_hull(&s)?;
            Ok((
                EXIT_TRUE,
                match fmt {
                    Format::Json => json_text(&json!({ "hull": hull })),
                    _ => format!("{hull}\n"),
                },
            ))
        }
        Command::Tile {
            io,
            tiles,
            objective,
            search,
        } => {
            let fmt = io.format(Format::Text, TILING_FORMATS)?;
            let s = io.cellset()?;
            let mut req = TileRequest::new(&tiles).budget(search_budget(&search)?);
            if let Some(obj) = objective {
                req = req.objective(parse_objective(&obj)?);
            }
            let region = HoleyRegion::new(s);
            match tile_exact(&region, &req)? {
                Some(t) => Ok((EXIT_TRUE, tiling_output(&t, fmt))),
                None => Ok((
                    EXIT_FALSE,
                    match fmt {
                        Format::Json => json_text(&json!({ "tiling": null })),
                        _ => "infeasible\n".to_string(),
                    },
                )),
            }
        }
        Command::MinType2 { io, search } => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let s = io.cellset()?;
            let min = min_type2(&HoleyRegion::new(s), search_budget(&search)?, None)?;
            let code = if min.is_some() { EXIT_TRUE } else { EXIT_FALSE };
            Ok((
                code,
                match (fmt, min) {
                    (Format::Json, m) => json_text(&json!({ "min_type2": m })),
                    (_, Some(m)) => format!("{m}\n"),
                    (_, None) => "infeasible\n".to_string(),
                },
            ))
        }
        Command::Annulus { io, tri } => {
            let fmt = io.format(Format::Text, TILING_FORMATS)?;
            let n = io.require_n()?;
            let t = parse_tri(&tri)?;
            Ok((EXIT_TRUE, tiling_output(&annulus_tiling(n, &t)?, fmt)))
        }
        Command::Enum { io, kind, budget } => {
            let fmt = io.format(Format::Text, PLAIN_FORMATS)?;
            let ctx = MatroidContext::new(io.require_n()?)?;
            let sets: Vec<CellSet> = enumerate(&ctx, kind, budget)?.collect();
            Ok((
                EXIT_TRUE,
                match fmt {
                    Format::Json => json_text(
                        &json!({ "kind": kind, "n": ctx.n(), "count": sets.len(), "sets": sets }),
                    ),
                    _ => {
                        let mut out = String::new();
                        for s in &sets {
                            out.push_str(&format!("{s}\n"));
                        }
                        out.push_str(&format!("count {}\n", sets.len()));
                        out
                    }
                },
            ))
        }
        Command::Verify {
            io,
            theorem,
            budget,
            seed,
            timings,
        } => {
            let fmt = io.format(
                Format::JsonReport,
                &[Format::JsonReport, Format::Json, Format::Text],
            )?;
            let ctx = MatroidContext::new(io.require_n()?)?;
            let opts = VerifyOptions {
                budget,
                seed,
                timings,
            };
            let reports = match theorem {
                Some(t) => vec![check(&ctx, t, &opts)?],
                None => verify_all(&ctx, &opts)?,
            };
            let ok = reports.iter().all(|r| r.ok);
            let out = match fmt {
                Format::Text => {
                    let mut out = String::new();
                    for r in &reports {
                        out.push_str(&format!(
                            "{:<16} n={} {} {}: examined {} applicable {} disagreements {} skipped {} -> {}\n",
                            r.theorem.name(),
                            r.n,
                            snake(&r.expectation),
                            snake(&r.budget_status),
                            r.examined,
                            r.applicable,
                            r.disagreement_total,
                            r.skipped,
                            if r.ok { "ok" } else { "FAIL" }
                        ));
                    }
                    out
                }
                _ => json_text(&reports),
            };
            Ok((if ok { EXIT_TRUE } else { EXIT_FALSE }, out))
        }
        Command::Render {
            io,
            tiling,
            tiles,
            reconfigure,
        } => {
            let fmt = io.format(Format::Svg, &[Format::Svg, Format::Ascii])?;
            let mut t = match tiling {
                Some(path) => load_tiling(&path)?,
                None => {
                    let region = HoleyRegion::new(io.cellset()?);
                    let kinds = tiles.unwrap_or_else(|| {
                        vec![TileKind::Rhombus, TileKind::UnitUp, TileKind::UnitDown]
                    });
                    let exact = kinds
                        .iter()
                        .any(|k| matches!(k, TileKind::Trapezoid1 | TileKind::Trapezoid2));
                    if exact {
                        match tile_exact(&region, &TileRequest::new(&kinds))? {
                            Some(t) => t,
                            None => return Ok((EXIT_FALSE, "infeasible\n".to_string())),
                        }
                    } else if kinds.contains(&TileKind::UnitUp)
                        || kinds.contains(&TileKind::UnitDown)
                    {
                        max_rhombi_tiling(&region)
                    } else {
                        match crate::tiler::lozenge_tiling(&region) {
                            Some(t) => t,
                            None => return Ok((EXIT_FALSE, "infeasible\n".to_string())),
                        }
                    }
                }
            };
            if reconfigure {
                t = reconfigure_up(&t)?;
            }
            Ok((
                EXIT_TRUE,
                if fmt == Format::Ascii {
                    render_ascii(&t)
                } else {
                    render_svg(&t)
                },
            ))
        }
    }
}

fn parse_objective(s: &str) -> Result<Objective, Failure> {
    if s == "min-t2" {
        return Ok(Objective::Minimize(TileKind::Trapezoid2));
    }
    if let Some(v) = s.strip_prefix("exact-t1=") {
        let v = v
            .parse::<usize>()
            .map_err(|_| usage(format!("invalid count in objective {s:?}")))?;
        return Ok(Objective::RequireExact(TileKind::Trapezoid1, v));
    }
    Err(usage(format!(
        "unknown objective {s:?} (expected min-t2 or exact-t1=<k>)"
    )))
}

fn parse_tri(s: &str) -> Result<LatticeTri, Failure> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    match parts.as_deref() {
        Ok([p, q, r, k]) => Ok(LatticeTri::new(*p, *q, *r, *k)?),
        _ => Err(usage(format!("invalid triangle {s:?}: expected p,q,r,k"))),
    }
}

fn load_tiling(path: &PathBuf) -> Result<Tiling, Failure> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Saved {
        Wrapped { tiling: Tiling },
        Bare(Tiling),
    }
    let text = read_file(path)?;
    let t = match serde_json::from_str::<Saved>(&text) {
        Ok(Saved::Wrapped { tiling }) | Ok(Saved::Bare(tiling)) => tiling,
        Err(e) => return Err(usage(format!("{}: not a tiling: {e}", path.display()))),
    };
    let check = validate_tiling(&t);
    if let Some(issue) = check.issues.first() {
        return Err(usage(format!(
            "{}: invalid tiling: {issue}",
            path.display()
        )));
    }
    Ok(t)
}

/// Runs one command line (including the program name).
/// The serialized name of a unit enum variant.
fn snake<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_TRUE
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let out_path = match &cli.command {
        Command::Indep(io)
        | Command::Rank(io)
        | Command::Closure(io)
        | Command::Basis(io)
        | Command::Circuit(io)
        | Command::Flat(io)
        | Command::Hull(io)
        | Command::Tile { io, .. }
        | Command::MinType2 { io, .. }
        | Command::Annulus { io, .. }
        | Command::Enum { io, .. }
        | Command::Verify { io, .. }
        | Command::Render { io, .. } => io.out.clone(),
    };
    match dispatch(cli.command) {
        Ok((code, text)) => match out_path {
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => CliOutput {
                code,
                stdout: text,
                stderr: String::new(),
            },
        },
        Err(f) => CliOutput {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> CliOutput {
        run(std::iter::once("trimat").chain(args.iter().copied()))
    }

    #[test]
    fn rank_of_full_set() {
        let out = go(&["rank", "--n", "4", "--full"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "4\n"));
    }

    #[test]
    fn indep_full_t2() {
        let out = go(&["indep", "--n", "2", "--full"]);
        assert_eq!(out.code, 1);
        assert!(
            out.stdout.contains("(0,0,0,2) holds 3 cells"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["rank"]).code, 2);
        assert_eq!(go(&["bogus"]).code, 2);
        assert_eq!(go(&["hull", "--n", "3"]).code, 2);
        assert_eq!(go(&["annulus", "--n", "3", "--tri", "1,0"]).code, 2);
        assert_eq!(go(&["tile", "--n", "3", "--objective", "max"]).code, 2);
        assert_eq!(go(&["rank", "--n", "3", "--format", "svg"]).code, 2);
    }

    #[test]
    fn budget_exhaustion() {
        let out = go(&["enum", "--n", "6", "--kind", "flats"]);
        assert_eq!(out.code, 3, "{}", out.stderr);
        let out = go(&[
            "tile",
            "--n",
            "5",
            "--tiles",
            "rhombus,t1,t2",
            "--budget",
            "3",
        ]);
        assert_eq!(out.code, 3, "{}", out.stderr);
    }

    #[test]
    fn annulus_ascii() {
        let out = go(&[
            "annulus", "--n", "3", "--tri", "1,0,0,2", "--format", "ascii",
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().count(), 3);
    }

    #[test]
    fn objectives() {
        assert!(matches!(
            parse_objective("min-t2"),
            Ok(Objective::Minimize(TileKind::Trapezoid2))
        ));
        assert!(matches!(
            parse_objective("exact-t1=3"),
            Ok(Objective::RequireExact(TileKind::Trapezoid1, 3))
        ));
        assert!(parse_objective("exact-t1=x").is_err());
    }
}
