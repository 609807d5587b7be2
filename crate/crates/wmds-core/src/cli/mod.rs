//! Command front end: document loading, command dispatch and report
//! assembly. The binary in `src/bin/wmds.rs` is a thin argument-parsing
//! wrapper over [`run`].

pub mod doc;
pub mod plot;
pub mod report;

pub use doc::InputDocument;
pub use report::Report;

use num_bigint::BigInt;

use crate::fanbunch::{eff_cone, is_f_matrix, is_w_matrix, mov_cone, nef_cone};
use crate::gkz::{self, GkzContext};
use crate::sfenum;
use crate::wmds::{self, DivisorClass, MmpStatus};
use crate::{Error, Result};
use report::{
    cell_summary, class_summary, cone_summary, ideal_summary, matrix_rows,
    ClassificationSummary, FanCensusSummary, FillingCellSummary, SqmTargetSummary,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gale,
    Classify,
    Cones,
    Gkz,
    Chambers,
    Fans,
    Fillable,
    Complete,
    Mmp,
    Sqm,
    Anticanonical,
    Report,
    Plot,
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gale" => Command::Gale,
            "classify" => Command::Classify,
            "cones" => Command::Cones,
            "gkz" => Command::Gkz,
            "chambers" => Command::Chambers,
            "fans" => Command::Fans,
            "fillable" => Command::Fillable,
            "complete" => Command::Complete,
            "mmp" => Command::Mmp,
            "sqm" => Command::Sqm,
            "anticanonical" => Command::Anticanonical,
            "report" => Command::Report,
            "plot" => Command::Plot,
            other => return Err(Error::Input(format!("unknown command '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Restrict the `gkz` command to the moving cone.
    pub mov_only: bool,
    /// 1-based chamber selector for `complete`.
    pub chamber: Option<usize>,
    /// Divisor class "a,b,..." for `mmp`.
    pub class: Option<String>,
}

/// Either a structured report or raw SVG bytes (for `plot`).
pub enum Output {
    Report(Report),
    Svg(String),
}

pub struct RunResult {
    pub output: Output,
    /// Domain-negative verdict (not fillable, not effective): exit 1 under
    /// --strict.
    pub negative: bool,
}

/// Maps errors to the documented exit codes: 2 for input/usage problems,
/// 3 for enumeration-budget refusals, 1 for domain errors.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) => 3,
        Error::Input(_)
        | Error::DimensionMismatch(_)
        | Error::ZeroColumn(_)
        | Error::IdealNotFan(_)
        | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

pub fn run(cmd: Command, document: &InputDocument, opts: &Options) -> Result<RunResult> {
    let name = document.name.clone();
    let v = &document.fan_matrix;
    let q = &document.weight_matrix;
    let ok = |report: Report| RunResult { output: Output::Report(report), negative: false };
    match cmd {
        Command::Gale => Ok(ok(Report::Gale {
            name,
            fan_matrix: matrix_rows(v),
            weight_matrix: matrix_rows(q),
        })),
        Command::Classify => Ok(ok(Report::Classify {
            name,
            fan_matrix: ClassificationSummary::from(&is_f_matrix(v)),
            weight_matrix: ClassificationSummary::from(&is_w_matrix(q)),
        })),
        Command::Cones => {
            let nef = if document.has_ambient_fan() {
                let fan = document.ambient_fan()?;
                Some(cone_summary(&nef_cone(&fan, q)?))
            } else {
                None
            };
            Ok(ok(Report::Cones {
                name,
                eff: cone_summary(&eff_cone(q)),
                mov: cone_summary(&mov_cone(q)?),
                nef,
            }))
        }
        Command::Gkz => {
            let ctx = GkzContext::new(q)?;
            let dec = gkz::gkz_decomposition(&ctx, opts.mov_only)?;
            let cells: Vec<_> = dec
                .cells()
                .iter()
                .enumerate()
                .map(|(i, c)| cell_summary(i + 1, c))
                .collect();
            let chamber_count = dec.chambers().len();
            Ok(ok(Report::Gkz {
                name,
                restricted_to_mov: dec.restricted_to_mov(),
                cells,
                chamber_count,
                face_relations: dec
                    .face_relations()
                    .iter()
                    .map(|&(a, b)| (a + 1, b + 1))
                    .collect(),
            }))
        }
        Command::Chambers => {
            let ctx = GkzContext::new(q)?;
            let chambers = gkz::chambers(&ctx)?;
            Ok(ok(Report::Chambers {
                name,
                chambers: chambers
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cell_summary(i + 1, c))
                    .collect(),
            }))
        }
        Command::Fans => {
            let census = sfenum::enumerate_sf_with_weights(v, q)?;
            let summaries: Vec<FanCensusSummary> = census
                .entries()
                .iter()
                .enumerate()
                .map(|(i, e)| FanCensusSummary {
                    index: i + 1,
                    max_cones: e.fan.max_cone_sets_one_based(),
                    projective: e.projective,
                    nef: cone_summary(&e.nef_cell.cone),
                })
                .collect();
            let projective = census.projective_entries().len();
            Ok(ok(Report::Fans { name, census: summaries, total: census.len(), projective }))
        }
        Command::Fillable => {
            let fan = document.ambient_fan()?;
            let ctx = GkzContext::new(q)?;
            let nef = nef_cone(&fan, q)?;
            let chamber_count = gkz::chambers(&ctx)?.len();
            let cells = sfenum::filling_cells(&ctx, &fan)?;
            let fillable = !cells.is_empty();
            let summaries: Vec<FillingCellSummary> = cells
                .iter()
                .enumerate()
                .map(|(i, (cell, fans))| FillingCellSummary {
                    cell: cell_summary(i + 1, cell),
                    filling_fans: fans.iter().map(|f| f.max_cone_sets_one_based()).collect(),
                })
                .collect();
            Ok(RunResult {
                output: Output::Report(Report::Fillable {
                    name,
                    fillable,
                    nef: cone_summary(&nef),
                    chamber_count,
                    filling_cells: summaries,
                }),
                negative: !fillable,
            })
        }
        Command::Complete => {
            let Some(k) = opts.chamber else {
                return Err(Error::Input("complete requires --chamber K".into()));
            };
            let fan = document.ambient_fan()?;
            let ctx = GkzContext::new(q)?;
            let chambers = gkz::chambers(&ctx)?;
            if k == 0 || k > chambers.len() {
                return Err(Error::Input(format!(
                    "--chamber {k} out of range 1..={}",
                    chambers.len()
                )));
            }
            let cell = &chambers[k - 1];
            let completion = sfenum::sharp_completion(&ctx, &fan, cell)?;
            Ok(ok(Report::Complete {
                name,
                chamber_index: k,
                filling_cell: cell_summary(k, &completion.filling_cell),
                completed_fan: completion.completed_fan.max_cone_sets_one_based(),
                irrelevant_ideal: ideal_summary(&completion.irrelevant_ideal_of_z),
                complete: completion.complete,
            }))
        }
        Command::Mmp => {
            let Some(text) = &opts.class else {
                return Err(Error::Input("mmp requires --class \"a,b,...\"".into()));
            };
            let class = parse_class(text, q.rows())?;
            let fan = document.ambient_fan()?;
            let report = wmds::mmp_trace_with_ambient(&document.presentation, &fan, &class)?;
            let negative = report.status == MmpStatus::NotEffective;
            Ok(RunResult {
                output: Output::Report(Report::Mmp {
                    name,
                    class: class_summary(&report.input_class),
                    status: report.status.as_str().into(),
                    target_chamber: report.target_chamber.as_ref().map(|c| cell_summary(0, c)),
                    target_fan: report
                        .target_fan
                        .as_ref()
                        .map(|f| f.max_cone_sets_one_based()),
                    target_is_fan: report.target_is_fan,
                    is_sqm: report.is_sqm,
                    semiample: report.semiample,
                    incident_chambers: report
                        .incident_chambers
                        .iter()
                        .enumerate()
                        .map(|(i, c)| cell_summary(i + 1, c))
                        .collect(),
                }),
                negative,
            })
        }
        Command::Sqm => {
            let targets = wmds::sqm_targets_for(q, v)?;
            Ok(ok(Report::Sqm {
                name,
                count: targets.len(),
                targets: targets
                    .iter()
                    .enumerate()
                    .map(|(i, (cell, fan))| SqmTargetSummary {
                        index: i + 1,
                        chamber: cell_summary(i + 1, cell),
                        fan: fan.max_cone_sets_one_based(),
                    })
                    .collect(),
            }))
        }
        Command::Anticanonical => {
            let ac = wmds::anticanonical_class(&document.presentation);
            Ok(ok(Report::Anticanonical {
                name,
                big: wmds::is_big(q, &ac)?,
                movable: wmds::is_movable(q, &ac)?,
                class: class_summary(&ac),
            }))
        }
        Command::Report => {
            let ctx = GkzContext::new(q)?;
            let nef = if document.has_ambient_fan() {
                Some(cone_summary(&nef_cone(&document.ambient_fan()?, q)?))
            } else {
                None
            };
            let chamber_count = gkz::chambers(&ctx)?.len();
            let homogeneous = if document.presentation.relations.is_empty() {
                None
            } else {
                Some(wmds::check_homogeneous(&document.presentation)?.homogeneous)
            };
            let ac = wmds::anticanonical_class(&document.presentation);
            let fillable = if document.has_ambient_fan() {
                match sfenum::is_fillable(&ctx, &document.ambient_fan()?) {
                    Ok(f) => Some(f),
                    Err(Error::BudgetExceeded(_)) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            let negative = fillable == Some(false);
            Ok(RunResult {
                output: Output::Report(Report::Full {
                    name,
                    classify_fan: ClassificationSummary::from(&is_f_matrix(v)),
                    classify_weight: ClassificationSummary::from(&is_w_matrix(q)),
                    eff: cone_summary(&eff_cone(q)),
                    mov: cone_summary(&mov_cone(q)?),
                    nef,
                    chamber_count,
                    homogeneous,
                    anticanonical_big: wmds::is_big(q, &ac)?,
                    anticanonical_movable: wmds::is_movable(q, &ac)?,
                    anticanonical: class_summary(&ac),
                    fillable,
                }),
                negative,
            })
        }
        Command::Plot => {
            let svg = plot::plot_section(document)?;
            Ok(RunResult { output: Output::Svg(svg), negative: false })
        }
    }
}

/// Parses "a,b,..." into a free divisor class of the expected rank.
pub fn parse_class(text: &str, rank: usize) -> Result<DivisorClass> {
    let parts: Vec<&str> = text.split(',').map(|p| p.trim()).collect();
    if parts.len() != rank {
        return Err(Error::Input(format!(
            "class '{text}' has {} coordinates, expected {rank}",
            parts.len()
        )));
    }
    let free = parts
        .iter()
        .map(|p| {
            p.parse::<BigInt>()
                .map_err(|_| Error::Input(format!("invalid class coordinate '{p}'")))
        })
        .collect::<Result<Vec<BigInt>>>()?;
    Ok(DivisorClass::free_only(free))
}

/// Round trip used by the CLI determinism test: render to JSON and parse
/// back.
pub fn reparse_report(json: &str) -> Result<Report> {
    serde_json::from_str(json).map_err(|e| Error::Input(format!("report reparse: {e}")))
}
