//! Structured command reports. Every report serializes to JSON and renders
//! to deterministic text; parsing the emitted JSON reproduces the same data.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cone::Cone;
use crate::fanbunch::{MatrixClassification, MonomialIdeal};
use crate::gkz::GkzCone;
use crate::lattice::{IntMatrix, RatVector};
use crate::wmds::DivisorClass;

/// Integer matrices and vectors travel as decimal strings to keep exactness
/// through serialization.
pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|e| e.to_string()).collect())
        .collect()
}

pub fn int_vec(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|e| e.to_string()).collect()
}

pub fn rat_vec(v: &RatVector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

pub fn cone_summary(c: &Cone) -> ConeSummary {
    ConeSummary {
        dim: c.dim(),
        rays: c.rays().iter().map(|r| int_vec(r)).collect(),
        lineality_dim: c.lineality_dim(),
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ConeSummary {
    pub dim: usize,
    pub rays: Vec<Vec<String>>,
    pub lineality_dim: usize,
}

impl ConeSummary {
    fn render(&self, label: &str, out: &mut String) {
        out.push_str(&format!("{label}: dim {}", self.dim));
        if self.lineality_dim > 0 {
            out.push_str(&format!(", lineality {}", self.lineality_dim));
        }
        if self.rays.is_empty() {
            out.push('\n');
        } else {
            out.push_str(&format!(
                ", rays {}\n",
                self.rays.iter().map(|r| format!("({})", r.join(","))).collect::<Vec<_>>().join(" ")
            ));
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ClassificationSummary {
    pub satisfied: bool,
    pub violations: Vec<String>,
    pub reduced: bool,
}

impl From<&MatrixClassification> for ClassificationSummary {
    fn from(c: &MatrixClassification) -> Self {
        ClassificationSummary {
            satisfied: c.satisfied,
            violations: c.violations.clone(),
            reduced: c.reduced,
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CellSummary {
    pub index: usize,
    pub dim: usize,
    pub rays: Vec<Vec<String>>,
    pub is_chamber: bool,
    pub witness: Vec<String>,
}

pub fn cell_summary(index: usize, cell: &GkzCone) -> CellSummary {
    CellSummary {
        index,
        dim: cell.cone.dim(),
        rays: cell.cone.rays().iter().map(|r| int_vec(r)).collect(),
        is_chamber: cell.is_chamber,
        witness: rat_vec(&cell.witness),
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ClassSummary {
    pub free: Vec<String>,
    pub torsion: Vec<String>,
}

pub fn class_summary(c: &DivisorClass) -> ClassSummary {
    ClassSummary { free: int_vec(&c.free), torsion: int_vec(&c.torsion) }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct IdealSummary {
    pub generators: Vec<Vec<usize>>,
    pub monomials: Vec<String>,
}

pub fn ideal_summary(ideal: &MonomialIdeal) -> IdealSummary {
    IdealSummary {
        generators: ideal.generators_one_based(),
        monomials: ideal.monomial_strings(),
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Gale {
        name: String,
        fan_matrix: Vec<Vec<String>>,
        weight_matrix: Vec<Vec<String>>,
    },
    Classify {
        name: String,
        fan_matrix: ClassificationSummary,
        weight_matrix: ClassificationSummary,
    },
    Cones {
        name: String,
        eff: ConeSummary,
        mov: ConeSummary,
        nef: Option<ConeSummary>,
    },
    Gkz {
        name: String,
        restricted_to_mov: bool,
        cells: Vec<CellSummary>,
        chamber_count: usize,
        face_relations: Vec<(usize, usize)>,
    },
    Chambers {
        name: String,
        chambers: Vec<CellSummary>,
    },
    Fans {
        name: String,
        census: Vec<FanCensusSummary>,
        total: usize,
        projective: usize,
    },
    Fillable {
        name: String,
        fillable: bool,
        nef: ConeSummary,
        chamber_count: usize,
        filling_cells: Vec<FillingCellSummary>,
    },
    Complete {
        name: String,
        chamber_index: usize,
        filling_cell: CellSummary,
        completed_fan: Vec<Vec<usize>>,
        irrelevant_ideal: IdealSummary,
        complete: bool,
    },
    Mmp {
        name: String,
        class: ClassSummary,
        status: String,
        target_chamber: Option<CellSummary>,
        target_fan: Option<Vec<Vec<usize>>>,
        target_is_fan: bool,
        is_sqm: bool,
        semiample: bool,
        incident_chambers: Vec<CellSummary>,
    },
    Sqm {
        name: String,
        count: usize,
        targets: Vec<SqmTargetSummary>,
    },
    Anticanonical {
        name: String,
        class: ClassSummary,
        big: bool,
        movable: bool,
    },
    Full {
        name: String,
        classify_fan: ClassificationSummary,
        classify_weight: ClassificationSummary,
        eff: ConeSummary,
        mov: ConeSummary,
        nef: Option<ConeSummary>,
        chamber_count: usize,
        homogeneous: Option<bool>,
        anticanonical: ClassSummary,
        anticanonical_big: bool,
        anticanonical_movable: bool,
        fillable: Option<bool>,
    },
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FanCensusSummary {
    pub index: usize,
    pub max_cones: Vec<Vec<usize>>,
    pub projective: bool,
    pub nef: ConeSummary,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FillingCellSummary {
    pub cell: CellSummary,
    pub filling_fans: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SqmTargetSummary {
    pub index: usize,
    pub chamber: CellSummary,
    pub fan: Vec<Vec<usize>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Gale { name, fan_matrix, weight_matrix } => {
                out.push_str(&format!("[{name}] Gale duality\n"));
                render_matrix("fan matrix V", fan_matrix, &mut out);
                render_matrix("weight matrix Q", weight_matrix, &mut out);
            }
            Report::Classify { name, fan_matrix, weight_matrix } => {
                out.push_str(&format!("[{name}] matrix classification\n"));
                render_classification("V is an F-matrix", fan_matrix, &mut out);
                render_classification("Q is a W-matrix", weight_matrix, &mut out);
            }
            Report::Cones { name, eff, mov, nef } => {
                out.push_str(&format!("[{name}] distinguished cones\n"));
                eff.render("Eff", &mut out);
                mov.render("Mov", &mut out);
                match nef {
                    Some(n) => n.render("Nef", &mut out),
                    None => out.push_str("Nef: (no ambient fan in the document)\n"),
                }
            }
            Report::Gkz { name, restricted_to_mov, cells, chamber_count, face_relations } => {
                let support = if *restricted_to_mov { "Mov" } else { "Eff" };
                out.push_str(&format!(
                    "[{name}] GKZ decomposition of {support}: {} cells, {} chambers, {} face relations\n",
                    cells.len(),
                    chamber_count,
                    face_relations.len()
                ));
                for c in cells {
                    render_cell(c, &mut out);
                }
            }
            Report::Chambers { name, chambers } => {
                out.push_str(&format!("[{name}] {} chambers\n", chambers.len()));
                for c in chambers {
                    render_cell(c, &mut out);
                }
            }
            Report::Fans { name, census, total, projective } => {
                out.push_str(&format!(
                    "[{name}] census: {total} fans, {projective} projective\n"
                ));
                for f in census {
                    out.push_str(&format!(
                        "fan {}: {}{}\n",
                        f.index,
                        sets_text(&f.max_cones),
                        if f.projective { " (projective)" } else { " (non-projective)" }
                    ));
                    f.nef.render("  nef", &mut out);
                }
            }
            Report::Fillable { name, fillable, nef, chamber_count, filling_cells } => {
                out.push_str(&format!(
                    "[{name}] {}\n",
                    if *fillable { "fillable" } else { "NOT fillable" }
                ));
                nef.render("Nef", &mut out);
                out.push_str(&format!(
                    "{chamber_count} chambers, {} filling cells\n",
                    filling_cells.len()
                ));
                for fc in filling_cells {
                    render_cell(&fc.cell, &mut out);
                    for fan in &fc.filling_fans {
                        out.push_str(&format!("  filling fan: {}\n", sets_text(fan)));
                    }
                }
            }
            Report::Complete { name, chamber_index, filling_cell, completed_fan, irrelevant_ideal, complete } => {
                out.push_str(&format!(
                    "[{name}] sharp completion along chamber {chamber_index}\n"
                ));
                render_cell(filling_cell, &mut out);
                out.push_str(&format!("completed fan: {}\n", sets_text(completed_fan)));
                out.push_str(&format!(
                    "irrelevant ideal: ({})\n",
                    irrelevant_ideal.monomials.join(", ")
                ));
                out.push_str(&format!("complete: {complete}\n"));
            }
            Report::Mmp { name, class, status, target_chamber, target_fan, target_is_fan, is_sqm, semiample, incident_chambers } => {
                out.push_str(&format!(
                    "[{name}] MMP for class ({})\n",
                    class.free.join(",")
                ));
                out.push_str(&format!("status: {status}\n"));
                if let Some(c) = target_chamber {
                    render_cell(c, &mut out);
                }
                if let Some(f) = target_fan {
                    out.push_str(&format!(
                        "target fan{}: {}\n",
                        if *target_is_fan { "" } else { " (quasi-fan)" },
                        sets_text(f)
                    ));
                }
                out.push_str(&format!("small modification: {is_sqm}\n"));
                out.push_str(&format!("semiample endpoint: {semiample}\n"));
                if incident_chambers.len() > 1 {
                    out.push_str(&format!(
                        "class lies on a wall of {} full-dimensional cells\n",
                        incident_chambers.len()
                    ));
                }
            }
            Report::Sqm { name, count, targets } => {
                out.push_str(&format!("[{name}] {count} small modification targets\n"));
                for t in targets {
                    render_cell(&t.chamber, &mut out);
                    out.push_str(&format!("  fan: {}\n", sets_text(&t.fan)));
                }
            }
            Report::Anticanonical { name, class, big, movable } => {
                out.push_str(&format!(
                    "[{name}] anticanonical class ({})",
                    class.free.join(",")
                ));
                if !class.torsion.is_empty() {
                    out.push_str(&format!(" torsion ({})", class.torsion.join(",")));
                }
                out.push_str(&format!("\nbig: {big}\nmovable: {movable}\n"));
            }
            Report::Full { name, classify_fan, classify_weight, eff, mov, nef, chamber_count, homogeneous, anticanonical, anticanonical_big, anticanonical_movable, fillable } => {
                out.push_str(&format!("[{name}] report\n"));
                render_classification("V is an F-matrix", classify_fan, &mut out);
                render_classification("Q is a W-matrix", classify_weight, &mut out);
                eff.render("Eff", &mut out);
                mov.render("Mov", &mut out);
                if let Some(n) = nef {
                    n.render("Nef", &mut out);
                }
                out.push_str(&format!("chambers: {chamber_count}\n"));
                if let Some(h) = homogeneous {
                    out.push_str(&format!("relations homogeneous: {h}\n"));
                }
                out.push_str(&format!(
                    "anticanonical: ({}) big: {} movable: {}\n",
                    anticanonical.free.join(","),
                    anticanonical_big,
                    anticanonical_movable
                ));
                if let Some(f) = fillable {
                    out.push_str(&format!("fillable: {f}\n"));
                }
            }
        }
        out
    }
}

fn render_matrix(label: &str, rows: &[Vec<String>], out: &mut String) {
    out.push_str(&format!(
        "{label} ({}x{}):\n",
        rows.len(),
        rows.first().map(|r| r.len()).unwrap_or(0)
    ));
    for r in rows {
        out.push_str(&format!("  [{}]\n", r.join(", ")));
    }
}

fn render_classification(label: &str, c: &ClassificationSummary, out: &mut String) {
    out.push_str(&format!(
        "{label}: {}{}\n",
        c.satisfied,
        if c.reduced { " (reduced)" } else { "" }
    ));
    for v in &c.violations {
        out.push_str(&format!("  violated {v}\n"));
    }
}

fn render_cell(c: &CellSummary, out: &mut String) {
    out.push_str(&format!(
        "cell {}: dim {}{} rays {}\n",
        c.index,
        c.dim,
        if c.is_chamber { " (chamber)" } else { "" },
        c.rays.iter().map(|r| format!("({})", r.join(","))).collect::<Vec<_>>().join(" ")
    ));
}

fn sets_text(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|s| format!("{{{}}}", s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}
