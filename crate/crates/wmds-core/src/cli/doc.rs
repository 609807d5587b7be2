//! The structured input document: a TOML file carrying a fan matrix and/or
//! weight matrix, optional torsion data, relations with exact rational
//! coefficients, and 1-based index lists for the irrelevant ideal or the
//! maximal cones. Missing sides of the Gale pair are derived at load time;
//! present pairs are verified for duality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;

use crate::fanbunch::{Fan, MonomialIdeal};
use crate::lattice::{gale_dual, row_lattices_equal, IntMatrix};
use crate::wmds::{GradedPresentation, SparsePolynomial, Term, TorsionGrading};
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: Option<String>,
    fan_matrix: Option<Vec<Vec<i64>>>,
    weight_matrix: Option<Vec<Vec<i64>>>,
    torsion: Option<RawTorsion>,
    relations: Option<Vec<RawRelation>>,
    irrelevant_ideal: Option<Vec<Vec<usize>>>,
    max_cones: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTorsion {
    moduli: Vec<i64>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRelation {
    terms: Vec<RawTerm>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: String,
    exponents: Vec<i64>,
}

/// A fully resolved input document: both matrices of the Gale pair, the
/// graded presentation, and the ambient fan when one is specified.
#[derive(Debug, Clone)]
pub struct InputDocument {
    pub name: String,
    pub fan_matrix: IntMatrix,
    pub weight_matrix: IntMatrix,
    pub presentation: GradedPresentation,
    pub explicit_fan: Option<Fan>,
}

/// Parses an exact rational written as "p/q" or a plain integer string.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Input(format!("invalid rational numerator '{num}'")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Input(format!("invalid rational denominator '{den}'")))?;
    if d.is_zero() {
        return Err(Error::Input(format!("zero denominator in '{t}'")));
    }
    Ok(BigRational::new(n, d))
}

fn matrix_from_rows(rows: &[Vec<i64>], what: &str) -> Result<IntMatrix> {
    if rows.is_empty() {
        return Err(Error::Input(format!("{what} must have at least one row")));
    }
    IntMatrix::from_rows_i64(rows).map_err(|e| Error::Input(format!("{what}: {e}")))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument =
            toml::from_str(text).map_err(|e| Error::Input(format!("TOML parse error: {e}")))?;
        let fan = raw.fan_matrix.as_deref().map(|r| matrix_from_rows(r, "fan_matrix")).transpose()?;
        let weight = raw
            .weight_matrix
            .as_deref()
            .map(|r| matrix_from_rows(r, "weight_matrix"))
            .transpose()?;
        let (v, q) = match (fan, weight) {
            (None, None) => {
                return Err(Error::Input(
                    "document needs a fan_matrix, a weight_matrix, or both".into(),
                ));
            }
            (Some(v), None) => {
                let q = gale_dual(&v).map_err(|e| {
                    Error::Input(format!("cannot derive weight_matrix from fan_matrix: {e}"))
                })?;
                (v, q)
            }
            (None, Some(q)) => {
                let v = gale_dual(&q).map_err(|e| {
                    Error::Input(format!("cannot derive fan_matrix from weight_matrix: {e}"))
                })?;
                (v, q)
            }
            (Some(v), Some(q)) => {
                if v.cols() != q.cols() {
                    return Err(Error::Input(format!(
                        "fan_matrix has {} columns but weight_matrix has {}",
                        v.cols(),
                        q.cols()
                    )));
                }
                let product = q.mul(&v.transpose()).map_err(|e| Error::Input(e.to_string()))?;
                if !product.is_zero() {
                    return Err(Error::Input(
                        "fan_matrix and weight_matrix are not Gale dual: Q * V^T != 0".into(),
                    ));
                }
                let derived = gale_dual(&v).map_err(|e| Error::Input(e.to_string()))?;
                if !row_lattices_equal(&derived, &q) {
                    return Err(Error::Input(
                        "weight_matrix does not span the saturated kernel of fan_matrix".into(),
                    ));
                }
                (v, q)
            }
        };
        let m = q.cols();
        let torsion = raw
            .torsion
            .map(|t| {
                let moduli: Vec<BigInt> = t.moduli.iter().map(|&x| BigInt::from(x)).collect();
                let matrix = matrix_from_rows(&t.matrix, "torsion.matrix")?;
                if matrix.cols() != m {
                    return Err(Error::Input(
                        "torsion.matrix must have one column per variable".into(),
                    ));
                }
                TorsionGrading::new(moduli, matrix)
            })
            .transpose()?;
        let relations = raw
            .relations
            .unwrap_or_default()
            .iter()
            .enumerate()
            .map(|(ri, rel)| {
                let terms = rel
                    .terms
                    .iter()
                    .map(|t| {
                        let coeff = parse_rational(&t.coeff)?;
                        if t.exponents.len() != m {
                            return Err(Error::Input(format!(
                                "relation {} has an exponent vector of length {}, expected {}",
                                ri + 1,
                                t.exponents.len(),
                                m
                            )));
                        }
                        let exponents = t
                            .exponents
                            .iter()
                            .map(|&e| {
                                u32::try_from(e).map_err(|_| {
                                    Error::Input(format!(
                                        "relation {} has a negative exponent",
                                        ri + 1
                                    ))
                                })
                            })
                            .collect::<Result<Vec<u32>>>()?;
                        Ok(Term { coeff, exponents })
                    })
                    .collect::<Result<Vec<Term>>>()?;
                SparsePolynomial::new(terms)
            })
            .collect::<Result<Vec<SparsePolynomial>>>()?;
        let irrelevant = raw
            .irrelevant_ideal
            .as_deref()
            .map(|gens| {
                check_one_based(gens, m, "irrelevant_ideal")?;
                MonomialIdeal::from_one_based(m, gens)
            })
            .transpose()?;
        let name = raw.name.unwrap_or_else(|| "unnamed".into());
        let presentation = GradedPresentation::new(
            name.clone(),
            q.clone(),
            torsion,
            relations,
            irrelevant,
        )?;
        let explicit_fan = raw
            .max_cones
            .as_deref()
            .map(|sets| {
                check_one_based(sets, m, "max_cones")?;
                Fan::from_one_based(v.clone(), sets)
            })
            .transpose()?;
        Ok(InputDocument { name, fan_matrix: v, weight_matrix: q, presentation, explicit_fan })
    }

    /// The ambient fan: explicitly given maximal cones win, otherwise the
    /// fan cut out by the irrelevant ideal.
    pub fn ambient_fan(&self) -> Result<Fan> {
        if let Some(f) = &self.explicit_fan {
            return Ok(f.clone());
        }
        if let Some(ideal) = &self.presentation.irrelevant {
            return crate::fanbunch::fan_from_ideal(ideal, &self.fan_matrix);
        }
        Err(Error::Input(
            "document carries neither max_cones nor an irrelevant_ideal; no ambient fan".into(),
        ))
    }

    pub fn has_ambient_fan(&self) -> bool {
        self.explicit_fan.is_some() || self.presentation.irrelevant.is_some()
    }
}

fn check_one_based(sets: &[Vec<usize>], m: usize, what: &str) -> Result<()> {
    for set in sets {
        for &i in set {
            if i == 0 || i > m {
                return Err(Error::Input(format!(
                    "{what}: index {i} out of range 1..={m}"
                )));
            }
        }
    }
    Ok(())
}
