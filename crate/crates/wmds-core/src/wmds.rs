//! Graded Cox presentations and the birational layer built on them:
//! degree computation with torsion, homogeneity checking, recovery of the
//! canonical ambient fan from the irrelevant ideal, the big-and-movable
//! anticanonical test, chamber-walk classification of divisor classes and
//! the enumeration of small modification targets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cone::Cone;
use crate::fanbunch::{self, Fan, MonomialIdeal};
use crate::gkz::{self, GkzCone, GkzContext};
use crate::lattice::{gale_dual, IntMatrix, RatVector};
use crate::{Error, Result};

/// Torsion part of a grading: moduli with a residue matrix whose k-th row is
/// taken modulo the k-th modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGrading {
    pub moduli: Vec<BigInt>,
    pub residues: IntMatrix,
}

impl TorsionGrading {
    pub fn new(moduli: Vec<BigInt>, residues: IntMatrix) -> Result<Self> {
        if moduli.len() != residues.rows() {
            return Err(Error::DimensionMismatch(
                "one residue row per torsion modulus".into(),
            ));
        }
        if moduli.iter().any(|t| t <= &BigInt::from(1)) {
            return Err(Error::Input("torsion moduli must be at least 2".into()));
        }
        let mut reduced = residues.clone();
        for k in 0..reduced.rows() {
            for c in 0..reduced.cols() {
                let v = reduced.at(k, c).mod_floor(&moduli[k]);
                reduced.set(k, c, v);
            }
        }
        Ok(TorsionGrading { moduli, residues: reduced })
    }
}

/// One term of a sparse polynomial: rational coefficient and exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    pub terms: Vec<Term>,
}

impl SparsePolynomial {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() || terms.iter().all(|t| t.coeff.is_zero()) {
            return Err(Error::Input("zero polynomial among relations".into()));
        }
        Ok(SparsePolynomial { terms })
    }
}

/// The combinatorial shadow of a Cox ring presentation: variable count, free
/// and torsion grading, relations and (optionally) the irrelevant ideal.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub name: String,
    pub num_vars: usize,
    pub weights: IntMatrix,
    pub torsion: Option<TorsionGrading>,
    pub relations: Vec<SparsePolynomial>,
    pub irrelevant: Option<MonomialIdeal>,
}

impl GradedPresentation {
    pub fn new(
        name: String,
        weights: IntMatrix,
        torsion: Option<TorsionGrading>,
        relations: Vec<SparsePolynomial>,
        irrelevant: Option<MonomialIdeal>,
    ) -> Result<Self> {
        let m = weights.cols();
        if let Some(t) = &torsion {
            if t.residues.cols() != m {
                return Err(Error::DimensionMismatch(
                    "torsion matrix must have one column per variable".into(),
                ));
            }
        }
        for rel in &relations {
            for term in &rel.terms {
                if term.exponents.len() != m {
                    return Err(Error::DimensionMismatch(
                        "exponent vectors must have one entry per variable".into(),
                    ));
                }
            }
        }
        if let Some(ideal) = &irrelevant {
            if ideal.num_vars() != m {
                return Err(Error::DimensionMismatch(
                    "irrelevant ideal must use the same variable count".into(),
                ));
            }
        }
        Ok(GradedPresentation { name, num_vars: m, weights, torsion, relations, irrelevant })
    }

    pub fn rank(&self) -> usize {
        self.weights.rows()
    }
}

/// A divisor class: free part plus reduced torsion residues (empty without
/// torsion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl DivisorClass {
    pub fn free_only(free: Vec<BigInt>) -> Self {
        DivisorClass { free, torsion: Vec::new() }
    }

    pub fn free_vector(&self) -> RatVector {
        RatVector::from_int(&self.free)
    }
}

/// Degree of the monomial with the given exponent vector: `Q e` on the free
/// part, torsion rows reduced modulo their moduli.
pub fn degree_of_monomial(p: &GradedPresentation, exponents: &[u32]) -> Result<DivisorClass> {
    if exponents.len() != p.num_vars {
        return Err(Error::DimensionMismatch(format!(
            "exponent vector length {} vs {} variables",
            exponents.len(),
            p.num_vars
        )));
    }
    let e: Vec<BigInt> = exponents.iter().map(|&x| BigInt::from(x)).collect();
    let free = p.weights.mul_vec(&e)?;
    let torsion = match &p.torsion {
        None => Vec::new(),
        Some(t) => {
            let raw = t.residues.mul_vec(&e)?;
            raw.iter().zip(&t.moduli).map(|(v, tau)| v.mod_floor(tau)).collect()
        }
    };
    Ok(DivisorClass { free, torsion })
}

/// Report of the homogeneity check: per-relation common degree, or the first
/// conflicting pair of terms.
#[derive(Clone, Debug)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    pub degrees: Vec<Option<DivisorClass>>,
    /// (relation index, term index a, term index b) of the first conflict.
    pub first_conflict: Option<(usize, usize, usize)>,
}

/// Every monomial of every relation must share one divisor class, free and
/// torsion alike.
pub fn check_homogeneous(p: &GradedPresentation) -> Result<HomogeneityReport> {
    let mut degrees = Vec::with_capacity(p.relations.len());
    let mut first_conflict = None;
    for (ri, rel) in p.relations.iter().enumerate() {
        let mut common: Option<(usize, DivisorClass)> = None;
        let mut rel_degree = None;
        for (ti, term) in rel.terms.iter().enumerate() {
            if term.coeff.is_zero() {
                continue;
            }
            let d = degree_of_monomial(p, &term.exponents)?;
            match &common {
                None => {
                    common = Some((ti, d));
                }
                Some((t0, d0)) => {
                    if *d0 != d {
                        if first_conflict.is_none() {
                            first_conflict = Some((ri, *t0, ti));
                        }
                        rel_degree = None;
                        break;
                    }
                }
            }
            rel_degree = common.as_ref().map(|(_, d)| d.clone());
        }
        degrees.push(rel_degree);
    }
    let homogeneous = first_conflict.is_none();
    Ok(HomogeneityReport { homogeneous, degrees, first_conflict })
}

/// Recovers the canonical ambient data from a presentation: the fan matrix
/// as the Gale dual of the grading and the ambient fan cut out by the
/// irrelevant ideal.
pub fn canonical_ambient(p: &GradedPresentation) -> Result<(IntMatrix, Fan)> {
    let Some(irrelevant) = &p.irrelevant else {
        return Err(Error::Input(
            "presentation carries no irrelevant ideal; cannot recover the ambient fan".into(),
        ));
    };
    let r = p.weights.rows();
    if p.weights.rank() != r {
        return Err(Error::RankDeficient("grading matrix must have full row rank".into()));
    }
    if r >= p.num_vars {
        return Err(Error::RankDeficient(
            "grading rank must be smaller than the variable count".into(),
        ));
    }
    let v = gale_dual(&p.weights)?;
    let fan = fanbunch::fan_from_ideal(irrelevant, &v)?;
    Ok((v, fan))
}

/// Anticanonical class: the sum of all generator degrees.
pub fn anticanonical_class(p: &GradedPresentation) -> DivisorClass {
    let exponents = vec![1u32; p.num_vars];
    degree_of_monomial(p, &exponents).expect("all-ones exponent vector fits")
}

/// Bigness: the free part lies in the relative interior of the
/// pseudo-effective cone.
pub fn is_big(q: &IntMatrix, class: &DivisorClass) -> Result<bool> {
    fanbunch::eff_cone(q).relint_contains(&class.free_vector())
}

/// Movability: the free part lies in the moving cone.
pub fn is_movable(q: &IntMatrix, class: &DivisorClass) -> Result<bool> {
    fanbunch::mov_cone(q)?.contains(&class.free_vector())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MmpStatus {
    NotEffective,
    AlreadyNef,
    MinimalModel,
    FiberTypeBoundary,
}

impl MmpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MmpStatus::NotEffective => "not_effective",
            MmpStatus::AlreadyNef => "already_nef",
            MmpStatus::MinimalModel => "minimal_model",
            MmpStatus::FiberTypeBoundary => "fiber_type_boundary",
        }
    }
}

/// Endpoint classification of the divisorial minimal model program for one
/// class.
#[derive(Clone, Debug)]
pub struct MmpReport {
    pub input_class: DivisorClass,
    pub status: MmpStatus,
    pub target_chamber: Option<GkzCone>,
    pub target_fan: Option<Fan>,
    /// False when the target chamber lies outside the moving cone and its
    /// induced collection is only a quasi-fan.
    pub target_is_fan: bool,
    pub is_sqm: bool,
    pub semiample: bool,
    /// Every full-dimensional GKZ cell containing the class; more than one
    /// exactly when the class sits on a wall.
    pub incident_chambers: Vec<GkzCone>,
}

/// Runs the chamber-walk classification for a divisor class on the
/// presentation's ambient data.
///
/// Statuses: outside Eff the program ends in a fiber-type outcome over a
/// non-effective class; on Nef the class is already a minimal model; in the
/// interior of Eff the selected chamber gives the minimal model, small
/// exactly when the chamber sits inside Mov; on the boundary of Eff away
/// from Nef the minimal model carries a fiber-type structure.
pub fn mmp_trace(p: &GradedPresentation, class: &DivisorClass) -> Result<MmpReport> {
    let (_v, w_fan) = canonical_ambient(p)?;
    mmp_trace_with_ambient(p, &w_fan, class)
}

pub fn mmp_trace_with_ambient(
    p: &GradedPresentation,
    w_fan: &Fan,
    class: &DivisorClass,
) -> Result<MmpReport> {
    let q = &p.weights;
    let ctx = GkzContext::new(q)?;
    let free = class.free_vector();
    if free.dim() != q.rows() {
        return Err(Error::DimensionMismatch(format!(
            "class has {} free coordinates, expected {}",
            free.dim(),
            q.rows()
        )));
    }
    if !ctx.eff().contains(&free)? {
        return Ok(MmpReport {
            input_class: class.clone(),
            status: MmpStatus::NotEffective,
            target_chamber: None,
            target_fan: None,
            target_is_fan: false,
            is_sqm: false,
            semiample: false,
            incident_chambers: Vec::new(),
        });
    }
    let dec = ctx.decomposition(false)?;
    let incident: Vec<GkzCone> = dec
        .full_dim_cells()
        .into_iter()
        .filter(|c| c.cone.contains(&free).unwrap_or(false))
        .cloned()
        .collect();
    // Already nef: the chamber walk terminates immediately. This happens for
    // classes of the nef cone sitting on the wall complex (no preferred
    // chamber) and for classes whose own chamber already induces the ambient
    // fan.
    let nef = fanbunch::nef_cone(w_fan, q)?;
    if nef.contains(&free)? {
        let own_cell = gkz::gkz_cone_at(&ctx, &free)?;
        let walk_is_trivial = if own_cell.cone.dim() < ctx.rank() {
            true
        } else {
            let (fan, _) = gkz::sigma_gamma(&ctx, &own_cell, w_fan.ray_matrix())?;
            fan == *w_fan
        };
        if walk_is_trivial {
            return Ok(MmpReport {
                input_class: class.clone(),
                status: MmpStatus::AlreadyNef,
                target_chamber: None,
                target_fan: None,
                target_is_fan: false,
                is_sqm: false,
                semiample: true,
                incident_chambers: incident,
            });
        }
    }
    // Cells are pre-sorted by canonical ray lists; the first incident one is
    // the pinned deterministic choice.
    let Some(target) = incident.first().cloned() else {
        return Err(Error::Internal(
            "effective class not covered by any full-dimensional GKZ cell".into(),
        ));
    };
    let (fan, validation) = gkz::sigma_gamma(&ctx, &target, w_fan.ray_matrix())?;
    let is_sqm = target.cone.is_subset_of(ctx.mov());
    let status = if ctx.eff().relint_contains(&free)? {
        MmpStatus::MinimalModel
    } else {
        MmpStatus::FiberTypeBoundary
    };
    Ok(MmpReport {
        input_class: class.clone(),
        status,
        target_chamber: Some(target),
        target_fan: Some(fan),
        target_is_fan: validation.valid,
        is_sqm: is_sqm && status == MmpStatus::MinimalModel,
        semiample: true,
        incident_chambers: incident,
    })
}

/// All small modification targets: one chamber of the moving cone per entry,
/// with its induced fan. Verifies that the chambers tile the moving cone.
pub fn sqm_targets(p: &GradedPresentation) -> Result<Vec<(GkzCone, Fan)>> {
    let (v, _w_fan) = canonical_ambient(p)?;
    sqm_targets_for(&p.weights, &v)
}

pub fn sqm_targets_for(q: &IntMatrix, v: &IntMatrix) -> Result<Vec<(GkzCone, Fan)>> {
    let ctx = GkzContext::new(q)?;
    let chambers = gkz::chambers(&ctx)?;
    verify_chambers_tile_mov(&ctx, &chambers)?;
    let mut out = Vec::new();
    for ch in chambers {
        let (fan, validation) = gkz::sigma_gamma(&ctx, &ch, v)?;
        if !validation.valid {
            return Err(Error::Internal(format!(
                "chamber fan failed validation: {}",
                validation.issues.join("; ")
            )));
        }
        out.push((ch, fan));
    }
    Ok(out)
}

/// Ridge-count verification that the chambers cover the moving cone: every
/// facet of a chamber interior to Mov bounds exactly two chambers, facets on
/// the boundary of Mov exactly one.
fn verify_chambers_tile_mov(ctx: &GkzContext, chambers: &[GkzCone]) -> Result<()> {
    use std::collections::BTreeMap;
    let r = ctx.rank();
    let mov = ctx.mov();
    let mut counts: BTreeMap<Cone, usize> = BTreeMap::new();
    for ch in chambers {
        for facet in ch.cone.faces(r - 1) {
            *counts.entry(facet).or_insert(0) += 1;
        }
    }
    for (facet, count) in counts {
        let interior = mov.relint_contains(&facet.relint_point())?;
        let expected = if interior { 2 } else { 1 };
        if count != expected {
            return Err(Error::Internal(format!(
                "chamber complex does not tile the moving cone: a wall has {count} cofacets, expected {expected}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanbunch::examples::*;
    use num_traits::One;

    fn term(c: i64, e: &[u32]) -> Term {
        Term { coeff: BigRational::from(BigInt::from(c)), exponents: e.to_vec() }
    }

    pub(crate) fn quadric_presentation() -> GradedPresentation {
        GradedPresentation::new(
            "quadric".into(),
            quadric_q(),
            None,
            vec![SparsePolynomial::new(vec![
                term(1, &[1, 0, 0, 1, 0]),
                term(1, &[0, 1, 0, 0, 1]),
                term(1, &[0, 0, 2, 0, 0]),
            ])
            .unwrap()],
            Some(
                MonomialIdeal::from_one_based(
                    5,
                    &[vec![1, 5], vec![2, 4], vec![1, 3, 4], vec![2, 3, 5]],
                )
                .unwrap(),
            ),
        )
        .unwrap()
    }

    pub(crate) fn noncompletable_presentation() -> GradedPresentation {
        GradedPresentation::new(
            "noncompletable".into(),
            noncompletable_q(),
            None,
            vec![SparsePolynomial::new(vec![
                term(1, &[1, 0, 1, 0, 0, 0, 1]),
                term(1, &[1, 0, 0, 0, 1, 0, 0]),
                term(1, &[0, 1, 0, 0, 0, 0, 1]),
                term(1, &[0, 0, 1, 0, 0, 1, 0]),
                term(1, &[0, 0, 0, 1, 0, 0, 0]),
            ])
            .unwrap()],
            Some(
                MonomialIdeal::from_one_based(
                    7,
                    &[
                        vec![2, 5, 6],
                        vec![1, 2, 3, 7],
                        vec![1, 2, 5, 7],
                        vec![1, 3, 4, 6],
                        vec![1, 3, 4, 7],
                        vec![1, 3, 5, 6],
                        vec![1, 3, 5, 7],
                        vec![1, 3, 6, 7],
                        vec![1, 4, 5, 6],
                        vec![1, 4, 5, 7],
                        vec![2, 3, 4, 6],
                        vec![2, 3, 4, 7],
                        vec![2, 3, 6, 7],
                        vec![2, 4, 5, 7],
                    ],
                )
                .unwrap(),
            ),
        )
        .unwrap()
    }

    pub(crate) fn berchtold_hausen_presentation() -> GradedPresentation {
        GradedPresentation::new(
            "berchtold-hausen".into(),
            berchtold_hausen_q(),
            None,
            Vec::new(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn degrees_of_monomials() {
        let p = quadric_presentation();
        let d = degree_of_monomial(&p, &[0, 0, 2, 0, 0]).unwrap();
        assert_eq!(d.free, vec![BigInt::from(2), BigInt::from(2)]);
        let zero = degree_of_monomial(&p, &[0, 0, 0, 0, 0]).unwrap();
        assert!(zero.free.iter().all(|e| e.is_zero()));
        let nc = noncompletable_presentation();
        let d15 = degree_of_monomial(&nc, &[1, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(d15.free, vec![BigInt::one(), BigInt::one(), BigInt::one()]);
        assert!(degree_of_monomial(&p, &[1, 0]).is_err());
    }

    #[test]
    fn degree_is_additive() {
        let p = noncompletable_presentation();
        let e1 = [1u32, 0, 2, 0, 1, 0, 0];
        let e2 = [0u32, 3, 0, 1, 0, 0, 2];
        let sum: Vec<u32> = e1.iter().zip(&e2).map(|(a, b)| a + b).collect();
        let d1 = degree_of_monomial(&p, &e1).unwrap();
        let d2 = degree_of_monomial(&p, &e2).unwrap();
        let ds = degree_of_monomial(&p, &sum).unwrap();
        let added: Vec<BigInt> = d1.free.iter().zip(&d2.free).map(|(a, b)| a + b).collect();
        assert_eq!(ds.free, added);
    }

    #[test]
    fn homogeneity_of_paper_relations() {
        let p = quadric_presentation();
        let rep = check_homogeneous(&p).unwrap();
        assert!(rep.homogeneous);
        assert_eq!(
            rep.degrees[0].as_ref().unwrap().free,
            vec![BigInt::from(2), BigInt::from(2)]
        );
        let nc = noncompletable_presentation();
        let rep = check_homogeneous(&nc).unwrap();
        assert!(rep.homogeneous);
        assert_eq!(
            rep.degrees[0].as_ref().unwrap().free,
            vec![BigInt::one(), BigInt::one(), BigInt::one()]
        );
    }

    #[test]
    fn inhomogeneous_relation_reports_conflict() {
        let q = IntMatrix::from_rows_i64(&[vec![1, 1]]).unwrap();
        let p = GradedPresentation::new(
            "bad".into(),
            q,
            None,
            vec![SparsePolynomial::new(vec![term(1, &[1, 0]), term(1, &[0, 2])]).unwrap()],
            None,
        )
        .unwrap();
        let rep = check_homogeneous(&p).unwrap();
        assert!(!rep.homogeneous);
        assert_eq!(rep.first_conflict, Some((0, 0, 1)));
        assert!(rep.degrees[0].is_none());
    }

    #[test]
    fn homogeneity_ignores_coefficient_scaling() {
        let p = quadric_presentation();
        let mut scaled = p.clone();
        for rel in &mut scaled.relations {
            for t in &mut rel.terms {
                t.coeff = &t.coeff * BigRational::new(BigInt::from(7), BigInt::from(3));
            }
        }
        assert!(check_homogeneous(&scaled).unwrap().homogeneous);
    }

    #[test]
    fn torsion_degrees() {
        let q = IntMatrix::from_rows_i64(&[vec![1, 1, 1]]).unwrap();
        let torsion = TorsionGrading::new(
            vec![BigInt::from(2)],
            IntMatrix::from_rows_i64(&[vec![1, 0, 1]]).unwrap(),
        )
        .unwrap();
        let homog = GradedPresentation::new(
            "torsion".into(),
            q.clone(),
            Some(torsion.clone()),
            vec![SparsePolynomial::new(vec![term(1, &[1, 0, 1]), term(1, &[0, 2, 0])]).unwrap()],
            None,
        )
        .unwrap();
        let rep = check_homogeneous(&homog).unwrap();
        assert!(rep.homogeneous);
        assert_eq!(rep.degrees[0].as_ref().unwrap().torsion, vec![BigInt::zero()]);
        // x1 x2 (torsion 1) against x3^2 (torsion 0) conflicts despite equal
        // free degrees.
        let inhomog = GradedPresentation::new(
            "torsion-bad".into(),
            q,
            Some(torsion),
            vec![SparsePolynomial::new(vec![term(1, &[1, 1, 0]), term(1, &[0, 0, 2])]).unwrap()],
            None,
        )
        .unwrap();
        assert!(!check_homogeneous(&inhomog).unwrap().homogeneous);
    }

    #[test]
    fn canonical_ambient_of_quadric() {
        let p = quadric_presentation();
        let (v, fan) = canonical_ambient(&p).unwrap();
        assert!(p.weights.mul(&v.transpose()).unwrap().is_zero());
        assert_eq!(
            fan.max_cone_sets_one_based(),
            vec![vec![1, 4], vec![2, 3, 4], vec![2, 5], vec![1, 3, 5]]
                .into_iter()
                .map(|mut s: Vec<usize>| {
                    s.sort();
                    s
                })
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn canonical_ambient_of_noncompletable() {
        let p = noncompletable_presentation();
        let (_v, fan) = canonical_ambient(&p).unwrap();
        assert_eq!(fan.max_cone_sets().len(), 14);
        // Round trip through the irrelevant ideal.
        assert_eq!(
            fanbunch::irrelevant_ideal(&fan),
            p.irrelevant.clone().unwrap()
        );
    }

    #[test]
    fn canonical_ambient_of_a_toric_presentation_is_the_fan_itself() {
        // No relations: the presentation is the Cox ring of the toric
        // variety, and the ambient fan equals the fan behind the ideal.
        let q = berchtold_hausen_q();
        let v = gale_dual(&q).unwrap();
        let census = crate::sfenum::enumerate_sf_with_weights(&v, &q).unwrap();
        let fan = census.projective_entries()[0].fan.clone();
        let p = GradedPresentation::new(
            "toric".into(),
            q,
            None,
            Vec::new(),
            Some(fanbunch::irrelevant_ideal(&fan)),
        )
        .unwrap();
        let (v2, ambient) = canonical_ambient(&p).unwrap();
        assert_eq!(v2, v);
        assert_eq!(ambient, fan);
    }

    #[test]
    fn anticanonical_classes() {
        let bh = berchtold_hausen_presentation();
        let ac = anticanonical_class(&bh);
        assert_eq!(ac.free, vec![BigInt::from(3), BigInt::from(3), BigInt::from(3)]);
        assert!(is_big(&bh.weights, &ac).unwrap());
        assert!(is_movable(&bh.weights, &ac).unwrap());
        let nc = noncompletable_presentation();
        let ac = anticanonical_class(&nc);
        assert_eq!(ac.free, vec![BigInt::from(4), BigInt::from(4), BigInt::from(4)]);
        assert!(is_big(&nc.weights, &ac).unwrap());
        assert!(is_movable(&nc.weights, &ac).unwrap());
        // The zero class is not big.
        let zero = DivisorClass::free_only(vec![BigInt::zero(); 3]);
        assert!(!is_big(&nc.weights, &zero).unwrap());
    }

    #[test]
    fn mmp_statuses_on_the_quadric() {
        let p = quadric_presentation();
        // Interior of the first chamber.
        let c1 = DivisorClass::free_only(vec![BigInt::from(3), BigInt::from(2)]);
        let rep = mmp_trace(&p, &c1).unwrap();
        assert_eq!(rep.status, MmpStatus::MinimalModel);
        assert!(rep.is_sqm);
        assert!(rep.semiample);
        assert_eq!(rep.incident_chambers.len(), 1);
        let fan = rep.target_fan.unwrap();
        assert_eq!(fan, quadric_sigma1());
        // Interior of the second chamber.
        let c2 = DivisorClass::free_only(vec![BigInt::from(2), BigInt::from(3)]);
        let rep = mmp_trace(&p, &c2).unwrap();
        assert_eq!(rep.status, MmpStatus::MinimalModel);
        assert!(rep.is_sqm);
        assert_eq!(rep.target_fan.unwrap(), quadric_sigma2());
        // On the nef cone of the ambient fan.
        let nef = DivisorClass::free_only(vec![BigInt::from(1), BigInt::from(2)]);
        let rep = mmp_trace(&p, &nef).unwrap();
        assert_eq!(rep.status, MmpStatus::AlreadyNef);
        assert!(rep.target_chamber.is_none());
        assert!(!rep.is_sqm);
        // Outside the effective cone.
        let out = DivisorClass::free_only(vec![BigInt::from(-1), BigInt::from(1)]);
        let rep = mmp_trace(&p, &out).unwrap();
        assert_eq!(rep.status, MmpStatus::NotEffective);
        assert!(!rep.semiample);
    }

    #[test]
    fn mmp_outside_mov_is_divisorial() {
        let p = quadric_presentation();
        // q1 = (1, 0) lies in Eff but outside Mov: the chamber-walk target
        // lives outside Mov and is not small.
        let c = DivisorClass::free_only(vec![BigInt::from(4), BigInt::from(1)]);
        let rep = mmp_trace(&p, &c).unwrap();
        assert_eq!(rep.status, MmpStatus::MinimalModel);
        assert!(!rep.is_sqm);
        assert!(!rep.target_is_fan, "Eff-side chamber gives a quasi-fan");
    }

    #[test]
    fn mmp_boundary_class_is_fiber_type() {
        let p = quadric_presentation();
        // q1 itself spans a boundary ray of Eff, away from Nef.
        let c = DivisorClass::free_only(vec![BigInt::from(1), BigInt::from(0)]);
        let rep = mmp_trace(&p, &c).unwrap();
        assert_eq!(rep.status, MmpStatus::FiberTypeBoundary);
        assert!(!rep.is_sqm);
        assert!(rep.semiample);
    }

    #[test]
    fn mmp_wall_class_inside_nef_stays_put() {
        let p = quadric_presentation();
        // q3 = (1,1) spans the wall between the two chambers and lies in the
        // nef cone of the ambient fan: no walk happens, but both incident
        // chambers are reported.
        let c = DivisorClass::free_only(vec![BigInt::from(1), BigInt::from(1)]);
        let rep = mmp_trace(&p, &c).unwrap();
        assert_eq!(rep.status, MmpStatus::AlreadyNef);
        assert_eq!(rep.incident_chambers.len(), 2);
        assert!(!rep.is_sqm);
    }

    #[test]
    fn mmp_wall_class_outside_nef_walks_to_a_chamber() {
        // In the non-completable example the nef cone is the anticanonical
        // ray, so interior walls of Mov away from that ray force a walk with
        // several incident chambers.
        let p = noncompletable_presentation();
        let q = p.weights.clone();
        let ctx = GkzContext::new(&q).unwrap();
        let dec = gkz::gkz_decomposition(&ctx, true).unwrap();
        let ray = Cone::from_rays_i64(3, &[vec![1, 1, 1]]).unwrap();
        let wall = dec
            .cells()
            .iter()
            .find(|c| c.cone.dim() == 2 && !c.cone.is_subset_of(&ray))
            .expect("a 2-dimensional moving-cone wall exists");
        let class = DivisorClass::free_only(wall.witness.to_primitive_int());
        let rep = mmp_trace(&p, &class).unwrap();
        assert_ne!(rep.status, MmpStatus::AlreadyNef);
        assert_ne!(rep.status, MmpStatus::NotEffective);
        assert!(rep.incident_chambers.len() >= 2);
        assert!(rep.target_chamber.is_some());
    }

    #[test]
    fn mmp_on_a_complete_ambient_fan_is_trivial_inside_its_nef_chamber() {
        // When the ambient fan is itself a chamber fan, classes interior to
        // that chamber walk nowhere.
        let q = berchtold_hausen_q();
        let v = gale_dual(&q).unwrap();
        let census = crate::sfenum::enumerate_sf_with_weights(&v, &q).unwrap();
        let entry = census.projective_entries()[0].clone();
        let p = GradedPresentation::new(
            "toric".into(),
            q,
            None,
            Vec::new(),
            Some(fanbunch::irrelevant_ideal(&entry.fan)),
        )
        .unwrap();
        let class = DivisorClass::free_only(entry.nef_cell.witness.to_primitive_int());
        let rep = mmp_trace(&p, &class).unwrap();
        assert_eq!(rep.status, MmpStatus::AlreadyNef);
        // A class in a different chamber still walks.
        let other = census.projective_entries()[1].clone();
        let class = DivisorClass::free_only(other.nef_cell.witness.to_primitive_int());
        let rep = mmp_trace(&p, &class).unwrap();
        assert_eq!(rep.status, MmpStatus::MinimalModel);
        assert_eq!(rep.target_fan.unwrap(), other.fan);
        assert!(rep.is_sqm);
    }

    #[test]
    fn sqm_target_counts() {
        assert_eq!(sqm_targets(&quadric_presentation()).unwrap().len(), 2);
        assert_eq!(sqm_targets(&noncompletable_presentation()).unwrap().len(), 6);
        let bh_v = berchtold_hausen_v();
        let bh_q = berchtold_hausen_q();
        assert_eq!(sqm_targets_for(&bh_q, &bh_v).unwrap().len(), 6);
    }

    #[test]
    fn sqm_targets_are_relint_disjoint_and_cover_mov() {
        let targets = sqm_targets(&noncompletable_presentation()).unwrap();
        for (i, (a, _)) in targets.iter().enumerate() {
            for (b, _) in targets.iter().skip(i + 1) {
                assert!(!a.cone.relint_contains(&b.witness).unwrap());
                assert!(!b.cone.relint_contains(&a.witness).unwrap());
            }
        }
    }
}
