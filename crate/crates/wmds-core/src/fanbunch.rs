//! Fans over a fixed ray matrix, bunches of cones on the Gale-dual side,
//! F/W-matrix classification, the pseudo-effective / movable / nef cones and
//! squarefree irrelevant ideals.
//!
//! Index-set conventions: a fan is the ray matrix `V` plus the index sets of
//! its maximal cones; the bunch of a fan keeps the same index sets, each
//! member `I` standing for the cone spanned by the *complementary* columns
//! of the weight matrix. All index sets are 0-based internally and 1-based
//! in I/O.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

use crate::cone::Cone;
use crate::lattice::{
    self, columns_are_reduced, gale_dual, kernel_saturated, primitive_vector, row_lattice_contains,
    snf, IntMatrix, RatVector,
};
use crate::{Error, Result};

/// A fan presented by its ray matrix and the index sets of its maximal
/// cones. Construction normalizes ordering; validity is a separate check.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fan {
    v: IntMatrix,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(v: IntMatrix, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        let m = v.cols();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for set in max_cones {
            let s: BTreeSet<usize> = set.into_iter().collect();
            if s.is_empty() {
                return Err(Error::InvalidFan("empty maximal cone index set".into()));
            }
            if s.iter().any(|&i| i >= m) {
                return Err(Error::InvalidFan(format!("cone index out of range 1..={m}")));
            }
            sets.insert(s.into_iter().collect());
        }
        if sets.is_empty() {
            return Err(Error::InvalidFan("a fan needs at least one maximal cone".into()));
        }
        Ok(Fan { v, max_cones: sets.into_iter().collect() })
    }

    pub fn from_one_based(v: IntMatrix, max_cones: &[Vec<usize>]) -> Result<Self> {
        let shifted: Vec<Vec<usize>> = max_cones
            .iter()
            .map(|set| {
                set.iter()
                    .map(|&i| {
                        if i == 0 {
                            Err(Error::InvalidFan("index 0 in 1-based input".into()))
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Fan::new(v, shifted)
    }

    pub fn ray_matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn num_rays(&self) -> usize {
        self.v.cols()
    }

    pub fn max_cone_sets(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn max_cone_sets_one_based(&self) -> Vec<Vec<usize>> {
        self.max_cones
            .iter()
            .map(|s| s.iter().map(|&i| i + 1).collect())
            .collect()
    }

    /// The cone spanned by the selected ray columns.
    pub fn cone_of(&self, set: &[usize]) -> Cone {
        cone_of_columns(&self.v, set)
    }

    pub fn max_cone(&self, idx: usize) -> Cone {
        self.cone_of(&self.max_cones[idx])
    }

    /// Fan containment `self` inside `other`: every maximal cone of `self`
    /// appears as a cone (member or face) of `other`. For the validated
    /// simplicial fans handled here this is index-set containment.
    pub fn is_subfan_of(&self, other: &Fan) -> bool {
        if self.v != other.v {
            return false;
        }
        self.max_cones.iter().all(|i_set| {
            other
                .max_cones
                .iter()
                .any(|j_set| i_set.iter().all(|i| j_set.contains(i)))
        })
    }
}

pub fn cone_of_columns(v: &IntMatrix, set: &[usize]) -> Cone {
    let cols: Vec<Vec<BigInt>> = set.iter().map(|&i| v.col_vec(i)).collect();
    Cone::from_rays_int(v.rows(), &cols).expect("column dimensions agree")
}

/// The support cone of all ray generators.
pub fn span_cone(v: &IntMatrix) -> Cone {
    Cone::from_rays_int(v.rows(), &v.columns()).expect("column dimensions agree")
}

/// Outcome of `validate_fan`.
#[derive(Clone, Debug)]
pub struct FanValidation {
    pub valid: bool,
    pub simplicial: bool,
    pub issues: Vec<String>,
}

/// Checks the fan axioms: sane index sets, strongly convex cones, pairwise
/// face-to-face intersections, all rays used, and no ray swallowed by a cone
/// it does not span. Simpliciality is reported, not required.
pub fn validate_fan(fan: &Fan) -> FanValidation {
    let mut issues = Vec::new();
    let v = fan.ray_matrix();
    let m = v.cols();
    let sets = fan.max_cone_sets();
    for (a, sa) in sets.iter().enumerate() {
        for sb in sets.iter().skip(a + 1) {
            let a_in_b = sa.iter().all(|i| sb.contains(i));
            let b_in_a = sb.iter().all(|i| sa.contains(i));
            if a_in_b || b_in_a {
                issues.push(format!(
                    "cone {:?} is nested inside {:?}",
                    one_based(sa),
                    one_based(sb)
                ));
            }
        }
    }
    let cones: Vec<Cone> = sets.iter().map(|s| fan.cone_of(s)).collect();
    let mut simplicial = true;
    for (s, c) in sets.iter().zip(&cones) {
        if !c.is_strongly_convex() {
            issues.push(format!("cone {:?} contains a line", one_based(s)));
        }
        if c.dim() != s.len() {
            simplicial = false;
        }
        // Swallowed rays: a column inside the cone must be one of its rays.
        for j in 0..m {
            if s.contains(&j) {
                continue;
            }
            if c.contains_int(&v.col_vec(j)) {
                issues.push(format!(
                    "ray {} lies in cone {:?} without spanning it",
                    j + 1,
                    one_based(s)
                ));
            }
        }
    }
    for a in 0..cones.len() {
        for b in a + 1..cones.len() {
            match cones[a].intersect(&cones[b]) {
                Ok(meet) => {
                    if !Cone::is_face(&meet, &cones[a]) || !Cone::is_face(&meet, &cones[b]) {
                        issues.push(format!(
                            "cones {:?} and {:?} do not meet along a common face",
                            one_based(&sets[a]),
                            one_based(&sets[b])
                        ));
                    }
                }
                Err(e) => issues.push(format!("intersection failed: {e}")),
            }
        }
    }
    let used: BTreeSet<usize> = sets.iter().flatten().copied().collect();
    for j in 0..m {
        if !used.contains(&j) {
            issues.push(format!("ray {} does not appear in any maximal cone", j + 1));
        }
    }
    FanValidation { valid: issues.is_empty(), simplicial, issues }
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|&i| i + 1).collect()
}

/// Does the fan's support equal `target`? Implemented by the ridge-cofacet
/// criterion (every ridge interior to the span cone bounds exactly two
/// maximal cones, boundary ridges exactly one, and the cofacet graph is
/// connected), cross-checked by seeded rational sampling inside the span.
pub fn support_is(fan: &Fan, target: &Cone) -> Result<bool> {
    let validation = validate_fan(fan);
    if !validation.valid {
        return Err(Error::InvalidFan(validation.issues.join("; ")));
    }
    let span = span_cone(fan.ray_matrix());
    if *target != span {
        // The support always contains every ray and sits inside the span, so
        // it can only be a convex cone equal to the span itself.
        return Ok(false);
    }
    let covered = covers_span(fan, &span)?;
    if covered {
        // Sampling can only refute coverage; use it as an independent check.
        if !sample_points_covered(fan, &span) {
            return Err(Error::Internal(
                "ridge criterion claims completeness but a sample point is uncovered".into(),
            ));
        }
    }
    Ok(covered)
}

fn covers_span(fan: &Fan, span: &Cone) -> Result<bool> {
    let n_dim = span.dim();
    let sets = fan.max_cone_sets();
    let cones: Vec<Cone> = sets.iter().map(|s| fan.cone_of(s)).collect();
    if cones.iter().any(|c| c.dim() != n_dim) {
        return Ok(false);
    }
    if n_dim == 0 {
        return Ok(true);
    }
    // Ridge -> indices of the maximal cones having it as a face.
    let mut ridge_cofacets: BTreeMap<Vec<Vec<BigInt>>, Vec<usize>> = BTreeMap::new();
    let mut ridge_cone: BTreeMap<Vec<Vec<BigInt>>, Cone> = BTreeMap::new();
    for (idx, c) in cones.iter().enumerate() {
        for ridge in c.faces(n_dim - 1) {
            let key = ridge_key(&ridge);
            ridge_cofacets.entry(key.clone()).or_default().push(idx);
            ridge_cone.entry(key).or_insert(ridge);
        }
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); cones.len()];
    for (key, cofacets) in &ridge_cofacets {
        let ridge = &ridge_cone[key];
        let interior = span.relint_contains(&ridge.relint_point())?;
        match (interior, cofacets.len()) {
            (true, 2) => {
                adjacency[cofacets[0]].push(cofacets[1]);
                adjacency[cofacets[1]].push(cofacets[0]);
            }
            (false, 1) => {}
            _ => return Ok(false),
        }
    }
    let mut seen = vec![false; cones.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adjacency[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    Ok(seen.iter().all(|&s| s))
}

fn ridge_key(c: &Cone) -> Vec<Vec<BigInt>> {
    let mut key: Vec<Vec<BigInt>> = c.rays().to_vec();
    key.push(Vec::new());
    key.extend(c.lineality_basis());
    key.push(Vec::new());
    key.extend(c.span_equation_rows());
    key
}

/// Deterministic relative-interior samples of the span cone: positive random
/// combinations of its generators under a fixed seed.
fn sample_points_covered(fan: &Fan, span: &Cone) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x77_6d_64_73);
    let dim = span.ambient_dim();
    let cones: Vec<Cone> = fan.max_cone_sets().iter().map(|s| fan.cone_of(s)).collect();
    for _ in 0..24 {
        let mut point = vec![BigInt::zero(); dim];
        for ray in span.rays() {
            let c = BigInt::from(rng.gen_range(1i64..=97));
            for (p, e) in point.iter_mut().zip(ray) {
                *p += &c * e;
            }
        }
        for line in span.lineality_basis() {
            let c = BigInt::from(rng.gen_range(-97i64..=97));
            for (p, e) in point.iter_mut().zip(&line) {
                *p += &c * e;
            }
        }
        let w = RatVector::from_int(&point);
        if span.relint_contains(&w).unwrap_or(false) && !cones.iter().any(|c| c.contains_int(&point)) {
            return false;
        }
    }
    true
}

/// Classification outcome for F- and W-matrix tests.
#[derive(Clone, Debug)]
pub struct MatrixClassification {
    pub satisfied: bool,
    pub violations: Vec<String>,
    pub reduced: bool,
}

/// F-matrix test: full row rank, F-completeness (the columns positively span
/// the whole space), no zero column, no positively proportional columns.
pub fn is_f_matrix(v: &IntMatrix) -> MatrixClassification {
    let mut violations = Vec::new();
    let n = v.rows();
    if v.rank() != n {
        violations.push(format!("(a) rank {} < {} rows", v.rank(), n));
    }
    if !span_cone(v).is_full_space() {
        violations.push("(b) columns do not positively span the space".into());
    }
    let mut zero_cols = Vec::new();
    for c in 0..v.cols() {
        if v.col_vec(c).iter().all(|e| e.is_zero()) {
            zero_cols.push(c + 1);
        }
    }
    if !zero_cols.is_empty() {
        violations.push(format!("(c) zero columns at {:?}", zero_cols));
    }
    for i in 0..v.cols() {
        for j in i + 1..v.cols() {
            let ci = v.col_vec(i);
            let cj = v.col_vec(j);
            if ci.iter().all(|e| e.is_zero()) || cj.iter().all(|e| e.is_zero()) {
                continue;
            }
            if primitive_vector(&ci) == primitive_vector(&cj) {
                violations.push(format!(
                    "(d) columns {} and {} are positively proportional",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    MatrixClassification {
        satisfied: violations.is_empty(),
        violations,
        reduced: columns_are_reduced(v),
    }
}

/// W-matrix test per the six weight-side axioms. W-positivity is decided
/// through Gale duality: the dual configuration must be F-complete, which is
/// equivalent to the column cone of `Q` being strongly convex.
pub fn is_w_matrix(q: &IntMatrix) -> MatrixClassification {
    let mut violations = Vec::new();
    let r = q.rows();
    if q.rank() != r {
        violations.push(format!("(a) rank {} < {} rows", q.rank(), r));
    }
    let factors = snf(q).invariant_factors();
    if factors.iter().any(|f| !f.is_zero() && !f.is_one()) {
        violations.push(format!(
            "(b) row lattice has cotorsion, invariant factors {:?}",
            factors
        ));
    }
    let w_positive = match gale_dual(q) {
        Err(Error::TrivialGaleDual) => true,
        Err(_) => false,
        Ok(g) => span_cone(&g).is_full_space(),
    };
    if !w_positive {
        violations.push("(c) not W-positive: Gale dual is not F-complete".into());
    }
    let mut zero_cols = Vec::new();
    for c in 0..q.cols() {
        if q.col_vec(c).iter().all(|e| e.is_zero()) {
            zero_cols.push(c + 1);
        }
    }
    if !zero_cols.is_empty() {
        violations.push(format!("(d) zero columns at {:?}", zero_cols));
    }
    for i in 0..q.cols() {
        let mut e_i = vec![BigInt::zero(); q.cols()];
        e_i[i] = BigInt::one();
        if row_lattice_contains(q, &e_i) {
            violations.push(format!("(e) unit vector e_{} lies in the row lattice", i + 1));
        }
    }
    for (i, j, a, b) in mixed_sign_pairs(q) {
        violations.push(format!(
            "(f) row lattice contains {}*e_{} + {}*e_{} with mixed signs",
            a,
            i + 1,
            b,
            j + 1
        ));
    }
    let reduced = match gale_dual(q) {
        Ok(g) => {
            let f = is_f_matrix(&g);
            f.satisfied && f.reduced
        }
        Err(_) => false,
    };
    MatrixClassification { satisfied: violations.is_empty(), violations, reduced }
}

/// Searches the row lattice for vectors supported on exactly two coordinates
/// with opposite signs. Returns one witness per offending pair.
fn mixed_sign_pairs(q: &IntMatrix) -> Vec<(usize, usize, BigInt, BigInt)> {
    let m = q.cols();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            // Row combinations x^T Q supported inside {i, j}: x must kill all
            // other columns.
            let others: Vec<usize> = (0..m).filter(|&c| c != i && c != j).collect();
            let restricted = q.select_columns(&others).expect("valid indices");
            let x_space = kernel_saturated(&restricted.transpose());
            if x_space.rows() == 0 {
                continue;
            }
            // Project the allowed combinations onto coordinates (i, j).
            let mut proj_rows: Vec<Vec<BigInt>> = Vec::new();
            for rr in 0..x_space.rows() {
                let x = x_space.row_vec(rr);
                let qi: BigInt = (0..q.rows()).map(|r| &x[r] * q.at(r, i)).sum();
                let qj: BigInt = (0..q.rows()).map(|r| &x[r] * q.at(r, j)).sum();
                proj_rows.push(vec![qi, qj]);
            }
            let proj =
                lattice::row_lattice_basis(&IntMatrix::from_row_vecs(proj_rows, 2).unwrap());
            match proj.rows() {
                0 => {}
                1 => {
                    let g = proj.row_vec(0);
                    if g[0].is_positive() && g[1].is_negative()
                        || g[0].is_negative() && g[1].is_positive()
                    {
                        out.push((i, j, g[0].clone(), g[1].clone()));
                    }
                }
                _ => {
                    // A rank-2 sublattice of Z^2 always contains mixed-sign
                    // vectors: walk one basis vector past the sign change.
                    // HNF gives top = (d1, k), bot = (0, d2) with d1, d2 > 0.
                    let top = proj.row_vec(0);
                    let bot = proj.row_vec(1);
                    use num_integer::Integer;
                    let t = top[1].div_floor(&bot[1]) + BigInt::one();
                    let witness = [top[0].clone(), &top[1] - &t * &bot[1]];
                    debug_assert!(witness[0].is_positive() && witness[1].is_negative());
                    out.push((i, j, witness[0].clone(), witness[1].clone()));
                }
            }
        }
    }
    out
}

/// Bunch of cones on the weight side. Each member keeps the fan-side index
/// set `I`; its cone is spanned by the complementary columns of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bunch {
    q: IntMatrix,
    members: Vec<Vec<usize>>,
}

impl Bunch {
    pub fn new(q: IntMatrix, members: Vec<Vec<usize>>) -> Result<Self> {
        let m = q.cols();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for set in members {
            let s: BTreeSet<usize> = set.into_iter().collect();
            if s.iter().any(|&i| i >= m) {
                return Err(Error::Input("bunch index out of range".into()));
            }
            sets.insert(s.into_iter().collect());
        }
        // Keep only inclusion-maximal fan-side sets; their complement cones
        // are the inclusion-minimal generators of the bunch.
        let all: Vec<Vec<usize>> = sets.into_iter().collect();
        let members: Vec<Vec<usize>> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t.len() > s.len() && s.iter().all(|i| t.contains(i))))
            .cloned()
            .collect();
        Ok(Bunch { q, members })
    }

    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.q
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Column indices generating each bunch cone (complements of members).
    pub fn generator_sets(&self) -> Vec<Vec<usize>> {
        let m = self.q.cols();
        self.members
            .iter()
            .map(|s| (0..m).filter(|i| !s.contains(i)).collect())
            .collect()
    }

    pub fn cone_of_member(&self, idx: usize) -> Cone {
        let m = self.q.cols();
        let complement: Vec<usize> = (0..m).filter(|i| !self.members[idx].contains(i)).collect();
        cone_of_columns(&self.q, &complement)
    }

    /// Intersection of all bunch cones.
    pub fn common_intersection(&self) -> Result<Cone> {
        let mut acc = Cone::full_space(self.q.rows());
        for i in 0..self.members.len() {
            acc = acc.intersect(&self.cone_of_member(i))?;
        }
        Ok(acc)
    }
}

/// The bunch associated with a fan via Gale duality.
pub fn bunch_of(fan: &Fan, q: &IntMatrix) -> Result<Bunch> {
    if q.cols() != fan.num_rays() {
        return Err(Error::DimensionMismatch(
            "weight matrix must have one column per ray".into(),
        ));
    }
    Bunch::new(q.clone(), fan.max_cone_sets().to_vec())
}

/// The fan assembled from a bunch by complementation, together with its
/// validation. A quasi-fan (a cone containing a line, or a face-to-face
/// failure) is signalled through the validation, not raised.
pub fn fan_of(bunch: &Bunch, v: &IntMatrix) -> Result<(Fan, FanValidation)> {
    if v.cols() != bunch.weight_matrix().cols() {
        return Err(Error::DimensionMismatch(
            "fan and weight matrices must share the column count".into(),
        ));
    }
    let fan = Fan::new(v.clone(), bunch.members().to_vec())?;
    let validation = validate_fan(&fan);
    Ok((fan, validation))
}

/// Pseudo-effective cone: the column cone of `Q`.
pub fn eff_cone(q: &IntMatrix) -> Cone {
    span_cone(q)
}

/// Movable cone: the intersection over all single-column deletions.
pub fn mov_cone(q: &IntMatrix) -> Result<Cone> {
    let m = q.cols();
    let mut acc = Cone::full_space(q.rows());
    for i in 0..m {
        let others: Vec<usize> = (0..m).filter(|&c| c != i).collect();
        acc = acc.intersect(&cone_of_columns(q, &others))?;
    }
    Ok(acc)
}

/// Nef cone of a fan: the intersection of its bunch cones.
pub fn nef_cone(fan: &Fan, q: &IntMatrix) -> Result<Cone> {
    bunch_of(fan, q)?.common_intersection()
}

/// Squarefree monomial ideal, kept as an antichain of supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Vec<usize>>,
}

impl MonomialIdeal {
    /// Minimalizes on construction: duplicate supports and supersets of
    /// other supports are dropped.
    pub fn new(num_vars: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in generators {
            let s: BTreeSet<usize> = g.into_iter().collect();
            if s.iter().any(|&i| i >= num_vars) {
                return Err(Error::Input("ideal generator index out of range".into()));
            }
            sets.insert(s.into_iter().collect());
        }
        let all: Vec<Vec<usize>> = sets.into_iter().collect();
        let generators: Vec<Vec<usize>> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t.len() < s.len() && t.iter().all(|i| s.contains(i))))
            .cloned()
            .collect();
        Ok(MonomialIdeal { num_vars, generators })
    }

    pub fn from_one_based(num_vars: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let shifted: Vec<Vec<usize>> = generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| {
                        if i == 0 {
                            Err(Error::Input("index 0 in 1-based ideal".into()))
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        MonomialIdeal::new(num_vars, shifted)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn generators_one_based(&self) -> Vec<Vec<usize>> {
        self.generators
            .iter()
            .map(|s| s.iter().map(|&i| i + 1).collect())
            .collect()
    }

    pub fn monomial_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|s| s.iter().map(|&i| format!("x{}", i + 1)).collect::<Vec<_>>().join(""))
            .collect()
    }

    /// Ideal containment for squarefree monomial ideals: every generator of
    /// `other` is divisible by some generator of `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other
            .generators
            .iter()
            .all(|g| self.generators.iter().any(|h| h.iter().all(|i| g.contains(i))))
    }
}

/// Irrelevant ideal of a fan: one squarefree generator per maximal cone,
/// supported on the complementary rays, minimalized to an antichain.
pub fn irrelevant_ideal(fan: &Fan) -> MonomialIdeal {
    let m = fan.num_rays();
    let gens: Vec<Vec<usize>> = fan
        .max_cone_sets()
        .iter()
        .map(|s| (0..m).filter(|i| !s.contains(i)).collect())
        .collect();
    MonomialIdeal::new(m, gens).expect("indices in range")
}

/// Rebuilds the fan whose irrelevant ideal is `ideal`: maximal cones are the
/// complements of the generator supports. Errors when the result violates
/// the fan axioms.
pub fn fan_from_ideal(ideal: &MonomialIdeal, v: &IntMatrix) -> Result<Fan> {
    if ideal.num_vars() != v.cols() {
        return Err(Error::DimensionMismatch(
            "ideal variable count must match the ray count".into(),
        ));
    }
    let m = v.cols();
    let mut sets = Vec::new();
    for g in ideal.generators() {
        let complement: Vec<usize> = (0..m).filter(|i| !g.contains(i)).collect();
        if complement.is_empty() {
            return Err(Error::IdealNotFan(
                "a generator involves every variable, leaving no cone".into(),
            ));
        }
        sets.push(complement);
    }
    let fan = Fan::new(v.clone(), sets).map_err(|e| Error::IdealNotFan(e.to_string()))?;
    let validation = validate_fan(&fan);
    if !validation.valid {
        return Err(Error::IdealNotFan(validation.issues.join("; ")));
    }
    if !validation.simplicial {
        return Err(Error::IdealNotFan(
            "a generator's complement spans a non-simplicial cone".into(),
        ));
    }
    Ok(fan)
}
