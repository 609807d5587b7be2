//! Enumeration of all simplicial fans on a fixed ray set with support equal
//! to the span of the rays, the projective sub-census, location of nef cones
//! among GKZ cells, filling-cell detection and sharp completion.
//!
//! The search is a ridge-driven backtracking over candidate maximal cones:
//! every fan covers a fixed generic interior point, so each census member is
//! grown exactly once from the unique candidate containing that point,
//! extending across the open ridge frontier until the support closes up.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::cone::{combinations, Cone};
use crate::fanbunch::{
    self, irrelevant_ideal, nef_cone, span_cone, support_is, validate_fan, Fan, MonomialIdeal,
};
use crate::gkz::{self, GkzCone, GkzContext};
use crate::lattice::{determinant, gale_dual, primitive_vector, IntMatrix, RatVector};
use crate::{Error, Result};

/// Enumeration refuses above these sizes; the candidate-cone search is
/// exponential.
pub const MAX_ENUM_COLUMNS: usize = 9;
pub const MAX_ENUM_CANDIDATES: usize = 60;

/// One census member: a fan, its quasi-projectivity flag and its nef cone
/// located as a GKZ cell.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub fan: Fan,
    pub projective: bool,
    pub nef_cell: GkzCone,
}

/// All simplicial fans on the columns of `V` with support equal to the span
/// cone, in deterministic order.
pub struct FanCensus {
    v: IntMatrix,
    q: IntMatrix,
    entries: Vec<CensusEntry>,
}

impl FanCensus {
    pub fn ray_matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.q
    }

    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn fans(&self) -> Vec<&Fan> {
        self.entries.iter().map(|e| &e.fan).collect()
    }

    pub fn projective_entries(&self) -> Vec<&CensusEntry> {
        self.entries.iter().filter(|e| e.projective).collect()
    }
}

/// Candidate maximal cones: full-dimensional simplicial column subsets that
/// swallow no other ray.
struct Candidates {
    sets: Vec<Vec<usize>>,
    cones: Vec<Cone>,
    compatible: Vec<Vec<bool>>,
    /// For every candidate, its ridges as sorted (n-1)-index sets.
    ridges: Vec<Vec<Vec<usize>>>,
    /// Ridge index set -> lies in the relative interior of the span cone.
    ridge_interior: BTreeMap<Vec<usize>, bool>,
}

fn candidate_cones(v: &IntMatrix) -> Result<Candidates> {
    let n = v.rows();
    let m = v.cols();
    if v.rank() != n {
        return Err(Error::RankDeficient(format!(
            "ray matrix must have full row rank {}, found {}",
            n,
            v.rank()
        )));
    }
    for c in 0..m {
        if v.col_vec(c).iter().all(|e| e.is_zero()) {
            return Err(Error::ZeroColumn(c + 1));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if primitive_vector(&v.col_vec(i)) == primitive_vector(&v.col_vec(j)) {
                return Err(Error::Input(format!(
                    "columns {} and {} generate the same ray",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if m > MAX_ENUM_COLUMNS {
        return Err(Error::BudgetExceeded(format!(
            "fan enumeration is capped at {MAX_ENUM_COLUMNS} rays, got {m}"
        )));
    }
    let span = span_cone(v);
    let mut sets = Vec::new();
    let mut cones = Vec::new();
    'subsets: for subset in combinations(m, n) {
        let sub = v.select_columns(&subset)?;
        if determinant(&sub)?.is_zero() {
            continue;
        }
        let cone = fanbunch::cone_of_columns(v, &subset);
        for j in 0..m {
            if !subset.contains(&j) && cone.contains_int(&v.col_vec(j)) {
                continue 'subsets;
            }
        }
        sets.push(subset);
        cones.push(cone);
    }
    if sets.len() > MAX_ENUM_CANDIDATES {
        return Err(Error::BudgetExceeded(format!(
            "{} candidate maximal cones exceed the cap of {MAX_ENUM_CANDIDATES}",
            sets.len()
        )));
    }
    let k = sets.len();
    // Simplicial cones on a duplicate-free ray set meet face-to-face exactly
    // when their intersection is the cone on the shared ray indices.
    let mut compatible = vec![vec![false; k]; k];
    for a in 0..k {
        compatible[a][a] = true;
        for b in a + 1..k {
            let meet = cones[a].intersect(&cones[b])?;
            let shared: Vec<usize> =
                sets[a].iter().copied().filter(|i| sets[b].contains(i)).collect();
            let ok = meet == fanbunch::cone_of_columns(v, &shared);
            compatible[a][b] = ok;
            compatible[b][a] = ok;
        }
    }
    let mut ridges = Vec::with_capacity(k);
    let mut ridge_interior: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    for set in &sets {
        let mut rs = Vec::with_capacity(set.len());
        for drop in 0..set.len() {
            let ridge: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|(pos, _)| *pos != drop)
                .map(|(_, &i)| i)
                .collect();
            if !ridge_interior.contains_key(&ridge) {
                let rc = fanbunch::cone_of_columns(v, &ridge);
                let interior = span.relint_contains(&rc.relint_point())?;
                ridge_interior.insert(ridge.clone(), interior);
            }
            rs.push(ridge);
        }
        ridges.push(rs);
    }
    Ok(Candidates { sets, cones, compatible, ridges, ridge_interior })
}

/// A deterministic generic point in the relative interior of the span cone,
/// avoiding every candidate facet hyperplane.
fn generic_point(v: &IntMatrix, cands: &Candidates, span: &Cone) -> RatVector {
    let mut rng = ChaCha8Rng::seed_from_u64(0x67_6b_7a);
    loop {
        let mut point = vec![BigInt::zero(); v.rows()];
        for c in 0..v.cols() {
            let w = BigInt::from(rng.gen_range(1i64..=1009));
            for (p, e) in point.iter_mut().zip(&v.col_vec(c)) {
                *p += &w * e;
            }
        }
        let w = RatVector::from_int(&point);
        if !span.relint_contains(&w).unwrap_or(false) {
            continue;
        }
        let generic = cands.cones.iter().all(|c| {
            c.facet_normals().iter().all(|h| !w.dot_int(h).is_zero())
        });
        if generic {
            return w;
        }
    }
}

/// Ridge-frontier backtracking from one seed cone. Emits every fan whose
/// cone set contains the seed.
fn grow_from_seed(
    cands: &Candidates,
    seed: usize,
    out: &mut BTreeSet<Vec<Vec<usize>>>,
) {
    #[derive(Clone)]
    struct State {
        chosen: Vec<usize>,
        // Ridge -> candidate indices currently bounding it.
        counts: BTreeMap<Vec<usize>, Vec<usize>>,
    }

    fn add(cands: &Candidates, state: &State, t: usize) -> Option<State> {
        if state.chosen.contains(&t) {
            return None;
        }
        if !state.chosen.iter().all(|&c| cands.compatible[c][t]) {
            return None;
        }
        let mut next = state.clone();
        next.chosen.push(t);
        for ridge in &cands.ridges[t] {
            let entry = next.counts.entry(ridge.clone()).or_default();
            entry.push(t);
            let interior = cands.ridge_interior[ridge];
            let limit = if interior { 2 } else { 1 };
            if entry.len() > limit {
                return None;
            }
        }
        Some(next)
    }

    let initial = State { chosen: Vec::new(), counts: BTreeMap::new() };
    let Some(start) = add(cands, &initial, seed) else { return };
    let mut stack = vec![start];
    while let Some(state) = stack.pop() {
        let unresolved = state
            .counts
            .iter()
            .find(|(ridge, cofacets)| cands.ridge_interior[*ridge] && cofacets.len() == 1)
            .map(|(ridge, cofacets)| (ridge.clone(), cofacets[0]));
        match unresolved {
            None => {
                let mut sets: Vec<Vec<usize>> =
                    state.chosen.iter().map(|&c| cands.sets[c].clone()).collect();
                sets.sort();
                out.insert(sets);
            }
            Some((ridge, present)) => {
                for t in 0..cands.sets.len() {
                    if t == present {
                        continue;
                    }
                    if !cands.ridges[t].contains(&ridge) {
                        continue;
                    }
                    if let Some(next) = add(cands, &state, t) {
                        stack.push(next);
                    }
                }
            }
        }
    }
}

/// Enumerates all simplicial fans with rays exactly the columns of `V` and
/// support equal to the span cone, annotating each with its nef cell over
/// the canonical Gale dual.
pub fn enumerate_sf(v: &IntMatrix) -> Result<Arc<FanCensus>> {
    let q = gale_dual(v)?;
    enumerate_sf_with_weights(v, &q)
}

type CensusCache = Mutex<VecDeque<(String, Arc<FanCensus>)>>;

fn census_cache() -> &'static CensusCache {
    static CACHE: OnceLock<CensusCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(VecDeque::new()))
}

fn census_key(v: &IntMatrix, q: &IntMatrix) -> String {
    format!("{v:?}|{q:?}")
}

/// Same census, but nef cells are expressed in the coordinates of the given
/// weight matrix (which must be a Gale dual of `V`). Results are memoized
/// per matrix pair; enumeration is expensive and referentially transparent.
pub fn enumerate_sf_with_weights(v: &IntMatrix, q: &IntMatrix) -> Result<Arc<FanCensus>> {
    let key = census_key(v, q);
    if let Some((_, census)) = census_cache().lock().unwrap().iter().find(|(k, _)| *k == key) {
        return Ok(census.clone());
    }
    let census = Arc::new(enumerate_sf_uncached(v, q)?);
    let mut cache = census_cache().lock().unwrap();
    cache.push_back((key, census.clone()));
    while cache.len() > 8 {
        cache.pop_front();
    }
    Ok(census)
}

fn enumerate_sf_uncached(v: &IntMatrix, q: &IntMatrix) -> Result<FanCensus> {
    let cands = candidate_cones(v)?;
    let span = span_cone(v);
    let point = generic_point(v, &cands, &span);
    let seeds: Vec<usize> = (0..cands.cones.len())
        .filter(|&i| cands.cones[i].contains(&point).unwrap_or(false))
        .collect();
    let mut found: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for seed in seeds {
        grow_from_seed(&cands, seed, &mut found);
    }
    let ctx = GkzContext::new(q)?;
    let mut entries = Vec::new();
    for sets in found {
        let fan = Fan::new(v.clone(), sets)?;
        let nef = nef_cone(&fan, q)?;
        let projective = nef.dim() == q.rows();
        let nef_cell = gkz::cell_for_cone(&ctx, &nef)?;
        entries.push(CensusEntry { fan, projective, nef_cell });
    }
    entries.sort_by(|a, b| a.fan.cmp(&b.fan));
    Ok(FanCensus { v: v.clone(), q: q.clone(), entries })
}

/// The projective census: one fan per chamber of the moving cone, obtained
/// through the induced-fan construction. Coincides with the projective
/// members of the full census.
pub fn enumerate_psf(v: &IntMatrix, q: &IntMatrix) -> Result<FanCensus> {
    let ctx = GkzContext::new(q)?;
    let chambers = gkz::chambers(&ctx)?;
    let mut entries = Vec::new();
    for ch in chambers {
        let (fan, val) = gkz::sigma_gamma(&ctx, &ch, v)?;
        if !val.valid {
            return Err(Error::Internal(format!(
                "chamber fan failed validation: {}",
                val.issues.join("; ")
            )));
        }
        let mut cell = ch;
        cell.is_gcell = Some(true);
        entries.push(CensusEntry { fan, projective: true, nef_cell: cell });
    }
    entries.sort_by(|a, b| a.fan.cmp(&b.fan));
    Ok(FanCensus { v: v.clone(), q: q.clone(), entries })
}

/// Locates the nef cone of a fan among the GKZ cells of the moving cone.
/// With `waive_support` the fan may have partial support (its nef cone is
/// still a well-defined intersection of bunch cones).
pub fn nu(ctx: &GkzContext, fan: &Fan, waive_support: bool) -> Result<GkzCone> {
    let validation = validate_fan(fan);
    if !validation.valid {
        return Err(Error::InvalidFan(validation.issues.join("; ")));
    }
    if !waive_support {
        let span = span_cone(fan.ray_matrix());
        if !support_is(fan, &span)? {
            return Err(Error::InvalidFan(
                "fan support is smaller than the span of its rays".into(),
            ));
        }
    }
    let nef = nef_cone(fan, ctx.weight_matrix())?;
    let dec = ctx.decomposition(true)?;
    match dec.find_cell(&nef) {
        Some(idx) => Ok(dec.cells()[idx].clone()),
        None => Err(Error::Internal(
            "nef cone does not appear among the GKZ cells of the moving cone".into(),
        )),
    }
}

/// All filling cells of a fan: GKZ cells inside its nef cone realized as the
/// nef cone of a census fan containing the given fan, paired with those
/// filling fans.
pub fn filling_cells(ctx: &GkzContext, w_fan: &Fan) -> Result<Vec<(GkzCone, Vec<Fan>)>> {
    let validation = validate_fan(w_fan);
    if !validation.valid {
        return Err(Error::InvalidFan(validation.issues.join("; ")));
    }
    let q = ctx.weight_matrix();
    let nef_w = nef_cone(w_fan, q)?;
    let census = enumerate_sf_with_weights(w_fan.ray_matrix(), q)?;
    let dec = ctx.decomposition(true)?;
    let mut out = Vec::new();
    for cell in dec.cells() {
        if !cell.cone.is_subset_of(&nef_w) {
            continue;
        }
        let fans: Vec<Fan> = census
            .entries()
            .iter()
            .filter(|e| e.nef_cell.cone == cell.cone && w_fan.is_subfan_of(&e.fan))
            .map(|e| e.fan.clone())
            .collect();
        if !fans.is_empty() {
            let mut cell = cell.clone();
            cell.is_gcell = Some(true);
            out.push((cell, fans));
        }
    }
    Ok(out)
}

pub fn is_fillable(ctx: &GkzContext, w_fan: &Fan) -> Result<bool> {
    Ok(!filling_cells(ctx, w_fan)?.is_empty())
}

/// Result of a sharp completion along a filling cell.
#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub filling_cell: GkzCone,
    pub completed_fan: Fan,
    pub irrelevant_ideal_of_z: MonomialIdeal,
    pub sharp: bool,
    pub complete: bool,
}

/// Completes `w_fan` along the given filling cell: the completed fan
/// contains the input fan, has the cell as its nef cone, and its irrelevant
/// ideal contains the input's. Errors when the cell is not filling.
pub fn sharp_completion(ctx: &GkzContext, w_fan: &Fan, cell: &GkzCone) -> Result<CompletionResult> {
    let filling = filling_cells(ctx, w_fan)?;
    complete_along(&filling, w_fan, cell)
}

/// Completion against a precomputed filling-cell list, avoiding repeated
/// census enumeration when several chambers are tried in sequence.
pub fn complete_along(
    filling: &[(GkzCone, Vec<Fan>)],
    w_fan: &Fan,
    cell: &GkzCone,
) -> Result<CompletionResult> {
    let Some((found, fans)) = filling.iter().find(|(c, _)| c.cone == cell.cone).cloned() else {
        return Err(Error::NotFillingCell);
    };
    // For a chamber the filling fan is unique; otherwise pick the first in
    // canonical order.
    let completed_fan = fans.first().cloned().ok_or(Error::NotFillingCell)?;
    if found.is_chamber && fans.len() != 1 {
        return Err(Error::Internal(
            "a chamber must determine a unique filling fan".into(),
        ));
    }
    let ideal_z = irrelevant_ideal(&completed_fan);
    let ideal_w = irrelevant_ideal(w_fan);
    if !ideal_z.contains_ideal(&ideal_w) {
        return Err(Error::Internal(
            "irrelevant ideal of the completion must contain the input ideal".into(),
        ));
    }
    let n = w_fan.ray_matrix().rows();
    let complete = support_is(&completed_fan, &Cone::full_space(n))?;
    Ok(CompletionResult {
        filling_cell: found,
        completed_fan,
        irrelevant_ideal_of_z: ideal_z,
        sharp: true,
        complete,
    })
}

/// Low-Picard-rank verification: for r <= 2 every census fan must have a
/// full-dimensional nef cone, and every complete census entry must be
/// fillable.
#[derive(Clone, Debug)]
pub struct LowRankReport {
    pub rank: usize,
    pub census_size: usize,
    pub all_nef_full_dimensional: bool,
    pub all_complete_entries_fillable: bool,
    pub counterexamples: Vec<String>,
}

pub fn low_rank_checks(v: &IntMatrix) -> Result<LowRankReport> {
    let q = gale_dual(v)?;
    let r = q.rows();
    if r > 2 {
        return Err(Error::Unsupported(format!(
            "low-rank checks cover Picard rank <= 2, got {r}"
        )));
    }
    if !span_cone(v).is_full_space() {
        return Err(Error::Input("ray matrix must be F-complete".into()));
    }
    let ctx = GkzContext::new(&q)?;
    let census = enumerate_sf_with_weights(v, &q)?;
    let mut counterexamples = Vec::new();
    let mut all_full = true;
    let mut all_fillable = true;
    for entry in census.entries() {
        if entry.nef_cell.cone.dim() != r {
            all_full = false;
            counterexamples.push(format!(
                "fan {:?} has nef cone of dimension {}",
                entry.fan.max_cone_sets_one_based(),
                entry.nef_cell.cone.dim()
            ));
        }
        if !is_fillable(&ctx, &entry.fan)? {
            all_fillable = false;
            counterexamples.push(format!(
                "fan {:?} is not fillable",
                entry.fan.max_cone_sets_one_based()
            ));
        }
    }
    Ok(LowRankReport {
        rank: r,
        census_size: census.len(),
        all_nef_full_dimensional: all_full,
        all_complete_entries_fillable: all_fillable,
        counterexamples,
    })
}
