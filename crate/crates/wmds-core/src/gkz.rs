//! Secondary-fan (GKZ) decomposition of the pseudo-effective cone: the cone
//! of a divisor class, the cell complex with its face relations, chambers
//! inside the moving cone, the bunch attached to a cell, and the induced
//! (quasi-)fan on the Gale-dual side.
//!
//! The decomposition is discovered by enumerating the full-dimensional
//! regions of the hyperplane arrangement spanned by all linearly independent
//! (r-1)-subsets of weight columns, taking one exact rational witness per
//! region, evaluating the defining intersection at every witness, and
//! deduplicating cells by canonical cone equality.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use crate::cone::{combinations, Cone};
use crate::fanbunch::{self, Bunch, Fan, FanValidation};
use crate::lattice::{kernel_saturated, IntMatrix, RatVector};
use crate::{Error, Result};

/// Hard cap on the weight-column count: cell computations walk all 2^m
/// column subsets.
pub const MAX_GKZ_COLUMNS: usize = 16;

/// Shared, memoizing context for GKZ computations over one weight matrix.
pub struct GkzContext {
    q: IntMatrix,
    m: usize,
    r: usize,
    eff: Cone,
    mov: Cone,
    cache: Mutex<BTreeMap<u64, Arc<Cone>>>,
    dec_cache: Mutex<BTreeMap<bool, Arc<GkzDecomposition>>>,
}

impl GkzContext {
    pub fn new(q: &IntMatrix) -> Result<Self> {
        if q.cols() > MAX_GKZ_COLUMNS {
            return Err(Error::BudgetExceeded(format!(
                "GKZ subset iteration is capped at {} columns, got {}",
                MAX_GKZ_COLUMNS,
                q.cols()
            )));
        }
        if q.rank() != q.rows() {
            return Err(Error::RankDeficient(format!(
                "weight matrix must have full row rank {}, found {}",
                q.rows(),
                q.rank()
            )));
        }
        let eff = fanbunch::eff_cone(q);
        let mov = fanbunch::mov_cone(q)?;
        Ok(GkzContext {
            q: q.clone(),
            m: q.cols(),
            r: q.rows(),
            eff,
            mov,
            cache: Mutex::new(BTreeMap::new()),
            dec_cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.q
    }

    pub fn num_columns(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn eff(&self) -> &Cone {
        &self.eff
    }

    pub fn mov(&self) -> &Cone {
        &self.mov
    }

    /// Cone generated by the columns selected by `mask`.
    pub fn column_subset_cone(&self, mask: u64) -> Arc<Cone> {
        if let Some(c) = self.cache.lock().unwrap().get(&mask) {
            return c.clone();
        }
        let idx: Vec<usize> = (0..self.m).filter(|&i| mask & (1 << i) != 0).collect();
        let cone = Arc::new(fanbunch::cone_of_columns(&self.q, &idx));
        self.cache.lock().unwrap().insert(mask, cone.clone());
        cone
    }

    /// The bunch cone of a fan-side index set: columns complementary to `I`.
    pub fn complement_cone(&self, fan_side: &[usize]) -> Arc<Cone> {
        let full = self.full_mask();
        let mut mask = 0u64;
        for &i in fan_side {
            mask |= 1 << i;
        }
        self.column_subset_cone(full & !mask)
    }

    pub fn full_mask(&self) -> u64 {
        if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        }
    }

    /// Memoized decomposition; repeated chamber walks and filling-cell scans
    /// share one computation per context.
    pub fn decomposition(&self, restrict_to_mov: bool) -> Result<Arc<GkzDecomposition>> {
        if let Some(d) = self.dec_cache.lock().unwrap().get(&restrict_to_mov) {
            return Ok(d.clone());
        }
        let dec = Arc::new(gkz_decomposition(self, restrict_to_mov)?);
        self.dec_cache.lock().unwrap().insert(restrict_to_mov, dec.clone());
        Ok(dec)
    }
}

/// A GKZ cone together with its witness, bunch and chamber flag.
#[derive(Clone, Debug)]
pub struct GkzCone {
    pub cone: Cone,
    pub bunch: Bunch,
    pub witness: RatVector,
    pub is_chamber: bool,
    pub is_gcell: Option<bool>,
}

/// The full cell complex of a GKZ decomposition.
pub struct GkzDecomposition {
    q: IntMatrix,
    cells: Vec<GkzCone>,
    /// Pairs `(i, j)` with cell `i` a proper face of cell `j`.
    face_relations: Vec<(usize, usize)>,
    restricted_to_mov: bool,
}

impl GkzDecomposition {
    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.q
    }

    pub fn cells(&self) -> &[GkzCone] {
        &self.cells
    }

    pub fn face_relations(&self) -> &[(usize, usize)] {
        &self.face_relations
    }

    pub fn restricted_to_mov(&self) -> bool {
        self.restricted_to_mov
    }

    /// Chambers: full-dimensional cells inside the moving cone.
    pub fn chambers(&self) -> Vec<&GkzCone> {
        self.cells.iter().filter(|c| c.is_chamber).collect()
    }

    /// All full-dimensional cells (over the effective cone these include
    /// cells outside the moving cone).
    pub fn full_dim_cells(&self) -> Vec<&GkzCone> {
        let r = self.q.rows();
        self.cells.iter().filter(|c| c.cone.dim() == r).collect()
    }

    pub fn find_cell(&self, cone: &Cone) -> Option<usize> {
        self.cells.iter().position(|c| &c.cone == cone)
    }
}

/// The GKZ cone of a class `w`: the intersection of all column-subset cones
/// containing `w`. Errors when `w` lies outside the pseudo-effective cone.
pub fn gkz_cone_at(ctx: &GkzContext, w: &RatVector) -> Result<GkzCone> {
    if w.dim() != ctx.r {
        return Err(Error::DimensionMismatch(format!(
            "class has dimension {}, expected {}",
            w.dim(),
            ctx.r
        )));
    }
    if !ctx.eff.contains(w)? {
        return Err(Error::OutsidePseudoEffective);
    }
    let full = ctx.full_mask();
    let mut ineqs: Vec<Vec<BigInt>> = Vec::new();
    let mut eqs: Vec<Vec<BigInt>> = Vec::new();
    for mask in 0..=full {
        let cone = ctx.column_subset_cone(mask);
        if cone.contains(w)? {
            ineqs.extend(cone.facet_normals().iter().cloned());
            eqs.extend(cone.span_equation_rows());
        }
    }
    let gamma = Cone::from_constraints(ctx.r, &ineqs, &eqs)?;
    debug_assert!(gamma.relint_contains(w).unwrap());
    finish_cell(ctx, gamma, w.clone())
}

/// The second characterization: intersect the subset cones containing `w` in
/// their relative interior. Exposed for cross-checking.
pub fn gkz_cone_by_relint(ctx: &GkzContext, w: &RatVector) -> Result<Cone> {
    let full = ctx.full_mask();
    let mut ineqs: Vec<Vec<BigInt>> = Vec::new();
    let mut eqs: Vec<Vec<BigInt>> = Vec::new();
    let mut any = false;
    for mask in 0..=full {
        let cone = ctx.column_subset_cone(mask);
        if cone.relint_contains(w)? {
            any = true;
            ineqs.extend(cone.facet_normals().iter().cloned());
            eqs.extend(cone.span_equation_rows());
        }
    }
    if !any {
        return Err(Error::OutsidePseudoEffective);
    }
    Cone::from_constraints(ctx.r, &ineqs, &eqs)
}

/// Wraps an externally computed cell cone with its bunch, witness and
/// chamber flag.
pub fn cell_for_cone(ctx: &GkzContext, cone: &Cone) -> Result<GkzCone> {
    finish_cell(ctx, cone.clone(), cone.relint_point())
}

/// Attaches bunch, witness and chamber flag to a computed cell cone.
fn finish_cell(ctx: &GkzContext, gamma: Cone, witness: RatVector) -> Result<GkzCone> {
    let bunch = bunch_of_cell(ctx, &gamma)?;
    let is_chamber = gamma.dim() == ctx.r && gamma.is_subset_of(&ctx.mov);
    Ok(GkzCone { cone: gamma, bunch, witness, is_chamber, is_gcell: None })
}

/// The bunch of a cell: all fan-side index sets whose complement-column cone
/// contains the cell's relative interior in its own relative interior.
/// `Bunch` keeps the inclusion-maximal index sets.
pub fn bunch_of_cell(ctx: &GkzContext, gamma: &Cone) -> Result<Bunch> {
    let full = ctx.full_mask();
    let witness = gamma.relint_point();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..=full {
        let cone = ctx.column_subset_cone(full & !mask);
        if cone.relint_contains(&witness)? && gamma.is_subset_of(&cone) {
            members.push((0..ctx.m).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    Bunch::new(ctx.q.clone(), members)
}

/// Wall hyperplanes of the secondary fan: spans of linearly independent
/// (r-1)-subsets of weight columns, as primitive normals.
fn wall_normals(ctx: &GkzContext) -> Vec<Vec<BigInt>> {
    let mut set: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    if ctx.r == 0 {
        return Vec::new();
    }
    for subset in combinations(ctx.m, ctx.r - 1) {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| ctx.q.col_vec(i)).collect();
        if rows.is_empty() {
            continue;
        }
        let mat = IntMatrix::from_row_vecs(rows, ctx.r).expect("column dimension");
        let k = kernel_saturated(&mat);
        if k.rows() != 1 {
            continue;
        }
        let mut n = k.row_vec(0);
        if let Some(first) = n.iter().find(|e| !e.is_zero()) {
            if first < &BigInt::zero() {
                n = n.iter().map(|e| -e).collect();
            }
        }
        set.insert(n);
    }
    set.into_iter().collect()
}

/// One interior witness per full-dimensional region of the arrangement
/// restricted to `support`.
fn region_witnesses(support: &Cone, walls: &[Vec<BigInt>], dim: usize) -> Vec<RatVector> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Vec<BigInt>>)> = vec![(0, support.facet_normals().to_vec())];
    while let Some((idx, constraints)) = stack.pop() {
        let region = Cone::from_constraints(dim, &constraints, &[]).expect("constraint dims");
        if region.dim() < dim {
            continue;
        }
        if idx == walls.len() {
            out.push(region.interior_point().expect("full-dimensional region"));
            continue;
        }
        let mut plus = constraints.clone();
        plus.push(walls[idx].clone());
        stack.push((idx + 1, plus));
        let mut minus = constraints;
        minus.push(walls[idx].iter().map(|e| -e).collect());
        stack.push((idx + 1, minus));
    }
    out
}

/// Computes the full GKZ decomposition of the effective cone, or of the
/// moving cone when `restrict_to_mov` is set. Requires the moving cone to be
/// full-dimensional.
pub fn gkz_decomposition(ctx: &GkzContext, restrict_to_mov: bool) -> Result<GkzDecomposition> {
    if ctx.mov.dim() != ctx.r {
        return Err(Error::MovNotFullDimensional);
    }
    // Region witnesses are interior points of arrangement cells; a
    // non-pointed effective cone has no generic seed direction and falls
    // outside the weight-side axioms anyway.
    if !ctx.eff.is_strongly_convex() {
        return Err(Error::EffectiveConeNotPointed);
    }
    let support = if restrict_to_mov { &ctx.mov } else { &ctx.eff };
    let walls = wall_normals(ctx);
    let witnesses = region_witnesses(support, &walls, ctx.r);
    let mut chamber_cones: BTreeSet<Cone> = BTreeSet::new();
    for w in &witnesses {
        let gamma = gkz_cone_at(ctx, w)?;
        debug_assert_eq!(gamma.cone.dim(), ctx.r);
        chamber_cones.insert(gamma.cone);
    }
    // Cells are the faces of the full-dimensional cells.
    let mut cell_cones: BTreeSet<Cone> = BTreeSet::new();
    for c in &chamber_cones {
        for f in c.all_faces() {
            cell_cones.insert(f);
        }
    }
    let mut cells: Vec<GkzCone> = Vec::new();
    for cone in cell_cones {
        let witness = cone.relint_point();
        cells.push(finish_cell(ctx, cone, witness)?);
    }
    cells.sort_by_key(|c| (c.cone.dim(), c.cone.clone()));
    let mut face_relations = Vec::new();
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if i != j && Cone::is_face(&cells[i].cone, &cells[j].cone) {
                face_relations.push((i, j));
            }
        }
    }
    Ok(GkzDecomposition { q: ctx.q.clone(), cells, face_relations, restricted_to_mov: restrict_to_mov })
}

/// The chambers of the moving cone.
pub fn chambers(ctx: &GkzContext) -> Result<Vec<GkzCone>> {
    let dec = ctx.decomposition(true)?;
    Ok(dec.cells.iter().filter(|c| c.is_chamber).cloned().collect())
}

/// The (quasi-)fan induced by a GKZ cell through Gale duality. Returns the
/// assembled fan and its validation; `valid` distinguishes honest fans from
/// quasi-fans.
pub fn sigma_gamma(
    ctx: &GkzContext,
    cell: &GkzCone,
    v: &IntMatrix,
) -> Result<(Fan, FanValidation)> {
    if v.cols() != ctx.m {
        return Err(Error::DimensionMismatch(
            "fan matrix must have one column per weight column".into(),
        ));
    }
    fanbunch::fan_of(&cell.bunch, v)
}

/// Does the Gale-dual criterion predict that `sigma_gamma` yields a genuine
/// fan? True exactly when the cell's relative interior lies in the relative
/// interior of the moving cone.
pub fn relint_inside_mov(ctx: &GkzContext, cell: &GkzCone) -> Result<bool> {
    Ok(cell.cone.is_subset_of(&ctx.mov) && ctx.mov.relint_contains(&cell.witness)?)
}

/// Is the cell a geometric cell, i.e. the nef cone of some fan in the
/// census of simplicial fans on the rays of `v`? Returns the witnesses.
pub fn is_geometric_cell(
    ctx: &GkzContext,
    cell: &GkzCone,
    v: &IntMatrix,
) -> Result<(bool, Vec<Fan>)> {
    let census = crate::sfenum::enumerate_sf(v)?;
    let mut witnesses = Vec::new();
    for entry in census.entries() {
        let nef = fanbunch::nef_cone(&entry.fan, &ctx.q)?;
        if nef == cell.cone {
            witnesses.push(entry.fan.clone());
        }
    }
    Ok((!witnesses.is_empty(), witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fanbunch::examples::*;
    use crate::fanbunch::{nef_cone, validate_fan};

    #[test]
    fn gkz_cone_at_quadric_points() {
        let q = quadric_q();
        let ctx = GkzContext::new(&q).unwrap();
        // q2 + q3 = (3, 2) sits in the chamber spanned by q2, q3.
        let gamma = gkz_cone_at(&ctx, &RatVector::from_i64(&[3, 2])).unwrap();
        assert_eq!(gamma.cone, Cone::from_rays_i64(2, &[vec![2, 1], vec![1, 1]]).unwrap());
        assert!(gamma.is_chamber);
        // q4 spans a boundary ray of the moving cone.
        let gamma4 = gkz_cone_at(&ctx, &RatVector::from_i64(&[1, 2])).unwrap();
        assert_eq!(gamma4.cone, Cone::from_rays_i64(2, &[vec![1, 2]]).unwrap());
        assert!(!gamma4.is_chamber);
        // Outside the effective cone.
        assert!(matches!(
            gkz_cone_at(&ctx, &RatVector::from_i64(&[-1, 0])),
            Err(Error::OutsidePseudoEffective)
        ));
    }

    #[test]
    fn gkz_cone_at_noncompletable_anticanonical_ray() {
        let ctx = GkzContext::new(&noncompletable_q()).unwrap();
        let gamma = gkz_cone_at(&ctx, &RatVector::from_i64(&[1, 1, 1])).unwrap();
        assert_eq!(gamma.cone, Cone::from_rays_i64(3, &[vec![1, 1, 1]]).unwrap());
        assert!(!gamma.is_chamber);
    }

    #[test]
    fn quadric_has_two_chambers() {
        let ctx = GkzContext::new(&quadric_q()).unwrap();
        let chs = chambers(&ctx).unwrap();
        assert_eq!(chs.len(), 2);
        let expected1 = Cone::from_rays_i64(2, &[vec![2, 1], vec![1, 1]]).unwrap();
        let expected2 = Cone::from_rays_i64(2, &[vec![1, 1], vec![1, 2]]).unwrap();
        let cones: Vec<&Cone> = chs.iter().map(|c| &c.cone).collect();
        assert!(cones.contains(&&expected1));
        assert!(cones.contains(&&expected2));
    }

    #[test]
    fn noncompletable_has_six_chambers() {
        let ctx = GkzContext::new(&noncompletable_q()).unwrap();
        let chs = chambers(&ctx).unwrap();
        assert_eq!(chs.len(), 6);
        // Every chamber strictly contains the anticanonical ray.
        let ac = RatVector::from_i64(&[1, 1, 1]);
        for ch in &chs {
            assert!(ch.cone.contains(&ac).unwrap());
            assert_ne!(ch.cone, Cone::from_rays_i64(3, &[vec![1, 1, 1]]).unwrap());
        }
    }

    #[test]
    fn berchtold_hausen_has_six_chambers_meeting_in_the_anticanonical_ray() {
        let ctx = GkzContext::new(&berchtold_hausen_q()).unwrap();
        let chs = chambers(&ctx).unwrap();
        assert_eq!(chs.len(), 6);
        let mut meet = Cone::full_space(3);
        for ch in &chs {
            meet = meet.intersect(&ch.cone).unwrap();
        }
        assert_eq!(meet, Cone::from_rays_i64(3, &[vec![1, 1, 1]]).unwrap());
    }

    #[test]
    fn decomposition_is_a_fan() {
        let ctx = GkzContext::new(&quadric_q()).unwrap();
        let dec = gkz_decomposition(&ctx, false).unwrap();
        for a in dec.cells() {
            for b in dec.cells() {
                let meet = a.cone.intersect(&b.cone).unwrap();
                assert!(Cone::is_face(&meet, &a.cone));
                assert!(Cone::is_face(&meet, &b.cone));
            }
        }
        // Eff of the quadric splits into four full-dimensional cells, two of
        // which sit inside Mov.
        assert_eq!(dec.full_dim_cells().len(), 4);
        assert_eq!(dec.chambers().len(), 2);
    }

    #[test]
    fn witness_lies_in_relint_and_reproduces_cell() {
        let ctx = GkzContext::new(&quadric_q()).unwrap();
        let dec = gkz_decomposition(&ctx, true).unwrap();
        for cell in dec.cells() {
            if cell.cone.is_zero_cone() {
                continue;
            }
            assert!(cell.cone.relint_contains(&cell.witness).unwrap());
            let again = gkz_cone_at(&ctx, &cell.witness).unwrap();
            assert_eq!(again.cone, cell.cone);
        }
    }

    #[test]
    fn sigma_gamma_of_quadric_chambers() {
        let q = quadric_q();
        let v = quadric_v();
        let ctx = GkzContext::new(&q).unwrap();
        let chs = chambers(&ctx).unwrap();
        let mut found = BTreeSet::new();
        for ch in &chs {
            let (fan, val) = sigma_gamma(&ctx, ch, &v).unwrap();
            assert!(val.valid, "{:?}", val.issues);
            assert!(val.simplicial);
            // The chamber is recovered as the nef cone of its fan.
            assert_eq!(nef_cone(&fan, &q).unwrap(), ch.cone);
            found.insert(fan);
        }
        assert!(found.contains(&quadric_sigma1()));
        assert!(found.contains(&quadric_sigma2()));
    }

    #[test]
    fn sigma_gamma_quasi_fan_outside_mov() {
        // Cells of Eff outside Mov induce quasi-fans.
        let q = quadric_q();
        let v = quadric_v();
        let ctx = GkzContext::new(&q).unwrap();
        let dec = gkz_decomposition(&ctx, false).unwrap();
        let mut saw_quasi = false;
        for cell in dec.full_dim_cells() {
            let (fan, val) = sigma_gamma(&ctx, cell, &v).unwrap();
            let criterion = relint_inside_mov(&ctx, cell).unwrap();
            assert_eq!(val.valid, criterion, "{:?} vs {:?}", val.issues, cell.cone);
            if !val.valid {
                saw_quasi = true;
                let _ = validate_fan(&fan);
            }
        }
        assert!(saw_quasi);
    }

    #[test]
    fn bunch_of_chamber_matches_fan_bunch() {
        let q = quadric_q();
        let v = quadric_v();
        let ctx = GkzContext::new(&q).unwrap();
        for ch in chambers(&ctx).unwrap() {
            let (fan, _) = sigma_gamma(&ctx, &ch, &v).unwrap();
            let fan_bunch = fanbunch::bunch_of(&fan, &q).unwrap();
            assert_eq!(ch.bunch.members(), fan_bunch.members());
        }
    }

    #[test]
    fn one_dimensional_cells_at_rank_two_are_not_geometric() {
        // Every complete simplicial configuration of Picard rank 2 is
        // projective, so no census member has a ray as its nef cone.
        let q = quadric_q();
        let v = quadric_v();
        let ctx = GkzContext::new(&q).unwrap();
        let wall = Cone::from_rays_i64(2, &[vec![1, 1]]).unwrap();
        let cell = cell_for_cone(&ctx, &wall).unwrap();
        let (is_gcell, witnesses) = is_geometric_cell(&ctx, &cell, &v).unwrap();
        assert!(!is_gcell);
        assert!(witnesses.is_empty());
    }

    #[test]
    fn census_nef_cones_appear_as_cells() {
        for (v, q) in [
            (quadric_v(), quadric_q()),
            (berchtold_hausen_v(), berchtold_hausen_q()),
        ] {
            let ctx = GkzContext::new(&q).unwrap();
            let dec = gkz_decomposition(&ctx, true).unwrap();
            let census = crate::sfenum::enumerate_sf_with_weights(&v, &q).unwrap();
            for entry in census.entries() {
                let idx = dec.find_cell(&entry.nef_cell.cone).expect("nef cone is a cell");
                // Projectivity matches chamberhood of the located cell.
                assert_eq!(dec.cells()[idx].is_chamber, entry.projective);
            }
        }
    }

    #[test]
    fn rejects_unpointed_effective_cone() {
        // Kernel of [[1,0,1],[0,1,1]] is spanned by (1,1,-1): the effective
        // cone is the whole line, so there is no chamber structure to
        // enumerate. Pointwise cell queries still work.
        let q = IntMatrix::from_rows_i64(&[vec![1, 1, -1]]).unwrap();
        let ctx = GkzContext::new(&q).unwrap();
        assert!(matches!(
            gkz_decomposition(&ctx, true),
            Err(Error::EffectiveConeNotPointed)
        ));
        let cell = gkz_cone_at(&ctx, &RatVector::from_i64(&[1])).unwrap();
        assert_eq!(cell.cone.rays(), &[vec![BigInt::from(1)]]);
    }

    #[test]
    fn antiparallel_ray_census() {
        // Two pairs of opposite rays in the plane: the unique census member
        // is the complete fan with four quadrant cones.
        let v = IntMatrix::from_rows_i64(&[vec![1, 0, -1, 0], vec![0, 1, 0, -1]]).unwrap();
        let census = crate::sfenum::enumerate_sf(&v).unwrap();
        assert_eq!(census.len(), 1);
        let fan = &census.entries()[0].fan;
        assert_eq!(
            fan.max_cone_sets_one_based(),
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]
        );
        assert!(census.entries()[0].projective);
    }

    #[test]
    fn rejects_rank_deficient_and_oversized() {
        let flat = IntMatrix::from_rows_i64(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(GkzContext::new(&flat), Err(Error::RankDeficient(_))));
        let wide =
            IntMatrix::from_rows_i64(&[(0..20).map(|i| i + 1).collect::<Vec<i64>>()]).unwrap();
        assert!(matches!(GkzContext::new(&wide), Err(Error::BudgetExceeded(_))));
        // A degenerate moving cone refuses decomposition.
        let id = IntMatrix::identity(2);
        let ctx = GkzContext::new(&id).unwrap();
        assert!(matches!(
            gkz_decomposition(&ctx, true),
            Err(Error::MovNotFullDimensional)
        ));
    }
}
