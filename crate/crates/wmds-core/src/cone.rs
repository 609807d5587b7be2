//! Exact rational polyhedral cones with dual (generator + halfspace)
//! descriptions.
//!
//! Both descriptions are kept canonical: extreme rays are primitive integer
//! vectors reduced modulo the lineality lattice and sorted lexicographically;
//! facet normals are primitive, reduced modulo the span-orthogonal lattice
//! and sorted; the lineality and span-orthogonal lattices are stored as HNF
//! bases. Equality of cones is therefore plain structural equality, which
//! doubles as a hashing key when deduplicating GKZ cells.
//!
//! Conversions between descriptions run through a single brute-force engine
//! (`system_generators`) that enumerates extreme rays of `{x : A x >= 0}`
//! from maximal-corank constraint subsets. This is exponential in principle
//! but exact, and entirely adequate at desk scale (m <= ~12, r <= ~5).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

use crate::lattice::{dot, kernel_basis_raw, kernel_saturated, primitive_vector, IntMatrix, RatVector};
use crate::{Error, Result};

/// Primitive integer halfspace normal; the halfspace is `{x : <n, x> >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
}

impl Halfspace {
    pub fn new(normal: Vec<BigInt>) -> Result<Self> {
        if normal.iter().all(|e| e.is_zero()) {
            return Err(Error::Input("halfspace normal must be nonzero".into()));
        }
        Ok(Halfspace { normal: primitive_vector(&normal) })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cone {
    ambient_dim: usize,
    /// Extreme rays of the pointed quotient, canonical.
    rays: Vec<Vec<BigInt>>,
    /// HNF basis of the lineality lattice.
    lineality: IntMatrix,
    /// Facet normals within the span, canonical.
    facets: Vec<Vec<BigInt>>,
    /// HNF basis of the lattice orthogonal to the span; its rows are the
    /// equations cutting out the linear span.
    span_equations: IntMatrix,
}

/// Reduces `v` modulo the rational span of the HNF basis `basis`, then takes
/// the primitive integer representative. Deterministic: pivot coordinates of
/// the basis are zeroed by forward elimination.
fn reduce_mod_lattice(v: &[BigInt], basis: &IntMatrix) -> Vec<BigInt> {
    if basis.rows() == 0 {
        return primitive_vector(v);
    }
    let mut w: Vec<BigRational> =
        v.iter().map(|e| BigRational::from(e.clone())).collect();
    for r in 0..basis.rows() {
        let pivot_col = (0..basis.cols())
            .find(|&c| !basis.at(r, c).is_zero())
            .expect("HNF basis rows are nonzero");
        if w[pivot_col].is_zero() {
            continue;
        }
        let coef = &w[pivot_col] / BigRational::from(basis.at(r, pivot_col).clone());
        for c in 0..basis.cols() {
            let sub = &coef * BigRational::from(basis.at(r, c).clone());
            w[c] -= sub;
        }
    }
    RatVector::new(w).to_primitive_int()
}

/// Extreme rays and lineality of `{x in R^dim : a . x >= 0 for all a}`.
///
/// Returns `(lineality_basis, rays)` with rays canonical with respect to the
/// returned lineality. Every size-(dim - lineality - 1) constraint subset of
/// full rank pins down at most one candidate direction; sign feasibility
/// decides whether it enters, and any survivor is automatically extreme.
fn system_generators(constraints: &[Vec<BigInt>], dim: usize) -> (IntMatrix, Vec<Vec<BigInt>>) {
    let mut normals: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for c in constraints {
        if c.iter().all(|e| e.is_zero()) {
            continue;
        }
        normals.insert(primitive_vector(c));
    }
    let normals: Vec<Vec<BigInt>> = normals.into_iter().collect();
    if normals.is_empty() {
        return (IntMatrix::identity(dim), Vec::new());
    }
    let a = IntMatrix::from_row_vecs(normals.clone(), dim).expect("constraint shape");
    let lineality = kernel_saturated(&a);
    let lin_dim = lineality.rows();
    debug_assert!(lin_dim < dim, "nonzero constraints force a proper lineality");
    let target = dim - lin_dim - 1;
    let k = normals.len();
    if k < target {
        return (lineality, Vec::new());
    }
    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for subset in combinations(k, target) {
        // Kernel of the selected constraint rows.
        let w = if subset.is_empty() {
            IntMatrix::identity(dim)
        } else {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| normals[i].clone()).collect();
            kernel_basis_raw(&IntMatrix::from_row_vecs(rows, dim).expect("subset shape"))
        };
        if w.rows() != lin_dim + 1 {
            continue;
        }
        let mut candidate: Option<Vec<BigInt>> = None;
        for r in 0..w.rows() {
            let red = reduce_mod_lattice(&w.row_vec(r), &lineality);
            if red.iter().any(|e| !e.is_zero()) {
                candidate = Some(red);
                break;
            }
        }
        let Some(v) = candidate else { continue };
        let mut pos = true;
        let mut neg = true;
        for n in &normals {
            let d = dot(n, &v);
            if d.is_negative() {
                pos = false;
            }
            if d.is_positive() {
                neg = false;
            }
            if !pos && !neg {
                break;
            }
        }
        if pos {
            rays.insert(v);
        } else if neg {
            rays.insert(v.iter().map(|e| -e).collect());
        }
    }
    (lineality, rays.into_iter().collect())
}

/// All `choose`-element subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn combinations(n: usize, choose: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if choose > n {
        return out;
    }
    let mut cur: Vec<usize> = Vec::with_capacity(choose);
    fn rec(start: usize, n: usize, choose: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == choose {
            out.push(cur.clone());
            return;
        }
        let remaining = choose - cur.len();
        for i in start..=n.saturating_sub(remaining) {
            cur.push(i);
            rec(i + 1, n, choose, cur, out);
            cur.pop();
        }
    }
    rec(0, n, choose, &mut cur, &mut out);
    out
}

impl Cone {
    /// Cone spanned by integer vectors; the empty list yields the zero cone.
    pub fn from_rays_int(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator length {} vs ambient dimension {}",
                    g.len(),
                    ambient_dim
                )));
            }
        }
        Ok(Self::from_generators_and_lines(ambient_dim, generators, &[]))
    }

    pub fn from_rays_i64(ambient_dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let gens: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rays_int(ambient_dim, &gens)
    }

    /// Cone generated by `generators` together with the lines through
    /// `lines`.
    pub fn from_generators_and_lines(
        ambient_dim: usize,
        generators: &[Vec<BigInt>],
        lines: &[Vec<BigInt>],
    ) -> Self {
        // Dual side: constraints on y are the generators and +/- lines.
        let mut constraints: Vec<Vec<BigInt>> = Vec::new();
        for g in generators {
            constraints.push(g.clone());
        }
        for l in lines {
            constraints.push(l.clone());
            constraints.push(l.iter().map(|e| -e).collect());
        }
        let (span_perp, facets) = system_generators(&constraints, ambient_dim);
        Self::from_canonical_constraints(ambient_dim, facets, span_perp)
    }

    /// Cone `{x : n . x >= 0 for n in inequalities, e . x = 0 for e in
    /// equations}`.
    pub fn from_constraints(
        ambient_dim: usize,
        inequalities: &[Vec<BigInt>],
        equations: &[Vec<BigInt>],
    ) -> Result<Self> {
        for c in inequalities.iter().chain(equations) {
            if c.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "constraint length {} vs ambient dimension {}",
                    c.len(),
                    ambient_dim
                )));
            }
        }
        let mut all: Vec<Vec<BigInt>> = inequalities.to_vec();
        for e in equations {
            all.push(e.clone());
            all.push(e.iter().map(|x| -x).collect());
        }
        let (lineality, rays) = system_generators(&all, ambient_dim);
        let mut lines: Vec<Vec<BigInt>> = Vec::new();
        for r in 0..lineality.rows() {
            lines.push(lineality.row_vec(r));
        }
        Ok(Self::from_generators_and_lines(ambient_dim, &rays, &lines))
    }

    /// Assembles the cone from a facet description that is already minimal,
    /// recomputing the generator side.
    fn from_canonical_constraints(
        ambient_dim: usize,
        facets: Vec<Vec<BigInt>>,
        span_perp: IntMatrix,
    ) -> Self {
        let mut constraints: Vec<Vec<BigInt>> = facets.clone();
        for r in 0..span_perp.rows() {
            let row = span_perp.row_vec(r);
            constraints.push(row.iter().map(|e| -e).collect());
            constraints.push(row);
        }
        let (lineality, rays) = system_generators(&constraints, ambient_dim);
        let cone = Cone { ambient_dim, rays, lineality, facets, span_equations: span_perp };
        debug_assert!(cone.self_check());
        cone
    }

    fn self_check(&self) -> bool {
        for ray in &self.rays {
            for f in &self.facets {
                if dot(f, ray).is_negative() {
                    return false;
                }
            }
            for e in 0..self.span_equations.rows() {
                if !dot(&self.span_equations.row_vec(e), ray).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Cone {
            ambient_dim,
            rays: Vec::new(),
            lineality: IntMatrix::from_row_vecs(Vec::new(), ambient_dim).expect("empty"),
            facets: Vec::new(),
            span_equations: IntMatrix::identity(ambient_dim),
        }
    }

    pub fn full_space(ambient_dim: usize) -> Self {
        Cone {
            ambient_dim,
            rays: Vec::new(),
            lineality: IntMatrix::identity(ambient_dim),
            facets: Vec::new(),
            span_equations: IntMatrix::from_row_vecs(Vec::new(), ambient_dim).expect("empty"),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.span_equations.rows()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.rows()
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.rows() == 0
    }

    pub fn is_zero_cone(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full_space(&self) -> bool {
        self.lineality_dim() == self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    pub fn span_equation_rows(&self) -> Vec<Vec<BigInt>> {
        self.span_equations.row_vecs()
    }

    pub fn lineality_basis(&self) -> Vec<Vec<BigInt>> {
        self.lineality.row_vecs()
    }

    /// Generators: extreme rays plus both directions of the lineality basis.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut out = self.rays.clone();
        for r in 0..self.lineality.rows() {
            let row = self.lineality.row_vec(r);
            out.push(row.iter().map(|e| -e).collect());
            out.push(row);
        }
        out
    }

    fn check_dim(&self, w: &RatVector) -> Result<()> {
        if w.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "point dimension {} vs ambient dimension {}",
                w.dim(),
                self.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn contains(&self, w: &RatVector) -> Result<bool> {
        self.check_dim(w)?;
        for e in 0..self.span_equations.rows() {
            if !w.dot_int(&self.span_equations.row_vec(e)).is_zero() {
                return Ok(false);
            }
        }
        for f in &self.facets {
            if w.dot_int(f).is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        self.contains(&RatVector::from_int(v)).unwrap_or(false)
    }

    /// Relative interior membership: inside the span and strictly inside
    /// every facet.
    pub fn relint_contains(&self, w: &RatVector) -> Result<bool> {
        self.check_dim(w)?;
        for e in 0..self.span_equations.rows() {
            if !w.dot_int(&self.span_equations.row_vec(e)).is_zero() {
                return Ok(false);
            }
        }
        for f in &self.facets {
            if !w.dot_int(f).is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A point in the relative interior: the sum of the extreme rays (the
    /// zero vector when the cone is a linear subspace).
    pub fn relint_point(&self) -> RatVector {
        let mut sum = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (s, e) in sum.iter_mut().zip(r) {
                *s += e;
            }
        }
        RatVector::from_int(&sum)
    }

    /// A topological interior point, available only for full-dimensional
    /// cones.
    pub fn interior_point(&self) -> Option<RatVector> {
        if self.dim() == self.ambient_dim {
            Some(self.relint_point())
        } else {
            None
        }
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "intersecting cones in dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.span_equation_rows();
        eqs.extend(other.span_equation_rows());
        Cone::from_constraints(self.ambient_dim, &ineqs, &eqs)
    }

    /// The dual cone. Thanks to the canonical double description this is a
    /// pure exchange of roles.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient_dim: self.ambient_dim,
            rays: self.facets.clone(),
            lineality: self.span_equations.clone(),
            facets: self.rays.clone(),
            span_equations: self.lineality.clone(),
        }
    }

    /// Set inclusion: every generator of `self` satisfies the constraints of
    /// `other`.
    pub fn is_subset_of(&self, other: &Cone) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        self.generators().iter().all(|g| other.contains_int(g))
    }

    /// Set equality through mutual inclusion; equivalent to `==` on the
    /// canonical forms, kept as an independent route for verification.
    pub fn equals_by_mutual_inclusion(&self, other: &Cone) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    /// The face of `self` obtained by turning the given facet normals into
    /// equations.
    pub fn face_cut_by(&self, tight: &[Vec<BigInt>]) -> Result<Cone> {
        let mut eqs = self.span_equation_rows();
        eqs.extend(tight.iter().cloned());
        Cone::from_constraints(self.ambient_dim, &self.facets, &eqs)
    }

    /// All faces, including the cone itself and its minimal face.
    pub fn all_faces(&self) -> Vec<Cone> {
        let mut seen: BTreeSet<Vec<Vec<BigInt>>> = BTreeSet::new();
        let mut out: Vec<Cone> = Vec::new();
        let mut queue: Vec<Cone> = vec![self.clone()];
        while let Some(f) = queue.pop() {
            let key = face_key(&f);
            if !seen.insert(key) {
                continue;
            }
            for h in f.facets.clone() {
                let child = f.face_cut_by(&[h]).expect("same ambient dimension");
                queue.push(child);
            }
            out.push(f);
        }
        out.sort_by_key(face_key);
        out
    }

    /// Faces of the given dimension.
    pub fn faces(&self, k: usize) -> Vec<Cone> {
        self.all_faces().into_iter().filter(|f| f.dim() == k).collect()
    }

    /// Is `face` a face of `self`? Verified by re-intersection with the
    /// supporting constraints.
    pub fn is_face(face: &Cone, of: &Cone) -> bool {
        if face.ambient_dim != of.ambient_dim || !face.is_subset_of(of) {
            return false;
        }
        let gens = face.generators();
        let probe = face.relint_point();
        let tight: Vec<Vec<BigInt>> = of
            .facets
            .iter()
            .filter(|h| gens.iter().all(|g| dot(h, g).is_zero()) && probe.dot_int(h).is_zero())
            .cloned()
            .collect();
        match of.face_cut_by(&tight) {
            Ok(candidate) => candidate == *face,
            Err(_) => false,
        }
    }
}

/// Canonical sorting/identity key of a cone.
fn face_key(c: &Cone) -> Vec<Vec<BigInt>> {
    let mut key = vec![vec![BigInt::from(c.dim() as i64)]];
    key.extend(c.rays.iter().cloned());
    key.push(vec![]);
    key.extend(c.lineality.row_vecs());
    key.push(vec![]);
    key.extend(c.span_equations.row_vecs());
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn positive_orthant_facets() {
        let c = Cone::from_rays_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.is_strongly_convex());
        assert_eq!(c.facet_normals(), &[bi(&[0, 1]), bi(&[1, 0])]);
        assert_eq!(c.rays(), &[bi(&[0, 1]), bi(&[1, 0])]);
    }

    #[test]
    fn quadric_nef_cone_generators() {
        // Columns q2 = (2,1) and q4 = (1,2) of the quadric example span the
        // nef-and-moving cone.
        let c = Cone::from_rays_i64(2, &[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.rays(), &[bi(&[1, 2]), bi(&[2, 1])]);
        assert!(c.contains(&RatVector::from_i64(&[1, 1])).unwrap());
        assert!(!c.contains(&RatVector::from_i64(&[1, 0])).unwrap());
    }

    #[test]
    fn line_has_lineality() {
        let c = Cone::from_rays_i64(2, &[vec![1, 0], vec![-1, 0]]).unwrap();
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(c.dim(), 1);
        assert!(c.rays().is_empty());
        assert!(!c.is_strongly_convex());
    }

    #[test]
    fn zero_cone_and_full_space() {
        let z = Cone::from_rays_i64(3, &[]).unwrap();
        assert_eq!(z, Cone::zero(3));
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&RatVector::from_i64(&[0, 0, 0])).unwrap());
        assert!(z.relint_contains(&RatVector::from_i64(&[0, 0, 0])).unwrap());
        assert!(!z.contains(&RatVector::from_i64(&[1, 0, 0])).unwrap());

        let f = Cone::from_rays_i64(2, &[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert_eq!(f, Cone::full_space(2));
        assert_eq!(f.dim(), 2);
        assert_eq!(f.lineality_dim(), 2);
    }

    #[test]
    fn membership_and_relint() {
        let orthant = Cone::from_rays_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(orthant.contains(&RatVector::from_i64(&[1, 1])).unwrap());
        assert!(orthant.relint_contains(&RatVector::from_i64(&[1, 1])).unwrap());
        assert!(!orthant.relint_contains(&RatVector::from_i64(&[1, 0])).unwrap());
        // A ray's relative interior is its open half-line.
        let ray = Cone::from_rays_i64(3, &[vec![1, 1, 1]]).unwrap();
        assert!(ray.relint_contains(&RatVector::from_i64(&[2, 2, 2])).unwrap());
        assert!(!ray.relint_contains(&RatVector::from_i64(&[0, 0, 0])).unwrap());
        assert!(!ray.relint_contains(&RatVector::from_i64(&[1, 1, 0])).unwrap());
        // Dimension mismatch is an error, not false.
        assert!(ray.contains(&RatVector::from_i64(&[1, 1])).is_err());
    }

    #[test]
    fn relint_subset_of_membership() {
        let c = Cone::from_rays_i64(3, &[vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]).unwrap();
        let pts = [vec![1i64, 0, 0], vec![3, 2, 1], vec![1, 1, 1], vec![0, 0, 0], vec![-1, 0, 0]];
        for p in pts {
            let w = RatVector::from_i64(&p);
            if c.relint_contains(&w).unwrap() {
                assert!(c.contains(&w).unwrap());
            }
        }
    }

    #[test]
    fn intersect_idempotent_and_commutative() {
        let a = Cone::from_rays_i64(2, &[vec![2, 1], vec![1, 2]]).unwrap();
        let b = Cone::from_rays_i64(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
        let ab = a.intersect(&b).unwrap();
        let ba = b.intersect(&a).unwrap();
        assert_eq!(ab, ba);
        // a intersect b is the sector between (1,1) and (1,2).
        assert_eq!(ab.rays(), &[bi(&[1, 1]), bi(&[1, 2])]);
    }

    #[test]
    fn double_description_round_trip() {
        let c = Cone::from_rays_i64(3, &[vec![1, 0, 0], vec![1, 2, 0], vec![1, 0, 3], vec![1, 2, 3]]).unwrap();
        let rebuilt = Cone::from_constraints(3, c.facet_normals(), &c.span_equation_rows()).unwrap();
        assert_eq!(c, rebuilt);
        assert!(c.equals_by_mutual_inclusion(&rebuilt));
        // Dual of dual is the original.
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = Cone::from_rays_i64(2, &[vec![1, 0], vec![1, 1], vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(c.rays(), &[bi(&[0, 1]), bi(&[1, 0])]);
    }

    #[test]
    fn faces_of_quadrant() {
        let c = Cone::from_rays_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let f1 = c.faces(1);
        assert_eq!(f1.len(), 2);
        let expected: Vec<Cone> = vec![
            Cone::from_rays_i64(2, &[vec![1, 0]]).unwrap(),
            Cone::from_rays_i64(2, &[vec![0, 1]]).unwrap(),
        ];
        for e in &expected {
            assert!(f1.contains(e));
            assert!(Cone::is_face(e, &c));
        }
        assert_eq!(c.faces(0), vec![Cone::zero(2)]);
        assert_eq!(c.faces(2), vec![c.clone()]);
        // Non-faces are rejected.
        let inner = Cone::from_rays_i64(2, &[vec![1, 1]]).unwrap();
        assert!(!Cone::is_face(&inner, &c));
    }

    #[test]
    fn dim_of_orthant_r3() {
        let c = Cone::from_rays_i64(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn span_equations_of_lower_dimensional_cone() {
        let c = Cone::from_rays_i64(3, &[vec![1, 1, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.span_equations.rows(), 1);
        // The span is z = 0.
        assert_eq!(c.span_equation_rows()[0], bi(&[0, 0, 1]));
    }

    #[test]
    fn interior_point_requires_full_dim() {
        let c = Cone::from_rays_i64(3, &[vec![1, 1, 0], vec![0, 1, 0]]).unwrap();
        assert!(c.interior_point().is_none());
        let w = c.relint_point();
        assert!(c.relint_contains(&w).unwrap());
    }

    #[test]
    fn dual_of_orthant() {
        let c = Cone::from_rays_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.dual(), c);
        let narrow = Cone::from_rays_i64(2, &[vec![2, 1], vec![1, 2]]).unwrap();
        let d = narrow.dual();
        assert_eq!(d.rays(), &[bi(&[-1, 2]), bi(&[2, -1])]);
    }
}
