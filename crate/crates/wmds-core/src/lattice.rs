//! Exact integer and rational linear algebra: Hermite and Smith normal
//! forms, saturated kernels, Gale duality, column reduction and
//! positivization of weight matrices.
//!
//! Conventions used throughout the crate:
//! * HNF is row-style: `U * A = H` with `U` unimodular, pivots positive,
//!   entries above a pivot reduced into `[0, pivot)`, zero rows at the
//!   bottom.
//! * A Gale dual is the saturated integer kernel, returned in HNF so that
//!   outputs are reproducible. Comparisons against externally given
//!   matrices are made up to row-lattice equality, never entrywise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    /// Builds a matrix from row-major entries. `rows == 0` is permitted for
    /// internal kernel results; `cols` must be positive.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::DimensionMismatch("matrix needs at least one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn from_row_vecs(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        if rows.iter().any(|v| v.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        IntMatrix::new(r, cols, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix { rows: n, cols: n, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<BigInt> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.col_vec(c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![BigInt::zero(); self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let term = a * other.at(k, c);
                    entries[r * other.cols + c] += term;
                }
            }
        }
        Ok(IntMatrix { rows: self.rows, cols: other.cols, entries })
    }

    /// Matrix-vector product `A * x`.
    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Submatrix on the given column indices, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Result<IntMatrix> {
        if idx.iter().any(|&c| c >= self.cols) {
            return Err(Error::DimensionMismatch("column index out of range".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * idx.len());
        for r in 0..self.rows {
            for &c in idx {
                entries.push(self.at(r, c).clone());
            }
        }
        Ok(IntMatrix { rows: self.rows, cols: idx.len(), entries })
    }

    pub fn rank(&self) -> usize {
        hnf(self).0.nonzero_row_count()
    }

    fn nonzero_row_count(&self) -> usize {
        (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|e| !e.is_zero()))
            .count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) + k * self.at(src, c);
            self.set(dst, c, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, dst) + k * self.at(r, src);
            self.set(r, dst, v);
        }
    }
}

/// Vector of arbitrary-precision rationals; `num_rational` keeps each
/// coordinate in reduced form automatically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatVector(coords)
    }

    pub fn from_int(coords: &[BigInt]) -> Self {
        RatVector(coords.iter().map(|c| BigRational::from(c.clone())).collect())
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RatVector(coords.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Dot product against an integer vector.
    pub fn dot_int(&self, v: &[BigInt]) -> BigRational {
        self.0
            .iter()
            .zip(v)
            .map(|(a, b)| a * BigRational::from(b.clone()))
            .sum()
    }

    /// Clears denominators and divides by the content, yielding a primitive
    /// integer vector pointing the same way. Zero stays zero.
    pub fn to_primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![BigInt::zero(); self.0.len()];
        }
        let mut denom_lcm = BigInt::one();
        for c in self.0.iter() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        primitive_vector(&ints)
    }
}

/// Smith normal form data: `left * A * right = d` with both transforms
/// unimodular and the diagonal invariant factors in divisibility order.
#[derive(Clone, Debug)]
pub struct SmithData {
    pub d: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithData {
    /// Diagonal entries, including zeros.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.at(i, i).clone()).collect()
    }
}

/// Divides by the gcd of the entries; the zero vector is returned as-is.
/// Signs are preserved because the gcd is taken positive.
pub fn primitive_vector(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for e in v {
        g = g.gcd(e);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|e| e / &g).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-style Hermite normal form. Returns `(H, U)` with `U * A = H`,
/// `|det U| = 1`, pivots positive, entries above each pivot in `[0, pivot)`
/// and zero rows last.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut pivot_row = 0usize;
    for col in 0..h.cols() {
        if pivot_row == h.rows() {
            break;
        }
        // Euclidean elimination below the pivot position in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..h.rows() {
                if h.at(r, col).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(r),
                    Some(b) if h.at(r, col).abs() < h.at(b, col).abs() => Some(r),
                    keep => keep,
                };
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut any_left = false;
            let p = h.at(pivot_row, col).clone();
            for r in pivot_row + 1..h.rows() {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = h.at(r, col) / &p;
                h.add_row_multiple(r, pivot_row, &-&q);
                u.add_row_multiple(r, pivot_row, &-&q);
                if !h.at(r, col).is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h.at(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.at(r, col).div_floor(&p);
            h.add_row_multiple(r, pivot_row, &-&q);
            u.add_row_multiple(r, pivot_row, &-&q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form via alternating row/column Euclidean reduction.
pub fn snf(a: &IntMatrix) -> SmithData {
    let mut d = a.clone();
    let mut left = IntMatrix::identity(a.rows());
    let mut right = IntMatrix::identity(a.cols());
    let k = d.rows().min(d.cols());
    let mut t = 0usize;
    while t < k {
        // Locate a nonzero entry of minimal magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for r in t..d.rows() {
            for c in t..d.cols() {
                if d.at(r, c).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some((r, c)),
                    Some((br, bc)) if d.at(r, c).abs() < d.at(br, bc).abs() => Some((r, c)),
                    keep => keep,
                };
            }
        }
        let Some((br, bc)) = best else { break };
        d.swap_rows(t, br);
        left.swap_rows(t, br);
        d.swap_cols(t, bc);
        right.swap_cols(t, bc);
        loop {
            // Clear below in column t.
            let mut dirty = false;
            for r in t + 1..d.rows() {
                if d.at(r, t).is_zero() {
                    continue;
                }
                let q = d.at(r, t).div_floor(d.at(t, t));
                d.add_row_multiple(r, t, &-&q);
                left.add_row_multiple(r, t, &-&q);
                if !d.at(r, t).is_zero() {
                    // Remainder takes over the pivot role.
                    d.swap_rows(t, r);
                    left.swap_rows(t, r);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear to the right in row t.
            for c in t + 1..d.cols() {
                if d.at(t, c).is_zero() {
                    continue;
                }
                let q = d.at(t, c).div_floor(d.at(t, t));
                d.add_col_multiple(c, t, &-&q);
                right.add_col_multiple(c, t, &-&q);
                if !d.at(t, c).is_zero() {
                    d.swap_cols(t, c);
                    right.swap_cols(t, c);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let p = d.at(t, t).clone();
            let mut fixed = true;
            'scan: for r in t + 1..d.rows() {
                for c in t + 1..d.cols() {
                    if !(d.at(r, c) % &p).is_zero() {
                        d.add_row_multiple(t, r, &BigInt::one());
                        left.add_row_multiple(t, r, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    SmithData { d, left, right }
}

/// Saturated integer kernel basis with no canonical normalization; the row
/// lattice is exactly `{x in Z^cols : A x = 0}`.
pub fn kernel_basis_raw(a: &IntMatrix) -> IntMatrix {
    let at = a.transpose();
    let (h, u) = hnf(&at);
    let rank = h.nonzero_row_count();
    let kernel_rows: Vec<Vec<BigInt>> = (rank..u.rows()).map(|r| u.row_vec(r)).collect();
    IntMatrix::from_row_vecs(kernel_rows, a.cols()).expect("kernel shape")
}

/// Saturated integer kernel: a `(cols - rank) x cols` matrix `K` whose row
/// lattice is exactly `{x in Z^cols : A x = 0}`. Returned in HNF.
pub fn kernel_saturated(a: &IntMatrix) -> IntMatrix {
    let k = kernel_basis_raw(a);
    let (kh, _) = hnf(&k);
    let nz = kh.nonzero_row_count();
    IntMatrix::from_row_vecs((0..nz).map(|r| kh.row_vec(r)).collect(), a.cols()).expect("hnf shape")
}

/// Gale dual `G(A)`: the saturated kernel in HNF. Errors when the kernel is
/// trivial so callers never silently receive a zero-row matrix.
pub fn gale_dual(a: &IntMatrix) -> Result<IntMatrix> {
    let k = kernel_saturated(a);
    if k.rows() == 0 {
        return Err(Error::TrivialGaleDual);
    }
    Ok(k)
}

/// Canonical HNF basis of the row lattice (nonzero rows only).
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(a);
    let nz = h.nonzero_row_count();
    IntMatrix::from_row_vecs((0..nz).map(|r| h.row_vec(r)).collect(), a.cols()).expect("hnf shape")
}

/// Row-lattice equality (integer span of rows).
pub fn row_lattices_equal(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && row_lattice_basis(a) == row_lattice_basis(b)
}

/// Membership of `v` in the row lattice of `basis` (any matrix; its HNF is
/// used internally).
pub fn row_lattice_contains(basis: &IntMatrix, v: &[BigInt]) -> bool {
    if v.len() != basis.cols() {
        return false;
    }
    let h = row_lattice_basis(basis);
    let mut rem = v.to_vec();
    for r in 0..h.rows() {
        let pivot_col = (0..h.cols()).find(|&c| !h.at(r, c).is_zero()).expect("nonzero row");
        if rem[pivot_col].is_zero() {
            continue;
        }
        let (q, m) = rem[pivot_col].div_rem(h.at(r, pivot_col));
        if !m.is_zero() {
            return false;
        }
        for c in 0..h.cols() {
            rem[c] = &rem[c] - &q * h.at(r, c);
        }
    }
    rem.iter().all(|e| e.is_zero())
}

/// Saturation of the row lattice of `a` inside `Z^cols`, as an HNF basis.
pub fn row_lattice_saturation(a: &IntMatrix) -> IntMatrix {
    kernel_saturated(&kernel_saturated(a))
}

/// Divides every column by the gcd of its entries. Errors on a zero column;
/// the positive gcd preserves entry signs.
pub fn reduce_columns(a: &IntMatrix) -> Result<IntMatrix> {
    let mut out = a.clone();
    for c in 0..a.cols() {
        let col = a.col_vec(c);
        if col.iter().all(|e| e.is_zero()) {
            return Err(Error::ZeroColumn(c + 1));
        }
        let red = primitive_vector(&col);
        for r in 0..a.rows() {
            out.set(r, c, red[r].clone());
        }
    }
    Ok(out)
}

/// Is every column primitive already?
pub fn columns_are_reduced(a: &IntMatrix) -> bool {
    (0..a.cols()).all(|c| {
        let col = a.col_vec(c);
        !col.iter().all(|e| e.is_zero()) && primitive_vector(&col) == col
    })
}

/// Rewrites `Q` by a unimodular row transform so that all entries become
/// nonnegative. Requires the column cone of `Q` to be strongly convex and
/// full-dimensional. Returns `(U, Q')` with `Q' = U * Q >= 0`.
///
/// The construction: pick a primitive interior point `u` of the dual of the
/// column cone, extend it to a lattice basis, then shear the remaining basis
/// rows by multiples of `u` until each lands in the dual cone.
pub fn positivize(q: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    if q.is_nonnegative() {
        return Ok((IntMatrix::identity(q.rows()), q.clone()));
    }
    let col_cone = crate::cone::Cone::from_rays_int(q.rows(), &q.columns())?;
    if !col_cone.is_strongly_convex() {
        return Err(Error::EffectiveConeNotPointed);
    }
    if col_cone.dim() < q.rows() {
        return Err(Error::EffectiveConeNotFullDimensional);
    }
    let dual = col_cone.dual();
    let u0 = dual
        .interior_point()
        .ok_or_else(|| Error::Internal("dual cone of a pointed cone must be full-dimensional".into()))?
        .to_primitive_int();
    // Complete u0 to a lattice basis: find unimodular V with V * u0 = e1,
    // then the rows of (V^{-1})^T form a basis whose first row is u0.
    let r = q.rows();
    let col = IntMatrix::from_row_vecs(u0.iter().map(|e| vec![e.clone()]).collect(), 1)?;
    let mut w_rows: Vec<Vec<BigInt>> = Vec::with_capacity(r);
    {
        let (h, v) = hnf(&col);
        debug_assert!(h.at(0, 0).is_one(), "u0 must be primitive");
        let v_inv = unimodular_inverse(&v)?;
        let w = v_inv.transpose();
        for i in 0..r {
            w_rows.push(w.row_vec(i));
        }
    }
    debug_assert_eq!(w_rows[0], u0);
    // Shear rows 2..r into the dual cone.
    let cols = q.columns();
    let u0_dots: Vec<BigInt> = cols.iter().map(|c| dot(&u0, c)).collect();
    for row in w_rows.iter_mut().skip(1) {
        let mut shift = BigInt::zero();
        for (c, ud) in cols.iter().zip(&u0_dots) {
            if ud.is_zero() {
                // Zero column: nothing to satisfy.
                continue;
            }
            let wd = dot(row, c);
            if wd.is_negative() {
                // Need row + k*u0 with (wd + k*ud) >= 0, i.e. k >= -wd/ud.
                let need = (-&wd).div_ceil(ud);
                if need > shift {
                    shift = need;
                }
            }
        }
        if !shift.is_zero() {
            for (x, u) in row.iter_mut().zip(&u0) {
                *x += &shift * u;
            }
        }
    }
    let u_mat = IntMatrix::from_row_vecs(w_rows, r)?;
    let q_pos = u_mat.mul(q)?;
    debug_assert!(q_pos.is_nonnegative());
    Ok((u_mat, q_pos))
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(u: &IntMatrix) -> Result<IntMatrix> {
    if u.rows() != u.cols() {
        return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
    }
    let (h, t) = hnf(u);
    if h != IntMatrix::identity(u.rows()) {
        return Err(Error::Internal("matrix is not unimodular".into()));
    }
    Ok(t)
}

/// Determinant via fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, k, BigInt::zero());
        }
        prev = m.at(k, k).clone();
    }
    Ok(sign * m.at(n - 1, n - 1).clone())
}

/// Solves `A x = b` over the rationals, if consistent. Returns one solution.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    if b.len() != a.rows() {
        return None;
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> =
                a.row(r).iter().map(|e| BigRational::from(e.clone())).collect();
            row.push(BigRational::from(b[r].clone()));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut pr = 0usize;
    for c in 0..cols {
        let Some(idx) = (pr..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(pr, idx);
        let p = m[pr][c].clone();
        for entry in m[pr].iter_mut() {
            *entry /= p.clone();
        }
        for r in 0..rows {
            if r != pr && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..=cols {
                    let sub = &f * &m[pr][j];
                    m[r][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    for r in pr..rows {
        if !m[r][cols].is_zero() {
            return None; // inconsistent
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows_i64(rows).unwrap()
    }

    /// Independent naive HNF oracle: explicit integer row reduction with the
    /// same normalization rules, written without the pivot-tracking loop of
    /// the production routine.
    fn hnf_oracle(a: &IntMatrix) -> IntMatrix {
        let mut rows: Vec<Vec<BigInt>> = a.row_vecs();
        let cols = a.cols();
        let mut fixed = 0usize;
        for c in 0..cols {
            loop {
                let nonzero: Vec<usize> =
                    (fixed..rows.len()).filter(|&r| !rows[r][c].is_zero()).collect();
                if nonzero.is_empty() {
                    break;
                }
                if nonzero.len() == 1 {
                    rows.swap(fixed, nonzero[0]);
                    break;
                }
                let mut it = nonzero.iter();
                let mut min_r = *it.next().unwrap();
                for &r in it {
                    if rows[r][c].abs() < rows[min_r][c].abs() {
                        min_r = r;
                    }
                }
                let base = rows[min_r].clone();
                for &r in &nonzero {
                    if r == min_r {
                        continue;
                    }
                    let q = &rows[r][c] / &base[c];
                    for j in 0..cols {
                        rows[r][j] = &rows[r][j] - &q * &base[j];
                    }
                }
            }
            if fixed < rows.len() && !rows[fixed][c].is_zero() {
                if rows[fixed][c].is_negative() {
                    for e in rows[fixed].iter_mut() {
                        *e = -e.clone();
                    }
                }
                let p = rows[fixed][c].clone();
                let pivot = rows[fixed].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r >= fixed {
                        continue;
                    }
                    let q = row[c].div_floor(&p);
                    for j in 0..cols {
                        row[j] = &row[j] - &q * &pivot[j];
                    }
                }
                fixed += 1;
            }
        }
        IntMatrix::from_row_vecs(rows, cols).unwrap()
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let (h, u) = hnf(&a);
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_two_by_two() {
        let a = m(&[vec![2, 4], vec![1, 3]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(h, hnf_oracle(&a));
        // Row space check against the reference form [[1,3],[0,2]].
        let reference = m(&[vec![1, 3], vec![0, 2]]);
        assert!(row_lattices_equal(&a, &reference));
        assert!(row_lattices_equal(&h, &reference));
        // Our convention reduces the above-pivot entry into [0, 2).
        assert_eq!(h, m(&[vec![1, 1], vec![0, 2]]));
    }

    #[test]
    fn hnf_transform_is_unimodular() {
        let a = m(&[vec![6, 10, 15], vec![2, 4, 8], vec![0, 5, 5]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
        assert_eq!(h, hnf_oracle(&a));
    }

    #[test]
    fn hnf_rank_of_cells_example_fan_matrix() {
        // 3x6 fan matrix with full rank 3.
        let v = m(&[
            vec![1, 0, 0, 0, -1, 1],
            vec![0, 1, 0, -1, -1, 2],
            vec![0, 0, 1, -1, 0, 1],
        ]);
        assert_eq!(v.rank(), 3);
        assert_eq!(hnf(&v).0.nonzero_row_count(), 3);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(2, 2);
        let s = snf(&a);
        assert!(s.d.is_zero());
        assert_eq!(s.left, IntMatrix::identity(2));
        assert_eq!(s.right, IntMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let s = snf(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.left.mul(&a).unwrap().mul(&s.right).unwrap(), s.d);
        assert_eq!(determinant(&s.left).unwrap().abs(), BigInt::one());
        assert_eq!(determinant(&s.right).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = m(&[vec![4, 6, 10], vec![2, 8, 6], vec![6, 2, 4]]);
        let s = snf(&a);
        assert_eq!(s.left.mul(&a).unwrap().mul(&s.right).unwrap(), s.d);
        let f = s.invariant_factors();
        for w in f.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {:?}", f);
            }
        }
    }

    /// gcd-of-minors oracle for invariant factors: d_1*...*d_k equals the
    /// gcd of all k x k minors.
    fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }
        let mut g = BigInt::zero();
        for rs in combos(a.rows(), k) {
            for cs in combos(a.cols(), k) {
                let entries: Vec<BigInt> = rs
                    .iter()
                    .flat_map(|&r| cs.iter().map(move |&c| a.at(r, c).clone()))
                    .collect();
                let sub = IntMatrix::new(k, k, entries).unwrap();
                g = g.gcd(&determinant(&sub).unwrap());
            }
        }
        g
    }

    #[test]
    fn snf_gcd_of_minors_on_quadric_weights() {
        // Weight matrix of the three-fold quadric example; the grading is
        // surjective onto Z^2 so all invariant factors are 1.
        let q = m(&[vec![1, 2, 1, 1, 0], vec![0, 1, 1, 2, 1]]);
        let s = snf(&q);
        assert_eq!(s.invariant_factors(), vec![BigInt::one(), BigInt::one()]);
        assert_eq!(minor_gcd(&q, 1), BigInt::one());
        assert_eq!(minor_gcd(&q, 2), BigInt::one());
    }

    #[test]
    fn kernel_simple_symmetry() {
        let a = m(&[vec![1, 1]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.rows(), 1);
        let r = k.row_vec(0);
        assert!(r == vec![BigInt::from(1), BigInt::from(-1)] || r == vec![BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn kernel_is_saturated() {
        let a = m(&[vec![2, 2]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.rows(), 1);
        let r = k.row_vec(0);
        assert!(r == vec![BigInt::from(1), BigInt::from(-1)] || r == vec![BigInt::from(-1), BigInt::from(1)]);
        let s = snf(&k);
        assert!(s.invariant_factors().iter().all(|f| f.is_one()));
    }

    #[test]
    fn kernel_of_noncompletable_fan_matrix_matches_weights() {
        let v = m(&[
            vec![1, 0, 0, 0, 0, -1, 1],
            vec![0, 1, 0, 0, -1, -1, 2],
            vec![0, 0, 1, 0, -1, 0, 1],
            vec![0, 0, 0, 1, -1, -1, 1],
        ]);
        let q = m(&[
            vec![1, 1, 0, 1, 0, 1, 0],
            vec![0, 1, 1, 1, 1, 0, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ]);
        let k = kernel_saturated(&v);
        // K * V^T = 0 and the row lattices agree.
        let prod = k.mul(&v.transpose()).unwrap();
        assert!(prod.is_zero());
        assert!(row_lattices_equal(&k, &q));
    }

    #[test]
    fn gale_dual_requires_nontrivial_kernel() {
        let a = IntMatrix::identity(2);
        assert!(matches!(gale_dual(&a), Err(Error::TrivialGaleDual)));
    }

    #[test]
    fn gale_dual_of_quadric_fan_matrix() {
        let v = m(&[
            vec![1, 0, 0, -1, 2],
            vec![0, 1, 0, -2, 3],
            vec![0, 0, 1, -1, 1],
        ]);
        let q = m(&[vec![1, 2, 1, 1, 0], vec![0, 1, 1, 2, 1]]);
        let g = gale_dual(&v).unwrap();
        assert!(g.mul(&v.transpose()).unwrap().is_zero());
        assert!(row_lattices_equal(&g, &q));
    }

    #[test]
    fn gale_dual_round_trip_saturates() {
        let v = m(&[
            vec![1, 0, 0, 0, -1, 1],
            vec![0, 1, 0, -1, -1, 2],
            vec![0, 0, 1, -1, 0, 1],
        ]);
        let g = gale_dual(&v).unwrap();
        let gg = gale_dual(&g).unwrap();
        assert!(row_lattices_equal(&gg, &row_lattice_saturation(&v)));
        // V already saturated here, so the round trip recovers its lattice.
        assert!(row_lattices_equal(&gg, &v));
    }

    #[test]
    fn reduce_columns_examples() {
        let a = m(&[vec![2], vec![4]]);
        assert_eq!(reduce_columns(&a).unwrap(), m(&[vec![1], vec![2]]));
        let b = m(&[vec![3, 0], vec![0, -6]]);
        assert_eq!(reduce_columns(&b).unwrap(), m(&[vec![1, 0], vec![0, -1]]));
        // Idempotence.
        let r = reduce_columns(&b).unwrap();
        assert_eq!(reduce_columns(&r).unwrap(), r);
        let z = m(&[vec![0, 1], vec![0, 2]]);
        assert!(matches!(reduce_columns(&z), Err(Error::ZeroColumn(1))));
    }

    #[test]
    fn positivize_nonnegative_is_identity() {
        let q = m(&[vec![1, 1, 0, 1, 0, 1, 0], vec![0, 1, 1, 1, 1, 0, 0], vec![0, 0, 0, 1, 1, 1, 1]]);
        let (u, qp) = positivize(&q).unwrap();
        assert_eq!(u, IntMatrix::identity(3));
        assert_eq!(qp, q);
    }

    #[test]
    fn positivize_recovers_nonnegative_form() {
        // Start from a nonnegative matrix, scramble by a unimodular transform,
        // and check that positivize finds some nonnegative form again with the
        // same row lattice.
        let base = m(&[vec![1, 0, 2, 1], vec![0, 1, 1, 3]]);
        let scramble = m(&[vec![1, -1], vec![0, 1]]);
        let q = scramble.mul(&base).unwrap();
        assert!(!q.is_nonnegative());
        let (u, qp) = positivize(&q).unwrap();
        assert!(qp.is_nonnegative());
        assert_eq!(u.mul(&q).unwrap(), qp);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
        assert!(row_lattices_equal(&q, &qp));
    }

    #[test]
    fn positivize_rejects_unpointed() {
        let q = m(&[vec![1, -1]]);
        assert!(matches!(positivize(&q), Err(Error::EffectiveConeNotPointed)));
    }

    #[test]
    fn solve_rational_works() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        let x = solve_rational(&a, &[BigInt::from(5), BigInt::from(3)]).unwrap();
        assert_eq!(x[0], BigRational::from(BigInt::from(2)));
        assert_eq!(x[1], BigRational::from(BigInt::from(1)));
        let b = m(&[vec![1, 1], vec![1, 1]]);
        assert!(solve_rational(&b, &[BigInt::from(0), BigInt::from(1)]).is_none());
    }
}
