//! SVG cross-sections of GKZ decompositions: for rank 3 the chambers are
//! intersected with the affine hyperplane x1 + x2 + x3 = 1 and drawn as
//! labelled polygons; for rank 2 the section is a segment with chamber
//! intervals. All coordinates are exact rationals rendered at fixed
//! precision, so output is byte-identical across runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cli::doc::InputDocument;
use crate::cone::Cone;
use crate::fanbunch::{eff_cone, nef_cone};
use crate::gkz::{self, GkzContext};
use crate::lattice::{positivize, IntMatrix};
use crate::wmds::anticanonical_class;
use crate::{Error, Result};

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b4", "#59a14f", "#edc948", "#b07aa1", "#9c755f",
];

const SIZE: i64 = 640;
const MARGIN: i64 = 48;

/// Renders the section plot for the document's weight matrix. Refuses
/// outside rank 2 and 3.
pub fn plot_section(doc: &InputDocument) -> Result<String> {
    let q = &doc.weight_matrix;
    match q.rows() {
        2 => plot_rank2(doc),
        3 => plot_rank3(doc),
        r => Err(Error::Unsupported(format!(
            "section plots cover rank 2 and 3, the document has rank {r}"
        ))),
    }
}

/// Fixed-precision decimal rendering of an exact rational (4 places,
/// round-half-up; all plot coordinates are nonnegative).
fn dec(value: &BigRational) -> String {
    let scale = BigInt::from(10_000);
    let scaled = value * BigRational::from(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let shifted = if scaled.is_negative() { scaled - half } else { scaled + half };
    let q = shifted.to_integer();
    let negative = q.is_negative();
    let q = q.abs();
    let int_part = &q / &scale;
    let frac = &q % &scale;
    format!("{}{}.{:04}", if negative { "-" } else { "" }, int_part, frac)
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Maps a unit-square point to canvas coordinates (y flipped).
fn canvas(u: &BigRational, v: &BigRational) -> (BigRational, BigRational) {
    let span = rat(SIZE - 2 * MARGIN);
    let x = rat(MARGIN) + u * &span;
    let y = rat(MARGIN) + (rat(1) - v) * &span;
    (x, y)
}

/// The plotting weight matrix and the transform applied: positivized when
/// the document's weights carry negative entries.
fn plotting_transform(q: &IntMatrix) -> Result<IntMatrix> {
    if q.is_nonnegative() {
        Ok(IntMatrix::identity(q.rows()))
    } else {
        Ok(positivize(q)?.0)
    }
}

/// Section coordinates of an integer ray: normalize to coordinate sum 1 and
/// keep the last r-1 coordinates.
fn section_point(transform: &IntMatrix, ray: &[BigInt]) -> Result<Vec<BigRational>> {
    let moved = transform.mul_vec(ray)?;
    let total: BigInt = moved.iter().sum();
    if !total.is_positive() {
        return Err(Error::Internal(
            "positivized ray must have positive coordinate sum".into(),
        ));
    }
    Ok(moved
        .iter()
        .skip(1)
        .map(|c| BigRational::new(c.clone(), total.clone()))
        .collect())
}

/// Exact counterclockwise ordering of 2-D rational points around their
/// centroid.
fn sort_ccw(points: &mut [Vec<BigRational>]) {
    let n = BigRational::from(BigInt::from(points.len() as i64));
    let cx: BigRational = points.iter().map(|p| p[0].clone()).sum::<BigRational>() / n.clone();
    let cy: BigRational = points.iter().map(|p| p[1].clone()).sum::<BigRational>() / n;
    let half_plane = |dx: &BigRational, dy: &BigRational| -> u8 {
        // 0: upper half (dy > 0, or dy = 0 and dx > 0); 1: lower half.
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    points.sort_by(|a, b| {
        let (ax, ay) = (&a[0] - &cx, &a[1] - &cy);
        let (bx, by) = (&b[0] - &cx, &b[1] - &cy);
        let ha = half_plane(&ax, &ay);
        let hb = half_plane(&bx, &by);
        if ha != hb {
            return ha.cmp(&hb);
        }
        // Same half-plane: compare by cross product.
        let cross = &ax * &by - &ay * &bx;
        if cross.is_positive() {
            std::cmp::Ordering::Less
        } else if cross.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            // Collinear: nearer point first for determinism.
            (ax.clone() * ax + ay.clone() * ay)
                .cmp(&(bx.clone() * bx + by.clone() * by))
        }
    });
}

fn polygon_path(points: &[Vec<BigRational>]) -> String {
    points
        .iter()
        .map(|p| {
            let (x, y) = canvas(&p[0], &p[1]);
            format!("{},{}", dec(&x), dec(&y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn centroid(points: &[Vec<BigRational>]) -> (BigRational, BigRational) {
    let n = BigRational::from(BigInt::from(points.len() as i64));
    let cx: BigRational = points.iter().map(|p| p[0].clone()).sum::<BigRational>() / n.clone();
    let cy: BigRational = points.iter().map(|p| p[1].clone()).sum::<BigRational>() / n;
    (cx, cy)
}

fn plot_rank3(doc: &InputDocument) -> Result<String> {
    let q = &doc.weight_matrix;
    let transform = plotting_transform(q)?;
    let ctx = GkzContext::new(q)?;
    let chambers = gkz::chambers(&ctx)?;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#ffffff\"/>\n"
    ));
    // Outline of the effective cone's section.
    let eff = eff_cone(q);
    let mut eff_pts: Vec<Vec<BigRational>> = eff
        .rays()
        .iter()
        .map(|r| section_point(&transform, r))
        .collect::<Result<Vec<_>>>()?;
    sort_ccw(&mut eff_pts);
    svg.push_str(&format!(
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
        polygon_path(&eff_pts)
    ));
    // Chamber polygons with labels.
    for (i, ch) in chambers.iter().enumerate() {
        let mut pts: Vec<Vec<BigRational>> = ch
            .cone
            .rays()
            .iter()
            .map(|r| section_point(&transform, r))
            .collect::<Result<Vec<_>>>()?;
        sort_ccw(&mut pts);
        let color = PALETTE[i % PALETTE.len()];
        svg.push_str(&format!(
            "<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.55\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
            polygon_path(&pts),
            color
        ));
        let (cx, cy) = centroid(&pts);
        let (x, y) = canvas(&cx, &cy);
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"18\" text-anchor=\"middle\">{}</text>\n",
            dec(&x),
            dec(&y),
            i + 1
        ));
    }
    // Nef cone of the ambient fan, when one is present.
    if doc.has_ambient_fan() {
        let fan = doc.ambient_fan()?;
        let nef = nef_cone(&fan, q)?;
        render_marked_cone(&nef, &transform, "nef", &mut svg)?;
    }
    // Anticanonical point.
    let ac = anticanonical_class(&doc.presentation);
    let ac_pt = section_point(&transform, &ac.free)?;
    let (x, y) = canvas(&ac_pt[0], &ac_pt[1]);
    svg.push_str(&format!(
        "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#000000\"/>\n",
        dec(&x),
        dec(&y)
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"start\">-K</text>\n",
        dec(&(x + rat(8))),
        dec(&(y - rat(6)))
    ));
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn render_marked_cone(
    cone: &Cone,
    transform: &IntMatrix,
    label: &str,
    svg: &mut String,
) -> Result<()> {
    if cone.dim() == 0 {
        return Ok(());
    }
    let mut pts: Vec<Vec<BigRational>> = cone
        .rays()
        .iter()
        .map(|r| section_point(transform, r))
        .collect::<Result<Vec<_>>>()?;
    if pts.is_empty() {
        return Ok(());
    }
    if pts.len() == 1 {
        let (x, y) = canvas(&pts[0][0], &pts[0][1]);
        svg.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n",
            dec(&x),
            dec(&y)
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"start\">{}</text>\n",
            dec(&(x + rat(9))),
            dec(&(y + rat(12))),
            label
        ));
    } else {
        sort_ccw(&mut pts);
        svg.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n",
            polygon_path(&pts)
        ));
        let (cx, cy) = centroid(&pts);
        let (x, y) = canvas(&cx, &cy);
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            dec(&x),
            dec(&(y + rat(24))),
            label
        ));
    }
    Ok(())
}

fn plot_rank2(doc: &InputDocument) -> Result<String> {
    let q = &doc.weight_matrix;
    let transform = plotting_transform(q)?;
    let ctx = GkzContext::new(q)?;
    let chambers = gkz::chambers(&ctx)?;
    let mut svg = String::new();
    let height = 240i64;
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{height}\" viewBox=\"0 0 {SIZE} {height}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    let baseline = rat(150);
    let to_x = |t: &BigRational| rat(MARGIN) + t * rat(SIZE - 2 * MARGIN);
    // Effective segment.
    let eff = eff_cone(q);
    let mut eff_ts: Vec<BigRational> = eff
        .rays()
        .iter()
        .map(|r| section_point(&transform, r).map(|p| p[0].clone()))
        .collect::<Result<Vec<_>>>()?;
    eff_ts.sort();
    if let (Some(a), Some(b)) = (eff_ts.first(), eff_ts.last()) {
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#222222\" stroke-width=\"2\"/>\n",
            dec(&to_x(a)),
            dec(&baseline),
            dec(&to_x(b)),
            dec(&baseline)
        ));
    }
    // Chamber intervals with labels, drawn above the baseline.
    for (i, ch) in chambers.iter().enumerate() {
        let mut ts: Vec<BigRational> = ch
            .cone
            .rays()
            .iter()
            .map(|r| section_point(&transform, r).map(|p| p[0].clone()))
            .collect::<Result<Vec<_>>>()?;
        ts.sort();
        let (Some(a), Some(b)) = (ts.first(), ts.last()) else { continue };
        let color = PALETTE[i % PALETTE.len()];
        let y = &baseline - rat(14);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"10\"/>\n",
            dec(&to_x(a)),
            dec(&y),
            dec(&to_x(b)),
            dec(&y),
            color
        ));
        let mid = (a + b) / rat(2);
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n",
            dec(&to_x(&mid)),
            dec(&(y - rat(12))),
            i + 1
        ));
    }
    // Ray ticks on the section.
    for c in 0..q.cols() {
        let col = q.col_vec(c);
        if col.iter().all(|e| e.is_zero()) {
            continue;
        }
        let t = section_point(&transform, &col)?[0].clone();
        let x = to_x(&t);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n",
            dec(&x),
            dec(&(&baseline - rat(6))),
            dec(&x),
            dec(&(&baseline + rat(6)))
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">q{}</text>\n",
            dec(&x),
            dec(&(&baseline + rat(24))),
            c + 1
        ));
    }
    // Anticanonical marker.
    let ac = anticanonical_class(&doc.presentation);
    let t = section_point(&transform, &ac.free)?[0].clone();
    let x = to_x(&t);
    svg.push_str(&format!(
        "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#000000\"/>\n",
        dec(&x),
        dec(&baseline)
    ));
    svg.push_str("</svg>\n");
    Ok(svg)
}
