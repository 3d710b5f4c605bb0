//! The Desarguesian plane `PG(2, q)` and geometry/incidence-matrix conversion.

use crate::binmat::BinaryMatrix;
use crate::error::{Error, Result};
use crate::field::{FiniteField, DEFAULT_MAX_ORDER};
use crate::geometry::Geometry;

/// A plane with its incidence matrix: row `i`, column `j` is 1 iff point `j`
/// lies on line `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneBundle {
    pub geometry: Geometry,
    pub incidence: BinaryMatrix,
    pub order: usize,
}

/// Nonzero triples over `GF(q)` with first nonzero coordinate 1, in
/// lexicographic order of the element codes.
fn normalized_triples(field: &FiniteField) -> Vec<[usize; 3]> {
    let q = field.order();
    let mut out = Vec::with_capacity(q * q + q + 1);
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let t = [x, y, z];
                if t.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn build_pg2(q: usize) -> Result<PlaneBundle> {
    build_pg2_with_bound(q, DEFAULT_MAX_ORDER)
}

/// `PG(2, q)`: points and lines are the normalized triples; the line
/// `(a, b, c)` holds the points with `ax + by + cz = 0`.
pub fn build_pg2_with_bound(q: usize, max_order: usize) -> Result<PlaneBundle> {
    let f = FiniteField::with_bound(q, max_order)?;
    let triples = normalized_triples(&f);
    let n = triples.len();
    let dot = |l: &[usize; 3], p: &[usize; 3]| f.add(f.add(f.mul(l[0], p[0]), f.mul(l[1], p[1])), f.mul(l[2], p[2]));
    let incidence = BinaryMatrix::from_fn(n, n, |i, j| dot(&triples[i], &triples[j]) == 0)?;
    let geometry = geometry_from_incidence(&incidence)?;
    let verdict = geometry.plane_check();
    if verdict.order != Some(q) {
        return Err(Error::Internal(format!(
            "PG(2, {q}) failed the plane check: {verdict:?}"
        )));
    }
    Ok(PlaneBundle {
        geometry,
        incidence,
        order: q,
    })
}

/// Line `i` is the set of columns holding a one in row `i`.
pub fn geometry_from_incidence(m: &BinaryMatrix) -> Result<Geometry> {
    let lines = (0..m.rows()).map(|i| m.row_support(i)).collect();
    Ok(Geometry::validate(m.cols(), lines)?)
}

/// Rows are lines in the geometry's order, columns are points.
pub fn incidence_from_geometry(g: &Geometry) -> Result<BinaryMatrix> {
    BinaryMatrix::from_fn(g.line_count(), g.point_count(), |i, j| g.is_incident(j, i))
}
