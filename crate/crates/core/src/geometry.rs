//! Finite geometries (linear spaces).
//!
//! A geometry is a point set `0..v` with a list of lines, each a set of at
//! least two points, such that every pair of distinct points lies on exactly
//! one line. Lines keep their input order (it fixes the rows of the incidence
//! matrix); equality ignores it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, GeometryViolation, Result};
use crate::matching::maximum_matching;

const NO_LINE: u32 = u32::MAX;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawGeometry", into = "RawGeometry")]
pub struct Geometry {
    points: usize,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
}

/// The JSON shape: `{"points": v, "lines": [[...], ...]}` with 0-based points.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGeometry {
    points: usize,
    lines: Vec<Vec<usize>>,
}

impl TryFrom<RawGeometry> for Geometry {
    type Error = GeometryViolation;

    fn try_from(raw: RawGeometry) -> Result<Self, GeometryViolation> {
        Geometry::validate(raw.points, raw.lines)
    }
}

impl From<Geometry> for RawGeometry {
    fn from(g: Geometry) -> Self {
        RawGeometry {
            points: g.points,
            lines: g.lines,
        }
    }
}

impl PartialEq for Geometry {
    fn eq(&self, other: &Self) -> bool {
        let sorted = |g: &Geometry| {
            let mut ls = g.lines.clone();
            ls.sort();
            ls
        };
        self.points == other.points && sorted(self) == sorted(other)
    }
}

impl Eq for Geometry {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometryReport {
    pub v: usize,
    pub b: usize,
    pub is_regular: bool,
    /// Common number of lines through each point.
    pub r: Option<usize>,
    pub is_uniform: bool,
    /// Common number of points on each line.
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlaneVerdict {
    /// Regular, uniform with `r = k`, and four independent points.
    pub first_def: bool,
    /// Any two lines meet, and four independent points.
    pub second_def: bool,
    /// `κ = k − 1`, present iff both definitions hold.
    pub order: Option<usize>,
}

impl PlaneVerdict {
    pub fn is_plane(&self) -> bool {
        self.first_def && self.second_def
    }
}

/// The two shapes a geometry with `v = b` and `b ≥ 2` can take.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// A line with `v − 1` points plus a top point joined to each of them.
    PencilWithTransversal {
        top: usize,
        transversal: usize,
    },
    ProjectivePlane {
        order: usize,
    },
}

/// A subgeometry together with the original index of each of its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgeometry {
    pub geometry: Geometry,
    pub points: Vec<usize>,
}

impl Geometry {
    /// Checks both axioms and returns the geometry, or the first violation
    /// found: out-of-range points and short lines first, then pairs on two
    /// lines, then uncovered pairs.
    pub fn validate(points: usize, raw_lines: Vec<Vec<usize>>) -> Result<Self, GeometryViolation> {
        let mut lines = Vec::with_capacity(raw_lines.len());
        for (li, mut line) in raw_lines.into_iter().enumerate() {
            if let Some(&p) = line.iter().find(|&&p| p >= points) {
                return Err(GeometryViolation::PointOutOfRange {
                    line: li,
                    point: p,
                    points,
                });
            }
            line.sort_unstable();
            line.dedup();
            if line.len() < 2 {
                return Err(GeometryViolation::ShortLine { line: li });
            }
            lines.push(line);
        }
        let mut pair_line = vec![NO_LINE; points * points];
        for (li, line) in lines.iter().enumerate() {
            for (a, &p) in line.iter().enumerate() {
                for &q in &line[a + 1..] {
                    let slot = &mut pair_line[p * points + q];
                    if *slot != NO_LINE {
                        return Err(GeometryViolation::PairOnTwoLines {
                            p,
                            q,
                            first: *slot as usize,
                            second: li,
                        });
                    }
                    *slot = li as u32;
                }
            }
        }
        for p in 0..points {
            for q in p + 1..points {
                if pair_line[p * points + q] == NO_LINE {
                    return Err(GeometryViolation::PairUncovered { p, q });
                }
            }
        }
        let mut point_lines = vec![Vec::new(); points];
        for (li, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(li);
            }
        }
        Ok(Self {
            points,
            lines,
            point_lines,
        })
    }

    /// `v`.
    pub fn point_count(&self) -> usize {
        self.points
    }

    /// `b`.
    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Sorted points of line `i`.
    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    /// Indices of the lines through `p`, increasing.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn is_incident(&self, p: usize, line: usize) -> bool {
        self.lines[line].binary_search(&p).is_ok()
    }

    /// Index of the unique line through two distinct points.
    pub fn line_through(&self, p: usize, q: usize) -> Result<usize> {
        for x in [p, q] {
            if x >= self.points {
                return Err(Error::PointOutOfRange(x));
            }
        }
        if p == q {
            return Err(Error::DegeneratePair(p));
        }
        self.point_lines[p]
            .iter()
            .copied()
            .find(|&l| self.is_incident(q, l))
            .ok_or_else(|| Error::Internal(format!("validated geometry has no line through {p} and {q}")))
    }

    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        if a == b || a == c {
            return true;
        }
        let l = self.line_through(a, b).expect("distinct valid points");
        self.is_incident(c, l)
    }

    /// The subgeometry on `q_set`, with points renumbered in increasing order
    /// of their original index.
    pub fn subgeometry(&self, q_set: &[usize]) -> Result<Subgeometry> {
        let mut pts = q_set.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if let Some(&p) = pts.iter().find(|&&p| p >= self.points) {
            return Err(Error::PointOutOfRange(p));
        }
        let mut new_index = vec![usize::MAX; self.points];
        for (k, &p) in pts.iter().enumerate() {
            new_index[p] = k;
        }
        let lines: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                l.iter()
                    .filter(|&&p| new_index[p] != usize::MAX)
                    .map(|&p| new_index[p])
                    .collect::<Vec<_>>()
            })
            .filter(|l| l.len() >= 2)
            .collect();
        let geometry = Geometry::validate(pts.len(), lines)?;
        Ok(Subgeometry { geometry, points: pts })
    }

    pub fn report(&self) -> GeometryReport {
        let common = |mut it: Box<dyn Iterator<Item = usize> + '_>| {
            let first = it.next()?;
            it.all(|x| x == first).then_some(first)
        };
        let r = common(Box::new(self.point_lines.iter().map(Vec::len)));
        let k = common(Box::new(self.lines.iter().map(Vec::len)));
        GeometryReport {
            v: self.points,
            b: self.lines.len(),
            is_regular: r.is_some(),
            r,
            is_uniform: k.is_some(),
            k,
        }
    }

    /// Four points, no three collinear. Tries the two-line construction
    /// first (two points off the meet on each of two lines), then falls back
    /// to exhaustive search.
    pub fn find_four_independent(&self) -> Option<[usize; 4]> {
        for (i, l1) in self.lines.iter().enumerate() {
            for l2 in &self.lines[i + 1..] {
                let meet = l1.iter().find(|p| l2.binary_search(p).is_ok()).copied();
                let off =
                    |l: &[usize]| -> Vec<usize> { l.iter().copied().filter(|&p| Some(p) != meet).take(2).collect() };
                let (a, b) = (off(l1), off(l2));
                if a.len() == 2 && b.len() == 2 {
                    let w = [a[0], a[1], b[0], b[1]];
                    debug_assert!(self.is_independent(&w));
                    return Some(w);
                }
            }
        }
        self.find_four_independent_exhaustive()
    }

    fn find_four_independent_exhaustive(&self) -> Option<[usize; 4]> {
        let v = self.points;
        for a in 0..v {
            for b in a + 1..v {
                for c in b + 1..v {
                    if self.collinear(a, b, c) {
                        continue;
                    }
                    for d in c + 1..v {
                        if self.is_independent(&[a, b, c, d]) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// No three of the given points lie on a common line.
    pub fn is_independent(&self, pts: &[usize]) -> bool {
        let n = pts.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.collinear(pts[i], pts[j], pts[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn lines_pairwise_intersect(&self) -> bool {
        self.lines.iter().enumerate().all(|(i, l1)| {
            self.lines[i + 1..]
                .iter()
                .all(|l2| l1.iter().any(|p| l2.binary_search(p).is_ok()))
        })
    }

    /// Evaluates both projective-plane definitions independently.
    pub fn plane_check(&self) -> PlaneVerdict {
        let rep = self.report();
        let four = self.find_four_independent().is_some();
        let first_def = matches!((rep.r, rep.k), (Some(r), Some(k)) if r == k) && four;
        let second_def = self.lines_pairwise_intersect() && four;
        let order = match (first_def && second_def, rep.k) {
            (true, Some(k)) => Some(k - 1),
            _ => None,
        };
        if let Some(kappa) = order {
            debug_assert_eq!(self.points, kappa * kappa + kappa + 1);
            debug_assert_eq!(self.lines.len(), kappa * kappa + kappa + 1);
        }
        PlaneVerdict {
            first_def,
            second_def,
            order,
        }
    }

    /// Decides which of the two `v = b` shapes applies. The pencil case is
    /// recognised directly by a line holding all but one point.
    pub fn classify_v_eq_b(&self) -> Result<Classification> {
        let (v, b) = (self.points, self.lines.len());
        if b < 2 {
            return Err(Error::NotApplicable(format!("needs at least two lines, got {b}")));
        }
        if v != b {
            return Err(Error::NotApplicable(format!("needs v = b, got v = {v}, b = {b}")));
        }
        if let Some(t) = self.lines.iter().position(|l| l.len() == v - 1) {
            let transversal = &self.lines[t];
            let top = (0..v)
                .find(|p| transversal.binary_search(p).is_err())
                .expect("one point lies off the transversal");
            let pencil_ok = self
                .lines
                .iter()
                .enumerate()
                .all(|(i, l)| i == t || (l.len() == 2 && l.contains(&top)));
            if !pencil_ok {
                return Err(Error::Internal(
                    "v = b geometry with a (v-1)-point line is not a pencil with transversal".into(),
                ));
            }
            return Ok(Classification::PencilWithTransversal { top, transversal: t });
        }
        match self.plane_check() {
            PlaneVerdict {
                first_def: true,
                second_def: true,
                order: Some(order),
            } => Ok(Classification::ProjectivePlane { order }),
            verdict => Err(Error::Internal(format!(
                "v = b geometry is neither a pencil with transversal nor a plane: {verdict:?}"
            ))),
        }
    }

    /// An injective choice of an incident line for every point, found by
    /// bipartite matching on the point-line incidence.
    pub fn incident_injection(&self) -> Result<Vec<usize>> {
        let b = self.lines.len();
        if b < 2 {
            return Err(Error::NotApplicable(format!("needs at least two lines, got {b}")));
        }
        let m = maximum_matching(&self.point_lines, b);
        m.row_mate
            .iter()
            .enumerate()
            .map(|(p, l)| l.ok_or_else(|| Error::Internal(format!("no incident line left for point {p}"))))
            .collect()
    }

    pub fn to_json(&self) -> String {
        crate::json::to_sorted_string(self)
    }

    /// Malformed JSON is a parse error; well-formed input that breaks an
    /// axiom is reported as the violation.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGeometry = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        Ok(raw.try_into()?)
    }
}
