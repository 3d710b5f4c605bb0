//! Block normal form of a projective plane's incidence matrix.
//!
//! For a plane of order `κ` (`n = κ² + κ + 1`), rows and columns are permuted
//! so the matrix splits into `(κ + 1) × (κ + 1)` blocks `A_ij`: the first
//! block row and column have size `κ + 1`, the rest size `κ`. Block indices in
//! this module are 0-based, so `A_ij` is `block(i − 1, j − 1)`.
//!
//! * `A_11` has ones exactly in its first row and first column.
//! * `A_1r` (`r ≥ 2`) has ones exactly in row `r`; `A_s1` exactly in column `s`.
//! * `A_2j = I` for `j ≥ 2` and `A_i2 = I` for `i ≥ 3`.
//! * Every `A_ij` with `i, j ≥ 2` is a permutation matrix; inside one block
//!   row (or column) with index `≥ 3` they are disjoint and sum to `J`.
//!
//! The squares `L_i = Σ_j (j − 1) A_(i+2)j` then form a complete MPLS set,
//! and the construction runs backwards from any complete set.

use serde::{Deserialize, Serialize};

use crate::binmat::{BinaryMatrix, BlockPartition, Permutation};
use crate::error::{Error, Result};
use crate::latin::{verify_mpls, LatinSquare, MplsSet};
use crate::planes::geometry_from_incidence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockForm {
    matrix: BinaryMatrix,
    order: usize,
    partition: BlockPartition,
    row_perm: Permutation,
    col_perm: Permutation,
}

/// Sidecar metadata written next to a canonical `.inc` file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFormMeta {
    pub col_perm: Vec<usize>,
    pub order: usize,
    pub row_perm: Vec<usize>,
}

fn partition_for(order: usize) -> Result<BlockPartition> {
    let mut sizes = vec![order + 1];
    sizes.extend(std::iter::repeat_n(order, order));
    BlockPartition::from_sizes(&sizes, &sizes)
}

impl BlockForm {
    /// Wraps a matrix claimed to be in block form. Only dimensions are checked
    /// here; [`verify_block_form`] checks the structure.
    pub fn from_parts(
        matrix: BinaryMatrix,
        order: usize,
        row_perm: Permutation,
        col_perm: Permutation,
    ) -> Result<Self> {
        let n = order * order + order + 1;
        if order < 2 || matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Dimension(format!(
                "block form of order {order} needs a {n}x{n} matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if row_perm.size() != n || col_perm.size() != n {
            return Err(Error::Dimension("permutation sizes do not match the matrix".into()));
        }
        Ok(Self {
            matrix,
            order,
            partition: partition_for(order)?,
            row_perm,
            col_perm,
        })
    }

    pub fn from_meta(matrix: BinaryMatrix, meta: &BlockFormMeta) -> Result<Self> {
        Self::from_parts(
            matrix,
            meta.order,
            Permutation::new(meta.row_perm.clone())?,
            Permutation::new(meta.col_perm.clone())?,
        )
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    /// Row permutation that carried the input matrix to this form.
    pub fn row_perm(&self) -> &Permutation {
        &self.row_perm
    }

    pub fn col_perm(&self) -> &Permutation {
        &self.col_perm
    }

    /// Block `(i, j)`, 0-based.
    pub fn block(&self, i: usize, j: usize) -> Result<BinaryMatrix> {
        self.matrix.block(&self.partition, i, j)
    }

    pub fn meta(&self) -> BlockFormMeta {
        BlockFormMeta {
            col_perm: self.col_perm.images().to_vec(),
            order: self.order,
            row_perm: self.row_perm.images().to_vec(),
        }
    }
}

/// Puts the incidence matrix of a projective plane into block form.
///
/// Every free choice takes the lowest index: line 1 is row 0, point 1 is its
/// lowest point, the other points of line 1 and the other lines through
/// point 1 keep increasing order, and the block-2 lines (through the second
/// point of line 1) keep increasing order. Those choices fix every other
/// position through `A_2j = I` and `A_i2 = I`.
pub fn canonicalize(m: &BinaryMatrix) -> Result<BlockForm> {
    let g = geometry_from_incidence(m).map_err(|e| Error::NotAPlane(e.to_string()))?;
    let verdict = g.plane_check();
    let k = match verdict.order {
        Some(k) if verdict.is_plane() => k,
        _ => return Err(Error::NotAPlane(format!("{verdict:?}"))),
    };
    if k < 2 {
        return Err(Error::NotAPlane(format!("order {k} is below 2")));
    }
    let n = k * k + k + 1;

    let first_line = 0;
    let line1_points = g.line(first_line).to_vec();
    let point1 = line1_points[0];

    let mut row_order = vec![first_line];
    row_order.extend(g.lines_through(point1).iter().copied().filter(|&l| l != first_line));
    let col_order_head = line1_points.clone();

    // Block 2 rows: lines through the second point of line 1, other than line 1.
    let block2_lines: Vec<usize> = g
        .lines_through(line1_points[1])
        .iter()
        .copied()
        .filter(|&l| l != first_line)
        .collect();

    // Column block x: points of the x-th line through point 1, ordered so that
    // the t-th point lies on the t-th block-2 line.
    let mut col_order = col_order_head;
    for &line in &row_order[1..=k] {
        for &b2 in &block2_lines {
            let p = g
                .line(line)
                .iter()
                .copied()
                .find(|&p| p != point1 && g.is_incident(p, b2))
                .ok_or_else(|| Error::Internal(format!("lines {line} and {b2} do not meet off point 1")))?;
            col_order.push(p);
        }
    }
    // Block-2 column points, in the order fixed above.
    let block2_points: Vec<usize> = col_order[k + 1..2 * k + 1].to_vec();

    row_order.extend(block2_lines.iter().copied());
    // Row block x ≥ 3: lines through the x-th point of line 1, ordered so the
    // t-th one passes through the t-th block-2 point.
    for &p in &line1_points[2..] {
        for &bp in &block2_points {
            let l = g.line_through(p, bp)?;
            row_order.push(l);
        }
    }

    if row_order.len() != n || col_order.len() != n {
        return Err(Error::Internal("staged ordering did not cover the matrix".into()));
    }
    let row_perm = Permutation::from_arrangement(&row_order)
        .map_err(|e| Error::Internal(format!("row ordering is not a permutation: {e}")))?;
    let col_perm = Permutation::from_arrangement(&col_order)
        .map_err(|e| Error::Internal(format!("column ordering is not a permutation: {e}")))?;
    let matrix = m.permute(&row_perm, &col_perm)?;
    let bf = BlockForm::from_parts(matrix, k, row_perm, col_perm)?;
    let report = verify_block_form(&bf);
    if let Some(v) = report.violations.first() {
        return Err(Error::Internal(format!("canonical form failed its own check: {v}")));
    }
    Ok(bf)
}

/// A structural defect in a claimed block form. Block indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockViolation {
    /// A border block (`A_11`, `A_1r`, `A_s1`) departs from its fixed pattern.
    Border {
        row: usize,
        col: usize,
    },
    /// `A_2j` or `A_i2` is not the identity.
    NotIdentity {
        row: usize,
        col: usize,
    },
    NotPermutation {
        row: usize,
        col: usize,
    },
    /// Two blocks in one block row share a one position.
    RowOverlap {
        row: usize,
        col_a: usize,
        col_b: usize,
    },
    /// Two blocks in one block column share a one position.
    ColumnOverlap {
        col: usize,
        row_a: usize,
        row_b: usize,
    },
    /// The blocks of a block row do not sum to `J`.
    RowSumNotJ {
        row: usize,
    },
    ColumnSumNotJ {
        col: usize,
    },
}

/// Messages use 1-based block indices, as in `A_ij`.
impl std::fmt::Display for BlockViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            BlockViolation::Border { row, col } => {
                write!(
                    f,
                    "border block A_{},{} departs from its fixed pattern",
                    row + 1,
                    col + 1
                )
            }
            BlockViolation::NotIdentity { row, col } => {
                write!(f, "block A_{},{} is not the identity", row + 1, col + 1)
            }
            BlockViolation::NotPermutation { row, col } => {
                write!(f, "block A_{},{} is not a permutation matrix", row + 1, col + 1)
            }
            BlockViolation::RowOverlap { row, col_a, col_b } => write!(
                f,
                "blocks A_{r},{} and A_{r},{} share a one",
                col_a + 1,
                col_b + 1,
                r = row + 1
            ),
            BlockViolation::ColumnOverlap { col, row_a, row_b } => write!(
                f,
                "blocks A_{},{c} and A_{},{c} share a one",
                row_a + 1,
                row_b + 1,
                c = col + 1
            ),
            BlockViolation::RowSumNotJ { row } => write!(f, "block row {} does not sum to J", row + 1),
            BlockViolation::ColumnSumNotJ { col } => write!(f, "block column {} does not sum to J", col + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockFormReport {
    /// In check order: border pattern, identity blocks, permutation blocks,
    /// disjointness, sums to `J`.
    pub violations: Vec<BlockViolation>,
}

impl BlockFormReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structural property of the block form and reports all
/// violations found.
pub fn verify_block_form(bf: &BlockForm) -> BlockFormReport {
    let k = bf.order;
    let blk = |i: usize, j: usize| bf.block(i, j).expect("partition fits");
    let mut violations = Vec::new();

    // A_11, A_1r, A_s1
    for j in 0..=k {
        let b = blk(0, j);
        let ok = (0..b.rows()).all(|r| {
            (0..b.cols()).all(|c| {
                let expect = if j == 0 { r == 0 || c == 0 } else { r == j };
                b.get(r, c) == expect
            })
        });
        if !ok {
            violations.push(BlockViolation::Border { row: 0, col: j });
        }
    }
    for i in 1..=k {
        let b = blk(i, 0);
        let ok = (0..b.rows()).all(|r| (0..b.cols()).all(|c| b.get(r, c) == (c == i)));
        if !ok {
            violations.push(BlockViolation::Border { row: i, col: 0 });
        }
    }

    let identity = BinaryMatrix::identity(k).expect("k >= 2");
    for j in 1..=k {
        if blk(1, j) != identity {
            violations.push(BlockViolation::NotIdentity { row: 1, col: j });
        }
    }
    for i in 2..=k {
        if blk(i, 1) != identity {
            violations.push(BlockViolation::NotIdentity { row: i, col: 1 });
        }
    }

    let inner: Vec<Vec<BinaryMatrix>> = (1..=k).map(|i| (1..=k).map(|j| blk(i, j)).collect()).collect();
    for (i, row) in inner.iter().enumerate() {
        for (j, b) in row.iter().enumerate() {
            if !b.is_permutation_matrix() {
                violations.push(BlockViolation::NotPermutation { row: i + 1, col: j + 1 });
            }
        }
    }

    let overlap = |a: &BinaryMatrix, b: &BinaryMatrix| a.bits().iter().zip(b.bits()).any(|(&x, &y)| x && y);
    for i in 2..=k {
        for a in 1..=k {
            for b in a + 1..=k {
                if overlap(&inner[i - 1][a - 1], &inner[i - 1][b - 1]) {
                    violations.push(BlockViolation::RowOverlap {
                        row: i,
                        col_a: a,
                        col_b: b,
                    });
                }
            }
        }
    }
    for j in 2..=k {
        for a in 1..=k {
            for b in a + 1..=k {
                if overlap(&inner[a - 1][j - 1], &inner[b - 1][j - 1]) {
                    violations.push(BlockViolation::ColumnOverlap {
                        col: j,
                        row_a: a,
                        row_b: b,
                    });
                }
            }
        }
    }

    let sums_to_j = |blocks: &mut dyn Iterator<Item = &BinaryMatrix>| {
        let mut acc = vec![0usize; k * k];
        for b in blocks {
            for (s, &x) in acc.iter_mut().zip(b.bits()) {
                *s += usize::from(x);
            }
        }
        acc.iter().all(|&s| s == 1)
    };
    for i in 2..=k {
        if !sums_to_j(&mut inner[i - 1].iter()) {
            violations.push(BlockViolation::RowSumNotJ { row: i });
        }
    }
    for j in 2..=k {
        if !sums_to_j(&mut inner.iter().map(|row| &row[j - 1])) {
            violations.push(BlockViolation::ColumnSumNotJ { col: j });
        }
    }

    BlockFormReport { violations }
}

/// `L_i[r][c] = j − 1` where `A_(i+2)j` holds the one at `(r, c)` (1-based
/// block indices), for `i = 1..κ − 1`.
pub fn extract_mpls(bf: &BlockForm) -> Result<MplsSet> {
    let report = verify_block_form(bf);
    if let Some(v) = report.violations.first() {
        return Err(Error::BlockForm(format!(
            "{v} ({} violations)",
            report.violations.len()
        )));
    }
    let k = bf.order;
    let mut squares = Vec::with_capacity(k - 1);
    for bi in 2..=k {
        let mut rows = vec![vec![0; k]; k];
        for bj in 1..=k {
            let b = bf.block(bi, bj)?;
            for (r, row) in rows.iter_mut().enumerate() {
                for (c, cell) in row.iter_mut().enumerate() {
                    if b.get(r, c) {
                        *cell = bj;
                    }
                }
            }
        }
        squares.push(LatinSquare::new(rows)?);
    }
    MplsSet::new(k, squares)
}

/// Builds the block-form incidence matrix of the plane encoded by a complete
/// MPLS set.
pub fn reconstruct(set: &MplsSet) -> Result<BinaryMatrix> {
    let report = verify_mpls(set);
    if !report.is_complete {
        return Err(Error::Mpls(format!(
            "reconstruction needs a complete MPLS set of order {}: {} squares, mpls = {}",
            set.order(),
            report.count,
            report.is_mpls
        )));
    }
    let k = set.order();
    let n = k * k + k + 1;
    let squares = set.squares();
    // (block index, offset inside the block) for an index of the full matrix
    let locate = |x: usize| {
        if x <= k {
            (0, x)
        } else {
            let y = x - (k + 1);
            (1 + y / k, y % k)
        }
    };
    BinaryMatrix::from_fn(n, n, |r, c| {
        let ((bi, ri), (bj, cj)) = (locate(r), locate(c));
        match (bi, bj) {
            (0, 0) => ri == 0 || cj == 0,
            (0, _) => ri == bj,
            (_, 0) => cj == bi,
            (1, _) | (_, 1) => ri == cj,
            _ => squares[bi - 2].get(ri, cj) == bj,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::tests::order5_set;
    use crate::planes::build_pg2;

    fn shuffled(m: &BinaryMatrix, seed: usize) -> BinaryMatrix {
        let n = m.rows();
        let rp: Vec<usize> = (0..n).map(|i| (i * 5 + seed) % n).collect();
        let cp: Vec<usize> = (0..n).map(|i| (i * 3 + 2 * seed) % n).collect();
        m.permute(&Permutation::new(rp).unwrap(), &Permutation::new(cp).unwrap())
            .unwrap()
    }

    #[test]
    fn fano_block_form() {
        let m = shuffled(&build_pg2(2).unwrap().incidence, 1);
        let bf = canonicalize(&m).unwrap();
        assert_eq!(
            bf.block(2, 2).unwrap(),
            BinaryMatrix::from_rows(&[[0u8, 1], [1, 0]]).unwrap()
        );
        let a11 = bf.block(0, 0).unwrap();
        assert_eq!(
            a11,
            BinaryMatrix::from_rows(&[[1u8, 1, 1], [1, 0, 0], [1, 0, 0]]).unwrap()
        );
        assert_eq!(m.permute(bf.row_perm(), bf.col_perm()).unwrap(), *bf.matrix());
        let set = extract_mpls(&bf).unwrap();
        assert_eq!(
            set.squares(),
            &[LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap()]
        );
    }

    #[test]
    fn canonical_input_gives_identity_permutations() {
        let bf = canonicalize(&build_pg2(3).unwrap().incidence).unwrap();
        let again = canonicalize(bf.matrix()).unwrap();
        assert!(again.row_perm().is_identity() && again.col_perm().is_identity());
        assert_eq!(again.matrix(), bf.matrix());
    }

    #[test]
    fn blocks_are_permutation_matrices() {
        for q in [3, 4, 5] {
            let bf = canonicalize(&build_pg2(q).unwrap().incidence).unwrap();
            for i in 1..=q {
                for j in 1..=q {
                    assert!(bf.block(i, j).unwrap().is_permutation_matrix());
                }
            }
            assert!(verify_block_form(&bf).is_clean());
        }
    }

    #[test]
    fn broken_forms_are_reported() {
        let bf = canonicalize(&build_pg2(2).unwrap().incidence).unwrap();
        // A_33 := I
        let m = bf.matrix();
        let broken = BinaryMatrix::from_fn(7, 7, |r, c| if r >= 5 && c >= 5 { r == c } else { m.get(r, c) }).unwrap();
        let bad = BlockForm::from_parts(broken, 2, bf.row_perm().clone(), bf.col_perm().clone()).unwrap();
        let rep = verify_block_form(&bad);
        assert!(rep.violations.contains(&BlockViolation::RowSumNotJ { row: 2 }));
        assert!(rep.violations.contains(&BlockViolation::RowOverlap {
            row: 2,
            col_a: 1,
            col_b: 2
        }));
        assert!(extract_mpls(&bad).is_err());

        // copy A_43 over A_44 in PG(2,3): two equal blocks in block row 4
        let bf = canonicalize(&build_pg2(3).unwrap().incidence).unwrap();
        let m = bf.matrix();
        let dup = BinaryMatrix::from_fn(13, 13, |r, c| {
            if (10..13).contains(&r) && (10..13).contains(&c) {
                m.get(r, c - 3)
            } else {
                m.get(r, c)
            }
        })
        .unwrap();
        let bad = BlockForm::from_parts(dup, 3, bf.row_perm().clone(), bf.col_perm().clone()).unwrap();
        let rep = verify_block_form(&bad);
        assert!(rep.violations.contains(&BlockViolation::RowOverlap {
            row: 3,
            col_a: 2,
            col_b: 3
        }));
    }

    #[test]
    fn rejects_non_planes() {
        assert!(matches!(
            canonicalize(&BinaryMatrix::identity(7).unwrap()),
            Err(Error::NotAPlane(_))
        ));
        // triangle: regular, uniform, but only three points
        let tri = BinaryMatrix::from_rows(&[[1u8, 1, 0], [1, 0, 1], [0, 1, 1]]).unwrap();
        assert!(matches!(canonicalize(&tri), Err(Error::NotAPlane(_))));
    }

    #[test]
    fn extracted_sets() {
        let set = extract_mpls(&canonicalize(&build_pg2(3).unwrap().incidence).unwrap()).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.squares().iter().all(LatinSquare::has_unit_diagonal));
        assert!(verify_mpls(&set).is_complete);
    }

    #[test]
    fn reconstruct_examples() {
        let s = MplsSet::new(2, vec![LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap()]).unwrap();
        let m = reconstruct(&s).unwrap();
        assert_eq!(geometry_from_incidence(&m).unwrap().plane_check().order, Some(2));

        let m = reconstruct(&order5_set()).unwrap();
        assert_eq!((m.rows(), m.cols()), (31, 31));
        assert_eq!(geometry_from_incidence(&m).unwrap().plane_check().order, Some(5));

        let mut three = order5_set().squares().to_vec();
        three.pop();
        assert!(reconstruct(&MplsSet::new(5, three).unwrap()).is_err());
    }

    #[test]
    fn meta_round_trip() {
        let m = shuffled(&build_pg2(3).unwrap().incidence, 2);
        let bf = canonicalize(&m).unwrap();
        let back = BlockForm::from_meta(bf.matrix().clone(), &bf.meta()).unwrap();
        assert_eq!(back, bf);
    }
}
