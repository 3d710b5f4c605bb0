//! Rectangular 0/1 matrices with row/column permutations and block partitions.
//!
//! Entries are stored row-major in a flat vector. Permutations follow a single
//! convention throughout the crate: index `i` moves to `images[i]`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    /// Builds a matrix from row-major entries. Both dimensions must be positive.
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix must have at least one row and one column, got {rows}x{cols}"
            )));
        }
        if bits.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for {rows}x{cols}, got {}",
                rows * cols,
                bits.len()
            )));
        }
        Ok(Self { rows, cols, bits })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut bits = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                bits.push(f(i, j));
            }
        }
        Self::new(rows, cols, bits)
    }

    /// Builds a matrix from nested rows of 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut bits = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &x in row {
                match x {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    other => return Err(Error::Dimension(format!("entry {other} in row {i} is not 0 or 1"))),
                }
            }
        }
        Self::new(rows.len(), cols, bits)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![false; rows * cols])
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![true; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| i == j)
    }

    /// The permutation matrix with a one at `(i, p(i))` for every `i`.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        Self::from_fn(p.size(), p.size(), |i, j| p.apply(i) == j)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)`. Panics when out of bounds.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.bits[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    /// Column indices holding a one in row `i`.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        self.row(i)
            .iter()
            .enumerate()
            .filter_map(|(j, &b)| b.then_some(j))
            .collect()
    }

    /// Row indices holding a one in column `j`.
    pub fn col_support(&self, j: usize) -> Vec<usize> {
        (0..self.rows).filter(|&i| self.get(i, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row(i).iter().filter(|&&b| b).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.cols];
        for i in 0..self.rows {
            for (j, &b) in self.row(i).iter().enumerate() {
                sums[j] += usize::from(b);
            }
        }
        sums
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn has_zero(&self) -> bool {
        self.bits.iter().any(|&b| !b)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i)).expect("dimensions are positive")
    }

    /// Row-major entries.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Moves row `i` to `rp(i)` and column `j` to `cp(j)`.
    pub fn permute(&self, rp: &Permutation, cp: &Permutation) -> Result<Self> {
        if rp.size() != self.rows || cp.size() != self.cols {
            return Err(Error::Dimension(format!(
                "permutations of sizes {}x{} do not fit a {}x{} matrix",
                rp.size(),
                cp.size(),
                self.rows,
                self.cols
            )));
        }
        let rinv = rp.inverse();
        let cinv = cp.inverse();
        Self::from_fn(self.rows, self.cols, |i, j| self.get(rinv.apply(i), cinv.apply(j)))
    }

    /// The contiguous submatrix in block-row `i`, block-column `j` (0-based).
    pub fn block(&self, p: &BlockPartition, i: usize, j: usize) -> Result<Self> {
        p.check_fits(self)?;
        let (r0, r1) = p.row_range(i).ok_or(Error::BlockIndex { row: i, col: j })?;
        let (c0, c1) = p.col_range(j).ok_or(Error::BlockIndex { row: i, col: j })?;
        Self::from_fn(r1 - r0, c1 - c0, |a, b| self.get(r0 + a, c0 + b))
    }

    /// True iff the matrix is square with exactly one 1 in every row and column.
    pub fn is_permutation_matrix(&self) -> bool {
        self.is_square() && self.row_sums().iter().all(|&s| s == 1) && self.col_sums().iter().all(|&s| s == 1)
    }

    /// Parses the `.inc` text format: a header `m n` followed by `m` lines of
    /// `n` space-separated 0/1 digits.
    pub fn parse_inc(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let dims = parse_decimal_fields(header, 1)?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header must be `m n`, got {} fields", dims.len()),
            });
        };
        let mut bits = Vec::with_capacity(rows.saturating_mul(cols).min(1 << 24));
        let mut seen = 0;
        for (idx, line) in lines {
            let lineno = idx + 1;
            if seen == rows {
                if line.is_empty() {
                    continue;
                }
                return Err(Error::Parse {
                    line: lineno,
                    msg: "trailing content after the last row".into(),
                });
            }
            let fields = parse_decimal_fields(line, lineno)?;
            if fields.len() != cols {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {cols} entries, got {}", fields.len()),
                });
            }
            for x in fields {
                match x {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    _ => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("entry {x} is not 0 or 1"),
                        })
                    }
                }
            }
            seen += 1;
        }
        if seen != rows {
            return Err(Error::Parse {
                line: seen + 2,
                msg: format!("expected {rows} rows, found {seen}"),
            });
        }
        Self::new(rows, cols, bits).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })
    }

    pub fn to_inc_string(&self) -> String {
        self.to_string()
    }
}

/// Splits a line on single spaces; only ASCII digits and spaces are accepted.
fn parse_decimal_fields(line: &str, lineno: usize) -> Result<Vec<usize>> {
    if let Some(bad) = line.chars().find(|c| !c.is_ascii_digit() && *c != ' ') {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected character {bad:?}"),
        });
    }
    line.split(' ')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("{s:?}: {e}"),
            })
        })
        .collect()
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<&str> = self.row(i).iter().map(|&b| if b { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A bijection on `0..size`; index `i` moves to `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() {
                return Err(Error::Permutation(format!(
                    "image {x} out of range for size {}",
                    images.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Permutation(format!("image {x} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The permutation that places `arrangement[k]` at position `k`.
    pub fn from_arrangement(arrangement: &[usize]) -> Result<Self> {
        Ok(Self::new(arrangement.to_vec())?.inverse())
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Result<Self> {
        if self.size() != next.size() {
            return Err(Error::Dimension(format!(
                "cannot compose permutations of sizes {} and {}",
                self.size(),
                next.size()
            )));
        }
        Ok(Self {
            images: self.images.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Block boundaries along both axes, each list starting at 0 and strictly
/// increasing up to the full extent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    row_cuts: Vec<usize>,
    col_cuts: Vec<usize>,
}

impl BlockPartition {
    pub fn new(row_cuts: Vec<usize>, col_cuts: Vec<usize>) -> Result<Self> {
        for (axis, cuts) in [("row", &row_cuts), ("col", &col_cuts)] {
            if cuts.len() < 2 || cuts[0] != 0 || cuts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Dimension(format!(
                    "{axis} cuts {cuts:?} must start at 0 and strictly increase"
                )));
            }
        }
        Ok(Self { row_cuts, col_cuts })
    }

    /// Partition from block sizes along each axis.
    pub fn from_sizes(row_sizes: &[usize], col_sizes: &[usize]) -> Result<Self> {
        let cuts = |sizes: &[usize]| {
            let mut v = vec![0];
            for s in sizes {
                v.push(v.last().unwrap() + s);
            }
            v
        };
        Self::new(cuts(row_sizes), cuts(col_sizes))
    }

    pub fn block_rows(&self) -> usize {
        self.row_cuts.len() - 1
    }

    pub fn block_cols(&self) -> usize {
        self.col_cuts.len() - 1
    }

    pub fn row_cuts(&self) -> &[usize] {
        &self.row_cuts
    }

    pub fn col_cuts(&self) -> &[usize] {
        &self.col_cuts
    }

    pub fn row_range(&self, i: usize) -> Option<(usize, usize)> {
        (i + 1 < self.row_cuts.len()).then(|| (self.row_cuts[i], self.row_cuts[i + 1]))
    }

    pub fn col_range(&self, j: usize) -> Option<(usize, usize)> {
        (j + 1 < self.col_cuts.len()).then(|| (self.col_cuts[j], self.col_cuts[j + 1]))
    }

    pub fn check_fits(&self, m: &BinaryMatrix) -> Result<()> {
        let (r, c) = (*self.row_cuts.last().unwrap(), *self.col_cuts.last().unwrap());
        if r != m.rows() || c != m.cols() {
            return Err(Error::Dimension(format!(
                "partition covers {r}x{c}, matrix is {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(())
    }

    /// Reassembles a matrix from its blocks, given row-major by block index.
    pub fn assemble(&self, blocks: &[Vec<BinaryMatrix>]) -> Result<BinaryMatrix> {
        if blocks.len() != self.block_rows() || blocks.iter().any(|r| r.len() != self.block_cols()) {
            return Err(Error::Dimension("block grid does not match the partition".into()));
        }
        for (i, row) in blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                let (r0, r1) = self.row_range(i).unwrap();
                let (c0, c1) = self.col_range(j).unwrap();
                if b.rows() != r1 - r0 || b.cols() != c1 - c0 {
                    return Err(Error::Dimension(format!("block ({i}, {j}) has the wrong shape")));
                }
            }
        }
        let rows = *self.row_cuts.last().unwrap();
        let cols = *self.col_cuts.last().unwrap();
        let row_block = block_index(&self.row_cuts, rows);
        let col_block = block_index(&self.col_cuts, cols);
        BinaryMatrix::from_fn(rows, cols, |i, j| {
            let (bi, bj) = (row_block[i], col_block[j]);
            blocks[bi][bj].get(i - self.row_cuts[bi], j - self.col_cuts[bj])
        })
    }
}

fn block_index(cuts: &[usize], len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for (b, w) in cuts.windows(2).enumerate() {
        out.extend(std::iter::repeat_n(b, w[1] - w[0]));
    }
    out
}
