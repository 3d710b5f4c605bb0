//! König–Frobenius machinery on binary matrices.
//!
//! `v(F)` is the maximum number of independent ones (a maximum bipartite
//! matching between rows and columns along the ones). `w(F)` is the largest
//! `a + b` over all-zero `a × b` submatrices with `a, b ≥ 1`, and `0` when `F`
//! has no zero entry.

use serde::Serialize;

use crate::binmat::{BinaryMatrix, Permutation};
use crate::error::{Error, Result};

/// Row-to-column matching found by augmenting paths, rows scanned in
/// increasing order and neighbours tried in list order.
#[derive(Debug, Clone)]
pub(crate) struct Matching {
    pub row_mate: Vec<Option<usize>>,
    pub col_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.row_mate.iter().flatten().count()
    }
}

pub(crate) fn maximum_matching(adj: &[Vec<usize>], cols: usize) -> Matching {
    let mut m = Matching {
        row_mate: vec![None; adj.len()],
        col_mate: vec![None; cols],
    };
    let mut visited = vec![false; cols];
    for r in 0..adj.len() {
        visited.fill(false);
        augment(r, adj, &mut m, &mut visited);
    }
    m
}

fn augment(r: usize, adj: &[Vec<usize>], m: &mut Matching, visited: &mut [bool]) -> bool {
    for &c in &adj[r] {
        if visited[c] {
            continue;
        }
        visited[c] = true;
        let free = match m.col_mate[c] {
            None => true,
            Some(r2) => augment(r2, adj, m, visited),
        };
        if free {
            m.row_mate[r] = Some(c);
            m.col_mate[c] = Some(r);
            return true;
        }
    }
    false
}

/// Maximum independent set of the row/column bipartite graph via König:
/// rows reachable from free rows by alternating paths, plus unreachable columns.
fn konig_independent_set(adj: &[Vec<usize>], cols: usize, m: &Matching) -> (Vec<usize>, Vec<usize>) {
    let mut row_seen = vec![false; adj.len()];
    let mut col_seen = vec![false; cols];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&r| m.row_mate[r].is_none()).collect();
    for &r in &stack {
        row_seen[r] = true;
    }
    while let Some(r) = stack.pop() {
        for &c in &adj[r] {
            if col_seen[c] {
                continue;
            }
            col_seen[c] = true;
            if let Some(r2) = m.col_mate[c] {
                if !row_seen[r2] {
                    row_seen[r2] = true;
                    stack.push(r2);
                }
            }
        }
    }
    let rows = (0..adj.len()).filter(|&r| row_seen[r]).collect();
    let cols = (0..cols).filter(|&c| !col_seen[c]).collect();
    (rows, cols)
}

fn adjacency(f: &BinaryMatrix) -> Vec<Vec<usize>> {
    (0..f.rows()).map(|i| f.row_support(i)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingWitness {
    pub size: usize,
    /// `(row, col)` pairs, sorted by row.
    pub pairs: Vec<(usize, usize)>,
}

impl MatchingWitness {
    /// Checks the pairs sit on ones with distinct rows and distinct columns.
    pub fn verify(&self, f: &BinaryMatrix) -> bool {
        let mut rows = vec![false; f.rows()];
        let mut cols = vec![false; f.cols()];
        self.pairs.len() == self.size
            && self.pairs.iter().all(|&(r, c)| {
                r < f.rows()
                    && c < f.cols()
                    && f.get(r, c)
                    && !std::mem::replace(&mut rows[r], true)
                    && !std::mem::replace(&mut cols[c], true)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroBlockWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl ZeroBlockWitness {
    pub fn a(&self) -> usize {
        self.rows.len()
    }

    pub fn b(&self) -> usize {
        self.cols.len()
    }

    pub fn weight(&self) -> usize {
        self.a() + self.b()
    }

    pub fn verify(&self, f: &BinaryMatrix) -> bool {
        !self.rows.is_empty()
            && !self.cols.is_empty()
            && self
                .rows
                .iter()
                .all(|&r| r < f.rows() && self.cols.iter().all(|&c| c < f.cols() && !f.get(r, c)))
    }
}

/// `v(F)` with a witness.
pub fn max_independent_ones(f: &BinaryMatrix) -> MatchingWitness {
    let adj = adjacency(f);
    let m = maximum_matching(&adj, f.cols());
    let pairs: Vec<(usize, usize)> = m
        .row_mate
        .iter()
        .enumerate()
        .filter_map(|(r, c)| c.map(|c| (r, c)))
        .collect();
    MatchingWitness {
        size: pairs.len(),
        pairs,
    }
}

/// A zero submatrix maximizing `a + b` (with `a, b ≥ 1`), or `None` when the
/// matrix has no zero entry.
pub fn max_zero_submatrix(f: &BinaryMatrix) -> Option<ZeroBlockWitness> {
    if !f.has_zero() {
        return None;
    }
    let adj = adjacency(f);
    let m = maximum_matching(&adj, f.cols());
    let (rows, cols) = konig_independent_set(&adj, f.cols(), &m);
    if !rows.is_empty() && !cols.is_empty() {
        return Some(ZeroBlockWitness { rows, cols });
    }

    // The unrestricted optimum is one-sided. Force a zero cell (i, j) into
    // the selection: keep only rows zero in column j and columns zero in row i.
    let mut best: Option<ZeroBlockWitness> = None;
    for i in 0..f.rows() {
        let sub_cols: Vec<usize> = (0..f.cols()).filter(|&c| !f.get(i, c)).collect();
        for &j in &sub_cols {
            let sub_rows: Vec<usize> = (0..f.rows()).filter(|&r| !f.get(r, j)).collect();
            if best
                .as_ref()
                .is_some_and(|b| b.weight() >= sub_rows.len() + sub_cols.len())
            {
                continue;
            }
            let mut col_pos = vec![usize::MAX; f.cols()];
            for (k, &c) in sub_cols.iter().enumerate() {
                col_pos[c] = k;
            }
            let sub_adj: Vec<Vec<usize>> = sub_rows
                .iter()
                .map(|&r| {
                    adj[r]
                        .iter()
                        .filter(|&&c| col_pos[c] != usize::MAX)
                        .map(|&c| col_pos[c])
                        .collect()
                })
                .collect();
            let sm = maximum_matching(&sub_adj, sub_cols.len());
            let (rs, cs) = konig_independent_set(&sub_adj, sub_cols.len(), &sm);
            let cand = ZeroBlockWitness {
                rows: rs.into_iter().map(|k| sub_rows[k]).collect(),
                cols: cs.into_iter().map(|k| sub_cols[k]).collect(),
            };
            debug_assert!(cand.rows.contains(&i) && cand.cols.contains(&j));
            if best.as_ref().is_none_or(|b| cand.weight() > b.weight()) {
                best = Some(cand);
            }
        }
    }
    best
}

/// `w(F)`, with the convention `w = 0` for a matrix without zeroes.
pub fn zero_weight(f: &BinaryMatrix) -> usize {
    max_zero_submatrix(f).map_or(0, |w| w.weight())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityCase {
    /// Square: `v(F) = n ⇔ w(F) ≤ n`.
    Square,
    /// Rectangular: `v(F) = min(m, n) ⇔ w(F) ≤ max(m, n)`.
    Rectangular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub rows: usize,
    pub cols: usize,
    pub v: usize,
    pub w: usize,
    pub case: DualityCase,
    /// `v(F) = min(m, n)`.
    pub full_matching: bool,
    /// `w(F) ≤ max(m, n)`.
    pub small_zero_block: bool,
    /// `v(F) < min(m, n)`.
    pub deficient_matching: bool,
    /// `w(F) > max(m, n)`.
    pub large_zero_block: bool,
    pub matching: MatchingWitness,
    pub zero_block: Option<ZeroBlockWitness>,
}

/// Computes `v` and `w` and checks the applicable König–Frobenius
/// biconditional together with its contrapositive. A disagreement means the
/// implementation is wrong and is reported as an internal error.
pub fn duality_report(f: &BinaryMatrix) -> Result<DualityReport> {
    let matching = max_independent_ones(f);
    let zero_block = max_zero_submatrix(f);
    let (m, n) = (f.rows(), f.cols());
    let v = matching.size;
    let w = zero_block.as_ref().map_or(0, |z| z.weight());
    let report = DualityReport {
        rows: m,
        cols: n,
        v,
        w,
        case: if m == n {
            DualityCase::Square
        } else {
            DualityCase::Rectangular
        },
        full_matching: v == m.min(n),
        small_zero_block: w <= m.max(n),
        deficient_matching: v < m.min(n),
        large_zero_block: w > m.max(n),
        matching,
        zero_block,
    };
    if report.full_matching != report.small_zero_block {
        return Err(Error::Internal(format!(
            "duality fails on {m}x{n} matrix: v = {v}, w = {w}"
        )));
    }
    if report.deficient_matching != report.large_zero_block {
        return Err(Error::Internal(format!(
            "contrapositive fails on {m}x{n} matrix: v = {v}, w = {w}"
        )));
    }
    Ok(report)
}

/// Writes a `k`-regular square binary matrix as a sum of `k` permutation
/// matrices by repeatedly peeling off a perfect matching.
pub fn decompose_regular(f: &BinaryMatrix, k: usize) -> Result<Vec<BinaryMatrix>> {
    if !f.is_square() {
        return Err(Error::NotRegular {
            k,
            detail: format!("matrix is {}x{}, not square", f.rows(), f.cols()),
        });
    }
    if let Some((i, s)) = f.row_sums().into_iter().enumerate().find(|&(_, s)| s != k) {
        return Err(Error::NotRegular {
            k,
            detail: format!("row {i} has {s} ones"),
        });
    }
    if let Some((j, s)) = f.col_sums().into_iter().enumerate().find(|&(_, s)| s != k) {
        return Err(Error::NotRegular {
            k,
            detail: format!("column {j} has {s} ones"),
        });
    }
    let n = f.rows();
    let mut adj = adjacency(f);
    let mut out = Vec::with_capacity(k);
    for step in 0..k {
        let m = maximum_matching(&adj, n);
        if m.size() != n {
            return Err(Error::Internal(format!(
                "no perfect matching in the remaining {}-regular support",
                k - step
            )));
        }
        let images: Vec<usize> = m.row_mate.iter().map(|c| c.unwrap()).collect();
        for (r, &c) in images.iter().enumerate() {
            adj[r].retain(|&x| x != c);
        }
        out.push(BinaryMatrix::from_permutation(&Permutation::new(images)?)?);
    }
    Ok(out)
}
