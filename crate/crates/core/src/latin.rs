//! Latin squares and mutually projective Latin squares (MPLS).
//!
//! Two unit-diagonal Latin squares of order `κ` are projective when any row of
//! one and any row of the other agree in exactly one column. A complete MPLS
//! set has `κ − 1` pairwise projective squares, the most possible.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// An `n × n` array over `1..=n` whose rows and columns are permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotLatin("order must be at least 1".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::NotLatin(format!(
                "row {i} has length {}, expected {n}",
                rows[i].len()
            )));
        }
        Self::from_cells(n, rows.into_iter().flatten().collect())
    }

    fn from_cells(n: usize, cells: Vec<usize>) -> Result<Self> {
        let sq = Self { n, cells };
        sq.check()?;
        Ok(sq)
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        let mut seen = vec![false; n + 1];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let x = self.get(r, c);
                if x == 0 || x > n {
                    return Err(Error::NotLatin(format!("symbol {x} at ({r}, {c}) is outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotLatin(format!("symbol {x} repeats in row {r}")));
                }
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                if std::mem::replace(&mut seen[self.get(r, c)], true) {
                    return Err(Error::NotLatin(format!(
                        "symbol {} repeats in column {c}",
                        self.get(r, c)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `L[r][c] = (r + c) mod n + 1`, the addition table of `Z_n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotLatin("order must be at least 1".into()));
        }
        Ok(Self {
            n,
            cells: (0..n * n).map(|k| (k / n + k % n) % n + 1).collect(),
        })
    }

    /// Cell-by-cell backtracking fill, rows in order, with candidates shuffled
    /// by `rng`. Deterministic for a seeded generator.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotLatin("order must be at least 1".into()));
        }
        let mut cells = vec![0; n * n];
        let mut col_used = vec![vec![false; n + 1]; n];
        let mut row_used = vec![vec![false; n + 1]; n];
        let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n * n];

        let mut pos = 0;
        let mut fresh = true;
        while pos < n * n {
            let (r, c) = (pos / n, pos % n);
            if fresh {
                let mut cand: Vec<usize> = (1..=n).filter(|&x| !row_used[r][x] && !col_used[c][x]).collect();
                cand.shuffle(rng);
                candidates[pos] = cand;
            }
            if cells[pos] != 0 {
                let x = cells[pos];
                row_used[r][x] = false;
                col_used[c][x] = false;
                cells[pos] = 0;
            }
            match candidates[pos].pop() {
                Some(x) => {
                    cells[pos] = x;
                    row_used[r][x] = true;
                    col_used[c][x] = true;
                    pos += 1;
                    fresh = true;
                }
                None => {
                    pos = pos
                        .checked_sub(1)
                        .ok_or_else(|| Error::Internal("backtracking exhausted".into()))?;
                    fresh = false;
                }
            }
        }
        Self::from_cells(n, cells)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.n + c]
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.cells[r * self.n..(r + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        Self {
            n,
            cells: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 1)
    }

    /// Parses the `.ls` format: `n`, then `n` lines of `n` integers.
    pub fn parse_ls(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Self::parse_lines(&lines)
    }

    fn parse_lines(lines: &[(usize, &str)]) -> Result<Self> {
        let (first, header) = *lines.first().ok_or(Error::Parse {
            line: 1,
            msg: "empty Latin square".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            msg: format!("expected the order, got {header:?}"),
        })?;
        if lines.len() != n + 1 {
            return Err(Error::Parse {
                line: first,
                msg: format!("order {n} needs {n} rows, found {}", lines.len() - 1),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for &(lineno, line) in &lines[1..] {
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|s| {
                    s.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("{s:?} is not a non-negative integer"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {n} entries, got {}", row.len()),
                });
            }
            rows.push(row);
        }
        Self::new(rows)
    }

    pub fn to_ls_string(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for r in 0..self.n {
            let row: Vec<String> = self.row(r).iter().map(usize::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Parses several `.ls` squares separated by lines starting with `#`.
pub fn parse_ls_collection(text: &str) -> Result<Vec<LatinSquare>> {
    let mut groups: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            groups.push(Vec::new());
        } else if !line.is_empty() {
            groups.last_mut().unwrap().push((i + 1, line));
        }
    }
    groups
        .iter()
        .filter(|g| !g.is_empty())
        .map(|g| LatinSquare::parse_lines(g))
        .collect()
}

pub fn to_ls_collection(squares: &[LatinSquare]) -> String {
    squares
        .iter()
        .map(LatinSquare::to_ls_string)
        .collect::<Vec<_>>()
        .join("#\n")
}

/// An ordered candidate MPLS set: unit-diagonal squares of one order, at most
/// `κ − 1` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MplsSet {
    order: usize,
    squares: Vec<LatinSquare>,
}

impl MplsSet {
    pub fn new(order: usize, squares: Vec<LatinSquare>) -> Result<Self> {
        if let Some(i) = squares.iter().position(|s| s.order() != order) {
            return Err(Error::Mpls(format!(
                "square {i} has order {}, expected {order}",
                squares[i].order()
            )));
        }
        if let Some(i) = squares.iter().position(|s| !s.has_unit_diagonal()) {
            return Err(Error::Mpls(format!("square {i} does not have an all-ones diagonal")));
        }
        if squares.len() + 1 > order.max(1) {
            return Err(Error::Mpls(format!(
                "{} squares of order {order} exceed the bound of {}",
                squares.len(),
                order.saturating_sub(1)
            )));
        }
        Ok(Self { order, squares })
    }

    /// Infers the order from the first square.
    pub fn from_squares(squares: Vec<LatinSquare>) -> Result<Self> {
        let order = squares
            .first()
            .map(LatinSquare::order)
            .ok_or_else(|| Error::Mpls("empty set: order unknown".into()))?;
        Self::new(order, squares)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn squares(&self) -> &[LatinSquare] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }
}

/// Why a pair of squares is not projective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairDefect {
    /// `which` is 0 for the first square, 1 for the second.
    NotUnitDiagonal {
        which: usize,
    },
    RowAgreement {
        row_a: usize,
        row_b: usize,
        common: usize,
    },
}

/// First defect preventing `a` and `b` from being projective, if any.
pub fn pair_defect(a: &LatinSquare, b: &LatinSquare) -> Result<Option<PairDefect>> {
    if a.order() != b.order() {
        return Err(Error::Mpls(format!("orders differ: {} and {}", a.order(), b.order())));
    }
    for (which, s) in [a, b].into_iter().enumerate() {
        if !s.has_unit_diagonal() {
            return Ok(Some(PairDefect::NotUnitDiagonal { which }));
        }
    }
    let n = a.order();
    for r in 0..n {
        for s in 0..n {
            let common = (0..n).filter(|&c| a.get(r, c) == b.get(s, c)).count();
            if common != 1 {
                return Ok(Some(PairDefect::RowAgreement {
                    row_a: r,
                    row_b: s,
                    common,
                }));
            }
        }
    }
    Ok(None)
}

pub fn projective_pair(a: &LatinSquare, b: &LatinSquare) -> Result<bool> {
    Ok(pair_defect(a, b)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub first: usize,
    pub second: usize,
    pub defect: PairDefect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MplsReport {
    pub order: usize,
    pub count: usize,
    pub is_mpls: bool,
    pub is_complete: bool,
    /// Sorted by square indices.
    pub violations: Vec<PairViolation>,
}

pub fn verify_mpls(set: &MplsSet) -> MplsReport {
    let sq = set.squares();
    let mut violations = Vec::new();
    for i in 0..sq.len() {
        for j in i + 1..sq.len() {
            if let Some(defect) = pair_defect(&sq[i], &sq[j]).expect("set members share an order") {
                violations.push(PairViolation {
                    first: i,
                    second: j,
                    defect,
                });
            }
        }
    }
    let is_mpls = violations.is_empty();
    MplsReport {
        order: set.order(),
        count: sq.len(),
        is_mpls,
        is_complete: is_mpls && sq.len() + 1 == set.order(),
        violations,
    }
}

fn require_complete(set: &MplsSet) -> Result<()> {
    let rep = verify_mpls(set);
    if !rep.is_complete {
        return Err(Error::Mpls(format!(
            "expected a complete set of {} MPLS of order {}, got {} squares (mpls: {})",
            set.order().saturating_sub(1),
            set.order(),
            rep.count,
            rep.is_mpls
        )));
    }
    Ok(())
}

/// Ordered symbol pairs `(row[i], row[j])` over every row of every square.
pub fn column_pairs(set: &MplsSet, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    let n = set.order();
    if i == j {
        return Err(Error::Mpls(format!("columns must differ, got {i} twice")));
    }
    if i >= n || j >= n {
        return Err(Error::Mpls(format!("column out of range for order {n}")));
    }
    Ok(set
        .squares()
        .iter()
        .flat_map(|s| (0..n).map(move |r| (s.get(r, i), s.get(r, j))))
        .collect())
}

/// True iff columns `i` and `j` of a complete set show every ordered pair of
/// distinct symbols exactly once.
pub fn pair_coverage(set: &MplsSet, i: usize, j: usize) -> Result<bool> {
    require_complete(set)?;
    let pairs = column_pairs(set, i, j)?;
    let n = set.order();
    let distinct: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
    Ok(pairs.len() == n * (n - 1) && distinct.len() == pairs.len() && distinct.iter().all(|&(x, y)| x != y))
}

/// `order` cells of a Latin square, one per row and column, carrying every symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Transversal {
    pub order: usize,
    /// `(row, col, value)`, sorted by row.
    pub placements: Vec<(usize, usize, usize)>,
}

impl Transversal {
    pub fn is_valid_for(&self, host: &LatinSquare) -> bool {
        let n = self.order;
        if host.order() != n || self.placements.len() != n {
            return false;
        }
        let mut rows = vec![false; n];
        let mut cols = vec![false; n];
        let mut vals = vec![false; n + 1];
        self.placements.iter().all(|&(r, c, v)| {
            r < n
                && c < n
                && (1..=n).contains(&v)
                && host.get(r, c) == v
                && !std::mem::replace(&mut rows[r], true)
                && !std::mem::replace(&mut cols[c], true)
                && !std::mem::replace(&mut vals[v], true)
        })
    }

    /// Cells as a `(row, col)` set, for comparing partitions.
    pub fn cells(&self) -> BTreeSet<(usize, usize)> {
        self.placements.iter().map(|&(r, c, _)| (r, c)).collect()
    }
}

/// For each row `s` of `companion`, the cells where `host` agrees with it
/// form a transversal of `host`; together they partition `host`.
pub fn transversals_from_companion(host: &LatinSquare, companion: &LatinSquare) -> Result<Vec<Transversal>> {
    if let Some(d) = pair_defect(host, companion)? {
        return Err(Error::Mpls(format!("host and companion are not projective: {d:?}")));
    }
    let n = host.order();
    Ok((0..n)
        .map(|s| Transversal {
            order: n,
            placements: (0..n)
                .map(|r| {
                    let c = (0..n)
                        .find(|&c| host.get(r, c) == companion.get(s, c))
                        .expect("projective rows agree in one column");
                    (r, c, host.get(r, c))
                })
                .collect(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub companion: usize,
    pub transversals: Vec<Transversal>,
    /// Every transversal is valid and the cells partition the square.
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvabilityReport {
    pub target: usize,
    pub order: usize,
    pub resolutions: Vec<Resolution>,
    pub all_valid: bool,
    /// No two resolutions split the square into the same set of transversals.
    pub pairwise_distinct: bool,
}

impl ResolvabilityReport {
    /// The number of verified, mutually distinct resolutions.
    pub fn fold(&self) -> usize {
        if self.all_valid && self.pairwise_distinct {
            self.resolutions.len()
        } else {
            0
        }
    }
}

fn is_partition(host: &LatinSquare, ts: &[Transversal]) -> bool {
    let n = host.order();
    let mut covered = vec![false; n * n];
    ts.len() == n
        && ts.iter().all(|t| {
            t.is_valid_for(host)
                && t.placements
                    .iter()
                    .all(|&(r, c, _)| !std::mem::replace(&mut covered[r * n + c], true))
        })
        && covered.iter().all(|&x| x)
}

/// Resolves square `target` once per other square of a complete set, giving
/// `κ − 2` resolutions.
pub fn resolvability_report(set: &MplsSet, target: usize) -> Result<ResolvabilityReport> {
    let n = set.order();
    if n < 3 {
        return Err(Error::Mpls(format!("resolutions need order at least 3, got {n}")));
    }
    require_complete(set)?;
    let host = set
        .squares()
        .get(target)
        .ok_or_else(|| Error::Mpls(format!("target {target} out of range for {} squares", set.len())))?;
    let mut resolutions = Vec::with_capacity(n - 2);
    for (k, companion) in set.squares().iter().enumerate() {
        if k == target {
            continue;
        }
        let transversals = transversals_from_companion(host, companion)?;
        let valid = is_partition(host, &transversals);
        resolutions.push(Resolution {
            companion: k,
            transversals,
            valid,
        });
    }
    let keys: BTreeSet<BTreeSet<BTreeSet<(usize, usize)>>> = resolutions
        .iter()
        .map(|r| r.transversals.iter().map(Transversal::cells).collect())
        .collect();
    Ok(ResolvabilityReport {
        target,
        order: n,
        all_valid: resolutions.iter().all(|r| r.valid),
        pairwise_distinct: keys.len() == resolutions.len(),
        resolutions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolCount {
    /// `counts[s - 1]` is how often symbol `s` appears in the submatrix.
    pub counts: Vec<usize>,
    /// `|rows| + |cols| − n` when positive.
    pub m: Option<usize>,
    /// Every symbol appears at least `m` times (vacuously true without `m`).
    pub verdict: bool,
}

/// Symbol counts over `rows × cols`. When `|rows| + |cols| = n + m` with
/// `m ≥ 1`, every symbol must appear at least `m` times.
pub fn submatrix_symbol_count(l: &LatinSquare, rows: &[usize], cols: &[usize]) -> Result<SymbolCount> {
    let n = l.order();
    let rows: BTreeSet<usize> = rows.iter().copied().collect();
    let cols: BTreeSet<usize> = cols.iter().copied().collect();
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::Dimension("row and column sets must be nonempty".into()));
    }
    if rows.iter().chain(&cols).any(|&x| x >= n) {
        return Err(Error::Dimension(format!("index out of range for order {n}")));
    }
    let mut counts = vec![0; n];
    for &r in &rows {
        for &c in &cols {
            counts[l.get(r, c) - 1] += 1;
        }
    }
    let m = (rows.len() + cols.len()).checked_sub(n).filter(|&m| m >= 1);
    let verdict = m.is_none_or(|m| counts.iter().all(|&k| k >= m));
    Ok(SymbolCount { counts, m, verdict })
}

/// Checks the table is a group: an identity element and associativity over
/// all triples. Symbol `s` stands for the element with row/column index `s − 1`.
pub fn check_group_table(cayley: &LatinSquare) -> Result<usize> {
    let n = cayley.order();
    let prod = |a: usize, b: usize| cayley.get(a, b) - 1;
    let e = (0..n)
        .find(|&e| (0..n).all(|x| prod(e, x) == x && prod(x, e) == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if prod(prod(a, b), c) != prod(a, prod(b, c)) {
                    return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                }
            }
        }
    }
    Ok(e)
}

/// True iff the products `ab`, `a ∈ A`, `b ∈ B`, cover the whole group.
pub fn group_product_cover(cayley: &LatinSquare, a_rows: &[usize], b_cols: &[usize]) -> Result<bool> {
    check_group_table(cayley)?;
    let n = cayley.order();
    if a_rows.iter().chain(b_cols).any(|&x| x >= n) {
        return Err(Error::Dimension(format!("element index out of range for order {n}")));
    }
    let mut hit = vec![false; n + 1];
    for &a in a_rows {
        for &b in b_cols {
            hit[cayley.get(a, b)] = true;
        }
    }
    Ok(hit[1..].iter().all(|&h| h))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// The complete set of four MPLS of order 5, transcribed.
    pub fn order5_set() -> MplsSet {
        let sq = |rows: [[usize; 5]; 5]| LatinSquare::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        MplsSet::new(
            5,
            vec![
                sq([
                    [1, 2, 3, 4, 5],
                    [4, 1, 5, 3, 2],
                    [5, 3, 1, 2, 4],
                    [2, 5, 4, 1, 3],
                    [3, 4, 2, 5, 1],
                ]),
                sq([
                    [1, 3, 4, 5, 2],
                    [5, 1, 2, 4, 3],
                    [2, 4, 1, 3, 5],
                    [3, 2, 5, 1, 4],
                    [4, 5, 3, 2, 1],
                ]),
                sq([
                    [1, 4, 5, 2, 3],
                    [2, 1, 3, 5, 4],
                    [3, 5, 1, 4, 2],
                    [4, 3, 2, 1, 5],
                    [5, 2, 4, 3, 1],
                ]),
                sq([
                    [1, 5, 2, 3, 4],
                    [3, 1, 4, 2, 5],
                    [4, 2, 1, 5, 3],
                    [5, 4, 3, 1, 2],
                    [2, 3, 5, 4, 1],
                ]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn latin_validation() {
        assert!(LatinSquare::new(vec![vec![1, 2], vec![1, 2]]).is_err());
        assert!(LatinSquare::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(LatinSquare::new(vec![vec![1, 2]]).is_err());
        assert!(LatinSquare::new(vec![]).is_err());
        assert!(LatinSquare::cyclic(4).is_ok());
    }

    #[test]
    fn projectivity_examples() {
        let set = order5_set();
        let [l1, l2, ..] = set.squares() else { unreachable!() };
        assert!(projective_pair(l1, l2).unwrap());
        // distinct rows of one Latin square never agree, equal rows agree everywhere
        assert_eq!(
            pair_defect(l1, l1).unwrap(),
            Some(PairDefect::RowAgreement {
                row_a: 0,
                row_b: 0,
                common: 5
            })
        );
        let s2 = LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert!(!projective_pair(&s2, &s2).unwrap());
        let cyc = LatinSquare::cyclic(5).unwrap();
        assert_eq!(
            pair_defect(&cyc, l1).unwrap(),
            Some(PairDefect::NotUnitDiagonal { which: 0 })
        );
        assert!(pair_defect(&s2, l1).is_err());
    }

    #[test]
    fn order5_set_is_complete() {
        let rep = verify_mpls(&order5_set());
        assert!(rep.is_mpls && rep.is_complete);
        let mut three = order5_set().squares().to_vec();
        three.pop();
        let rep = verify_mpls(&MplsSet::new(5, three).unwrap());
        assert!(rep.is_mpls && !rep.is_complete);
    }

    #[test]
    fn transposes_of_the_order5_set() {
        let t: Vec<LatinSquare> = order5_set().squares().iter().map(LatinSquare::transpose).collect();
        let rep = verify_mpls(&MplsSet::new(5, t).unwrap());
        // regression value from the pairwise check
        assert!(rep.is_mpls && rep.is_complete);
    }

    #[test]
    fn bound_on_set_size() {
        let s = LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert!(MplsSet::new(2, vec![s.clone()]).is_ok());
        assert!(MplsSet::new(2, vec![s.clone(), s]).is_err());
        assert!(MplsSet::new(5, vec![LatinSquare::cyclic(5).unwrap()]).is_err());
    }

    #[test]
    fn coverage() {
        let set = order5_set();
        let pairs = column_pairs(&set, 0, 1).unwrap();
        assert_eq!(pairs.iter().collect::<BTreeSet<_>>().len(), 20);
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert!(pair_coverage(&set, i, j).unwrap());
                }
            }
        }
        assert!(pair_coverage(&set, 2, 2).is_err());
        let k2 = MplsSet::new(2, vec![LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap()]).unwrap();
        assert_eq!(column_pairs(&k2, 0, 1).unwrap(), vec![(1, 2), (2, 1)]);
        assert!(pair_coverage(&k2, 0, 1).unwrap());
    }

    #[test]
    fn companion_transversals() {
        let set = order5_set();
        let [l1, l2, ..] = set.squares() else { unreachable!() };
        let ts = transversals_from_companion(l1, l2).unwrap();
        assert_eq!(
            ts[0].placements,
            vec![(0, 0, 1), (1, 4, 2), (2, 1, 3), (3, 2, 4), (4, 3, 5)]
        );
        assert!(is_partition(l1, &ts));
        assert!(transversals_from_companion(l1, l1).is_err());
    }

    #[test]
    fn resolutions() {
        let set = order5_set();
        for target in [0, 2] {
            let rep = resolvability_report(&set, target).unwrap();
            assert_eq!(rep.resolutions.len(), 3);
            assert!(rep.all_valid && rep.pairwise_distinct);
            assert_eq!(rep.fold(), 3);
        }
        assert!(resolvability_report(&set, 4).is_err());
        let k2 = MplsSet::new(2, vec![LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap()]).unwrap();
        assert!(resolvability_report(&k2, 0).is_err());
        let mut three = set.squares().to_vec();
        three.pop();
        assert!(resolvability_report(&MplsSet::new(5, three).unwrap(), 0).is_err());
    }

    #[test]
    fn symbol_counts() {
        let c3 = LatinSquare::cyclic(3).unwrap();
        // rows {1,2} x cols {1,2} of 1 2 3 / 2 3 1 is 1 2 / 2 3
        let sc = submatrix_symbol_count(&c3, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(sc.counts, vec![1, 2, 1]);
        assert_eq!(sc.m, Some(1));
        assert!(sc.verdict);
        let all: Vec<usize> = (0..3).collect();
        let sc = submatrix_symbol_count(&c3, &all, &all).unwrap();
        assert_eq!((sc.counts.clone(), sc.m, sc.verdict), (vec![3, 3, 3], Some(3), true));
        let sc = submatrix_symbol_count(&c3, &[0], &[0]).unwrap();
        assert_eq!((sc.m, sc.verdict), (None, true));
        assert!(submatrix_symbol_count(&c3, &[], &[0]).is_err());
    }

    #[test]
    fn group_cover() {
        let z4 = LatinSquare::cyclic(4).unwrap();
        assert!(group_product_cover(&z4, &[0, 1, 2], &[0, 1]).unwrap());
        assert!(group_product_cover(&z4, &[0, 1, 2, 3], &[0]).unwrap());
        assert!(!group_product_cover(&z4, &[0, 1], &[0, 1]).unwrap());
        // a Latin square with no identity element
        let bad = LatinSquare::new(vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]).unwrap();
        assert!(matches!(
            group_product_cover(&bad, &[0], &[0]),
            Err(Error::NotAGroup(_))
        ));
        // an identity but non-associative loop of order 5
        let lp = LatinSquare::new(vec![
            vec![1, 2, 3, 4, 5],
            vec![2, 1, 4, 5, 3],
            vec![3, 5, 1, 2, 4],
            vec![4, 3, 5, 1, 2],
            vec![5, 4, 2, 3, 1],
        ])
        .unwrap();
        assert!(matches!(check_group_table(&lp), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn random_squares_are_latin_and_reproducible() {
        for n in 1..=7 {
            let a = LatinSquare::random(n, &mut ChaCha8Rng::seed_from_u64(n as u64)).unwrap();
            let b = LatinSquare::random(n, &mut ChaCha8Rng::seed_from_u64(n as u64)).unwrap();
            assert_eq!(a, b);
            assert!(a.check().is_ok());
        }
    }

    #[test]
    fn ls_formats() {
        let set = order5_set();
        let s = &set.squares()[0];
        assert_eq!(LatinSquare::parse_ls(&s.to_ls_string()).unwrap(), *s);
        let text = to_ls_collection(set.squares());
        assert_eq!(parse_ls_collection(&text).unwrap(), set.squares());
        assert!(LatinSquare::parse_ls("2\n1 2\n").is_err());
        assert!(LatinSquare::parse_ls("2\n1 2\n2 x\n").is_err());
        assert!(LatinSquare::parse_ls("2\n1 2\n1 2\n").is_err());
    }
}
