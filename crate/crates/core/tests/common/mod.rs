//! Brute-force oracles shared by the integration suites. They enumerate
//! directly and do not touch the matching code under test.

#![allow(dead_code)]

use mpls::BinaryMatrix;

/// Maximum number of independent ones by exhaustive DP over (row, used-column mask).
pub fn brute_v(f: &BinaryMatrix) -> usize {
    let (m, n) = (f.rows(), f.cols());
    assert!(n <= 16);
    let mut memo = vec![vec![usize::MAX; 1 << n]; m + 1];
    fn go(f: &BinaryMatrix, i: usize, used: usize, memo: &mut [Vec<usize>]) -> usize {
        if i == f.rows() {
            return 0;
        }
        if memo[i][used] != usize::MAX {
            return memo[i][used];
        }
        let mut best = go(f, i + 1, used, memo);
        for c in 0..f.cols() {
            if f.get(i, c) && used & (1 << c) == 0 {
                best = best.max(1 + go(f, i + 1, used | (1 << c), memo));
            }
        }
        memo[i][used] = best;
        best
    }
    go(f, 0, 0, &mut memo)
}

/// Largest `a + b` over all-zero submatrices with `a, b >= 1`, or 0 if none:
/// every nonempty row subset, paired with all columns zero on it.
pub fn brute_w(f: &BinaryMatrix) -> usize {
    let (m, n) = (f.rows(), f.cols());
    let mut best = 0;
    for mask in 1usize..(1 << m) {
        let a = mask.count_ones() as usize;
        let b = (0..n)
            .filter(|&c| (0..m).all(|r| mask & (1 << r) == 0 || !f.get(r, c)))
            .count();
        if b >= 1 {
            best = best.max(a + b);
        }
    }
    best
}

/// The matrix whose row-major bits are the low `rows * cols` bits of `code`.
pub fn matrix_from_code(rows: usize, cols: usize, code: u64) -> BinaryMatrix {
    BinaryMatrix::from_fn(rows, cols, |i, j| code >> (i * cols + j) & 1 == 1).unwrap()
}

pub fn random_matrix(rng: &mut impl rand::Rng, max_dim: usize) -> BinaryMatrix {
    let rows = rng.random_range(1..=max_dim);
    let cols = rng.random_range(1..=max_dim);
    let density: f64 = rng.random_range(0.1..0.95);
    BinaryMatrix::from_fn(rows, cols, |_, _| rng.random_bool(density)).unwrap()
}

/// All subsets of `0..n` as index lists.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0usize..1 << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Cayley table of S_3 with elements as permutations of {0,1,2} in
/// lexicographic order; `(a * b)(x) = a(b(x))`.
pub fn s3_table() -> mpls::LatinSquare {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let rows = perms
        .iter()
        .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]) + 1).collect())
        .collect();
    mpls::LatinSquare::new(rows).unwrap()
}

/// The transcribed complete set of order 5 from `fixtures/order5.ls`.
pub fn order5_set() -> mpls::MplsSet {
    let squares = mpls::latin::parse_ls_collection(include_str!("../fixtures/order5.ls")).unwrap();
    mpls::MplsSet::new(5, squares).unwrap()
}
