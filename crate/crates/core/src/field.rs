//! Table-driven arithmetic in `GF(q)`, `q = p^k`.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients, lowest degree first; `0` and `1` are the additive
//! and multiplicative identities. The modulus is the lexicographically
//! smallest monic irreducible polynomial of degree `k` over `Z_p`.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: usize,
    k: usize,
    q: usize,
    /// Coefficients lowest degree first; length `k + 1`, leading coefficient 1.
    modulus: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteField {
    /// `GF(q)` for a prime power `q ≤ 32`.
    pub fn new(q: usize) -> Result<Self> {
        Self::with_bound(q, DEFAULT_MAX_ORDER)
    }

    pub fn with_bound(q: usize, max_order: usize) -> Result<Self> {
        if q > max_order {
            return Err(Error::Field(format!("order {q} exceeds the bound {max_order}")));
        }
        let (p, k) = prime_power(q).ok_or_else(|| Error::Field(format!("{q} is not a prime power")))?;
        let modulus = smallest_irreducible(p, k);
        if !is_irreducible(&modulus, p) {
            return Err(Error::Internal(format!("modulus {modulus:?} is reducible over Z_{p}")));
        }

        let digits = |x: usize| -> Vec<usize> {
            let mut d = Vec::with_capacity(k);
            let mut x = x;
            for _ in 0..k {
                d.push(x % p);
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                let prod = poly_rem(&poly_mul(&da, &db, p), &modulus, p);
                let mut prod = prod;
                prod.resize(k, 0);
                mul[a * q + b] = encode(&prod);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse"))
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| Error::Internal(format!("{a} has no inverse in GF({q})")))?;
        }
        let field = Self {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        };
        field.check_tables()?;
        Ok(field)
    }

    /// Nonzero products form a Latin square on `1..q`, and 0, 1 act as identities.
    fn check_tables(&self) -> Result<()> {
        let q = self.q;
        let mut seen = vec![false; q];
        for a in 1..q {
            seen.fill(false);
            for b in 1..q {
                let c = self.mul(a, b);
                if c == 0 || std::mem::replace(&mut seen[c], true) {
                    return Err(Error::Internal(format!(
                        "row {a} of the GF({q}) product table is not a permutation"
                    )));
                }
            }
        }
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return Err(Error::Internal(format!("identity laws fail for {a} in GF({q})")));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }
}

/// `(p, k)` with `q = p^k`, or `None` when `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let (mut x, mut k) = (q, 0);
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    (x == 1).then_some((p, k))
}

fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomials of degree `d` in lexicographic order of their
/// coefficients read from the top.
fn monic_polys(p: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = p.pow(d as u32);
    (0..count).map(move |t| {
        let mut coeffs = vec![0; d + 1];
        let mut t = t;
        for c in coeffs.iter_mut().take(d) {
            *c = t % p;
            t /= p;
        }
        coeffs[d] = 1;
        coeffs
    })
}

/// No monic factor of degree `1..=deg/2` divides `f`.
pub fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|g| !poly_rem(f, &g, p).is_empty()))
}

fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    monic_polys(p, k)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
