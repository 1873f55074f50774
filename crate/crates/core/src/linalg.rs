//! Exact Gaussian elimination over `Q`.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Vector = Vec<BigRational>;

/// Row-reduces `rows` in place to reduced echelon form; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` for an `m x ncols` matrix `A` given by rows.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is unique when `A` has full column rank.
pub fn solve(rows: &[Vector], rhs: &[BigRational], ncols: usize) -> Option<Vector> {
    let mut aug: Vec<Vector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

pub fn determinant(square: &[Vector]) -> BigRational {
    let n = square.len();
    let mut m = square.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[c]).skip(c) {
                *x -= &f * y;
            }
        }
    }
    det
}

const RANK_PRIME: u64 = (1 << 61) - 1;

fn mod_prime(q: &BigRational) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let p = BigInt::from(RANK_PRIME);
    let reduce = |x: &BigInt| -> u64 { x.mod_floor(&p).to_u64().expect("reduced below p") };
    let den = reduce(q.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce(q.numer()), pow_mod(den, RANK_PRIME - 2)))
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Reduces a rational matrix modulo a fixed large prime, or `None` when some
/// denominator vanishes there.
pub(crate) fn reduce_mod_prime(m: &[Vector]) -> Option<Vec<Vec<u64>>> {
    m.iter().map(|r| r.iter().map(mod_prime).collect()).collect()
}

/// `sum coeffs[i] * mats[i]` modulo the prime used by [`reduce_mod_prime`].
pub(crate) fn combine_mod_prime(mats: &[Vec<Vec<u64>>], coeffs: &[i64]) -> Vec<Vec<u64>> {
    let (rows, cols) = (mats[0].len(), mats[0].first().map_or(0, Vec::len));
    let mut out = vec![vec![0u64; cols]; rows];
    for (m, &x) in mats.iter().zip(coeffs) {
        if x == 0 {
            continue;
        }
        let c = if x > 0 { x as u64 % RANK_PRIME } else { RANK_PRIME - (x.unsigned_abs() % RANK_PRIME) };
        for (o, r) in out.iter_mut().zip(m) {
            for (a, &b) in o.iter_mut().zip(r) {
                *a = (*a + mul_mod(c, b)) % RANK_PRIME;
            }
        }
    }
    out
}

/// Full rank modulo the prime; a `true` answer implies full rank over `Q`.
pub(crate) fn full_rank_mod_prime(mut m: Vec<Vec<u64>>) -> bool {
    let n = m.len();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
            return false;
        };
        m.swap(p, c);
        let inv = pow_mod(m[c][c], RANK_PRIME - 2);
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul_mod(m[i][c], inv);
            let (top, bottom) = m.split_at_mut(i);
            for (x, &y) in bottom[0].iter_mut().zip(&top[c]).skip(c) {
                *x = (*x + RANK_PRIME - mul_mod(f, y)) % RANK_PRIME;
            }
        }
    }
    true
}

/// Whether a square matrix over `Q` is nonsingular. Elimination runs modulo a
/// large prime first; only an apparent singularity is confirmed exactly.
pub fn is_nonsingular(square: &[Vector]) -> bool {
    if reduce_mod_prime(square).is_some_and(full_rank_mod_prime) {
        return true;
    }
    !determinant(square).is_zero()
}

/// A subspace of `Q^dim` with an incrementally maintained echelon basis.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    // (pivot column, row normalized so that row[pivot] = 1)
    echelon: Vec<(usize, Vector)>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Self { dim, echelon: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    fn reduce(&self, v: &[BigRational]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.echelon {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, row) in self.echelon.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.echelon.push((p, r));
        true
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.echelon.iter().all(|(_, v)| other.contains(v))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}
