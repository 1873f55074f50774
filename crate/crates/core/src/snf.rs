//! Smith normal form of integer matrices and the linear systems it solves,
//! over `Z` and over `Z/W`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `left * A * right = diag(diagonal)` with unimodular `left`, `right`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    let src = m[source].clone();
    for (x, y) in m[target].iter_mut().zip(&src) {
        *x -= f * y;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let y = row[source].clone();
        row[target] -= f * y;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith_normal_form(a: &IntMatrix, rows: usize, cols: usize) -> SmithForm {
    let mut m = a.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let pick = |m: &IntMatrix| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = pick(&m) else { break };
        m.swap(t, pi);
        left.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut right, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                if !m[i][t].is_zero() {
                    // remainder smaller than pivot: promote it
                    m.swap(t, i);
                    left.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                if !m[t][j].is_zero() {
                    swap_cols(&mut m, t, j);
                    swap_cols(&mut right, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut m, t, i, &minus_one);
                    row_axpy(&mut left, t, i, &minus_one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -x.clone();
            }
            for x in left[t].iter_mut() {
                *x = -x.clone();
            }
        }
        diagonal.push(m[t][t].clone());
    }
    SmithForm { rows, cols, diagonal, left, right }
}

fn mat_vec(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Least `k >= 1` such that `A x = k b` has an integer solution; `None` if
    /// no rational solution exists.
    pub fn min_multiplier(&self, b: &[BigInt]) -> Option<u64> {
        let c = mat_vec(&self.left, b);
        if c[self.rank()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut k = BigInt::one();
        for (d, ci) in self.diagonal.iter().zip(&c) {
            let need = d / d.gcd(ci);
            k = k.lcm(&need);
        }
        k.to_u64()
    }

    /// Least `k >= 1` such that `A x = k b (mod w)` is solvable.
    pub fn min_multiplier_mod(&self, b: &[BigInt], w: u64) -> u64 {
        let wb = BigInt::from(w);
        let c = mat_vec(&self.left, b);
        let mut k = BigInt::one();
        for (i, ci) in c.iter().enumerate() {
            let g = match self.diagonal.get(i) {
                Some(d) => d.gcd(&wb),
                None => wb.clone(),
            };
            let need = &g / g.gcd(&ci.mod_floor(&g).max(BigInt::zero()));
            k = k.lcm(&need);
        }
        k.to_u64().unwrap_or(w)
    }

    /// The integer solution with free coordinates zero, if any.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = mat_vec(&self.left, b);
        if c[self.rank()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = vec![BigInt::zero(); self.cols];
        for (i, d) in self.diagonal.iter().enumerate() {
            let (q, r) = c[i].div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
        Some(mat_vec(&self.right, &y))
    }

    /// Every solution of `A x = b (mod w)`, reduced into `[0, w)`.
    pub fn solve_mod(&self, b: &[BigInt], w: u64) -> Vec<Vec<u64>> {
        let wb = BigInt::from(w);
        let c = mat_vec(&self.left, b);
        if c[self.rank()..].iter().any(|x| !x.mod_floor(&wb).is_zero()) {
            return Vec::new();
        }
        // per coordinate of y: list of admissible residues
        let mut choices: Vec<Vec<BigInt>> = Vec::with_capacity(self.cols);
        for i in 0..self.cols {
            match self.diagonal.get(i) {
                Some(d) => {
                    let g = d.gcd(&wb);
                    if !c[i].mod_floor(&g).is_zero() {
                        return Vec::new();
                    }
                    let step = &wb / &g;
                    let base = if step.is_one() {
                        BigInt::zero()
                    } else {
                        let inv = mod_inverse(&(d / &g).mod_floor(&step), &step)
                            .expect("quotient by gcd is a unit");
                        ((&c[i] / &g) * inv).mod_floor(&step)
                    };
                    let count = g.to_u64().unwrap_or(0);
                    choices.push((0..count).map(|k| &base + &step * BigInt::from(k)).collect());
                }
                None => choices.push((0..w).map(BigInt::from).collect()),
            }
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; self.cols];
        loop {
            let y: Vec<BigInt> = idx.iter().enumerate().map(|(i, &k)| choices[i][k].clone()).collect();
            let x = mat_vec(&self.right, &y);
            out.push(
                x.iter()
                    .map(|v| v.mod_floor(&wb).to_u64().expect("reduced residue fits"))
                    .collect(),
            );
            // odometer
            let mut pos = 0;
            loop {
                if pos == self.cols {
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}
