use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A finite group given by its multiplication table; element `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity at index 0, inverses and associativity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let g = rows.len();
        if g == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(g * g);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != g {
                return Err(Error::InvalidGroup(format!("row {} has length {}", i, row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= g) {
                return Err(Error::InvalidGroup(format!("entry {} out of range", bad)));
            }
            table.extend_from_slice(row);
        }
        for a in 0..g {
            if table[a] != a || table[a * g] != a {
                return Err(Error::InvalidGroup(format!("element 0 is not an identity for {}", a)));
            }
        }
        let mut inverses = vec![usize::MAX; g];
        for a in 0..g {
            let mut seen = vec![false; g];
            for b in 0..g {
                let c = table[a * g + b];
                if seen[c] {
                    return Err(Error::InvalidGroup(format!("row {} repeats {}", a, c)));
                }
                seen[c] = true;
                if c == 0 {
                    inverses[a] = b;
                }
            }
        }
        for a in 0..g {
            for b in 0..g {
                let ab = table[a * g + b];
                for c in 0..g {
                    if table[ab * g + c] != table[a * g + table[b * g + c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        Ok(Self { order: g, table, inverses })
    }

    fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..order).map(|a| (0..order).map(|b| f(a, b)).collect()).collect();
        Self::from_table(&rows).expect("constructed table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` standing for the `k`-th power of a generator.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: index `r + n*s` is `rot^r ref^s`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(2 * n, |a, b| {
            let (r1, s1) = (a % n, a / n);
            let (r2, s2) = (b % n, b / n);
            let r = if s1 == 0 { (r1 + r2) % n } else { (r1 + n - r2) % n };
            r + n * ((s1 + s2) % 2)
        })
    }

    /// Quaternion group of order 8: indices `0..4` are `i^k`, `4..8` are `i^k j`.
    pub fn quaternion() -> Self {
        Self::from_fn(8, |a, b| {
            let (k1, j1) = (a % 4, a / 4);
            let (k2, j2) = (b % 4, b / 4);
            // j i^k = i^{-k} j and j^2 = i^2
            let (k2, extra) = if j1 == 1 { ((4 - k2) % 4, if j2 == 1 { 2 } else { 0 }) } else { (k2, 0) };
            (k1 + k2 + extra) % 4 + 4 * ((j1 + j2) % 2)
        })
    }

    /// `A x B` with `(a, b)` at index `a * |B| + b`.
    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let nb = b.order;
        Self::from_fn(a.order * nb, |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
    }

    /// Central extension of `self` by `Z/w` along the cocycle `t` (exponents mod `w`):
    /// `(a, s)(b, u) = (a + b + t(s, u), su)`, with `(a, s)` at index `s * w + a`.
    pub fn central_extension(&self, w: u64, t: impl Fn(usize, usize) -> u64) -> (Self, Vec<usize>) {
        let w = w as usize;
        let ext = Self::from_fn(self.order * w, |x, y| {
            let (s, a) = (x / w, x % w);
            let (u, b) = (y / w, y % w);
            let c = (a + b + t(s, u) as usize) % w;
            self.mul(s, u) * w + c
        });
        let projection = (0..self.order * w).map(|x| x / w).collect();
        (ext, projection)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}
