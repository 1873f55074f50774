use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::PlaceQ;
use crate::arith::{pow_mod, valuation};

/// `x = p^k * u` with `u` a `p`-adic unit; returns `k` and `u mod p^e` (here `e` is 1 or 3).
fn split_at(x: &BigRational, p: u64, modulus: u64) -> (i64, u64) {
    let num = x.numer();
    let den = x.denom();
    let vn = valuation(num, p);
    let vd = valuation(den, p);
    let pb = BigInt::from(p);
    let un = num / num_traits::pow(pb.clone(), vn as usize);
    let ud = den / num_traits::pow(pb, vd as usize);
    let m = BigInt::from(modulus);
    let rn = un.mod_floor(&m).to_u64().expect("residue");
    let rd = ud.mod_floor(&m).to_u64().expect("residue");
    // rd is a unit mod p^e; invert it by brute force over the tiny modulus
    let inv = (1..modulus).find(|&y| (rd * y) % modulus == 1).expect("unit residue");
    (vn as i64 - vd as i64, (rn * inv) % modulus)
}

fn legendre(u: u64, p: u64) -> i8 {
    if pow_mod(u % p, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_v`: `1` iff `a x^2 + b y^2 = z^2` has a nontrivial solution over `Q_v`.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: PlaceQ) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    match v {
        PlaceQ::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        PlaceQ::Finite(2) => {
            let (alpha, u) = split_at(a, 2, 8);
            let (beta, w) = split_at(b, 2, 8);
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w)
                + (alpha.rem_euclid(2) as u64) * omega(w)
                + (beta.rem_euclid(2) as u64) * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        PlaceQ::Finite(p) => {
            let (alpha, u) = split_at(a, p, p);
            let (beta, w) = split_at(b, p, p);
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let mut s: i8 = 1;
            if alpha * beta == 1 && ((p - 1) / 2) % 2 == 1 {
                s = -s;
            }
            if beta == 1 {
                s *= legendre(u, p);
            }
            if alpha == 1 {
                s *= legendre(w, p);
            }
            s
        }
    }
}
