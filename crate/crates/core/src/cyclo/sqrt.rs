use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::arith::{factorize_rational, lcm, pow_mod};

use super::{cyclotomic_polynomial, reduce_integers, CyclotomicElement};

fn legendre(a: u64, p: u64) -> i64 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// A square root of a nonzero rational inside the smallest cyclotomic field containing it.
///
/// The product of the quadratic Gauss sums `g_p = sum (a/p) zeta_p^a` (with `g_p^2 = p*`)
/// is written down directly by CRT, times `zeta_4` or `zeta_8 +- zeta_8^{-1}` for the
/// residual sign and the prime 2, times the rational square part.
pub fn sqrt_as_cyclotomic(d: &BigRational) -> (u64, CyclotomicElement) {
    assert!(!num_traits::Zero::is_zero(d), "square root of zero requested");
    let (sign, factors) = factorize_rational(d);
    let mut square_part = BigRational::one();
    let mut odd_primes = alloc::vec::Vec::new();
    let mut has_two = false;
    for (p, e) in factors {
        let q = e.div_euclid(2);
        let pb = BigRational::from_integer(BigInt::from(p));
        square_part *= Pow::pow(&pb, q as i32);
        if e.rem_euclid(2) == 1 {
            if p == 2 {
                has_two = true;
            } else {
                odd_primes.push(p);
            }
        }
    }

    // product of p* over the odd primes has sign (-1)^#{p = 3 mod 4}
    let star_sign: i8 = if odd_primes.iter().filter(|&&p| p % 4 == 3).count() % 2 == 0 { 1 } else { -1 };
    let residual = sign * star_sign;
    // the correcting factor as (conductor, exponent) terms
    let fix: &[(u64, u64)] = match (has_two, residual) {
        (true, 1) => &[(8, 1), (8, 7)],
        (true, _) => &[(8, 1), (8, 3)],
        (false, -1) => &[(4, 1)],
        _ => &[(1, 0)],
    };
    let p_all: u64 = odd_primes.iter().product();
    let n = lcm(p_all, fix[0].0);
    let cofactors: alloc::vec::Vec<(u64, u64)> = odd_primes
        .iter()
        .map(|&p| {
            let c = (p_all / p) % p;
            (p, pow_mod(c, p - 2, p))
        })
        .collect();
    let mut raw = alloc::vec![BigInt::from(0); n as usize];
    for x in 0..p_all {
        let coef: i64 = cofactors.iter().map(|&(p, inv)| legendre(x % p * inv, p)).product();
        if coef == 0 {
            continue;
        }
        for &(c, e) in fix {
            let idx = (x * (n / p_all) + e * (n / c)) % n;
            raw[idx as usize] += coef;
        }
    }
    let coeffs = reduce_integers(raw, &cyclotomic_polynomial(n))
        .into_iter()
        .map(|c| BigRational::from_integer(c) * &square_part)
        .collect();
    (n, CyclotomicElement { conductor: n, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};

    #[test]
    fn base_cases() {
        let (n, s) = sqrt_as_cyclotomic(&rat(2));
        assert_eq!(n, 8);
        assert_eq!(s, &CyclotomicElement::zeta(8) + &CyclotomicElement::zeta_pow(8, -1));
        let (n, s) = sqrt_as_cyclotomic(&rat(-1));
        assert_eq!((n, s), (4, CyclotomicElement::zeta(4)));
        let (n, s) = sqrt_as_cyclotomic(&frac(9, 4));
        assert_eq!((n, s), (1, CyclotomicElement::rational(frac(3, 2))));
    }

    #[test]
    fn conductors_are_discriminants() {
        for (d, n) in [(-3, 3), (5, 5), (3, 12), (-2, 8), (6, 24), (-7, 7), (-15, 15), (15, 60)] {
            let (c, s) = sqrt_as_cyclotomic(&rat(d));
            assert_eq!(c, n, "conductor of sqrt({})", d);
            assert_eq!(&s * &s, CyclotomicElement::integer(d));
        }
    }
}
