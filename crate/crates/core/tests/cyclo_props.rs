mod common;

use blockcalc_core::arith::{frac, gcd, totient, units_mod};
use blockcalc_core::cyclo::{generated_subfield, sqrt_as_cyclotomic, CyclotomicElement};
use common::cyclotomic;
use proptest::prelude::*;

fn conductor_and_three() -> impl Strategy<Value = (CyclotomicElement, CyclotomicElement, CyclotomicElement)> {
    (1u64..=24).prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((x, y, z) in conductor_and_three()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn galois_composition(n in 1u64..=24, seed in any::<u64>()) {
        let units = units_mod(n);
        let a = units[(seed % units.len() as u64) as usize];
        let b = units[((seed / 31) % units.len() as u64) as usize];
        let x = &CyclotomicElement::zeta(n) + &CyclotomicElement::zeta_pow(n, 2).scale(&frac(3, 2));
        let lhs = x.galois_act(b as i64).unwrap().galois_act(a as i64).unwrap();
        prop_assert_eq!(lhs, x.galois_act(((a * b) % n) as i64).unwrap());
    }

    #[test]
    fn square_roots(num in -50i64..=50, den in 1i64..=50) {
        prop_assume!(num != 0);
        let d = frac(num, den);
        let (_, r) = sqrt_as_cyclotomic(&d);
        prop_assert_eq!((&r * &r).as_rational(), Some(d));
    }

    #[test]
    fn subfield_degrees(m in 1u64..=12, n in 1u64..=12) {
        let sm = generated_subfield(&[CyclotomicElement::zeta(m)], m).unwrap();
        prop_assert_eq!(totient(m) % sm.degree, 0);
        let x = sqrt_as_cyclotomic(&frac(2, 1)).1;
        let s2 = generated_subfield(&[x.clone()], x.conductor()).unwrap();
        prop_assert_eq!(s2.degree, 2);
        prop_assume!(gcd(m, n) == 1);
        let sn = generated_subfield(&[CyclotomicElement::zeta(n)], n).unwrap();
        let both = generated_subfield(&[CyclotomicElement::zeta(m), CyclotomicElement::zeta(n)], m * n).unwrap();
        prop_assert_eq!(both.degree, sm.degree * sn.degree);
    }
}
