#![allow(dead_code)]

use blockcalc_core::arith::frac;
use blockcalc_core::cohom::{CoefficientBasis, FiniteGroup, MultiplicativeValue};
use blockcalc_core::cyclo::{reduce_mod_cyclotomic, CyclotomicElement};
use blockcalc_core::BigRational;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

/// A random element of `Q(zeta_n)` with small coefficients.
pub fn cyclotomic(n: u64) -> impl Strategy<Value = CyclotomicElement> {
    proptest::collection::vec(small_rational(), n as usize).prop_map(move |c| reduce_mod_cyclotomic(&c, n))
}

/// Every group of order at most 8 we know how to build, up to isomorphism.
pub fn small_groups() -> Vec<FiniteGroup> {
    let c2 = FiniteGroup::cyclic(2);
    let mut out: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    out.push(FiniteGroup::direct_product(&c2, &c2));
    out.push(FiniteGroup::dihedral(3));
    out.push(FiniteGroup::direct_product(&c2, &FiniteGroup::cyclic(4)));
    out.push(FiniteGroup::direct_product(&FiniteGroup::direct_product(&c2, &c2), &c2));
    out.push(FiniteGroup::dihedral(4));
    out.push(FiniteGroup::quaternion());
    out
}

pub fn basis() -> CoefficientBasis {
    CoefficientBasis::parse(&["-1", "2", "3", "5"]).unwrap()
}

/// `+- 2^a 3^b 5^c` with small exponents.
pub fn value() -> impl Strategy<Value = MultiplicativeValue> {
    (any::<bool>(), -2i64..=2, -2i64..=2, -1i64..=1).prop_map(|(neg, a, b, c)| {
        let mut q = BigRational::from_integer(if neg { (-1).into() } else { 1.into() });
        for (p, e) in [(2i64, a), (3, b), (5, c)] {
            let pp = frac(p, 1);
            for _ in 0..e.abs() {
                q = if e > 0 { q * &pp } else { q / &pp };
            }
        }
        MultiplicativeValue::from_rational(&q, &basis()).unwrap()
    })
}

/// A group of order at most 8 with a normalized map into `Q^*`.
pub fn group_with_map() -> impl Strategy<Value = (FiniteGroup, Vec<MultiplicativeValue>)> {
    let groups = small_groups();
    (0..groups.len()).prop_flat_map(move |i| {
        let g = groups[i].clone();
        let n = g.order();
        proptest::collection::vec(value(), n).prop_map(move |mut f| {
            f[0] = MultiplicativeValue::one(basis().len());
            (g.clone(), f)
        })
    })
}
