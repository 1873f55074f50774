use blockcalc_core::arith::{frac, rat};
use blockcalc_core::csa::QuaternionAlgebraQ;
use blockcalc_core::matalg::{
    centralizer, companion_embedding, skolem_noether_conjugator, verify_double_centralizer, Ambient, MatrixOverB,
    QuaternionElement, SubalgebraSpec,
};
use blockcalc_core::BigRational;
use proptest::prelude::*;

fn quaternion() -> impl Strategy<Value = QuaternionElement> {
    proptest::collection::vec((-4i64..=4, 1i64..=3), 4)
        .prop_map(|v| QuaternionElement::from_coords([0, 1, 2, 3].map(|i| frac(v[i].0, v[i].1))))
}

fn int_quaternion() -> impl Strategy<Value = QuaternionElement> {
    proptest::collection::vec(-2i64..=2, 4).prop_map(|v| QuaternionElement::from_coords([0, 1, 2, 3].map(|i| rat(v[i]))))
}

/// Eisenstein at `p`, hence irreducible: `x^n + p (c_{n-1} x^{n-1} + ... + c_1 x + u)` with `p` not dividing `u`.
fn eisenstein() -> impl Strategy<Value = Vec<BigRational>> {
    (1usize..=4, prop::sample::select(vec![2i64, 3, 5]), proptest::collection::vec(-2i64..=2, 3), 1i64..=4)
        .prop_filter("p does not divide u", |(_, p, _, u)| u % p != 0)
        .prop_map(|(n, p, c, u)| {
            let mut poly = vec![rat(p * u)];
            for i in 1..n {
                poly.push(rat(p * c[i - 1]));
            }
            poly.push(rat(1));
            poly
        })
}

fn invertible(amb: &Ambient) -> impl Strategy<Value = MatrixOverB> {
    let amb = amb.clone();
    let n = amb.size();
    let entries = if amb.algebra().is_some() {
        int_quaternion().boxed()
    } else {
        (-3i64..=3).prop_map(|x| QuaternionElement::scalar(rat(x))).boxed()
    };
    proptest::collection::vec(entries, n * n)
        .prop_map(move |v| amb.from_entries(v.chunks(n).map(|r| r.to_vec()).collect()).unwrap())
        .prop_filter("invertible", |m| m.is_invertible())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norms_multiply(p in quaternion(), q in quaternion(), a in -7i64..=7, b in -7i64..=7) {
        prop_assume!(a != 0 && b != 0);
        let (a, b) = (rat(a), rat(b));
        prop_assert_eq!(p.mul(&q, &a, &b).norm(&a, &b), p.norm(&a, &b) * q.norm(&a, &b));
    }

    #[test]
    fn companion_satisfies_its_polynomial(poly in eisenstein()) {
        let n = poly.len() - 1;
        let c = companion_embedding(&poly, &Ambient::matrices(n)).unwrap();
        prop_assert!(c.eval_poly(&poly).is_zero());
        let s = SubalgebraSpec::generated_by(&Ambient::matrices(n), vec![c]).unwrap();
        prop_assert_eq!(s.dim(), n);
        prop_assert_eq!(centralizer(&s).dim() * s.dim(), n * n);
        prop_assert!(verify_double_centralizer(&s));
    }

    #[test]
    fn double_centralizer_contains(m in invertible(&Ambient::matrices(2))) {
        let s = SubalgebraSpec::generated_by(&Ambient::matrices(2), vec![m]).unwrap();
        let cc = centralizer(&centralizer(&s));
        for x in s.basis() {
            prop_assert!(cc.contains(x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugators_conjugate_rationally(b0 in invertible(&Ambient::matrices(2)), d in prop::sample::select(vec![-1i64, 2, -3, 5])) {
        let amb = Ambient::matrices(2);
        let psi = companion_embedding(&[rat(-d), rat(0), rat(1)], &amb).unwrap();
        let phi = b0.mul(&psi).unwrap().mul(&b0.inverse().unwrap()).unwrap();
        let b = skolem_noether_conjugator(&[phi.clone()], &[psi.clone()], 6).unwrap();
        prop_assert_eq!(b.mul(&psi).unwrap().mul(&b.inverse().unwrap()).unwrap(), phi);
    }

    #[test]
    fn conjugators_conjugate_quaternionically(b0 in invertible(&Ambient::over_quaternions(2, QuaternionAlgebraQ::from_ints(-1, -1).unwrap()))) {
        let amb = Ambient::over_quaternions(2, QuaternionAlgebraQ::from_ints(-1, -1).unwrap());
        let psi = amb.diagonal(&QuaternionElement::i()).unwrap();
        let phi = b0.mul(&psi).unwrap().mul(&b0.inverse().unwrap()).unwrap();
        let b = skolem_noether_conjugator(&[phi.clone()], &[psi.clone()], 6).unwrap();
        prop_assert_eq!(b.mul(&psi).unwrap().mul(&b.inverse().unwrap()).unwrap(), phi);
    }
}
