use blockcalc::{emit_report, parse_datum, ReportFormat};
use blockcalc_core::pipeline::{run_pipeline, ClassificationReport};
use proptest::prelude::*;

fn c2_datum(value: &str, a: i64, b: i64) -> String {
    format!(
        r#"{{"group":{{"order":2,"table":[[0,1],[1,0]]}},"basis":["-1","2","3","5"],
            "cocycle":[["1","1"],["1","{}"]],"algebra":{{"a":{},"b":{}}}}}"#,
        value, a, b
    )
}

fn consistent(r: &ClassificationReport) {
    assert_eq!(r.dim_a, r.n * r.dim_b);
    assert_eq!(r.field_degree, r.dim_a);
    assert_eq!(r.n_e, r.e_beta.degree);
    assert!(r.splits && r.descent && r.double_centralizer.holds);
    assert_eq!(r.double_centralizer.centralizer_dim * r.double_centralizer.field_dim, r.double_centralizer.ambient_dim);
    assert_eq!(r.m_cyc == 1, r.t == 1);
    assert!(r.building_block && r.gl2_type);
}

fn twice(text: &str) -> ClassificationReport {
    let d = parse_datum(text).unwrap();
    let r1 = run_pipeline(&d).unwrap();
    let r2 = run_pipeline(&parse_datum(text).unwrap()).unwrap();
    assert_eq!(emit_report(&r1, ReportFormat::Json), emit_report(&r2, ReportFormat::Json));
    assert_eq!(emit_report(&r1, ReportFormat::Human), emit_report(&r2, ReportFormat::Human));
    r1
}

#[test]
fn several_algebras() {
    for (a, b, t) in [(1, 1, 1), (-1, -1, 2), (-1, 3, 2), (2, 5, 2), (-2, -3, 2), (-1, -7, 2)] {
        let r = twice(&c2_datum("2", a, b));
        assert_eq!(r.t, t, "({}, {})", a, b);
        assert_eq!(r.m, 2);
        consistent(&r);
    }
}

#[test]
fn trivial_class() {
    let r = twice(&c2_datum("1", -1, -1));
    assert_eq!(r.m, 1);
    consistent(&r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn random_c2_classes(sign: bool, e in proptest::collection::vec(0u32..=2, 3), alg in 0usize..3) {
        let q = [2i64, 3, 5].iter().zip(&e).map(|(p, &k)| p.pow(k)).product::<i64>() * if sign { -1 } else { 1 };
        let (a, b) = [(1, 1), (-1, -1), (-1, 3)][alg];
        let r = twice(&c2_datum(&q.to_string(), a, b));
        prop_assert!(r.m <= 2);
        consistent(&r);
    }
}
