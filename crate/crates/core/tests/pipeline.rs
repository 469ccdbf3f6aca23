//! End-to-end checks of the oracle → interpolation pipeline against known
//! polynomial values.

use dvr_orbits::interp::{
    conjecture_scan, ideal_polys_interpolated, n_ideal_poly, n_lambda_poly, verify_identities,
    RefStatus, ScanOutcome,
};
use dvr_orbits::{Error, IntPoly, OracleConfig, OrderIdeal, Partition};

fn p(text: &str) -> Partition {
    Partition::parse(text).unwrap()
}

fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(coeffs.to_vec())
}

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn pair_orbit_polynomials() {
    assert_eq!(
        n_lambda_poly(&p("3^1,1^1"), &cfg()).unwrap(),
        poly(&[4, 7, 5, 1])
    );
    assert_eq!(
        n_lambda_poly(&p("2^1,1^1"), &cfg()).unwrap(),
        poly(&[5, 5, 1])
    );
    assert_eq!(
        n_lambda_poly(&Partition::empty(), &cfg()).unwrap(),
        IntPoly::one()
    );
}

#[test]
fn ideal_polynomials() {
    let shape = p("3^1,1^1");
    let two_gen = OrderIdeal::parse_boundary(&shape, "1,0").unwrap();
    let (n, n1, primes) = n_ideal_poly(&shape, &two_gen, &cfg()).unwrap();
    assert_eq!(n, poly(&[-1, 0, 2]));
    assert_eq!(n1, poly(&[-1, 2]));
    assert_eq!(primes, vec![2, 3, 5, 7]);

    let principal = OrderIdeal::parse_boundary(&shape, "2,-").unwrap();
    let (n, n1, _) = n_ideal_poly(&shape, &principal, &cfg()).unwrap();
    assert_eq!(n, poly(&[-2, 4]));
    assert_eq!(n1, poly(&[-1, 2]));

    // Height-zero principal: the interpolation is cross-checked against the
    // closed form inside n_ideal_poly.
    let hz = OrderIdeal::parse_boundary(&shape, "2,0").unwrap();
    let (n, n1, _) = n_ideal_poly(&shape, &hz, &cfg()).unwrap();
    assert_eq!(n, poly(&[1, 3]));
    assert_eq!(n1, poly(&[3]));
}

#[test]
fn ideal_polynomials_reject_unrealized() {
    let shape = p("3^1,1^1");
    let unrealized = OrderIdeal::parse_boundary(&shape, "3,1").unwrap();
    assert!(matches!(
        ideal_polys_interpolated(&shape, &unrealized, &cfg()),
        Err(Error::UnrealizedIdeal(_))
    ));
}

#[test]
fn verify_adjacent_pair() {
    let report = verify_identities(&p("3^1,2^1"), &cfg()).unwrap();
    assert!(report.all_passed(), "{:?}", report.checks);
    let diff = report
        .checks
        .iter()
        .find(|c| c.name == "column-deletion difference")
        .unwrap();
    assert_eq!(diff.lhs, "q^3+4q^2+5q+2");
    assert_eq!(diff.rhs, "q^3+4q^2+5q+2");
}

#[test]
fn verify_handles_triple_multiplicity() {
    let report = verify_identities(&p("1^3"), &cfg()).unwrap();
    assert!(report.all_passed(), "{:?}", report.checks);
    let cap = report
        .checks
        .iter()
        .find(|c| c.name == "multiplicity cap")
        .unwrap();
    assert_eq!(cap.lhs, "q+3");
}

#[test]
fn verify_empty_shape() {
    let report = verify_identities(&Partition::empty(), &cfg()).unwrap();
    assert!(report.all_passed());
}

#[test]
fn verify_weight_six_shapes() {
    // The identity suite extends to weight-6 lattices with several rows.
    for text in ["3^1,2^1,1^1", "2^2,1^2"] {
        let report = verify_identities(&p(text), &cfg()).unwrap();
        assert!(report.all_passed(), "{text}: {:?}", report.checks);
    }
}

#[test]
fn scan_small_range() {
    let mut reference = std::collections::HashMap::new();
    reference.insert("1^1".to_string(), poly(&[2, 1]));
    reference.insert("2^1".to_string(), poly(&[2, 2, 1]));
    reference.insert("2^2".to_string(), poly(&[5, 3, 1]));
    let report = conjecture_scan(4, &cfg(), Some(&reference));
    assert!(report.is_clean());
    let shapes: Vec<String> = report.entries.iter().map(|e| e.shape.to_string()).collect();
    assert_eq!(
        shapes,
        ["1^1", "1^2", "2^1", "2^1,1^1", "3^1", "2^1,1^2", "2^2", "3^1,1^1", "4^1"]
    );
    for entry in &report.entries {
        match (&entry.outcome, entry.shape.to_string().as_str()) {
            (
                ScanOutcome::Computed {
                    poly: got,
                    reference,
                    nonnegative,
                },
                "2^2",
            ) => {
                assert_eq!(*got, poly(&[5, 3, 1]));
                assert!(*nonnegative);
                assert_eq!(*reference, Some(RefStatus::Match));
            }
            (ScanOutcome::Computed { reference, .. }, "3^1,1^1") => {
                assert_eq!(*reference, Some(RefStatus::Absent));
            }
            (ScanOutcome::Computed { .. }, _) => {}
            (other, shape) => panic!("unexpected outcome for {shape}: {other:?}"),
        }
    }
}

#[test]
fn scan_records_budget_exhaustion() {
    let tight = OracleConfig::with_max_elements(100);
    let report = conjecture_scan(3, &tight, None);
    assert!(report.is_clean());
    let big = report.entries.iter().find(|e| e.shape == p("3^1")).unwrap();
    assert!(matches!(big.outcome, ScanOutcome::Skipped { .. }));
    let small = report.entries.iter().find(|e| e.shape == p("1^1")).unwrap();
    assert!(matches!(small.outcome, ScanOutcome::Computed { .. }));
}

#[test]
fn budget_error_propagates() {
    assert!(matches!(
        n_lambda_poly(&p("3^1,1^1"), &OracleConfig::with_max_elements(100)),
        Err(Error::BudgetExceeded { .. })
    ));
}
