use dickson_core::identity::{Conventions, IdentityCase, IdentityId};
use dickson_core::Complex64;
use dickson_harness::{convergence_table, table_csv};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn quotient_table_turns_over() {
    let ex1 = IdentityCase::<f64>::from_pairs(IdentityId::EX1, &[]).unwrap();
    let ns: Vec<usize> = (1..=60).collect();
    let rows = convergence_table(&ex1, &ns, Conventions::default()).unwrap();
    let deltas: Vec<f64> = rows.iter().skip(1).map(|r| r.delta.unwrap()).collect();
    let (i, _) = deltas.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    let turnover = rows[i + 1].n;
    assert_eq!(turnover, 34);
    assert!(deltas[..i].windows(2).filter(|w| w[1] > w[0]).count() < 3);
    assert!(deltas[i..].windows(2).all(|w| w[1] >= w[0]));
    assert!((rows[i + 1].value.re - std::f64::consts::PI.sqrt()).abs() < 1e-2);
    assert!(rows.last().unwrap().delta.unwrap() > 1e3 * deltas[i]);
}

#[test]
fn convergent_table_settles() {
    let t6 = IdentityCase::from_pairs(
        IdentityId::T6,
        &[("k", c(2.0, 0.0)), ("a", c(1.5, 0.2)), ("x", c(0.6, 0.0)), ("z", c(0.3, 0.1))],
    )
    .unwrap();
    let rows = convergence_table(&t6, &[5, 10, 20, 40, 80], Conventions::default()).unwrap();
    let d: Vec<f64> = rows.iter().skip(1).map(|r| r.delta.unwrap()).collect();
    assert!(d.windows(2).all(|w| w[1] < w[0] || w[1] < 1e-15), "{d:?}");
    assert!(d.last().unwrap() < &1e-12);
}

#[test]
fn terminating_table_is_constant() {
    let t1 = IdentityCase::from_pairs(
        IdentityId::T1,
        &[("k", c(3.0, 0.0)), ("a", c(2.0, 1.0)), ("alpha", c(0.2, 0.0)), ("x", c(0.3, 0.0))],
    )
    .unwrap();
    let rows = convergence_table(&t1, &[3, 4, 10, 30], Conventions::default()).unwrap();
    assert!(rows.iter().all(|r| r.value == rows[0].value));
    assert!(rows.iter().skip(1).all(|r| r.delta == Some(0.0)));
    let csv = table_csv(&rows);
    assert_eq!(csv.lines().count(), 5);
    assert_eq!(csv.lines().nth(2).unwrap().split(',').nth(3), Some("0"));
}
