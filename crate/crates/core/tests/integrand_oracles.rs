#![allow(clippy::excessive_precision)]

use casimir_shell::bessel::{eval_modified, BesselOrder};
use casimir_shell::integrands::{
    dirichlet_integrand, neumann_integrand_a, neumann_integrand_b, IntegrandKind,
};
use proptest::prelude::*;

fn o(m: u32) -> BesselOrder {
    BesselOrder::new(m)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Ascending series `sum (x/2)^{2k+m} / (k! (k+m)!)`.
fn i_series(m: u32, x: f64) -> f64 {
    let mut term = (0.5 * x).powi(m as i32) / (1..=m).map(f64::from).product::<f64>();
    let mut sum = term;
    let q = 0.25 * x * x;
    for k in 1..200 {
        term *= q / (f64::from(k) * f64::from(k + m));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// `K_m(x) = int_0^inf e^{-x cosh t} cosh(m t) dt` by the trapezoid rule.
fn k_integral(m: u32, x: f64) -> f64 {
    let h = 0.005;
    let mut sum = 0.5 * (-x).exp();
    let mut k = 1;
    loop {
        let t = f64::from(k) * h;
        let e = -x * t.cosh();
        sum += (e + f64::from(m) * t).exp() * 0.5 + (e - f64::from(m) * t).exp() * 0.5;
        if -e - f64::from(m) * t > 750.0 {
            break;
        }
        k += 1;
    }
    sum * h
}

/// Log-derivative ratios from neighbouring orders.
fn oracle_ratios(m: u32, x: f64) -> (f64, f64) {
    let lower = if m == 0 { 1 } else { m - 1 };
    let ri = 0.5 * (i_series(lower, x) + i_series(m + 1, x)) / i_series(m, x);
    let rk = -0.5 * (k_integral(lower, x) + k_integral(m + 1, x)) / k_integral(m, x);
    (ri, rk)
}

#[test]
fn integrands_match_series_oracle() {
    for m in [0, 1, 2, 3, 6] {
        for x in [0.05, 0.32167, 1.0, 2.5, 4.56667] {
            let (ri, rk) = oracle_ratios(m, x);
            let d = dirichlet_integrand(o(m), x).unwrap();
            assert!(rel(d, x * (ri + rk)) < 1e-9, "dirichlet m={m} x={x}");
            let b = neumann_integrand_b(o(m), x).unwrap();
            assert!(rel(b, x * (1.0 / ri + 1.0 / rk)) < 1e-8, "neumann_b m={m} x={x}");
            if m > 0 {
                let a = neumann_integrand_a(o(m), x).unwrap();
                let expect = f64::from(m * m) / x * (1.0 / ri + 1.0 / rk);
                assert!(rel(a, expect) < 1e-8, "neumann_a m={m} x={x}");
            }
        }
    }
}

#[test]
fn integrands_match_frozen_references() {
    // 30-digit reference evaluations.
    let cases: [(IntegrandKind, u32, f64, f64); 6] = [
        (IntegrandKind::Dirichlet, 0, 1.0, -0.98323543236386725098),
        (IntegrandKind::NeumannA, 1, 1.0, 0.21791172417253231002),
        (IntegrandKind::NeumannB, 0, 1.0, 1.5407097882763173972),
        (IntegrandKind::NeumannB, 3, 2.0, 0.09335218002905581082),
        (IntegrandKind::NeumannA, 40, 5.0, 0.015156476988150185677),
        (IntegrandKind::Dirichlet, 100, 4.56667, -0.0020813132042799807369),
    ];
    for (kind, m, x, want) in cases {
        let got = kind.eval(o(m), x).unwrap();
        assert!(rel(got, want) < 1e-10, "{kind} m={m} x={x}: {got}");
    }
}

#[test]
fn dirichlet_is_x_times_log_derivative() {
    for m in [0, 1, 10, 100] {
        for x in [0.1, 1.0, 4.56667] {
            let e = eval_modified(o(m), x).unwrap();
            let lp = |x: f64| eval_modified(o(m), x).unwrap().log_product();
            let central = |h: f64| x * (lp(x + h) - lp(x - h)) / (2.0 * h);
            // Richardson step removes the h^2 term.
            let h = 1e-2 * x;
            let fd = (4.0 * central(0.5 * h) - central(h)) / 3.0;
            // ln I and ln K are individually large at high order; their
            // rounding, divided by h, bounds what the difference can resolve.
            let noise = 1e-15 * (e.log_i.abs() + e.log_k.abs()) * x / h;
            let d = dirichlet_integrand(o(m), x).unwrap();
            assert!((d - fd).abs() < 1e-7 * d.abs() + noise, "m={m} x={x}: {d} vs {fd}");
        }
    }
}

#[test]
fn ratio_sum_keeps_precision_at_small_argument() {
    // x d/dx ln(I_m K_m) = -x^2/(m^2 - 1) (1 + O(x^2/m^2)) for m >= 2.
    for m in [2u32, 11, 29, 30, 100, 2000] {
        for x in [1e-5, 1e-4, 1e-3] {
            let mf = f64::from(m);
            let leading = -x * x / (mf * mf - 1.0);
            let d = dirichlet_integrand(o(m), x).unwrap();
            assert!(rel(d, leading) < 1e-5, "m={m} x={x}: {d} vs {leading}");
        }
    }
}

#[test]
fn sign_structure() {
    let xs: Vec<f64> = (0..200).map(|i| 1e-5 * (50.0f64 / 1e-5).powf(f64::from(i) / 199.0)).collect();
    for m in [1, 2, 5, 30, 200, 2000] {
        for &x in &xs {
            assert!(dirichlet_integrand(o(m), x).unwrap() < 0.0, "m={m} x={x}");
        }
    }
    for &x in xs.iter().filter(|&&x| x <= 4.57) {
        assert!(neumann_integrand_b(o(0), x).unwrap() > 0.0, "x={x}");
    }
}

proptest! {
    #[test]
    fn integrands_finite_everywhere(m in 0u32..=2000, x in 1e-9f64..=50.0) {
        for kind in IntegrandKind::ALL {
            let v = kind.eval(o(m), x).unwrap();
            prop_assert!(v.is_finite(), "{} m={} x={}: {}", kind, m, x, v);
        }
    }
}
