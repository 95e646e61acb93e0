use casimir_shell::bessel::BesselOrder;
use casimir_shell::green::{
    radial_green, BoundaryCondition, GreenOptions, RadialGreenQuery, Region,
};
use num_complex::Complex64;

const A: f64 = 1.0;
const K: f64 = 1.7;

fn g(m: u32, region: Region, bc: BoundaryCondition, rho: f64, rho_prime: f64, opts: &GreenOptions) -> Complex64 {
    let q = RadialGreenQuery {
        m: BesselOrder::new(m),
        omega_over_c: K,
        a: A,
        rho,
        rho_prime,
        region,
        bc,
    };
    radial_green(&q, opts).unwrap()
}

fn unit_c() -> GreenOptions {
    GreenOptions {
        c: 1.0,
        ..GreenOptions::default()
    }
}

#[test]
fn dirichlet_vanishes_on_the_shell() {
    let opts = GreenOptions::default();
    for m in [0, 1, 3, 10] {
        let inside_ref = g(m, Region::Inside, BoundaryCondition::Dirichlet, 0.5 * A, 0.4 * A, &opts);
        let inside_a = g(m, Region::Inside, BoundaryCondition::Dirichlet, A, 0.4 * A, &opts);
        assert!(inside_a.norm() < 1e-12 * inside_ref.norm(), "inside m={m}");

        let outside_ref = g(m, Region::Outside, BoundaryCondition::Dirichlet, 2.0 * A, 1.6 * A, &opts);
        let outside_a = g(m, Region::Outside, BoundaryCondition::Dirichlet, A, 1.6 * A, &opts);
        assert!(outside_a.norm() < 1e-12 * outside_ref.norm(), "outside m={m}");
    }
}

/// One-sided second-order difference at the shell, stepping away from it.
fn shell_derivative(m: u32, region: Region, rho_prime: f64, h: f64) -> Complex64 {
    let opts = unit_c();
    let s = match region {
        Region::Inside => -1.0,
        Region::Outside => 1.0,
    };
    let f = |r: f64| g(m, region, BoundaryCondition::Neumann, r, rho_prime, &opts);
    s * (-3.0 * f(A) + 4.0 * f(A + s * h) - f(A + 2.0 * s * h)) / (2.0 * h)
}

#[test]
fn neumann_derivative_vanishes_on_the_shell() {
    for m in [0, 1, 4] {
        for (region, rho_prime) in [(Region::Inside, 0.45 * A), (Region::Outside, 1.8 * A)] {
            // Scale: the same difference taken at the source-free midpoint.
            let opts = unit_c();
            let mid = 0.5 * (A + rho_prime);
            let f = |r: f64| g(m, region, BoundaryCondition::Neumann, r, rho_prime, &opts);
            let scale = ((f(mid + 1e-5) - f(mid - 1e-5)) / 2e-5).norm().max(f(A).norm());

            let d1 = shell_derivative(m, region, rho_prime, 1e-3);
            let d2 = shell_derivative(m, region, rho_prime, 5e-4);
            assert!(d1.norm() < 1e-5 * scale, "m={m} {region:?}: {d1}");
            // Second-order convergence toward zero.
            let ratio = d2.norm() / d1.norm();
            assert!((0.2..0.3).contains(&ratio), "m={m} {region:?}: ratio {ratio}");
        }
    }
}

#[test]
fn continuous_with_unit_derivative_jump_at_the_source() {
    let h = 1e-4;
    for c in [1.0, 299_792_458.0] {
        let opts = GreenOptions {
            c,
            ..GreenOptions::default()
        };
        for (region, rp) in [(Region::Inside, 0.6 * A), (Region::Outside, 2.3 * A)] {
            for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann] {
                for m in [0, 2, 7] {
                    let f = |r: f64| g(m, region, bc, r, rp, &opts);
                    let left = f(rp - h);
                    let right = f(rp + h);
                    let at = f(rp);
                    let scale = at.norm();
                    assert!((left - at).norm() < 1e-2 * scale + 1e-3 / c, "continuity");
                    assert!((right - at).norm() < 1e-2 * scale + 1e-3 / c, "continuity");
                    // One-sided second-order derivatives on each side.
                    let d_right = (-3.0 * at + 4.0 * f(rp + h) - f(rp + 2.0 * h)) / (2.0 * h);
                    let d_left = (3.0 * at - 4.0 * f(rp - h) + f(rp - 2.0 * h)) / (2.0 * h);
                    let jump = d_right - d_left;
                    let expected = 1.0 / (c * rp);
                    assert!(
                        (jump - expected).norm() < 1e-6 * expected,
                        "m={m} {region:?} {bc}: jump {jump} vs {expected}"
                    );
                }
            }
        }
    }
}

#[test]
fn outside_solution_is_outgoing() {
    let opts = unit_c();
    for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann] {
        for m in [0, 3] {
            // |H_m(k r)| ~ sqrt(2 / (pi k r)): |g| sqrt(r) levels off.
            let amp = |r: f64| g(m, Region::Outside, bc, r, 1.5 * A, &opts).norm() * r.sqrt();
            let (a1, a2) = (amp(30.0), amp(60.0));
            assert!((a1 / a2 - 1.0).abs() < 2e-2, "m={m} {bc}: {a1} {a2}");
            // Phase advances like e^{i k r}.
            let z1 = g(m, Region::Outside, bc, 40.0, 1.5 * A, &opts);
            let z2 = g(m, Region::Outside, bc, 40.0 + 0.01, 1.5 * A, &opts);
            let dphase = (z2 / z1).arg() / 0.01;
            assert!((dphase - K).abs() < 1e-2, "m={m} {bc}: phase rate {dphase}");
        }
    }
}
