use std::f64::consts::PI;

use casimir_shell::green::BoundaryCondition;
use casimir_shell::integrands::IntegrandKind;
use casimir_shell::pressure::{
    builtin_materials, compute_force, cutoff_from_material, force_per_unit, lookup_material,
    stress_difference, CutoffParam, Geometry, MaterialSpec, HBAR_C, SPEED_OF_LIGHT_ROUNDED,
};
use casimir_shell::quadrature::QuadConfig;
use casimir_shell::series::SumConfig;

const BCS: [BoundaryCondition; 2] = [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann];

fn shell() -> Geometry {
    Geometry::new(1e-7).unwrap()
}

#[test]
fn builtin_table() {
    let mats = builtin_materials();
    assert!(mats.len() >= 2);
    assert_eq!(lookup_material("gold").unwrap().omega_p, 1.37e16);
    assert_eq!(lookup_material("SILVER").unwrap().omega_p, 9.65e14);
    assert!(lookup_material("copper").is_err());
}

#[test]
fn cutoff_is_linear_in_radius() {
    let gold = lookup_material("gold").unwrap();
    let x1 = cutoff_from_material(&gold, &Geometry::new(1e-7).unwrap(), 3e8).unwrap();
    let x2 = cutoff_from_material(&gold, &Geometry::new(2e-7).unwrap(), 3e8).unwrap();
    assert_eq!(x2.x_cutoff, 2.0 * x1.x_cutoff);
    let tiny = cutoff_from_material(&gold, &Geometry::new(1e-20).unwrap(), 3e8).unwrap();
    assert!(tiny.x_cutoff < 1e-3);
}

#[test]
fn force_signs_and_two_pi_ratio() {
    let q = QuadConfig::default();
    let s = SumConfig::default();
    for name in ["gold", "silver"] {
        let mat = lookup_material(name).unwrap();
        for bc in BCS {
            let r = compute_force(bc, &mat, &shell(), SPEED_OF_LIGHT_ROUNDED, &q, &s).unwrap();
            let f = r.force_coeff.unwrap();
            assert_eq!(f, 2.0 * PI * r.stress_coeff);
            match bc {
                BoundaryCondition::Dirichlet => {
                    assert!(f > 0.0, "{name}: Dirichlet should push outward");
                    assert!((f + r.sigma / (2.0 * PI)).abs() < 1e-14 * f.abs());
                }
                BoundaryCondition::Neumann => {
                    assert!(f < 0.0, "{name}: Neumann should pull inward");
                    assert!((f + r.sigma / PI).abs() < 1e-14 * f.abs());
                }
            }
            assert_eq!(f.signum(), -r.sigma.signum());
        }
    }
}

#[test]
fn neumann_sigma_is_sum_of_families() {
    let cut = CutoffParam::new(1.3).unwrap();
    let r = stress_difference(
        BoundaryCondition::Neumann,
        &cut,
        &QuadConfig::default(),
        &SumConfig::fixed(200),
    )
    .unwrap();
    let a = r.family(IntegrandKind::NeumannA).unwrap();
    let b = r.family(IntegrandKind::NeumannB).unwrap();
    assert_eq!(a.per_m[0].1, 0.0);
    assert_eq!(r.sigma, b.total + a.total);
    assert!(r.family(IntegrandKind::Dirichlet).is_none());
}

#[test]
fn vanishing_cutoff_vanishing_force() {
    let cut = CutoffParam::new(1e-8).unwrap();
    for bc in BCS {
        let r = stress_difference(bc, &cut, &QuadConfig::default(), &SumConfig::default()).unwrap();
        let r = force_per_unit(r, &shell());
        assert!(r.force_coeff.unwrap().abs() < 1e-6, "{bc}");
        assert!(r.converged());
    }
}

#[test]
fn si_force_scales_as_inverse_square_at_fixed_cutoff() {
    let q = QuadConfig::default();
    let s = SumConfig::fixed(100);
    let m1 = MaterialSpec::new("custom", 2e15).unwrap();
    let m2 = MaterialSpec::new("custom", 1e15).unwrap();
    let g1 = Geometry::new(1e-7).unwrap();
    let g2 = Geometry::new(2e-7).unwrap();
    for bc in BCS {
        let r1 = compute_force(bc, &m1, &g1, 3e8, &q, &s).unwrap();
        let r2 = compute_force(bc, &m2, &g2, 3e8, &q, &s).unwrap();
        assert_eq!(r1.x_cutoff, r2.x_cutoff);
        assert_eq!(r1.force_coeff, r2.force_coeff);
        let ratio = r1.si_force.unwrap() / r2.si_force.unwrap();
        assert!((ratio - 4.0).abs() < 1e-14);
        let f = r1.force_coeff.unwrap();
        assert!((r1.si_force.unwrap() / (f * HBAR_C / 1e-14) - 1.0).abs() < 1e-14);
    }
}
