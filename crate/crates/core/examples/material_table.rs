//! Force coefficients for the built-in materials, both boundary conditions.
//!
//! Run: `cargo run --release --example material_table`

use casimir_shell::green::BoundaryCondition;
use casimir_shell::pressure::{builtin_materials, compute_force, Geometry, SPEED_OF_LIGHT_ROUNDED};
use casimir_shell::quadrature::QuadConfig;
use casimir_shell::series::SumConfig;

fn main() {
    let geom = Geometry::new(1e-7).unwrap();
    let q = QuadConfig::default();
    let s = SumConfig::fixed(1000);

    println!("a = {} m, c = {SPEED_OF_LIGHT_ROUNDED} m/s, orders to 1000", geom.a);
    println!("{:<8} {:<10} {:>9} {:>12} {:>12} {:>14}", "material", "bc", "x", "sigma", "force", "N/m");
    for mat in builtin_materials() {
        for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann] {
            let r = compute_force(bc, &mat, &geom, SPEED_OF_LIGHT_ROUNDED, &q, &s).unwrap();
            println!(
                "{:<8} {:<10} {:>9.5} {:>12.5} {:>12.5} {:>14.5e}",
                mat.name,
                bc.to_string(),
                r.x_cutoff,
                r.sigma,
                r.force_coeff.unwrap(),
                r.si_force.unwrap()
            );
        }
    }
}
