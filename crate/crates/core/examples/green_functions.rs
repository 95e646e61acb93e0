//! Radial Green functions around a shell of radius 1, both boundary
//! conditions, inside and outside.
//!
//! Run: `cargo run --example green_functions`

use casimir_shell::bessel::BesselOrder;
use casimir_shell::green::{radial_green, BoundaryCondition, GreenOptions, RadialGreenQuery, Region};

fn main() {
    let opts = GreenOptions {
        c: 1.0,
        ..GreenOptions::default()
    };
    let k = 1.7;

    for (region, rho_prime, rhos) in [
        (Region::Inside, 0.5, [0.1, 0.3, 0.5, 0.7, 0.9, 1.0]),
        (Region::Outside, 1.8, [1.0, 1.2, 1.8, 2.5, 4.0, 8.0]),
    ] {
        println!("{region:?}, rho' = {rho_prime}, k = {k}, m = 2");
        for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann] {
            print!("  {:<9}", bc.to_string());
            for rho in rhos {
                let g = radial_green(
                    &RadialGreenQuery {
                        m: BesselOrder::new(2),
                        omega_over_c: k,
                        a: 1.0,
                        rho,
                        rho_prime,
                        region,
                        bc,
                    },
                    &opts,
                )
                .unwrap();
                print!(" {:>9.5}{:+.5}i", g.re, g.im);
            }
            println!();
        }
    }
}
