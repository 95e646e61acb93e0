//! Sweep the shell radius for gold and write CSV to stdout. The cutoff grows
//! linearly with the radius.
//!
//! Run: `cargo run --release --example radius_sweep > sweep.csv`

use casimir_shell::green::BoundaryCondition;
use casimir_shell::pressure::{compute_force, lookup_material, Geometry, SPEED_OF_LIGHT_ROUNDED};
use casimir_shell::quadrature::QuadConfig;
use casimir_shell::report::{write_records, Format, OutputRecord};
use casimir_shell::series::SumConfig;

fn main() {
    let gold = lookup_material("gold").unwrap();
    let (q, s) = (QuadConfig::default(), SumConfig::default());

    let mut records = Vec::new();
    for i in 0..9 {
        let a = 1e-9 * 10f64.powf(f64::from(i) / 4.0);
        let geom = Geometry::new(a).unwrap();
        for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann] {
            match compute_force(bc, &gold, &geom, SPEED_OF_LIGHT_ROUNDED, &q, &s) {
                Ok(r) => records.push(OutputRecord::from_result(&r, &gold.name, a, gold.omega_p)),
                Err(e) => eprintln!("a = {a:e} {bc}: {e}"),
            }
        }
    }
    let _stdout = write_records(std::io::stdout().lock(), &records, Format::Csv).unwrap();
}
