//! The three integrand families sampled on a log grid.
//!
//! Run: `cargo run --example integrands -- [m]`

use casimir_shell::bessel::BesselOrder;
use casimir_shell::integrands::IntegrandKind;

fn main() {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let order = BesselOrder::new(m);

    print!("{:>10}", "x");
    for kind in IntegrandKind::ALL {
        print!(" {:>14}", kind.to_string());
    }
    println!();
    for i in 0..=12 {
        let x = 1e-4 * 10f64.powf(f64::from(i) / 3.0);
        print!("{x:>10.3e}");
        for kind in IntegrandKind::ALL {
            print!(" {:>14.6e}", kind.eval(order, x).unwrap());
        }
        println!();
    }
}
