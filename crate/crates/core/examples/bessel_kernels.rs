//! Log-scaled I_m and K_m across the order range, with the Wronskian check.
//!
//! Run: `cargo run --example bessel_kernels -- [x]`

use casimir_shell::bessel::{eval_modified, eval_modified_debye, eval_modified_direct, BesselOrder, DEBYE_MIN_ORDER};

fn main() {
    let x: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4.56667);

    println!("x = {x}");
    println!("{:>6} {:>14} {:>14} {:>12} {:>12} {:>10}", "m", "ln I", "ln K", "I'/I", "K'/K", "wronsk");
    for m in [0u32, 1, 2, 5, 10, 29, 30, 100, 500, 1000, 2000] {
        let e = eval_modified(BesselOrder::new(m), x).unwrap();
        // x W + 1 should be zero.
        let resid = e.wronskian() * x + 1.0;
        println!(
            "{m:>6} {:>14.6e} {:>14.6e} {:>12.5e} {:>12.5e} {:>10.1e}",
            e.log_i, e.log_k, e.ratio_i, e.ratio_k, resid
        );
    }

    // Both paths agree where they overlap.
    let m = BesselOrder::new(DEBYE_MIN_ORDER);
    let a = eval_modified_direct(m, x).unwrap();
    let b = eval_modified_debye(m, x).unwrap();
    println!(
        "\nm = {DEBYE_MIN_ORDER}: direct vs Debye  d(ln IK) = {:.1e}  d(ratio_sum) = {:.1e}",
        (a.log_product() - b.log_product()).abs(),
        ((a.ratio_sum - b.ratio_sum) / a.ratio_sum).abs()
    );
}
