//! Per-order integrals and the order sum for one family, with the tail
//! estimate and the early-stop rule.
//!
//! Run: `cargo run --release --example order_sums -- [dirichlet|neumann_a|neumann_b] [x_cutoff]`

use casimir_shell::integrands::IntegrandKind;
use casimir_shell::quadrature::QuadConfig;
use casimir_shell::series::{sum_orders, SumConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let kind = match args.next().as_deref() {
        Some("neumann_a") => IntegrandKind::NeumannA,
        Some("neumann_b") => IntegrandKind::NeumannB,
        _ => IntegrandKind::Dirichlet,
    };
    let x: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4.56667);
    let q = QuadConfig::default();

    let fixed = sum_orders(kind, x, &q, &SumConfig::fixed(1000)).unwrap();
    println!("{kind}, x_cutoff = {x}, all orders to 1000");
    for m in [0, 1, 2, 5, 10, 50, 100, 500, 1000] {
        println!("  c_{m:<5} = {:>14.8e}   sum_1..{m} = {:>12.7}", fixed.contribution(m).unwrap(), fixed.order_sum(m));
    }
    println!("  total = {:.7}  tail ~ {:.2e}  converged = {}", fixed.total, fixed.tail_estimate, fixed.converged);

    let early = sum_orders(kind, x, &q, &SumConfig::default()).unwrap();
    println!(
        "default stop rule: m_used = {}, total = {:.7}, converged = {}",
        early.m_used, early.total, early.converged
    );
}
