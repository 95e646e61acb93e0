//! Partial sums against order for every family, the data behind a
//! convergence plot.
//!
//! Run: `cargo run --release --example convergence_report -- [x_cutoff] [m_max]`

use casimir_shell::integrands::IntegrandKind;
use casimir_shell::quadrature::QuadConfig;
use casimir_shell::report::{convergence_rows, write_convergence, Format};
use casimir_shell::series::{sum_orders, SumConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let x: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4.56667);
    let m_max: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);

    let mut rows = Vec::new();
    for kind in IntegrandKind::ALL {
        let sum = sum_orders(kind, x, &QuadConfig::default(), &SumConfig::fixed(m_max)).unwrap();
        eprintln!("{kind}: total {:.7}, tail ~ {:.2e}", sum.total, sum.tail_estimate);
        rows.extend(convergence_rows(&sum));
    }
    let _stdout = write_convergence(std::io::stdout().lock(), &rows, Format::Csv).unwrap();
}
