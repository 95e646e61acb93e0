//! Wick-rotated, dimensionless integrands of the inside-minus-outside radial
//! stress at the shell.
//!
//! All three are written in terms of the log-derivative ratios
//! `rI = I'_m/I_m` and `rK = K'_m/K_m`, which stay finite at any order:
//!
//! ```text
//! dirichlet:  x (rI + rK)              = x d/dx ln(I_m K_m)
//! neumann_a:  (m^2 / x) (1/rI + 1/rK)  = m^2 (I'K + IK') / (x I'K')
//! neumann_b:  x (1/rI + 1/rK)          = x (I'K + IK') / (I'K')
//! ```
//!
//! The sums `rI + rK` come from [`crate::bessel::LogBesselEval::ratio_sum`], which avoids
//! the cancellation of the two `m/x` leading terms when `x << m`.
//!
//! Below [`SMALL_X`] each integrand returns its small-argument limit form.

use crate::bessel::{eval_modified, BesselError, BesselOrder};

/// Arguments below this use the analytic small-`x` branch.
pub const SMALL_X: f64 = 1e-6;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegrandKind {
    Dirichlet,
    /// The `m^2`-weighted Neumann family; identically zero at `m = 0`.
    NeumannA,
    NeumannB,
}

impl IntegrandKind {
    pub const ALL: [IntegrandKind; 3] = [
        IntegrandKind::Dirichlet,
        IntegrandKind::NeumannA,
        IntegrandKind::NeumannB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IntegrandKind::Dirichlet => "dirichlet",
            IntegrandKind::NeumannA => "neumann_a",
            IntegrandKind::NeumannB => "neumann_b",
        }
    }

    pub fn eval(self, m: BesselOrder, x: f64) -> Result<f64, BesselError> {
        match self {
            IntegrandKind::Dirichlet => dirichlet_integrand(m, x),
            IntegrandKind::NeumannA => neumann_integrand_a(m, x),
            IntegrandKind::NeumannB => neumann_integrand_b(m, x),
        }
    }
}

impl std::fmt::Display for IntegrandKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_x(x: f64) -> Result<(), BesselError> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(BesselError::Domain(x))
    }
}

/// `x d/dx ln(I_m(x) K_m(x))`.
pub fn dirichlet_integrand(m: BesselOrder, x: f64) -> Result<f64, BesselError> {
    check_x(x)?;
    if x < SMALL_X {
        // m = 0: x K_0'/K_0 = -x K_1/K_0 ~ -1/(ln(2/x) - gamma), the only
        // term that is not O(x^2); it still vanishes as x -> 0.
        if m.get() == 0 && x > 0.0 {
            return Ok(-1.0 / ((2.0 / x).ln() - EULER_GAMMA));
        }
        return Ok(0.0);
    }
    let e = eval_modified(m, x)?;
    Ok(x * e.ratio_sum)
}

/// `(m^2 / x) (I_m/I'_m + K_m/K'_m)`; exactly zero at `m = 0`.
///
/// The two reciprocal ratios cancel to leading order in both the small-`x`
/// and the large-`m` regimes; the limit as `x -> 0` is zero for every `m`
/// (it behaves as `x^2 / (m^2 - 1)` for `m >= 2`).
pub fn neumann_integrand_a(m: BesselOrder, x: f64) -> Result<f64, BesselError> {
    check_x(x)?;
    if m.get() == 0 || x < SMALL_X {
        return Ok(0.0);
    }
    let e = eval_modified(m, x)?;
    let m2 = m.as_f64() * m.as_f64();
    Ok(m2 / x * e.reciprocal_sum())
}

/// `x (I_m/I'_m + K_m/K'_m)`.
pub fn neumann_integrand_b(m: BesselOrder, x: f64) -> Result<f64, BesselError> {
    check_x(x)?;
    if x < SMALL_X {
        // m = 0: x I_0/I_1 -> 2, x K_0/K_1 -> 0.
        return Ok(if m.get() == 0 { 2.0 } else { 0.0 });
    }
    let e = eval_modified(m, x)?;
    Ok(x * e.reciprocal_sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(m: u32) -> BesselOrder {
        BesselOrder::new(m)
    }

    #[test]
    fn small_x_limits() {
        assert!(dirichlet_integrand(o(0), 1e-300).unwrap().abs() < 2e-3);
        assert_eq!(dirichlet_integrand(o(0), 0.0).unwrap(), 0.0);
        assert_eq!(dirichlet_integrand(o(3), 1e-8).unwrap(), 0.0);
        assert_eq!(neumann_integrand_b(o(0), 0.0).unwrap(), 2.0);
        assert_eq!(neumann_integrand_a(o(0), 3.0).unwrap(), 0.0);
    }

    #[test]
    fn limit_branches_join_the_evaluated_integrands() {
        let below = SMALL_X * 0.999;
        let above = SMALL_X * 1.001;
        let d_lo = dirichlet_integrand(o(0), below).unwrap();
        let d_hi = dirichlet_integrand(o(0), above).unwrap();
        // The integrand itself moves by ~1e-5 across this gap.
        assert!((d_lo - d_hi).abs() < 2e-5);
        let b_lo = neumann_integrand_b(o(0), below).unwrap();
        let b_hi = neumann_integrand_b(o(0), above).unwrap();
        assert!((b_lo - b_hi).abs() < 1e-10);
        for m in [1, 2, 10, 500] {
            assert!(neumann_integrand_a(o(m), above).unwrap().abs() < 1e-9);
            assert!(dirichlet_integrand(o(m), above).unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_negative_argument() {
        assert!(dirichlet_integrand(o(1), -1.0).is_err());
        assert!(neumann_integrand_b(o(1), f64::NAN).is_err());
    }
}
