//! Summation over azimuthal orders: `total = c_0 + 2 sum_{m>=1} c_m`, where
//! `c_m` is the integral of one integrand family over `[0, x_cutoff]`.
//!
//! Orders are integrated in parallel blocks but always accumulated in
//! ascending `m`, so results do not depend on scheduling.

use rayon::prelude::*;
use thiserror::Error;

use crate::bessel::BesselOrder;
use crate::integrands::IntegrandKind;
use crate::quadrature::{integrate_order_estimate, QuadConfig, QuadError};

const BLOCK: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumConfig {
    /// Highest order included.
    pub m_max: u32,
    /// Stop once `|c_m| / |total so far|` drops below this; zero always sums
    /// to `m_max`.
    pub tail_rel_threshold: f64,
}

impl Default for SumConfig {
    fn default() -> Self {
        SumConfig {
            m_max: 1000,
            tail_rel_threshold: 1e-6,
        }
    }
}

impl SumConfig {
    /// Sum exactly `0..=m_max`, never stopping early.
    pub fn fixed(m_max: u32) -> Self {
        SumConfig {
            m_max,
            tail_rel_threshold: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderSumResult {
    pub kind: IntegrandKind,
    pub x_cutoff: f64,
    /// `c_0 + 2 sum_{m=1}^{m_used} c_m`, accumulated in ascending order.
    pub total: f64,
    /// `(m, c_m)` for `m = 0..=m_used`.
    pub per_m: Vec<(u32, f64)>,
    pub m_used: u32,
    /// Estimated magnitude of `2 sum_{m > m_used} c_m`.
    pub tail_estimate: f64,
    pub converged: bool,
}

/// One row of a convergence report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumRow {
    pub m: u32,
    pub contribution: f64,
    /// `sum_{k=1}^{m} c_k` (zero at `m = 0`).
    pub order_sum: f64,
    /// `c_0 + 2 sum_{k=1}^{m} c_k`.
    pub total: f64,
}

impl OrderSumResult {
    pub fn contribution(&self, m: u32) -> Option<f64> {
        self.per_m.get(m as usize).map(|&(_, c)| c)
    }

    /// `sum_{k=1}^{upto} c_k`, the order series without the `m = 0` term or
    /// the factor two.
    pub fn order_sum(&self, upto: u32) -> f64 {
        self.per_m
            .iter()
            .skip(1)
            .take_while(|(m, _)| *m <= upto)
            .map(|&(_, c)| c)
            .sum()
    }

    pub fn partial_sums(&self) -> Vec<PartialSumRow> {
        let mut rows = Vec::with_capacity(self.per_m.len());
        let mut order_sum = 0.0;
        let mut total = 0.0;
        for &(m, c) in &self.per_m {
            if m == 0 {
                total = c;
            } else {
                order_sum += c;
                total += 2.0 * c;
            }
            rows.push(PartialSumRow {
                m,
                contribution: c,
                order_sum,
                total,
            });
        }
        rows
    }
}

#[derive(Debug, Error)]
pub enum SumError {
    #[error("invalid cutoff {0}")]
    InvalidCutoff(f64),
    /// A per-order quadrature missed its tolerance. `partial` holds the full
    /// sum built from best estimates, with `converged = false`.
    #[error("order {m}: {source}")]
    Quadrature {
        m: u32,
        #[source]
        source: QuadError,
        partial: Box<OrderSumResult>,
    },
    #[error("order {m}: {source}")]
    Integrand {
        m: u32,
        #[source]
        source: QuadError,
    },
}

/// Remainder estimate for `2 sum_{m > M} c_m` from the decay of the last terms.
pub fn estimate_tail(per_m: &[(u32, f64)]) -> f64 {
    let n = per_m.len();
    if n < 2 {
        return 0.0;
    }
    let (big_m, last) = per_m[n - 1];
    if big_m == 0 || last == 0.0 {
        return 0.0;
    }
    let last_abs = last.abs();
    let mf = f64::from(big_m);

    // Geometric: ratio of the last two terms.
    let prev = per_m[n - 2].1;
    let geometric = {
        let r = last_abs / prev.abs();
        (prev != 0.0 && r < 1.0 && prev.signum() == last.signum()).then(|| last_abs * r / (1.0 - r))
    };

    // Power law c_m ~ m^{-p} fitted between M/2 and M. A fitted exponent
    // comparable to M means the decay is really exponential.
    let power = (big_m >= 4)
        .then(|| {
            let (half_m, half_c) = per_m[(big_m / 2) as usize];
            let p = (half_c.abs() / last_abs).ln() / (mf / f64::from(half_m)).ln();
            (half_c.signum() == last.signum() && p > 1.0 && p < 0.2 * mf)
                .then(|| last_abs * mf.powf(p) * (mf + 0.5).powf(1.0 - p) / (p - 1.0))
        })
        .flatten();

    let one_sided = match (power, geometric) {
        (Some(p), _) => p,
        (None, Some(g)) => g,
        // Not visibly decaying.
        (None, None) => last_abs * mf,
    };
    2.0 * one_sided
}

/// Sum the order series of one integrand family.
pub fn sum_orders(
    kind: IntegrandKind,
    x_cutoff: f64,
    qcfg: &QuadConfig,
    scfg: &SumConfig,
) -> Result<OrderSumResult, SumError> {
    if !(x_cutoff.is_finite() && x_cutoff > 0.0) {
        return Err(SumError::InvalidCutoff(x_cutoff));
    }
    let mut per_m = Vec::new();
    let mut total = 0.0;
    let mut stopped_early = false;
    let mut first_failure: Option<(u32, QuadError)> = None;

    'blocks: for start in (0..=scfg.m_max).step_by(BLOCK as usize) {
        let end = start.saturating_add(BLOCK - 1).min(scfg.m_max);
        let block: Vec<_> = (start..=end)
            .into_par_iter()
            .map(|m| (m, integrate_order_estimate(kind, BesselOrder::new(m), x_cutoff, qcfg)))
            .collect();
        for (m, outcome) in block {
            let c = match outcome {
                Ok(est) => est.value,
                Err(err) => match err.estimate() {
                    Some(estimate) => {
                        first_failure.get_or_insert((m, err));
                        estimate
                    }
                    None => return Err(SumError::Integrand { m, source: err }),
                },
            };
            per_m.push((m, c));
            if m == 0 {
                total = c;
                continue;
            }
            total += 2.0 * c;
            if scfg.tail_rel_threshold > 0.0
                && c.abs() <= scfg.tail_rel_threshold * total.abs()
            {
                stopped_early = true;
                break 'blocks;
            }
        }
    }

    let m_used = per_m.last().map_or(0, |&(m, _)| m);
    let tail_estimate = estimate_tail(&per_m);
    // An early stop counts as converged even when the power-law tail is
    // larger than the last term; `tail_estimate` says by how much.
    let converged = stopped_early || tail_estimate <= scfg.tail_rel_threshold * total.abs();
    let mut result = OrderSumResult {
        kind,
        x_cutoff,
        total,
        per_m,
        m_used,
        tail_estimate,
        converged,
    };
    match first_failure {
        None => Ok(result),
        Some((m, source)) => {
            result.converged = false;
            Err(SumError::Quadrature {
                m,
                source,
                partial: Box::new(result),
            })
        }
    }
}
