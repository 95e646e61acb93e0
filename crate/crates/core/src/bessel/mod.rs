//! Modified and ordinary Bessel functions of integer order.
//!
//! The modified functions are returned in log-scaled form. At order 1000 and
//! argument ~4.6, `I_m` is below `1e-2200` and `K_m` above `1e2200`, so raw
//! values are useless; the logarithms and the log-derivative ratios
//! `I'_m/I_m`, `K'_m/K_m` stay well inside `f64` range for every order the
//! stress sums touch.
//!
//! Evaluation strategy for `eval_modified`:
//!
//! * `m < DEBYE_MIN_ORDER`: power series for `ln I_m`, a continued fraction
//!   for `I_{m+1}/I_m`, and `K_0`, `K_1` (series for `x <= 2`, Steed's
//!   continued fraction above) followed by forward recurrence of the ratio
//!   `K_{j+1}/K_j`.
//! * `m >= DEBYE_MIN_ORDER`: the uniform large-order (Debye) expansion with
//!   ten correction terms.
//!
//! Primes are derivatives with respect to the argument.

#![allow(clippy::excessive_precision)]

mod debye;
mod modified;
mod ordinary;

pub use ordinary::{eval_ordinary, OrdinaryBessel};

use thiserror::Error;

/// Orders at or above this use the uniform asymptotic expansion.
pub const DEBYE_MIN_ORDER: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum BesselError {
    #[error("Bessel argument must be finite and positive, got {0}")]
    Domain(f64),
    #[error("log-scaled Bessel value out of range at m = {m}, x = {x}")]
    Overflow { m: u32, x: f64 },
}

/// Non-negative azimuthal order `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BesselOrder(u32);

impl BesselOrder {
    pub const fn new(m: u32) -> Self {
        BesselOrder(m)
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0)
    }
}

impl From<u32> for BesselOrder {
    fn from(m: u32) -> Self {
        BesselOrder(m)
    }
}

impl std::fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Maps an arbitrary integer order onto `|m|`.
///
/// `I_{-m} = I_m`, `K_{-m} = K_m` and `J_{-m} = (-1)^m J_m`, so a sum over
/// all integers is `term(0) + 2 * sum_{m >= 1} term(m)` for every quantity
/// that is even in `m`.
pub fn reduce_negative_order(m: i64) -> BesselOrder {
    let abs = m.unsigned_abs();
    BesselOrder(u32::try_from(abs).expect("Bessel order exceeds u32::MAX"))
}

/// `ln I_m(x)`, `ln K_m(x)` and the log-derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBesselEval {
    pub log_i: f64,
    pub log_k: f64,
    /// `I'_m(x) / I_m(x)`, always positive.
    pub ratio_i: f64,
    /// `K'_m(x) / K_m(x)`, always negative.
    pub ratio_k: f64,
    /// `ratio_i + ratio_k`, computed without subtracting the two `~m/x`
    /// leading terms, so it keeps full relative accuracy when `x << m`.
    pub ratio_sum: f64,
}

impl LogBesselEval {
    /// `ln(I_m(x) K_m(x))`.
    pub fn log_product(&self) -> f64 {
        self.log_i + self.log_k
    }

    /// `I_m(x) K_m(x)`; representable at every order even when the factors
    /// are not.
    pub fn product(&self) -> f64 {
        self.log_product().exp()
    }

    /// `I_m/I'_m + K_m/K'_m`, from [`LogBesselEval::ratio_sum`].
    pub fn reciprocal_sum(&self) -> f64 {
        self.ratio_sum / (self.ratio_i * self.ratio_k)
    }

    /// Left-hand side of `I_m K'_m - I'_m K_m = -1/x`, computed as
    /// `I_m K_m (K'/K - I'/I)`.
    pub fn wronskian(&self) -> f64 {
        self.product() * (self.ratio_k - self.ratio_i)
    }
}

pub(crate) fn check_argument(x: f64) -> Result<(), BesselError> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(BesselError::Domain(x))
    }
}

/// Log-scaled `I_m(x)`, `K_m(x)` and their log-derivatives.
pub fn eval_modified(m: BesselOrder, x: f64) -> Result<LogBesselEval, BesselError> {
    check_argument(x)?;
    let eval = if m.get() >= DEBYE_MIN_ORDER {
        debye::eval(m.as_f64(), x)
    } else {
        modified::eval_direct(m.get(), x)
    };
    let finite = eval.log_i.is_finite()
        && eval.log_k.is_finite()
        && eval.ratio_i.is_finite()
        && eval.ratio_k.is_finite()
        && eval.ratio_sum.is_finite();
    if finite {
        Ok(eval)
    } else {
        Err(BesselError::Overflow { m: m.get(), x })
    }
}

/// Direct (series / continued fraction / recurrence) evaluation at any order.
///
/// Cost grows linearly with `m`; `eval_modified` switches to the asymptotic
/// expansion for large orders. Exposed so the two routes can be compared.
pub fn eval_modified_direct(m: BesselOrder, x: f64) -> Result<LogBesselEval, BesselError> {
    check_argument(x)?;
    Ok(modified::eval_direct(m.get(), x))
}

/// Uniform asymptotic evaluation at any order `m >= 1`.
pub fn eval_modified_debye(m: BesselOrder, x: f64) -> Result<LogBesselEval, BesselError> {
    check_argument(x)?;
    Ok(debye::eval(m.as_f64().max(1.0), x))
}
