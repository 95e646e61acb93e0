//! Radial factors `g(rho, rho')` of the frequency-domain Green functions
//! inside and outside a cylindrical shell of radius `a`.
//!
//! With `P = -pi / (2 i c)`, `k = omega / c`, `r< = min(rho, rho')` and
//! `r> = max(rho, rho')`:
//!
//! ```text
//! inside,  Dirichlet: P J(k r<) / J(ka)   [H(ka)  J(k r>) - J(ka)  H(k r>)]
//! inside,  Neumann:   P J(k r<) / J'(ka)  [H'(ka) J(k r>) - J'(ka) H(k r>)]
//! outside, Dirichlet: P H(k r>) / H(ka)   [J(ka)  H(k r<) - H(ka)  J(k r<)]
//! outside, Neumann:   P H(k r>) / H'(ka)  [J'(ka) H(k r<) - H'(ka) J(k r<)]
//! ```
//!
//! `H` is the Hankel function of the first kind. The factor that carries the
//! boundary condition always multiplies the radius nearer the shell, and the
//! outside solution is outgoing as `r> -> inf`. Across `rho = rho'` the
//! radial derivative jumps by `1 / (c rho')`.
//!
//! These are used to check boundary behaviour; the stress sums work with
//! the Wick-rotated integrands in [`crate::integrands`].

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::bessel::{eval_ordinary, BesselError, BesselOrder, OrdinaryBessel};
use crate::pressure::SPEED_OF_LIGHT_CODATA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Inside,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
}

impl BoundaryCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryCondition::Dirichlet => "dirichlet",
            BoundaryCondition::Neumann => "neumann",
        }
    }
}

impl std::fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GreenError {
    #[error("invalid Green function query: {0}")]
    InvalidQuery(String),
    #[error("{denominator} = {magnitude:e} at k a = {ka} is below the pole threshold (cavity resonance)")]
    Pole {
        denominator: &'static str,
        magnitude: f64,
        ka: f64,
    },
    #[error(transparent)]
    Bessel(#[from] BesselError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGreenQuery {
    pub m: BesselOrder,
    /// `omega / c` in 1/m.
    pub omega_over_c: f64,
    /// Shell radius in m.
    pub a: f64,
    pub rho: f64,
    pub rho_prime: f64,
    pub region: Region,
    pub bc: BoundaryCondition,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenOptions {
    /// Speed of light entering the `-pi / (2 i c)` prefactor.
    pub c: f64,
    /// Denominators with magnitude below this are reported as poles.
    pub pole_threshold: f64,
}

impl Default for GreenOptions {
    fn default() -> Self {
        GreenOptions {
            c: SPEED_OF_LIGHT_CODATA,
            pole_threshold: 1e-12,
        }
    }
}

impl GreenOptions {
    /// `-pi / (2 i c)`.
    pub fn prefactor(&self) -> Complex64 {
        Complex64::new(0.0, PI / (2.0 * self.c))
    }
}

impl RadialGreenQuery {
    fn validate(&self) -> Result<(), GreenError> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.omega_over_c) || !positive(self.a) {
            return Err(GreenError::InvalidQuery(
                "omega/c and a must be finite and positive".into(),
            ));
        }
        if !positive(self.rho) || !positive(self.rho_prime) {
            return Err(GreenError::InvalidQuery(
                "rho and rho' must be finite and positive".into(),
            ));
        }
        let ok = match self.region {
            Region::Inside => self.rho <= self.a && self.rho_prime <= self.a,
            Region::Outside => self.rho >= self.a && self.rho_prime >= self.a,
        };
        if !ok {
            return Err(GreenError::InvalidQuery(format!(
                "rho = {}, rho' = {} not in the {:?} region of a = {}",
                self.rho, self.rho_prime, self.region, self.a
            )));
        }
        Ok(())
    }
}

fn check_pole(
    value: Complex64,
    name: &'static str,
    ka: f64,
    threshold: f64,
) -> Result<Complex64, GreenError> {
    let magnitude = value.norm();
    if magnitude < threshold {
        Err(GreenError::Pole {
            denominator: name,
            magnitude,
            ka,
        })
    } else {
        Ok(value)
    }
}

/// Radial Green function `g(rho, rho')` for one order and frequency.
pub fn radial_green(q: &RadialGreenQuery, opts: &GreenOptions) -> Result<Complex64, GreenError> {
    q.validate()?;
    let k = q.omega_over_c;
    let ka = k * q.a;
    let r_lo = q.rho.min(q.rho_prime);
    let r_hi = q.rho.max(q.rho_prime);

    let at_a = eval_ordinary(q.m, ka)?;
    let lo = eval_ordinary(q.m, k * r_lo)?;
    let hi = eval_ordinary(q.m, k * r_hi)?;
    let j = |b: &OrdinaryBessel| Complex64::new(b.j, 0.0);
    let jp = |b: &OrdinaryBessel| Complex64::new(b.j_prime, 0.0);

    let thr = opts.pole_threshold;
    let value = match (q.region, q.bc) {
        (Region::Inside, BoundaryCondition::Dirichlet) => {
            let den = check_pole(j(&at_a), "J_m(ka)", ka, thr)?;
            j(&lo) / den * (at_a.h1 * j(&hi) - j(&at_a) * hi.h1)
        }
        (Region::Inside, BoundaryCondition::Neumann) => {
            let den = check_pole(jp(&at_a), "J'_m(ka)", ka, thr)?;
            j(&lo) / den * (at_a.h1_prime * j(&hi) - jp(&at_a) * hi.h1)
        }
        (Region::Outside, BoundaryCondition::Dirichlet) => {
            let den = check_pole(at_a.h1, "H_m(ka)", ka, thr)?;
            hi.h1 / den * (j(&at_a) * lo.h1 - at_a.h1 * j(&lo))
        }
        (Region::Outside, BoundaryCondition::Neumann) => {
            let den = check_pole(at_a.h1_prime, "H'_m(ka)", ka, thr)?;
            hi.h1 / den * (jp(&at_a) * lo.h1 - at_a.h1_prime * j(&lo))
        }
    };
    Ok(opts.prefactor() * value)
}
