//! Stress differences and force coefficients at the shell, per boundary
//! condition.
//!
//! All primary outputs are dimensionless:
//!
//! ```text
//! dirichlet: sigma = D_0 + 2 sum D_m            stress_coeff = -sigma / (4 pi^2)
//! neumann:   sigma = B_0 + 2 sum (A_m + B_m)    stress_coeff = -sigma / (2 pi^2)
//! force_coeff = 2 pi stress_coeff,   f = force_coeff * hbar c / a^2
//! ```
//!
//! Dirichlet and Neumann results are kept separate; nothing here adds them.

use std::f64::consts::PI;

use thiserror::Error;

use crate::green::BoundaryCondition;
use crate::integrands::IntegrandKind;
use crate::quadrature::QuadConfig;
use crate::series::{sum_orders, OrderSumResult, SumConfig, SumError};

/// Exact SI value, m/s.
pub const SPEED_OF_LIGHT_CODATA: f64 = 299_792_458.0;
/// Rounded value under which the published cutoffs (4.56667, 0.32167) come
/// out exactly.
pub const SPEED_OF_LIGHT_ROUNDED: f64 = 3.0e8;
/// hbar c in J m.
pub const HBAR_C: f64 = 3.161_526_77e-26;

#[derive(Debug, Error)]
pub enum PressureError {
    #[error("plasma frequency must be finite and positive, got {0}")]
    InvalidPlasmaFrequency(f64),
    #[error("shell radius must be finite and positive, got {0}")]
    InvalidRadius(f64),
    #[error("speed of light must be finite and positive, got {0}")]
    InvalidSpeedOfLight(f64),
    #[error("cutoff must be finite and positive, got {0}")]
    InvalidCutoff(f64),
    #[error("unknown material {0:?}")]
    UnknownMaterial(String),
    /// Some per-order integral missed its tolerance; `partial` is assembled
    /// from best estimates and flagged as not converged.
    #[error("{bc}: {source}")]
    NonConvergence {
        bc: BoundaryCondition,
        #[source]
        source: SumError,
        partial: Box<PressureResult>,
    },
    #[error("{bc}: {source}")]
    Sum {
        bc: BoundaryCondition,
        #[source]
        source: SumError,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaterialSpec {
    pub name: String,
    /// Plasma frequency, rad/s.
    pub omega_p: f64,
}

impl MaterialSpec {
    pub fn new(name: impl Into<String>, omega_p: f64) -> Result<Self, PressureError> {
        if !(omega_p.is_finite() && omega_p > 0.0) {
            return Err(PressureError::InvalidPlasmaFrequency(omega_p));
        }
        Ok(MaterialSpec {
            name: name.into(),
            omega_p,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// Shell radius, m.
    pub a: f64,
}

impl Geometry {
    pub fn new(a: f64) -> Result<Self, PressureError> {
        if !(a.is_finite() && a > 0.0) {
            return Err(PressureError::InvalidRadius(a));
        }
        Ok(Geometry { a })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffParam {
    pub x_cutoff: f64,
}

impl CutoffParam {
    pub fn new(x_cutoff: f64) -> Result<Self, PressureError> {
        if !(x_cutoff.is_finite() && x_cutoff > 0.0) {
            return Err(PressureError::InvalidCutoff(x_cutoff));
        }
        Ok(CutoffParam { x_cutoff })
    }
}

/// `omega_p a / c`.
pub fn cutoff_from_material(
    mat: &MaterialSpec,
    geom: &Geometry,
    c: f64,
) -> Result<CutoffParam, PressureError> {
    if !(c.is_finite() && c > 0.0) {
        return Err(PressureError::InvalidSpeedOfLight(c));
    }
    CutoffParam::new(mat.omega_p * geom.a / c)
}

pub fn builtin_materials() -> Vec<MaterialSpec> {
    vec![
        MaterialSpec {
            name: "gold".into(),
            omega_p: 1.37e16,
        },
        MaterialSpec {
            name: "silver".into(),
            omega_p: 9.65e14,
        },
    ]
}

/// Case-insensitive lookup in [`builtin_materials`].
pub fn lookup_material(name: &str) -> Result<MaterialSpec, PressureError> {
    builtin_materials()
        .into_iter()
        .find(|m| m.name.eq_ignore_ascii_case(name.trim()))
        .ok_or_else(|| PressureError::UnknownMaterial(name.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PressureResult {
    pub bc: BoundaryCondition,
    pub x_cutoff: f64,
    /// The dimensionless order sum.
    pub sigma: f64,
    /// Coefficient of `hbar c / a^3` in the inside-minus-outside stress.
    pub stress_coeff: f64,
    /// Coefficient of `hbar c / a^2`; filled by [`force_per_unit`].
    pub force_coeff: Option<f64>,
    /// `force_coeff * hbar c / a^2`, per metre of cylinder length.
    pub si_force: Option<f64>,
    /// One entry per integrand family that enters `sigma`.
    pub convergence: Vec<OrderSumResult>,
}

impl PressureResult {
    pub fn converged(&self) -> bool {
        self.convergence.iter().all(|c| c.converged)
    }

    /// Highest order used by any family.
    pub fn m_used(&self) -> u32 {
        self.convergence.iter().map(|c| c.m_used).max().unwrap_or(0)
    }

    /// Sum of the family tail estimates, in units of `sigma`.
    pub fn tail_estimate(&self) -> f64 {
        self.convergence.iter().map(|c| c.tail_estimate).sum()
    }

    pub fn family(&self, kind: IntegrandKind) -> Option<&OrderSumResult> {
        self.convergence.iter().find(|c| c.kind == kind)
    }
}

pub fn families(bc: BoundaryCondition) -> &'static [IntegrandKind] {
    match bc {
        BoundaryCondition::Dirichlet => &[IntegrandKind::Dirichlet],
        BoundaryCondition::Neumann => &[IntegrandKind::NeumannB, IntegrandKind::NeumannA],
    }
}

/// `sigma` and `stress_coeff` for one boundary condition.
pub fn stress_difference(
    bc: BoundaryCondition,
    cutoff: &CutoffParam,
    qcfg: &QuadConfig,
    scfg: &SumConfig,
) -> Result<PressureResult, PressureError> {
    let mut convergence = Vec::new();
    let mut failure = None;
    for &kind in families(bc) {
        match sum_orders(kind, cutoff.x_cutoff, qcfg, scfg) {
            Ok(r) => convergence.push(r),
            Err(SumError::Quadrature {
                m,
                source,
                partial,
            }) => {
                convergence.push((*partial).clone());
                failure.get_or_insert(SumError::Quadrature {
                    m,
                    source,
                    partial,
                });
            }
            Err(source) => return Err(PressureError::Sum { bc, source }),
        }
    }
    let sigma: f64 = convergence.iter().map(|c| c.total).sum();
    let stress_coeff = match bc {
        BoundaryCondition::Dirichlet => -sigma / (4.0 * PI * PI),
        BoundaryCondition::Neumann => -sigma / (2.0 * PI * PI),
    };
    let result = PressureResult {
        bc,
        x_cutoff: cutoff.x_cutoff,
        sigma,
        stress_coeff,
        force_coeff: None,
        si_force: None,
        convergence,
    };
    match failure {
        None => Ok(result),
        Some(source) => Err(PressureError::NonConvergence {
            bc,
            source,
            partial: Box::new(result),
        }),
    }
}

/// Fill `force_coeff = 2 pi stress_coeff` and the SI value.
pub fn force_per_unit(mut res: PressureResult, geom: &Geometry) -> PressureResult {
    let force_coeff = 2.0 * PI * res.stress_coeff;
    res.force_coeff = Some(force_coeff);
    res.si_force = Some(force_coeff * HBAR_C / (geom.a * geom.a));
    res
}

/// Stress difference and force for a material shell of radius `geom.a`.
pub fn compute_force(
    bc: BoundaryCondition,
    mat: &MaterialSpec,
    geom: &Geometry,
    c: f64,
    qcfg: &QuadConfig,
    scfg: &SumConfig,
) -> Result<PressureResult, PressureError> {
    let cutoff = cutoff_from_material(mat, geom, c)?;
    match stress_difference(bc, &cutoff, qcfg, scfg) {
        Ok(r) => Ok(force_per_unit(r, geom)),
        Err(PressureError::NonConvergence {
            bc,
            source,
            partial,
        }) => Err(PressureError::NonConvergence {
            bc,
            source,
            partial: Box::new(force_per_unit(*partial, geom)),
        }),
        Err(e) => Err(e),
    }
}
