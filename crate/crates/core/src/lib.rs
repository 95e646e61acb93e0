//! Casimir stress on a perfectly conducting cylindrical shell.
//!
//! The stress is a sum over azimuthal order `m` of imaginary-frequency
//! integrals of modified Bessel functions, cut off at `x = omega_p a / c`.
//! Layers, bottom up:
//!
//! * [`bessel`]: log-scaled `I_m`, `K_m` and their log-derivatives (orders to
//!   a few thousand), plus ordinary `J_m` and `H^(1)_m`.
//! * [`green`]: radial Green functions inside and outside the shell.
//! * [`integrands`]: the Dirichlet and the two Neumann integrand families.
//! * [`quadrature`]: adaptive Gauss-Kronrod per order.
//! * [`series`]: the order sum `c_0 + 2 sum c_m`, with early stop and a tail
//!   estimate.
//! * [`pressure`]: materials, cutoff, stress and force coefficients.
//! * [`report`], [`cli`]: JSON / CSV output and the `casimir-shell` binary.
//!
//! ```
//! use casimir_shell::green::BoundaryCondition;
//! use casimir_shell::pressure::*;
//! use casimir_shell::quadrature::QuadConfig;
//! use casimir_shell::series::SumConfig;
//!
//! let silver = lookup_material("silver").unwrap();
//! let geom = Geometry::new(1e-7).unwrap();
//! let r = compute_force(
//!     BoundaryCondition::Neumann,
//!     &silver,
//!     &geom,
//!     SPEED_OF_LIGHT_ROUNDED,
//!     &QuadConfig::default(),
//!     &SumConfig::default(),
//! )
//! .unwrap();
//! assert!(r.force_coeff.unwrap() < 0.0);
//! ```

pub mod bessel;
pub mod cli;
pub mod green;
pub mod integrands;
pub mod pressure;
pub mod quadrature;
pub mod report;
pub mod series;
