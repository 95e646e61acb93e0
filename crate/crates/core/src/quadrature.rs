//! Adaptive Gauss-Kronrod quadrature over `[0, x_cutoff]`.
//!
//! Each interval is estimated with the 7-point Gauss / 15-point Kronrod pair;
//! the interval with the largest error estimate is bisected until the summed
//! error meets `max(abs_tol, rel_tol * |result|)`. Integration starts from a
//! geometrically graded partition toward `x = 0`, where the order-zero
//! integrands are not smooth.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::bessel::{BesselError, BesselOrder};
use crate::integrands::IntegrandKind;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            max_subdivisions: 200,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<(), QuadError> {
        let ok = self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.rel_tol.is_finite()
            && self.abs_tol.is_finite()
            && self.max_subdivisions >= 1;
        if ok {
            Ok(())
        } else {
            Err(QuadError::InvalidConfig(*self))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("tolerance not met after {subdivisions} subdivisions: estimate {estimate}, error bound {error_bound:e}")]
    NonConvergence {
        estimate: f64,
        error_bound: f64,
        subdivisions: usize,
    },
    #[error("invalid integration range [0, {0}]")]
    InvalidRange(f64),
    #[error("invalid quadrature configuration {0:?}")]
    InvalidConfig(QuadConfig),
    #[error("integrand evaluation failed: {0}")]
    Integrand(#[from] BesselError),
}

impl QuadError {
    /// Best available estimate when the error carries one.
    pub fn estimate(&self) -> Option<f64> {
        match self {
            QuadError::NonConvergence { estimate, .. } => Some(*estimate),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

// Kronrod nodes (positive half, centre first) and weights.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.0,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.991_455_371_120_812_639_206_854_697_526_329,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.209_482_141_084_727_828_012_999_174_891_714,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.022_935_322_010_529_224_963_732_008_058_970,
];
// Gauss weights for the centre and XGK[2], XGK[4], XGK[6].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.417_959_183_673_469_387_755_102_040_816_327,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.129_484_966_168_869_693_270_611_432_679_082,
];

/// Number of geometric break points toward zero in the initial partition.
const GRADING_LEVELS: i32 = 8;
const GRADING_RATIO: f64 = 4.0;

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F, E>(f: &F, a: f64, b: f64) -> Result<Interval, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut kronrod = WGK[0] * fc;
    let mut gauss = WG[0] * fc;
    let mut res_abs = kronrod.abs();
    let mut values = [(0.0, 0.0); 8];
    values[0] = (fc, fc);
    for j in 1..8 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        values[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 0 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[0] * (fc - mean).abs();
    for j in 1..8 {
        res_asc += WGK[j] * ((values[j].0 - mean).abs() + (values[j].1 - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Interval { a, b, value, error })
}

/// Adaptive integral of `f` over `[a, b]`, starting from the partition given
/// by `breaks` (sorted, strictly inside `(a, b)`).
pub fn integrate_adaptive<F>(
    f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    cfg: &QuadConfig,
) -> Result<QuadEstimate, QuadError>
where
    F: Fn(f64) -> Result<f64, BesselError>,
{
    cfg.validate()?;
    let mut points = Vec::with_capacity(breaks.len() + 2);
    points.push(a);
    points.extend(breaks.iter().copied().filter(|&p| p > a && p < b));
    points.push(b);

    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        heap.push(gauss_kronrod(&f, w[0], w[1])?);
    }

    let totals = |heap: &BinaryHeap<Interval>| {
        let mut parts: Vec<&Interval> = heap.iter().collect();
        parts.sort_by(|x, y| x.a.total_cmp(&y.a));
        parts
            .iter()
            .fold((0.0, 0.0), |(v, e), i| (v + i.value, e + i.error))
    };

    let mut subdivisions = 0;
    loop {
        let (value, error) = totals(&heap);
        let tol = cfg.abs_tol.max(cfg.rel_tol * value.abs());
        if error <= tol {
            return Ok(QuadEstimate {
                value,
                error,
                intervals: heap.len(),
            });
        }
        let worst = heap.pop().expect("at least one interval");
        let mid = 0.5 * (worst.a + worst.b);
        let resolvable = mid > worst.a && mid < worst.b;
        if subdivisions >= cfg.max_subdivisions || !resolvable {
            heap.push(worst);
            return Err(QuadError::NonConvergence {
                estimate: value,
                error_bound: error,
                subdivisions,
            });
        }
        heap.push(gauss_kronrod(&f, worst.a, mid)?);
        heap.push(gauss_kronrod(&f, mid, worst.b)?);
        subdivisions += 1;
    }
}

/// Break points `x_cutoff / 4^k`, ascending.
pub fn graded_breaks(x_cutoff: f64) -> Vec<f64> {
    (1..=GRADING_LEVELS)
        .rev()
        .map(|k| x_cutoff / GRADING_RATIO.powi(k))
        .collect()
}

/// Integral of one integrand family at order `m` over `[0, x_cutoff]`.
pub fn integrate_order(
    kind: IntegrandKind,
    m: BesselOrder,
    x_cutoff: f64,
    cfg: &QuadConfig,
) -> Result<f64, QuadError> {
    integrate_order_estimate(kind, m, x_cutoff, cfg).map(|e| e.value)
}

/// As [`integrate_order`], also returning the error estimate.
pub fn integrate_order_estimate(
    kind: IntegrandKind,
    m: BesselOrder,
    x_cutoff: f64,
    cfg: &QuadConfig,
) -> Result<QuadEstimate, QuadError> {
    integrate_order_between(kind, m, 0.0, x_cutoff, cfg)
}

/// Integral of one integrand family over `[lo, hi]`, `0 <= lo <= hi`.
pub fn integrate_order_between(
    kind: IntegrandKind,
    m: BesselOrder,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<QuadEstimate, QuadError> {
    if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && hi >= lo) {
        return Err(QuadError::InvalidRange(hi));
    }
    if (kind == IntegrandKind::NeumannA && m.get() == 0) || hi == lo {
        return Ok(QuadEstimate {
            value: 0.0,
            error: 0.0,
            intervals: 0,
        });
    }
    let breaks = if lo == 0.0 { graded_breaks(hi) } else { Vec::new() };
    integrate_adaptive(|x| kind.eval(m, x), lo, hi, &breaks, cfg)
}
