use std::f64::consts::PI;

use super::LogBesselEval;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;
// Rescaling step for the ascending series, keeps partial sums finite for large x.
const RESCALE_AT: f64 = 1e280;

pub(super) fn eval_direct(m: u32, x: f64) -> LogBesselEval {
    let log_i = log_i_series(m, x);
    let i_up = i_ratio_cf(m, x);
    let (log_k, ratio_k, k_down) = log_k_recurrence(m, x);
    // I'/I = m/x + I_{m+1}/I_m and K'/K = -m/x - K_{m-1}/K_m; the m/x
    // terms cancel exactly in the sum.
    LogBesselEval {
        log_i,
        log_k,
        ratio_i: f64::from(m) / x + i_up,
        ratio_k,
        ratio_sum: i_up - k_down,
    }
}

fn ln_factorial(m: u32) -> f64 {
    (2..=m).map(|k| f64::from(k).ln()).sum()
}

/// `ln I_m(x)` from the ascending series; every term is positive.
fn log_i_series(m: u32, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mf = f64::from(m);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut log_scale = 0.0;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= q / (kf * (mf + kf));
        sum += term;
        if sum > RESCALE_AT {
            sum /= RESCALE_AT;
            term /= RESCALE_AT;
            log_scale += RESCALE_AT.ln();
        }
        // Terms peak near k ~ x/2 before decaying.
        if term < EPS * sum && kf > 0.5 * x {
            break;
        }
    }
    mf * (0.5 * x).ln() - ln_factorial(m) + sum.ln() + log_scale
}

/// `I_{m+1}(x) / I_m(x)` by the modified Lentz method.
fn i_ratio_cf(m: u32, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mf = f64::from(m);
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..MAX_ITER {
        let b = 2.0 * (mf + k as f64) / x;
        d += b;
        if d == 0.0 {
            d = TINY;
        }
        c = b + 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    f
}

/// Exponentially scaled `e^x K_0(x)` and `e^x K_1(x)`.
pub(super) fn k0_k1_scaled(x: f64) -> (f64, f64) {
    if x <= 2.0 {
        let (k0, k1) = k0_k1_series(x);
        (k0 * x.exp(), k1 * x.exp())
    } else {
        k0_k1_steed(x)
    }
}

/// Ascending series for `K_0` and `K_1`, used for `x <= 2`.
fn k0_k1_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let log_half = (0.5 * x).ln();

    // K_0 = -(ln(x/2) + gamma) I_0 + sum_{k>=1} q^k/(k!)^2 H_k
    // K_1 = 1/x + (x/2) sum_{k>=0} q^k/(k!(k+1)!) [ln(x/2) - (psi(k+1) + psi(k+2))/2]
    let mut t0 = 1.0; // q^k / (k!)^2
    let mut t1 = 1.0; // q^k / (k! (k+1)!)
    let mut harmonic = 0.0; // H_k
    let mut i0 = 1.0;
    let mut k0_tail = 0.0;
    let mut k1_sum = t1 * (log_half - 0.5 * (-2.0 * EULER_GAMMA + 1.0));
    for k in 1..200 {
        let kf = k as f64;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        harmonic += 1.0 / kf;
        i0 += t0;
        k0_tail += t0 * harmonic;
        let psi_sum = -2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (kf + 1.0);
        k1_sum += t1 * (log_half - 0.5 * psi_sum);
        // x <= 2 so q <= 1 and the terms fall off factorially.
        if t0 * harmonic < EPS && t1 < EPS {
            break;
        }
    }
    let k0 = -(log_half + EULER_GAMMA) * i0 + k0_tail;
    let k1 = 1.0 / x + 0.5 * x * k1_sum;
    (k0, k1)
}

/// Steed's continued fraction (Temme's normalization) at order zero,
/// returning `e^x K_0(x)` and `e^x K_1(x)`. Converges quickly for `x >= 2`.
fn k0_k1_steed(x: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// `ln K_m(x)`, `K'_m/K_m` and `K_{m-1}/K_m` (with `K_{-1} = K_1`) by
/// forward recurrence of `K_{j+1}/K_j`, which is stable in the
/// increasing-order direction.
fn log_k_recurrence(m: u32, x: f64) -> (f64, f64, f64) {
    let (k0s, k1s) = k0_k1_scaled(x);
    let mut log_k = k0s.ln() - x;
    // ratio = K_{j+1} / K_j
    let mut ratio = k1s / k0s;
    if m == 0 {
        return (log_k, -ratio, ratio);
    }
    for j in 1..=m {
        log_k += ratio.ln();
        if j < m {
            ratio = 2.0 * f64::from(j) / x + 1.0 / ratio;
        }
    }
    // K'_m = -K_{m-1} - (m/x) K_m, and here ratio = K_m / K_{m-1}.
    let k_down = 1.0 / ratio;
    (log_k, -k_down - f64::from(m) / x, k_down)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_k1_branches_agree_at_the_switch() {
        let (a0, a1) = k0_k1_series(2.0);
        let (b0, b1) = k0_k1_steed(2.0);
        let e = 2.0f64.exp();
        assert!((a0 * e / b0 - 1.0).abs() < 1e-13);
        assert!((a1 * e / b1 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn k_at_one() {
        let (k0, k1) = k0_k1_scaled(1.0);
        let e = (-1.0f64).exp();
        assert!((k0 * e / 0.421_024_438_240_708_33 - 1.0).abs() < 1e-14);
        assert!((k1 * e / 0.601_907_230_197_234_57 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn series_rescales_for_large_arguments() {
        // ln I_0(x) ~ x - ln(2 pi x)/2 for large x.
        let x = 1500.0;
        let approx = x - 0.5 * (2.0 * PI * x).ln() + (1.0 + 1.0 / (8.0 * x)).ln();
        assert!((log_i_series(0, x) - approx).abs() < 1e-6);
    }
}
