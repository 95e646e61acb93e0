use std::f64::consts::FRAC_2_PI;

use num_complex::Complex64;

use super::{check_argument, BesselError, BesselOrder};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const RESCALE_AT: f64 = 1e250;

/// `J_m`, `J'_m`, `H^(1)_m` and `H^(1)'_m` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrdinaryBessel {
    pub j: f64,
    pub j_prime: f64,
    pub h1: Complex64,
    pub h1_prime: Complex64,
}

impl OrdinaryBessel {
    pub fn y(&self) -> f64 {
        self.h1.im
    }

    pub fn y_prime(&self) -> f64 {
        self.h1_prime.im
    }
}

/// Ordinary Bessel and Hankel functions of the first kind.
///
/// Intended for moderate orders (tens) and arguments; `J` comes from Miller's
/// backward recurrence, `Y_0` and `Y_1` from their Neumann series in `J`, and
/// higher `Y_m` from forward recurrence.
pub fn eval_ordinary(m: BesselOrder, x: f64) -> Result<OrdinaryBessel, BesselError> {
    check_argument(x)?;
    let m = m.get() as usize;
    let j = bessel_j_table(m + 1, x);
    let (y0, y1) = y0_y1(&j, x);

    let mut y_prev = y0;
    let mut y_cur = y1;
    for k in 1..m.max(1) {
        let next = 2.0 * k as f64 / x * y_cur - y_prev;
        y_prev = y_cur;
        y_cur = next;
    }
    let mf = m as f64;
    // J'_0 = -J_1, Y'_0 = -Y_1; otherwise f'_m = f_{m-1} - (m/x) f_m.
    let (ym, jp, yp) = if m == 0 {
        (y0, -j[1], -y1)
    } else {
        (y_cur, j[m - 1] - mf / x * j[m], y_prev - mf / x * y_cur)
    };
    Ok(OrdinaryBessel {
        j: j[m],
        j_prime: jp,
        h1: Complex64::new(j[m], ym),
        h1_prime: Complex64::new(jp, yp),
    })
}

/// `J_0 .. J_n` (and beyond, up to the recurrence start) by Miller's
/// algorithm normalized with `J_0 + 2 sum J_{2k} = 1`.
fn bessel_j_table(n: usize, x: f64) -> Vec<f64> {
    let scale = (n as f64).max(x);
    let mut start = (scale + 30.0 + (60.0 * scale).sqrt()).ceil() as usize;
    start += start % 2;
    let mut j = vec![0.0; start + 2];
    j[start] = 1e-30;
    for k in (1..=start).rev() {
        j[k - 1] = 2.0 * k as f64 / x * j[k] - j[k + 1];
        if j[k - 1].abs() > RESCALE_AT {
            for v in j[k - 1..].iter_mut() {
                *v /= RESCALE_AT;
            }
        }
    }
    let norm = j[0] + 2.0 * j.iter().skip(2).step_by(2).sum::<f64>();
    for v in j.iter_mut() {
        *v /= norm;
    }
    j
}

/// Neumann series
///
/// ```text
/// (pi/2) Y_0 = (ln(x/2) + gamma) J_0 - 2 sum_{k>=1} (-1)^k J_{2k} / k
/// (pi/2) Y_1 = -J_0/x + (ln(x/2) + gamma - 1) J_1 - sum_{k>=1} (-1)^k (2k+1) J_{2k+1} / (k (k+1))
/// ```
fn y0_y1(j: &[f64], x: f64) -> (f64, f64) {
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut sign = -1.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let kf = k as f64;
        s0 += sign * j[2 * k] / kf;
        s1 += sign * (2.0 * kf + 1.0) * j[2 * k + 1] / (kf * (kf + 1.0));
        sign = -sign;
        k += 1;
    }
    let y0 = FRAC_2_PI * (log_term * j[0] - 2.0 * s0);
    let y1 = FRAC_2_PI * (-j[0] / x + (log_term - 1.0) * j[1] - s1);
    (y0, y1)
}
