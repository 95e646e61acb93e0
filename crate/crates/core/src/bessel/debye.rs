//! Uniform large-order expansion of `I_nu(nu z)` and `K_nu(nu z)`.
//!
//! With `t = 1/sqrt(1+z^2)` and `eta = sqrt(1+z^2) + ln(z / (1 + sqrt(1+z^2)))`:
//!
//! ```text
//! I_nu(nu z)  ~ e^{ nu eta} / (sqrt(2 pi nu) (1+z^2)^{1/4}) sum_k        u_k(t) / nu^k
//! K_nu(nu z)  ~ sqrt(pi/(2 nu)) e^{-nu eta} / (1+z^2)^{1/4} sum_k (-1)^k u_k(t) / nu^k
//! I'_nu(nu z) ~ (1+z^2)^{1/4} e^{ nu eta} / (sqrt(2 pi nu) z)  sum_k        v_k(t) / nu^k
//! K'_nu(nu z) ~ -sqrt(pi/(2 nu)) (1+z^2)^{1/4} e^{-nu eta} / z sum_k (-1)^k v_k(t) / nu^k
//! ```
//!
//! The polynomials come from
//! `u_{k+1} = t^2 (1 - t^2) u_k' / 2 + (1/8) int_0^t (1 - 5 s^2) u_k(s) ds` and
//! `v_k = u_k + t (t^2 - 1) (u_{k-1} / 2 + t u_{k-1}')`.
//!
//! Every `v_k - u_k` carries the factor `1 - t^2 = z^2 t^2`; keeping it
//! explicit (`d_k`) gives `I'/I + K'/K` without cancellation at small `z`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::LogBesselEval;

/// Number of correction terms kept beyond the leading one.
const TERMS: usize = 10;

/// Polynomial in `t`, coefficients in ascending degree.
type Poly = Vec<f64>;

struct Coefficients {
    u: Vec<Poly>,
    v: Vec<Poly>,
    /// `(v_k - u_k) / (1 - t^2)`
    d: Vec<Poly>,
}

fn derivative(p: &[f64]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| i as f64 * c)
        .collect()
}

fn antiderivative(p: &[f64]) -> Poly {
    std::iter::once(0.0)
        .chain(p.iter().enumerate().map(|(i, c)| c / (i as f64 + 1.0)))
        .collect()
}

fn multiply(a: &[f64], b: &[f64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add(a: &[f64], b: &[f64]) -> Poly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0.0) + b.get(i).copied().unwrap_or(0.0))
        .collect()
}

fn scale(a: &[f64], s: f64) -> Poly {
    a.iter().map(|c| c * s).collect()
}

/// Quotient of `p` by `1 - t^2`; `p` must be divisible.
fn divide_one_minus_t2(p: &[f64]) -> Poly {
    let n = p.len();
    if n < 3 {
        return Vec::new();
    }
    // (1 - t^2) q = p  =>  q_{i-2} = q_i - p_i, from the top down.
    let mut q = vec![0.0; n - 2];
    for i in (2..n).rev() {
        let qi = q.get(i).copied().unwrap_or(0.0);
        q[i - 2] = qi - p[i];
    }
    q
}

fn horner(p: &[f64], t: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

fn build() -> Coefficients {
    // t^2 (1 - t^2) / 2, (1 - 5 t^2) / 8, t (t^2 - 1)
    let half_t2_one_minus_t2 = [0.0, 0.0, 0.5, 0.0, -0.5];
    let one_minus_5t2_over_8 = [0.125, 0.0, -0.625];
    let t_t2_minus_one = [0.0, -1.0, 0.0, 1.0];

    let mut u: Vec<Poly> = vec![vec![1.0]];
    for k in 0..TERMS {
        let a = multiply(&half_t2_one_minus_t2, &derivative(&u[k]));
        let b = antiderivative(&multiply(&one_minus_5t2_over_8, &u[k]));
        u.push(add(&a, &b));
    }
    let mut v: Vec<Poly> = vec![vec![1.0]];
    for k in 1..=TERMS {
        let inner = add(
            &scale(&u[k - 1], 0.5),
            &multiply(&[0.0, 1.0], &derivative(&u[k - 1])),
        );
        v.push(add(&u[k], &multiply(&t_t2_minus_one, &inner)));
    }
    let d = u
        .iter()
        .zip(&v)
        .map(|(uk, vk)| divide_one_minus_t2(&add(vk, &scale(uk, -1.0))))
        .collect();
    Coefficients { u, v, d }
}

fn coefficients() -> &'static Coefficients {
    static COEFFS: OnceLock<Coefficients> = OnceLock::new();
    COEFFS.get_or_init(build)
}

pub(super) fn eval(nu: f64, x: f64) -> LogBesselEval {
    let coeffs = coefficients();
    let z = x / nu;
    let s = z.hypot(1.0);
    let t = 1.0 / s;
    let eta = s + (z / (1.0 + s)).ln();

    // Even and odd parts in 1/nu: U+- = ue +- uo, likewise V and D.
    let (mut ue, mut uo, mut ve, mut vo, mut de, mut d_o) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let mut weight = 1.0;
    for k in 0..=TERMS {
        let uk = horner(&coeffs.u[k], t) * weight;
        let vk = horner(&coeffs.v[k], t) * weight;
        let dk = horner(&coeffs.d[k], t) * weight;
        if k % 2 == 0 {
            ue += uk;
            ve += vk;
            de += dk;
        } else {
            uo += uk;
            vo += vk;
            d_o += dk;
        }
        weight /= nu;
    }
    let (u_plus, u_minus) = (ue + uo, ue - uo);
    let (v_plus, v_minus) = (ve + vo, ve - vo);

    let log_s = s.ln();
    let log_i = nu * eta - 0.5 * (2.0 * PI * nu).ln() - 0.5 * log_s + u_plus.ln();
    let log_k = -nu * eta + 0.5 * (PI / (2.0 * nu)).ln() - 0.5 * log_s + u_minus.ln();
    let ratio_i = s / z * (v_plus / u_plus);
    let ratio_k = -s / z * (v_minus / u_minus);
    // V+ U- - V- U+ = 2 (1 - t^2) (D_o U_e - D_e U_o)
    let one_minus_t2 = (z * t) * (z * t);
    let ratio_sum = s / z * 2.0 * one_minus_t2 * (d_o * ue - de * uo) / (u_plus * u_minus);
    LogBesselEval {
        log_i,
        log_k,
        ratio_i,
        ratio_k,
        ratio_sum,
    }
}
