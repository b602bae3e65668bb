//! Special functions: log-gamma, digamma and trigamma on the right half-plane, the
//! complementary error function, and the modified-Bessel series kernel
//! `sum_{k>=1} b^(k-1) / (k! (k-1)!) = I_1(2 sqrt b) / sqrt b`.
//!
//! Gamma-family functions shift the argument up by the recurrence until `re >= 8`
//! and then apply the Stirling-type asymptotic expansion. Nothing here continues
//! analytically into `re <= 0`; such arguments are rejected.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Complex value carrier used for characteristic functions and their logarithms.
pub type ComplexValue = Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Recurrence target: arguments are shifted until their real part reaches this value.
const SHIFT_TARGET: f64 = 8.0;

/// B_2, B_4, ..., B_20.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const SERIES_MAX_TERMS: usize = 500;
const SERIES_REL_CUTOFF: f64 = 1e-16;

/// Above this value of `2 sqrt(b)` the Bessel kernel uses the large-argument expansion.
const BESSEL_ASYMPTOTIC_SWITCH: f64 = 30.0;

fn check_half_plane(function: &'static str, z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(function, format!("non-finite argument {z}")));
    }
    if z.re <= 0.0 {
        return Err(domain(
            function,
            format!("real part must be positive, got {z}"),
        ));
    }
    Ok(())
}

fn check_positive(function: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain(function, format!("argument must be positive, got {x}")));
    }
    Ok(())
}

/// Principal (analytic) branch of `log Gamma(z)` for `re z > 0`.
///
/// The imaginary part is continuous along vertical lines and is not reduced
/// modulo `2 pi`.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    check_half_plane("log_gamma_complex", z)?;
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TARGET {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2.0 * (k + 1) as f64;
        series += power * (b / (two_k * (two_k - 1.0)));
        power *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift)
}

/// Real `log Gamma(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("log_gamma", x)?;
    Ok(log_gamma_complex(Complex64::new(x, 0.0))?.re)
}

/// Digamma `Psi(x) = d/dx log Gamma(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", x)?;
    let mut w = x;
    let mut shift = 0.0;
    while w < SHIFT_TARGET {
        shift += 1.0 / w;
        w += 1.0;
    }
    let inv2 = 1.0 / (w * w);
    let mut series = 0.0;
    let mut power = inv2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        series += b / (2.0 * (k + 1) as f64) * power;
        power *= inv2;
    }
    Ok(w.ln() - 0.5 / w - series - shift)
}

/// Complex digamma for `re z > 0`; conjugate-symmetric and equal to [`digamma`] on the real axis.
pub fn digamma_complex(z: Complex64) -> Result<Complex64> {
    check_half_plane("digamma_complex", z)?;
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TARGET {
        shift += w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        series += power * (b / (2.0 * (k + 1) as f64));
        power *= inv2;
    }
    Ok(w.ln() - inv * 0.5 - series - shift)
}

/// Trigamma `Psi'(x)` for `x > 0`.
pub fn trigamma(x: f64) -> Result<f64> {
    check_positive("trigamma", x)?;
    let mut w = x;
    let mut shift = 0.0;
    while w < SHIFT_TARGET {
        shift += 1.0 / (w * w);
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut power = inv2 * inv;
    for b in BERNOULLI_EVEN {
        series += b * power;
        power *= inv2;
    }
    Ok(shift + inv + 0.5 * inv2 + series)
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function `1 - erf(x)`, accurate in the far right tail.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// `sum_{k>=1} b^(k-1) / (k! (k-1)!)`, which equals `I_1(2 sqrt b) / sqrt b`.
///
/// The factorial series is summed until the next term drops below `1e-16` of the
/// running sum. Once `2 sqrt b > 30` the large-argument expansion of `I_1` is used
/// instead; an overflow error is raised when `e^(2 sqrt b)` is not representable.
pub fn bessel_i1_kernel(b: f64) -> Result<f64> {
    if !b.is_finite() || b < 0.0 {
        return Err(domain(
            "bessel_i1_kernel",
            format!("argument must be finite and non-negative, got {b}"),
        ));
    }
    let z = 2.0 * b.sqrt();
    if z > BESSEL_ASYMPTOTIC_SWITCH {
        return bessel_i1_kernel_asymptotic(b, z);
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..SERIES_MAX_TERMS {
        let k = k as f64;
        term *= b / (k * (k + 1.0));
        sum += term;
        if term <= SERIES_REL_CUTOFF * sum {
            return Ok(sum);
        }
    }
    Err(Error::SeriesNonConvergence {
        function: "bessel_i1_kernel",
        terms: SERIES_MAX_TERMS,
    })
}

// I_1(z) ~ e^z / sqrt(2 pi z) * sum_k (-1)^k a_k(1) / z^k,
// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
fn bessel_i1_kernel_asymptotic(b: f64, z: f64) -> Result<f64> {
    let mut coeff = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..SERIES_MAX_TERMS {
        let odd = (2 * k - 1) as f64;
        coeff *= -(4.0 - odd * odd) / (8.0 * k as f64 * z);
        if coeff.abs() >= prev {
            break;
        }
        sum += coeff;
        prev = coeff.abs();
        if prev < 1e-17 {
            break;
        }
    }
    let log_scale = z - 0.5 * (2.0 * PI * z).ln() - 0.5 * b.ln();
    let value = log_scale.exp() * sum;
    if !value.is_finite() {
        return Err(Error::Overflow {
            function: "bessel_i1_kernel",
            argument: b,
        });
    }
    Ok(value)
}
