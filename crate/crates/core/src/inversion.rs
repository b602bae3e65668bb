//! Gil-Pelaez inversion: distribution functions recovered from characteristic
//! functions,
//!
//! ```text
//! G(a) = 1/2 - (1/pi) int_0^inf Im(e^{-iua} psi(u)) du / u,
//! ```
//!
//! together with closed-form distribution functions of the driving variables of the
//! gamma, Lévy and symmetric 1-stable laws.
//!
//! Compound-Poisson characteristic functions do not decay: `psi(u) -> p0 = P(Y = 0) > 0`.
//! The constant `p0` is split off and integrated in closed form (it contributes
//! `p0 * sign(a) / 2` to `G`), so the remaining integrand decays. Past the head
//! interval the tail is summed over half periods of the `e^{-iua}` kernel with Euler
//! acceleration. At an atom the formula returns the midpoint `(G(a-) + G(a)) / 2`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charfn::{log_bdcf_closed, DistributionModel};
use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate, integrate_oscillatory_tail, integrate_to_infinity, Integral, Tolerance};
use crate::specfun::{bessel_i1_kernel, erfc, ComplexValue};

/// Tolerances and budget for the inversion and transform integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// The integral over `[0, t_min]` is not integrated numerically; it is estimated
    /// from a power-law fit of the integrand at `t_min` and `t_min / 2`.
    pub t_min: f64,
    pub max_segments: usize,
    /// Half-period segments fed to the Euler transform in the oscillatory tail.
    pub accel_terms: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-8,
            rel_tol: 1e-8,
            t_min: 1e-12,
            max_segments: 10_000,
            accel_terms: 40,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |name: &'static str, value: f64, reason: &'static str| {
            Err(Error::InvalidParameter {
                name,
                value,
                reason,
            })
        };
        if !(self.abs_tol > 0.0) {
            return bad("abs_tol", self.abs_tol, "must be > 0");
        }
        if !(self.rel_tol >= 0.0) {
            return bad("rel_tol", self.rel_tol, "must be >= 0");
        }
        if !(self.t_min > 0.0) {
            return bad("t_min", self.t_min, "must be > 0");
        }
        if self.max_segments < 10 {
            return bad("max_segments", self.max_segments as f64, "must be >= 10");
        }
        if self.accel_terms < 4 {
            return bad("accel_terms", self.accel_terms as f64, "must be >= 4");
        }
        Ok(())
    }

    fn tolerance(&self, abs: f64, segments: usize) -> Tolerance {
        Tolerance::new(abs, self.rel_tol, segments.max(1))
    }
}

/// One evaluated point of a distribution function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdfPoint {
    pub a: f64,
    /// Value clamped to `[0, 1]`.
    pub value: f64,
    /// Value before clamping.
    pub raw_value: f64,
    pub est_error: f64,
    pub segments_used: usize,
}

impl CdfPoint {
    fn new(a: f64, raw: f64, est_error: f64, segments_used: usize) -> Self {
        Self {
            a,
            value: raw.clamp(0.0, 1.0),
            raw_value: raw,
            est_error,
            segments_used,
        }
    }
}

/// Where `psi` is probed to estimate its limit at infinity.
const LIMIT_PROBE: f64 = 1e6;
/// Upper cap on the head interval length chosen from the low-frequency phase.
const HEAD_CAP: f64 = 1e3;
/// Below this kernel frequency the tail is integrated without segmenting.
const MIN_TAIL_FREQUENCY: f64 = 1e-3;

/// Estimates `lim_{t->inf} psi(t)` by probing at `1e6` and `2e6`; returns zero unless
/// both probes agree on a real positive constant.
pub fn probe_bdcf_limit<F>(log_psi: &F) -> f64
where
    F: Fn(f64) -> ComplexValue + ?Sized,
{
    let p1 = log_psi(LIMIT_PROBE).exp();
    let p2 = log_psi(2.0 * LIMIT_PROBE).exp();
    let finite = p1.re.is_finite() && p1.im.is_finite() && p2.re.is_finite() && p2.im.is_finite();
    if !finite || p1.re <= 1e-300 || (p1 - p2).norm() > 1e-8 || p1.im.abs() > 1e-6 {
        return 0.0;
    }
    p1.re
}

struct Kernel<'a> {
    /// Integrand on `(0, inf)`.
    integrand: &'a (dyn Fn(f64) -> f64 + Sync),
    /// `|psi(u) - p0|`, used to decide where the integrand has died out.
    remainder: &'a (dyn Fn(f64) -> f64 + Sync),
    /// Low-frequency drift estimate of the phase near zero.
    drift: f64,
}

/// Integrates a Gil-Pelaez kernel over `(0, inf)`.
fn integrate_kernel(kernel: &Kernel<'_>, a: f64, quad: &QuadratureConfig) -> Result<Integral<f64>> {
    let gap = (a - kernel.drift).abs();
    let t0 = if gap > 0.0 { (40.0 / gap).max(20.0) } else { HEAD_CAP }.min(HEAD_CAP);

    let decay_eps = quad.abs_tol * 1e-3;
    let mut head_end = t0;
    let mut needs_tail = true;
    for k in 0..=20 {
        let u = t0 * f64::powi(2.0, k);
        if (kernel.remainder)(u) < decay_eps && (kernel.remainder)(1.37 * u) < decay_eps {
            head_end = u;
            needs_tail = false;
            break;
        }
    }

    let f = kernel.integrand;
    let part_tol = quad.abs_tol / 3.0;
    let mut budget = quad.max_segments;

    // [t_min, 1] under u = v^2, which tames sqrt-type behaviour at the origin.
    let near = head_end.min(1.0);
    let mut total = integrate(
        |v: f64| 2.0 * v * f(v * v),
        quad.t_min.sqrt(),
        near.sqrt(),
        quad.tolerance(part_tol, budget),
    )
    .map_err(|e| add_context(e, 0.0))?;
    budget = budget.saturating_sub(total.segments);
    total.value += origin_piece(f, quad.t_min);

    if head_end > near {
        let head = integrate(f, near, head_end, quad.tolerance(part_tol, budget))
            .map_err(|e| add_context(e, total.value))?;
        budget = budget.saturating_sub(head.segments);
        total = total.merge(head);
    }

    if needs_tail {
        let omega = a.abs();
        let tail = if omega >= MIN_TAIL_FREQUENCY {
            integrate_oscillatory_tail(
                f,
                head_end,
                omega,
                quad.accel_terms,
                quad.tolerance(part_tol, budget),
            )
        } else {
            integrate_to_infinity(f, head_end, quad.tolerance(part_tol, budget))
        }
        .map_err(|e| add_context(e, total.value))?;
        total = total.merge(tail);
    }
    Ok(total)
}

/// `int_0^{t_min} f` for an integrand behaving like `K u^p` near the origin
/// (`p = 0` for smooth BDCFs, `p = -1/2` for one-sided stable ones).
fn origin_piece(f: &(dyn Fn(f64) -> f64 + Sync), t_min: f64) -> f64 {
    let g1 = f(t_min);
    let g2 = f(0.5 * t_min);
    let p = if g1 != 0.0 && g2 != 0.0 && g1.signum() == g2.signum() {
        (g1 / g2).log2().clamp(-0.9, 2.0)
    } else {
        0.0
    };
    if g1.is_finite() {
        t_min * g1 / (1.0 + p)
    } else {
        0.0
    }
}

fn add_context(err: Error, done: f64) -> Error {
    match err {
        Error::QuadratureNonConvergence {
            partial,
            residual,
            segments,
        } => Error::QuadratureNonConvergence {
            partial: partial + done,
            residual,
            segments,
        },
        other => other,
    }
}

fn check_abscissa(a: f64) -> Result<()> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(domain("gil_pelaez_cdf", format!("abscissa must be finite, got {a}")))
    }
}

/// Gil-Pelaez inversion of a log-characteristic function, with `lim psi` at infinity
/// supplied by the caller (`0` for laws whose CF decays).
pub fn gil_pelaez_cdf_with_limit<F>(
    log_psi: F,
    a: f64,
    limit: f64,
    quad: &QuadratureConfig,
) -> Result<CdfPoint>
where
    F: Fn(f64) -> ComplexValue + Sync,
{
    quad.validate()?;
    check_abscissa(a)?;
    let h = 1e-6;
    let drift = log_psi(h).im / h;
    let remainder = |u: f64| (log_psi(u).exp() - limit).norm();
    let integrand = |u: f64| {
        let rho = log_psi(u).exp() - limit;
        let kernel = ComplexValue::from_polar(1.0, -u * a);
        (kernel * rho).im / u
    };
    let kernel = Kernel {
        integrand: &integrand,
        remainder: &remainder,
        drift,
    };
    let r = integrate_kernel(&kernel, a, quad)?;
    let raw = 0.5 + 0.5 * limit * sign(a) - r.value / PI;
    Ok(CdfPoint::new(a, raw, r.error / PI, r.segments))
}

/// Gil-Pelaez inversion of a log-characteristic function. The limit of `psi` at
/// infinity is probed numerically (see [`probe_bdcf_limit`]).
pub fn gil_pelaez_cdf<F>(log_psi: F, a: f64, quad: &QuadratureConfig) -> Result<CdfPoint>
where
    F: Fn(f64) -> ComplexValue + Sync,
{
    let limit = probe_bdcf_limit(&log_psi);
    gil_pelaez_cdf_with_limit(log_psi, a, limit, quad)
}

/// Inversion for a symmetric law, whose log-CF is real:
/// `G(a) = 1/2 + (1/pi) int_0^inf psi(t) sin(ta) dt / t`.
pub fn gil_pelaez_cdf_symmetric_with_limit<F>(
    log_psi_real: F,
    a: f64,
    limit: f64,
    quad: &QuadratureConfig,
) -> Result<CdfPoint>
where
    F: Fn(f64) -> f64 + Sync,
{
    quad.validate()?;
    check_abscissa(a)?;
    let remainder = |u: f64| (log_psi_real(u).exp() - limit).abs();
    let integrand = |u: f64| (log_psi_real(u).exp() - limit) * (u * a).sin() / u;
    let kernel = Kernel {
        integrand: &integrand,
        remainder: &remainder,
        drift: 0.0,
    };
    let r = integrate_kernel(&kernel, a, quad)?;
    let raw = 0.5 + 0.5 * limit * sign(a) + r.value / PI;
    Ok(CdfPoint::new(a, raw, r.error / PI, r.segments))
}

/// Symmetric-law inversion with the limit of `psi` probed numerically.
pub fn gil_pelaez_cdf_symmetric<F>(log_psi_real: F, a: f64, quad: &QuadratureConfig) -> Result<CdfPoint>
where
    F: Fn(f64) -> f64 + Sync,
{
    let limit = probe_bdcf_limit(&|t: f64| ComplexValue::new(log_psi_real(t), 0.0));
    gil_pelaez_cdf_symmetric_with_limit(log_psi_real, a, limit, quad)
}

fn sign(a: f64) -> f64 {
    if a > 0.0 {
        1.0
    } else if a < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Distribution function of the background driving variable `Y(1)` of a catalog model.
pub fn bddf(model: &DistributionModel, a: f64, quad: &QuadratureConfig) -> Result<CdfPoint> {
    model.validate()?;
    let m = *model;
    let limit = m.bdcf_limit();
    if m.is_symmetric() {
        gil_pelaez_cdf_symmetric_with_limit(move |t| log_bdcf_closed(&m, t).re, a, limit, quad)
    } else {
        gil_pelaez_cdf_with_limit(move |t| log_bdcf_closed(&m, t), a, limit, quad)
    }
}

/// [`bddf`] over a grid, evaluated in parallel; output order follows the input.
pub fn bddf_grid(model: &DistributionModel, grid: &[f64], quad: &QuadratureConfig) -> Vec<Result<CdfPoint>> {
    grid.par_iter().map(|&a| bddf(model, a, quad)).collect()
}

const CLOSED_FORM_TOL: f64 = 1e-13;

/// `P(sum_{k=1}^{N} E_k <= a)` with `N ~ Poisson(alpha)` and `E_k ~ Exp(rate lambda)`:
///
/// ```text
/// e^{-alpha} + e^{-alpha} alpha lambda int_0^a K(alpha lambda x) e^{-lambda x} dx,
/// K(b) = sum_{k>=1} b^(k-1) / (k! (k-1)!) = I_1(2 sqrt b) / sqrt b.
/// ```
pub fn gamma_bddf_closed(alpha: f64, lambda: f64, a: f64) -> Result<f64> {
    let _ = crate::charfn::GammaParams::new(alpha, lambda)?;
    if !(a >= 0.0) || !a.is_finite() {
        return Err(domain("gamma_bddf_closed", format!("need finite a >= 0, got {a}")));
    }
    let atom = (-alpha).exp();
    if a == 0.0 {
        return Ok(atom);
    }
    let rate = alpha * lambda;
    let integrand = |x: f64| {
        bessel_i1_kernel(rate * x).map_or(f64::NAN, |k| k * (-lambda * x).exp())
    };
    let r = integrate(integrand, 0.0, a, Tolerance::new(CLOSED_FORM_TOL, 1e-13, 5_000))?;
    Ok((atom + atom * rate * r.value).min(1.0))
}

/// The same distribution function after the substitution `w = 2 sqrt(alpha lambda x)`:
/// `e^{-alpha} + e^{-alpha} int_0^{2 sqrt(alpha lambda a)} I_1(w) e^{-w^2 / (4 alpha)} dw`.
pub fn gamma_bddf_bessel_form(alpha: f64, lambda: f64, a: f64) -> Result<f64> {
    let _ = crate::charfn::GammaParams::new(alpha, lambda)?;
    if !(a >= 0.0) || !a.is_finite() {
        return Err(domain("gamma_bddf_bessel_form", format!("need finite a >= 0, got {a}")));
    }
    let atom = (-alpha).exp();
    let upper = 2.0 * (alpha * lambda * a).sqrt();
    // I_1(w) = (w / 2) K(w^2 / 4)
    let integrand = |w: f64| {
        bessel_i1_kernel(0.25 * w * w).map_or(f64::NAN, |k| 0.5 * w * k * (-w * w / (4.0 * alpha)).exp())
    };
    let r = integrate(integrand, 0.0, upper, Tolerance::new(CLOSED_FORM_TOL, 1e-13, 5_000))?;
    Ok((atom + atom * r.value).min(1.0))
}

/// Driving-variable distribution function of the symmetric 1-stable law with unit
/// scale: `1/2 + arctan(a) / pi`.
pub fn stable1_bddf_closed(a: f64) -> f64 {
    0.5 + a.atan() / PI
}

/// Driving-variable distribution function of Lévy(m, c). The driving variable is
/// Lévy(m, c/4), so the value is `erfc(sqrt(c / (8 (a - m))))` for `a > m` and `0`
/// otherwise.
pub fn levy_bddf_closed(m: f64, c: f64, a: f64) -> f64 {
    levy_cdf(m, c / 4.0, a)
}

/// Distribution function of Lévy(m, c): `erfc(sqrt(c / (2 (x - m))))` on `x > m`.
pub fn levy_cdf(m: f64, c: f64, x: f64) -> f64 {
    if x <= m {
        0.0
    } else {
        erfc((c / (2.0 * (x - m))).sqrt())
    }
}

/// `|int_0^inf e^{-x} sin((ax)^2 - x) dx/x - (pi/2)(erfc(1/(|a| sqrt 2)) - 1/2)|`.
pub fn erfc_sine_residual(a: f64, quad: &QuadratureConfig) -> Result<f64> {
    let (lhs, rhs) = erfc_sine_sides(a, quad)?;
    Ok((lhs - rhs).abs())
}

/// Both sides of the chirp identity behind [`erfc_sine_residual`].
pub fn erfc_sine_sides(a: f64, quad: &QuadratureConfig) -> Result<(f64, f64)> {
    quad.validate()?;
    if a == 0.0 || !a.is_finite() {
        return Err(domain("erfc_sine_residual", format!("need finite a != 0, got {a}")));
    }
    let a2 = a * a;
    let f = |x: f64| {
        if x == 0.0 {
            -1.0
        } else {
            (-x).exp() * (a2 * x * x - x).sin() / x
        }
    };
    // e^{-45} bounds the neglected tail well below any sensible tolerance.
    let cut = 45.0;
    let tol = quad.tolerance(quad.abs_tol * 0.1, quad.max_segments);
    let head = integrate(f, 0.0, cut, tol)?;
    let rhs = 0.5 * PI * (erfc(1.0 / (a.abs() * std::f64::consts::SQRT_2)) - 0.5);
    Ok((head.value, rhs))
}
