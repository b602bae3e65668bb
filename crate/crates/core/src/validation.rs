//! Numerical checks of the identities behind the library, each producing an
//! [`IdentityReport`], and the suite runner [`run_all`].
//!
//! The `*_oracle` functions are brute-force references built only from defining
//! series and integrals; they share no code path with [`crate::specfun`].

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::charfn::{
    cf_from_bdcf, innovation_log_cf, levy_log_cf, log_bdcf_closed, log_bdcf_loggamma_levy, log_bdcf_numeric,
    default_fd_step, log_cf, loggamma_levy_weight, BesselKParams, DistributionModel, GammaParams, LevyParams,
    LogGammaParams, SymStable1Params,
};
use crate::error::{domain, Error, Result};
use crate::inversion::{
    bddf, erfc_sine_sides, gamma_bddf_closed, levy_bddf_closed, stable1_bddf_closed, QuadratureConfig,
};
use crate::quadrature::{integrate, integrate_to_infinity, Tolerance};
use crate::rng::RngStream;
use crate::samplers::{
    sample_besselk, sample_besselk_innovation, sample_gamma, sample_gamma_bdrv, sample_gamma_innovation,
    sample_loggamma_innovation, sample_loggamma_series, SeriesConfig,
};
use crate::specfun::{
    bessel_i1_kernel, digamma, digamma_complex, log_gamma_complex, trigamma, ComplexValue, EULER_GAMMA,
};
use crate::stats::{empirical_cf, fraction_equal, ks_two_sample, mean, variance};

/// One side of a checked identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl From<f64> for Side {
    fn from(v: f64) -> Self {
        Side::Real(v)
    }
}

impl From<ComplexValue> for Side {
    fn from(z: ComplexValue) -> Self {
        Side::Complex { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub lhs: Side,
    pub rhs: Side,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(rename = "params")]
    pub metadata: Map<String, Value>,
}

impl IdentityReport {
    pub fn new(
        identity_id: &str,
        lhs: impl Into<Side>,
        rhs: impl Into<Side>,
        residual: f64,
        tolerance: f64,
        metadata: Value,
    ) -> Self {
        let metadata = match metadata {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Self {
            identity_id: identity_id.to_string(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            metadata,
        }
    }

    /// A report for a check that could not be evaluated.
    pub fn failure(identity_id: &str, tolerance: f64, error: &Error) -> Self {
        Self::new(identity_id, f64::NAN, f64::NAN, f64::INFINITY, tolerance, json!({ "error": error.to_string() }))
    }

    pub fn scale_tolerance(mut self, factor: f64) -> Self {
        self.tolerance *= factor;
        self.passed = self.residual <= self.tolerance;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

fn c_abs_max(z: ComplexValue, w: ComplexValue) -> f64 {
    (z.re - w.re).abs().max((z.im - w.im).abs())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Largest residual over a grid, with the sides where it occurs.
fn worst<F, S>(grid: &[f64], mut f: F) -> Result<(f64, S, S, f64)>
where
    F: FnMut(f64) -> Result<(S, S, f64)>,
    S: Copy + Default,
{
    let mut out = (0.0, S::default(), S::default(), f64::NAN);
    for &x in grid {
        let (l, r, res) = f(x)?;
        if !(res <= out.0) {
            out = (res, l, r, x);
        }
    }
    Ok(out)
}

fn tight(max_segments: usize) -> Tolerance {
    Tolerance::new(1e-13, 1e-13, max_segments)
}

// ----------------------------------------------------------------------------------------
// Brute-force oracles

// Euler–Maclaurin completion of sum_{n>N} f(n) from derivatives d[k] = f^(k)(N), k = 1, 3, 5.
fn em_tail(integral: f64, f_n: f64, d1: f64, d3: f64, d5: f64) -> f64 {
    integral - 0.5 * f_n - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0
}

const ORACLE_TERMS: usize = 2000;

/// `Psi(x)` from `Psi(x) = x sum_{n>=1} 1/(n(n+x)) - C - 1/x`, the series summed
/// directly to 2000 terms and completed by Euler–Maclaurin.
pub fn digamma_oracle(x: f64) -> f64 {
    assert!(x > 0.0);
    let nn = ORACLE_TERMS as f64;
    let head: f64 = (1..=ORACLE_TERMS).rev().map(|n| 1.0 / (n as f64 * (n as f64 + x))).sum();
    // f(n) = (1/n - 1/(n+x)) / x; f^(k)(n) = (-1)^k k! (n^-(k+1) - (n+x)^-(k+1)) / x
    let d = |k: i32, fact: f64| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * fact * (nn.powi(-(k + 1)) - (nn + x).powi(-(k + 1))) / x
    };
    let tail = em_tail((x / nn).ln_1p() / x, 1.0 / (nn * (nn + x)), d(1, 1.0), d(3, 6.0), d(5, 120.0));
    x * (head + tail) - EULER_GAMMA - 1.0 / x
}

/// `Psi'(x) = 1/x^2 + sum_{n>=1} 1/(n+x)^2`, completed as in [`digamma_oracle`].
pub fn trigamma_oracle(x: f64) -> f64 {
    assert!(x > 0.0);
    let nn = ORACLE_TERMS as f64;
    let head: f64 = (1..=ORACLE_TERMS).rev().map(|n| (n as f64 + x).powi(-2)).sum();
    let m = nn + x;
    let tail = em_tail(1.0 / m, m.powi(-2), -2.0 * m.powi(-3), -24.0 * m.powi(-5), -720.0 * m.powi(-7));
    1.0 / (x * x) + head + tail
}

/// `erfc(x)` from its defining integral; for `x >= 0` written as
/// `(2/sqrt pi) e^{-x^2} int_0^inf e^{-2xu - u^2} du` so small values keep relative accuracy.
pub fn erfc_oracle(x: f64) -> Result<f64> {
    let k = 2.0 / PI.sqrt();
    let tol = Tolerance::new(0.0, 2e-14, 2000);
    if x >= 0.0 {
        let r = integrate_to_infinity(|u: f64| (-2.0 * x * u - u * u).exp(), 0.0, tol)?;
        Ok(k * (-x * x).exp() * r.value)
    } else {
        let r = integrate(|s: f64| (-s * s).exp(), 0.0, -x, tol)?;
        Ok(1.0 + k * r.value)
    }
}

/// `I_1(2 sqrt b) / sqrt b` from `I_1(z) = (z/pi) int_0^pi e^{z cos th} sin^2 th dth`.
pub fn bessel_kernel_oracle(b: f64) -> Result<f64> {
    let z = 2.0 * b.sqrt();
    let r = integrate(
        |th: f64| (z * (th.cos() - 1.0)).exp() * th.sin().powi(2),
        0.0,
        PI,
        Tolerance::new(0.0, 2e-14, 2000),
    )?;
    Ok(2.0 / PI * z.exp() * r.value)
}

// ----------------------------------------------------------------------------------------
// Checks

/// `log phi` rebuilt from the closed-form BDCF by `int_0^t log psi(u) du/u`, against `log phi`.
pub fn check_bdcf_roundtrip(
    model: &DistributionModel,
    t_grid: &[f64],
    quad: &QuadratureConfig,
) -> Result<IdentityReport> {
    model.validate()?;
    let m = *model;
    let (res, l, r, t) = worst(t_grid, |t| {
        let lhs = cf_from_bdcf(|u| log_bdcf_closed(&m, u), t, quad)?;
        let rhs = log_cf(&m, t);
        Ok((lhs, rhs, (lhs - rhs).norm()))
    })?;
    Ok(IdentityReport::new("bdcf_roundtrip", l, r, res, 1e-7, json!({ "model": m, "t_grid": t_grid, "worst_t": t })))
}

/// Monte Carlo mean and variance of the series sampler against `-log lambda + Psi(alpha)`
/// and `Psi'(alpha)`. The residual is normalised so that 1 is the edge of both bands
/// (4 standard errors for the mean, 5% for the variance).
pub fn check_loggamma_moments(params: LogGammaParams, n: usize, stream: RngStream) -> Result<IdentityReport> {
    if n < 10_000 {
        return Err(domain("check_loggamma_moments", format!("need n >= 10000, got {n}")));
    }
    let b = sample_loggamma_series(params, n, SeriesConfig::default(), stream)?;
    let m = mean(&b.values);
    let v = variance(&b.values);
    let target_m = digamma(params.alpha)? - params.lambda.ln();
    let target_v = trigamma(params.alpha)?;
    let se = (target_v / n as f64).sqrt();
    let res = ((m - target_m).abs() / (4.0 * se)).max(rel(v, target_v) / 0.05);
    Ok(IdentityReport::new(
        "loggamma_moments",
        m,
        target_m,
        res,
        1.0,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "n": n, "seed": stream.seed,
                "stream_id": stream.stream_id, "variance": v, "target_variance": target_v }),
    ))
}

/// `int_0^inf x e^{-alpha x} / (1 - e^{-x}) dx = Psi'(alpha)`.
pub fn check_trigamma_integral(alpha: f64, quad: &QuadratureConfig) -> Result<IdentityReport> {
    LogGammaParams::new(alpha, 1.0)?;
    let f = |x: f64| if x == 0.0 { 1.0 } else { x * (-alpha * x).exp() / -(-x).exp_m1() };
    let lhs = integrate_to_infinity(f, 0.0, tight(quad.max_segments))?.value;
    let rhs = trigamma(alpha)?;
    Ok(IdentityReport::new("trigamma_integral", lhs, rhs, (lhs - rhs).abs(), 1e-8, json!({ "alpha": alpha })))
}

fn richardson(d: impl Fn(f64) -> f64, h: f64) -> f64 {
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

const MOMENT_STEP: f64 = 1e-4;

/// Variance of the log-gamma driving variable, `int_0^inf x^2 e^{-alpha x} h_alpha(x) dx`.
pub fn loggamma_bddf_variance(alpha: f64, quad: &QuadratureConfig) -> Result<f64> {
    LogGammaParams::new(alpha, 1.0)?;
    let g = |x: f64| if x == 0.0 { 1.0 } else { x * x * loggamma_levy_weight(alpha, x) };
    Ok(integrate_to_infinity(g, 0.0, tight(quad.max_segments))?.value)
}

/// Mean and variance of the log-gamma driving variable from finite differences of
/// `log psi` at 0, against the drift `-log lambda + Psi(alpha)` and the quadrature of
/// `int_0^inf x^2 e^{-alpha x} h_alpha(x) dx`.
pub fn check_loggamma_bddf_moments(params: LogGammaParams, quad: &QuadratureConfig) -> Result<IdentityReport> {
    params.validate()?;
    let model = DistributionModel::LogGamma(params);
    let f = |t: f64| log_bdcf_closed(&model, t);
    let fd_mean = richardson(|h| ((f(h) - f(-h)) / (2.0 * h)).im, MOMENT_STEP);
    let fd_var = richardson(|h| -((f(h) + f(-h)) / (h * h)).re, MOMENT_STEP);
    let drift = digamma(params.alpha)? - params.lambda.ln();
    let var_integral = loggamma_bddf_variance(params.alpha, quad)?;
    let res = (fd_mean - drift).abs().max((fd_var - var_integral).abs());
    Ok(IdentityReport::new(
        "loggamma_bddf_moments",
        ComplexValue::new(fd_mean, fd_var),
        ComplexValue::new(drift, var_integral),
        res,
        1e-5,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "step": MOMENT_STEP,
                "twice_trigamma": 2.0 * trigamma(params.alpha)? }),
    ))
}

/// `e^{-iCt} / (1 + it/alpha) prod_{n=1}^{N} e^{it/n} / (1 + it/(alpha+n))` against
/// `Gamma(alpha + it) / Gamma(alpha)`, the product completed by its first two tail cumulants.
pub fn check_gamma_product(alpha: f64, t: f64, n_terms: usize) -> Result<IdentityReport> {
    LogGammaParams::new(alpha, 1.0)?;
    if n_terms < 1000 {
        return Err(domain("check_gamma_product", format!("need n_terms >= 1000, got {n_terms}")));
    }
    let it = ComplexValue::new(0.0, t);
    let mut log_p = -it * EULER_GAMMA - (1.0 + it / alpha).ln();
    let mut harmonic_part = 0.0;
    for n in (1..=n_terms).rev() {
        let n = n as f64;
        log_p += it / n - (1.0 + it / (alpha + n)).ln();
        harmonic_part += 1.0 / (n * (n + alpha));
    }
    // sum_{n>N} [it/n - log(1 + it/(alpha+n))] = it (sum_{n>N} alpha/(n(n+alpha))) - (t^2/2) Psi'(alpha+N+1) + ...
    let first = digamma(alpha + 1.0)? + EULER_GAMMA - alpha * harmonic_part;
    let second = trigamma(alpha + n_terms as f64 + 1.0)?;
    log_p += it * first - 0.5 * t * t * second;
    let lhs = log_p.exp();
    let rhs = (log_gamma_complex(ComplexValue::new(alpha, t))? - log_gamma_complex(ComplexValue::new(alpha, 0.0))?).exp();
    Ok(IdentityReport::new(
        "gamma_product",
        lhs,
        rhs,
        (lhs - rhs).norm(),
        1e-6,
        json!({ "alpha": alpha, "t": t, "n_terms": n_terms }),
    ))
}

pub const KS_TOLERANCE: f64 = 0.012;

/// Two-sample KS distance between `c X + X_c` and a fresh sample of `X`.
pub fn check_selfdecomposition(
    model: &DistributionModel,
    c: f64,
    n: usize,
    stream: RngStream,
    cfg: SeriesConfig,
) -> Result<IdentityReport> {
    model.validate()?;
    let (x, z, fresh) = match *model {
        DistributionModel::Gamma(p) => (
            sample_gamma(p, n, stream.child(0))?.values,
            sample_gamma_innovation(p, c, n, stream.child(1))?.values,
            sample_gamma(p, n, stream.child(2))?.values,
        ),
        DistributionModel::LogGamma(p) => {
            let shift = -(1.0 - c) * p.lambda.ln();
            let z = sample_loggamma_innovation(p.alpha, c, n, cfg, stream.child(1))?.values;
            (
                sample_loggamma_series(p, n, cfg, stream.child(0))?.values,
                z.into_iter().map(|v| v + shift).collect(),
                sample_loggamma_series(p, n, cfg, stream.child(2))?.values,
            )
        }
        DistributionModel::BesselK(p) => (
            sample_besselk(p, n, stream.child(0))?.values,
            sample_besselk_innovation(p, c, n, stream.child(1))?.values,
            sample_besselk(p, n, stream.child(2))?.values,
        ),
        other => {
            return Err(domain("check_selfdecomposition", format!("no innovation sampler for {:?}", other.kind())))
        }
    };
    let mix: Vec<f64> = x.iter().zip(&z).map(|(a, b)| c * a + b).collect();
    let ks = ks_two_sample(&mix, &fresh);
    Ok(IdentityReport::new(
        "selfdecomposition",
        ks,
        0.0,
        ks,
        KS_TOLERANCE,
        json!({ "model": model, "c": c, "n": n, "seed": stream.seed, "stream_id": stream.stream_id }),
    ))
}

/// Gil-Pelaez inversion of the gamma BDCF against the Poisson mixture of gamma laws.
pub fn check_gamma_bddf_closed_form(
    params: GammaParams,
    a_grid: &[f64],
    quad: &QuadratureConfig,
) -> Result<IdentityReport> {
    let model = DistributionModel::Gamma(params);
    let (res, l, r, a) = worst(a_grid, |a| {
        let lhs = bddf(&model, a, quad)?.value;
        let rhs = gamma_bddf_closed(params.alpha, params.lambda, a)?;
        Ok((lhs, rhs, (lhs - rhs).abs()))
    })?;
    Ok(IdentityReport::new("gamma_bddf_closed_form", l, r, res, 1e-6, json!({ "model": model, "worst_a": a })))
}

/// Empirical `P(Y(1) = 0)` of the compound-Poisson sampler against `e^{-alpha}`, within
/// 3 binomial standard errors.
pub fn check_compound_poisson_atom(params: GammaParams, n: usize, stream: RngStream) -> Result<IdentityReport> {
    let b = sample_gamma_bdrv(params, n, stream)?;
    let p = (-params.alpha).exp();
    let hat = fraction_equal(&b.values, 0.0);
    let se = (p * (1.0 - p) / n as f64).sqrt();
    Ok(IdentityReport::new(
        "compound_poisson_atom",
        hat,
        p,
        (hat - p).abs(),
        3.0 * se,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "n": n, "seed": stream.seed,
                "stream_id": stream.stream_id }),
    ))
}

/// `sum_{k>=1} b^{k-1} / (k! (k-1)!)` against `I_1(2 sqrt b) / sqrt b` by quadrature.
pub fn check_bessel_series(b: f64) -> Result<IdentityReport> {
    let lhs = bessel_i1_kernel(b)?;
    let rhs = bessel_kernel_oracle(b)?;
    Ok(IdentityReport::new("bessel_series", lhs, rhs, rel(lhs, rhs), 1e-12, json!({ "b": b })))
}

/// `sum 1/(n(n+x)) = (Psi(x+1) + C) / x`, checked through the digamma it defines.
pub fn check_digamma_series(x: f64) -> Result<IdentityReport> {
    let lhs = digamma(x)?;
    let rhs = digamma_oracle(x);
    Ok(IdentityReport::new("digamma_series", lhs, rhs, rel(lhs, rhs), 1e-12, json!({ "x": x })))
}

/// `sum 1/(n+x)^2 = Psi'(x+1)`, checked through the trigamma it defines.
pub fn check_trigamma_series(x: f64) -> Result<IdentityReport> {
    let lhs = trigamma(x)?;
    let rhs = trigamma_oracle(x);
    Ok(IdentityReport::new("trigamma_series", lhs, rhs, rel(lhs, rhs), 1e-12, json!({ "x": x })))
}

/// Gil-Pelaez inversion of the Lévy BDCF against the erfc distribution function.
pub fn check_levy_bddf(params: LevyParams, a_grid: &[f64], quad: &QuadratureConfig) -> Result<IdentityReport> {
    let model = DistributionModel::Levy(params);
    let (res, l, r, a) = worst(a_grid, |a| {
        let lhs = bddf(&model, a, quad)?.value;
        let rhs = levy_bddf_closed(params.m, params.c, a);
        Ok((lhs, rhs, (lhs - rhs).abs()))
    })?;
    Ok(IdentityReport::new("levy_bddf_erfc", l, r, res, 1e-6, json!({ "model": model, "worst_a": a })))
}

/// Gil-Pelaez inversion of `e^{-|t|}` against `1/2 + arctan(a)/pi`.
pub fn check_stable1_bddf(a_grid: &[f64], quad: &QuadratureConfig) -> Result<IdentityReport> {
    let model = DistributionModel::SymStable1(SymStable1Params::default());
    let (res, l, r, a) = worst(a_grid, |a| {
        let lhs = bddf(&model, a, quad)?.value;
        let rhs = stable1_bddf_closed(a);
        Ok((lhs, rhs, (lhs - rhs).abs()))
    })?;
    Ok(IdentityReport::new("stable1_bddf_arctan", l, r, res, 1e-6, json!({ "worst_a": a })))
}

fn cf_report(
    id: &str,
    values: &[f64],
    t_grid: &[f64],
    target: impl Fn(f64) -> ComplexValue,
    extra: Value,
) -> Result<IdentityReport> {
    let (res, l, r, t) = worst(t_grid, |t| {
        let e = empirical_cf(values, t);
        let w = target(t);
        Ok((e, w, c_abs_max(e, w)))
    })?;
    let mut meta = json!({ "n": values.len(), "t_grid": t_grid, "worst_t": t });
    if let (Value::Object(m), Value::Object(x)) = (&mut meta, extra) {
        m.extend(x);
    }
    Ok(IdentityReport::new(id, l, r, res, 4.0 / (values.len() as f64).sqrt(), meta))
}

/// Empirical CF of `sqrt(2 G) Z` against `(1 + t^2/lambda^2)^{-alpha}`.
pub fn check_besselk_mixture_cf(
    params: BesselKParams,
    n: usize,
    t_grid: &[f64],
    stream: RngStream,
) -> Result<IdentityReport> {
    let b = sample_besselk(params, n, stream)?;
    let model = DistributionModel::BesselK(params);
    cf_report("besselk_mixture_cf", &b.values, t_grid, |t| log_cf(&model, t).exp(), json!({ "model": model }))
}

/// Closed-form Bessel-K BDCF against a central difference of `log phi`.
pub fn check_besselk_bdcf(params: BesselKParams, t_grid: &[f64]) -> Result<IdentityReport> {
    let model = DistributionModel::BesselK(params);
    let (res, l, r, t) = worst(t_grid, |t| {
        let lhs = log_bdcf_closed(&model, t);
        let rhs = log_bdcf_numeric(&model, t, default_fd_step(t))?;
        Ok((lhs, rhs, (lhs - rhs).norm()))
    })?;
    Ok(IdentityReport::new("besselk_bdcf", l, r, res, 1e-7, json!({ "model": model, "worst_t": t })))
}

/// `int_0^inf e^{-x} sin((ax)^2 - x) dx/x = (pi/2)(erfc(1/(|a| sqrt 2)) - 1/2)`.
pub fn check_erfc_sine_integral(a: f64, quad: &QuadratureConfig) -> Result<IdentityReport> {
    let (lhs, rhs) = erfc_sine_sides(a, quad)?;
    Ok(IdentityReport::new("erfc_sine_integral", lhs, rhs, (lhs - rhs).abs(), 1e-6, json!({ "a": a })))
}

/// Empirical CF of the Bessel-K innovation sampler against `[c^2 + (1-c^2)/(1+t^2/lambda^2)]^alpha`.
pub fn check_besselk_innovation_cf(
    params: BesselKParams,
    c: f64,
    n: usize,
    t_grid: &[f64],
    stream: RngStream,
) -> Result<IdentityReport> {
    let b = sample_besselk_innovation(params, c, n, stream)?;
    let model = DistributionModel::BesselK(params);
    let target = |t: f64| {
        let s = t / params.lambda;
        ComplexValue::new((c * c + (1.0 - c * c) / (1.0 + s * s)).powf(params.alpha), 0.0)
    };
    // the product form agrees with phi(t) / phi(ct)
    for &t in t_grid {
        let ratio = innovation_log_cf(&model, c, t)?.exp();
        if c_abs_max(ratio, target(t)) > 1e-12 {
            return Err(domain("check_besselk_innovation_cf", format!("target CF mismatch at t = {t}")));
        }
    }
    cf_report("besselk_innovation_cf", &b.values, t_grid, target, json!({ "model": model, "c": c }))
}

/// Empirical `P(X_c = 0)` of the Bessel-K innovation against `c^{2 alpha}`.
pub fn check_besselk_innovation_atom(
    params: BesselKParams,
    c: f64,
    n: usize,
    stream: RngStream,
) -> Result<IdentityReport> {
    let b = sample_besselk_innovation(params, c, n, stream)?;
    let p = c.powf(2.0 * params.alpha);
    let hat = fraction_equal(&b.values, 0.0);
    let se = (p * (1.0 - p) / n as f64).sqrt();
    Ok(IdentityReport::new(
        "besselk_innovation_atom",
        hat,
        p,
        (hat - p).abs(),
        3.0 * se,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "c": c, "n": n, "seed": stream.seed,
                "stream_id": stream.stream_id }),
    ))
}

/// KS distance between the log-gamma series sampler and logs of direct gamma draws.
pub fn check_loggamma_series_law(
    params: LogGammaParams,
    n: usize,
    stream: RngStream,
    cfg: SeriesConfig,
) -> Result<IdentityReport> {
    let series = sample_loggamma_series(params, n, cfg, stream.child(0))?.values;
    let direct = sample_gamma(GammaParams::new(params.alpha, params.lambda)?, n, stream.child(1))?.values;
    let logs: Vec<f64> = direct.iter().map(|v| v.ln()).collect();
    let ks = ks_two_sample(&series, &logs);
    Ok(IdentityReport::new(
        "loggamma_series_law",
        ks,
        0.0,
        ks,
        KS_TOLERANCE,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "n": n, "truncation_n": cfg.truncation_n,
                "seed": stream.seed, "stream_id": stream.stream_id }),
    ))
}

/// Lévy–Khintchine form of the log-gamma BDCF against `it(Psi(alpha + it) - log lambda)`.
pub fn check_loggamma_levy_khinchine(
    params: LogGammaParams,
    t_grid: &[f64],
    quad: &QuadratureConfig,
) -> Result<IdentityReport> {
    let (res, l, r, t) = worst(t_grid, |t| {
        let lhs = log_bdcf_loggamma_levy(t, &params, quad)?;
        let it = ComplexValue::new(0.0, t);
        let rhs = it * (digamma_complex(ComplexValue::new(params.alpha, t))? - params.lambda.ln());
        Ok((lhs, rhs, (lhs - rhs).norm()))
    })?;
    Ok(IdentityReport::new(
        "loggamma_levy_khinchine",
        l,
        r,
        res,
        1e-6,
        json!({ "alpha": params.alpha, "lambda": params.lambda, "worst_t": t }),
    ))
}

/// `t (log phi)'(t)` by Richardson-extrapolated differences of `log phi`, for stable
/// laws: equal to `log phi` itself (symmetric 1-stable) or to the Lévy(m, c/4) log-CF.
pub fn check_stable_fixed_point(model: &DistributionModel, t_grid: &[f64]) -> Result<IdentityReport> {
    model.validate()?;
    let m = *model;
    let target = |t: f64| -> Result<ComplexValue> {
        match m {
            DistributionModel::SymStable1(_) => Ok(log_cf(&m, t)),
            DistributionModel::Levy(p) => Ok(levy_log_cf(p.m, p.c / 4.0, t)),
            other => Err(domain("check_stable_fixed_point", format!("{:?} is not stable", other.kind()))),
        }
    };
    let (res, l, r, t) = worst(t_grid, |t| {
        let h = 1e-3 * t.abs();
        let d = |h: f64| (log_cf(&m, t + h) - log_cf(&m, t - h)) / (2.0 * h);
        let lhs = (d(0.5 * h) * 4.0 - d(h)) / 3.0 * t;
        let rhs = target(t)?;
        let closed = log_bdcf_closed(&m, t);
        Ok((lhs, rhs, (lhs - rhs).norm().max((closed - rhs).norm())))
    })?;
    Ok(IdentityReport::new("stable_fixed_point", l, r, res, 1e-10, json!({ "model": m, "worst_t": t })))
}

// ----------------------------------------------------------------------------------------
// Suite

/// Each identity id with the statement it checks.
pub const IDENTITY_ANCHORS: &[(&str, &str)] = &[
    ("bdcf_roundtrip", "phi(t) = exp int_0^t log psi(u) du/u"),
    ("bessel_series", "sum_{k>=1} b^{k-1}/(k!(k-1)!) = I_1(2 sqrt b)/sqrt b"),
    ("besselk_bdcf", "psi_BK(t) = exp[2 alpha (1/(1+t^2/lambda^2) - 1)]"),
    ("besselk_innovation_atom", "P(BK_c = 0) = c^{2 alpha}"),
    ("besselk_innovation_cf", "E e^{it BK_c} = [c^2 + (1-c^2)/(1+t^2/lambda^2)]^alpha"),
    ("besselk_mixture_cf", "BK(alpha, lambda) = sqrt(2 gamma_{alpha, lambda^2}) Z"),
    ("compound_poisson_atom", "P(sum_{k<=N_alpha} E_k = 0) = e^{-alpha}"),
    ("digamma_series", "sum_{n>=1} 1/(n(n+alpha)) = (Psi(alpha+1) + C)/alpha"),
    ("erfc_sine_integral", "int_0^inf e^{-x} sin((ax)^2 - x) dx/x = (pi/2)(erfc(1/(|a| sqrt 2)) - 1/2)"),
    ("gamma_bddf_closed_form", "G(a) = e^{-alpha} + e^{-alpha} alpha lambda int_0^a I_1(2 sqrt(alpha lambda x))/sqrt(alpha lambda x) e^{-lambda x} dx"),
    ("gamma_product", "e^{-iCt}/(1+it/alpha) prod e^{it/n}/(1+it/(alpha+n)) = Gamma(alpha+it)/Gamma(alpha)"),
    ("levy_bddf_erfc", "BDDF of Levy(m, c) = erfc(sqrt(c/(8(x-m))))"),
    ("loggamma_bddf_moments", "Var G = int_0^inf x^2 e^{-alpha x} h_alpha(x) dx, mean = -log lambda + Psi(alpha)"),
    ("loggamma_levy_khinchine", "psi = exp[it(Psi(alpha) - log lambda) + int (e^{-itx} - 1 + itx) e^{-alpha x} h_alpha(x) dx]"),
    ("loggamma_moments", "E log gamma = -log lambda + Psi(alpha), Var log gamma = Psi'(alpha)"),
    ("loggamma_series_law", "log gamma_{alpha,lambda} = -C - log lambda - gamma_{1,alpha} - sum (gamma_{1,alpha+n} - 1/n)"),
    ("selfdecomposition", "X = cX + X_c in law"),
    ("stable1_bddf_arctan", "G(x) = 1/2 + arctan(x)/pi"),
    ("stable_fixed_point", "BDCF of a stable law is a stable CF of the same index"),
    ("trigamma_integral", "Psi'(alpha) = int_0^inf x e^{-alpha x}/(1 - e^{-x}) dx"),
    ("trigamma_series", "sum_{n>=1} 1/(n+alpha)^2 = Psi'(alpha+1)"),
];

/// One entry of the suite matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    BdcfRoundtrip { model: DistributionModel, t_grid: Vec<f64> },
    BesselSeries { b: f64 },
    BesselKBdcf { params: BesselKParams, t_grid: Vec<f64> },
    BesselKInnovationAtom { params: BesselKParams, c: f64, n: usize },
    BesselKInnovationCf { params: BesselKParams, c: f64, n: usize, t_grid: Vec<f64> },
    BesselKMixtureCf { params: BesselKParams, n: usize, t_grid: Vec<f64> },
    CompoundPoissonAtom { params: GammaParams, n: usize },
    DigammaSeries { x: f64 },
    ErfcSineIntegral { a: f64 },
    GammaBddf { params: GammaParams, a_grid: Vec<f64> },
    GammaProduct { alpha: f64, t: f64, n_terms: usize },
    LevyBddf { params: LevyParams, a_grid: Vec<f64> },
    LogGammaBddfMoments { params: LogGammaParams },
    LogGammaLevyKhinchine { params: LogGammaParams, t_grid: Vec<f64> },
    LogGammaMoments { params: LogGammaParams, n: usize },
    LogGammaSeriesLaw { params: LogGammaParams, n: usize },
    SelfDecomposition { model: DistributionModel, c: f64, n: usize },
    Stable1Bddf { a_grid: Vec<f64> },
    StableFixedPoint { model: DistributionModel, t_grid: Vec<f64> },
    TrigammaIntegral { alpha: f64 },
    TrigammaSeries { x: f64 },
}

impl Check {
    pub fn id(&self) -> &'static str {
        match self {
            Check::BdcfRoundtrip { .. } => "bdcf_roundtrip",
            Check::BesselSeries { .. } => "bessel_series",
            Check::BesselKBdcf { .. } => "besselk_bdcf",
            Check::BesselKInnovationAtom { .. } => "besselk_innovation_atom",
            Check::BesselKInnovationCf { .. } => "besselk_innovation_cf",
            Check::BesselKMixtureCf { .. } => "besselk_mixture_cf",
            Check::CompoundPoissonAtom { .. } => "compound_poisson_atom",
            Check::DigammaSeries { .. } => "digamma_series",
            Check::ErfcSineIntegral { .. } => "erfc_sine_integral",
            Check::GammaBddf { .. } => "gamma_bddf_closed_form",
            Check::GammaProduct { .. } => "gamma_product",
            Check::LevyBddf { .. } => "levy_bddf_erfc",
            Check::LogGammaBddfMoments { .. } => "loggamma_bddf_moments",
            Check::LogGammaLevyKhinchine { .. } => "loggamma_levy_khinchine",
            Check::LogGammaMoments { .. } => "loggamma_moments",
            Check::LogGammaSeriesLaw { .. } => "loggamma_series_law",
            Check::SelfDecomposition { .. } => "selfdecomposition",
            Check::Stable1Bddf { .. } => "stable1_bddf_arctan",
            Check::StableFixedPoint { .. } => "stable_fixed_point",
            Check::TrigammaIntegral { .. } => "trigamma_integral",
            Check::TrigammaSeries { .. } => "trigamma_series",
        }
    }

    /// Unscaled tolerance of the check, used for reports of checks that errored.
    fn nominal_tolerance(&self) -> f64 {
        match self {
            Check::BdcfRoundtrip { .. } | Check::BesselKBdcf { .. } => 1e-7,
            Check::BesselSeries { .. } | Check::DigammaSeries { .. } | Check::TrigammaSeries { .. } => 1e-12,
            Check::TrigammaIntegral { .. } => 1e-8,
            Check::LogGammaBddfMoments { .. } => 1e-5,
            Check::StableFixedPoint { .. } => 1e-10,
            Check::SelfDecomposition { .. } | Check::LogGammaSeriesLaw { .. } => KS_TOLERANCE,
            Check::LogGammaMoments { .. } => 1.0,
            _ => 1e-6,
        }
    }

    pub fn run(&self, quad: &QuadratureConfig, series: SeriesConfig, stream: RngStream) -> Result<IdentityReport> {
        match self {
            Check::BdcfRoundtrip { model, t_grid } => check_bdcf_roundtrip(model, t_grid, quad),
            Check::BesselSeries { b } => check_bessel_series(*b),
            Check::BesselKBdcf { params, t_grid } => check_besselk_bdcf(*params, t_grid),
            Check::BesselKInnovationAtom { params, c, n } => check_besselk_innovation_atom(*params, *c, *n, stream),
            Check::BesselKInnovationCf { params, c, n, t_grid } => {
                check_besselk_innovation_cf(*params, *c, *n, t_grid, stream)
            }
            Check::BesselKMixtureCf { params, n, t_grid } => check_besselk_mixture_cf(*params, *n, t_grid, stream),
            Check::CompoundPoissonAtom { params, n } => check_compound_poisson_atom(*params, *n, stream),
            Check::DigammaSeries { x } => check_digamma_series(*x),
            Check::ErfcSineIntegral { a } => check_erfc_sine_integral(*a, quad),
            Check::GammaBddf { params, a_grid } => check_gamma_bddf_closed_form(*params, a_grid, quad),
            Check::GammaProduct { alpha, t, n_terms } => check_gamma_product(*alpha, *t, *n_terms),
            Check::LevyBddf { params, a_grid } => check_levy_bddf(*params, a_grid, quad),
            Check::LogGammaBddfMoments { params } => check_loggamma_bddf_moments(*params, quad),
            Check::LogGammaLevyKhinchine { params, t_grid } => check_loggamma_levy_khinchine(*params, t_grid, quad),
            Check::LogGammaMoments { params, n } => check_loggamma_moments(*params, *n, stream),
            Check::LogGammaSeriesLaw { params, n } => check_loggamma_series_law(*params, *n, stream, series),
            Check::SelfDecomposition { model, c, n } => check_selfdecomposition(model, *c, *n, stream, series),
            Check::Stable1Bddf { a_grid } => check_stable1_bddf(a_grid, quad),
            Check::StableFixedPoint { model, t_grid } => check_stable_fixed_point(model, t_grid),
            Check::TrigammaIntegral { alpha } => check_trigamma_integral(*alpha, quad),
            Check::TrigammaSeries { x } => check_trigamma_series(*x),
        }
    }
}

/// Parameters of a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub matrix: Vec<Check>,
    /// Multiplies every tolerance.
    pub tolerance_scale: f64,
    /// Run only checks whose id equals or starts with one of these; empty runs all.
    pub only: Vec<String>,
    pub seed: u64,
    pub quad: QuadratureConfig,
    pub series: SeriesConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            matrix: default_matrix(),
            tolerance_scale: 1.0,
            only: Vec::new(),
            seed: 20_240_611,
            quad: QuadratureConfig::default(),
            series: SeriesConfig::default(),
        }
    }
}

impl SuiteConfig {
    pub fn selects(&self, id: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|p| id.starts_with(p.as_str()))
    }
}

const T_GRID: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
const CF_GRID: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

pub fn gamma_bddf_grid() -> Vec<f64> {
    (0..20).map(|k| 0.05 + 0.2 * k as f64).collect()
}

pub fn levy_bddf_grid() -> Vec<f64> {
    (0..20).map(|k| 0.1 * 1.5f64.powi(k)).collect()
}

pub fn stable1_bddf_grid() -> Vec<f64> {
    (0..20).map(|k| -4.75 + 0.5 * k as f64).collect()
}

/// The default parameter matrix.
pub fn default_matrix() -> Vec<Check> {
    let g = |a, l| GammaParams::new(a, l).unwrap();
    let lg = |a, l| LogGammaParams::new(a, l).unwrap();
    let bk = |a, l| BesselKParams::new(a, l).unwrap();
    let levy = LevyParams::new(0.0, 2.0).unwrap();
    let e = std::f64::consts::E;
    let mut m = vec![
        Check::BdcfRoundtrip { model: DistributionModel::Gamma(g(2.0, 1.0)), t_grid: T_GRID.to_vec() },
        Check::BdcfRoundtrip { model: DistributionModel::LogGamma(lg(1.5, 2.0)), t_grid: T_GRID.to_vec() },
        Check::BdcfRoundtrip { model: DistributionModel::Levy(LevyParams::new(0.5, 2.0).unwrap()), t_grid: T_GRID.to_vec() },
        Check::BdcfRoundtrip { model: DistributionModel::SymStable1(SymStable1Params::default()), t_grid: T_GRID.to_vec() },
        Check::BdcfRoundtrip { model: DistributionModel::BesselK(bk(1.5, 2.0)), t_grid: T_GRID.to_vec() },
        Check::StableFixedPoint { model: DistributionModel::SymStable1(SymStable1Params::default()), t_grid: T_GRID.to_vec() },
        Check::StableFixedPoint { model: DistributionModel::Levy(levy), t_grid: T_GRID.to_vec() },
        Check::LevyBddf { params: levy, a_grid: levy_bddf_grid() },
        Check::Stable1Bddf { a_grid: stable1_bddf_grid() },
        Check::BesselKMixtureCf { params: bk(1.0, 1.0), n: 1_000_000, t_grid: CF_GRID.to_vec() },
        Check::BesselKBdcf { params: bk(1.5, 2.0), t_grid: CF_GRID.to_vec() },
        Check::BesselKInnovationCf { params: bk(1.0, 1.0), c: 0.5, n: 1_000_000, t_grid: CF_GRID.to_vec() },
        Check::BesselKInnovationAtom { params: bk(1.0, 1.0), c: 0.5, n: 1_000_000 },
        Check::BesselKInnovationAtom { params: bk(2.0, 1.0), c: 0.7, n: 1_000_000 },
        Check::LogGammaSeriesLaw { params: lg(2.0, 1.5), n: 100_000 },
        Check::SelfDecomposition { model: DistributionModel::Gamma(g(1.0, 1.0)), c: 0.5, n: 100_000 },
        Check::SelfDecomposition { model: DistributionModel::Gamma(g(1.0, 1.0)), c: 0.999, n: 100_000 },
        Check::SelfDecomposition { model: DistributionModel::LogGamma(lg(1.0, 1.0)), c: 0.3, n: 100_000 },
        Check::SelfDecomposition { model: DistributionModel::LogGamma(lg(1.0, 1.0)), c: 0.999, n: 100_000 },
        Check::SelfDecomposition { model: DistributionModel::BesselK(bk(1.0, 1.0)), c: 0.7, n: 100_000 },
    ];
    for (a, l) in [(0.5, 1.0), (1.0, 1.0), (2.0, 3.0)] {
        m.push(Check::GammaBddf { params: g(a, l), a_grid: gamma_bddf_grid() });
    }
    for a in [0.5, 1.0, 2.0] {
        m.push(Check::CompoundPoissonAtom { params: g(a, 1.0), n: 1_000_000 });
        m.push(Check::TrigammaIntegral { alpha: a });
        m.push(Check::LogGammaLevyKhinchine { params: lg(a, 1.0), t_grid: vec![0.5, 1.0, 2.0] });
    }
    for b in [0.5, 30.0, 224.0, 226.0, 1e4] {
        m.push(Check::BesselSeries { b });
    }
    for x in [0.1, 1.0, 2.5, 30.0] {
        m.push(Check::DigammaSeries { x });
        m.push(Check::TrigammaSeries { x });
    }
    for (alpha, t) in [(1.0, 0.0), (1.0, 1.0), (2.5, -3.0)] {
        m.push(Check::GammaProduct { alpha, t, n_terms: 1000 });
    }
    for (a, l) in [(1.0, 1.0), (2.0, 1.0), (1.0, e)] {
        m.push(Check::LogGammaMoments { params: lg(a, l), n: 100_000 });
    }
    for (a, l) in [(1.0, 1.0), (2.0, 1.0), (1.5, e)] {
        m.push(Check::LogGammaBddfMoments { params: lg(a, l) });
    }
    for a in [0.5, 1.0, 2.0, -1.0] {
        m.push(Check::ErfcSineIntegral { a });
    }
    m
}

/// Runs the selected checks of the matrix (in parallel) and returns their reports
/// ordered by identity id, matrix order within an id. A check that errors is reported
/// as failed with infinite residual.
pub fn run_all(cfg: &SuiteConfig) -> Vec<IdentityReport> {
    let base = RngStream::new(cfg.seed, 0);
    let selected: Vec<(usize, &Check)> =
        cfg.matrix.iter().enumerate().filter(|(_, c)| cfg.selects(c.id())).collect();
    let mut reports: Vec<IdentityReport> = selected
        .par_iter()
        .map(|&(i, check)| {
            check
                .run(&cfg.quad, cfg.series, base.child(i as u64))
                .unwrap_or_else(|e| IdentityReport::failure(check.id(), check.nominal_tolerance(), &e))
                .scale_tolerance(cfg.tolerance_scale)
        })
        .collect();
    reports.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn quad() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn anchor_table_covers_every_check_once() {
        let ids: Vec<&str> = IDENTITY_ANCHORS.iter().map(|(id, _)| *id).collect();
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len());
        let used: BTreeSet<&str> = default_matrix().iter().map(Check::id).collect();
        assert_eq!(used, unique);
    }

    #[test]
    fn oracles_agree_with_known_values() {
        assert!((digamma_oracle(1.0) + EULER_GAMMA).abs() < 1e-15);
        assert!((trigamma_oracle(1.0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((erfc_oracle(1.0).unwrap() - 0.157_299_207_050_285_13).abs() < 1e-15);
        assert!((erfc_oracle(-1.0).unwrap() - 1.842_700_792_949_714_9).abs() < 1e-14);
        // I_1(2) / 1
        assert!((bessel_kernel_oracle(1.0).unwrap() - 1.590_636_854_637_329).abs() < 1e-14);
    }

    #[test]
    fn roundtrip_examples() {
        let g = DistributionModel::Gamma(GammaParams::new(2.0, 1.0).unwrap());
        assert!(check_bdcf_roundtrip(&g, &T_GRID, &quad()).unwrap().passed);
        let s = DistributionModel::SymStable1(SymStable1Params::default());
        assert!(check_bdcf_roundtrip(&s, &[1.0, 3.0], &quad()).unwrap().residual < 1e-10);
        // log psi = 0 integrates to log phi = 0
        assert_eq!(cf_from_bdcf(|_| ComplexValue::new(0.0, 0.0), 2.0, &quad()).unwrap(), ComplexValue::new(0.0, 0.0));
    }

    #[test]
    fn trigamma_integral_examples() {
        let r = check_trigamma_integral(1.0, &quad()).unwrap();
        assert!(r.passed && (r.rhs == Side::Real(PI * PI / 6.0)));
        let r = check_trigamma_integral(2.0, &quad()).unwrap();
        assert!(r.passed);
        let Side::Real(v) = r.rhs else { panic!() };
        assert!((v - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        let Side::Real(big) = check_trigamma_integral(50.0, &quad()).unwrap().lhs else { panic!() };
        assert!(rel(big, 1.0 / 50.0 + 0.5 / 2500.0) < 0.01);
    }

    #[test]
    fn bddf_moment_checks_pass() {
        for a in [1.0, 2.0] {
            let r = check_loggamma_bddf_moments(LogGammaParams::new(a, 1.0).unwrap(), &quad()).unwrap();
            assert!(r.passed, "{r:?}");
            // variance of Y(1) is twice that of log gamma
            let tw = r.metadata["twice_trigamma"].as_f64().unwrap();
            let Side::Complex { im, .. } = r.rhs else { panic!() };
            assert!((im - tw).abs() < 1e-8);
        }
    }

    #[test]
    fn levy_weight_is_positive() {
        for a in [0.5, 1.0, 2.0] {
            for k in 1..200 {
                assert!(loggamma_levy_weight(a, k as f64 * 0.1) > 0.0);
            }
        }
    }

    #[test]
    fn gamma_product_examples() {
        let r = check_gamma_product(1.0, 0.0, 1000).unwrap();
        assert!(r.residual < 1e-15);
        let r = check_gamma_product(1.0, 1.0, 1000).unwrap();
        assert!(r.passed, "{r:?}");
        let Side::Complex { re, im } = r.rhs else { panic!() };
        // Gamma(1 + i)
        assert!((re - 0.498_015_668_118_356).abs() < 1e-12);
        assert!((im + 0.154_949_828_301_810_7).abs() < 1e-12);
        let m = check_gamma_product(1.0, -1.0, 1000).unwrap();
        assert_eq!(m.rhs, Side::Complex { re, im: -im });
        assert!(check_gamma_product(1.0, 1.0, 10).is_err());
    }

    #[test]
    fn loggamma_moment_examples() {
        let s = RngStream::new(5, 0);
        let p = LogGammaParams::new(2.0, 1.0).unwrap();
        let r = check_loggamma_moments(p, 100_000, s).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.rhs, Side::Real(1.0 - EULER_GAMMA + (digamma(2.0).unwrap() - (1.0 - EULER_GAMMA))));
        let e = check_loggamma_moments(LogGammaParams::new(2.0, std::f64::consts::E).unwrap(), 100_000, s).unwrap();
        let (Side::Real(a), Side::Real(b)) = (r.rhs, e.rhs) else { panic!() };
        assert!((a - b - 1.0).abs() < 1e-15);
        assert!(check_loggamma_moments(p, 100, s).is_err());
    }

    #[test]
    fn selfdecomposition_rejects_models_without_innovation_sampler() {
        let m = DistributionModel::SymStable1(SymStable1Params::default());
        assert!(check_selfdecomposition(&m, 0.5, 10, RngStream::new(1, 0), SeriesConfig::default()).is_err());
    }

    #[test]
    fn empty_matrix_and_filters() {
        let cfg = SuiteConfig { matrix: vec![], ..Default::default() };
        assert!(run_all(&cfg).is_empty());
        let cfg = SuiteConfig { only: vec!["erfc_sine".into()], ..Default::default() };
        let r = run_all(&cfg);
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|x| x.passed && x.identity_id == "erfc_sine_integral"));
    }

    #[test]
    fn failing_check_is_reported_not_raised() {
        let cfg = SuiteConfig { matrix: vec![Check::GammaProduct { alpha: 1.0, t: 1.0, n_terms: 5 }], ..Default::default() };
        let r = run_all(&cfg);
        assert_eq!(r.len(), 1);
        assert!(!r[0].passed && r[0].residual.is_infinite());
        assert!(r[0].to_json_line().contains("\"error\""));
    }

    #[test]
    fn report_json_shape() {
        let r = check_digamma_series(1.0).unwrap();
        let v: Value = serde_json::from_str(&r.to_json_line()).unwrap();
        for key in ["identity_id", "residual", "tolerance", "passed", "params"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
