//! Exact-law random generators.
//!
//! Every sampler fills its batch chunk by chunk (see [`crate::rng`]); the result depends
//! only on the stream, the parameters and the config.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma, Geometric, Poisson, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charfn::{check_innovation_factor, BesselKParams, GammaParams, LogGammaParams};
use crate::error::{Error, Result};
use crate::rng::{RngStream, CHUNK_LEN};
use crate::specfun::{digamma, EULER_GAMMA};

/// Truncation of the log-gamma random series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SeriesConfig {
    /// Last series index kept.
    pub truncation_n: usize,
    /// Add the exact mean of the dropped terms.
    pub tail_mean_correction: bool,
    /// Leading terms drawn one by one in [`sample_loggamma_series`]; the rest of the
    /// exponentials up to `truncation_n` are drawn jointly as one `-log Beta` variate.
    pub direct_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self { truncation_n: 10_000, tail_mean_correction: true, direct_terms: 64 }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.truncation_n == 0 {
            return Err(Error::InvalidParameter {
                name: "truncation_n",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(())
    }

    /// Draw every exponential individually.
    pub fn direct(truncation_n: usize) -> Self {
        Self { truncation_n, tail_mean_correction: true, direct_terms: truncation_n }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub values: Vec<f64>,
    pub n: usize,
    pub seed: u64,
    pub stream_id: u64,
    pub generator_tag: String,
    pub metadata: BTreeMap<String, f64>,
}

fn generate<F>(n: usize, stream: RngStream, draw: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let chunks: Vec<Vec<f64>> = (0..n.div_ceil(CHUNK_LEN))
        .into_par_iter()
        .map(|j| {
            let mut rng = stream.chunk_rng(j as u64);
            let len = CHUNK_LEN.min(n - j * CHUNK_LEN);
            (0..len).map(|_| draw(&mut rng)).collect()
        })
        .collect();
    chunks.concat()
}

fn batch(values: Vec<f64>, stream: RngStream, tag: &str, metadata: &[(&str, f64)]) -> SampleBatch {
    SampleBatch {
        n: values.len(),
        values,
        seed: stream.seed,
        stream_id: stream.stream_id,
        generator_tag: tag.to_string(),
        metadata: metadata.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

fn exp1(rng: &mut ChaCha8Rng) -> f64 {
    Exp1.sample(rng)
}

fn poisson(mean: f64) -> Poisson<f64> {
    Poisson::new(mean).expect("poisson mean is positive and finite")
}

fn gamma(shape: f64, scale: f64) -> Gamma<f64> {
    Gamma::new(shape, scale).expect("gamma parameters are validated")
}

// Sum over n > N of alpha / (n (alpha + n)).
fn series_tail_mean(alpha: f64, n: usize) -> Result<f64> {
    let n = n as f64;
    Ok(digamma(alpha + n + 1.0)? - digamma(n + 1.0)?)
}

fn harmonic(n: usize) -> f64 {
    (1..=n).rev().map(|k| 1.0 / k as f64).sum()
}

/// Compound-Poisson driving variable of the gamma law: a Poisson(alpha) number of
/// Exponential(lambda) jumps, exactly zero when there are none.
pub fn sample_gamma_bdrv(params: GammaParams, n: usize, stream: RngStream) -> Result<SampleBatch> {
    params.validate()?;
    let count = poisson(params.alpha);
    let values = generate(n, stream, |rng| {
        let k = count.sample(rng) as u64;
        (0..k).map(|_| exp1(rng)).sum::<f64>() / params.lambda
    });
    Ok(batch(values, stream, "gamma_bdrv", &[("alpha", params.alpha), ("lambda", params.lambda)]))
}

/// Direct Gamma(alpha, rate lambda) draws.
pub fn sample_gamma(params: GammaParams, n: usize, stream: RngStream) -> Result<SampleBatch> {
    params.validate()?;
    let g = gamma(params.alpha, 1.0 / params.lambda);
    let values = generate(n, stream, |rng| g.sample(rng));
    Ok(batch(values, stream, "gamma", &[("alpha", params.alpha), ("lambda", params.lambda)]))
}

/// Log-gamma law through the random series
/// `-C - log lambda - sum_{k=0}^{N} (E_k / (alpha + k)) + H_N` plus the tail mean.
pub fn sample_loggamma_series(
    params: LogGammaParams,
    n: usize,
    cfg: SeriesConfig,
    stream: RngStream,
) -> Result<SampleBatch> {
    params.validate()?;
    cfg.validate()?;
    let alpha = params.alpha;
    let big_n = cfg.truncation_n;
    let direct = cfg.direct_terms.min(big_n);
    let tail = if cfg.tail_mean_correction { series_tail_mean(alpha, big_n)? } else { 0.0 };
    let offset = -EULER_GAMMA - params.lambda.ln() + harmonic(big_n) + tail;
    // Exponentials with rates alpha + direct + 1, ..., alpha + N sum to -log Beta(a, b).
    let block = (direct < big_n).then(|| {
        (gamma(alpha + direct as f64 + 1.0, 1.0), gamma((big_n - direct) as f64, 1.0))
    });
    let values = generate(n, stream, |rng| {
        let mut s = 0.0;
        for k in (0..=direct).rev() {
            s += exp1(rng) / (alpha + k as f64);
        }
        if let Some((ga, gb)) = &block {
            let a = ga.sample(rng);
            let b = gb.sample(rng);
            s += (b / a).ln_1p();
        }
        offset - s
    });
    Ok(batch(
        values,
        stream,
        "loggamma_series",
        &[
            ("alpha", alpha),
            ("lambda", params.lambda),
            ("truncation_n", big_n as f64),
            ("direct_terms", direct as f64),
            ("tail_mean", tail),
        ],
    ))
}

/// Innovation `X_c` of the standard (lambda = 1) log-gamma law: the series of
/// [`sample_loggamma_series`] with each exponential kept with probability `1 - c`.
pub fn sample_loggamma_innovation(
    alpha: f64,
    c: f64,
    n: usize,
    cfg: SeriesConfig,
    stream: RngStream,
) -> Result<SampleBatch> {
    LogGammaParams::new(alpha, 1.0)?;
    check_innovation_factor(c)?;
    cfg.validate()?;
    let p = 1.0 - c;
    let big_n = cfg.truncation_n as u64;
    let tail = if cfg.tail_mean_correction { p * series_tail_mean(alpha, cfg.truncation_n)? } else { 0.0 };
    let offset = p * (-EULER_GAMMA + harmonic(cfg.truncation_n)) + tail;
    // Gaps between kept indices are geometric.
    let skip = Geometric::new(p).expect("1 - c lies in (0, 1)");
    let values = generate(n, stream, |rng| {
        let mut s = 0.0;
        let mut k = skip.sample(rng);
        while k <= big_n {
            s += exp1(rng) / (alpha + k as f64);
            k += 1 + skip.sample(rng);
        }
        offset - s
    });
    Ok(batch(
        values,
        stream,
        "loggamma_innovation",
        &[("alpha", alpha), ("c", c), ("truncation_n", cfg.truncation_n as f64), ("tail_mean", tail)],
    ))
}

/// Bessel-K law as the normal variance mixture `sqrt(2 G) Z`, `G ~ Gamma(alpha, rate lambda^2)`.
pub fn sample_besselk(params: BesselKParams, n: usize, stream: RngStream) -> Result<SampleBatch> {
    params.validate()?;
    let g = gamma(params.alpha, 1.0 / (params.lambda * params.lambda));
    let values = generate(n, stream, |rng| {
        let v = g.sample(rng);
        let z: f64 = StandardNormal.sample(rng);
        (2.0 * v).sqrt() * z
    });
    Ok(batch(values, stream, "besselk", &[("alpha", params.alpha), ("lambda", params.lambda)]))
}

fn compound_innovation(
    n: usize,
    stream: RngStream,
    rate: f64,
    c: f64,
    lambda: f64,
    two_sided: bool,
) -> Vec<f64> {
    let count = poisson(rate);
    let log_c = c.ln();
    generate(n, stream, |rng| {
        let k = count.sample(rng) as u64;
        let mut s = 0.0;
        for _ in 0..k {
            let eta: f64 = rng.random();
            let mut jump = (eta * log_c).exp() * exp1(rng) / lambda;
            if two_sided && rng.random::<bool>() {
                jump = -jump;
            }
            s += jump;
        }
        s
    })
}

/// Innovation of the Bessel-K law: Poisson(-alpha log c^2) jumps `c^eta L`, with
/// `eta` uniform on (0, 1) and `L` Laplace with rate lambda.
pub fn sample_besselk_innovation(
    params: BesselKParams,
    c: f64,
    n: usize,
    stream: RngStream,
) -> Result<SampleBatch> {
    params.validate()?;
    check_innovation_factor(c)?;
    let rate = -params.alpha * (c * c).ln();
    let values = compound_innovation(n, stream, rate, c, params.lambda, true);
    Ok(batch(
        values,
        stream,
        "besselk_innovation",
        &[("alpha", params.alpha), ("lambda", params.lambda), ("c", c), ("poisson_mean", rate)],
    ))
}

/// Innovation of the gamma law: Poisson(-alpha log c) jumps `c^eta E`, `E` Exponential(lambda).
pub fn sample_gamma_innovation(
    params: GammaParams,
    c: f64,
    n: usize,
    stream: RngStream,
) -> Result<SampleBatch> {
    params.validate()?;
    check_innovation_factor(c)?;
    let rate = -params.alpha * c.ln();
    let values = compound_innovation(n, stream, rate, c, params.lambda, false);
    Ok(batch(
        values,
        stream,
        "gamma_innovation",
        &[("alpha", params.alpha), ("lambda", params.lambda), ("c", c), ("poisson_mean", rate)],
    ))
}
