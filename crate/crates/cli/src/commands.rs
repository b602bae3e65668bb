use std::fmt;
use std::process::ExitCode;

use serde_json::json;

use selfdecomp::charfn::log_bdcf_closed;
use selfdecomp::inversion::bddf_grid;
use selfdecomp::samplers::{
    sample_besselk, sample_besselk_innovation, sample_gamma_bdrv, sample_gamma_innovation,
    sample_loggamma_innovation, sample_loggamma_series,
};
use selfdecomp::specfun::{digamma, trigamma};
use selfdecomp::validation::{loggamma_bddf_variance, run_all};
use selfdecomp::{
    BesselKParams, DistributionModel, Error, GammaParams, LevyParams, LogGammaParams, QuadratureConfig, RngStream,
    SampleBatch, SeriesConfig, SuiteConfig, SymStable1Params,
};

use crate::args::{
    BddfArgs, CfArgs, Format, Generator, Kind, ModelArgs, MomentsArgs, QuadArgs, SampleArgs, VerifyArgs, Which,
};
use crate::output::{emit, num, Csv};

/// Exit status 2 for usage and model errors, 3 for numeric and I/O failures.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } | Error::InvalidParameter { .. } | Error::Descriptor(_) => Self::usage(e.to_string()),
            _ => Self::numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::numeric(format!("i/o: {e}"))
    }
}

type CliResult = Result<ExitCode, CliError>;

/// Parses `Kind(p1, p2)`, e.g. `Gamma(1,1)` or `SymStable1`.
fn parse_compact(text: &str) -> Option<Result<DistributionModel, CliError>> {
    let text = text.trim();
    let (name, args) = match text.find('(') {
        Some(i) => (&text[..i], text[i + 1..].strip_suffix(')')?),
        None => (text, ""),
    };
    let values: Result<Vec<f64>, _> =
        args.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse::<f64>).collect();
    let v = match values {
        Ok(v) => v,
        Err(_) => return Some(Err(CliError::usage(format!("bad parameters in `{text}`")))),
    };
    let pair = |v: &[f64]| match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(CliError::usage(format!("`{name}` takes two parameters"))),
    };
    let model = match name.to_ascii_lowercase().as_str() {
        "gamma" => pair(&v).and_then(|(a, b)| Ok(DistributionModel::Gamma(GammaParams::new(a, b)?))),
        "loggamma" => pair(&v).and_then(|(a, b)| Ok(DistributionModel::LogGamma(LogGammaParams::new(a, b)?))),
        "levy" => pair(&v).and_then(|(a, b)| Ok(DistributionModel::Levy(LevyParams::new(a, b)?))),
        "besselk" => pair(&v).and_then(|(a, b)| Ok(DistributionModel::BesselK(BesselKParams::new(a, b)?))),
        "symstable1" => match v.as_slice() {
            [] => Ok(DistributionModel::SymStable1(SymStable1Params::default())),
            [s] => SymStable1Params::new(*s).map(DistributionModel::SymStable1).map_err(Into::into),
            _ => Err(CliError::usage("`SymStable1` takes at most one parameter")),
        },
        _ => return None,
    };
    Some(model)
}

pub fn resolve_model(a: &ModelArgs) -> Result<DistributionModel, CliError> {
    if let Some(text) = &a.model {
        if text.trim_start().starts_with('{') {
            return Ok(DistributionModel::from_json(text)?);
        }
        return parse_compact(text).unwrap_or_else(|| Err(CliError::usage(format!("unrecognised model `{text}`"))));
    }
    let kind = a.kind.ok_or_else(|| CliError::usage("a model is required: --model or --kind"))?;
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| CliError::usage(format!("--{flag} is required for {kind:?}")));
    let lambda = a.lambda.unwrap_or(1.0);
    let model = match kind {
        Kind::Gamma => DistributionModel::Gamma(GammaParams::new(need(a.alpha, "alpha")?, lambda)?),
        Kind::Loggamma => DistributionModel::LogGamma(LogGammaParams::new(need(a.alpha, "alpha")?, lambda)?),
        Kind::Levy => DistributionModel::Levy(LevyParams::new(a.m.unwrap_or(0.0), need(a.c, "c")?)?),
        Kind::Symstable1 => DistributionModel::SymStable1(SymStable1Params::new(a.scale.unwrap_or(1.0))?),
        Kind::Besselk => DistributionModel::BesselK(BesselKParams::new(need(a.alpha, "alpha")?, lambda)?),
    };
    Ok(model)
}

/// Points from a list plus an optional `start:end:count` range.
pub fn grid(list: &[f64], range: Option<&str>, flag: &str) -> Result<Vec<f64>, CliError> {
    let mut points = list.to_vec();
    if let Some(r) = range {
        let parts: Vec<&str> = r.split(':').collect();
        let bad = || CliError::usage(format!("--{flag}-range must be start:end:count, got `{r}`"));
        let [s, e, k] = parts.as_slice() else { return Err(bad()) };
        let (s, e): (f64, f64) = (s.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?);
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        let step = if k > 1 { (e - s) / (k - 1) as f64 } else { 0.0 };
        points.extend((0..k).map(|j| if j + 1 == k && k > 1 { e } else { s + step * j as f64 }));
    }
    if points.is_empty() {
        return Err(CliError::usage(format!("no grid points: give --{flag} or --{flag}-range")));
    }
    if let Some(x) = points.iter().find(|x| !x.is_finite()) {
        return Err(CliError::usage(format!("grid point {x} is not finite")));
    }
    Ok(points)
}

fn to_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json serializes");
    s.push('\n');
    s
}

pub fn cf(args: &CfArgs) -> CliResult {
    let model = resolve_model(&args.model)?;
    let ts = grid(&args.t, args.t_range.as_deref(), "t")?;
    let rows: Vec<(f64, f64, f64)> = ts
        .iter()
        .map(|&t| {
            let z = match args.which {
                Which::Cf => model.log_cf(t),
                Which::Bdcf => log_bdcf_closed(&model, t),
            }
            .exp();
            (t, z.re, z.im)
        })
        .collect();
    let which = match args.which {
        Which::Cf => "cf",
        Which::Bdcf => "bdcf",
    };
    let text = match args.out.format {
        Format::Csv => {
            let mut c = Csv::default();
            c.comment(format!("model: {}", model.to_json()));
            c.comment(format!("which: {which}"));
            c.comment("columns: t,re,im");
            for (t, re, im) in &rows {
                c.row([num(*t), num(*re), num(*im)]);
            }
            c.into_string()
        }
        Format::Json => to_json(&json!({
            "model": model,
            "which": which,
            "rows": rows.iter().map(|(t, re, im)| json!({ "t": t, "re": re, "im": im })).collect::<Vec<_>>(),
        })),
    };
    emit(&text, args.out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn quad_config(q: &QuadArgs) -> Result<QuadratureConfig, CliError> {
    let d = QuadratureConfig::default();
    let cfg = QuadratureConfig {
        abs_tol: q.abs_tol.unwrap_or(d.abs_tol),
        rel_tol: q.rel_tol.unwrap_or(d.rel_tol),
        t_min: q.t_min.unwrap_or(d.t_min),
        max_segments: q.max_segments.unwrap_or(d.max_segments),
        accel_terms: q.accel_terms.unwrap_or(d.accel_terms),
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn bddf(args: &BddfArgs) -> CliResult {
    let model = resolve_model(&args.model)?;
    let points = grid(&args.a, args.a_range.as_deref(), "a")?;
    let quad = quad_config(&args.quad)?;
    let results = bddf_grid(&model, &points, &quad);
    let failures = results.iter().filter(|r| r.is_err()).count();
    let text = match args.out.format {
        Format::Csv => {
            let mut c = Csv::default();
            c.comment(format!("model: {}", model.to_json()));
            c.comment(format!("quadrature: {}", serde_json::to_string(&quad).expect("json")));
            c.comment("columns: a,value,est_error,segments_used");
            for (a, r) in points.iter().zip(&results) {
                match r {
                    Ok(p) => c.row([num(p.a), num(p.value), num(p.est_error), p.segments_used.to_string()]),
                    Err(e) => {
                        c.comment(format!("failed at a = {}: {e}", num(*a)));
                        c.row([num(*a), "NaN".into(), "NaN".into(), "0".into()]);
                    }
                }
            }
            c.into_string()
        }
        Format::Json => {
            let rows: Vec<_> = points
                .iter()
                .zip(&results)
                .map(|(a, r)| match r {
                    Ok(p) => json!({ "a": p.a, "value": p.value, "est_error": p.est_error,
                                     "segments_used": p.segments_used }),
                    Err(e) => json!({ "a": a, "error": e.to_string() }),
                })
                .collect();
            to_json(&json!({ "model": model, "quadrature": quad, "rows": rows }))
        }
    };
    emit(&text, args.out.output.as_deref())?;
    if failures > 0 {
        eprintln!("selfdecomp: {failures} of {} points failed", points.len());
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn innovation_factor(c: Option<f64>) -> Result<f64, CliError> {
    c.ok_or_else(|| CliError::usage("--c is required for innovation generators"))
}

pub fn sample(args: &SampleArgs) -> CliResult {
    if args.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let stream = RngStream::new(args.seed, args.stream_id);
    let series = SeriesConfig {
        truncation_n: args.truncation_n,
        tail_mean_correction: !args.no_tail_correction,
        direct_terms: args.direct_terms,
    };
    let (a, l, n) = (args.alpha, args.lambda, args.n);
    let mut uses_series = false;
    let batch: SampleBatch = match args.generator {
        Generator::GammaBdrv => sample_gamma_bdrv(GammaParams::new(a, l)?, n, stream)?,
        Generator::Loggamma => {
            uses_series = true;
            sample_loggamma_series(LogGammaParams::new(a, l)?, n, series, stream)?
        }
        Generator::LoggammaInnovation => {
            uses_series = true;
            let c = innovation_factor(args.c)?;
            LogGammaParams::new(a, l)?;
            let mut b = sample_loggamma_innovation(a, c, n, series, stream)?;
            // the sampler draws the lambda = 1 law
            let shift = -(1.0 - c) * l.ln();
            b.values.iter_mut().for_each(|v| *v += shift);
            b.metadata.insert("lambda".into(), l);
            b
        }
        Generator::Besselk => sample_besselk(BesselKParams::new(a, l)?, n, stream)?,
        Generator::BesselkInnovation => {
            sample_besselk_innovation(BesselKParams::new(a, l)?, innovation_factor(args.c)?, n, stream)?
        }
        Generator::GammaInnovation => {
            sample_gamma_innovation(GammaParams::new(a, l)?, innovation_factor(args.c)?, n, stream)?
        }
    };
    let text = match args.out.format {
        Format::Csv => {
            let mut c = Csv::default();
            c.comment(format!("generator: {}", batch.generator_tag));
            c.comment(format!("seed: {}", batch.seed));
            c.comment(format!("stream_id: {}", batch.stream_id));
            c.comment(format!("n: {}", batch.n));
            if uses_series {
                c.comment(format!("series: {}", serde_json::to_string(&series).expect("json")));
            }
            for (k, v) in &batch.metadata {
                c.comment(format!("{k}: {}", num(*v)));
            }
            for v in &batch.values {
                c.row([num(*v)]);
            }
            c.into_string()
        }
        Format::Json => {
            let mut value = serde_json::to_value(&batch).expect("json");
            if uses_series {
                value["series"] = serde_json::to_value(series).expect("json");
            }
            to_json(&value)
        }
    };
    emit(&text, args.out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn moments(args: &MomentsArgs) -> CliResult {
    let model = resolve_model(&args.model)?;
    // Cumulants of the driving variable are k times those of the law, so its mean
    // equals the mean and its variance is twice the variance.
    let (mean, variance, bddf_mean, bddf_variance) = match model {
        DistributionModel::LogGamma(p) => {
            let mean = digamma(p.alpha)? - p.lambda.ln();
            let var = trigamma(p.alpha)?;
            (mean, var, mean, loggamma_bddf_variance(p.alpha, &QuadratureConfig::default())?)
        }
        DistributionModel::Gamma(p) => {
            let var = p.alpha / (p.lambda * p.lambda);
            (p.alpha / p.lambda, var, p.alpha / p.lambda, 2.0 * var)
        }
        DistributionModel::BesselK(p) => {
            let var = 2.0 * p.alpha / (p.lambda * p.lambda);
            (0.0, var, 0.0, 2.0 * var)
        }
        DistributionModel::Levy(_) | DistributionModel::SymStable1(_) => {
            return Err(CliError::usage(format!("{:?} has no finite moments", model.kind())));
        }
    };
    let text = to_json(&json!({
        "model": model,
        "mean": mean,
        "variance": variance,
        "bddf_mean": bddf_mean,
        "bddf_variance": bddf_variance,
    }));
    emit(&text, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: &VerifyArgs) -> CliResult {
    if !(args.tolerance_scale > 0.0) {
        return Err(CliError::usage("--tolerance-scale must be positive"));
    }
    let mut cfg = SuiteConfig { tolerance_scale: args.tolerance_scale, only: args.only.clone(), ..Default::default() };
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let reports = run_all(&cfg);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_json_line());
        text.push('\n');
    }
    emit(&text, args.output.as_deref())?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    eprintln!("selfdecomp: {} checks, {failed} failed", reports.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
