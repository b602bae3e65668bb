//! Globally adaptive 21-point Gauss–Kronrod quadrature over real- or complex-valued
//! integrands, a semi-infinite range mapping, and an Euler-accelerated sum over
//! half-period segments for slowly decaying oscillatory tails.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_293_265_330,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Values that can be integrated: reals and complex numbers.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Tolerances and budget for a single adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_segments: usize,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64, max_segments: usize) -> Self {
        Self {
            abs,
            rel,
            max_segments,
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<T> {
    pub value: T,
    pub error: f64,
    pub segments: usize,
}

impl<T: QuadValue> Integral<T> {
    pub fn zero() -> Self {
        Self {
            value: T::zero(),
            error: 0.0,
            segments: 0,
        }
    }

    /// Sums two integrals over adjacent ranges.
    pub fn merge(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            error: self.error + other.error,
            segments: self.segments + other.segments,
        }
    }
}

struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Segment<T> {}
impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One 21-point Kronrod rule on `[a, b]` with a QUADPACK-style error estimate.
fn gauss_kronrod<T, F>(f: &F, a: f64, b: f64) -> (T, f64)
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [T::zero(); 21];
    fv[10] = f(center);
    for j in 0..10 {
        let dx = half * XGK[j];
        fv[j] = f(center - dx);
        fv[20 - j] = f(center + dx);
    }
    let mut kronrod = fv[10] * WGK[10];
    let mut gauss = T::zero();
    for j in 0..10 {
        kronrod = kronrod + (fv[j] + fv[20 - j]) * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + (fv[j] + fv[20 - j]) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut resasc = WGK[10] * (fv[10] - mean).magnitude();
    let mut resabs = WGK[10] * fv[10].magnitude();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[j] - mean).magnitude() + (fv[20 - j] - mean).magnitude());
        resabs += WGK[j] * (fv[j].magnitude() + fv[20 - j].magnitude());
    }
    let width = half.abs();
    resasc *= width;
    resabs *= width;
    let mut err = ((kronrod - gauss) * half).magnitude();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (kronrod * half, err)
}

/// Globally adaptive integration of `f` over the finite interval `[a, b]`.
///
/// The interval with the largest error estimate is bisected until the total error
/// meets `max(tol.abs, tol.rel * |I|)` or the segment budget runs out.
pub fn integrate<T, F>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Integral<T>>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    if a == b {
        return Ok(Integral::zero());
    }
    let (value, error) = gauss_kronrod(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    let mut segments = 1usize;
    loop {
        if !total.is_finite_value() {
            return Err(Error::QuadratureNonConvergence {
                partial: total.magnitude(),
                residual: f64::INFINITY,
                segments,
            });
        }
        if total_err <= tol.abs.max(tol.rel * total.magnitude()) {
            break;
        }
        if segments >= tol.max_segments {
            return Err(Error::QuadratureNonConvergence {
                partial: total.magnitude(),
                residual: total_err,
                segments,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            // Interval cannot be split further in floating point; accept it as is.
            heap.push(Segment {
                error: 0.0,
                ..worst
            });
            total_err = heap.iter().map(|s| s.error).sum();
            continue;
        }
        let (v1, e1) = gauss_kronrod(&f, worst.a, mid);
        let (v2, e2) = gauss_kronrod(&f, mid, worst.b);
        total = total - worst.value + v1 + v2;
        total_err += e1 + e2 - worst.error;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
        segments += 1;
        // Re-sum periodically to shed accumulated cancellation in the running totals.
        if segments.is_multiple_of(64) {
            total = heap.iter().fold(T::zero(), |acc, s| acc + s.value);
            total_err = heap.iter().map(|s| s.error).sum();
        }
    }
    let total = heap.iter().fold(T::zero(), |acc, s| acc + s.value);
    Ok(Integral {
        value: total,
        error: total_err,
        segments,
    })
}

/// Integrates `f` over `[a, inf)` through the map `x = a + (1 - s) / s`.
pub fn integrate_to_infinity<T, F>(f: F, a: f64, tol: Tolerance) -> Result<Integral<T>>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    integrate(
        |s: f64| {
            let x = a + (1.0 - s) / s;
            f(x) * (1.0 / (s * s))
        },
        0.0,
        1.0,
        tol,
    )
}

/// Euler transform of an alternating-looking series, computed by repeated averaging
/// of its partial sums. Returns the accelerated sum and the change between the final
/// two averaging levels as an error estimate.
pub fn euler_accelerate(terms: &[f64]) -> (f64, f64) {
    match terms.len() {
        0 => return (0.0, 0.0),
        1 => return (terms[0], terms[0].abs()),
        _ => {}
    }
    let mut row: Vec<f64> = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    let mut previous = row[row.len() - 1];
    while row.len() > 1 {
        previous = row[row.len() - 1];
        row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    (row[0], (row[0] - previous).abs())
}

/// Integrates a real oscillatory integrand with angular frequency `omega` over
/// `[start, inf)`: one adaptive piece up to the first multiple of `pi / omega`, then
/// `terms` half-period segments summed with [`euler_accelerate`]. The segment count
/// doubles until the accelerated sum meets `tol.abs` or the budget runs out.
pub fn integrate_oscillatory_tail<F>(
    f: F,
    start: f64,
    omega: f64,
    terms: usize,
    tol: Tolerance,
) -> Result<Integral<f64>>
where
    F: Fn(f64) -> f64,
{
    let half_period = std::f64::consts::PI / omega;
    let first_zero = (start / half_period).ceil() * half_period;
    let seg_tol = Tolerance::new(tol.abs / (4.0 * terms as f64).max(1.0), tol.rel, tol.max_segments);
    let lead = integrate(&f, start, first_zero, seg_tol)?;
    let mut used = lead.segments;
    let mut quad_err = lead.error;
    let mut pieces: Vec<f64> = Vec::with_capacity(terms);
    let mut target = terms.max(4);
    loop {
        while pieces.len() < target {
            let k = pieces.len() as f64;
            let lo = first_zero + k * half_period;
            let hi = lo + half_period;
            let remaining = tol.max_segments.saturating_sub(used).max(1);
            let piece = integrate(&f, lo, hi, Tolerance { max_segments: remaining, ..seg_tol })?;
            used += piece.segments;
            quad_err += piece.error;
            pieces.push(piece.value);
        }
        let (sum, accel_err) = euler_accelerate(&pieces);
        let error = accel_err + quad_err;
        if error <= tol.abs.max(tol.rel * (lead.value + sum).abs()) {
            return Ok(Integral {
                value: lead.value + sum,
                error,
                segments: used,
            });
        }
        if used >= tol.max_segments || target >= 1 << 14 {
            return Err(Error::QuadratureNonConvergence {
                partial: lead.value + sum,
                residual: error,
                segments: used,
            });
        }
        target *= 2;
    }
}
