//! Sample summaries used by the Monte Carlo checks.

use crate::specfun::ComplexValue;

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Unbiased sample variance (two-pass).
pub fn variance(values: &[f64]) -> f64 {
    let m = mean(values);
    values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (values.len() as f64 - 1.0)
}

/// `(1/n) sum_j e^{i t x_j}`.
pub fn empirical_cf(values: &[f64], t: f64) -> ComplexValue {
    let (re, im) = values.iter().fold((0.0, 0.0), |(re, im), x| {
        let (s, c) = (t * x).sin_cos();
        (re + c, im + s)
    });
    let n = values.len() as f64;
    ComplexValue::new(re / n, im / n)
}

pub fn fraction_equal(values: &[f64], target: f64) -> f64 {
    values.iter().filter(|&&v| v == target).count() as f64 / values.len() as f64
}

pub fn fraction_at_most(values: &[f64], a: f64) -> f64 {
    values.iter().filter(|&&v| v <= a).count() as f64 / values.len() as f64
}

/// Two-sample Kolmogorov–Smirnov statistic `sup_x |F_1(x) - F_2(x)|`; ties are
/// stepped over together.
pub fn ks_two_sample(first: &[f64], second: &[f64]) -> f64 {
    let mut x = first.to_vec();
    let mut y = second.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut sup: f64 = 0.0;
    while i < x.len() && j < y.len() {
        let v = x[i].min(y[j]);
        while i < x.len() && x[i] == v {
            i += 1;
        }
        while j < y.len() && y[j] == v {
            j += 1;
        }
        sup = sup.max((i as f64 / n - j as f64 / m).abs());
    }
    sup
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(mean(&v), 2.5);
        assert!((variance(&v) - 5.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ks_identical_and_disjoint() {
        let a = [0.1, 0.2, 0.3];
        assert_eq!(ks_two_sample(&a, &a), 0.0);
        assert_eq!(ks_two_sample(&a, &[5.0, 6.0]), 1.0);
        // ties across samples are stepped together
        assert_eq!(ks_two_sample(&[0.0, 0.0, 1.0], &[0.0, 1.0, 1.0]), 1.0 / 3.0);
    }

    #[test]
    fn cf_of_constant() {
        let cf = empirical_cf(&[2.0; 10], 0.5);
        assert!((cf - ComplexValue::new(1.0f64.cos(), 1.0f64.sin())).norm() < 1e-15);
    }
}
