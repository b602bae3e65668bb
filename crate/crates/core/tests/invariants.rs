use proptest::prelude::*;
use selfdecomp::charfn::{log_bdcf_closed, log_cf};
use selfdecomp::inversion::{bddf, gamma_bddf_closed};
use selfdecomp::samplers::{sample_besselk_innovation, sample_loggamma_series};
use selfdecomp::{
    BesselKParams, DistributionModel, GammaParams, LevyParams, LogGammaParams, QuadratureConfig, RngStream,
    SeriesConfig, SymStable1Params,
};

fn model() -> impl Strategy<Value = DistributionModel> {
    let pos = 0.1f64..5.0;
    prop_oneof![
        (pos.clone(), pos.clone()).prop_map(|(a, l)| DistributionModel::Gamma(GammaParams::new(a, l).unwrap())),
        (pos.clone(), pos.clone()).prop_map(|(a, l)| DistributionModel::LogGamma(LogGammaParams::new(a, l).unwrap())),
        (-3.0f64..3.0, pos.clone()).prop_map(|(m, c)| DistributionModel::Levy(LevyParams::new(m, c).unwrap())),
        pos.clone().prop_map(|s| DistributionModel::SymStable1(SymStable1Params::new(s).unwrap())),
        (pos.clone(), pos).prop_map(|(a, l)| DistributionModel::BesselK(BesselKParams::new(a, l).unwrap())),
    ]
}

proptest! {
    #[test]
    fn hermitian_and_bounded(m in model(), t in -20.0f64..20.0) {
        for f in [log_cf, log_bdcf_closed] {
            let (pos, neg) = (f(&m, t), f(&m, -t));
            let scale = 1.0 + pos.norm();
            prop_assert!((pos - neg.conj()).norm() <= 1e-12 * scale, "{m:?} t={t}");
            prop_assert!(pos.re <= 1e-12, "|phi| > 1 for {m:?} at t={t}: {pos}");
        }
    }

    #[test]
    fn gamma_bddf_closed_is_a_cdf(alpha in 0.1f64..5.0, lambda in 0.1f64..5.0, a in 0.0f64..10.0, da in 0.0f64..5.0) {
        let lo = gamma_bddf_closed(alpha, lambda, a).unwrap();
        let hi = gamma_bddf_closed(alpha, lambda, a + da).unwrap();
        prop_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        prop_assert!(hi >= lo - 1e-15);
    }

    #[test]
    fn same_stream_same_sample(seed in any::<u64>(), id in 0u64..1000, n in 1usize..400) {
        let p = LogGammaParams::new(1.5, 2.0).unwrap();
        let cfg = SeriesConfig::default();
        let a = sample_loggamma_series(p, n, cfg, RngStream::new(seed, id)).unwrap();
        let b = sample_loggamma_series(p, n, cfg, RngStream::new(seed, id)).unwrap();
        prop_assert_eq!(&a.values, &b.values);
        let k = sample_besselk_innovation(BesselKParams::new(1.0, 1.0).unwrap(), 0.5, n, RngStream::new(seed, id)).unwrap();
        let k2 = sample_besselk_innovation(BesselKParams::new(1.0, 1.0).unwrap(), 0.5, n, RngStream::new(seed, id)).unwrap();
        prop_assert_eq!(k.values, k2.values);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverted_bddf_is_monotone_and_bounded(m in model(), a in -6.0f64..6.0, da in 0.05f64..3.0) {
        let q = QuadratureConfig::default();
        let lo = bddf(&m, a, &q).unwrap().value;
        let hi = bddf(&m, a + da, &q).unwrap().value;
        prop_assert!((-1e-7..=1.0 + 1e-7).contains(&lo), "{m:?} F({a})={lo}");
        prop_assert!((-1e-7..=1.0 + 1e-7).contains(&hi), "{m:?} F({})={hi}", a + da);
        prop_assert!(hi >= lo - 1e-7, "{m:?}: F({a})={lo} > F({})={hi}", a + da);
    }
}
