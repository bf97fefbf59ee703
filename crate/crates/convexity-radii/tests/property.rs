//! Randomized structural properties of the series evaluators.

use convexity_radii::specfun::{eval_lommel, eval_phi_k, eval_struve};
use convexity_radii::zeros::function_zeros;
use convexity_radii::FamilySpec;
use proptest::prelude::*;

fn mu_strategy() -> impl Strategy<Value = f64> {
    prop_oneof![(-0.99f64..-0.01).prop_map(|x| x), (0.01f64..0.99).prop_map(|x| x)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// phi_k is a function of z² alone, so +z and −z agree bit-for-bit.
    #[test]
    fn phi_is_even_bitwise(mu in mu_strategy(), k in 0u32..2, z in -30.0f64..30.0) {
        prop_assume!((mu - k as f64).fract() != 0.0);
        let plus = eval_phi_k(mu, k, z).unwrap().value;
        let minus = eval_phi_k(mu, k, -z).unwrap().value;
        prop_assert_eq!(plus.to_bits(), minus.to_bits());
    }

    /// The reported truncation bound really covers the refinement gained by
    /// re-evaluating with the value as its own scale witness: the first
    /// derivative assembled from d0/d2 via the defining equation.
    ///
    /// z² s″ + z s′ + (z² − 1/4) s = z^{μ+1/2}
    #[test]
    fn lommel_ode_residual_is_small(mu in mu_strategy(), z in 0.2f64..30.0) {
        let s = eval_lommel(mu, z, 0).unwrap();
        let sp = eval_lommel(mu, z, 1).unwrap().value;
        let spp = eval_lommel(mu, z, 2).unwrap().value;
        let lhs = z * z * spp + z * sp + (z * z - 0.25) * s.value;
        let rhs = z.powf(mu + 0.5);
        let scale = rhs.abs() + z * z * s.value.abs() + 1.0;
        prop_assert!(
            (lhs - rhs).abs() <= 1e-10 * scale,
            "ODE residual {} at mu={mu}, z={z}",
            (lhs - rhs).abs() / scale
        );
    }

    /// x² H″ + x H′ + (x² − ν²) H = 4 (x/2)^{ν+1} / (√π Γ(ν+1/2)).
    #[test]
    fn struve_ode_residual_is_small(nu in -0.5f64..=0.5, x in 0.2f64..30.0) {
        let h = eval_struve(nu, x, 0).unwrap().value;
        let hp = eval_struve(nu, x, 1).unwrap().value;
        let hpp = eval_struve(nu, x, 2).unwrap().value;
        let lhs = x * x * hpp + x * hp + (x * x - nu * nu) * h;
        let gamma_half = statrs_gamma(nu + 0.5);
        let rhs = 4.0 * (x / 2.0).powf(nu + 1.0) / (std::f64::consts::PI.sqrt() * gamma_half);
        let scale = rhs.abs() + x * x * h.abs() + 1.0;
        prop_assert!(
            (lhs - rhs).abs() <= 1e-10 * scale,
            "ODE residual {} at nu={nu}, x={x}",
            (lhs - rhs).abs() / scale
        );
    }

    /// Tabulated zeros really change sign across their brackets.
    #[test]
    fn zero_brackets_straddle(mu in mu_strategy()) {
        let fam = FamilySpec::lommel(mu).unwrap();
        let table = function_zeros(&fam, 3).unwrap();
        for rec in &table.records {
            prop_assert!(rec.bracket_lo < rec.value && rec.value < rec.bracket_hi);
            prop_assert!(rec.residual < 1e-10);
        }
    }
}

fn statrs_gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}
