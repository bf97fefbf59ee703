//! Cross-checks every exported quantity against the high-precision anchor
//! values in `tests/fixtures.json` (generated by `tools/gen_fixtures.py` at
//! 50 decimal digits and rounded to the nearest f64 on parse).

use convexity_radii::radius::{curvature, solve_radius, CurvatureMethod, RadiusQuery};
use convexity_radii::specfun::{eval_lommel, eval_phi_k, eval_struve};
use convexity_radii::zeros::{derivative_zeros, function_zeros};
use convexity_radii::{FamilySpec, NormKind};
use serde_json::Value;

fn fixtures() -> Value {
    let text = include_str!("fixtures.json");
    serde_json::from_str(text).expect("fixtures.json parses")
}

fn anchor(doc: &Value, section: &str, key: &str) -> f64 {
    doc[section][key]
        .as_str()
        .unwrap_or_else(|| panic!("missing fixture {section}/{key}"))
        .parse::<f64>()
        .unwrap()
}

fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let denom = want.abs().max(f64::MIN_POSITIVE);
    let rel = (got - want).abs() / denom;
    assert!(
        rel <= tol,
        "{what}: got {got:.17e}, want {want:.17e}, rel err {rel:.3e} > {tol:.1e}"
    );
}

#[test]
fn lommel_values_match_anchors() {
    let doc = fixtures();
    let phi0 = eval_phi_k(0.5, 0, 1.0).unwrap().value;
    assert_rel(phi0, anchor(&doc, "lommel", "phi0_mu0.5_z1"), 1e-14, "phi0(0.5, 1)");

    // (mu, z, deriv, key, tol); large-|z| entries exercise the continuation
    // branch and get a slightly looser tolerance.
    let cases: &[(f64, f64, u8, &str, f64)] = &[
        (0.25, 2.0, 0, "s_mu0.25_z2", 1e-13),
        (0.25, 2.0, 1, "s_mu0.25_z2_d1", 1e-13),
        (0.5, 1.0, 2, "s_mu0.5_z1_d2", 1e-13),
        (0.5, 50.0, 0, "s_mu0.5_z50_d0", 1e-11),
        (0.5, 50.0, 1, "s_mu0.5_z50_d1", 1e-11),
        (0.5, 50.0, 2, "s_mu0.5_z50_d2", 1e-11),
        (-0.75, 40.0, 0, "s_mu-0.75_z40_d0", 1e-11),
        (-0.75, 40.0, 1, "s_mu-0.75_z40_d1", 1e-11),
        (-0.75, 40.0, 2, "s_mu-0.75_z40_d2", 1e-11),
        (0.9, 120.0, 0, "s_mu0.9_z120_d0", 1e-11),
        (0.9, 120.0, 1, "s_mu0.9_z120_d1", 1e-11),
        (0.9, 120.0, 2, "s_mu0.9_z120_d2", 1e-11),
    ];
    for &(mu, z, d, key, tol) in cases {
        let got = eval_lommel(mu, z, d).unwrap().value;
        assert_rel(got, anchor(&doc, "lommel", key), tol, key);
    }
}

#[test]
fn struve_values_match_anchors() {
    let doc = fixtures();
    let cases: &[(f64, f64, u8, &str, f64)] = &[
        (0.25, 1.0, 0, "H_nu0.25_x1", 1e-13),
        (0.25, 1.0, 1, "H_nu0.25_x1_d1", 1e-13),
        (-0.25, 3.0, 2, "H_nu-0.25_x3_d2", 1e-13),
        (0.25, 50.0, 0, "H_nu0.25_x50_d0", 1e-11),
        (0.25, 50.0, 1, "H_nu0.25_x50_d1", 1e-11),
        (0.25, 50.0, 2, "H_nu0.25_x50_d2", 1e-11),
        (-0.5, 40.0, 0, "H_nu-0.5_x40_d0", 1e-11),
        (-0.5, 40.0, 1, "H_nu-0.5_x40_d1", 1e-11),
        (-0.5, 40.0, 2, "H_nu-0.5_x40_d2", 1e-11),
        (0.5, 80.0, 0, "H_nu0.5_x80_d0", 1e-11),
        (0.5, 80.0, 1, "H_nu0.5_x80_d1", 1e-11),
        (0.5, 80.0, 2, "H_nu0.5_x80_d2", 1e-11),
    ];
    for &(nu, x, d, key, tol) in cases {
        let got = eval_struve(nu, x, d).unwrap().value;
        assert_rel(got, anchor(&doc, "struve", key), tol, key);
    }
}

#[test]
fn zeros_match_anchors() {
    let doc = fixtures();
    for &mu in &[0.5, 0.25, -0.25] {
        let fam = FamilySpec::lommel(mu).unwrap();
        let table = function_zeros(&fam, 3).unwrap();
        for n in 1..=3usize {
            let key = format!("xi_mu{mu}_{n}");
            assert_rel(
                table.records[n - 1].value,
                anchor(&doc, "lommel", &key),
                1e-12,
                &key,
            );
        }
        let deriv = derivative_zeros(&fam, &table).unwrap();
        let key = format!("xip_mu{mu}_1");
        assert_rel(
            deriv.records[0].value,
            anchor(&doc, "lommel", &key),
            1e-12,
            &key,
        );
    }

    let fam = FamilySpec::struve(0.25).unwrap();
    let table = function_zeros(&fam, 2).unwrap();
    assert_rel(table.records[0].value, anchor(&doc, "struve", "h_nu0.25_1"), 1e-12, "h_nu0.25_1");
    assert_rel(table.records[1].value, anchor(&doc, "struve", "h_nu0.25_2"), 1e-12, "h_nu0.25_2");
    let deriv = derivative_zeros(&fam, &table).unwrap();
    assert_rel(deriv.records[0].value, anchor(&doc, "struve", "hp_nu0.25_1"), 1e-12, "hp_nu0.25_1");

    for &(nu, key) in &[(0.5, "hp_nu0.5_1"), (-0.5, "hp_nu-0.5_1")] {
        let fam = FamilySpec::struve(nu).unwrap();
        let table = function_zeros(&fam, 2).unwrap();
        let deriv = derivative_zeros(&fam, &table).unwrap();
        assert_rel(deriv.records[0].value, anchor(&doc, "struve", key), 1e-12, key);
    }
}

#[test]
fn radii_match_anchors() {
    let doc = fixtures();
    let cases: &[(FamilySpec, NormKind, f64, &str)] = &[
        (FamilySpec::Struve(0.5), NormKind::Shift, 0.0, "struve_nu0.5_shift_a0"),
        (FamilySpec::Struve(0.5), NormKind::Sqrt, 0.0, "struve_nu0.5_sqrt_a0"),
        (FamilySpec::Lommel(0.5), NormKind::Power, 0.0, "lommel_mu0.5_power_a0"),
        (FamilySpec::Lommel(0.5), NormKind::Shift, 0.3, "lommel_mu0.5_shift_a0.3"),
        (FamilySpec::Lommel(-0.25), NormKind::Shift, 0.0, "lommel_mu-0.25_shift_a0"),
    ];
    for (fam, norm, alpha, key) in cases {
        let query = RadiusQuery::new(*fam, *norm, *alpha).unwrap();
        let result = solve_radius(&query).unwrap();
        assert_rel(result.radius, anchor(&doc, "radius", key), 1e-10, key);
    }
}

#[test]
fn curvature_matches_anchors_both_methods() {
    let doc = fixtures();
    let cases: &[(FamilySpec, NormKind, f64, &str)] = &[
        (FamilySpec::Lommel(0.5), NormKind::Shift, 0.5, "lommel_mu0.5_shift_r0.5"),
        (FamilySpec::Lommel(0.5), NormKind::Power, 0.5, "lommel_mu0.5_power_r0.5"),
        (FamilySpec::Struve(0.25), NormKind::Power, 1.5, "struve_nu0.25_power_r1.5"),
        (FamilySpec::Struve(0.5), NormKind::Shift, 1.3, "struve_nu0.5_shift_r1.3"),
    ];
    for (fam, norm, r, key) in cases {
        let query = RadiusQuery::new(*fam, *norm, 0.0).unwrap();
        let want = anchor(&doc, "curvature", key);
        let direct = curvature(&query, *r, CurvatureMethod::Direct).unwrap();
        let spectral = curvature(&query, *r, CurvatureMethod::Spectral).unwrap();
        assert_rel(direct, want, 1e-12, &format!("{key} (direct)"));
        assert_rel(spectral, want, 1e-9, &format!("{key} (spectral)"));
    }
}
