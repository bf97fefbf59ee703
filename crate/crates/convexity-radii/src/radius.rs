//! Radii of convexity for the six normalizations.
//!
//! Each normalization's curvature functional reduces to ratios of the
//! even kernel sums F and E = λF + zF′ (all z^λ prefactors cancel):
//!
//! ```text
//! Power  K(r) = 1 + rE′/E + (1/λ − 1)·rF′/F
//! Shift  K(r) = 1 + rE′/E − m        (m = order of E at 0: 2 at μ = −1/2, else 0)
//! Sqrt   K(r) = Shift(√r)
//! ```
//!
//! Every functional has the exact spectral form K(r) = 1 − Σ 2r²/(w−r²)
//! over the roots w of the relevant series in w = z² (plus the weighted
//! function-root sum for Power).  The spectral path truncates the root sum
//! at the tabulated zeros — including, for λ < 0, the one negative-w root
//! of E (an imaginary-z pair) — and restores the tail **exactly** through
//! order r^{2J} with Newton-identity power sums of the series coefficients.
//!
//! For λ > 0 the curvature is strictly decreasing from 1 to −∞ on
//! (0, upper_endpoint), so each equation K(r) = α has a unique root.  For
//! Lommel μ ∈ (−1, −1/2) the Power coefficient 1/λ − 1 is negative and the
//! real-axis curvature instead increases from 1: the equation has no root
//! and [`solve_radius`] reports `NoSignChange`.

use crate::error::{Error, Result};
use crate::family::{FamilySpec, NormKind};
use crate::specfun::{e_with_deriv, f_with_deriv, Kernel};
use crate::zeros::{
    derivative_pole_multiset, derivative_zeros, function_pole_multiset, function_zeros, ZeroTable,
};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// How many zeros back the truncated spectral sums.
const N_SPECTRAL: usize = 200;
/// Newton-tail order: corrections through r^{2*J_TAIL}.
const J_TAIL: usize = 6;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RadiusQuery {
    pub family: FamilySpec,
    pub norm: NormKind,
    /// Convexity order, in [0, 1).
    pub alpha: f64,
}

impl RadiusQuery {
    pub fn new(family: FamilySpec, norm: NormKind, alpha: f64) -> Result<RadiusQuery> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::ParameterRange(format!(
                "alpha must be in [0,1); got {alpha}"
            )));
        }
        if norm == NormKind::Power && family == FamilySpec::Lommel(-0.5) {
            return Err(Error::ParameterRange(
                "power normalization is undefined at mu = -1/2 (exponent 1/lambda)".into(),
            ));
        }
        Ok(RadiusQuery {
            family,
            norm,
            alpha,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurvatureMethod {
    /// Series ratios rE′/E, rF′/F.
    Direct,
    /// Pole sums over tabulated zeros with exact Newton-identity tails.
    Spectral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verified {
    Unverified,
    DiskChecked,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// First pole of the curvature: the solve interval is (0, upper_endpoint).
    pub upper_endpoint: f64,
    pub bracket: (f64, f64),
    /// |K(radius) − α| after refinement.
    pub residual: f64,
    pub iterations: usize,
    pub verified: Verified,
}

// ---------------------------------------------------------------------------
// Zero-table cache
// ---------------------------------------------------------------------------

pub(crate) struct Tables {
    pub function: ZeroTable,
    pub derivative: ZeroTable,
    /// For λ < 0 the E series (in w = z²) has one root on the negative w
    /// axis — an imaginary-z pair.  It never poles on the real axis but
    /// belongs to the spectral sum like any other root.
    pub extra_e_w_root: Option<f64>,
}

type TableKey = (&'static str, u64, usize);

fn table_cache() -> &'static Mutex<HashMap<TableKey, Arc<Tables>>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<Tables>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Zero tables for `fam` with at least `count` function zeros, memoized.
pub(crate) fn cached_tables(fam: &FamilySpec, count: usize) -> Result<Arc<Tables>> {
    let key = (fam.name(), fam.param().to_bits(), count);
    if let Some(t) = table_cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(t));
    }
    // one spare zero so the λ ≤ 0 interval pattern still yields `count`
    // derivative zeros
    let function = function_zeros(fam, count + 1)?;
    let derivative = derivative_zeros(fam, &function)?;
    let tables = Arc::new(Tables {
        function,
        derivative,
        extra_e_w_root: e_negative_w_root(fam),
    });
    table_cache()
        .lock()
        .unwrap()
        .insert(key, Arc::clone(&tables));
    Ok(tables)
}

/// The unique negative-w root of E(w) = Σ c_n (λ+2n) wⁿ when λ < 0.
///
/// At w < 0 every n ≥ 1 term is positive and growing while the n = 0 term is
/// λ < 0, so E is monotone on the negative axis with exactly one sign change;
/// for λ ≥ 0 there is none.
fn e_negative_w_root(fam: &FamilySpec) -> Option<f64> {
    let lam = fam.lambda();
    if lam >= 0.0 {
        return None;
    }
    let c = Kernel::for_family(fam).coeffs(80);
    let eval = |w: f64| -> f64 {
        let mut s = 0.0;
        let mut pw = 1.0;
        for (n, &cn) in c.iter().enumerate() {
            s += cn * (lam + 2.0 * n as f64) * pw;
            pw *= w;
        }
        s
    };
    let mut hi = 0.0;
    let mut lo = -0.5;
    while eval(lo) < 0.0 {
        hi = lo;
        lo *= 2.0;
        if lo < -1e6 {
            return None;
        }
    }
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if eval(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

// ---------------------------------------------------------------------------
// Newton-identity power sums
// ---------------------------------------------------------------------------

/// p_j = Σ x_i^{−2j} over the full zero multiset of Σ ĉ_n z^{2n}, ĉ_0 = 1.
///
/// In u = z², the ĉ_n are (up to sign) the elementary symmetric functions of
/// the reciprocal roots; Newton's identities convert them to power sums.
pub(crate) fn newton_power_sums(c_hat: &[f64], j_max: usize) -> Vec<f64> {
    debug_assert!(c_hat.len() > j_max && c_hat[0] == 1.0);
    let e: Vec<f64> = c_hat
        .iter()
        .enumerate()
        .map(|(k, &ck)| if k % 2 == 0 { ck } else { -ck })
        .collect();
    let mut p = vec![0.0; j_max + 1];
    for j in 1..=j_max {
        let mut s = if j % 2 == 1 { 1.0 } else { -1.0 } * j as f64 * e[j];
        for i in 1..j {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            s += sign * e[i] * p[j - i];
        }
        p[j] = s;
    }
    p
}

/// Normalized coefficients ĉ_n (ĉ_0 = 1) of the series whose zeros are the
/// F poles (weight = None) or E poles (weight = Some(λ); the λ = 0 case
/// divides out the z² factor of E instead).
fn normalized_coeffs(kernel: &Kernel, deriv_weights: bool, n: usize) -> Vec<f64> {
    let lam = kernel.lam;
    if !deriv_weights {
        return kernel.coeffs(n);
    }
    if lam != 0.0 {
        kernel
            .coeffs(n)
            .iter()
            .enumerate()
            .map(|(k, &ck)| ck * (lam + 2.0 * k as f64) / lam)
            .collect()
    } else {
        // E = Σ c_n·2n z^{2n} = 2 c_1 z² (1 + Σ_{j≥1} ĉ_j z^{2j})
        let c = kernel.coeffs(n + 1);
        (0..=n)
            .map(|j| c[j + 1] * (2.0 * (j as f64 + 1.0)) / (2.0 * c[1]))
            .collect()
    }
}

/// Σ 2r²/(w−r²) over the tabulated roots (w = x² for real-zero pairs ±x;
/// negative w for imaginary pairs), with the exact tail through r^{2 j_max}
/// from the full-multiset power sums.
fn pole_sum(roots_w: &[f64], p_full: &[f64], r: f64, j_max: usize) -> f64 {
    let r2 = r * r;
    let mut s = 0.0;
    let mut partial = vec![0.0; j_max + 1];
    for &w in roots_w {
        s += 2.0 * r2 / (w - r2);
        let inv = 1.0 / w;
        let mut pw = inv;
        for pj in partial.iter_mut().skip(1) {
            *pj += pw;
            pw *= inv;
        }
    }
    let mut rp = r2;
    for j in 1..=j_max {
        s += 2.0 * rp * (p_full[j] - partial[j]);
        rp *= r2;
    }
    s
}

/// d/dr of [`pole_sum`].
fn pole_sum_derivative(roots_w: &[f64], p_full: &[f64], r: f64, j_max: usize) -> f64 {
    let r2 = r * r;
    let mut s = 0.0;
    let mut partial = vec![0.0; j_max + 1];
    for &w in roots_w {
        let d = w - r2;
        s += 4.0 * r * w / (d * d);
        let inv = 1.0 / w;
        let mut pw = inv;
        for pj in partial.iter_mut().skip(1) {
            *pj += pw;
            pw *= inv;
        }
    }
    for j in 1..=j_max {
        s += 4.0 * j as f64 * r.powi(2 * j as i32 - 1) * (p_full[j] - partial[j]);
    }
    s
}

// ---------------------------------------------------------------------------
// Curvature
// ---------------------------------------------------------------------------

/// Order of the z-zero of E: 2 exactly at λ = 0 (Lommel μ = −1/2), else 0.
fn e_origin_order(fam: &FamilySpec) -> f64 {
    if fam.lambda() == 0.0 {
        2.0
    } else {
        0.0
    }
}

fn direct_curvature(query: &RadiusQuery, r: f64) -> Result<f64> {
    let fam = &query.family;
    let r_eff = match query.norm {
        NormKind::Sqrt => r.sqrt(),
        _ => r,
    };
    let (e, ep) = e_with_deriv(fam, r_eff)?;
    // a pole of the ratio is |E| vanishing while r E' stays finite; both
    // shrink together like r^m at the origin, which is not a pole
    if e.abs() < 1e-12 * (r_eff * ep).abs() {
        return Err(Error::NearPole {
            denom_abs: e.abs(),
            floor: 1e-12,
            z: format!("{r_eff}"),
        });
    }
    let base = 1.0 + r_eff * ep / e - e_origin_order(fam);
    match query.norm {
        NormKind::Shift | NormKind::Sqrt => Ok(base),
        NormKind::Power => {
            let lam = fam.lambda();
            let (f, fp) = f_with_deriv(fam, r_eff)?;
            if f.abs() < 1e-12 * (r_eff * fp).abs() {
                return Err(Error::NearPole {
                    denom_abs: f.abs(),
                    floor: 1e-12,
                    z: format!("{r_eff}"),
                });
            }
            Ok(base + (1.0 / lam - 1.0) * r_eff * fp / f)
        }
    }
}

struct SpectralData {
    fn_roots_w: Vec<f64>,
    deriv_roots_w: Vec<f64>,
    p_fn: Vec<f64>,
    p_deriv: Vec<f64>,
}

fn spectral_data(fam: &FamilySpec) -> Result<SpectralData> {
    let tables = cached_tables(fam, N_SPECTRAL)?;
    let kernel = Kernel::for_family(fam);
    let fn_roots_w: Vec<f64> = function_pole_multiset(&tables.function)
        .iter()
        .map(|x| x * x)
        .collect();
    let mut deriv_roots_w: Vec<f64> =
        derivative_pole_multiset(&tables.function, &tables.derivative)
            .iter()
            .map(|x| x * x)
            .collect();
    if let Some(w) = tables.extra_e_w_root {
        deriv_roots_w.push(w);
    }
    Ok(SpectralData {
        fn_roots_w,
        deriv_roots_w,
        p_fn: newton_power_sums(&normalized_coeffs(&kernel, false, J_TAIL + 1), J_TAIL),
        p_deriv: newton_power_sums(&normalized_coeffs(&kernel, true, J_TAIL + 1), J_TAIL),
    })
}

fn spectral_curvature(query: &RadiusQuery, r: f64) -> Result<f64> {
    let r_eff = match query.norm {
        NormKind::Sqrt => r.sqrt(),
        _ => r,
    };
    let sd = spectral_data(&query.family)?;
    let mut k = 1.0 - pole_sum(&sd.deriv_roots_w, &sd.p_deriv, r_eff, J_TAIL);
    if query.norm == NormKind::Power {
        let lam = query.family.lambda();
        k -= (1.0 / lam - 1.0) * pole_sum(&sd.fn_roots_w, &sd.p_fn, r_eff, J_TAIL);
    }
    Ok(k)
}

/// K(r) for the queried normalization, by either method.  Both agree to
/// near machine precision on (0, upper_endpoint); the spectral form stays
/// finite-and-monotone even arbitrarily close to the endpoint, where the
/// direct ratio hits its pole floor.
pub fn curvature(query: &RadiusQuery, r: f64, method: CurvatureMethod) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::DomainError(format!("curvature requires r > 0; got {r}")));
    }
    match method {
        CurvatureMethod::Direct => direct_curvature(query, r),
        CurvatureMethod::Spectral => spectral_curvature(query, r),
    }
}

/// dK/dr from the spectral form (every pole term is decreasing in r, so the
/// value is strictly negative on the solve interval).
pub fn curvature_derivative(query: &RadiusQuery, r: f64) -> Result<f64> {
    let r_eff = match query.norm {
        NormKind::Sqrt => r.sqrt(),
        _ => r,
    };
    let sd = spectral_data(&query.family)?;
    let mut d = -pole_sum_derivative(&sd.deriv_roots_w, &sd.p_deriv, r_eff, J_TAIL);
    if query.norm == NormKind::Power {
        let lam = query.family.lambda();
        d -= (1.0 / lam - 1.0) * pole_sum_derivative(&sd.fn_roots_w, &sd.p_fn, r_eff, J_TAIL);
    }
    if query.norm == NormKind::Sqrt {
        d /= 2.0 * r_eff;
    }
    Ok(d)
}

pub fn curvature_derivative_sign(query: &RadiusQuery, r: f64) -> Result<i8> {
    Ok(curvature_derivative(query, r)?.signum() as i8)
}

/// First pole of the curvature functional.
pub fn upper_endpoint(query: &RadiusQuery) -> Result<f64> {
    let tables = cached_tables(&query.family, N_SPECTRAL)?;
    let first_deriv = derivative_pole_multiset(&tables.function, &tables.derivative)[0];
    Ok(match query.norm {
        NormKind::Shift => first_deriv,
        NormKind::Sqrt => first_deriv * first_deriv,
        NormKind::Power => first_deriv.min(tables.function.records[0].value),
    })
}

/// Solve K(r) = α on (0, upper_endpoint): bisection to a tight bracket, then
/// a few Newton steps with the spectral derivative.
pub fn solve_radius(query: &RadiusQuery) -> Result<RadiusResult> {
    let endpoint = upper_endpoint(query)?;
    let mut lo = 1e-12;
    let mut hi = endpoint * (1.0 - 1e-9);
    let alpha = query.alpha;
    let mut iterations = 0usize;
    let k_lo = curvature(query, lo, CurvatureMethod::Spectral)? - alpha;
    let k_hi = curvature(query, hi, CurvatureMethod::Spectral)? - alpha;
    if k_lo <= 0.0 || k_hi >= 0.0 {
        return Err(Error::NoSignChange { endpoint });
    }
    while hi - lo > 1e-12 * (1.0 + lo.abs()) {
        let mid = 0.5 * (lo + hi);
        let km = curvature(query, mid, CurvatureMethod::Spectral)? - alpha;
        iterations += 1;
        if km > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let bracket = (lo, hi);
    let mut r = 0.5 * (lo + hi);
    for _ in 0..4 {
        let k = curvature(query, r, CurvatureMethod::Spectral)? - alpha;
        let d = curvature_derivative(query, r)?;
        if d == 0.0 {
            break;
        }
        let step = k / d;
        let r_new = r - step;
        iterations += 1;
        if r_new > bracket.0 - 1e-9 && r_new < bracket.1 + 1e-9 {
            r = r_new;
        }
        if step.abs() < 1e-16 * (1.0 + r) {
            break;
        }
    }
    let residual = (curvature(query, r, CurvatureMethod::Spectral)? - alpha).abs();
    Ok(RadiusResult {
        radius: r,
        upper_endpoint: endpoint,
        bracket,
        residual,
        iterations,
        verified: Verified::Unverified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(family: FamilySpec, norm: NormKind, alpha: f64) -> RadiusQuery {
        RadiusQuery::new(family, norm, alpha).unwrap()
    }

    #[test]
    fn methods_agree() {
        let cases = [
            q(FamilySpec::lommel(0.5).unwrap(), NormKind::Power, 0.0),
            q(FamilySpec::lommel(-0.25).unwrap(), NormKind::Shift, 0.3),
            q(FamilySpec::struve(0.25).unwrap(), NormKind::Sqrt, 0.5),
            q(FamilySpec::struve(0.5).unwrap(), NormKind::Shift, 0.0),
            q(FamilySpec::struve(-0.5).unwrap(), NormKind::Power, 0.2),
        ];
        for query in cases {
            let endpoint = upper_endpoint(&query).unwrap();
            for i in 1..10 {
                let r = endpoint * i as f64 / 10.5;
                let kd = curvature(&query, r, CurvatureMethod::Direct).unwrap();
                let ks = curvature(&query, r, CurvatureMethod::Spectral).unwrap();
                assert!(
                    (kd - ks).abs() < 1e-9 * (1.0 + kd.abs()),
                    "{query:?} r={r}: direct {kd} vs spectral {ks}"
                );
            }
        }
    }

    #[test]
    fn curvature_limit_is_one() {
        for query in [
            q(FamilySpec::lommel(0.5).unwrap(), NormKind::Power, 0.0),
            q(FamilySpec::lommel(-0.5).unwrap(), NormKind::Shift, 0.0),
            q(FamilySpec::struve(0.5).unwrap(), NormKind::Sqrt, 0.0),
        ] {
            let k = curvature(&query, 1e-7, CurvatureMethod::Direct).unwrap();
            assert!((k - 1.0).abs() < 1e-6, "{query:?}: {k}");
        }
    }

    #[test]
    fn radius_decreases_with_alpha() {
        let fam = FamilySpec::struve(0.25).unwrap();
        let mut last = f64::INFINITY;
        for i in 0..5 {
            let alpha = i as f64 * 0.2;
            let r = solve_radius(&q(fam, NormKind::Shift, alpha)).unwrap();
            assert!(r.radius < last);
            assert!(r.residual < 1e-10);
            assert!(r.radius > r.bracket.0 - 1e-9 && r.radius < r.bracket.1 + 1e-9);
            last = r.radius;
        }
    }

    #[test]
    fn sqrt_radius_is_square_of_shift_radius_at_alpha_zero() {
        let fam = FamilySpec::lommel(0.5).unwrap();
        let rs = solve_radius(&q(fam, NormKind::Shift, 0.0)).unwrap().radius;
        let rw = solve_radius(&q(fam, NormKind::Sqrt, 0.0)).unwrap().radius;
        assert!((rw - rs * rs).abs() < 1e-9);
    }

    #[test]
    fn power_rejects_mu_minus_half() {
        let fam = FamilySpec::lommel(-0.5).unwrap();
        assert!(RadiusQuery::new(fam, NormKind::Power, 0.0).is_err());
        assert!(RadiusQuery::new(fam, NormKind::Shift, 0.0).is_ok());
    }
}
