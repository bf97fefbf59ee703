//! Positive zeros of the normalized even parts F and E, with interlacing
//! certificates.
//!
//! Both families have the same shape: F(z) = Σ c_n z^{2n} with F(0) = 1 and
//! (on the validated parameter ranges) only real zeros, all simple — with one
//! exception.  At ν = 1/2 the Struve function degenerates to
//! √(2/(πx))·(1−cos x), whose zeros 2πn are **double**: F touches zero
//! without a sign change there, so a plain sign scan misses them.  The scan
//! therefore also watches E = λF + zF′; a sign change of E at which F dips to
//! numerical zero is recorded as a multiplicity-2 zero (and it is then a
//! simple zero of E, so Newton still converges cleanly).

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::specfun::{e_value, e_with_deriv, f_value, f_with_deriv};
use serde::Serialize;

/// One refined zero.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ZeroRecord {
    /// 1-based index in increasing order.
    pub index: usize,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub value: f64,
    /// |series(value)| relative to the series magnitude at the bracket
    /// endpoints; a healthy refinement lands far below 1e-10.
    pub residual: f64,
    /// 1 for an ordinary zero; 2 for the touching zeros at ν = 1/2.
    pub multiplicity: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroTable {
    pub family: FamilySpec,
    /// 0 for zeros of the function's even part F, 1 for the derivative part E.
    pub derivative_order: u8,
    pub records: Vec<ZeroRecord>,
}

/// Proof record that the derivative zeros strictly separate the function zeros.
#[derive(Clone, Debug, Serialize)]
pub struct InterlacingCertificate {
    pub family: FamilySpec,
    pub count: usize,
    /// Per interval (ξ_{n-1}, ξ_n): distance from the derivative zero to the
    /// nearer endpoint.  All strictly positive ⇔ interlacing holds.
    pub margins: Vec<f64>,
}

const SCAN_STEP: f64 = 0.25;
const MAX_NEWTON: usize = 3;

fn target_tol(x: f64) -> f64 {
    1e-13 * (1.0 + x.abs())
}

/// Bisect f on a sign-change bracket, then polish with bracket-guarded Newton.
fn refine<F, G>(f: F, fd: G, mut lo: f64, mut hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<(f64, f64)>,
{
    let mut flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketFailure { lo, hi });
    }
    while hi - lo > target_tol(0.5 * (lo + hi)) {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON {
        let (v, d) = fd(x)?;
        if d == 0.0 {
            break;
        }
        let step = v / d;
        let x_new = x - step;
        if !(x_new > lo && x_new < hi) {
            break;
        }
        x = x_new;
        if step.abs() < 1e-16 * (1.0 + x.abs()) {
            break;
        }
    }
    Ok(x)
}

/// First `count` positive zeros of the even part F.
pub fn function_zeros(fam: &FamilySpec, count: usize) -> Result<ZeroTable> {
    // zeros are asymptotically pi-spaced, except nu = 1/2 where the touching
    // zeros sit 2*pi apart; the loop exits as soon as `count` are found
    let limit = (count as f64 + 3.0) * 2.0 * std::f64::consts::PI + 10.0;
    let mut records = Vec::with_capacity(count);
    let mut z_prev = SCAN_STEP * 0.25;
    let mut f_prev = f_value(fam, z_prev)?;
    let mut e_prev = e_value(fam, z_prev)?;
    let mut amp = f_prev.abs().max(1.0);
    let mut z = z_prev + SCAN_STEP;
    while records.len() < count && z <= limit {
        let f_cur = f_value(fam, z)?;
        let e_cur = e_value(fam, z)?;
        amp = amp.max(f_cur.abs());
        if f_prev.signum() != f_cur.signum() {
            // ordinary simple zero
            let x = refine(|t| f_value(fam, t), |t| f_with_deriv(fam, t), z_prev, z)?;
            let scale = f_prev.abs().max(f_cur.abs());
            records.push(ZeroRecord {
                index: records.len() + 1,
                bracket_lo: z_prev,
                bracket_hi: z,
                value: x,
                residual: f_value(fam, x)?.abs() / scale,
                multiplicity: 1,
            });
        } else if e_prev.signum() != e_cur.signum() {
            // extremum of F inside the step: a touching (double) zero if F
            // vanishes there too
            let x = refine(|t| e_value(fam, t), |t| e_with_deriv(fam, t), z_prev, z)?;
            let fx = f_value(fam, x)?;
            if fx.abs() < 1e-8 * amp {
                let scale = e_prev.abs().max(e_cur.abs());
                records.push(ZeroRecord {
                    index: records.len() + 1,
                    bracket_lo: z_prev,
                    bracket_hi: z,
                    value: x,
                    residual: e_value(fam, x)?.abs() / scale,
                    multiplicity: 2,
                });
            }
        }
        z_prev = z;
        f_prev = f_cur;
        e_prev = e_cur;
        z += SCAN_STEP;
    }
    if records.len() < count {
        return Err(Error::ScanExhausted {
            found: records.len(),
            needed: count,
        });
    }
    Ok(ZeroTable {
        family: *fam,
        derivative_order: 0,
        records,
    })
}

/// One zero of E strictly inside each interlacing interval of the base table.
///
/// For λ > 0 the un-normalized function vanishes at the origin, so Rolle puts
/// a derivative zero in every (ξ_{n-1}, ξ_n) with ξ_0 = 0.  For λ ≤ 0 (Lommel
/// with μ ≤ −1/2) it does not: the function is monotone down to ξ_1 and the
/// extrema sit in (ξ_n, ξ_{n+1}), so the table holds one fewer record than
/// the base.
///
/// At ν = 1/2 the interval endpoints themselves are zeros of E (the base
/// zeros are double), so the brackets are inset by a small ε before the
/// sign test.
pub fn derivative_zeros(fam: &FamilySpec, base: &ZeroTable) -> Result<ZeroTable> {
    let endpoints: Vec<f64> = if fam.lambda() > 0.0 {
        std::iter::once(0.0)
            .chain(base.records.iter().map(|r| r.value))
            .collect()
    } else {
        base.records.iter().map(|r| r.value).collect()
    };
    let mut records = Vec::with_capacity(endpoints.len().saturating_sub(1));
    for pair in endpoints.windows(2) {
        let (lo_end, hi_end) = (pair[0], pair[1]);
        let width = hi_end - lo_end;
        let eps = (1e-6 * width).max(1e-9);
        let mut lo = lo_end + eps;
        let mut hi = hi_end - eps;
        let mut flo = e_value(fam, lo)?;
        let mut fhi = e_value(fam, hi)?;
        // widen the inset if an endpoint lands exactly on a flat spot
        let mut tries = 0;
        while flo.signum() == fhi.signum() && tries < 12 {
            lo = lo_end + eps * 2f64.powi(tries + 1);
            hi = hi_end - eps * 2f64.powi(tries + 1);
            flo = e_value(fam, lo)?;
            fhi = e_value(fam, hi)?;
            tries += 1;
        }
        if flo.signum() == fhi.signum() {
            return Err(Error::BracketFailure { lo, hi });
        }
        let x = refine(|t| e_value(fam, t), |t| e_with_deriv(fam, t), lo, hi)?;
        let scale = flo.abs().max(fhi.abs());
        records.push(ZeroRecord {
            index: records.len() + 1,
            bracket_lo: lo,
            bracket_hi: hi,
            value: x,
            residual: e_value(fam, x)?.abs() / scale,
            multiplicity: 1,
        });
    }
    Ok(ZeroTable {
        family: *fam,
        derivative_order: 1,
        records,
    })
}

/// Check that each derivative zero sits strictly inside its interlacing
/// interval: (ξ_{n-1}, ξ_n) for λ > 0, (ξ_n, ξ_{n+1}) for λ ≤ 0.
pub fn interlacing_certificate(
    fam: &FamilySpec,
    function_table: &ZeroTable,
    derivative_table: &ZeroTable,
) -> Result<InterlacingCertificate> {
    let rolle_at_origin = fam.lambda() > 0.0;
    let n = derivative_table.records.len().min(if rolle_at_origin {
        function_table.records.len()
    } else {
        function_table.records.len().saturating_sub(1)
    });
    let mut margins = Vec::with_capacity(n);
    for i in 0..n {
        let (lo, hi) = if rolle_at_origin {
            (
                if i == 0 {
                    0.0
                } else {
                    function_table.records[i - 1].value
                },
                function_table.records[i].value,
            )
        } else {
            (
                function_table.records[i].value,
                function_table.records[i + 1].value,
            )
        };
        let d = derivative_table.records[i].value;
        let margin = (d - lo).min(hi - d);
        if !(margin > 0.0) {
            return Err(Error::DomainError(format!(
                "interlacing violated at index {}: derivative zero {d} not inside ({lo}, {hi})",
                i + 1
            )));
        }
        margins.push(margin);
    }
    Ok(InterlacingCertificate {
        family: *fam,
        count: n,
        margins,
    })
}

/// Pole multiset (value, multiplicity-expanded) for the spectral expansion of
/// z F′/F: double zeros of F enter twice.
pub(crate) fn function_pole_multiset(table: &ZeroTable) -> Vec<f64> {
    let mut out = Vec::new();
    for r in &table.records {
        for _ in 0..r.multiplicity {
            out.push(r.value);
        }
    }
    out
}

/// Pole multiset for z E′/E: the per-interval derivative zeros, plus — when
/// the base table has double zeros — those base zeros themselves (E vanishes
/// there too).
pub(crate) fn derivative_pole_multiset(base: &ZeroTable, deriv: &ZeroTable) -> Vec<f64> {
    let mut out: Vec<f64> = deriv.records.iter().map(|r| r.value).collect();
    for r in &base.records {
        if r.multiplicity >= 2 {
            out.push(r.value);
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}
