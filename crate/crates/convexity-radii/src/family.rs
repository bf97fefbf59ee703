//! Function families and normalizations.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Which special-function family, with its order parameter.
///
/// This is the single source of truth for the admissible parameter ranges:
/// Lommel requires μ ∈ (−1,1), μ ≠ 0; Struve requires |ν| ≤ 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "param", rename_all = "lowercase")]
pub enum FamilySpec {
    /// Lommel s_{μ−1/2,1/2}; the payload is μ.
    Lommel(f64),
    /// Struve **H**_ν; the payload is ν.
    Struve(f64),
}

impl FamilySpec {
    pub fn lommel(mu: f64) -> Result<FamilySpec> {
        if !(mu > -1.0 && mu < 1.0) || mu == 0.0 {
            return Err(Error::ParameterRange(format!(
                "Lommel requires mu in (-1,1), mu != 0; got {mu}"
            )));
        }
        Ok(FamilySpec::Lommel(mu))
    }

    pub fn struve(nu: f64) -> Result<FamilySpec> {
        if !(nu.abs() <= 0.5) {
            return Err(Error::ParameterRange(format!(
                "Struve requires |nu| <= 1/2; got {nu}"
            )));
        }
        Ok(FamilySpec::Struve(nu))
    }

    pub fn param(&self) -> f64 {
        match *self {
            FamilySpec::Lommel(mu) => mu,
            FamilySpec::Struve(nu) => nu,
        }
    }

    /// The exponent λ of the removable prefactor z^λ: μ+1/2 for Lommel,
    /// ν+1 for Struve.  This is also the value of z s′/s (resp. z **H**′/**H**)
    /// at z = 0 and the constant term of the spectral expansions.
    pub fn lambda(&self) -> f64 {
        match *self {
            FamilySpec::Lommel(mu) => mu + 0.5,
            FamilySpec::Struve(nu) => nu + 1.0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Lommel(_) => "lommel",
            FamilySpec::Struve(_) => "struve",
        }
    }
}

/// Which of the three normalizations of each family.
///
/// Power ↔ f_μ / u_ν (fractional-power normalization, exponent 1/λ),
/// Shift ↔ g_μ / v_ν (divide out z^{λ−1}),
/// Sqrt  ↔ h_μ / w_ν (divide out and substitute z → √z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    Power,
    Shift,
    Sqrt,
}

impl NormKind {
    /// The single-letter names used by the CLI: f/g/h for Lommel, u/v/w for Struve.
    pub fn letter(&self, family: &FamilySpec) -> char {
        match (family, self) {
            (FamilySpec::Lommel(_), NormKind::Power) => 'f',
            (FamilySpec::Lommel(_), NormKind::Shift) => 'g',
            (FamilySpec::Lommel(_), NormKind::Sqrt) => 'h',
            (FamilySpec::Struve(_), NormKind::Power) => 'u',
            (FamilySpec::Struve(_), NormKind::Shift) => 'v',
            (FamilySpec::Struve(_), NormKind::Sqrt) => 'w',
        }
    }

    pub fn from_letter(c: char) -> Option<(NormKind, &'static str)> {
        match c {
            'f' => Some((NormKind::Power, "lommel")),
            'g' => Some((NormKind::Shift, "lommel")),
            'h' => Some((NormKind::Sqrt, "lommel")),
            'u' => Some((NormKind::Power, "struve")),
            'v' => Some((NormKind::Shift, "struve")),
            'w' => Some((NormKind::Sqrt, "struve")),
            _ => None,
        }
    }
}
