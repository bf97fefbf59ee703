//! Solve the radius-of-convexity equation for each normalization and show
//! the curvature by both evaluation paths at the found root.
//!
//! ```sh
//! cargo run --example convexity_radius
//! ```

use convexity_radii::radius::{curvature, solve_radius, CurvatureMethod, RadiusQuery};
use convexity_radii::{FamilySpec, NormKind};

fn main() -> convexity_radii::Result<()> {
    let cases = [
        (FamilySpec::lommel(0.5)?, NormKind::Power, 0.0),
        (FamilySpec::lommel(0.5)?, NormKind::Shift, 0.3),
        (FamilySpec::lommel(-0.25)?, NormKind::Shift, 0.0),
        (FamilySpec::struve(0.5)?, NormKind::Shift, 0.0),
        (FamilySpec::struve(0.5)?, NormKind::Sqrt, 0.0),
        (FamilySpec::struve(0.25)?, NormKind::Power, 0.5),
    ];
    for (fam, norm, alpha) in cases {
        let query = RadiusQuery::new(fam, norm, alpha)?;
        let result = solve_radius(&query)?;
        let direct = curvature(&query, result.radius, CurvatureMethod::Direct)?;
        let spectral = curvature(&query, result.radius, CurvatureMethod::Spectral)?;
        println!(
            "{:<7} param {:+.2} {:?}  alpha {:.1}: radius = {:.15} \
             (endpoint {:.6}, residual {:.1e}, K_direct {:+.12}, K_spectral {:+.12})",
            fam.name(),
            fam.param(),
            norm,
            alpha,
            result.radius,
            result.upper_endpoint,
            result.residual,
            direct,
            spectral
        );
    }
    Ok(())
}
