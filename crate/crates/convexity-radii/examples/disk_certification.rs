//! Certify a solved radius on the boundary circle: sample the curvature's
//! real part on |z| = 0.99·radius, confirm it stays above alpha with the
//! minimum on the positive real axis, and confirm the bound is sharp just
//! outside the radius.
//!
//! ```sh
//! cargo run --example disk_certification
//! ```

use convexity_radii::radius::{solve_radius, RadiusQuery};
use convexity_radii::verify::{disk_certify, CERT_ANGLES, CERT_SHRINK};
use convexity_radii::{FamilySpec, NormKind};

fn main() -> convexity_radii::Result<()> {
    for (fam, norm, alpha) in [
        (FamilySpec::lommel(0.5)?, NormKind::Power, 0.0),
        (FamilySpec::struve(0.25)?, NormKind::Shift, 0.4),
        (FamilySpec::struve(0.5)?, NormKind::Sqrt, 0.0),
    ] {
        let query = RadiusQuery::new(fam, norm, alpha)?;
        let result = solve_radius(&query)?;
        let report = disk_certify(&query, &result, CERT_ANGLES, CERT_SHRINK)?;
        println!(
            "{} {:?} alpha {alpha}: radius {:.12} -> {}",
            fam.name(),
            norm,
            result.radius,
            if report.passed { "CERTIFIED" } else { "NOT certified" }
        );
        println!("  {}", report.details);
    }
    Ok(())
}
