//! Tabulate positive zeros of the even series parts, their derivative-part
//! zeros, and the interlacing certificate tying the two tables together.
//!
//! ```sh
//! cargo run --example zero_tables
//! ```

use convexity_radii::zeros::{derivative_zeros, function_zeros, interlacing_certificate};
use convexity_radii::FamilySpec;

fn main() -> convexity_radii::Result<()> {
    for fam in [FamilySpec::lommel(0.25)?, FamilySpec::struve(0.5)?] {
        println!("{} (param {}):", fam.name(), fam.param());
        let table = function_zeros(&fam, 6)?;
        for rec in &table.records {
            println!(
                "  zero {}: {:.15} (multiplicity {}, residual {:.1e})",
                rec.index, rec.value, rec.multiplicity, rec.residual
            );
        }
        let deriv = derivative_zeros(&fam, &table)?;
        for rec in deriv.records.iter().take(5) {
            println!("  derivative zero {}: {:.15}", rec.index, rec.value);
        }
        let cert = interlacing_certificate(&fam, &table, &deriv)?;
        let worst = cert.margins.iter().cloned().fold(f64::INFINITY, f64::min);
        println!(
            "  interlacing certified on {} intervals, worst margin {:.3e}",
            cert.count, worst
        );
    }
    Ok(())
}
