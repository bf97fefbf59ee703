//! Sweep the order parameter and the convexity order alpha, printing one CSV
//! row per grid cell — the library-level equivalent of the `sweep`
//! subcommand.
//!
//! ```sh
//! cargo run --example parameter_sweep
//! ```

use convexity_radii::radius::{solve_radius, RadiusQuery};
use convexity_radii::{FamilySpec, NormKind};

fn main() {
    println!("family,param,norm,alpha,radius,upper_endpoint,residual,status");
    for i in 1..=9 {
        let mu = 0.1 * i as f64;
        for j in 0..5 {
            let alpha = 0.2 * j as f64;
            let row = FamilySpec::lommel(mu)
                .and_then(|fam| RadiusQuery::new(fam, NormKind::Shift, alpha))
                .and_then(|query| solve_radius(&query));
            match row {
                Ok(r) => println!(
                    "lommel,{mu:.1},g,{alpha:.1},{:.17e},{:.17e},{:.3e},ok",
                    r.radius, r.upper_endpoint, r.residual
                ),
                Err(e) => println!("lommel,{mu:.1},g,{alpha:.1},,,,error: {e}"),
            }
        }
    }
}
