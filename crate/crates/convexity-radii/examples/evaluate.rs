//! Evaluate the Lommel and Struve functions and their first two derivatives,
//! with the truncation bound each evaluation carries.
//!
//! ```sh
//! cargo run --example evaluate
//! ```

use convexity_radii::specfun::{eval_lommel, eval_phi_k, eval_struve};

fn main() -> convexity_radii::Result<()> {
    let mu = 0.25;
    println!("s_(mu-1/2,1/2) at mu = {mu}:");
    for z in [0.5, 2.0, 10.0, 50.0] {
        let s = eval_lommel(mu, z, 0)?;
        let sp = eval_lommel(mu, z, 1)?;
        let spp = eval_lommel(mu, z, 2)?;
        println!(
            "  z = {z:>5}: s = {:+.15e} (err <= {:.1e}, {} terms), s' = {:+.15e}, s'' = {:+.15e}",
            s.value, s.abs_error_bound, s.terms_used, sp.value, spp.value
        );
    }

    let nu = -0.25;
    println!("H_nu at nu = {nu}:");
    for x in [0.5, 2.0, 10.0, 50.0] {
        let h = eval_struve(nu, x, 0)?;
        let hp = eval_struve(nu, x, 1)?;
        println!(
            "  x = {x:>5}: H = {:+.15e} (err <= {:.1e}), H' = {:+.15e}",
            h.value, h.abs_error_bound, hp.value
        );
    }

    println!("even factor phi_k (mu = 0.5):");
    for k in 0..2 {
        let v = eval_phi_k(0.5, k, 1.0)?;
        println!("  phi_{k}(1) = {:+.15e}", v.value);
    }
    Ok(())
}
