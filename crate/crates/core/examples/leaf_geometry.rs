//! The complex lines psi_n(., eta) and where they cross the center leaf.

use num_complex::Complex64;

use leviflat::foliation::{g_n, leaf_center_intersection, psi, HalfPlaneFamily};

fn main() -> leviflat::Result<()> {
    let family = HalfPlaneFamily::new(1)?;
    for eta in [
        Complex64::from_polar(0.5, std::f64::consts::FRAC_PI_4),
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.1),
        Complex64::new(0.05, 0.01),
    ] {
        let g = g_n(&family, eta)?;
        let z = leaf_center_intersection(&family, eta)?;
        print!(
            "eta = {eta:.3}: log|g| = {:10.3}, |zeta*| = exp({:.3})",
            g.logmag(),
            z.logmag()
        );
        match z.to_complex().and_then(|z| psi(&family, z, eta)) {
            Ok((_, w)) => println!(", w(zeta*) = {w:.1e}"),
            Err(e) => println!(", {e}"),
        }
    }
    println!(
        "g_1(0) -> {:?}",
        g_n(&family, Complex64::new(0.0, 0.0)).unwrap_err()
    );
    Ok(())
}
