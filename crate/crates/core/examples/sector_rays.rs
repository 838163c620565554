//! Checks that each component sits in one sector (mu_k, mu_{k+1}) and that
//! the rays alpha_k, beta_k meet H_{n,eps} exactly for t < eps.

use leviflat::foliation::{
    component_sectors, labelled_region, ray_profile, ray_violations, HalfPlaneFamily, SectorAngles,
};
use leviflat::geometry::PolarGrid;

fn main() -> leviflat::Result<()> {
    let n = 4;
    let eps = 0.05;
    let family = HalfPlaneFamily::new(n)?;
    let grid = PolarGrid::log_polar(1e-4, 0.9, 800, 800)?;
    let (mask, count) = labelled_region(&family, eps, 0.9, &grid)?;
    println!("n = {n}, eps = {eps}: {count} components");
    for (label, sector) in component_sectors(&mask, &family).iter().enumerate() {
        println!("  component {} -> sector {:?}", label + 1, sector);
    }
    let angles = SectorAngles::new(&family);
    for &mu in angles.mus.iter().skip(1) {
        let hits = ray_profile(&family, eps, 0.9, mu, grid.t_values())
            .iter()
            .filter(|&&b| b)
            .count();
        println!("  mu = {mu:.5}: {hits} occupied radii");
    }
    for &theta in angles.alphas.iter().chain(&angles.betas) {
        let bad = ray_violations(&family, eps, 0.9, theta, grid.t_values());
        println!(
            "  theta = {theta:.5}: {} deviations from t < eps",
            bad.len()
        );
    }
    Ok(())
}
