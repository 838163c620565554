//! Counts the components of H_{n,eps} for n = 1..6 on a 1600 x 1600 grid.
//!
//! cargo run --release --example component_count

use leviflat::foliation::{count_components, eps_threshold, HalfPlaneFamily};
use leviflat::geometry::PolarGrid;

fn main() -> leviflat::Result<()> {
    let grid = PolarGrid::log_polar(1e-4, 0.9, 1600, 1600)?;
    println!("n  eps_threshold  components(eps=0.02, 0.05, 0.1)");
    for n in 1..=6 {
        let family = HalfPlaneFamily::new(n)?;
        let counts = [0.02, 0.05, 0.1]
            .iter()
            .map(|&eps| count_components(&family, eps, 0.9, &grid))
            .collect::<leviflat::Result<Vec<_>>>()?;
        println!("{n}  {:.6}       {:?}", eps_threshold(n)?, counts);
    }
    Ok(())
}
