//! Writes the sampled region for n = 3 as PGM masks and an SVG overlay of
//! the sector rays into `target/region_mask/`.

use std::fs;

use leviflat::foliation::{labelled_region, sector_overlay_svg, HalfPlaneFamily};
use leviflat::geometry::{PgmMode, PolarGrid};

fn main() -> leviflat::Result<()> {
    let dir = "target/region_mask";
    fs::create_dir_all(dir)?;
    let family = HalfPlaneFamily::new(3)?;
    let grid = PolarGrid::log_polar(1e-4, 0.9, 400, 400)?;
    let (mask, count) = labelled_region(&family, 0.05, 0.9, &grid)?;
    mask.write_pgm(
        fs::File::create(format!("{dir}/mask.pgm"))?,
        PgmMode::Occupancy,
    )?;
    mask.write_pgm(
        fs::File::create(format!("{dir}/labels.pgm"))?,
        PgmMode::Labels,
    )?;
    fs::write(
        format!("{dir}/sectors.svg"),
        sector_overlay_svg(&mask, &family),
    )?;
    println!(
        "{count} components, {} occupied cells; wrote {dir}/{{mask,labels}}.pgm and sectors.svg",
        mask.occupied_count()
    );
    Ok(())
}
