//! Loop integrals: zero for holomorphic integrands, 2 pi r^2 for conj(c).

use num_complex::Complex64;

use leviflat::geometry::make_circle;
use leviflat::plemelj::morera_loop_integral;

fn main() -> leviflat::Result<()> {
    for r in [0.5, 1.0, 2.0] {
        let loop_curve = make_circle(r, 256)?;
        let square = morera_loop_integral(|c| c * c, &loop_curve)?;
        let conj = morera_loop_integral(|c: Complex64| c.conj(), &loop_curve)?;
        println!(
            "r = {r}: |int c^2| = {square:.2e}, |int conj c| = {conj:.12} (2 pi r^2 = {:.12})",
            std::f64::consts::TAU * r * r
        );
    }
    Ok(())
}
