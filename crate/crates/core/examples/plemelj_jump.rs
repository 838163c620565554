//! Jump of the Cauchy transform across the unit circle and a real arc with
//! a smooth cutoff, with a convergence table over node counts.

use num_complex::Complex64;

use leviflat::geometry::{make_circle, make_segment, Cutoff, CutoffWindow};
use leviflat::plemelj::{
    circle_test_params, jump_residual, plemelj_boundary_values, BoundaryFunction,
};

type Case = (&'static str, fn(Complex64) -> Complex64);

fn main() -> leviflat::Result<()> {
    let cases: [Case; 3] = [
        ("zeta^2", |z| z * z),
        ("1/zeta", |z| 1.0 / z),
        ("exp(zeta)", |z| z.exp()),
    ];
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "nodes", cases[0].0, cases[1].0, cases[2].0
    );
    for nodes in [64, 128, 256, 512, 1024, 2048, 4096] {
        let curve = make_circle(1.0, nodes)?;
        print!("{nodes:>6}");
        for (_, f) in cases {
            let g = BoundaryFunction::from_fn(&curve, f)?;
            let r = jump_residual(&curve, &Cutoff::One, &g, &circle_test_params(32))?;
            print!(" {:>12.3e}", r.max_residual());
        }
        println!();
    }

    let curve = make_circle(1.0, 256)?;
    let g = BoundaryFunction::from_fn(&curve, |z| 1.0 / z)?;
    let (plus, minus) = plemelj_boundary_values(&curve, &Cutoff::One, &g, 1.0)?;
    println!("1/zeta at theta = 1: F+ = {plus:.3e}, F- = {minus:.6}");

    let arc = make_segment(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), 8192)?;
    let chi = Cutoff::Window(CutoffWindow::new(0.0, 0.4, 0.8)?);
    let one = BoundaryFunction::from_fn(&arc, |_| Complex64::new(1.0, 0.0))?;
    let r = jump_residual(&arc, &chi, &one, &[-0.3, -0.1, 0.0, 0.2, 0.35])?;
    println!(
        "arc with bump, 8192 nodes: plateau residual {:.3e}",
        r.max_residual()
    );
    Ok(())
}
