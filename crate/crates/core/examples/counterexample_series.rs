//! The coefficients a_n, b_n: bounded on the real axis, exploding at w = iv.

use num_complex::Complex64;

use leviflat::series::{radius_estimate, radius_sweep, CoefficientFamily, B_REAL_AXIS_BOUND};

fn main() -> leviflat::Result<()> {
    let a = CoefficientFamily::counterexample_a();
    let b = CoefficientFamily::counterexample_b();

    let mut worst = (0.0f64, 0.0f64);
    for k in 0..=2000 {
        let u = -10.0 + 0.01 * k as f64;
        for n in 1..=12 {
            let w = Complex64::new(u, 0.0);
            worst.0 = worst.0.max(a.eval(n, w)?.modulus());
            worst.1 = worst.1.max(b.eval(n, w)?.modulus());
        }
    }
    println!(
        "real axis, n <= 12: max|a_n| = {:.6}, max|b_n| = {:.6} (bound {B_REAL_AXIS_BOUND:.6})",
        worst.0, worst.1
    );

    let w = Complex64::new(0.0, 0.5);
    for row in radius_sweep(&a, w, 8)? {
        println!("|a_{}(0.5i)| = exp({:.4})", row.n, row.logmag);
    }
    for n_max in [8, 12, 16, 20, 24] {
        println!(
            "radius estimate at 0.5i, N = {n_max:2}: {:.3e}",
            radius_estimate(&a, w, n_max)?
        );
    }
    match a.eval(3, Complex64::i()) {
        Err(e) => println!("a_3(i): {e}"),
        Ok(v) => println!("a_3(i) = {v}"),
    }
    Ok(())
}
