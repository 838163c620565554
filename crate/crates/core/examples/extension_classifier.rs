//! Which side of the unit circle a boundary function extends to.

use std::f64::consts::TAU;

use num_complex::Complex64;

use leviflat::plemelj::extension_classify;

type Case = (&'static str, fn(f64) -> Complex64);

fn main() -> leviflat::Result<()> {
    let samples = |f: fn(f64) -> Complex64| -> Vec<Complex64> {
        (0..128).map(|j| f(TAU * j as f64 / 128.0)).collect()
    };
    let cases: [Case; 6] = [
        ("e^{i theta}", |t| Complex64::from_polar(1.0, t)),
        ("e^{-i theta}", |t| Complex64::from_polar(1.0, -t)),
        ("constant", |_| Complex64::new(2.5, 0.0)),
        ("2 cos theta", |t| Complex64::new(2.0 * t.cos(), 0.0)),
        ("exp(e^{i theta})", |t| Complex64::from_polar(1.0, t).exp()),
        ("1/(e^{i theta} - 2)", |t| {
            1.0 / (Complex64::from_polar(1.0, t) - 2.0)
        }),
    ];
    for (name, f) in cases {
        println!("{name:>22}: {}", extension_classify(&samples(f), 1e-9)?);
    }
    Ok(())
}
