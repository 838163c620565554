//! Reflecting functions that are real on the real axis into the lower half-plane.

use num_complex::Complex64;

use leviflat::series::schwarz_reflect;

fn main() {
    let z = Complex64::new(0.3, -0.7);
    let cos = schwarz_reflect(|w: Complex64| w.cos(), z).unwrap();
    println!("reflected cos at {z}: {cos:.12} (cos z = {:.12})", z.cos());
    match schwarz_reflect(|w: Complex64| Complex64::i() * w.exp(), z) {
        Ok(v) => println!("unexpected {v}"),
        Err(e) => println!("i e^w: {e}"),
    }
}
