//! Sup norms of a_k on the real segment [-5, 5] against a set W in the
//! upper half-plane, and the fitted growth constant.

use num_complex::Complex64;

use leviflat::series::{growth_fit, CoefficientFamily, NormTable};

fn main() -> leviflat::Result<()> {
    let gamma: Vec<Complex64> = (0..=200)
        .map(|k| Complex64::new(-5.0 + 0.05 * k as f64, 0.0))
        .collect();
    let w_set = [
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.25),
        Complex64::new(0.0, 0.1),
    ];
    for (name, family) in [
        ("a_k", CoefficientFamily::counterexample_a()),
        ("0.5^k", CoefficientFamily::geometric(0.5)),
    ] {
        let table = NormTable::from_samples(&family, &gamma, &w_set, 10)?;
        let fit = growth_fit(&table)?;
        println!("{name}: C ~ {:.4e}, trend {}", fit.c_estimate, fit.trend);
    }
    let table = NormTable::from_samples(&CoefficientFamily::counterexample_a(), &gamma, &w_set, 6)?;
    table.write_csv(std::io::stdout().lock())?;
    Ok(())
}
