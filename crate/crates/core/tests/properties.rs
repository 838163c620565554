use std::f64::consts::{PI, SQRT_2, TAU};

use num_complex::Complex64;
use proptest::prelude::*;

use leviflat::foliation::{
    build_region, h_membership, leaf_center_intersection, psi, HalfPlaneFamily,
};
use leviflat::geometry::{
    flood_label, make_circle, wrap_angle, Cutoff, LogComplex, PolarGrid, RegionMask,
};
use leviflat::plemelj::{
    cauchy_transform, extension_classify, morera_loop_integral, BoundaryFunction,
};
use leviflat::series::{eval_a, eval_b};

/// Component count by union-find, independent of the BFS labeller.
fn union_find_count(rows: usize, cols: usize, occ: &[bool]) -> usize {
    let mut parent: Vec<usize> = (0..occ.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..rows {
        for j in 0..cols {
            let k = i * cols + j;
            if !occ[k] {
                continue;
            }
            for nb in [
                (i + 1 < rows).then(|| k + cols),
                (j + 1 < cols).then(|| k + 1),
            ]
            .into_iter()
            .flatten()
            {
                if occ[nb] {
                    let (a, b) = (find(&mut parent, k), find(&mut parent, nb));
                    parent[a] = b;
                }
            }
        }
    }
    (0..occ.len())
        .filter(|&k| occ[k] && find(&mut parent, k) == k)
        .count()
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn wrapped_angles_stay_in_range(x in -1e4..1e4f64) {
        let w = wrap_angle(x);
        prop_assert!(w > -PI && w <= PI);
        prop_assert!(((x - w) / TAU - ((x - w) / TAU).round()).abs() < 1e-9);
    }

    #[test]
    fn log_product_matches_complex_product(a in complex(), b in complex()) {
        prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3);
        let p = (LogComplex::from_complex(a) * LogComplex::from_complex(b)).to_complex().unwrap();
        prop_assert!((p - a * b).norm() <= 1e-13 * (a * b).norm());
        let s = LogComplex::from_complex(a).add(&LogComplex::from_complex(b)).to_complex().unwrap();
        prop_assert!((s - (a + b)).norm() <= 1e-13 * (a.norm() + b.norm()));
    }

    #[test]
    fn a_on_the_real_axis(u in -1e3..1e3f64, n in 1u32..=12) {
        let w = Complex64::new(u, 0.0);
        let a = eval_a(n, w).unwrap().to_complex().unwrap();
        let mirror = eval_a(n, -w).unwrap().to_complex().unwrap();
        prop_assert!(a.norm() <= 1.0 + 1e-15);
        prop_assert!((mirror - a.conj()).norm() <= 1e-12 * a.norm().max(1e-300));
    }

    #[test]
    fn b_on_the_real_axis(u in -1e3..1e3f64, n in 1u32..=12) {
        let b = eval_b(n, Complex64::new(u, 0.0)).unwrap().to_complex().unwrap();
        prop_assert_eq!(b.im, 0.0);
        prop_assert!(b.re.abs() <= SQRT_2 + 1e-15);
    }

    #[test]
    fn a_blows_up_on_the_imaginary_axis(v in 0.05..0.95f64, n in 1u32..=12) {
        // |a_n(iv)| = (1 - v)^{-n^2}
        let a = eval_a(n, Complex64::new(0.0, v)).unwrap();
        let want = -((n * n) as f64) * (1.0 - v).ln();
        prop_assert!((a.logmag() - want).abs() <= 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn membership_has_period_pi_over_n(n in 1u32..=6, t in 1e-3..0.5f64, frac in 0.01..0.99f64) {
        let f = HalfPlaneFamily::new(n).unwrap();
        let period = PI / n as f64;
        let theta = frac * period;
        let base = h_membership(&f, 0.05, 0.9, t, theta);
        for k in 1..n {
            prop_assert_eq!(base, h_membership(&f, 0.05, 0.9, t, theta + k as f64 * period));
        }
    }

    #[test]
    fn membership_grows_with_eps(n in 1u32..=6, t in 1e-3..0.5f64, theta in 0.001..3.1f64, e1 in 1e-3..0.5f64, e2 in 1e-3..0.5f64) {
        let f = HalfPlaneFamily::new(n).unwrap();
        let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
        prop_assert!(!h_membership(&f, lo, 0.9, t, theta) || h_membership(&f, hi, 0.9, t, theta));
    }

    #[test]
    fn center_intersection_lands_on_the_center_leaf(n in 1u32..=3, t in 0.3..0.9f64, theta in 0.05..3.09f64) {
        let f = HalfPlaneFamily::new(n).unwrap();
        let eta = Complex64::from_polar(t, theta);
        let z = leaf_center_intersection(&f, eta).unwrap();
        prop_assume!(z.logmag() > -600.0 && z.modulus() < 1e8);
        let (_, w) = psi(&f, z.to_complex().unwrap(), eta).unwrap();
        prop_assert!(w.norm() <= 1e-10 * t.max(z.modulus()));
    }

    #[test]
    fn labeller_matches_union_find(rows in 1usize..12, cols in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 144)) {
        let occ: Vec<bool> = bits[..rows * cols].to_vec();
        let grid = PolarGrid::log_polar(1e-3, 1.0, rows, cols).unwrap();
        let (labelled, count) = flood_label(&RegionMask::new(grid, occ.clone()).unwrap());
        prop_assert_eq!(count, union_find_count(rows, cols, &occ));
        prop_assert_eq!(labelled.max_label() as usize, count);
    }

    #[test]
    fn transform_is_linear(a in complex(), z in complex()) {
        let curve = make_circle(1.0, 128).unwrap();
        prop_assume!((z.norm() - 1.0).abs() > 0.2);
        let f = BoundaryFunction::from_fn(&curve, |s| s * s).unwrap();
        let g = BoundaryFunction::from_fn(&curve, |s| s.exp()).unwrap();
        let h = BoundaryFunction::from_fn(&curve, |s| a * s * s + s.exp()).unwrap();
        let lhs = cauchy_transform(&curve, &Cutoff::One, &h, z).unwrap();
        let rhs = a * cauchy_transform(&curve, &Cutoff::One, &f, z).unwrap() + cauchy_transform(&curve, &Cutoff::One, &g, z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }

    #[test]
    fn conjugation_swaps_sides(c0 in complex(), c1 in complex(), c2 in complex()) {
        prop_assume!(c1.norm() > 0.1 && c2.norm() > 0.1);
        let samples: Vec<Complex64> = (0..64)
            .map(|j| {
                let e = Complex64::from_polar(1.0, TAU * j as f64 / 64.0);
                c0 + c1 * e + c2 * e * e
            })
            .collect();
        let conj: Vec<Complex64> = samples.iter().map(|s| s.conj()).collect();
        let v = extension_classify(&samples, 1e-9).unwrap();
        let w = extension_classify(&conj, 1e-9).unwrap();
        prop_assert_eq!(v.token(), "inside_only");
        prop_assert_eq!(w.token(), "outside_only");
    }

    #[test]
    fn morera_of_conj_scales_with_area(r in 0.1..4.0f64) {
        let v = morera_loop_integral(|c: Complex64| c.conj(), &make_circle(r, 128).unwrap()).unwrap();
        prop_assert!((v - TAU * r * r).abs() <= 1e-12 * TAU * r * r);
    }
}

#[test]
fn region_mask_is_reproducible() {
    let grid = PolarGrid::log_polar(1e-4, 0.9, 300, 300).unwrap();
    let f = HalfPlaneFamily::new(3).unwrap();
    let a = build_region(&f, 0.05, 0.9, &grid).unwrap();
    let b = build_region(&f, 0.05, 0.9, &grid).unwrap();
    assert_eq!(a, b);
}
