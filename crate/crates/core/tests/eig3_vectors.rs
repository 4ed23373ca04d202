mod common;

use std::f64::consts::FRAC_PI_2;

use common::{conjugated, random_angles, rng, unit};
use proptest::prelude::*;
use symdiag::eig3::{compute_v, compute_w, f_vectors, g_vectors};
use symdiag::oracle::residuals;
use symdiag::{diagonalize3, Angles3, Branch};

fn descending_gapped() -> impl Strategy<Value = [f64; 3]> {
    (-2.0..2.0f64, 0.1..1.5f64, 0.1..1.5f64).prop_map(|(l3, g2, g1)| [l3 + g2 + g1, l3 + g2, l3])
}

const INNER: std::ops::Range<f64> = (-FRAC_PI_2 + 0.05)..(FRAC_PI_2 - 0.05);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn angles_round_trip(p1 in INNER, p2 in INNER, p3 in INNER, l in descending_gapped()) {
        let a = conjugated([p1, p2, p3], l);
        let dec = diagonalize3(&a);
        prop_assert_eq!(dec.branch(), Branch::Generic);
        let d = dec.angles().max_distance_mod_pi(&Angles3::new(p1, p2, p3));
        prop_assert!(d <= 1e-8, "{:?} vs {:?}", dec.angles(), (p1, p2, p3));
    }

    #[test]
    fn f_and_g_norms_agree(p1 in INNER, p2 in INNER, p3 in INNER, l in descending_gapped()) {
        let a = conjugated([p1, p2, p3], l);
        let (f1, f2) = f_vectors(&a);
        let (g1, g2) = g_vectors(&l, p2, p3, p2.cos().powi(2), p3.cos().powi(2));
        prop_assert!((f1.norm() - g1.norm()).abs() <= 1e-10);
        prop_assert!((f2.norm() - g2.norm()).abs() <= 1e-10);
    }

    #[test]
    fn squared_cosines_are_recovered(p1 in INNER, p2 in INNER, p3 in INNER, l in descending_gapped()) {
        let a = conjugated([p1, p2, p3], l);
        let v = compute_v(&a, &l).unwrap();
        let w = compute_w(&a, &l, v).unwrap();
        prop_assert!((v - p2.cos().powi(2)).abs() <= 1e-12);
        prop_assert!((w - p3.cos().powi(2)).abs() <= 1e-10);
    }
}

#[test]
fn quarter_turn_phi2_takes_w_bypass() {
    let mut r = rng(41);
    for _ in 0..1000 {
        let [p1, _, p3] = random_angles(&mut r);
        let l = [2.0 + unit(&mut r), 0.5 * unit(&mut r), -2.0 + unit(&mut r)];
        let a = conjugated([p1, FRAC_PI_2, p3], l);
        let v = compute_v(&a, &l).unwrap();
        assert!(v <= 1e-12, "{v}");
        assert_eq!(compute_w(&a, &l, 0.0), Ok(1.0));
        let dec = diagonalize3(&a);
        assert!(residuals(&a, &dec).recon_rel <= 1e-10, "{:?}", dec.report());
    }
}

#[test]
fn degenerate_angles_reconstruct() {
    // φ2 or φ3 on 0 or π/2, where a sign or φ1 estimate is undetermined
    let mut r = rng(42);
    for special in [0.0, FRAC_PI_2] {
        for slot in [1, 2] {
            for _ in 0..1000 {
                let mut t = random_angles(&mut r);
                t[slot] = special;
                let l = [1.5 + unit(&mut r), 0.3 * unit(&mut r), -1.5 + unit(&mut r)];
                let a = conjugated(t, l);
                let dec = diagonalize3(&a);
                let res = residuals(&a, &dec);
                assert!(res.recon_rel <= 1e-10, "{t:?} {l:?}: {res:?}");
                assert!(res.ortho <= 1e-12);
            }
        }
    }
}

#[test]
fn report_lists_all_four_combinations() {
    let mut r = rng(43);
    for _ in 0..100 {
        let t = random_angles(&mut r);
        let a = conjugated(t, [2.0, 0.5, -1.0]);
        let dec = diagonalize3(&a);
        if dec.branch() == Branch::Generic {
            let c = dec.report().candidates();
            assert_eq!(c.len(), 4);
            assert_eq!(
                dec.report().selected_signs(),
                c[dec.report().selected].signs
            );
        }
    }
}
