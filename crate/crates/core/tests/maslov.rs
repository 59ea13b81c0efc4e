use diskgw::maslov::{maslov_index, FrameLoop};
use diskgw::moduli::riemann_roch_index;
use num_complex::Complex;
use proptest::prelude::*;

/// `e^{i k theta / 2}` on the diagonal, one entry per winding `k`.
fn diagonal_loop(windings: &[i32], count: usize) -> FrameLoop {
    let n = windings.len();
    let ks = windings.to_vec();
    FrameLoop::from_fn(n, count, move |t| {
        let mut m = vec![Complex::new(0.0, 0.0); n * n];
        for (i, k) in ks.iter().enumerate() {
            m[i * n + i] = Complex::from_polar(1.0, *k as f64 * t / 2.0);
        }
        m
    })
    .unwrap()
}

#[test]
fn disk_tangent_frame_is_stable_under_refinement() {
    for count in [12, 24, 48, 96] {
        assert_eq!(maslov_index(&FrameLoop::disk_tangent(count).unwrap()), Ok(2));
    }
}

#[test]
fn tangent_plus_normal_splitting() {
    // tangent winds +2, a rank-two normal bundle winding -2 in total
    let s = 40;
    let tangent = FrameLoop::disk_tangent(s).unwrap();
    let normal = diagonal_loop(&[-1, -1], s);
    let total = tangent.direct_sum(&normal).unwrap();
    let (t, n, m) = (
        maslov_index(&tangent).unwrap(),
        maslov_index(&normal).unwrap(),
        maslov_index(&total).unwrap(),
    );
    assert_eq!((t, n, m), (2, -2, 0));
    assert_eq!(
        (
            riemann_roch_index(1, 1, t),
            riemann_roch_index(2, 1, n),
            riemann_roch_index(3, 1, m)
        ),
        (3, 0, 3)
    );
}

#[test]
fn json_roundtrip_preserves_index() {
    let l = diagonal_loop(&[3, -1], 30);
    let back = FrameLoop::from_json(&serde_json::from_str(&l.to_json().to_string()).unwrap()).unwrap();
    assert_eq!(back, l);
    assert_eq!(maslov_index(&back), Ok(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn index_is_sum_of_windings(ks in proptest::collection::vec(-3i32..=3, 1..4)) {
        // det^2 has winding sum(ks); 8 samples per unit keeps steps below pi
        let count = 8 * (ks.iter().map(|k| k.abs()).sum::<i32>() as usize + 1);
        let l = diagonal_loop(&ks, count);
        prop_assert_eq!(maslov_index(&l).unwrap(), ks.iter().sum::<i32>() as i64);
    }

    #[test]
    fn additive_under_direct_sum(a in proptest::collection::vec(-3i32..=3, 1..3), b in proptest::collection::vec(-3i32..=3, 1..3)) {
        let count = 8 * (a.iter().chain(&b).map(|k| k.abs()).sum::<i32>() as usize + 1);
        let (la, lb) = (diagonal_loop(&a, count), diagonal_loop(&b, count));
        let sum = la.direct_sum(&lb).unwrap();
        prop_assert_eq!(maslov_index(&sum).unwrap(), maslov_index(&la).unwrap() + maslov_index(&lb).unwrap());
    }

    #[test]
    fn refinement_invariant(k in -4i32..=4, base in 10usize..20) {
        let i1 = maslov_index(&diagonal_loop(&[k], base)).unwrap();
        let i2 = maslov_index(&diagonal_loop(&[k], 2 * base)).unwrap();
        prop_assert_eq!(i1, k as i64);
        prop_assert_eq!(i1, i2);
    }
}
