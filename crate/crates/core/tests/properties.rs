use std::f64::consts::{FRAC_1_SQRT_2, LN_2, PI, TAU};

use num_complex::Complex64;
use pauli_renyi::bounds::{
    band_bounds, big_f_at, entropic_sum_renyi, entropic_sum_tsallis, f_func, f_over_g, f_series,
    g_func, g_series, lower_bound, mixed_ceiling, rho_hat, series_coeffs_f, series_coeffs_g,
    symmetry_reduce,
};
use pauli_renyi::distributions::{min_entropy, phi_alpha, renyi_entropy, shannon_entropy};
use pauli_renyi::pauli_measure::{measure_mixed, measure_pure};
use pauli_renyi::qubit::{
    angles_to_bloch, pauli_eigenstate, sample_mixed, sample_pure, spectral_to_bloch,
};
use pauli_renyi::verify::{grid_max_sum_pure, grid_min_sum};
use pauli_renyi::{
    Axis, BlochVector, EntropyOrder, GridSpec, ProbabilityDistribution, PureStateAngles, Sign,
    SpectralDecomposition,
};
use proptest::prelude::*;

fn order(a: f64) -> EntropyOrder {
    EntropyOrder::new(a).unwrap()
}

fn distribution(max_len: usize) -> impl Strategy<Value = ProbabilityDistribution> {
    prop::collection::vec(0.0f64..1.0, 2..=max_len).prop_filter_map("all zero", |w| {
        let s: f64 = w.iter().sum();
        (s > 1e-3).then(|| ProbabilityDistribution::new(w.iter().map(|x| x / s).collect()).unwrap())
    })
}

fn same_length_pair() -> impl Strategy<Value = (ProbabilityDistribution, ProbabilityDistribution)> {
    (2usize..6).prop_flat_map(|n| {
        let one = prop::collection::vec(0.01f64..1.0, n).prop_map(|w| {
            let s: f64 = w.iter().sum();
            ProbabilityDistribution::new(w.iter().map(|x| x / s).collect()).unwrap()
        });
        (one.clone(), one)
    })
}

fn angles() -> impl Strategy<Value = PureStateAngles> {
    (-10.0f64..10.0, -20.0f64..20.0).prop_map(|(t, p)| PureStateAngles::new(t, p).unwrap())
}

fn ball_point() -> impl Strategy<Value = BlochVector> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_filter("outside ball", |(x, y, z)| x * x + y * y + z * z < 1.0)
        .prop_map(|(x, y, z)| BlochVector::new(x, y, z).unwrap())
}

/// Born-rule probabilities `⟨v|ρ|v⟩` for the six Pauli eigenvectors of the
/// density matrix `ρ`, as `[[x+, x−], [y+, y−], [z+, z−]]`.
fn born(rho: [[Complex64; 2]; 2]) -> [[f64; 2]; 3] {
    let s = FRAC_1_SQRT_2;
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let vecs = [
        [[one * s, one * s], [one * s, -one * s]],
        [[one * s, i * s], [one * s, -i * s]],
        [[one, zero], [zero, one]],
    ];
    vecs.map(|pair| {
        pair.map(|v| {
            let mut acc = zero;
            for a in 0..2 {
                for b in 0..2 {
                    acc += v[a].conj() * rho[a][b] * v[b];
                }
            }
            acc.re
        })
    })
}

fn density_pure(s: &PureStateAngles) -> [[Complex64; 2]; 2] {
    let psi = [
        Complex64::new(s.tau().cos(), 0.0),
        Complex64::from_polar(s.tau().sin(), s.phi()),
    ];
    [[psi[0] * psi[0].conj(), psi[0] * psi[1].conj()], [psi[1] * psi[0].conj(), psi[1] * psi[1].conj()]]
}

fn density_bloch(b: &BlochVector) -> [[Complex64; 2]; 2] {
    let (x, y, z) = (b.x(), b.y(), b.z());
    [
        [Complex64::new((1.0 + z) / 2.0, 0.0), Complex64::new(x / 2.0, -y / 2.0)],
        [Complex64::new(x / 2.0, y / 2.0), Complex64::new((1.0 - z) / 2.0, 0.0)],
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn renyi_and_phi_non_increasing_in_order(p in distribution(6), a in 0.01f64..5.0, d in 0.0f64..5.0) {
        let (lo, hi) = (order(a), order(a + d));
        prop_assert!(renyi_entropy(&p, lo) >= renyi_entropy(&p, hi) - 1e-12);
        prop_assert!(phi_alpha(&p, lo) >= phi_alpha(&p, hi) - 1e-12);
    }

    #[test]
    fn renyi_concave_below_one((p, q) in same_length_pair(), lambda in 0.0f64..=1.0, a in 0.01f64..0.999) {
        let a = order(a);
        let m = p.mix(lambda, &q).unwrap();
        let chord = lambda * renyi_entropy(&p, a) + (1.0 - lambda) * renyi_entropy(&q, a);
        prop_assert!(renyi_entropy(&m, a) >= chord - 1e-12);
    }

    #[test]
    fn continuity_at_shannon_order(w in prop::collection::vec(0.001f64..1.0, 2..6)) {
        let s: f64 = w.iter().sum();
        let p = ProbabilityDistribution::new(w.iter().map(|x| x / s).collect()).unwrap();
        prop_assume!(p.min_prob() >= 1e-3);
        let h = shannon_entropy(&p);
        for a in [1.0 - 1e-7, 1.0 + 1e-7] {
            prop_assert!((renyi_entropy(&p, order(a)) - h).abs() <= 1e-5);
        }
    }

    #[test]
    fn renyi_range(p in distribution(6), a in 0.01f64..5.0) {
        let r = renyi_entropy(&p, order(a));
        prop_assert!(r >= -1e-12);
        prop_assert!(r <= (p.len() as f64).ln() + 1e-12);
    }

    // Convexity holds in the largest probability ξ, not in the distribution itself;
    // see `min_entropy_not_convex_in_distribution`.
    #[test]
    fn min_entropy_convex_in_largest_probability((p, q) in same_length_pair(), lambda in 0.0f64..=1.0) {
        let xi = lambda * p.max_prob() + (1.0 - lambda) * q.max_prob();
        for d in [&p, &q] {
            prop_assert!((min_entropy(d) + d.max_prob().ln()).abs() <= 1e-15);
        }
        let chord = lambda * min_entropy(&p) + (1.0 - lambda) * min_entropy(&q);
        prop_assert!(-xi.ln() <= chord + 1e-12);
    }

    #[test]
    fn pure_spectral_round_trip(s in angles()) {
        let d = SpectralDecomposition::from_eigenstate(1.0, s).unwrap();
        let a = spectral_to_bloch(&d).components();
        let b = angles_to_bloch(&s).components();
        for k in 0..3 {
            prop_assert!((a[k] - b[k]).abs() <= 1e-12);
        }
    }

    #[test]
    fn global_phase_is_irrelevant(tau in -5.0f64..5.0, phi in -10.0f64..10.0, k in -5i32..5) {
        let a = PureStateAngles::new(tau, phi).unwrap();
        let b = PureStateAngles::new(tau, phi + TAU * k as f64).unwrap();
        prop_assert!((a.tau() - b.tau()).abs() <= 1e-12);
        let dphi = (a.phi() - b.phi()).abs();
        prop_assert!(dphi <= 1e-11 || (TAU - dphi) <= 1e-11);
    }

    #[test]
    fn pure_and_mixed_routes_agree(s in angles()) {
        let a = measure_pure(&s);
        let b = measure_mixed(&angles_to_bloch(&s)).unwrap();
        for axis in Axis::ALL {
            for k in 0..2 {
                prop_assert!((a.get(axis).probs()[k] - b.get(axis).probs()[k]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn probabilities_valid_and_paired(b in ball_point()) {
        let t = measure_mixed(&b).unwrap();
        for d in t.distributions() {
            let [p, m] = [d.probs()[0], d.probs()[1]];
            prop_assert!((0.0..=1.0).contains(&p) && (0.0..=1.0).contains(&m));
            prop_assert!((p + m - 1.0).abs() <= f64::EPSILON);
        }
    }

    #[test]
    fn born_rule_pure(s in angles()) {
        let t = measure_pure(&s);
        let m = born(density_pure(&s));
        for (axis, row) in Axis::ALL.into_iter().zip(m) {
            for (got, want) in t.get(axis).probs().iter().zip(row) {
                prop_assert!((got - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn born_rule_mixed(b in ball_point()) {
        let t = measure_mixed(&b).unwrap();
        let m = born(density_bloch(&b));
        for (axis, row) in Axis::ALL.into_iter().zip(m) {
            for (got, want) in t.get(axis).probs().iter().zip(row) {
                prop_assert!((got - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn f_over_g_increasing(a in 0.001f64..0.999, u in 0.0f64..0.999, v in 0.0f64..0.999) {
        prop_assume!((u - v).abs() > 1e-6);
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let a = order(a);
        prop_assert!(f_over_g(u, a).unwrap() < f_over_g(v, a).unwrap());
    }

    #[test]
    fn series_match_closed_forms(a in 0.001f64..0.999, u in 0.0f64..=0.3) {
        let a = order(a);
        prop_assert!((f_series(u, a, 20).unwrap() - f_func(u, a).unwrap()).abs() <= 1e-10);
        prop_assert!((g_series(u, a, 20).unwrap() - g_func(u, a).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn coefficients_positive(a in 0.001f64..0.999) {
        let a = order(a);
        prop_assert!(series_coeffs_f(a, 50).unwrap().iter().all(|&c| c > 0.0));
        prop_assert!(series_coeffs_g(a, 50).unwrap().iter().all(|&c| c > 0.0));
    }

    #[test]
    fn symmetry_reduction_keeps_f(tau in -4.0f64..4.0, phi in -8.0f64..8.0, a in 0.01f64..0.99) {
        let a = order(a);
        let d = symmetry_reduce(tau, phi).unwrap();
        let original = big_f_at(&PureStateAngles::new(tau, phi).unwrap(), a).unwrap();
        let reduced = big_f_at(&PureStateAngles::from(d), a).unwrap();
        prop_assert!((original - reduced).abs() <= 1e-12);
    }

    #[test]
    fn f_identity(s in angles(), a in 0.01f64..0.99) {
        let a = order(a);
        let lhs = (a.one_minus() * entropic_sum_renyi(&measure_pure(&s), a).unwrap()).exp();
        let f = big_f_at(&s, a).unwrap();
        prop_assert!((lhs / f - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn sum_bounds_pure(s in angles(), a in 1e-3f64..=1.0) {
        let a = order(a);
        let sum = entropic_sum_renyi(&measure_pure(&s), a).unwrap();
        prop_assert!(sum >= lower_bound() - 1e-12);
        prop_assert!(sum <= 3.0 * rho_hat(a).unwrap() + 1e-12);
    }

    #[test]
    fn sum_bounds_mixed(b in ball_point(), a in 1e-3f64..=1.0) {
        let sum = entropic_sum_renyi(&measure_mixed(&b).unwrap(), order(a)).unwrap();
        prop_assert!(sum >= lower_bound() - 1e-12);
        prop_assert!(sum <= mixed_ceiling() + 1e-12);
    }

    #[test]
    fn renyi_equals_tsallis_at_one(b in ball_point()) {
        let t = measure_mixed(&b).unwrap();
        let r = entropic_sum_renyi(&t, EntropyOrder::ONE).unwrap();
        let h = entropic_sum_tsallis(&t, EntropyOrder::ONE).unwrap();
        prop_assert!((r - h).abs() <= 1e-9);
    }
}

#[test]
fn min_entropy_not_convex_in_distribution() {
    let p = ProbabilityDistribution::pair(1.0, 0.0).unwrap();
    let q = ProbabilityDistribution::pair(0.0, 1.0).unwrap();
    let m = p.mix(0.5, &q).unwrap();
    let chord = 0.5 * min_entropy(&p) + 0.5 * min_entropy(&q);
    assert_eq!(chord, 0.0);
    assert!((min_entropy(&m) - LN_2).abs() < 1e-15);
}

#[test]
fn eigenstates_are_antipodal_with_pattern() {
    for axis in Axis::ALL {
        let plus = angles_to_bloch(&pauli_eigenstate(axis, Sign::Plus)).components();
        let minus = angles_to_bloch(&pauli_eigenstate(axis, Sign::Minus)).components();
        for k in 0..3 {
            assert!((plus[k] + minus[k]).abs() <= 1e-12);
        }
        for sign in [Sign::Plus, Sign::Minus] {
            let t = measure_pure(&pauli_eigenstate(axis, sign));
            for other in Axis::ALL {
                let d = t.get(other);
                if other == axis {
                    assert_eq!(d.min_prob(), 0.0);
                } else {
                    assert!((d.probs()[0] - 0.5).abs() <= 1e-15);
                }
            }
        }
    }
}

#[test]
fn band_ordering_and_monotonicity() {
    let points: Vec<_> = (1..=1000).map(|k| band_bounds(order(k as f64 / 1000.0)).unwrap()).collect();
    for p in &points {
        assert!(2.0 / 3.0 <= p.a_upper && p.a_upper <= p.b_upper + 1e-15 && p.b_upper <= 1.0, "{p:?}");
    }
    for w in points.windows(2) {
        assert!(w[1].b_upper < w[0].b_upper && w[1].a_upper < w[0].a_upper);
    }
    let end = points.last().unwrap();
    assert!((end.a_upper - end.b_upper).abs() <= 1e-9);
}

#[test]
fn bounds_on_sampled_states() {
    let pure = sample_pure(11, 100_000).unwrap();
    let mixed = sample_mixed(12, 100_000).unwrap();
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let a = order(alpha);
        let upper = 3.0 * rho_hat(a).unwrap();
        for s in &pure {
            let sum = entropic_sum_renyi(&measure_pure(s), a).unwrap();
            assert!(sum >= lower_bound() - 1e-12 && sum <= upper + 1e-12);
        }
        for b in &mixed {
            let sum = entropic_sum_renyi(&measure_mixed(b).unwrap(), a).unwrap();
            assert!(sum >= lower_bound() - 1e-12 && sum <= mixed_ceiling() + 1e-12);
        }
    }
}

#[test]
fn grid_refinement_is_consistent() {
    // 101 nodes per axis contain the 51-node grid, so refinement can only improve.
    let coarse: GridSpec = "51x51".parse().unwrap();
    let fine: GridSpec = "101x101".parse().unwrap();
    for alpha in [0.3, 0.8] {
        let a = order(alpha);
        let min_c = grid_min_sum(a, coarse).unwrap()[0].observed;
        let min_f = grid_min_sum(a, fine).unwrap()[0].observed;
        let max_c = grid_max_sum_pure(a, coarse).unwrap()[0].observed;
        let max_f = grid_max_sum_pure(a, fine).unwrap()[0].observed;
        assert!(min_f <= min_c && max_f >= max_c);
    }
}

#[test]
fn reports_are_deterministic() {
    let g: GridSpec = "81x61".parse().unwrap();
    let run = || {
        let mut lines: Vec<String> =
            grid_max_sum_pure(order(0.4), g).unwrap().iter().map(|r| r.to_line()).collect();
        lines.extend(
            pauli_renyi::verify::impurity_gap_scan(order(0.4), 5, 500)
                .unwrap()
                .iter()
                .map(|r| r.to_line()),
        );
        lines
    };
    assert_eq!(run(), run());
}

#[test]
fn completely_mixed_sum() {
    let t = measure_mixed(&BlochVector::ZERO).unwrap();
    for alpha in [0.1, 0.5, 1.0] {
        assert!((entropic_sum_renyi(&t, order(alpha)).unwrap() - 3.0 * LN_2).abs() < 1e-15);
    }
    // half-turns in φ map the state to one with the same sum
    let s = PureStateAngles::new(0.3, 0.2).unwrap();
    let r = PureStateAngles::new(0.3, 0.2 + PI).unwrap();
    let a = order(0.5);
    let d = entropic_sum_renyi(&measure_pure(&s), a).unwrap()
        - entropic_sum_renyi(&measure_pure(&r), a).unwrap();
    assert!(d.abs() < 1e-14);
}
