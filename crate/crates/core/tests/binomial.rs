use binocert::binom::*;
use binocert::exactnum::{int, rat};
use binocert::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn p_strategy() -> impl Strategy<Value = Rational> {
    (1i64..20, 21i64..40).prop_map(|(a, b)| rat(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pmf_sums_to_one(n in 0u64..80, p in p_strategy()) {
        let total: Rational = (0..=n as i64).map(|k| pmf(n, &p, k).unwrap().into_inner()).sum();
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn pmf_reflects_under_p_to_q(n in 0u64..60, k in 0i64..60, p in p_strategy()) {
        let q = Rational::one() - &p;
        let a = pmf(n, &p, k).unwrap().into_inner();
        let b = pmf(n, &q, n as i64 - k).unwrap().into_inner();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn symmetric_ratio_matches_binomial_quotient(n in 1u64..150, j in 0u64..150) {
        prop_assume!(j <= n);
        let expected = Rational::new(binomial(2 * n, n + j), binomial(2 * n, n));
        prop_assert_eq!(pi_sym(j, n).unwrap(), expected);
    }

    #[test]
    fn odd_ratio_matches_binomial_quotient(n in 1u64..150, j in 0u64..150) {
        prop_assume!(j <= n);
        // P(S_{2n+1} = n - j) / P(S_{2n+1} = n)
        let expected = Rational::new(binomial(2 * n + 1, n - j), binomial(2 * n + 1, n));
        prop_assert_eq!(pi_sym_odd(j, n).unwrap(), expected);
    }

    #[test]
    fn central_odd_term_from_even(n in 0u64..300) {
        let odd = central_pmf_odd(n).into_inner();
        let even = central_pmf_even(n).into_inner();
        prop_assert_eq!(odd, rat(2 * n as i64 + 1, 2 * n as i64 + 2) * even);
    }

    #[test]
    fn symmetric_decomposition_is_exact(n in 1u64..=200, num in 1i64..12, den in 1i64..5) {
        let win = SymmetricWindow::new(n, rat(num, den)).unwrap();
        prop_assert_eq!(window_prob_sym_direct(&win), window_prob_sym_decomposed(&win).unwrap());
    }

    #[test]
    fn shifted_product_matches_product(n in 1u64..120, p in p_strategy(), j in 1u64..120) {
        let win = GeneralWindow::new(n, p, int(1)).unwrap();
        prop_assume!(j <= n - win.m());
        prop_assert_eq!(pi_gen_shifted(j, &win).unwrap(), pi_gen_product(j, &win).unwrap());
    }

    #[test]
    fn central_index_is_the_mode(n in 1u64..150, p in p_strategy()) {
        let (m, delta) = central_index(n, &p).unwrap();
        let q = Rational::one() - &p;
        prop_assert!(-q < delta && delta <= p);
        let at_m = pmf(n, &p, m as i64).unwrap().into_inner();
        for k in 0..=n as i64 {
            prop_assert!(pmf(n, &p, k).unwrap().into_inner() <= at_m);
        }
    }
}

#[test]
fn general_decomposition_on_grid() {
    let ps = [rat(1, 10), rat(1, 4), rat(1, 2), rat(3, 4), rat(9, 10)];
    let xs = [rat(1, 2), int(1), int(2)];
    for n in (1..=200).step_by(7) {
        for p in &ps {
            for x in &xs {
                let win = GeneralWindow::new(n, p.clone(), x.clone()).unwrap();
                assert_eq!(
                    window_prob_gen_direct(&win).unwrap(),
                    window_prob_gen_decomposed(&win).unwrap(),
                    "n={n} p={p} x={x}"
                );
            }
        }
    }
}

#[test]
fn histogram_examples() {
    let half = rat(1, 2);
    let peak = pmf(20, &half, 10).unwrap().into_inner();
    assert_eq!(peak, Rational::new(binomial(20, 10), num_bigint::BigInt::from(1u64 << 20)));
    for k in 0..=20 {
        assert!(pmf(20, &half, k).unwrap().into_inner() <= peak);
    }
    assert_eq!(pmf(2, &half, 1).unwrap().into_inner(), half);
    assert!(pmf(2, &half, 3).unwrap().into_inner().is_zero());
}

#[test]
fn eight_trial_window() {
    let win = SymmetricWindow::new(8, int(1)).unwrap();
    assert_eq!(window_prob_sym(&win).unwrap().into_inner(), rat(182, 256));
}
