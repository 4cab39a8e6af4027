use binocert::exactnum::{int, rat};
use binocert::wallis::*;
use binocert::{Precision, Verdict};

#[test]
fn recurrence_and_product_up_to_500() {
    let ladder = wallis_ladder(500);
    for n in 0..=500u64 {
        assert_eq!(wallis(n), ladder[n as usize], "n={n}");
        if n >= 2 {
            let lhs = ladder[n as usize].scale(&int(n));
            let rhs = ladder[n as usize - 2].scale(&int(n - 1));
            assert_eq!(lhs, rhs, "n W_n = (n-1) W_(n-2) at n={n}");
        }
        if n >= 1 {
            assert!(check_product_identity(n).holds, "n={n}");
        }
    }
    assert_eq!(check_product_identity(1).product, PiMultiple::new(rat(1, 2), 1));
}

#[test]
fn central_identities_up_to_250() {
    for n in 0..=250 {
        assert!(check_central_identities(n), "n={n}");
    }
}

#[test]
fn sequence_decreases() {
    let prec = Precision::decimal(20, 4);
    for n in 1..=60 {
        assert_eq!(check_monotone(n, &prec).verdict, Verdict::Holds, "n={n}");
    }
}

#[test]
fn sandwiches_hold_at_sample_points() {
    let prec = Precision::default();
    for n in [1, 2, 3, 10, 77, 150] {
        assert_eq!(central_sandwich_even(n, &prec).overall(), Verdict::Holds, "even n={n}");
        assert_eq!(central_sandwich_odd(n, &prec).overall(), Verdict::Holds, "odd n={n}");
        assert_eq!(wallis_ratio_bracket(n, &prec).overall(), Verdict::Holds, "ratio n={n}");
    }
}
