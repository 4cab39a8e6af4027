use binocert::binom::{central_pmf_odd, pi_gen, window_prob_sym, GeneralWindow, SymmetricWindow};
use binocert::certify_gen::{check_general_sandwich, check_pi_gen_lower, check_pi_gen_upper, compose_symmetric, reflect_left_window};
use binocert::certify_sym::*;
use binocert::exactnum::{exp_rational, int, rat, sqrt_rational};
use binocert::gauss::kernel_integral;
use binocert::{Enclosure, Precision, Rational, Relation, Verdict};
use num_traits::{One, Signed, Zero};

fn xs() -> Vec<Rational> {
    vec![rat(1, 2), int(1), int(2)]
}

#[test]
fn sum_forms_are_tighter_than_integral_forms() {
    let prec = Precision::decimal(20, 5);
    for n in 1..=100 {
        for x in xs() {
            let rep = check_window_sandwich_even(n, &x, &prec).unwrap();
            for name in ["even_upper_sum_below_integral", "even_lower_sum_above_integral"] {
                let v = &rep.claim(name).unwrap().verdict;
                assert!(*v == Verdict::Holds || v.is_skipped(), "{name} n={n} x={x}: {v}");
            }
        }
    }
}

#[test]
fn ratio_gates_in_exact_form() {
    // 1 <= j < x√(n/2), n >= x²  =>  j <= n and 8 j⁶ <= x⁶ n³
    for n in 1u64..=300 {
        for x in [rat(1, 2), int(1), rat(3, 2), int(2), int(3)] {
            let x2 = &x * &x;
            if int(n) < x2 {
                continue;
            }
            let bound = &x2 * int(n) / int(2);
            let mut j = 1u64;
            while int(j * j) < bound {
                assert!(j <= n);
                let lhs = int(8) * int(j).pow(6);
                let rhs = x2.clone().pow(3) * int(n).pow(3);
                assert!(lhs <= rhs, "n={n} x={x} j={j}");
                if int(n) >= &x2 * int(2) {
                    assert!(2 * j <= n, "n={n} x={x} j={j}");
                }
                j += 1;
            }
        }
    }
}

#[test]
fn odd_shifted_index_stays_below_the_even_scale() {
    // x_n < x√(n/2)  <=>  x² - 1 < 0  or  (x² - 1)² < 8x²n
    for n in 1u64..=300 {
        for x in [rat(1, 4), rat(1, 2), int(1), rat(3, 2), int(2), int(5)] {
            let x2 = &x * &x;
            if int(n) < x2 {
                continue;
            }
            let e = &x2 - int(1);
            assert!(e.is_negative() || &e * &e < int(8) * &x2 * int(n), "n={n} x={x}");
            // cross-check with enclosures
            let xn = &sqrt_rational(&int(2 * n + 1), 96).unwrap().scale(&(&x / int(2))) - &Enclosure::exact(rat(1, 2));
            let even = sqrt_rational(&rat(n as i64, 2), 96).unwrap().scale(&x);
            assert!(xn.hi() < even.lo(), "n={n} x={x}");
        }
    }
}

#[test]
fn odd_ratio_bracket_on_grid() {
    let prec = Precision::default();
    for n in (1..=200).step_by(9) {
        for x in xs() {
            let rep = check_odd_ratio_bracket(n, &x, &prec).unwrap();
            assert_ne!(rep.overall(), Verdict::Violated, "n={n} x={x}");
            assert_eq!(rep.count("Undecided"), 0, "n={n} x={x}");
        }
    }
}

#[test]
fn tighter_precision_never_adds_undecided() {
    let loose = Precision::decimal(2, 1);
    let tight = Precision::default();
    for n in [4, 9, 30, 64] {
        for x in xs() {
            let a = certify_even(n, &x, &loose).unwrap().count("Undecided");
            let b = certify_even(n, &x, &tight).unwrap().count("Undecided");
            assert!(b <= a, "n={n} x={x}: {a} -> {b}");
            let a = certify_odd(n, &x, &loose).unwrap().count("Undecided");
            let b = certify_odd(n, &x, &tight).unwrap().count("Undecided");
            assert!(b <= a, "n={n} x={x}: {a} -> {b}");
        }
    }
}

/// The odd-case lower bound with the ratio factor `n/(n + x√n)` kept and the
/// integral taken to `⌈x_n⌉`, the number of window offsets.
fn corrected_odd_lower(n: u64, x: &Rational, bits: u64) -> (Enclosure, Enclosure) {
    let win = SymmetricWindow::new(2 * n + 1, x.clone()).unwrap();
    let p = window_prob_sym(&win).unwrap().into_inner();
    let pc = central_pmf_odd(n).into_inner();
    let half_ratio = Enclosure::exact(p / (pc * int(2)));
    // count of j >= 0 with (j + 1/2)² < x²(2n+1)/4
    let hw = x * x * int(2 * n + 1) / int(4);
    let mut count = 0u64;
    while (int(count) + rat(1, 2)).pow(2) < hw {
        count += 1;
    }
    let root_n = sqrt_rational(&int(n), bits).unwrap();
    let factor = Enclosure::exact(int(n)).div(&(&Enclosure::exact(int(n)) + &root_n.scale(x))).unwrap();
    let cubic = sqrt_rational(&int(2 * n), bits).unwrap().recip().unwrap().scale(&(x * x * x));
    let lo_arg = (-cubic).hi().clone();
    let shrink = exp_rational(&lo_arg, bits);
    let integral = kernel_integral(&int(count), &int(n).recip(), bits).unwrap().0;
    (&(&factor * &shrink) * &integral, half_ratio)
}

#[test]
fn odd_lower_bound_with_kept_factor_holds() {
    // the published form fails here since the window is empty
    let rep = check_window_sandwich_odd(1, &rat(1, 2), &Precision::default()).unwrap();
    assert_eq!(rep.claim("odd_lower").unwrap().verdict, Verdict::Violated);
    let (lhs, rhs) = corrected_odd_lower(1, &rat(1, 2), 96);
    assert!(lhs.hi().is_zero() && rhs.lo().is_zero());
    assert_eq!(Relation::Le.decide(&lhs, &rhs), Verdict::Holds);

    for n in 1..=200 {
        for x in [rat(1, 2), int(1), rat(3, 2), int(2)] {
            if int(n) < &x * &x * int(2) {
                continue;
            }
            let (lhs, rhs) = corrected_odd_lower(n, &x, 128);
            assert_eq!(Relation::Le.decide(&lhs, &rhs), Verdict::Holds, "n={n} x={x}");
        }
    }
}

#[test]
fn published_odd_lower_fails_at_half() {
    let prec = Precision::default();
    let failures: Vec<u64> = (1..=40)
        .filter(|&n| {
            let rep = check_window_sandwich_odd(n, &rat(1, 2), &prec).unwrap();
            rep.claim("odd_lower").unwrap().verdict == Verdict::Violated
        })
        .collect();
    assert!(failures.contains(&1), "{failures:?}");
}

#[test]
fn interval_difference_matches_enumeration() {
    let prec = Precision::default();
    let (p, g) = interval_difference(&int(1), &int(2), 8, &prec).unwrap();
    assert_eq!(p, rat(56, 256));
    assert!(g.agrees_with_decimal("0.2718").unwrap());
}

#[test]
fn ratio_bound_examples() {
    let prec = Precision::default();
    let win = GeneralWindow::new(4, rat(1, 4), int(1)).unwrap();
    assert_eq!(pi_gen(1, &win).unwrap(), rat(1, 2));
    assert_eq!(check_pi_gen_upper(&win, 1, &prec).unwrap().verdict, Verdict::Holds);
    assert!(check_pi_gen_upper(&win, 0, &prec).unwrap().verdict.is_skipped());
    assert_eq!(check_pi_gen_lower(&win, 0, &prec).unwrap().verdict, Verdict::Holds);

    let win = GeneralWindow::new(100, rat(1, 2), int(1)).unwrap();
    for j in 1..=50 {
        assert_eq!(check_pi_gen_upper(&win, j, &prec).unwrap().verdict, Verdict::Holds, "j={j}");
    }
    let win = GeneralWindow::new(40, rat(1, 4), int(1)).unwrap();
    assert_eq!(check_pi_gen_lower(&win, 1, &prec).unwrap().verdict, Verdict::Holds);
}

#[test]
fn general_sandwich_examples() {
    let prec = Precision::default();
    for (n, p) in [(16, rat(1, 2)), (40, rat(1, 4))] {
        let win = GeneralWindow::new(n, p, int(1)).unwrap();
        let cert = check_general_sandwich(&win, &prec).unwrap();
        assert_eq!(cert.report.overall(), Verdict::Holds, "{}", cert.report.to_key_value());
    }
    let win = GeneralWindow::new(4, rat(1, 4), int(3)).unwrap();
    let cert = check_general_sandwich(&win, &prec).unwrap();
    assert!(cert.report.claim("gen_upper").unwrap().verdict.is_skipped());
    assert!(cert.report.claim("gen_lower").unwrap().verdict.is_skipped());
}

/// The alternative product with `l` reversed in the numerator,
/// `π(j) = Π (1 - (δ + l(q-p) + jp) / (npq + (δ+l)q))`, and the same product
/// with the `l(q-p)` term dropped.
fn reversed_products(win: &GeneralWindow, j: u64) -> (Rational, Rational) {
    let (p, q, d) = (win.p(), win.q(), win.delta());
    let npq = win.variance();
    let mut full = Rational::one();
    let mut dropped = Rational::one();
    for l in 1..=j {
        let den = &npq + (d + int(l)) * q;
        full *= Rational::one() - (d + int(l) * (q - p) + int(j) * p) / &den;
        dropped *= Rational::one() - (d + int(j) * p) / &den;
    }
    (full, dropped)
}

#[test]
fn dropping_the_skew_term_fails_when_p_exceeds_q() {
    let mut undershoots = 0;
    for n in 2..60 {
        for p in [rat(1, 10), rat(1, 4), rat(3, 4), rat(9, 10)] {
            let skewed_up = p > rat(1, 2);
            let win = GeneralWindow::new(n, p, int(1)).unwrap();
            for j in 1..=(n - win.m()) {
                let exact = pi_gen(j, &win).unwrap();
                let (full, dropped) = reversed_products(&win, j);
                assert_eq!(full, exact);
                if skewed_up {
                    assert!(dropped < exact, "n={n} j={j}");
                    undershoots += 1;
                } else {
                    assert!(dropped >= exact, "n={n} j={j}");
                }
            }
        }
    }
    assert!(undershoots > 0);
}

#[test]
fn reflection_and_composition() {
    for (n, p, x) in [(4, rat(1, 4), int(1)), (30, rat(1, 10), int(2)), (16, rat(1, 2), int(1)), (20, rat(1, 2), rat(1, 2))] {
        let win = GeneralWindow::new(n, p.clone(), x.clone()).unwrap();
        let r = reflect_left_window(&win).unwrap();
        assert!(r.reconciles(&win).unwrap(), "n={n} p={p} x={x}");
        let c = compose_symmetric(&win).unwrap();
        assert!(c.discrepancy.len() <= 2, "n={n} p={p} x={x}: {:?}", c.discrepancy);
        assert_eq!(c.shared, &c.summed - &c.central);
    }
    // p = 1/2, even n, δ = 0: the composed event is the symmetric window
    for n in [8u64, 16, 50] {
        for x in xs() {
            let win = GeneralWindow::new(n, rat(1, 2), x.clone()).unwrap();
            let c = compose_symmetric(&win).unwrap();
            let sym = window_prob_sym(&SymmetricWindow::new(n, x.clone()).unwrap()).unwrap().into_inner();
            assert_eq!(c.target, sym);
            if c.discrepancy.is_empty() {
                assert_eq!(c.shared, sym, "n={n} x={x}");
            }
        }
    }
}

#[test]
fn nonasymptotic_spot_value() {
    let rep = certify_unified(8, &int(1), &Precision::default()).unwrap();
    let claim = rep.claim("unified_abs_error").unwrap();
    assert_eq!(claim.verdict, Verdict::Holds);
    assert!(claim.lhs.as_ref().unwrap().agrees_with_decimal("0.02825").unwrap());
}
