//! Certificates for the symmetric binomial `B(n, 1/2)`.
//!
//! Notation: for the even case the window is `|S_{2n} - n| < x √(n/2)`, for
//! the odd case `|S_{2n+1} - (2n+1)/2| < (x/2) √(2n+1)`. `n` is always the
//! half index. `I(x)` is the standard Gaussian mass of `[-x, x]` and
//! `K(x) = ∫_0^x e^{-s²/2} ds`.

use crate::binom::{
    central_pmf_even, central_pmf_odd, pi_sym, pi_sym_odd, window_prob_sym, SymmetricWindow,
};
use crate::certificate::{merge, CertificateReport, Claim, Instance, Relation, SkipReason};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Enclosure, Precision, Rational};
use crate::reals::{ex, exp, exp_q, kernel, mass, pi, sqrt};
use num_traits::{One, Zero};

fn skip(name: &str, rel: Relation, why: String) -> Claim {
    Claim::skipped(name, rel, SkipReason::Precondition(why))
}

fn pow(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * r)
}

/// `x³ / √(2n)`.
fn cubic_over_root(x3: &Rational, n: u64, bits: u64) -> Result<Enclosure> {
    Ok(sqrt(&int(2 * n), bits)?.recip()?.scale(x3))
}

/// `1 / √(nπ)`.
fn inv_root_n_pi(n: u64, bits: u64) -> Result<Enclosure> {
    pi(bits).scale(&int(n)).sqrt(bits + 8)?.recip()
}

/// `Σ_{j in js} e^{-j²/n}`.
fn gaussian_sum(js: impl Iterator<Item = u64>, n: u64, bits: u64) -> Enclosure {
    let nr = int(n);
    js.fold(Enclosure::zero(), |acc, j| {
        let t = -(int(j * j) / &nr);
        &acc + &exp_q(&t, bits)
    })
}

/// Product-ratio bounds `exp(-j²/n - 2j³/n²) <= π(j,n) <= exp(-j²/n + j³/n²)`
/// for `0 <= j <= j_max`. The lower bound is asserted for `2j <= n` only.
pub fn check_pi_bounds_even(n: u64, j_max: u64, prec: &Precision) -> Result<CertificateReport> {
    pi_bounds(n, j_max, prec, false)
}

/// The odd-case ratios: `(n+1)/(n+j+1) exp(-j²/n - 2j³/n²) <= π̃(j,n) <= exp(-j²/n + j³/n²)`.
pub fn check_pi_bounds_odd(n: u64, j_max: u64, prec: &Precision) -> Result<CertificateReport> {
    pi_bounds(n, j_max, prec, true)
}

fn pi_bounds(n: u64, j_max: u64, prec: &Precision, odd: bool) -> Result<CertificateReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if j_max > n {
        return Err(Error::OutOfRange {
            what: "j_max",
            value: j_max.to_string(),
            limit: n.to_string(),
        });
    }
    let kind = if odd { "pi-bounds-odd" } else { "pi-bounds-even" };
    let tag = if odd { "pi_odd" } else { "pi_even" };
    let mut rep = CertificateReport::new(Instance::new(kind).with("n", n).with("j_max", j_max));
    let nr = int(n);
    for j in 0..=j_max {
        let value = ex(if odd { pi_sym_odd(j, n)? } else { pi_sym(j, n)? });
        let jr = int(j);
        let sq = &jr * &jr / &nr;
        let cube = &jr * &jr * &jr / (&nr * &nr);
        let up = &cube - &sq;
        rep.push(Claim::certify(format!("{tag}_upper[{j}]"), Relation::Le, prec, |b| {
            Ok((value.clone(), exp_q(&up, b)))
        }));
        let name = format!("{tag}_lower[{j}]");
        if 2 * j <= n {
            let down = -&sq - &cube * int(2);
            let factor = if odd { rat(n as i64 + 1, (n + j + 1) as i64) } else { int(1) };
            rep.push(Claim::certify(name, Relation::Ge, prec, |b| {
                Ok((value.clone(), exp_q(&down, b).scale(&factor)))
            }));
        } else {
            rep.push(skip(&name, Relation::Ge, format!("needs 2j <= n (j={j}, n={n})")));
        }
    }
    Ok(rep)
}

/// Bracket of the odd ratios over the window offsets:
/// `n/(n + x√n) exp(-j²/n - x³/√(2n)) <= π̃(j,n) <= exp(-j²/n + x³/(2√(2n)))`.
/// The upper side needs `n >= x²`, the lower side `n >= 2x²`.
pub fn check_odd_ratio_bracket(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(2 * n + 1, x.clone())?;
    let mut rep = CertificateReport::new(
        Instance::new("odd-ratio-bracket").with("n", n).with("x", x),
    );
    let x2 = x * x;
    let x3 = &x2 * x;
    let nr = int(n);
    let upper_ok = n >= 1 && nr >= x2;
    let lower_ok = n >= 1 && nr >= &x2 * int(2);
    let members = win.members();
    let offsets = if members.is_empty() { 0..0 } else { 0..(n - members.start() + 1) };
    for j in offsets {
        let value = ex(pi_sym_odd(j, n)?);
        let sq = int(j * j) / &nr;
        let up_name = format!("odd_ratio_upper[{j}]");
        if upper_ok {
            rep.push(Claim::certify(up_name, Relation::Le, prec, |b| {
                let arg = &cubic_over_root(&x3, n, b)?.scale(&rat(1, 2)) - &ex(sq.clone());
                Ok((value.clone(), exp(&arg, b)))
            }));
        } else {
            rep.push(skip(&up_name, Relation::Le, format!("needs n >= x² (n={n}, x={x})")));
        }
        let lo_name = format!("odd_ratio_lower[{j}]");
        if lower_ok {
            rep.push(Claim::certify(lo_name, Relation::Ge, prec, |b| {
                let arg = -(&ex(sq.clone()) + &cubic_over_root(&x3, n, b)?);
                let root_n = sqrt(&nr, b)?;
                let factor = ex(nr.clone()).div(&(&ex(nr.clone()) + &root_n.scale(x)))?;
                Ok((value.clone(), &factor * &exp(&arg, b)))
            }));
        } else {
            rep.push(skip(&lo_name, Relation::Ge, format!("needs n >= 2x² (n={n}, x={x})")));
        }
    }
    Ok(rep)
}

fn sym_instance(kind: &'static str, n: u64, n_total: u64, x: &Rational) -> Instance {
    let parity = if n_total.is_multiple_of(2) { "even" } else { "odd" };
    Instance::new(kind)
        .with("n", n)
        .with("n_total", n_total)
        .with("parity", parity)
        .with("x", x)
}

/// Upper and lower bounds on `P_{2n}(x)` through the central term, together
/// with the intermediate sum and integral forms and the index-range facts
/// they rely on. Upper claims need `n >= x²`, lower claims `n >= 2x²`.
pub fn check_window_sandwich_even(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(2 * n, x.clone())?;
    let mut rep = CertificateReport::new(sym_instance("window-even", n, 2 * n, x));
    let p = ex(window_prob_sym(&win)?.into_inner());
    let pc = central_pmf_even(n).into_inner();
    let jmax = *win.members().end() - n;
    let x2 = x * x;
    let x3 = &x2 * x;
    let nr = int(n);
    let one = Enclosure::one();
    let cubic_gate = (int(8) * pow(&int(jmax), 6), pow(x, 6) * pow(&nr, 3));

    // e^{x³/(2√(2n))} and e^{-x³/√(2n)}
    let grow = |b: u64| -> Result<Enclosure> { Ok(exp(&cubic_over_root(&x3, n, b)?.scale(&rat(1, 2)), b)) };
    let shrink = |b: u64| -> Result<Enclosure> { Ok(exp(&-cubic_over_root(&x3, n, b)?, b)) };
    let half_kernel = |b: u64| kernel(&ex(x.clone()), &rat(1, 2), b);

    let upper_sum = |b: u64| -> Result<Enclosure> {
        let s = gaussian_sum(1..=jmax, n, b);
        Ok((&one + &(&grow(b)? * &s).scale(&int(2))).scale(&pc))
    };
    let upper_integral = |b: u64| -> Result<Enclosure> {
        let root = sqrt(&int(2 * n), b)?;
        Ok((&one + &(&(&root * &grow(b)?) * &half_kernel(b)?)).scale(&pc))
    };
    let lower_sum = |b: u64| -> Result<Enclosure> {
        let s = gaussian_sum(0..=jmax, n, b);
        Ok((&(&shrink(b)? * &s).scale(&int(2)) - &one).scale(&pc))
    };
    let lower_integral = |b: u64| -> Result<Enclosure> {
        let root = sqrt(&rat(n as i64, 2), b)?;
        Ok((&(&(&shrink(b)? * &root) * &half_kernel(b)?).scale(&int(2)) - &one).scale(&pc))
    };

    let upper_ok = n >= 1 && nr >= x2;
    let why_upper = || format!("needs n >= x² (n={n}, x={x})");
    if upper_ok {
        rep.push(Claim::direct("even_upper_gate_range", ex(int(jmax)), Relation::Le, ex(nr.clone())));
        rep.push(Claim::direct(
            "even_upper_gate_cubic",
            ex(cubic_gate.0.clone()),
            Relation::Le,
            ex(cubic_gate.1.clone()),
        ));
        rep.push(Claim::certify("even_upper_sum", Relation::Le, prec, |b| Ok((p.clone(), upper_sum(b)?))));
        rep.push(Claim::certify("even_upper_integral", Relation::Le, prec, |b| {
            Ok((p.clone(), upper_integral(b)?))
        }));
        rep.push(Claim::certify("even_upper_sum_below_integral", Relation::Le, prec, |b| {
            Ok((upper_sum(b)?, upper_integral(b)?))
        }));
        rep.push(Claim::certify("even_upper", Relation::Le, prec, |b| {
            let u = inv_root_n_pi(n, b)?;
            let inner = &u + &(&grow(b)? * &mass(x, b)?);
            Ok((p.clone(), (&inner * &u.recip()?).scale(&pc)))
        }));
    } else {
        for name in [
            "even_upper_gate_range",
            "even_upper_gate_cubic",
            "even_upper_sum",
            "even_upper_integral",
            "even_upper_sum_below_integral",
            "even_upper",
        ] {
            rep.push(skip(name, Relation::Le, why_upper()));
        }
    }

    let lower_ok = n >= 1 && nr >= &x2 * int(2);
    let why_lower = || format!("needs n >= 2x² (n={n}, x={x})");
    if lower_ok {
        rep.push(Claim::direct("even_lower_gate_range", ex(int(2 * jmax)), Relation::Le, ex(nr.clone())));
        rep.push(Claim::direct(
            "even_lower_gate_cubic",
            ex(cubic_gate.0.clone()),
            Relation::Le,
            ex(cubic_gate.1.clone()),
        ));
        rep.push(Claim::certify("even_lower_sum", Relation::Ge, prec, |b| Ok((p.clone(), lower_sum(b)?))));
        rep.push(Claim::certify("even_lower_sum_above_integral", Relation::Ge, prec, |b| {
            Ok((lower_sum(b)?, lower_integral(b)?))
        }));
        rep.push(Claim::certify("even_lower", Relation::Ge, prec, |b| {
            let u = inv_root_n_pi(n, b)?;
            let inner = &(&shrink(b)? * &mass(x, b)?) - &u;
            Ok((p.clone(), (&inner * &u.recip()?).scale(&pc)))
        }));
    } else {
        for (name, rel) in [
            ("even_lower_gate_range", Relation::Le),
            ("even_lower_gate_cubic", Relation::Le),
            ("even_lower_sum", Relation::Ge),
            ("even_lower_sum_above_integral", Relation::Ge),
            ("even_lower", Relation::Ge),
        ] {
            rep.push(skip(name, rel, why_lower()));
        }
    }
    Ok(rep)
}

/// Bounds on `P_{2n+1}(x) / (√(nπ) P(S_{2n+1} = n))`, with the sum-to-integral
/// step and the shifted index `x_n = (x/2)√(2n+1) - 1/2 < x√(n/2)`.
/// Upper claims need `n >= x²`, lower claims `n >= 2x²`.
pub fn check_window_sandwich_odd(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(2 * n + 1, x.clone())?;
    let mut rep = CertificateReport::new(sym_instance("window-odd", n, 2 * n + 1, x));
    let p = window_prob_sym(&win)?.into_inner();
    let pc = central_pmf_odd(n).into_inner();
    let x2 = x * x;
    let x3 = &x2 * x;
    let nr = int(n);
    let one = Enclosure::one();
    let inv_n = if n == 0 { Rational::zero() } else { nr.recip() };

    let grow = |b: u64| -> Result<Enclosure> { Ok(exp(&cubic_over_root(&x3, n, b)?.scale(&rat(1, 2)), b)) };
    let shrink = |b: u64| -> Result<Enclosure> { Ok(exp(&-cubic_over_root(&x3, n, b)?, b)) };
    // x_n = (x/2)√(2n+1) - 1/2
    let shifted = |b: u64| -> Result<Enclosure> {
        Ok(&sqrt(&int(2 * n + 1), b)?.scale(&(x / int(2))) - &ex(rat(1, 2)))
    };
    let half_ratio = ex(&p / (&pc * int(2)));
    let normalized = |b: u64| -> Result<Enclosure> {
        Ok(inv_root_n_pi(n, b)?.scale(&(&p / &pc)))
    };

    let upper_ok = n >= 1 && nr >= x2;
    if upper_ok {
        let excess = (&x2 - int(1)).max(Rational::zero());
        rep.push(Claim::direct(
            "odd_index_shift",
            ex(&excess * &excess / int(16)),
            Relation::Lt,
            ex(&x2 * &nr / int(2)),
        ));
        rep.push(Claim::certify("odd_upper_sum", Relation::Le, prec, |b| {
            let k = kernel(&shifted(b)?, &inv_n, b)?;
            Ok((half_ratio.clone(), &one + &(&grow(b)? * &k)))
        }));
        rep.push(Claim::certify("odd_upper", Relation::Le, prec, |b| {
            let rhs = &sqrt(&nr, b)?.recip()?.scale(&int(2)) + &(&grow(b)? * &mass(x, b)?);
            Ok((normalized(b)?, rhs))
        }));
    } else {
        let why = format!("needs n >= max(x², 1) (n={n}, x={x})");
        rep.push(skip("odd_index_shift", Relation::Lt, why.clone()));
        rep.push(skip("odd_upper_sum", Relation::Le, why.clone()));
        rep.push(skip("odd_upper", Relation::Le, why));
    }

    let lower_ok = n >= 1 && nr >= &x2 * int(2);
    if lower_ok {
        rep.push(Claim::certify("odd_lower_sum", Relation::Le, prec, |b| {
            let k = kernel(&(&shifted(b)? + &one), &inv_n, b)?;
            Ok((&shrink(b)? * &k, half_ratio.clone()))
        }));
        rep.push(Claim::certify("odd_lower", Relation::Le, prec, |b| {
            Ok((&shrink(b)? * &mass(x, b)?, normalized(b)?))
        }));
    } else {
        let why = format!("needs n >= max(2x², 1) (n={n}, x={x})");
        rep.push(skip("odd_lower_sum", Relation::Le, why.clone()));
        rep.push(skip("odd_lower", Relation::Le, why));
    }
    Ok(rep)
}

/// `e^{(x³+c)/√n} - 1`-type bound: `exp(num / √n) - 1`.
fn exp_bound(num: &Rational, n: u64, bits: u64) -> Result<Enclosure> {
    let arg = sqrt(&int(n), bits)?.recip()?.scale(num);
    Ok(&exp(&arg, bits) - &Enclosure::one())
}

/// Non-asymptotic two-sided bound for the even case,
/// `|P_{2n}(x) - I(x)| <= e^{(x³+2)/√n} - 1` for `n >= max(2x², 1)`, with the
/// one-sided forms and each elementary step as separate claims.
pub fn certify_nonasymptotic_even(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(2 * n.max(1), x.clone())?;
    let mut rep = CertificateReport::new(sym_instance("nonasymptotic-even", n, 2 * n, x));
    if n == 0 {
        for name in ["even_upper_nonasymptotic", "even_lower_nonasymptotic", "even_abs_error"] {
            rep.push(skip(name, Relation::Le, "needs n >= 1".into()));
        }
        return Ok(rep);
    }
    let p = ex(window_prob_sym(&win)?.into_inner());
    let x2 = x * x;
    let x3 = &x2 * x;
    let nr = int(n);
    let one = Enclosure::one();
    let two_n = int(2 * n);

    // a = x³/(2√(2n)), u = 1/√(nπ), v = 1/√(2n), w = 1/(4n)
    let a = |b: u64| -> Result<Enclosure> { Ok(cubic_over_root(&x3, n, b)?.scale(&rat(1, 2))) };
    let u = |b: u64| inv_root_n_pi(n, b);
    let v = |b: u64| -> Result<Enclosure> { sqrt(&two_n, b)?.recip() };
    let w = ex(rat(1, 4 * n as i64));
    let combined = |b: u64| -> Result<Enclosure> {
        Ok(sqrt(&int(2 * n), b)?.recip()?.scale(&((&x3 + int(2)) / int(2))))
    };
    // e^{-1/(4n) - x³/√(2n)}
    let damped = |b: u64| -> Result<Enclosure> { Ok(exp(&-(&w + &a(b)?.scale(&int(2))), b)) };

    let upper_ok = nr >= x2;
    let why_upper = || format!("needs n >= max(x², 1) (n={n}, x={x})");
    let upper_claims: [(&str, Relation); 6] = [
        ("even_upper_with_central", Relation::Le),
        ("even_upper_expanded", Relation::Le),
        ("sum_le_product", Relation::Le),
        ("product_le_exp", Relation::Le),
        ("exp_le_combined", Relation::Le),
        ("even_upper_nonasymptotic", Relation::Le),
    ];
    if upper_ok {
        rep.push(Claim::certify(upper_claims[0].0, Relation::Le, prec, |b| {
            Ok((p.clone(), &(&exp(&a(b)?, b) * &mass(x, b)?) + &u(b)?))
        }));
        rep.push(Claim::certify(upper_claims[1].0, Relation::Le, prec, |b| {
            Ok((p.clone(), &(&(&mass(x, b)? + &exp(&a(b)?, b)) - &one) + &u(b)?))
        }));
        rep.push(Claim::certify(upper_claims[2].0, Relation::Le, prec, |b| {
            let e = exp(&a(b)?, b);
            let uu = u(b)?;
            Ok((&e + &uu, &e * &(&one + &uu)))
        }));
        rep.push(Claim::certify(upper_claims[3].0, Relation::Le, prec, |b| {
            let (aa, uu) = (a(b)?, u(b)?);
            Ok((&exp(&aa, b) * &(&one + &uu), exp(&(&aa + &uu), b)))
        }));
        rep.push(Claim::certify(upper_claims[4].0, Relation::Le, prec, |b| {
            Ok((exp(&(&a(b)? + &u(b)?), b), exp(&combined(b)?, b)))
        }));
        rep.push(Claim::certify(upper_claims[5].0, Relation::Le, prec, |b| {
            Ok((p.clone(), &(&mass(x, b)? + &exp(&combined(b)?, b)) - &one))
        }));
    } else {
        for (name, rel) in upper_claims {
            rep.push(skip(name, rel, why_upper()));
        }
    }

    let lower_ok = nr >= &x2 * int(2);
    let why_lower = || format!("needs n >= max(2x², 1) (n={n}, x={x})");
    let lower_claims: [(&str, Relation); 8] = [
        ("even_lower_with_central", Relation::Ge),
        ("damping_factor", Relation::Ge),
        ("even_lower_expanded", Relation::Ge),
        ("gap_to_exp_difference", Relation::Ge),
        ("exp_difference_to_single_exp", Relation::Ge),
        ("single_exp_to_combined", Relation::Ge),
        ("even_lower_nonasymptotic", Relation::Ge),
        ("even_abs_error", Relation::Le),
    ];
    if lower_ok {
        let big = |b: u64| exp_bound(&(&x3 + int(2)), n, b);
        let shrink_factor = |b: u64| -> Result<Enclosure> {
            // (1 + 1/(2n))^{-1/2}
            sqrt(&(int(1) + rat(1, 2 * n as i64)), b)?.recip()
        };
        rep.push(Claim::certify(lower_claims[0].0, Relation::Ge, prec, |b| {
            let s = &shrink_factor(b)? * &exp(&-a(b)?.scale(&int(2)), b);
            Ok((p.clone(), &(&s * &mass(x, b)?) - &v(b)?))
        }));
        rep.push(Claim::certify(lower_claims[1].0, Relation::Ge, prec, |b| {
            let s = &shrink_factor(b)? * &exp(&-a(b)?.scale(&int(2)), b);
            Ok((s, damped(b)?))
        }));
        rep.push(Claim::certify(lower_claims[2].0, Relation::Ge, prec, |b| {
            Ok((p.clone(), &(&(&mass(x, b)? + &damped(b)?) - &one) - &v(b)?))
        }));
        rep.push(Claim::certify(lower_claims[3].0, Relation::Ge, prec, |b| {
            let d = damped(b)?;
            let vv = v(b)?;
            Ok((&(&d - &one) - &vv, &d - &exp(&vv, b)))
        }));
        rep.push(Claim::certify(lower_claims[4].0, Relation::Ge, prec, |b| {
            let vv = v(b)?;
            let sum = &(&w + &a(b)?.scale(&int(2))) + &vv;
            Ok((&damped(b)? - &exp(&vv, b), &one - &exp(&sum, b)))
        }));
        rep.push(Claim::certify(lower_claims[5].0, Relation::Ge, prec, |b| {
            let sum = &(&w + &a(b)?.scale(&int(2))) + &v(b)?;
            Ok((&one - &exp(&sum, b), -big(b)?))
        }));
        rep.push(Claim::certify(lower_claims[6].0, Relation::Ge, prec, |b| {
            Ok((p.clone(), &mass(x, b)? - &big(b)?))
        }));
        rep.push(Claim::certify(lower_claims[7].0, Relation::Le, prec, |b| {
            Ok(((&p - &mass(x, b)?).abs(), big(b)?))
        }));
    } else {
        for (name, rel) in lower_claims {
            rep.push(skip(name, rel, why_lower()));
        }
    }
    Ok(rep)
}

/// `|P_{2n+1}(x) - I(x)| <= e^{(x³+2)/√n} - 1` for `n >= max(2x², 1)`, with
/// its two one-sided forms.
pub fn certify_nonasymptotic_odd(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(2 * n + 1, x.clone())?;
    let mut rep = CertificateReport::new(sym_instance("nonasymptotic-odd", n, 2 * n + 1, x));
    let names = [
        ("odd_upper_nonasymptotic", Relation::Le),
        ("odd_lower_nonasymptotic", Relation::Ge),
        ("odd_abs_error", Relation::Le),
    ];
    let x2 = x * x;
    if n == 0 || int(n) < &x2 * int(2) {
        for (name, rel) in names {
            rep.push(skip(name, rel, format!("needs n >= max(2x², 1) (n={n}, x={x})")));
        }
        return Ok(rep);
    }
    let p = ex(window_prob_sym(&win)?.into_inner());
    let num = &x2 * x + int(2);
    let big = |b: u64| exp_bound(&num, n, b);
    rep.push(Claim::certify(names[0].0, Relation::Le, prec, |b| {
        Ok((p.clone(), &mass(x, b)? + &big(b)?))
    }));
    rep.push(Claim::certify(names[1].0, Relation::Ge, prec, |b| {
        Ok((p.clone(), &mass(x, b)? - &big(b)?))
    }));
    rep.push(Claim::certify(names[2].0, Relation::Le, prec, |b| {
        Ok(((&p - &mass(x, b)?).abs(), big(b)?))
    }));
    Ok(rep)
}

/// `|P(|S_N - N/2| < x√N/2) - I(x)| <= e^{(4x³+8)/√N} - 1` for `N >= max(4x², 2)`.
pub fn certify_unified(n_total: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let win = SymmetricWindow::new(n_total, x.clone())?;
    let mut rep = CertificateReport::new(sym_instance("unified", n_total / 2, n_total, x));
    let x2 = x * x;
    let name = "unified_abs_error";
    if n_total < 2 || int(n_total) < &x2 * int(4) {
        rep.push(skip(name, Relation::Le, format!("needs N >= max(4x², 2) (N={n_total}, x={x})")));
        return Ok(rep);
    }
    let p = ex(window_prob_sym(&win)?.into_inner());
    let num = &x2 * x * int(4) + int(8);
    rep.push(Claim::certify(name, Relation::Le, prec, |b| {
        Ok(((&p - &mass(x, b)?).abs(), exp_bound(&num, n_total, b)?))
    }));
    Ok(rep)
}

/// Every even-case certificate at `(n, x)` in one report.
pub fn certify_even(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let parts = [
        check_window_sandwich_even(n, x, prec)?,
        certify_nonasymptotic_even(n, x, prec)?,
    ];
    Ok(merge(sym_instance("sym-even", n, 2 * n, x), parts))
}

/// Every odd-case certificate at `(n, x)` in one report.
pub fn certify_odd(n: u64, x: &Rational, prec: &Precision) -> Result<CertificateReport> {
    let parts = [
        check_window_sandwich_odd(n, x, prec)?,
        certify_nonasymptotic_odd(n, x, prec)?,
    ];
    Ok(merge(sym_instance("sym-odd", n, 2 * n + 1, x), parts))
}

/// The probability of `x√N/2 <= |S_N - N/2| < y√N/2` and an enclosure of
/// the matching Gaussian mass `I(y) - I(x)`.
pub fn interval_difference(
    x: &Rational,
    y: &Rational,
    n_total: u64,
    prec: &Precision,
) -> Result<(Rational, Enclosure)> {
    if x >= y {
        return Err(Error::InvalidArgument(format!("need x < y, got x={x}, y={y}")));
    }
    let inner = window_prob_sym(&SymmetricWindow::new(n_total, x.clone())?)?.into_inner();
    let outer = window_prob_sym(&SymmetricWindow::new(n_total, y.clone())?)?.into_inner();
    let bits = prec.initial_bits();
    let gauss = &mass(y, bits)? - &mass(x, bits)?;
    Ok((outer - inner, gauss.round(bits)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Verdict;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn pi_bounds_small_cases() {
        let rep = check_pi_bounds_even(2, 1, &prec()).unwrap();
        assert_eq!(rep.overall(), Verdict::Holds);
        assert_eq!(rep.claim("pi_even_upper[0]").unwrap().verdict, Verdict::Holds);
        let rep = check_pi_bounds_even(100, 100, &prec()).unwrap();
        assert_eq!(rep.count("Violated") + rep.count("Undecided"), 0);
        assert!(rep.claim("pi_even_lower[51]").unwrap().verdict.is_skipped());
        assert!(check_pi_bounds_even(3, 4, &prec()).is_err());
        assert_eq!(check_pi_bounds_odd(40, 20, &prec()).unwrap().overall(), Verdict::Holds);
    }

    #[test]
    fn even_sandwich_examples() {
        let rep = check_window_sandwich_even(4, &int(1), &prec()).unwrap();
        assert_eq!(rep.overall(), Verdict::Holds, "{}", rep.to_key_value());
        let rep = check_window_sandwich_even(2, &int(1), &prec()).unwrap();
        assert_eq!(rep.claim("even_lower").unwrap().verdict, Verdict::Holds);
        let rep = check_window_sandwich_even(3, &int(2), &prec()).unwrap();
        assert!(rep.claim("even_upper").unwrap().verdict.is_skipped());
    }

    #[test]
    fn odd_sandwich_examples() {
        let rep = check_window_sandwich_odd(4, &int(1), &prec()).unwrap();
        for name in ["odd_index_shift", "odd_upper_sum", "odd_upper", "odd_lower"] {
            assert_eq!(rep.claim(name).unwrap().verdict, Verdict::Holds, "{name}");
        }
        // x_n = 1 is an integer here, so widening the integral to x_n + 1 overshoots
        assert_eq!(rep.claim("odd_lower_sum").unwrap().verdict, Verdict::Violated);
        let rep = check_window_sandwich_odd(1, &int(1), &prec()).unwrap();
        assert_eq!(rep.claim("odd_upper").unwrap().verdict, Verdict::Holds);
        let rep = check_window_sandwich_odd(3, &int(2), &prec()).unwrap();
        assert!(rep.overall().is_skipped());
    }

    #[test]
    fn odd_lower_bound_fails_for_an_empty_window() {
        // P_3(1/2) = 0: no index satisfies |k - 3/2| < √3/4
        let rep = check_window_sandwich_odd(1, &rat(1, 2), &prec()).unwrap();
        assert_eq!(rep.claim("odd_lower").unwrap().verdict, Verdict::Violated);
        assert_eq!(rep.claim("odd_lower_sum").unwrap().verdict, Verdict::Violated);
    }

    #[test]
    fn nonasymptotic_examples() {
        let rep = certify_nonasymptotic_even(4, &int(1), &prec()).unwrap();
        assert_eq!(rep.overall(), Verdict::Holds, "{}", rep.to_key_value());
        assert_eq!(certify_nonasymptotic_even(200, &int(1), &prec()).unwrap().overall(), Verdict::Holds);
        assert!(certify_nonasymptotic_even(1, &int(1), &prec()).unwrap().claim("even_abs_error").unwrap().verdict.is_skipped());
        assert_eq!(certify_nonasymptotic_odd(2, &int(1), &prec()).unwrap().overall(), Verdict::Holds);
        assert_eq!(certify_nonasymptotic_odd(50, &int(1), &prec()).unwrap().overall(), Verdict::Holds);
        assert!(certify_nonasymptotic_odd(1, &int(1), &prec()).unwrap().overall().is_skipped());
    }

    #[test]
    fn unified_examples() {
        assert_eq!(certify_unified(8, &int(1), &prec()).unwrap().overall(), Verdict::Holds);
        assert_eq!(certify_unified(9, &int(1), &prec()).unwrap().overall(), Verdict::Holds);
        assert!(certify_unified(3, &int(1), &prec()).unwrap().overall().is_skipped());
    }

    #[test]
    fn interval_difference_example() {
        let (p, g) = interval_difference(&int(1), &int(2), 8, &prec()).unwrap();
        assert_eq!(p, rat(56, 256));
        assert!(g.agrees_with_decimal("0.27181024397").unwrap());
        assert!(interval_difference(&int(1), &int(1), 8, &prec()).is_err());
    }

    #[test]
    fn odd_ratio_bracket_holds() {
        let rep = check_odd_ratio_bracket(50, &int(1), &prec()).unwrap();
        assert_eq!(rep.overall(), Verdict::Holds);
    }
}
