//! Certificates for general `p`: bounds on the ratios `π(j)`, the
//! two-sided bound on the right half-window `m <= S_n < m + x√(npq)`, and
//! the reflection that produces the left half-window.

use crate::binom::{
    pi_gen, pmf, window_prob_gen, window_prob_gen_decomposed, window_prob_gen_direct,
    GeneralWindow,
};
use crate::certificate::{CertificateReport, Claim, Instance, Relation, SkipReason};
use crate::error::Result;
use crate::exactnum::{int, rat, Enclosure, Precision, Rational};
use crate::reals::{ex, exp, exp_q, mass, pi, sqrt};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCertificate {
    pub report: CertificateReport,
    pub p: Rational,
    pub m: u64,
    pub delta: Rational,
}

fn gen_instance(kind: &'static str, win: &GeneralWindow) -> Instance {
    Instance::new(kind)
        .with("n", win.n())
        .with("p", win.p())
        .with("x", win.x())
        .with("m", win.m())
        .with("delta", win.delta())
}

/// `π(j)`, taken as 0 past the support (`m + j > n`), where the product has a
/// zero factor.
fn ratio(j: u64, win: &GeneralWindow) -> Result<Rational> {
    if win.m() + j > win.n() {
        Ok(Rational::zero())
    } else {
        pi_gen(j, win)
    }
}

/// `π(j) <= exp(-(j-1)²/(2(n+1)pq) + j³/(2n²p²q))` for `1 <= j <= (n+1)p`.
/// At `j = 0` the right side is below 1, so the claim is skipped by convention.
pub fn check_pi_gen_upper(win: &GeneralWindow, j: u64, prec: &Precision) -> Result<Claim> {
    let name = format!("gen_ratio_upper[{j}]");
    let (n, p, q) = (int(win.n()), win.p(), win.q());
    if j == 0 {
        return Ok(Claim::skipped(
            name,
            Relation::Le,
            SkipReason::Convention("the bound is asserted for j >= 1; the j = 0 term is absorbed in the summed form".into()),
        ));
    }
    let jr = int(j);
    if jr > (&n + int(1)) * p {
        return Ok(Claim::skipped(
            name,
            Relation::Le,
            SkipReason::Precondition(format!("needs j <= (n+1)p (j={j})")),
        ));
    }
    let value = ex(ratio(j, win)?);
    let jm1 = &jr - int(1);
    let arg = -(&jm1 * &jm1) / (int(2) * (&n + int(1)) * p * q)
        + &jr * &jr * &jr / (int(2) * &n * &n * p * p * q);
    Ok(Claim::certify(name, Relation::Le, prec, |b| Ok((value.clone(), exp_q(&arg, b)))))
}

/// `π(j) >= exp(-(j+1)²/(2npq) - (j+1)³/(n²pq²))` for `0 <= j <= (n+1)pq/2`.
pub fn check_pi_gen_lower(win: &GeneralWindow, j: u64, prec: &Precision) -> Result<Claim> {
    let name = format!("gen_ratio_lower[{j}]");
    let (n, p, q) = (int(win.n()), win.p(), win.q());
    let jr = int(j);
    if &jr * int(2) > (&n + int(1)) * p * q {
        return Ok(Claim::skipped(
            name,
            Relation::Ge,
            SkipReason::Precondition(format!("needs j <= (n+1)pq/2 (j={j})")),
        ));
    }
    let value = ex(ratio(j, win)?);
    let jp1 = &jr + int(1);
    let arg = -(&jp1 * &jp1) / (int(2) * &n * p * q) - &jp1 * &jp1 * &jp1 / (&n * &n * p * q * q);
    Ok(Claim::certify(name, Relation::Ge, prec, |b| Ok((value.clone(), exp_q(&arg, b)))))
}

/// Largest `j >= 0` with `j² < x² npq`, ignoring the support bound.
fn max_offset(win: &GeneralWindow) -> u64 {
    let hw = win.half_width_sq();
    let mut j = 0u64;
    // the window is at most a few thousand wide in practice
    while int((j + 1) * (j + 1)) < hw {
        j += 1;
    }
    j
}

/// Two-sided bound on the right half-window probability `P_n(x)`:
///
/// * upper, for `n >= (q/p) x²`:
///   `P_n(x) <= √(2πnpq) P(S_n = m) e^{(x³+1)/√(pn)} (1/√(npq) + I(x)/2)`,
/// * lower, for `x√(npq) >= max(1, 2x²)`:
///   `P_n(x) >= √(2πnpq) P(S_n = m) e^{-8x³/√(qn)} (I(x)/2 - 1/√(npq))`,
///
/// plus the exact decomposition through the ratios and the sum forms.
pub fn check_general_sandwich(win: &GeneralWindow, prec: &Precision) -> Result<GeneralCertificate> {
    let mut rep = CertificateReport::new(gen_instance("general", win));
    let (nn, p, q, x) = (win.n(), win.p(), win.q(), win.x());
    let n = int(nn);
    let npq = win.variance();
    let x2 = x * x;
    let x3 = &x2 * x;

    let direct = window_prob_gen_direct(win)?;
    let decomposed = window_prob_gen_decomposed(win)?;
    rep.push(Claim::direct(
        "gen_decomposition",
        ex(direct.clone()),
        Relation::Eq,
        ex(decomposed),
    ));
    let prob = ex(window_prob_gen(win)?.into_inner());
    let central = pmf(nn, p, win.m() as i64)?.into_inner();
    let jmax = max_offset(win);

    // √(2πnpq) P(S_n = m)
    let scale = |b: u64| -> Result<Enclosure> {
        Ok(pi(b).scale(&(&npq * int(2))).sqrt(b + 8)?.scale(&central))
    };
    let inv_sd = |b: u64| -> Result<Enclosure> { sqrt(&npq, b)?.recip() };

    let upper_ok = &n * p >= q * &x2;
    if upper_ok {
        let jr = int(jmax);
        rep.push(Claim::direct("gen_upper_gate_range", ex(jr.clone()), Relation::Le, ex(&n * p)));
        let lhs = pow_q(&(&jr * &jr * &jr / (int(2) * &n * &n * p * p * q)), 2);
        rep.push(Claim::direct(
            "gen_upper_gate_cubic",
            ex(lhs),
            Relation::Le,
            ex(pow_q(&x3, 2) / (p * &n)),
        ));
        // x³/√(pn)
        let slack = |b: u64| -> Result<Enclosure> { Ok(sqrt(&(p * &n), b)?.recip()?.scale(&x3)) };
        rep.push(Claim::certify("gen_upper_sum", Relation::Le, prec, |b| {
            let s = slack(b)?;
            let denom = int(2) * (&n + int(1)) * p * q;
            let mut total = Enclosure::zero();
            // π(0) = 1 enters as is; the pointwise bound only covers j >= 1
            for j in 0..=jmax {
                let d = if j == 0 { int(0) } else { int(j as i64 - 1) };
                let arg = &s - &ex(&d * &d / &denom);
                total = &total + &exp(&arg, b);
            }
            Ok((prob.clone(), total.scale(&central)))
        }));
        rep.push(Claim::certify("gen_upper", Relation::Le, prec, |b| {
            let arg = sqrt(&(p * &n), b)?.recip()?.scale(&(&x3 + int(1)));
            let inner = &inv_sd(b)? + &mass(x, b)?.scale(&rat(1, 2));
            Ok((prob.clone(), &(&scale(b)? * &exp(&arg, b)) * &inner))
        }));
    } else {
        let why = format!("needs n >= (q/p) x² (n={nn}, p={p}, x={x})");
        for (name, rel) in [
            ("gen_upper_gate_range", Relation::Le),
            ("gen_upper_gate_cubic", Relation::Le),
            ("gen_upper_sum", Relation::Le),
            ("gen_upper", Relation::Le),
        ] {
            rep.push(Claim::skipped(name, rel, SkipReason::Precondition(why.clone())));
        }
    }

    // x√(npq) >= max(1, 2x²)  <=>  x² npq >= 1 and npq >= 4x²
    let lower_ok = &x2 * &npq >= Rational::one() && npq >= &x2 * int(4);
    if lower_ok {
        let jr = int(jmax);
        rep.push(Claim::direct(
            "gen_lower_gate_range",
            ex(&jr * int(2)),
            Relation::Le,
            ex((&n + int(1)) * p * q),
        ));
        let jp1 = &jr + int(1);
        let lhs = pow_q(&(&jp1 * &jp1 * &jp1 / (&n * &n * p * q * q)), 2);
        rep.push(Claim::direct(
            "gen_lower_gate_cubic",
            ex(lhs),
            Relation::Le,
            ex(int(64) * pow_q(&x3, 2) / (q * &n)),
        ));
        // 8x³/√(qn)
        let slack = |b: u64| -> Result<Enclosure> { Ok(sqrt(&(q * &n), b)?.recip()?.scale(&(&x3 * int(8)))) };
        rep.push(Claim::certify("gen_lower_sum", Relation::Ge, prec, |b| {
            let s = slack(b)?;
            let denom = int(2) * &npq;
            let mut total = Enclosure::zero();
            for j in 0..=jmax {
                let d = int(j + 1);
                let arg = -(&s + &ex(&d * &d / &denom));
                total = &total + &exp(&arg, b);
            }
            Ok((prob.clone(), total.scale(&central)))
        }));
        rep.push(Claim::certify("gen_lower", Relation::Ge, prec, |b| {
            let arg = -slack(b)?;
            let inner = &mass(x, b)?.scale(&rat(1, 2)) - &inv_sd(b)?;
            Ok((prob.clone(), &(&scale(b)? * &exp(&arg, b)) * &inner))
        }));
    } else {
        let why = format!("needs x√(npq) >= max(1, 2x²) (n={nn}, p={p}, x={x})");
        for (name, rel) in [
            ("gen_lower_gate_range", Relation::Le),
            ("gen_lower_gate_cubic", Relation::Le),
            ("gen_lower_sum", Relation::Ge),
            ("gen_lower", Relation::Ge),
        ] {
            rep.push(Claim::skipped(name, rel, SkipReason::Precondition(why.clone())));
        }
    }

    // pointwise ratio bounds over the window offsets
    for j in 0..=jmax {
        rep.push(check_pi_gen_upper(win, j, prec)?);
        rep.push(check_pi_gen_lower(win, j, prec)?);
    }

    Ok(GeneralCertificate {
        report: rep,
        p: p.clone(),
        m: win.m(),
        delta: win.delta().clone(),
    })
}

fn pow_q(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * r)
}

/// The left half-window `np - x√(npq) < S_n < np` evaluated three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftReflection {
    /// Direct summation of the `B(n, p)` pmf over the left window.
    pub direct: Rational,
    /// The same event as `nq < n - S_n < nq + x√(npq)`, summed with the `B(n, q)` pmf.
    pub flipped: Rational,
    /// The anchored right half-window of `B(n, q)`, `m' <= S' < m' + x√(npq)`.
    pub anchored: Rational,
    /// Values `k' = n - k` in the reflected left window but not the anchored one.
    pub only_reflected: Vec<u64>,
    /// Values `k'` in the anchored window but not the reflected left window.
    pub only_anchored: Vec<u64>,
}

impl LeftReflection {
    /// `anchored + Σ_{only_reflected} - Σ_{only_anchored}` equals `direct`.
    pub fn reconciles(&self, win: &GeneralWindow) -> Result<bool> {
        let mut v = self.anchored.clone();
        for &k in &self.only_reflected {
            v += pmf(win.n(), win.q(), k as i64)?.into_inner();
        }
        for &k in &self.only_anchored {
            v -= pmf(win.n(), win.q(), k as i64)?.into_inner();
        }
        Ok(v == self.direct && self.direct == self.flipped)
    }
}

/// `(k - c)² < x² npq` for an exact centre `c`.
fn within(k: u64, centre: &Rational, hw: &Rational) -> bool {
    let d = int(k) - centre;
    &(&d * &d) < hw
}

pub fn reflect_left_window(win: &GeneralWindow) -> Result<LeftReflection> {
    let (n, p) = (win.n(), win.p());
    let np = int(n) * p;
    let nq = int(n) * win.q();
    let hw = win.half_width_sq();
    let mut direct = Rational::zero();
    let mut flipped = Rational::zero();
    let mut reflected = Vec::new();
    for k in 0..=n {
        if int(k) < np && within(k, &np, &hw) {
            direct += pmf(n, p, k as i64)?.into_inner();
            reflected.push(n - k);
        }
    }
    reflected.sort_unstable();
    for &k2 in &reflected {
        debug_assert!(int(k2) > nq && within(k2, &nq, &hw));
        flipped += pmf(n, win.q(), k2 as i64)?.into_inner();
    }
    let mirror = win.flipped()?;
    let anchored_set: Vec<u64> = (0..=n).filter(|&k| mirror.contains(k)).collect();
    let anchored = window_prob_gen(&mirror)?.into_inner();
    let only_reflected = reflected.iter().copied().filter(|k| !anchored_set.contains(k)).collect();
    let only_anchored = anchored_set.iter().copied().filter(|k| !reflected.contains(k)).collect();
    Ok(LeftReflection {
        direct,
        flipped,
        anchored,
        only_reflected,
        only_anchored,
    })
}

/// A symmetric interval `|S_n - np| < x√(npq)` assembled from half-windows
/// anchored at the central index `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricComposition {
    /// `P(|S_n - np| < x√(npq))`, summed directly.
    pub target: Rational,
    /// `P(m <= S_n < m + x√(npq))`.
    pub right: Rational,
    /// `P(m - x√(npq) < S_n <= m)`.
    pub left: Rational,
    /// `P(S_n = m)`.
    pub central: Rational,
    /// `right + left - central`: the central atom counted once.
    pub shared: Rational,
    /// `right + left`: the central atom counted in both halves.
    pub summed: Rational,
    /// Indices where the composed event (central atom once) and the target
    /// event differ.
    pub discrepancy: Vec<u64>,
}

pub fn compose_symmetric(win: &GeneralWindow) -> Result<SymmetricComposition> {
    let (n, p, m) = (win.n(), win.p(), win.m());
    let np = int(n) * p;
    let hw = win.half_width_sq();
    let mut target = Rational::zero();
    let mut left = Rational::zero();
    let mut discrepancy = Vec::new();
    let mr = int(m);
    for k in 0..=n {
        let pk = pmf(n, p, k as i64)?.into_inner();
        let in_target = within(k, &np, &hw);
        let in_left = k <= m && within(k, &mr, &hw);
        let in_composed = in_left || win.contains(k);
        if in_target {
            target += &pk;
        }
        if in_left {
            left += &pk;
        }
        if in_target != in_composed {
            discrepancy.push(k);
        }
    }
    let right = window_prob_gen(win)?.into_inner();
    let central = pmf(n, p, m as i64)?.into_inner();
    let summed = &right + &left;
    let shared = &summed - &central;
    Ok(SymmetricComposition {
        target,
        right,
        left,
        central,
        shared,
        summed,
        discrepancy,
    })
}
