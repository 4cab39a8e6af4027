//! Certified enclosures of the Gaussian mass
//! `I(x) = ∫_{-x}^{x} e^{-s²/2} ds / √(2π)`.
//!
//! The main route is the alternating Taylor series
//! `∫_0^b e^{-c t²} dt = Σ_k (-c)^k b^{2k+1} / (k! (2k+1))`. Once its terms
//! decrease, the partial sums bracket the integral, so the truncation
//! error is the first omitted term. For large `c b²` the complementary
//! tail `∫_b^∞ e^{-c t²} dt ≤ e^{-c b²} / (2 c b)` is used instead.
//!
//! [`step_bracket`] is the monotone Riemann bracketing of a decreasing
//! integrand. It converges only linearly in the number of partitions and
//! serves as an independent cross-check.

use crate::error::{Error, Result};
use crate::exactnum::{
    exp_rational, int, pi_bits, rat, refine, round_sig, Enclosure, Precision, Rational, Rounding,
};
use crate::exec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianIntegral {
    pub x: Rational,
    /// Contains `I(x)`; always inside `[0, 1]`.
    pub enclosure: Enclosure,
    /// Series terms used in the last refinement round.
    pub terms: u64,
    pub exhausted: bool,
}

/// `I(x)` refined until the width target of `prec` is met.
pub fn gauss_integral(x: &Rational, prec: &Precision) -> Result<GaussianIntegral> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("x must be positive, got {x}")));
    }
    let mut terms = 0;
    let refined = refine(prec, |bits| {
        let (enc, t) = gauss_mass(x, bits)?;
        terms = t;
        Ok(enc)
    })?;
    Ok(GaussianIntegral {
        x: x.clone(),
        enclosure: refined.enclosure,
        terms,
        exhausted: refined.exhausted,
    })
}

/// A certified upper bound on `I(x)` that never exceeds 1.
pub fn gauss_tail_bound(x: &Rational) -> Result<Rational> {
    let g = gauss_integral(x, &Precision::decimal(12, 4))?;
    Ok(g.enclosure.hi().clone().min(Rational::one()))
}

/// `I(x)` at a fixed working precision, with the series term count.
pub fn gauss_mass(x: &Rational, bits: u64) -> Result<(Enclosure, u64)> {
    let (half, terms) = kernel_integral(x, &rat(1, 2), bits)?;
    let norm = sqrt_two_over_pi(bits)?;
    let enc = (&half * &norm).round(bits);
    Ok((enc.clamp(&Rational::zero(), &Rational::one()), terms))
}

/// `I(x)` at a fixed working precision.
pub fn gauss_mass_bits(x: &Rational, bits: u64) -> Result<Enclosure> {
    gauss_mass(x, bits).map(|(e, _)| e)
}

/// `√(2/π)` enclosed from the `pi` enclosure.
pub fn sqrt_two_over_pi(bits: u64) -> Result<Enclosure> {
    let two_over_pi = pi_bits(bits + 8).recip()?.scale(&int(2));
    two_over_pi.sqrt(bits + 8)
}

/// `∫_0^b e^{-c t²} dt` for `b, c >= 0`, returned with the number of series
/// terms used (0 when the tail form or a closed form applies).
pub fn kernel_integral(b: &Rational, c: &Rational, bits: u64) -> Result<(Enclosure, u64)> {
    if b.is_negative() || c.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "kernel integral needs b, c >= 0, got b={b}, c={c}"
        )));
    }
    if b.is_zero() {
        return Ok((Enclosure::zero(), 0));
    }
    if c.is_zero() {
        return Ok((Enclosure::exact(b.clone()), 0));
    }
    let cb2 = c * b * b;
    // log2(e) < 1.4427; the tail is below 2^-(bits+16) once c b² is this large
    let tail_threshold = int(bits + 16) * rat(10_000, 14_426);
    if cb2 > tail_threshold {
        return Ok((tail_form(b, c, &cb2, bits)?, 0));
    }
    Ok(series(b, &cb2, bits))
}

fn series(b: &Rational, cb2: &Rational, bits: u64) -> (Enclosure, u64) {
    // the largest term is about e^{c b²}; carry enough bits to absorb the cancellation
    let cb2_f = cb2.to_f64().unwrap_or(f64::MAX);
    let guard = (cb2_f * std::f64::consts::LOG2_E).ceil() as u64 + 16;
    let wbits = bits + guard;
    let eps = b * Rational::new(BigInt::one(), BigInt::one() << (bits + 8));

    // t_k = c^k b^(2k+1) / k!, kept as a directed pair
    let mut t_lo = b.clone();
    let mut t_hi = b.clone();
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let d = int(2 * k + 1);
        let a_lo = round_sig(&(&t_lo / &d), wbits, Rounding::Down);
        let a_hi = round_sig(&(&t_hi / &d), wbits, Rounding::Up);
        if k.is_multiple_of(2) {
            lo += &a_lo;
            hi += &a_hi;
        } else {
            lo -= &a_hi;
            hi -= &a_lo;
        }
        let step = cb2 / int(k + 1);
        t_lo = round_sig(&(&t_lo * &step), wbits, Rounding::Down);
        t_hi = round_sig(&(&t_hi * &step), wbits, Rounding::Up);
        k += 1;
        // terms decrease from index k on once k >= c b²; then the omitted
        // alternating tail is bounded by the next term
        if int(k) >= *cb2 {
            let next = round_sig(&(&t_hi / int(2 * k + 1)), wbits, Rounding::Up);
            if next < eps {
                lo -= &next;
                hi += &next;
                break;
            }
        }
    }
    let lo = lo.max(Rational::zero());
    let hi = hi.min(b.clone());
    (Enclosure::new(lo, hi).expect("series bracket is ordered").round(bits), k)
}

/// `∫_0^b = ½√(π/c) − ∫_b^∞`, with `0 <= ∫_b^∞ e^{-c t²} <= e^{-c b²} / (2 c b)`.
fn tail_form(b: &Rational, c: &Rational, cb2: &Rational, bits: u64) -> Result<Enclosure> {
    let full = pi_bits(bits + 8).scale(&c.recip()).sqrt(bits + 8)?.scale(&rat(1, 2));
    let tail_hi = exp_rational(&-cb2.clone(), bits + 8).hi() / (int(2) * c * b);
    let lo = full.lo() - tail_hi;
    Ok(Enclosure::new(lo, full.hi().clone())?.round(bits))
}

/// Monotone step bracketing of `∫_0^b e^{-c t²} dt` on `partitions` equal
/// cells: right endpoints give the lower sum, left endpoints the upper sum.
pub fn step_bracket(b: &Rational, c: &Rational, partitions: u64, bits: u64) -> Result<Enclosure> {
    if b.is_negative() || c.is_negative() || partitions == 0 {
        return Err(Error::InvalidArgument(format!(
            "step bracket needs b, c >= 0 and partitions >= 1, got b={b}, c={c}, partitions={partitions}"
        )));
    }
    let h = b / int(partitions);
    let nodes: Vec<u64> = (0..=partitions).collect();
    let values = exec::map(&nodes, |&i| {
        let t = &h * int(i);
        exp_rational(&-(c * &t * &t), bits)
    });
    let upper: Rational = values[..values.len() - 1].iter().map(|e| e.hi().clone()).sum();
    let lower: Rational = values[1..].iter().map(|e| e.lo().clone()).sum();
    Enclosure::new(lower * &h, upper * &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_rational;

    fn dec(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn agrees(e: &Enclosure, reference: &str) -> bool {
        e.agrees_with_decimal(reference).unwrap()
    }

    #[test]
    fn reference_values() {
        let prec = Precision::decimal(9, 6);
        let g1 = gauss_integral(&int(1), &prec).unwrap();
        assert!(agrees(&g1.enclosure, "0.682689492137"));
        assert!(g1.enclosure.width() <= prec.target_width);
        let g2 = gauss_integral(&int(2), &prec).unwrap();
        assert!(agrees(&g2.enclosure, "0.954499736104"));
        let half = gauss_integral(&rat(1, 2), &prec).unwrap().enclosure;
        assert!(agrees(&half, "0.3829249225480"));
    }

    #[test]
    fn tiny_and_huge_arguments() {
        let prec = Precision::decimal(9, 4);
        let tiny = gauss_integral(&rat(1, 1000), &prec).unwrap().enclosure;
        assert!(Enclosure::new(int(0), rat(1, 100)).unwrap().contains_enclosure(&tiny));
        let big = gauss_tail_bound(&int(10)).unwrap();
        assert!(big <= int(1) && big >= rat(99, 100));
        let half = gauss_tail_bound(&rat(1, 2)).unwrap();
        assert!(half >= rat(38, 100) && half <= rat(39, 100));
        let far = gauss_integral(&int(200), &prec).unwrap().enclosure;
        assert!(far.hi() <= &int(1) && far.lo() > &dec("0.999999999"));
    }

    #[test]
    fn nonpositive_x_is_rejected() {
        assert!(gauss_integral(&int(0), &Precision::default()).is_err());
        assert!(gauss_integral(&int(-1), &Precision::default()).is_err());
    }

    #[test]
    fn tail_form_agrees_with_series() {
        let b = int(8);
        let c = rat(1, 2);
        let cb2 = &c * &b * &b;
        let s = series(&b, &cb2, 64).0;
        let t = tail_form(&b, &c, &cb2, 64).unwrap();
        assert!(s.intersect(&t).is_some());
    }

    #[test]
    fn step_bracket_contains_series_and_tightens() {
        let (b, c) = (int(1), rat(1, 2));
        let series = kernel_integral(&b, &c, 80).unwrap().0;
        let coarse = step_bracket(&b, &c, 16, 80).unwrap();
        let fine = step_bracket(&b, &c, 32, 80).unwrap();
        assert!(coarse.contains_enclosure(&series));
        assert!(fine.contains_enclosure(&series));
        assert!(fine.lo() >= coarse.lo() && fine.hi() <= coarse.hi());
    }
}
