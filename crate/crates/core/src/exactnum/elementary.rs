//! Outward-rounded enclosures of `exp`, `sqrt` and `pi`.

use super::rational::{int, rat, round_sig, Rational, Rounding};
use super::{log2_upper, Enclosure, Precision};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An enclosure produced by the refinement loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refined {
    pub enclosure: Enclosure,
    /// The refinement budget ran out before the target width was reached.
    pub exhausted: bool,
    pub rounds: u32,
}

/// Runs `f` at doubling working precision until the width target is met,
/// intersecting successive results so refinements are nested.
pub(crate) fn refine<F>(prec: &Precision, mut f: F) -> Result<Refined>
where
    F: FnMut(u64) -> Result<Enclosure>,
{
    let mut best: Option<Enclosure> = None;
    for round in 0..prec.max_refinements {
        let next = f(prec.bits_for_round(round))?;
        let cur = match best {
            Some(prev) => prev.intersect(&next).unwrap_or(next),
            None => next,
        };
        if cur.width() <= prec.target_width {
            return Ok(Refined {
                enclosure: cur,
                exhausted: false,
                rounds: round + 1,
            });
        }
        best = Some(cur);
    }
    Ok(Refined {
        enclosure: best.unwrap_or_else(Enclosure::zero),
        exhausted: true,
        rounds: prec.max_refinements,
    })
}

/// Enclosure of `exp(t)` meeting the width target of `prec` when possible.
pub fn exp_enclose(t: &Rational, prec: &Precision) -> Refined {
    refine(prec, |bits| Ok(exp_rational(t, bits))).expect("exp is total")
}

/// Enclosure of `sqrt(t)`; fails for negative `t`.
pub fn sqrt_enclose(t: &Rational, prec: &Precision) -> Result<Refined> {
    if t.is_negative() {
        return Err(Error::NegativeSqrt(t.to_string()));
    }
    refine(prec, |bits| sqrt_rational(t, bits))
}

/// Enclosure of `pi` with width at most the target.
pub fn pi_enclose(prec: &Precision) -> Refined {
    refine(prec, |bits| Ok(pi_bits(bits))).expect("pi is total")
}

/// `exp(t)` at a fixed working precision of about `bits` significant bits.
///
/// Argument reduction `exp(t) = exp(t / 2^k)^(2^k)` with `|t / 2^k| <= 1/16`,
/// then a truncated Taylor series with the Lagrange remainder bounded by
/// `2 r^N / N!`. Negative arguments go through the reciprocal.
pub fn exp_rational(t: &Rational, bits: u64) -> Enclosure {
    if t.is_zero() {
        return Enclosure::one();
    }
    let a = t.abs();
    // |a| < 2^e, so k = e + 4 gives a / 2^k < 1/16
    let k = (log2_upper(&a) + 4).max(0) as u64;
    let wbits = bits + k + 24;
    let r = &a / int(BigInt::one() << k);
    let r_lo = round_sig(&r, wbits, Rounding::Down);
    let r_hi = round_sig(&r, wbits, Rounding::Up);

    let lower = taylor_sum(&r_lo, wbits, Rounding::Down);
    let upper = taylor_sum(&r_hi, wbits, Rounding::Up);

    let mut lo = lower;
    let mut hi = upper;
    for _ in 0..k {
        lo = round_sig(&(&lo * &lo), wbits, Rounding::Down);
        hi = round_sig(&(&hi * &hi), wbits, Rounding::Up);
    }
    let enc = if t.is_negative() {
        Enclosure::from_sorted(
            round_sig(&hi.recip(), wbits, Rounding::Down),
            round_sig(&lo.recip(), wbits, Rounding::Up),
        )
    } else {
        Enclosure::from_sorted(lo, hi)
    };
    enc.round(bits)
}

/// Taylor partial sum of `exp(r)` for `0 <= r <= 1/16`, rounded in direction
/// `dir`; the upper variant adds the truncation remainder.
fn taylor_sum(r: &Rational, wbits: u64, dir: Rounding) -> Rational {
    let eps = Rational::new(BigInt::one(), BigInt::one() << (wbits + 8));
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut i: u64 = 1;
    loop {
        term = round_sig(&(&term * r / int(i)), wbits, dir);
        if term.is_zero() {
            break;
        }
        sum += &term;
        i += 1;
        if term < eps {
            break;
        }
    }
    if dir == Rounding::Up {
        // remainder after the last included term is at most 2 * next term
        let next = round_sig(&(&term * r / int(i)), wbits, Rounding::Up);
        sum += next * int(2);
    }
    round_sig(&sum, wbits, dir)
}

/// `sqrt(t)` for `t >= 0` at about `bits` significant bits. Perfect squares
/// come back exact.
pub fn sqrt_rational(t: &Rational, bits: u64) -> Result<Enclosure> {
    if t.is_negative() {
        return Err(Error::NegativeSqrt(t.to_string()));
    }
    if t.is_zero() {
        return Ok(Enclosure::zero());
    }
    let (n, d) = (t.numer(), t.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        return Ok(Enclosure::exact(Rational::new(sn, sd)));
    }
    let e = log2_upper(t);
    let s = (bits as i64 - e / 2 + 2).max(0) as usize;
    let v = (n << (2 * s)).div_floor(d);
    let root = v.sqrt();
    let denom = BigInt::one() << s;
    Ok(Enclosure::from_sorted(
        Rational::new(root.clone(), denom.clone()),
        Rational::new(root + 1, denom),
    ))
}

/// Enclosure of `pi` from Machin's formula `16 atan(1/5) - 4 atan(1/239)`,
/// intersected with the bracket `[333/106, 355/113]`.
pub fn pi_bits(bits: u64) -> Enclosure {
    let p = bits + 16;
    let a = atan_inv(5, p);
    let b = atan_inv(239, p);
    let machin = &a.scale(&int(16)) - &b.scale(&int(4));
    let bracket = Enclosure::from_sorted(rat(333, 106), rat(355, 113));
    machin
        .intersect(&bracket)
        .expect("Machin enclosure must meet the built-in bracket")
        .round(bits)
}

/// `atan(1/m)` by the alternating series, in fixed point with `p` fractional bits.
fn atan_inv(m: u64, p: u64) -> Enclosure {
    let scale = BigInt::one() << p;
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut power = BigInt::from(m); // m^(2k+1)
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let den = &power * BigInt::from(2 * k + 1);
        let t_floor = scale.div_floor(&den);
        let t_ceil = super::rational::div_ceil(&scale, &den);
        if t_floor.is_zero() {
            // every remaining term is below one unit: tail bounded by t_ceil
            lo -= &t_ceil;
            hi += &t_ceil;
            break;
        }
        if k.is_multiple_of(2) {
            lo += &t_floor;
            hi += &t_ceil;
        } else {
            lo -= &t_ceil;
            hi -= &t_floor;
        }
        power *= &m2;
        k += 1;
    }
    Enclosure::from_sorted(
        Rational::new(lo, scale.clone()),
        Rational::new(hi, scale),
    )
}

impl Enclosure {
    /// Enclosure of `exp` over this interval (exp is increasing).
    pub fn exp(&self, bits: u64) -> Enclosure {
        let lo = exp_rational(self.lo(), bits);
        let hi = if self.is_exact() {
            lo.clone()
        } else {
            exp_rational(self.hi(), bits)
        };
        Enclosure::from_sorted(lo.lo().clone(), hi.hi().clone())
    }

    /// Enclosure of `sqrt` over this interval; requires `lo >= 0`.
    pub fn sqrt(&self, bits: u64) -> Result<Enclosure> {
        let lo = sqrt_rational(self.lo(), bits)?;
        let hi = if self.is_exact() {
            lo.clone()
        } else {
            sqrt_rational(self.hi(), bits)?
        };
        Ok(Enclosure::from_sorted(lo.lo().clone(), hi.hi().clone()))
    }
}
