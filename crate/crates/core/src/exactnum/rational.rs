use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision rational, always in canonical form.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

/// Rounds `r` to a dyadic rational with about `bits` significant bits,
/// in the requested direction. Exact dyadics short enough are returned as is.
pub fn round_sig(r: &Rational, bits: u64, dir: Rounding) -> Rational {
    if r.is_zero() {
        return r.clone();
    }
    let e = super::log2_upper(r);
    // scale so that |r| * 2^shift has about `bits` integer bits
    let shift = bits as i64 - e;
    let (num, den) = (r.numer(), r.denom());
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num << (shift as usize), den.clone())
    } else {
        (num.clone(), den << ((-shift) as usize))
    };
    let q = match dir {
        Rounding::Down => scaled_num.div_floor(&scaled_den),
        Rounding::Up => div_ceil(&scaled_num, &scaled_den),
    };
    if shift >= 0 {
        Rational::new(q, BigInt::one() << (shift as usize))
    } else {
        Rational::from_integer(q << ((-shift) as usize))
    }
}

pub(crate) fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Parses `"a/b"`, an integer, or a finite decimal such as `"-1.25"` or
/// `"2.5e-3"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((a, b)) = t.split_once('/') {
        let num: BigInt = a.trim().parse().map_err(|_| bad())?;
        let den: BigInt = b.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| bad())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
    // the trailing '0' keeps the string non-empty; undo it
    let all = all / 10;
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(all * ten.pow(scale as u32))
    } else {
        Rational::new(all, ten.pow((-scale) as u32))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Decimal rendering with `places` digits after the point, rounding half to even.
pub fn to_decimal_string(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = r * Rational::from_integer(scale);
    let neg = scaled.is_negative();
    let a = scaled.abs();
    let (q, rem) = a.numer().div_rem(a.denom());
    let twice: BigInt = &rem * 2u32;
    let rounded = match twice.cmp(a.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    };
    let digits = rounded.to_string();
    let places = places as usize;
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (ip, fp) = padded.split_at(padded.len() - places);
        format!("{ip}.{fp}")
    };
    if neg && rounded_is_nonzero(&body) {
        format!("-{body}")
    } else {
        body
    }
}

fn rounded_is_nonzero(body: &str) -> bool {
    body.chars().any(|c| c.is_ascii_digit() && c != '0')
}
