//! Argument parsing and decimal rendering of exact values.

use binocert::exactnum::parse_rational;
use binocert::{Enclosure, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// `a/b`, an integer, or a finite decimal (`0.25`, `1e-30`), kept exact.
pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A non-negative integer, also accepted in rational form such as `8/1`.
pub fn count(s: &str) -> Result<u64, String> {
    let r = rational(s)?;
    if !r.is_integer() || r.is_negative() {
        return Err(format!("{s} is not a non-negative integer"));
    }
    r.to_integer().to_u64().ok_or_else(|| format!("{s} is too large"))
}

pub fn width(s: &str) -> Result<Rational, String> {
    let r = rational(s)?;
    if !r.is_positive() {
        return Err(format!("precision width must be positive, got {s}"));
    }
    Ok(r)
}

pub fn rounds(s: &str) -> Result<u32, String> {
    let k = count(s)?;
    match u32::try_from(k) {
        Ok(k) if (1..=20).contains(&k) => Ok(k),
        _ => Err(format!("--max-refine must be between 1 and 20, got {s}")),
    }
}

/// `a` for integers, `a/b` otherwise.
pub fn canonical(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn scaled(r: &Rational, places: u32) -> Rational {
    r * Rational::from_integer(BigInt::from(10).pow(places))
}

fn render(v: BigInt, places: u32) -> String {
    let neg = v.is_negative();
    let digits = v.abs().to_string();
    let p = places as usize;
    let body = if p == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = p + 1);
        let (ip, fp) = padded.split_at(padded.len() - p);
        format!("{ip}.{fp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Fixed-point decimal rounded toward minus infinity.
pub fn decimal_down(r: &Rational, places: u32) -> String {
    render(scaled(r, places).floor().to_integer(), places)
}

/// Fixed-point decimal rounded toward plus infinity.
pub fn decimal_up(r: &Rational, places: u32) -> String {
    render(scaled(r, places).ceil().to_integer(), places)
}

/// Outward-rounded decimal end points of an enclosure.
pub fn enclosure_bounds(e: &Enclosure, places: u32) -> (String, String) {
    (decimal_down(e.lo(), places), decimal_up(e.hi(), places))
}

#[cfg(test)]
mod tests {
    use super::*;
    use binocert::exactnum::rat;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(rational("1e-3").unwrap(), rat(1, 1000));
        assert!(rational("abc").is_err());
        assert!(rational("1/0").is_err());
    }

    #[test]
    fn counts_are_integers() {
        assert_eq!(count("8").unwrap(), 8);
        assert_eq!(count("16/2").unwrap(), 8);
        assert!(count("1/2").is_err());
        assert!(count("-3").is_err());
    }

    #[test]
    fn outward_rounding() {
        assert_eq!(decimal_down(&rat(2, 3), 3), "0.666");
        assert_eq!(decimal_up(&rat(2, 3), 3), "0.667");
        assert_eq!(decimal_down(&rat(-2, 3), 3), "-0.667");
        assert_eq!(decimal_up(&rat(-2, 3), 3), "-0.666");
        assert_eq!(decimal_up(&rat(5, 1), 2), "5.00");
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical(&rat(4, 2)), "2");
        assert_eq!(canonical(&rat(2, 4)), "1/2");
    }
}
