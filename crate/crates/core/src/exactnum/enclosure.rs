use super::rational::{parse_rational, round_sig, Rational, Rounding};
use num_bigint::BigInt;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A closed rational interval `[lo, hi]` known to contain some real value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

/// Result of comparing two enclosures without ever asserting a false order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifiedOrdering {
    Less,
    Greater,
    Overlapping,
}

/// `Less` iff `a.hi < b.lo`, `Greater` iff `a.lo > b.hi`, otherwise `Overlapping`.
pub fn cmp_certified(a: &Enclosure, b: &Enclosure) -> CertifiedOrdering {
    if a.hi < b.lo {
        CertifiedOrdering::Less
    } else if a.lo > b.hi {
        CertifiedOrdering::Greater
    } else {
        CertifiedOrdering::Overlapping
    }
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidEnclosure {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self { lo, hi })
    }

    /// Degenerate enclosure of an exact value.
    pub fn exact(v: Rational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn one() -> Self {
        Self::exact(Rational::one())
    }

    pub(crate) fn from_sorted(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "unsorted enclosure [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// True if `other` lies inside `self`.
    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// True if the enclosure meets `reference ± 1/2` unit in the last printed
    /// digit of the decimal `reference`, i.e. is consistent with it as a
    /// rounded or truncated-to-nearest reading.
    pub fn agrees_with_decimal(&self, reference: &str) -> Result<bool> {
        let r = parse_rational(reference)?;
        let digits = reference.trim().split_once('.').map_or(0, |(_, f)| f.len());
        let ulp = Rational::new(BigInt::one(), BigInt::from(10).pow(digits as u32));
        let half = ulp / Rational::from_integer(BigInt::from(2));
        Ok(self.lo <= &r + &half && &r - &half <= self.hi)
    }

    /// Intersection of two enclosures of the same value.
    pub fn intersect(&self, other: &Enclosure) -> Option<Enclosure> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Enclosure { lo, hi })
    }

    /// Outward rounding of both ends to about `bits` significant bits.
    pub fn round(&self, bits: u64) -> Enclosure {
        Enclosure {
            lo: round_sig(&self.lo, bits, Rounding::Down),
            hi: round_sig(&self.hi, bits, Rounding::Up),
        }
    }

    pub fn scale(&self, k: &Rational) -> Enclosure {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Enclosure { lo: b, hi: a }
        } else {
            Enclosure { lo: a, hi: b }
        }
    }

    /// Reciprocal; fails if the enclosure contains zero.
    pub fn recip(&self) -> Result<Enclosure> {
        if self.lo <= Rational::zero() && self.hi >= Rational::zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Enclosure {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Enclosure) -> Result<Enclosure> {
        Ok(self * &other.recip()?)
    }

    pub fn abs(&self) -> Enclosure {
        if self.lo >= Rational::zero() {
            self.clone()
        } else if self.hi <= Rational::zero() {
            -self.clone()
        } else {
            let m = (-&self.lo).max(self.hi.clone());
            Enclosure {
                lo: Rational::zero(),
                hi: m,
            }
        }
    }

    pub fn square(&self) -> Enclosure {
        let a = self.abs();
        Enclosure {
            lo: &a.lo * &a.lo,
            hi: &a.hi * &a.hi,
        }
    }

    pub fn powi(&self, k: u32) -> Enclosure {
        let mut acc = Enclosure::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Clamps to `[lo_bound, hi_bound]`; valid only when the enclosed value is
    /// known to lie there.
    pub fn clamp(&self, lo_bound: &Rational, hi_bound: &Rational) -> Enclosure {
        let lo = (&self.lo).max(lo_bound).min(hi_bound).clone();
        let hi = (&self.hi).min(hi_bound).max(&lo).clone();
        Enclosure { lo, hi }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(
                f,
                "[{:.12e}, {:.12e}]",
                super::to_f64(&self.lo),
                super::to_f64(&self.hi)
            )
        }
    }
}

impl From<Rational> for Enclosure {
    fn from(v: Rational) -> Self {
        Enclosure::exact(v)
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        let zero = Rational::zero();
        if self.lo >= zero && rhs.lo >= zero {
            return Enclosure {
                lo: &self.lo * &rhs.lo,
                hi: &self.hi * &rhs.hi,
            };
        }
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().cloned().unwrap_or_default();
        let hi = c.iter().max().cloned().unwrap_or_default();
        Enclosure { lo, hi }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: &Enclosure) -> Enclosure {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn e(a: i64, b: i64) -> Enclosure {
        Enclosure::new(rat(a, 1), rat(b, 1)).unwrap()
    }

    #[test]
    fn certified_comparison() {
        assert_eq!(cmp_certified(&e(1, 2), &e(3, 4)), CertifiedOrdering::Less);
        assert_eq!(cmp_certified(&e(1, 3), &e(2, 4)), CertifiedOrdering::Overlapping);
        assert_eq!(cmp_certified(&e(5, 6), &e(1, 2)), CertifiedOrdering::Greater);
        // touching endpoints are not separated
        assert_eq!(cmp_certified(&e(1, 2), &e(2, 3)), CertifiedOrdering::Overlapping);
    }

    #[test]
    fn rejects_inverted_bounds() {
        assert!(Enclosure::new(rat(2, 1), rat(1, 1)).is_err());
    }

    #[test]
    fn mixed_sign_products() {
        let p = &e(-2, 3) * &e(-1, 4);
        assert_eq!(p, e(-8, 12));
        assert_eq!(e(-3, -1).abs(), e(1, 3));
        assert_eq!(e(-3, 2).abs(), e(0, 3));
        assert_eq!(e(-3, 2).square(), e(0, 9));
    }

    #[test]
    fn recip_refuses_zero() {
        assert!(e(-1, 1).recip().is_err());
        assert_eq!(e(2, 4).recip().unwrap(), Enclosure::new(rat(1, 4), rat(1, 2)).unwrap());
    }

    #[test]
    fn rounding_is_outward() {
        let third = Enclosure::exact(rat(1, 3));
        let r = third.round(30);
        assert!(r.contains_enclosure(&third));
        assert!(!r.is_exact());
    }
}
