//! Exact rationals and outward-rounded real enclosures.
//!
//! The certified path never touches floating point. A real number that is
//! not rational is represented by an [`Enclosure`] `[lo, hi]` of rationals
//! that is guaranteed to contain it. Rounding is always directed outward,
//! to a configurable number of significant bits, which keeps the size of
//! the rationals bounded.

mod elementary;
mod enclosure;
mod rational;

pub use elementary::{
    exp_enclose, exp_rational, pi_bits, pi_enclose, sqrt_enclose, sqrt_rational, Refined,
};
pub(crate) use elementary::refine;
pub use enclosure::{cmp_certified, CertifiedOrdering, Enclosure};
pub use rational::{
    int, parse_rational, rat, round_sig, to_decimal_string, Rational, Rounding,
};

use crate::error::{Error, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Requested accuracy of an enclosure and the refinement budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precision {
    pub target_width: Rational,
    pub max_refinements: u32,
}

impl Precision {
    pub fn new(target_width: Rational, max_refinements: u32) -> Result<Self> {
        if !target_width.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "target width must be positive, got {target_width}"
            )));
        }
        if max_refinements == 0 {
            return Err(Error::InvalidArgument(
                "max_refinements must be at least 1".into(),
            ));
        }
        Ok(Self {
            target_width,
            max_refinements,
        })
    }

    /// Width `10^-digits` with the given refinement budget.
    pub fn decimal(digits: u32, max_refinements: u32) -> Self {
        Self {
            target_width: Rational::new(One::one(), num_bigint::BigInt::from(10u32).pow(digits)),
            max_refinements,
        }
    }

    /// Working precision of the first round, in significant bits.
    pub fn initial_bits(&self) -> u64 {
        // log2(1 / width), rounded up, plus guard bits.
        let inv = self.target_width.recip();
        let bits = log2_upper(&inv).max(1) as u64;
        bits + 24
    }

    /// Working precision of refinement round `round` (0-based): doubles per round.
    pub fn bits_for_round(&self, round: u32) -> u64 {
        self.initial_bits().saturating_mul(1u64 << round.min(20))
    }
}

impl Default for Precision {
    /// Width 10^-30 with up to 6 refinement rounds.
    fn default() -> Self {
        Self::decimal(30, 6)
    }
}

/// An integer `e` with `|r| < 2^e`; returns 0 for zero.
pub(crate) fn log2_upper(r: &Rational) -> i64 {
    if r.is_zero() {
        return 0;
    }
    let n = r.numer().abs().bits() as i64;
    let d = r.denom().bits() as i64;
    // 2^(n-1) <= |num| < 2^n and 2^(d-1) <= den < 2^d
    n - d + 1
}

/// Lossy conversion for display and the float oracle only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
