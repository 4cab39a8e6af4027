//! Fixed-precision enclosure helpers shared by the certifiers.

use crate::error::Result;
use crate::exactnum::{exp_rational, pi_bits, sqrt_rational, Enclosure, Rational};
use crate::gauss;

pub(crate) fn ex(v: Rational) -> Enclosure {
    Enclosure::exact(v)
}

pub(crate) fn sqrt(v: &Rational, bits: u64) -> Result<Enclosure> {
    sqrt_rational(v, bits + 8)
}

pub(crate) fn pi(bits: u64) -> Enclosure {
    pi_bits(bits + 8)
}

pub(crate) fn exp_q(t: &Rational, bits: u64) -> Enclosure {
    exp_rational(t, bits + 8)
}

pub(crate) fn exp(t: &Enclosure, bits: u64) -> Enclosure {
    t.round(bits + 16).exp(bits + 8)
}

/// `I(x)`.
pub(crate) fn mass(x: &Rational, bits: u64) -> Result<Enclosure> {
    gauss::gauss_mass_bits(x, bits + 8)
}

/// `∫_0^b e^{-c t²} dt` for an enclosed, possibly negative, upper limit `b`.
pub(crate) fn kernel(b: &Enclosure, c: &Rational, bits: u64) -> Result<Enclosure> {
    let at = |v: &Rational| -> Result<Enclosure> {
        if v < &Rational::from_integer(0.into()) {
            Ok(-gauss::kernel_integral(&-v.clone(), c, bits + 8)?.0)
        } else {
            Ok(gauss::kernel_integral(v, c, bits + 8)?.0)
        }
    };
    let lo = at(b.lo())?;
    if b.is_exact() {
        return Ok(lo);
    }
    let hi = at(b.hi())?;
    Enclosure::new(lo.lo().clone(), hi.hi().clone())
}
