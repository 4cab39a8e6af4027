//! Wallis integrals `W_n = ∫_0^{π/2} sin^n t dt` as exact multiples of
//! powers of `pi`, and the resulting bounds on the central binomial term.

use crate::binom::{central_pmf_even, central_pmf_odd};
use crate::certificate::{CertificateReport, Claim, Instance, Relation};
use crate::exactnum::{int, pi_bits, rat, Enclosure, Precision, Rational};
use std::fmt;
use std::ops::{Div, Mul};

/// The exact value `coeff · π^pi_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: Rational,
    pub pi_power: i32,
}

impl PiMultiple {
    pub fn new(coeff: Rational, pi_power: i32) -> Self {
        PiMultiple { coeff, pi_power }
    }

    pub fn rational(coeff: Rational) -> Self {
        PiMultiple::new(coeff, 0)
    }

    pub fn scale(&self, k: &Rational) -> PiMultiple {
        PiMultiple::new(&self.coeff * k, self.pi_power)
    }

    /// Enclosure of the real value at about `bits` significant bits.
    pub fn enclose(&self, bits: u64) -> Enclosure {
        let pi = pi_bits(bits + 8);
        let mut power = Enclosure::one();
        for _ in 0..self.pi_power.unsigned_abs() {
            power = &power * &pi;
        }
        if self.pi_power < 0 {
            power = power.recip().expect("pi powers are positive");
        }
        power.scale(&self.coeff).round(bits)
    }
}

impl Mul for &PiMultiple {
    type Output = PiMultiple;
    fn mul(self, rhs: &PiMultiple) -> PiMultiple {
        PiMultiple::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Div for &PiMultiple {
    type Output = PiMultiple;
    fn div(self, rhs: &PiMultiple) -> PiMultiple {
        PiMultiple::new(&self.coeff / &rhs.coeff, self.pi_power - rhs.pi_power)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            k => write!(f, "({})·π^{k}", self.coeff),
        }
    }
}

/// `W_n` from `W_0 = π/2`, `W_1 = 1` and `n W_n = (n-1) W_{n-2}`.
pub fn wallis(n: u64) -> PiMultiple {
    let (mut even, mut odd) = (rat(1, 2), int(1));
    let mut k = 2;
    while k <= n {
        if k % 2 == 0 {
            even *= rat(k as i64 - 1, k as i64);
        } else {
            odd *= rat(k as i64 - 1, k as i64);
        }
        k += 1;
    }
    if n.is_multiple_of(2) {
        PiMultiple::new(even, 1)
    } else {
        PiMultiple::new(odd, 0)
    }
}

/// `W_0, ..., W_{n_max}`.
pub fn wallis_ladder(n_max: u64) -> Vec<PiMultiple> {
    let mut out: Vec<PiMultiple> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let w = match n {
            0 => PiMultiple::new(rat(1, 2), 1),
            1 => PiMultiple::rational(int(1)),
            _ => out[n as usize - 2].scale(&rat(n as i64 - 1, n as i64)),
        };
        out.push(w);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIdentity {
    pub n: u64,
    /// `n · W_n · W_{n-1}`.
    pub product: PiMultiple,
    pub holds: bool,
}

/// Checks `n W_n W_{n-1} = π/2` exactly.
pub fn check_product_identity(n: u64) -> ProductIdentity {
    let product = (&wallis(n) * &wallis(n.saturating_sub(1))).scale(&int(n));
    let holds = n >= 1 && product == PiMultiple::new(rat(1, 2), 1);
    ProductIdentity { n, product, holds }
}

/// Checks `W_{2n} = P(S_{2n} = n) π/2` and `W_{2n+1} = 1 / ((2n+1) P(S_{2n} = n))`.
pub fn check_central_identities(n: u64) -> bool {
    let c = central_pmf_even(n).into_inner();
    let even_ok = wallis(2 * n) == PiMultiple::new(&c / int(2), 1);
    let odd_ok = wallis(2 * n + 1) == PiMultiple::rational((int(2 * n + 1) * &c).recip());
    even_ok && odd_ok
}

fn squared_central(p: &Rational, scale: Rational) -> PiMultiple {
    PiMultiple::new(scale * p * p, 1)
}

/// Bounds on `P(S_{2n} = n)` in squared form:
/// `2n/(2n+1) <= nπP² <= 1` and `1 <= (n+1/2)πP² <= 1 + 1/(2n)`.
pub fn central_sandwich_even(n: u64, prec: &Precision) -> CertificateReport {
    let mut rep = CertificateReport::new(
        Instance::new("central-even").with("n", n),
    );
    let p = central_pmf_even(n).into_inner();
    let plain = squared_central(&p, int(n));
    let shifted = squared_central(&p, int(n) + rat(1, 2));
    let lower = Enclosure::exact(rat(2 * n as i64, 2 * n as i64 + 1));
    let one = Enclosure::one();
    let top = Enclosure::exact(int(1) + rat(1, 2 * n as i64));
    rep.push(Claim::certify("central_even_lower", Relation::Le, prec, |b| {
        Ok((lower.clone(), plain.enclose(b)))
    }));
    rep.push(Claim::certify("central_even_upper", Relation::Le, prec, |b| {
        Ok((plain.enclose(b), one.clone()))
    }));
    rep.push(Claim::certify("central_even_shifted_lower", Relation::Le, prec, |b| {
        Ok((one.clone(), shifted.enclose(b)))
    }));
    rep.push(Claim::certify("central_even_shifted_upper", Relation::Le, prec, |b| {
        Ok((shifted.enclose(b), top.clone()))
    }));
    rep
}

/// Bounds on `P(S_{2n+1} = n)`: `nπP² <= 1` and `nπP² (1 + 1/(2n))³ >= 1`.
pub fn central_sandwich_odd(n: u64, prec: &Precision) -> CertificateReport {
    let mut rep = CertificateReport::new(Instance::new("central-odd").with("n", n));
    let p = central_pmf_odd(n).into_inner();
    let plain = squared_central(&p, int(n));
    let growth = int(1) + rat(1, 2 * n as i64);
    let boosted = plain.scale(&(&growth * &growth * &growth));
    let one = Enclosure::one();
    rep.push(Claim::certify("central_odd_upper", Relation::Le, prec, |b| {
        Ok((plain.enclose(b), one.clone()))
    }));
    rep.push(Claim::certify("central_odd_lower", Relation::Ge, prec, |b| {
        Ok((boosted.enclose(b), one.clone()))
    }));
    rep
}

/// `1 <= W_{2n} / W_{2n+1} <= 1 + 1/(2n)`.
pub fn wallis_ratio_bracket(n: u64, prec: &Precision) -> CertificateReport {
    let mut rep = CertificateReport::new(Instance::new("wallis-ratio").with("n", n));
    let ratio = &wallis(2 * n) / &wallis(2 * n + 1);
    let top = Enclosure::exact(int(1) + rat(1, 2 * n as i64));
    rep.push(Claim::certify("wallis_ratio_lower", Relation::Ge, prec, |b| {
        Ok((ratio.enclose(b), Enclosure::one()))
    }));
    rep.push(Claim::certify("wallis_ratio_upper", Relation::Le, prec, |b| {
        Ok((ratio.enclose(b), top.clone()))
    }));
    rep
}

/// `W_{n+1} <= W_n`, decided with `pi` enclosures.
pub fn check_monotone(n: u64, prec: &Precision) -> Claim {
    let (a, b) = (wallis(n + 1), wallis(n));
    Claim::certify(format!("wallis_decreasing[{n}]"), Relation::Le, prec, |bits| {
        Ok((a.enclose(bits), b.enclose(bits)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Verdict;

    #[test]
    fn seeds_and_first_steps() {
        assert_eq!(wallis(0), PiMultiple::new(rat(1, 2), 1));
        assert_eq!(wallis(1), PiMultiple::rational(int(1)));
        assert_eq!(wallis(2), PiMultiple::new(rat(1, 4), 1));
        assert_eq!(wallis(3), PiMultiple::rational(rat(2, 3)));
        assert_eq!(wallis_ladder(40)[37], wallis(37));
    }

    #[test]
    fn product_identity_examples() {
        for n in [1, 2, 100] {
            let r = check_product_identity(n);
            assert!(r.holds, "n={n}: {}", r.product);
        }
        assert!(!check_product_identity(0).holds);
    }

    #[test]
    fn sandwiches_hold_for_small_n() {
        let prec = Precision::default();
        for n in [1, 2, 4, 50] {
            assert_eq!(central_sandwich_even(n, &prec).overall(), Verdict::Holds);
            assert_eq!(central_sandwich_odd(n, &prec).overall(), Verdict::Holds);
            assert_eq!(wallis_ratio_bracket(n, &prec).overall(), Verdict::Holds);
        }
    }

    #[test]
    fn central_identities_hold() {
        for n in 0..30 {
            assert!(check_central_identities(n), "n={n}");
        }
    }
}
