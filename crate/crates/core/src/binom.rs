//! Exact binomial probabilities, deviation windows and the central-term
//! product ratios.
//!
//! Window membership is decided with squared integer/rational comparisons,
//! so boundaries are exact for rational thresholds. The boundary itself is
//! excluded: with `x^2 n` a perfect square, the index at exactly
//! `x sqrt(n) / 2` from the centre is *not* in the window.

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A probability value, exact and in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PmfValue(Rational);

impl PmfValue {
    fn new(v: Rational) -> Self {
        debug_assert!(!v.is_negative() && v <= Rational::one(), "pmf value {v} outside [0,1]");
        Self(v)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

/// `C(n, k)` by the multiplicative recurrence; every intermediate is an integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c *= n - i;
        c /= i + 1;
    }
    c
}

fn check_p(p: &Rational) -> Result<()> {
    if !p.is_positive() || p >= &Rational::one() {
        return Err(Error::InvalidProbability(p.to_string()));
    }
    Ok(())
}

fn pow(r: &Rational, e: u64) -> Rational {
    let e = i32::try_from(e).expect("exponent fits in i32");
    num_traits::Pow::pow(r, e)
}

/// `P(S_n = k)` for `S_n ~ B(n, p)`; zero outside `[0, n]`.
pub fn pmf(n: u64, p: &Rational, k: i64) -> Result<PmfValue> {
    check_p(p)?;
    if k < 0 || k as u64 > n {
        return Ok(PmfValue::new(Rational::zero()));
    }
    let k = k as u64;
    let q = Rational::one() - p;
    let v = Rational::from_integer(binomial(n, k)) * pow(p, k) * pow(&q, n - k);
    Ok(PmfValue::new(v))
}

/// `P(S_{2n} = n) = C(2n, n) / 4^n` for the symmetric binomial.
pub fn central_pmf_even(n: u64) -> PmfValue {
    PmfValue::new(Rational::new(binomial(2 * n, n), BigInt::one() << (2 * n)))
}

/// `P(S_{2n+1} = n) = C(2n+1, n) / 2^(2n+1)`.
pub fn central_pmf_odd(n: u64) -> PmfValue {
    PmfValue::new(Rational::new(
        binomial(2 * n + 1, n),
        BigInt::one() << (2 * n + 1),
    ))
}

/// Product `prod_{1<=l<=j} (n + l - j) / (n + l)`, equal to `C(2n, n+j) / C(2n, n)`.
pub fn pi_sym(j: u64, n: u64) -> Result<Rational> {
    if j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j.to_string(),
            limit: n.to_string(),
        });
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for l in 1..=j {
        num *= n + l - j;
        den *= n + l;
    }
    Ok(Rational::new(num, den))
}

/// Odd-case product `prod_{1<=l<=j} (n + l - j) / (n + l + 1)`.
///
/// Also evaluated as `(n+1)/(n+j+1) * pi_sym(j, n)`; the two must agree.
pub fn pi_sym_odd(j: u64, n: u64) -> Result<Rational> {
    if j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j.to_string(),
            limit: n.to_string(),
        });
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for l in 1..=j {
        num *= n + l - j;
        den *= n + l + 1;
    }
    let direct = Rational::new(num, den);
    let via_even = if n == 0 {
        Rational::one()
    } else {
        Rational::new(BigInt::from(n + 1), BigInt::from(n + j + 1)) * pi_sym(j, n)?
    };
    if direct != via_even {
        return Err(Error::IdentityMismatch(format!(
            "odd product ({j}, {n}): direct {direct} != shifted even form {via_even}"
        )));
    }
    Ok(direct)
}

/// Index `m` of the central term and `delta = m - np`, with `-q < delta <= p`.
pub fn central_index(n: u64, p: &Rational) -> Result<(u64, Rational)> {
    check_p(p)?;
    let np = int(n) * p;
    let q = Rational::one() - p;
    let valid = |m: &BigInt| {
        let d = Rational::from_integer(m.clone()) - &np;
        -&q < d && d <= *p
    };
    // the unique integer in (np - q, np + p] is floor(np + p)
    let m = (&np + p).floor().to_integer();
    if !valid(&m) || valid(&(&m + 1)) || valid(&(&m - 1)) {
        return Err(Error::IdentityMismatch(format!(
            "central index for n={n}, p={p} is not unique"
        )));
    }
    let delta = Rational::from_integer(m.clone()) - np;
    let m = m.to_u64().expect("central index is in [0, n]");
    Ok((m, delta))
}

/// Largest `d >= 0` with `d^2 < v`, or `None` when `v <= 0`.
fn max_strict_root(v: &Rational) -> Option<u64> {
    if !v.is_positive() {
        return None;
    }
    let fl = v.floor().to_integer();
    let s = fl.sqrt();
    let s_r = Rational::from_integer(&s * &s);
    let d = if &s_r == v { s - 1 } else { s };
    d.to_u64()
}

/// The event `|S_n - n/2| < x sqrt(n) / 2` for `S_n ~ B(n, 1/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricWindow {
    n: u64,
    x: Rational,
}

impl SymmetricWindow {
    pub fn new(n: u64, x: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("number of trials must be positive".into()));
        }
        if !x.is_positive() {
            return Err(Error::InvalidArgument(format!("threshold x must be positive, got {x}")));
        }
        Ok(Self { n, x })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `n / 2` rounded down: the index of the even central term or of the
    /// lower odd central term.
    pub fn half_index(&self) -> u64 {
        self.n / 2
    }

    fn x2n(&self) -> Rational {
        &self.x * &self.x * int(self.n)
    }

    /// `(2k - n)^2 < x^2 n`.
    pub fn contains(&self, k: u64) -> bool {
        if k > self.n {
            return false;
        }
        let d = 2 * k as i128 - self.n as i128;
        int(d * d) < self.x2n()
    }

    /// The member indices, as an inclusive range (possibly empty).
    pub fn members(&self) -> std::ops::RangeInclusive<u64> {
        let Some(mut d) = max_strict_root(&self.x2n()) else {
            return empty_range();
        };
        d = d.min(self.n);
        if d % 2 != self.n % 2 {
            if d == 0 {
                return empty_range();
            }
            d -= 1;
        }
        ((self.n - d) / 2)..=((self.n + d) / 2)
    }

    /// The relevant central probability: `P(S_{2h} = h)` or `P(S_{2h+1} = h)`.
    pub fn central_pmf(&self) -> PmfValue {
        let h = self.half_index();
        if self.is_even() {
            central_pmf_even(h)
        } else {
            central_pmf_odd(h)
        }
    }
}

fn empty_range() -> std::ops::RangeInclusive<u64> {
    #[allow(clippy::reversed_empty_ranges)]
    {
        1..=0
    }
}

/// Window probability by summing `C(n, k) / 2^n` over the member indices.
pub fn window_prob_sym_direct(win: &SymmetricWindow) -> Rational {
    let n = win.n;
    let members = win.members();
    let mut total = BigInt::zero();
    if !members.is_empty() {
        let mut c = binomial(n, *members.start());
        for k in members {
            total += &c;
            c = c * (n - k) / (k + 1);
        }
    }
    Rational::new(total, BigInt::one() << n)
}

/// Window probability through the central term and the product ratios.
pub fn window_prob_sym_decomposed(win: &SymmetricWindow) -> Result<Rational> {
    let h = win.half_index();
    if win.is_even() {
        let mut s = Rational::one();
        for j in 1..=h {
            if !win.contains(h + j) {
                break;
            }
            s += pi_sym(j, h)? * int(2);
        }
        Ok(central_pmf_even(h).into_inner() * s)
    } else {
        let mut s = Rational::zero();
        for j in 0..=h {
            if !win.contains(h - j) {
                break;
            }
            s += pi_sym_odd(j, h)?;
        }
        Ok(central_pmf_odd(h).into_inner() * s * int(2))
    }
}

/// `P(|S_n - n/2| < x sqrt(n) / 2)` exactly; both evaluation routes must agree.
pub fn window_prob_sym(win: &SymmetricWindow) -> Result<PmfValue> {
    let direct = window_prob_sym_direct(win);
    let decomposed = window_prob_sym_decomposed(win)?;
    if direct != decomposed {
        return Err(Error::IdentityMismatch(format!(
            "symmetric window n={}, x={}: direct {direct} != decomposed {decomposed}",
            win.n, win.x
        )));
    }
    Ok(PmfValue::new(direct))
}

/// The right half-window `m <= S_n < m + x sqrt(npq)` anchored at the central term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralWindow {
    n: u64,
    p: Rational,
    q: Rational,
    x: Rational,
    m: u64,
    delta: Rational,
}

impl GeneralWindow {
    pub fn new(n: u64, p: Rational, x: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("number of trials must be positive".into()));
        }
        if !x.is_positive() {
            return Err(Error::InvalidArgument(format!("threshold x must be positive, got {x}")));
        }
        let (m, delta) = central_index(n, &p)?;
        let q = Rational::one() - &p;
        Ok(Self { n, p, q, x, m, delta })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn p(&self) -> &Rational {
        &self.p
    }
    pub fn q(&self) -> &Rational {
        &self.q
    }
    pub fn x(&self) -> &Rational {
        &self.x
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    /// `npq`.
    pub fn variance(&self) -> Rational {
        int(self.n) * &self.p * &self.q
    }

    /// `x^2 npq`, the squared right half-width.
    pub fn half_width_sq(&self) -> Rational {
        &self.x * &self.x * self.variance()
    }

    /// `k >= m` and `(k - m)^2 < x^2 npq`.
    pub fn contains(&self, k: u64) -> bool {
        k >= self.m && k <= self.n && int((k - self.m) * (k - self.m)) < self.half_width_sq()
    }

    /// Offsets `j` with `m + j` in the window.
    pub fn offsets(&self) -> std::ops::RangeInclusive<u64> {
        match max_strict_root(&self.half_width_sq()) {
            Some(d) => 0..=d.min(self.n - self.m),
            None => empty_range(),
        }
    }

    /// The same window for the flipped variables `1 - X_i`, i.e. parameter `q`.
    pub fn flipped(&self) -> Result<GeneralWindow> {
        GeneralWindow::new(self.n, self.q.clone(), self.x.clone())
    }
}

fn offset_check(j: u64, win: &GeneralWindow) -> Result<()> {
    if win.m + j > win.n {
        return Err(Error::OutOfRange {
            what: "m + j",
            value: (win.m + j).to_string(),
            limit: win.n.to_string(),
        });
    }
    Ok(())
}

/// `prod_{1<=l<=j} (n - m - l + 1) p / ((m + l) q)`.
pub fn pi_gen_product(j: u64, win: &GeneralWindow) -> Result<Rational> {
    offset_check(j, win)?;
    let ratio = &win.p / &win.q;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for l in 1..=j {
        num *= win.n - win.m - l + 1;
        den *= win.m + l;
    }
    Ok(Rational::new(num, den) * pow(&ratio, j))
}

/// The same product written with `m = np + delta`:
/// `prod (npq - (delta + l - 1) p) / (npq + (delta + l) q)`.
pub fn pi_gen_shifted(j: u64, win: &GeneralWindow) -> Result<Rational> {
    offset_check(j, win)?;
    let npq = win.variance();
    let mut acc = Rational::one();
    for l in 1..=j {
        let num = &npq - (&win.delta + int(l - 1)) * &win.p;
        let den = &npq + (&win.delta + int(l)) * &win.q;
        acc *= num / den;
    }
    Ok(acc)
}

/// `pi(j) = P(S_n = m + j) / P(S_n = m)`, checked against the product form.
pub fn pi_gen(j: u64, win: &GeneralWindow) -> Result<Rational> {
    offset_check(j, win)?;
    let n = win.n;
    let m = win.m as i64;
    let ratio = pmf(n, &win.p, m + j as i64)?.into_inner() / pmf(n, &win.p, m)?.into_inner();
    let product = pi_gen_product(j, win)?;
    if ratio != product {
        return Err(Error::IdentityMismatch(format!(
            "pi({j}) for n={n}, p={}: pmf ratio {ratio} != product {product}",
            win.p
        )));
    }
    Ok(ratio)
}

/// Direct summation of the pmf over the general window.
pub fn window_prob_gen_direct(win: &GeneralWindow) -> Result<Rational> {
    let mut total = Rational::zero();
    for j in win.offsets() {
        total += pmf(win.n, &win.p, (win.m + j) as i64)?.into_inner();
    }
    Ok(total)
}

/// `P(S_n = m) * sum_j pi(j)` with the products evaluated by definition.
pub fn window_prob_gen_decomposed(win: &GeneralWindow) -> Result<Rational> {
    let mut s = Rational::zero();
    for j in win.offsets() {
        s += pi_gen_product(j, win)?;
    }
    Ok(pmf(win.n, &win.p, win.m as i64)?.into_inner() * s)
}

/// `P(m <= S_n < m + x sqrt(npq))` exactly; both evaluation routes must agree.
pub fn window_prob_gen(win: &GeneralWindow) -> Result<PmfValue> {
    let direct = window_prob_gen_direct(win)?;
    let decomposed = window_prob_gen_decomposed(win)?;
    if direct != decomposed {
        return Err(Error::IdentityMismatch(format!(
            "general window n={}, p={}, x={}: direct {direct} != decomposed {decomposed}",
            win.n, win.p, win.x
        )));
    }
    Ok(PmfValue::new(direct))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn pmf_examples() {
        assert_eq!(pmf(2, &rat(1, 2), 1).unwrap().into_inner(), rat(1, 2));
        assert_eq!(pmf(8, &rat(1, 2), 4).unwrap().into_inner(), rat(70, 256));
        assert_eq!(pmf(4, &rat(1, 4), 1).unwrap().into_inner(), rat(108, 256));
        assert_eq!(pmf(4, &rat(1, 4), 5).unwrap().into_inner(), rat(0, 1));
        assert_eq!(pmf(4, &rat(1, 4), -1).unwrap().into_inner(), rat(0, 1));
        assert!(pmf(4, &rat(0, 1), 1).is_err());
        assert!(pmf(4, &rat(1, 1), 1).is_err());
        assert!(pmf(4, &rat(3, 2), 1).is_err());
    }

    #[test]
    fn central_pmf_examples() {
        assert_eq!(central_pmf_even(1).into_inner(), rat(1, 2));
        assert_eq!(central_pmf_even(4).into_inner(), rat(70, 256));
        assert_eq!(
            central_pmf_even(10).into_inner(),
            Rational::new(184_756.into(), BigInt::one() << 20)
        );
    }

    #[test]
    fn pi_sym_examples() {
        assert_eq!(pi_sym(0, 5).unwrap(), rat(1, 1));
        assert_eq!(pi_sym(1, 7).unwrap(), rat(7, 8));
        assert_eq!(pi_sym(2, 3).unwrap(), rat(3, 10));
        assert!(pi_sym(4, 3).is_err());
    }

    #[test]
    fn pi_sym_odd_examples() {
        assert_eq!(pi_sym_odd(0, 6).unwrap(), rat(1, 1));
        assert_eq!(pi_sym_odd(0, 0).unwrap(), rat(1, 1));
        assert_eq!(pi_sym_odd(1, 3).unwrap(), rat(3, 5));
        assert_eq!(pi_sym_odd(2, 4).unwrap(), rat(2, 7));
        assert!(pi_sym_odd(5, 4).is_err());
    }

    #[test]
    fn central_index_examples() {
        assert_eq!(central_index(4, &rat(1, 4)).unwrap(), (1, rat(0, 1)));
        assert_eq!(central_index(5, &rat(1, 2)).unwrap(), (3, rat(1, 2)));
        assert_eq!(central_index(10, &rat(3, 10)).unwrap(), (3, rat(0, 1)));
        assert!(central_index(10, &rat(0, 1)).is_err());
    }

    #[test]
    fn symmetric_window_examples() {
        let w = |n, x| SymmetricWindow::new(n, x).unwrap();
        assert_eq!(window_prob_sym(&w(2, rat(1, 1))).unwrap().into_inner(), rat(1, 2));
        assert_eq!(window_prob_sym(&w(8, rat(1, 1))).unwrap().into_inner(), rat(182, 256));
        assert_eq!(window_prob_sym(&w(1, rat(2, 1))).unwrap().into_inner(), rat(1, 1));
        assert_eq!(window_prob_sym(&w(9, rat(1, 1))).unwrap().into_inner(), rat(252, 512));
        assert_eq!(window_prob_sym(&w(3, rat(1, 1))).unwrap().into_inner(), rat(6, 8));
        assert_eq!(window_prob_sym(&w(5, rat(1, 1))).unwrap().into_inner(), rat(20, 32));
        // empty odd window
        assert_eq!(window_prob_sym(&w(3, rat(1, 2))).unwrap().into_inner(), rat(0, 1));
        assert!(SymmetricWindow::new(0, rat(1, 1)).is_err());
        assert!(SymmetricWindow::new(4, rat(0, 1)).is_err());
    }

    #[test]
    fn boundary_is_excluded() {
        // n = 4, x = 1: |2k - 4| < 2 admits only k = 2; k = 1, 3 sit on the boundary
        let w = SymmetricWindow::new(4, rat(1, 1)).unwrap();
        assert!(!w.contains(1) && w.contains(2) && !w.contains(3));
        assert_eq!(w.members(), 2..=2);
        assert_eq!(window_prob_sym(&w).unwrap().into_inner(), rat(6, 16));
    }

    #[test]
    fn general_window_examples() {
        let gw = |n, p, x| GeneralWindow::new(n, p, x).unwrap();
        assert_eq!(
            window_prob_gen(&gw(4, rat(1, 4), rat(1, 1))).unwrap().into_inner(),
            rat(108, 256)
        );
        assert_eq!(
            window_prob_gen(&gw(2, rat(1, 2), rat(1, 1))).unwrap().into_inner(),
            rat(1, 2)
        );
        assert_eq!(
            window_prob_gen(&gw(4, rat(1, 4), rat(3, 1))).unwrap().into_inner(),
            rat(174, 256)
        );
    }

    #[test]
    fn pi_gen_examples() {
        let w = GeneralWindow::new(4, rat(1, 4), rat(1, 1)).unwrap();
        assert_eq!(pi_gen(0, &w).unwrap(), rat(1, 1));
        assert_eq!(pi_gen(1, &w).unwrap(), rat(1, 2));
        assert!(pi_gen(4, &w).is_err());
        let w2 = GeneralWindow::new(2, rat(1, 2), rat(1, 1)).unwrap();
        assert_eq!(pi_gen(1, &w2).unwrap(), rat(1, 2));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(20, 10), BigInt::from(184_756));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
