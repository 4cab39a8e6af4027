//! The pmf of `B(n, p)` against the density of `N(np, npq)`.

use crate::sweep::PLACES;
use crate::CliError;
use binocert::binom::pmf;
use binocert::exactnum::{exp_rational, int, pi_bits, to_decimal_string};
use binocert::Rational;

pub const MAX_TRIALS: u64 = 10_000;
const BITS: u64 = 96;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistRow {
    pub k: u64,
    pub pmf: Rational,
    /// Midpoint of the enclosure of `exp(-z²/2) / √(2π npq)` with `z = (k - np)/√(npq)`.
    pub density: Rational,
}

impl HistRow {
    pub const HEADER: [&'static str; 5] = ["k", "pmf", "pmf_num", "pmf_den", "gaussian_density"];

    pub fn fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            to_decimal_string(&self.pmf, PLACES),
            self.pmf.numer().to_string(),
            self.pmf.denom().to_string(),
            to_decimal_string(&self.density, PLACES),
        ]
    }
}

pub fn histogram(n: u64, p: &Rational) -> Result<Vec<HistRow>, CliError> {
    if n > MAX_TRIALS {
        return Err(CliError::Usage(format!("hist needs n <= {MAX_TRIALS}, got {n}")));
    }
    let q = int(1) - p;
    let var = int(n) * p * &q;
    let norm = if n == 0 {
        None
    } else {
        Some(pi_bits(BITS).scale(&(&var * int(2))).sqrt(BITS)?.recip()?)
    };
    let np = int(n) * p;
    let mut rows = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let mass = pmf(n, p, k as i64)?.into_inner();
        let density = match &norm {
            Some(norm) => {
                let d = int(k) - &np;
                let e = exp_rational(&(-(&d * &d) / (&var * int(2))), BITS);
                (&e * norm).midpoint()
            }
            None => int(0),
        };
        rows.push(HistRow { k, pmf: mass, density });
    }
    Ok(rows)
}
