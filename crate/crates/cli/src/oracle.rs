//! Double-precision cross-check through log-gamma. Never used to certify.

use statrs::function::factorial::ln_binomial;
use thiserror::Error;

pub const MAX_TRIALS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("n = {0} exceeds the float oracle limit of {MAX_TRIALS}")]
    TooManyTrials(u64),
    #[error("p = {0} is not in (0, 1)")]
    BadProbability(f64),
}

fn check(n: u64, p: f64) -> Result<(), OracleError> {
    if n > MAX_TRIALS {
        return Err(OracleError::TooManyTrials(n));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(OracleError::BadProbability(p));
    }
    Ok(())
}

/// `P(S_n = k)` for `S_n ~ B(n, p)`.
pub fn pmf(n: u64, p: f64, k: u64) -> Result<f64, OracleError> {
    check(n, p)?;
    if k > n {
        return Ok(0.0);
    }
    let ln = ln_binomial(n, k) + k as f64 * p.ln() + (n - k) as f64 * (-p).ln_1p();
    Ok(ln.exp())
}

/// `P(|S_n - n/2| < x√n/2)` for the symmetric binomial.
pub fn window_sym(n: u64, x: f64) -> Result<f64, OracleError> {
    check(n, 0.5)?;
    let bound = x * x * n as f64;
    let mut total = 0.0;
    for k in 0..=n {
        let d = 2.0 * k as f64 - n as f64;
        if d * d < bound {
            total += pmf(n, 0.5, k)?;
        }
    }
    Ok(total)
}

/// `P(m <= S_n < m + x√(npq))` with `m = floor((n+1)p)`.
pub fn window_gen(n: u64, p: f64, x: f64) -> Result<f64, OracleError> {
    check(n, p)?;
    let m = ((n + 1) as f64 * p).floor() as u64;
    let bound = x * x * n as f64 * p * (1.0 - p);
    let mut total = 0.0;
    for k in m..=n {
        let d = (k - m) as f64;
        if d * d >= bound {
            break;
        }
        total += pmf(n, p, k)?;
    }
    Ok(total)
}

/// `I(x) = erf(x/√2)`.
pub fn gauss_mass(x: f64) -> f64 {
    libm::erf(x / std::f64::consts::SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!((pmf(2, 0.5, 1).unwrap() - 0.5).abs() < 1e-12);
        assert!((window_sym(8, 1.0).unwrap() - 0.7109375).abs() < 1e-12);
        assert!((gauss_mass(1.0) - 0.682689492137086).abs() < 1e-14);
    }

    #[test]
    fn guards() {
        assert!(pmf(MAX_TRIALS + 1, 0.5, 0).is_err());
        assert!(pmf(4, 1.0, 0).is_err());
        assert_eq!(pmf(4, 0.5, 5).unwrap(), 0.0);
    }
}
