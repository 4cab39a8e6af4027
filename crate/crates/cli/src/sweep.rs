//! Parameter sweeps: instances are certified concurrently and the rows are
//! emitted in the order of the sorted instance list.

use crate::args::Mode;
use crate::numeric::{canonical, enclosure_bounds};
use crate::CliError;
use binocert::binom::{window_prob_gen, window_prob_sym, GeneralWindow, SymmetricWindow};
use binocert::certify_gen::check_general_sandwich;
use binocert::certify_sym::{certify_even, certify_odd, certify_unified};
use binocert::exactnum::{rat, to_decimal_string};
use binocert::gauss::gauss_integral;
use binocert::lemmas::{run_all, LemmaSummary};
use binocert::wallis::{check_central_identities, check_product_identity, wallis};
use binocert::{exec, CertificateReport, Enclosure, Precision, Rational, Verdict};
use std::collections::BTreeMap;

/// Decimal places for the rounded probability column.
pub const PLACES: u32 = 15;
/// Decimal places for outward-rounded enclosure end points.
pub const BOUND_PLACES: u32 = 18;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub mode: Mode,
    pub n_min: u64,
    pub n_max: u64,
    pub n_step: u64,
    pub x_list: Vec<Rational>,
    pub p_list: Vec<Rational>,
    pub precision: Precision,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_min > self.n_max {
            return Err(CliError::Usage(format!("n-min {} exceeds n-max {}", self.n_min, self.n_max)));
        }
        if self.n_step == 0 {
            return Err(CliError::Usage("n-step must be positive".into()));
        }
        let needs_x = matches!(self.mode, Mode::SymEven | Mode::SymOdd | Mode::Unified | Mode::General);
        if needs_x && self.x_list.is_empty() {
            return Err(CliError::Usage("--x needs at least one value".into()));
        }
        if self.x_list.iter().any(|x| *x <= Rational::from_integer(0.into())) {
            return Err(CliError::Usage("every x must be positive".into()));
        }
        if self.mode == Mode::General && self.p_list.is_empty() {
            return Err(CliError::Usage("general mode needs --p".into()));
        }
        let (zero, one) = (rat(0, 1), rat(1, 1));
        if self.p_list.iter().any(|p| *p <= zero || *p >= one) {
            return Err(CliError::Usage("every p must lie in (0, 1)".into()));
        }
        Ok(())
    }

    /// Trial counts in the range that the mode accepts, ascending.
    pub fn trial_counts(&self) -> Vec<u64> {
        (self.n_min..=self.n_max)
            .step_by(self.n_step as usize)
            .filter(|&n| match self.mode {
                Mode::SymEven => n % 2 == 0 && n >= 2,
                Mode::SymOdd => n % 2 == 1,
                Mode::Unified | Mode::General => n >= 1,
                Mode::Wallis => n >= 1,
                Mode::Lemmas => false,
            })
            .collect()
    }
}

/// One row of a window sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowRow {
    pub n: u64,
    pub p: Rational,
    pub x: Rational,
    pub exact: Rational,
    pub gauss: Enclosure,
    pub abs_diff: Enclosure,
    pub bound: Option<Enclosure>,
    pub verdict: Verdict,
}

impl WindowRow {
    pub const HEADER: [&'static str; 13] = [
        "n",
        "parity",
        "p",
        "x",
        "exact_window_prob",
        "exact_num",
        "exact_den",
        "gauss_lo",
        "gauss_hi",
        "abs_diff_lo",
        "abs_diff_hi",
        "paper_bound",
        "verdict",
    ];

    pub fn fields(&self) -> Vec<String> {
        let (g_lo, g_hi) = enclosure_bounds(&self.gauss, BOUND_PLACES);
        let (d_lo, d_hi) = enclosure_bounds(&self.abs_diff, BOUND_PLACES);
        let bound = self
            .bound
            .as_ref()
            .map(|b| enclosure_bounds(b, BOUND_PLACES).1)
            .unwrap_or_default();
        vec![
            self.n.to_string(),
            if self.n.is_multiple_of(2) { "even" } else { "odd" }.to_string(),
            canonical(&self.p),
            canonical(&self.x),
            to_decimal_string(&self.exact, PLACES),
            self.exact.numer().to_string(),
            self.exact.denom().to_string(),
            g_lo,
            g_hi,
            d_lo,
            d_hi,
            bound,
            self.verdict.label().to_string(),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<(WindowRow, CertificateReport)>,
}

impl SweepResult {
    pub fn worst(&self) -> Verdict {
        worst(self.rows.iter().map(|(r, _)| r.verdict.clone()))
    }
}

/// `Violated` over `Undecided` over `Holds`; all-skipped stays skipped.
pub fn worst(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut out: Option<Verdict> = None;
    for v in verdicts {
        let rank = |v: &Verdict| match v {
            Verdict::Violated => 3,
            Verdict::Undecided => 2,
            Verdict::Holds => 1,
            Verdict::Skipped(_) => 0,
        };
        if out.as_ref().is_none_or(|o| rank(&v) > rank(o)) {
            out = Some(v);
        }
    }
    out.unwrap_or(Verdict::Holds)
}

#[derive(Debug, Clone)]
struct Job {
    n: u64,
    p: Rational,
    x: Rational,
}

fn abs_error_claim(mode: Mode) -> &'static str {
    match mode {
        Mode::SymEven => "even_abs_error",
        Mode::SymOdd => "odd_abs_error",
        _ => "unified_abs_error",
    }
}

fn run_job(mode: Mode, job: &Job, gauss: &Enclosure, prec: &Precision) -> Result<(WindowRow, CertificateReport), CliError> {
    let (exact, report, gauss) = match mode {
        Mode::General => {
            let win = GeneralWindow::new(job.n, job.p.clone(), job.x.clone())?;
            let exact = window_prob_gen(&win)?.into_inner();
            let cert = check_general_sandwich(&win, prec)?;
            (exact, cert.report, gauss.scale(&rat(1, 2)))
        }
        _ => {
            let exact = window_prob_sym(&SymmetricWindow::new(job.n, job.x.clone())?)?.into_inner();
            let half = job.n / 2;
            let report = match mode {
                Mode::SymEven => certify_even(half, &job.x, prec)?,
                Mode::SymOdd => certify_odd(half, &job.x, prec)?,
                _ => certify_unified(job.n, &job.x, prec)?,
            };
            (exact, report, gauss.clone())
        }
    };
    let abs_diff = (&Enclosure::exact(exact.clone()) - &gauss).abs();
    let bound = if mode == Mode::General {
        None
    } else {
        report
            .claim(abs_error_claim(mode))
            .filter(|c| !c.verdict.is_skipped())
            .and_then(|c| c.rhs.clone())
    };
    let row = WindowRow {
        n: job.n,
        p: job.p.clone(),
        x: job.x.clone(),
        exact,
        gauss,
        abs_diff,
        bound,
        verdict: report.overall(),
    };
    Ok((row, report))
}

/// Runs a window sweep (`sym-even`, `sym-odd`, `unified` or `general`).
pub fn run_windows(cfg: &SweepConfig) -> Result<SweepResult, CliError> {
    cfg.validate()?;
    let mut xs = cfg.x_list.clone();
    xs.sort();
    xs.dedup();
    let mut ps = if cfg.mode == Mode::General { cfg.p_list.clone() } else { vec![rat(1, 2)] };
    ps.sort();
    ps.dedup();

    let mut gauss = BTreeMap::new();
    for x in &xs {
        gauss.insert(x.clone(), gauss_integral(x, &cfg.precision)?.enclosure);
    }

    let mut jobs = Vec::new();
    for n in cfg.trial_counts() {
        for p in &ps {
            for x in &xs {
                jobs.push(Job { n, p: p.clone(), x: x.clone() });
            }
        }
    }
    let results = exec::map(&jobs, |job| run_job(cfg.mode, job, &gauss[&job.x], &cfg.precision));
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(SweepResult { rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallisRow {
    pub n: u64,
    pub value: String,
    pub product_identity: bool,
    pub central_identities: bool,
    pub verdict: Verdict,
}

impl WallisRow {
    pub const HEADER: [&'static str; 5] = ["n", "w_n", "product_identity", "central_identities", "verdict"];

    pub fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.value.clone(),
            self.product_identity.to_string(),
            self.central_identities.to_string(),
            self.verdict.label().to_string(),
        ]
    }
}

pub fn run_wallis(cfg: &SweepConfig) -> Result<Vec<WallisRow>, CliError> {
    cfg.validate()?;
    let ns = cfg.trial_counts();
    exec::map(&ns, |&n| {
        let report = crate::commands::wallis_report(n, &cfg.precision)?;
        Ok(WallisRow {
            n,
            value: wallis(n).to_string(),
            product_identity: check_product_identity(n).holds,
            central_identities: check_central_identities(n),
            verdict: report.overall(),
        })
    })
    .into_iter()
    .collect()
}

pub const LEMMA_HEADER: [&str; 5] = ["lemma", "points", "holds", "violated", "undecided"];

pub fn lemma_fields(s: &LemmaSummary) -> Vec<String> {
    vec![
        s.lemma.name().to_string(),
        s.points.to_string(),
        s.holds.to_string(),
        s.violated.to_string(),
        s.undecided.to_string(),
    ]
}

pub fn run_lemmas(prec: &Precision) -> Vec<LemmaSummary> {
    run_all(prec)
}
