use crate::args::{CertifyArgs, Format, HistArgs, LemmaArgs, Mode, OutputArgs, PrecisionArgs, SweepArgs, WallisArgs};
use crate::numeric::enclosure_bounds;
use crate::sweep::{self, SweepConfig, WallisRow, WindowRow, BOUND_PLACES};
use crate::{hist, CliError, Status};
use binocert::binom::GeneralWindow;
use binocert::certify_gen::check_general_sandwich;
use binocert::certify_sym::{certify_even, certify_odd, certify_unified};
use binocert::lemmas::LemmaSummary;
use binocert::wallis::{
    central_sandwich_even, central_sandwich_odd, check_central_identities, check_monotone,
    check_product_identity, wallis, wallis_ratio_bracket,
};
use binocert::{CertificateReport, Claim, Enclosure, Instance, Precision, Rational, Relation, Verdict};
use std::fs::File;
use std::io::{BufWriter, Write};

fn precision(a: &PrecisionArgs) -> Result<Precision, CliError> {
    Ok(Precision::new(a.precision.clone(), a.max_refine)?)
}

fn sink(out: &OutputArgs, stdout: &mut dyn Write, body: &[u8]) -> Result<(), CliError> {
    match &out.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path).map_err(|e| CliError::Io(path.display().to_string(), e))?);
            f.write_all(body).and_then(|_| f.flush()).map_err(|e| CliError::Io(path.display().to_string(), e))
        }
        None => stdout.write_all(body).map_err(|e| CliError::Io("stdout".into(), e)),
    }
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.into_inner().map_err(|e| CliError::Io("csv buffer".into(), e.into_error()))
}

fn need<T: Clone>(v: &Option<T>, flag: &str, mode: Mode) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::Usage(format!("{flag} is required for mode {mode:?}")))
}

fn positive(x: &Rational, flag: &str) -> Result<(), CliError> {
    if *x <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("{flag} must be positive, got {x}")));
    }
    Ok(())
}

fn flag(b: bool) -> Enclosure {
    Enclosure::exact(Rational::from_integer(u8::from(b).into()))
}

/// Every Wallis-related claim at `n >= 1`.
pub fn wallis_report(n: u64, prec: &Precision) -> Result<CertificateReport, CliError> {
    if n == 0 {
        return Err(CliError::Usage("the Wallis checks need n >= 1".into()));
    }
    let mut rep = CertificateReport::new(Instance::new("wallis").with("n", n).with("w_n", wallis(n)));
    rep.push(Claim::direct("product_identity", flag(check_product_identity(n).holds), Relation::Eq, flag(true)));
    rep.push(Claim::direct("central_identities", flag(check_central_identities(n)), Relation::Eq, flag(true)));
    rep.push(check_monotone(n, prec));
    for part in [central_sandwich_even(n, prec), central_sandwich_odd(n, prec), wallis_ratio_bracket(n, prec)] {
        rep.claims.extend(part.claims);
    }
    Ok(rep)
}

fn lemma_report(summaries: &[LemmaSummary]) -> Verdict {
    sweep::worst(summaries.iter().map(|s| {
        if s.violated > 0 {
            Verdict::Violated
        } else if s.undecided > 0 {
            Verdict::Undecided
        } else {
            Verdict::Holds
        }
    }))
}

const CLAIM_HEADER: [&str; 8] = ["instance", "claim", "relation", "lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi", "verdict"];

fn report_csv(rep: &CertificateReport) -> Result<Vec<u8>, CliError> {
    let inst = rep.instance.to_string();
    let bounds = |e: &Option<Enclosure>| {
        e.as_ref().map(|e| enclosure_bounds(e, BOUND_PLACES)).unwrap_or_default()
    };
    let rows = rep.claims.iter().map(|c| {
        let (l0, l1) = bounds(&c.lhs);
        let (r0, r1) = bounds(&c.rhs);
        vec![
            inst.clone(),
            c.name.clone(),
            c.relation.symbol().to_string(),
            l0,
            l1,
            r0,
            r1,
            c.verdict.label().to_string(),
        ]
    });
    csv_bytes(&CLAIM_HEADER, rows)
}

fn emit_report(rep: &CertificateReport, out: &OutputArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let body = match out.format.unwrap_or(Format::Text) {
        Format::Text => rep.to_key_value().into_bytes(),
        Format::Csv => report_csv(rep)?,
    };
    sink(out, stdout, &body)?;
    let overall = rep.overall();
    if overall.is_skipped() {
        eprintln!("SKIPPED: no claim applies to this instance");
    }
    Ok(Status::from_verdict(&overall))
}

pub fn certify(a: &CertifyArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let prec = precision(&a.precision)?;
    let rep = match a.mode {
        Mode::SymEven | Mode::SymOdd | Mode::Unified | Mode::General => {
            let n = need(&a.n, "--n", a.mode)?;
            let x = need(&a.x, "--x", a.mode)?;
            positive(&x, "--x")?;
            match a.mode {
                Mode::SymEven => certify_even(n, &x, &prec)?,
                Mode::SymOdd => certify_odd(n, &x, &prec)?,
                Mode::Unified => certify_unified(n, &x, &prec)?,
                _ => {
                    let p = need(&a.p, "--p", a.mode)?;
                    check_general_sandwich(&GeneralWindow::new(n, p, x)?, &prec)?.report
                }
            }
        }
        Mode::Wallis => wallis_report(need(&a.n, "--n", a.mode)?, &prec)?,
        Mode::Lemmas => {
            let args = LemmaArgs { precision: a.precision.clone(), output: a.output.clone() };
            return lemmas(&args, stdout);
        }
    };
    emit_report(&rep, &a.output, stdout)
}

pub fn sweep(a: &SweepArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let cfg = SweepConfig {
        mode: a.mode,
        n_min: a.n_min,
        n_max: a.n_max,
        n_step: a.n_step,
        x_list: a.x.clone(),
        p_list: a.p.clone(),
        precision: precision(&a.precision)?,
    };
    let format = a.output.format.unwrap_or(Format::Csv);
    let (body, verdict) = match a.mode {
        Mode::Wallis => {
            let rows = sweep::run_wallis(&cfg)?;
            let v = sweep::worst(rows.iter().map(|r| r.verdict.clone()));
            (table(format, &WallisRow::HEADER, rows.iter().map(WallisRow::fields))?, v)
        }
        Mode::Lemmas => {
            let s = sweep::run_lemmas(&cfg.precision);
            (table(format, &sweep::LEMMA_HEADER, s.iter().map(sweep::lemma_fields))?, lemma_report(&s))
        }
        _ => {
            let res = sweep::run_windows(&cfg)?;
            let rows = res.rows.iter().map(|(row, _)| row.fields());
            (table(format, &WindowRow::HEADER, rows)?, res.worst())
        }
    };
    sink(&a.output, stdout, &body)?;
    Ok(Status::from_verdict(&verdict))
}

/// CSV, or `key=value` pairs one row per line.
fn table(format: Format, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => csv_bytes(header, rows),
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                let line: Vec<String> = header.iter().zip(&r).map(|(h, v)| format!("{h}={v}")).collect();
                s.push_str(&line.join(" "));
                s.push('\n');
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn wallis_cmd(a: &WallisArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let rep = wallis_report(a.n, &precision(&a.precision)?)?;
    emit_report(&rep, &a.output, stdout)
}

pub fn hist_cmd(a: &HistArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let rows = hist::histogram(a.n, &a.p)?;
    let fields = rows.iter().map(|r| r.fields());
    let body = table(a.output.format.unwrap_or(Format::Csv), &hist::HistRow::HEADER, fields)?;
    sink(&a.output, stdout, &body)?;
    Ok(Status::Holds)
}

pub fn lemmas(a: &LemmaArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let s = sweep::run_lemmas(&precision(&a.precision)?);
    let body = table(a.output.format.unwrap_or(Format::Text), &sweep::LEMMA_HEADER, s.iter().map(sweep::lemma_fields))?;
    sink(&a.output, stdout, &body)?;
    Ok(Status::from_verdict(&lemma_report(&s)))
}
