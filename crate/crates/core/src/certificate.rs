//! Claims, verdicts and per-instance reports.
//!
//! A claim compares two enclosures. It is `Holds` or `Violated` only when
//! the enclosures separate in the decisive direction; anything else is
//! `Undecided`. Claims whose hypotheses fail are `Skipped`, which is not
//! a failure.

use crate::error::Result;
use crate::exactnum::{Enclosure, Precision};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "==",
        }
    }

    /// Three-valued decision of `lhs REL rhs`.
    pub fn decide(self, lhs: &Enclosure, rhs: &Enclosure) -> Verdict {
        match self {
            Relation::Le => {
                if lhs.hi() <= rhs.lo() {
                    Verdict::Holds
                } else if lhs.lo() > rhs.hi() {
                    Verdict::Violated
                } else {
                    Verdict::Undecided
                }
            }
            Relation::Lt => {
                if lhs.hi() < rhs.lo() {
                    Verdict::Holds
                } else if lhs.lo() >= rhs.hi() {
                    Verdict::Violated
                } else {
                    Verdict::Undecided
                }
            }
            Relation::Ge => Relation::Le.decide(rhs, lhs),
            Relation::Gt => Relation::Lt.decide(rhs, lhs),
            Relation::Eq => {
                if lhs.is_exact() && rhs.is_exact() && lhs == rhs {
                    Verdict::Holds
                } else if lhs.hi() < rhs.lo() || lhs.lo() > rhs.hi() {
                    Verdict::Violated
                } else {
                    Verdict::Undecided
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkipReason {
    /// The hypothesis of the inequality does not hold for this instance.
    Precondition(String),
    /// The instance is excluded by a documented convention.
    Convention(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Undecided,
    Skipped(SkipReason),
}

impl Verdict {
    pub fn is_skipped(&self) -> bool {
        matches!(self, Verdict::Skipped(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::Violated => "Violated",
            Verdict::Undecided => "Undecided",
            Verdict::Skipped(SkipReason::Precondition(_)) => "Skipped-precondition",
            Verdict::Skipped(SkipReason::Convention(_)) => "Skipped-convention",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub lhs: Option<Enclosure>,
    pub relation: Relation,
    pub rhs: Option<Enclosure>,
    pub verdict: Verdict,
    /// Refinement rounds used (0 for skipped claims).
    pub rounds: u32,
}

impl Claim {
    pub fn skipped(name: impl Into<String>, relation: Relation, reason: SkipReason) -> Self {
        Claim {
            name: name.into(),
            lhs: None,
            relation,
            rhs: None,
            verdict: Verdict::Skipped(reason),
            rounds: 0,
        }
    }

    /// Claim between two exact or already enclosed quantities; no refinement.
    pub fn direct(name: impl Into<String>, lhs: Enclosure, relation: Relation, rhs: Enclosure) -> Self {
        let verdict = relation.decide(&lhs, &rhs);
        Claim {
            name: name.into(),
            lhs: Some(lhs),
            relation,
            rhs: Some(rhs),
            verdict,
            rounds: 1,
        }
    }

    /// Evaluates `sides(bits)` at doubling working precision until the claim
    /// is decided or the refinement budget of `prec` runs out.
    ///
    /// An evaluation error (for instance an enclosure too wide to invert)
    /// counts as undecided for that round.
    pub fn certify<F>(name: impl Into<String>, relation: Relation, prec: &Precision, mut sides: F) -> Self
    where
        F: FnMut(u64) -> Result<(Enclosure, Enclosure)>,
    {
        let name = name.into();
        let mut last = None;
        for round in 0..prec.max_refinements {
            if let Ok((lhs, rhs)) = sides(prec.bits_for_round(round)) {
                let verdict = relation.decide(&lhs, &rhs);
                let decided = verdict != Verdict::Undecided;
                last = Some((lhs, rhs));
                if decided {
                    let (lhs, rhs) = last.expect("just set");
                    return Claim {
                        name,
                        lhs: Some(lhs),
                        relation,
                        rhs: Some(rhs),
                        verdict,
                        rounds: round + 1,
                    };
                }
            }
        }
        let (lhs, rhs) = match last {
            Some((l, r)) => (Some(l), Some(r)),
            None => (None, None),
        };
        Claim {
            name,
            lhs,
            relation,
            rhs,
            verdict: Verdict::Undecided,
            rounds: prec.max_refinements,
        }
    }

    /// `certify` behind a gate: skipped with `reason` unless `gate` holds.
    pub fn gated<F>(
        name: impl Into<String>,
        relation: Relation,
        prec: &Precision,
        gate: bool,
        reason: impl FnOnce() -> String,
        sides: F,
    ) -> Self
    where
        F: FnMut(u64) -> Result<(Enclosure, Enclosure)>,
    {
        if gate {
            Claim::certify(name, relation, prec, sides)
        } else {
            Claim::skipped(name, relation, SkipReason::Precondition(reason()))
        }
    }
}

/// Description of one certified instance, as ordered key/value pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub kind: &'static str,
    pub fields: Vec<(&'static str, String)>,
}

impl Instance {
    pub fn new(kind: &'static str) -> Self {
        Instance {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: impl ToString) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (k, v) in &self.fields {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub instance: Instance,
    pub claims: Vec<Claim>,
}

impl CertificateReport {
    pub fn new(instance: Instance) -> Self {
        CertificateReport {
            instance,
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// `Violated` if any claim is violated, else `Undecided` if any is
    /// undecided, else `Holds` if at least one claim was checked. A report
    /// whose claims were all skipped is `Skipped`.
    pub fn overall(&self) -> Verdict {
        let mut any_holds = false;
        let mut any_undecided = false;
        let mut first_skip = None;
        for c in &self.claims {
            match &c.verdict {
                Verdict::Violated => return Verdict::Violated,
                Verdict::Undecided => any_undecided = true,
                Verdict::Holds => any_holds = true,
                Verdict::Skipped(r) => {
                    first_skip.get_or_insert_with(|| r.clone());
                }
            }
        }
        if any_undecided {
            Verdict::Undecided
        } else if any_holds {
            Verdict::Holds
        } else {
            Verdict::Skipped(
                first_skip.unwrap_or_else(|| SkipReason::Precondition("no claims".into())),
            )
        }
    }

    pub fn count(&self, label: &str) -> usize {
        self.claims.iter().filter(|c| c.verdict.label() == label).count()
    }

    /// Flat `key=value` lines, one block per claim.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance.kind={}\n", self.instance.kind));
        for (k, v) in &self.instance.fields {
            out.push_str(&format!("instance.{k}={v}\n"));
        }
        for c in &self.claims {
            let p = format!("claim.{}", c.name);
            out.push_str(&format!("{p}.relation={}\n", c.relation.symbol()));
            if let Some(l) = &c.lhs {
                out.push_str(&format!("{p}.lhs={l}\n"));
            }
            if let Some(r) = &c.rhs {
                out.push_str(&format!("{p}.rhs={r}\n"));
            }
            out.push_str(&format!("{p}.verdict={}\n", c.verdict));
            if let Verdict::Skipped(SkipReason::Precondition(s) | SkipReason::Convention(s)) = &c.verdict {
                out.push_str(&format!("{p}.note={s}\n"));
            }
        }
        out.push_str(&format!("overall={}\n", self.overall()));
        out
    }
}

/// Merges several reports about the same instance.
pub(crate) fn merge(instance: Instance, parts: impl IntoIterator<Item = CertificateReport>) -> CertificateReport {
    let mut out = CertificateReport::new(instance);
    for p in parts {
        out.claims.extend(p.claims);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn ex(a: i64, b: i64) -> Enclosure {
        Enclosure::exact(rat(a, b))
    }

    #[test]
    fn equality_is_holds_for_non_strict_and_violated_for_strict() {
        assert_eq!(Relation::Le.decide(&ex(1, 1), &ex(1, 1)), Verdict::Holds);
        assert_eq!(Relation::Ge.decide(&ex(1, 1), &ex(1, 1)), Verdict::Holds);
        assert_eq!(Relation::Lt.decide(&ex(1, 1), &ex(1, 1)), Verdict::Violated);
        assert_eq!(Relation::Gt.decide(&ex(1, 1), &ex(1, 1)), Verdict::Violated);
        assert_eq!(Relation::Eq.decide(&ex(1, 2), &ex(2, 4)), Verdict::Holds);
    }

    #[test]
    fn overlap_never_violates() {
        let a = Enclosure::new(int(1), int(3)).unwrap();
        let b = Enclosure::new(int(2), int(4)).unwrap();
        for r in [Relation::Le, Relation::Lt, Relation::Ge, Relation::Gt, Relation::Eq] {
            assert_eq!(r.decide(&a, &b), Verdict::Undecided);
        }
    }

    #[test]
    fn overall_verdict_rules() {
        let mut rep = CertificateReport::new(Instance::new("t"));
        rep.push(Claim::skipped("a", Relation::Le, SkipReason::Precondition("gate".into())));
        assert!(rep.overall().is_skipped());
        rep.push(Claim::direct("b", ex(1, 2), Relation::Le, ex(1, 1)));
        assert_eq!(rep.overall(), Verdict::Holds);
        rep.push(Claim::direct("c", Enclosure::new(int(0), int(2)).unwrap(), Relation::Le, ex(1, 1)));
        assert_eq!(rep.overall(), Verdict::Undecided);
        rep.push(Claim::direct("d", ex(2, 1), Relation::Le, ex(1, 1)));
        assert_eq!(rep.overall(), Verdict::Violated);
        assert!(rep.to_key_value().contains("claim.d.verdict=Violated"));
    }

    #[test]
    fn certify_refines_until_decided() {
        let prec = Precision::decimal(3, 6);
        let mut calls = 0;
        let claim = Claim::certify("third", Relation::Lt, &prec, |bits| {
            calls += 1;
            let half_width = rat(1, 1 << (bits.min(40) as i64 / 8));
            let l = Enclosure::new(rat(1, 3) - &half_width, rat(1, 3) + &half_width)?;
            Ok((l, ex(1, 2)))
        });
        assert_eq!(claim.verdict, Verdict::Holds);
        assert_eq!(claim.rounds, calls);
    }
}
