//! The elementary inequalities the whole chain rests on, checked on
//! rational grids:
//!
//! * `exp(t) >= 1 + t` for all real `t`,
//! * `1/(1-t) >= 1 + t` on `[-1, 1)`,
//! * `1/(1-t) <= 1 + 2t` on `[0, 1/2]`,
//! * `exp(-t) <= 1/(1+t)` on `[0, 1]`.

use crate::certificate::{Claim, Relation, Verdict};
use crate::exactnum::{exp_rational, int, rat, Enclosure, Precision, Rational};
use crate::exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    ExpAboveTangent,
    ReciprocalAboveLine,
    ReciprocalBelowDoubleLine,
    ExpBelowReciprocal,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [
        Lemma::ExpAboveTangent,
        Lemma::ReciprocalAboveLine,
        Lemma::ReciprocalBelowDoubleLine,
        Lemma::ExpBelowReciprocal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::ExpAboveTangent => "exp_above_tangent",
            Lemma::ReciprocalAboveLine => "reciprocal_above_line",
            Lemma::ReciprocalBelowDoubleLine => "reciprocal_below_double_line",
            Lemma::ExpBelowReciprocal => "exp_below_reciprocal",
        }
    }

    /// Grid points: `k/100` on `[-10, 10]`, `k/1000` on `[-1, 1)`,
    /// `k/4000` on `[0, 1/2]` and `k/2000` on `[0, 1]`.
    pub fn grid(self) -> Vec<Rational> {
        let (range, den) = match self {
            Lemma::ExpAboveTangent => (-1000..=1000, 100),
            Lemma::ReciprocalAboveLine => (-1000..=999, 1000),
            Lemma::ReciprocalBelowDoubleLine => (0..=2000, 4000),
            Lemma::ExpBelowReciprocal => (0..=2000, 2000),
        };
        range.map(|k| rat(k, den)).collect()
    }

    pub fn check(self, t: &Rational, prec: &Precision) -> Claim {
        let name = format!("{}[{t}]", self.name());
        let one = int(1);
        match self {
            Lemma::ExpAboveTangent => {
                let line = Enclosure::exact(&one + t);
                Claim::certify(name, Relation::Ge, prec, |b| Ok((exp_rational(t, b), line.clone())))
            }
            Lemma::ReciprocalAboveLine => Claim::direct(
                name,
                Enclosure::exact((&one - t).recip()),
                Relation::Ge,
                Enclosure::exact(&one + t),
            ),
            Lemma::ReciprocalBelowDoubleLine => Claim::direct(
                name,
                Enclosure::exact((&one - t).recip()),
                Relation::Le,
                Enclosure::exact(&one + t * int(2)),
            ),
            Lemma::ExpBelowReciprocal => {
                let recip = Enclosure::exact((&one + t).recip());
                let neg = -t.clone();
                Claim::certify(name, Relation::Le, prec, |b| Ok((exp_rational(&neg, b), recip.clone())))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSummary {
    pub lemma: Lemma,
    pub points: usize,
    pub holds: usize,
    pub violated: usize,
    pub undecided: usize,
}

impl LemmaSummary {
    pub fn passed(&self) -> bool {
        self.holds == self.points
    }
}

/// Checks one lemma on its whole grid.
pub fn run_lemma(lemma: Lemma, prec: &Precision) -> LemmaSummary {
    let grid = lemma.grid();
    let verdicts = exec::map(&grid, |t| lemma.check(t, prec).verdict);
    let count = |v: Verdict| verdicts.iter().filter(|x| **x == v).count();
    LemmaSummary {
        lemma,
        points: grid.len(),
        holds: count(Verdict::Holds),
        violated: count(Verdict::Violated),
        undecided: count(Verdict::Undecided),
    }
}

pub fn run_all(prec: &Precision) -> Vec<LemmaSummary> {
    Lemma::ALL.iter().map(|&l| run_lemma(l, prec)).collect()
}
