//! Exact binomial window probabilities and certified checks of the
//! elementary binomial-Gaussian inequality chain.
//!
//! Every probability is an exact [`Rational`]. Transcendental quantities
//! (`exp`, square roots, `pi`, Gaussian integrals) are carried as
//! [`Enclosure`]s with outward rounding, so a comparison that is reported
//! as decided is always correct.

pub mod binom;
pub mod certificate;
pub mod certify_gen;
pub mod certify_sym;
pub mod exactnum;
pub mod exec;
pub mod gauss;
pub mod lemmas;
pub mod wallis;

mod error;
mod reals;

pub use certificate::{Claim, CertificateReport, Instance, Relation, SkipReason, Verdict};
pub use error::{Error, Result};
pub use exactnum::{cmp_certified, CertifiedOrdering, Enclosure, Precision, Rational};
