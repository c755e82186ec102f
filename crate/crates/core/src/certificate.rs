//! Verdicts and printable certificates shared by every checker.

use std::fmt;

use serde::Serialize;

use crate::symcore::{Chart, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    /// Holds on a dense open set: a nonconstant determinant was attached.
    #[serde(rename = "generic-pass")]
    GenericPass,
    #[serde(rename = "fail")]
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::GenericPass => "generic-pass",
            Verdict::Fail => "fail",
        }
    }

    /// Conjunction: fail dominates, then generic.
    pub fn and(self, o: Verdict) -> Verdict {
        use Verdict::*;
        match (self, o) {
            (Fail, _) | (_, Fail) => Fail,
            (GenericPass, _) | (_, GenericPass) => GenericPass,
            _ => Pass,
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self != Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a quantity that should be nonzero at every point behaves on the chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nonvanishing {
    /// A nonzero constant: certified at every point.
    Everywhere(Scalar),
    /// Nonconstant: nonzero off the attached locus.
    Generic(Scalar),
    IdenticallyZero,
}

impl Nonvanishing {
    pub fn classify(value: &Scalar) -> Self {
        if value.is_zero() {
            Nonvanishing::IdenticallyZero
        } else if value.is_constant() {
            Nonvanishing::Everywhere(value.clone())
        } else {
            Nonvanishing::Generic(value.clone())
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Nonvanishing::Everywhere(_) => Verdict::Pass,
            Nonvanishing::Generic(_) => Verdict::GenericPass,
            Nonvanishing::IdenticallyZero => Verdict::Fail,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Nonvanishing::Everywhere(_))
    }

    pub fn value(&self) -> Option<&Scalar> {
        match self {
            Nonvanishing::Everywhere(s) | Nonvanishing::Generic(s) => Some(s),
            Nonvanishing::IdenticallyZero => None,
        }
    }

    /// `label = value`, plus the zero/pole locus for generic values.
    pub fn describe(&self, label: &str, chart: &Chart) -> Vec<String> {
        let names = chart.coords();
        match self {
            Nonvanishing::Everywhere(s) => vec![format!("{label} = {} (constant)", s.to_text(names))],
            Nonvanishing::Generic(s) => {
                let mut out = vec![format!("{label} = {}", s.to_text(names))];
                out.push(format!(
                    "{label} vanishes on {{{} = 0}}",
                    Scalar::from_poly(s.numer().clone()).to_text(names)
                ));
                if !s.denom().is_one() {
                    out.push(format!(
                        "{label} has poles on {{{} = 0}}",
                        Scalar::from_poly(s.denom().clone()).to_text(names)
                    ));
                }
                out
            }
            Nonvanishing::IdenticallyZero => vec![format!("{label} = 0 identically")],
        }
    }
}

/// Printable outcome of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Vec<String>,
    pub certificate: Vec<String>,
}

impl Certificate {
    pub fn new(verdict: Verdict) -> Self {
        Certificate { verdict, witness: Vec::new(), certificate: Vec::new() }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness.push(w.into());
        self
    }

    pub fn cert(mut self, c: impl Into<String>) -> Self {
        self.certificate.push(c.into());
        self
    }

    /// Merges another certificate into this one.
    pub fn absorb(mut self, o: Certificate) -> Self {
        self.verdict = self.verdict.and(o.verdict);
        self.witness.extend(o.witness);
        self.certificate.extend(o.certificate);
        self
    }
}

/// Typed reports render to printable certificates against a chart.
pub trait ToCertificate {
    fn to_certificate(&self, chart: &Chart) -> Certificate;
}
