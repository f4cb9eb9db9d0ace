//! Structured verification results.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycInt, CycRat};
use crate::field::FieldCtx;
use crate::nt_base::SymbolValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// An exact value as it appears in a report.
///
/// Rational integers are always stored with conductor 1, so two values
/// compare equal exactly when the numbers they denote are equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactValue {
    Cyc {
        conductor: u64,
        coeffs: Vec<String>,
    },
    Poly {
        conductor: u64,
        poly: Vec<Vec<String>>,
    },
    Seq(Vec<ExactValue>),
    Flag(bool),
    Text(String),
}

impl ExactValue {
    pub fn int(v: impl Into<BigInt>) -> Self {
        ExactValue::Cyc {
            conductor: 1,
            coeffs: vec![v.into().to_string()],
        }
    }

    pub fn rational(v: &BigRational) -> Self {
        if v.is_integer() {
            return Self::int(v.to_integer());
        }
        ExactValue::Cyc {
            conductor: 1,
            coeffs: vec![v.to_string()],
        }
    }

    /// A polynomial (constant term first) with cyclotomic coefficients.
    pub fn poly(coeffs: &[CycInt]) -> Self {
        let rational = coeffs.iter().all(|c| c.as_integer().is_some());
        let conductor = if rational {
            1
        } else {
            coeffs.first().map_or(1, CycInt::conductor)
        };
        let poly = coeffs
            .iter()
            .map(|c| match c.as_integer() {
                Some(v) if rational => vec![v.to_string()],
                _ => c.coeffs().iter().map(ToString::to_string).collect(),
            })
            .collect();
        ExactValue::Poly { conductor, poly }
    }

    pub fn int_poly(coeffs: &[BigInt]) -> Self {
        ExactValue::Poly {
            conductor: 1,
            poly: coeffs.iter().map(|c| vec![c.to_string()]).collect(),
        }
    }

    pub fn seq(items: impl IntoIterator<Item = ExactValue>) -> Self {
        ExactValue::Seq(items.into_iter().collect())
    }
}

impl From<&CycInt> for ExactValue {
    fn from(x: &CycInt) -> Self {
        match x.as_integer() {
            Some(v) => ExactValue::int(v),
            None => ExactValue::Cyc {
                conductor: x.conductor(),
                coeffs: x.coeffs().iter().map(ToString::to_string).collect(),
            },
        }
    }
}

impl From<CycInt> for ExactValue {
    fn from(x: CycInt) -> Self {
        (&x).into()
    }
}

impl From<&CycRat> for ExactValue {
    fn from(x: &CycRat) -> Self {
        match crate::cyclotomic::as_rational_integer(x) {
            Some(v) => ExactValue::int(v),
            None if x
                .coeffs()
                .iter()
                .skip(1)
                .all(|c| *c == BigRational::from_integer(0.into())) =>
            {
                ExactValue::rational(&x.coeffs()[0])
            }
            None => ExactValue::Cyc {
                conductor: x.conductor(),
                coeffs: x.coeffs().iter().map(ToString::to_string).collect(),
            },
        }
    }
}

impl From<BigInt> for ExactValue {
    fn from(v: BigInt) -> Self {
        ExactValue::int(v)
    }
}

impl From<&BigInt> for ExactValue {
    fn from(v: &BigInt) -> Self {
        ExactValue::int(v.clone())
    }
}

impl From<i64> for ExactValue {
    fn from(v: i64) -> Self {
        ExactValue::int(v)
    }
}

impl From<u64> for ExactValue {
    fn from(v: u64) -> Self {
        ExactValue::int(v)
    }
}

impl From<SymbolValue> for ExactValue {
    fn from(v: SymbolValue) -> Self {
        ExactValue::int(i64::from(v))
    }
}

impl From<bool> for ExactValue {
    fn from(v: bool) -> Self {
        ExactValue::Flag(v)
    }
}

impl From<&str> for ExactValue {
    fn from(v: &str) -> Self {
        ExactValue::Text(v.to_owned())
    }
}

impl From<String> for ExactValue {
    fn from(v: String) -> Self {
        ExactValue::Text(v)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Cyc {
                conductor: 1,
                coeffs,
            } => f.write_str(&coeffs[0]),
            ExactValue::Cyc { conductor, coeffs } => {
                write!(f, "[{}]_{conductor}", coeffs.join(","))
            }
            ExactValue::Poly { conductor, poly } => {
                let terms: Vec<String> = poly
                    .iter()
                    .map(|c| {
                        if *conductor == 1 {
                            c.join(",")
                        } else {
                            format!("[{}]", c.join(","))
                        }
                    })
                    .collect();
                if *conductor == 1 {
                    write!(f, "poly({})", terms.join(";"))
                } else {
                    write!(f, "poly({})_{conductor}", terms.join(";"))
                }
            }
            ExactValue::Seq(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(";"))
            }
            ExactValue::Flag(b) => write!(f, "{b}"),
            ExactValue::Text(s) => f.write_str(s),
        }
    }
}

/// One verification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub status: Status,
    pub witnesses: BTreeMap<String, ExactValue>,
    /// Coefficients of the field generator over the prime field, if a field
    /// was involved.
    pub generator: Option<Vec<u32>>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(identity: &str) -> Self {
        Report {
            identity: identity.to_owned(),
            params: BTreeMap::new(),
            lhs: ExactValue::Text(String::new()),
            rhs: ExactValue::Text(String::new()),
            status: Status::NotApplicable,
            witnesses: BTreeMap::new(),
            generator: None,
            elapsed_ms: 0,
        }
    }

    /// Records `q`, `p`, `f` and the generator of `ctx`.
    pub fn for_field(identity: &str, ctx: &FieldCtx) -> Self {
        let mut r = Self::new(identity).param("q", ctx.q() as i64);
        if ctx.f() > 1 {
            r = r.param("p", ctx.p() as i64).param("f", ctx.f() as i64);
        }
        r.generator = Some(ctx.coeffs(ctx.generator()));
        r
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_owned(), value);
        self
    }

    pub fn witness(mut self, key: &str, value: impl Into<ExactValue>) -> Self {
        self.witnesses.insert(key.to_owned(), value.into());
        self
    }

    /// Sets both sides; the status is `pass` exactly when they are equal.
    pub fn compare(mut self, lhs: impl Into<ExactValue>, rhs: impl Into<ExactValue>) -> Self {
        self.lhs = lhs.into();
        self.rhs = rhs.into();
        self.status = if self.lhs == self.rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    /// Records both sides without asserting anything.
    pub fn observe(mut self, lhs: impl Into<ExactValue>, rhs: impl Into<ExactValue>) -> Self {
        self.lhs = lhs.into();
        self.rhs = rhs.into();
        self.status = Status::NotApplicable;
        self
    }

    pub fn not_applicable(mut self, reason: &str) -> Self {
        self.status = Status::NotApplicable;
        self.witnesses.insert("reason".into(), reason.into());
        self
    }

    pub fn elapsed_since(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Leading sort parameter: the first of `q`, `p`, `m`, `s` present.
    pub fn primary_param(&self) -> i64 {
        ["q", "p", "m", "s"]
            .iter()
            .find_map(|k| self.params.get(*k).copied())
            .unwrap_or(0)
    }

    /// Key giving the canonical output order: primary parameter, identity,
    /// `d`, then the remaining parameters.
    pub fn sort_key(&self) -> (i64, String, i64, Vec<(String, i64)>) {
        let d = self.params.get("d").copied().unwrap_or(-1);
        let rest = self.params.iter().map(|(k, v)| (k.clone(), *v)).collect();
        (self.primary_param(), self.identity.clone(), d, rest)
    }
}

/// Sorts reports into canonical order.
pub fn sort_reports(reports: &mut [Report]) {
    reports.sort_by_cached_key(Report::sort_key);
}
