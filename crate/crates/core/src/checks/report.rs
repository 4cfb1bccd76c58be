use std::fmt;

use crate::kernel::{HalfSpace, LatticePoint, Point, Rational, UnimodularAffineMap};

/// Verdict of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Strict,
    Equality,
    Violation,
    NotApplicable,
}

impl Status {
    pub const ALL: [Status; 4] = [
        Status::Strict,
        Status::Equality,
        Status::Violation,
        Status::NotApplicable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Strict => "strict",
            Status::Equality => "equality",
            Status::Violation => "violation",
            Status::NotApplicable => "not-applicable",
        }
    }

    /// Verdict for the claim `lhs <= rhs`.
    pub fn of_le(lhs: &Rational, rhs: &Rational) -> Status {
        match lhs.cmp(rhs) {
            std::cmp::Ordering::Less => Status::Strict,
            std::cmp::Ordering::Equal => Status::Equality,
            std::cmp::Ordering::Greater => Status::Violation,
        }
    }

    /// Verdict for the claim `lhs >= rhs`.
    pub fn of_ge(lhs: &Rational, rhs: &Rational) -> Status {
        Self::of_le(rhs, lhs)
    }

    fn severity(self) -> u8 {
        match self {
            Status::NotApplicable => 0,
            Status::Strict => 1,
            Status::Equality => 2,
            Status::Violation => 3,
        }
    }

    /// Combines the verdicts of a conjunction of claims.
    pub fn worst(self, other: Status) -> Status {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Point(Point),
    Points(Vec<Point>),
    Flag(bool),
    Count(usize),
    Text(String),
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Scalar(v)
    }
}

impl From<&Rational> for Value {
    fn from(v: &Rational) -> Self {
        Value::Scalar(v.clone())
    }
}

impl From<Point> for Value {
    fn from(v: Point) -> Self {
        Value::Point(v)
    }
}

impl From<&Point> for Value {
    fn from(v: &Point) -> Self {
        Value::Point(v.clone())
    }
}

impl From<Vec<Point>> for Value {
    fn from(v: Vec<Point>) -> Self {
        Value::Points(v)
    }
}

impl From<&[LatticePoint]> for Value {
    fn from(v: &[LatticePoint]) -> Self {
        Value::Points(v.iter().map(LatticePoint::to_point).collect())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Flag(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Count(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Map(UnimodularAffineMap),
    HalfSpace(HalfSpace),
    Point(Point),
    Report(Box<CheckReport>),
}

/// Structured verdict: named exact values, the bound they were compared
/// against, and the resulting status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub inputs: Vec<(String, Value)>,
    pub values: Vec<(String, Value)>,
    pub bound: Option<Rational>,
    pub status: Status,
    pub reason: Option<String>,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn new(check: &str, status: Status) -> Self {
        CheckReport {
            check: check.to_owned(),
            inputs: Vec::new(),
            values: Vec::new(),
            bound: None,
            status,
            reason: None,
            witness: None,
        }
    }

    pub fn not_applicable(check: &str, reason: impl Into<String>) -> Self {
        Self::new(check, Status::NotApplicable).with_reason(reason)
    }

    pub fn with_input(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.inputs.push((name.to_owned(), value.into()));
        self
    }

    pub fn with_value(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.values.push((name.to_owned(), value.into()));
        self
    }

    pub fn with_bound(mut self, bound: Rational) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn scalar(&self, name: &str) -> Option<&Rational> {
        match self.value(name) {
            Some(Value::Scalar(v)) => Some(v),
            _ => None,
        }
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        match self.value(name) {
            Some(Value::Flag(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn witness_map(&self) -> Option<&UnimodularAffineMap> {
        match &self.witness {
            Some(Witness::Map(m)) => Some(m),
            _ => None,
        }
    }
}
