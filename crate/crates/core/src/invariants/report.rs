use crate::coincidence::Witness;
use crate::scalar::Scalar;

/// Value of an invariant: a signed integer or a parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Parity(u8),
}

impl Value {
    pub fn as_int(&self) -> i64 {
        match self {
            Value::Int(v) => *v,
            Value::Parity(p) => *p as i64,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Parity(p) => write!(f, "{p} (mod 2)"),
        }
    }
}

/// Auxiliary data an invariant run consumed, recorded for reproducibility.
#[derive(Clone, Debug, Default)]
pub struct Certificates {
    pub validations: Vec<String>,
    pub directions: Vec<String>,
    pub seed: Option<u64>,
    pub attempt: u32,
}

/// The outcome of one invariant computation. The value is present only when
/// all required validations passed (construction enforces this: errors never
/// produce a report).
#[derive(Clone, Debug)]
pub struct InvariantReport<S: Scalar> {
    pub invariant: String,
    pub value: Value,
    pub witnesses: Vec<Witness<S>>,
    pub certificates: Certificates,
    pub tuples_examined: u64,
}

impl<S: Scalar> InvariantReport<S> {
    pub fn new(invariant: &str, value: Value) -> Self {
        InvariantReport {
            invariant: invariant.to_string(),
            value,
            witnesses: Vec::new(),
            certificates: Certificates::default(),
            tuples_examined: 0,
        }
    }

    pub fn with_witnesses(mut self, witnesses: Vec<Witness<S>>, examined: u64) -> Self {
        self.witnesses = witnesses;
        self.tuples_examined = examined;
        self
    }
}
