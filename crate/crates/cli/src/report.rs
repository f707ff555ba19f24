//! Machine-readable invariant reports with stable key order. Everything
//! except `timing_ms` is deterministic for fixed inputs, options and seeds.

use serde::Serialize;

use plgauss::invariants::{InvariantReport, Value};
use plgauss::{Rat, Scalar};

#[derive(Serialize)]
pub struct ReportFile {
    pub invariant: String,
    pub value: ValueBlock,
    pub witnesses: Vec<WitnessBlock>,
    pub certificates: CertificatesBlock,
    pub tuples_examined: u64,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct ValueBlock {
    pub kind: &'static str,
    pub value: i64,
}

#[derive(Serialize)]
pub struct WitnessBlock {
    pub cells: Vec<usize>,
    pub barycentric: Vec<Vec<String>>,
    pub aux: Vec<String>,
    pub sign: i8,
}

#[derive(Serialize)]
pub struct CertificatesBlock {
    pub validations: Vec<String>,
    pub directions: Vec<String>,
    pub seed: Option<u64>,
    pub attempt: u32,
}

pub fn to_report_file(report: &InvariantReport<Rat>, timing_ms: u128) -> ReportFile {
    ReportFile {
        invariant: report.invariant.clone(),
        value: match report.value {
            Value::Int(v) => ValueBlock { kind: "int", value: v },
            Value::Parity(p) => ValueBlock { kind: "parity", value: p as i64 },
        },
        witnesses: report
            .witnesses
            .iter()
            .map(|w| WitnessBlock {
                cells: w.cells.clone(),
                barycentric: w
                    .barycentric
                    .iter()
                    .map(|b| b.iter().map(|x| x.to_exact_string()).collect())
                    .collect(),
                aux: w.aux.iter().map(|x| x.to_exact_string()).collect(),
                sign: w.sign,
            })
            .collect(),
        certificates: CertificatesBlock {
            validations: report.certificates.validations.clone(),
            directions: report.certificates.directions.clone(),
            seed: report.certificates.seed,
            attempt: report.certificates.attempt,
        },
        tuples_examined: report.tuples_examined,
        timing_ms,
    }
}
