//! Report objects returned by every checker.

use std::time::Instant;

use serde::Serialize;

use crate::hypergeom::params::ParamsJson;
use crate::hypergeom::HGParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreesChecked {
    pub lo: i64,
    pub hi: i64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    pub index: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other_index: Option<i64>,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub params: ParamsJson,
    pub pass: bool,
    pub conjectural: bool,
    pub modulus: u64,
    pub degrees_checked: DegreesChecked,
    pub first_failure: Option<FirstFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residues: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub(crate) fn new(
        check: &str,
        params: &HGParams,
        modulus: u64,
        degrees: DegreesChecked,
        first_failure: Option<FirstFailure>,
        started: Instant,
    ) -> Self {
        Self {
            check: check.to_string(),
            params: params.to_json(),
            pass: first_failure.is_none(),
            conjectural: false,
            modulus,
            degrees_checked: degrees,
            first_failure,
            residues: None,
            note: None,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// JSON with `elapsed_ms` zeroed, for byte-level comparisons.
    pub fn payload(&self) -> String {
        let mut v = self.to_json();
        v["elapsed_ms"] = serde_json::json!(0);
        v.to_string()
    }
}
