//! Structured results of verification checks, with JSON and CSV output.

use std::time::SystemTime;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of a single verification check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// The record produced by one verification check.
///
/// Everything except `timestamp` is a pure function of the check's inputs,
/// so two runs with the same configuration produce byte-identical reports
/// once the timestamp field is masked.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Stable identifier, e.g. `"sandwich"` or `"lemma22_eq23_alpha=0.5"`.
    pub check_id: String,
    /// The inequality or identity under test, written as a formula.
    pub anchor: String,
    /// Exponents, grid sizes, seeds, and other inputs of the check.
    pub parameters: Value,
    /// Empirical lower constant `c`, when the check estimates one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_lower: Option<f64>,
    /// Empirical upper constant `C`, when the check estimates one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_upper: Option<f64>,
    /// Quantiles of the pointwise or per-function ratio distribution.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_quantiles: Option<Value>,
    /// Relative change of the headline constant under grid refinement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refinement_drift: Option<f64>,
    /// Free-form numeric evidence specific to the check.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub verdict: Verdict,
    pub runtime_ms: u64,
    /// Wall-clock time of the run. The only nondeterministic field.
    pub timestamp: String,
}

impl VerificationReport {
    pub fn new(check_id: &str, anchor: &str) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            anchor: anchor.to_string(),
            parameters: Value::Null,
            c_lower: None,
            c_upper: None,
            ratio_quantiles: None,
            refinement_drift: None,
            details: Value::Null,
            verdict: Verdict::Fail,
            runtime_ms: 0,
            timestamp: now_rfc3339(),
        }
    }
}

fn now_rfc3339() -> String {
    let secs = SystemTime::now()
        .duration_since(SystemTime::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    // Minimal UTC formatting; avoids pulling in a date-time dependency for
    // a single informational field.
    let days = secs / 86_400;
    let tod = secs % 86_400;
    let (y, m, d) = civil_from_days(days as i64);
    format!(
        "{y:04}-{m:02}-{d:02}T{:02}:{:02}:{:02}Z",
        tod / 3600,
        (tod % 3600) / 60,
        tod % 60
    )
}

/// Days since 1970-01-01 to (year, month, day), Gregorian calendar.
fn civil_from_days(z: i64) -> (i64, u32, u32) {
    let z = z + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    (if m <= 2 { y + 1 } else { y }, m, d)
}

/// Serialize reports as a pretty-printed JSON array.
pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("report serialization cannot fail")
}

/// Serialize reports as CSV with a fixed header. Nested fields are omitted;
/// the CSV is a summary, the JSON form is the full record.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "check_id,verdict,c_lower,c_upper,refinement_drift,runtime_ms,timestamp\n",
    );
    for r in reports {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.12e}")).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&r.check_id),
            if r.verdict.is_pass() { "pass" } else { "fail" },
            opt(r.c_lower),
            opt(r.c_upper),
            opt(r.refinement_drift),
            r.runtime_ms,
            r.timestamp
        ));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Render a report with the volatile fields blanked, for comparing two runs
/// of the same configuration.
pub fn deterministic_view(reports: &[VerificationReport]) -> String {
    let mut masked = reports.to_vec();
    for r in &mut masked {
        r.timestamp.clear();
        r.runtime_ms = 0;
    }
    to_json(&masked)
}
