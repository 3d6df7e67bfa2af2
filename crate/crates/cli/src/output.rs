//! Output formatting: round-trippable CSV numbers and report envelopes.

use serde::Serialize;

/// 17 significant digits: enough to reparse the exact double.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// One CSV row from already-formatted fields.
pub fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}

/// JSON envelope attaching the configuration that produced a report.
#[derive(Serialize)]
pub struct Envelope<C: Serialize, R: Serialize> {
    pub config: C,
    pub report: R,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
