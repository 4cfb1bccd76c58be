//! Newline-delimited JSON reports. Rationals are strings (`"9/2"`), keys keep
//! insertion order.

use serde_json::{json, Map, Value as Json};

use crate::checks::{CheckReport, Value, Witness};
use crate::kernel::{Point, Rational};

fn rational(r: &Rational) -> Json {
    Json::String(r.to_string())
}

fn point(p: &Point) -> Json {
    Json::Array(p.coords().iter().map(rational).collect())
}

fn value(v: &Value) -> Json {
    match v {
        Value::Scalar(r) => rational(r),
        Value::Point(p) => point(p),
        Value::Points(ps) => Json::Array(ps.iter().map(point).collect()),
        Value::Flag(b) => Json::Bool(*b),
        Value::Count(c) => json!(c),
        Value::Text(s) => Json::String(s.clone()),
    }
}

fn named(entries: &[(String, Value)]) -> Json {
    Json::Object(entries.iter().map(|(k, v)| (k.clone(), value(v))).collect())
}

fn witness(w: &Witness) -> Json {
    match w {
        Witness::Map(f) => json!({
            "matrix": f.matrix().iter()
                .map(|row| row.iter().map(|x| Json::String(x.to_string())).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "translation": f.translation().coords().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        }),
        Witness::HalfSpace(h) => {
            json!({ "normal": point(h.normal()), "offset": rational(h.offset()) })
        }
        Witness::Point(p) => point(p),
        Witness::Report(r) => body(r, Map::new()),
    }
}

fn body(r: &CheckReport, mut obj: Map<String, Json>) -> Json {
    obj.insert("check".into(), Json::String(r.check.clone()));
    obj.insert("inputs".into(), named(&r.inputs));
    obj.insert("values".into(), named(&r.values));
    obj.insert(
        "bound".into(),
        r.bound.as_ref().map_or(Json::Null, rational),
    );
    obj.insert("status".into(), Json::String(r.status.as_str().into()));
    obj.insert(
        "reason".into(),
        r.reason.clone().map_or(Json::Null, Json::String),
    );
    obj.insert(
        "witness".into(),
        r.witness.as_ref().map_or(Json::Null, witness),
    );
    Json::Object(obj)
}

/// Report as a JSON object with fields `id, check, inputs, values, bound,
/// status, reason, witness`.
pub fn report_json(id: &str, r: &CheckReport) -> Json {
    let mut obj = Map::new();
    obj.insert("id".into(), Json::String(id.into()));
    body(r, obj)
}

/// One compact JSON line.
pub fn emit_report(id: &str, r: &CheckReport) -> String {
    report_json(id, r).to_string()
}

/// One line per report, stably sorted by id.
pub fn emit_reports(reports: &[(String, CheckReport)]) -> String {
    let mut sorted: Vec<&(String, CheckReport)> = reports.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    sorted
        .into_iter()
        .map(|(id, r)| emit_report(id, r) + "\n")
        .collect()
}
