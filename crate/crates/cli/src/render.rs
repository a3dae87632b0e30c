//! Report envelopes and JSON renderings of library results.

use std::time::Duration;

use serde_json::{json, Map, Value};
use tropmat_core::colorful::GreedyTrace;
use tropmat_core::formats::{element_to_json, set_to_json};
use tropmat_core::matroid::GroundSet;
use tropmat_core::report::{ConditionReport, Violation};
use tropmat_core::SectorSet;

use crate::SCHEMA_VERSION;

/// The outcome of a subcommand. The exit code depends on the status alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Found,
    Feasible,
    Inside,
    Violated,
    Infeasible,
    NotFound,
    Outside,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Found => "found",
            Self::Feasible => "feasible",
            Self::Inside => "inside",
            Self::Violated => "violated",
            Self::Infeasible => "infeasible",
            Self::NotFound => "not-found",
            Self::Outside => "outside",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Self::Ok | Self::Found | Self::Feasible | Self::Inside => 0,
            Self::Violated | Self::Infeasible | Self::NotFound | Self::Outside => 1,
        }
    }
}

pub enum Output {
    /// A verdict with its witness or certificate.
    Report { status: Status, payload: Value },
    /// A JSON instance that other subcommands accept as input.
    Document(Value),
}

impl Output {
    pub fn report(status: Status, payload: Value) -> Self {
        Self::Report { status, payload }
    }

    /// The document to print, the exit code and a one-line summary.
    pub fn finish(self, command: &str, elapsed: Duration) -> (Value, u8, String) {
        match self {
            Self::Report { status, payload } => {
                let document = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command,
                    "status": status.as_str(),
                    "payload": payload,
                    "elapsed_ms": elapsed.as_secs_f64() * 1000.0,
                });
                (document, status.exit_code(), status.as_str().to_owned())
            }
            Self::Document(value) => {
                let mut map = Map::new();
                map.insert("schema_version".into(), SCHEMA_VERSION.into());
                match value {
                    Value::Object(fields) => map.extend(fields),
                    other => {
                        map.insert("value".into(), other);
                    }
                }
                (Value::Object(map), 0, "ok".to_owned())
            }
        }
    }
}

pub fn sectors_to_json(sectors: SectorSet) -> Value {
    Value::Array(sectors.iter().map(Value::from).collect())
}

pub fn violation_to_json(violation: &Violation, ground: &GroundSet) -> Value {
    let mut out = match *violation {
        Violation::BasisCocircuit { basis, cocircuit, sector } => json!({
            "kind": "basis_cocircuit",
            "basis": set_to_json(basis, ground),
            "cocircuit": set_to_json(cocircuit, ground),
            "sector": sector,
        }),
        Violation::CocircuitPair { first, second, sector } => json!({
            "kind": "cocircuit_pair",
            "first": set_to_json(first, ground),
            "second": set_to_json(second, ground),
            "sector": sector,
        }),
        Violation::Corank2 { set } => json!({ "kind": "corank2", "set": set_to_json(set, ground) }),
    };
    if violation.sector().is_none() {
        out.as_object_mut().expect("object literal").remove("sector");
    }
    out["offending_set"] = set_to_json(violation.offending_set(), ground);
    out
}

/// A condition report as `(status, payload)`.
pub fn condition(report: &ConditionReport, ground: &GroundSet) -> Output {
    match report.violation() {
        None => Output::report(Status::Ok, json!({})),
        Some(v) => Output::report(Status::Violated, json!({ "violation": violation_to_json(v, ground) })),
    }
}

pub fn trace_to_json(trace: &GreedyTrace, ground: &GroundSet) -> Value {
    let steps = trace
        .steps
        .iter()
        .map(|step| {
            json!({
                "basis": set_to_json(step.basis, ground),
                "covered": sectors_to_json(step.covered),
                "removed": element_to_json(step.removed, ground),
                "partner": step.partner.map(|p| element_to_json(p, ground)),
                "cocircuit": set_to_json(step.cocircuit, ground),
                "entering": element_to_json(step.entering, ground),
                "target_sector": step.target_sector,
            })
        })
        .collect();
    Value::Array(steps)
}
