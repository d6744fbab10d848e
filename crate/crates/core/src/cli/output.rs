use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::CcType;
use crate::partition::Partition;
use crate::products::{Decomposition, StraightenResult};

/// One result of a command. Serialized through `serde_json::Value`, whose
/// maps keep their keys sorted.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub timing_ms: u64,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("records serialize");
        serde_json::to_string(&value).expect("values serialize")
    }
}

/// Result payload together with its text rendering.
pub struct Rendered {
    pub value: Value,
    pub text: String,
}

impl Rendered {
    pub fn new(value: Value, text: impl Into<String>) -> Self {
        Rendered {
            value,
            text: text.into(),
        }
    }
}

pub fn decomposition(d: &Decomposition) -> Rendered {
    Rendered::new(
        serde_json::to_value(d).expect("decompositions serialize"),
        d.to_string(),
    )
}

pub fn cc_type(cc: &CcType) -> Value {
    json!({ "components": cc.components, "constituents": cc.constituents })
}

pub fn straightened(r: &StraightenResult) -> Rendered {
    let value = match r {
        StraightenResult::Zero => json!({ "sign": 0, "partition": Value::Null }),
        StraightenResult::Signed { sign, partition } => {
            json!({ "sign": sign, "partition": partition })
        }
    };
    Rendered::new(value, r.to_string())
}

pub fn partitions(named: &[(&str, &Partition)]) -> Value {
    let map = named
        .iter()
        .map(|(k, p)| {
            (
                k.to_string(),
                serde_json::to_value(p).expect("partitions serialize"),
            )
        })
        .collect();
    Value::Object(map)
}

pub fn emit(
    out: &mut dyn Write,
    err: &mut dyn Write,
    json: bool,
    record: &OutputRecord,
    text: &str,
) -> io::Result<()> {
    if json {
        writeln!(out, "{}", record.to_json())
    } else {
        writeln!(out, "{text}")?;
        writeln!(err, "{}: {} ms", record.command, record.timing_ms)
    }
}
