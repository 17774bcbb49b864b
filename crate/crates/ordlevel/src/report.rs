//! Machine-readable run reports and certificate JSON.

use std::collections::BTreeMap;

use ordlevel_core::alcoved::BoundedLevel;
use ordlevel_core::levelness::{LevelnessCertificate, Witness};
use ordlevel_core::poset::BoundedPoset;
use ordlevel_core::ConePoint;
use serde::Serialize;
use serde_json::{json, Map, Value};

/// One JSON document per run. Only `timing` varies between identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub budgets: BTreeMap<&'static str, u64>,
    pub result: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Value>,
    pub timing: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            version: env!("CARGO_PKG_VERSION"),
            input_sha256: None,
            budgets: BTreeMap::new(),
            result: Value::Null,
            certificates: Vec::new(),
            timing: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Drops the run-dependent `timing` member so reports compare exactly.
pub fn without_timing(mut report: Value) -> Value {
    if let Value::Object(map) = &mut report {
        map.remove("timing");
    }
    report
}

pub fn point_json(bounded: &BoundedPoset, p: &ConePoint) -> Value {
    let coords: Map<String, Value> = p
        .coords
        .iter()
        .enumerate()
        .map(|(i, &v)| (bounded.base().name(i).to_string(), json!(v)))
        .collect();
    json!({ "coords": coords, "height": p.height })
}

fn pair_names(bounded: &BoundedPoset, pairs: &[(usize, usize)], nodes: bool) -> Value {
    let name = |x: usize| {
        if nodes {
            bounded.node_name(x).to_string()
        } else {
            bounded.base().name(x).to_string()
        }
    };
    Value::Array(pairs.iter().map(|&(a, b)| json!([name(a), name(b)])).collect())
}

/// `{"level", "method", "r", "r_max", "prime_edges", "negative_cycle",
/// "witness_point", …}` with inapplicable fields left out.
pub fn certificate_json(bounded: &BoundedPoset, cert: &LevelnessCertificate) -> Value {
    let mut out = Map::new();
    out.insert("level".into(), json!(cert.verdict.is_level()));
    out.insert("method".into(), json!(cert.method.name()));
    out.insert("r".into(), json!(cert.r));
    if let Some(r_max) = cert.r_max {
        out.insert("r_max".into(), json!(r_max));
    }
    match &cert.witness {
        None => {}
        Some(Witness::Subsets { prime_edges, cycle, point }) => {
            out.insert("prime_edges".into(), pair_names(bounded, prime_edges, true));
            let mut names: Vec<&str> = cycle.nodes.iter().map(|&n| bounded.node_name(n)).collect();
            names.push(bounded.node_name(cycle.nodes[0]));
            out.insert("negative_cycle".into(), json!({ "cycle": names, "weight": cycle.total_weight }));
            out.insert("witness_point".into(), point_json(bounded, point));
        }
        Some(Witness::ConditionN { sequence, point }) => {
            out.insert("sequence".into(), pair_names(bounded, &sequence.pairs, false));
            out.insert("witness_point".into(), point_json(bounded, point));
        }
        Some(Witness::BruteForce { point, all_at_height }) => {
            out.insert("witness_point".into(), point_json(bounded, point));
            out.insert(
                "failing_points".into(),
                Value::Array(all_at_height.iter().map(|p| point_json(bounded, p)).collect()),
            );
        }
    }
    Value::Object(out)
}

pub fn bounded_level_json(v: &BoundedLevel) -> Value {
    match v {
        BoundedLevel::LevelUpTo(k) => json!({ "verdict": format!("LEVEL_UP_TO({k})"), "level": true, "k_max": k }),
        BoundedLevel::NotLevel { k, witnesses } => json!({
            "verdict": "NOT_LEVEL",
            "level": false,
            "k": k,
            "witness": witnesses[0],
            "failing_points": witnesses,
        }),
    }
}
