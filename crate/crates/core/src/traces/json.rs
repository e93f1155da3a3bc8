//! Trace JSON:
//! `{"alphabet":[..], "states":[{"time":0,"here":[..],"there":[..]}, ..]}`.
//! `"here"` is omitted for total traces and defaults to `"there"` on input.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Alphabet, TimedTrace, TraceError};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceDoc {
    alphabet: Vec<String>,
    states: Vec<StateDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    time: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    here: Option<Vec<String>>,
    there: Vec<String>,
}

fn document(trace: &TimedTrace) -> TraceDoc {
    let a = trace.alphabet();
    let names = |m: u64| {
        a.names_of(m)
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let total = trace.is_total();
    TraceDoc {
        alphabet: a.names().to_vec(),
        states: (0..trace.len())
            .map(|i| StateDoc {
                time: trace.time(i),
                here: (!total).then(|| names(trace.here()[i])),
                there: names(trace.there()[i]),
            })
            .collect(),
    }
}

pub fn trace_to_value(trace: &TimedTrace) -> serde_json::Value {
    serde_json::to_value(document(trace)).expect("trace documents always serialize")
}

/// One-line JSON rendering, fields in schema order.
pub fn trace_to_json(trace: &TimedTrace) -> String {
    serde_json::to_string(&document(trace)).expect("trace documents always serialize")
}

pub fn trace_from_json(text: &str) -> Result<TimedTrace, TraceError> {
    let doc: TraceDoc = serde_json::from_str(text).map_err(|e| TraceError::Json(e.to_string()))?;
    let alphabet = Arc::new(Alphabet::new(doc.alphabet)?);
    let mut here = Vec::new();
    let mut there = Vec::new();
    let mut times = Vec::new();
    for s in doc.states {
        let t = alphabet.mask_of(&s.there)?;
        let h = match s.here {
            Some(h) => alphabet.mask_of(&h)?,
            None => t,
        };
        here.push(h);
        there.push(t);
        times.push(s.time);
    }
    TimedTrace::new(alphabet, here, there, times)
}
