// Copyright 2026 The qovp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Rendering of experiment results as JSON, CSV or an ASCII histogram.

use std::fmt::Write as _;

use std::collections::BTreeMap;

use clap::ValueEnum;
use qovp_core::{MeasurementDistribution, SampleHistogram};
use serde::Serialize;
use serde_json::value::RawValue;
use serde_json::{Map, Value};

/// Entries below this are left out of every report.
pub const OMIT_BELOW: f64 = 1e-15;

/// Width of a bar standing for probability 1.
pub const BAR_WIDTH: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

/// Result of one experiment, ready to print.
#[derive(Debug)]
pub struct Report {
    pub experiment: &'static str,
    pub exact: MeasurementDistribution,
    pub samples: Option<SampleHistogram>,
    /// Extra key/value pairs, printed in insertion order.
    pub details: Map<String, Value>,
    /// Amplitude rows `(t, amplitudes)`; replaces the CSV table when present.
    pub trace: Option<Vec<(usize, Vec<f64>)>>,
}

#[derive(Serialize)]
struct JsonEntry {
    state: String,
    probability: Box<RawValue>,
}

#[derive(Serialize)]
struct JsonSamples<'a> {
    shots: u64,
    seed: u64,
    counts: BTreeMap<&'a str, u64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    experiment: &'a str,
    num_qubits: usize,
    exact: Vec<JsonEntry>,
    samples: Option<JsonSamples<'a>>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    details: &'a Map<String, Value>,
}

fn fixed(p: f64) -> String {
    // -0.000000000 reads badly and is not what anyone means
    let s = format!("{p:.9}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn bar(fraction: f64) -> String {
    "#".repeat((fraction.clamp(0.0, 1.0) * BAR_WIDTH as f64).round() as usize)
}

impl Report {
    /// `(state, probability)` in descending order of the printed value,
    /// ties broken by label.
    pub fn rows(&self) -> Vec<(String, f64)> {
        let mut rows: Vec<(String, f64)> = self
            .exact
            .entries()
            .iter()
            .filter(|(_, p)| **p >= OMIT_BELOW)
            .map(|(l, p)| (l.to_string(), *p))
            .collect();
        let key = |p: f64| (p * 1e9).round() as i64;
        rows.sort_by(|a, b| key(b.1).cmp(&key(a.1)).then_with(|| a.0.cmp(&b.0)));
        rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Ascii => self.to_ascii(),
        }
    }

    pub fn to_json(&self) -> String {
        let exact = self
            .rows()
            .into_iter()
            .map(|(state, p)| JsonEntry {
                state,
                probability: RawValue::from_string(fixed(p)).expect("decimal literal"),
            })
            .collect();
        let samples = self.samples.as_ref().map(|h| JsonSamples {
            shots: h.shots,
            seed: h.seed,
            counts: h.counts.iter().map(|(l, c)| (l.as_str(), *c)).collect(),
        });
        let report = JsonReport {
            experiment: self.experiment,
            num_qubits: self.exact.num_qubits(),
            exact,
            samples,
            details: &self.details,
        };
        let mut out = serde_json::to_string_pretty(&report).expect("serializable");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(trace) = &self.trace {
            let width = trace.first().map_or(0, |(_, a)| a.len());
            out.push('t');
            for i in 0..width {
                write!(out, ",a{i}").unwrap();
            }
            out.push('\n');
            for (t, amps) in trace {
                write!(out, "{t}").unwrap();
                for a in amps {
                    write!(out, ",{}", fixed(*a)).unwrap();
                }
                out.push('\n');
            }
            return out;
        }
        match &self.samples {
            Some(h) => {
                out.push_str("state,probability,count\n");
                let rows = self.rows();
                for (state, p) in &rows {
                    let count = h
                        .counts
                        .iter()
                        .find(|(l, _)| l.as_str() == state)
                        .map_or(0, |(_, c)| *c);
                    writeln!(out, "{state},{},{count}", fixed(*p)).unwrap();
                }
                for (l, c) in &h.counts {
                    if !rows.iter().any(|(s, _)| s == l.as_str()) {
                        writeln!(out, "{l},{},{c}", fixed(0.0)).unwrap();
                    }
                }
            }
            None => {
                out.push_str("state,probability\n");
                for (state, p) in self.rows() {
                    writeln!(out, "{state},{}", fixed(p)).unwrap();
                }
            }
        }
        out
    }

    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} ({} qubits)",
            self.experiment,
            self.exact.num_qubits()
        )
        .unwrap();
        for (k, v) in &self.details {
            if k == "trace" {
                continue;
            }
            match v {
                Value::String(s) => writeln!(out, "  {k}: {s}").unwrap(),
                other => writeln!(out, "  {k}: {other}").unwrap(),
            }
        }
        if let Some(trace) = &self.trace {
            out.push_str("\ntrace\n");
            for (t, amps) in trace {
                let cells: Vec<String> =
                    amps.iter().map(|a| format!("{:>14}", fixed(*a))).collect();
                writeln!(out, "  t={t:<4}{}", cells.join("")).unwrap();
            }
        }
        let rows = self.rows();
        let label_width = self.exact.num_qubits().max(5);
        out.push_str("\nexact\n");
        for (state, p) in &rows {
            writeln!(out, "  {state:<label_width$}  {}  {}", fixed(*p), bar(*p)).unwrap();
        }
        if let Some(h) = &self.samples {
            writeln!(out, "\nsamples ({} shots, seed {})", h.shots, h.seed).unwrap();
            let mut counts: Vec<_> = h.counts.iter().collect();
            counts.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
            for (l, c) in counts {
                let frac = *c as f64 / h.shots as f64;
                writeln!(
                    out,
                    "  {:<label_width$}  {c:>11}  {}",
                    l.as_str(),
                    bar(frac)
                )
                .unwrap();
            }
        }
        out
    }
}
