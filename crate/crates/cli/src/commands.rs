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

//! One function per subcommand, each producing a [`Report`].

use std::fmt;
use std::path::Path;

use qovp_core::complement::{build_ones_complement, run_ones_complement, ComplementSpec};
use qovp_core::dsl::parse_circuit_bytes;
use qovp_core::grover::{
    closed_form_success_probability, recommended_iterations, run_sdp, success_probability,
    OracleStyle, WinnerSet,
};
use qovp_core::measure::{probabilities, sample};
use qovp_core::mgsa::{detect_period, run, MgsaState, StepKind};
use qovp_core::state::QubitState;
use qovp_core::swap_test::{run_ovp_gsa, swap_test_probability, OvpInstance};
use qovp_core::{BasisLabel, Complex64, MeasurementDistribution, StateVector};
use serde_json::{json, Map};

use crate::report::Report;
use crate::{RunConfig, Style, Variant};

/// Longest cycle `mgsa` looks for.
const MAX_PERIOD: usize = 256;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed circuit files, violated preconditions.
    Input(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<qovp_core::Error> for CliError {
    fn from(e: qovp_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn finish(
    experiment: &'static str,
    exact: MeasurementDistribution,
    details: Map<String, serde_json::Value>,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let samples = match cfg.shots {
        0 => None,
        shots => Some(sample(&exact, shots, cfg.seed)?),
    };
    Ok(Report {
        experiment,
        exact,
        samples,
        details,
        trace: None,
    })
}

pub fn run_file(path: &Path, keep: Option<&[usize]>, cfg: &RunConfig) -> Result<Report, CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let circuit =
        parse_circuit_bytes(&bytes).map_err(|e| input(format!("{}:{e}", path.display())))?;
    let mut dist = probabilities(&StateVector::simulate(&circuit)?);
    let mut details = Map::new();
    details.insert("file".into(), json!(path.display().to_string()));
    details.insert("gates".into(), json!(circuit.len()));
    details.insert("depth".into(), json!(circuit.depth()));
    if let Some(keep) = keep {
        dist = dist.marginalize(keep)?;
        details.insert("kept_qubits".into(), json!(keep));
    }
    finish("run", dist, details, cfg)
}

pub fn grover(
    winners: &[String],
    iterations: Option<usize>,
    style: Style,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let ws = WinnerSet::from_strs(winners)?;
    let n_states = 1usize << ws.num_qubits();
    let recommended = recommended_iterations(n_states, ws.len())?;
    let t = iterations.unwrap_or(recommended);
    let oracle_style = match style {
        Style::Direct => OracleStyle::DirectPhase,
        Style::Ancilla => OracleStyle::AncillaMcmt,
    };
    let dist = run_sdp(&ws, t, oracle_style)?;
    let mut details = Map::new();
    details.insert(
        "winners".into(),
        json!(ws.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
    );
    details.insert("iterations".into(), json!(t));
    details.insert("recommended_iterations".into(), json!(recommended));
    details.insert(
        "oracle".into(),
        json!(match style {
            Style::Direct => "direct",
            Style::Ancilla => "ancilla",
        }),
    );
    details.insert(
        "success_probability".into(),
        json!(success_probability(&dist, &ws)),
    );
    // the closed form only covers k <= N/2
    let closed = closed_form_success_probability(n_states, ws.len(), t).ok();
    details.insert("closed_form_success_probability".into(), json!(closed));
    finish("grover", dist, details, cfg)
}

pub fn mgsa(
    initial: &[f64],
    marked: &[usize],
    iters: usize,
    variant: Variant,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let norm = initial.iter().map(|a| a * a).sum::<f64>().sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(input("initial amplitudes must be finite and not all zero"));
    }
    let amps: Vec<f64> = initial.iter().map(|a| a / norm).collect();
    let start = MgsaState::new(amps, marked.iter().copied())?;
    let kind = match variant {
        Variant::Standard => StepKind::Standard,
        Variant::Ventura => StepKind::Ventura,
    };
    let trace = run(&start, kind, iters);
    let last = trace.last().expect("trace includes the initial state");
    let n = start.num_states().trailing_zeros() as usize;
    let dist = MeasurementDistribution::from_probabilities(n, &last.probabilities());

    let mut details = Map::new();
    details.insert(
        "variant".into(),
        json!(match variant {
            Variant::Standard => "standard",
            Variant::Ventura => "ventura",
        }),
    );
    details.insert("marked".into(), json!(start.marked()));
    details.insert("iterations".into(), json!(iters));
    details.insert(
        "period".into(),
        json!(detect_period(&start, kind, MAX_PERIOD)),
    );
    details.insert(
        "trace".into(),
        json!(trace
            .iter()
            .map(|s| s.amplitudes().to_vec())
            .collect::<Vec<_>>()),
    );
    let mut report = finish("mgsa", dist, details, cfg)?;
    report.trace = Some(
        trace
            .iter()
            .map(|s| (s.iteration(), s.amplitudes().to_vec()))
            .collect(),
    );
    Ok(report)
}

/// `0`, `1`, `+`, `-`, or two comma-separated real amplitudes.
pub fn parse_qubit(text: &str) -> Result<QubitState, CliError> {
    match text.trim() {
        "0" => Ok(QubitState::ZERO),
        "1" => Ok(QubitState::ONE),
        "+" => Ok(QubitState::PLUS),
        "-" => Ok(QubitState::MINUS),
        other => {
            let parts: Vec<&str> = other.split(',').map(str::trim).collect();
            let bad = || {
                input(format!(
                    "bad qubit state {text:?}: expected 0, 1, +, - or a,b"
                ))
            };
            if parts.len() != 2 {
                return Err(bad());
            }
            let a: f64 = parts[0].parse().map_err(|_| bad())?;
            let b: f64 = parts[1].parse().map_err(|_| bad())?;
            Ok(QubitState::normalized(
                Complex64::new(a, 0.0),
                Complex64::new(b, 0.0),
            )?)
        }
    }
}

pub fn swap_test(a: &str, b: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let (phi, psi) = (parse_qubit(a)?, parse_qubit(b)?);
    let p1 = swap_test_probability(&phi, &psi)?;
    let [a0, a1] = phi.amplitudes();
    let [b0, b1] = psi.amplitudes();
    let overlap = (a0.conj() * b0 + a1.conj() * b1).norm_sqr();
    let dist = MeasurementDistribution::from_probabilities(1, &[1.0 - p1, p1]);
    let mut details = Map::new();
    details.insert("probability_one".into(), json!(p1));
    details.insert("overlap".into(), json!(overlap));
    finish("swap-test", dist, details, cfg)
}

pub fn ovp_gsa(reference: &str, tests: &[String], cfg: &RunConfig) -> Result<Report, CliError> {
    let tests: Vec<QubitState> = if tests.is_empty() {
        vec![QubitState::ONE, QubitState::ZERO]
    } else {
        tests
            .iter()
            .map(|t| parse_qubit(t))
            .collect::<Result<_, _>>()?
    };
    if tests.len() != 2 {
        return Err(input(format!(
            "need exactly two --test states, got {}",
            tests.len()
        )));
    }
    let inst = OvpInstance {
        reference: parse_qubit(reference)?,
        tests,
    };
    let dist = run_ovp_gsa(&inst)?;
    let mut details = Map::new();
    details.insert("measured_qubits".into(), json!([0, 1]));
    finish("ovp-gsa", dist, details, cfg)
}

pub fn ones_complement(
    reference: &str,
    mixed: &[usize],
    copies: usize,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let label = BasisLabel::new(reference)?;
    let spec = ComplementSpec::new(label.clone(), mixed.iter().copied(), copies)?;
    let dist = run_ones_complement(&spec)?;
    let mut details = Map::new();
    details.insert("reference".into(), json!(label.to_string()));
    details.insert("copies".into(), json!(copies));
    details.insert("total_qubits".into(), json!(spec.total_qubits()));
    details.insert("depth".into(), json!(build_ones_complement(&spec)?.depth()));
    finish("ones-complement", dist, details, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_strings() {
        assert_eq!(parse_qubit("0").unwrap(), QubitState::ZERO);
        assert_eq!(parse_qubit("-").unwrap(), QubitState::MINUS);
        let s = parse_qubit("3,4").unwrap().amplitudes();
        assert!((s[0].re - 0.6).abs() < 1e-15 && (s[1].re - 0.8).abs() < 1e-15);
        assert!(parse_qubit("0,0").is_err());
        assert!(parse_qubit("up").is_err());
    }
}
