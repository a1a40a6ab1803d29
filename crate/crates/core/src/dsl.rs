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

//! The `.qc` circuit text format.
//!
//! One statement per line, `#` starts a comment, mnemonics are
//! case-insensitive:
//!
//! ```text
//! qubits <n>           # header, first non-comment line
//! h <q...>             # one H per listed qubit
//! x <q...>
//! z <q>
//! cz <c> <t>
//! mcz <c...> <t>       # zero or more controls, then the target
//! swap <a> <b>
//! cswap <c> <a> <b>
//! ```
//!
//! LF and CRLF line endings are accepted; [`format_circuit`] emits LF.

use std::fmt;

use crate::gate::{Circuit, GateOp};
use crate::MAX_QUBITS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Syntax,
    UnknownGate,
    BadIndex,
    Arity,
    MissingHeader,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::UnknownGate => "unknown_gate",
            ParseErrorKind::BadIndex => "bad_index",
            ParseErrorKind::Arity => "arity",
            ParseErrorKind::MissingHeader => "missing_header",
        })
    }
}

/// Position (1-based line and column) and reason of the first error.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

/// A gate statement and the line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub line: usize,
    pub op: GateOp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslDocument {
    pub num_qubits: usize,
    pub statements: Vec<Statement>,
}

impl DslDocument {
    pub fn to_circuit(&self) -> Circuit {
        Circuit::from_ops(
            self.num_qubits,
            self.statements.iter().map(|s| s.op.clone()),
        )
        .expect("statements validated during parsing")
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits on whitespace, tracking 1-based character columns.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col + 1)),
            (true, Some((b, c))) => {
                tokens.push(Token {
                    text: &line[b..byte],
                    column: c,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token {
            text: &line[b..],
            column: c,
        });
    }
    tokens
}

fn error(
    line: usize,
    column: usize,
    kind: ParseErrorKind,
    message: impl Into<String>,
) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
        kind,
    }
}

fn integer(line: usize, tok: &Token<'_>) -> Result<usize, ParseError> {
    if tok.text.is_empty() || !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(error(
            line,
            tok.column,
            ParseErrorKind::Syntax,
            format!("expected a non-negative integer, found `{}`", tok.text),
        ));
    }
    tok.text.parse().map_err(|_| {
        error(
            line,
            tok.column,
            ParseErrorKind::BadIndex,
            format!("integer `{}` is too large", tok.text),
        )
    })
}

/// Parses operands as qubit indices, checking range and distinctness.
fn qubit_operands(
    line: usize,
    ops: &[Token<'_>],
    num_qubits: usize,
) -> Result<Vec<usize>, ParseError> {
    let mut out: Vec<usize> = Vec::with_capacity(ops.len());
    for tok in ops {
        let q = integer(line, tok)?;
        if q >= num_qubits {
            return Err(error(
                line,
                tok.column,
                ParseErrorKind::BadIndex,
                format!("qubit {q} out of range for {num_qubits} qubits"),
            ));
        }
        if out.contains(&q) {
            return Err(error(
                line,
                tok.column,
                ParseErrorKind::BadIndex,
                format!("qubit {q} used twice in one statement"),
            ));
        }
        out.push(q);
    }
    Ok(out)
}

enum Arity {
    Exactly(usize),
    AtLeast(usize),
}

fn check_arity(line: usize, head: &Token<'_>, got: usize, want: Arity) -> Result<(), ParseError> {
    let ok = match want {
        Arity::Exactly(n) => got == n,
        Arity::AtLeast(n) => got >= n,
    };
    if ok {
        return Ok(());
    }
    let expected = match want {
        Arity::Exactly(n) => format!("exactly {n}"),
        Arity::AtLeast(n) => format!("at least {n}"),
    };
    Err(error(
        line,
        head.column,
        ParseErrorKind::Arity,
        format!("`{}` takes {expected} operand(s), got {got}", head.text),
    ))
}

/// Parses source text into a document with line numbers.
pub fn parse_document(text: &str) -> Result<DslDocument, ParseError> {
    let mut num_qubits: Option<usize> = None;
    let mut statements = Vec::new();
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let code = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(code);
        let Some((head, operands)) = tokens.split_first() else {
            continue;
        };
        let mnemonic = head.text.to_ascii_lowercase();

        if mnemonic == "qubits" {
            if num_qubits.is_some() {
                return Err(error(
                    line,
                    head.column,
                    ParseErrorKind::Syntax,
                    "duplicate `qubits` header",
                ));
            }
            check_arity(line, head, operands.len(), Arity::Exactly(1))?;
            let n = integer(line, &operands[0])?;
            if n == 0 || n > MAX_QUBITS {
                return Err(error(
                    line,
                    operands[0].column,
                    ParseErrorKind::Syntax,
                    format!("qubit count must be between 1 and {MAX_QUBITS}, got {n}"),
                ));
            }
            num_qubits = Some(n);
            continue;
        }

        let known = matches!(
            mnemonic.as_str(),
            "h" | "x" | "z" | "cz" | "mcz" | "swap" | "cswap"
        );
        if !known {
            return Err(error(
                line,
                head.column,
                ParseErrorKind::UnknownGate,
                format!("unknown gate `{}`", head.text),
            ));
        }
        let Some(n) = num_qubits else {
            return Err(error(
                line,
                head.column,
                ParseErrorKind::MissingHeader,
                "expected `qubits <n>` before the first gate",
            ));
        };

        let arity = match mnemonic.as_str() {
            "h" | "x" | "mcz" => Arity::AtLeast(1),
            "z" => Arity::Exactly(1),
            "cz" | "swap" => Arity::Exactly(2),
            _ => Arity::Exactly(3),
        };
        check_arity(line, head, operands.len(), arity)?;
        let qs = qubit_operands(line, operands, n)?;
        let ops: Vec<GateOp> = match mnemonic.as_str() {
            "h" => qs.into_iter().map(GateOp::H).collect(),
            "x" => qs.into_iter().map(GateOp::X).collect(),
            "z" => vec![GateOp::Z(qs[0])],
            "cz" => vec![GateOp::cz(qs[0], qs[1])],
            "mcz" => {
                let (target, controls) = qs.split_last().expect("arity checked");
                vec![GateOp::mcz(controls.iter().copied(), *target)]
            }
            "swap" => vec![GateOp::Swap(qs[0], qs[1])],
            _ => vec![GateOp::cswap(qs[0], qs[1], qs[2])],
        };
        statements.extend(ops.into_iter().map(|op| Statement { line, op }));
    }

    match num_qubits {
        Some(num_qubits) => Ok(DslDocument {
            num_qubits,
            statements,
        }),
        None => Err(error(
            last_line,
            1,
            ParseErrorKind::MissingHeader,
            "missing `qubits <n>` header",
        )),
    }
}

pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    parse_document(text).map(|d| d.to_circuit())
}

/// Like [`parse_circuit`] but accepts raw bytes; invalid UTF-8 is a syntax error.
pub fn parse_circuit_bytes(bytes: &[u8]) -> Result<Circuit, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_circuit(text),
        Err(e) => {
            let valid = &bytes[..e.valid_up_to()];
            let line = valid.iter().filter(|&&b| b == b'\n').count() + 1;
            let line_start = valid.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
            let column = String::from_utf8_lossy(&valid[line_start..])
                .chars()
                .count()
                + 1;
            Err(error(line, column, ParseErrorKind::Syntax, "invalid UTF-8"))
        }
    }
}

/// Canonical text: header, then one lowercase statement per line.
pub fn format_circuit(c: &Circuit) -> String {
    let mut out = format!("qubits {}\n", c.num_qubits());
    for op in c.ops() {
        let line = match op {
            GateOp::H(q) => format!("h {q}"),
            GateOp::X(q) => format!("x {q}"),
            GateOp::Z(q) => format!("z {q}"),
            GateOp::Mcz { controls, target } if controls.len() == 1 => {
                format!("cz {} {target}", controls[0])
            }
            GateOp::Mcz { controls, target } => {
                let mut s = String::from("mcz");
                for q in controls.iter().chain(std::iter::once(target)) {
                    s.push(' ');
                    s.push_str(&q.to_string());
                }
                s
            }
            GateOp::Swap(a, b) => format!("swap {a} {b}"),
            GateOp::Cswap { control, a, b } => format!("cswap {control} {a} {b}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
