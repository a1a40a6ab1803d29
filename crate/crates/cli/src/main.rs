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

//! `qovp`: run circuit files and the bundled search experiments.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::CliError;
use crate::report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "qovp",
    version,
    about = "Statevector simulation of Grover-style search circuits"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct RunConfig {
    /// Number of sampled shots; 0 prints exact probabilities only.
    #[arg(long, global = true, default_value_t = 4096)]
    pub shots: u64,
    /// Seed for the shot sampler.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Style {
    /// Phase flip applied directly to the data register.
    Direct,
    /// Multi-controlled Z onto an ancilla prepared in |->.
    Ancilla,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Standard,
    Ventura,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simulate a circuit file from |0...0>.
    Run {
        file: PathBuf,
        /// Report only these qubits, e.g. `0,1,2`.
        #[arg(long, value_delimiter = ',')]
        keep: Option<Vec<usize>>,
    },
    /// Grover search for one or more winner bitstrings.
    Grover {
        #[arg(long, value_delimiter = ',', required = true)]
        winners: Vec<String>,
        /// Defaults to floor(pi/4 sqrt(N/k)).
        #[arg(long)]
        iterations: Option<usize>,
        #[arg(long, value_enum, default_value_t = Style::Ancilla)]
        style: Style,
    },
    /// Amplitude recurrence from an arbitrary real initial vector.
    Mgsa {
        /// Amplitudes, rescaled to unit norm.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        initial: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        marked: Vec<usize>,
        #[arg(long)]
        iters: usize,
        #[arg(long, value_enum, default_value_t = Variant::Standard)]
        variant: Variant,
    },
    /// SWAP test between two single-qubit states.
    SwapTest {
        /// `0`, `1`, `+`, `-` or `re,re`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Orthogonal-vector search over SWAP tests against a reference.
    OvpGsa {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        reference: String,
        /// Give exactly two; defaults to `1` and `0`.
        #[arg(long = "test", allow_hyphen_values = true)]
        tests: Vec<String>,
    },
    /// Constant-depth bitwise NOT of a reference string.
    OnesComplement {
        #[arg(long = "ref")]
        reference: String,
        /// Reference positions put into equal superposition.
        #[arg(long, value_delimiter = ',')]
        mixed: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    let cfg = cli.run;
    let report = match cli.command {
        Command::Run { file, keep } => commands::run_file(&file, keep.as_deref(), &cfg)?,
        Command::Grover {
            winners,
            iterations,
            style,
        } => commands::grover(&winners, iterations, style, &cfg)?,
        Command::Mgsa {
            initial,
            marked,
            iters,
            variant,
        } => commands::mgsa(&initial, &marked, iters, variant, &cfg)?,
        Command::SwapTest { a, b } => commands::swap_test(&a, &b, &cfg)?,
        Command::OvpGsa { reference, tests } => commands::ovp_gsa(&reference, &tests, &cfg)?,
        Command::OnesComplement {
            reference,
            mixed,
            copies,
        } => commands::ones_complement(&reference, &mixed, copies, &cfg)?,
    };
    Ok(report.render(cfg.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = dispatch(cli).and_then(|text| {
        std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}")))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
