//! `hamming`: encode, corrupt, decode and inspect interleaved Hamming codes.
//!
//! Exit status: 0 success, 1 I/O failure, 2 usage or format error,
//! 3 decoded with uncorrectable blocks.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hamming::stream::{corrupt_stream, flip_stream_bit};
use hamming::{
    analyze, decode_stream, derive_params, encode_stream, render_trace, BitBlock, ChannelConfig,
    CodeParams, DecodeStatus, Guard,
};

#[derive(Parser)]
#[command(
    name = "hamming",
    version,
    about = "Interleaved Hamming single-error-correcting codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frame a byte payload into a coded stream.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Recover the payload from a coded stream.
    Decode {
        /// Print per-block statuses to stderr.
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Flip bits inside the codewords of a coded stream.
    #[command(group(ArgGroup::new("noise").required(true).args(["flip", "bsc"])))]
    Corrupt {
        /// Flip 1-based bit POS of 0-based block BLOCK; repeatable.
        #[arg(long, value_name = "BLOCK:POS", value_parser = parse_flip)]
        flip: Vec<(usize, usize)>,
        /// Binary symmetric channel with crossover probability P.
        #[arg(long, value_name = "P")]
        bsc: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Print rate, distance, weight distribution, coverage and both H matrices.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        /// Lift the brute-force enumeration limits.
        #[arg(long)]
        force: bool,
    },
    /// Show how the checking number of a received word is assembled.
    Trace {
        #[command(flatten)]
        code: CodeArgs,
        /// Received word as 0/1 characters, position 1 first.
        #[arg(long, value_name = "BITS")]
        word: String,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Information bits per block.
    #[arg(long)]
    m: usize,
    /// Check bits per block; defaults to the smallest that fits.
    #[arg(long, requires = "m")]
    k: Option<usize>,
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, Failure> {
        let params = match self.k {
            Some(k) => CodeParams::new(self.m, k),
            None => derive_params(self.m),
        };
        params.map_err(Failure::from)
    }
}

#[derive(Args)]
struct IoArgs {
    /// Input file, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Output file, `-` for stdout.
    #[arg(short, long, default_value = "-")]
    output: String,
}

impl IoArgs {
    fn read(&self) -> Result<Vec<u8>, Failure> {
        let result = if self.input == "-" {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map(|_| buf)
        } else {
            fs::read(&self.input)
        };
        result.map_err(|e| Failure::Io(format!("reading {}: {e}", self.input)))
    }

    fn write(&self, bytes: &[u8]) -> Result<(), Failure> {
        let result = if self.output == "-" {
            let mut out = io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush())
        } else {
            fs::write(&self.output, bytes)
        };
        result.map_err(|e| Failure::Io(format!("writing {}: {e}", self.output)))
    }
}

enum Failure {
    Io(String),
    Usage(String),
}

impl From<hamming::Error> for Failure {
    fn from(e: hamming::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_flip(s: &str) -> Result<(usize, usize), String> {
    let (block, pos) = s
        .split_once(':')
        .ok_or_else(|| format!("expected BLOCK:POS, got {s:?}"))?;
    let block = block.parse().map_err(|e| format!("block {block:?}: {e}"))?;
    let pos = pos.parse().map_err(|e| format!("position {pos:?}: {e}"))?;
    Ok((block, pos))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Encode { code, io } => {
            let params = code.params()?;
            let payload = io.read()?;
            io.write(&encode_stream(&payload, &params)?)?;
        }
        Command::Decode { report, io } => {
            let coded = io.read()?;
            let (payload, outcome) = decode_stream(&coded)?;
            io.write(&payload)?;
            if report {
                let mut err = io::stderr().lock();
                for (b, block) in outcome.blocks.iter().enumerate() {
                    let line = match block.status {
                        DecodeStatus::Clean => format!("block {b}: clean"),
                        DecodeStatus::Corrected => {
                            format!("block {b}: corrected position {}", block.checking_number)
                        }
                        DecodeStatus::Uncorrectable => format!(
                            "block {b}: uncorrectable (checking number {})",
                            block.checking_number
                        ),
                    };
                    let _ = writeln!(err, "{line}");
                }
                let _ = writeln!(
                    err,
                    "{} blocks, {} corrected, {} uncorrectable",
                    outcome.blocks.len(),
                    outcome.corrected(),
                    outcome.uncorrectable()
                );
            } else if outcome.is_degraded() {
                eprintln!("warning: {} uncorrectable blocks", outcome.uncorrectable());
            }
            if outcome.is_degraded() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Corrupt {
            flip,
            bsc,
            seed,
            io,
        } => {
            let mut coded = io.read()?;
            match bsc {
                Some(p) => {
                    corrupt_stream(&mut coded, &ChannelConfig::bsc(p, seed)?)?;
                }
                None => {
                    for (block, pos) in flip {
                        flip_stream_bit(&mut coded, block, pos)?;
                    }
                }
            }
            io.write(&coded)?;
        }
        Command::Analyze { code, force } => {
            let params = code.params()?;
            let guard = if force {
                Guard::Forced
            } else {
                Guard::Enforced
            };
            let report = analyze(&params, guard).map_err(|e| match e {
                hamming::Error::ResourceLimit { .. } => {
                    Failure::Usage(format!("{e}; pass --force to run anyway"))
                }
                e => e.into(),
            })?;
            print!("{}", report.to_kv_text());
        }
        Command::Trace { code, word } => {
            let params = code.params()?;
            let received: BitBlock = word.parse()?;
            print!("{}", render_trace(&received, &params)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
