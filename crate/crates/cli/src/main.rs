mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Systematic product codes from affine codes.
///
/// Exit status: 0 on success, 1 when decoding fails or a check does not
/// hold, 2 on bad usage or unreadable input.
#[derive(Debug, Parser)]
#[command(name = "affprod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CodeArg {
    /// Product code spec (JSON).
    #[arg(long, value_name = "PATH")]
    code: PathBuf,
}

#[derive(Debug, Args)]
struct DecoderArgs {
    /// Treat all-zero rows (fades) as erasures.
    #[arg(long)]
    mark_fades: bool,
    /// Bounded-distance radius for background noise; 0 turns it off.
    #[arg(long, default_value_t = 0)]
    bg_radius: usize,
    /// Bounded-distance passes at most.
    #[arg(long, default_value_t = 10)]
    max_iters: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a product code and describe it.
    Construct {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        json: bool,
    },
    /// Encode an l x k information matrix.
    Encode {
        #[command(flatten)]
        code: CodeArg,
        /// Information matrix text; `-` for stdin.
        #[arg(long = "in", value_name = "PATH", default_value = "-")]
        input: PathBuf,
    },
    /// Decode a received matrix (`e` marks an erasure).
    Decode {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long = "in", value_name = "PATH", default_value = "-")]
        input: PathBuf,
        #[command(flatten)]
        decoder: DecoderArgs,
    },
    /// Monte-Carlo run over the power-line channel.
    Simulate {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, default_value_t = 0)]
        e_nbd: usize,
        #[arg(long, default_value_t = 0)]
        e_imp: usize,
        #[arg(long, default_value_t = 0)]
        e_fade: usize,
        #[arg(long, default_value_t = 0)]
        e_bg: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        decoder: DecoderArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check encoding-order independence, the row/column property, weight
    /// bounds, distance and systematicity.
    Verify {
        #[command(flatten)]
        code: CodeArg,
        /// Random information matrices when the code is too large to walk.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List codewords, optionally filtered by row and column weight.
    Enumerate {
        #[command(flatten)]
        code: CodeArg,
        /// e.g. `row-weight=2,col-weight=2`.
        #[arg(long)]
        filter: Option<String>,
        /// Print only the number of matches.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dimension comparison table.
    Table {
        /// Range of r, e.g. `3..7` (inclusive).
        #[arg(long, value_name = "RANGE")]
        gabidulin: String,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of an irregular product.
    IrregularDim {
        /// Irregular spec (JSON).
        #[arg(long, value_name = "PATH")]
        code: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Encode information symbols with an irregular product.
    IrregularEncode {
        #[arg(long, value_name = "PATH")]
        code: PathBuf,
        /// Information symbols, e.g. `0110` or `0 2 1`.
        #[arg(long)]
        info: String,
    },
    /// Check a matrix (or, with `--all`, every codeword) against an
    /// irregular product.
    IrregularVerify {
        #[arg(long, value_name = "PATH")]
        code: PathBuf,
        #[arg(long = "in", value_name = "PATH", conflicts_with = "all")]
        input: Option<PathBuf>,
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // a reader that stops early (`| head`) is not an error
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
