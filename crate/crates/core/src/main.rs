use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use fracfreq::response::{sweep, write_points, FrequencyGrid, OutputFormat};
use fracfreq::tf::parse_tf;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EVAL: u8 = 3;

/// Sweep a fractional-order transfer function over a logarithmic frequency
/// grid and write Bode data.
#[derive(Debug, Parser)]
#[command(name = "fracfreq", version)]
struct Args {
    /// Transfer function, e.g. "10000/s^0.5" or "(3*s^0.5+2)/(s^1.2+1)"
    #[arg(long)]
    tf: String,

    /// Lowest angular frequency [rad/s]
    #[arg(long, default_value_t = 0.01)]
    wmin: f64,

    /// Highest angular frequency [rad/s]
    #[arg(long, default_value_t = 100.0)]
    wmax: f64,

    /// Points per decade
    #[arg(long, default_value_t = 20)]
    ppd: u32,

    /// Output format: csv or json
    #[arg(long, default_value = "csv")]
    format: OutputFormat,

    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(args: &Args) -> Result<(), (u8, String)> {
    let tf = parse_tf(&args.tf).map_err(|e| {
        (
            EXIT_PARSE,
            format!(
                "{e}\n  {}\n  {:>width$}",
                args.tf,
                "^",
                width = e.offset + 1
            ),
        )
    })?;
    let grid = FrequencyGrid::new(args.wmin, args.wmax, args.ppd)
        .map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let points = sweep(&tf, &grid).map_err(|e| (EXIT_EVAL, format!("evaluation failed: {e}")))?;

    let io_err = |e: io::Error| (EXIT_USAGE, format!("write failed: {e}"));
    match &args.out {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| (EXIT_USAGE, format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_points(&points, args.format, &mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
        None => {
            let mut w = io::stdout().lock();
            write_points(&points, args.format, &mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("fracfreq: {msg}");
            ExitCode::from(code)
        }
    }
}
