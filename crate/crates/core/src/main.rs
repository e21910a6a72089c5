use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use plueckerlab::cli::{exit_code, run, Command, Options};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Classify,
    Foci,
    Hilbert,
    Temple,
    Pfaffian,
}

/// Linear congruences of lines, their focal loci and the associated Temple systems.
///
/// FILE is a web (or, for `temple`, flux) JSON file, or the name of a built-in fixture.
/// PLUECKERLAB_THREADS caps the number of worker threads.
#[derive(Parser)]
#[command(name = "plueckerlab", version)]
struct Args {
    command: Cmd,
    file: String,
    /// Print the structured report as JSON.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random samples for `temple`.
    #[arg(long)]
    samples: Option<usize>,
    /// Plücker coordinates p01,p02,...,p(n-1)n of a congruence line.
    #[arg(long)]
    line: Option<String>,
    /// A point, e.g. "(1:3:5:2)".
    #[arg(long)]
    point: Option<String>,
    /// With --point on the focal locus: report the pencil plane and the residual curve.
    #[arg(long)]
    pencil: bool,
    /// For `hilbert`: focal, residual or residual:<component>.
    #[arg(long)]
    ideal: Option<String>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(t) = std::env::var("PLUECKERLAB_THREADS") {
        match t.parse::<usize>() {
            Ok(k) if k > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(k).build_global().expect("thread pool is configured once");
            }
            _ => {
                eprintln!("error: PLUECKERLAB_THREADS must be a positive integer, got `{t}`");
                return ExitCode::from(2);
            }
        }
    }
    let cmd = match args.command {
        Cmd::Classify => Command::Classify,
        Cmd::Foci => Command::Foci,
        Cmd::Hilbert => Command::Hilbert,
        Cmd::Temple => Command::Temple,
        Cmd::Pfaffian => Command::Pfaffian,
    };
    let opts = Options {
        seed: args.seed,
        samples: args.samples,
        line: args.line,
        point: args.point,
        pencil: args.pencil,
        ideal: args.ideal,
    };
    match run(cmd, &args.file, &opts) {
        Ok(r) => {
            let mut out = String::new();
            if args.json {
                out = serde_json::to_string_pretty(&r).expect("reports serialize");
                out.push('\n');
            } else {
                out.push_str(&r.text);
                for n in &r.notes {
                    out.push_str(&format!("note: {n}\n"));
                }
            }
            // a closed pipe is not an error for a report writer
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
