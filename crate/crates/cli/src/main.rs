use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use arstar::commands::{default_threads, execute, Cli};
use arstar::error::{CliError, EXIT_OK};
use arstar::manifest::{Caps, FileDigest, RunManifest};
use clap::Parser;

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = Cli::parse();
    let (output, err) = execute(&cli);
    let mut code = err.as_ref().map_or(EXIT_OK, CliError::exit_code);

    let target = cli
        .global
        .out
        .as_ref()
        .map_or_else(|| "stdout".to_string(), |p| p.display().to_string());
    let written = match &cli.global.out {
        Some(path) => {
            std::fs::write(path, &output.text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(output.text.as_bytes())
            .map_err(|e| format!("stdout: {e}")),
    };
    if let Some(e) = &err {
        eprintln!("error: {e}");
    }
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        code = code.max(2);
    }

    if let Some(path) = &cli.global.manifest {
        let g = &cli.global;
        let manifest = RunManifest {
            command: std::env::args().collect(),
            seed: g.seed,
            threads: g.threads.unwrap_or_else(default_threads),
            caps: Caps {
                max_n: g.max_n,
                max_nodes: g.max_nodes,
                time_budget_s: g.time_budget,
            },
            version: env!("CARGO_PKG_VERSION"),
            exit_code: code,
            wall_time_s: start.elapsed().as_secs_f64(),
            inputs: output.inputs,
            outputs: vec![FileDigest::of(target, output.text.as_bytes())],
        };
        let text = arstar::format::to_json(&manifest);
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: {}: {e}", path.display());
            code = code.max(2);
        }
    }
    ExitCode::from(code as u8)
}
