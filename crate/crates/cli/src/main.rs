use std::io::Write;
use std::process::ExitCode;

use schubert_cli::{run, THREADS_ENV};

fn main() -> ExitCode {
    if let Some(threads) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: could not set {THREADS_ENV}={threads}: {e}");
        }
    }

    let result = run(std::env::args_os());
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    match &result.out_file {
        Some(path) if !result.payload.is_empty() => {
            if let Err(e) = std::fs::write(path, &result.payload) {
                eprintln!("error[IoError]: cannot write {path}: {e}");
                return ExitCode::from(1);
            }
        }
        _ => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(result.payload.as_bytes());
        }
    }
    ExitCode::from(result.exit_code as u8)
}
