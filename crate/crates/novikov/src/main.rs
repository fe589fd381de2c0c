use std::fs;
use std::process::ExitCode;

use novikov::cli::run_args;
use novikov::report::EXIT_INPUT;

fn main() -> ExitCode {
    let (cli, report) = match run_args(std::env::args()) {
        Ok(x) => x,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    print!("{}", report.render_text());
    if let Some(err) = &report.error {
        eprintln!("error: {}: {}: {}", err.path, err.kind, err.message);
    }
    if let Some(out) = &cli.json {
        if let Err(e) = fs::write(out, report.to_json()) {
            eprintln!("error: {}: {e}", out.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    ExitCode::from(report.exit_code as u8)
}
