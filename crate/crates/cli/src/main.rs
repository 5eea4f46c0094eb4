use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use mnforge_cli::{run_command, Cli, Format};

fn main() -> ExitCode {
    let args: Vec<_> = std::env::args_os().collect();
    let format = Cli::try_parse_from(&args).map_or(Format::Text, |c| c.format);
    let result = run_command(args);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.stdout(format).as_bytes());
    let _ = stdout.flush();
    eprint!("{}", result.diagnostics);
    ExitCode::from(u8::try_from(result.exit_code).unwrap_or(1))
}
