use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use awggn_cli::{exit, run, Cli, CliError, OutTarget};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("awggn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    // Output is buffered so the pool worker owns nothing borrowed from here.
    let mut out = Vec::new();
    let mut diag = Vec::new();
    let result = match cli.global.threads {
        Some(0) => Err(CliError::Usage("--threads must be >= 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| run(&cli.command, &cli.global, &mut out, &mut diag)),
        None => run(&cli.command, &cli.global, &mut out, &mut diag),
    };
    io::stderr().write_all(&diag)?;
    match &cli.global.out {
        OutTarget::Stdout => io::stdout().lock().write_all(&out)?,
        OutTarget::File(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            file.write_all(&out)?;
            file.flush()?;
        }
    }
    result
}
