use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use tripint_cli::{emit, run_suite, Cli, SuiteConfig};

const CONFIG_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    let cfg = match SuiteConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    let reports = run_suite(&cfg);
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            emit(&reports, cli.format, &mut w)?;
            w.flush()
        }),
        None => {
            let mut w = io::stdout().lock();
            emit(&reports, cli.format, &mut w).and_then(|_| w.flush())
        }
    };
    if let Err(e) = written {
        eprintln!("verify: cannot write report: {e}");
        return ExitCode::from(CONFIG_ERROR);
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
