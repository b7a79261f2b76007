use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use splitz::cli::{run_text, CliError, Command, Flags};

#[derive(Parser)]
#[command(name = "splitz", about = "Classify groups given by splittings")]
struct Args {
    /// classify | reduce | abelianize | fingerprint | word | modular | dot
    command: Command,
    /// Input file, or `-` for stdin.
    input: String,
    /// Largest k tried by the certificate search.
    #[arg(long = "kmax", default_value_t = splitz::classify::DEFAULT_K_MAX)]
    k_max: u64,
    /// Word to test (for `word`).
    #[arg(long)]
    word: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let flags = Flags {
        k_max: args.k_max,
        word: args.word,
    };
    let result = read_input(&args.input).and_then(|text| run_text(args.command, &text, &flags));
    match result {
        Ok(out) => {
            match &args.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, out) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{out}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
