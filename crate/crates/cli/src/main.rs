use clap::Parser;
use liecert_cli::{run, Cli, UsageError};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.output);
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = if e.downcast_ref::<UsageError>().is_some() { 2 } else { 1 };
            std::process::exit(code);
        }
    }
}
