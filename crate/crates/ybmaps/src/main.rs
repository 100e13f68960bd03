use std::process::ExitCode;

use clap::Parser;

use ybmaps::cli::{self, Cli};

fn main() -> ExitCode {
    let parsed = Cli::parse();
    let out = cli::output_of(&parsed);
    let format = out.format;
    let path = out.output.clone();
    match cli::run(&parsed) {
        Ok(doc) => {
            let rendered = cli::render(&doc, format);
            if let Some(path) = path {
                if let Err(e) = std::fs::write(&path, rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
