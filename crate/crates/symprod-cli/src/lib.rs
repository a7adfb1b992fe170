//! Command-line front door and JSON file formats for the exact-arithmetic
//! symmetric-product toolkit.
//!
//! Output contract: successful runs print one JSON document (or a table
//! under --pretty) to stdout and exit 0; validation failures print a
//! machine-readable error JSON to stderr and exit 2. Identical inputs always
//! produce identical bytes; sampling requires an explicit seed.

pub mod args;
pub mod commands;
pub mod pretty;
pub mod schema;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use commands::dispatch;

/// Run with explicit argv; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let out = schema::ErrorOutput::new("bad-usage", e.to_string());
            eprintln!("{}", serde_json::to_string(&out).expect("error serializes"));
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(doc) => {
            if doc.ends_with('\n') {
                print!("{doc}");
            } else {
                println!("{doc}");
            }
            0
        }
        Err(err) => {
            let out = err.to_output();
            eprintln!("{}", serde_json::to_string(&out).expect("error serializes"));
            2
        }
    }
}
