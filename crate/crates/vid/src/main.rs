use std::io::Write;

use clap::Parser;
use vid::cli::{run, Cli};

fn main() {
    let out = run(Cli::parse());
    let stream: &mut dyn Write = if out.code == 2 {
        &mut std::io::stderr()
    } else {
        &mut std::io::stdout()
    };
    // a closed pipe is not worth a panic
    let _ = stream.write_all(out.text.as_bytes());
    std::process::exit(out.code);
}
