use std::io::{self, IsTerminal, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let needs_stdin = !argv.iter().any(|a| {
        a == "--input" || a.starts_with("--input=") || a == "--version" || a == "-V" || a == "--help" || a == "-h"
    });
    let mut input = String::new();
    if needs_stdin && !io::stdin().is_terminal() {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("xratio: reading stdin: {e}");
            return ExitCode::from(2);
        }
    }
    let (code, out) = xratio_cli::run(&argv, &input);
    let _ = io::stdout().write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
