use std::io::{self, Read, Write};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let mut stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = hamtri::cli::run_with(
        &refs,
        &mut stdin as &mut dyn Read,
        &mut stdout as &mut dyn Write,
        &mut stderr as &mut dyn Write,
    );
    drop(stdout);
    drop(stderr);
    std::process::exit(code);
}
