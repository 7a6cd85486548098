use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, doc) = fuzzy_congruences::cli::run(std::env::args_os().skip(1));
    if let Some(err) = doc.get("error").and_then(|e| e.as_str()) {
        eprintln!("fsc: {err}");
    }
    println!("{doc}");
    ExitCode::from(code as u8)
}
