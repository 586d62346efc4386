use std::io::Write;

fn main() {
    let (out, err, code) = involution_atlas::run(std::env::args_os());
    if !out.is_empty() {
        // a closed pipe (`| head`) is not an error worth a panic
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
    if !err.is_empty() {
        eprintln!("{}", err.trim_end());
    }
    std::process::exit(code);
}
