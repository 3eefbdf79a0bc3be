fn main() {
    let mut stdout = std::io::stdout().lock();
    let code = ellgen::cli::run(std::env::args_os().skip(1), &mut stdout);
    std::process::exit(code);
}
