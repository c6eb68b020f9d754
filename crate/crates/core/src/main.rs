fn main() {
    let code = benzleap::cli::run(std::env::args_os());
    std::process::exit(code);
}
