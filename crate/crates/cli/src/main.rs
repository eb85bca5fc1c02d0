fn main() {
    let (text, code) = homlie_cli::run(std::env::args_os());
    print!("{text}");
    std::process::exit(code);
}
