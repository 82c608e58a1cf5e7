fn main() {
    let (code, out) = legcalc::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
