fn main() {
    let result = qoperad::cli::run(std::env::args_os());
    println!("{}", result.output());
    std::process::exit(result.exit_code());
}
