fn main() {
    std::process::exit(quatseq::cli::main_with(std::env::args_os()));
}
