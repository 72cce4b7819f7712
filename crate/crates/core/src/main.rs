fn main() {
    std::process::exit(degflag::cli::main_run());
}
