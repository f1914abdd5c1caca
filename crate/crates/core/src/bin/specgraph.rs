fn main() {
    std::process::exit(specgraph::cli_io::run(std::env::args_os()));
}
