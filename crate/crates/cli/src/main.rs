fn main() {
    std::process::exit(nucleon_emission_cli::run(std::env::args_os()));
}
