fn main() {
    std::process::exit(kspectral::cli::main());
}
