use clap::Parser;

fn main() {
    let cli = cutdim::cli::Cli::parse();
    std::process::exit(cutdim::cli::run(&cli));
}
