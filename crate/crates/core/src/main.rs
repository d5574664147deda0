use clap::Parser;

fn main() {
    let cli = twogroups::cli::Cli::parse();
    std::process::exit(twogroups::cli::run(cli));
}
