use clap::Parser;
use quiver_hopf_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (output, code) = run(&cli.command);
    print!("{output}");
    std::process::exit(code);
}
