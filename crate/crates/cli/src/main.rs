use clap::Parser;

fn main() {
    let parsed = cli::Cli::parse();
    let outcome = cli::run(parsed);
    print!("{}", outcome.stdout);
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
