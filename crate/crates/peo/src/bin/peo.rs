use clap::Parser;

fn main() {
    let cli = peo::cli::Cli::parse();
    let (code, out) = peo::cli::run(cli);
    println!("{out}");
    std::process::exit(code);
}
