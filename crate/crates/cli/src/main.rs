use clap::Parser;
use equidim_cli::{run, Options};

fn main() {
    let opts = Options::parse();
    let code = run(
        &opts,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
