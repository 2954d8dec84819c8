use biquotient_cli::{run, Cli};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    let text = out.render(cli.format);
    if out.code == 0 {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    std::process::exit(out.code);
}
