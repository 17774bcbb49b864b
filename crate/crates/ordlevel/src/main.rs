use std::io::Write;
use std::path::Path;

use clap::Parser;
use ordlevel::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let outcome = run(&cli, echo, Path::new("."));
    if cli.json {
        let text = serde_json::to_string_pretty(&outcome.report.to_json()).expect("reports serialize");
        println!("{text}");
        eprint!("{}", outcome.summary);
    } else {
        print!("{}", outcome.summary);
    }
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.exit);
}
