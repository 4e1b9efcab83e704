mod args;
mod failure;
mod output;
mod run;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    let (kind, opts) = cli.command.split();
    match run::run(kind, &opts) {
        Ok(report) => {
            if opts.json {
                println!("{}", report.summary.to_json());
            } else {
                print!("{}", report.summary.to_text());
                for path in &report.written {
                    println!("wrote {}", path.display());
                }
            }
        }
        Err(failure) => {
            eprintln!("citenet: {failure}");
            std::process::exit(failure.code);
        }
    }
}
