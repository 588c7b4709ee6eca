use ale_curves_cli::cli::Cli;
use ale_curves_cli::runner::dispatch;
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let started = std::time::Instant::now();
    let outcome = dispatch(cli);
    match &out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, outcome.body.as_bytes()) {
                eprintln!("cannot write {}: {}", path.display(), e);
                std::process::exit(2);
            }
        }
        None => print!("{}", outcome.body),
    }
    // timing goes to stderr only, keeping report bytes deterministic
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    std::process::exit(outcome.exit_code);
}
