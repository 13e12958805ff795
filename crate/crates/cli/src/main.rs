use clap::Parser;
use drspec_cli::config::{normalize_args, Cli, Experiment, RunConfig};
use drspec_cli::experiments;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args())) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (experiment, args) = cli.command.split();
    let cfg = match RunConfig::from_args(experiment, args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    }
    let t0 = Instant::now();
    let records = match experiments::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cfg.experiment != Experiment::VerifyAll {
        for r in &records {
            println!("{}", r.summary().trim_end());
        }
    }
    let pass = records.iter().all(|r| r.pass);
    let written = drspec_cli::report::Artifacts::new(&cfg.out).and_then(|a| a.write_json("report.json", &records));
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    println!(
        "{}: {}/{} passed in {:.1} s",
        cfg.experiment.name(),
        records.iter().filter(|r| r.pass).count(),
        records.len(),
        t0.elapsed().as_secs_f64()
    );
    ExitCode::from(if pass { 0 } else { 1 })
}
