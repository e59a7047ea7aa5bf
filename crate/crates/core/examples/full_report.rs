//! Run the JSON pipeline on a config file, by default `examples/data/t_t1.json`.
//!
//! `cargo run --example full_report -- path/to/config.json`

use std::path::PathBuf;

use qcff::report::{run_report, JobConfig, RunOptions};

fn main() -> qcff::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data/t_t1.json")
        });
    let cfg = JobConfig::load(&path)?;
    let report = run_report(&cfg, RunOptions::default())?;
    print!("{}", report.to_json());
    Ok(())
}
