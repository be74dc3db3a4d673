//! Run the built-in reference computations end to end.
//!
//! This is the library-level equivalent of `agcodes reproduce all`: each
//! registry entry rebuilds its construction from scratch, recomputes
//! parameters, classifications, λ constants, covering radii, and bound
//! checks, and compares them against the recorded outcomes.
//!
//! The two 9⁹-syndrome covering-radius runs are skipped here; opt in
//! with: cargo run --release --example reference_suite -- --slow

use agcodes::cli::registry::{examples, run_example, RunConfig, Status};

fn main() -> agcodes::Result<()> {
    let slow = std::env::args().any(|a| a == "--slow");
    let cfg = RunConfig {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        slow,
        ..RunConfig::default()
    };

    let mut failed = 0;
    for (id, title) in examples() {
        println!("{id}: {title}");
        for row in run_example(id, &cfg)? {
            let mark = match row.status {
                Status::Pass => "ok  ",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            println!("  {mark} {} — expected {}, got {}", row.name, row.expected, row.computed);
            if row.status == Status::Fail {
                failed += 1;
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} checks failed");
        std::process::exit(1);
    }
    println!("\nall executed checks passed");
    Ok(())
}
