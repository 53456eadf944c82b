//! Runs the built-in suite over QQ and prints one line per ideal.
//!
//! `cargo run --release --example verify_suite -- [seed]`

use liaison::verify::{run_suite, summary, SuiteConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let config = SuiteConfig { seed, timings: true, ..SuiteConfig::default() };
    let run = run_suite(&config).expect("suite runs");
    print!("{}", summary(&run));
    for r in &run.reports {
        if let Some(t) = &r.timings_ms {
            println!("{:<26} {:?}", r.name, t);
        }
    }
    std::process::exit(if run.is_clean() { 0 } else { 5 });
}
