//! Runs all twelve acceptance criteria and prints one line per criterion.
//! Exits nonzero when any criterion fails.

use cyclodaha_cli::acceptance::{criterion_ids, run_criterion};

fn main() {
    // `cargo test -- <filter>` passes a filter; numeric filters select criteria.
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for id in criterion_ids().filter(|id| only.is_empty() || only.contains(id)) {
        let r = run_criterion(id).expect("criterion ids are listed");
        println!("{}", r.line());
        if !r.pass() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
