use std::process::ExitCode;

use cyclodaha_cli::{run, Exit};

fn main() -> ExitCode {
    if let Some(n) = std::env::var("CYCLODAHA_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let report = run(std::env::args_os());
    if let Some(j) = &report.json {
        print!("{}", cyclodaha_cli::report::render(j));
    }
    if let Some(m) = &report.message {
        if report.exit == Exit::Pass {
            print!("{m}");
        } else {
            eprintln!("{m}");
        }
    }
    ExitCode::from(report.exit.code() as u8)
}
