use std::fs;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use crate::args::{BowCmd, Cli, Command, QuasiCmd, QuiverCmd, RelationsCmd};
use crate::commands::{execute, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    CheckFailure = 1,
    Usage = 2,
    Internal = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// What a run produced: the exit status, the report (absent on usage errors
/// caught by the parser) and any text meant for the terminal.
pub struct Report {
    pub exit: Exit,
    pub json: Option<Value>,
    pub message: Option<String>,
}

impl Report {
    /// The report without its timing field, which is the only part allowed
    /// to differ between identical runs.
    pub fn canonical(&self) -> Option<Value> {
        self.json.as_ref().map(|j| {
            let mut j = j.clone();
            if let Some(o) = j.as_object_mut() {
                o.remove("timing");
            }
            j
        })
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Relations(RelationsCmd::Verify(_)) => "relations verify",
        Command::Quasi(QuasiCmd::Series(_)) => "quasi series",
        Command::Quasi(QuasiCmd::Flatness(_)) => "quasi flatness",
        Command::Quiver(QuiverCmd::Check(_)) => "quiver check",
        Command::Quiver(QuiverCmd::Sample(_)) => "quiver sample",
        Command::Bow(BowCmd::Check(_)) => "bow check",
        Command::Bow(BowCmd::Hw(_)) => "bow hw",
        Command::Macdonald(crate::args::MacdonaldCmd::Apply(_)) => "macdonald apply",
        Command::Macdonald(crate::args::MacdonaldCmd::Commute(_)) => "macdonald commute",
        Command::Suite(_) => "suite",
    }
}

fn out_path(cmd: &Command) -> Option<&std::path::Path> {
    match cmd {
        Command::Relations(RelationsCmd::Verify(a)) => a.out.as_deref(),
        Command::Quasi(QuasiCmd::Series(a)) => a.out.as_deref(),
        Command::Quasi(QuasiCmd::Flatness(a)) => a.out.as_deref(),
        Command::Quiver(QuiverCmd::Sample(a)) => a.out.as_deref(),
        Command::Bow(BowCmd::Hw(a)) => a.out.as_deref(),
        Command::Suite(a) => a.out.as_deref(),
        _ => None,
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parse and execute `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let exit = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    Exit::Pass
                }
                _ => Exit::Usage,
            };
            return Report { exit, json: None, message: Some(e.render().to_string()) };
        }
    };
    let start = Instant::now();
    let config = serde_json::to_value(&cli.command).expect("arguments serialize");
    let mut report = json!({
        "command": command_name(&cli.command),
        "config": config,
        "engine_version": env!("CARGO_PKG_VERSION"),
    });
    let (exit, message) = match execute(&cli.command) {
        Ok(outcome) => {
            report["results"] = outcome.results;
            report["status"] = json!(if outcome.pass { "pass" } else { "fail" });
            let mut exit = if outcome.pass { Exit::Pass } else { Exit::CheckFailure };
            let mut message = None;
            if let (Some(path), Some(artifact)) = (out_path(&cli.command), outcome.artifact) {
                if let Err(e) = fs::write(path, render(&artifact)) {
                    exit = Exit::Internal;
                    message = Some(format!("error: cannot write {}: {e}", path.display()));
                    report["status"] = json!("error");
                }
            }
            (exit, message)
        }
        Err(Failure::Usage(m)) => {
            report["status"] = json!("usage-error");
            report["error"] = json!(m);
            (Exit::Usage, Some(format!("error: {m}\n\nFor more information, try '--help'.")))
        }
        Err(Failure::Internal(m)) => {
            report["status"] = json!("internal-error");
            report["error"] = json!(m);
            (Exit::Internal, Some(format!("internal error: {m}")))
        }
    };
    report["timing"] = json!({"elapsed_ms": start.elapsed().as_millis() as u64});
    Report { exit, json: Some(report), message }
}
