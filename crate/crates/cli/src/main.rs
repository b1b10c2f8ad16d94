use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let json = args.iter().any(|a| a == "--json");
    let report = krull_kit::run_args(args);
    // a closed pipe downstream is not an error of ours
    let _ = if json {
        let doc = serde_json::to_string_pretty(&report.json).expect("serializable");
        writeln!(std::io::stdout(), "{doc}")
    } else if report.code == krull_kit::commands::EXIT_USAGE {
        writeln!(std::io::stderr(), "{}", report.text)
    } else {
        writeln!(std::io::stdout(), "{}", report.text)
    };
    ExitCode::from(report.code as u8)
}
