//! Drives the command-line layer in process: parses an argument vector,
//! feeds an edge list and prints the JSON report and exit code.

use clap::Parser;
use irp::cli::{execute, Cli};

fn main() -> irp::Result<()> {
    let edges = "0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4\n";
    for args in [
        vec!["irp", "predicates"],
        vec!["irp", "equivalence"],
        vec!["irp", "irp-witness", "--direction", "geq", "--window", "2"],
    ] {
        let cli = Cli::parse_from(&args);
        let out = execute(&cli.command, edges)?;
        println!("$ {} (exit {})", args.join(" "), out.exit_code);
        println!("{}", serde_json::to_string_pretty(&out.report["verdicts"]).unwrap());
    }
    Ok(())
}
