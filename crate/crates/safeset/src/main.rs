use clap::Parser;

use safeset::cli::{run, Cli, CliError, Format, Outcome};
use safeset::format::emit;
use safeset::report::{ReportResult, RunReport};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            eprintln!("{}", err.to_json());
            std::process::exit(err.exit_code());
        }
    };
    match run(&cli) {
        Ok(Outcome::Report(report)) => {
            let out = match cli.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => text(&report),
            };
            if let Err(e) = emit(&out) {
                let err = CliError::Io {
                    path: "<stdout>".into(),
                    source: e,
                };
                eprintln!("{}", err.to_json());
                std::process::exit(err.exit_code());
            }
        }
        Ok(Outcome::Printed) => {}
        Err(err) => {
            eprintln!("{}", err.to_json());
            std::process::exit(err.exit_code());
        }
    }
}

fn text(r: &RunReport) -> String {
    match &r.result {
        ReportResult::Solve { problem, method, size, set, .. } => {
            format!("{problem} ({method}): {size} {{{}}}\n", set.names.join(", "))
        }
        ReportResult::Fvs { size, set } => format!("fvs: {size} {{{}}}\n", set.names.join(", ")),
        ReportResult::Check { problem, verdict, violations, .. } => {
            let mut s = format!("{problem}: {}\n", if *verdict { "yes" } else { "no" });
            for v in violations {
                s.push_str(&format!("  {v}\n"));
            }
            s
        }
        ReportResult::Scc { components } => components.iter().map(|c| format!("{}\n", c.names.join(" "))).collect(),
        ReportResult::Bench { rows } => {
            let mut s = String::from("  lsc      n  comps    subsets   expected  s  micros\n");
            for b in rows {
                s.push_str(&format!(
                    "{:>5} {:>6} {:>6} {:>10} {:>10} {:>2} {:>7}\n",
                    b.lsc, b.n, b.components, b.subsets_examined, b.expected_subsets, b.size, b.micros
                ));
            }
            s
        }
        _ => format!("{}\n", r.to_json()),
    }
}
