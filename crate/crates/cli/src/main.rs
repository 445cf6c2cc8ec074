use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gamma_depth_cli::family::FamilyParams;
use gamma_depth_cli::instance::parse_range;
use gamma_depth_cli::{
    corpus_verify, generate_family, parse_instance, prime_from_env, run_instance, CliError, CorpusConfig, FamilyKind,
    Options, RunReport, Status,
};
use gamma_depth_core::families::RandomShape;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gamma-depth", version, about = "Gamma-regular sequences and componentwise linear syzygies")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Write the JSON report to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Restarts of the randomized gamma-depth search.
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    /// Cap for `delta`.
    #[arg(long, global = true)]
    cap: Option<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the `cmd` lines of an instance file.
    Run { file: PathBuf },
    /// Run one command, e.g. `exec file.txt gamma-test I z=x1+x2`.
    Exec {
        file: PathBuf,
        #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true)]
        command: Vec<String>,
    },
    /// Parse an instance file and print it in normal form.
    Check { file: PathBuf },
    /// Print instances of a family.
    Family {
        /// power-of-m, rm-ord-example, random-ideal or random-module.
        kind: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = "1-4", value_parser = range)]
        gens: (u64, u64),
        #[arg(long, default_value = "1-4", value_parser = range)]
        degrees: (u64, u64),
    },
    /// Compare cwl of Syz1 with full gamma-depth on a seeded random corpus.
    CorpusVerify {
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Random modules appended after the ideals.
        #[arg(long, default_value_t = 0)]
        modules: usize,
        /// Number of variables, `a` or `a-b`.
        #[arg(long, default_value = "2", value_parser = range)]
        n: (u64, u64),
        #[arg(long, default_value = "1-4", value_parser = range)]
        gens: (u64, u64),
        #[arg(long, default_value = "1-4", value_parser = range)]
        degrees: (u64, u64),
    },
}

fn range(s: &str) -> Result<(u64, u64), String> {
    parse_range(s).ok_or_else(|| format!("expected `a` or `a-b` with a <= b, found `{}`", s))
}

fn write_json(path: &Path, v: &Value) -> Result<(), CliError> {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    fs::write(path, s)?;
    Ok(())
}

fn print_run(report: &RunReport) {
    for (cmd, out) in &report.outputs {
        println!("== {}", cmd);
        print!("{}", out.text);
        match out.status {
            Status::Ok => {}
            Status::Agree => println!("AGREE"),
            Status::Disagree => println!("DISAGREE"),
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let prime = prime_from_env()?;
    let mut opts = Options {
        seed: cli.seed,
        trials: cli.trials,
        cap: cli.cap,
        ..Options::default()
    };
    if let Some(p) = prime {
        opts.prime = p;
    }
    match cli.command {
        Cmd::Run { file } => {
            let inst = parse_instance(&fs::read_to_string(&file)?, prime)?;
            let report = run_instance(&inst, &opts)?;
            print_run(&report);
            if let Some(path) = &cli.json {
                write_json(path, &report.to_json(&inst, &opts))?;
            }
            Ok(report.exit_code())
        }
        Cmd::Exec { file, command } => {
            let mut inst = parse_instance(&fs::read_to_string(&file)?, prime)?;
            inst.commands.clear();
            inst.push_command(&command)?;
            let report = run_instance(&inst, &opts)?;
            print_run(&report);
            if let Some(path) = &cli.json {
                write_json(path, &report.to_json(&inst, &opts))?;
            }
            Ok(report.exit_code())
        }
        Cmd::Check { file } => {
            let inst = parse_instance(&fs::read_to_string(&file)?, prime)?;
            print!("{}", inst);
            Ok(0)
        }
        Cmd::Family {
            kind,
            n,
            r,
            count,
            gens,
            degrees,
        } => {
            let kind: FamilyKind = kind.parse()?;
            let params = FamilyParams {
                n,
                r,
                count,
                prime: opts.prime,
                shape: RandomShape {
                    gens: (gens.0 as usize, gens.1 as usize),
                    degrees: (degrees.0 as u32, degrees.1 as u32),
                    max_terms: 3,
                },
            };
            let family = generate_family(kind, params, opts.seed)?;
            let texts: Vec<String> = family.iter().map(|f| f.to_string()).collect();
            println!("{}", texts.join("\n").trim_end());
            if let Some(path) = &cli.json {
                write_json(path, &json!({ "instances": texts }))?;
            }
            Ok(0)
        }
        Cmd::CorpusVerify {
            count,
            modules,
            n,
            gens,
            degrees,
        } => {
            let config = CorpusConfig {
                count,
                modules,
                n: (n.0 as usize, n.1 as usize),
                gens: (gens.0 as usize, gens.1 as usize),
                degrees: (degrees.0 as u32, degrees.1 as u32),
                seed: opts.seed,
                prime: opts.prime,
            };
            let out = corpus_verify(&config, opts.trials)?;
            print!("{}", out.text);
            if let Some(path) = &cli.json {
                write_json(path, &out.report)?;
            }
            Ok(if out.status == Status::Disagree { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
