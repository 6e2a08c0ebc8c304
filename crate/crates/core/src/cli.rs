//! Command-line front end with solver-competition style task codes.
//!
//! `{SE,EE,DC,DS}-σ` for the serialisation presets (AD, CO, GR, ST, PR, SA,
//! UC) and, through the brute-force oracle, for CF, SST, ID and EAGER;
//! `{EE,VER,EXISTS,UNIQUE,DC,DS}-IS[-UA|-UC|-CH]` for initial sets;
//! `CLASSIFY`, `DECOMPOSE`, `GEN-CNF` and `SERVE`.

use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::Parser;

use crate::argset::ArgSet;
use crate::decision::{self, Family, Subject, Task, TaskQuery};
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::initial::{decompose, enumerate_initial_sets};
use crate::io::json::{self, ExtensionsDoc, InitialSetDoc, SequenceDoc};
use crate::io::{self, Format};
use crate::oracle::{self, Semantics};
use crate::reductions::{cnf3_to_af, parse_dimacs};
use crate::serial::{enumerate_extensions, SemanticsSpec};
use crate::service;

#[derive(Debug, Parser)]
#[command(
    name = "saf",
    version,
    about = "Initial sets and serialisation for abstract argumentation"
)]
pub struct Args {
    /// Task code, e.g. EE-PR, DC-IS-UC, CLASSIFY, SERVE.
    #[arg(short = 'p', long)]
    pub task: String,

    /// Input file (a DIMACS formula for GEN-CNF).
    #[arg(short = 'f', long = "file", value_name = "FILE")]
    pub file_flag: Option<PathBuf>,

    #[arg(value_name = "FILE", conflicts_with = "file_flag")]
    pub file: Option<PathBuf>,

    /// Framework format; inferred from the file extension, else tgf. For
    /// GEN-CNF it is the output format.
    #[arg(long)]
    pub format: Option<String>,

    /// Query argument for DC/DS tasks.
    #[arg(short = 'a', long)]
    pub arg: Option<String>,

    /// Comma-separated set for VER and DECOMPOSE.
    #[arg(short = 's', long)]
    pub set: Option<String>,

    /// Largest framework the brute-force oracle accepts.
    #[arg(long, env = "SAF_BOUND", default_value_t = oracle::DEFAULT_BOUND)]
    pub bound: usize,

    /// Worker threads (default: one per core).
    #[arg(long)]
    pub threads: Option<usize>,

    /// Print JSON documents instead of plain text.
    #[arg(long)]
    pub json: bool,

    #[arg(long, default_value_t = 8080)]
    pub port: u16,

    #[arg(long, default_value = "127.0.0.1")]
    pub host: IpAddr,

    /// Directory holding the built explorer bundle served at `/`.
    #[arg(long)]
    pub ui_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Some,
    Each,
    Cred,
    Skept,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Serial(SemanticsSpec),
    Oracle(Semantics),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Command {
    Extensions(Mode, Engine),
    EnumerateInitial(Family),
    Decide(Task, Family),
    Classify,
    Decompose,
    GenCnf,
    Serve,
}

fn parse_task(code: &str) -> Result<Command> {
    let upper = code.to_ascii_uppercase();
    let unknown = || Error::UnknownTask(code.to_string());
    match upper.as_str() {
        "CLASSIFY" => return Ok(Command::Classify),
        "DECOMPOSE" => return Ok(Command::Decompose),
        "GEN-CNF" => return Ok(Command::GenCnf),
        "SERVE" => return Ok(Command::Serve),
        _ => {}
    }
    let (head, tail) = upper.split_once('-').ok_or_else(unknown)?;
    if tail == "IS" || tail.starts_with("IS-") {
        if head == "EE" {
            let family: Family = tail.parse().map_err(|_| unknown())?;
            return Ok(Command::EnumerateInitial(family));
        }
        let (task, family) = decision::parse_code(&upper)?;
        return Ok(Command::Decide(task, family));
    }
    let mode = match head {
        "SE" => Mode::Some,
        "EE" => Mode::Each,
        "DC" => Mode::Cred,
        "DS" => Mode::Skept,
        _ => return Err(unknown()),
    };
    let engine = match tail {
        "CF" | "SST" | "ID" | "EAGER" => Engine::Oracle(tail.parse()?),
        _ => Engine::Serial(SemanticsSpec::from_code(tail).ok_or_else(unknown)?),
    };
    Ok(Command::Extensions(mode, engine))
}

/// Parses `argv` and runs it, writing answers to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn execute(args: &Args, out: &mut dyn Write) -> Result<()> {
    let command = parse_task(&args.task)?;
    if let Some(k) = args.threads {
        // Only the first call per process can size the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match command {
        Command::Serve => serve(args),
        Command::GenCnf => {
            let path = input_path(args)?;
            let phi = parse_dimacs(&read(path)?)?;
            let format = match &args.format {
                Some(f) => f.parse()?,
                None if args.json => Format::Json,
                None => Format::Tgf,
            };
            out.write_all(io::emit(&cnf3_to_af(&phi), format)?.as_bytes())?;
            Ok(())
        }
        _ => {
            let f = load_framework(args)?;
            run_on(&f, command, args, out)
        }
    }
}

fn input_path(args: &Args) -> Result<&Path> {
    args.file
        .as_deref()
        .or(args.file_flag.as_deref())
        .ok_or_else(|| Error::Usage("no input file given".into()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_framework(args: &Args) -> Result<Framework> {
    let path = input_path(args)?;
    let format = match &args.format {
        Some(f) => f.parse()?,
        None => Format::from_path(path).unwrap_or(Format::Tgf),
    };
    io::parse(&read(path)?, format)
}

fn argument(f: &Framework, args: &Args) -> Result<usize> {
    let label = args
        .arg
        .as_deref()
        .ok_or_else(|| Error::Usage("this task needs --arg".into()))?;
    f.index_of(label)
        .ok_or_else(|| Error::UnknownArgument(label.to_string()))
}

fn set(f: &Framework, args: &Args) -> Result<ArgSet> {
    let raw = args
        .set
        .as_deref()
        .ok_or_else(|| Error::Usage("this task needs --set".into()))?;
    let raw = raw.trim().trim_start_matches('[').trim_end_matches(']');
    f.set_of(raw.split(',').map(str::trim).filter(|l| !l.is_empty()))
}

fn yes_no(out: &mut dyn Write, answer: bool) -> Result<()> {
    writeln!(out, "{}", if answer { "YES" } else { "NO" })?;
    Ok(())
}

fn run_on(f: &Framework, command: Command, args: &Args, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Extensions(mode, engine) => {
            let (label, exts) = match engine {
                Engine::Serial(spec) => (spec.label(), enumerate_extensions(f, &spec)),
                Engine::Oracle(sem) => (sem.code().to_string(), oracle::extensions(f, sem, args.bound)?),
            };
            match mode {
                Mode::Each if args.json => {
                    writeln!(out, "{}", json::to_string(&ExtensionsDoc::new(f, &label, &exts)))?;
                }
                Mode::Each => {
                    for e in &exts {
                        writeln!(out, "{}", f.format_set(e))?;
                    }
                }
                Mode::Some => match exts.first() {
                    Some(e) if args.json => writeln!(out, "{}", json::to_string(&f.labels_of(e)))?,
                    Some(e) => writeln!(out, "{}", f.format_set(e))?,
                    None => writeln!(out, "NO")?,
                },
                Mode::Cred => {
                    let a = argument(f, args)?;
                    yes_no(out, exts.iter().any(|e| e.contains(a)))?;
                }
                Mode::Skept => {
                    let a = argument(f, args)?;
                    yes_no(out, exts.iter().all(|e| e.contains(a)))?;
                }
            }
        }
        Command::EnumerateInitial(family) => {
            let sets: Vec<_> = enumerate_initial_sets(f)
                .into_iter()
                .filter(|i| family.admits(i.class))
                .collect();
            if args.json {
                let docs: Vec<InitialSetDoc> = sets.iter().map(|i| InitialSetDoc::new(f, i)).collect();
                writeln!(out, "{}", json::to_string(&docs))?;
            } else {
                for i in &sets {
                    writeln!(out, "{}", f.format_set(&i.set))?;
                }
            }
        }
        Command::Decide(task, family) => {
            let subject = match task {
                Task::Ver => Subject::Set(set(f, args)?),
                Task::Cred | Task::Skept => Subject::Argument(argument(f, args)?),
                Task::Exists | Task::Unique => Subject::None,
            };
            yes_no(
                out,
                decision::decide(
                    f,
                    &TaskQuery {
                        task,
                        family,
                        subject,
                    },
                )?,
            )?;
        }
        Command::Classify => {
            let sets = enumerate_initial_sets(f);
            if args.json {
                let docs: Vec<InitialSetDoc> = sets.iter().map(|i| InitialSetDoc::new(f, i)).collect();
                writeln!(out, "{}", json::to_string(&docs))?;
            } else {
                for i in &sets {
                    let conflicts: Vec<String> = i.conflicts.iter().map(|c| f.format_set(c)).collect();
                    writeln!(
                        out,
                        "{} {} conflicts=[{}]",
                        f.format_set(&i.set),
                        i.class,
                        conflicts.join(",")
                    )?;
                }
            }
        }
        Command::Decompose => {
            let seq = decompose(f, &set(f, args)?)?;
            writeln!(out, "{}", json::to_string(&SequenceDoc::new(f, &seq)))?;
        }
        Command::GenCnf | Command::Serve => unreachable!("handled before loading a framework"),
    }
    Ok(())
}

fn serve(args: &Args) -> Result<()> {
    let addr = SocketAddr::new(args.host, args.port);
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(service::serve(addr, args.ui_dir.clone(), service::DEFAULT_TTL))?;
    Ok(())
}
