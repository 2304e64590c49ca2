use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use intreg::automata::{compile_regex, Nfa, RunWord};
use intreg::encoding::{decode_red_blue_runs, decode_runs, GraphInstance, RedBlueInstance};
use intreg::engine::{choose_rep, decide, restrict_to_enc, verify_witness_runs, DecideOptions};
use intreg::problems::{lookup, registry, solve_instance, Support, DEFAULT_SOLVER_BUDGET};
use intreg::reps::{finite_core, Instance, Interpretation};

use crate::{Command, Source};

macro_rules! log {
    ($verbose:expr, $($arg:tt)*) => {
        if $verbose {
            eprintln!($($arg)*);
        }
    };
}

fn load(source: &Source) -> Result<Nfa> {
    match (&source.regex, &source.automaton) {
        (Some(r), None) => Ok(compile_regex(r)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(Nfa::from_json_str(&text)?)
        }
        _ => bail!("give exactly one of --regex and --automaton"),
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).context("reading stdin")?;
    Ok(s)
}

fn emit(value: &Value, output: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display())),
        None => write_stdout(&(text + "\n")),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn write_stdout(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn parse_word(text: &str) -> Result<RunWord> {
    Ok(text.trim().parse::<RunWord>()?)
}

pub fn run(command: Command, verbose: bool) -> Result<u8> {
    match command {
        Command::Decide { source, problem, emit_reps, output, max_search } => {
            let m = load(&source)?;
            let spec = lookup(&problem)?;
            log!(verbose, "automaton: {} states, {} transitions", m.num_states(), m.num_transitions());
            let opts = DecideOptions { max_nodes: max_search, ..DecideOptions::default() };
            let d = decide(&m, spec, &opts)?;
            log!(
                verbose,
                "core instances examined: {}, configurations: {}, representative tokens: {}, {} ms",
                d.stats.core_size,
                d.stats.nodes,
                d.stats.rep_tokens,
                d.stats.elapsed.as_millis()
            );
            if let Some(path) = emit_reps {
                let reps: Vec<Value> = d.reps.iter().map(|r| r.to_json()).collect();
                emit(&json!(reps), Some(&path))?;
            }
            emit(&d.to_json(), output.as_deref())?;
            Ok(if d.is_nonempty() { 0 } else { 1 })
        }
        Command::Core { source, problem, emit_reps, output, max_search } => {
            let spec = lookup(&problem)?;
            let m = restrict_to_enc(&load(&source)?);
            log!(verbose, "restricted automaton: {} states", m.num_states());
            let rep = choose_rep(&m, spec)?;
            if let Some(path) = emit_reps {
                emit(&rep.to_json(), Some(&path))?;
            }
            let core = finite_core(&m, &rep, spec.interpretation(), max_search)?;
            log!(verbose, "core size: {}", core.len());
            emit(&core.to_json(), output.as_deref())?;
            Ok(0)
        }
        Command::Decode { red_blue, output } => {
            let w = parse_word(&read_stdin()?)?;
            let value = if red_blue {
                decode_red_blue_runs(&w)?.to_json_value()
            } else {
                decode_runs(&w)?.to_json_value()
            };
            emit(&value, output.as_deref())?;
            Ok(0)
        }
        Command::Solve { problem, instance, output, max_search } => {
            let spec = lookup(&problem)?;
            let text = match instance {
                Some(path) => fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?,
                None => read_stdin()?,
            };
            let value: Value = serde_json::from_str(&text).context("parsing instance JSON")?;
            let inst = match spec.interpretation() {
                Interpretation::Simple => Instance::Simple(GraphInstance::from_json_value(value)?),
                Interpretation::RedBlue => Instance::RedBlue(RedBlueInstance::from_json_value(value)?),
            };
            let verdict = solve_instance(spec, &inst, max_search.unwrap_or(DEFAULT_SOLVER_BUDGET))?;
            emit(&verdict.to_json(), output.as_deref())?;
            Ok(0)
        }
        Command::Verify { source, problem, word } => {
            let m = load(&source)?;
            let spec = lookup(&problem)?;
            let w = match word {
                Some(w) => parse_word(&w)?,
                None => parse_word(&read_stdin()?)?,
            };
            let ok = verify_witness_runs(&m, spec, &w);
            emit(&json!({ "valid": ok }), None)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::ListProblems { json } => {
            if json {
                let rows: Vec<Value> = registry()
                    .iter()
                    .map(|p| {
                        json!({
                            "name": p.name,
                            "title": p.title,
                            "case": p.case.map(|c| c.to_string()),
                            "param_role": p.role.to_string(),
                            "supported": p.is_supported(),
                            "reason": match p.support { Support::NotSupported(r) => Some(r), Support::Supported => None },
                        })
                    })
                    .collect();
                emit(&json!(rows), None)?;
            } else {
                let mut table = format!("{:<38} {:<20} {:<18} supported\n", "name", "case", "param_role");
                for p in registry() {
                    let case = p.case.map_or("-".to_string(), |c| c.to_string());
                    table += &format!("{:<38} {:<20} {:<18} {}\n", p.name, case, p.role.to_string(), p.is_supported());
                }
                write_stdout(&table)?;
            }
            Ok(0)
        }
    }
}
