//! `tempreach`: command-line access to temporal reachability tools.
//!
//! Graphs are read from a file or, when the path is omitted or `-`, from
//! standard input, so commands compose in pipelines. Exit codes: 0 success,
//! 1 an asserted property is false, 2 malformed or unsuitable input, 3 a
//! search guard was exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tempreach_core::analysis::{
    clique_to_component_instance, max_clique, max_temporal_component, min_spanner, ComponentMode, SpannerMode,
};
use tempreach_core::expressivity::{realize, verify_separation, SeparationCase};
use tempreach_core::fixtures::{get_fixture, list_fixtures};
use tempreach_core::io::{closure_to_dot, parse_static_graph, parse_temporal_graph, to_json};
use tempreach_core::reachability::{closure, is_temporally_connected, ReachabilityGraph};
use tempreach_core::transforms::{dilate, saturate, semaphore};
use tempreach_core::{Error, SettingClass, Strictness, TemporalGraph};

#[derive(Parser)]
#[command(name = "tempreach", version, about = "Reachability tools for temporal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural class and temporal connectivity of a graph.
    Check {
        input: Option<PathBuf>,
        /// Exit with status 1 unless this property holds.
        #[arg(long, value_enum)]
        assert: Option<Property>,
    },
    /// Print the reachability graph.
    Closure {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        strictness: StrictnessArg,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        /// In DOT output, draw mutually reachable pairs as one two-way edge.
        #[arg(long, requires = "dot")]
        mutual_as_edge: bool,
    },
    /// Apply a reachability-preserving transformation.
    Transform {
        #[arg(value_enum)]
        kind: TransformArg,
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Size of a minimum temporal spanner.
    Spanner {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        strictness: StrictnessArg,
        #[arg(long, value_enum)]
        mode: SpannerArg,
        /// Print the size together with a witness spanner as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Size of a maximum temporal component.
    Component {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        strictness: StrictnessArg,
        #[arg(long, value_enum)]
        mode: ComponentArg,
        /// Print the size together with the component's vertices as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Turn a clique instance (static graph) into a happy temporal graph
    /// whose maximum component has size 2m + k.
    ReduceClique {
        input: Option<PathBuf>,
        /// Write the graph here and the metadata next to it as
        /// `<output>.meta.json`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Clique size for the target value; defaults to the clique number.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Search a setting for a graph with the given reachability graph.
    Realize {
        input: Option<PathBuf>,
        #[arg(long)]
        setting: SettingClass,
        /// Exit with status 1 when no witness exists.
        #[arg(long)]
        assert: bool,
    },
    /// Check the four separating reachability graphs; one JSON line each.
    VerifySeparations,
    /// Built-in reference graphs.
    Fixture {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    /// List fixture names.
    List,
    /// Print a fixture graph, or its stored reachability graph.
    Get {
        name: String,
        #[arg(long, value_enum)]
        closure: Option<StrictnessArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Proper,
    Simple,
    Happy,
    TcStrict,
    TcNonstrict,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrictnessArg {
    Strict,
    #[value(alias = "non-strict")]
    Nonstrict,
}

impl From<StrictnessArg> for Strictness {
    fn from(s: StrictnessArg) -> Self {
        match s {
            StrictnessArg::Strict => Strictness::Strict,
            StrictnessArg::Nonstrict => Strictness::NonStrict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformArg {
    Dilate,
    Saturate,
    Semaphore,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpannerArg {
    Contacts,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    Open,
    Closed,
}

enum Failure {
    Asserted(String),
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Asserted(_) => 1,
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Asserted(m) | Failure::Input(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<TemporalGraph, Failure> {
    Ok(parse_temporal_graph(&read_input(path)?)?)
}

/// Accepts a bare reachability graph or any object holding one under
/// `"target"` (such as a separation certificate).
fn read_target(path: Option<&Path>) -> Result<ReachabilityGraph, Failure> {
    let mut value: Value = serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    if let Some(inner) = value.get_mut("target") {
        value = inner.take();
    }
    serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))
}

fn emit(out: &mut impl Write, text: &str) -> Outcome {
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_or_print(out: &mut impl Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => emit(out, text),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Check { input, assert } => {
            let g = read_graph(input.as_deref())?;
            let tc_strict = is_temporally_connected(&g, Strictness::Strict);
            let tc_nonstrict = is_temporally_connected(&g, Strictness::NonStrict);
            let report = json!({
                "happy": g.is_happy(),
                "proper": g.is_proper(),
                "simple": g.is_simple(),
                "tc-nonstrict": tc_nonstrict,
                "tc-strict": tc_strict,
            });
            emit(out, &report.to_string())?;
            let verdict = match assert {
                None => return Ok(()),
                Some(Property::Proper) => ("proper", g.is_proper()),
                Some(Property::Simple) => ("simple", g.is_simple()),
                Some(Property::Happy) => ("happy", g.is_happy()),
                Some(Property::TcStrict) => ("tc-strict", tc_strict),
                Some(Property::TcNonstrict) => ("tc-nonstrict", tc_nonstrict),
            };
            match verdict {
                (_, true) => Ok(()),
                (name, false) => Err(Failure::Asserted(format!("graph is not {name}"))),
            }
        }
        Command::Closure {
            input,
            strictness,
            dot,
            mutual_as_edge,
        } => {
            let g = read_graph(input.as_deref())?;
            let c = closure(&g, strictness.into());
            if dot {
                write!(out, "{}", closure_to_dot(&c, g.names(), mutual_as_edge))?;
                Ok(())
            } else {
                emit(out, &to_json(&c))
            }
        }
        Command::Transform { kind, input, output } => {
            let g = read_graph(input.as_deref())?;
            let report = match kind {
                TransformArg::Dilate => dilate(&g),
                TransformArg::Saturate => saturate(&g),
                TransformArg::Semaphore => semaphore(&g),
            };
            write_or_print(out, output.as_deref(), &to_json(&report))
        }
        Command::Spanner {
            input,
            strictness,
            mode,
            witness,
        } => {
            let g = read_graph(input.as_deref())?;
            let mode = match mode {
                SpannerArg::Contacts => SpannerMode::Contacts,
                SpannerArg::Edges => SpannerMode::Edges,
            };
            let r = min_spanner(&g, strictness.into(), mode)?;
            if witness {
                let doc = json!({ "size": r.size, "witness": serde_json::to_value(&r.witness).unwrap() });
                emit(out, &doc.to_string())
            } else {
                emit(out, &r.size.to_string())
            }
        }
        Command::Component {
            input,
            strictness,
            mode,
            witness,
        } => {
            let g = read_graph(input.as_deref())?;
            let mode = match mode {
                ComponentArg::Open => ComponentMode::Open,
                ComponentArg::Closed => ComponentMode::Closed,
            };
            let c = max_temporal_component(&g, strictness.into(), mode)?;
            if witness {
                emit(out, &json!({ "size": c.size, "vertices": c.vertices }).to_string())
            } else {
                emit(out, &c.size.to_string())
            }
        }
        Command::ReduceClique { input, output, k } => {
            let f = parse_static_graph(&read_input(input.as_deref())?)?;
            let inst = clique_to_component_instance(&f)?;
            let k = match k {
                Some(k) => k,
                None => max_clique(&f)?,
            };
            let meta = json!({
                "auxiliaries": inst.auxiliaries,
                "k": k,
                "m": inst.m,
                "originals": inst.originals,
                "target": inst.target(k),
            });
            match output {
                Some(path) => {
                    write_or_print(out, Some(&path), &to_json(&inst.graph))?;
                    let mut sidecar = path.into_os_string();
                    sidecar.push(".meta.json");
                    write_or_print(out, Some(Path::new(&sidecar)), &meta.to_string())
                }
                None => {
                    let doc = json!({ "graph": serde_json::to_value(&inst.graph).unwrap(), "meta": meta });
                    emit(out, &doc.to_string())
                }
            }
        }
        Command::Realize { input, setting, assert } => {
            let target = read_target(input.as_deref())?;
            match realize(&target, setting)? {
                Some(w) => emit(out, &to_json(&w)),
                None => {
                    emit(out, "null")?;
                    if assert {
                        Err(Failure::Asserted(format!("no {setting} graph realizes the target")))
                    } else {
                        Ok(())
                    }
                }
            }
        }
        Command::VerifySeparations => {
            let mut broken = Vec::new();
            for case in SeparationCase::all() {
                let cert = verify_separation(&case)?;
                let line = json!({
                    "case": cert.case,
                    "scanned": cert.scanned,
                    "setting": cert.setting,
                    "target": serde_json::to_value(&cert.target).unwrap(),
                    "witness": serde_json::to_value(&cert.witness).unwrap(),
                });
                emit(out, &line.to_string())?;
                if !cert.holds() {
                    broken.push(cert.case.to_string());
                }
            }
            if broken.is_empty() {
                Ok(())
            } else {
                Err(Failure::Asserted(format!("witness found for {}", broken.join(", "))))
            }
        }
        Command::Fixture { action } => match action {
            FixtureAction::List => {
                for name in list_fixtures() {
                    emit(out, name)?;
                }
                Ok(())
            }
            FixtureAction::Get { name, closure } => {
                let f = get_fixture(&name)?;
                match closure {
                    Some(s) => emit(out, &to_json(f.expected(s.into()))),
                    None => emit(out, &to_json(&f.graph)),
                }
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("tempreach: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
