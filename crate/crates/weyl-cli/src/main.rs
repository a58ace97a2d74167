use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylgroupoid::catalog::{self, Catalog, CatalogEntry, CatalogError};
use weylgroupoid::coxeter::{self, CoxeterSystem};
use weylgroupoid::groupoid::{self, Caps, CayleyGraph};
use weylgroupoid::hamilton::{self, CircuitFile, FindOptions, Method, Require, Strategy, WalkError};
use weylgroupoid::Exec;

#[derive(Parser)]
#[command(name = "weyl", version, about = "Weyl groupoids of bicharacters and Hamilton circuits of their Cayley graphs")]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Extra catalog file (repeatable); WEYL_CATALOG_PATH is also read.
    #[arg(long = "catalog", global = true)]
    catalogs: Vec<PathBuf>,
    /// Vertex cap for groupoid enumeration.
    #[arg(long, global = true, default_value_t = groupoid::DEFAULT_VERTEX_CAP)]
    max_vertices: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog entries and aliases.
    List,
    /// Rank, object count, vertex count, positive roots, Cartan type.
    Info { entry: String },
    /// Export the Cayley graph (JSON by default).
    Graph {
        entry: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Positive roots at every object.
    Roots { entry: String },
    /// Cartan scheme and root system axioms.
    Axioms {
        entry: String,
        #[arg(long)]
        sequential: bool,
    },
    /// Construct a Hamilton circuit.
    Hamilton {
        entry: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// `special`, `convenient:i` (1-based), or `special,convenient:i`.
        #[arg(long)]
        require: Option<String>,
        #[arg(long, default_value_t = hamilton::DEFAULT_BUDGET)]
        budget: u64,
        /// Run the backtracking search on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit file against an entry.
    Verify { entry: String, circuit: PathBuf },
    /// Finite Coxeter group by type (`B3`, `I2:7`, `A2xA1`) or matrix file.
    Coxeter {
        system: String,
        #[arg(long)]
        circuit: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Csw,
    Splice,
    Backtrack,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            kind,
            message: message.to_string(),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        let kind = match e {
            CatalogError::Parse { .. } => "ParseError",
            CatalogError::DuplicateName(_) => "DuplicateName",
            CatalogError::UnknownEntry(_) => "UnknownEntry",
            CatalogError::BadRank(_) => "BadRank",
            CatalogError::BadAssignment(_) => "BadAssignment",
            CatalogError::Io { .. } => "Io",
            CatalogError::Bichar(_) => "Bicharacter",
        };
        Failure::new(kind, e)
    }
}

impl From<groupoid::GroupoidError> for Failure {
    fn from(e: groupoid::GroupoidError) -> Self {
        let kind = match e {
            groupoid::GroupoidError::CapExceeded { .. } => "CapExceeded",
            groupoid::GroupoidError::Bichar(_) => "InfiniteType",
            groupoid::GroupoidError::TargetMismatch { .. } => "TargetMismatch",
        };
        Failure::new(kind, e)
    }
}

impl From<WalkError> for Failure {
    fn from(e: WalkError) -> Self {
        let kind = match e {
            WalkError::LengthMismatch { .. } => "LengthMismatch",
            WalkError::BadStep { .. } => "BadStep",
            WalkError::Revisit { .. } => "Revisit",
            WalkError::NotClosed => "NotClosed",
            WalkError::BaseMismatch => "BaseMismatch",
            WalkError::UnknownStart => "UnknownStart",
        };
        Failure::new(kind, e)
    }
}

/// Text and JSON renderings of one result; `ok` decides the exit code.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn catalog(cli: &Cli) -> Result<Catalog, Failure> {
    let mut c = Catalog::from_env()?;
    for path in &cli.catalogs {
        for e in catalog::load_entries(path)? {
            c.add(e)?;
        }
    }
    Ok(c)
}

/// An entry name, or a catalog file whose first entry is used.
fn resolve(cli: &Cli, entry: &str) -> Result<CatalogEntry, Failure> {
    let path = Path::new(entry);
    if path.is_file() {
        return catalog::load_entries(path)?
            .into_iter()
            .next()
            .ok_or_else(|| Failure::new("UnknownEntry", format!("{entry} has no entries")));
    }
    Ok(catalog(cli)?.get(entry)?)
}

fn graph_of(cli: &Cli, e: &CatalogEntry) -> Result<CayleyGraph, Failure> {
    let caps = Caps {
        vertices: cli.max_vertices,
        ..Caps::default()
    };
    Ok(groupoid::enumerate(&e.chi, caps)?)
}

fn parse_require(text: Option<&str>) -> Result<Require, Failure> {
    let bad = || {
        Failure::new(
            "BadArgument",
            format!("--require expects `special`, `convenient:i` or both comma-separated, got `{}`", text.unwrap_or("")),
        )
    };
    let Some(text) = text else {
        return Ok(Require::None);
    };
    let (mut special, mut convenient) = (false, None);
    for part in text.split(',') {
        match part.trim() {
            "special" => special = true,
            p => {
                let i: usize = p.strip_prefix("convenient:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                convenient = Some(i - 1);
            }
        }
    }
    Ok(match (special, convenient) {
        (true, Some(i)) => Require::SpecialConvenient(i),
        (true, None) => Require::Special,
        (false, Some(i)) => Require::Convenient(i),
        (false, None) => Require::None,
    })
}

fn word_text(word: &[usize]) -> String {
    word.iter().map(|j| format!("s_{}", j + 1)).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::List => {
            let c = catalog(cli)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in c.entries() {
                text.push_str(&format!("{e}\n"));
                rows.push(json!({"name": e.name, "aliases": e.aliases, "rank": e.chi.rank()}));
            }
            Ok(Output {
                text,
                json: json!({ "entries": rows }),
                ok: true,
            })
        }
        Command::Info { entry } => {
            let e = resolve(cli, entry)?;
            let g = graph_of(cli, &e)?;
            let positive = g.roots(0)?.positive.len();
            let label = e.chi.cartan_label();
            let text = format!(
                "entry: {}\nrank: {}\nobjects: {}\nvertices: {}\npositive roots: {}\ncartan type: {}\n",
                e.name,
                g.rank(),
                g.object_count(),
                g.vertex_count(),
                positive,
                label.as_deref().unwrap_or("no"),
            );
            Ok(Output {
                text,
                json: json!({
                    "entry": e.name,
                    "rank": g.rank(),
                    "objects": g.object_count(),
                    "vertices": g.vertex_count(),
                    "positive_roots": positive,
                    "cartan_type": label.is_some(),
                    "cartan_label": label,
                }),
                ok: true,
            })
        }
        Command::Graph { entry, dot, out } => {
            let e = resolve(cli, entry)?;
            let g = graph_of(cli, &e)?;
            let body = if *dot { g.to_dot() } else { g.to_json() };
            if let Some(path) = out {
                std::fs::write(path, &body).map_err(|err| Failure::new("Io", err))?;
                return Ok(Output {
                    text: format!("wrote {}\n", path.display()),
                    json: json!({"written": path.display().to_string()}),
                    ok: true,
                });
            }
            let json = if *dot {
                json!({ "dot": body })
            } else {
                serde_json::from_str(&body).map_err(|err| Failure::new("Internal", err))?
            };
            Ok(Output {
                text: body,
                json,
                ok: true,
            })
        }
        Command::Roots { entry } => {
            let e = resolve(cli, entry)?;
            let g = graph_of(cli, &e)?;
            let mut text = String::new();
            let mut objs = Vec::new();
            for a in 0..g.object_count() {
                let r = g.roots(a)?;
                let key = &g.objects().keys()[a];
                text.push_str(&format!("object {} {}\n", a, key.describe(g.params())));
                for root in &r.positive {
                    let s: Vec<String> = root.iter().map(|c| c.to_string()).collect();
                    text.push_str(&format!("  ({})\n", s.join(", ")));
                }
                objs.push(json!({"object": a, "key": key.describe(g.params()), "positive": r.positive}));
            }
            Ok(Output {
                text,
                json: json!({ "objects": objs }),
                ok: true,
            })
        }
        Command::Axioms { entry, sequential } => {
            let e = resolve(cli, entry)?;
            let g = graph_of(cli, &e)?;
            let exec = if *sequential { Exec::Sequential } else { Exec::Parallel };
            let report = g.verify_axioms(exec);
            let mut text = format!("{} checks, {} failures\n", report.checks, report.failures.len());
            for f in &report.failures {
                text.push_str(&format!("  {:?} at {:?}: {}\n", f.axiom, f.object, f.detail));
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&report).map_err(|err| Failure::new("Internal", err))?,
                ok: report.passed(),
            })
        }
        Command::Hamilton {
            entry,
            method,
            require,
            budget,
            sequential,
            out,
        } => {
            let e = resolve(cli, entry)?;
            let opts = FindOptions {
                strategy: match method {
                    MethodArg::Auto => Strategy::Auto,
                    MethodArg::Csw => Strategy::Csw,
                    MethodArg::Splice => Strategy::Splice,
                    MethodArg::Backtrack => Strategy::Backtrack,
                },
                require: parse_require(require.as_deref())?,
                budget: *budget,
                exec: if *sequential { Exec::Sequential } else { Exec::Parallel },
                caps: Caps {
                    vertices: cli.max_vertices,
                    ..Caps::default()
                },
                ..FindOptions::default()
            };
            let (g, circuit, report) = match hamilton::find_circuit(&e.chi, &opts) {
                Ok(found) => found,
                Err(hamilton::FindError::Groupoid(err)) => return Err(err.into()),
                Err(err) => return Err(Failure::new("NotFound", err)),
            };
            // never print a circuit the verifier rejects
            let check = hamilton::verify(&g, &circuit, report.method)?;
            if !check.valid {
                return Err(Failure::new("Internal", "constructed circuit failed verification"));
            }
            let file = CircuitFile::from_circuit(Some(e.name.clone()), &g, &circuit);
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&file).map_err(|err| Failure::new("Internal", err))?;
                std::fs::write(path, body + "\n").map_err(|err| Failure::new("Io", err))?;
            }
            let conv: Vec<usize> = report.convenient.iter().map(|i| i + 1).collect();
            let text = format!(
                "method: {}\nlength: {}\nspecial: {}\nconvenient: {:?}\ncircuit: {}\n",
                report.method,
                report.length,
                report.special,
                conv,
                word_text(&circuit.word),
            );
            Ok(Output {
                text,
                json: json!({
                    "entry": e.name,
                    "method": report.method,
                    "length": report.length,
                    "valid": report.valid,
                    "special": report.special,
                    "convenient": conv,
                    "word": file.word,
                }),
                ok: true,
            })
        }
        Command::Verify { entry, circuit } => {
            let e = resolve(cli, entry)?;
            let g = graph_of(cli, &e)?;
            let body = std::fs::read_to_string(circuit).map_err(|err| Failure::new("Io", err))?;
            let file: CircuitFile = serde_json::from_str(&body).map_err(|err| Failure::new("ParseError", err))?;
            let c = file.to_circuit(&g).map_err(|m| Failure::new("ParseError", m))?;
            let report = hamilton::verify(&g, &c, Method::File)?;
            let conv: Vec<usize> = report.convenient.iter().map(|i| i + 1).collect();
            let text = format!(
                "valid: {}\nlength: {}\nspecial: {}\nconvenient: {:?}\n",
                report.valid, report.length, report.special, conv
            );
            Ok(Output {
                text,
                json: json!({
                    "valid": report.valid,
                    "length": report.length,
                    "special": report.special,
                    "convenient": conv,
                }),
                ok: report.valid,
            })
        }
        Command::Coxeter { system, circuit } => {
            let path = Path::new(system);
            let cs = if path.is_file() {
                let text = std::fs::read_to_string(path).map_err(|err| Failure::new("Io", err))?;
                CoxeterSystem::parse_matrix(&text)
            } else {
                CoxeterSystem::from_type(system)
            }
            .map_err(|err| Failure::new("Coxeter", err))?;
            let label = cs.label();
            let order = cs.group_order();
            let mut text = format!(
                "type: {}\norder: {}\n",
                label.as_deref().unwrap_or("infinite"),
                order.map_or("infinite".to_string(), |o| o.to_string())
            );
            let mut out = json!({"type": label, "rank": cs.rank(), "order": order.map(|o| o as u64)});
            let mut ok = true;
            if *circuit {
                let word = coxeter::csw_circuit(&cs).map_err(|err| Failure::new("Coxeter", err))?;
                let g = coxeter::enumerate_group(&cs, coxeter::DEFAULT_GROUP_CAP).map_err(|err| Failure::new("Coxeter", err))?;
                let report = hamilton::report(&g, 0, &word, Method::Csw);
                ok = report.valid;
                text.push_str(&format!("length: {}\nvalid: {}\ncircuit: {}\n", word.len(), report.valid, word_text(&word)));
                out["length"] = json!(word.len());
                out["valid"] = json!(report.valid);
                out["word"] = json!(word.iter().map(|j| j + 1).collect::<Vec<_>>());
            }
            Ok(Output { text, json: out, ok })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(f) => {
            if cli.json {
                println!("{}", json!({"error": {"kind": f.kind, "message": f.message}}));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::FAILURE
        }
    }
}
