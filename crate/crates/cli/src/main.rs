use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pathcycle::invariants::{
    chi_tilde, chromatic_sym, cover_poly, factorial_poly, g_ascent_counts, path_cycle_sym, rook_numbers, xg_t,
};
use pathcycle::structures::{parse_structure, Digraph, Graph, Structure};
use pathcycle::symfunc::json::{bivar_to_json, function_from_json, parse_json, sym2_to_json, sym_to_json, tpoly_to_json, FunctionDoc};
use pathcycle::symfunc::Basis;
use pathcycle::verify::{census_weakly_free_four, run_suite, CheckReport, SuiteConfig};
use pathcycle::{Error, Result};

#[derive(Parser)]
#[command(name = "pathcycle", version, about = "Chromatic and path-cycle symmetric functions")]
struct Cli {
    /// Print a human-readable form instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic symmetric function of a graph (or of the incomparability graph of a poset).
    Xg {
        /// Structure file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, default_value = "m")]
        basis: Basis,
    },
    /// Path-cycle symmetric function of a digraph or poset.
    Xi {
        file: PathBuf,
        #[arg(long, default_value = "m")]
        basis: Basis,
        /// Set the y alphabet to zero.
        #[arg(long)]
        y0: bool,
    },
    /// Cover polynomial C(D; i, j).
    Cover { file: PathBuf },
    /// Rook numbers and the factorial rook polynomial of a board.
    Rook { file: PathBuf },
    /// X_G(t) in the p basis.
    Xgt { file: PathBuf },
    /// The superfied chromatic polynomial in m, n.
    Chitilde { file: PathBuf },
    /// G-ascent type counts over all permutations.
    Ascent { file: PathBuf },
    /// Re-express a function read as JSON on standard input.
    Expand {
        #[arg(long)]
        basis: Basis,
    },
    /// Run identity checks: `all`, a group name, or a check name.
    Check {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override a check's random sample count, as `name=count`.
        #[arg(long = "samples", value_parser = parse_sample)]
        samples: Vec<(String, usize)>,
        /// Include elapsed milliseconds in each report.
        #[arg(long)]
        timings: bool,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Four-vertex census of weakly (3+1)-free digraphs.
    Census,
}

fn parse_sample(s: &str) -> std::result::Result<(String, usize), String> {
    let (name, n) = s.split_once('=').ok_or("expected name=count")?;
    Ok((name.to_string(), n.parse().map_err(|_| format!("bad count {n:?}"))?))
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Precondition(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    match parse_structure(&read_input(path)?)? {
        Structure::Graph(g) => Ok(g),
        Structure::Tree(t) => Ok(t.graph().clone()),
        Structure::Poset(p) => Ok(p.incomparability_graph()),
        Structure::Digraph(_) => Err(Error::Precondition("expected a graph, tree or poset, found a digraph".into())),
    }
}

fn read_digraph(path: &PathBuf) -> Result<Digraph> {
    match parse_structure(&read_input(path)?)? {
        Structure::Digraph(d) => Ok(d),
        Structure::Poset(p) => Ok(p.digraph()),
        other => Err(Error::Precondition(format!("expected a digraph or poset, found a {}", other.kind()))),
    }
}

fn emit(pretty: bool, json: Value, text: impl FnOnce() -> Result<String>) -> Result<()> {
    if pretty {
        println!("{}", text()?);
    } else {
        println!("{json}");
    }
    Ok(())
}

fn emit_reports(reports: &[CheckReport], pretty: bool, timings: bool) -> Outcome {
    for r in reports {
        if pretty {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let mut line = format!("{status} {} ({} instances", r.check_name, r.instances_run);
            if timings {
                line.push_str(&format!(", {} ms", r.elapsed.as_millis()));
            }
            println!("{line})");
            for f in &r.failures {
                println!("  instance: {}", f.instance.replace('\n', "; "));
                println!("  expected: {}", f.expected);
                println!("  actual:   {}", f.actual);
            }
        } else {
            println!("{}", r.to_json(timings));
        }
    }
    if reports.iter().all(CheckReport::passed) {
        Outcome::Ok
    } else {
        Outcome::ChecksFailed
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Xg { file, basis } => {
            let x = chromatic_sym(&read_graph(&file)?)?;
            emit(pretty, sym_to_json(&x, basis)?, || x.pretty(basis))?;
        }
        Command::Xi { file, basis, y0 } => {
            let x = path_cycle_sym(&read_digraph(&file)?)?;
            if y0 {
                let x = x.restrict_y0();
                emit(pretty, sym_to_json(&x, basis)?, || x.pretty(basis))?;
            } else {
                emit(pretty, sym2_to_json(&x, basis)?, || x.pretty(basis))?;
            }
        }
        Command::Cover { file } => {
            let c = cover_poly(&read_digraph(&file)?)?;
            emit(pretty, bivar_to_json(&c), || Ok(c.to_string()))?;
        }
        Command::Rook { file } => {
            let d = read_digraph(&file)?;
            let r = rook_numbers(&d);
            let poly = factorial_poly(&d);
            let j = json!({"rook_numbers": r, "factorial_polynomial": bivar_to_json(&poly)});
            emit(pretty, j, || Ok(format!("r = {r:?}\nR = {poly}")))?;
        }
        Command::Xgt { file } => {
            let t = xg_t(&read_graph(&file)?)?;
            emit(pretty, tpoly_to_json(&t), || Ok(t.to_string()))?;
        }
        Command::Chitilde { file } => {
            let c = chi_tilde(&read_graph(&file)?)?;
            emit(pretty, bivar_to_json(&c), || Ok(c.to_string()))?;
        }
        Command::Ascent { file } => {
            let counts = g_ascent_counts(&read_graph(&file)?);
            let rows: Vec<Value> =
                counts.iter().map(|(lam, n)| json!({"partition": lam.parts(), "count": n})).collect();
            emit(pretty, json!({ "counts": rows }), || {
                Ok(counts.iter().map(|(lam, n)| format!("{lam}: {n}")).collect::<Vec<_>>().join("\n"))
            })?;
        }
        Command::Expand { basis } => {
            let doc = function_from_json(&parse_json(&read_input(&PathBuf::from("-"))?)?)?;
            match doc {
                FunctionDoc::One(g) => emit(pretty, sym_to_json(&g, basis)?, || g.pretty(basis))?,
                FunctionDoc::Two(g) => emit(pretty, sym2_to_json(&g, basis)?, || g.pretty(basis))?,
            }
        }
        Command::Check { suite, max_vertices, seed, samples, timings, list } => {
            if list {
                for name in pathcycle::verify::check_names() {
                    println!("{name}");
                }
                return Ok(Outcome::Ok);
            }
            let mut config = SuiteConfig::new(max_vertices, seed);
            config.sample_counts = samples.into_iter().collect::<BTreeMap<_, _>>();
            let reports = run_suite(&suite, &config)?;
            return Ok(emit_reports(&reports, pretty, timings));
        }
        Command::Census => {
            let census = census_weakly_free_four()?;
            for class in &census.classes {
                if pretty {
                    println!("class: {}", class.representative_text().trim_end().replace('\n', "; "));
                    println!("  e: {}", expansion_text("e", &class.e_expansion));
                    println!("  s: {}", expansion_text("s", &class.s_expansion));
                    println!("  e-positive: {}", class.e_positive);
                } else {
                    println!(
                        "{}",
                        json!({
                            "representative": class.representative_text(),
                            "e_expansion": expansion_json(&class.e_expansion),
                            "s_expansion": expansion_json(&class.s_expansion),
                            "e_positive": class.e_positive,
                        })
                    );
                }
            }
            return Ok(emit_reports(std::slice::from_ref(&census.report), pretty, false));
        }
    }
    Ok(Outcome::Ok)
}

fn expansion_json(m: &BTreeMap<pathcycle::combinatorics::IntegerPartition, pathcycle::Rational>) -> Value {
    Value::Array(
        m.iter()
            .map(|(lam, c)| json!({"partition": lam.parts(), "coefficient": pathcycle::symfunc::fmt_rational(c)}))
            .collect(),
    )
}

fn expansion_text(
    basis: &str,
    m: &BTreeMap<pathcycle::combinatorics::IntegerPartition, pathcycle::Rational>,
) -> String {
    m.iter()
        .map(|(lam, c)| format!("{}*{basis}{lam}", pathcycle::symfunc::fmt_rational(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
