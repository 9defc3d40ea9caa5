use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orthoimp::arrows::{arrow_table, imp, ArrowKind};
use orthoimp::document::{parse, serialize};
use orthoimp::dot::export_dot;
use orthoimp::enumerate::Generator;
use orthoimp::fixtures::{fixture, NAMES};
use orthoimp::order::Element;
use orthoimp::ortho::{Class, OrthoPoset};
use orthoimp::suite::{theorem_suite, Verdict};
use orthoimp::sweep::sweep;
use orthoimp::verify::{adjoint_exists, check_mpo, check_op, CheckResult};

#[derive(Parser)]
#[command(name = "orthoimp", version, about = "Quantum implications on finite involutive posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification of a structure.
    Check {
        file: PathBuf,
        /// Fail unless these classes hold.
        #[arg(long = "assert", value_name = "CLASS", num_args = 1..)]
        assert: Vec<Class>,
    },
    /// Print implication values.
    Imp {
        file: PathBuf,
        #[arg(long)]
        arrow: ArrowKind,
        /// Two element names (or indices).
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Run the theorem suite.
    Verify { file: PathBuf },
    /// Check modus ponens.
    Mpo {
        file: PathBuf,
        #[arg(long)]
        arrow: ArrowKind,
    },
    /// Check the order property in both directions.
    Op {
        file: PathBuf,
        #[arg(long)]
        arrow: ArrowKind,
    },
    /// Decide whether an adjoint operator exists.
    Adjoint {
        file: PathBuf,
        #[arg(long)]
        arrow: ArrowKind,
    },
    /// Emit one document per isomorphism class.
    Enumerate {
        #[arg(long = "max-size")]
        max_size: usize,
        #[arg(long)]
        class: Option<Class>,
        /// Write `<name>.json` files here instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem suite over every structure up to a size.
    Sweep {
        #[arg(long = "max-size")]
        max_size: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the Hasse diagram in DOT.
    ExportDot { file: PathBuf },
    /// Print a built-in fixture as a document.
    Fixture {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(NAMES))]
        name: String,
    },
}

enum Failure {
    Check,
    Input(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<(String, OrthoPoset), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn element(q: &OrthoPoset, s: &str) -> Result<Element, Failure> {
    if let Some(x) = q.poset().index_of(s) {
        return Ok(x);
    }
    match s.parse::<usize>() {
        Ok(x) if x < q.len() => Ok(x),
        _ => Err(Failure::Input(format!("no element named `{s}`"))),
    }
}

fn names(q: &OrthoPoset, xs: &[Element]) -> String {
    xs.iter().map(|&x| q.name(x)).collect::<Vec<_>>().join(", ")
}

fn report_check(out: &mut impl Write, q: &OrthoPoset, r: &CheckResult) -> Outcome {
    writeln!(out, "{r}")?;
    if let Some(w) = &r.witness {
        writeln!(out, "witness: ({})", names(q, w))?;
    }
    if r.holds {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn arrow_error(q: &OrthoPoset) -> impl Fn(orthoimp::OrderError) -> Failure + '_ {
    move |e| match e {
        orthoimp::OrderError::MissingJoin { a, b, pair } => {
            let at = pair.map_or(String::new(), |(x, y)| {
                format!(" (evaluating the arrow at ({}, {}))", q.name(x), q.name(y))
            });
            Failure::Input(format!("join of {} and {} does not exist{at}", q.name(a), q.name(b)))
        }
        other => Failure::Input(other.to_string()),
    }
}

fn json_values(q: &OrthoPoset, v: orthoimp::ElementSet) -> serde_json::Value {
    v.iter().map(|x| q.name(x).to_string()).collect::<Vec<_>>().into()
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Check { file, assert } => {
            let (name, q) = load(&file)?;
            writeln!(out, "{name}: {} elements", q.len())?;
            let c = q.classify();
            for class in Class::ALL {
                let r = c.get(class);
                match &r.witness {
                    Some(w) if !r.holds => {
                        writeln!(out, "{:<26} no (witness {})", class.to_string(), names(&q, w))?
                    }
                    _ => writeln!(out, "{:<26} {}", class.to_string(), if r.holds { "yes" } else { "no" })?,
                }
            }
            let failed: Vec<String> = assert
                .iter()
                .filter(|&&k| !c.holds(k))
                .map(|k| k.to_string())
                .collect();
            if failed.is_empty() {
                Ok(())
            } else {
                writeln!(out, "assertion failed: {}", failed.join(", "))?;
                Err(Failure::Check)
            }
        }
        Command::Imp {
            file,
            arrow,
            pair,
            json,
        } => {
            let (_, q) = load(&file)?;
            if let Some(p) = pair {
                let (x, y) = (element(&q, &p[0])?, element(&q, &p[1])?);
                let v = imp(&q, arrow, x, y).map_err(arrow_error(&q))?;
                if json {
                    let doc = serde_json::json!({
                        "arrow": arrow.to_string(),
                        "pair": [q.name(x), q.name(y)],
                        "values": json_values(&q, v.values),
                    });
                    writeln!(out, "{doc}")?;
                } else {
                    writeln!(out, "{} ->{arrow} {} = {}", q.name(x), q.name(y), q.show(v.values))?;
                }
            } else {
                let t = arrow_table(&q, arrow).map_err(arrow_error(&q))?;
                if json {
                    let rows: Vec<serde_json::Value> = t
                        .iter()
                        .map(|((x, y), v)| {
                            serde_json::json!({
                                "pair": [q.name(x), q.name(y)],
                                "values": json_values(&q, v),
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({ "arrow": arrow.to_string(), "table": rows });
                    writeln!(out, "{doc}")?;
                } else {
                    for ((x, y), v) in t.iter() {
                        writeln!(out, "{} ->{arrow} {} = {}", q.name(x), q.name(y), q.show(v))?;
                    }
                }
            }
            Ok(())
        }
        Command::Verify { file } => {
            let (name, q) = load(&file)?;
            writeln!(out, "theorem suite for {name}")?;
            let suite = theorem_suite(&q);
            for t in &suite {
                writeln!(out, "{t}")?;
            }
            let bad = suite.iter().filter(|t| t.verdict == Verdict::Discrepant).count();
            writeln!(out, "{} checks, {bad} discrepant", suite.len())?;
            if bad == 0 {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Mpo { file, arrow } => {
            let (_, q) = load(&file)?;
            let r = check_mpo(&q, arrow).map_err(arrow_error(&q))?;
            report_check(out, &q, &r)
        }
        Command::Op { file, arrow } => {
            let (_, q) = load(&file)?;
            let r = check_op(&q, arrow).map_err(arrow_error(&q))?;
            report_check(out, &q, &r)
        }
        Command::Adjoint { file, arrow } => {
            let (_, q) = load(&file)?;
            let a = adjoint_exists(&q, arrow).map_err(arrow_error(&q))?;
            writeln!(out, "{}", a.result)?;
            if let Some(op) = &a.operator {
                for x in 0..q.len() {
                    for y in 0..q.len() {
                        writeln!(out, "{} (.) {} = {}", q.name(x), q.name(y), q.show(op.get(x, y)))?;
                    }
                }
                Ok(())
            } else {
                if let (Some(w), Some(gap)) = (&a.result.witness, a.gap) {
                    writeln!(out, "witness: ({}) gap {}", names(&q, w), q.show(gap))?;
                }
                Err(Failure::Check)
            }
        }
        Command::Enumerate {
            max_size,
            class,
            out: dir,
        } => {
            if max_size < 2 {
                return Err(Failure::Input("--max-size must be at least 2".into()));
            }
            if let Some(d) = &dir {
                fs::create_dir_all(d)?;
            }
            let generator = Generator::new(max_size);
            for n in 2..=max_size {
                for (i, (_, q)) in generator.of_size(n).into_iter().enumerate() {
                    if class.is_some_and(|c| !q.classify().holds(c)) {
                        continue;
                    }
                    let name = format!("n{n}-{}", i + 1);
                    let text = serialize(&q, &name);
                    match &dir {
                        Some(d) => fs::write(d.join(format!("{name}.json")), text)?,
                        None => out.write_all(text.as_bytes())?,
                    }
                }
            }
            Ok(())
        }
        Command::Sweep { max_size, jobs } => {
            if max_size < 2 {
                return Err(Failure::Input("--max-size must be at least 2".into()));
            }
            let r = sweep(max_size, jobs);
            write!(out, "{r}")?;
            if r.is_clean() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::ExportDot { file } => {
            let (name, q) = load(&file)?;
            out.write_all(export_dot(&q, &name).as_bytes())?;
            Ok(())
        }
        Command::Fixture { name } => {
            let f = fixture(&name).map_err(|e| Failure::Input(e.to_string()))?;
            out.write_all(serialize(&f.structure, f.name).as_bytes())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
