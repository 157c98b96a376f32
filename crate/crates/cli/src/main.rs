use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqschubert::qhmodule::suites::Suite;
use eqschubert::qhmodule::{expand_in_basis, render_terms, table_for_pairs, ProductRoute, Report, StructureTable};
use eqschubert::quantize::eq_quantum_schubert;
use eqschubert::{Error, FlagShape, Permutation, Poly};

#[derive(Parser)]
#[command(name = "eqschubert", version, about = "Equivariant quantum Schubert polynomials and structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct ShapeArgs {
    /// Complete flags in C^n.
    #[arg(short = 'n', conflicts_with = "shape")]
    n: Option<u32>,

    /// Partial flag shape, e.g. "1,3;5".
    #[arg(long)]
    shape: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print Sch^q_w(x, t).
    Giambelli {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(short = 'w')]
        w: String,
    },
    /// Expand σ_u ∘ σ_v in QH_T^*(Fl(n)).
    Multiply {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'u')]
        u: String,
        #[arg(short = 'v')]
        v: String,
    },
    /// The full structure table of QH_T^*(Fl(n)).
    Table {
        #[arg(short = 'n')]
        n: u32,
    },
    /// Expand a polynomial in the Sch^q basis of window n.
    Expand {
        #[arg(short = 'n')]
        n: u32,
        /// File holding the polynomial as text or as polynomial JSON.
        #[arg(long)]
        poly: PathBuf,
    },
    /// Run verification suites; all of them when none is named.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Vec<Suite>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(anyhow::Error),
    Compute(anyhow::Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidShape(_)
            | Error::InvalidVariable(_)
            | Error::NotInShape { .. } => Failure::Usage(e.into()),
            other => Failure::Compute(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Compute(e)
    }
}

fn resolve_shape(args: &ShapeArgs) -> Result<FlagShape, Failure> {
    match (&args.shape, args.n) {
        (Some(s), _) => Ok(s.parse()?),
        (None, Some(n)) if n >= 1 => Ok(FlagShape::complete(n)),
        _ => Err(Failure::Usage(anyhow::anyhow!("give either -n or --shape"))),
    }
}

fn perm_in(s: &str, n: u32) -> Result<Permutation, Failure> {
    let w: Permutation = s.parse()?;
    if w.support_window() > n as usize {
        return Err(Failure::Usage(anyhow::anyhow!("{w} does not lie in S_{n}")));
    }
    Ok(w.embed(n as usize))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn giambelli(shape: &ShapeArgs, w: &str, format: Format) -> Result<String, Failure> {
    let shape = resolve_shape(shape)?;
    let w = perm_in(w, shape.n())?;
    let sch = eq_quantum_schubert(&w, &shape)?;
    Ok(match format {
        Format::Text => format!("{}\n", sch.body_x),
        Format::Latex => format!("{}\n", sch.to_latex()),
        Format::Json => {
            pretty(&json!({"w": w.to_string(), "shape": shape.to_string(), "poly": sch.body_x.to_json()})) + "\n"
        }
    })
}

fn product_table(n: u32, pairs: &[(Permutation, Permutation)]) -> Result<StructureTable, Failure> {
    if n < 2 {
        return Err(Failure::Usage(anyhow::anyhow!("products need n >= 2")));
    }
    Ok(table_for_pairs(n, pairs, ProductRoute::default_for(n))?)
}

fn multiply(n: u32, u: &str, v: &str, format: Format) -> Result<String, Failure> {
    let (u, v) = (perm_in(u, n)?, perm_in(v, n)?);
    let table = product_table(n, &[(u.clone(), v.clone())])?;
    Ok(match format {
        Format::Text => format!("{}\n", render_terms(table.product(&u, &v).unwrap_or_default())),
        Format::Latex => table.to_latex(),
        Format::Json => table.to_json_string() + "\n",
    })
}

fn table(n: u32, format: Format) -> Result<String, Failure> {
    let table = if n >= 2 {
        eqschubert::qhmodule::multiplication_table(n)?
    } else {
        return Err(Failure::Usage(anyhow::anyhow!("tables need n >= 2")));
    };
    Ok(match format {
        Format::Text => table.to_text(),
        Format::Latex => table.to_latex(),
        Format::Json => table.to_json_string() + "\n",
    })
}

fn read_poly(path: &PathBuf) -> Result<Poly, Failure> {
    let src = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let trimmed = src.trim();
    if trimmed.starts_with('{') {
        Ok(Poly::from_json_str(trimmed)?)
    } else {
        Ok(trimmed.parse()?)
    }
}

fn expand(n: u32, path: &PathBuf, format: Format) -> Result<String, Failure> {
    let p = read_poly(path)?;
    let combo = expand_in_basis(&p, n)?;
    let mut terms: Vec<(&Permutation, &Poly)> = combo.terms.iter().collect();
    terms.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.values().cmp(b.0.values())));
    Ok(match format {
        Format::Text => format!("{}\n", combo.render(n as usize)),
        Format::Json => {
            let items: Vec<Value> = terms
                .iter()
                .map(|(w, a)| json!({"w": w.embed(n as usize).to_string(), "coeff": a.to_json()}))
                .collect();
            pretty(&json!({"window": n, "terms": items})) + "\n"
        }
        Format::Latex => {
            let items: Vec<String> = terms
                .iter()
                .map(|(w, a)| format!("\\left({}\\right) \\mathfrak{{S}}^q_{{{}}}", a.to_latex(), w.embed(n as usize)))
                .collect();
            format!("{}\n", if items.is_empty() { "0".into() } else { items.join(" + ") })
        }
    })
}

fn verify(suites: &[Suite], format: Format) -> Result<String, Failure> {
    let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites.to_vec() };
    let mut reports: Vec<Report> = Vec::new();
    for s in suites {
        reports.extend(s.run()?);
    }
    let text = match format {
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| json!({"suite": r.suite, "checked": r.checked, "failures": r.failures}))
                .collect();
            pretty(&Value::Array(items)) + "\n"
        }
        _ => reports.iter().map(ToString::to_string).collect(),
    };
    if reports.iter().all(Report::is_clean) {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Giambelli { shape, w } => giambelli(shape, w, cli.format),
        Command::Multiply { n, u, v } => multiply(*n, u, v, cli.format),
        Command::Table { n } => table(*n, cli.format),
        Command::Expand { n, poly } => expand(*n, poly, cli.format),
        Command::Verify { suite } => verify(suite, cli.format),
    };
    match result {
        Ok(text) => match emit(&text, &cli.output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Verification(text)) => {
            if let Err(e) = emit(&text, &cli.output) {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
