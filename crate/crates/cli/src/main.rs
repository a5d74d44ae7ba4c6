//! `dichroma` — exact dichromatic-number solvers for digraphs.
//!
//! Reads ".dg" graphs, ".cwx" clique-width expressions, and ".dce"
//! co-graph expressions; prints "key: value" lines (or one JSON object with
//! `--json`) and writes ".col" witnesses, ".lp" models, and DOT drawings.
//! Exit status: 0 on success, 1 when something is infeasible or invalid,
//! 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use dichroma::cwdp::{DpRun, DEFAULT_SIG_CAP};
use dichroma::expr::{eval_cw, eval_dico, parse_cw, parse_dico};
use dichroma::family::{cactus_color, classify, cograph_clique_number, cograph_dcn};
use dichroma::fileio::{parse_col, parse_dg, to_dot, write_col, write_dg};
use dichroma::ilp::IlpModel;
use dichroma::oracle::{
    brute_force_dcn, gen_random_cactus, gen_random_cw_expr, gen_random_dico_expr,
    gen_random_digraph,
};
use dichroma::{check_acyclic_coloring, is_acyclic, Coloring, ColoringVerdict, Digraph};

#[derive(Parser)]
#[command(name = "dichroma", version, about = "Exact dichromatic-number solvers")]
struct Cli {
    /// Emit the result as one JSON object instead of "key: value" lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a digraph, picking the cheapest applicable method.
    Solve {
        /// Input ".dg" file.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Write a color-annotated DOT drawing here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Solve a directed clique-width expression by signature DP.
    SolveCw {
        /// Input ".cwx" file.
        #[arg(long)]
        expr: PathBuf,
        /// Decide "dichromatic number <= R" instead of optimizing.
        #[arg(long)]
        r: Option<usize>,
        /// Write the coloring witness here (".col").
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Write every node's signature set in a stable text form.
        #[arg(long = "dump-sigsets")]
        dump_sigsets: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Solve an extended co-graph expression by its recursion.
    SolveCograph {
        /// Input ".dce" file.
        #[arg(long)]
        expr: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Also report the clique number (equal for co-graphs).
        #[arg(long = "clique-number")]
        clique_number: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Solve a directed cactus forest by cycle decomposition.
    SolveCactus {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exhaustive search, feasible for small graphs only.
    Brute {
        #[arg(long)]
        graph: PathBuf,
        /// Give up (exit 1) if no coloring with at most R colors exists.
        #[arg(long = "max-r")]
        max_r: Option<usize>,
    },
    /// Validate a coloring against a digraph.
    Check {
        #[arg(long)]
        graph: PathBuf,
        /// Input ".col" file.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Report structural facts and the bounds they imply.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write the integer program for the graph in CPLEX-LP format.
    ExportIlp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a random instance, reproducible per seed.
    Gen {
        kind: GenKind,
        /// Number of vertices (leaves for expressions).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Number of labels (cw-expr only).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Arc probability (digraph only).
        #[arg(long, default_value_t = 0.5, value_parser = parse_probability)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Digraph,
    Cactus,
    CwExpr,
    DicoExpr,
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("probability {p} is outside [0, 1]"))
    }
}

/// Ordered result fields, printed as "key: value" lines or one JSON object.
struct Report {
    json: bool,
    fields: Vec<(&'static str, Value)>,
}

impl Report {
    fn new(json: bool) -> Report {
        Report {
            json,
            fields: Vec::new(),
        }
    }

    fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    fn print(&self) {
        if self.json {
            let map: serde_json::Map<String, Value> = self
                .fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            println!("{}", Value::Object(map));
        } else {
            for (key, value) in &self.fields {
                match value {
                    Value::String(s) => println!("{key}: {s}"),
                    other => println!("{key}: {other}"),
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut report = Report::new(cli.json);
    let code = match cli.cmd {
        Cmd::Solve {
            graph,
            strategy,
            dot,
        } => cmd_solve(&mut report, &graph, strategy, dot.as_deref())?,
        Cmd::SolveCw {
            expr,
            r,
            witness,
            dump_sigsets,
            dot,
        } => cmd_solve_cw(
            &mut report,
            &expr,
            r,
            witness.as_deref(),
            dump_sigsets.as_deref(),
            dot.as_deref(),
        )?,
        Cmd::SolveCograph {
            expr,
            witness,
            clique_number,
            dot,
        } => cmd_solve_cograph(
            &mut report,
            &expr,
            witness.as_deref(),
            clique_number,
            dot.as_deref(),
        )?,
        Cmd::SolveCactus {
            graph,
            witness,
            dot,
        } => cmd_solve_cactus(&mut report, &graph, witness.as_deref(), dot.as_deref())?,
        Cmd::Brute { graph, max_r } => cmd_brute(&mut report, &graph, max_r)?,
        Cmd::Check { graph, coloring } => cmd_check(&mut report, &graph, &coloring)?,
        Cmd::Classify { graph } => cmd_classify(&mut report, &graph)?,
        Cmd::ExportIlp { graph, out } => cmd_export_ilp(&mut report, &graph, &out)?,
        Cmd::Gen {
            kind,
            n,
            k,
            p,
            seed,
            out,
        } => cmd_gen(&mut report, kind, n as usize, k, p, seed, &out)?,
    };
    report.print();
    Ok(code)
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Digraph> {
    parse_dg(&read_to_string(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn signature_cap() -> Result<usize> {
    match std::env::var("DICHROMA_SIG_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("DICHROMA_SIG_CAP must be an integer, got {s:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SIG_CAP),
        Err(e) => Err(e).context("reading DICHROMA_SIG_CAP"),
    }
}

fn write_witness_files(
    g: &Digraph,
    coloring: &Coloring,
    witness: Option<&Path>,
    dot: Option<&Path>,
) -> Result<()> {
    if let Some(path) = witness {
        write_out(path, &write_col(coloring))?;
    }
    if let Some(path) = dot {
        write_out(path, &to_dot(g, Some(coloring)))?;
    }
    Ok(())
}

fn cmd_solve(
    report: &mut Report,
    graph: &Path,
    strategy: Strategy,
    dot: Option<&Path>,
) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let (method, chi, coloring) = if g.n() == 0 {
        ("empty", 0, Coloring::new(Vec::new()).expect("empty"))
    } else {
        match strategy {
            Strategy::Auto => {
                if is_acyclic(&g) {
                    ("dag", 1, Coloring::new(vec![1; g.n()]).expect("monochrome"))
                } else if let Ok((chi, w)) = cactus_color(&g) {
                    ("cactus", chi, w)
                } else {
                    brute_with_warning(&g)?
                }
            }
            Strategy::Brute => brute_with_warning(&g)?,
        }
    };
    report.push("dichromatic_number", chi);
    report.push("strategy", method);
    write_witness_files(&g, &coloring, None, dot)?;
    Ok(ExitCode::SUCCESS)
}

fn brute_with_warning(g: &Digraph) -> Result<(&'static str, usize, Coloring)> {
    if g.n() > 12 {
        eprintln!(
            "warning: brute-force search on {} vertices; this may take very long",
            g.n()
        );
    }
    let (chi, w) = brute_force_dcn(g, None)?;
    Ok(("brute", chi, w))
}

fn cmd_solve_cw(
    report: &mut Report,
    expr: &Path,
    r: Option<usize>,
    witness: Option<&Path>,
    dump_sigsets: Option<&Path>,
    dot: Option<&Path>,
) -> Result<ExitCode> {
    let e = parse_cw(&read_to_string(expr)?)
        .with_context(|| format!("parsing {}", expr.display()))?;
    let run = DpRun::new(&e, signature_cap()?)?;
    if let Some(path) = dump_sigsets {
        write_out(path, &run.dump_sigsets())?;
    }
    let graph = eval_cw(&e).graph.graph;
    match r {
        None => {
            let chi = run.dichromatic_number();
            report.push("dichromatic_number", chi);
            write_witness_files(&graph, &run.witness(), witness, dot)?;
            Ok(ExitCode::SUCCESS)
        }
        Some(r) => {
            let feasible = run.decide(r);
            report.push("r", r);
            report.push("feasible", feasible);
            if feasible {
                write_witness_files(&graph, &run.witness(), witness, dot)?;
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn cmd_solve_cograph(
    report: &mut Report,
    expr: &Path,
    witness: Option<&Path>,
    clique_number: bool,
    dot: Option<&Path>,
) -> Result<ExitCode> {
    let e = parse_dico(&read_to_string(expr)?)
        .with_context(|| format!("parsing {}", expr.display()))?;
    let (chi, coloring) = cograph_dcn(&e);
    report.push("dichromatic_number", chi);
    if clique_number {
        report.push("clique_number", cograph_clique_number(&e));
    }
    write_witness_files(&eval_dico(&e).graph, &coloring, witness, dot)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve_cactus(
    report: &mut Report,
    graph: &Path,
    witness: Option<&Path>,
    dot: Option<&Path>,
) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    if g.n() == 0 {
        report.push("dichromatic_number", 0);
        return Ok(ExitCode::SUCCESS);
    }
    let (chi, coloring) = cactus_color(&g)?;
    report.push("dichromatic_number", chi);
    write_witness_files(&g, &coloring, witness, dot)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_brute(report: &mut Report, graph: &Path, max_r: Option<usize>) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let (chi, _) = brute_force_dcn(&g, max_r)?;
    report.push("dichromatic_number", chi);
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(report: &mut Report, graph: &Path, coloring: &Path) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let c = parse_col(&read_to_string(coloring)?, g.n())
        .with_context(|| format!("parsing {}", coloring.display()))?;
    match check_acyclic_coloring(&g, &c)? {
        ColoringVerdict::Valid => {
            report.push("valid", true);
            report.push("colors", c.num_colors());
            Ok(ExitCode::SUCCESS)
        }
        ColoringVerdict::Invalid { color, cycle, .. } => {
            report.push("valid", false);
            report.push("color", color);
            report.push("cycle", cycle);
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_classify(report: &mut Report, graph: &Path) -> Result<ExitCode> {
    let r = classify(&read_graph(graph)?);
    report.push("n", r.n);
    report.push("m", r.m);
    report.push("is_dag", r.is_dag);
    report.push("is_symmetric", r.is_symmetric);
    report.push("is_cactus_forest", r.is_cactus_forest);
    report.push("chi_lower", r.chi_lower);
    report.push("chi_upper", r.chi_upper);
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_ilp(report: &mut Report, graph: &Path, out: &Path) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    if g.n() == 0 {
        bail!("the integer program needs at least one vertex");
    }
    let model = IlpModel::new(&g);
    write_out(out, &model.to_lp_text())?;
    report.push("out", out.display().to_string());
    report.push("binary_variables", model.num_binary_vars());
    report.push("integer_variables", model.num_general_vars());
    report.push(
        "rows",
        model.num_assignment_rows() + model.num_linking_rows() + model.num_ordering_rows(),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(
    report: &mut Report,
    kind: GenKind,
    n: usize,
    k: u32,
    p: f64,
    seed: u64,
    out: &Path,
) -> Result<ExitCode> {
    let text = match kind {
        GenKind::Digraph => write_dg(&gen_random_digraph(n, p, seed)),
        GenKind::Cactus => write_dg(&gen_random_cactus(n, seed)),
        GenKind::CwExpr => gen_random_cw_expr(k, n, seed).to_text(),
        GenKind::DicoExpr => gen_random_dico_expr(n, seed).to_text(),
    };
    write_out(out, &text)?;
    report.push("out", out.display().to_string());
    report.push("seed", seed);
    Ok(ExitCode::SUCCESS)
}
