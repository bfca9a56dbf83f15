//! `symquandle`: build symplectic quandles, inspect quandle tables and compute
//! coloring invariants of links.
//!
//! Exit status is 0 on success, 1 on invalid input and 2 when a size cap is exceeded.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use symquandle::invariants::summarize;
use symquandle::link::Sign;
use symquandle::symplectic::conjecture_scan;
use symquandle::{Error, GaussCode, QuandleTable, SymplecticSpace, TargetQuandle};

#[derive(Parser)]
#[command(
    name = "symquandle",
    version,
    about = "Symplectic quandles and quandle coloring invariants"
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Accepted for compatibility; output is always deterministic.
    #[arg(long, global = true)]
    seedless_deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quandle tables.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Alternating forms.
    #[command(subcommand)]
    Symplectic(SymplecticCmd),
    /// Gauss codes.
    #[command(subcommand)]
    Link(LinkCmd),
    /// Coloring invariants.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// Searches.
    #[command(subcommand)]
    Scan(ScanCmd),
}

#[derive(Args)]
struct SpaceArgs {
    /// Ring: `Z<n>`, `GF(p^m)` or `GF(p^m)/<modulus in t>`.
    #[arg(long)]
    ring: String,
    /// Dimension of the free module.
    #[arg(long)]
    dim: usize,
    /// Gram matrix rows, e.g. `0,1;-1,0`.
    #[arg(long, allow_hyphen_values = true)]
    gram: String,
}

impl SpaceArgs {
    fn space(&self) -> Result<SymplecticSpace, Failure> {
        Ok(SymplecticSpace::parse(&self.ring, self.dim, &self.gram)?)
    }

    fn describe(&self) -> String {
        format!("{}^{} [{}]", self.ring, self.dim, self.gram)
    }
}

#[derive(Subcommand)]
enum QuandleCmd {
    /// Tabulate the symplectic quandle of a form.
    Build {
        #[command(flatten)]
        space: SpaceArgs,
        /// Write the matrix here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the quandle axioms.
    Check { file: PathBuf },
    /// Quandle polynomial qp(s,t).
    Qpoly { file: PathBuf },
    /// Orbits under the inner automorphism group.
    Orbits { file: PathBuf },
    /// Maximal trivial component and almost-connectedness.
    TrivialComponent { file: PathBuf },
    /// Dual quandle.
    Dual { file: PathBuf },
    /// Disjoint union.
    Union { first: PathBuf, second: PathBuf },
    /// Isomorphism test with a witness.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum SymplecticCmd {
    /// Elements of the degenerate submodule.
    Radical {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Symplectic basis (fields only).
    Reduce {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Isometry test against a second Gram matrix.
    Isometric {
        #[command(flatten)]
        space: SpaceArgs,
        /// Gram matrix of the second form.
        #[arg(long, allow_hyphen_values = true)]
        gram2: String,
    },
}

#[derive(Subcommand)]
enum LinkCmd {
    /// Validate a signed Gauss code and print its presentation.
    Parse {
        #[arg(long, allow_hyphen_values = true)]
        gauss: String,
    },
}

#[derive(Args)]
struct InvariantArgs {
    /// Signed Gauss code; `""` is the unknot.
    #[arg(long, allow_hyphen_values = true)]
    gauss: String,
    /// Target quandle matrix file.
    #[arg(long, conflicts_with_all = ["ring", "dim", "gram"])]
    target_file: Option<PathBuf>,
    #[arg(long, requires_all = ["dim", "gram"])]
    ring: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    gram: Option<String>,
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// Number of colorings.
    Count(InvariantArgs),
    /// Φ_E = Σ q^|Im f|.
    PhiE(InvariantArgs),
    /// Φ_sqp = Σ q^|Im f| z^ρ(f); needs a symplectic target.
    PhiSqp(InvariantArgs),
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Compare quandle isomorphism with isometry for the forms [[0,α],[-α,0]] over Z_n.
    Conjecture {
        /// Moduli range, `a..b` (inclusive).
        #[arg(long)]
        moduli: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

enum Failure {
    Core(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json }
    }
}

fn read_table(path: &Path) -> Result<QuandleTable, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    text.parse::<QuandleTable>().map_err(|e| match e {
        Error::MalformedTable(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        other => Failure::Core(other),
    })
}

/// Loads a table and rejects it unless it satisfies the axioms.
fn read_quandle(path: &Path) -> Result<QuandleTable, Failure> {
    let t = read_table(path)?;
    match t.validate_axioms().violations.first() {
        None => Ok(t),
        Some(v) => Err(Failure::Input(format!(
            "{}: not a quandle, {v}",
            path.display()
        ))),
    }
}

fn table_output(t: &QuandleTable) -> Output {
    Output::new(
        t.to_string(),
        json!({"order": t.order(), "table": t.rows_one_based()}),
    )
}

fn indices(set: &[usize]) -> Vec<usize> {
    set.iter().map(|x| x + 1).collect()
}

fn join(set: &[usize]) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_moduli(text: &str) -> Result<RangeInclusive<u32>, Failure> {
    let bad = || Failure::Input(format!("moduli `{text}`: expected `a..b`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn quandle(cmd: &QuandleCmd) -> Result<Output, Failure> {
    match cmd {
        QuandleCmd::Build { space, output } => {
            let t = space.space()?.build_quandle()?;
            let out = table_output(&t);
            match output {
                Some(path) => {
                    fs::write(path, &out.text)
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    let msg = format!(
                        "wrote {}x{} table to {}\n",
                        t.order(),
                        t.order(),
                        path.display()
                    );
                    Ok(Output::new(
                        msg,
                        json!({"order": t.order(), "path": path.display().to_string()}),
                    ))
                }
                None => Ok(out),
            }
        }
        QuandleCmd::Check { file } => {
            let t = read_table(file)?;
            let report = t.validate_axioms();
            if let Some(v) = report.violations.first() {
                return Err(Failure::Input(format!(
                    "{}: not a quandle, {v}",
                    file.display()
                )));
            }
            Ok(Output::new(
                format!("valid quandle of order {}\n", t.order()),
                json!({"valid": true, "order": t.order()}),
            ))
        }
        QuandleCmd::Qpoly { file } => {
            let p = read_quandle(file)?.quandle_polynomial();
            Ok(Output::new(format!("{p}\n"), p.to_json()))
        }
        QuandleCmd::Orbits { file } => {
            let orbits: Vec<Vec<usize>> = read_quandle(file)?
                .orbits()
                .iter()
                .map(|o| indices(o))
                .collect();
            let text = orbits.iter().map(|o| join(o) + "\n").collect();
            Ok(Output::new(text, json!({"orbits": orbits})))
        }
        QuandleCmd::TrivialComponent { file } => {
            let t = read_quandle(file)?;
            let d = indices(&t.maximal_trivial_component());
            let ac = t.is_almost_connected();
            Ok(Output::new(
                format!("trivial component: {}\nalmost connected: {ac}\n", join(&d)),
                json!({"trivial_component": d, "almost_connected": ac}),
            ))
        }
        QuandleCmd::Dual { file } => Ok(table_output(&read_quandle(file)?.dual())),
        QuandleCmd::Union { first, second } => {
            let t = read_quandle(first)?.disjoint_union(&read_quandle(second)?);
            Ok(table_output(&t))
        }
        QuandleCmd::Iso { first, second } => {
            let (a, b) = (read_quandle(first)?, read_quandle(second)?);
            Ok(match a.is_isomorphic(&b) {
                Some(phi) => {
                    let map = indices(&phi);
                    Output::new(
                        format!("isomorphic\nmap: {}\n", join(&map)),
                        json!({"isomorphic": true, "map": map}),
                    )
                }
                None => Output::new(
                    "not isomorphic\n".into(),
                    json!({"isomorphic": false, "map": null}),
                ),
            })
        }
    }
}

fn matrix_text(m: &[Vec<u32>]) -> String {
    m.iter()
        .map(|row| {
            let r: Vec<String> = row.iter().map(u32::to_string).collect();
            r.join(" ") + "\n"
        })
        .collect()
}

fn symplectic(cmd: &SymplecticCmd) -> Result<Output, Failure> {
    match cmd {
        SymplecticCmd::Radical { space } => {
            let s = space.space()?;
            let radical = s.degenerate_submodule()?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for v in &radical {
                let index = s.module().index_of(v);
                writeln!(text, "{index} {v}").unwrap();
                rows.push(json!({"index": index, "vector": v.coords()}));
            }
            Ok(Output::new(text, json!({"radical": rows})))
        }
        SymplecticCmd::Reduce { space } => {
            let b = space.space()?.symplectic_reduce()?;
            let text = format!(
                "rank: {}\nradical dimension: {}\nbasis:\n{}",
                b.rank,
                b.radical_dim,
                matrix_text(&b.basis)
            );
            Ok(Output::new(
                text,
                json!({"rank": b.rank, "radical_dim": b.radical_dim, "basis": b.basis}),
            ))
        }
        SymplecticCmd::Isometric { space, gram2 } => {
            let s = space.space()?;
            let other = SymplecticSpace::parse(&space.ring, space.dim, gram2)?;
            let report = s.is_isometric(&other)?;
            let text = match &report.witness {
                Some(p) => format!("isometric\nwitness:\n{}", matrix_text(p)),
                None => "not isometric\n".into(),
            };
            Ok(Output::new(
                text,
                json!({"isometric": report.isometric, "witness": report.witness}),
            ))
        }
    }
}

fn link(cmd: &LinkCmd) -> Result<Output, Failure> {
    let LinkCmd::Parse { gauss } = cmd;
    let code: GaussCode = gauss.parse()?;
    let p = code.presentation();
    let text = format!(
        "code: {code}\ncomponents: {}\ncrossings: {}\n{p}",
        code.components().len(),
        code.crossing_count()
    );
    let relations: Vec<Value> = p
        .relations
        .iter()
        .map(|r| {
            let sign = match r.sign {
                Sign::Positive => "+",
                Sign::Negative => "-",
            };
            json!({"a": r.a + 1, "b": r.b + 1, "c": r.c + 1, "sign": sign})
        })
        .collect();
    Ok(Output::new(
        text,
        json!({
            "code": code.to_string(),
            "components": code.components().len(),
            "crossings": code.crossing_count(),
            "generators": p.generators,
            "relations": relations,
        }),
    ))
}

fn invariant(cmd: &InvariantCmd) -> Result<Output, Failure> {
    let (args, which) = match cmd {
        InvariantCmd::Count(a) => (a, "count"),
        InvariantCmd::PhiE(a) => (a, "phi_e"),
        InvariantCmd::PhiSqp(a) => (a, "phi_sqp"),
    };
    let code: GaussCode = args.gauss.parse()?;
    let (target, name) = match (&args.target_file, &args.ring, args.dim, &args.gram) {
        (Some(path), None, None, None) => (
            TargetQuandle::plain(read_quandle(path)?),
            path.display().to_string(),
        ),
        (None, Some(ring), Some(dim), Some(gram)) => {
            let space = SpaceArgs {
                ring: ring.clone(),
                dim,
                gram: gram.clone(),
            };
            (
                TargetQuandle::symplectic(&space.space()?)?,
                space.describe(),
            )
        }
        _ => {
            return Err(Failure::Input(
                "give either --target-file or all of --ring, --dim and --gram".into(),
            ))
        }
    };
    if which == "phi_sqp" && target.module.is_none() {
        return Err(Error::MissingModuleContext.into());
    }
    let s = summarize(&code.presentation(), &target)?;
    let mut json = json!({
        "link": code.to_string(),
        "target": name,
        "count": null,
        "phi_e": null,
        "phi_sqp": null,
    });
    let text = match which {
        "count" => {
            json["count"] = json!(s.count);
            s.count.to_string()
        }
        "phi_e" => {
            json["phi_e"] = s.phi_e.to_json();
            s.phi_e.to_string()
        }
        _ => {
            let p = s.phi_sqp.expect("symplectic target");
            json["phi_sqp"] = p.to_json();
            p.to_string()
        }
    };
    Ok(Output::new(text + "\n", json))
}

fn scan(cmd: &ScanCmd) -> Result<Output, Failure> {
    let ScanCmd::Conjecture { moduli, dim } = cmd;
    let report = conjecture_scan(parse_moduli(moduli)?, *dim)?;
    let mut text = String::new();
    for r in &report.results {
        let classes: Vec<String> = r
            .isomorphism_classes
            .iter()
            .map(|c| {
                format!(
                    "{{{}}}",
                    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        if r.coincide {
            writeln!(text, "Z{}: partitions agree: {}", r.n, classes.join(" ")).unwrap();
        } else {
            writeln!(
                text,
                "Z{}: partitions differ, witnesses {:?}",
                r.n, r.counterexamples
            )
            .unwrap();
        }
    }
    writeln!(
        text,
        "{}",
        if report.all_coincide() {
            "no counterexample found"
        } else {
            "counterexample found"
        }
    )
    .unwrap();
    Ok(Output::new(
        text,
        serde_json::to_value(&report).expect("report serializes"),
    ))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Quandle(c) => quandle(c),
        Command::Symplectic(c) => symplectic(c),
        Command::Link(c) => link(c),
        Command::Invariant(c) => invariant(c),
        Command::Scan(c) => scan(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_limit() { 2 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
