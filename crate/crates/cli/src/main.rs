//! `efalg`: load, analyze and rebuild finite effect algebras.
//!
//! Exit codes: 0 pass, 1 property failure, 2 hypothesis not met, 3 input
//! error. Every nonzero exit also writes one JSON line to stderr
//! (`{"schema": "efalg-failure/1", ...}`).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use efalg_core::catalog::{
    direct_product, enumerate_order, estimated_cost, horizontal_sum, make_boolean, make_chain,
    DEFAULT_MAX_ORDER,
};
use efalg_core::format::{
    parse_effect_algebra, parse_generalized, parse_h, parse_raw, serialize, serialize_generalized,
    serialize_h, Kind,
};
use efalg_core::iso::find_isomorphism;
use efalg_core::report::AnalyzeReport;
use efalg_core::structure::StructureReport;
use efalg_core::suite::{run_suite, suite_universe};
use efalg_core::triple::{
    extract_triple, reconstruct_tea, verify_roundtrip, TripleMaps, TripleRep,
};
use efalg_core::{
    verify_effect_algebra, verify_generalized, Error, FiniteEffectAlgebra, HypothesisFailure,
    PartialAlgebra,
};

const PASS: u8 = 0;
const PROPERTY: u8 = 1;
const HYPOTHESIS: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "efalg",
    version,
    about = "Finite effect algebras and their triple representation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the effect algebra (or `gea 1` generalized) axioms.
    Verify { file: PathBuf },
    /// Print element classes, blocks and classifiers.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the triple (sharp.efa, meager.gea, h.txt) into a directory.
    Triple {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rebuild an algebra from a directory written by `triple`.
    Rebuild {
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract the triple, rebuild from it and verify the isomorphism.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for an isomorphism between two algebras.
    Iso { first: PathBuf, second: PathBuf },
    /// Build an algebra from a named construction.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Chain length n (n + 1 elements) or number of atoms.
        #[arg(long)]
        n: Option<usize>,
        /// Summands or factors for `hsum` and `product`.
        #[arg(long = "input", num_args = 1..)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every algebra of order 2..=N, up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        bound: usize,
    },
    /// Run every property check over the catalog and all algebras up to N.
    Suite {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Chain,
    Boolean,
    Hsum,
    Product,
}

/// A finished command: exit code, stdout text and, when nonzero, the
/// failure document.
struct Outcome {
    code: u8,
    stdout: String,
    failure: Option<Value>,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome {
            code: PASS,
            stdout,
            failure: None,
        }
    }

    fn fail(code: u8, stdout: String, kind: &str, detail: Value) -> Self {
        Outcome {
            code,
            stdout,
            failure: Some(json!({ "schema": "efalg-failure/1", "kind": kind, "detail": detail })),
        }
    }
}

fn from_error(err: Error) -> Outcome {
    let message = err.to_string();
    match err {
        Error::Hypothesis(h) => {
            let witness = match h {
                HypothesisFailure::NotHomogeneous { u, v1, v2 } => json!([u, v1, v2]),
                HypothesisFailure::NotSharplyDominating { x, .. } => json!([x]),
                HypothesisFailure::InvalidTriple(_) => json!([]),
            };
            Outcome::fail(
                HYPOTHESIS,
                String::new(),
                "hypothesis",
                json!({ "message": message, "witness": witness }),
            )
        }
        Error::Internal(_) => Outcome::fail(
            PROPERTY,
            String::new(),
            "internal",
            json!({ "message": message }),
        ),
        Error::Axioms(v) => Outcome::fail(
            INPUT,
            String::new(),
            "axioms",
            json!({ "message": message, "violations": v }),
        ),
        Error::Input(_) | Error::Refused(_) => {
            Outcome::fail(INPUT, String::new(), "input", json!({ "message": message }))
        }
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| {
        Outcome::fail(
            INPUT,
            String::new(),
            "input",
            json!({ "message": format!("{}: {e}", path.display()) }),
        )
    })
}

fn write(path: &Path, text: &str) -> Result<(), Outcome> {
    fs::write(path, text).map_err(|e| {
        Outcome::fail(
            INPUT,
            String::new(),
            "input",
            json!({ "message": format!("{}: {e}", path.display()) }),
        )
    })
}

fn load(path: &Path) -> Result<FiniteEffectAlgebra, Outcome> {
    parse_effect_algebra(&read(path)?).map_err(from_error)
}

fn emit(text: String, out: Option<&Path>) -> Result<Outcome, Outcome> {
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(Outcome::pass(String::new()))
        }
        None => Ok(Outcome::pass(text)),
    }
}

fn set_list(e: &FiniteEffectAlgebra, set: &efalg_core::ElementSet) -> String {
    let labels: Vec<String> = set.iter().map(|x| e.label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn verify(file: &Path) -> Result<Outcome, Outcome> {
    let raw = parse_raw(&read(file)?).map_err(|e| from_error(e.into()))?;
    let verdict = match raw.kind {
        Kind::Effect => {
            verify_effect_algebra(&raw.table, raw.zero, raw.one.expect("effect header"))
        }
        Kind::Generalized => verify_generalized(&raw.table, raw.zero),
    }
    .map_err(|e| from_error(e.into()))?;
    let what = match raw.kind {
        Kind::Effect => "effect algebra",
        Kind::Generalized => "generalized effect algebra",
    };
    if verdict.violations.is_empty() {
        return Ok(Outcome::pass(format!(
            "ok: {what} of order {}\n",
            raw.table.order()
        )));
    }
    let lines: String = verdict
        .violations
        .iter()
        .map(|v| format!("violated {v}\n"))
        .collect();
    Ok(Outcome::fail(
        PROPERTY,
        lines,
        "axioms",
        json!({ "violations": verdict.violations }),
    ))
}

fn analyze(file: &Path, as_json: bool) -> Result<Outcome, Outcome> {
    let e = load(file)?;
    if as_json {
        return Ok(Outcome::pass(AnalyzeReport::compute(&e).to_json()));
    }
    let r = StructureReport::compute(&e);
    let mut out = format!("order {}\n", e.order());
    for (label, set) in [
        ("sharp", &r.sharp),
        ("meager", &r.meager),
        ("hypermeager", &r.hypermeager),
        ("principal", &r.principal),
        ("center", &r.center),
    ] {
        out += &format!("{label:<12} {}\n", set_list(&e, set));
    }
    for (i, b) in r.blocks.iter().enumerate() {
        out += &format!("block {i:<6} {}\n", set_list(&e, b));
    }
    let f = &r.flags;
    for (label, flag) in [
        ("homogeneous", &f.homogeneous),
        ("rdp", &f.rdp),
        ("lattice", &f.lattice),
        ("sharply dominating", &f.sharply_dominating),
        ("archimedean", &f.archimedean),
        ("orthoalgebra", &f.orthoalgebra),
    ] {
        let witness = flag.witness.as_ref().map_or(String::new(), |w| {
            let ids: Vec<String> = w.iter().map(|&x| e.label(x)).collect();
            format!(" (witness {})", ids.join(", "))
        });
        out += &format!(
            "{label:<19} {}{witness}\n",
            if flag.holds { "yes" } else { "no" }
        );
    }
    Ok(Outcome::pass(out))
}

fn triple(file: &Path, dir: &Path) -> Result<Outcome, Outcome> {
    let e = load(file)?;
    let t = extract_triple(&e).map_err(from_error)?;
    fs::create_dir_all(dir).map_err(|err| {
        Outcome::fail(
            INPUT,
            String::new(),
            "input",
            json!({ "message": format!("{}: {err}", dir.display()) }),
        )
    })?;
    write(&dir.join("sharp.efa"), &serialize(&t.sharp_algebra))?;
    write(
        &dir.join("meager.gea"),
        &serialize_generalized(&t.meager_algebra),
    )?;
    write(&dir.join("h.txt"), &serialize_h(&t.h))?;
    let back = t.back_maps().expect("freshly extracted");
    let ids = |v: &[efalg_core::ElementId]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(Outcome::pass(format!(
        "sharp  {} elements: {}\nmeager {} elements: {}\n",
        back.sharp.len(),
        ids(&back.sharp),
        back.meager.len(),
        ids(&back.meager)
    )))
}

fn rebuild(dir: &Path, out: Option<&Path>) -> Result<Outcome, Outcome> {
    let sharp = parse_effect_algebra(&read(&dir.join("sharp.efa"))?).map_err(from_error)?;
    let meager = parse_generalized(&read(&dir.join("meager.gea"))?).map_err(from_error)?;
    let h =
        parse_h(&read(&dir.join("h.txt"))?, meager.order()).map_err(|e| from_error(e.into()))?;
    let t = TripleRep::new(sharp, meager, h).map_err(from_error)?;
    let tea = reconstruct_tea(&t).map_err(from_error)?;
    let names: Vec<String> = tea
        .carrier
        .iter()
        .map(|(s, m)| format!("({s},{m})"))
        .collect();
    let algebra = tea.algebra.with_names(names).map_err(from_error)?;
    emit(serialize(&algebra), out)
}

fn roundtrip(file: &Path, as_json: bool) -> Result<Outcome, Outcome> {
    let e = load(file)?;
    match verify_roundtrip(&e).map_err(from_error)? {
        Ok(w) => {
            let text = if as_json {
                serde_json::to_string_pretty(&w).expect("plain data") + "\n"
            } else {
                let mut out = format!(
                    "ok: phi is an isomorphism onto Tea ({} elements)\n",
                    e.order()
                );
                for (x, (s, m)) in w.pairs.iter().enumerate() {
                    out += &format!(
                        "phi({}) = ({}, {})\n",
                        e.label(efalg_core::ElementId::new(x)),
                        e.label(*s),
                        e.label(*m)
                    );
                }
                out
            };
            Ok(Outcome::pass(text))
        }
        Err(failure) => Ok(Outcome::fail(
            PROPERTY,
            format!("roundtrip failed: {failure}\n"),
            "roundtrip",
            serde_json::to_value(&failure).expect("plain data"),
        )),
    }
}

fn iso(first: &Path, second: &Path) -> Result<Outcome, Outcome> {
    let (a, b) = (load(first)?, load(second)?);
    match find_isomorphism(&a, &b) {
        Some(w) => {
            let mut out = String::from("isomorphic\n");
            for (x, y) in w.mapping.iter().enumerate() {
                out += &format!(
                    "{} -> {}\n",
                    a.label(efalg_core::ElementId::new(x)),
                    b.label(*y)
                );
            }
            Ok(Outcome::pass(out))
        }
        None => Ok(Outcome::fail(
            PROPERTY,
            "not isomorphic\n".into(),
            "iso",
            json!({ "isomorphic": false }),
        )),
    }
}

fn gen(
    kind: GenKind,
    n: Option<usize>,
    inputs: &[PathBuf],
    out: Option<&Path>,
) -> Result<Outcome, Outcome> {
    let need_n = || {
        n.ok_or_else(|| {
            Outcome::fail(
                INPUT,
                String::new(),
                "input",
                json!({ "message": "--n is required" }),
            )
        })
    };
    let loaded = || {
        inputs
            .iter()
            .map(|p| load(p))
            .collect::<Result<Vec<_>, _>>()
    };
    let e = match kind {
        GenKind::Chain => make_chain(need_n()?),
        GenKind::Boolean => make_boolean(need_n()?),
        GenKind::Hsum => horizontal_sum(&loaded()?),
        GenKind::Product => match loaded()?.as_slice() {
            [a, b] => direct_product(a, b),
            _ => {
                return Err(Outcome::fail(
                    INPUT,
                    String::new(),
                    "input",
                    json!({ "message": "product takes exactly two --input files" }),
                ))
            }
        },
    }
    .map_err(from_error)?;
    emit(serialize(&e), out)
}

fn enumerate(max_order: usize, dir: &Path, bound: usize) -> Result<Outcome, Outcome> {
    if max_order > bound {
        return Err(from_error(Error::Refused(format!(
            "order {max_order} exceeds the enumeration bound {bound} (about {:.1e} search nodes before pruning); \
             raise --bound to proceed",
            estimated_cost(max_order)
        ))));
    }
    fs::create_dir_all(dir).map_err(|err| {
        Outcome::fail(
            INPUT,
            String::new(),
            "input",
            json!({ "message": format!("{}: {err}", dir.display()) }),
        )
    })?;
    let mut out = String::new();
    for n in 2..=max_order {
        let (algebras, stats) = enumerate_order(n);
        let mut homogeneous = 0;
        let mut qualifying = 0;
        for (k, e) in algebras.iter().enumerate() {
            let name = format!("order{n}-{k}");
            write(&dir.join(format!("{name}.efa")), &serialize(e))?;
            let report = StructureReport::compute(e);
            homogeneous += report.flags.homogeneous.holds as usize;
            if report.qualifies() {
                qualifying += 1;
                let t = extract_triple(e).map_err(from_error)?;
                let maps = TripleMaps::compute(&t).map_err(from_error)?;
                for (x, y) in &maps.without_top {
                    out += &format!("note: {name}: S({x}, {y}) has no top element\n");
                }
            }
        }
        out += &format!(
            "order {n}: {} algebras, {homogeneous} homogeneous, {qualifying} homogeneous and sharply dominating ({} search nodes)\n",
            algebras.len(),
            stats.nodes
        );
    }
    Ok(Outcome::pass(out))
}

fn suite(max_order: usize, bound: usize, as_json: bool) -> Result<Outcome, Outcome> {
    let universe = suite_universe(max_order, bound).map_err(from_error)?;
    let report = run_suite(&universe);
    let text = if as_json {
        serde_json::to_string_pretty(&report).expect("plain data") + "\n"
    } else {
        report.render()
    };
    if report.passed() {
        return Ok(Outcome::pass(text));
    }
    let failing: Vec<Value> = report
        .checks
        .iter()
        .filter(|c| c.failed > 0)
        .map(|c| json!({ "anchor": c.anchor, "clause": c.clause, "failed": c.failed, "examples": c.examples }))
        .collect();
    Ok(Outcome::fail(
        PROPERTY,
        text,
        "suite",
        json!({ "failing": failing }),
    ))
}

fn configure_jobs() -> Result<(), Outcome> {
    let Ok(value) = std::env::var("EFALG_JOBS") else {
        return Ok(());
    };
    let jobs: usize = value.trim().parse().ok().filter(|&j| j > 0).ok_or_else(|| {
        Outcome::fail(INPUT, String::new(), "input", json!({ "message": format!("EFALG_JOBS must be a positive integer, got {value:?}") }))
    })?;
    // Fails only if a pool already exists, which cannot happen this early.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, Outcome> {
    configure_jobs()?;
    match cli.command {
        Command::Verify { file } => verify(&file),
        Command::Analyze { file, json } => analyze(&file, json),
        Command::Triple { file, out } => triple(&file, &out),
        Command::Rebuild { dir, out } => rebuild(&dir, out.as_deref()),
        Command::Roundtrip { file, json } => roundtrip(&file, json),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Gen {
            kind,
            n,
            inputs,
            out,
        } => gen(kind, n, &inputs, out.as_deref()),
        Command::Enumerate {
            max_order,
            out,
            bound,
        } => enumerate(max_order, &out, bound),
        Command::Suite {
            max_order,
            bound,
            json,
        } => suite(max_order, bound, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT } else { PASS });
        }
    };
    let outcome = run(cli).unwrap_or_else(|o| o);
    print!("{}", outcome.stdout);
    if let Some(failure) = outcome.failure {
        if let Some(msg) = failure["detail"]["message"].as_str() {
            eprintln!("error: {msg}");
        }
        eprintln!("{failure}");
    }
    ExitCode::from(outcome.code)
}
