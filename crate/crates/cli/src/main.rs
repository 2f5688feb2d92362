//! `primetree`: prime, critical and minimal trees from the command line.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! (its witness is printed), and 2 on usage or input errors.

mod output;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use primetree::criticality::classify_critical_family;
use primetree::enumeration::all_trees;
use primetree::families::{self, FamilyKind};
use primetree::minimality::{is_k_minimal, is_minimal_for_bruteforce};
use primetree::primality::{find_nontrivial_module, tree_nontrivial_modules_witness};
use primetree::{
    check_critical_conditions, check_minimal_conditions, extract_minimal_subtree, parse_edge_list, tree_is_prime,
    tree_sigma, verify_formula, CountKind, EdgeList, Error, Result, TreeCert, VertexSet,
};

use output::{Format, Names, Out};

#[derive(Parser)]
#[command(name = "primetree", version, about = "Prime, critical and minimal trees under modular decomposition")]
struct Cli {
    /// Output as plain text or as one JSON record per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Emit graphs as Graphviz DOT instead of edge lists.
    #[arg(long, global = true)]
    dot: bool,
    /// Worker threads for `enumerate`, `count` and `selftest`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prime verdict, with a nontrivial module when decomposable.
    Prime { file: PathBuf },
    /// The non-critical vertices of a prime graph.
    Sigma { file: PathBuf },
    /// Checks the characterization of σ on a prime tree and names its family.
    ClassifyCritical {
        file: PathBuf,
        /// Candidate set to check in place of σ.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// Checks whether a prime tree is minimal for a vertex set.
    CheckMinimal {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
        /// Confirm against the definition by exhaustive search.
        #[arg(long)]
        brute: bool,
    },
    /// Shrinks a prime tree to an induced subtree minimal for a vertex set.
    ExtractMinimal {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
    /// Edge list of a named family member.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<usize>,
    },
    /// Streams all unlabeled trees on `n` vertices, optionally filtered.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// `prime`, `critical=K` or `minimal=K`.
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Tabulates a closed-form count, optionally against enumeration.
    Count {
        #[arg(long)]
        what: String,
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Runs the invariant suites on small orders.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = Out::new(cli.format, cli.dot);
    out.command(&args);
    match run(cli.command, &mut out) {
        Ok(()) => {
            if out.finish() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            out.finish();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Out) -> Result<()> {
    match command {
        Command::Prime { file } => prime(&read(&file)?, out),
        Command::Sigma { file } => sigma(&read(&file)?, out),
        Command::ClassifyCritical { file, set } => classify(&read(&file)?, set, out),
        Command::CheckMinimal { file, set, brute } => check_minimal(&read(&file)?, &set, brute, out),
        Command::ExtractMinimal { file, set } => extract(&read(&file)?, &set, out),
        Command::Gen { family, params } => generate(&family, &params, out),
        Command::Enumerate { n, predicate } => enumerate(n, predicate.as_deref(), out),
        Command::Count { what, nmax, verify } => count(&what, nmax, verify, out),
        Command::Selftest => {
            selftest::run(out);
            Ok(())
        }
    }
}

fn read(path: &PathBuf) -> Result<EdgeList> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

fn resolve_set(list: &EdgeList, tokens: &[String]) -> Result<VertexSet> {
    tokens.iter().filter(|t| !t.trim().is_empty()).map(|t| list.resolve(t)).collect()
}

/// Prints the prime verdict and returns the tree when it is a prime tree.
fn require_prime_tree(list: &EdgeList, out: &mut Out) -> Result<Option<TreeCert>> {
    let t = TreeCert::new(list.graph.clone())?;
    let witness = tree_nontrivial_modules_witness(&t);
    let prime = t.order() >= 4 && witness.is_none();
    out.verdict("prime", prime);
    if let Some(w) = witness {
        out.set("module", w.members(), &Names::of(list));
    }
    Ok(prime.then_some(t))
}

fn prime(list: &EdgeList, out: &mut Out) -> Result<()> {
    let g = &list.graph;
    let names = Names::of(list);
    out.info("n", g.order());
    let tree = TreeCert::new(g.clone()).ok();
    out.info("tree", tree.is_some());
    let witness = match &tree {
        Some(t) => tree_nontrivial_modules_witness(t),
        None if g.order() >= 2 => find_nontrivial_module(g)?,
        None => None,
    };
    out.verdict("prime", g.order() >= 4 && witness.is_none());
    match witness {
        Some(w) => out.set("module", w.members(), &names),
        None if g.order() < 4 => out.info("reason", "fewer than 4 vertices"),
        None => {}
    }
    Ok(())
}

fn sigma(list: &EdgeList, out: &mut Out) -> Result<()> {
    let g = &list.graph;
    let names = Names::of(list);
    let witness = match TreeCert::new(g.clone()) {
        Ok(t) => tree_nontrivial_modules_witness(&t),
        Err(_) => find_nontrivial_module(g)?,
    };
    let prime = g.order() >= 4 && witness.is_none();
    out.verdict("prime", prime);
    if let Some(w) = witness {
        out.set("module", w.members(), &names);
    }
    if prime {
        let s = primetree::sigma(g)?;
        out.set("sigma", &s.sigma, &names);
        out.info("k", s.k);
    }
    Ok(())
}

fn classify(list: &EdgeList, set: Option<Vec<String>>, out: &mut Out) -> Result<()> {
    let names = Names::of(list);
    let Some(t) = require_prime_tree(list, out)? else { return Ok(()) };
    let s = tree_sigma(&t)?;
    out.set("sigma", &s.sigma, &names);
    out.info("k", s.k);
    let x = match &set {
        Some(tokens) => resolve_set(list, tokens)?,
        None => s.sigma.clone(),
    };
    if t.order() >= 5 && !x.is_empty() {
        if set.is_some() {
            out.set("set", &x, &names);
        }
        let report = check_critical_conditions(&t, &x)?;
        out.conditions("critical conditions", &report, &names);
    } else if set.is_some() {
        return Err(Error::InvalidInput("the conditions need at least 5 vertices and a nonempty set".into()));
    } else {
        out.info("conditions", "not applicable below 5 vertices");
    }
    let tag = classify_critical_family(&t)?;
    out.emit(format!("family: {tag}"), json!({"record": "family", "tag": tag}));
    Ok(())
}

fn check_minimal(list: &EdgeList, tokens: &[String], brute: bool, out: &mut Out) -> Result<()> {
    let names = Names::of(list);
    let x = resolve_set(list, tokens)?;
    out.set("set", &x, &names);
    let Some(t) = require_prime_tree(list, out)? else { return Ok(()) };
    let mut verdict = None;
    if t.order() >= 5 {
        let report = check_minimal_conditions(&t, &x)?;
        out.conditions("minimal conditions", &report, &names);
        verdict = Some(report.overall);
    } else {
        out.info("conditions", "not applicable below 5 vertices");
    }
    if brute || verdict.is_none() {
        let b = is_minimal_for_bruteforce(&t, &x)?;
        out.verdict("minimal (exhaustive)", b);
        if let Some(v) = verdict {
            out.verdict("routes agree", v == b);
        }
    }
    Ok(())
}

fn extract(list: &EdgeList, tokens: &[String], out: &mut Out) -> Result<()> {
    let names = Names::of(list);
    let x = resolve_set(list, tokens)?;
    out.set("set", &x, &names);
    let Some(h) = require_prime_tree(list, out)? else { return Ok(()) };
    let sub = extract_minimal_subtree(&h, &x)?;
    let kept: VertexSet = sub.original.iter().copied().collect();
    out.set("kept", &kept, &names);
    let local = sub.local(&x);
    out.verdict("minimal", primetree::is_minimal_for(&sub.tree, &local)?);
    let labels: Vec<String> = sub.original.iter().map(|&v| list.label(v)).collect();
    let annotations = vec![("set".to_string(), local.iter().map(|v| labels[v].clone()).collect::<Vec<_>>().join(" "))];
    out.graph(sub.tree.graph(), Some(&labels), &annotations);
    Ok(())
}

fn generate(family: &str, params: &[usize], out: &mut Out) -> Result<()> {
    let kind = FamilyKind::parse(family).ok_or_else(|| Error::InvalidInput(format!("unknown family {family:?}")))?;
    let f = families::build(kind, params)?;
    let spec = &f.spec;
    let params_text = params.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut annotations = vec![("family".to_string(), format!("{} {params_text}", kind.name()))];
    if tree_is_prime(&f.tree) {
        let s = tree_sigma(&f.tree)?;
        annotations.push(("sigma".to_string(), spec.labels_of(&s.sigma).join(" ")));
    }
    out.graph(f.tree.graph(), Some(&spec.labels), &annotations);
    Ok(())
}

enum Predicate {
    All,
    Prime,
    Critical(usize),
    Minimal(usize),
}

impl Predicate {
    fn parse(s: Option<&str>) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown predicate {:?}", s.unwrap_or_default()));
        let Some(s) = s else { return Ok(Predicate::All) };
        if s == "prime" {
            return Ok(Predicate::Prime);
        }
        let (name, k) = s.split_once('=').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        match name {
            "critical" => Ok(Predicate::Critical(k)),
            "minimal" => Ok(Predicate::Minimal(k)),
            _ => Err(bad()),
        }
    }

    fn holds(&self, t: &TreeCert) -> bool {
        match *self {
            Predicate::All => true,
            Predicate::Prime => tree_is_prime(t),
            Predicate::Critical(k) => tree_is_prime(t) && tree_sigma(t).map(|s| s.k == k).unwrap_or(false),
            Predicate::Minimal(k) => is_k_minimal(t, k),
        }
    }
}

fn filtered_trees(n: usize, pred: &Predicate) -> Result<Vec<TreeCert>> {
    let trees: Vec<TreeCert> = all_trees(n)?.collect();
    Ok(trees.into_par_iter().filter(|t| pred.holds(t)).collect())
}

fn emit_tree(t: &TreeCert, out: &mut Out) {
    let code = primetree::canonical_form(t).to_hex();
    out.emit(&code, json!({"record": "tree", "code": code}));
    out.graph(t.graph(), None, &[]);
    out.blank();
}

fn enumerate(n: usize, predicate: Option<&str>, out: &mut Out) -> Result<()> {
    let pred = Predicate::parse(predicate)?;
    let trees = filtered_trees(n, &pred)?;
    for t in &trees {
        emit_tree(t, out);
    }
    out.info("count", trees.len());
    Ok(())
}

fn count(what: &str, nmax: u64, verify: bool, out: &mut Out) -> Result<()> {
    let kind = CountKind::parse(what).ok_or_else(|| Error::InvalidInput(format!("unknown count {what:?}")))?;
    if !verify {
        out.emit("n formula", json!({"record": "header", "columns": ["n", "formula"]}));
        for n in kind.first_n()..=nmax {
            let f = kind.formula(n)?;
            out.emit(format!("{n} {f}"), json!({"record": "row", "kind": kind, "n": n, "formula": f}));
        }
        return Ok(());
    }
    let table = verify_formula(nmax, kind)?;
    out.emit("n formula enumerated agree", json!({"record": "header", "columns": ["n", "formula", "enumerated", "agree"]}));
    for r in &table.rows {
        let mut record = json!(r);
        record["record"] = json!("row");
        record["kind"] = json!(kind);
        out.emit(format!("{} {} {} {}", r.n, r.formula, r.enumerated, r.agree), record);
    }
    for r in table.rows.iter().filter(|r| !r.agree) {
        let pred = match kind {
            CountKind::Critical2 => Predicate::Critical(2),
            CountKind::Minimal3 => Predicate::Minimal(3),
        };
        for t in filtered_trees(r.n as usize, &pred)? {
            let code = primetree::canonical_form(&t).to_hex();
            let tag = classify_critical_family(&t).map(|t| t.to_string()).unwrap_or_else(|_| "-".into());
            out.emit(format!("witness n={} {code} {tag}", r.n), json!({"record": "witness", "n": r.n, "code": code, "family": tag}));
        }
    }
    out.verdict("formula agrees", table.all_agree());
    Ok(())
}
