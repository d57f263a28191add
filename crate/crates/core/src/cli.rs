//! Command-line front end.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input
//! error, 3 an enumeration hit the cap.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Error;
use crate::fraction::{format_fraction, Fraction};
use crate::heaps::{heap_poset, nu, shape_class};
use crate::homomesy::{
    braid_hooks_count, braid_moves_count, homomesy_report, orbit_average, orbit_if_leader, sample_orbit_witness,
    window_table, HomomesyReport, OrbitMode, OrbitWitness, STATISTICS,
};
use crate::posets::{descent_count, linear_extensions, order_ideals, random_bounded_poset, OrderIdeal, Poset};
use crate::tableaux::{enumerate_capped, visit_tableaux, Shape, Tableau};
use crate::verify::{self, Check, Theorem};
use crate::words::{
    all_reduced_words_capped, commutation_class_capped, matsumoto_graph_capped, parse_letters, Permutation, Word,
    DEFAULT_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "braidhooks", version, about = "Braid moves, braid hooks and their orbit averages")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest number of objects any enumeration may produce.
    #[arg(long, global = true, env = "BRAIDHOOKS_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for sweeps; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Allow exhaustive sweeps that may run for a long time.
    #[arg(long, global = true)]
    long_running: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List tableaux, words, linear extensions or order ideals.
    Enumerate {
        #[command(flatten)]
        source: Source,
        /// With --poset: list order ideals instead of linear extensions.
        #[arg(long)]
        ideals: bool,
    },
    /// Check one of the counting identities.
    Verify {
        /// One of: reiner, commutation-class, braid-hooks, half-right,
        /// skew-balance, homomesy, poset-edges.
        theorem: String,
        #[command(flatten)]
        source: Source,
        /// Rank for reiner and commutation-class; a default range otherwise.
        #[arg(long)]
        n: Option<usize>,
        /// Largest shape swept when no --shape is given.
        #[arg(long, default_value_t = 12)]
        max_cells: usize,
        /// Random posets to draw for poset-edges without --poset.
        #[arg(long, default_value_t = 200)]
        posets: usize,
    },
    /// Orbit decomposition and per-orbit averages.
    Orbits {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "dihedral")]
        group: String,
        /// braid-hooks, braid-moves or descents.
        #[arg(long)]
        stat: Option<String>,
        /// Sample this many start tableaux instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// The moving-window table of a word.
    Window {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Reduced words of the longest element joined by braid and commutation moves.
    Graph {
        #[arg(long)]
        n: usize,
        /// Write Graphviz instead of the chosen format.
        #[arg(long)]
        dot: bool,
    },
    /// Heap of a word, and its tableau when --shape is given.
    Heap {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
    },
}

#[derive(Debug, Args, Default)]
struct Source {
    /// `right:λ`, `half:λ` or `skew:λ/μ`.
    #[arg(long)]
    shape: Option<String>,
    /// Comma-separated letters; the commutation class of this word.
    #[arg(long)]
    class_of_word: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// All reduced words of the longest element of this symmetric group.
    #[arg(long)]
    reduced_words: Option<usize>,
    /// File of `a < b` cover lines.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Comma-separated element names.
    #[arg(long)]
    ideal: Option<String>,
}

/// A failure that maps to exit code 2 or 3.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::ExplosionGuard { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Parses arguments, runs, and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if let Some(threads) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match &cli.command {
        Command::Enumerate { source, ideals } => cmd_enumerate(cli, source, *ideals),
        Command::Verify { theorem, source, n, max_cells, posets } => {
            cmd_verify(cli, theorem, source, *n, *max_cells, *posets)
        }
        Command::Orbits { source, group, stat, sample } => cmd_orbits(cli, source, group, stat.as_deref(), *sample),
        Command::Window { word, rank } => cmd_window(cli, word, *rank),
        Command::Graph { n, dot } => cmd_graph(cli, *n, *dot),
        Command::Heap { word, rank, shape } => cmd_heap(cli, word, *rank, shape.as_deref()),
    }
}

fn parse_shape(notation: &str, default_mode: &str) -> Result<Arc<Shape>, Failure> {
    let notation = if notation.contains(':') { notation.to_string() } else { format!("{default_mode}:{notation}") };
    Ok(Arc::new(Shape::parse(&notation)?))
}

fn parse_word(text: &str, rank: Option<usize>) -> Result<Word, Failure> {
    let letters = parse_letters(text)?;
    let rank = rank.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(0) as usize + 1);
    Ok(Word::new(letters, rank)?)
}

fn load_poset(path: &PathBuf) -> Result<Arc<Poset>, Failure> {
    Ok(Arc::new(Poset::parse(&fs::read_to_string(path)?)?))
}

fn tableau_line(t: &Tableau) -> String {
    t.rows().iter().map(|r| r.iter().join(",")).join("/")
}

fn emit_json(value: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn emit_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(io::stdout().lock());
    let csv_err = |e: csv::Error| usage(e.to_string());
    writer.write_record(header).map_err(csv_err)?;
    for row in rows {
        writer.write_record(&row).map_err(csv_err)?;
    }
    writer.flush()?;
    Ok(())
}

fn emit_listing(cli: &Cli, kind: &str, items: Vec<String>, json_items: Vec<Value>) -> Outcome {
    match cli.format {
        Format::Json => emit_json(&json!({"kind": kind, "count": items.len(), "items": json_items}))?,
        Format::Csv => emit_csv(&["index", kind], items.iter().enumerate().map(|(i, s)| vec![(i + 1).to_string(), s.clone()]))?,
        Format::Table => {
            let mut out = io::stdout().lock();
            for item in &items {
                writeln!(out, "{item}")?;
            }
            writeln!(out, "count {}", items.len())?;
        }
    }
    Ok(true)
}

fn cmd_enumerate(cli: &Cli, source: &Source, ideals: bool) -> Outcome {
    if let Some(notation) = &source.shape {
        let all = enumerate_capped(&parse_shape(notation, "right")?, cli.cap)?;
        let lines = all.iter().map(tableau_line).collect();
        return emit_listing(cli, "tableau", lines, all.iter().map(Tableau::to_json).collect());
    }
    if let Some(text) = &source.class_of_word {
        let class = commutation_class_capped(&parse_word(text, source.rank)?, cli.cap)?;
        let lines: Vec<String> = class.iter().map(Word::to_string).collect();
        let json_items = lines.iter().map(|s| json!(s)).collect();
        return emit_listing(cli, "word", lines, json_items);
    }
    if let Some(n) = source.reduced_words {
        let words = all_reduced_words_capped(&Permutation::longest(n), cli.cap)?;
        let lines: Vec<String> = words.iter().map(Word::to_string).collect();
        let json_items = lines.iter().map(|s| json!(s)).collect();
        return emit_listing(cli, "word", lines, json_items);
    }
    if let Some(path) = &source.poset {
        let poset = load_poset(path)?;
        if ideals {
            let all = order_ideals(&poset, cli.cap)?;
            let lines: Vec<String> = all.iter().map(|i| format!("{{{}}}", i.to_text(&poset))).collect();
            let json_items = all.iter().map(|i| json!(i.members().iter().map(|&p| poset.name(p)).collect::<Vec<_>>())).collect();
            return emit_listing(cli, "ideal", lines, json_items);
        }
        let all = linear_extensions(&poset, cli.cap)?;
        let lines: Vec<String> = all.iter().map(|l| l.to_text()).collect();
        let json_items = lines.iter().map(|s| json!(s)).collect();
        return emit_listing(cli, "extension", lines, json_items);
    }
    Err(usage("enumerate needs --shape, --class-of-word, --reduced-words or --poset"))
}

fn emit_checks(cli: &Cli, theorem: Theorem, checks: &[Check]) -> Outcome {
    let pass = checks.iter().all(|c| c.pass);
    match cli.format {
        Format::Json => emit_json(&json!({"theorem": theorem.name(), "pass": pass, "checks": checks}))?,
        Format::Csv => emit_csv(
            &["theorem", "subject", "pass", "details"],
            checks.iter().map(|c| vec![c.theorem.to_string(), c.subject.clone(), c.pass.to_string(), c.details.to_string()]),
        )?,
        Format::Table => {
            let mut out = io::stdout().lock();
            for c in checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status}  {}  {}", c.subject, summarize(&c.details))?;
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            writeln!(out, "{}: {} checked, {} failed", theorem.name(), checks.len(), failed)?;
        }
    }
    Ok(pass)
}

/// `key=value` pairs of the scalar fields of a details object.
fn summarize(details: &Value) -> String {
    match details {
        Value::Object(map) => map
            .iter()
            .filter(|(_, v)| !v.is_object() && !v.is_array())
            .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())))
            .join(" "),
        Value::Array(items) => format!("{} reports", items.len()),
        other => other.to_string(),
    }
}

fn sweep(shapes: Vec<Arc<Shape>>, check: impl Fn(&Arc<Shape>) -> crate::Result<Check> + Sync + Send) -> Result<Vec<Check>, Failure> {
    let results: Vec<crate::Result<Check>> = shapes.par_iter().map(check).collect();
    Ok(results.into_iter().collect::<crate::Result<Vec<_>>>()?)
}

fn cmd_verify(cli: &Cli, name: &str, source: &Source, n: Option<usize>, max_cells: usize, posets: usize) -> Outcome {
    let theorem = Theorem::parse(name)?;
    let shapes = |mode: &str, family: fn(usize) -> Vec<Arc<Shape>>| -> Result<Vec<Arc<Shape>>, Failure> {
        match &source.shape {
            Some(notation) => Ok(vec![parse_shape(notation, mode)?]),
            None => Ok(family(max_cells)),
        }
    };
    let cap = cli.cap;
    let checks = match theorem {
        Theorem::Reiner => {
            let ranks: Vec<usize> = n.map_or_else(|| (3..=5).collect(), |n| vec![n]);
            ranks.into_iter().map(|n| verify::check_reiner(n, cap)).collect::<crate::Result<Vec<_>>>()?
        }
        Theorem::CommutationClass => {
            let ranks: Vec<usize> = n.map_or_else(|| (3..=6).collect(), |n| vec![n]);
            ranks.into_iter().map(|n| verify::check_commutation_class(n, cap)).collect::<crate::Result<Vec<_>>>()?
        }
        Theorem::BraidHooks => sweep(shapes("right", verify::hook_family)?, verify::check_braid_hooks)?,
        Theorem::HalfRight => sweep(shapes("half", verify::half_right_family)?, verify::check_half_right)?,
        Theorem::SkewBalance => {
            let notation = source.shape.as_deref().unwrap_or("skew:4,3,2,1/1");
            vec![verify::check_skew_balance(&parse_shape(notation, "skew")?, cap)?]
        }
        Theorem::Homomesy => sweep(shapes("right", verify::hook_family)?, verify::check_homomesy)?,
        Theorem::PosetEdges => match &source.poset {
            Some(path) => {
                let poset = load_poset(path)?;
                let ideal = source.ideal.as_deref().map(|text| OrderIdeal::parse(&poset, text)).transpose()?;
                vec![verify::check_poset_edges(&poset, ideal.as_ref(), cap)?]
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let family: Vec<Arc<Poset>> =
                    (0..posets).map(|i| Arc::new(random_bounded_poset(2 + i % 6, 0.4, &mut rng))).collect();
                let results: Vec<crate::Result<Check>> =
                    family.par_iter().map(|p| verify::check_poset_edges(p, None, cap)).collect();
                results.into_iter().collect::<crate::Result<Vec<_>>>()?
            }
        },
    };
    emit_checks(cli, theorem, &checks)
}

fn emit_report(cli: &Cli, report: &HomomesyReport) -> Outcome {
    match cli.format {
        Format::Json => emit_json(&report.to_json())?,
        Format::Table => print!("{}", report.to_table()),
        Format::Csv => emit_csv(
            &["orbit", "size", "average", "representative"],
            report.orbits.iter().enumerate().map(|(i, o)| {
                vec![(i + 1).to_string(), o.size.to_string(), format_fraction(&o.average), o.representative.clone()]
            }),
        )?,
    }
    Ok(true)
}

fn emit_witness(cli: &Cli, statistic: &str, searched: &str, witness: Option<&OrbitWitness>) -> Outcome {
    let value = json!({"statistic": statistic, "searched": searched, "witness": witness});
    match cli.format {
        Format::Json => emit_json(&value)?,
        Format::Csv => emit_csv(
            &["mode", "sample", "size", "average", "representative"],
            witness.map(|w| {
                vec![w.mode.name().to_string(), w.sample.to_string(), w.size.to_string(), format_fraction(&w.average), w.representative.clone()]
            }),
        )?,
        Format::Table => match witness {
            Some(w) => {
                println!("{searched}: orbit of size {} with average {} ({} group)", w.size, format_fraction(&w.average), w.mode);
                print!("{}", w.representative);
            }
            None => println!("{searched}: every orbit averages the target"),
        },
    }
    Ok(true)
}

fn cmd_orbits(cli: &Cli, source: &Source, group: &str, stat: Option<&str>, sample: Option<usize>) -> Outcome {
    let mode = OrbitMode::parse(group)?;
    if let Some(name) = stat {
        if !STATISTICS.iter().any(|(s, _)| *s == name) {
            return Err(usage(format!("unknown statistic `{name}`")));
        }
    }
    let one = Fraction::from_integer(1);
    if let Some(path) = &source.poset {
        let poset = load_poset(path)?;
        let text = source.ideal.as_deref().ok_or_else(|| usage("--poset needs --ideal"))?;
        let ideal = OrderIdeal::parse(&poset, text)?;
        let all = linear_extensions(&poset, cli.cap)?;
        let report = homomesy_report(&all, mode, "descents", |l| descent_count(l, &ideal), |l| l.to_text())?;
        return emit_report(cli, &report);
    }
    if let Some(text) = &source.class_of_word {
        let class = commutation_class_capped(&parse_word(text, source.rank)?, cli.cap)?;
        let report = homomesy_report(&class, mode, "braid-moves", braid_moves_count, |w| w.to_string())?;
        return emit_report(cli, &report);
    }
    let notation = source.shape.as_deref().ok_or_else(|| usage("orbits needs --shape, --class-of-word or --poset"))?;
    let shape = parse_shape(notation, "right")?;
    if stat == Some("braid-moves") {
        let class = shape_class(&shape)?;
        let report = homomesy_report(&class, mode, "braid-moves", braid_moves_count, |w| w.to_string())?;
        return emit_report(cli, &report);
    }
    if cli.long_running {
        let witness = full_sweep(&shape, mode, one);
        return emit_witness(cli, "braid-hooks", "exhaustive sweep", witness.as_ref());
    }
    if let Some(samples) = sample {
        let witness = sample_orbit_witness(&shape, mode, samples, cli.seed, one);
        return emit_witness(cli, "braid-hooks", &format!("{samples} samples"), witness.as_ref());
    }
    let all = enumerate_capped(&shape, cli.cap)?;
    let report = homomesy_report(&all, mode, "braid-hooks", braid_hooks_count, tableau_line)?;
    emit_report(cli, &report)
}

/// Streams every filling in chunks and closes orbits in parallel, keeping
/// only orbits led by their least member. Progress goes to standard error.
fn full_sweep(shape: &Arc<Shape>, mode: OrbitMode, target: Fraction) -> Option<OrbitWitness> {
    const CHUNK: usize = 1 << 16;
    let mut buffer: Vec<Tableau> = Vec::with_capacity(CHUNK);
    let mut seen = 0u64;
    let mut orbits = 0u64;
    let mut witness: Option<OrbitWitness> = None;
    let mut flush = |buffer: &mut Vec<Tableau>, seen: u64| {
        let found: Vec<(usize, Fraction, String)> = buffer
            .par_iter()
            .filter_map(|t| orbit_if_leader(t, mode))
            .map(|o| (o.len(), orbit_average(&o, braid_hooks_count).expect("nonempty"), o.representative().to_text()))
            .collect();
        orbits += found.len() as u64;
        if witness.is_none() {
            if let Some((size, average, representative)) = found.into_iter().find(|f| f.1 != target) {
                witness = Some(OrbitWitness { mode, sample: seen as usize, size, average, representative });
            }
        }
        buffer.clear();
        eprintln!("swept {seen} tableaux, {orbits} orbits");
    };
    visit_tableaux(shape, |t| {
        buffer.push(t.clone());
        seen += 1;
        if buffer.len() == CHUNK {
            flush(&mut buffer, seen);
        }
    });
    flush(&mut buffer, seen);
    witness
}

fn cmd_window(cli: &Cli, word: &str, rank: Option<usize>) -> Outcome {
    let w = parse_word(word, rank)?;
    let table = window_table(&w);
    let preimage = crate::homomesy::big_phi_inverse(&w).ok();
    match cli.format {
        Format::Json => emit_json(&json!({
            "word": w.to_string(),
            "rows": table.rows,
            "preimage": preimage.map(|(k, v)| json!({"k": k, "word": v.to_string()})),
        }))?,
        Format::Csv => emit_csv(
            &["i", "word", "a", "c", "diff"],
            table.rows.iter().map(|r| vec![r.i.to_string(), r.word.clone(), r.a.to_string(), r.c.to_string(), r.diff.to_string()]),
        )?,
        Format::Table => {
            print!("{}", table.to_table());
            match preimage {
                Some((k, v)) => println!("preimage k={k} word={v}"),
                None => println!("no preimage"),
            }
        }
    }
    Ok(true)
}

fn cmd_graph(cli: &Cli, n: usize, dot: bool) -> Outcome {
    let graph = matsumoto_graph_capped(&Permutation::longest(n), cli.cap)?;
    if dot {
        print!("{}", graph.to_dot());
        return Ok(true);
    }
    match cli.format {
        Format::Json => emit_json(&graph.to_json())?,
        Format::Csv => emit_csv(
            &["from", "to", "kind"],
            graph.edges.iter().map(|&(i, j, k)| vec![graph.vertices[i].to_string(), graph.vertices[j].to_string(), k.label().to_string()]),
        )?,
        Format::Table => {
            println!(
                "{} words, {} edges, {} braid edges, connected {}",
                graph.vertices.len(),
                graph.edges.len(),
                graph.braid_edge_count(),
                graph.is_connected()
            );
        }
    }
    Ok(true)
}

fn cmd_heap(cli: &Cli, word: &str, rank: Option<usize>, shape: Option<&str>) -> Outcome {
    let w = parse_word(word, rank)?;
    let heap = heap_poset(&w);
    let tableau = shape.map(|notation| parse_shape(notation, "right").and_then(|s| Ok(nu(&w, &s)?))).transpose()?;
    match cli.format {
        Format::Json => emit_json(&json!({
            "word": w.to_string(),
            "heap": heap.to_json(),
            "tableau": tableau.as_ref().map(Tableau::to_json),
        }))?,
        Format::Csv => emit_csv(&["lower", "upper"], heap.covers().iter().map(|&(a, b)| vec![(a + 1).to_string(), (b + 1).to_string()]))?,
        Format::Table => {
            for &(a, b) in heap.covers() {
                println!("{} < {}  (letters {} {})", a + 1, b + 1, heap.column(a), heap.column(b));
            }
            if let Some(t) = tableau {
                print!("{}", t.to_text());
            }
        }
    }
    Ok(true)
}
