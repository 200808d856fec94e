//! The `finalg` command line.
//!
//! Every command reads algebras in JSON or GAP list form (detected from the
//! first character), writes its whole result to stdout once the computation
//! has finished, and exits with 1 on bad input or 2 when `--check` finds a
//! disagreement with the brute-force oracle.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{quotient_algebra, subalgebra_from_universe, Algebra};
use crate::congruence::{all_congruences, all_principal_congruences, is_monolithic};
use crate::error::Error;
use crate::fingerprint::all_invariant_vectors;
use crate::format::{elements_line, emit_algebra, mapping_line, parse_algebra, partition_line, Format};
use crate::mapping::Mapping;
use crate::morphism::{
    algebra_automorphisms, all_epimorphisms, all_monomorphisms, are_isomorphic,
    endomorphisms_with_threshold, one_epimorphism, one_monomorphism,
    DEFAULT_ENDOMORPHISM_THRESHOLD,
};
use crate::oracle::{self, MapKind};
use crate::partition::Partition;
use crate::rees::rees_matrix_semigroup;
use crate::structure::{
    all_divisor_witnesses, all_subuniverses, directly_reducible, one_divisor_witness,
    DivisorWitness,
};

#[derive(Parser, Debug)]
#[command(name = "finalg", version, about = "Structure of finite algebras")]
pub struct Cli {
    /// Output style for algebras and lists
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Re-verify the result with brute force when the input is small enough
    #[arg(long, global = true)]
    pub check: bool,
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest size for which endomorphisms use direct search
    #[arg(long, global = true, default_value_t = DEFAULT_ENDOMORPHISM_THRESHOLD)]
    pub endo_threshold: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy, Default)]
pub struct Variant {
    /// Print only whether a witness exists
    #[arg(long, conflicts_with = "one")]
    pub exists: bool,
    /// Print a single witness
    #[arg(long)]
    pub one: bool,
}

#[derive(Args, Debug)]
pub struct Pair {
    pub first: PathBuf,
    pub second: PathBuf,
    #[command(flatten)]
    pub variant: Variant,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// All congruences in set order
    Congruences { file: PathBuf },
    /// All distinct principal congruences in set order
    PrincipalCongruences { file: PathBuf },
    /// Whether there is a unique minimal nontrivial congruence
    Monolithic { file: PathBuf },
    Automorphisms { file: PathBuf },
    Endomorphisms { file: PathBuf },
    /// Non-empty subuniverses by size, then lexicographically
    Subuniverses { file: PathBuf },
    /// Congruence pairs splitting the algebra as a direct product
    DirectlyReducible {
        file: PathBuf,
        #[command(flatten)]
        variant: Variant,
    },
    /// Invariant vectors of every element, one row per element and binary operation
    Invariants { file: PathBuf },
    Monomorphisms(Pair),
    Epimorphisms(Pair),
    /// An isomorphism from the first algebra onto the second
    Isomorphic(Pair),
    /// Subuniverse/congruence pairs showing the second algebra divides the first
    Divisors(Pair),
    #[command(subcommand)]
    Gen(Gen),
    #[command(subcommand)]
    Enumerate(Enumerate),
}

#[derive(Subcommand, Debug)]
pub enum Gen {
    /// Rees matrix semigroup over a cyclic group with a seeded sandwich matrix
    Rees {
        #[arg(long)]
        group_order: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Enumerate {
    /// Semigroups of a small order up to isomorphism and anti-isomorphism
    Semigroups {
        #[arg(long)]
        size: usize,
        /// Also count the monolithic classes
        #[arg(long)]
        monolithic: bool,
        /// Also tabulate automorphism group sizes
        #[arg(long)]
        aut_counts: bool,
    },
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn load(path: &Path) -> std::result::Result<Algebra, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verify<T: PartialEq>(what: &str, ours: &T, oracle: Result<T, Error>) -> Result<(), Failure> {
    match oracle {
        Ok(expected) if expected != *ours => {
            Err(Failure::Mismatch(format!("{what}: result differs from brute force")))
        }
        Ok(_) | Err(Error::SizeTooLarge(_)) => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn lines<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let mut out = String::new();
    for x in items {
        let _ = writeln!(out, "{}", f(x));
    }
    out
}

fn oracle_principal(a: &Algebra) -> Result<Vec<Partition>, Error> {
    let all = oracle::oracle_congruences(a)?;
    let n = a.size();
    let mut out: Vec<Partition> = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            // the least congruence containing (x, y) is the meet of all that do
            let mut m = Partition::one_block(n);
            for c in all.iter().filter(|c| c.find(x) == c.find(y)) {
                m = m.meet(c)?;
            }
            out.push(m);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn oracle_monolithic(a: &Algebra) -> Result<bool, Error> {
    let n = a.size();
    let nontrivial: Vec<Partition> = oracle::oracle_congruences(a)?
        .into_iter()
        .filter(|c| c.number_of_blocks() < n)
        .collect();
    let minimal = nontrivial
        .iter()
        .filter(|c| !nontrivial.iter().any(|d| d != *c && d.is_contained_in(c)))
        .count();
    Ok(minimal == 1)
}

fn oracle_divisors(a1: &Algebra, a2: &Algebra) -> Result<Vec<DivisorWitness>, Error> {
    let mut out = Vec::new();
    for s in oracle::oracle_subuniverses(a1)? {
        let (sub, _) = subalgebra_from_universe(a1, &s)?;
        for c in oracle::oracle_congruences(&sub)? {
            if c.number_of_blocks() != a2.size() {
                continue;
            }
            let q = quotient_algebra(&sub, &c)?;
            if !oracle::oracle_maps(&q.quotient, a2, MapKind::Iso)?.is_empty() {
                out.push(DivisorWitness {
                    subuniverse: s.clone(),
                    congruence: c,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

fn witness_line(w: &DivisorWitness, format: Format) -> String {
    format!(
        "{} {}",
        elements_line(&w.subuniverse, format),
        partition_line(&w.congruence, format)
    )
}

fn pair_line(p: &(Partition, Partition), format: Format) -> String {
    format!("{} {}", partition_line(&p.0, format), partition_line(&p.1, format))
}

fn maybe<T>(item: Option<T>, f: impl Fn(&T) -> String) -> String {
    match item {
        Some(x) => format!("{}\n", f(&x)),
        None => "none\n".into(),
    }
}

fn map_command(
    cli: &Cli,
    pair: &Pair,
    kind: MapKind,
    all: fn(&Algebra, &Algebra) -> crate::Result<Vec<Mapping>>,
    one: fn(&Algebra, &Algebra) -> crate::Result<Option<Mapping>>,
) -> Outcome {
    let a = load(&pair.first)?;
    let b = load(&pair.second)?;
    let fmt = cli.format;
    if pair.variant.exists || pair.variant.one {
        let found = one(&a, &b)?;
        if cli.check {
            let expected = oracle::oracle_maps(&a, &b, kind);
            if let Some(m) = &found {
                if let Ok(list) = &expected {
                    if !list.contains(m) {
                        return Err(Failure::Mismatch("witness is not a valid map".into()));
                    }
                }
            }
            verify("existence", &found.is_some(), expected.map(|l| !l.is_empty()))?;
        }
        return Ok(if pair.variant.exists {
            format!("{}\n", found.is_some())
        } else {
            maybe(found, |m| mapping_line(m, fmt))
        });
    }
    let maps = all(&a, &b)?;
    if cli.check {
        verify("maps", &maps, oracle::oracle_maps(&a, &b, kind).map(sorted))?;
    }
    Ok(lines(&maps, |m| mapping_line(m, fmt)))
}

fn run_inner(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Congruences { file } => {
            let a = load(file)?;
            let cs = all_congruences(&a);
            if cli.check {
                verify("congruences", &cs, oracle::oracle_congruences(&a))?;
            }
            Ok(lines(&cs, |c| partition_line(c, fmt)))
        }
        Command::PrincipalCongruences { file } => {
            let a = load(file)?;
            let cs = all_principal_congruences(&a);
            if cli.check {
                verify("principal congruences", &cs, oracle_principal(&a))?;
            }
            Ok(lines(&cs, |c| partition_line(c, fmt)))
        }
        Command::Monolithic { file } => {
            let a = load(file)?;
            let m = is_monolithic(&a)?;
            if cli.check {
                verify("monolithic", &m, oracle_monolithic(&a))?;
            }
            Ok(format!("{m}\n"))
        }
        Command::Automorphisms { file } => {
            let a = load(file)?;
            let autos = algebra_automorphisms(&a)?;
            if cli.check {
                verify("automorphisms", &autos, oracle::oracle_maps(&a, &a, MapKind::Auto))?;
            }
            Ok(lines(&autos, |m| mapping_line(m, fmt)))
        }
        Command::Endomorphisms { file } => {
            let a = load(file)?;
            let endos = endomorphisms_with_threshold(&a, cli.endo_threshold);
            if cli.check {
                verify("endomorphisms", &endos, oracle::oracle_maps(&a, &a, MapKind::Endo))?;
            }
            Ok(lines(&endos, |m| mapping_line(m, fmt)))
        }
        Command::Subuniverses { file } => {
            let a = load(file)?;
            let subs = all_subuniverses(&a);
            if cli.check {
                verify("subuniverses", &subs, oracle::oracle_subuniverses(&a))?;
            }
            Ok(lines(&subs, |s| elements_line(s, fmt)))
        }
        Command::DirectlyReducible { file, variant } => {
            let a = load(file)?;
            let pairs = directly_reducible(&a);
            if cli.check {
                verify("direct decompositions", &pairs, oracle::oracle_directly_reducible(&a))?;
            }
            Ok(if variant.exists {
                format!("{}\n", !pairs.is_empty())
            } else if variant.one {
                maybe(pairs.into_iter().next(), |p| pair_line(p, fmt))
            } else {
                lines(&pairs, |p| pair_line(p, fmt))
            })
        }
        Command::Invariants { file } => {
            let a = load(file)?;
            let mut out = String::new();
            for (k, op) in a.binary_ops().iter().enumerate() {
                for (x, v) in all_invariant_vectors(op).iter().enumerate() {
                    let _ = writeln!(out, "{} {}: {}", k + 1, x + 1, v);
                }
            }
            Ok(out)
        }
        Command::Monomorphisms(pair) => {
            map_command(cli, pair, MapKind::Mono, all_monomorphisms, one_monomorphism)
        }
        Command::Epimorphisms(pair) => {
            map_command(cli, pair, MapKind::Epi, all_epimorphisms, one_epimorphism)
        }
        Command::Isomorphic(pair) => {
            let a = load(&pair.first)?;
            let b = load(&pair.second)?;
            let iso = are_isomorphic(&a, &b)?;
            if cli.check {
                let expected = oracle::oracle_maps(&a, &b, MapKind::Iso);
                if let (Some(m), Ok(list)) = (&iso, &expected) {
                    if !list.contains(m) {
                        return Err(Failure::Mismatch("witness is not an isomorphism".into()));
                    }
                }
                verify("isomorphism", &iso.is_some(), expected.map(|l| !l.is_empty()))?;
            }
            Ok(match iso {
                Some(_) if pair.variant.exists => "true\n".into(),
                Some(m) => format!("{}\n", mapping_line(&m, fmt)),
                None => "false\n".into(),
            })
        }
        Command::Divisors(pair) => {
            let a = load(&pair.first)?;
            let b = load(&pair.second)?;
            if pair.variant.exists || pair.variant.one {
                let w = one_divisor_witness(&a, &b)?;
                if cli.check {
                    verify(
                        "divisor existence",
                        &w.is_some(),
                        oracle_divisors(&a, &b).map(|l| !l.is_empty()),
                    )?;
                }
                return Ok(if pair.variant.exists {
                    format!("{}\n", w.is_some())
                } else {
                    maybe(w, |w| witness_line(w, fmt))
                });
            }
            let ws = all_divisor_witnesses(&a, &b)?;
            if cli.check {
                verify("divisors", &sorted(ws.clone()), oracle_divisors(&a, &b))?;
            }
            Ok(lines(&ws, |w| witness_line(w, fmt)))
        }
        Command::Gen(Gen::Rees {
            group_order,
            rows,
            cols,
            seed,
        }) => {
            let s = rees_matrix_semigroup(*group_order, *rows, *cols, None, *seed)?;
            if cli.check && !s.binary_ops()[0].is_associative() {
                return Err(Failure::Mismatch("generated table is not associative".into()));
            }
            Ok(format!("{}\n", emit_algebra(&s, fmt)?))
        }
        Command::Enumerate(Enumerate::Semigroups {
            size,
            monolithic,
            aut_counts,
        }) => semigroup_summary(*size, *monolithic, *aut_counts, cli.check),
    }
}

/// Per-class statistics of the small semigroups.
pub struct SemigroupSummary {
    pub classes: usize,
    pub monolithic: usize,
    /// automorphism group order -> number of classes
    pub automorphism_counts: BTreeMap<usize, usize>,
}

pub fn semigroup_statistics(size: usize) -> crate::Result<SemigroupSummary> {
    let reps = oracle::enumerate_semigroups(size)?;
    let mut monolithic = 0;
    let mut automorphism_counts = BTreeMap::new();
    for s in &reps {
        // a one-element algebra has no nontrivial congruence at all
        if s.size() >= 2 && is_monolithic(s)? {
            monolithic += 1;
        }
        *automorphism_counts
            .entry(algebra_automorphisms(s)?.len())
            .or_insert(0) += 1;
    }
    Ok(SemigroupSummary {
        classes: reps.len(),
        monolithic,
        automorphism_counts,
    })
}

fn semigroup_summary(size: usize, monolithic: bool, aut_counts: bool, check: bool) -> Outcome {
    let summary = semigroup_statistics(size)?;
    if check {
        for s in oracle::enumerate_semigroups(size)? {
            let autos = algebra_automorphisms(&s)?;
            verify("automorphisms", &autos, oracle::oracle_maps(&s, &s, MapKind::Auto))?;
            if s.size() >= 2 {
                verify("monolithic", &is_monolithic(&s)?, oracle_monolithic(&s))?;
            }
        }
    }
    let mut out = format!("classes {}\n", summary.classes);
    if monolithic {
        let _ = writeln!(out, "monolithic {}", summary.monolithic);
    }
    if aut_counts {
        for (order, count) in &summary.automorphism_counts {
            let _ = writeln!(out, "automorphisms {order} {count}");
        }
    }
    Ok(out)
}

/// Runs a parsed command line and returns what it would print.
pub fn run(cli: &Cli) -> Outcome {
    match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Failure::Input(e.to_string()))?
            .install(|| run_inner(cli)),
        None => run_inner(cli),
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
