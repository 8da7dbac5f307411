//! Command-line front end. `run` writes primary output to the given writer and
//! reports whether every requested check passed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::align::{parabolic_context, Acceptance, AlignmentContext};
use crate::coxeter::{build_system, coxeter_matrix, parse_type_name, AnySystem, CoxeterSystem};
use crate::dihedral::Dihedral;
use crate::error::{Error, Result};
use crate::partition::{
    bounding_shape, enumerate_nc, enumerate_nn, kreweras_count, nc_to_perm, nn_to_nc, verify_bijection_sample,
    verify_bijections, BijectionReport, SetPartition,
};
use crate::perm::{j_regions, JContext, Permutation, MAX_N};
use crate::poset::{Bound, FinitePoset, LatticeCheck};
use crate::ring::Ring;
use crate::subword::cluster_complex;
use crate::tables::{any_nonnesting_count, j_display, run_suite, SUITES};
use crate::tamari::{avoiding_elements, tamari_lattice, verify_quotient};
use crate::with_system;

#[derive(Parser, Debug)]
#[command(
    name = "paracat",
    version,
    about = "Parabolic Tamari lattices, parabolic Catalan families and aligned elements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the parabolic Tamari lattice of S_n^J and run lattice/quotient checks.
    Tamari(TamariArgs),
    /// Count one parabolic Catalan family for a Coxeter group.
    Count(CountArgs),
    /// Recompute an embedded table of expected counts and diff it.
    Tables(TablesArgs),
    /// Verify the bijections between avoiding permutations, NC and NN partitions.
    Bijection(BijectionArgs),
    /// Aligned elements of a weak-order interval given by a reduced word.
    Aligned(AlignedArgs),
    /// Instance checks of the lattice and flip-poset statements.
    Conjectures(ConjecturesArgs),
    /// Facets of the parabolic cluster complex.
    Facets(FacetsArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum, PartialEq, Eq)]
pub enum OutFormat {
    #[default]
    Human,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum, PartialEq, Eq)]
pub enum Rule {
    #[default]
    Positive,
    Integers,
}

impl From<Rule> for Acceptance {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Positive => Acceptance::Positive,
            Rule::Integers => Acceptance::Integers,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Family {
    Avoiding,
    Align,
    Nc,
    Nn,
    Subword,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// A, B, C, D, E, F, G, H, I or affine-A; a rank suffix such as H3 is accepted.
    #[arg(long = "type")]
    pub kind: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Order of s1 s2 for type I.
    #[arg(long)]
    pub m: Option<u32>,
    /// Base for bare numeric generator tokens (defaults to the labels' base).
    #[arg(long)]
    pub index_base: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TamariArgs {
    #[arg(long)]
    pub n: usize,
    /// Generators in J, e.g. "2" or "1,3"; empty for J = {}.
    #[arg(long, default_value = "")]
    pub j: String,
    /// Comma-separated checks: lattice, quotient, congruence.
    #[arg(long, value_delimiter = ',', default_value = "lattice")]
    pub check: Vec<String>,
    #[arg(long, default_value_t = 9)]
    pub bound: usize,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, default_value = "")]
    pub j: String,
    /// Coxeter element word; defaults to s1 s2 ... sn.
    #[arg(long)]
    pub c: Option<String>,
    /// Report the count for every Coxeter element.
    #[arg(long)]
    pub all_c: bool,
    #[arg(long)]
    pub root_poset: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub decomposition: Rule,
    #[arg(long, default_value_t = 9)]
    pub bound: usize,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// a4b4, d4, h3, h4, f4 or all.
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub root_poset: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub decomposition: Rule,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "")]
    pub j: String,
    /// Round-trip an evenly spaced sample instead of every element; allows n above the bound.
    #[arg(long)]
    pub sample: bool,
    #[arg(long, default_value_t = 9)]
    pub bound: usize,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct AlignedArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Reduced word, e.g. "s0 s1 s0 s3".
    #[arg(long)]
    pub word: String,
    /// Elements to inspect (inversions, cover reflections, alignment).
    #[arg(long)]
    pub element: Vec<String>,
    #[arg(long)]
    pub check_lattice: bool,
    #[arg(long, value_enum, default_value_t)]
    pub decomposition: Rule,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    /// Comma-separated groups such as A3,D4, or "fully-commutative".
    #[arg(long, default_value = "A3")]
    pub scope: String,
    /// Restrict to J = S \ {s} with w_o^J fully commutative.
    #[arg(long)]
    pub fully_commutative: bool,
    #[arg(long)]
    pub root_poset: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub decomposition: Rule,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

#[derive(Args, Debug)]
pub struct FacetsArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, default_value = "")]
    pub j: String,
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub out: OutFormat,
}

/// Runs a command; `Ok(false)` means a check failed or a table cell mismatched.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Tamari(a) => cmd_tamari(&a, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Tables(a) => cmd_tables(&a, out),
        Command::Bijection(a) => cmd_bijection(&a, out),
        Command::Aligned(a) => cmd_aligned(&a, out),
        Command::Conjectures(a) => cmd_conjectures(&a, out),
        Command::Facets(a) => cmd_facets(&a, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Unsupported(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(value).expect("json")))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))
}

/// Type-A generator set: "2", "s2", "1,3", "1 3" (1-based).
pub fn parse_perm_j(n: usize, text: &str) -> Result<JContext> {
    let mut j = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let t = tok.strip_prefix('s').unwrap_or(tok);
        j.push(t.parse::<usize>().map_err(|_| Error::InvalidJ(tok.into()))?);
    }
    j_regions(n, &j)
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::Bound(format!("n = {n} exceeds the bound {bound}; raise it with --bound")));
    }
    Ok(())
}

fn perm_j_display(ctx: &JContext) -> String {
    let labels: Vec<String> = ctx.j_set().iter().map(|i| format!("s{i}")).collect();
    format!("{{{}}}", labels.join(","))
}

enum Group {
    Generic(AnySystem),
    Dihedral(Dihedral),
}

fn resolve_system(args: &SystemArgs) -> Result<Group> {
    let (kind, rank) = match args.rank {
        Some(r) => (args.kind.clone(), r),
        None => parse_type_name(&args.kind)?,
    };
    if kind.eq_ignore_ascii_case("I") {
        let m = args.m.ok_or_else(|| Error::Unsupported("type I needs --m".into()))?;
        if rank != 2 {
            return Err(Error::Unsupported("type I has rank 2".into()));
        }
        if coxeter_matrix("I", 2, Some(m)).is_ok() && matches!(m, 2..=6) {
            return Ok(Group::Generic(build_system("I", 2, Some(m))?));
        }
        return Ok(Group::Dihedral(Dihedral::new(m as usize)?));
    }
    Ok(Group::Generic(build_system(&kind, rank, args.m)?))
}

fn label_base<R: Ring>(sys: &CoxeterSystem<R>) -> usize {
    usize::from(sys.label(0) != "s0")
}

/// Parses a word, accepting bare numeric tokens relative to `index_base`.
fn parse_word_with<R: Ring>(sys: &CoxeterSystem<R>, text: &str, index_base: Option<usize>) -> Result<Vec<usize>> {
    let toks: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    if !toks.is_empty() && toks.iter().all(|t| t.chars().all(|c| c.is_ascii_digit())) {
        let base = index_base.unwrap_or_else(|| label_base(sys));
        return toks
            .iter()
            .map(|t| {
                let k: usize = t.parse().map_err(|_| Error::Parse(text.into()))?;
                k.checked_sub(base)
                    .filter(|&i| i < sys.rank())
                    .ok_or_else(|| Error::OutOfRange(format!("generator {k}")))
            })
            .collect();
    }
    sys.parse_word(text)
}

fn coxeter_words<R: Ring>(
    sys: &CoxeterSystem<R>,
    c: &Option<String>,
    all: bool,
    base: Option<usize>,
) -> Result<Vec<Vec<usize>>> {
    if all {
        return Ok(sys.coxeter_elements());
    }
    match c {
        Some(text) => Ok(vec![parse_word_with(sys, text, base)?]),
        None => Ok(vec![(0..sys.rank()).collect()]),
    }
}

fn cmd_tamari(a: &TamariArgs, out: &mut dyn Write) -> Result<bool> {
    check_bound(a.n, a.bound)?;
    let ctx = parse_perm_j(a.n, &a.j)?;
    let tam = tamari_lattice(&ctx);
    let mut checks: Vec<(String, bool, Vec<String>)> = Vec::new();
    let wants = |name: &str| a.check.iter().any(|c| c == name);
    for c in &a.check {
        if !["lattice", "quotient", "congruence", "none"].contains(&c.as_str()) {
            return Err(Error::Parse(format!("unknown check {c:?}")));
        }
    }
    if wants("lattice") {
        let lc = tam.poset.is_lattice();
        checks.push(("lattice".into(), lc.is_lattice(), lattice_witness(&tam.poset, &lc).into_iter().collect()));
    }
    if wants("quotient") || wants("congruence") {
        let report = verify_quotient(&ctx);
        if wants("congruence") {
            checks.push(("congruence".into(), report.classes_are_intervals, report.witnesses.clone()));
        }
        if wants("quotient") {
            let ok = report.down_order_preserving && report.up_order_preserving && report.quotient_isomorphic;
            checks.push(("quotient".into(), ok, report.witnesses.clone()));
        }
    }
    if let Some(path) = &a.dot {
        write_file(path, &tam.poset.to_dot("tamari"))?;
    }
    let passed = checks.iter().all(|c| c.1);
    let quotient_size = crate::perm::multinomial(&ctx);
    match a.out {
        OutFormat::Json => emit_json(
            out,
            &json!({
                "n": a.n,
                "j": perm_j_display(&ctx),
                "quotient_size": quotient_size as u64,
                "elements": tam.elements.len(),
                "checks": checks.iter().map(|(n, ok, w)| json!({"check": n, "pass": ok, "witnesses": w})).collect::<Vec<_>>(),
                "pass": passed,
            }),
        )?,
        OutFormat::Csv => {
            let mut s = String::from("n,j,quotient_size,elements,check,pass\n");
            for (name, ok, _) in &checks {
                s.push_str(&format!(
                    "{},\"{}\",{},{},{},{}\n",
                    a.n,
                    perm_j_display(&ctx),
                    quotient_size,
                    tam.elements.len(),
                    name,
                    ok
                ));
            }
            emit(out, &s)?;
        }
        OutFormat::Human => {
            let mut s = format!(
                "parabolic Tamari lattice n={} J={}: {} elements ({} in the quotient)\n",
                a.n,
                perm_j_display(&ctx),
                tam.elements.len(),
                quotient_size
            );
            for (name, ok, w) in &checks {
                s.push_str(&format!("check {name}: {}\n", if *ok { "pass" } else { "FAIL" }));
                for line in w.iter().take(5) {
                    s.push_str(&format!("  {line}\n"));
                }
            }
            s.push_str(if passed { "pass\n" } else { "FAIL\n" });
            emit(out, &s)?;
        }
    }
    Ok(passed)
}

fn lattice_witness(poset: &FinitePoset, lc: &LatticeCheck) -> Option<String> {
    match lc {
        LatticeCheck::Lattice => None,
        LatticeCheck::NotLattice { a, b, kind, bounds } => {
            let what = match kind {
                Bound::Meet => "maximal lower bounds",
                Bound::Join => "minimal upper bounds",
            };
            let labels: Vec<&str> = bounds.iter().map(|&x| poset.label(x)).collect();
            Some(format!("{} and {} have {what} {{{}}}", poset.label(*a), poset.label(*b), labels.join(", ")))
        }
    }
}

struct CountLine {
    c: String,
    count: u64,
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> Result<bool> {
    let group = resolve_system(&a.system)?;
    let rule: Acceptance = a.decomposition.into();
    let poset_text = a.root_poset.as_deref().map(read_file).transpose()?;
    let (name, j_text, lines, provenance) = match &group {
        Group::Dihedral(d) => {
            if a.decomposition == Rule::Integers {
                return Err(Error::Unsupported("the closed-form dihedral model uses the positive rule".into()));
            }
            let labels = ["s1", "s2"];
            let mut j = Vec::new();
            for tok in a.j.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let label = if tok.starts_with('s') { tok.to_string() } else { format!("s{tok}") };
                j.push(labels.iter().position(|l| *l == label).ok_or_else(|| Error::InvalidJ(tok.into()))?);
            }
            let cs: Vec<Vec<usize>> = if a.all_c {
                vec![vec![0, 1], vec![1, 0]]
            } else {
                match &a.c {
                    Some(t) => {
                        let w: Vec<usize> = t
                            .split(|c: char| c == ',' || c.is_whitespace() || c == 's')
                            .filter(|t| !t.is_empty())
                            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(t.into())).map(|k| k.wrapping_sub(1)))
                            .collect::<Result<_>>()?;
                        vec![w]
                    }
                    None => vec![vec![0, 1]],
                }
            };
            let mut lines = Vec::new();
            for c in &cs {
                let count = match a.family {
                    Family::Nn => d.nonnesting_count(&j),
                    Family::Avoiding | Family::Align => d.counts(&j, c)?.align,
                    Family::Nc => d.counts(&j, c)?.nc,
                    Family::Subword => d.counts(&j, c)?.sw,
                };
                lines.push(CountLine { c: c.iter().map(|&s| labels[s]).collect(), count });
                if a.family == Family::Nn {
                    break;
                }
            }
            let jd = format!("{{{}}}", j.iter().map(|&s| labels[s]).collect::<Vec<_>>().join(","));
            (format!("I2({})", d.m()), jd, lines, "closed-form dihedral model".to_string())
        }
        Group::Generic(sys) => {
            let j = with_system!(sys, s => s.parse_generator_set(&a.j))?;
            let jd = j_display(sys, &j);
            let type_a_linear =
                sys.name().starts_with('A') && !sys.name().starts_with("affine") && a.c.is_none() && !a.all_c;
            let mut lines = Vec::new();
            let provenance;
            if a.family == Family::Nn {
                let count = any_nonnesting_count(sys, &j, poset_text.as_deref())?;
                provenance = if poset_text.is_some() { "root-poset file" } else { "built-in root poset" }.to_string();
                lines.push(CountLine { c: String::new(), count });
            } else if a.family == Family::Avoiding && type_a_linear {
                let n = sys.rank() + 1;
                check_bound(n, a.bound)?;
                let ctx = j_regions(n, &j.iter().map(|s| s + 1).collect::<Vec<_>>())?;
                lines.push(CountLine { c: "linear".into(), count: avoiding_elements(&ctx).len() as u64 });
                provenance = format!("(J,231)-avoiding permutations of S_{n}");
            } else {
                let cs = with_system!(sys, s => coxeter_words(s, &a.c, a.all_c, a.system.index_base))?;
                for c in &cs {
                    let count = with_system!(sys, s => count_generic(s, a.family, &j, c, rule))?;
                    lines.push(CountLine { c: sys.word_string(c), count });
                }
                provenance = format!("exact {} arithmetic, {} decomposition rule", sys.ring_name(), rule_name(rule));
            }
            (sys.name().to_string(), jd, lines, provenance)
        }
    };
    let family = format!("{:?}", a.family).to_lowercase();
    match a.out {
        OutFormat::Json => emit_json(
            out,
            &json!({
                "family": family,
                "group": name,
                "j": j_text,
                "provenance": provenance,
                "results": lines.iter().map(|l| json!({"c": l.c, "count": l.count})).collect::<Vec<_>>(),
            }),
        )?,
        OutFormat::Csv => {
            let mut s = String::from("family,group,j,c,count\n");
            for l in &lines {
                s.push_str(&format!("{family},{name},\"{j_text}\",{},{}\n", l.c, l.count));
            }
            emit(out, &s)?;
        }
        OutFormat::Human => {
            let mut s = String::new();
            if lines.len() == 1 {
                s.push_str(&format!("{}\n", lines[0].count));
            } else {
                for l in &lines {
                    s.push_str(&format!("c={} {}\n", l.c, l.count));
                }
            }
            let c_note =
                if lines.len() == 1 && !lines[0].c.is_empty() { format!(" c={}", lines[0].c) } else { String::new() };
            s.push_str(&format!("# family={family} group={name} J={j_text}{c_note} via {provenance}\n"));
            emit(out, &s)?;
        }
    }
    Ok(true)
}

fn rule_name(rule: Acceptance) -> &'static str {
    match rule {
        Acceptance::Positive => "positive",
        Acceptance::Integers => "integer",
    }
}

fn count_generic<R: Ring>(
    sys: &CoxeterSystem<R>,
    family: Family,
    j: &[usize],
    c: &[usize],
    rule: Acceptance,
) -> Result<u64> {
    Ok(match family {
        Family::Avoiding | Family::Align => parabolic_context(sys, j, c, rule)?.aligned_indices().len() as u64,
        Family::Nc => parabolic_context(sys, j, c, rule)?.noncrossing_elements().len() as u64,
        Family::Subword => cluster_complex(sys, j, c)?.count_facets() as u64,
        Family::Nn => unreachable!("handled by the caller"),
    })
}

fn cmd_tables(a: &TablesArgs, out: &mut dyn Write) -> Result<bool> {
    let suites: Vec<&str> = if a.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&a.suite.as_str()) {
        vec![a.suite.as_str()]
    } else {
        return Err(Error::Unsupported(format!("unknown suite {:?}; expected one of {}", a.suite, SUITES.join(", "))));
    };
    let poset_text = a.root_poset.as_deref().map(read_file).transpose()?;
    let mut all = true;
    let mut json_reports = Vec::new();
    let mut csv_header_done = false;
    for suite in suites {
        let report = run_suite(suite, poset_text.as_deref(), a.decomposition.into())?;
        all &= report.all_match();
        match a.out {
            OutFormat::Human => emit(out, &report.to_human())?,
            OutFormat::Csv => {
                let csv = report.to_csv();
                let body =
                    if csv_header_done { csv.split_once('\n').map(|x| x.1).unwrap_or("").to_string() } else { csv };
                csv_header_done = true;
                emit(out, &body)?;
            }
            OutFormat::Json => json_reports.push(serde_json::to_value(&report).expect("json")),
        }
    }
    if a.out == OutFormat::Json {
        emit_json(out, &json!({"all_match": all, "suites": json_reports}))?;
    }
    Ok(all)
}

fn worked_example(ctx: &JContext) -> Option<bool> {
    if ctx.n() != 10 || ctx.j_set() != [1, 2, 3, 5, 8] {
        return None;
    }
    let nc = SetPartition::from_bumps(10, &[(2, 9), (3, 10), (6, 8)]).ok()?;
    let nn =
        SetPartition::new(10, vec![vec![1], vec![2, 5, 9], vec![3, 6], vec![4], vec![7], vec![8], vec![10]]).ok()?;
    let w: Permutation = "1 7 9 10 2 5 3 4 6 8".parse().ok()?;
    Some(nc_to_perm(&nc, ctx).ok()? == w && nn_to_nc(&nn, ctx).ok()? == nc)
}

fn cmd_bijection(a: &BijectionArgs, out: &mut dyn Write) -> Result<bool> {
    if a.n > MAX_N {
        return Err(Error::Bound(format!("n = {} exceeds {MAX_N}", a.n)));
    }
    if !a.sample {
        check_bound(a.n, a.bound)?;
    }
    let ctx = parse_perm_j(a.n, &a.j)?;
    let report: BijectionReport = if a.sample {
        let avoiding = avoiding_elements(&ctx);
        let nn = enumerate_nn(&ctx);
        let pick = |len: usize| (0..len).step_by(len.div_ceil(250).max(1));
        let ps: Vec<Permutation> = pick(avoiding.len()).map(|i| avoiding[i].clone()).collect();
        let qs: Vec<SetPartition> = pick(nn.len()).map(|i| nn[i].clone()).collect();
        let mut r = verify_bijection_sample(&ctx, &ps, &qs);
        r.avoiding = avoiding.len();
        r.nonnesting = nn.len();
        r.noncrossing = enumerate_nc(&ctx).len();
        r.sampled = false;
        r
    } else {
        verify_bijections(&ctx)
    };
    let kreweras = kreweras_count(&bounding_shape(&ctx));
    let example = worked_example(&ctx);
    let passed = report.passed() && kreweras == report.nonnesting as u128 && example != Some(false);
    match a.out {
        OutFormat::Json => emit_json(
            out,
            &json!({
                "n": a.n,
                "j": perm_j_display(&ctx),
                "sampled": a.sample,
                "report": report,
                "kreweras": kreweras as u64,
                "worked_example": example,
                "pass": passed,
            }),
        )?,
        OutFormat::Csv => emit(
            out,
            &format!(
                "n,j,avoiding,noncrossing,nonnesting,kreweras,perm_round_trips,partition_round_trips,images_valid,pass\n{},\"{}\",{},{},{},{},{},{},{},{}\n",
                a.n,
                perm_j_display(&ctx),
                report.avoiding,
                report.noncrossing,
                report.nonnesting,
                kreweras,
                report.perm_round_trips,
                report.partition_round_trips,
                report.images_valid,
                passed
            ),
        )?,
        OutFormat::Human => {
            let mut s = format!(
                "n={} J={}{}\n  avoiding permutations {}\n  noncrossing partitions {}\n  nonnesting partitions {} (Kreweras determinant {})\n",
                a.n,
                perm_j_display(&ctx),
                if a.sample { " (sampled round trips)" } else { "" },
                report.avoiding,
                report.noncrossing,
                report.nonnesting,
                kreweras
            );
            s.push_str(&format!(
                "  permutation <-> NC round trips: {}\n  NN <-> NC round trips: {}\n  images valid: {}\n",
                ok_str(report.perm_round_trips),
                ok_str(report.partition_round_trips),
                ok_str(report.images_valid)
            ));
            if let Some(ok) = example {
                s.push_str(&format!("  worked example: {}\n", ok_str(ok)));
            }
            for f in report.failures.iter().take(5) {
                s.push_str(&format!("  {f}\n"));
            }
            s.push_str(if passed { "pass\n" } else { "FAIL\n" });
            emit(out, &s)?;
        }
    }
    Ok(passed)
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn t_set(indices: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<String> = indices.into_iter().map(|i| format!("t{}", i + 1)).collect();
    format!("{{{}}}", v.join(","))
}

fn mask_indices(mask: u128) -> Vec<usize> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

fn cmd_aligned(a: &AlignedArgs, out: &mut dyn Write) -> Result<bool> {
    let Group::Generic(sys) = resolve_system(&a.system)? else {
        return Err(Error::Unsupported("use type I with m in 2..=6 for aligned listings".into()));
    };
    with_system!(&sys, s => aligned_generic(s, a, out))
}

fn aligned_generic<R: Ring>(sys: &CoxeterSystem<R>, a: &AlignedArgs, out: &mut dyn Write) -> Result<bool> {
    let word = parse_word_with(sys, &a.word, a.system.index_base)?;
    let ctx = AlignmentContext::new(sys, &word, a.decomposition.into())?;
    let (poset, elems) = ctx.aligned_poset();
    let lattice = a.check_lattice.then(|| poset.is_lattice());
    let mut inspected = Vec::new();
    for text in &a.element {
        let x = sys.element(&parse_word_with(sys, text, a.system.index_base)?);
        let mask = ctx.inversion_mask(&x)?;
        let covers = ctx.cover_indices(&x)?;
        inspected.push((sys.word_string(x.word()), mask_indices(mask), covers, ctx.is_aligned(&x)?));
    }
    if let Some(path) = &a.dot {
        write_file(path, &poset.to_dot("aligned"))?;
    }
    let passed = lattice.as_ref().is_none_or(|l| l.is_lattice());
    let witness = lattice.as_ref().and_then(|l| lattice_witness(&poset, l));
    let words: Vec<String> = elems.iter().map(|e| sys.word_string(e.word())).collect();
    match a.out {
        OutFormat::Json => emit_json(
            out,
            &json!({
                "group": sys.name(),
                "word": sys.word_string(&word),
                "inversion_order": ctx.inv_order().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "decompositions": ctx.decompositions().iter().map(|d| json!({
                    "gamma": d.gamma + 1, "alpha": d.alpha + 1, "beta": d.beta + 1,
                    "a": d.a.to_string(), "b": d.b.to_string()})).collect::<Vec<_>>(),
                "interval_size": ctx.interval().len(),
                "aligned": words,
                "elements": inspected.iter().map(|(w, inv, cov, al)| json!({
                    "element": w, "inv": inv.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "cov": cov.iter().map(|i| i + 1).collect::<Vec<_>>(), "aligned": al})).collect::<Vec<_>>(),
                "lattice": lattice.as_ref().map(|l| l.is_lattice()),
                "witness": witness,
            }),
        )?,
        OutFormat::Csv => {
            let mut s = String::from("element,length\n");
            for e in &elems {
                s.push_str(&format!("{},{}\n", sys.word_string(e.word()), e.length()));
            }
            emit(out, &s)?;
        }
        OutFormat::Human => {
            let mut s = format!("{} word {} (length {})\n", sys.name(), sys.word_string(&word), word.len());
            s.push_str("inversion order:\n");
            for (i, r) in ctx.inv_order().iter().enumerate() {
                s.push_str(&format!(
                    "  t{} = ({})\n",
                    i + 1,
                    r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                ));
            }
            if ctx.decompositions().is_empty() {
                s.push_str("decompositions: none\n");
            } else {
                s.push_str("decompositions:\n");
                for d in ctx.decompositions() {
                    s.push_str(&format!("  t{} = {}*t{} + {}*t{}\n", d.gamma + 1, d.a, d.alpha + 1, d.b, d.beta + 1));
                }
            }
            s.push_str(&format!("interval [e, w]: {} elements; aligned: {}\n", ctx.interval().len(), elems.len()));
            s.push_str(&format!("aligned elements: {}\n", words.join(" ")));
            for (w, inv, cov, al) in &inspected {
                s.push_str(&format!(
                    "element {w}: inv {} cov {} aligned: {}\n",
                    t_set(inv.clone()),
                    t_set(cov.clone()),
                    if *al { "yes" } else { "no" }
                ));
            }
            if let Some(l) = &lattice {
                s.push_str(&format!("lattice: {}\n", if l.is_lattice() { "yes" } else { "no" }));
                if let Some(w) = &witness {
                    s.push_str(&format!("  witness: {w}\n"));
                }
            }
            emit(out, &s)?;
        }
    }
    Ok(passed)
}

/// Whether every reduced word of w is reachable from one by commutations only,
/// i.e. no word in the commutation class contains a braid of length m ≥ 3.
pub fn is_fully_commutative<R: Ring>(sys: &CoxeterSystem<R>, word: &[usize]) -> bool {
    use std::collections::{HashSet, VecDeque};
    let m = sys.coxeter_matrix();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let (s, t) = (w[i], w[i + 1]);
                let mst = m[s][t] as usize;
                if mst >= 3 && j + 1 - i == mst && (i..=j).all(|k| w[k] == if (k - i) % 2 == 0 { s } else { t }) {
                    return false;
                }
            }
            if i + 1 < w.len() && m[w[i]][w[i + 1]] == 2 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    true
}

#[derive(serde::Serialize)]
struct ConjectureRow {
    group: String,
    j: String,
    c: String,
    quotient: usize,
    align: usize,
    nc: usize,
    sw: u64,
    nn: Option<u64>,
    lattice: bool,
    flip_isomorphic: bool,
}

fn cmd_conjectures(a: &ConjecturesArgs, out: &mut dyn Write) -> Result<bool> {
    let (groups, fc_only): (Vec<String>, bool) = if a.scope == "fully-commutative" {
        (["A3", "A4", "B3", "B4", "D4", "H3", "F4"].iter().map(|s| s.to_string()).collect(), true)
    } else {
        (a.scope.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(), a.fully_commutative)
    };
    let poset_text = a.root_poset.as_deref().map(read_file).transpose()?;
    let mut rows = Vec::new();
    for g in &groups {
        let (kind, rank) = parse_type_name(g)?;
        let sys = build_system(&kind, rank, None)?;
        with_system!(&sys, s => conjecture_rows(s, &sys, fc_only, poset_text.as_deref(), a.decomposition.into(), &mut rows))?;
    }
    let passed = rows.iter().all(|r| r.lattice && r.flip_isomorphic && (!fc_only || r.align == r.quotient));
    match a.out {
        OutFormat::Json => emit_json(out, &json!({"instances": rows, "all_pass": passed}))?,
        OutFormat::Csv => {
            let mut s = String::from("group,j,c,quotient,align,nc,sw,nn,lattice,flip_isomorphic\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},\"{}\",{},{},{},{},{},{},{},{}\n",
                    r.group,
                    r.j,
                    r.c,
                    r.quotient,
                    r.align,
                    r.nc,
                    r.sw,
                    r.nn.map(|v| v.to_string()).unwrap_or_default(),
                    r.lattice,
                    r.flip_isomorphic
                ));
            }
            emit(out, &s)?;
        }
        OutFormat::Human => {
            let mut s = String::from("group J c |W^J| align nc sw nn lattice flip-iso\n");
            for r in &rows {
                s.push_str(&format!(
                    "{} {} {} {} {} {} {} {} {} {}\n",
                    r.group,
                    r.j,
                    r.c,
                    r.quotient,
                    r.align,
                    r.nc,
                    r.sw,
                    r.nn.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                    if r.lattice { "yes" } else { "NO" },
                    if r.flip_isomorphic { "yes" } else { "NO" }
                ));
            }
            s.push_str(&format!(
                "{} instances; {}\n",
                rows.len(),
                if passed { "all pass" } else { "some instances FAIL" }
            ));
            emit(out, &s)?;
        }
    }
    Ok(passed)
}

fn conjecture_rows<R: Ring>(
    sys: &CoxeterSystem<R>,
    any: &AnySystem,
    fc_only: bool,
    poset_text: Option<&str>,
    rule: Acceptance,
    rows: &mut Vec<ConjectureRow>,
) -> Result<()> {
    let n = sys.rank();
    let coxeter = sys.coxeter_elements();
    for bits in 0..(1u32 << n) {
        let j: Vec<usize> = (0..n).filter(|s| bits >> s & 1 == 1).collect();
        if fc_only {
            let top = sys.quotient_longest(&j)?;
            if j.len() + 1 != n || !is_fully_commutative(sys, top.word()) {
                continue;
            }
        }
        let nn = match any_nonnesting_count(any, &j, poset_text) {
            Ok(v) => Some(v),
            Err(Error::NoRootPoset(_)) => None,
            Err(e) => return Err(e),
        };
        for c in &coxeter {
            let ctx = parabolic_context(sys, &j, c, rule)?;
            let (poset, _) = ctx.aligned_poset();
            let (flip, _) = cluster_complex(sys, &j, c)?.flip_poset()?;
            rows.push(ConjectureRow {
                group: sys.name().to_string(),
                j: j_display(any, &j),
                c: sys.word_string(c),
                quotient: ctx.interval().len(),
                align: poset.len(),
                nc: ctx.noncrossing_elements().len(),
                sw: flip.len() as u64,
                nn,
                lattice: poset.is_lattice().is_lattice(),
                flip_isomorphic: poset.is_isomorphic(&flip),
            });
        }
    }
    Ok(())
}

fn cmd_facets(a: &FacetsArgs, out: &mut dyn Write) -> Result<bool> {
    let Group::Generic(sys) = resolve_system(&a.system)? else {
        return Err(Error::Unsupported("facet listings need a matrix model".into()));
    };
    with_system!(&sys, s => {
        let j = s.parse_generator_set(&a.j)?;
        let c = coxeter_words(s, &a.c, false, a.system.index_base)?.remove(0);
        let sc = cluster_complex(s, &j, &c)?;
        let (poset, facets) = sc.flip_poset()?;
        if let Some(path) = &a.dot {
            write_file(path, &poset.to_dot("flips"))?;
        }
        let one_based: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|p| p + 1).collect()).collect();
        match a.out {
            OutFormat::Json => emit_json(out, &json!({
                "group": s.name(), "j": j_display(&sys, &j), "c": s.word_string(&c),
                "q": s.word_string(sc.q()), "facets": one_based }))?,
            OutFormat::Csv => {
                let mut text = String::from("facet\n");
                for f in &one_based {
                    text.push_str(&format!("\"{}\"\n", f.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")));
                }
                emit(out, &text)?;
            }
            OutFormat::Human => {
                let mut text = format!("Q = {} ({} letters), {} facets\n", s.word_string(sc.q()), sc.q().len(), facets.len());
                for f in &one_based {
                    text.push_str(&format!("  {{{}}}\n", f.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")));
                }
                emit(out, &text)?;
            }
        }
        Ok(true)
    })
}
