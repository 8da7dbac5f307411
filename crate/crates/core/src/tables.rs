//! Recomputation of the embedded expected tables of parabolic Catalan counts.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::align::{parabolic_context, Acceptance};
use crate::coxeter::{build_system, parse_type_name, AnySystem, CoxeterSystem};
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::rootposet::{root_poset, RootPoset};
use crate::subword::cluster_complex;
use crate::with_system;

const EXPECTED: &str = include_str!("../data/expected_tables.toml");

pub const SUITES: [&str; 5] = ["a4b4", "d4", "h3", "h4", "f4"];

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Table {
    pub suite: String,
    pub group: String,
    pub source: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Row {
    pub j: String,
    pub cells: Vec<u64>,
    pub nn: u64,
}

#[derive(Deserialize)]
struct TableFile {
    table: Vec<Table>,
}

pub fn expected_tables() -> Vec<Table> {
    toml::from_str::<TableFile>(EXPECTED).expect("embedded table data parses").table
}

/// Sizes of the aligned set, its ψ image and the cluster complex facets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCounts {
    pub align: u64,
    pub nc: u64,
    pub sw: u64,
}

impl FamilyCounts {
    pub fn agree(&self) -> bool {
        self.align == self.nc && self.nc == self.sw
    }
}

pub fn family_counts<R: Ring>(
    sys: &CoxeterSystem<R>,
    j: &[usize],
    c: &[usize],
    rule: Acceptance,
) -> Result<FamilyCounts> {
    let ctx = parabolic_context(sys, j, c, rule)?;
    Ok(FamilyCounts {
        align: ctx.aligned_indices().len() as u64,
        nc: ctx.noncrossing_elements().len() as u64,
        sw: cluster_complex(sys, j, c)?.count_facets() as u64,
    })
}

pub fn any_family_counts(sys: &AnySystem, j: &[usize], c: &[usize], rule: Acceptance) -> Result<FamilyCounts> {
    with_system!(sys, s => family_counts(s, j, c, rule))
}

/// NN count from the built-in root poset or from a root-poset file.
pub fn any_nonnesting_count(sys: &AnySystem, j: &[usize], poset_file: Option<&str>) -> Result<u64> {
    with_system!(sys, s => {
        let rp = match poset_file {
            Some(text) => RootPoset::parse(s, text)?,
            None => root_poset(s)?,
        };
        Ok(rp.nonnesting_count(s.rank(), j) as u64)
    })
}

pub fn system_for_group(group: &str) -> Result<AnySystem> {
    let (kind, rank) = parse_type_name(group)?;
    build_system(&kind, rank, None)
}

pub fn j_display(sys: &AnySystem, j: &[usize]) -> String {
    let labels: Vec<String> = j.iter().map(|&s| sys.word_string(&[s])).collect();
    format!("{{{}}}", labels.join(","))
}

#[derive(Clone, Debug, Serialize)]
pub struct CellResult {
    pub group: String,
    pub j: String,
    pub c: String,
    pub expected: u64,
    pub counts: FamilyCounts,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NnStatus {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct NnResult {
    pub group: String,
    pub j: String,
    pub expected: u64,
    pub computed: Option<u64>,
    pub status: NnStatus,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cells: Vec<CellResult>,
    pub nn: Vec<NnResult>,
}

impl SuiteReport {
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(|c| c.matches) && self.nn.iter().all(|n| n.status != NnStatus::Mismatch)
    }

    pub fn mismatches(&self) -> usize {
        self.cells.iter().filter(|c| !c.matches).count()
            + self.nn.iter().filter(|n| n.status == NnStatus::Mismatch).count()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,group,family,j,c,expected,align,nc,sw,nn,status\n");
        for c in &self.cells {
            let _ = writeln!(
                s,
                "{},{},catalan,\"{}\",{},{},{},{},{},,{}",
                self.suite,
                c.group,
                c.j,
                c.c,
                c.expected,
                c.counts.align,
                c.counts.nc,
                c.counts.sw,
                if c.matches { "match" } else { "mismatch" }
            );
        }
        for n in &self.nn {
            let computed = n.computed.map(|v| v.to_string()).unwrap_or_default();
            let status = serde_json::to_value(n.status).expect("serializable");
            let _ = writeln!(
                s,
                "{},{},nn,\"{}\",,{},,,,{},{}",
                self.suite,
                n.group,
                n.j,
                n.expected,
                computed,
                status.as_str().unwrap_or_default()
            );
        }
        s
    }

    pub fn to_human(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        let mut last_group = "";
        for c in &self.cells {
            if c.group != last_group {
                let _ = writeln!(s, "group {}", c.group);
                last_group = &c.group;
            }
            let _ = writeln!(
                s,
                "  J={:<14} c={:<10} expected {:>4}  align {:>4} nc {:>4} sw {:>4}  {}",
                c.j,
                c.c,
                c.expected,
                c.counts.align,
                c.counts.nc,
                c.counts.sw,
                if c.matches { "ok" } else { "MISMATCH" }
            );
        }
        for n in &self.nn {
            let computed = n.computed.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let status = match n.status {
                NnStatus::Match => "ok",
                NnStatus::Mismatch => "MISMATCH",
                NnStatus::Skipped => "skipped",
            };
            let _ = writeln!(
                s,
                "  {} NN J={:<14} expected {:>4}  computed {:>4}  {}{}",
                n.group,
                n.j,
                n.expected,
                computed,
                status,
                n.note.as_ref().map(|t| format!(" ({t})")).unwrap_or_default()
            );
        }
        let _ = writeln!(
            s,
            "{}: {} cells, {} mismatches",
            if self.all_match() { "PASS" } else { "FAIL" },
            self.cells.len() + self.nn.len(),
            self.mismatches()
        );
        s
    }
}

/// Recomputes every cell of a suite. The root-poset file, if any, is used for
/// groups without a built-in root poset.
pub fn run_suite(suite: &str, poset_file: Option<&str>, rule: Acceptance) -> Result<SuiteReport> {
    let tables: Vec<Table> = expected_tables().into_iter().filter(|t| t.suite == suite).collect();
    if tables.is_empty() {
        return Err(Error::Unsupported(format!("unknown suite {suite:?}")));
    }
    let mut cells = Vec::new();
    let mut nn = Vec::new();
    for table in &tables {
        let sys = system_for_group(&table.group)?;
        let columns: Vec<Vec<usize>> = if table.columns == ["all"] {
            with_system!(&sys, s => s.coxeter_elements())
        } else {
            table.columns.iter().map(|c| sys.parse_word(c)).collect::<Result<_>>()?
        };
        let mut tasks = Vec::new();
        for row in &table.rows {
            let j = with_system!(&sys, s => s.parse_generator_set(&row.j))?;
            for (k, c) in columns.iter().enumerate() {
                let expected = if row.cells.len() == 1 { row.cells[0] } else { row.cells[k] };
                tasks.push((j.clone(), c.clone(), expected));
            }
        }
        let results: Vec<Result<CellResult>> = tasks
            .par_iter()
            .map(|(j, c, expected)| {
                let counts = any_family_counts(&sys, j, c, rule)?;
                Ok(CellResult {
                    group: table.group.clone(),
                    j: j_display(&sys, j),
                    c: sys.word_string(c),
                    expected: *expected,
                    counts,
                    matches: counts.agree() && counts.align == *expected,
                })
            })
            .collect();
        for r in results {
            cells.push(r?);
        }
        for row in &table.rows {
            let j = with_system!(&sys, s => s.parse_generator_set(&row.j))?;
            let (computed, note) = match any_nonnesting_count(&sys, &j, None) {
                Ok(v) => (Some(v), None),
                Err(Error::NoRootPoset(_)) => match poset_file {
                    Some(text) => {
                        (Some(any_nonnesting_count(&sys, &j, Some(text))?), Some("root-poset file".to_string()))
                    }
                    None => (None, Some("no root poset; pass --root-poset FILE".to_string())),
                },
                Err(e) => return Err(e),
            };
            let status = match computed {
                None => NnStatus::Skipped,
                Some(v) if v == row.nn => NnStatus::Match,
                Some(_) => NnStatus::Mismatch,
            };
            nn.push(NnResult {
                group: table.group.clone(),
                j: j_display(&sys, &j),
                expected: row.nn,
                computed,
                status,
                note,
            });
        }
    }
    Ok(SuiteReport { suite: suite.to_string(), cells, nn })
}
