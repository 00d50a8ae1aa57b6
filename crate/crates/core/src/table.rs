//! Distribution of chromatic lengths over the cubic graphs of each order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{EnumerateError, Provider};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::sequence::SSequence;
use crate::solver::{chromatic_length_stats, ChromaticLength, SolverOptions};

#[derive(Debug, Error)]
pub enum TableError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("budget exhausted on {graph6} (order {n}): chromatic length at least {lower_bound}")]
    Unknown { n: usize, graph6: String, lower_bound: usize },
    #[error("{graph6} (order {n}) is not colorable with the whole family")]
    ExceedsFamily { n: usize, graph6: String },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TableMetadata {
    pub provider: String,
    pub max_nodes: Option<u64>,
    /// Search nodes over all graphs; independent of scheduling.
    pub solver_nodes: u64,
    pub graphs: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `rows[n][k]` counts the graphs of order `n` whose chromatic length in
/// `family` is `k`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ChromaticTable {
    pub family: SSequence,
    pub rows: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub metadata: TableMetadata,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(TableFormat::Json),
            "csv" => Ok(TableFormat::Csv),
            "text" => Ok(TableFormat::Text),
            other => Err(format!("unknown format `{other}` (json, csv, text)")),
        }
    }
}

/// Classifies every graph the provider yields for orders `4..=n_max`.
/// Runs on the current rayon pool.
pub fn build_table(
    family: &SSequence,
    n_max: usize,
    provider: &Provider,
    opts: &SolverOptions,
) -> Result<ChromaticTable, TableError> {
    let start = Instant::now();
    let graphs = provider.graphs(4, n_max)?;
    let mut table = table_for(family, &graphs, opts)?;
    table.metadata.provider = provider.describe();
    table.metadata.elapsed = start.elapsed();
    Ok(table)
}

/// Same as [`build_table`] over an explicit collection.
pub fn table_for(
    family: &SSequence,
    graphs: &BTreeMap<usize, Vec<Graph>>,
    opts: &SolverOptions,
) -> Result<ChromaticTable, TableError> {
    let start = Instant::now();
    let mut rows = BTreeMap::new();
    let mut solver_nodes = 0;
    let mut count = 0;
    for (&n, list) in graphs {
        let results: Vec<(usize, u64)> = list
            .par_iter()
            .map(|g| {
                let (len, stats) = chromatic_length_stats(g, family, opts);
                match len {
                    ChromaticLength::Length(k) => Ok((k, stats.nodes)),
                    ChromaticLength::Unknown { lower_bound } => Err(TableError::Unknown {
                        n,
                        graph6: write_graph6(g),
                        lower_bound,
                    }),
                    ChromaticLength::ExceedsFamily => Err(TableError::ExceedsFamily {
                        n,
                        graph6: write_graph6(g),
                    }),
                }
            })
            .collect::<Result<_, _>>()?;
        let row: &mut BTreeMap<usize, usize> = rows.entry(n).or_default();
        for (k, nodes) in results {
            *row.entry(k).or_default() += 1;
            solver_nodes += nodes;
        }
        count += list.len();
    }
    Ok(ChromaticTable {
        family: family.clone(),
        rows,
        metadata: TableMetadata {
            provider: "explicit".into(),
            max_nodes: opts.budget.max_nodes,
            solver_nodes,
            graphs: count,
            elapsed: start.elapsed(),
        },
    })
}

impl ChromaticTable {
    /// Prefix lengths from the smallest to the largest observed.
    pub fn columns(&self) -> Vec<usize> {
        let lens = self.rows.values().flat_map(|r| r.keys().copied());
        match (lens.clone().min(), lens.max()) {
            (Some(lo), Some(hi)) => (lo..=hi).collect(),
            _ => Vec::new(),
        }
    }

    /// Counts for order `n` over [`Self::columns`].
    pub fn row(&self, n: usize) -> Vec<usize> {
        let row = self.rows.get(&n);
        self.columns()
            .iter()
            .map(|k| row.and_then(|r| r.get(k)).copied().unwrap_or(0))
            .collect()
    }

    fn column_label(&self, k: usize) -> String {
        let terms: Vec<String> = self.family.terms()[..k].iter().map(u32::to_string).collect();
        format!("({})", terms.join(","))
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Json => {
                // through Value so that keys come out sorted
                let value = serde_json::to_value(self).expect("table serializes");
                serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
            }
            TableFormat::Csv => {
                let cols = self.columns();
                let mut out = String::from("n");
                for &k in &cols {
                    write!(out, ",\"{}\"", self.column_label(k)).unwrap();
                }
                out.push_str(",total\n");
                for &n in self.rows.keys() {
                    let row = self.row(n);
                    write!(out, "{n}").unwrap();
                    for c in &row {
                        write!(out, ",{c}").unwrap();
                    }
                    writeln!(out, ",{}", row.iter().sum::<usize>()).unwrap();
                }
                out
            }
            TableFormat::Text => {
                let cols = self.columns();
                let labels: Vec<String> = cols.iter().map(|&k| self.column_label(k)).collect();
                let widths: Vec<usize> = labels.iter().map(|l| l.len().max(6)).collect();
                let mut out = format!("{:>4}", "n");
                for (l, w) in labels.iter().zip(&widths) {
                    write!(out, "  {l:>w$}").unwrap();
                }
                out.push_str("   total\n");
                for &n in self.rows.keys() {
                    let row = self.row(n);
                    write!(out, "{n:>4}").unwrap();
                    for (c, w) in row.iter().zip(&widths) {
                        write!(out, "  {c:>w$}").unwrap();
                    }
                    writeln!(out, "  {:>6}", row.iter().sum::<usize>()).unwrap();
                }
                out
            }
        }
    }
}
