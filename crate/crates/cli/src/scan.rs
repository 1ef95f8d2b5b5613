//! The `scan` subcommand: pretzel checks over a parameter rectangle on a
//! bounded worker pool, merged back in `(m, n)` order.

use std::io::Write;
use std::path::PathBuf;

use charring::pretzel::grid;
use charring::Strategy;
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::cell::{evaluate, Cell, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub m_range: (i64, i64),
    pub n_range: (i64, i64),
    pub checks: Vec<Check>,
    pub output_path: Option<PathBuf>,
    pub format: ScanFormat,
    pub parallelism: usize,
    #[serde(skip)]
    pub strategy: Strategy,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), String> {
        for (name, (lo, hi)) in [("m", self.m_range), ("n", self.n_range)] {
            if lo > hi {
                return Err(format!("{name} range {lo}:{hi} is empty"));
            }
        }
        if self.parallelism == 0 {
            return Err("parallelism must be at least 1".into());
        }
        Ok(())
    }
}

/// `A:B` as an inclusive range.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound {t:?}: {e}"));
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

pub fn parse_checks(items: &[String]) -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for item in items.iter().map(|s| s.trim()) {
        if item == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(Check::from_str(item, false).map_err(|_| format!("unknown check {item:?}"))?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn run_scan(cfg: &ScanConfig) -> Result<Vec<Cell>, Box<dyn std::error::Error>> {
    let params = grid(cfg.m_range, cfg.n_range);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.parallelism).build()?;
    // Indexed collect keeps the input order whatever the completion order.
    let cells: Result<Vec<Cell>, charring::Error> =
        pool.install(|| params.par_iter().map(|&p| evaluate(p, &cfg.checks, cfg.strategy)).collect());
    Ok(cells?)
}

#[derive(Serialize)]
struct ScanDocument<'a> {
    config: &'a ScanConfig,
    cells: &'a [Cell],
    failed: Vec<String>,
}

pub fn write_cells(cfg: &ScanConfig, cells: &[Cell], out: &mut dyn Write) -> Result<(), Box<dyn std::error::Error>> {
    match cfg.format {
        ScanFormat::Json => {
            let failed = cells.iter().filter(|c| !c.passed()).map(|c| c.params.to_string()).collect();
            serde_json::to_writer_pretty(&mut *out, &ScanDocument { config: cfg, cells, failed })?;
            writeln!(out)?;
        }
        ScanFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header =
                vec!["m", "n", "generator", "q", "q_total_degree", "q_y_degree", "leading_coeff", "verdict"];
            header.extend(cfg.checks.iter().map(|c| c.name()));
            header.push("passed");
            header.push("total_ms");
            w.write_record(&header)?;
            for c in cells {
                let mut row = vec![
                    c.params.m.to_string(),
                    c.params.n.to_string(),
                    c.generator.to_string(),
                    c.q.to_string(),
                    c.degrees.total.map_or("-inf".into(), |d| d.to_string()),
                    c.y_degree_text(),
                    c.leading_term.coeff.to_string(),
                    c.report.as_ref().map_or(String::new(), |r| format!("{:?}", r.verdict)),
                ];
                row.extend(cfg.checks.iter().map(|k| c.checks.get(k).copied().unwrap_or(false).to_string()));
                row.push(c.passed().to_string());
                row.push(format!("{:.3}", c.timings_ms.values().sum::<f64>()));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
