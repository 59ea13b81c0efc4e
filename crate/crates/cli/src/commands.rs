//! Subcommand bodies. Each returns the full text to print on success.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use diskgw::contributions::contribution;
use diskgw::lattice::{generate_configurations, gluing_audit, lattice_graph};
use diskgw::maslov::{maslov_index, FrameLoop};
use diskgw::moduli::{doubled, riemann_roch_index};
use diskgw::partitions::{automorphism_order, cell_summary, enumerate_partitions};
use diskgw::{rational, ContributionTable, Rational};
use serde_json::{json, Map, Value};

use crate::cache::{self, CacheFile};
use crate::{BuiltinLoop, CliError, Format, GraphFormat};

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn contrib(g: u32, h: u32, m: &Rational, format: Format) -> Result<String, CliError> {
    let c = contribution(g, h, m)?;
    Ok(match format {
        Format::Text => format!("{}\n", rational::format(&c)),
        Format::Json => pretty(&json!({
            "genus": g,
            "boundary": h,
            "m": rational::format(m),
            "contribution": rational::format(&c),
        })),
    })
}

/// Fetch the table from the cache when present, checking it against a fresh
/// computation; otherwise compute it and store it.
fn cached_table(max_genus: usize, m: &Rational, path: &Path) -> Result<ContributionTable, CliError> {
    let mut file = CacheFile::load(path)?;
    let key = cache::key(max_genus, m);
    let fresh = ContributionTable::build(max_genus, m.clone())?;
    match file.entries.get(&key) {
        Some(stored) if *stored == fresh => Ok(fresh),
        Some(_) => Err(CliError::Invariant(format!(
            "cache entry {key} in {} disagrees with recomputation",
            path.display()
        ))),
        None => {
            file.entries.insert(key, fresh.clone());
            file.save(path)?;
            Ok(fresh)
        }
    }
}

pub fn series(
    max_genus: usize,
    m: Rational,
    format: Format,
    full_table: bool,
    cache_path: Option<&Path>,
) -> Result<String, CliError> {
    let table = match cache_path {
        Some(p) => cached_table(max_genus, &m, p)?,
        None => ContributionTable::build(max_genus, m)?,
    };
    let mut out = String::new();
    match (format, full_table) {
        (Format::Json, true) => out = pretty(&serde_json::to_value(&table).expect("table serializes")),
        (Format::Json, false) => {
            let obj: Map<String, Value> = table
                .contrib
                .iter()
                .map(|(g, c)| (g.to_string(), Value::String(rational::format(c))))
                .collect();
            out = pretty(&Value::Object(obj));
        }
        (Format::Text, false) => {
            for c in table.contrib.values() {
                writeln!(out, "{}", rational::format(c)).unwrap();
            }
        }
        (Format::Text, true) => {
            writeln!(out, "m = {}", rational::format(&table.m)).unwrap();
            writeln!(out, "{:>3}  {:>28}  {:>28}", "g", "m*alpha_g", "C(g,1)").unwrap();
            for (g, c) in &table.contrib {
                let a = table.alpha.get(g).map(rational::format).unwrap_or_else(|| "-".into());
                writeln!(out, "{g:>3}  {a:>28}  {:>28}", rational::format(c)).unwrap();
            }
        }
    }
    Ok(out)
}

pub fn partitions(g: u32, h: u32, format: Format) -> Result<String, CliError> {
    let parts = enumerate_partitions(g, h);
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for p in &parts {
                writeln!(out, "{p}  |Aut| = {}", automorphism_order(p)).unwrap();
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = parts
                .iter()
                .map(|p| {
                    let mut v = serde_json::to_value(p).expect("partitions serialize");
                    v["aut"] = json!(automorphism_order(p));
                    v
                })
                .collect();
            pretty(&Value::Array(items))
        }
    })
}

pub fn cells(g: u32, h: u32, format: Format, graph: Option<GraphFormat>) -> Result<String, CliError> {
    if let Some(gf) = graph {
        let lg = lattice_graph(g, h);
        return Ok(match gf {
            GraphFormat::Dot => lg.to_dot(),
            GraphFormat::Json => pretty(&lg.to_json()),
        });
    }
    let summaries: Vec<_> = enumerate_partitions(g, h).iter().map(cell_summary).collect();
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{:<24} {:>4} {:>8} {:>12} {:>8}",
                "cell", "dim", "ob_rank", "gluing_rank", "obF_rank"
            )
            .unwrap();
            for s in &summaries {
                writeln!(
                    out,
                    "{:<24} {:>4} {:>8} {:>12} {:>8}",
                    s.partition.to_string(),
                    s.dim,
                    s.ob_rank,
                    s.gluing_rank,
                    s.obf_rank
                )
                .unwrap();
            }
            out
        }
        Format::Json => pretty(&serde_json::to_value(&summaries).expect("summaries serialize")),
    })
}

pub fn audit(g: u32, h: u32, format: Format) -> Result<String, CliError> {
    let expected = 3 * doubled(g, h);
    let graph = lattice_graph(g, h);
    let mut cells = Vec::new();
    let mut total_configs = 0usize;
    for p in &graph.vertices {
        let s = cell_summary(p);
        let configs = generate_configurations(p);
        for c in &configs {
            let a = gluing_audit(c)?;
            if !a.ok {
                return Err(CliError::Invariant(format!(
                    "gluing audit failed for {c}: {} + {} = {} != {}",
                    a.dimension, a.gluing, a.total, a.expected
                )));
            }
        }
        total_configs += configs.len();
        cells.push((s, configs.len()));
    }
    if !graph.is_connected() {
        return Err(CliError::Invariant(format!(
            "cell lattice of ({g},{h}) is not connected"
        )));
    }
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "type ({g},{h}): doubled genus {}, 3g~ = {expected}", doubled(g, h)).unwrap();
            for (s, n) in &cells {
                writeln!(
                    out,
                    "cell {}: dim {}, ob_rank {}, gluing_rank {}, {} configurations ok",
                    s.partition, s.dim, s.ob_rank, s.gluing_rank, n
                )
                .unwrap();
            }
            writeln!(out, "configurations: {total_configs}, all ok").unwrap();
            writeln!(
                out,
                "lattice: {} cells, {} edges, connected",
                graph.vertices.len(),
                graph.edges.len()
            )
            .unwrap();
            out
        }
        Format::Json => pretty(&json!({
            "genus": g,
            "boundary": h,
            "expected": expected,
            "cells": cells.iter().map(|(s, n)| {
                let mut v = serde_json::to_value(s).expect("summary serializes");
                v["configurations"] = json!(n);
                v
            }).collect::<Vec<_>>(),
            "configurations": total_configs,
            "edges": graph.edges.len(),
            "connected": true,
            "ok": true,
        })),
    })
}

fn read_loop(input: &Path) -> Result<FrameLoop, CliError> {
    let text = if input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("reading {}: {e}", input.display())))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    FrameLoop::from_json(&v).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn maslov(
    input: Option<&Path>,
    builtin: Option<BuiltinLoop>,
    samples: usize,
    euler_char: Option<i64>,
    format: Format,
) -> Result<String, CliError> {
    let frame = match (input, builtin) {
        (Some(p), _) => read_loop(p)?,
        (None, Some(BuiltinLoop::DiskTangent)) => FrameLoop::disk_tangent(samples)?,
        (None, Some(BuiltinLoop::HalfTurn)) => FrameLoop::half_turn(samples)?,
        (None, None) => return Err(CliError::Usage("either --input or --builtin is required".into())),
    };
    let mu = maslov_index(&frame)?;
    let rank = frame.dim() as u32;
    let index = euler_char.map(|chi| riemann_roch_index(rank, chi, mu));
    Ok(match format {
        Format::Text => {
            let mut out = format!("{mu}\n");
            if let Some(i) = index {
                writeln!(out, "index {i}").unwrap();
            }
            out
        }
        Format::Json => {
            let mut v = json!({ "rank": rank, "samples": frame.len(), "maslov": mu });
            if let (Some(chi), Some(i)) = (euler_char, index) {
                v["euler_char"] = json!(chi);
                v["index"] = json!(i);
            }
            pretty(&v)
        }
    })
}
