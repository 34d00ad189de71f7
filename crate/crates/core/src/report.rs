//! Report records and their table / JSON / CSV renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cycles::{enumerate_alternating_cycles, packing_from_cycles, AltCycle, CyclePacking};
use crate::error::{Error, Result};
use crate::forcing::{forcing_from_cycles, forcing_number, Engine, ForcingResult};
use crate::graph::Graph;
use crate::matching::{format_edge_list, Matching};
use crate::orbit::{Orbit, SymmetryGroup};
use crate::poly::{ForcingPolynomial, PolyStats};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::domain(format!("unknown format '{s}'"))),
        }
    }
}

fn unsupported(what: &str, format: Format) -> Error {
    Error::domain(format!("{what} cannot be rendered as {format:?}"))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Forcing data for a single perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingRecord {
    pub matching: BitSet,
    pub forcing_number: usize,
    pub witness: BitSet,
    pub packing_size: usize,
    pub n_alt_cycles: usize,
}

pub fn analyze_matching(g: &Graph, m: Matching, engine: Engine) -> Result<MatchingRecord> {
    let cycles = enumerate_alternating_cycles(g, m)?;
    let result: ForcingResult = match engine {
        Engine::HittingSet => forcing_from_cycles(&cycles),
        _ => forcing_number(g, m, engine)?,
    };
    let packing = packing_from_cycles(&cycles);
    Ok(MatchingRecord {
        matching: m.edges(),
        forcing_number: result.forcing_number,
        witness: result.witness,
        packing_size: packing.size,
        n_alt_cycles: cycles.len(),
    })
}

pub fn render_graph(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Dot => g.to_dot(),
        Format::Json => to_json(&g.dump()),
        Format::Csv => {
            let mut out = String::from("index,a,b\n");
            for e in 0..g.edge_count() {
                let [a, b] = g.edge(e).ends;
                let _ = writeln!(out, "{e},{},{}", g.vertex_name(a), g.vertex_name(b));
            }
            out
        }
        Format::Table => {
            let report = crate::graph::validate(g);
            let mut out = String::new();
            if let Some(p) = g.gp_params() {
                let _ = writeln!(out, "GP({},{})", p.n, p.k);
            }
            let _ = writeln!(out, "vertices: {}", g.vertex_count());
            let _ = writeln!(out, "edges: {}", g.edge_count());
            match report.regular_degree {
                Some(d) => {
                    let _ = writeln!(out, "regular: {d}");
                }
                None => out.push_str("regular: no\n"),
            }
            if report.is_ok() {
                out.push_str("valid: ok\n");
            } else {
                for v in &report.violations {
                    let _ = writeln!(out, "violation: {v}");
                }
            }
            for e in 0..g.edge_count() {
                let _ = writeln!(out, "{e:>4}  {}", g.edge_name(e));
            }
            out
        }
    })
}

pub fn render_matchings(g: &Graph, matchings: &[Matching], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&matchings),
        Format::Csv => {
            let mut out = String::from("index,matching\n");
            for (i, m) in matchings.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", csv_field(&m.to_text(g)));
            }
            out
        }
        Format::Table => {
            let mut out = format!("{} perfect matchings\n", matchings.len());
            for (i, m) in matchings.iter().enumerate() {
                let _ = writeln!(out, "{:>5}  {}", i + 1, m.to_text(g));
            }
            out
        }
        Format::Dot => return Err(unsupported("matchings", format)),
    })
}

pub fn render_record(g: &Graph, r: &MatchingRecord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(r),
        Format::Csv => format!(
            "matching,forcing_number,witness,packing_size,n_alt_cycles\n{},{},{},{},{}\n",
            csv_field(&format_edge_list(g, r.matching)),
            r.forcing_number,
            csv_field(&format_edge_list(g, r.witness)),
            r.packing_size,
            r.n_alt_cycles
        ),
        Format::Table => format!(
            "matching: {}\nforcing number: {}\nwitness: {}\npacking size: {}\nalternating cycles: {}\n",
            format_edge_list(g, r.matching),
            r.forcing_number,
            format_edge_list(g, r.witness),
            r.packing_size,
            r.n_alt_cycles
        ),
        Format::Dot => return Err(unsupported("forcing results", format)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub walk: String,
    pub length: usize,
    pub vertices: Vec<usize>,
    pub matched_edges: BitSet,
}

impl CycleRecord {
    pub fn new(g: &Graph, c: &AltCycle) -> Self {
        CycleRecord {
            walk: c.to_text(g),
            length: c.len(),
            vertices: c.vertices.clone(),
            matched_edges: c.matched_edges,
        }
    }
}

pub fn render_cycles(g: &Graph, cycles: &[AltCycle], format: Format) -> Result<String> {
    let records: Vec<CycleRecord> = cycles.iter().map(|c| CycleRecord::new(g, c)).collect();
    Ok(match format {
        Format::Json => to_json(&records),
        Format::Csv => {
            let mut out = String::from("index,length,walk\n");
            for (i, r) in records.iter().enumerate() {
                let _ = writeln!(out, "{i},{},{}", r.length, r.walk);
            }
            out
        }
        Format::Table => {
            let mut out = format!("{} alternating cycles\n", records.len());
            for (i, r) in records.iter().enumerate() {
                let _ = writeln!(out, "{:>5}  {:>3}  {}", i + 1, r.length, r.walk);
            }
            out
        }
        Format::Dot => return Err(unsupported("cycles", format)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingRecord {
    pub size: usize,
    pub cycles: Vec<CycleRecord>,
}

pub fn render_packing(g: &Graph, packing: &CyclePacking, format: Format) -> Result<String> {
    let record = PackingRecord {
        size: packing.size,
        cycles: packing
            .cycles
            .iter()
            .map(|c| CycleRecord::new(g, c))
            .collect(),
    };
    Ok(match format {
        Format::Json => to_json(&record),
        Format::Table | Format::Csv => {
            let mut out = match format {
                Format::Csv => String::from("index,length,walk\n"),
                _ => format!("packing size: {}\n", record.size),
            };
            for (i, r) in record.cycles.iter().enumerate() {
                let _ = match format {
                    Format::Csv => writeln!(out, "{i},{},{}", r.length, r.walk),
                    _ => writeln!(out, "{:>5}  {:>3}  {}", i + 1, r.length, r.walk),
                };
            }
            out
        }
        Format::Dot => return Err(unsupported("packings", format)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub pm_count: u64,
    /// Exact, e.g. `42/17`.
    pub average_forcing: String,
    pub average_forcing_decimal: String,
    pub spectrum: Vec<usize>,
    pub min_forcing: usize,
    pub max_forcing: usize,
}

impl From<&PolyStats> for StatsRecord {
    fn from(s: &PolyStats) -> Self {
        StatsRecord {
            pm_count: s.pm_count,
            average_forcing: s.average_fraction(),
            average_forcing_decimal: s.average_decimal(),
            spectrum: s.spectrum.clone(),
            min_forcing: s.min_forcing,
            max_forcing: s.max_forcing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub no: usize,
    pub representative_edges: BitSet,
    pub representative: String,
    pub pmc: usize,
    #[serde(rename = "fn")]
    pub forcing_number: usize,
}

pub fn orbit_rows(g: &Graph, orbits: &[Orbit]) -> Vec<OrbitRow> {
    orbits
        .iter()
        .enumerate()
        .map(|(i, o)| OrbitRow {
            no: i + 1,
            representative_edges: o.representative.edges(),
            representative: o.representative.to_text(g),
            pmc: o.size,
            forcing_number: o.forcing_number,
        })
        .collect()
}

/// Polynomial, statistics and (optionally) the orbit table of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub n: usize,
    pub k: usize,
    pub polynomial: ForcingPolynomial,
    pub polynomial_text: String,
    pub stats: StatsRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<SymmetryGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitRow>>,
}

impl PolyReport {
    pub fn new(
        g: &Graph,
        polynomial: ForcingPolynomial,
        orbits: Option<(SymmetryGroup, &[Orbit])>,
    ) -> Result<Self> {
        let p = g
            .gp_params()
            .ok_or_else(|| Error::domain("reports need a generalized Petersen graph"))?;
        let stats = StatsRecord::from(&polynomial.stats()?);
        Ok(PolyReport {
            n: p.n,
            k: p.k,
            polynomial_text: polynomial.to_string(),
            polynomial,
            stats,
            group: orbits.map(|(group, _)| group),
            orbits: orbits.map(|(_, o)| orbit_rows(g, o)),
        })
    }
}

fn orbit_table_text(r: &PolyReport, rows: &[OrbitRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:>4}  {:>3}  representative",
        "NO", "PMC", "FN"
    );
    for row in rows {
        let _ = writeln!(
            out,
            "{:>3}  {:>4}  {:>3}  {}",
            row.no, row.pmc, row.forcing_number, row.representative
        );
    }
    let _ = writeln!(out, "FP-{}  {}", r.n, r.polynomial_text);
    out
}

pub fn render_poly(r: &PolyReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(r),
        Format::Csv => match &r.orbits {
            Some(rows) => render_orbit_csv(rows),
            None => {
                let mut out = String::from("exponent,coefficient\n");
                for (e, c) in r.polynomial.terms() {
                    let _ = writeln!(out, "{e},{c}");
                }
                out
            }
        },
        Format::Table => {
            let s = &r.stats;
            let mut out = format!("{}\n", r.polynomial_text);
            let _ = writeln!(out, "perfect matchings: {}", s.pm_count);
            let _ = writeln!(
                out,
                "average forcing number: {} = {}",
                s.average_forcing, s.average_forcing_decimal
            );
            let spectrum: Vec<String> = s.spectrum.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "forcing spectrum: {{{}}}", spectrum.join(","));
            let _ = writeln!(out, "min forcing number: {}", s.min_forcing);
            let _ = writeln!(out, "max forcing number: {}", s.max_forcing);
            if let Some(rows) = &r.orbits {
                out.push('\n');
                out.push_str(&orbit_table_text(r, rows));
            }
            out
        }
        Format::Dot => return Err(unsupported("polynomials", format)),
    })
}

fn render_orbit_csv(rows: &[OrbitRow]) -> String {
    let mut out = String::from("no,pmc,fn,representative\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.no,
            row.pmc,
            row.forcing_number,
            csv_field(&row.representative)
        );
    }
    out
}

/// The orbit table alone (NO, PMC, FN, representative) with the polynomial
/// footer.
pub fn render_orbit_table(r: &PolyReport, format: Format) -> Result<String> {
    let rows = r
        .orbits
        .as_deref()
        .ok_or_else(|| Error::domain("report carries no orbits"))?;
    Ok(match format {
        Format::Table => orbit_table_text(r, rows),
        Format::Csv => render_orbit_csv(rows),
        Format::Json => to_json(r),
        Format::Dot => return Err(unsupported("orbit tables", format)),
    })
}
