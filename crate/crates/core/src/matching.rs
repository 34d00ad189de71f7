//! Perfect matching enumeration and constrained counting.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A perfect matching, stored as a set of edge indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching(BitSet);

impl Matching {
    /// Wraps `edges` after checking that they form a perfect matching of `g`.
    pub fn new(g: &Graph, edges: BitSet) -> Result<Matching> {
        match cover_defect(g, edges) {
            None => Ok(Matching(edges)),
            Some(defect) => Err(Error::NotPerfectMatching(defect.describe(g))),
        }
    }

    /// Parses the text form `u0-u2,u1-u3,...`.
    pub fn parse(g: &Graph, text: &str) -> Result<Matching> {
        Matching::new(g, parse_edge_list(g, text)?)
    }

    #[inline]
    pub fn edges(self) -> BitSet {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// Text form: edge names in ascending edge order, comma separated.
    pub fn to_text(self, g: &Graph) -> String {
        format_edge_list(g, self.0)
    }

    pub(crate) fn from_raw(edges: BitSet) -> Matching {
        Matching(edges)
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.0)
    }
}

/// Parses a comma-separated list of edge names.
pub fn parse_edge_list(g: &Graph, text: &str) -> Result<BitSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| g.edge_by_name(s))
        .collect()
}

pub fn format_edge_list(g: &Graph, edges: BitSet) -> String {
    edges
        .iter()
        .map(|e| g.edge_name(e))
        .collect::<Vec<_>>()
        .join(",")
}

/// Why an edge set fails to be a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDefect {
    pub uncovered: BitSet,
    pub doubly_covered: BitSet,
}

impl CoverDefect {
    pub fn describe(&self, g: &Graph) -> String {
        let names = |s: BitSet| {
            s.iter()
                .map(|v| g.vertex_name(v))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut parts = Vec::new();
        if !self.uncovered.is_empty() {
            parts.push(format!("uncovered vertices [{}]", names(self.uncovered)));
        }
        if !self.doubly_covered.is_empty() {
            parts.push(format!(
                "doubly covered vertices [{}]",
                names(self.doubly_covered)
            ));
        }
        parts.join("; ")
    }
}

/// `None` if `edges` is a perfect matching of `g`.
pub fn cover_defect(g: &Graph, edges: BitSet) -> Option<CoverDefect> {
    let mut covered = BitSet::EMPTY;
    let mut doubly_covered = BitSet::EMPTY;
    for e in edges {
        if e >= g.edge_count() {
            // out-of-range edges cannot be part of a matching of g
            return Some(CoverDefect {
                uncovered: g.all_vertices(),
                doubly_covered,
            });
        }
        for v in g.edge(e).ends {
            if covered.contains(v) {
                doubly_covered.insert(v);
            }
            covered.insert(v);
        }
    }
    let uncovered = g.all_vertices().difference(covered);
    (!uncovered.is_empty() || !doubly_covered.is_empty()).then_some(CoverDefect {
        uncovered,
        doubly_covered,
    })
}

pub fn is_perfect_matching(g: &Graph, edges: BitSet) -> bool {
    cover_defect(g, edges).is_none()
}

/// All perfect matchings of `g`, sorted by bit encoding.
pub fn enumerate_perfect_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut search = Search {
        g,
        limit: u64::MAX,
        found: 0,
        sink: Some(&mut out),
    };
    search.run(BitSet::EMPTY, BitSet::EMPTY);
    out.sort_unstable();
    out
}

/// Number of perfect matchings containing `s`, capped at `limit`.
///
/// Deletes the endpoints of `s` and counts perfect matchings of what remains,
/// stopping as soon as `limit` is reached.
pub fn count_matchings_containing(g: &Graph, s: BitSet, limit: u64) -> Result<u64> {
    if limit == 0 {
        return Err(Error::domain("limit must be at least 1"));
    }
    let mut covered = BitSet::EMPTY;
    for e in s {
        if e >= g.edge_count() {
            return Err(Error::domain(format!("edge index {e} out of range")));
        }
        let ends = g.endpoints(BitSet::singleton(e));
        if covered.intersects(ends) {
            return Err(Error::domain(format!(
                "edge {} shares a vertex with another edge of the set",
                g.edge_name(e)
            )));
        }
        covered = covered.union(ends);
    }
    Ok(count_residual(g, covered, limit))
}

/// Counts perfect matchings of `g - covered`, capped at `limit`. `covered`
/// must be the vertex set of a matching.
pub(crate) fn count_residual(g: &Graph, covered: BitSet, limit: u64) -> u64 {
    let mut search = Search {
        g,
        limit,
        found: 0,
        sink: None,
    };
    search.run(covered, BitSet::EMPTY);
    search.found
}

struct Search<'a> {
    g: &'a Graph,
    limit: u64,
    found: u64,
    sink: Option<&'a mut Vec<Matching>>,
}

impl Search<'_> {
    /// Branches on the lowest uncovered vertex. Returns false once the limit
    /// is hit.
    fn run(&mut self, covered: BitSet, chosen: BitSet) -> bool {
        let Some(v) = self.g.all_vertices().difference(covered).first() else {
            self.found += 1;
            if let Some(sink) = self.sink.as_deref_mut() {
                sink.push(Matching(chosen));
            }
            return self.found < self.limit;
        };
        for &(e, w) in self.g.incident(v) {
            if w == v || covered.contains(w) {
                continue;
            }
            let next = covered
                .union(BitSet::singleton(v))
                .union(BitSet::singleton(w));
            if self.stranded(next, v) || self.stranded(next, w) {
                continue;
            }
            let mut with = chosen;
            with.insert(e);
            if !self.run(next, with) {
                return false;
            }
        }
        true
    }

    /// Some uncovered neighbour of `x` has no uncovered neighbour left.
    fn stranded(&self, covered: BitSet, x: usize) -> bool {
        self.g.incident(x).iter().any(|&(_, y)| {
            !covered.contains(y)
                && !self
                    .g
                    .incident(y)
                    .iter()
                    .any(|&(_, z)| z != y && !covered.contains(z))
        })
    }
}
