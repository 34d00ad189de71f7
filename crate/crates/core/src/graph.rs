//! Simple undirected graphs with a fixed edge ordering, and the generalized
//! Petersen family GP(n, k).
//!
//! For GP(n, k) vertex `i` is `u_i` and vertex `n + i` is `v_i`. Edges are laid
//! out as `[inner | spokes | outer]`: index `i` is `u_i u_{i+k}`, index `n + i`
//! is `u_i v_i`, index `2n + i` is `v_i v_{i+1}`, subscripts mod n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GpParams {
    pub n: usize,
    pub k: usize,
}

/// Vertex label. GP graphs use the inner/outer classes, other graphs plain
/// integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexId {
    Inner(usize),
    Outer(usize),
    Plain(usize),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Inner(i) => write!(f, "u{i}"),
            VertexId::Outer(i) => write!(f, "v{i}"),
            VertexId::Plain(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// `u_i u_{i+k}`
    Inner,
    /// `u_i v_i`
    Spoke,
    /// `v_i v_{i+1}`
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Endpoints with the smaller vertex index first.
    pub ends: [usize; 2],
    pub index: usize,
}

impl Edge {
    #[inline]
    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// Per vertex: `(edge index, neighbour)` in ascending edge order.
    adjacency: Vec<Vec<(usize, usize)>>,
    gp: Option<GpParams>,
}

impl Graph {
    /// Builds GP(n, k). Rejects n < 5, k outside `1..n` and `2k = n`, where the
    /// inner edges would be doubled.
    pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
        if n < 5 {
            return Err(Error::domain(format!("GP(n,k) needs n >= 5, got n = {n}")));
        }
        if k == 0 || k >= n {
            return Err(Error::domain(format!(
                "GP({n},k) needs 1 <= k <= {}, got k = {k}",
                n - 1
            )));
        }
        if 2 * k == n {
            return Err(Error::domain(format!(
                "GP({n},{k}) has parallel inner edges (k = n/2)"
            )));
        }
        if 3 * n > BitSet::CAPACITY {
            return Err(Error::domain(format!(
                "GP({n},{k}) has {} edges, more than the supported {}",
                3 * n,
                BitSet::CAPACITY
            )));
        }
        let mut pairs = Vec::with_capacity(3 * n);
        pairs.extend((0..n).map(|i| (i, (i + k) % n)));
        pairs.extend((0..n).map(|i| (i, n + i)));
        pairs.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
        let mut g = Graph::from_edges_unchecked(2 * n, &pairs)?;
        g.gp = Some(GpParams { n, k });
        Ok(g)
    }

    /// Builds a simple graph from an edge list; edge `i` is `edges[i]`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let g = Graph::from_edges_unchecked(vertex_count, edges)?;
        let report = validate(&g);
        if let Some(v) = report.violations.first() {
            return Err(Error::domain(v.to_string()));
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but keeps loops and parallel edges, so that
    /// [`validate`] can report them. Endpoints must still be in range.
    pub fn from_edges_unchecked(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count > BitSet::CAPACITY || edges.len() > BitSet::CAPACITY {
            return Err(Error::domain(format!(
                "graph with {vertex_count} vertices and {} edges exceeds capacity {}",
                edges.len(),
                BitSet::CAPACITY
            )));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut table = Vec::with_capacity(edges.len());
        for (index, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::domain(format!(
                    "edge {index} = ({a}, {b}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            let ends = [a.min(b), a.max(b)];
            table.push(Edge { ends, index });
            adjacency[a].push((index, b));
            if a != b {
                adjacency[b].push((index, a));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: table,
            adjacency,
            gp: None,
        })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    /// `(edge index, neighbour)` pairs incident to `v`, ascending by edge.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn gp_params(&self) -> Option<GpParams> {
        self.gp
    }

    pub fn all_vertices(&self) -> BitSet {
        BitSet::full(self.vertex_count)
    }

    pub fn all_edges(&self) -> BitSet {
        BitSet::full(self.edges.len())
    }

    /// Vertex set covered by the given edges.
    pub fn endpoints(&self, edges: BitSet) -> BitSet {
        edges.iter().fold(BitSet::EMPTY, |acc, e| {
            let [a, b] = self.edges[e].ends;
            acc.union(BitSet::singleton(a)).union(BitSet::singleton(b))
        })
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adjacency
            .get(a)?
            .iter()
            .find(|&&(_, w)| w == b)
            .map(|&(e, _)| e)
    }

    pub fn vertex_id(&self, v: usize) -> VertexId {
        match self.gp {
            Some(GpParams { n, .. }) if v < n => VertexId::Inner(v),
            Some(GpParams { n, .. }) => VertexId::Outer(v - n),
            None => VertexId::Plain(v),
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.vertex_id(v).to_string()
    }

    /// Parses `u3`, `v3` (GP graphs) or `3` (plain graphs).
    pub fn vertex_by_name(&self, name: &str) -> Result<usize> {
        let bad = || Error::domain(format!("unknown vertex '{name}'"));
        let name = name.trim();
        let v = match self.gp {
            Some(GpParams { n, .. }) => {
                let (offset, digits) = match name.as_bytes().first() {
                    Some(b'u') => (0, &name[1..]),
                    Some(b'v') => (n, &name[1..]),
                    _ => return Err(bad()),
                };
                let i: usize = digits.parse().map_err(|_| bad())?;
                if i >= n {
                    return Err(bad());
                }
                offset + i
            }
            None => name.parse().map_err(|_| bad())?,
        };
        if v >= self.vertex_count {
            return Err(bad());
        }
        Ok(v)
    }

    /// Name of an edge, e.g. `u0-u2`: `u` before `v`, lower index first.
    pub fn edge_name(&self, e: usize) -> String {
        let [a, b] = self.edges[e].ends;
        format!("{}-{}", self.vertex_name(a), self.vertex_name(b))
    }

    /// Inverse of [`Graph::edge_name`]; the endpoints may come in either order.
    pub fn edge_by_name(&self, name: &str) -> Result<usize> {
        let (a, b) = name
            .split_once('-')
            .ok_or_else(|| Error::domain(format!("edge '{name}' is not of the form a-b")))?;
        let (a, b) = (self.vertex_by_name(a)?, self.vertex_by_name(b)?);
        self.edge_between(a, b)
            .ok_or_else(|| Error::domain(format!("no edge '{}'", name.trim())))
    }

    /// Class and subscript of an edge of a GP graph.
    pub fn edge_class(&self, e: usize) -> Result<(EdgeClass, usize)> {
        let n = self.require_gp()?.n;
        match e / n {
            0 => Ok((EdgeClass::Inner, e)),
            1 => Ok((EdgeClass::Spoke, e - n)),
            2 => Ok((EdgeClass::Outer, e - 2 * n)),
            _ => Err(Error::domain(format!("edge index {e} out of range"))),
        }
    }

    /// Image of edge `e` under the rotation `u_i -> u_{i+j}`, `v_i -> v_{i+j}`.
    pub fn rotate_edge_index(&self, e: usize, j: usize) -> Result<usize> {
        let n = self.require_gp()?.n;
        if e >= 3 * n {
            return Err(Error::domain(format!("edge index {e} out of range")));
        }
        let (class, i) = (e / n, e % n);
        Ok(class * n + (i + j) % n)
    }

    /// Image of edge `e` under the reflection `u_i -> u_{-i}`, `v_i -> v_{-i}`.
    pub fn reflect_edge_index(&self, e: usize) -> Result<usize> {
        let GpParams { n, k } = self.require_gp()?;
        let (class, i) = self.edge_class(e)?;
        // u_i u_{i+k} -> u_{-i-k} u_{-i}; v_i v_{i+1} -> v_{-i-1} v_{-i}
        Ok(match class {
            EdgeClass::Inner => (2 * n - i - k) % n,
            EdgeClass::Spoke => n + (n - i) % n,
            EdgeClass::Outer => 2 * n + (2 * n - i - 1) % n,
        })
    }

    /// Image of an edge set under a rotation by `j`.
    pub fn rotate_edges(&self, edges: BitSet, j: usize) -> Result<BitSet> {
        edges.iter().map(|e| self.rotate_edge_index(e, j)).collect()
    }

    pub fn reflect_edges(&self, edges: BitSet) -> Result<BitSet> {
        edges.iter().map(|e| self.reflect_edge_index(e)).collect()
    }

    fn require_gp(&self) -> Result<GpParams> {
        self.gp
            .ok_or_else(|| Error::domain("operation needs a generalized Petersen graph"))
    }

    /// Graphviz rendering, one line per edge in canonical order.
    pub fn to_dot(&self) -> String {
        let name = match self.gp {
            Some(GpParams { n, k }) => format!("GP_{n}_{k}"),
            None => "G".to_string(),
        };
        let mut out = format!("graph {name} {{\n");
        for e in 0..self.edges.len() {
            let [a, b] = self.edges[e].ends;
            out.push_str(&format!(
                "  {} -- {};\n",
                self.vertex_name(a),
                self.vertex_name(b)
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn dump(&self) -> GraphDump {
        GraphDump {
            n: self.gp.map(|p| p.n),
            k: self.gp.map(|p| p.k),
            vertices: (0..self.vertex_count)
                .map(|v| self.vertex_name(v))
                .collect(),
            edges: self.edges.iter().map(|e| e.ends).collect(),
        }
    }
}

/// JSON form of a graph; `edges` holds vertex indices in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SelfLoop {
        edge: usize,
        vertex: usize,
    },
    ParallelEdge {
        first: usize,
        second: usize,
    },
    AsymmetricAdjacency {
        vertex: usize,
        edge: usize,
    },
    Degree {
        vertex: usize,
        degree: usize,
    },
    EdgeCount {
        expected: usize,
        found: usize,
    },
    EdgeLayout {
        edge: usize,
        expected: [usize; 2],
        found: [usize; 2],
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfLoop { edge, vertex } => {
                write!(f, "self-loop: edge {edge} at vertex {vertex}")
            }
            Violation::ParallelEdge { first, second } => {
                write!(
                    f,
                    "parallel edge: edges {first} and {second} share both endpoints"
                )
            }
            Violation::AsymmetricAdjacency { vertex, edge } => {
                write!(f, "asymmetric adjacency: vertex {vertex}, edge {edge}")
            }
            Violation::Degree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            Violation::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            Violation::EdgeLayout {
                edge,
                expected,
                found,
            } => write!(
                f,
                "edge {edge} is {found:?}, canonical layout expects {expected:?}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// `Some(d)` when every vertex has degree `d`.
    pub regular_degree: Option<usize>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structural checks; never fails, only collects violations.
pub fn validate(g: &Graph) -> ValidationReport {
    let mut violations = Vec::new();

    let mut seen = std::collections::HashMap::new();
    for e in g.edges() {
        let [a, b] = e.ends;
        if a == b {
            violations.push(Violation::SelfLoop {
                edge: e.index,
                vertex: a,
            });
        } else if let Some(&first) = seen.get(&e.ends) {
            violations.push(Violation::ParallelEdge {
                first,
                second: e.index,
            });
        } else {
            seen.insert(e.ends, e.index);
        }
    }

    for v in 0..g.vertex_count() {
        for &(e, w) in g.incident(v) {
            let edge = g.edge(e);
            let back = g.incident(w).iter().any(|&(f, x)| f == e && x == v);
            if !edge.ends.contains(&v) || edge.other(v) != w || !back {
                violations.push(Violation::AsymmetricAdjacency { vertex: v, edge: e });
            }
        }
    }

    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let regular_degree = match degrees.split_first() {
        Some((&d, rest)) if rest.iter().all(|&x| x == d) => Some(d),
        None => Some(0),
        _ => None,
    };

    if let Some(GpParams { n, k }) = g.gp_params() {
        for (v, &d) in degrees.iter().enumerate() {
            if d != 3 {
                violations.push(Violation::Degree {
                    vertex: v,
                    degree: d,
                });
            }
        }
        if g.edge_count() != 3 * n {
            violations.push(Violation::EdgeCount {
                expected: 3 * n,
                found: g.edge_count(),
            });
        } else {
            for i in 0..n {
                let expected = [[i, (i + k) % n], [i, n + i], [n + i, n + (i + 1) % n]];
                for (class, [a, b]) in expected.into_iter().enumerate() {
                    let edge = class * n + i;
                    let want = [a.min(b), a.max(b)];
                    let found = g.edge(edge).ends;
                    if found != want {
                        violations.push(Violation::EdgeLayout {
                            edge,
                            expected: want,
                            found,
                        });
                    }
                }
            }
        }
    }

    ValidationReport {
        violations,
        regular_degree,
    }
}
