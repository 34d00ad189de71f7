//! M-alternating cycles and maximum vertex-disjoint packings of them.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{cover_defect, Matching};

/// A cycle whose edges alternate between a matching and its complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltCycle {
    /// Vertex sequence, starting with the smaller-indexed end of the
    /// cycle's lowest matched edge and leaving along that edge.
    pub vertices: Vec<usize>,
    pub matched_edges: BitSet,
    pub vertex_set: BitSet,
    /// Matched and unmatched edges together; this identifies the cycle.
    pub edges: BitSet,
}

impl AltCycle {
    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Closed walk notation, e.g. `u0u2v2v3u3u1v1v0u0`.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut s: String = self.vertices.iter().map(|&v| g.vertex_name(v)).collect();
        if let Some(&first) = self.vertices.first() {
            s.push_str(&g.vertex_name(first));
        }
        s
    }

    fn order_key(&self) -> (usize, Vec<usize>, BitSet) {
        (self.len(), self.vertex_set.to_vec(), self.edges)
    }
}

/// For each vertex, the matched edge covering it and the partner vertex.
fn mates(g: &Graph, m: Matching) -> Vec<(usize, usize)> {
    let mut mate = vec![(usize::MAX, usize::MAX); g.vertex_count()];
    for e in m.edges() {
        let [a, b] = g.edge(e).ends;
        mate[a] = (e, b);
        mate[b] = (e, a);
    }
    mate
}

pub(crate) fn check_perfect(g: &Graph, m: Matching) -> Result<()> {
    match cover_defect(g, m.edges()) {
        None => Ok(()),
        Some(d) => Err(Error::NotPerfectMatching(d.describe(g))),
    }
}

/// Every M-alternating cycle of `g`, each exactly once, ordered by length,
/// then by sorted vertex list, then by edge set.
///
/// Distinct cycles may share both their vertex set and their matched edges,
/// differing only in unmatched edges; they are still reported separately.
///
/// Each cycle is found from its lowest-indexed matched edge `ab`, walking
/// away from `a` through `b`, so no cycle is reached twice.
pub fn enumerate_alternating_cycles(g: &Graph, m: Matching) -> Result<Vec<AltCycle>> {
    check_perfect(g, m)?;
    let mate = mates(g, m);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for e0 in m.edges() {
        let [a, b] = g.edge(e0).ends;
        let mut walk = Walk {
            g,
            mate: &mate,
            matching: m.edges(),
            start: a,
            lowest: e0,
            path: vec![a, b],
            visited: BitSet::from_iter([a, b]),
            matched: BitSet::singleton(e0),
            unmatched: BitSet::EMPTY,
        };
        walk.extend(b, &mut |c| {
            let fresh = seen.insert(c.edges);
            debug_assert!(fresh, "alternating cycle reported twice");
            if fresh {
                out.push(c);
            }
        });
    }
    out.sort_by_cached_key(AltCycle::order_key);
    Ok(out)
}

struct Walk<'a> {
    g: &'a Graph,
    mate: &'a [(usize, usize)],
    matching: BitSet,
    start: usize,
    lowest: usize,
    path: Vec<usize>,
    visited: BitSet,
    matched: BitSet,
    unmatched: BitSet,
}

impl Walk<'_> {
    fn extend(&mut self, from: usize, emit: &mut dyn FnMut(AltCycle)) {
        for &(f, c) in self.g.incident(from) {
            if self.matching.contains(f) {
                continue;
            }
            if c == self.start {
                if self.path.len() >= 4 {
                    emit(AltCycle {
                        vertices: self.path.clone(),
                        matched_edges: self.matched,
                        vertex_set: self.visited,
                        edges: self
                            .matched
                            .union(self.unmatched)
                            .union(BitSet::singleton(f)),
                    });
                }
                continue;
            }
            if self.visited.contains(c) {
                continue;
            }
            let (me, d) = self.mate[c];
            if me < self.lowest {
                continue;
            }
            self.path.extend([c, d]);
            self.visited.insert(c);
            self.visited.insert(d);
            self.matched.insert(me);
            self.unmatched.insert(f);
            self.extend(d, emit);
            self.unmatched.remove(f);
            self.matched.remove(me);
            self.visited.remove(c);
            self.visited.remove(d);
            self.path.truncate(self.path.len() - 2);
        }
    }
}

/// Pairwise vertex-disjoint alternating cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePacking {
    pub cycles: Vec<AltCycle>,
    pub size: usize,
}

/// Maximum number of vertex-disjoint M-alternating cycles.
pub fn max_disjoint_alternating_cycles(g: &Graph, m: Matching) -> Result<CyclePacking> {
    Ok(packing_from_cycles(&enumerate_alternating_cycles(g, m)?))
}

/// Maximum vertex-disjoint packing of already enumerated cycles.
pub fn packing_from_cycles(cycles: &[AltCycle]) -> CyclePacking {
    // only vertex sets matter here
    let mut seen = HashSet::new();
    let distinct: Vec<&AltCycle> = cycles
        .iter()
        .filter(|c| seen.insert(c.vertex_set))
        .collect();
    let chosen = max_disjoint_packing(&distinct.iter().map(|c| c.vertex_set).collect::<Vec<_>>());
    let cycles: Vec<AltCycle> = chosen.into_iter().map(|i| distinct[i].clone()).collect();
    CyclePacking {
        size: cycles.len(),
        cycles,
    }
}

/// Indices of a maximum family of pairwise disjoint sets, by branch and bound
/// in the given order. Ties resolve to the family found first.
pub fn max_disjoint_packing(sets: &[BitSet]) -> Vec<usize> {
    let mut state = Packing {
        sets,
        best: Vec::new(),
        current: Vec::new(),
    };
    let candidates: Vec<usize> = (0..sets.len()).collect();
    let free = sets.iter().fold(BitSet::EMPTY, |acc, s| acc.union(*s));
    state.branch(&candidates, free);
    state.best
}

struct Packing<'a> {
    sets: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Packing<'_> {
    fn branch(&mut self, candidates: &[usize], free: BitSet) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let Some((&first, rest)) = candidates.split_first() else {
            return;
        };
        let smallest = candidates
            .iter()
            .map(|&i| self.sets[i].len())
            .min()
            .unwrap_or(1)
            .max(1);
        let bound = candidates.len().min(free.len() / smallest);
        if self.current.len() + bound <= self.best.len() {
            return;
        }
        let taken = self.sets[first];
        let compatible: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&i| self.sets[i].is_disjoint(taken))
            .collect();
        self.current.push(first);
        self.branch(&compatible, free.difference(taken));
        self.current.pop();
        self.branch(rest, free);
    }
}
