//! Forcing numbers of perfect matchings, by two independent exact methods.
//!
//! * Subset search: try every k-subset of the matching for k = 0, 1, ..., in
//!   lexicographic order, and accept the first one contained in no other
//!   perfect matching.
//! * Hitting set: a subset of M forces M exactly when it meets every
//!   M-alternating cycle, so the forcing number is the size of a minimum
//!   hitting set of the cycles' matched-edge sets.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cycles::{check_perfect, enumerate_alternating_cycles, AltCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{count_residual, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    HittingSet,
    SubsetSearch,
    /// Run both and require agreement.
    Both,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::HittingSet => "cycles",
            Engine::SubsetSearch => "subsets",
            Engine::Both => "both",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "cycles" | "hitting_set" | "hitting-set" => Ok(Engine::HittingSet),
            "subsets" | "subset_search" | "subset-search" => Ok(Engine::SubsetSearch),
            "both" => Ok(Engine::Both),
            _ => Err(Error::domain(format!("unknown engine '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingResult {
    pub forcing_number: usize,
    /// A minimum forcing set.
    pub witness: BitSet,
    pub method: Engine,
}

/// How [`is_forcing`] decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// `s` lies in no perfect matching other than `m`.
    Uniqueness,
    /// `s` meets every M-alternating cycle.
    Cycles,
}

fn check_subset(g: &Graph, m: Matching, s: BitSet) -> Result<()> {
    if s.is_subset(m.edges()) {
        Ok(())
    } else {
        let extra = crate::matching::format_edge_list(g, s.difference(m.edges()));
        Err(Error::domain(format!(
            "edges [{extra}] are not in the matching"
        )))
    }
}

pub fn is_forcing(g: &Graph, m: Matching, s: BitSet, criterion: Criterion) -> Result<bool> {
    check_perfect(g, m)?;
    check_subset(g, m, s)?;
    Ok(match criterion {
        Criterion::Uniqueness => forces_uniquely(g, s),
        Criterion::Cycles => hits_all(&enumerate_alternating_cycles(g, m)?, s),
    })
}

#[inline]
fn forces_uniquely(g: &Graph, s: BitSet) -> bool {
    count_residual(g, g.endpoints(s), 2) == 1
}

/// `s` meets the matched edges of every cycle.
pub fn hits_all(cycles: &[AltCycle], s: BitSet) -> bool {
    cycles.iter().all(|c| c.matched_edges.intersects(s))
}

pub fn forcing_number_by_subset_search(g: &Graph, m: Matching) -> Result<ForcingResult> {
    check_perfect(g, m)?;
    let edges = m.edges().to_vec();
    for k in 0..=edges.len() {
        for subset in edges.iter().copied().combinations(k) {
            let s: BitSet = subset.into_iter().collect();
            if forces_uniquely(g, s) {
                return Ok(ForcingResult {
                    forcing_number: k,
                    witness: s,
                    method: Engine::SubsetSearch,
                });
            }
        }
    }
    unreachable!("a perfect matching always forces itself")
}

pub fn forcing_number_by_hitting_set(g: &Graph, m: Matching) -> Result<ForcingResult> {
    let cycles = enumerate_alternating_cycles(g, m)?;
    Ok(forcing_from_cycles(&cycles))
}

pub(crate) fn forcing_from_cycles(cycles: &[AltCycle]) -> ForcingResult {
    let sets: Vec<BitSet> = cycles.iter().map(|c| c.matched_edges).collect();
    let witness = min_hitting_set(&sets);
    ForcingResult {
        forcing_number: witness.len(),
        witness,
        method: Engine::HittingSet,
    }
}

/// Forcing number with the chosen engine. [`Engine::Both`] reports the
/// subset-search witness and fails with [`Error::EngineMismatch`] if the two
/// numbers differ.
pub fn forcing_number(g: &Graph, m: Matching, engine: Engine) -> Result<ForcingResult> {
    match engine {
        Engine::HittingSet => forcing_number_by_hitting_set(g, m),
        Engine::SubsetSearch => forcing_number_by_subset_search(g, m),
        Engine::Both => {
            let by_cycles = forcing_number_by_hitting_set(g, m)?;
            let by_subsets = forcing_number_by_subset_search(g, m)?;
            if by_cycles.forcing_number != by_subsets.forcing_number {
                return Err(Error::EngineMismatch {
                    matching: m.edges().to_vec(),
                    hitting_set: by_cycles.forcing_number,
                    subset_search: by_subsets.forcing_number,
                });
            }
            Ok(ForcingResult {
                method: Engine::Both,
                ..by_subsets
            })
        }
    }
}

/// Minimum-cardinality set meeting every set in `sets`.
///
/// Branch and bound: branch on the uncovered set with the fewest usable
/// elements, trying its elements in ascending order, with elements tried in
/// earlier sibling branches excluded. The lower bound is the size of a
/// greedily built family of uncovered sets with pairwise disjoint usable parts.
pub fn min_hitting_set(sets: &[BitSet]) -> BitSet {
    if sets.iter().any(|s| s.is_empty()) {
        panic!("an empty set cannot be hit");
    }
    // supersets of other sets are hit whenever the smaller set is
    let mut reduced: Vec<BitSet> = sets.to_vec();
    reduced.sort_by_key(|s| (s.len(), *s));
    reduced.dedup();
    let mut minimal: Vec<BitSet> = Vec::with_capacity(reduced.len());
    for s in reduced {
        if !minimal.iter().any(|t| t.is_subset(s)) {
            minimal.push(s);
        }
    }
    if minimal.is_empty() {
        return BitSet::EMPTY;
    }
    let mut solver = HittingSet {
        sets: &minimal,
        best: greedy_hitting_set(&minimal),
    };
    solver.branch(BitSet::EMPTY, BitSet::EMPTY);
    solver.best
}

fn greedy_hitting_set(sets: &[BitSet]) -> BitSet {
    let mut chosen = BitSet::EMPTY;
    loop {
        let open: Vec<BitSet> = sets
            .iter()
            .copied()
            .filter(|s| s.is_disjoint(chosen))
            .collect();
        if open.is_empty() {
            return chosen;
        }
        let universe = open.iter().fold(BitSet::EMPTY, |acc, s| acc.union(*s));
        // most frequent element, lowest index on ties
        let e = universe
            .iter()
            .max_by_key(|&e| {
                (
                    open.iter().filter(|s| s.contains(e)).count(),
                    std::cmp::Reverse(e),
                )
            })
            .expect("open sets are non-empty");
        chosen.insert(e);
    }
}

struct HittingSet<'a> {
    sets: &'a [BitSet],
    best: BitSet,
}

impl HittingSet<'_> {
    fn branch(&mut self, chosen: BitSet, forbidden: BitSet) {
        let mut open: Vec<BitSet> = Vec::new();
        for s in self.sets {
            if s.is_disjoint(chosen) {
                let usable = s.difference(forbidden);
                if usable.is_empty() {
                    return;
                }
                open.push(usable);
            }
        }
        if open.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        open.sort_by_key(|s| (s.len(), *s));
        let mut used = BitSet::EMPTY;
        let mut bound = 0;
        for s in &open {
            if s.is_disjoint(used) {
                used = used.union(*s);
                bound += 1;
            }
        }
        if chosen.len() + bound >= self.best.len() {
            return;
        }
        let pivot = open[0];
        let mut tried = forbidden;
        for e in pivot {
            let mut next = chosen;
            next.insert(e);
            self.branch(next, tried);
            tried.insert(e);
        }
    }
}
