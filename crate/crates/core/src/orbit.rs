//! Symmetry classes of perfect matchings of GP(n, k).
//!
//! Two matchings are equivalent when a rotation `u_i -> u_{i+j}`,
//! `v_i -> v_{i+j}` maps one onto the other. The dihedral group, which adds
//! the reflection `i -> -i`, is available for comparison.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryGroup {
    #[default]
    Rotation,
    Dihedral,
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryGroup::Rotation => "rotation",
            SymmetryGroup::Dihedral => "dihedral",
        })
    }
}

impl FromStr for SymmetryGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotation" => Ok(SymmetryGroup::Rotation),
            "dihedral" => Ok(SymmetryGroup::Dihedral),
            _ => Err(Error::domain(format!("unknown symmetry group '{s}'"))),
        }
    }
}

/// Images of an edge set under every element of the group, identity first.
pub fn group_images(g: &Graph, edges: BitSet, group: SymmetryGroup) -> Result<Vec<BitSet>> {
    let n = g
        .gp_params()
        .ok_or_else(|| Error::domain("orbits need a generalized Petersen graph"))?
        .n;
    let mut images = Vec::with_capacity(2 * n);
    for j in 0..n {
        images.push(g.rotate_edges(edges, j)?);
    }
    if group == SymmetryGroup::Dihedral {
        let mirrored = g.reflect_edges(edges)?;
        for j in 0..n {
            images.push(g.rotate_edges(mirrored, j)?);
        }
    }
    Ok(images)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Member with the smallest bit encoding.
    pub representative: Matching,
    pub size: usize,
    pub forcing_number: usize,
    /// Sorted ascending.
    pub members: Vec<Matching>,
}

/// Partitions `matchings` into orbits under `group`. `forcing_numbers[i]`
/// belongs to `matchings[i]`. Orbits come out sorted by representative.
pub fn orbits(
    g: &Graph,
    matchings: &[Matching],
    forcing_numbers: &[usize],
    group: SymmetryGroup,
) -> Result<Vec<Orbit>> {
    if matchings.len() != forcing_numbers.len() {
        return Err(Error::domain(format!(
            "{} matchings but {} forcing numbers",
            matchings.len(),
            forcing_numbers.len()
        )));
    }
    let index: HashMap<Matching, usize> =
        matchings.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut assigned = vec![false; matchings.len()];
    let mut out = Vec::new();
    for (i, &m) in matchings.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for image in group_images(g, m.edges(), group)? {
            let j = *index.get(&Matching::from_raw(image)).ok_or_else(|| {
                Error::domain(format!(
                    "image {:?} of matching {:?} is not in the matching list",
                    image.to_vec(),
                    m.edges().to_vec()
                ))
            })?;
            if forcing_numbers[j] != forcing_numbers[i] {
                return Err(Error::OrbitInconsistency(
                    m.edges().to_vec(),
                    forcing_numbers[i],
                    image.to_vec(),
                    forcing_numbers[j],
                ));
            }
            if !assigned[j] {
                assigned[j] = true;
                members.push(matchings[j]);
            }
        }
        members.sort_unstable();
        out.push(Orbit {
            representative: members[0],
            size: members.len(),
            forcing_number: forcing_numbers[i],
            members,
        });
    }
    out.sort_by_key(|o| o.representative);
    Ok(out)
}

pub fn rotation_orbits(
    g: &Graph,
    matchings: &[Matching],
    forcing_numbers: &[usize],
) -> Result<Vec<Orbit>> {
    orbits(g, matchings, forcing_numbers, SymmetryGroup::Rotation)
}

/// `(PMC, FN)` pairs of the orbits, sorted, for comparing against tables
/// whose row order carries no meaning.
pub fn row_multiset(orbits: &[Orbit]) -> Vec<(usize, usize)> {
    let mut rows: Vec<(usize, usize)> = orbits.iter().map(|o| (o.size, o.forcing_number)).collect();
    rows.sort_unstable();
    rows
}
