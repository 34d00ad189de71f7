//! Published forcing polynomials and orbit tables of GP(n, 2), n = 5..=15,
//! and a harness that recomputes and diffs them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::forcing::Engine;
use crate::graph::Graph;
use crate::orbit::{orbits, row_multiset, SymmetryGroup};
use crate::poly::{Analysis, ForcingPolynomial};

/// Expected data for one GP(n, 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTable {
    pub n: usize,
    /// `(exponent, coefficient)`.
    pub polynomial: Vec<(usize, u64)>,
    /// `(PMC, FN)` per table row, in published order.
    pub rows: Vec<(usize, usize)>,
}

impl PaperTable {
    pub fn expected_polynomial(&self) -> ForcingPolynomial {
        ForcingPolynomial::from_terms(&self.polynomial)
    }

    pub fn expected_rows(&self) -> Vec<(usize, usize)> {
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        rows
    }
}

type RawTable = (usize, &'static [(usize, u64)], &'static [(usize, usize)]);

const TABLES: [RawTable; 11] = [
    (5, &[(2, 6)], &[(5, 2), (1, 2)]),
    (6, &[(2, 10)], &[(6, 2), (1, 2), (3, 2)]),
    (7, &[(2, 15)], &[(7, 2), (1, 2), (7, 2)]),
    (8, &[(3, 8), (2, 9)], &[(4, 3), (8, 2), (1, 2), (4, 3)]),
    (9, &[(3, 1), (2, 21)], &[(9, 2), (9, 2), (1, 3), (3, 2)]),
    (10, &[(3, 36)], &[(10, 3), (5, 3), (10, 3), (1, 3), (10, 3)]),
    (
        11,
        &[(3, 34), (2, 11)],
        &[(11, 3), (11, 3), (11, 3), (1, 3), (11, 2)],
    ),
    (
        12,
        &[(3, 51), (2, 3)],
        &[
            (4, 3),
            (12, 3),
            (12, 3),
            (6, 3),
            (12, 3),
            (1, 3),
            (4, 3),
            (3, 2),
        ],
    ),
    (
        13,
        &[(4, 1), (3, 78)],
        &[(13, 3), (13, 3), (13, 3), (13, 3), (13, 3), (1, 4), (13, 3)],
    ),
    (
        14,
        &[(4, 57), (3, 56)],
        &[
            (14, 4),
            (14, 4),
            (14, 3),
            (14, 3),
            (14, 4),
            (7, 3),
            (14, 4),
            (1, 4),
            (14, 3),
            (7, 3),
        ],
    ),
    (
        15,
        &[(4, 91), (3, 53)],
        &[
            (15, 4),
            (15, 4),
            (15, 4),
            (5, 3),
            (15, 3),
            (15, 3),
            (15, 4),
            (15, 4),
            (15, 4),
            (1, 4),
            (15, 3),
            (3, 3),
        ],
    ),
];

/// All published tables, n = 5..=15.
pub fn paper_tables() -> Vec<PaperTable> {
    TABLES
        .iter()
        .map(|&(n, polynomial, rows)| PaperTable {
            n,
            polynomial: polynomial.to_vec(),
            rows: rows.to_vec(),
        })
        .collect()
}

pub fn paper_table(n: usize) -> Option<PaperTable> {
    paper_tables().into_iter().find(|t| t.n == n)
}

/// Recomputed values for one table and how they compare.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub n: usize,
    pub pass: bool,
    pub expected_polynomial: String,
    pub actual_polynomial: String,
    pub expected_pm_count: u64,
    pub actual_pm_count: u64,
    /// Sorted `(PMC, FN)` multisets under rotations.
    pub expected_rows: Vec<(usize, usize)>,
    pub actual_rows: Vec<(usize, usize)>,
    /// Expected rows with no computed counterpart.
    pub missing_rows: Vec<(usize, usize)>,
    /// Computed rows with no expected counterpart.
    pub unexpected_rows: Vec<(usize, usize)>,
    /// Dihedral-group rows, reported only when the rotation rows disagree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dihedral_rows: Option<Vec<(usize, usize)>>,
}

/// Sorted multiset difference `a - b`.
fn multiset_minus(a: &[(usize, usize)], b: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut rest = b.to_vec();
    a.iter()
        .filter(|x| match rest.iter().position(|y| y == *x) {
            Some(i) => {
                rest.swap_remove(i);
                false
            }
            None => true,
        })
        .copied()
        .collect()
}

/// Recomputes GP(table.n, 2) and compares it against `table`.
pub fn verify_table(
    table: &PaperTable,
    engine: Engine,
    threads: Option<usize>,
) -> Result<VerifyOutcome> {
    let g = Graph::generalized_petersen(table.n, 2)?;
    let analysis = Analysis::run(&g, engine, threads)?;
    let fns: Vec<usize> = analysis.results.iter().map(|r| r.forcing_number).collect();
    let actual = analysis.polynomial();
    let expected = table.expected_polynomial();
    let actual_rows = row_multiset(&orbits(
        &g,
        &analysis.matchings,
        &fns,
        SymmetryGroup::Rotation,
    )?);
    let expected_rows = table.expected_rows();
    let missing_rows = multiset_minus(&expected_rows, &actual_rows);
    let unexpected_rows = multiset_minus(&actual_rows, &expected_rows);
    let rows_match = missing_rows.is_empty() && unexpected_rows.is_empty();
    let dihedral_rows = if rows_match {
        None
    } else {
        Some(row_multiset(&orbits(
            &g,
            &analysis.matchings,
            &fns,
            SymmetryGroup::Dihedral,
        )?))
    };
    Ok(VerifyOutcome {
        n: table.n,
        pass: rows_match && actual == expected,
        expected_polynomial: expected.to_string(),
        actual_polynomial: actual.to_string(),
        expected_pm_count: expected.eval_at_one(),
        actual_pm_count: actual.eval_at_one(),
        expected_rows,
        actual_rows,
        missing_rows,
        unexpected_rows,
        dihedral_rows,
    })
}

fn rows_text(rows: &[(usize, usize)]) -> String {
    let items: Vec<String> = rows.iter().map(|(p, f)| format!("({p},{f})")).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            return write!(
                f,
                "n={:<2} PASS  {}  pm={}  rows={}",
                self.n,
                self.actual_polynomial,
                self.actual_pm_count,
                rows_text(&self.actual_rows)
            );
        }
        writeln!(f, "n={:<2} FAIL", self.n)?;
        if self.expected_polynomial != self.actual_polynomial {
            writeln!(
                f,
                "  polynomial: expected {} (pm={}), got {} (pm={})",
                self.expected_polynomial,
                self.expected_pm_count,
                self.actual_polynomial,
                self.actual_pm_count
            )?;
        }
        if !self.missing_rows.is_empty() || !self.unexpected_rows.is_empty() {
            writeln!(
                f,
                "  rotation rows: expected {}",
                rows_text(&self.expected_rows)
            )?;
            writeln!(
                f,
                "                 got      {}",
                rows_text(&self.actual_rows)
            )?;
            writeln!(f, "  missing    {}", rows_text(&self.missing_rows))?;
            writeln!(f, "  unexpected {}", rows_text(&self.unexpected_rows))?;
        }
        if let Some(rows) = &self.dihedral_rows {
            writeln!(f, "  dihedral rows:   {}", rows_text(rows))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_self_consistent() {
        let tables = paper_tables();
        assert_eq!(
            tables.iter().map(|t| t.n).collect::<Vec<_>>(),
            (5..=15).collect::<Vec<_>>()
        );
        for t in &tables {
            let p = t.expected_polynomial();
            let pmc: u64 = t.rows.iter().map(|&(s, _)| s as u64).sum();
            assert_eq!(pmc, p.eval_at_one(), "n={}", t.n);
            for (e, c) in p.terms() {
                let per: u64 = t.rows.iter().filter(|r| r.1 == e).map(|r| r.0 as u64).sum();
                assert_eq!(per, c, "n={} exponent {e}", t.n);
            }
            assert!(t.rows.iter().all(|&(s, _)| t.n % s == 0));
        }
    }

    #[test]
    fn multiset_difference() {
        let a = [(1, 2), (4, 3), (4, 3)];
        let b = [(4, 3), (8, 2)];
        assert_eq!(multiset_minus(&a, &b), vec![(1, 2), (4, 3)]);
        assert_eq!(multiset_minus(&b, &a), vec![(8, 2)]);
    }

    #[test]
    fn tampered_table_fails_with_diff() {
        let mut t = paper_table(8).unwrap();
        t.polynomial = vec![(3, 9), (2, 8)];
        t.rows[1] = (8, 3);
        let out = verify_table(&t, Engine::HittingSet, Some(1)).unwrap();
        assert!(!out.pass);
        assert_eq!(out.missing_rows, vec![(8, 3)]);
        assert_eq!(out.unexpected_rows, vec![(8, 2)]);
        assert!(out.dihedral_rows.is_some());
        let text = out.to_string();
        assert!(text.contains("FAIL"));
        assert!(text.contains("expected 9x^3+8x^2"));
        assert!(text.contains("got 8x^3+9x^2"));
    }
}
