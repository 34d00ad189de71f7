//! Exact forcing numbers, forcing polynomials and symmetry classes of perfect
//! matchings in generalized Petersen graphs GP(n, k).
//!
//! ```
//! use gp_forcing::{forcing_polynomial, Engine, Graph};
//!
//! let petersen = Graph::generalized_petersen(5, 2).unwrap();
//! let p = forcing_polynomial(&petersen, Engine::Both, None).unwrap();
//! assert_eq!(p.to_string(), "6x^2");
//! ```

pub mod bitset;
pub mod cycles;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod matching;
pub mod orbit;
pub mod paper;
pub mod poly;
pub mod report;

pub use bitset::BitSet;
pub use cycles::{
    enumerate_alternating_cycles, max_disjoint_alternating_cycles, AltCycle, CyclePacking,
};
pub use error::{Error, Result};
pub use forcing::{
    forcing_number, forcing_number_by_hitting_set, forcing_number_by_subset_search, is_forcing,
    min_hitting_set, Criterion, Engine, ForcingResult,
};
pub use graph::{validate, EdgeClass, GpParams, Graph, ValidationReport, VertexId, Violation};
pub use matching::{
    count_matchings_containing, enumerate_perfect_matchings, is_perfect_matching, Matching,
};
pub use orbit::{orbits, rotation_orbits, row_multiset, Orbit, SymmetryGroup};
pub use paper::{paper_table, paper_tables, verify_table, PaperTable, VerifyOutcome};
pub use poly::{forcing_polynomial, Analysis, ForcingPolynomial, PolyStats};
