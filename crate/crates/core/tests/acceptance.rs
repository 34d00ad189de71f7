//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gp_forcing::report::{to_json, PolyReport};
use gp_forcing::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, forcing_number_by_hitting_set,
    forcing_number_by_subset_search, is_forcing, max_disjoint_alternating_cycles, orbits,
    paper_table, paper_tables, verify_table, Analysis, BitSet, Criterion, Engine, Graph, Matching,
    SymmetryGroup,
};

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(limit: Duration, started: Instant) -> Outcome {
    let took = started.elapsed();
    ensure!(took < limit, "took {took:.2?}, limit {limit:?}");
    Ok(format!("{took:.2?}"))
}

/// Criterion 1: All eleven published polynomials, exactly.
fn published_polynomials() -> Outcome {
    let expected = [
        (5, "6x^2"),
        (6, "10x^2"),
        (7, "15x^2"),
        (8, "8x^3+9x^2"),
        (9, "x^3+21x^2"),
        (10, "36x^3"),
        (11, "34x^3+11x^2"),
        (12, "51x^3+3x^2"),
        (13, "x^4+78x^3"),
        (14, "57x^4+56x^3"),
        (15, "91x^4+53x^3"),
    ];
    let started = Instant::now();
    for (n, poly) in expected {
        let table = paper_table(n).ok_or(format!("no table for n={n}"))?;
        ensure!(
            table.expected_polynomial().to_string() == poly,
            "embedded table for n={n} is {}",
            table.expected_polynomial()
        );
        let out = verify_table(&table, Engine::HittingSet, Some(1)).map_err(|e| e.to_string())?;
        ensure!(
            out.actual_polynomial == poly,
            "n={n}: got {}, want {poly}",
            out.actual_polynomial
        );
        ensure!(out.pass, "n={n}: {out}");
    }
    within(Duration::from_secs(60), started).map(|t| format!("11/11 on one thread in {t}"))
}

/// Criterion 2: Perfect matching counts for n = 5..=15.
fn matching_counts() -> Outcome {
    let expected = [6, 10, 15, 17, 22, 36, 45, 54, 79, 113, 144];
    let got: Vec<usize> = (5..=15)
        .map(|n| enumerate_perfect_matchings(&Graph::generalized_petersen(n, 2).unwrap()).len())
        .collect();
    ensure!(got == expected, "got {got:?}");
    Ok(format!("{got:?}"))
}

/// Criterion 3: Rotation-orbit (PMC, FN) multisets equal the published rows; a
/// mismatch must come with a dihedral discrepancy report.
fn orbit_rows() -> Outcome {
    for table in paper_tables() {
        let out = verify_table(&table, Engine::HittingSet, None).map_err(|e| e.to_string())?;
        ensure!(
            out.actual_rows == table.expected_rows(),
            "n={}: {out}",
            table.n
        );
        ensure!(
            out.dihedral_rows.is_none(),
            "n={}: unexpected discrepancy report",
            table.n
        );
    }
    let twelve = paper_table(12).unwrap();
    let mut want = vec![
        (4, 3),
        (12, 3),
        (12, 3),
        (6, 3),
        (12, 3),
        (1, 3),
        (4, 3),
        (3, 2),
    ];
    want.sort_unstable();
    ensure!(twelve.expected_rows() == want, "n=12 table rows differ");

    // a mismatch is never silent
    let mut tampered = paper_table(9).unwrap();
    tampered.rows[2] = (1, 2);
    let out = verify_table(&tampered, Engine::HittingSet, None).map_err(|e| e.to_string())?;
    ensure!(!out.pass, "tampered table passed");
    ensure!(
        out.dihedral_rows.is_some() && out.to_string().contains("dihedral rows"),
        "no discrepancy report: {out}"
    );
    Ok("n=5..15 match; tampered table reports a diff".into())
}

/// Criterion 4: Every perfect matching of the Petersen graph has f = 2 > 1 = C.
fn petersen_gap() -> Outcome {
    let g = Graph::generalized_petersen(5, 2).unwrap();
    let ms = enumerate_perfect_matchings(&g);
    ensure!(ms.len() == 6, "{} matchings", ms.len());
    for m in ms {
        let f = forcing_number_by_hitting_set(&g, m).unwrap().forcing_number;
        let s = forcing_number_by_subset_search(&g, m)
            .unwrap()
            .forcing_number;
        let c = max_disjoint_alternating_cycles(&g, m).unwrap().size;
        ensure!((f, s, c) == (2, 2, 1), "{}: f={f}/{s} C={c}", m.to_text(&g));
    }
    Ok("6 matchings, f=2, C=1".into())
}

/// Criterion 5: Both engines agree on every matching of GP(n,2), n = 5..=12, and every
/// witness forces under both criteria.
fn dual_engine() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for n in 5..=12 {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        for m in enumerate_perfect_matchings(&g) {
            let h = forcing_number_by_hitting_set(&g, m).unwrap();
            let s = forcing_number_by_subset_search(&g, m).unwrap();
            ensure!(
                h.forcing_number == s.forcing_number,
                "n={n} {}: {} vs {}",
                m.to_text(&g),
                h.forcing_number,
                s.forcing_number
            );
            for w in [h.witness, s.witness] {
                ensure!(w.is_subset(m.edges()), "witness outside matching");
                ensure!(w.len() == h.forcing_number, "witness size");
                for c in [Criterion::Uniqueness, Criterion::Cycles] {
                    ensure!(
                        is_forcing(&g, m, w, c).unwrap(),
                        "n={n}: witness fails {c:?}"
                    );
                }
            }
            checked += 1;
        }
    }
    within(Duration::from_secs(120), started).map(|t| format!("{checked} matchings in {t}"))
}

fn walk_edges(g: &Graph, walk: &str) -> (BitSet, BitSet) {
    let mut names = Vec::new();
    let mut rest = walk;
    while !rest.is_empty() {
        let end = rest[1..].find(['u', 'v']).map_or(rest.len(), |i| i + 1);
        names.push(&rest[..end]);
        rest = &rest[end..];
    }
    let vs: Vec<usize> = names.iter().map(|s| g.vertex_by_name(s).unwrap()).collect();
    let edges = vs
        .windows(2)
        .map(|w| g.edge_between(w[0], w[1]).unwrap())
        .collect();
    (edges, vs.into_iter().collect())
}

/// Criterion 6: The five M1-alternating cycles of the Petersen graph, edge for edge.
fn petersen_cycles() -> Outcome {
    let g = Graph::generalized_petersen(5, 2).unwrap();
    let m1 = Matching::parse(&g, "u0-u2,u1-u3,u4-v4,v0-v1,v2-v3").unwrap();
    let published = [
        "u0u2v2v3u3u1v1v0u0",
        "u0u2v2v3v4u4u1u3u0",
        "u0u2u4v4v3v2v1v0u0",
        "u0u2u4v4v0v1u1u3u0",
        "u1u3v3v2v1v0v4u4u1",
    ];
    let want: BTreeSet<(BitSet, BitSet)> = published.iter().map(|w| walk_edges(&g, w)).collect();
    let cycles = enumerate_alternating_cycles(&g, m1).unwrap();
    let got: BTreeSet<(BitSet, BitSet)> = cycles.iter().map(|c| (c.edges, c.vertex_set)).collect();
    ensure!(cycles.len() == 5, "{} cycles", cycles.len());
    ensure!(got == want, "cycles differ: {got:?}");
    for c in &cycles {
        ensure!(
            c.edges.intersection(m1.edges()) == c.matched_edges,
            "matched edges"
        );
    }
    Ok("5/5 cycles match".into())
}

fn report_json(n: usize, threads: usize) -> String {
    let g = Graph::generalized_petersen(n, 2).unwrap();
    let a = Analysis::run(&g, Engine::Both, Some(threads)).unwrap();
    let fns: Vec<usize> = a.results.iter().map(|r| r.forcing_number).collect();
    let o = orbits(&g, &a.matchings, &fns, SymmetryGroup::Rotation).unwrap();
    let report = PolyReport::new(&g, a.polynomial(), Some((SymmetryGroup::Rotation, &o))).unwrap();
    format!("{}{}", to_json(&report), to_json(&a.results))
}

/// Criterion 7: Structural properties, no published numbers involved.
fn properties() -> Outcome {
    for n in 5..=15 {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        let a = Analysis::run(&g, Engine::HittingSet, None).unwrap();
        let p = a.polynomial();
        for (m, r) in a.matchings.iter().zip(&a.results) {
            let c = max_disjoint_alternating_cycles(&g, *m).unwrap().size;
            ensure!(
                c <= r.forcing_number,
                "n={n}: C={c} > f={}",
                r.forcing_number
            );
        }
        let fns: Vec<usize> = a.results.iter().map(|r| r.forcing_number).collect();
        let o = orbits(&g, &a.matchings, &fns, SymmetryGroup::Rotation).unwrap();
        ensure!(
            o.iter().all(|o| n % o.size == 0),
            "n={n}: orbit size does not divide n"
        );
        let total: u64 = o.iter().map(|o| o.size as u64).sum();
        ensure!(total == p.eval_at_one(), "n={n}: sum PMC {total} != F(1)");
        for (e, coeff) in p.terms() {
            let s: u64 = o
                .iter()
                .filter(|o| o.forcing_number == e)
                .map(|o| o.size as u64)
                .sum();
            ensure!(s == coeff, "n={n}: exponent {e}: {s} != {coeff}");
        }
    }
    for n in [10, 13] {
        let single = report_json(n, 1);
        for threads in [2, 4, 8] {
            ensure!(
                report_json(n, threads) == single,
                "n={n}: {threads} threads differ"
            );
        }
    }
    Ok("C<=f, |orbit| divides n, PMC sums, thread determinism".into())
}

/// Criterion 8: n = 16..=20 with both engines completes and agrees.
fn extension() -> Outcome {
    let started = Instant::now();
    let mut polys = Vec::new();
    for n in 16..=20 {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        let a = Analysis::run(&g, Engine::Both, None).map_err(|e| format!("n={n}: {e}"))?;
        polys.push(format!("FP-{n}={}", a.polynomial()));
    }
    let t = within(Duration::from_secs(300), started)?;
    Ok(format!("{} in {t}", polys.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Check; 8] = [
        (
            "published forcing polynomials n=5..15",
            published_polynomials,
        ),
        ("perfect matching counts n=5..15", matching_counts),
        ("rotation orbit (PMC, FN) rows", orbit_rows),
        ("Petersen graph f=2 > C=1", petersen_gap),
        ("dual-engine agreement n=5..12", dual_engine),
        ("Petersen M1 alternating cycles", petersen_cycles),
        ("property suite", properties),
        ("extension n=16..20, both engines", extension),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}  ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}  ({why})", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
