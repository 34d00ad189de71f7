//! Forcing polynomials: `F(G, x) = sum over perfect matchings M of x^f(G,M)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forcing::{forcing_number, Engine, ForcingResult};
use crate::graph::Graph;
use crate::matching::{enumerate_perfect_matchings, Matching};

/// Exponent -> number of perfect matchings with that forcing number.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ForcingPolynomial {
    coeffs: BTreeMap<usize, u64>,
}

impl ForcingPolynomial {
    pub fn from_forcing_numbers(numbers: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs = BTreeMap::new();
        for f in numbers {
            *coeffs.entry(f).or_insert(0) += 1;
        }
        ForcingPolynomial { coeffs }
    }

    /// From `(exponent, coefficient)` pairs; zero coefficients are dropped.
    pub fn from_terms(terms: &[(usize, u64)]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &(e, c) in terms {
            if c > 0 {
                *coeffs.entry(e).or_insert(0) += c;
            }
        }
        ForcingPolynomial { coeffs }
    }

    pub fn coefficient(&self, exponent: usize) -> u64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `F(G, 1)`.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// `F'(G, 1)`.
    pub fn derivative_at_one(&self) -> u64 {
        self.terms().map(|(e, c)| e as u64 * c).sum()
    }

    pub fn stats(&self) -> Result<PolyStats> {
        let (Some((&min, _)), Some((&max, _))) =
            (self.coeffs.first_key_value(), self.coeffs.last_key_value())
        else {
            return Err(Error::domain(
                "empty forcing polynomial: the graph has no perfect matching",
            ));
        };
        let pm_count = self.eval_at_one();
        Ok(PolyStats {
            pm_count,
            average_forcing: Ratio::new(self.derivative_at_one(), pm_count),
            spectrum: self.coeffs.keys().copied().collect(),
            min_forcing: min,
            max_forcing: max,
        })
    }
}

/// ASCII form with descending exponents and no spaces, e.g. `x^3+21x^2`.
/// Unit coefficients are omitted, `x^1` prints as `x` and `x^0` as the bare
/// coefficient.
impl fmt::Display for ForcingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (e, c) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyStats {
    pub pm_count: u64,
    /// `F'(G,1) / F(G,1)`, exact.
    pub average_forcing: Ratio<u64>,
    pub spectrum: Vec<usize>,
    pub min_forcing: usize,
    pub max_forcing: usize,
}

impl PolyStats {
    /// Average forcing number rendered to six decimal places.
    pub fn average_decimal(&self) -> String {
        let (num, den) = (*self.average_forcing.numer(), *self.average_forcing.denom());
        // round half up on the scaled value
        let scaled = (num as u128 * 1_000_000 * 2 + den as u128) / (2 * den as u128);
        format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
    }

    pub fn average_fraction(&self) -> String {
        let r = self.average_forcing;
        if *r.denom() == 1 {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

/// Runs `op` on a pool with `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, op: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(op()),
        Some(0) => Err(Error::domain("thread count must be at least 1")),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::domain(format!("cannot start thread pool: {e}")))?;
            Ok(pool.install(op))
        }
    }
}

/// Forcing result for every matching, in the order given.
pub fn forcing_numbers(
    g: &Graph,
    matchings: &[Matching],
    engine: Engine,
    threads: Option<usize>,
) -> Result<Vec<ForcingResult>> {
    with_threads(threads, || {
        matchings
            .par_iter()
            .map(|&m| forcing_number(g, m, engine))
            .collect::<Vec<_>>()
    })?
    .into_iter()
    .collect()
}

/// All perfect matchings of a graph with their forcing results.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub matchings: Vec<Matching>,
    pub results: Vec<ForcingResult>,
}

impl Analysis {
    pub fn run(g: &Graph, engine: Engine, threads: Option<usize>) -> Result<Analysis> {
        let matchings = enumerate_perfect_matchings(g);
        let results = forcing_numbers(g, &matchings, engine, threads)?;
        Ok(Analysis { matchings, results })
    }

    pub fn polynomial(&self) -> ForcingPolynomial {
        ForcingPolynomial::from_forcing_numbers(self.results.iter().map(|r| r.forcing_number))
    }
}

pub fn forcing_polynomial(
    g: &Graph,
    engine: Engine,
    threads: Option<usize>,
) -> Result<ForcingPolynomial> {
    Ok(Analysis::run(g, engine, threads)?.polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        let p = ForcingPolynomial::from_terms(&[(3, 1), (2, 21)]);
        assert_eq!(p.to_string(), "x^3+21x^2");
        assert_eq!(
            ForcingPolynomial::from_terms(&[(4, 91), (3, 53)]).to_string(),
            "91x^4+53x^3"
        );
        assert_eq!(ForcingPolynomial::from_terms(&[(0, 1)]).to_string(), "1");
        assert_eq!(
            ForcingPolynomial::from_terms(&[(1, 2), (0, 3)]).to_string(),
            "2x+3"
        );
        assert_eq!(ForcingPolynomial::from_terms(&[(1, 1)]).to_string(), "x");
        assert_eq!(ForcingPolynomial::default().to_string(), "0");
    }

    #[test]
    fn stats_examples() {
        let s = ForcingPolynomial::from_terms(&[(3, 8), (2, 9)])
            .stats()
            .unwrap();
        assert_eq!(s.pm_count, 17);
        // (3*8 + 2*9) / 17
        assert_eq!(s.average_forcing, Ratio::new(42, 17));
        assert_eq!(s.average_fraction(), "42/17");
        assert_eq!(s.average_decimal(), "2.470588");
        assert_eq!(s.spectrum, vec![2, 3]);
        assert_eq!((s.min_forcing, s.max_forcing), (2, 3));

        let s = ForcingPolynomial::from_terms(&[(3, 36)]).stats().unwrap();
        assert_eq!((s.pm_count, s.average_fraction().as_str()), (36, "3"));
        assert_eq!(s.spectrum, vec![3]);
        assert_eq!(s.average_decimal(), "3.000000");

        let s = ForcingPolynomial::from_terms(&[(0, 1)]).stats().unwrap();
        assert_eq!((s.pm_count, s.average_decimal().as_str()), (1, "0.000000"));

        assert!(matches!(
            ForcingPolynomial::default().stats(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn small_polynomials() {
        let g = Graph::generalized_petersen(5, 2).unwrap();
        for engine in [Engine::HittingSet, Engine::SubsetSearch, Engine::Both] {
            assert_eq!(
                forcing_polynomial(&g, engine, Some(1)).unwrap().to_string(),
                "6x^2"
            );
        }
        let g = Graph::generalized_petersen(9, 2).unwrap();
        assert_eq!(
            forcing_polynomial(&g, Engine::Both, None)
                .unwrap()
                .to_string(),
            "x^3+21x^2"
        );
        let g = Graph::generalized_petersen(14, 2).unwrap();
        assert_eq!(
            forcing_polynomial(&g, Engine::Both, None)
                .unwrap()
                .to_string(),
            "57x^4+56x^3"
        );
    }

    #[test]
    fn zero_threads_rejected() {
        assert!(with_threads(Some(0), || ()).is_err());
    }

    #[test]
    fn json_is_an_exponent_map() {
        let p = ForcingPolynomial::from_terms(&[(3, 8), (2, 9)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"2":9,"3":8}"#);
        assert_eq!(serde_json::from_str::<ForcingPolynomial>(&json).unwrap(), p);
    }
}
