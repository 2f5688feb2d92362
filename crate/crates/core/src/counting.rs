//! Closed-form counts of (-2)-critical and 3-minimal trees, and the partition
//! numbers they are built from. All arithmetic is exact.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::criticality::tree_sigma;
use crate::enumeration::{count_by_predicate, UNLABELED_GUARD};
use crate::error::{Error, Result};
use crate::minimality::is_k_minimal;
use crate::primality::tree_is_prime;

/// Nearest integer to `num / den`; `None` on an exact half.
pub fn nearest_integer(num: u64, den: u64) -> Option<u64> {
    assert!(den > 0);
    let twice_rem = 2 * (num % den);
    if twice_rem == den {
        return None;
    }
    Some(num / den + u64::from(twice_rem > den))
}

/// Partitions of `k` into exactly two positive parts.
pub fn p2(k: u64) -> u64 {
    k / 2
}

/// Partitions of `k` into exactly three positive parts:
/// `[(k+3)²/12] - ⌊k/2⌋ - 1`, where `[·]` is the nearest integer.
pub fn p3(k: u64) -> u64 {
    let at_most_three = nearest_integer((k + 3) * (k + 3), 12).expect("(k+3)^2 mod 12 is never 6");
    at_most_three - k / 2 - 1
}

/// Number of (-2)-critical trees on `n >= 5` vertices.
pub fn count_minus2_critical_formula(n: u64) -> Result<u64> {
    if n < 5 {
        return Err(Error::TooFewVertices { what: "the (-2)-critical count", min: 5, order: n as usize });
    }
    let q = n / 4;
    Ok(match n % 4 {
        0 => q * q - 1,
        1 => q * q,
        2 => q * (q + 1) - 1,
        _ => q * (q + 1),
    })
}

/// Number of 3-minimal trees on `n >= 4` vertices.
pub fn count_3minimal_formula(n: u64) -> Result<u64> {
    match n {
        0..=3 => Err(Error::TooFewVertices { what: "the 3-minimal count", min: 4, order: n as usize }),
        4 | 5 => Ok(1),
        6 => Ok(2),
        _ => {
            let rounded = nearest_integer((n - 1) * (n - 1), 12).expect("(n-1)^2 mod 12 is never 6");
            Ok(rounded + (n - 2) / 2 - (n - 4) / 2 - 1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountKind {
    /// Trees with exactly two non-critical vertices.
    Critical2,
    /// Trees minimal for some 3-vertex set.
    Minimal3,
}

impl CountKind {
    pub fn name(self) -> &'static str {
        match self {
            CountKind::Critical2 => "critical2",
            CountKind::Minimal3 => "minimal3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "critical2" | "minus2critical" => Some(CountKind::Critical2),
            "minimal3" | "threeminimal" => Some(CountKind::Minimal3),
            _ => None,
        }
    }

    /// Smallest `n` the formula covers.
    pub fn first_n(self) -> u64 {
        match self {
            CountKind::Critical2 => 5,
            CountKind::Minimal3 => 4,
        }
    }

    pub fn formula(self, n: u64) -> Result<u64> {
        match self {
            CountKind::Critical2 => count_minus2_critical_formula(n),
            CountKind::Minimal3 => count_3minimal_formula(n),
        }
    }

    /// Count by enumerating every tree on `n` vertices.
    pub fn enumerate(self, n: u64) -> Result<u64> {
        let n = n as usize;
        let count = match self {
            CountKind::Critical2 => {
                count_by_predicate(n, |t| tree_is_prime(t) && tree_sigma(t).map(|s| s.k == 2).unwrap_or(false))?
            }
            CountKind::Minimal3 => count_by_predicate(n, |t| is_k_minimal(t, 3))?,
        };
        Ok(count as u64)
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u64,
    pub formula: u64,
    pub enumerated: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub kind: CountKind,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn row(&self, n: u64) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

/// Formula against enumeration for every `n` from the formula's first value
/// up to `n_max`.
pub fn verify_formula(n_max: u64, kind: CountKind) -> Result<CountTable> {
    if n_max as usize > UNLABELED_GUARD {
        return Err(Error::TooLarge { order: n_max as usize, guard: UNLABELED_GUARD });
    }
    let rows = (kind.first_n()..=n_max)
        .into_par_iter()
        .map(|n| {
            let formula = kind.formula(n)?;
            let enumerated = kind.enumerate(n)?;
            Ok(CountRow { n, formula, enumerated, agree: formula == enumerated })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable { kind, rows })
}
