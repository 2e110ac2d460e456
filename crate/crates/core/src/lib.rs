//! Table-driven finite semigroup algebra.
//!
//! Semigroups are Cayley tables over dense indices `0..n`. On top of that the
//! crate builds acts and biacts, tensor products of acts as quotients by the
//! balanced congruence, Morita semigroups and Morita contexts, Rees matrix
//! semigroups with their Morita covers, and the adjoint-endomorphism
//! semigroups attached to a pairing of acts. Every construction is verified
//! exhaustively, which is practical because the objects of interest are tiny.
//!
//! The [`corpus`] and [`suite`] modules enumerate all small semigroups and
//! run the structural theorems over them; [`format`] reads and writes the
//! plain-text descriptors used by the `sgx` command-line tool.

pub mod acts;
pub mod corpus;
pub mod dual_pairs;
mod error;
pub mod format;
pub mod morita;
pub mod morphisms;
pub mod rees;
pub mod semigroup;
pub mod small;
pub mod suite;
pub mod tensor;
mod union_find;

pub use error::{Error, Result};
pub use semigroup::{ClassReport, ElementId, FiniteSemigroup};

/// Default cap on brute-force candidate counts.
pub const DEFAULT_MAX_CANDIDATES: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_CANDIDATES`].
pub const MAX_CANDIDATES_ENV: &str = "SGX_MAX_CANDIDATES";

/// Bounds on exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_candidates: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl SearchLimits {
    pub fn new(max_candidates: u64) -> Self {
        Self { max_candidates }
    }

    /// Reads `SGX_MAX_CANDIDATES`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_CANDIDATES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    pub(crate) fn check(&self, candidates: u64) -> Result<()> {
        if candidates > self.max_candidates {
            return Err(Error::SearchSpaceTooLarge {
                candidates,
                limit: self.max_candidates,
            });
        }
        Ok(())
    }
}

/// `base^exp`, saturating at `u64::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u64);
    }
    acc
}
