//! Exact scalar arithmetic support: p-adic valuations and best-effort
//! integer factorization for human-readable output.
//!
//! All invariant values in this crate are [`Rat`](crate::Rat); this module
//! adds the two number-theoretic operations the invariant stack needs:
//! [`padic_valuation`] (with a distinguished `+infinity` for 0) and
//! [`factor_for_display`] (trial division, then Pollard rho under a budget,
//! with Baillie-PSW primality flags).

mod factor;
mod primality;
mod valuation;

pub use factor::{factor_for_display, FactorBudget, FactorStatus, FactoredInteger};
pub use primality::is_prime;
pub use valuation::{padic_valuation, padic_valuation_int, Valuation};

use thiserror::Error;

/// Errors from scalar-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// The modulus passed to a valuation was not a prime.
    #[error("not a prime: {0}")]
    NotAPrime(String),
}
