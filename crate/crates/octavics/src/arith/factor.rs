//! Best-effort integer factorization for display: trial division below a
//! fixed bound, then Pollard rho (Brent variant) under an iteration budget.
//!
//! Values like discriminants of curves with coefficients of cryptographic
//! size can contain factors far beyond what rho finds in reasonable time, so
//! the result is allowed to be partial: every base carries a status flag and
//! re-multiplying the factorization always reconstructs the input exactly.

use super::primality::is_prime;
use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Trial division covers all primes below this bound.
const TRIAL_BOUND: u64 = 10_000;

/// How certain we are that a base in a [`FactoredInteger`] is prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorStatus {
    /// Proven prime (trial division, or Baillie-PSW below `2^64`).
    Prime,
    /// Passes Baillie-PSW but is too large for the proven range.
    ProbablePrime,
    /// Known composite that the budget did not split.
    Composite,
}

/// Iteration budget for Pollard rho.
#[derive(Debug, Clone, Copy)]
pub struct FactorBudget {
    /// Total rho iterations across all attempts.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        // Enough to split ~20-digit semiprimes in well under a second while
        // keeping the worst case bounded.
        FactorBudget {
            rho_iterations: 10_000_000,
        }
    }
}

/// Sign and prime-power (or composite-power) decomposition of an integer.
///
/// Invariants: bases strictly increasing, exponents >= 1, and
/// `sign * prod(base^exp)` reconstructs the original value exactly.
/// `sign == 0` if and only if the value is 0 (with no factors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: Vec<(Int, u32, FactorStatus)>,
}

impl FactoredInteger {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> Int {
        let mut out = Int::from(self.sign);
        for (base, exp, _) in &self.factors {
            out *= base.pow(*exp);
        }
        out
    }

    /// True when every base is (probably) prime.
    pub fn is_complete(&self) -> bool {
        self.factors
            .iter()
            .all(|(_, _, s)| *s != FactorStatus::Composite)
    }
}

impl fmt::Display for FactoredInteger {
    /// Renders like `-2^14 * 3 * 5^2 * 7`, flagging non-proven bases with a
    /// trailing `?` (probable prime) or `!` (unresolved composite).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (base, exp, status)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{base}")?;
            match status {
                FactorStatus::Prime => {}
                FactorStatus::ProbablePrime => write!(f, "?")?,
                FactorStatus::Composite => write!(f, "!")?,
            }
            if *exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

fn sieve_below(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    let mut composite = vec![false; bound];
    let mut primes = Vec::new();
    for n in 2..bound {
        if !composite[n] {
            primes.push(n as u64);
            let mut m = n * n;
            while m < bound {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
}

/// Pollard rho with Brent's cycle detection and batched gcds.
/// Returns a nontrivial factor of `n` (odd composite), or `None` if the
/// budget ran out. `budget` is decremented by the iterations actually used.
fn pollard_rho_brent(n: &Int, seed: u64, budget: &mut u64) -> Option<Int> {
    let c = Int::from(seed * 2 + 1);
    let mut y = Int::from(seed + 2) % n;
    let mut r: u64 = 1;
    let mut q = Int::one();
    let mut ys;

    loop {
        let x = y.clone();
        for _ in 0..r {
            y = (&y * &y + &c) % n;
        }
        let mut k: u64 = 0;
        while k < r {
            if *budget == 0 {
                return None;
            }
            let m = 128.min(r - k).min(*budget);
            ys = y.clone();
            for _ in 0..m {
                y = (&y * &y + &c) % n;
                let diff = (&x - &y).abs();
                q = (&q * diff) % n;
            }
            *budget = budget.saturating_sub(m);
            let g = q.gcd(n);
            if !g.is_one() {
                if g == *n {
                    // Backtrack one step at a time to recover the factor.
                    loop {
                        ys = (&ys * &ys + &c) % n;
                        let g = (&x - &ys).abs().gcd(n);
                        if !g.is_one() {
                            if g == *n {
                                return None; // cycle degenerate for this seed
                            }
                            return Some(g);
                        }
                    }
                }
                return Some(g);
            }
            k += m;
        }
        r *= 2;
    }
}

/// Splits `n` (positive, no factors below [`TRIAL_BOUND`]) as far as the
/// budget allows, pushing `(base, status)` pairs.
fn split_with_rho(n: Int, budget: &mut u64, out: &mut Vec<(Int, FactorStatus)>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        let status = if n.bits() <= 64 {
            FactorStatus::Prime
        } else {
            FactorStatus::ProbablePrime
        };
        out.push((n, status));
        return;
    }
    // Perfect powers of primes slip past rho's gcd trick less often if we
    // peel exact roots first.
    for k in [2u32, 3, 5] {
        let root = n.nth_root(k);
        if root.pow(k) == n {
            for _ in 0..k {
                split_with_rho(root.clone(), budget, out);
            }
            return;
        }
    }
    for seed in 1..=8u64 {
        if *budget == 0 {
            break;
        }
        if let Some(d) = pollard_rho_brent(&n, seed, budget) {
            let q = &n / &d;
            split_with_rho(d, budget, out);
            split_with_rho(q, budget, out);
            return;
        }
    }
    out.push((n, FactorStatus::Composite));
}

/// Factors `n` for display under the given budget. Always succeeds; bases
/// that could not be resolved are returned as composites.
pub fn factor_for_display(n: &Int, budget: FactorBudget) -> FactoredInteger {
    if n.is_zero() {
        return FactoredInteger {
            sign: 0,
            factors: Vec::new(),
        };
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut bases: Vec<(Int, FactorStatus)> = Vec::new();

    for p in sieve_below(TRIAL_BOUND) {
        let p = Int::from(p);
        if &p * &p > rest {
            break;
        }
        while (&rest % &p).is_zero() {
            rest /= &p;
            bases.push((p.clone(), FactorStatus::Prime));
        }
    }
    if !rest.is_one() {
        if rest < Int::from(TRIAL_BOUND * TRIAL_BOUND) {
            // Below the square of the trial bound the cofactor is prime.
            bases.push((rest, FactorStatus::Prime));
        } else {
            let mut budget_left = budget.rho_iterations;
            split_with_rho(rest, &mut budget_left, &mut bases);
        }
    }

    bases.sort_by(|a, b| a.0.cmp(&b.0));
    let mut factors: Vec<(Int, u32, FactorStatus)> = Vec::new();
    for (base, status) in bases {
        match factors.last_mut() {
            Some((b, exp, _)) if *b == base => *exp += 1,
            _ => factors.push((base, 1, status)),
        }
    }
    FactoredInteger { sign, factors }
}
