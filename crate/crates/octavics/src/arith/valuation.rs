//! p-adic valuations of integers and rationals.

use super::{primality::is_prime, ArithError};
use crate::{Int, Rat};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Extended-integer valuation: an element of `Z ∪ {+infinity}`.
///
/// The valuation of 0 is `Infinite`, never a sentinel integer; comparisons
/// and arithmetic treat it as a genuine top element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Finite value, or `None` for `+infinity`.
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        use Valuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl Sub for Valuation {
    type Output = Valuation;
    /// `infinity - finite = infinity`; `infinity - infinity` is not defined
    /// and panics.
    fn sub(self, rhs: Valuation) -> Valuation {
        use Valuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a - b),
            (Infinite, Finite(_)) => Infinite,
            (_, Infinite) => panic!("cannot subtract an infinite valuation"),
        }
    }
}

impl Neg for Valuation {
    type Output = Valuation;
    fn neg(self) -> Valuation {
        match self {
            Valuation::Finite(a) => Valuation::Finite(-a),
            Valuation::Infinite => panic!("cannot negate an infinite valuation"),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// Exact power of `p` dividing a nonzero integer.
fn valuation_of_nonzero(n: &Int, p: &Int) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut rest = n.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&rest, p);
        if !r.is_zero() {
            return v;
        }
        rest = q;
        v += 1;
    }
}

/// p-adic valuation of an integer, `+infinity` for 0.
///
/// `p` must be a prime; composite moduli are rejected.
pub fn padic_valuation_int(n: &Int, p: &Int) -> Result<Valuation, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotAPrime(p.to_string()));
    }
    if n.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(valuation_of_nonzero(n, p)))
}

/// p-adic valuation of a rational: `v_p(num) - v_p(den)`, and `+infinity`
/// exactly when `x = 0`.
pub fn padic_valuation(x: &Rat, p: &Int) -> Result<Valuation, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotAPrime(p.to_string()));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let vn = valuation_of_nonzero(x.numer(), p);
    let vd = valuation_of_nonzero(x.denom(), p);
    Ok(Valuation::Finite(vn - vd))
}
