//! Deterministic Baillie-PSW primality testing (strong base-2 Fermat test
//! followed by a strong Lucas test with Selfridge parameters).
//!
//! The combination has no known pseudoprime and is proven exhaustively
//! correct below `2^64`; callers treat larger passing inputs as probable
//! primes (see [`super::FactorStatus`]).

use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Primes below 100, enough to fast-path small inputs.
const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Baillie-PSW test. Exact below `2^64`; no counterexample is known above.
pub fn is_prime(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(small) = to_u64(n) {
        if small < 2 {
            return false;
        }
        for p in SMALL_PRIMES {
            let p = u64::from(p);
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    } else {
        for p in SMALL_PRIMES {
            if (n % Int::from(p)).is_zero() {
                return false;
            }
        }
    }
    miller_rabin_base2(n) && strong_lucas_selfridge(n)
}

fn to_u64(n: &Int) -> Option<u64> {
    use num_traits::ToPrimitive;
    n.to_u64()
}

/// Strong Fermat test to base 2.
fn miller_rabin_base2(n: &Int) -> bool {
    let one = Int::one();
    let two = Int::from(2);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1 is odd here");
    let d: Int = &n_minus_1 >> s;
    let mut x = two.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&Int::from(2), n);
        if x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &Int, n: &Int) -> i32 {
    debug_assert!(n.is_odd() && n.is_positive());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1u32;
            let r = &n % Int::from(8u8);
            if r == Int::from(3u8) || r == Int::from(5u8) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % Int::from(4u8)) == Int::from(3u8) && (&n % Int::from(4u8)) == Int::from(3u8) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice:
/// the first D in 5, -7, 9, -11, ... with Jacobi (D/n) = -1, P = 1,
/// Q = (1 - D)/4.
fn strong_lucas_selfridge(n: &Int) -> bool {
    // Perfect squares never yield Jacobi -1; rule them out first.
    let root = n.sqrt();
    if (&root * &root) == *n {
        return false;
    }

    let mut d = Int::from(5);
    loop {
        let j = jacobi(&d, n);
        if j == -1 {
            break;
        }
        if j == 0 && d.abs() != *n {
            return false; // shares a factor with n
        }
        // 5, -7, 9, -11, ...
        d = if d.is_positive() {
            -(d + Int::from(2))
        } else {
            -(d - Int::from(2))
        };
    }
    let q = (Int::one() - &d) / Int::from(4);

    // delta = n + 1 = 2^s * t with t odd
    let delta = n + Int::one();
    let s = delta.trailing_zeros().expect("delta is even");
    let t: Int = &delta >> s;

    // Lucas chain for U_t, V_t (P = 1), binary from the most significant bit.
    let mut u = Int::zero();
    let mut v = Int::from(2);
    let mut qk = Int::one(); // Q^k for current prefix k
    let bits = t.bits();
    for i in (0..bits).rev() {
        // double: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2 Q^k
        let u2 = (&u * &v).mod_floor(n);
        let v2 = (&v * &v - Int::from(2) * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        u = u2;
        v = v2;
        if t.bit(i) {
            // add one: U_{k+1} = (U_k + V_k)/2, V_{k+1} = (D U_k + V_k)/2
            let mut un = &u + &v;
            if un.is_odd() {
                un += n;
            }
            let mut vn = &d * &u + &v;
            if vn.is_odd() {
                vn += n;
            }
            u = (un >> 1u32).mod_floor(n);
            v = (vn >> 1u32).mod_floor(n);
            qk = (&qk * &q).mod_floor(n);
        }
    }

    // n is a strong Lucas probable prime if U_t = 0, or V_{t 2^r} = 0 for
    // some 0 <= r < s.
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - Int::from(2) * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn small_cases() {
        let primes: Vec<i64> = vec![2, 3, 5, 7, 11, 101, 9973, 10007];
        for p in primes {
            assert!(is_prime(&int(p)), "{p} should be prime");
        }
        for c in [0i64, 1, 4, 9, 91, 561, 1105, 2047, 10000, 25326001] {
            assert!(!is_prime(&int(c)), "{c} should be composite");
        }
        assert!(!is_prime(&int(-7)));
    }

    #[test]
    fn strong_pseudoprimes_to_base_2_are_rejected() {
        // 2047 = 23 * 89 and 3277 = 29 * 113 pass Miller-Rabin base 2.
        for c in [2047i64, 3277, 4033, 4681] {
            assert!(miller_rabin_base2(&int(c)));
            assert!(!is_prime(&int(c)), "{c} must be caught by the Lucas test");
        }
    }

    #[test]
    fn large_known_values() {
        // 30-digit prime cofactor of a degree-20 invariant value.
        let p: Int = "471894282846669530888306233351".parse().unwrap();
        assert!(is_prime(&p));
        let q: Int = "33730341419".parse().unwrap();
        assert!(is_prime(&q));
        // Their product is composite.
        assert!(!is_prime(&(p * q)));
    }

    #[test]
    fn jacobi_matches_legendre_for_small_primes() {
        // (a/7): quadratic residues are 1, 2, 4.
        for (a, expected) in [(1, 1), (2, 1), (3, -1), (4, 1), (5, -1), (6, -1)] {
            assert_eq!(jacobi(&int(a), &int(7)), expected, "a = {a}");
        }
        assert_eq!(jacobi(&int(14), &int(7)), 0);
    }
}
