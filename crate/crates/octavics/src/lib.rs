//! Exact-arithmetic invariants of binary octics (genus-3 hyperelliptic curves).
//!
//! A binary octic `f(x, z)` of degree 8 over the rationals defines a genus-3
//! hyperelliptic curve `y^2 = f(x, z)` (in the `z = 1` chart). This crate
//! computes its classical invariants two independent ways and converts
//! between them:
//!
//! - [`forms`]: binary forms, transvectants, the nine Shioda invariants
//!   `J2..J10` and the degree-14 discriminant, all from the coefficients;
//! - [`roots`]: the nine Tsuyumine invariants `I2..I10`, the degree-20
//!   invariant `I20` and the discriminant as full `S8` sums of products of
//!   pairwise root differences, plus p-adic cluster signatures;
//! - [`passage`]: the exact linear passage tables between the two generator
//!   sets, the weight-20 expansion of `I20` in Shioda invariants, absolute
//!   (weight-0) invariants, weighted-projective equality, and an
//!   interpolation harness that rederives every table from scratch;
//! - [`reduction`]: normalized valuations `v_Sh` and the classifier of the
//!   reduction type of the curve at a prime of residue characteristic
//!   outside `{2, 3, 5, 7}`;
//! - [`arith`]: p-adic valuations and best-effort integer factorization for
//!   display.
//!
//! Everything is exact: the scalar type is [`Rat`] (arbitrary-precision
//! rational, always in lowest terms with positive denominator) and no
//! floating point is used anywhere.
//!
//! ```
//! use octavics::*;
//!
//! // y^2 = x^7 + 1786 x^5 + 44441 x^3 + 278179 x, homogenized to an octic.
//! let mut coeffs = vec![rat(0); 9];
//! coeffs[7] = rat(1);
//! coeffs[5] = rat(1786);
//! coeffs[3] = rat(44441);
//! coeffs[1] = rat(278179);
//! let f = BinaryForm::new(coeffs);
//!
//! let j = shioda_invariants(&f)?;
//! assert_eq!(j.j(2), &ratio(-81_318_879, 28));
//!
//! let verdict = classify_reduction(&f, &Int::from(11))?;
//! assert_eq!(verdict.verdict, ReductionType::BadEllipticTimesGenus2);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod arith;
pub mod forms;
pub mod linalg;
pub mod passage;
pub mod reduction;
pub mod roots;

pub use arith::{factor_for_display, padic_valuation, FactorStatus, FactoredInteger, Valuation};
pub use forms::{discriminant, shioda_invariants, transvectant, BinaryForm, ShiodaVector};
pub use passage::{
    absolute_invariants, i20_from_shioda, shioda_from_tsuyumine, tsuyumine_from_shioda,
    weighted_projective_eq, AbsoluteInvariants, WeightedMonomialTable,
};
pub use reduction::{classify_reduction, normalized_valuation, ReductionType, ReductionVerdict};
pub use roots::{
    cluster_signature, discriminant_from_roots, i20_from_roots, tsuyumine_from_roots,
    ClusterSignature, ProjectivePoint, SplitOctic, TsuyumineVector,
};

/// Arbitrary-precision exact rational, the scalar type of the whole crate.
///
/// `num_rational::BigRational` keeps values canonical (reduced, positive
/// denominator) after every operation, so structural equality is value
/// equality and `to_string`/`parse` round-trip bit-exactly.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Rational from an `i64`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
