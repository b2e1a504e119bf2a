//! Normalized valuations and the reduction-type trichotomy for genus-3
//! hyperelliptic curves `y^2 = f(x, z)` at primes of residue characteristic
//! outside `{2, 3, 5, 7}`.
//!
//! The normalized valuation of an invariant `I` of weight `w` at `p` is
//!
//! ```text
//! v_Sh(I) = v_p(I)/w - min_{k=2..10} v_p(J_k)/k
//! ```
//!
//! which is invariant under weighted rescaling of the model. The
//! classification reads the signs of `v_Sh(D)` and `v_Sh(I20)`:
//! potentially good reduction iff `v_Sh(D) = 0`; otherwise the special
//! fiber of the stable model is an elliptic curve times a genus-2 Jacobian
//! when `v_Sh(I20) = 0` and a product of three elliptic curves when
//! `v_Sh(I20) > 0` — conditionally on the Jacobian's stable reduction being
//! a principally polarized abelian threefold, which this crate cannot
//! check; every verdict carries that caveat.

use crate::arith::{is_prime, padic_valuation, Valuation};
use crate::forms::{discriminant, shioda_invariants, BinaryForm, FormError, ShiodaVector};
use crate::passage::i20_from_shioda;
use crate::{Int, Rat};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Errors from the reduction classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("not a prime: {0}")]
    NotAPrime(String),
    /// Shioda invariants stop being a parameter system in residue
    /// characteristics 2, 3, 5, 7; classifying there needs a different
    /// generator set that is out of scope here.
    #[error("requires external HSOP: residue characteristic {0} not supported")]
    RequiresExternalHsop(u32),
    #[error("singular model: the discriminant vanishes")]
    SingularModel,
    #[error("degenerate octic: all Shioda invariants vanish")]
    DegenerateOctic,
    #[error(transparent)]
    Form(#[from] FormError),
}

/// A valuation divided by a weight: an exact rational or `+infinity`.
/// Normalized valuations are `>= 0` by construction of the min-subtraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizedValuation {
    Finite(Rat),
    Infinite,
}

impl NormalizedValuation {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalizedValuation::Finite(v) if v.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        match self {
            NormalizedValuation::Finite(v) => v > &Rat::zero(),
            NormalizedValuation::Infinite => true,
        }
    }
}

impl fmt::Display for NormalizedValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizedValuation::Finite(v) => write!(f, "{v}"),
            NormalizedValuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// The trichotomy of geometric reduction types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionType {
    /// Good reduction after a finite extension.
    PotentiallyGood,
    /// Geometrically bad; stable special fiber an elliptic curve union a
    /// genus-2 curve (Jacobian `E x Jac(C2)`).
    BadEllipticTimesGenus2,
    /// Geometrically bad; stable special fiber three elliptic curves.
    BadThreeElliptic,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionType::PotentiallyGood => "potentially good",
            ReductionType::BadEllipticTimesGenus2 => "bad: elliptic x genus-2 Jacobian",
            ReductionType::BadThreeElliptic => "bad: three elliptic curves",
        };
        write!(f, "{s}")
    }
}

/// Classifier output, with the evidence and the standing hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub prime: Int,
    pub verdict: ReductionType,
    /// `v_Sh(D)`, exact.
    pub v_sh_discriminant: NormalizedValuation,
    /// `v_Sh(I20)`, exact.
    pub v_sh_i20: NormalizedValuation,
    /// The hypothesis the trichotomy is conditional on; always present,
    /// since the crate cannot verify it.
    pub caveat: &'static str,
}

pub const PPAV_CAVEAT: &str = "conditional on the stable reduction of the Jacobian being a \
principally polarized abelian variety of dimension 3 (holds e.g. for CM curves)";

fn check_prime(p: &Int) -> Result<(), ReductionError> {
    if !is_prime(p) {
        return Err(ReductionError::NotAPrime(p.to_string()));
    }
    for small in [2u32, 3, 5, 7] {
        if *p == Int::from(small) {
            return Err(ReductionError::RequiresExternalHsop(small));
        }
    }
    Ok(())
}

/// `min_k v_p(J_k)/k` as an exact rational; `None` when every `J_k`
/// vanishes (zero invariants contribute `+infinity`, never the minimum).
fn min_weighted_valuation(j: &ShiodaVector, p: &Int) -> Option<Rat> {
    let mut min: Option<Rat> = None;
    for k in 2..=10u32 {
        let v = padic_valuation(j.j(k), p).expect("p checked prime");
        if let Valuation::Finite(v) = v {
            let w = Rat::new(Int::from(v), Int::from(k));
            min = Some(match min {
                Some(m) if m <= w => m,
                _ => w,
            });
        }
    }
    min
}

/// Normalized valuation `v_p(value)/weight - min_k v_p(J_k)/k`.
///
/// `p` must be a prime outside `{2, 3, 5, 7}` and `J` must not be
/// identically zero. The result is `+infinity` exactly when `value = 0`.
pub fn normalized_valuation(
    value: &Rat,
    weight: u32,
    j: &ShiodaVector,
    p: &Int,
) -> Result<NormalizedValuation, ReductionError> {
    check_prime(p)?;
    let min = min_weighted_valuation(j, p).ok_or(ReductionError::DegenerateOctic)?;
    match padic_valuation(value, p).expect("p checked prime") {
        Valuation::Infinite => Ok(NormalizedValuation::Infinite),
        Valuation::Finite(v) => Ok(NormalizedValuation::Finite(
            Rat::new(Int::from(v), Int::from(weight)) - min,
        )),
    }
}

/// Classifies the reduction type of `y^2 = f` at `p` from the signs of
/// `v_Sh(D)` and `v_Sh(I20)`:
///
/// - `v_Sh(D) = 0`: potentially good;
/// - `v_Sh(D) > 0`, `v_Sh(I20) = 0`: elliptic times genus-2 Jacobian;
/// - `v_Sh(D) > 0`, `v_Sh(I20) > 0`: three elliptic curves.
///
/// `f` must be a smooth octic (degree-7 inputs are homogenized by the
/// caller) and `p` a prime outside `{2, 3, 5, 7}`. The verdict is
/// conditional on the p.p.a.v. hypothesis recorded in its `caveat` field.
pub fn classify_reduction(f: &BinaryForm, p: &Int) -> Result<ReductionVerdict, ReductionError> {
    check_prime(p)?;
    let d = discriminant(f)?;
    if d.is_zero() {
        return Err(ReductionError::SingularModel);
    }
    let j = shioda_invariants(f)?;
    let i20 = i20_from_shioda(&j);

    let v_d = normalized_valuation(&d, 14, &j, p)?;
    let v_i20 = normalized_valuation(&i20, 20, &j, p)?;
    debug_assert!(
        !matches!(&v_d, NormalizedValuation::Finite(v) if v < &Rat::zero()),
        "v_Sh(D) must be nonnegative"
    );

    let verdict = if v_d.is_zero() {
        ReductionType::PotentiallyGood
    } else if v_i20.is_zero() {
        ReductionType::BadEllipticTimesGenus2
    } else {
        ReductionType::BadThreeElliptic
    };
    Ok(ReductionVerdict {
        prime: p.clone(),
        verdict,
        v_sh_discriminant: v_d,
        v_sh_i20: v_i20,
        caveat: PPAV_CAVEAT,
    })
}
