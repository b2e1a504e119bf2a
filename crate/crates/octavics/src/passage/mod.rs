//! Passage between the two generator sets of the invariant ring of binary
//! octics: Tsuyumine invariants as weighted polynomials in Shioda
//! invariants and back, the weight-20 expansion of `I20`, absolute
//! (weight-0) invariants, exact weighted-projective equality, and an
//! interpolation harness that rederives every shipped table from scratch.
//!
//! The forward tables (`I2..I10` and `I20` in terms of `J2..J10`) are
//! shipped as data. The inverse direction is *not* shipped: it is computed
//! symbolically by inverting the forward map, which is triangular across
//! weights with nonzero diagonal coefficients. A verbatim transcription of
//! the classical inverse table is retained as a reference fixture, and
//! [`inverse_table_discrepancies`] reports where the computed inverse
//! disagrees with it (two entries of the reference are known typos).

mod interpolate;
mod tables;

pub use interpolate::{
    rederive_passage_coefficients, rederive_passage_coefficients_with_samples, OcticSampler,
    PassageTarget, REDERIVE_RETRIES,
};

use crate::forms::ShiodaVector;
use crate::roots::TsuyumineVector;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Errors from passage operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PassageError {
    #[error("singular octic: the discriminant vanishes")]
    SingularOctic,
    #[error("normalizer vanishes: I2 and I3 must be nonzero")]
    NormalizerVanishes,
    #[error("undefined point: both vectors are zero")]
    UndefinedPoint,
    #[error("vectors and weights must have matching lengths")]
    LengthMismatch,
    #[error("interpolation degenerate: no nonsingular sample system found")]
    InterpolationDegenerate,
}

/// Exponent vector of a monomial in the nine weight-2..10 generators.
pub type ExpVec = [u8; 9];

/// Weighted degree of a monomial: `sum (i + 2) * e_i`.
pub fn weighted_degree(exps: &ExpVec) -> u32 {
    exps.iter()
        .enumerate()
        .map(|(i, &e)| (i as u32 + 2) * e as u32)
        .sum()
}

/// A homogeneous linear combination of monomials of one weighted degree in
/// the nine generators (either `J2..J10` or `I2..I10`).
///
/// Terms are kept sorted in descending lexicographic order of exponent
/// vectors and never store zero coefficients, so equal tables compare equal
/// structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMonomialTable {
    weight: u32,
    terms: Vec<(ExpVec, Rat)>,
}

impl WeightedMonomialTable {
    /// Builds a table, auditing that every monomial has the stated weight
    /// and appears once. Zero coefficients are dropped.
    pub fn new(weight: u32, terms: Vec<(ExpVec, Rat)>) -> Self {
        let mut terms: Vec<(ExpVec, Rat)> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        for pair in terms.windows(2) {
            assert_ne!(pair[0].0, pair[1].0, "duplicate monomial in table");
        }
        for (exps, _) in &terms {
            assert_eq!(
                weighted_degree(exps),
                weight,
                "monomial {exps:?} breaks weight-{weight} homogeneity"
            );
        }
        WeightedMonomialTable { weight, terms }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn terms(&self) -> &[(ExpVec, Rat)] {
        &self.terms
    }

    pub fn coefficient(&self, exps: &ExpVec) -> Rat {
        self.terms
            .iter()
            .find(|(e, _)| e == exps)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Exact evaluation on a 9-vector of generator values.
    pub fn eval(&self, values: &[Rat; 9]) -> Rat {
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// The documented JSON form:
    /// `{"weight": w, "terms": [{"exponents": [e2..e10], "coefficient": "num/den"}]}`.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\"weight\": {}, \"terms\": [", self.weight));
        for (n, (exps, coeff)) in self.terms.iter().enumerate() {
            if n > 0 {
                out.push_str(", ");
            }
            let exps_s: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!(
                "{{\"exponents\": [{}], \"coefficient\": \"{}\"}}",
                exps_s.join(", "),
                coeff
            ));
        }
        out.push_str("]}");
        out
    }
}

impl fmt::Display for WeightedMonomialTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

fn eval_power_product(sign: i8, powers: &[(u32, i32)]) -> Rat {
    let mut num = Int::from(sign);
    let mut den = Int::one();
    for &(base, exp) in powers {
        let b = Int::from(base);
        if exp >= 0 {
            num *= b.pow(exp as u32);
        } else {
            den *= b.pow((-exp) as u32);
        }
    }
    Rat::new(num, den)
}

fn table_from_power_products(
    weight: u32,
    raw: &[tables::PowerProductTerm],
) -> WeightedMonomialTable {
    let terms = raw
        .iter()
        .map(|&(sign, powers, exps)| (exps, eval_power_product(sign, powers)))
        .collect();
    WeightedMonomialTable::new(weight, terms)
}

/// The nine forward tables: `I_k` in weight-k Shioda monomials.
pub fn tsuyumine_from_shioda_tables() -> &'static [WeightedMonomialTable; 9] {
    static TABLES: OnceLock<[WeightedMonomialTable; 9]> = OnceLock::new();
    TABLES.get_or_init(|| {
        std::array::from_fn(|idx| table_from_power_products(idx as u32 + 2, tables::I_IN_J[idx]))
    })
}

/// The weight-20 expansion of `I20` in Shioda monomials (102 terms).
pub fn i20_from_shioda_table() -> &'static WeightedMonomialTable {
    static TABLE: OnceLock<WeightedMonomialTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let terms = tables::I20_IN_J
            .iter()
            .map(|&(num, den, exps)| {
                let n: Int = num.parse().expect("numerator literal");
                let d: Int = den.parse().expect("denominator literal");
                (exps, Rat::new(n, d))
            })
            .collect();
        WeightedMonomialTable::new(20, terms)
    })
}

/// Reference transcription of the classical inverse tables (`J_k` in
/// Tsuyumine monomials), kept verbatim for cross-checking; see
/// [`inverse_table_discrepancies`].
pub fn reference_shioda_from_tsuyumine_tables() -> &'static [WeightedMonomialTable; 9] {
    static TABLES: OnceLock<[WeightedMonomialTable; 9]> = OnceLock::new();
    TABLES.get_or_init(|| {
        std::array::from_fn(|idx| {
            table_from_power_products(idx as u32 + 2, tables::J_IN_I_REFERENCE[idx])
        })
    })
}

/// Sparse multivariate polynomial over the nine generators, used only for
/// the symbolic inversion of the forward map.
#[derive(Debug, Clone, Default)]
struct Poly(BTreeMap<ExpVec, Rat>);

impl Poly {
    fn unit(idx: usize) -> Poly {
        let mut e = [0u8; 9];
        e[idx] = 1;
        let mut m = BTreeMap::new();
        m.insert(e, Rat::one());
        Poly(m)
    }

    fn add_assign_scaled(&mut self, other: &Poly, c: &Rat) {
        for (e, v) in &other.0 {
            let entry = self.0.entry(*e).or_insert_with(Rat::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.0.remove(e);
            }
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out: BTreeMap<ExpVec, Rat> = BTreeMap::new();
        for (ea, va) in &self.0 {
            for (eb, vb) in &other.0 {
                let mut e = *ea;
                for i in 0..9 {
                    e[i] += eb[i];
                }
                let entry = out.entry(e).or_insert_with(Rat::zero);
                *entry += va * vb;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
        }
        Poly(out)
    }

    fn pow(&self, e: u8) -> Poly {
        let mut acc = Poly({
            let mut m = BTreeMap::new();
            m.insert([0u8; 9], Rat::one());
            m
        });
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn scale(&mut self, c: &Rat) {
        for v in self.0.values_mut() {
            *v *= c;
        }
    }
}

/// Inverse tables computed symbolically from the forward map.
///
/// The forward map is triangular across weights: the weight-k row is
/// `I_k = c_k * J_k + (monomials in J_2..J_{k-1})` with `c_k != 0`, so each
/// `J_k` is solved bottom-up by substituting the already-inverted lower
/// rows.
pub fn shioda_from_tsuyumine_tables() -> &'static [WeightedMonomialTable; 9] {
    static TABLES: OnceLock<[WeightedMonomialTable; 9]> = OnceLock::new();
    TABLES.get_or_init(|| {
        let forward = tsuyumine_from_shioda_tables();
        let mut j_polys: Vec<Poly> = Vec::with_capacity(9);
        for k in 0..9usize {
            let row = &forward[k];
            let mut diag = [0u8; 9];
            diag[k] = 1;
            let c_diag = row.coefficient(&diag);
            assert!(!c_diag.is_zero(), "forward map must have nonzero diagonal");
            // J_k = (I_k - sum of lower-weight monomial terms) / c_diag
            let mut p = Poly::unit(k);
            for (exps, coeff) in row.terms() {
                if *exps == diag {
                    continue;
                }
                let mut mono = Poly::pow(&Poly::unit(0), 0); // constant 1
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        mono = mono.mul(&j_polys[i].pow(e));
                    }
                }
                p.add_assign_scaled(&mono, &-coeff.clone());
            }
            p.scale(&(Rat::one() / c_diag));
            j_polys.push(p);
        }
        std::array::from_fn(|k| {
            let terms: Vec<(ExpVec, Rat)> =
                j_polys[k].0.iter().map(|(e, c)| (*e, c.clone())).collect();
            WeightedMonomialTable::new(k as u32 + 2, terms)
        })
    })
}

/// One disagreement between the computed inverse and the reference
/// transcription.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseDiscrepancy {
    /// Weight of the `J` row the entry lives in (2..=10).
    pub row_weight: u32,
    /// Monomial in `I2..I10`.
    pub exponents: ExpVec,
    /// Coefficient from the symbolic inversion (authoritative).
    pub computed: Rat,
    /// Coefficient as transcribed from the reference (zero when absent).
    pub reference: Rat,
}

/// Diffs the computed inverse tables against the reference transcription.
/// Discrepancies are reported, never patched into either table.
pub fn inverse_table_discrepancies() -> Vec<InverseDiscrepancy> {
    let computed = shioda_from_tsuyumine_tables();
    let reference = reference_shioda_from_tsuyumine_tables();
    let mut out = Vec::new();
    for k in 0..9 {
        let mut monomials: Vec<ExpVec> = computed[k]
            .terms()
            .iter()
            .chain(reference[k].terms())
            .map(|(e, _)| *e)
            .collect();
        monomials.sort();
        monomials.dedup();
        monomials.reverse();
        for exps in monomials {
            let c = computed[k].coefficient(&exps);
            let r = reference[k].coefficient(&exps);
            if c != r {
                out.push(InverseDiscrepancy {
                    row_weight: k as u32 + 2,
                    exponents: exps,
                    computed: c,
                    reference: r,
                });
            }
        }
    }
    out
}

/// Evaluates the nine forward tables.
pub fn tsuyumine_from_shioda(j: &ShiodaVector) -> TsuyumineVector {
    let tables = tsuyumine_from_shioda_tables();
    let values: [Rat; 9] = std::array::from_fn(|k| tables[k].eval(j.values()));
    TsuyumineVector::new(values)
}

/// Evaluates the computed inverse tables.
pub fn shioda_from_tsuyumine(i: &TsuyumineVector) -> ShiodaVector {
    let tables = shioda_from_tsuyumine_tables();
    let values: [Rat; 9] = std::array::from_fn(|k| tables[k].eval(i.values()));
    ShiodaVector::new(values)
}

/// Evaluates the 102-term weight-20 table.
pub fn i20_from_shioda(j: &ShiodaVector) -> Rat {
    i20_from_shioda_table().eval(j.values())
}

/// The nine weight-0 quotients built from the normalizer `J = D / (I2^2 I3^3)`:
///
/// ```text
/// ( I2^5 I3^6  / D^2,   I2^6 I3^10 / D^3,   I2^8 I3^12 I4 / D^4,
///   I2^10 I3^15 I5 / D^5,  ...,  I2^20 I3^30 I10 / D^10 )
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsoluteInvariants {
    values: [Rat; 9],
}

impl AbsoluteInvariants {
    pub fn values(&self) -> &[Rat; 9] {
        &self.values
    }
}

/// Absolute invariants `I_k / J^k` with `J = D / (I2^2 I3^3)`.
///
/// Fails on singular octics (`D = 0`) and when the normalizer vanishes
/// (`I2 = 0` or `I3 = 0`); in the latter case no fallback is attempted.
pub fn absolute_invariants(
    i: &TsuyumineVector,
    d: &Rat,
) -> Result<AbsoluteInvariants, PassageError> {
    if d.is_zero() {
        return Err(PassageError::SingularOctic);
    }
    if i.i(2).is_zero() || i.i(3).is_zero() {
        return Err(PassageError::NormalizerVanishes);
    }
    // J = D / (I2^2 I3^3); entry k is I_k / J^k = I_k I2^(2k) I3^(3k) / D^k.
    let inv_j = i.i(2) * i.i(2) * i.i(3) * i.i(3) * i.i(3) / d;
    let mut values: Vec<Rat> = Vec::with_capacity(9);
    let mut inv_j_pow = inv_j.clone() * &inv_j; // J^-2
    for k in 2..=10u32 {
        values.push(i.i(k) * &inv_j_pow);
        inv_j_pow *= &inv_j;
    }
    Ok(AbsoluteInvariants {
        values: values.try_into().expect("nine values"),
    })
}

fn rat_pow_i64(r: &Rat, e: i64) -> Rat {
    let mut acc = Rat::one();
    let base = if e >= 0 { r.clone() } else { Rat::one() / r };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Exact rational n-th root: `Some(t)` with `t^n = r`, if one exists.
/// For even `n` the returned root is the positive one.
fn rational_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if r.is_negative() {
        if n.is_multiple_of(2) {
            return None;
        }
        return rational_nth_root(&-r.clone(), n).map(|t| -t);
    }
    let num = r.numer().nth_root(n);
    let den = r.denom().nth_root(n);
    if num.pow(n) == *r.numer() && den.pow(n) == *r.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// Equality in the weighted projective space: true iff some nonzero
/// rational `lambda` has `b_k = lambda^(w_k) a_k` for every coordinate.
///
/// Decided exactly: the candidate `lambda^g` (with `g` the gcd of the
/// weights in the common support) is assembled from coordinate ratios via a
/// Bezout combination, a rational g-th root is extracted if it exists, and
/// for even `g` both signs are tested.
pub fn weighted_projective_eq(a: &[Rat], b: &[Rat], weights: &[u32]) -> Result<bool, PassageError> {
    if a.len() != b.len() || a.len() != weights.len() {
        return Err(PassageError::LengthMismatch);
    }
    let a_zero = a.iter().all(Rat::is_zero);
    let b_zero = b.iter().all(Rat::is_zero);
    if a_zero && b_zero {
        return Err(PassageError::UndefinedPoint);
    }
    if a_zero != b_zero {
        return Ok(false);
    }
    let support: Vec<usize> = (0..a.len()).filter(|&k| !a[k].is_zero()).collect();
    for k in 0..a.len() {
        if a[k].is_zero() != b[k].is_zero() {
            return Ok(false);
        }
    }

    // lambda^(w_k) = b_k / a_k =: r_k on the support. Combine the ratios
    // into lambda^g via Bezout coefficients for g = gcd of the weights.
    let mut g: i64 = 0;
    let mut coeffs: Vec<(usize, i64)> = Vec::new(); // (index, bezout coefficient)
    for &k in &support {
        let w = weights[k] as i64;
        if g == 0 {
            g = w;
            coeffs.push((k, 1));
        } else {
            let e = g.extended_gcd(&w);
            // e.gcd = x * g + y * w
            for (_, c) in coeffs.iter_mut() {
                *c *= e.x;
            }
            coeffs.push((k, e.y));
            g = e.gcd;
        }
    }
    debug_assert!(g > 0);
    let mut lambda_g = Rat::one();
    for (k, c) in &coeffs {
        let ratio = &b[*k] / &a[*k];
        lambda_g *= rat_pow_i64(&ratio, *c);
    }

    let root = match rational_nth_root(&lambda_g, g as u32) {
        Some(t) => t,
        None => return Ok(false),
    };
    let mut candidates = vec![root.clone()];
    if g.is_multiple_of(&2) {
        candidates.push(-root);
    }
    'cand: for lambda in candidates {
        for &k in &support {
            if b[k] != rat_pow_i64(&lambda, weights[k] as i64) * &a[k] {
                continue 'cand;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// All weight-`w` monomials in the nine generators, in descending
/// lexicographic order of exponent vectors, omitting monomials divisible by
/// the leading monomials of the five classical relations among
/// `J8, J9, J10` (products of two of them other than `J9^2`). Those
/// relations make such monomials linearly dependent on the rest as
/// functions of the octic, so keeping them would leave interpolation
/// underdetermined; the first weight where the exclusion bites is 16.
pub fn weight_monomials(w: u32) -> Vec<ExpVec> {
    let mut out = Vec::new();
    let mut current = [0u8; 9];
    // Recursive descent from J2 (index 0) upward; lex-descending order
    // falls out of trying the largest exponent first.
    fn go(idx: usize, remaining: u32, current: &mut ExpVec, out: &mut Vec<ExpVec>) {
        if idx == 9 {
            if remaining == 0 {
                let e = *current;
                let excluded = (e[6] >= 2)
                    || (e[6] >= 1 && e[7] >= 1)
                    || (e[6] >= 1 && e[8] >= 1)
                    || (e[7] >= 1 && e[8] >= 1)
                    || (e[8] >= 2);
                if !excluded {
                    out.push(e);
                }
            }
            return;
        }
        let weight = idx as u32 + 2;
        let max = remaining / weight;
        for e in (0..=max).rev() {
            current[idx] = e as u8;
            go(idx + 1, remaining - e * weight, current, out);
        }
        current[idx] = 0;
    }
    go(0, w, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::shioda_invariants;
    use crate::roots::{i20_from_roots, tsuyumine_from_roots, SplitOctic};
    use crate::{rat, ratio};

    fn unit_shioda(k: u32) -> ShiodaVector {
        let values: [Rat; 9] =
            std::array::from_fn(|i| if i as u32 + 2 == k { rat(1) } else { rat(0) });
        ShiodaVector::new(values)
    }

    fn unit_tsuyumine(k: u32) -> TsuyumineVector {
        let values: [Rat; 9] =
            std::array::from_fn(|i| if i as u32 + 2 == k { rat(1) } else { rat(0) });
        TsuyumineVector::new(values)
    }

    #[test]
    fn tables_load_and_audit() {
        assert_eq!(tsuyumine_from_shioda_tables().len(), 9);
        assert_eq!(i20_from_shioda_table().terms().len(), 102);
        assert_eq!(reference_shioda_from_tsuyumine_tables().len(), 9);
    }

    #[test]
    fn monomial_counts_per_weight() {
        let counts: Vec<usize> = (2..=10).map(|w| weight_monomials(w).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 4, 4, 7, 8, 12]);
        assert_eq!(weight_monomials(20).len(), 102);
    }

    #[test]
    fn weight_20_monomials_match_shipped_support() {
        let enumerated = weight_monomials(20);
        let shipped: Vec<ExpVec> = i20_from_shioda_table()
            .terms()
            .iter()
            .map(|(e, _)| *e)
            .collect();
        assert_eq!(enumerated, shipped, "same 102 monomials in the same order");
    }

    #[test]
    fn forward_rows_on_unit_vectors() {
        // J = (1, 0, ..., 0): I2 = 2^9 3^2 5 7, I4 = -2^14 3 5^2 7.
        let i = tsuyumine_from_shioda(&unit_shioda(2));
        assert_eq!(i.i(2), &rat(161_280));
        assert_eq!(i.i(4), &rat(-8_601_600));
        // Homogeneous tables kill the zero vector.
        let zero = ShiodaVector::new(std::array::from_fn(|_| rat(0)));
        assert!(tsuyumine_from_shioda(&zero).is_zero());
        assert!(i20_from_shioda(&zero).is_zero());
    }

    #[test]
    fn inverse_rows_on_unit_vectors() {
        // I = (1, 0, ..., 0): J2 = 2^-9 3^-2 5^-1 7^-1.
        let j = shioda_from_tsuyumine(&unit_tsuyumine(2));
        assert_eq!(j.j(2), &Rat::new(Int::one(), Int::from(161_280)));
        for k in 3..=10 {
            assert!(j.j(k).is_zero() || k == 4 || k == 6 || k == 8 || k == 10);
        }
    }

    #[test]
    fn computed_inverse_j4_row_matches_reference() {
        let t = &shioda_from_tsuyumine_tables()[2];
        assert_eq!(
            t.coefficient(&[2, 0, 0, 0, 0, 0, 0, 0, 0]),
            Rat::new(
                Int::one(),
                Int::from(2).pow(19) * Int::from(3).pow(5) * Int::from(7).pow(4)
            )
        );
        assert_eq!(
            t.coefficient(&[0, 0, 1, 0, 0, 0, 0, 0, 0]),
            Rat::new(
                Int::one(),
                Int::from(2).pow(15) * Int::from(3).pow(2) * Int::from(7).pow(3)
            )
        );
    }

    #[test]
    fn roundtrip_is_identity() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..25 {
            let values: [Rat; 9] = std::array::from_fn(|_| {
                let n = (next() % 2001) as i64 - 1000;
                let d = (next() % 40) as i64 + 1;
                ratio(n, d)
            });
            let j = ShiodaVector::new(values);
            let back = shioda_from_tsuyumine(&tsuyumine_from_shioda(&j));
            assert_eq!(back, j);
        }
    }

    #[test]
    fn exactly_two_reference_discrepancies() {
        let diffs = inverse_table_discrepancies();
        assert_eq!(diffs.len(), 2, "got {diffs:#?}");
        // J8 row, I2^2 I4 monomial: the reference prints the 7-power with a
        // flipped sign.
        assert_eq!(diffs[0].row_weight, 8);
        assert_eq!(diffs[0].exponents, [2, 0, 1, 0, 0, 0, 0, 0, 0]);
        let expected_j8 = -Rat::new(
            Int::from(59),
            Int::from(2).pow(35) * Int::from(3).pow(5) * Int::from(5).pow(3) * Int::from(7).pow(8),
        );
        assert_eq!(diffs[0].computed, expected_j8);
        assert_eq!(
            diffs[0].reference,
            -Rat::new(
                Int::from(59) * Int::from(7).pow(8),
                Int::from(2).pow(35) * Int::from(3).pow(5) * Int::from(5).pow(3),
            )
        );
        // J9 row, I3 I6 monomial: the reference prints 2^-3 where the
        // inversion yields 2^-33 (a dropped digit).
        assert_eq!(diffs[1].row_weight, 9);
        assert_eq!(diffs[1].exponents, [0, 1, 0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(
            diffs[1].reference,
            -Rat::new(
                Int::one(),
                Int::from(2).pow(3) * Int::from(3).pow(4) * Int::from(7).pow(7)
            )
        );
        assert_eq!(
            diffs[1].computed,
            -Rat::new(
                Int::one(),
                Int::from(2).pow(33) * Int::from(3).pow(4) * Int::from(7).pow(7)
            )
        );
    }

    #[test]
    fn passage_agrees_with_root_sums() {
        let s = SplitOctic::from_integers([1, 2, 3, 4, 5, 6, 7, 8]);
        let j = shioda_invariants(&s.to_form()).unwrap();
        assert_eq!(tsuyumine_from_shioda(&j), tsuyumine_from_roots(&s));
        assert_eq!(i20_from_shioda(&j), i20_from_roots(&s));
    }

    #[test]
    fn absolute_invariants_formulas() {
        let s = SplitOctic::from_integers([1, 2, 3, 4, 5, 6, 7, 8]);
        let i = tsuyumine_from_roots(&s);
        let d = crate::roots::discriminant_from_roots(&s);
        let abs = absolute_invariants(&i, &d).unwrap();
        // First entry: I2^5 I3^6 / D^2.
        let first = i.i(2).clone().pow(5) * i.i(3).clone().pow(6) / (d.clone() * &d);
        assert_eq!(&abs.values()[0], &first);
        // Second entry: I2^6 I3^10 / D^3.
        let second = i.i(2).clone().pow(6) * i.i(3).clone().pow(10) / (d.clone() * &d * &d);
        assert_eq!(&abs.values()[1], &second);

        // Weight-0: scaling I_k by l^k and D by l^14 changes nothing.
        let l = ratio(3, 5);
        let scaled_i = TsuyumineVector::new(std::array::from_fn(|idx| {
            i.values()[idx].clone() * crate::passage::rat_pow_i64(&l, idx as i64 + 2)
        }));
        let scaled_d = d.clone() * rat_pow_i64(&l, 14);
        assert_eq!(absolute_invariants(&scaled_i, &scaled_d).unwrap(), abs);
    }

    #[test]
    fn absolute_invariants_errors() {
        let s = SplitOctic::from_integers([1, 2, 3, 4, 5, 6, 7, 8]);
        let i = tsuyumine_from_roots(&s);
        assert_eq!(
            absolute_invariants(&i, &rat(0)).unwrap_err(),
            PassageError::SingularOctic
        );
        let mut vals = i.values().clone();
        vals[1] = rat(0); // I3 = 0
        assert_eq!(
            absolute_invariants(&TsuyumineVector::new(vals), &rat(7)).unwrap_err(),
            PassageError::NormalizerVanishes
        );
    }

    #[test]
    fn weighted_eq_scaling() {
        let weights: Vec<u32> = (2..=10).collect();
        let a: Vec<Rat> = (0..9).map(|i| rat(i as i64 + 1)).collect();
        let l = ratio(3, 2);
        let b: Vec<Rat> = a
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat_pow_i64(&l, i as i64 + 2))
            .collect();
        assert!(weighted_projective_eq(&a, &b, &weights).unwrap());
        // Different vanishing patterns are never equivalent.
        let e1: Vec<Rat> = (0..9)
            .map(|i| if i == 0 { rat(1) } else { rat(0) })
            .collect();
        let e2: Vec<Rat> = (0..9)
            .map(|i| if i == 1 { rat(1) } else { rat(0) })
            .collect();
        assert!(!weighted_projective_eq(&e1, &e2, &weights).unwrap());
        // Both zero: undefined.
        let z: Vec<Rat> = (0..9).map(|_| rat(0)).collect();
        assert_eq!(
            weighted_projective_eq(&z, &z, &weights).unwrap_err(),
            PassageError::UndefinedPoint
        );
    }

    #[test]
    fn weighted_eq_needs_rational_root() {
        // (1, 0, ...) vs (2, 0, ...) with weight 2 requires lambda^2 = 2.
        let weights: Vec<u32> = (2..=10).collect();
        let mut a: Vec<Rat> = vec![rat(0); 9];
        a[0] = rat(1);
        let mut b = a.clone();
        b[0] = rat(2);
        assert!(!weighted_projective_eq(&a, &b, &weights).unwrap());
        // But lambda^2 = 9/4 works (lambda = -3/2 also tested internally).
        b[0] = ratio(9, 4);
        assert!(weighted_projective_eq(&a, &b, &weights).unwrap());
    }

    #[test]
    fn weighted_eq_negative_lambda_via_even_weights() {
        // Only even weights nonzero and ratios consistent with a negative
        // lambda: equivalence must still be found (sign ambiguity).
        let weights: Vec<u32> = (2..=10).collect();
        let mut a = vec![rat(0); 9];
        let mut b = vec![rat(0); 9];
        a[0] = rat(3); // J2
        a[2] = rat(5); // J4
        let l = ratio(-2, 1);
        b[0] = a[0].clone() * rat_pow_i64(&l, 2);
        b[2] = a[2].clone() * rat_pow_i64(&l, 4);
        assert!(weighted_projective_eq(&a, &b, &weights).unwrap());
    }

    #[test]
    fn absolute_invariants_are_isomorphism_invariants() {
        // A unimodular shift changes neither D nor any I_k, and a plain
        // scaling f -> c f moves every ingredient by matched weights, so
        // the weight-0 tuple is unchanged by both.
        let s = SplitOctic::from_integers([1, 2, 3, 4, 5, 6, 7, 9]);
        let shifted = SplitOctic::from_integers([4, 5, 6, 7, 8, 9, 10, 12]);
        let d = crate::roots::discriminant_from_roots(&s);
        let abs = absolute_invariants(&tsuyumine_from_roots(&s), &d).unwrap();
        let d_shift = crate::roots::discriminant_from_roots(&shifted);
        let abs_shift =
            absolute_invariants(&tsuyumine_from_roots(&shifted), &d_shift).unwrap();
        assert_eq!(abs, abs_shift);

        let scaled_form = s.to_form().scale(&ratio(5, 3));
        let j = crate::forms::shioda_invariants(&scaled_form).unwrap();
        let abs_scaled = absolute_invariants(
            &tsuyumine_from_shioda(&j),
            &crate::forms::discriminant(&scaled_form).unwrap(),
        )
        .unwrap();
        assert_eq!(abs, abs_scaled);
    }

    #[test]
    fn monomial_enumeration_matches_brute_force() {
        // Independent oracle: odometer over exponent bounds. Without the
        // relation exclusion there are 107 weight-20 monomials; the five
        // excluded ones are exactly the multiples of J8^2, J8 J9, J8 J10,
        // J9 J10, J10^2.
        let mut all: Vec<ExpVec> = Vec::new();
        let mut e = [0u8; 9];
        'odometer: loop {
            if weighted_degree(&e) == 20 {
                all.push(e);
            }
            for i in 0..9 {
                if (i as u32 + 2) * (e[i] as u32 + 1) <= 20 {
                    e[i] += 1;
                    continue 'odometer;
                }
                e[i] = 0;
            }
            break;
        }
        assert_eq!(all.len(), 107);
        let excluded: Vec<&ExpVec> = all
            .iter()
            .filter(|e| {
                (e[6] >= 2)
                    || (e[6] >= 1 && e[7] >= 1)
                    || (e[6] >= 1 && e[8] >= 1)
                    || (e[7] >= 1 && e[8] >= 1)
                    || (e[8] >= 2)
            })
            .collect();
        assert_eq!(excluded.len(), 5);
        let mut kept: Vec<ExpVec> = all
            .iter()
            .filter(|e| !excluded.contains(e))
            .copied()
            .collect();
        kept.sort_by_key(|t| std::cmp::Reverse(*t));
        assert_eq!(kept, weight_monomials(20));
    }

    #[test]
    fn weighted_eq_is_an_equivalence() {
        let weights: Vec<u32> = (2..=10).collect();
        let a: Vec<Rat> = (0..9).map(|i| ratio(2 * i as i64 - 5, 3)).collect();
        // Reflexive.
        assert!(weighted_projective_eq(&a, &a, &weights).unwrap());
        // Symmetric, on an equivalent pair and on an inequivalent one.
        let l = ratio(5, 2);
        let b: Vec<Rat> = a
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat_pow_i64(&l, i as i64 + 2))
            .collect();
        assert!(weighted_projective_eq(&a, &b, &weights).unwrap());
        assert!(weighted_projective_eq(&b, &a, &weights).unwrap());
        let mut c = a.clone();
        c[4] += rat(1);
        assert!(!weighted_projective_eq(&a, &c, &weights).unwrap());
        assert!(!weighted_projective_eq(&c, &a, &weights).unwrap());
        // Transitive: b ~ a with 5/2 and d ~ b with -2 compose.
        let m = rat(-2);
        let d: Vec<Rat> = b
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat_pow_i64(&m, i as i64 + 2))
            .collect();
        assert!(weighted_projective_eq(&b, &d, &weights).unwrap());
        assert!(weighted_projective_eq(&a, &d, &weights).unwrap());
    }

    #[test]
    fn shioda_of_shifted_octic_is_equivalent() {
        let s = SplitOctic::from_integers([1, 2, 3, 4, 5, 6, 7, 8]);
        let shifted = SplitOctic::from_integers([2, 3, 4, 5, 6, 7, 8, 9]);
        let j1 = shioda_invariants(&s.to_form()).unwrap();
        let j2 = shioda_invariants(&shifted.to_form()).unwrap();
        let weights: Vec<u32> = (2..=10).collect();
        assert!(weighted_projective_eq(j1.values(), j2.values(), &weights).unwrap());
    }
}
