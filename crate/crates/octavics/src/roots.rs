//! Invariants of a binary octic computed from its eight projective roots:
//! the Tsuyumine generators `I2..I10`, the degree-20 invariant `I20`, the
//! discriminant as a product of pairwise differences, and p-adic cluster
//! signatures.
//!
//! The `S8`-symmetrized expressions here are sums over all 40320
//! permutations of monomials in the brackets `(ij) = alpha_i beta_j -
//! alpha_j beta_i`. The engine normalizes each root to a primitive integer
//! representative, precomputes the full signed 8x8 bracket table once, and
//! evaluates every permutation term by table lookup, with the permutation
//! blocks reduced in parallel (exact integer addition commutes, so the
//! result is independent of scheduling).

use crate::arith::{is_prime, Valuation};
use crate::forms::BinaryForm;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::sync::OnceLock;
use thiserror::Error;

/// Errors from root-side operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("projective root (0 : 0) is not a point")]
    ZeroPoint,
    #[error("finite roots required")]
    FiniteRootsRequired,
    #[error("not a prime: {0}")]
    NotAPrime(String),
    #[error("residue characteristic 2 not supported")]
    ResidueCharTwo,
}

/// A point `(alpha : beta)` of the projective line over Q; `(1 : 0)` is the
/// point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    alpha: Rat,
    beta: Rat,
}

impl ProjectivePoint {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self, RootsError> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(RootsError::ZeroPoint);
        }
        Ok(ProjectivePoint { alpha, beta })
    }

    /// The affine point `(a : 1)`.
    pub fn finite(a: Rat) -> Self {
        ProjectivePoint {
            alpha: a,
            beta: Rat::one(),
        }
    }

    /// The point at infinity `(1 : 0)`.
    pub fn infinity() -> Self {
        ProjectivePoint {
            alpha: Rat::one(),
            beta: Rat::zero(),
        }
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn is_finite(&self) -> bool {
        !self.beta.is_zero()
    }

    /// `alpha / beta` for a finite point.
    pub fn affine(&self) -> Option<Rat> {
        if self.is_finite() {
            Some(&self.alpha / &self.beta)
        } else {
            None
        }
    }

    /// Primitive integer representative `(a, b)` with `gcd(a, b) = 1`,
    /// `b > 0` (or `a > 0` when `b = 0`), and the rational `lambda` with
    /// `(alpha, beta) = lambda * (a, b)`.
    fn primitive(&self) -> (Int, Int, Rat) {
        let da = self.alpha.denom();
        let db = self.beta.denom();
        let l = da.lcm(db);
        let na = self.alpha.numer() * (&l / da);
        let nb = self.beta.numer() * (&l / db);
        let mut g = na.gcd(&nb);
        debug_assert!(!g.is_zero());
        let negative = if nb.is_zero() {
            na.is_negative()
        } else {
            nb.is_negative()
        };
        if negative {
            g = -g;
        }
        let a = &na / &g;
        let b = &nb / &g;
        // lambda = g / l
        (a, b, Rat::new(g, l))
    }
}

/// Eight projective roots of a binary octic. Repeated roots are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOctic {
    roots: Vec<ProjectivePoint>,
}

impl SplitOctic {
    pub fn new(roots: Vec<ProjectivePoint>) -> Self {
        assert_eq!(roots.len(), 8, "a split octic has exactly eight roots");
        SplitOctic { roots }
    }

    /// Eight finite roots.
    pub fn from_affine(roots: [Rat; 8]) -> Self {
        SplitOctic {
            roots: roots.into_iter().map(ProjectivePoint::finite).collect(),
        }
    }

    pub fn from_integers(roots: [i64; 8]) -> Self {
        SplitOctic::from_affine(roots.map(crate::rat))
    }

    /// Seven finite roots plus the point at infinity.
    pub fn with_root_at_infinity(finite: [Rat; 7]) -> Self {
        let mut roots: Vec<ProjectivePoint> =
            finite.into_iter().map(ProjectivePoint::finite).collect();
        roots.push(ProjectivePoint::infinity());
        SplitOctic { roots }
    }

    pub fn roots(&self) -> &[ProjectivePoint] {
        &self.roots
    }

    /// The associated octic `prod_i (beta_i x - alpha_i z)`.
    pub fn to_form(&self) -> BinaryForm {
        let mut f = BinaryForm::new(vec![Rat::one()]);
        for r in &self.roots {
            let lin = BinaryForm::new(vec![-r.alpha.clone(), r.beta.clone()]);
            f = f.mul(&lin);
        }
        f
    }

    /// Integer bracket table and the common scale: entry `(i, j)` holds
    /// `a_i b_j - a_j b_i` of the primitive representatives, and invariants
    /// of degree `k` computed on the table must be multiplied by `scale^k`.
    fn bracket_table(&self) -> BracketTable {
        let prim: Vec<(Int, Int, Rat)> = self.roots.iter().map(|r| r.primitive()).collect();
        let mut scale = Rat::one();
        for (_, _, l) in &prim {
            scale *= l;
        }
        let mut d: Vec<Vec<Int>> = vec![vec![Int::zero(); 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                if i != j {
                    d[i][j] = &prim[i].0 * &prim[j].1 - &prim[j].0 * &prim[i].1;
                }
            }
        }
        BracketTable { d, scale }
    }
}

/// Full signed pairwise-difference table of the primitive representatives.
struct BracketTable {
    d: Vec<Vec<Int>>,
    scale: Rat,
}

/// The nine Tsuyumine invariants of a binary octic, weights 2..10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsuyumineVector {
    values: [Rat; 9],
}

impl TsuyumineVector {
    pub const WEIGHTS: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];

    pub fn new(values: [Rat; 9]) -> Self {
        TsuyumineVector { values }
    }

    /// `I_k` for `k` in `2..=10`.
    pub fn i(&self, k: u32) -> &Rat {
        assert!((2..=10).contains(&k));
        &self.values[(k - 2) as usize]
    }

    pub fn values(&self) -> &[Rat; 9] {
        &self.values
    }

    pub fn into_values(self) -> [Rat; 9] {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }
}

/// A bracket power `(ij)^e` inside an `S8` monomial, 0-based indices.
pub type BracketPower = (usize, usize, u32);

/// `(12,34)(56,78)`
#[rustfmt::skip]
const I2_MONOMIAL: &[BracketPower] = &[
    (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1),
    (4, 6, 1), (4, 7, 1), (5, 6, 1), (5, 7, 1),
];

/// `(12)^2 (34)^2 (56)^2 (78)^2 (13)(24)(57)(68)`
#[rustfmt::skip]
const I3_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (2, 3, 2), (4, 5, 2), (6, 7, 2),
    (0, 2, 1), (1, 3, 1), (4, 6, 1), (5, 7, 1),
];

/// `(12)^4 (345)^2 (678)^2`
#[rustfmt::skip]
const I4_MONOMIAL: &[BracketPower] = &[
    (0, 1, 4),
    (2, 3, 2), (2, 4, 2), (3, 4, 2),
    (5, 6, 2), (5, 7, 2), (6, 7, 2),
];

/// `(12)^4 (345)^2 (678)^2 (15)(26)(37)(48)`
#[rustfmt::skip]
const I5_MONOMIAL: &[BracketPower] = &[
    (0, 1, 4),
    (2, 3, 2), (2, 4, 2), (3, 4, 2),
    (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 4, 1), (1, 5, 1), (2, 6, 1), (3, 7, 1),
];

/// `(1234)^2 (5678)^2`
#[rustfmt::skip]
const I6_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2),
    (4, 5, 2), (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
];

/// `(1234)^2 (5678)^2 (15)(26)(37)(48)`
#[rustfmt::skip]
const I7_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2),
    (4, 5, 2), (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 4, 1), (1, 5, 1), (2, 6, 1), (3, 7, 1),
];

/// `(1234)^2 (5678)^2 (12,56)(34,78)`
#[rustfmt::skip]
const I8_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2),
    (4, 5, 2), (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 4, 1), (0, 5, 1), (1, 4, 1), (1, 5, 1),
    (2, 6, 1), (2, 7, 1), (3, 6, 1), (3, 7, 1),
];

/// `(1234)^2 (5678)^2 (1,567)(2,678)(3,578)(4,568)`
#[rustfmt::skip]
const I9_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2),
    (4, 5, 2), (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 4, 1), (0, 5, 1), (0, 6, 1),
    (1, 5, 1), (1, 6, 1), (1, 7, 1),
    (2, 4, 1), (2, 6, 1), (2, 7, 1),
    (3, 4, 1), (3, 5, 1), (3, 7, 1),
];

/// `(1234)^2 (5678)^2 (15)^2 (26)^2 (37)^2 (48)^2 (14,67)(23,58)`
#[rustfmt::skip]
const I10_MONOMIAL: &[BracketPower] = &[
    (0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2),
    (4, 5, 2), (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 4, 2), (1, 5, 2), (2, 6, 2), (3, 7, 2),
    (0, 5, 1), (0, 6, 1), (3, 5, 1), (3, 6, 1),
    (1, 4, 1), (1, 7, 1), (2, 4, 1), (2, 7, 1),
];

/// `(45678)^2 (123,45678)^4`
#[rustfmt::skip]
const I20_MONOMIAL: &[BracketPower] = &[
    (3, 4, 2), (3, 5, 2), (3, 6, 2), (3, 7, 2), (4, 5, 2),
    (4, 6, 2), (4, 7, 2), (5, 6, 2), (5, 7, 2), (6, 7, 2),
    (0, 3, 4), (0, 4, 4), (0, 5, 4), (0, 6, 4), (0, 7, 4),
    (1, 3, 4), (1, 4, 4), (1, 5, 4), (1, 6, 4), (1, 7, 4),
    (2, 3, 4), (2, 4, 4), (2, 5, 4), (2, 6, 4), (2, 7, 4),
];

const TSUYUMINE_MONOMIALS: [&[BracketPower]; 9] = [
    I2_MONOMIAL,
    I3_MONOMIAL,
    I4_MONOMIAL,
    I5_MONOMIAL,
    I6_MONOMIAL,
    I7_MONOMIAL,
    I8_MONOMIAL,
    I9_MONOMIAL,
    I10_MONOMIAL,
];

/// Per-root total exponent of a monomial; the weight of the resulting
/// invariant when the totals are uniform.
fn index_totals(monomial: &[BracketPower]) -> [u32; 8] {
    let mut t = [0u32; 8];
    for &(i, j, e) in monomial {
        t[i] += e;
        t[j] += e;
    }
    t
}

fn all_permutations() -> &'static Vec<[u8; 8]> {
    static PERMS: OnceLock<Vec<[u8; 8]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(40320);
        let mut a: [u8; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
        // Heap's algorithm, iterative form.
        let mut c = [0usize; 8];
        out.push(a);
        let mut i = 0;
        while i < 8 {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(a);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        debug_assert_eq!(out.len(), 40320);
        out
    })
}

/// One permutation term: product of the monomial's bracket powers with the
/// indices permuted, grouped by exponent so squares and fourth powers cost
/// one and two extra squarings instead of repeated multiplication.
fn term_value(table: &BracketTable, perm: &[u8; 8], monomial: &[BracketPower]) -> Int {
    let mut p1 = Int::one();
    let mut p2 = Int::one();
    let mut p4 = Int::one();
    for &(i, j, e) in monomial {
        let b = &table.d[perm[i] as usize][perm[j] as usize];
        if b.is_zero() {
            return Int::zero();
        }
        match e {
            1 => p1 *= b,
            2 => p2 *= b,
            4 => p4 *= b,
            _ => {
                let mut q = Int::one();
                for _ in 0..e {
                    q *= b;
                }
                p1 *= q;
            }
        }
    }
    p4 = &p4 * &p4;
    let sq = &p2 * &p4;
    p1 * &sq * sq
}

/// Sums the monomials over all of `S8` on the integer bracket table.
fn s8_sums(table: &BracketTable, monomials: &[&[BracketPower]]) -> Vec<Int> {
    let perms = all_permutations();
    perms
        .par_chunks(1260)
        .map(|chunk| {
            let mut acc = vec![Int::zero(); monomials.len()];
            for perm in chunk {
                for (slot, monomial) in monomials.iter().enumerate() {
                    let t = term_value(table, perm, monomial);
                    if !t.is_zero() {
                        acc[slot] += t;
                    }
                }
            }
            acc
        })
        .reduce(
            || vec![Int::zero(); monomials.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn rat_pow(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// Full `S8` sum of an arbitrary bracket-power monomial.
///
/// The per-root exponent totals must be uniform (the condition for the sum
/// to be an invariant, of that common degree); this keeps the value
/// independent of the choice of projective representatives.
pub fn s8_bracket_power_sum(s: &SplitOctic, monomial: &[BracketPower]) -> Rat {
    let totals = index_totals(monomial);
    let e = totals[0];
    assert!(
        totals.iter().all(|&t| t == e),
        "bracket monomial must have uniform index totals, got {totals:?}"
    );
    let table = s.bracket_table();
    let sums = s8_sums(&table, &[monomial]);
    Rat::from_integer(sums[0].clone()) * rat_pow(&table.scale, e)
}

/// The nine Tsuyumine invariants as full 40320-term `S8` sums:
///
/// ```text
/// I2  = sum (12,34)(56,78)
/// I3  = sum (12)^2(34)^2(56)^2(78)^2(13)(24)(57)(68)
/// I4  = sum (12)^4(345)^2(678)^2
/// I5  = sum (12)^4(345)^2(678)^2(15)(26)(37)(48)
/// I6  = sum (1234)^2(5678)^2
/// I7  = sum (1234)^2(5678)^2(15)(26)(37)(48)
/// I8  = sum (1234)^2(5678)^2(12,56)(34,78)
/// I9  = sum (1234)^2(5678)^2(1,567)(2,678)(3,578)(4,568)
/// I10 = sum (1234)^2(5678)^2(15)^2(26)^2(37)^2(48)^2(14,67)(23,58)
/// ```
pub fn tsuyumine_from_roots(s: &SplitOctic) -> TsuyumineVector {
    let table = s.bracket_table();
    let sums = s8_sums(&table, &TSUYUMINE_MONOMIALS);
    let mut values: Vec<Rat> = Vec::with_capacity(9);
    for (idx, sum) in sums.into_iter().enumerate() {
        let weight = TsuyumineVector::WEIGHTS[idx];
        values.push(Rat::from_integer(sum) * rat_pow(&table.scale, weight));
    }
    TsuyumineVector::new(values.try_into().expect("nine values"))
}

/// The degree-20 invariant `I20 = sum_{S8} (45678)^2 (123,45678)^4`,
/// the root-side oracle for its weight-20 expansion in Shioda invariants.
pub fn i20_from_roots(s: &SplitOctic) -> Rat {
    let table = s.bracket_table();
    let sums = s8_sums(&table, &[I20_MONOMIAL]);
    Rat::from_integer(sums[0].clone()) * rat_pow(&table.scale, 20)
}

/// Discriminant as the plain product `prod_{i<j} (ij)^2` (no `S8` sum).
pub fn discriminant_from_roots(s: &SplitOctic) -> Rat {
    let table = s.bracket_table();
    let mut acc = Int::one();
    for i in 0..8 {
        for j in i + 1..8 {
            let d = &table.d[i][j];
            acc *= d * d;
        }
    }
    Rat::from_integer(acc) * rat_pow(&table.scale, 14)
}

/// Multiset of p-adic valuations of pairwise differences of the (finite)
/// roots of a chosen model. Purely diagnostic: no Moebius normalization is
/// applied, the caller picks the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSignature {
    prime: Int,
    entries: Vec<((usize, usize), Valuation)>,
}

impl ClusterSignature {
    pub fn prime(&self) -> &Int {
        &self.prime
    }

    /// Valuations indexed by the root pair `(i, j)`, `i < j`, 0-based.
    pub fn entries(&self) -> &[((usize, usize), Valuation)] {
        &self.entries
    }

    /// The 28 valuations as a sorted multiset.
    pub fn multiset(&self) -> Vec<Valuation> {
        let mut v: Vec<Valuation> = self.entries.iter().map(|(_, val)| *val).collect();
        v.sort();
        v
    }

    /// Pairs with strictly positive valuation: the visible clusters.
    pub fn positive_pairs(&self) -> Vec<((usize, usize), Valuation)> {
        self.entries
            .iter()
            .filter(|(_, v)| *v > Valuation::Finite(0))
            .cloned()
            .collect()
    }
}

/// The valuation multiset `{v_p(a_i - a_j)}` over root pairs. Requires all
/// eight roots finite and rational and `p` an odd prime.
pub fn cluster_signature(s: &SplitOctic, p: &Int) -> Result<ClusterSignature, RootsError> {
    if !is_prime(p) {
        return Err(RootsError::NotAPrime(p.to_string()));
    }
    if *p == Int::from(2) {
        return Err(RootsError::ResidueCharTwo);
    }
    let affine: Vec<Rat> = s
        .roots
        .iter()
        .map(|r| r.affine().ok_or(RootsError::FiniteRootsRequired))
        .collect::<Result<_, _>>()?;
    let mut entries = Vec::with_capacity(28);
    for i in 0..8 {
        for j in i + 1..8 {
            let diff = &affine[i] - &affine[j];
            let v = crate::arith::padic_valuation(&diff, p).expect("primality already checked");
            entries.push(((i, j), v));
        }
    }
    Ok(ClusterSignature {
        prime: p.clone(),
        entries,
    })
}
