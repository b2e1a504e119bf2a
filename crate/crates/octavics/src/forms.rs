//! Homogeneous binary forms over the rationals, transvectants, the nine
//! Shioda invariants of binary octics, and the degree-14 discriminant.
//!
//! A form of degree `n` is stored as its `n + 1` coefficients, index `i`
//! holding the coefficient of `x^i z^(n-i)`. Trailing zeros are kept: the
//! degree is part of the type's meaning (the zero octic is still an octic),
//! which is what makes transvectant degree bookkeeping and homogenization of
//! degree-7 inputs work without special cases.

use crate::linalg::bareiss_determinant;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from binary-form operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("transvectant order exceeds degree: r = {order} on degrees {deg_f} and {deg_g}")]
    TransvectantOrder {
        order: usize,
        deg_f: usize,
        deg_g: usize,
    },
    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
}

/// Homogeneous binary form with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    /// Form from coefficients, index `i` = coefficient of `x^i z^(n-i)`.
    /// The degree is `coeffs.len() - 1`; the list must be non-empty.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    /// The zero form of the given degree.
    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    /// `x^degree`.
    pub fn x_power(degree: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[degree] = Rat::one();
        f
    }

    /// `z^degree`.
    pub fn z_power(degree: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[0] = Rat::one();
        f
    }

    /// Octic from a univariate polynomial of degree at most 8 (coefficient
    /// `i` of `x^i`), homogenized with `z`: degree-7 inputs pick up the
    /// projective root `(1 : 0)`.
    pub fn octic_from_univariate(coeffs: &[Rat]) -> Result<Self, FormError> {
        if coeffs.len() > 9 {
            return Err(FormError::WrongDegree {
                expected: 8,
                got: coeffs.len() - 1,
            });
        }
        let mut c = coeffs.to_vec();
        c.resize(9, Rat::zero());
        Ok(BinaryForm { coeffs: c })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Exact evaluation at `(x, z)`.
    pub fn eval(&self, x: &Rat, z: &Rat) -> Rat {
        let n = self.degree();
        let mut acc = Rat::zero();
        let mut xp = Rat::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &xp * z_pow(z, n - i);
            }
            if i < n {
                xp *= x;
            }
        }
        acc
    }

    /// Partial derivative in `x` (degree drops by one).
    pub fn derivative_x(&self) -> BinaryForm {
        let n = self.degree();
        if n == 0 {
            return BinaryForm::zero(0);
        }
        let coeffs = (1..=n)
            .map(|i| &self.coeffs[i] * Rat::from_integer(Int::from(i)))
            .collect();
        BinaryForm { coeffs }
    }

    /// Partial derivative in `z` (degree drops by one).
    pub fn derivative_z(&self) -> BinaryForm {
        let n = self.degree();
        if n == 0 {
            return BinaryForm::zero(0);
        }
        let coeffs = (0..n)
            .map(|i| &self.coeffs[i] * Rat::from_integer(Int::from(n - i)))
            .collect();
        BinaryForm { coeffs }
    }

    /// Iterated mixed partial `d^(a+b) f / dx^a dz^b`.
    fn mixed_derivative(&self, a: usize, b: usize) -> BinaryForm {
        let mut f = self.clone();
        for _ in 0..a {
            f = f.derivative_x();
        }
        for _ in 0..b {
            f = f.derivative_z();
        }
        f
    }

    /// Product of two forms (degrees add).
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let n = self.degree() + other.degree();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        BinaryForm { coeffs }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        BinaryForm { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitution by an invertible 2x2 matrix `M = [[a, b], [c, d]]`,
    /// acting as `f(x, z) -> f(a x + b z, c x + d z)`.
    pub fn substitute(&self, m: &[[Rat; 2]; 2]) -> BinaryForm {
        let n = self.degree();
        // x -> a x + b z and z -> c x + d z as degree-1 forms.
        let lx = BinaryForm::new(vec![m[0][1].clone(), m[0][0].clone()]);
        let lz = BinaryForm::new(vec![m[1][1].clone(), m[1][0].clone()]);
        // Powers of lx and lz up to n.
        let mut result = BinaryForm::zero(n);
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mut term = BinaryForm::new(vec![coeff.clone()]);
            for _ in 0..i {
                term = term.mul(&lx);
            }
            for _ in 0..(n - i) {
                term = term.mul(&lz);
            }
            result = result.add(&term);
        }
        result
    }

    /// Shear `f(x, z) -> f(x, z + c x)`: a determinant-1 substitution that
    /// moves the projective root `(1 : 0)` when `f(1, c) != 0`.
    pub fn shear_z(&self, c: &Rat) -> BinaryForm {
        let one = Rat::one();
        self.substitute(&[[one.clone(), Rat::zero()], [c.clone(), one]])
    }
}

fn z_pow(z: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= z;
    }
    acc
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*x^{i}")?;
            }
            if n - i > 0 {
                write!(f, "*z^{}", n - i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Binomial coefficient as a rational.
fn binom(n: usize, k: usize) -> Rat {
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    Rat::new(num, den)
}

fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// The r-th transvectant of two forms,
///
/// ```text
/// (f, g)^r = (m-r)! (n-r)! / (m! n!) *
///            sum_{i=0}^{r} (-1)^i C(r, i)
///                * d^r f / dx^(r-i) dz^i
///                * d^r g / dx^i dz^(r-i)
/// ```
///
/// where `m = deg f`, `n = deg g`. The result has degree `m + n - 2r`.
/// This factorial normalization is the one under which the passage tables
/// in [`crate::passage`] hold with the constants as shipped.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, r: usize) -> Result<BinaryForm, FormError> {
    let (m, n) = (f.degree(), g.degree());
    if r > m.min(n) {
        return Err(FormError::TransvectantOrder {
            order: r,
            deg_f: m,
            deg_g: n,
        });
    }
    let mut acc = BinaryForm::zero(m + n - 2 * r);
    for i in 0..=r {
        let df = f.mixed_derivative(r - i, i);
        let dg = g.mixed_derivative(i, r - i);
        let mut term = df.mul(&dg);
        let mut c = binom(r, i);
        if i % 2 == 1 {
            c = -c;
        }
        term = term.scale(&c);
        acc = acc.add(&term);
    }
    let scale = Rat::new(
        factorial(m - r) * factorial(n - r),
        factorial(m) * factorial(n),
    );
    Ok(acc.scale(&scale))
}

/// Full transvectant of two forms of equal degree: a degree-0 form read off
/// as a scalar. This is the pairing behind the covariant products in
/// [`shioda_invariants`].
fn full_pairing(f: &BinaryForm, g: &BinaryForm) -> Result<Rat, FormError> {
    debug_assert_eq!(f.degree(), g.degree());
    let t = transvectant(f, g, f.degree())?;
    Ok(t.coeffs[0].clone())
}

/// The nine Shioda invariants of a binary octic, with weights 2..10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiodaVector {
    values: [Rat; 9],
}

impl ShiodaVector {
    pub const WEIGHTS: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];

    pub fn new(values: [Rat; 9]) -> Self {
        ShiodaVector { values }
    }

    /// `J_k` for `k` in `2..=10`.
    pub fn j(&self, k: u32) -> &Rat {
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

/// Shioda invariants `J2..J10` of a degree-8 form, by the transvectant
/// chain
///
/// ```text
/// g = (f,f)^4   k = (f,f)^6   m = (f,k)^4   h = (k,k)^2
/// n = (f,h)^4   p = (g,k)^4   q = (g,h)^4
///
/// J2 = (f,f)^8   J3 = (f,g)^8   J4 = (k,k)^4   J5 = (m,k)^4
/// J6 = (k,h)^4   J7 = (m,h)^4   J8 = (p,h)^4   J9 = (n,h)^4
/// J10 = (q,h)^4
/// ```
///
/// The degree-0 products `J5, J7, J8, J9, J10` are full transvectants of
/// equal-degree covariant pairs, which is the only reading that yields
/// scalars.
pub fn shioda_invariants(f: &BinaryForm) -> Result<ShiodaVector, FormError> {
    if f.degree() != 8 {
        return Err(FormError::WrongDegree {
            expected: 8,
            got: f.degree(),
        });
    }
    let g = transvectant(f, f, 4)?;
    let k = transvectant(f, f, 6)?;
    let m = transvectant(f, &k, 4)?;
    let h = transvectant(&k, &k, 2)?;
    let n = transvectant(f, &h, 4)?;
    let p = transvectant(&g, &k, 4)?;
    let q = transvectant(&g, &h, 4)?;

    let j2 = full_pairing(f, f)?;
    let j3 = full_pairing(f, &g)?;
    let j4 = full_pairing(&k, &k)?;
    let j5 = full_pairing(&m, &k)?;
    let j6 = full_pairing(&k, &h)?;
    let j7 = full_pairing(&m, &h)?;
    let j8 = full_pairing(&p, &h)?;
    let j9 = full_pairing(&n, &h)?;
    let j10 = full_pairing(&q, &h)?;

    Ok(ShiodaVector::new([j2, j3, j4, j5, j6, j7, j8, j9, j10]))
}

/// Resultant of two univariate polynomials given by ascending coefficient
/// slices (`p[i]` the coefficient of `x^i`), as the Sylvester determinant.
/// The slices define the formal degrees; leading zeros are the caller's
/// responsibility.
fn resultant(p: &[Rat], q: &[Rat]) -> Rat {
    let n = p.len() - 1;
    let m = q.len() - 1;
    if n == 0 && m == 0 {
        return Rat::one();
    }
    // Clear denominators: Res(s*p, t*q) = s^m t^n Res(p, q).
    let (pi, ps) = integerize(p);
    let (qi, qs) = integerize(q);
    let size = n + m;
    let mut mat = vec![vec![Int::zero(); size]; size];
    // m rows of p's coefficients (descending), then n rows of q's.
    for row in 0..m {
        for k in 0..=n {
            mat[row][row + k] = pi[n - k].clone();
        }
    }
    for row in 0..n {
        for k in 0..=m {
            mat[m + row][row + k] = qi[m - k].clone();
        }
    }
    let det = bareiss_determinant(mat);
    // det = (s^m t^n) * Res(p, q)
    Rat::from_integer(det) / (pow_rat(&ps, m) * pow_rat(&qs, n))
}

fn integerize(p: &[Rat]) -> (Vec<Int>, Rat) {
    let mut lcm = Int::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    (ints, Rat::from_integer(lcm))
}

fn pow_rat(r: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// Discriminant of a binary octic: the degree-14 invariant that vanishes
/// exactly when the form has a repeated projective root.
///
/// For a form of exact degree 8 in `x` this is `Res(f, df/dx) / a8`. When
/// the leading coefficient vanishes (a root at infinity), a deterministic
/// shear `z -> z + c x` with `c = 0, 1, 2, ...` first moves every root to a
/// finite position; shears have determinant 1, so the invariant is
/// unchanged.
pub fn discriminant(f: &BinaryForm) -> Result<Rat, FormError> {
    if f.degree() != 8 {
        return Err(FormError::WrongDegree {
            expected: 8,
            got: f.degree(),
        });
    }
    if f.is_zero() {
        return Ok(Rat::zero());
    }
    // Find the first shear that makes the x^8 coefficient nonzero. f has at
    // most 8 roots, so some c in 0..=8 works.
    let mut sheared = f.clone();
    if f.coeff(8).is_zero() {
        let mut found = false;
        for c in 0..=8u32 {
            let cand = f.shear_z(&Rat::from_integer(Int::from(c)));
            if !cand.coeff(8).is_zero() {
                sheared = cand;
                found = true;
                break;
            }
        }
        debug_assert!(found, "a nonzero octic has a shear with a8 != 0");
    }
    let p: Vec<Rat> = sheared.coeffs.clone(); // degree 8 in x, a8 != 0
    let dp: Vec<Rat> = (1..=8)
        .map(|i| &p[i] * Rat::from_integer(Int::from(i)))
        .collect(); // degree 7
    let res = resultant(&p, &dp);
    Ok(res / &p[8])
}
