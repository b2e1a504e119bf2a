//! Fraction-free exact linear algebra over the integers (Bareiss
//! elimination), used for resultants and for the interpolation solver.
//!
//! Bareiss keeps every intermediate entry an exact k-by-k minor of the input
//! matrix, so entries grow like determinants instead of exploding the way
//! naive fraction arithmetic does. All divisions below are exact.

use crate::{Int, Rat};
use num_traits::{One, Zero};

/// Determinant of a square integer matrix. Consumes the matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i8;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves `A x = b` exactly for square integer `A`.
///
/// Returns `None` when `A` is singular. Elimination is fraction-free on the
/// augmented matrix; the back-substitution produces exact rationals.
pub fn bareiss_solve(a: Vec<Vec<Int>>, b: Vec<Int>) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    debug_assert!(a.iter().all(|row| row.len() == n));
    if n == 0 {
        return Some(Vec::new());
    }

    let mut m: Vec<Vec<Int>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            // Scaling a whole equation is harmless here, and smaller input
            // entries keep every later minor smaller. Inside the
            // elimination this would break the exact-division invariant, so
            // it only happens up front.
            reduce_row_content(&mut row);
            row
        })
        .collect();

    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero())?;
            m.swap(k, pivot);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = t / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rat::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rat::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rat::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Divides a row by the gcd of its entries (retaining signs).
fn reduce_row_content(row: &mut [Int]) {
    use num_integer::Integer;
    let mut g = Int::zero();
    for e in row.iter() {
        g = g.gcd(e);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        *e = &*e / &g;
    }
}

/// Clears denominators of a rational row, returning the integer row.
/// The scaling is per-row, so it leaves the solution set of a linear system
/// unchanged.
pub fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    use num_integer::Integer;
    let mut lcm = Int::one();
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(bareiss_determinant(m(&[&[2]])), Int::from(2));
        assert_eq!(bareiss_determinant(m(&[&[1, 2], &[3, 4]])), Int::from(-2));
        assert_eq!(
            bareiss_determinant(m(&[&[0, 1], &[1, 0]])),
            Int::from(-1),
            "pivoting must track the row-swap sign"
        );
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            Int::from(0)
        );
    }

    #[test]
    fn determinant_vandermonde() {
        // det V(x_i) = prod_{i<j} (x_j - x_i)
        let xs = [2i64, 3, 5, 7, 11];
        let n = xs.len();
        let mat: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| Int::from(xs[i].pow(j as u32))).collect())
            .collect();
        let mut expected = Int::one();
        for i in 0..n {
            for j in i + 1..n {
                expected *= Int::from(xs[j] - xs[i]);
            }
        }
        assert_eq!(bareiss_determinant(mat), expected);
    }

    #[test]
    fn solve_exact() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![Int::from(5), Int::from(10)];
        let x = bareiss_solve(a, b).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
    }

    #[test]
    fn solve_requires_pivoting() {
        let a = m(&[&[0, 2], &[3, 0]]);
        let b = vec![Int::from(4), Int::from(9)];
        let x = bareiss_solve(a, b).unwrap();
        assert_eq!(x, vec![rat(3), rat(2)]);
    }

    #[test]
    fn singular_is_detected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(bareiss_solve(a, vec![Int::from(1), Int::from(2)]).is_none());
    }

    #[test]
    fn fractional_solution() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let b = vec![Int::from(1), Int::from(1)];
        let x = bareiss_solve(a, b).unwrap();
        assert_eq!(x, vec![crate::ratio(1, 2), crate::ratio(1, 3)]);
    }

    #[test]
    fn clear_denominators_scales_row() {
        let row = vec![crate::ratio(1, 2), crate::ratio(2, 3), rat(1)];
        assert_eq!(
            clear_denominators(&row),
            vec![Int::from(3), Int::from(4), Int::from(6)]
        );
    }
}
