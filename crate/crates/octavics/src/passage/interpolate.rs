//! Rederivation of the passage tables from scratch.
//!
//! For a target invariant of weight `w`, the harness samples split octics
//! with distinct small integer roots, computes the target exactly from the
//! roots (full `S8` sums) and the candidate monomials exactly from the
//! coefficients (transvectants), and solves the resulting square linear
//! system with fraction-free elimination. The solution is unique whenever
//! the sample system is nonsingular, so a successful run is an independent
//! end-to-end check of a shipped table.

use super::{weight_monomials, PassageError, WeightedMonomialTable};
use crate::forms::shioda_invariants;
use crate::linalg::{bareiss_solve, clear_denominators};
use crate::roots::{i20_from_roots, tsuyumine_from_roots, SplitOctic};
use crate::{Int, Rat};
use rayon::prelude::*;

/// Which table to rederive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PassageTarget {
    /// A Tsuyumine generator `I_k`, `k` in `2..=10`.
    I(u32),
    /// The degree-20 invariant.
    I20,
}

impl PassageTarget {
    pub fn weight(self) -> u32 {
        match self {
            PassageTarget::I(k) => {
                assert!((2..=10).contains(&k), "I_k targets have k in 2..=10");
                k
            }
            PassageTarget::I20 => 20,
        }
    }

    /// The shipped table this target is checked against.
    pub fn shipped_table(self) -> &'static WeightedMonomialTable {
        match self {
            PassageTarget::I(k) => &super::tsuyumine_from_shioda_tables()[(k - 2) as usize],
            PassageTarget::I20 => super::i20_from_shioda_table(),
        }
    }
}

impl std::fmt::Display for PassageTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PassageTarget::I(k) => write!(f, "I{k}"),
            PassageTarget::I20 => write!(f, "I20"),
        }
    }
}

/// SplitMix64: tiny, stable, seedable; good enough for drawing sample
/// roots, and keeps identical seeds producing identical octics everywhere.
#[derive(Debug, Clone)]
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        let limit = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < limit {
                return v % n;
            }
        }
    }
}

/// Seeded generator of split octics with distinct integer roots drawn
/// without replacement from `-25..=25`.
#[derive(Debug, Clone)]
pub struct OcticSampler {
    rng: SplitMix64,
}

impl OcticSampler {
    pub fn new(seed: u64) -> Self {
        OcticSampler {
            rng: SplitMix64(seed),
        }
    }

    fn draw_distinct(&mut self, count: usize) -> Vec<i64> {
        let mut picked: Vec<i64> = Vec::with_capacity(count);
        while picked.len() < count {
            let v = self.rng.below(51) as i64 - 25;
            if !picked.contains(&v) {
                picked.push(v);
            }
        }
        picked
    }

    /// Eight distinct finite roots.
    pub fn sample(&mut self) -> SplitOctic {
        let roots = self.draw_distinct(8);
        SplitOctic::from_integers(roots.try_into().expect("eight roots"))
    }

    /// Seven distinct finite roots plus the point at infinity.
    pub fn sample_with_infinity(&mut self) -> SplitOctic {
        let roots = self.draw_distinct(7);
        SplitOctic::with_root_at_infinity(
            roots
                .into_iter()
                .map(crate::rat)
                .collect::<Vec<_>>()
                .try_into()
                .expect("seven roots"),
        )
    }
}

/// Fresh sample batches drawn before giving up on a singular system.
pub const REDERIVE_RETRIES: usize = 5;

/// Rederives the coefficients of `target` in weight-`w` Shioda monomials by
/// exact interpolation on sampled split octics.
///
/// The result is the unique solution of the sampled linear system and must
/// equal the shipped table bit for bit; a successful rederivation is the
/// independent oracle for the shipped data. Singular sample systems are
/// retried with fresh batches, then reported as
/// [`PassageError::InterpolationDegenerate`].
pub fn rederive_passage_coefficients(
    target: PassageTarget,
    sampler: &mut OcticSampler,
) -> Result<WeightedMonomialTable, PassageError> {
    rederive_passage_coefficients_with_samples(target, sampler, None)
}

/// [`rederive_passage_coefficients`] with an explicit batch size: `samples`
/// octics are drawn per attempt (at least the number of weight-`w`
/// monomials) and square windows of consecutive rows are tried until one is
/// nonsingular.
pub fn rederive_passage_coefficients_with_samples(
    target: PassageTarget,
    sampler: &mut OcticSampler,
    samples: Option<usize>,
) -> Result<WeightedMonomialTable, PassageError> {
    let weight = target.weight();
    let monomials = weight_monomials(weight);
    let n = monomials.len();
    let batch = samples.unwrap_or(n);
    if batch < n {
        return Err(PassageError::InterpolationDegenerate);
    }

    for _ in 0..REDERIVE_RETRIES {
        let drawn: Vec<SplitOctic> = (0..batch).map(|_| sampler.sample()).collect();
        let rows: Vec<(Vec<Int>, Int)> = drawn
            .par_iter()
            .map(|s| {
                let j = shioda_invariants(&s.to_form()).expect("sampled octics have degree 8");
                let mut full: Vec<Rat> = monomials
                    .iter()
                    .map(|exps| {
                        let mut term = Rat::from_integer(1.into());
                        for (i, &e) in exps.iter().enumerate() {
                            for _ in 0..e {
                                term *= &j.values()[i];
                            }
                        }
                        term
                    })
                    .collect();
                full.push(match target {
                    PassageTarget::I(k) => tsuyumine_from_roots(s).i(k).clone(),
                    PassageTarget::I20 => i20_from_roots(s),
                });
                let ints = clear_denominators(&full);
                let rhs = ints[n].clone();
                (ints[..n].to_vec(), rhs)
            })
            .collect();

        for window in rows.windows(n) {
            let matrix: Vec<Vec<Int>> = window.iter().map(|(r, _)| r.clone()).collect();
            let rhs: Vec<Int> = window.iter().map(|(_, b)| b.clone()).collect();
            if let Some(solution) = bareiss_solve(matrix, rhs) {
                let terms: Vec<(super::ExpVec, Rat)> =
                    monomials.iter().copied().zip(solution).collect();
                return Ok(WeightedMonomialTable::new(weight, terms));
            }
        }
    }
    Err(PassageError::InterpolationDegenerate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let mut a = OcticSampler::new(7);
        let mut b = OcticSampler::new(7);
        for _ in 0..5 {
            let sa = a.sample();
            let sb = b.sample();
            assert_eq!(sa, sb);
            let mut seen = Vec::new();
            for r in sa.roots() {
                let v = r.affine().unwrap();
                assert!(v >= rat(-25) && v <= rat(25));
                assert!(!seen.contains(&v), "roots drawn without replacement");
                seen.push(v);
            }
        }
        assert_ne!(OcticSampler::new(1).sample(), OcticSampler::new(2).sample());
    }

    #[test]
    fn rederive_i2_single_coefficient() {
        let mut sampler = OcticSampler::new(1);
        let table = rederive_passage_coefficients(PassageTarget::I(2), &mut sampler).unwrap();
        assert_eq!(table.terms().len(), 1);
        assert_eq!(
            table.coefficient(&[1, 0, 0, 0, 0, 0, 0, 0, 0]),
            rat(161_280)
        );
        assert_eq!(&table, PassageTarget::I(2).shipped_table());
    }

    #[test]
    fn too_few_samples_is_degenerate() {
        let mut sampler = OcticSampler::new(3);
        assert_eq!(
            rederive_passage_coefficients_with_samples(PassageTarget::I20, &mut sampler, Some(10),)
                .unwrap_err(),
            PassageError::InterpolationDegenerate
        );
    }

    #[test]
    fn oversampling_still_solves() {
        let mut sampler = OcticSampler::new(4);
        let table =
            rederive_passage_coefficients_with_samples(PassageTarget::I(6), &mut sampler, Some(7))
                .unwrap();
        assert_eq!(&table, PassageTarget::I(6).shipped_table());
    }

    #[test]
    fn rederive_i4_is_the_classical_solution() {
        // The I4 interpolation is a 2x2 system (classically solved on the
        // octics with roots {1..7, 8} and {1..7, 9}); its solution
        // (-8601600, 101154816) is what any nonsingular sample set yields.
        let mut sampler = OcticSampler::new(42);
        let table = rederive_passage_coefficients(PassageTarget::I(4), &mut sampler).unwrap();
        assert_eq!(
            table.coefficient(&[2, 0, 0, 0, 0, 0, 0, 0, 0]),
            rat(-8_601_600)
        );
        assert_eq!(
            table.coefficient(&[0, 0, 1, 0, 0, 0, 0, 0, 0]),
            rat(101_154_816)
        );
        assert_eq!(&table, PassageTarget::I(4).shipped_table());
    }
}
