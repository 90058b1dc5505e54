use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{as_i64, floor_i64, rat, ratio, Rat};

/// A rational point of the standard apartment of gl_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub theta: Vec<Rat>,
}

impl Weight {
    pub fn new(theta: Vec<Rat>) -> Self {
        assert!(!theta.is_empty());
        Weight { theta }
    }

    pub fn zero(n: usize) -> Self {
        Weight { theta: vec![Rat::zero(); n] }
    }

    pub fn from_i64(theta: &[i64]) -> Self {
        Weight::new(theta.iter().map(|&t| rat(t)).collect())
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    /// `λ(a,b) = θ_a − θ_b`, the ad-eigenvalue on `E_ab`.
    pub fn grading(&self, a: usize, b: usize) -> Rat {
        &self.theta[a] - &self.theta[b]
    }

    /// All pairwise differences are integers.
    pub fn is_integer(&self) -> bool {
        self.theta.iter().all(|t| (t - &self.theta[0]).is_integer())
    }

    /// All coordinates equal: the gl_n form of a weight fixed by the Weyl group.
    pub fn is_scalar(&self) -> bool {
        self.theta.iter().all(|t| *t == self.theta[0])
    }

    /// Integer cocharacter moving this weight to the origin, normalised so the last entry is 0.
    pub fn integral_shift(&self) -> Result<Vec<i64>> {
        let last = &self.theta[self.n() - 1];
        self.theta.iter().map(|t| as_i64(&(t - last)).ok_or(Error::NotIntegerWeight)).collect()
    }

    /// Largest grading value (at least 0, from the diagonal).
    pub fn max_grade(&self) -> Rat {
        let n = self.n();
        let mut m = Rat::zero();
        for a in 0..n {
            for b in 0..n {
                let g = self.grading(a, b);
                if g > m {
                    m = g;
                }
            }
        }
        m
    }

    pub fn floor_max_grade(&self) -> i64 {
        floor_i64(&self.max_grade())
    }

    /// Lowest common denominator of all grading values.
    pub fn denominator(&self) -> i64 {
        let n = self.n();
        let mut d = 1i64;
        for a in 0..n {
            for b in 0..n {
                d = crate::series::lcm_i64(d, crate::series::denom_i64(&self.grading(a, b)));
            }
        }
        d
    }

    /// Indices sharing a grade-0 block with `a`.
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.theta[a] == self.theta[b]
    }
}

/// Alcove-interior weight `θ_a = (n − a)/c_scale` (1-based `a`).
pub fn iwahori_weight(n: usize, c_scale: i64) -> Result<Weight> {
    if c_scale < 1 || (n as i64 - 1) >= c_scale {
        return Err(Error::ScaleTooSmall(c_scale));
    }
    Ok(Weight::new((1..=n).map(|a| ratio(n as i64 - a as i64, c_scale)).collect()))
}
