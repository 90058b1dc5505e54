use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{fmt_rat, rat, Rat};
use crate::error::{Error, Result};

/// Truncation sentinel for series known exactly.
pub const EXACT: i64 = i64::MAX;

/// Adds two truncation-like exponents. `EXACT` absorbs; anything else is checked.
pub fn tadd(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a.checked_add(b).expect("exponent overflow")
    }
}

pub fn tmul(a: i64, b: i64) -> i64 {
    if a == EXACT {
        EXACT
    } else {
        a.checked_mul(b).expect("exponent overflow")
    }
}

/// Formal Laurent series in one variable, exact below `trunc`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, Rat>,
    trunc: i64,
}

impl LaurentSeries {
    pub fn new(coeffs: impl IntoIterator<Item = (i64, Rat)>, trunc: i64) -> Self {
        let mut map: BTreeMap<i64, Rat> = BTreeMap::new();
        for (k, c) in coeffs {
            if k < trunc {
                *map.entry(k).or_insert_with(Rat::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs: map, trunc }
    }

    pub fn zero() -> Self {
        LaurentSeries { coeffs: BTreeMap::new(), trunc: EXACT }
    }

    /// Zero known only below `trunc`.
    pub fn zero_to(trunc: i64) -> Self {
        LaurentSeries { coeffs: BTreeMap::new(), trunc }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(k: i64, c: Rat) -> Self {
        Self::new([(k, c)], EXACT)
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc == EXACT
    }

    /// No nonzero coefficient below the truncation.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the series; for a series with no known nonzero term this is `trunc`.
    pub fn val(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.trunc)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Forget everything at or above `n` (never raises the truncation).
    pub fn truncate(&self, n: i64) -> Self {
        let t = n.min(self.trunc);
        LaurentSeries {
            coeffs: self.coeffs.range(..t).map(|(k, c)| (*k, c.clone())).collect(),
            trunc: t,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (e.checked_add(k).expect("exponent overflow"), c.clone())).collect(),
            trunc: tadd(self.trunc, k),
        }
    }

    pub fn deriv(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, c)| (k - 1, c * rat(*k)));
        Self::new(coeffs, tadd(self.trunc, -1))
    }

    /// Substitutes `z = ζ^b`.
    pub fn ramify(&self, b: i64) -> Self {
        assert!(b >= 1, "ramification index must be positive");
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (tmul(*k, b), c.clone())).collect(),
            trunc: tmul(self.trunc, b),
        }
    }

    /// Inverse of [`ramify`](Self::ramify) on series supported on multiples of `b`.
    pub fn unramify(&self, b: i64) -> Option<Self> {
        if self.coeffs.keys().any(|k| k.rem_euclid(b) != 0) {
            return None;
        }
        let trunc = if self.trunc == EXACT { EXACT } else { self.trunc.div_euclid(b) + i64::from(self.trunc.rem_euclid(b) != 0) };
        Some(LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (k / b, c.clone())).collect(),
            trunc,
        })
    }

    pub fn inv(&self) -> Result<Self> {
        let Some((&v, c0)) = self.coeffs.iter().next() else {
            return Err(Error::ZeroInverse);
        };
        let c0inv = c0.recip();
        if self.coeffs.len() == 1 {
            // monomial: exact up to what is known
            return Ok(LaurentSeries {
                coeffs: BTreeMap::from([(-v, c0inv)]),
                trunc: tadd(self.trunc, -2 * v),
            });
        }
        if self.is_exact() {
            return Err(Error::InfiniteExpansion);
        }
        // a = c0 z^v (1 + u); solve term by term for b = sum b_j z^{j - v}
        let n = self.trunc - v; // relative precision
        let a: Vec<Rat> = (0..n).map(|j| self.coeff(v + j)).collect();
        let mut b: Vec<Rat> = Vec::with_capacity(n as usize);
        for j in 0..n as usize {
            let mut s = if j == 0 { Rat::one() } else { Rat::zero() };
            for i in 1..=j {
                if !a[i].is_zero() {
                    s -= &a[i] * &b[j - i];
                }
            }
            b.push(s * &c0inv);
        }
        Ok(Self::new(b.into_iter().enumerate().map(|(j, c)| (j as i64 - v, c)), self.trunc - 2 * v))
    }

    /// Equal on every exponent below `n`.
    pub fn agrees_below(&self, other: &Self, n: i64) -> bool {
        self.coeffs.range(..n).eq(other.coeffs.range(..n))
    }
}

impl Default for LaurentSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, o: &LaurentSeries) -> LaurentSeries {
        let trunc = self.trunc.min(o.trunc);
        let mut coeffs: BTreeMap<i64, Rat> = self.coeffs.range(..trunc).map(|(k, c)| (*k, c.clone())).collect();
        for (k, c) in o.coeffs.range(..trunc) {
            let e = coeffs.entry(*k).or_insert_with(Rat::zero);
            *e += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs, trunc }
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, o: &LaurentSeries) -> LaurentSeries {
        self + &(-o)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
            trunc: self.trunc,
        }
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, o: &LaurentSeries) -> LaurentSeries {
        if (self.is_zero() && self.is_exact()) || (o.is_zero() && o.is_exact()) {
            return LaurentSeries::zero();
        }
        let trunc = tadd(self.trunc, o.val()).min(tadd(o.trunc, self.val()));
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                let k = i.checked_add(*j).expect("exponent overflow");
                if k >= trunc {
                    break;
                }
                *coeffs.entry(k).or_insert_with(Rat::zero) += a * b;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs, trunc }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, o: LaurentSeries) -> LaurentSeries {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "{}", fmt_rat(c))?,
                1 => write!(f, "{}*z", fmt_rat(c))?,
                _ => write!(f, "{}*z^{}", fmt_rat(c), k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.trunc != EXACT {
            write!(f, " + O(z^{})", self.trunc)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
