use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::ConstMat;
use crate::error::{Error, Result};
use crate::series::{LaurentSeries, RamifiedContext, Rat, EXACT};

/// Square matrix of Laurent series. Each entry keeps its own truncation; the
/// value as a whole is exact below [`trunc`](Self::trunc).
#[derive(Clone, PartialEq, Eq)]
pub struct MatSeries {
    n: usize,
    entries: Vec<LaurentSeries>,
    pub ctx: RamifiedContext,
}

impl MatSeries {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        MatSeries { n, entries: vec![LaurentSeries::zero(); n * n], ctx: RamifiedContext::base() }
    }

    pub fn zero_to(n: usize, trunc: i64) -> Self {
        MatSeries { n, entries: vec![LaurentSeries::zero_to(trunc); n * n], ctx: RamifiedContext::base() }
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(&ConstMat::identity(n))
    }

    pub fn constant(x: &ConstMat) -> Self {
        Self::monomial(x, 0)
    }

    /// `X z^k`, exact.
    pub fn monomial(x: &ConstMat, k: i64) -> Self {
        let n = x.n();
        let entries = x
            .as_slice()
            .iter()
            .map(|c| if c.is_zero() { LaurentSeries::zero() } else { LaurentSeries::monomial(k, c.clone()) })
            .collect();
        MatSeries { n, entries, ctx: RamifiedContext::base() }
    }

    pub fn from_entries(n: usize, entries: Vec<LaurentSeries>) -> Self {
        assert_eq!(entries.len(), n * n);
        MatSeries { n, entries, ctx: RamifiedContext::base() }
    }

    /// Builds `Σ c E_ab z^k` from `(a, b, k, c)` terms, truncated at `trunc`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (usize, usize, i64, Rat)>, trunc: i64) -> Self {
        let mut buckets: Vec<Vec<(i64, Rat)>> = vec![Vec::new(); n * n];
        for (a, b, k, c) in terms {
            buckets[a * n + b].push((k, c));
        }
        let entries = buckets.into_iter().map(|t| LaurentSeries::new(t, trunc)).collect();
        MatSeries { n, entries, ctx: RamifiedContext::base() }
    }

    pub fn with_ctx(mut self, ctx: RamifiedContext) -> Self {
        self.ctx = ctx;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> &LaurentSeries {
        &self.entries[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, s: LaurentSeries) {
        self.entries[a * self.n + b] = s;
    }

    pub fn entries(&self) -> &[LaurentSeries] {
        &self.entries
    }

    /// Common truncation: the minimum over entries.
    pub fn trunc(&self) -> i64 {
        self.entries.iter().map(LaurentSeries::trunc).min().unwrap_or(EXACT)
    }

    /// Smallest exponent carrying a nonzero coefficient, or the truncation if none.
    pub fn val(&self) -> i64 {
        self.entries.iter().map(LaurentSeries::val).min().unwrap_or(EXACT)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentSeries::is_zero)
    }

    pub fn is_exact(&self) -> bool {
        self.trunc() == EXACT
    }

    /// All nonzero monomials as `(a, b, k, c)`, in row-major then exponent order.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, usize, i64, &Rat)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .flat_map(move |(idx, s)| s.terms().map(move |(k, c)| (idx / n, idx % n, k, c)))
    }

    /// Coefficient matrix of `z^k`.
    pub fn coeff(&self, k: i64) -> ConstMat {
        ConstMat::from_vec(self.n, self.entries.iter().map(|s| s.coeff(k)).collect())
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        let mut ks: Vec<i64> = self.monomials().map(|(_, _, k, _)| k).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    pub fn map(&self, f: impl Fn(&LaurentSeries) -> LaurentSeries) -> Self {
        MatSeries { n: self.n, entries: self.entries.iter().map(f).collect(), ctx: self.ctx }
    }

    pub fn truncate(&self, t: i64) -> Self {
        self.map(|s| s.truncate(t))
    }

    /// Truncates entry `(a,b)` at `f(a,b)`.
    pub fn truncate_by(&self, f: impl Fn(usize, usize) -> i64) -> Self {
        let n = self.n;
        let entries = self.entries.iter().enumerate().map(|(i, s)| s.truncate(f(i / n, i % n))).collect();
        MatSeries { n, entries, ctx: self.ctx }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|s| s.scale(c))
    }

    pub fn shift(&self, k: i64) -> Self {
        self.map(|s| s.shift(k))
    }

    pub fn deriv(&self) -> Self {
        self.map(LaurentSeries::deriv)
    }

    /// Pulls the matrix entries back along `z = ζ^b` (no differential factor).
    pub fn ramify_entries(&self, b: i64) -> Self {
        let mut m = self.map(|s| s.ramify(b));
        m.ctx = self.ctx.compose(b);
        m
    }

    pub fn check_same(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, o.n)));
        }
        if self.ctx != o.ctx {
            return Err(Error::DimensionMismatch(format!("cover degree {} vs {}", self.ctx.b, o.ctx.b)));
        }
        Ok(())
    }

    pub fn try_bracket(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(&(self * o) - &(o * self))
    }

    pub fn bracket(&self, o: &Self) -> Self {
        self.try_bracket(o).expect("bracket of incompatible matrices")
    }

    /// Every entry agrees with `o` below `t`.
    pub fn agrees_below(&self, o: &Self, t: i64) -> bool {
        self.n == o.n && self.entries.iter().zip(&o.entries).all(|(x, y)| x.agrees_below(y, t))
    }

    /// Conjugation by a constant matrix.
    pub fn conj_const(&self, g: &ConstMat, ginv: &ConstMat) -> Self {
        let l = &MatSeries::constant(g).with_ctx(self.ctx) * self;
        &l * &MatSeries::constant(ginv).with_ctx(self.ctx)
    }

    /// Inverse over the Laurent series field, by Gauss-Jordan with series pivots.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a: Vec<Vec<LaurentSeries>> = (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut inv: Vec<Vec<LaurentSeries>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { LaurentSeries::one() } else { LaurentSeries::zero() }).collect())
            .collect();
        for col in 0..n {
            // pivot of least valuation keeps precision loss small
            let p = (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| a[r][col].val())
                .ok_or(Error::NotInvertible)?;
            a.swap(col, p);
            inv.swap(col, p);
            let pinv = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &pinv;
                inv[col][j] = &inv[col][j] * &pinv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = &f * &a[col][j];
                        a[r][j] = &a[r][j] - &t;
                        let t = &f * &inv[col][j];
                        inv[r][j] = &inv[r][j] - &t;
                    }
                }
            }
        }
        Ok(MatSeries { n, entries: inv.into_iter().flatten().collect(), ctx: self.ctx })
    }
}

impl Add for &MatSeries {
    type Output = MatSeries;
    fn add(self, o: &MatSeries) -> MatSeries {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect();
        MatSeries { n: self.n, entries, ctx: self.ctx }
    }
}

impl Sub for &MatSeries {
    type Output = MatSeries;
    fn sub(self, o: &MatSeries) -> MatSeries {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect();
        MatSeries { n: self.n, entries, ctx: self.ctx }
    }
}

impl Neg for &MatSeries {
    type Output = MatSeries;
    fn neg(self) -> MatSeries {
        self.map(|s| -s)
    }
}

impl Mul for &MatSeries {
    type Output = MatSeries;
    fn mul(self, o: &MatSeries) -> MatSeries {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut acc = LaurentSeries::zero();
                for k in 0..n {
                    let x = &self.entries[a * n + k];
                    let y = &o.entries[k * n + b];
                    if (x.is_zero() && x.is_exact()) || (y.is_zero() && y.is_exact()) {
                        continue;
                    }
                    acc = &acc + &(x * y);
                }
                entries.push(acc);
            }
        }
        MatSeries { n, entries, ctx: self.ctx }
    }
}

impl fmt::Display for MatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for a in 0..self.n {
            if a > 0 {
                write!(f, "; ")?;
            }
            for b in 0..self.n {
                if b > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(a, b))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
