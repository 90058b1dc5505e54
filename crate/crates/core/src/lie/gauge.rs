//! Gauge words and their replay on connections and Higgs fields.

use super::{exp_to, ConstMat, MatSeries};
use crate::error::{Error, Result};
use crate::series::{as_i64, rat, tadd, LaurentSeries, EXACT};

/// One elementary gauge transformation.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    /// `exp(X)`.
    Exp(MatSeries),
    /// An invertible constant matrix.
    Const(ConstMat),
    /// `z^Ξ` for an integer diagonal `Ξ`.
    Cochar(Vec<i64>),
    /// `ζ^{nH}` for an integer diagonal `H`.
    Shear { n: i64, h: ConstMat },
    /// Pass to the cover `z = ζ^b`. Only allowed as the first factor.
    Ramify(i64),
}

/// Ordered list of factors. `[f1, f2, …]` applies `f1` first, so the group
/// element it represents is `… f2 · f1`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GaugeWord {
    pub factors: Vec<Factor>,
}

impl GaugeWord {
    pub fn identity() -> Self {
        GaugeWord { factors: Vec::new() }
    }

    pub fn single(f: Factor) -> Self {
        GaugeWord { factors: vec![f] }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, f: Factor) {
        self.factors.push(f);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &GaugeWord) -> GaugeWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GaugeWord { factors }
    }

    pub fn extend(&mut self, other: GaugeWord) {
        self.factors.extend(other.factors);
    }

    /// Reversed word of inverted factors.
    pub fn inverse(&self) -> Result<GaugeWord> {
        let factors = self
            .factors
            .iter()
            .rev()
            .map(|f| match f {
                Factor::Exp(x) => Ok(Factor::Exp(-x)),
                Factor::Const(c) => Ok(Factor::Const(c.inverse()?)),
                Factor::Cochar(xi) => Ok(Factor::Cochar(xi.iter().map(|x| -x).collect())),
                Factor::Shear { n, h } => Ok(Factor::Shear { n: -n, h: h.clone() }),
                Factor::Ramify(_) => Err(Error::InvalidWord("a ramification has no inverse".into())),
            })
            .collect::<Result<_>>()?;
        Ok(GaugeWord { factors })
    }

    /// The same transformation seen on the cover `ζ^k`.
    pub fn pullback(&self, k: i64) -> Result<GaugeWord> {
        if k == 1 {
            return Ok(self.clone());
        }
        let factors = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Exp(x) => Ok(Factor::Exp(x.ramify_entries(k))),
                Factor::Const(c) => Ok(Factor::Const(c.clone())),
                Factor::Cochar(xi) => Ok(Factor::Cochar(xi.iter().map(|x| x * k).collect())),
                Factor::Shear { n, h } => Ok(Factor::Shear { n: n * k, h: h.clone() }),
                Factor::Ramify(_) => Err(Error::InvalidWord("cannot pull back a ramification".into())),
            })
            .collect::<Result<_>>()?;
        Ok(GaugeWord { factors })
    }

    /// Total cover degree requested by the word.
    pub fn ramification(&self) -> i64 {
        self.factors
            .iter()
            .map(|f| if let Factor::Ramify(b) = f { *b } else { 1 })
            .product()
    }

    /// The group element `… f2 · f1`, exponentials cut at `prec`.
    pub fn to_matrix(&self, n: usize, prec: i64) -> Result<MatSeries> {
        let mut g = MatSeries::identity(n);
        for f in &self.factors {
            let m = match f {
                Factor::Exp(x) => exp_to(x, prec)?,
                Factor::Const(c) => MatSeries::constant(c),
                Factor::Cochar(xi) => cochar_matrix(xi),
                Factor::Shear { n: s, h } => cochar_matrix(&shear_exponents(*s, h)?),
                Factor::Ramify(_) => return Err(Error::InvalidWord("ramification has no matrix".into())),
            };
            g = &m * &g;
        }
        Ok(g)
    }
}

pub fn cochar_matrix(xi: &[i64]) -> MatSeries {
    let n = xi.len();
    let mut m = MatSeries::zero(n);
    for (a, &x) in xi.iter().enumerate() {
        m.set(a, a, LaurentSeries::monomial(x, rat(1)));
    }
    m
}

fn shear_exponents(n: i64, h: &ConstMat) -> Result<Vec<i64>> {
    if !h.is_diagonal() {
        return Err(Error::InvalidWord("shear needs a diagonal H".into()));
    }
    h.diagonal()
        .iter()
        .map(|x| as_i64(x).map(|v| v * n).ok_or_else(|| Error::InvalidWord("shear needs an integral H".into())))
        .collect()
}

fn apply_cochar(xi: &[i64], a: &MatSeries, higgs: bool) -> Result<MatSeries> {
    let n = a.n();
    if xi.len() != n {
        return Err(Error::DimensionMismatch(format!("cocharacter of length {} on gl_{n}", xi.len())));
    }
    let mut out = a.clone();
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(i, j).shift(xi[i] - xi[j]));
        }
    }
    if !higgs {
        for (i, &x) in xi.iter().enumerate() {
            if x != 0 {
                let d = out.get(i, i) + &LaurentSeries::monomial(-1, rat(x));
                out.set(i, i, d);
            }
        }
    }
    Ok(out)
}

fn apply_factor(f: &Factor, a: &MatSeries, higgs: bool) -> Result<MatSeries> {
    let n = a.n();
    match f {
        Factor::Ramify(b) => {
            if *b < 1 {
                return Err(Error::InvalidWord(format!("ramification index {b}")));
            }
            // pull back the 1-form: A(ζ^b)·b ζ^{b-1}
            Ok(a.ramify_entries(*b).shift(b - 1).scale(&rat(*b)))
        }
        Factor::Const(c) => {
            if c.n() != n {
                return Err(Error::DimensionMismatch(format!("constant factor of size {} on gl_{n}", c.n())));
            }
            let cinv = c.inverse()?;
            Ok(a.conj_const(c, &cinv))
        }
        Factor::Cochar(xi) => apply_cochar(xi, a, higgs),
        Factor::Shear { n: s, h } => {
            if h.n() != n {
                return Err(Error::DimensionMismatch(format!("shear of size {} on gl_{n}", h.n())));
            }
            apply_cochar(&shear_exponents(*s, h)?, a, higgs)
        }
        Factor::Exp(x) => {
            if x.n() != n {
                return Err(Error::DimensionMismatch(format!("exponential of size {} on gl_{n}", x.n())));
            }
            let x = x.clone().with_ctx(a.ctx);
            let t = a.trunc();
            let prec = if t == EXACT { EXACT } else { tadd(t, (-a.val()).max(0) + 1) };
            let g = exp_to(&x, prec)?;
            let ginv = exp_to(&-&x, prec)?;
            let mut out = &(&g * a) * &ginv;
            if !higgs {
                out = &out + &(&g.deriv() * &ginv);
            }
            Ok(out)
        }
    }
}

/// Replays `w` on the dz-coefficient `a`. In Higgs mode the derivative terms are dropped.
pub fn gauge_mode(w: &GaugeWord, a: &MatSeries, higgs: bool) -> Result<MatSeries> {
    let mut cur = a.clone();
    for (i, f) in w.factors.iter().enumerate() {
        if i > 0 && matches!(f, Factor::Ramify(_)) {
            return Err(Error::InvalidWord("ramification must come first".into()));
        }
        cur = apply_factor(f, &cur, higgs)?;
    }
    Ok(cur)
}

/// Replays `w` on a connection's dz-coefficient.
pub fn gauge(w: &GaugeWord, a: &MatSeries) -> Result<MatSeries> {
    gauge_mode(w, a, false)
}
