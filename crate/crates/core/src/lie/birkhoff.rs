//! Factorisation `g = g₁ · z^Ξ · g₂` with `g₁, g₂` in the parahoric group.

use super::{log_unipotent, ConstMat, Factor, GaugeWord, MatSeries};
use crate::error::{Error, Result};
use crate::series::{as_i64, LaurentSeries, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct Birkhoff {
    pub g1: GaugeWord,
    pub xi: Vec<i64>,
    pub g2: GaugeWord,
}

impl Birkhoff {
    /// Word replaying `g` itself: apply `g₂`, then `z^Ξ`, then `g₁`.
    pub fn as_word(&self) -> GaugeWord {
        let mut w = self.g2.clone();
        w.push(Factor::Cochar(self.xi.clone()));
        w.extend(self.g1.clone());
        w
    }
}

fn conj_cochar(m: &MatSeries, xi: &[i64]) -> MatSeries {
    let mut out = m.clone();
    for a in 0..m.n() {
        for b in 0..m.n() {
            out.set(a, b, m.get(a, b).shift(xi[a] - xi[b]));
        }
    }
    out
}

fn diagonal_monomial(m: &MatSeries) -> Option<Vec<i64>> {
    let n = m.n();
    let mut xi = Vec::with_capacity(n);
    for a in 0..n {
        for b in 0..n {
            let e = m.get(a, b);
            if a != b && !e.is_zero() {
                return None;
            }
        }
        let d = m.get(a, a);
        if d.len() != 1 || d.coeff(d.val()) != Rat::from_integer(1.into()) {
            return None;
        }
        xi.push(d.val());
    }
    Some(xi)
}

/// Word for an element `u` of `GL_n(O)`: `u = u(0) · exp(log(u(0)⁻¹ u))`.
fn integral_word(u: &MatSeries) -> Result<GaugeWord> {
    let n = u.n();
    let u0 = u.coeff(0);
    let u0inv = u0.inverse().map_err(|_| Error::NotInvertible)?;
    let rest = &MatSeries::constant(&u0inv) * u;
    let mut w = GaugeWord::identity();
    let l = log_unipotent(&rest)?;
    if !l.is_zero() {
        w.push(Factor::Exp(l));
    }
    if u0 != ConstMat::identity(n) {
        w.push(Factor::Const(u0));
    }
    Ok(w)
}

/// Smith-style elimination over the power series ring. Returns `(u, v_exps, w)`
/// with `h = u · z^v · w` and `u, w ∈ GL_n(O)`.
fn smith(h: &MatSeries) -> Result<(MatSeries, Vec<i64>, MatSeries)> {
    let n = h.n();
    let mut a: Vec<Vec<LaurentSeries>> = (0..n).map(|i| (0..n).map(|j| h.get(i, j).clone()).collect()).collect();
    let mut l: Vec<Vec<LaurentSeries>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentSeries::one() } else { LaurentSeries::zero() }).collect())
        .collect();
    let mut r = l.clone();
    let mut exps = Vec::with_capacity(n);
    for k in 0..n {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if !a[i][j].is_zero() {
                    let v = a[i][j].val();
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let (v, pi, pj) = best.ok_or(Error::NotInvertible)?;
        a.swap(k, pi);
        l.swap(k, pi);
        for row in a.iter_mut().chain(r.iter_mut()) {
            row.swap(k, pj);
        }
        let pinv = a[k][k].inv()?;
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = &a[i][k] * &pinv;
                for j in 0..n {
                    let t = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                    let t = &f * &l[k][j];
                    l[i][j] = &l[i][j] - &t;
                }
            }
        }
        for j in 0..n {
            if j != k && !a[k][j].is_zero() {
                let f = &a[k][j] * &pinv;
                for i in 0..n {
                    let t = &a[i][k] * &f;
                    a[i][j] = &a[i][j] - &t;
                    let t = &r[i][k] * &f;
                    r[i][j] = &r[i][j] - &t;
                }
            }
        }
        // make the pivot exactly z^v
        let unit_inv = pinv.shift(v);
        for j in 0..n {
            a[k][j] = &a[k][j] * &unit_inv;
            l[k][j] = &l[k][j] * &unit_inv;
        }
        exps.push(v);
    }
    // L h R = z^v, so h = L⁻¹ z^v R⁻¹
    let lm = MatSeries::from_entries(n, l.into_iter().flatten().collect());
    let rm = MatSeries::from_entries(n, r.into_iter().flatten().collect());
    Ok((lm.inverse()?, exps, rm.inverse()?))
}

/// Factors `g = g₁ · z^Ξ · g₂` with `g₁, g₂` replaying into the parahoric
/// group of the integral weight `theta`.
pub fn birkhoff_factor(g: &MatSeries, theta: &[Rat]) -> Result<Birkhoff> {
    let n = g.n();
    if theta.len() != n {
        return Err(Error::DimensionMismatch(format!("weight of length {} on gl_{n}", theta.len())));
    }
    let shift: Vec<i64> = theta
        .iter()
        .map(|t| as_i64(&(t - &theta[n - 1])).ok_or(Error::NotIntegerWeight))
        .collect::<Result<_>>()?;
    // conjugating by z^shift moves the parahoric group to GL_n(O)
    let h = conj_cochar(g, &shift);
    if let Some(xi) = diagonal_monomial(&h) {
        return Ok(Birkhoff { g1: GaugeWord::identity(), xi, g2: GaugeWord::identity() });
    }
    let (u, exps, w) = if h.val() >= 0 && h.coeff(0).is_invertible() {
        (h.clone(), vec![0; n], MatSeries::identity(n))
    } else {
        smith(&h)?
    };
    let neg: Vec<i64> = shift.iter().map(|x| -x).collect();
    let wrap = |inner: GaugeWord| -> GaugeWord {
        if shift.iter().all(|&x| x == 0) || inner.is_identity() {
            return inner;
        }
        let mut out = GaugeWord::single(Factor::Cochar(shift.clone()));
        out.extend(inner);
        out.push(Factor::Cochar(neg.clone()));
        out
    };
    Ok(Birkhoff { g1: wrap(integral_word(&u)?), xi: exps, g2: wrap(integral_word(&w)?) })
}
