use std::collections::BTreeMap;

use super::{Connection, Weight};
use crate::error::{Error, Result};
use crate::lie::{ConstMat, MatSeries};
use crate::series::{floor_i64, LaurentSeries, Rat};

/// Monomial data `X_{λ,i} z^i` sitting inside `Â^{(r)} z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTerm {
    pub r: i64,
    /// Sharp level `λ + i`, in `[0, 1)`.
    pub l: Rat,
    pub i: i64,
    pub x: ConstMat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaRep {
    pub weight: Weight,
    pub c: i64,
    pub terms: Vec<ThetaTerm>,
    /// Per-entry truncation of the source, row-major.
    pub truncs: Vec<i64>,
}

impl ThetaRep {
    /// `Σ X z^{r+i}`, with the source truncations.
    pub fn reassemble(&self) -> MatSeries {
        let n = self.weight.n();
        let mut buckets: Vec<Vec<(i64, Rat)>> = vec![Vec::new(); n * n];
        for t in &self.terms {
            for a in 0..n {
                for b in 0..n {
                    let c = t.x.get(a, b);
                    if !num_traits::Zero::is_zero(c) {
                        buckets[a * n + b].push((t.r + t.i, c.clone()));
                    }
                }
            }
        }
        let entries = buckets.into_iter().zip(&self.truncs).map(|(b, &t)| LaurentSeries::new(b, t)).collect();
        MatSeries::from_entries(n, entries)
    }
}

/// Canonical Θ-representation: a monomial of grade `λ` at `z^k` gets
/// `i = −⌊λ⌋`, `r = k + ⌊λ⌋`, sharp level `λ − ⌊λ⌋`.
pub fn theta_rep(w: &Weight, a: &Connection) -> ThetaRep {
    let n = a.n();
    let mut groups: BTreeMap<(i64, Rat, i64), ConstMat> = BTreeMap::new();
    for (i, j, k, c) in a.mat.monomials() {
        let g = w.grading(i, j);
        let fl = floor_i64(&g);
        let key = (k + fl, &g - Rat::from_integer(fl.into()), -fl);
        groups.entry(key).or_insert_with(|| ConstMat::zero(n)).set(i, j, c.clone());
    }
    let c = groups.keys().map(|(r, _, _)| -r).max().unwrap_or(0);
    let terms = groups.into_iter().map(|((r, l, i), x)| ThetaTerm { r, l, i, x }).collect();
    let truncs = a.mat.entries().iter().map(LaurentSeries::trunc).collect();
    ThetaRep { weight: w.clone(), c, terms, truncs }
}

/// Leading index of the canonical representation.
pub fn theta_order(w: &Weight, a: &Connection) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::ZeroConnection);
    }
    Ok(theta_rep(w, a).c)
}
