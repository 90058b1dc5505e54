use num_traits::Zero;

use super::{graded, Connection, Weight};
use crate::error::{Error, Result};
use crate::lie::{ConstMat, MatSeries};
use crate::series::{floor_i64, LaurentSeries, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Parahoric,
    Levi,
    Unipotent,
}

/// Entry `(a,b)` at `z^i` is allowed iff `λ(a,b) + i` is `≥ 0`, `= 0` or `> 0`.
pub fn filtration_member(w: &Weight, x: &MatSeries, kind: Kind) -> bool {
    x.monomials().all(|(a, b, k, _)| {
        let d = graded::depth(w, a, b, k);
        match kind {
            Kind::Parahoric => d >= Rat::zero(),
            Kind::Levi => d.is_zero(),
            Kind::Unipotent => d > Rat::zero(),
        }
    })
}

/// Moy–Prasad lattice membership: every monomial has depth `≥ s`.
pub fn moy_prasad_member(x: &Weight, s: &Rat, m: &MatSeries) -> bool {
    m.monomials().all(|(a, b, k, _)| graded::depth(x, a, b, k) >= *s)
}

/// The Levi part: monomials of depth exactly 0.
pub fn residue(w: &Weight, x: &MatSeries) -> Result<MatSeries> {
    if !filtration_member(w, x, Kind::Parahoric) {
        return Err(Error::NotParahoric);
    }
    let n = x.n();
    let mut out = MatSeries::zero(n).with_ctx(x.ctx);
    for a in 0..n {
        for b in 0..n {
            let g = w.grading(a, b);
            if !g.is_integer() {
                continue;
            }
            let k = -floor_i64(&g);
            let e = x.get(a, b);
            let s = if k < e.trunc() { LaurentSeries::monomial(k, e.coeff(k)) } else { LaurentSeries::zero_to(e.trunc()) };
            out.set(a, b, s);
        }
    }
    Ok(out)
}

/// Constant piece of the residue: grade-0 entries of the `z^0` coefficient.
pub fn residue0(w: &Weight, x: &MatSeries) -> Result<ConstMat> {
    let r = residue(w, x)?;
    Ok(graded::grade_part(w, &r.coeff(0), &Rat::zero()))
}

/// Depth of `A` at the point `x`: `max(0, −m)` where `m` is the least depth
/// among the monomials of `z·A`.
pub fn depth_at(x: &Weight, a: &Connection) -> Rat {
    let za = a.mat.shift(1);
    let m = za.monomials().map(|(i, j, k, _)| graded::depth(x, i, j, k)).min();
    match m {
        Some(m) if m < Rat::zero() => -m,
        _ => Rat::zero(),
    }
}
