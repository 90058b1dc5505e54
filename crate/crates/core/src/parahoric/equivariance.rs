use num_traits::Zero;

use super::{filtration_member, graded, residue, Kind, Weight};
use crate::error::{Error, Result};
use crate::lie::{exp_to, gauge_mode, ConstMat, Factor, GaugeWord, MatSeries};
use crate::series::floor_i64;

/// Levi component of one factor of a word in the parahoric group.
fn levi_part(w: &Weight, f: &Factor, prec: i64) -> Result<MatSeries> {
    match f {
        Factor::Const(c) => {
            let n = c.n();
            let mut levi = ConstMat::zero(n);
            for a in 0..n {
                for b in 0..n {
                    let g = w.grading(a, b);
                    if g < num_traits::zero() && !c.get(a, b).is_zero() {
                        return Err(Error::NotParahoric);
                    }
                    if g.is_zero() {
                        levi.set(a, b, c.get(a, b).clone());
                    }
                }
            }
            Ok(MatSeries::constant(&levi))
        }
        Factor::Exp(x) => {
            if !filtration_member(w, x, Kind::Parahoric) {
                return Err(Error::NotParahoric);
            }
            exp_to(&residue(w, x)?, prec)
        }
        Factor::Cochar(xi) if xi.iter().all(|&v| v == 0) => Ok(MatSeries::identity(xi.len())),
        _ => Err(Error::NotParahoric),
    }
}

/// Computes the Levi element `h` of the word and checks
/// `Res(Ad_g X) = Ad_h Res(X)` exactly.
pub fn residue_equivariance_check(w: &Weight, g: &GaugeWord, x: &MatSeries) -> Result<(MatSeries, bool)> {
    if !filtration_member(w, x, Kind::Parahoric) {
        return Err(Error::NotParahoric);
    }
    let n = x.n();
    let prec = x.trunc().saturating_add(1);
    let mut h = MatSeries::identity(n);
    for f in &g.factors {
        h = &levi_part(w, f, prec)? * &h;
    }
    let moved = gauge_mode(g, x, true)?;
    let lhs = residue(w, &moved)?;
    let res = residue(w, x)?;
    let hinv = h.inverse()?;
    let rhs = graded::truncate_depth(w, &(&(&h * &res) * &hinv), &num_traits::one());
    let lhs = graded::truncate_depth(w, &lhs, &num_traits::one());
    // each entry must be known at its residue position, `z^{-⌊λ⌋}`
    let ok = (0..n).all(|a| {
        (0..n).all(|b| {
            let (l, r) = (lhs.get(a, b), rhs.get(a, b));
            let t = l.trunc().min(r.trunc());
            t > -floor_i64(&w.grading(a, b)) && l.agrees_below(r, t)
        })
    });
    Ok((h, ok))
}
