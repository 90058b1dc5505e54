//! Normal forms for logarithmic connections.

use num_traits::Zero;

use super::common::{apply, exp_factor, settle, working_copy};
use crate::error::{Error, Result};
use crate::lie::{diagonalize, is_semisimple, jordan_chevalley, linalg, ConstMat, Factor, GaugeWord, MatSeries, Subalgebra};
use crate::parahoric::{filtration_member, graded, Connection, Kind, Weight};
use crate::series::{floor_i64, rat, Rat};

/// `D` on depth-`d` components of `X = z·A`: the Euler derivative, or zero for Higgs fields.
fn euler(w: &Weight, d: &Rat, y: &ConstMat, higgs: bool) -> ConstMat {
    if higgs {
        return ConstMat::zero(y.n());
    }
    &y.scale(d) - &graded::ad_theta(w, y)
}

/// Removes the components of `X = z·A` outside the eigenspaces where
/// `[R, X_i] = i·X_i`, with `R` the semisimple part of `X_{0,0}`.
pub fn boalch_normalize(w: &Weight, a: &Connection) -> Result<(Connection, GaugeWord, ConstMat)> {
    let x = a.mat.shift(1);
    if a.is_zero() || !filtration_member(w, &x, Kind::Parahoric) {
        return Err(Error::NotLogarithmic);
    }
    let higgs = a.higgs;
    let zero = Rat::zero();
    let x0 = graded::component(w, &x, &zero);
    let (r, _) = jordan_chevalley(&graded::grade_part(w, &x0, &zero));
    let op = |d: &Rat, m: &ConstMat| &r.bracket(m) - &euler(w, d, m, higgs);
    if !op(&zero, &x0).is_zero() {
        return Err(Error::FieldExtensionNeeded("depth-0 part does not diagonalize against R".into()));
    }

    let mut cur = working_copy(a, 1);
    let mut word = GaugeWord::identity();
    let t = graded::depth_trunc(w, &cur.mat.shift(1));
    let top = t.clone().expect("working copy has finite precision");
    for d in graded::levels(w, &zero, &top) {
        if d.is_zero() {
            continue;
        }
        let xd = graded::component(w, &cur.mat.shift(1), &d);
        let target = op(&d, &xd);
        if target.is_zero() {
            continue;
        }
        let dom = Subalgebra::gl(a.n()).restrict_support(graded::allowed(w, &d));
        let sys = dom.linear_system(|y| op(&d, &(&x0.bracket(y) - &euler(w, &d, y, higgs))));
        let y = linalg::solve(&sys, target.as_slice(), dom.dim())
            .ok_or_else(|| Error::FieldExtensionNeeded(format!("no rational solution at depth {d}")))?;
        apply(&mut cur, &mut word, exp_factor(w, &d, &dom.combine(&y)))?;
    }
    // depth of z·A is one more than depth of A
    let b = settle(w, cur, &t.map(|t| t - rat(1)));
    if word.is_identity() {
        return Ok((a.clone(), word, r));
    }
    Ok((b, word, r))
}

/// Twists a Boalch-type form by `z^Ξ` so that it becomes `R'·dz/z` with `R'` constant.
pub fn deligne_twist(a: &Connection, r: &ConstMat) -> Result<(Connection, GaugeWord)> {
    if !is_semisimple(r) {
        return Err(Error::InvalidInput("twist needs a semisimple R".into()));
    }
    let (g, d) = diagonalize(r).ok_or_else(|| Error::FieldExtensionNeeded("R has irrational eigenvalues".into()))?;
    let mut cur = a.clone();
    let mut word = GaugeWord::identity();
    let d = if r.is_diagonal() {
        r.diagonal()
    } else {
        apply(&mut cur, &mut word, Factor::Const(g))?;
        d
    };
    let xi: Vec<i64> = d
        .iter()
        .map(|ra| {
            let low = d.iter().filter(|rb| (ra - *rb).is_integer()).min().expect("class contains ra");
            -floor_i64(&(ra - low))
        })
        .collect();
    if xi.iter().any(|&v| v != 0) {
        apply(&mut cur, &mut word, Factor::Cochar(xi))?;
    }
    let x = cur.mat.shift(1);
    if x.exponents().iter().any(|&k| k != 0) {
        return Err(Error::InvalidInput("input is not of Boalch type for R".into()));
    }
    Ok((cur, word))
}

/// `X·dz/z` as a connection.
pub fn logarithmic(x: &MatSeries) -> Connection {
    Connection::new(x.shift(-1))
}
