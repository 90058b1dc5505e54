//! Shared plumbing for the reduction engines.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{ConstMat, Factor, GaugeWord, Subalgebra};
use crate::parahoric::{graded, theta_order, Connection, Weight};
use crate::series::{rat, Rat};

/// Gives exact inputs a finite working precision `c` orders past their last term.
pub(crate) fn working_copy(a: &Connection, c: i64) -> Connection {
    if !a.mat.is_exact() {
        return a.clone();
    }
    let top = a.mat.exponents().last().copied().unwrap_or(0);
    a.with_mat(a.mat.truncate(top + 1 + c.max(1)))
}

/// Θ-order, rejecting orders that leave nothing to reduce.
pub(crate) fn order_above_one(w: &Weight, a: &Connection) -> Result<i64> {
    let c = theta_order(w, a)?;
    if c <= 1 {
        return Err(Error::OrderTooLow(c));
    }
    Ok(c)
}

/// `(L, M0)`: the depth `−c` component and its grade-0 part.
pub(crate) fn leading(w: &Weight, a: &Connection, c: i64) -> (ConstMat, ConstMat) {
    let l = graded::component(w, &a.mat, &rat(-c));
    let m0 = graded::grade_part(w, &l, &Rat::zero());
    (l, m0)
}

/// `exp` of the homogeneous depth-`e` element with coefficients `y`.
pub(crate) fn exp_factor(w: &Weight, e: &Rat, y: &ConstMat) -> Factor {
    Factor::Exp(graded::lift(w, e, y))
}

/// Gauges by `f` and records it.
pub(crate) fn apply(a: &mut Connection, word: &mut GaugeWord, f: Factor) -> Result<()> {
    let step = GaugeWord::single(f);
    *a = a.gauge(&step)?;
    word.extend(step);
    Ok(())
}

/// Elements of `amb` homogeneous of depth `e`.
pub(crate) fn depth_domain(w: &Weight, amb: &Subalgebra, e: &Rat) -> Subalgebra {
    amb.restrict_support(graded::allowed(w, e))
}

/// Elements of `amb` supported on grade `g`.
pub(crate) fn grade_domain(w: &Weight, amb: &Subalgebra, g: &Rat) -> Subalgebra {
    let w = w.clone();
    let g = g.clone();
    amb.restrict_support(move |a, b| w.grading(a, b) == g)
}

/// Cuts `a` to the depths that are fully known and returns it.
pub(crate) fn settle(w: &Weight, a: Connection, t: &Option<Rat>) -> Connection {
    match t {
        Some(t) => {
            let m = graded::truncate_depth(w, &a.mat, t);
            a.with_mat(m)
        }
        None => a,
    }
}

/// Grade-0 constant matrices commute with the weight.
pub(crate) fn is_grade_zero(w: &Weight, x: &ConstMat) -> bool {
    graded::grades(w, x).iter().all(Zero::is_zero)
}
