//! Splitting off a semisimple leading part.

use num_traits::{Signed, Zero};

use super::common::{apply, depth_domain, exp_factor, grade_domain, is_grade_zero, leading, order_above_one, settle, working_copy};
use crate::error::{Error, Result};
use crate::lie::{is_semisimple, jordan_chevalley, solve_commutator, ConstMat, GaugeWord, Subalgebra};
use crate::parahoric::{graded, Connection, Weight};
use crate::series::{rat, Rat};

/// Makes every depth component of `a` commute with `s`, using gauges whose
/// logarithms lie in `amb`. `c` is the Θ-order; `s` must be the semisimple
/// part of (a summand of) the grade-0 leading datum.
pub(crate) fn split_engine(
    w: &Weight,
    a: &Connection,
    s: &ConstMat,
    amb: &Subalgebra,
    c: i64,
) -> Result<(Connection, GaugeWord)> {
    let mut cur = working_copy(a, c);
    let mut word = GaugeWord::identity();
    let lead = rat(-c);

    // Levi step: clear the parts of the leading component that do not commute with s.
    let (l0, m0) = leading(w, &cur, c);
    if !s.bracket(&l0).is_zero() {
        let s0 = jordan_chevalley(&m0).0;
        let passes = 2 * w.n() * w.n();
        for _ in 0..passes {
            let (l, now) = leading(w, &cur, c);
            if s.bracket(&l).is_zero() {
                break;
            }
            if jordan_chevalley(&now).0 != s0 {
                return Err(Error::LeviSplitFailed("cross terms moved the semisimple part".into()));
            }
            let mut gs: Vec<Rat> = graded::grades(w, &l).into_iter().filter(|g| !g.is_zero()).collect();
            gs.sort_by(|x, y| x.abs().cmp(&y.abs()).then(x.cmp(y)));
            for g in gs {
                let (l, m_now) = leading(w, &cur, c);
                let lg = graded::grade_part(w, &l, &g);
                if s.bracket(&lg).is_zero() {
                    continue;
                }
                let dom = grade_domain(w, amb, &g);
                let y = solve_commutator(s, &m_now, &lg, &dom)
                    .map_err(|_| Error::LeviSplitFailed(format!("grade {g} of the leading term")))?;
                if !y.is_zero() {
                    apply(&mut cur, &mut word, exp_factor(w, &rat(0), &y))?;
                }
            }
        }
        let (l, m_end) = leading(w, &cur, c);
        if !s.bracket(&l).is_zero() || jordan_chevalley(&m_end).0 != s0 {
            return Err(Error::LeviSplitFailed("cross terms between grades do not cancel".into()));
        }
    }

    // Positive-depth steps, lowest depth first.
    let (l, _) = leading(w, &cur, c);
    let t = graded::depth_trunc(w, &cur.mat);
    let top = t.clone().expect("working copy has finite precision");
    for d in graded::levels(w, &lead, &top) {
        if d == lead {
            continue;
        }
        let x = graded::component(w, &cur.mat, &d);
        if s.bracket(&x).is_zero() {
            continue;
        }
        let e = &d - &lead;
        let dom = depth_domain(w, amb, &e);
        let y = solve_commutator(s, &l, &x, &dom)?;
        apply(&mut cur, &mut word, exp_factor(w, &e, &y))?;
    }
    Ok((settle(w, cur, &t), word))
}

/// Splits off the semisimple part `S` of the grade-0 leading datum.
pub fn reduce_semisimple_commute(w: &Weight, a: &Connection) -> Result<(Connection, GaugeWord, ConstMat)> {
    let c = order_above_one(w, a)?;
    let (_, m0) = leading(w, a, c);
    let (s, _) = jordan_chevalley(&m0);
    if s.is_zero() {
        return Err(Error::ZeroSemisimplePart);
    }
    let (b, word) = split_engine(w, a, &s, &Subalgebra::gl(a.n()), c)?;
    if word.is_identity() {
        return Ok((a.clone(), word, s));
    }
    Ok((b, word, s))
}

fn check_list(w: &Weight, list: &[ConstMat]) -> Result<()> {
    for (i, s) in list.iter().enumerate() {
        if !is_semisimple(s) || !is_grade_zero(w, s) {
            return Err(Error::NonCommutingList);
        }
        if list[..i].iter().any(|t| !t.bracket(s).is_zero()) {
            return Err(Error::NonCommutingList);
        }
    }
    Ok(())
}

/// Sequential passes, each inside the centralizer of the previous elements.
pub(crate) fn multi_in(
    w: &Weight,
    a: &Connection,
    list: &[ConstMat],
    amb: &Subalgebra,
    c: i64,
) -> Result<(Connection, GaugeWord, Subalgebra)> {
    let mut cur = a.clone();
    let mut word = GaugeWord::identity();
    let mut amb = amb.clone();
    for s in list {
        if s.is_zero() {
            continue;
        }
        let (b, step) = split_engine(w, &cur, s, &amb, c)?;
        if !step.is_identity() {
            cur = b;
            word.extend(step);
        }
        amb = amb.centralizer(std::slice::from_ref(s))?;
    }
    Ok((cur, word, amb))
}

pub fn reduce_multi_semisimple(w: &Weight, a: &Connection, list: &[ConstMat]) -> Result<(Connection, GaugeWord)> {
    check_list(w, list)?;
    if list.is_empty() {
        return Ok((a.clone(), GaugeWord::identity()));
    }
    let c = order_above_one(w, a)?;
    let (b, word, _) = multi_in(w, a, list, &Subalgebra::gl(a.n()), c)?;
    Ok((b, word))
}

/// Reduces into the Cartan subalgebra centralizing `list`.
pub fn reduce_to_cartan(w: &Weight, a: &Connection, list: &[ConstMat]) -> Result<(Connection, GaugeWord)> {
    check_list(w, list)?;
    let cartan = Subalgebra::gl(a.n()).centralizer(list)?;
    if !cartan.is_cartan() {
        return Err(Error::NotCartan);
    }
    reduce_multi_semisimple(w, a, list)
}
