//! The nilpotent branch: Jacobson–Morozov reduction, splitting invariants, shearing.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::common::{apply, depth_domain, exp_factor, grade_domain, leading, order_above_one, settle, working_copy};
use crate::error::{Error, Result};
use crate::lie::{diagonalize, jacobson_morozov, solve_commutator, CenterSplit, ConstMat, Factor, GaugeWord, Sl2Triple, Subalgebra};
use crate::parahoric::{graded, theta_order, Connection, Weight};
use crate::series::{as_i64, denom_i64, rat, Rat};

/// Constant grade-0 `g` with `g H g⁻¹` diagonal, entries descending inside each
/// block of equal weight. `None` when `H` already has that shape.
fn align(w: &Weight, h: &ConstMat) -> Result<Option<ConstMat>> {
    let n = h.n();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        match classes.iter_mut().find(|c| w.grading(c[0], a).is_zero()) {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    let sorted = |c: &Vec<usize>| c.windows(2).all(|p| h.get(p[0], p[0]) >= h.get(p[1], p[1]));
    if h.is_diagonal() && classes.iter().all(sorted) {
        return Ok(None);
    }
    let mut g = ConstMat::zero(n);
    for c in &classes {
        let sub = ConstMat::from_rows(c.iter().map(|&a| c.iter().map(|&b| h.get(a, b).clone()).collect()).collect());
        let (gc, _) = diagonalize(&sub).ok_or_else(|| Error::Inconsistent("neutral element is not split".into()))?;
        let k = c.len();
        for (i, &a) in c.iter().enumerate() {
            for (j, &b) in c.iter().enumerate() {
                // reversed rows: descending eigenvalues
                g.set(a, b, gc.get(k - 1 - i, j).clone());
            }
        }
    }
    Ok(Some(g))
}

/// Jacobson–Morozov reduction of `a` around the nilpotent `p` inside `amb`.
/// Returns the reduced connection, the word, the aligned triple and the
/// ambient algebra moved along with the alignment.
pub(crate) fn nilpotent_in(
    w: &Weight,
    a: &Connection,
    p: &ConstMat,
    amb: &Subalgebra,
    c: i64,
) -> Result<(Connection, GaugeWord, Sl2Triple, Subalgebra)> {
    let mut cur = working_copy(a, c);
    let mut word = GaugeWord::identity();
    let mut triple = jacobson_morozov(p, &grade_domain(w, amb, &Rat::zero()))?;
    let mut amb = amb.clone();
    if let Some(g) = align(w, &triple.h)? {
        let ginv = g.inverse()?;
        triple = triple.conj(&g, &ginv);
        amb = amb.conj(&g, &ginv);
        apply(&mut cur, &mut word, Factor::Const(g))?;
    }
    let lead = rat(-c);
    let (l, _) = leading(w, &cur, c);
    let t = graded::depth_trunc(w, &cur.mat);
    let top = t.clone().expect("working copy has finite precision");
    for d in graded::levels(w, &lead, &top) {
        if d == lead {
            continue;
        }
        let x = graded::component(w, &cur.mat, &d);
        if triple.q.bracket(&x).is_zero() {
            continue;
        }
        let e = &d - &lead;
        let y = solve_commutator(&triple.q, &l, &x, &depth_domain(w, &amb, &e))?;
        apply(&mut cur, &mut word, exp_factor(w, &e, &y))?;
    }
    Ok((settle(w, cur, &t), word, triple, amb))
}

/// Moves every non-leading coefficient into the kernel of `ad_Q`.
pub fn reduce_nilpotent_center(w: &Weight, a: &Connection) -> Result<(Connection, GaugeWord, Sl2Triple)> {
    let c = order_above_one(w, a)?;
    let (_, p) = leading(w, a, c);
    if p.is_zero() || !p.is_nilpotent() {
        return Err(Error::NotNilpotentLeading);
    }
    let (b, word, triple, _) = nilpotent_in(w, a, &p, &Subalgebra::gl(a.n()), c)?;
    if word.is_identity() {
        return Ok((a.clone(), word, triple));
    }
    Ok((b, word, triple))
}

/// Splits `x` into `ad_H` eigencomponents, keyed by eigenvalue.
pub(crate) fn weight_parts(h: &ConstMat, x: &ConstMat) -> BTreeMap<i64, ConstMat> {
    let n = h.n();
    let (g, ginv) = if h.is_diagonal() {
        (ConstMat::identity(n), ConstMat::identity(n))
    } else {
        let (g, _) = diagonalize(h).expect("neutral element has integer spectrum");
        let ginv = g.inverse().expect("diagonalizing matrix is invertible");
        (g, ginv)
    };
    let hd = h.conj(&g, &ginv).diagonal();
    let xd = x.conj(&g, &ginv);
    let mut out: BTreeMap<i64, ConstMat> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let v = xd.get(a, b);
            if v.is_zero() {
                continue;
            }
            let e = as_i64(&(&hd[a] - &hd[b])).expect("integer ad_H eigenvalue");
            out.entry(e).or_insert_with(|| ConstMat::zero(n)).set(a, b, v.clone());
        }
    }
    out.into_iter().map(|(e, m)| (e, m.conj(&ginv, &g))).collect()
}

/// `(Λ, Υ)` relative to `amb`; `Υ = None` stands for infinity. Central parts
/// of `amb` are ignored when scanning the window.
pub(crate) fn invariants_in(w: &Weight, b: &Connection, t: &Sl2Triple, amb: &Subalgebra, c: i64) -> (Rat, Option<Rat>) {
    let kernel = amb.centralizer(std::slice::from_ref(&t.q)).unwrap_or_else(|_| Subalgebra::span(amb.n(), &[]));
    let mut lambda = Rat::one();
    for x in kernel.basis() {
        for e in weight_parts(&t.h, x).keys() {
            let v = ratio_half(*e);
            if v > lambda {
                lambda = v;
            }
        }
    }
    let split = CenterSplit::new(amb);
    let lead = rat(-c);
    let top = &lead + &lambda * rat(c - 1);
    let mut upsilon: Option<Rat> = None;
    for d in graded::levels(w, &(&lead + rat(1)), &top) {
        let x = split.derived_part(&graded::component(w, &b.mat, &d));
        for e in weight_parts(&t.h, &x).keys() {
            let den = ratio_half(*e);
            if den <= Rat::zero() {
                continue;
            }
            let v = (&d + rat(c)) / den;
            if upsilon.as_ref().is_none_or(|u| v < *u) {
                upsilon = Some(v);
            }
        }
    }
    (lambda, upsilon)
}

fn ratio_half(e: i64) -> Rat {
    Rat::new(e.into(), 2.into()) + Rat::one()
}

/// `Λ` and `Υ` for a connection in the output shape of [`reduce_nilpotent_center`].
pub fn splitting_invariants(w: &Weight, b: &Connection, t: &Sl2Triple) -> (Rat, Option<Rat>) {
    let c = match theta_order(w, b) {
        Ok(c) => c,
        Err(_) => return (Rat::one(), None),
    };
    invariants_in(w, b, t, &Subalgebra::gl(b.n()), c)
}

/// Pulls back to the `b`-fold cover and gauges by `ζ^{nH}`.
pub fn shear(b: &Connection, t: &Sl2Triple, cover: i64, n: i64) -> Result<(Connection, GaugeWord)> {
    let mut word = GaugeWord::identity();
    if cover > 1 {
        word.push(Factor::Ramify(cover));
    }
    if n != 0 {
        word.push(Factor::Shear { n, h: t.h.clone() });
    }
    if word.is_identity() {
        return Ok((b.clone(), word));
    }
    Ok((b.gauge(&word)?, word))
}

/// Cover degree and shear exponent for the two shearing cases.
pub fn shear_parameters(c: i64, upsilon: &Option<Rat>) -> (i64, i64) {
    match upsilon {
        Some(u) if *u < rat(c - 1) => {
            let delta = denom_i64(u);
            let n = as_i64(&(u * rat(delta))).expect("δΥ is an integer");
            (2 * delta, -n)
        }
        _ => (2, -c + 1),
    }
}
