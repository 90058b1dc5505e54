//! Depth-graded view of a matrix of series.
//!
//! The monomial `E_ab z^k` has depth `λ(a,b) + k`. The homogeneous depth-`d`
//! part of a matrix is identified with the constant matrix holding its
//! coefficients, and brackets of homogeneous parts add depths.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::Weight;
use crate::lie::{ConstMat, MatSeries};
use crate::series::{ceil_i64, floor_i64, rat, Rat, EXACT};

pub fn depth(w: &Weight, a: usize, b: usize, k: i64) -> Rat {
    w.grading(a, b) + rat(k)
}

/// Positions whose monomials can have depth `d`.
pub fn allowed(w: &Weight, d: &Rat) -> impl Fn(usize, usize) -> bool {
    let w = w.clone();
    let d = d.clone();
    move |a, b| (&d - w.grading(a, b)).is_integer()
}

/// All nonzero homogeneous components, keyed by depth.
pub fn components(w: &Weight, x: &MatSeries) -> BTreeMap<Rat, ConstMat> {
    let n = x.n();
    let mut out: BTreeMap<Rat, ConstMat> = BTreeMap::new();
    for (a, b, k, c) in x.monomials() {
        let d = depth(w, a, b, k);
        out.entry(d).or_insert_with(|| ConstMat::zero(n)).set(a, b, c.clone());
    }
    out
}

/// The depth-`d` component (zero where not allowed).
pub fn component(w: &Weight, x: &MatSeries, d: &Rat) -> ConstMat {
    let n = x.n();
    let mut out = ConstMat::zero(n);
    for a in 0..n {
        for b in 0..n {
            let k = d - w.grading(a, b);
            if k.is_integer() {
                out.set(a, b, x.get(a, b).coeff(floor_i64(&k)));
            }
        }
    }
    out
}

/// Depths below this are fully known; `None` means exact.
pub fn depth_trunc(w: &Weight, x: &MatSeries) -> Option<Rat> {
    let n = x.n();
    let mut best: Option<Rat> = None;
    for a in 0..n {
        for b in 0..n {
            let t = x.get(a, b).trunc();
            if t == EXACT {
                continue;
            }
            let d = rat(t) + w.grading(a, b);
            if best.as_ref().is_none_or(|m| d < *m) {
                best = Some(d);
            }
        }
    }
    best
}

/// Keeps exactly the monomials of depth `< t`.
pub fn truncate_depth(w: &Weight, x: &MatSeries, t: &Rat) -> MatSeries {
    x.truncate_by(|a, b| ceil_i64(&(t - w.grading(a, b))))
}

/// `Σ X_ab E_ab z^{d − λ(a,b)}` for a homogeneous component `X` of depth `d`.
pub fn lift(w: &Weight, d: &Rat, x: &ConstMat) -> MatSeries {
    let n = x.n();
    let mut terms = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = x.get(a, b);
            if !c.is_zero() {
                let k = d - w.grading(a, b);
                debug_assert!(k.is_integer(), "component not homogeneous of depth {d}");
                terms.push((a, b, floor_i64(&k), c.clone()));
            }
        }
    }
    MatSeries::from_terms(n, terms, EXACT)
}

/// `ad_Θ` acting on a constant matrix: multiplies entry `(a,b)` by `λ(a,b)`.
pub fn ad_theta(w: &Weight, x: &ConstMat) -> ConstMat {
    let n = x.n();
    let mut out = ConstMat::zero(n);
    for a in 0..n {
        for b in 0..n {
            out.set(a, b, x.get(a, b) * w.grading(a, b));
        }
    }
    out
}

/// Every depth `d` with `from ≤ d < below` at which some position can carry a monomial.
pub fn levels(w: &Weight, from: &Rat, below: &Rat) -> Vec<Rat> {
    let n = w.n();
    let fracs: BTreeSet<Rat> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let g = w.grading(a, b);
            &g - rat(floor_i64(&g))
        })
        .collect();
    let mut out = Vec::new();
    let mut base = floor_i64(from);
    while rat(base) < *below {
        for f in &fracs {
            let d = rat(base) + f;
            if d >= *from && d < *below {
                out.push(d);
            }
        }
        base += 1;
    }
    out
}

/// Positions `(a,b)` with `λ(a,b) = g`.
pub fn grade_part(w: &Weight, x: &ConstMat, g: &Rat) -> ConstMat {
    let n = x.n();
    let mut out = ConstMat::zero(n);
    for a in 0..n {
        for b in 0..n {
            if w.grading(a, b) == *g {
                out.set(a, b, x.get(a, b).clone());
            }
        }
    }
    out
}

/// Distinct grading values present in the support of `x`.
pub fn grades(w: &Weight, x: &ConstMat) -> Vec<Rat> {
    let n = x.n();
    let mut gs: BTreeSet<Rat> = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if !x.get(a, b).is_zero() {
                gs.insert(w.grading(a, b));
            }
        }
    }
    gs.into_iter().collect()
}
