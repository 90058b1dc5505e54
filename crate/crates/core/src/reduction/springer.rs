//! Tangent dimension of the affine Springer fiber on a finite window.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{linalg, GaugeWord};
use crate::parahoric::{graded, theta_order, Connection, Weight};
use crate::series::{ceil_i64, rat, Rat, EXACT};

/// `dim {X : DX has depth ≥ −c} / p̂_Θ` for `X` supported on exponents `[−W, W)`,
/// with `D = d − ad_{A'}` and `A'` the gauge of `a` by `g`.
pub fn springer_tangent_dim(w: &Weight, a: &Connection, g: &GaugeWord, window: i64) -> Result<usize> {
    if window <= 0 {
        return Ok(0);
    }
    let a2 = a.gauge(g)?;
    let c = theta_order(w, &a2)?;
    let n = a.n();
    let bound = |p: usize, q: usize| ceil_i64(&(rat(-c) - w.grading(p, q)));
    let m_top = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).map(|(p, q)| bound(p, q)).max().unwrap_or(0);
    let t = a2.trunc();
    if t != EXACT && t <= m_top - 1 + window {
        return Err(Error::WindowTooLarge(window));
    }
    let mut unknowns: Vec<(usize, usize, i64)> = Vec::new();
    for k in -window..window {
        for p in 0..n {
            for q in 0..n {
                unknowns.push((p, q, k));
            }
        }
    }
    let cols = unknowns.len();
    let mut rows: BTreeMap<(usize, usize, i64), Vec<Rat>> = BTreeMap::new();
    let mut add = |key: (usize, usize, i64), col: usize, v: Rat| {
        if key.2 >= bound(key.0, key.1) || v.is_zero() {
            return;
        }
        let r = rows.entry(key).or_insert_with(|| vec![Rat::zero(); cols]);
        r[col] += v;
    };
    let terms: Vec<(i64, crate::lie::ConstMat)> = a2.mat.exponents().into_iter().map(|j| (j, a2.mat.coeff(j))).collect();
    for (col, &(p, q, k)) in unknowns.iter().enumerate() {
        if !a2.higgs && k != 0 {
            add((p, q, k - 1), col, rat(k));
        }
        for (j, m) in &terms {
            // −[A', E_pq] = −A' E_pq + E_pq A'
            for x in 0..n {
                add((x, q, j + k), col, -m.get(x, p).clone());
                add((p, x, j + k), col, m.get(q, x).clone());
            }
        }
    }
    let rows: Vec<Vec<Rat>> = rows.into_values().collect();
    let dim_k = cols - linalg::rank(&rows, cols);
    let mut with_p = rows;
    for (col, &(p, q, k)) in unknowns.iter().enumerate() {
        if graded::depth(w, p, q, k) < Rat::zero() {
            let mut r = vec![Rat::zero(); cols];
            r[col] = Rat::one();
            with_p.push(r);
        }
    }
    let dim_kp = cols - linalg::rank(&with_p, cols);
    Ok(dim_k - dim_kp)
}

/// `(c + 1 + ⌊λ_m⌋)·n²`.
pub fn springer_bound(w: &Weight, c: i64) -> i64 {
    (c + 1 + w.floor_max_grade()) * (w.n() * w.n()) as i64
}
