//! Exact Gauss-Jordan elimination over the rationals.
//!
//! Free variables are always set to zero, so every solve returns the unique
//! solution supported on pivot columns. That makes outputs reproducible.

use num_traits::{One, Zero};

use crate::series::Rat;

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// Solves `a x = b`. Returns `None` when inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug, ncols + 1);
    if piv.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Basis of `{x : a x = 0}`, one vector per free column in increasing order.
pub fn nullspace(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (r, &c) in piv.iter().enumerate() {
            v[c] = -m[r][free].clone();
        }
        out.push(v);
    }
    out
}

pub fn rank(a: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}

/// Canonical basis (RREF rows) of the span of `vs`.
pub fn span_basis(vs: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = vs.to_vec();
    rref(&mut m, ncols);
    m
}
