//! Borel reduction: bounded search with a verifier.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::full::Budget;
use super::nilpotent::reduce_nilpotent_center;
use crate::error::{Error, Result};
use crate::lie::{ConstMat, Factor, GaugeWord};
use crate::parahoric::{Connection, Weight};
use crate::series::Rat;

fn order(a: &Connection) -> i64 {
    -a.mat.val()
}

/// Leading coefficient nilpotent and every later coefficient upper triangular.
pub fn is_borel_shaped(b: &Connection) -> bool {
    if b.is_zero() {
        return false;
    }
    let c = order(b);
    b.mat.coeff(-c).is_nilpotent() && b.mat.exponents().into_iter().filter(|&k| k > -c).all(|k| b.mat.coeff(k).is_upper_triangular())
}

/// Scales a matrix to a primitive integer one.
fn primitive(m: &ConstMat) -> ConstMat {
    let den = m.as_slice().iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Rat> = m.as_slice().iter().map(|x| x * Rat::from_integer(den.clone())).collect();
    let g = scaled.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ConstMat::from_vec(m.n(), scaled.into_iter().map(|x| x / Rat::from_integer(g.clone())).collect())
}

/// Test vectors for cyclicity: unit vectors, pairwise sums, then the all-ones vector.
fn probe_vectors(n: usize) -> Vec<Vec<Rat>> {
    let unit = |i: usize| (0..n).map(|a| if a == i { Rat::one() } else { Rat::zero() }).collect::<Vec<_>>();
    let mut out: Vec<Vec<Rat>> = (0..n).map(unit).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push((0..n).map(|a| if a == i || a == j { Rat::one() } else { Rat::zero() }).collect());
        }
    }
    if n > 2 {
        out.push(vec![Rat::one(); n]);
    }
    out
}

/// Constant `g` putting `l` into companion shape (ones below the diagonal).
fn companion_conjugator(l: &ConstMat) -> Option<ConstMat> {
    let n = l.n();
    for v in probe_vectors(n) {
        let mut cols = vec![v];
        for _ in 1..n {
            let next = l.mul_vec(cols.last().expect("nonempty"));
            cols.push(next);
        }
        let m = ConstMat::from_rows((0..n).map(|a| cols.iter().map(|c| c[a].clone()).collect()).collect());
        if let Ok(inv) = m.inverse() {
            return Some(primitive(&inv));
        }
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn permutation_matrix(p: &[usize]) -> ConstMat {
    let n = p.len();
    let mut m = ConstMat::zero(n);
    for (a, &b) in p.iter().enumerate() {
        m.set(a, b, Rat::one());
    }
    m
}

fn boxes(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    out
}

fn then(a: &Connection, word: &GaugeWord, f: Factor) -> Result<(Connection, GaugeWord)> {
    let step = GaugeWord::single(f);
    let b = a.gauge(&step)?;
    Ok((b, word.concat(&step)))
}

/// Accepts `(b, w)` if it is Borel shaped with the expected order, trying a
/// nilpotent reduction first when the shape is not there yet.
fn settle(b: Connection, w: GaugeWord, target: i64) -> Option<(Connection, GaugeWord)> {
    if order(&b) == target && is_borel_shaped(&b) {
        return Some((b, w));
    }
    if order(&b) != target || !b.mat.coeff(-target).is_nilpotent() {
        return None;
    }
    let (b2, w2, _) = reduce_nilpotent_center(&Weight::zero(b.n()), &b).ok()?;
    if is_borel_shaped(&b2) && order(&b2) == target {
        return Some((b2, w.concat(&w2)));
    }
    None
}

/// Coefficients upper triangular except a nilpotent leading one, at order
/// `c` (nilpotent leading datum) or `c + 1` (otherwise).
pub fn borel_reduce(w: &Weight, a: &Connection, budget: &Budget) -> Result<(Connection, GaugeWord)> {
    if a.is_zero() {
        return Err(Error::ZeroConnection);
    }
    if !w.is_integer() {
        return Err(Error::NotIntegerWeight);
    }
    let n = a.n();
    let mut start = a.clone();
    let mut base = GaugeWord::identity();
    let shift = w.integral_shift()?;
    if shift.iter().any(|&s| s != 0) {
        (start, base) = then(&start, &base, Factor::Cochar(shift))?;
    }
    let c = order(&start);
    if c <= 1 {
        return Err(Error::OrderTooLow(c));
    }
    let nilpotent = start.mat.coeff(-c).is_nilpotent();
    let target = if nilpotent { c } else { c + 1 };
    let raise: Vec<i64> = (0..n as i64).rev().collect();
    let bound = budget.search_bound.unwrap_or(2);

    let mut perms = permutations(n);
    if n > 4 {
        perms.truncate(1);
    }
    let mut staged: Vec<(Connection, GaugeWord)> = Vec::new();
    for p in &perms {
        let (cur, word) = if p.iter().enumerate().all(|(a, &b)| a == b) {
            (start.clone(), base.clone())
        } else {
            then(&start, &base, Factor::Const(permutation_matrix(p)))?
        };
        let candidate = if nilpotent {
            Some((cur.clone(), word.clone()))
        } else {
            match companion_conjugator(&cur.mat.coeff(-c)) {
                Some(g) => {
                    let (x, wx) = then(&cur, &word, Factor::Const(g))?;
                    Some(then(&x, &wx, Factor::Cochar(raise.clone()))?)
                }
                None => None,
            }
        };
        if let Some((b, wb)) = candidate {
            if let Some(done) = settle(b.clone(), wb.clone(), target) {
                return Ok(done);
            }
            staged.push((b, wb));
        } else if !nilpotent {
            staged.push((cur, word));
        }
    }
    for (b, wb) in &staged {
        for xi in boxes(n, bound) {
            let (b2, w2) = then(b, wb, Factor::Cochar(xi))?;
            if let Some(done) = settle(b2, w2, target) {
                return Ok(done);
            }
        }
    }
    Err(Error::SearchExhausted(format!("{} starts, cocharacter box {bound}", staged.len())))
}
