//! Jordan–Chevalley decomposition and rational eigen-data, without factoring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ConstMat;
use crate::series::{rat, Rat};

/// Polynomial with ascending coefficients.
pub type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last() {
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
        None => p,
    }
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead = b.last().expect("division by zero polynomial").clone();
    while r.len() >= b.len() {
        let f = r.last().unwrap() / &lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r = trim(r);
    }
    r
}

fn poly_div(a: &Poly, b: &Poly) -> Poly {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut q = vec![Rat::zero(); r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / &lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        q[shift] = f;
        r = trim(r);
    }
    trim(q)
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn poly_deriv(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64)).collect())
}

/// Characteristic polynomial `det(t·I − M)` by Faddeev–LeVerrier.
pub fn charpoly(m: &ConstMat) -> Poly {
    let n = m.n();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let id = ConstMat::identity(n);
    let mut mk = ConstMat::zero(n);
    for k in 1..=n {
        mk = &(m * &mk) + &id.scale(&coeffs[n + 1 - k]);
        let c = -(m * &mk).trace() / rat(k as i64);
        coeffs[n - k] = c;
    }
    coeffs
}

/// Squarefree part of the characteristic polynomial (monic).
pub fn squarefree_part(m: &ConstMat) -> Poly {
    let p = charpoly(m);
    let g = poly_gcd(&p, &poly_deriv(&p));
    monic(poly_div(&p, &g))
}

pub fn eval_at(p: &Poly, m: &ConstMat) -> ConstMat {
    let n = m.n();
    let mut acc = ConstMat::zero(n);
    for c in p.iter().rev() {
        acc = &(&acc * m) + &ConstMat::identity(n).scale(c);
    }
    acc
}

pub fn is_semisimple(m: &ConstMat) -> bool {
    eval_at(&squarefree_part(m), m).is_zero()
}

/// `M = S + N` with `S` semisimple, `N` nilpotent, `[S, N] = 0`.
///
/// Newton iteration on the squarefree part `q`: `S ← S − q(S)·q'(S)⁻¹`.
pub fn jordan_chevalley(m: &ConstMat) -> (ConstMat, ConstMat) {
    let q = squarefree_part(m);
    let dq = poly_deriv(&q);
    let mut s = m.clone();
    loop {
        let qs = eval_at(&q, &s);
        if qs.is_zero() {
            break;
        }
        let d = eval_at(&dq, &s).inverse().expect("q' is invertible at a root-preserving lift");
        s = &s - &(&qs * &d);
    }
    let nil = m - &s;
    (s, nil)
}

fn divisors(x: &BigInt) -> Option<Vec<BigInt>> {
    let v = x.abs().to_u64()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of `p` without multiplicity, ascending. `None` if some root is irrational
/// or the coefficients are too large to search.
pub fn rational_roots(p: &Poly) -> Option<Vec<Rat>> {
    let mut p = trim(p.clone());
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return Some(roots);
    }
    if p[0].is_zero() {
        roots.push(Rat::zero());
        while p.first().is_some_and(Zero::is_zero) {
            p.remove(0);
        }
    }
    // clear denominators
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let mut deg = ints.len() - 1;
    if deg > 0 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(&ints[deg])?;
        let mut cur = p.clone();
        for q in &qs {
            for pp in &ps {
                for sign in [1, -1] {
                    let cand = Rat::new(pp * sign, q.clone());
                    if roots.contains(&cand) {
                        continue;
                    }
                    let val = cur.iter().rev().fold(Rat::zero(), |acc, c| acc * &cand + c);
                    if val.is_zero() {
                        roots.push(cand.clone());
                        cur = poly_div(&cur, &vec![-cand.clone(), Rat::one()]);
                        while cur.len() > 1 && {
                            let v = cur.iter().rev().fold(Rat::zero(), |acc, c| acc * &cand + c);
                            v.is_zero()
                        } {
                            cur = poly_div(&cur, &vec![-cand.clone(), Rat::one()]);
                        }
                        deg = cur.len() - 1;
                    }
                }
            }
        }
        if deg > 0 {
            return None;
        }
    }
    roots.sort();
    Some(roots)
}

/// Distinct eigenvalues, when all are rational.
pub fn rational_eigenvalues(m: &ConstMat) -> Option<Vec<Rat>> {
    rational_roots(&squarefree_part(m))
}

/// For semisimple `m` with rational spectrum, returns `(g, d)` with
/// `g·m·g⁻¹ = diag(d)`, eigenvalues ascending.
pub fn diagonalize(m: &ConstMat) -> Option<(ConstMat, Vec<Rat>)> {
    let eig = rational_eigenvalues(m)?;
    let n = m.n();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut d = Vec::new();
    for t in &eig {
        for v in m.eigenspace(t) {
            cols.push(v);
            d.push(t.clone());
        }
    }
    if cols.len() != n {
        return None;
    }
    let t = ConstMat::from_rows((0..n).map(|a| cols.iter().map(|c| c[a].clone()).collect()).collect());
    let g = t.inverse().ok()?;
    Some((g, d))
}
