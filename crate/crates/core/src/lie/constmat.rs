use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linalg;
use crate::error::{Error, Result};
use crate::series::{fmt_rat, rat, Rat};

/// Square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstMat {
    n: usize,
    data: Vec<Rat>,
}

impl ConstMat {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        ConstMat { n, data: vec![Rat::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Elementary matrix `E_ab` (0-based).
    pub fn unit(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zero(n);
        m.data[a * n + b] = Rat::one();
        m
    }

    pub fn diag(d: &[Rat]) -> Self {
        let n = d.len();
        let mut m = Self::zero(n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn diag_i64(d: &[i64]) -> Self {
        Self::diag(&d.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "matrix must be square");
        ConstMat { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Inverse of [`to_vec`](Self::to_vec).
    pub fn from_vec(n: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), n * n);
        ConstMat { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> &Rat {
        &self.data[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: Rat) {
        self.data[a * self.n + b] = v;
    }

    pub fn to_vec(&self) -> Vec<Rat> {
        self.data.clone()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || self.get(a, b).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.get(a, b).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Rat {
        self.diagonal().into_iter().sum()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        ConstMat { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                m.data[b * n + a] = self.data[a * n + b].clone();
            }
        }
        m
    }

    pub fn bracket(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n as u32).is_zero()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.get(a, b) * &v[b]).sum())
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|a| {
                let mut r: Vec<Rat> = (0..n).map(|b| self.get(a, b).clone()).collect();
                r.extend((0..n).map(|b| if a == b { Rat::one() } else { Rat::zero() }));
                r
            })
            .collect();
        let piv = linalg::rref(&mut aug, n);
        if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::NotInvertible);
        }
        Ok(ConstMat::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows(), self.n)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Conjugation `g X g⁻¹`.
    pub fn conj(&self, g: &Self, ginv: &Self) -> Self {
        &(g * self) * ginv
    }

    /// Basis of the null space of `self - t·I`, as column vectors.
    pub fn eigenspace(&self, t: &Rat) -> Vec<Vec<Rat>> {
        let shifted = self - &Self::identity(self.n).scale(t);
        linalg::nullspace(&shifted.rows(), self.n)
    }
}

impl Add for &ConstMat {
    type Output = ConstMat;
    fn add(self, o: &ConstMat) -> ConstMat {
        assert_eq!(self.n, o.n, "dimension mismatch");
        ConstMat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ConstMat {
    type Output = ConstMat;
    fn sub(self, o: &ConstMat) -> ConstMat {
        assert_eq!(self.n, o.n, "dimension mismatch");
        ConstMat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ConstMat {
    type Output = ConstMat;
    fn neg(self) -> ConstMat {
        ConstMat { n: self.n, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &ConstMat {
    type Output = ConstMat;
    fn mul(self, o: &ConstMat) -> ConstMat {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut out = ConstMat::zero(n);
        for a in 0..n {
            for k in 0..n {
                let x = &self.data[a * n + k];
                if x.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let y = &o.data[k * n + b];
                    if !y.is_zero() {
                        out.data[a * n + b] += x * y;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ConstMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(fmt_rat).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ConstMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
