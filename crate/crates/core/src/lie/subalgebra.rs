use num_traits::Zero;

use super::{linalg, ConstMat};
use crate::error::{Error, Result};
use crate::series::Rat;

/// A Lie subalgebra of gl_n given by a basis of constant matrices.
///
/// The basis is kept in reduced row echelon form with respect to the
/// row-major coordinates, so two spans are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    n: usize,
    basis: Vec<ConstMat>,
}

impl Subalgebra {
    pub fn gl(n: usize) -> Self {
        let basis = (0..n).flat_map(|a| (0..n).map(move |b| ConstMat::unit(n, a, b))).collect();
        Subalgebra { n, basis }
    }

    pub fn diagonal(n: usize) -> Self {
        Subalgebra { n, basis: (0..n).map(|a| ConstMat::unit(n, a, a)).collect() }
    }

    /// Span of `mats` (not checked for closure).
    pub fn span(n: usize, mats: &[ConstMat]) -> Self {
        let vs: Vec<Vec<Rat>> = mats.iter().map(ConstMat::to_vec).collect();
        let basis = linalg::span_basis(&vs, n * n).into_iter().map(|v| ConstMat::from_vec(n, v)).collect();
        Subalgebra { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ConstMat] {
        &self.basis
    }

    pub fn combine(&self, coords: &[Rat]) -> ConstMat {
        let mut out = ConstMat::zero(self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = &out + &b.scale(c);
            }
        }
        out
    }

    /// Columns of the linear map `coords ↦ vec(f(Σ x_j B_j))`, as a dense matrix.
    pub fn linear_system(&self, f: impl Fn(&ConstMat) -> ConstMat) -> Vec<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = self.basis.iter().map(|b| f(b).to_vec()).collect();
        let m = self.n * self.n;
        (0..m).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    }

    pub fn coords(&self, x: &ConstMat) -> Option<Vec<Rat>> {
        if x.n() != self.n {
            return None;
        }
        let a = self.linear_system(|b| b.clone());
        linalg::solve(&a, x.as_slice(), self.dim())
    }

    pub fn contains(&self, x: &ConstMat) -> bool {
        self.coords(x).is_some()
    }

    pub fn is_closed(&self) -> bool {
        self.basis.iter().all(|x| self.basis.iter().all(|y| self.contains(&x.bracket(y))))
    }

    pub fn is_abelian(&self) -> bool {
        self.basis.iter().all(|x| self.basis.iter().all(|y| x.bracket(y).is_zero()))
    }

    /// Simultaneous centralizer of `elems` inside `self`.
    pub fn centralizer(&self, elems: &[ConstMat]) -> Result<Subalgebra> {
        if elems.iter().any(|e| !self.contains(e)) {
            return Err(Error::NotInAmbient);
        }
        let mut rows = Vec::new();
        for e in elems {
            rows.extend(self.linear_system(|b| b.bracket(e)));
        }
        let kernel = linalg::nullspace(&rows, self.dim());
        let mats: Vec<ConstMat> = kernel.iter().map(|v| self.combine(v)).collect();
        Ok(Subalgebra::span(self.n, &mats))
    }

    pub fn center(&self) -> Subalgebra {
        self.centralizer(&self.basis.clone()).expect("basis lies in its own span")
    }

    pub fn derived(&self) -> Subalgebra {
        let mut mats = Vec::new();
        for (i, x) in self.basis.iter().enumerate() {
            for y in &self.basis[i + 1..] {
                mats.push(x.bracket(y));
            }
        }
        Subalgebra::span(self.n, &mats)
    }

    /// Elements of `self` whose support lies in `allowed` positions.
    pub fn restrict_support(&self, allowed: impl Fn(usize, usize) -> bool) -> Subalgebra {
        let rows: Vec<Vec<Rat>> = self
            .linear_system(|b| b.clone())
            .into_iter()
            .enumerate()
            .filter(|(r, _)| !allowed(r / self.n, r % self.n))
            .map(|(_, row)| row)
            .collect();
        let kernel = linalg::nullspace(&rows, self.dim());
        let mats: Vec<ConstMat> = kernel.iter().map(|v| self.combine(v)).collect();
        Subalgebra::span(self.n, &mats)
    }

    /// Abelian and equal to its own centralizer in gl_n.
    pub fn is_cartan(&self) -> bool {
        if !self.is_abelian() {
            return false;
        }
        let c = Subalgebra::gl(self.n).centralizer(&self.basis).expect("gl_n contains everything");
        c.dim() == self.dim()
    }

    /// Conjugate subalgebra `g · self · g⁻¹`.
    pub fn conj(&self, g: &ConstMat, ginv: &ConstMat) -> Subalgebra {
        let mats: Vec<ConstMat> = self.basis.iter().map(|b| b.conj(g, ginv)).collect();
        Subalgebra::span(self.n, &mats)
    }
}

/// Splits elements of a reductive subalgebra along center ⊕ derived part.
#[derive(Clone, Debug)]
pub struct CenterSplit {
    center: Subalgebra,
    derived: Subalgebra,
}

impl CenterSplit {
    pub fn new(amb: &Subalgebra) -> Self {
        CenterSplit { center: amb.center(), derived: amb.derived() }
    }

    pub fn center(&self) -> &Subalgebra {
        &self.center
    }

    pub fn derived(&self) -> &Subalgebra {
        &self.derived
    }

    /// Returns `(central, derived)` parts; `None` if `x` is outside the sum.
    pub fn split(&self, x: &ConstMat) -> Option<(ConstMat, ConstMat)> {
        let n = x.n();
        let all: Vec<ConstMat> = self.center.basis().iter().chain(self.derived.basis()).cloned().collect();
        let k = self.center.dim();
        let cols: Vec<Vec<Rat>> = all.iter().map(ConstMat::to_vec).collect();
        let a: Vec<Vec<Rat>> = (0..n * n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let sol = linalg::solve(&a, x.as_slice(), all.len())?;
        let c = self.center.combine(&sol[..k]);
        let d = self.derived.combine(&sol[k..]);
        Some((c, d))
    }

    pub fn derived_part(&self, x: &ConstMat) -> ConstMat {
        self.split(x).map(|(_, d)| d).unwrap_or_else(|| x.clone())
    }
}
