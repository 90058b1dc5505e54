use super::{linalg, ConstMat, Subalgebra};
use crate::error::{Error, Result};
use crate::series::rat;

/// `(P, Q, H)` with `[H,P] = −2P`, `[H,Q] = 2Q`, `[P,Q] = −H`.
///
/// `P` plays the role of the lower-triangular generator of sl2, so for
/// `P = E21` in gl2 the triple is `(E21, E12, diag(1,−1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub p: ConstMat,
    pub q: ConstMat,
    pub h: ConstMat,
}

impl Sl2Triple {
    pub fn relations_hold(&self) -> bool {
        self.h.bracket(&self.p) == self.p.scale(&rat(-2))
            && self.h.bracket(&self.q) == self.q.scale(&rat(2))
            && self.p.bracket(&self.q) == -&self.h
    }

    pub fn conj(&self, g: &ConstMat, ginv: &ConstMat) -> Sl2Triple {
        Sl2Triple { p: self.p.conj(g, ginv), q: self.q.conj(g, ginv), h: self.h.conj(g, ginv) }
    }
}

/// Completes a nonzero nilpotent `P` to an sl2 triple inside `amb`.
///
/// Textbook route with `e = P`: solve `[e,[e,z]] = −2e`, put `h = [e,z]`,
/// then solve `[e,f] = h`, `[h,f] = −2f`. The stored `H` is `−h`.
pub fn jacobson_morozov(p: &ConstMat, amb: &Subalgebra) -> Result<Sl2Triple> {
    if p.is_zero() || !p.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if !amb.contains(p) {
        return Err(Error::NotInAmbient);
    }
    let dim = amb.dim();
    let a = amb.linear_system(|z| p.bracket(&p.bracket(z)));
    let rhs = p.scale(&rat(-2)).to_vec();
    let z = linalg::solve(&a, &rhs, dim).ok_or_else(|| Error::Inconsistent("no neutral element for P".into()))?;
    let h = p.bracket(&amb.combine(&z));

    let mut a = amb.linear_system(|f| p.bracket(f));
    a.extend(amb.linear_system(|f| &h.bracket(f) + &f.scale(&rat(2))));
    let mut rhs = h.to_vec();
    rhs.extend(ConstMat::zero(p.n()).to_vec());
    let f = linalg::solve(&a, &rhs, dim).ok_or_else(|| Error::Inconsistent("no nilnegative partner for P".into()))?;
    let t = Sl2Triple { p: p.clone(), q: amb.combine(&f), h: -&h };
    debug_assert!(t.relations_hold());
    Ok(t)
}
