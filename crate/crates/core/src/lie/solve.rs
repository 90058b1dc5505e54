use super::{linalg, ConstMat, Subalgebra};
use crate::error::{Error, Result};

/// Finds `Y` in `domain` with `[S, B + [Y, P]] = 0`, free coordinates set to zero.
pub fn solve_commutator(s: &ConstMat, p: &ConstMat, b: &ConstMat, domain: &Subalgebra) -> Result<ConstMat> {
    let a = domain.linear_system(|y| s.bracket(&y.bracket(p)));
    let rhs = (-&s.bracket(b)).to_vec();
    let y = linalg::solve(&a, &rhs, domain.dim()).ok_or_else(|| Error::Inconsistent("commutator equation".into()))?;
    Ok(domain.combine(&y))
}
