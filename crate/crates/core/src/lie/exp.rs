use super::MatSeries;
use crate::error::{Error, Result};
use crate::series::{rat, Rat, EXACT};

/// Sums `Σ coef(k)·X^k` for `k ≥ 1` until the terms vanish below `limit`.
fn power_series(x: &MatSeries, prec: i64, coef: impl Fn(u32) -> Rat) -> Result<MatSeries> {
    let n = x.n();
    let v = x.val();
    let mut acc = MatSeries::zero(n).with_ctx(x.ctx);
    if x.is_zero() {
        return Ok(acc.truncate(x.trunc()));
    }
    if v < 0 {
        // negative exponents: only an exactly nilpotent argument terminates
        let mut p = x.clone();
        for k in 1..=n as u32 {
            acc = &acc + &p.scale(&coef(k));
            p = &p * x;
            if p.is_zero() {
                return Ok(acc);
            }
        }
        return Err(Error::NonConvergent("argument with a pole is not nilpotent".into()));
    }
    if !x.coeff(0).is_nilpotent() {
        return Err(Error::NonConvergent("constant part is not nilpotent".into()));
    }
    let limit = if x.is_exact() { prec } else { x.trunc().min(prec) };
    if limit == EXACT {
        let mut p = x.clone();
        for k in 1..=n as u32 {
            acc = &acc + &p.scale(&coef(k));
            p = &p * x;
            if p.is_zero() {
                return Ok(acc);
            }
        }
        return Err(Error::InfiniteExpansion);
    }
    let x = x.truncate(limit);
    let mut p = x.clone();
    let mut k = 1u32;
    while !p.is_zero() {
        acc = &acc + &p.scale(&coef(k));
        p = (&p * &x).truncate(limit);
        k += 1;
    }
    Ok(acc.truncate(limit))
}

/// `exp(X)`; exact arguments that do not terminate are cut at `prec`.
pub fn exp_to(x: &MatSeries, prec: i64) -> Result<MatSeries> {
    let tail = power_series(x, prec, |k| {
        let f: Rat = (1..=k as i64).map(rat).product();
        f.recip()
    })?;
    Ok(&MatSeries::identity(x.n()).with_ctx(x.ctx) + &tail)
}

/// Truncated exponential at the argument's own precision.
pub fn exp_trunc(x: &MatSeries) -> Result<MatSeries> {
    exp_to(x, EXACT)
}

/// `log(U)` for `U = I + M` with `M` topologically nilpotent.
pub fn log_unipotent(u: &MatSeries) -> Result<MatSeries> {
    let m = u - &MatSeries::identity(u.n()).with_ctx(u.ctx);
    power_series(&m, EXACT, |k| {
        let r = crate::series::ratio(1, k as i64);
        if k % 2 == 1 {
            r
        } else {
            -r
        }
    })
}
