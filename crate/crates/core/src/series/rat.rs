//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q`; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`. A zero denominator is an error rather than a panic.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("malformed rational {s:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn floor_i64(x: &Rat) -> i64 {
    x.floor().to_integer().to_i64().expect("floor out of i64 range")
}

pub fn ceil_i64(x: &Rat) -> i64 {
    x.ceil().to_integer().to_i64().expect("ceil out of i64 range")
}

/// Integer value of `x` when it is one and fits.
pub fn as_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_int(x: &Rat) -> bool {
    x.is_integer()
}

/// Smallest positive `d` with `d * x` integral.
pub fn denom_i64(x: &Rat) -> i64 {
    x.denom().to_i64().expect("denominator out of i64 range")
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}
