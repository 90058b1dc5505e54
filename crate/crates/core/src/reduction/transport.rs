//! Nilpotency of the leading datum under loop-group transport.

use super::common::leading;
use crate::error::{Error, Result};
use crate::lie::{birkhoff_factor, MatSeries};
use crate::parahoric::{theta_order, Connection, Weight};

/// Factors `g`, transports `a` by the factorization and reports whether the
/// new grade-0 leading datum at the old order is still nilpotent.
pub fn nilpotency_transport_check(w: &Weight, a: &Connection, g: &MatSeries) -> Result<bool> {
    if !w.is_scalar() {
        return Err(Error::InvalidInput("transport needs a weight fixed by the Weyl group".into()));
    }
    let c = theta_order(w, a)?;
    let (_, chi) = leading(w, a, c);
    if !chi.is_nilpotent() {
        return Err(Error::NotNilpotentLeading);
    }
    let word = birkhoff_factor(g, &w.theta)?.as_word();
    let b = a.gauge(&word)?;
    if b.is_zero() {
        return Ok(true);
    }
    if theta_order(w, &b)? > c {
        return Err(Error::InvalidInput("transport raises the order".into()));
    }
    let (_, chi) = leading(w, &b, c);
    Ok(chi.is_nilpotent())
}
