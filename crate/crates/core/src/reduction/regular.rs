//! Regularity and relative regularity.

use num_traits::Zero;

use super::common::working_copy;
use super::full::{full_reduce, Budget};
use super::semisimple::reduce_to_cartan;
use crate::error::{Error, Result};
use crate::lie::{diagonalize, jordan_chevalley, ConstMat, Factor, GaugeWord, MatSeries, Subalgebra};
use crate::parahoric::{filtration_member, Connection, Kind, Weight};
use crate::series::{rat, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// Weight on the cover named by the gauge's ramification.
    pub witness_weight: Option<Weight>,
    pub witness_gauge: Option<GaugeWord>,
}

/// Replays `g` on `a` and checks that the result is `p̂_Θ·dz/z` below the replay precision.
pub fn witness_holds(a: &Connection, w: &Weight, g: &GaugeWord) -> Result<bool> {
    let b = a.gauge(g)?;
    let x = b.mat.shift(1);
    Ok(filtration_member(w, &x, Kind::Parahoric))
}

pub fn is_regular(a: &Connection) -> Result<RegularityVerdict> {
    if a.higgs {
        return Err(Error::InvalidInput("regularity is a property of connections".into()));
    }
    let report = full_reduce(&Weight::zero(a.n()), a, &Budget::default())?;
    if !report.slope.is_zero() {
        return Ok(RegularityVerdict { regular: false, witness_weight: None, witness_gauge: None });
    }
    let w = Weight::zero(a.n());
    let finite = working_copy(a, (-a.mat.val()).max(1));
    if !witness_holds(&finite, &w, &report.certificate)? {
        return Err(Error::InvalidWord("regularity witness does not replay to a logarithmic form".into()));
    }
    Ok(RegularityVerdict { regular: true, witness_weight: Some(w), witness_gauge: Some(report.certificate) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeRegularity {
    pub verdict: bool,
    pub weight: Weight,
    /// `Q̂ = Σ_{r=−c}^{−2} Q z^r` with `Q = diag(1,…,n)`; zero when not needed.
    pub template: MatSeries,
    /// Replays on `input`.
    pub certificate: GaugeWord,
    /// `Q̂ + A`, or `A` itself in the regular case.
    pub input: Connection,
    pub final_form: Connection,
}

pub fn relative_regularity_check(a: &Connection) -> Result<RelativeRegularity> {
    if a.is_zero() {
        return Err(Error::ZeroConnection);
    }
    let n = a.n();
    let w = Weight::zero(n);
    let finite = working_copy(a, (-a.mat.val()).max(1));
    let plain = |verdict: bool, certificate: GaugeWord, final_form: Connection| RelativeRegularity {
        verdict,
        weight: w.clone(),
        template: MatSeries::zero(n),
        certificate,
        input: finite.clone(),
        final_form,
    };
    let v = is_regular(a)?;
    if v.regular {
        let g = v.witness_gauge.unwrap_or_default();
        let b = finite.gauge(&g)?;
        return Ok(plain(true, g, b));
    }
    let c = -a.mat.val();
    if (-c..=-2).any(|r| !a.mat.coeff(r).is_nilpotent()) {
        return Ok(plain(false, GaugeWord::identity(), finite.clone()));
    }
    let q = ConstMat::diag(&(1..=n as i64).map(rat).collect::<Vec<Rat>>());
    let mut template = MatSeries::zero(n);
    for r in -c..=-2 {
        template = &template + &MatSeries::monomial(&q, r);
    }
    let input = working_copy(&a.with_mat(&template + &a.mat), c);
    let (s, _) = jordan_chevalley(&input.mat.coeff(-c));
    let refuse = |input: &Connection| RelativeRegularity {
        verdict: false,
        weight: w.clone(),
        template: template.clone(),
        certificate: GaugeWord::identity(),
        input: input.clone(),
        final_form: input.clone(),
    };
    if !Subalgebra::gl(n).centralizer(std::slice::from_ref(&s))?.is_cartan() {
        return Ok(refuse(&input));
    }
    let (_, mut word) = match reduce_to_cartan(&w, &input, std::slice::from_ref(&s)) {
        Ok(r) => r,
        Err(Error::Inconsistent(_)) | Err(Error::LeviSplitFailed(_)) => return Ok(refuse(&input)),
        Err(e) => return Err(e),
    };
    match diagonalize(&s) {
        Some((g, d)) if d == q.diagonal() => {
            if g != ConstMat::identity(n) {
                word.push(Factor::Const(g));
            }
        }
        _ => return Ok(refuse(&input)),
    }
    let fin = input.gauge(&word)?;
    let t = fin.trunc();
    let shaped = (-c..t).all(|r| {
        let m = fin.mat.coeff(r);
        if r <= -2 {
            m == q
        } else {
            m.is_diagonal()
        }
    });
    Ok(RelativeRegularity { verdict: shaped, weight: w, template, certificate: word, input, final_form: fin })
}
