//! The main reduction loop and the slope it yields.

use num_traits::Zero;

use super::boalch::boalch_normalize;
use super::nilpotent::{invariants_in, nilpotent_in, shear, shear_parameters};
use super::semisimple::split_engine;
use crate::error::{Error, Result};
use crate::lie::{jordan_chevalley, CenterSplit, Factor, GaugeWord, Subalgebra};
use crate::parahoric::{Connection, Weight};
use crate::series::{lcm_i64, ratio, Rat, EXACT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormClass {
    Logarithmic,
    CartanIrregular,
    Boalch,
    /// Used by callers that record an engine error in place of a report.
    Failed,
}

impl FormClass {
    pub fn name(self) -> &'static str {
        match self {
            FormClass::Logarithmic => "logarithmic",
            FormClass::CartanIrregular => "cartan_irregular",
            FormClass::Boalch => "boalch",
            FormClass::Failed => "failed",
        }
    }
}

/// State of the loop at the start of an iteration or after a step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub ambient_dim: usize,
    /// Pole order of the part in the derived algebra of the ambient, 0 once logarithmic.
    pub order: i64,
    pub ramification: i64,
}

impl Snapshot {
    /// The quantity that has to decrease lexicographically between iterations.
    pub fn key(&self) -> (usize, Rat) {
        (self.ambient_dim, ratio(self.order, self.ramification))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub form_class: FormClass,
    pub final_form: Connection,
    pub ramification: i64,
    /// Starts with `Ramify(b)` when `b > 1`; replays on the input.
    pub certificate: GaugeWord,
    pub slope: Rat,
    pub effective_trunc: i64,
    pub progress_log: Vec<(String, Snapshot)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Defaults to `4·c·n²`.
    pub max_iterations: Option<usize>,
    /// Defaults to `2ⁿ·lcm(1..n)`.
    pub max_ramification: Option<i64>,
    /// Largest cocharacter entry tried by the Borel search, default 2.
    pub search_bound: Option<i64>,
}

pub fn default_ramification_cap(n: usize) -> i64 {
    let l = (1..=n as i64).fold(1, lcm_i64);
    l << n.min(40)
}

/// Pole order of the derived part, if any of it is known to be nonzero.
fn derived_order(a: &Connection, split: &CenterSplit) -> Option<i64> {
    a.mat
        .exponents()
        .into_iter()
        .find(|&k| !split.derived_part(&a.mat.coeff(k)).is_zero())
        .map(|k| -k)
}

fn order(a: &Connection) -> i64 {
    -a.mat.val()
}

pub fn full_reduce(w: &Weight, a: &Connection, budget: &Budget) -> Result<ReductionReport> {
    if a.is_zero() {
        return Err(Error::ZeroConnection);
    }
    if !w.is_integer() {
        return Err(Error::NotIntegerWeight);
    }
    let n = a.n();
    let z = Weight::zero(n);
    let mut cur = a.clone();
    let mut word = GaugeWord::identity();
    let shift = w.integral_shift()?;
    if shift.iter().any(|&s| s != 0) {
        let step = GaugeWord::single(Factor::Cochar(shift));
        cur = cur.gauge(&step)?;
        word.extend(step);
    }
    let c0 = order(&cur).max(1) as usize;
    let max_iter = budget.max_iterations.unwrap_or(4 * c0 * n * n);
    let max_ram = budget.max_ramification.unwrap_or_else(|| default_ramification_cap(n));
    let mut b_total = 1i64;
    let mut amb = Subalgebra::gl(n);
    let mut log: Vec<(String, Snapshot)> = Vec::new();
    let mut prev: Option<(usize, Rat)> = None;

    for iter in 0.. {
        if iter >= max_iter {
            return Err(Error::BudgetExceeded(format!("{max_iter} iterations")));
        }
        let split = CenterSplit::new(&amb);
        if split.derived().dim() == 0 {
            break;
        }
        let c = match derived_order(&cur, &split) {
            Some(c) => c,
            None if cur.trunc() >= -1 => break,
            None => return Err(Error::NoProgress("insufficient truncation: derived part unknown".into())),
        };
        if c <= 1 {
            break;
        }
        let snap = Snapshot { ambient_dim: amb.dim(), order: c, ramification: b_total };
        let key = snap.key();
        if prev.as_ref().is_some_and(|p| *p <= key) {
            return Err(Error::NoProgress(format!("invariant stalled at iteration {iter}")));
        }
        prev = Some(key);
        log.push(("iteration".into(), snap));

        let lead = split.derived_part(&cur.mat.coeff(-c));
        let (s, _) = jordan_chevalley(&lead);
        if !s.is_zero() {
            let (next, step) = split_engine(&z, &cur, &s, &amb, c)?;
            cur = next;
            word.extend(step);
            amb = amb.centralizer(std::slice::from_ref(&s))?;
            log.push(("split".into(), Snapshot { ambient_dim: amb.dim(), order: c, ramification: b_total }));
            continue;
        }
        let (next, step, triple, moved) = nilpotent_in(&z, &cur, &lead, &amb, c)?;
        cur = next;
        word.extend(step);
        amb = moved;
        let (lambda, upsilon) = invariants_in(&z, &cur, &triple, &amb, c);
        let window = Rat::from_integer((-c).into()) + &lambda * Rat::from_integer((c - 1).into());
        if cur.trunc() != EXACT && Rat::from_integer(cur.trunc().into()) < window {
            return Err(Error::NoProgress("insufficient truncation for the splitting window".into()));
        }
        let (k, nsh) = shear_parameters(c, &upsilon);
        if b_total * k > max_ram {
            return Err(Error::BudgetExceeded(format!("ramification {} above cap {max_ram}", b_total * k)));
        }
        word = word.pullback(k)?;
        b_total *= k;
        let (next, step) = shear(&cur, &triple, k, nsh)?;
        cur = next;
        word.extend(GaugeWord { factors: step.factors.into_iter().filter(|f| !matches!(f, Factor::Ramify(_))).collect() });
        log.push(("shear".into(), Snapshot { ambient_dim: amb.dim(), order: order(&cur), ramification: b_total }));
    }

    let c_final = order(&cur);
    let form_class = if c_final <= 1 {
        match boalch_normalize(&z, &cur) {
            Ok((b, step, _)) => {
                cur = b;
                word.extend(step);
                if cur.mat.shift(1).exponents().iter().any(|&k| k > 0) {
                    FormClass::Boalch
                } else {
                    FormClass::Logarithmic
                }
            }
            Err(_) => FormClass::Logarithmic,
        }
    } else {
        FormClass::CartanIrregular
    };
    let slope = if c_final <= 1 { Rat::zero() } else { ratio(c_final - 1, b_total) };
    let mut certificate = GaugeWord::identity();
    if b_total > 1 {
        certificate.push(Factor::Ramify(b_total));
    }
    certificate.extend(word);
    log.push(("final".into(), Snapshot { ambient_dim: amb.dim(), order: c_final.max(0), ramification: b_total }));
    Ok(ReductionReport {
        form_class,
        effective_trunc: cur.trunc(),
        final_form: cur,
        ramification: b_total,
        certificate,
        slope,
        progress_log: log,
    })
}

/// Highest slope: `(c′ − 1)/b` read off the canonical form, 0 when logarithmic.
pub fn slope(a: &Connection) -> Result<Rat> {
    Ok(full_reduce(&Weight::zero(a.n()), a, &Budget::default())?.slope)
}
