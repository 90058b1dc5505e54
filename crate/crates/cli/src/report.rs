//! Report documents and the serialized forms of matrices and certificates.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use parared_core::lie::{ConstMat, Factor, GaugeWord, MatSeries};
use parared_core::parahoric::Connection;
use parared_core::series::{fmt_rat, parse_rat, LaurentSeries, RamifiedContext, EXACT};

use crate::job::Mode;
use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    /// `None` for an exact (finite) series.
    pub trunc: Option<i64>,
    pub terms: Vec<(i64, String)>,
}

/// A matrix of series on the cover `z = ζ^cover`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub n: usize,
    pub cover: i64,
    pub entries: Vec<Vec<SeriesDoc>>,
}

pub type ConstDoc = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FactorDoc {
    Exp(MatrixDoc),
    Const(ConstDoc),
    Cochar(Vec<i64>),
    Shear { n: i64, h: ConstDoc },
    Ramify(i64),
}

/// Everything `verify` needs: input, certificate and claimed output.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ReplayDoc {
    pub mode: Mode,
    pub effective_truncation: i64,
    pub input: MatrixDoc,
    pub certificate: Vec<FactorDoc>,
    #[serde(rename = "final")]
    pub final_form: MatrixDoc,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub effective_truncation: Option<i64>,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replay: Option<ReplayDoc>,
}

pub fn print_report(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

fn parse(field: &str, s: &str) -> Result<parared_core::series::Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Parse(format!("{field}: {e}")))
}

pub fn const_doc(m: &ConstMat) -> ConstDoc {
    m.rows().iter().map(|r| r.iter().map(fmt_rat).collect()).collect()
}

pub fn const_from_doc(d: &ConstDoc) -> Result<ConstMat, CliError> {
    let n = d.len();
    if d.iter().any(|r| r.len() != n) {
        return Err(CliError::Parse("matrix is not square".into()));
    }
    let rows = d
        .iter()
        .enumerate()
        .map(|(a, r)| r.iter().enumerate().map(|(b, v)| parse(&format!("matrix[{a}][{b}]"), v)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(ConstMat::from_rows(rows))
}

pub fn matrix_doc(m: &MatSeries) -> MatrixDoc {
    let n = m.n();
    let entries = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let s = m.get(a, b);
                    SeriesDoc {
                        trunc: (s.trunc() != EXACT).then(|| s.trunc()),
                        terms: s.terms().map(|(k, c)| (k, fmt_rat(c))).collect(),
                    }
                })
                .collect()
        })
        .collect();
    MatrixDoc { n, cover: m.ctx.b, entries }
}

pub fn matrix_from_doc(d: &MatrixDoc) -> Result<MatSeries, CliError> {
    if d.entries.len() != d.n || d.entries.iter().any(|r| r.len() != d.n) {
        return Err(CliError::Parse(format!("entries: expected a {0}x{0} table", d.n)));
    }
    if d.cover < 1 {
        return Err(CliError::Parse("cover: must be positive".into()));
    }
    let mut out = Vec::with_capacity(d.n * d.n);
    for (a, row) in d.entries.iter().enumerate() {
        for (b, s) in row.iter().enumerate() {
            let field = format!("entries[{a}][{b}]");
            let terms = s.terms.iter().map(|(k, v)| Ok((*k, parse(&field, v)?))).collect::<Result<Vec<_>, CliError>>()?;
            out.push(LaurentSeries::new(terms, s.trunc.unwrap_or(EXACT)));
        }
    }
    Ok(MatSeries::from_entries(d.n, out).with_ctx(RamifiedContext::new(d.cover)))
}

pub fn word_doc(w: &GaugeWord) -> Vec<FactorDoc> {
    w.factors
        .iter()
        .map(|f| match f {
            Factor::Exp(x) => FactorDoc::Exp(matrix_doc(x)),
            Factor::Const(c) => FactorDoc::Const(const_doc(c)),
            Factor::Cochar(xi) => FactorDoc::Cochar(xi.clone()),
            Factor::Shear { n, h } => FactorDoc::Shear { n: *n, h: const_doc(h) },
            Factor::Ramify(b) => FactorDoc::Ramify(*b),
        })
        .collect()
}

pub fn word_from_doc(d: &[FactorDoc]) -> Result<GaugeWord, CliError> {
    let factors = d
        .iter()
        .map(|f| {
            Ok(match f {
                FactorDoc::Exp(x) => Factor::Exp(matrix_from_doc(x)?),
                FactorDoc::Const(c) => Factor::Const(const_from_doc(c)?),
                FactorDoc::Cochar(xi) => Factor::Cochar(xi.clone()),
                FactorDoc::Shear { n, h } => Factor::Shear { n: *n, h: const_from_doc(h)? },
                FactorDoc::Ramify(b) => Factor::Ramify(*b),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(GaugeWord { factors })
}

pub fn replay_doc(input: &Connection, word: &GaugeWord, fin: &Connection, t: i64) -> ReplayDoc {
    ReplayDoc {
        mode: if input.higgs { Mode::Higgs } else { Mode::Connection },
        effective_truncation: t,
        input: matrix_doc(&input.mat),
        certificate: word_doc(word),
        final_form: matrix_doc(&fin.mat),
    }
}

/// Outcome of replaying a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub replay_truncation: i64,
    pub effective_truncation: i64,
}

pub fn verify_replay(doc: &ReplayDoc) -> Result<Verification, CliError> {
    let mat = matrix_from_doc(&doc.input)?;
    let input = match doc.mode {
        Mode::Connection => Connection::new(mat),
        Mode::Higgs => Connection::higgs(mat),
    };
    let word = word_from_doc(&doc.certificate)?;
    let claimed = matrix_from_doc(&doc.final_form)?;
    let t = doc.effective_truncation;
    let got = input.gauge(&word).map_err(CliError::Engine)?;
    let ok = got.trunc() >= t && claimed.trunc() >= t && got.mat.ctx == claimed.ctx && got.mat.agrees_below(&claimed, t);
    Ok(Verification { ok, replay_truncation: got.trunc(), effective_truncation: t })
}

/// Accepts a full report or a bare replay document.
pub fn parse_replay(text: &str) -> Result<ReplayDoc, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let inner = match v.get("replay") {
        Some(r) if v.get("tool").is_some() => r.clone(),
        _ => v,
    };
    if inner.is_null() {
        return Err(CliError::Parse("replay: the report carries no certificate".into()));
    }
    serde_json::from_value(inner).map_err(|e| CliError::Parse(format!("replay: {e}")))
}
