//! Subcommand dispatch: job text in, report out.

use serde_json::{json, Value};

use parared_core::parahoric::{residue, residue0, theta_order, theta_rep, Connection, Weight};
use parared_core::reduction::{
    borel_reduce, full_reduce, is_borel_shaped, is_regular, relative_regularity_check, slope, Budget,
};
use parared_core::series::fmt_rat;

use crate::job::{parse_job, JobSpec};
use crate::report::{const_doc, matrix_doc, parse_replay, replay_doc, verify_replay, Report};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Reduce,
    Slope,
    Regular,
    Relreg,
    Borel,
    Order,
    Residue,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Reduce => "reduce",
            Command::Slope => "slope",
            Command::Regular => "regular",
            Command::Relreg => "relreg",
            Command::Borel => "borel",
            Command::Order => "order",
            Command::Residue => "residue",
            Command::Verify => "verify",
        }
    }
}

/// Command-line overrides; each one wins over the job's own options.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub truncation: Option<i64>,
    pub max_ramification: Option<i64>,
    pub budget_iterations: Option<usize>,
    pub search_bound: Option<i64>,
    pub seed: Option<u64>,
    pub higgs: bool,
}

pub struct Outcome {
    pub report: Report,
    /// 0, or 1 when `verify` rejects the certificate.
    pub status: i32,
}

struct Prepared {
    weight: Weight,
    input: Connection,
    budget: Budget,
    truncation: i64,
}

fn prepare(job: &JobSpec, o: &Overrides) -> Result<Prepared, CliError> {
    let truncation = o.truncation.unwrap_or(job.truncation);
    if truncation < 4 {
        return Err(CliError::Parse(format!("truncation: {truncation} is below the minimum 4")));
    }
    if o.max_ramification.is_some_and(|b| b < 1) {
        return Err(CliError::Parse("max-ramification: must be positive".into()));
    }
    let budget = Budget {
        max_iterations: o.budget_iterations.or(job.options.budget_iterations),
        max_ramification: o.max_ramification.or(job.options.max_ramification),
        search_bound: o.search_bound.or(job.options.search_bound),
    };
    Ok(Prepared { weight: job.weight_value()?, input: job.connection_value(truncation, o.higgs)?, budget, truncation })
}

fn report(cmd: Command, o: &Overrides, t: Option<i64>, result: Value) -> Report {
    Report {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: cmd.name().into(),
        seed: o.seed,
        effective_truncation: t,
        result,
        replay: None,
    }
}

/// Runs `cmd` on a job document (or, for `verify`, a report or replay document).
pub fn run(cmd: Command, text: &str, o: &Overrides) -> Result<Outcome, CliError> {
    if cmd == Command::Verify {
        let doc = parse_replay(text)?;
        let v = verify_replay(&doc)?;
        let result = json!({
            "ok": v.ok,
            "replay_truncation": v.replay_truncation,
        });
        let r = report(cmd, o, Some(v.effective_truncation), result);
        return Ok(Outcome { report: r, status: if v.ok { 0 } else { 1 } });
    }
    let job = parse_job(text)?;
    let p = prepare(&job, o)?;
    let r = match cmd {
        Command::Reduce => {
            let rep = full_reduce(&p.weight, &p.input, &p.budget)?;
            let log: Vec<Value> = rep
                .progress_log
                .iter()
                .map(|(step, s)| json!({ "step": step, "ambient_dim": s.ambient_dim, "order": s.order, "ramification": s.ramification }))
                .collect();
            let result = json!({
                "form_class": rep.form_class.name(),
                "slope": fmt_rat(&rep.slope),
                "ramification": rep.ramification,
                "progress_log": log,
            });
            let mut r = report(cmd, o, Some(rep.effective_trunc), result);
            r.replay = Some(replay_doc(&p.input, &rep.certificate, &rep.final_form, rep.effective_trunc));
            r
        }
        Command::Slope => {
            let s = slope(&p.input)?;
            report(cmd, o, Some(p.truncation), json!({ "slope": fmt_rat(&s) }))
        }
        Command::Regular => {
            let v = is_regular(&p.input)?;
            let (word, weight) = match (&v.witness_gauge, &v.witness_weight) {
                (Some(g), Some(w)) => (g.clone(), Some(w.theta.iter().map(fmt_rat).collect::<Vec<_>>())),
                _ => (full_reduce(&Weight::zero(p.input.n()), &p.input, &p.budget)?.certificate, None),
            };
            let fin = p.input.gauge(&word)?;
            let t = fin.trunc();
            let mut r = report(cmd, o, Some(t), json!({ "regular": v.regular, "witness_weight": weight }));
            r.replay = Some(replay_doc(&p.input, &word, &fin, t));
            r
        }
        Command::Relreg => {
            let rr = relative_regularity_check(&p.input)?;
            let t = rr.final_form.trunc();
            let result = json!({ "verdict": rr.verdict, "template": matrix_doc(&rr.template) });
            let mut r = report(cmd, o, Some(t), result);
            r.replay = Some(replay_doc(&rr.input, &rr.certificate, &rr.final_form, t));
            r
        }
        Command::Borel => {
            let (b, word) = borel_reduce(&p.weight, &p.input, &p.budget)?;
            let t = b.trunc();
            let mut r = report(cmd, o, Some(t), json!({ "borel_shaped": is_borel_shaped(&b) }));
            r.replay = Some(replay_doc(&p.input, &word, &b, t));
            r
        }
        Command::Order => {
            let c = theta_order(&p.weight, &p.input)?;
            let rep = theta_rep(&p.weight, &p.input);
            let terms: Vec<Value> = rep
                .terms
                .iter()
                .map(|t| json!({ "r": t.r, "level": fmt_rat(&t.l), "i": t.i, "x": const_doc(&t.x) }))
                .collect();
            report(cmd, o, Some(p.truncation), json!({ "order": c, "terms": terms }))
        }
        Command::Residue => {
            let c = theta_order(&p.weight, &p.input)?;
            let x = p.input.mat.shift(c);
            let res = residue(&p.weight, &x)?;
            let res0 = residue0(&p.weight, &x)?;
            let result = json!({ "order": c, "residue": matrix_doc(&res), "residue0": const_doc(&res0) });
            report(cmd, o, Some(p.truncation), result)
        }
        Command::Verify => unreachable!("handled above"),
    };
    Ok(Outcome { report: r, status: 0 })
}
