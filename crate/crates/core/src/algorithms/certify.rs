use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, serde_fraction, to_fraction_string, Rational};
use crate::state::{Color, ColoredState};
use crate::weights::{total_weight, CoefficientSet};

/// Aggregate check for a batch consisting of every white vertex:
/// `x a + z_2 b_2 + z_1 b_1 >= x s` with `x = |W_0|`, `z_i = |B_i|` taken
/// before the batch, plus the edge count `d x <= 2 z_2 + z_1`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SweepCheck {
    pub x: usize,
    pub z2: usize,
    pub z1: usize,
    pub weight_ok: bool,
    pub edge_count_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub batch: Vec<usize>,
    pub rule: String,
    #[serde(with = "serde_fraction")]
    pub weight_before: Rational,
    #[serde(with = "serde_fraction")]
    pub weight_after: Rational,
    #[serde(with = "serde_fraction")]
    pub drop: Rational,
    /// `drop >= |batch| s`
    pub drop_ok: bool,
    /// Incremental state equals a from-scratch recomputation after the batch.
    pub state_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunCertificate {
    pub version: u32,
    pub n: usize,
    pub d: usize,
    #[serde(with = "serde_fraction")]
    pub s: Rational,
    #[serde(with = "serde_fraction")]
    pub a: Rational,
    pub steps: Vec<Step>,
    pub final_d: Vec<usize>,
    pub valid_2dom: bool,
    /// `(a/s) n`
    #[serde(with = "serde_fraction")]
    pub bound: Rational,
    /// `|D| <= (a/s) n`
    pub bound_ok: bool,
}

impl RunCertificate {
    pub fn size(&self) -> usize {
        self.final_d.len()
    }

    pub fn all_drops_ok(&self) -> bool {
        self.steps.iter().all(|s| s.drop_ok)
    }

    pub fn all_consistent(&self) -> bool {
        self.steps.iter().all(|s| s.state_consistent)
    }

    pub fn weights_monotone(&self) -> bool {
        self.steps.iter().all(|s| s.weight_after <= s.weight_before)
            && self
                .steps
                .windows(2)
                .all(|w| w[0].weight_after == w[1].weight_before)
    }

    /// Everything the run is supposed to guarantee.
    pub fn is_sound(&self) -> bool {
        self.valid_2dom && self.bound_ok && self.all_drops_ok() && self.all_consistent()
    }

    /// One line per step: `step t: rule R, batch [..], drop num/den`.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        for (t, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "step {}: rule {}, batch {:?}, drop {}",
                t + 1,
                s.rule,
                s.batch,
                to_fraction_string(&s.drop)
            );
        }
        out
    }
}

/// Replays `batches` on a fresh state and certifies every weight drop.
pub fn certify_run(
    g: &Graph,
    c: &CoefficientSet,
    batches: &[Vec<usize>],
) -> Result<RunCertificate> {
    let labeled: Vec<(String, Vec<usize>)> = batches
        .iter()
        .map(|b| ("replay".to_string(), b.clone()))
        .collect();
    certify_labeled(g, c, &labeled)
}

pub fn certify_labeled(
    g: &Graph,
    c: &CoefficientSet,
    batches: &[(String, Vec<usize>)],
) -> Result<RunCertificate> {
    let mut state = ColoredState::new(g);
    let mut steps = Vec::with_capacity(batches.len());
    let mut weight = total_weight(&state, c);
    for (idx, (rule, batch)) in batches.iter().enumerate() {
        let replay_err = |msg: String| Error::Replay { batch: idx, msg };
        if batch.is_empty() {
            return Err(replay_err("empty batch".into()));
        }
        let sweep = sweep_check(&state, batch, c);
        for &v in batch {
            state.select(v).map_err(|e| replay_err(e.to_string()))?;
        }
        let after = total_weight(&state, c);
        let drop = &weight - &after;
        let required = c.s() * int(batch.len() as i64);
        steps.push(Step {
            batch: batch.clone(),
            rule: rule.clone(),
            drop_ok: drop >= required,
            weight_before: std::mem::replace(&mut weight, after.clone()),
            weight_after: after,
            drop,
            state_consistent: state.matches_recomputation(),
            sweep,
        });
    }
    let final_d = state.selected_sorted();
    let n = g.n();
    let bound = c.ratio() * int(n as i64);
    Ok(RunCertificate {
        version: 1,
        n,
        d: c.d(),
        s: c.s().clone(),
        a: c.a().clone(),
        steps,
        bound_ok: int(final_d.len() as i64) <= bound,
        valid_2dom: state.is_2_dominating(),
        final_d,
        bound,
    })
}

fn sweep_check(
    state: &ColoredState<'_>,
    batch: &[usize],
    c: &CoefficientSet,
) -> Option<SweepCheck> {
    let whites = state.members(Color::White);
    let mut sorted = batch.to_vec();
    sorted.sort_unstable();
    if whites.is_empty() || sorted != whites {
        return None;
    }
    let x = state.class(Color::White, 0).len();
    let z2 = state.class(Color::Blue, 2).len();
    let z1 = state.class(Color::Blue, 1).len();
    let big = |k: usize| int(k as i64);
    let lhs = big(x) * c.a() + big(z2) * c.b(2) + big(z1) * c.b(1);
    Some(SweepCheck {
        x,
        z2,
        z1,
        weight_ok: lhs >= big(x) * c.s(),
        edge_count_ok: c.d() * x <= 2 * z2 + z1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn empty_replay_on_full_selection() {
        // D = V from the start: nothing left to select, weight 0
        let g = Graph::complete(7);
        let c = CoefficientSet::builtin_table2(6).unwrap();
        let all: Vec<usize> = (0..7).collect();
        let cert = certify_run(&g, &c, &[all]).unwrap();
        assert!(cert.valid_2dom);
        assert!(cert.steps[0].weight_after.is_zero());
        let cert = certify_run(&Graph::empty(0), &c, &[]).unwrap();
        assert!(cert.valid_2dom && cert.bound_ok && cert.steps.is_empty());
    }

    #[test]
    fn bad_batch_is_flagged() {
        let g = Graph::complete(7);
        let c = CoefficientSet::builtin_table2(6).unwrap();
        // after 0 and 1 everything is blue with WY-degree 0: selecting a blue
        // vertex frees nothing
        let cert = certify_run(&g, &c, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(cert.steps[0].drop_ok && cert.steps[1].drop_ok);
        assert!(!cert.steps[2].drop_ok);
        assert!(cert.steps[2].drop.is_zero());
        assert!(cert.valid_2dom);
        assert!(cert
            .trace()
            .contains("step 3: rule replay, batch [2], drop 0/1"));
    }

    #[test]
    fn replay_errors() {
        let g = Graph::complete(7);
        let c = CoefficientSet::builtin_table2(6).unwrap();
        assert!(matches!(
            certify_run(&g, &c, &[vec![0], vec![0]]),
            Err(Error::Replay { batch: 1, .. })
        ));
        assert!(certify_run(&g, &c, &[vec![9]]).is_err());
        assert!(certify_run(&g, &c, &[vec![]]).is_err());
    }
}
