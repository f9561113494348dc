use num_bigint::BigInt;

use super::certify::{certify_labeled, RunCertificate};
use super::require_min_degree;
use crate::conditions::check_conditions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{map_collect, Execution};
use crate::state::{Color, ColoredState};
use crate::weights::{CoefficientSet, WeightTable};

/// Weight-greedy selection with the default execution mode.
pub fn weight_greedy(g: &Graph, c: &CoefficientSet) -> Result<(Vec<usize>, RunCertificate)> {
    weight_greedy_with(g, c, Execution::default())
}

/// Repeatedly takes the vertex with the largest exact weight drop. When no
/// single vertex drops the weight by `s`, the best pair of vertices within
/// distance two is taken if it drops it by `2s`; failing that, all white
/// vertices are taken at once.
pub fn weight_greedy_with(
    g: &Graph,
    c: &CoefficientSet,
    exec: Execution,
) -> Result<(Vec<usize>, RunCertificate)> {
    require_min_degree(g, c.d())?;
    let report = check_conditions(c);
    if !report.overall {
        let failing: Vec<String> = report
            .failing_families()
            .iter()
            .map(|n| format!("({n})"))
            .collect();
        return Err(Error::ConditionsFailed(failing.join(", ")));
    }

    let mut state = ColoredState::new(g);
    let table = WeightTable::for_state(c, &state);
    let one_s = table.s_scaled().clone();
    let two_s = &one_s * 2;
    let mut batches: Vec<(String, Vec<usize>)> = Vec::new();

    while !state.is_2_dominating() {
        let (best, best_drop) = best_single(&state, &table, exec);
        let (label, batch) = if best_drop >= one_s {
            ("greedy", vec![best])
        } else if let Some(pair) =
            best_pair(&state, &table, exec).filter(|(_, drop)| *drop >= two_s)
        {
            ("greedy-pair", pair.0.to_vec())
        } else {
            let whites = state.members(Color::White);
            if whites.is_empty() {
                // unreachable when the conditions hold; the certificate
                // records the failed drop
                ("greedy-fallback", vec![best])
            } else {
                ("sweep", whites)
            }
        };
        state.select_all(&batch)?;
        batches.push((label.to_string(), batch));
    }

    let cert = certify_labeled(g, c, &batches)?;
    Ok((state.selected_sorted(), cert))
}

fn best_single(state: &ColoredState<'_>, table: &WeightTable, exec: Execution) -> (usize, BigInt) {
    let ctx = table.context(state);
    let free: Vec<usize> = (0..state.graph().n()).filter(|&v| !state.in_d(v)).collect();
    let drops = map_collect(exec, &free, |&v| table.drop_of(state, &ctx, v));
    pick_max(free.into_iter().zip(drops)).expect("a non-dominated state has free vertices")
}

/// Largest combined drop over pairs `u < v` at distance at most two.
fn best_pair(
    state: &ColoredState<'_>,
    table: &WeightTable,
    exec: Execution,
) -> Option<([usize; 2], BigInt)> {
    let g = state.graph();
    let ctx = table.context(state);
    let free: Vec<usize> = (0..g.n()).filter(|&v| !state.in_d(v)).collect();
    let per_first = map_collect(exec, &free, |&u| {
        let first = table.drop_of(state, &ctx, u);
        let mut after = state.clone();
        after.select(u).ok()?;
        let ctx2 = table.context(&after);
        let mut partners: Vec<usize> = g
            .neighbors(u)
            .iter()
            .flat_map(|&w| std::iter::once(w).chain(g.neighbors(w).iter().copied()))
            .filter(|&v| v > u && !after.in_d(v))
            .collect();
        partners.sort_unstable();
        partners.dedup();
        let scored = partners
            .into_iter()
            .map(|v| (v, &first + table.drop_of(&after, &ctx2, v)));
        pick_max(scored).map(|(v, drop)| ([u, v], drop))
    });
    pick_max(per_first.into_iter().flatten())
}

/// Maximum by drop; the earliest item wins ties.
fn pick_max<K>(items: impl IntoIterator<Item = (K, BigInt)>) -> Option<(K, BigInt)> {
    items.into_iter().fold(None, |best, (k, drop)| match best {
        Some((_, ref b)) if *b >= drop => best,
        _ => Some((k, drop)),
    })
}
