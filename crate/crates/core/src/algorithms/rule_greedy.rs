use std::collections::BTreeSet;

use serde::Serialize;

use super::require_min_degree;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::state::{Color, ColoredState};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleStep {
    pub rule: u8,
    pub batch: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleRun {
    pub dominating_set: Vec<usize>,
    pub steps: Vec<RuleStep>,
}

impl RuleRun {
    pub fn trace(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.rule).collect()
    }

    pub fn batches(&self) -> Vec<Vec<usize>> {
        self.steps.iter().map(|s| s.batch.clone()).collect()
    }

    pub fn labeled_batches(&self) -> Vec<(String, Vec<usize>)> {
        self.steps
            .iter()
            .map(|s| (s.rule.to_string(), s.batch.clone()))
            .collect()
    }
}

/// Applies the first applicable instruction of the 18-rule list until the
/// selection is 2-dominating.
pub fn rule_greedy(g: &Graph, d: usize) -> Result<RuleRun> {
    require_min_degree(g, d)?;
    let mut state = ColoredState::new(g);
    let mut steps = Vec::new();
    while !state.is_2_dominating() {
        let (rule, batch) = next_rule(&state, d).ok_or(Error::NoRuleApplicable)?;
        state.select_all(&batch)?;
        steps.push(RuleStep { rule, batch });
    }
    Ok(RuleRun {
        dominating_set: state.selected_sorted(),
        steps,
    })
}

fn lowest(set: &BTreeSet<usize>) -> Option<usize> {
    set.iter().next().copied()
}

/// The first applicable rule and the vertices it selects; `None` when the
/// state is already 2-dominating.
pub fn next_rule(state: &ColoredState<'_>, d: usize) -> Option<(u8, Vec<usize>)> {
    if state.is_2_dominating() {
        return None;
    }
    let g = state.graph();
    let di = d as i64;
    let class = |c: Color, i: i64| -> Option<usize> {
        if i < 0 {
            None
        } else {
            lowest(state.class(c, i as usize))
        }
    };
    let in_class = |v: usize, c: Color, i: usize| state.color(v) == c && state.wy_degree(v) == i;

    // 1, 2: max{i : W_i ∪ Y_{i+1} ≠ ∅} >= d-1
    if let Some(k) = state.max_white_yellow_level().filter(|&k| k >= di - 1) {
        if let Some(v) = class(Color::White, k) {
            return Some((1, vec![v]));
        }
        return class(Color::Yellow, k + 1).map(|v| (2, vec![v]));
    }
    // 3: max{i : B_i ≠ ∅} >= d+1
    if let Some(k) = state.max_class(Color::Blue).filter(|&k| k > d) {
        return class(Color::Blue, k as i64).map(|v| (3, vec![v]));
    }
    // 4-6: 2 <= max{i : W_i ∪ Y_{i+1} ∪ B_{i+2} ≠ ∅} <= d-2
    let level = [
        state.max_class(Color::White).map(|i| i as i64),
        state.max_class(Color::Yellow).map(|i| i as i64 - 1),
        state.max_class(Color::Blue).map(|i| i as i64 - 2),
    ]
    .into_iter()
    .flatten()
    .max();
    if let Some(k) = level.filter(|&k| (2..=di - 2).contains(&k)) {
        if let Some(v) = class(Color::White, k) {
            return Some((4, vec![v]));
        }
        if let Some(v) = class(Color::Yellow, k + 1) {
            return Some((5, vec![v]));
        }
        return class(Color::Blue, k + 2).map(|v| (6, vec![v]));
    }

    let whites = state.members(Color::White);
    let is_white = |v: usize| state.color(v) == Color::White;

    // 7: a white vertex with a yellow neighbor
    if let Some(&v) = whites.iter().find(|&&v| {
        g.neighbors(v)
            .iter()
            .any(|&u| state.color(u) == Color::Yellow)
    }) {
        return Some((7, vec![v]));
    }
    // 8
    if let Some(v) = class(Color::Yellow, 2) {
        return Some((8, vec![v]));
    }
    // 9, 14: adjacent whites v1, v2 and u in N(v1) ∩ B_j not adjacent to v2
    let split_pair = |j: usize| -> Option<Vec<usize>> {
        whites.iter().find_map(|&v1| {
            g.neighbors(v1)
                .iter()
                .filter(|&&v2| is_white(v2))
                .find_map(|&v2| {
                    g.neighbors(v1)
                        .iter()
                        .find(|&&u| in_class(u, Color::Blue, j) && !g.has_edge(u, v2))
                        .map(|&u| vec![v2, u])
                })
        })
    };
    if let Some(batch) = split_pair(3) {
        return Some((9, batch));
    }
    // 10, 11: v in W_1 by the number of its B_3 neighbors
    for &v in state.class(Color::White, 1) {
        let b3: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| in_class(u, Color::Blue, 3))
            .collect();
        if b3.len() == 1 {
            return Some((10, vec![v, b3[0]]));
        }
    }
    for &v in state.class(Color::White, 1) {
        let b3: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| in_class(u, Color::Blue, 3))
            .take(2)
            .collect();
        if b3.len() == 2 {
            return Some((11, b3));
        }
    }
    // 12, 13
    if let Some(v) = class(Color::Blue, 3) {
        return Some((12, vec![v]));
    }
    if let Some(v) = class(Color::Yellow, 1) {
        return Some((13, vec![v]));
    }
    if let Some(batch) = split_pair(2) {
        return Some((14, batch));
    }
    // 15: two adjacent whites
    if let Some(pair) = whites.iter().find_map(|&v1| {
        g.neighbors(v1)
            .iter()
            .find(|&&v2| v2 > v1 && is_white(v2))
            .map(|&v2| vec![v1, v2])
    }) {
        return Some((15, pair));
    }
    // 16: a B_2 vertex with a yellow neighbor
    if let Some(&v) = state.class(Color::Blue, 2).iter().find(|&&v| {
        g.neighbors(v)
            .iter()
            .any(|&u| state.color(u) == Color::Yellow)
    }) {
        return Some((16, vec![v]));
    }
    // 17
    if let Some(&v) = state.members(Color::Yellow).first() {
        return Some((17, vec![v]));
    }
    // 18: every white vertex
    (!whites.is_empty()).then_some((18, whites))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{exact_gamma2, EXACT_LIMIT};

    #[test]
    fn k7_takes_two() {
        let g = Graph::complete(7);
        let run = rule_greedy(&g, 6).unwrap();
        assert_eq!(run.dominating_set.len(), 2);
        assert_eq!(run.trace(), vec![1, 5]);
        assert_eq!(exact_gamma2(&g, EXACT_LIMIT).unwrap(), 2);
    }

    #[test]
    fn k8_starts_with_rule_1() {
        let g = Graph::complete(8);
        let state = ColoredState::new(&g);
        assert_eq!(state.max_white_yellow_level(), Some(7));
        let run = rule_greedy(&g, 6).unwrap();
        assert_eq!(
            run.steps[0],
            RuleStep {
                rule: 1,
                batch: vec![0]
            }
        );
    }

    #[test]
    fn preconditions() {
        let k7 = Graph::complete(7);
        assert!(matches!(
            rule_greedy(&k7, 7),
            Err(Error::MinDegreeTooSmall {
                found: 6,
                required: 7
            })
        ));
        assert!(rule_greedy(&Graph::named("K4xK2").unwrap(), 4).is_err());
    }

    #[test]
    fn deterministic_and_dominating() {
        let g = Graph::random_regular(60, 6, 3).unwrap();
        let first = rule_greedy(&g, 6).unwrap();
        assert_eq!(first, rule_greedy(&g, 6).unwrap());
        assert!(crate::algorithms::is_2_dominating_set(
            &g,
            &first.dominating_set
        ));
    }

    #[test]
    fn pair_rules_fire_on_crafted_state() {
        // two adjacent whites 0,1; vertex 2 blue with WY-degree 3 adjacent to 0 only
        let g = Graph::from_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (2, 3),
                (2, 4),
                (5, 2),
                (6, 2),
                (5, 3),
                (6, 4),
                (7, 3),
                (8, 4),
            ],
        )
        .unwrap();
        let mut s = ColoredState::new(&g);
        s.select_all(&[5, 6]).unwrap();
        assert_eq!((s.color(2), s.wy_degree(2)), (Color::Blue, 3));
        // rule 7 comes first: 3 and 4 are yellow and have white neighbors 7, 8
        assert_eq!(next_rule(&s, 6), Some((7, vec![7])));
    }

    fn crafted(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn first_rule(g: &Graph, reds: &[usize]) -> Option<(u8, Vec<usize>)> {
        let mut s = ColoredState::new(g);
        s.select_all(reds).unwrap();
        next_rule(&s, 6)
    }

    #[test]
    fn rule_9_splits_a_white_pair() {
        // whites 0-1 adjacent; 2 in B_3 next to 0 but not 1
        let g = crafted(7, &[(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6)]);
        assert_eq!(first_rule(&g, &[5, 6]), Some((9, vec![1, 2])));
    }

    #[test]
    fn rule_10_takes_the_white_and_its_single_blue() {
        let g = crafted(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 5), (2, 6)]);
        assert_eq!(first_rule(&g, &[5, 6]), Some((10, vec![0, 2])));
    }

    #[test]
    fn rule_11_takes_two_blue_neighbors() {
        let g = crafted(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 2),
                (4, 3),
                (5, 2),
                (5, 3),
                (6, 2),
                (6, 3),
            ],
        );
        assert_eq!(first_rule(&g, &[5, 6]), Some((11, vec![2, 3])));
    }

    #[test]
    fn rule_15_takes_adjacent_whites_together() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(first_rule(&g, &[]), Some((15, vec![0, 1])));
    }
}
