//! The colored graph: White/Yellow/Blue/Red partition induced by a partial
//! selection `D`, with WY-degrees and per-degree class buckets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Yellow,
    Blue,
    Red,
}

impl Color {
    fn from_red_neighbors(in_d: bool, red_neighbors: usize) -> Self {
        match (in_d, red_neighbors) {
            (true, _) => Color::Red,
            (false, 0) => Color::White,
            (false, 1) => Color::Yellow,
            (false, _) => Color::Blue,
        }
    }

    /// Color after one more neighbor is selected.
    fn promoted(self) -> Self {
        match self {
            Color::White => Color::Yellow,
            Color::Yellow | Color::Blue => Color::Blue,
            Color::Red => Color::Red,
        }
    }

    pub fn is_white_or_yellow(self) -> bool {
        matches!(self, Color::White | Color::Yellow)
    }

    fn bucket_slot(self) -> Option<usize> {
        match self {
            Color::White => Some(0),
            Color::Yellow => Some(1),
            Color::Blue => Some(2),
            Color::Red => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StateType {
    Type1,
    Type2,
}

/// A vertex's class before and after a prospective selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transition {
    pub vertex: usize,
    pub from: (Color, usize),
    pub to: (Color, usize),
}

#[derive(Clone, Debug)]
pub struct ColoredState<'g> {
    graph: &'g Graph,
    in_d: Vec<bool>,
    color: Vec<Color>,
    wy: Vec<usize>,
    red_neighbors: Vec<usize>,
    // buckets[slot][i]: vertices of that color with WY-degree i
    buckets: [Vec<BTreeSet<usize>>; 3],
    selected: Vec<usize>,
}

impl<'g> ColoredState<'g> {
    /// Empty selection: every vertex white with WY-degree equal to its degree.
    pub fn new(graph: &'g Graph) -> Self {
        Self::from_selection(graph, &vec![false; graph.n()])
    }

    /// Recomputes everything from scratch for the given membership vector.
    pub fn from_selection(graph: &'g Graph, in_d: &[bool]) -> Self {
        let n = graph.n();
        assert_eq!(in_d.len(), n);
        let red_neighbors: Vec<usize> = (0..n)
            .map(|v| graph.neighbors(v).iter().filter(|&&u| in_d[u]).count())
            .collect();
        let color: Vec<Color> = (0..n)
            .map(|v| Color::from_red_neighbors(in_d[v], red_neighbors[v]))
            .collect();
        let wy: Vec<usize> = (0..n)
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| color[u].is_white_or_yellow())
                    .count()
            })
            .collect();
        let width = graph.max_degree() + 1;
        let mut buckets: [Vec<BTreeSet<usize>>; 3] =
            std::array::from_fn(|_| vec![BTreeSet::new(); width]);
        for v in 0..n {
            if let Some(slot) = color[v].bucket_slot() {
                buckets[slot][wy[v]].insert(v);
            }
        }
        Self {
            graph,
            in_d: in_d.to_vec(),
            color,
            wy,
            red_neighbors,
            buckets,
            selected: (0..n).filter(|&v| in_d[v]).collect(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn color(&self, v: usize) -> Color {
        self.color[v]
    }

    pub fn wy_degree(&self, v: usize) -> usize {
        self.wy[v]
    }

    pub fn in_d(&self, v: usize) -> bool {
        self.in_d[v]
    }

    /// Selected vertices in selection order.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    pub fn selected_sorted(&self) -> Vec<usize> {
        let mut d = self.selected.clone();
        d.sort_unstable();
        d
    }

    /// The class `X_i` for a non-red color `X`.
    pub fn class(&self, color: Color, i: usize) -> &BTreeSet<usize> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        match color.bucket_slot() {
            Some(slot) => self.buckets[slot].get(i).unwrap_or(&EMPTY),
            None => &EMPTY,
        }
    }

    /// Largest `i` with a non-empty `X_i`.
    pub fn max_class(&self, color: Color) -> Option<usize> {
        let slot = color.bucket_slot()?;
        self.buckets[slot].iter().rposition(|b| !b.is_empty())
    }

    pub fn color_count(&self, color: Color) -> usize {
        match color.bucket_slot() {
            Some(slot) => self.buckets[slot].iter().map(BTreeSet::len).sum(),
            None => self.selected.len(),
        }
    }

    /// All vertices of a non-red color, ascending.
    pub fn members(&self, color: Color) -> Vec<usize> {
        let mut out: Vec<usize> = match color.bucket_slot() {
            Some(slot) => self.buckets[slot].iter().flatten().copied().collect(),
            None => self.selected.clone(),
        };
        out.sort_unstable();
        out
    }

    /// `max{i : W_i ∪ Y_{i+1} ≠ ∅}`; `None` when `W ∪ Y` is empty.
    /// A vertex of `Y_0` contributes `-1`.
    pub fn max_white_yellow_level(&self) -> Option<i64> {
        let w = self.max_class(Color::White).map(|i| i as i64);
        let y = self.max_class(Color::Yellow).map(|i| i as i64 - 1);
        w.max(y)
    }

    pub fn is_2_dominating(&self) -> bool {
        self.max_class(Color::White).is_none() && self.max_class(Color::Yellow).is_none()
    }

    /// Type 1 iff some white vertex has WY-degree `>= d+1` or some yellow
    /// vertex has WY-degree `>= d+2`.
    pub fn classify_type(&self, d: usize) -> StateType {
        match self.max_white_yellow_level() {
            Some(k) if k > d as i64 => StateType::Type1,
            _ => StateType::Type2,
        }
    }

    /// Class changes caused by selecting `v`, without mutating the state.
    /// Only vertices whose color or WY-degree change are reported.
    pub fn transitions(&self, v: usize) -> Vec<Transition> {
        const SELF: u8 = 0;
        const NEIGHBOR: u8 = 1;
        const DROP: u8 = 2;
        let g = self.graph;
        let mut items: Vec<(usize, u8)> = Vec::with_capacity(g.degree(v) * 4);
        items.push((v, SELF));
        items.extend(g.neighbors(v).iter().map(|&u| (u, NEIGHBOR)));
        if self.color[v].is_white_or_yellow() {
            items.extend(g.neighbors(v).iter().map(|&u| (u, DROP)));
        }
        for &u in g.neighbors(v) {
            if self.color[u] == Color::Yellow {
                items.extend(g.neighbors(u).iter().map(|&x| (x, DROP)));
            }
        }
        items.sort_unstable();

        let mut out = Vec::new();
        let mut idx = 0;
        while idx < items.len() {
            let x = items[idx].0;
            let (mut is_self, mut is_neighbor, mut drops) = (false, false, 0);
            while idx < items.len() && items[idx].0 == x {
                match items[idx].1 {
                    SELF => is_self = true,
                    NEIGHBOR => is_neighbor = true,
                    _ => drops += 1,
                }
                idx += 1;
            }
            let from = (self.color[x], self.wy[x]);
            let new_color = if is_self {
                Color::Red
            } else if is_neighbor {
                self.color[x].promoted()
            } else {
                self.color[x]
            };
            let to = (new_color, self.wy[x] - drops);
            if to != from {
                out.push(Transition {
                    vertex: x,
                    from,
                    to,
                });
            }
        }
        out
    }

    /// Puts `v` into `D` and updates colors, WY-degrees and buckets.
    pub fn select(&mut self, v: usize) -> Result<()> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        if self.in_d[v] {
            return Err(Error::AlreadySelected(v));
        }
        for t in self.transitions(v) {
            let x = t.vertex;
            if let Some(slot) = t.from.0.bucket_slot() {
                self.buckets[slot][t.from.1].remove(&x);
            }
            if let Some(slot) = t.to.0.bucket_slot() {
                self.buckets[slot][t.to.1].insert(x);
            }
            self.color[x] = t.to.0;
            self.wy[x] = t.to.1;
        }
        for &u in self.graph.neighbors(v) {
            self.red_neighbors[u] += 1;
        }
        self.in_d[v] = true;
        self.selected.push(v);
        Ok(())
    }

    pub fn select_all(&mut self, batch: &[usize]) -> Result<()> {
        batch.iter().try_for_each(|&v| self.select(v))
    }

    /// True when the incrementally maintained data equals a recomputation.
    pub fn matches_recomputation(&self) -> bool {
        let fresh = Self::from_selection(self.graph, &self.in_d);
        fresh.color == self.color
            && fresh.wy == self.wy
            && fresh.red_neighbors == self.red_neighbors
            && fresh.buckets == self.buckets
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            version: 1,
            n: self.graph.n(),
            dominating: self.selected_sorted(),
            vertices: (0..self.graph.n())
                .map(|v| VertexSnapshot {
                    color: self.color[v],
                    wy_degree: self.wy[v],
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexSnapshot {
    pub color: Color,
    pub wy_degree: usize,
}

/// JSON-serializable view of a colored state.
#[derive(Clone, Debug, Serialize)]
pub struct Snapshot {
    pub version: u32,
    pub n: usize,
    #[serde(rename = "D")]
    pub dominating: Vec<usize>,
    pub vertices: Vec<VertexSnapshot>,
}
