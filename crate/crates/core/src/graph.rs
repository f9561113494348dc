//! Simple undirected graphs over dense vertex indices `0..n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Restarts allowed when pairing stubs for a random regular graph.
pub const REGULAR_RETRY_CAP: usize = 10_000;

/// Immutable simple graph. Neighbor lists are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate and reversed edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Checks simplicity, symmetry and index ranges.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(u, nb)| {
            nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&v| v < n && v != u && self.has_edge(v, u))
        })
    }

    /// Parses the edge-list text format.
    ///
    /// Each data line holds two vertex indices. Lines starting with `#` are
    /// comments. An optional `n <count>` header (first data line) declares
    /// the vertex count so trailing isolated vertices survive.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_data = false;
        let mut max_index: Option<usize> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.first() == Some(&"n") {
                if seen_data || declared.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "`n <count>` header must be the first data line".into(),
                    });
                }
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `n <count>`".into(),
                    });
                }
                declared = Some(parse_index(tokens[1], line_no)?);
                seen_data = true;
                continue;
            }
            seen_data = true;
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two vertex indices, found {} tokens", tokens.len()),
                });
            }
            let u = parse_index(tokens[0], line_no)?;
            let v = parse_index(tokens[1], line_no)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            max_index = Some(max_index.map_or(u.max(v), |m| m.max(u).max(v)));
            edges.push((u, v));
        }

        let implied = max_index.map_or(0, |m| m + 1);
        let n = match declared {
            Some(count) if count < implied => {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!(
                        "header declares {count} vertices but index {} appears",
                        implied - 1
                    ),
                })
            }
            Some(count) => count,
            None => implied,
        };
        Self::from_edges(n, edges)
    }

    /// Serializes with an `n <count>` header and lexicographically sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Standard constructions: `K<n>`, `C<n>`, `P<n>` and `K4xK2`.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownGraph(name.to_string());
        if name == "K4xK2" {
            let mut edges = Vec::new();
            for side in [0, 4] {
                for i in 0..4 {
                    for j in i + 1..4 {
                        edges.push((side + i, side + j));
                    }
                }
            }
            edges.extend((0..4).map(|i| (i, i + 4)));
            return Self::from_edges(8, edges);
        }
        let (kind, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            "K" => Ok(Self::complete(n)),
            "C" if n >= 3 => Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            "P" if n >= 1 => Self::from_edges(n, (1..n).map(|i| (i - 1, i))),
            "C" | "P" => Err(Error::InvalidParameters(format!(
                "{name}: too few vertices"
            ))),
            _ => Err(unknown()),
        }
    }

    pub fn complete(n: usize) -> Self {
        Self {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    /// Random `d`-regular graph on `n` vertices, deterministic in `seed`.
    ///
    /// Stubs are paired one pair at a time; pairs that would create a loop
    /// or a repeated edge are rejected and redrawn. When the remaining stubs
    /// admit no valid pair the whole pairing restarts.
    pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Self> {
        if (n * d) % 2 == 1 {
            return Err(Error::InvalidParameters(format!("n*d = {} is odd", n * d)));
        }
        if d >= n && !(n == 0 && d == 0) {
            return Err(Error::InvalidParameters(format!(
                "degree {d} needs more than {n} vertices"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..REGULAR_RETRY_CAP {
            if let Some(g) = try_pairing(n, d, &mut rng) {
                return Ok(g);
            }
        }
        Err(Error::RetryCapExceeded(REGULAR_RETRY_CAP))
    }

    /// Random graph with `min_degree >= d`: a random `d`-regular graph plus
    /// each remaining pair independently with probability `extra`.
    pub fn random_min_degree(n: usize, d: usize, extra: f64, seed: u64) -> Result<Self> {
        let base_n = if (n * d) % 2 == 1 { n - 1 } else { n };
        let base = Self::random_regular(base_n, d, seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut edges: Vec<(usize, usize)> = base.edges().collect();
        if base_n < n {
            // odd n*d: attach the spare vertex to d distinct vertices
            let mut others: Vec<usize> = (0..base_n).collect();
            others.shuffle(&mut rng);
            edges.extend(others.into_iter().take(d).map(|u| (u, base_n)));
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(extra) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(n, edges)
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{token}` is not a non-negative integer"),
    })
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    while !stubs.is_empty() {
        let mut paired = false;
        for _ in 0..64 {
            let i = rng.random_range(0..stubs.len());
            let j = rng.random_range(0..stubs.len());
            let (u, v) = (stubs[i], stubs[j]);
            if i != j && u != v && !adj[u].contains(&v) {
                adj[u].insert(v);
                adj[v].insert(u);
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                paired = true;
                break;
            }
        }
        if !paired {
            let has_valid = stubs.iter().enumerate().any(|(i, &u)| {
                stubs[i + 1..]
                    .iter()
                    .any(|&v| u != v && !adj[u].contains(&v))
            });
            if !has_valid {
                return None;
            }
        }
    }
    Some(Graph {
        adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}
