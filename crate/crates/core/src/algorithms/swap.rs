use crate::error::{Error, Result};
use crate::graph::Graph;

/// Splits `V(G)` into two disjoint 2-dominating sets (needs `δ(G) >= 3`).
///
/// Starts from even/odd indices and moves the lowest-indexed vertex with
/// more neighbors on its own side than across, until none is left. Every
/// move increases the cut, so the loop terminates.
pub fn partition_swap(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let found = g.min_degree()?;
    if found < 3 {
        return Err(Error::MinDegreeTooSmall { found, required: 3 });
    }
    let n = g.n();
    let mut side: Vec<bool> = (0..n).map(|v| v % 2 == 1).collect();
    let mut same: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| side[u] == side[v])
                .count()
        })
        .collect();
    let unhappy = |v: usize, same: &[usize]| 2 * same[v] > g.degree(v);
    while let Some(v) = (0..n).find(|&v| unhappy(v, &same)) {
        side[v] = !side[v];
        same[v] = g.degree(v) - same[v];
        for &u in g.neighbors(v) {
            if side[u] == side[v] {
                same[u] += 1;
            } else {
                same[u] -= 1;
            }
        }
    }
    let part = |s: bool| (0..n).filter(|&v| side[v] == s).collect();
    Ok((part(false), part(true)))
}
