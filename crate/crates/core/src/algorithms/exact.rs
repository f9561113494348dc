use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`exact_gamma2`].
pub const EXACT_LIMIT: usize = 24;

/// Every vertex outside `set` has at least two neighbors inside it.
pub fn is_2_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    (0..g.n()).all(|v| inside[v] || g.neighbors(v).iter().filter(|&&u| inside[u]).count() >= 2)
}

/// Exact 2-domination number by increasing-cardinality search.
///
/// A branch is cut when some vertex that can no longer be selected cannot
/// collect two selected neighbors from the vertices still available.
pub fn exact_gamma2(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    if n > limit.min(64) {
        return Err(Error::TooLarge {
            n,
            limit: limit.min(64),
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let search = Search { n, masks: &masks };
    Ok((0..=n).find(|&k| search.extend(0, 0, k)).unwrap_or(n))
}

struct Search<'a> {
    n: usize,
    masks: &'a [u64],
}

impl Search<'_> {
    fn suffix(&self, idx: usize) -> u64 {
        if idx >= 64 {
            0
        } else {
            (!0u64 << idx) & self.full()
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn extend(&self, idx: usize, chosen: u64, left: usize) -> bool {
        if left == 0 {
            return (0..self.n)
                .all(|v| chosen >> v & 1 == 1 || (self.masks[v] & chosen).count_ones() >= 2);
        }
        if self.n - idx < left {
            return false;
        }
        let available = chosen | self.suffix(idx);
        for x in 0..idx {
            if chosen >> x & 1 == 1 {
                continue;
            }
            let have = (self.masks[x] & chosen).count_ones() as usize;
            if (self.masks[x] & available).count_ones() < 2 || 2usize.saturating_sub(have) > left {
                return false;
            }
        }
        self.extend(idx + 1, chosen | 1 << idx, left - 1) || self.extend(idx + 1, chosen, left)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| {
                let set: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
                is_2_dominating_set(g, &set)
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn footnote_values() {
        assert_eq!(
            exact_gamma2(&Graph::named("K4").unwrap(), EXACT_LIMIT).unwrap(),
            2
        );
        assert_eq!(
            exact_gamma2(&Graph::named("K4xK2").unwrap(), EXACT_LIMIT).unwrap(),
            4
        );
    }

    #[test]
    fn c5_by_enumeration() {
        let c5 = Graph::named("C5").unwrap();
        assert_eq!(brute_force(&c5), 3);
        assert_eq!(exact_gamma2(&c5, EXACT_LIMIT).unwrap(), 3);
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..25 {
            let n = 6 + (seed as usize % 7);
            let g = Graph::random_min_degree(n, 2, 0.2, seed).unwrap();
            assert_eq!(
                exact_gamma2(&g, EXACT_LIMIT).unwrap(),
                brute_force(&g),
                "seed {seed}"
            );
        }
        assert_eq!(exact_gamma2(&Graph::empty(3), EXACT_LIMIT).unwrap(), 3);
        assert_eq!(exact_gamma2(&Graph::empty(0), EXACT_LIMIT).unwrap(), 0);
    }

    #[test]
    fn respects_limit() {
        let g = Graph::complete(25);
        assert_eq!(
            exact_gamma2(&g, EXACT_LIMIT),
            Err(Error::TooLarge { n: 25, limit: 24 })
        );
        assert_eq!(exact_gamma2(&g, 30).unwrap(), 2);
    }
}
