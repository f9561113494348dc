//! Seeded experiment sweeps over random regular graphs.
//!
//! Instances are drawn up front from a single seed, solved with
//! [`map_collect`], and reported in `(d, n, seed)` order, so the output does
//! not depend on the execution mode.

use std::fmt::{self, Write as _};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::{
    certify_labeled, is_2_dominating_set, partition_swap, rule_greedy, weight_greedy_with,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::solve_min_a;
use crate::par::{map_collect, Execution};
use crate::rational::{frac, int, to_decimal, Rational};
use crate::weights::CoefficientSet;

/// Column order of [`to_csv`].
pub const CSV_HEADER: &str = "d,n,seed,algorithm,size,bound,ok";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Rule,
    Weight,
    Swap,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Rule, Algorithm::Weight, Algorithm::Swap];
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Rule => "rule",
            Algorithm::Weight => "weight",
            Algorithm::Swap => "swap",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub degrees: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub algorithms: Vec<Algorithm>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            degrees: vec![6, 7, 8, 9],
            trials: 10,
            seed: 0,
            n_min: 20,
            n_max: 200,
            algorithms: Algorithm::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub d: usize,
    pub n: usize,
    pub seed: u64,
}

impl Instance {
    pub fn graph(&self) -> Result<Graph> {
        Graph::random_regular(self.n, self.d, self.seed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: Instance,
    pub algorithm: Algorithm,
    pub size: usize,
    /// `(a/s) n` for the greedy algorithms, `n/2` for the partition.
    pub bound: Rational,
    pub ok: bool,
}

/// Draws `trials` instances per degree; `n` is uniform in
/// `[n_min, n_max]`, bumped by one when `n d` is odd.
pub fn instances(cfg: &BenchConfig) -> Result<Vec<Instance>> {
    if cfg.n_min > cfg.n_max {
        return Err(Error::InvalidParameters(format!(
            "n range {}..{} is empty",
            cfg.n_min, cfg.n_max
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.degrees.len() * cfg.trials);
    for &d in &cfg.degrees {
        if d + 1 > cfg.n_max {
            return Err(Error::InvalidParameters(format!(
                "d = {d} does not fit n <= {}",
                cfg.n_max
            )));
        }
        for _ in 0..cfg.trials {
            let mut n = rng.random_range(cfg.n_min.max(d + 1)..=cfg.n_max);
            if (n * d) % 2 == 1 {
                n = if n < cfg.n_max { n + 1 } else { n - 1 };
            }
            out.push(Instance {
                d,
                n,
                seed: rng.next_u64(),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Coefficients used for degree `d`: the built-in set for `6..=9`, the LP
/// optimum otherwise.
pub fn coefficients_for(d: usize) -> Result<CoefficientSet> {
    match CoefficientSet::builtin_table2(d) {
        Ok(c) => Ok(c),
        Err(_) => solve_min_a(d)?.coefficients(),
    }
}

fn run_one(inst: &Instance, algorithm: Algorithm, c: &CoefficientSet) -> Result<BenchRow> {
    let g = inst.graph()?;
    let greedy_bound = c.ratio() * int(inst.n as i64);
    let (size, bound, ok) = match algorithm {
        Algorithm::Rule => {
            let run = rule_greedy(&g, inst.d)?;
            let cert = certify_labeled(&g, c, &run.labeled_batches())?;
            (
                run.dominating_set.len(),
                greedy_bound,
                cert.valid_2dom && cert.bound_ok,
            )
        }
        Algorithm::Weight => {
            // instances already run in parallel; keep the inner loop flat
            let (set, cert) = weight_greedy_with(&g, c, Execution::Sequential)?;
            (set.len(), greedy_bound, cert.is_sound())
        }
        Algorithm::Swap => {
            let (p, q) = partition_swap(&g)?;
            let small = p.len().min(q.len());
            let ok = is_2_dominating_set(&g, &p)
                && is_2_dominating_set(&g, &q)
                && 2 * small <= inst.n + 1;
            (small, frac(inst.n as i64, 2), ok)
        }
    };
    Ok(BenchRow {
        instance: *inst,
        algorithm,
        size,
        bound,
        ok,
    })
}

/// Runs every configured algorithm on every instance.
pub fn run_bench(cfg: &BenchConfig, exec: Execution) -> Result<Vec<BenchRow>> {
    let insts = instances(cfg)?;
    let mut coeffs = Vec::new();
    for &d in &cfg.degrees {
        if !coeffs.iter().any(|(e, _)| *e == d) {
            coeffs.push((d, coefficients_for(d)?));
        }
    }
    let jobs: Vec<(Instance, Algorithm)> = insts
        .iter()
        .flat_map(|i| cfg.algorithms.iter().map(move |&a| (*i, a)))
        .collect();
    let results = map_collect(exec, &jobs, |(inst, alg)| {
        let c = &coeffs
            .iter()
            .find(|(d, _)| *d == inst.d)
            .expect("coefficients per degree")
            .1;
        run_one(inst, *alg, c)
    });
    results.into_iter().collect()
}

/// CSV with [`CSV_HEADER`]; bounds are printed with three decimals.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.instance.d,
            r.instance.n,
            r.instance.seed,
            r.algorithm,
            r.size,
            to_decimal(&r.bound, 3),
            r.ok
        );
    }
    out
}
