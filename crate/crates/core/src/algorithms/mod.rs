//! Selection algorithms for 2-dominating sets and their certification.

mod certify;
mod exact;
mod rule_greedy;
mod swap;
mod weight_greedy;

pub use certify::{certify_labeled, certify_run, RunCertificate, Step, SweepCheck};
pub use exact::{exact_gamma2, is_2_dominating_set, EXACT_LIMIT};
pub use rule_greedy::{next_rule, rule_greedy, RuleRun, RuleStep};
pub use swap::partition_swap;
pub use weight_greedy::{weight_greedy, weight_greedy_with};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Smallest `d` accepted by the weight-based procedures.
pub const MIN_D: usize = 6;

fn require_min_degree(g: &Graph, d: usize) -> Result<()> {
    if d < MIN_D {
        return Err(Error::InvalidParameters(format!(
            "d = {d}, need d >= {MIN_D}"
        )));
    }
    let found = g.min_degree()?;
    if found < d {
        return Err(Error::MinDegreeTooSmall { found, required: d });
    }
    Ok(())
}
