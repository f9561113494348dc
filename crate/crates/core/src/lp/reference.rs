//! The reference bound and the exact ratios of the built-in coefficient sets.

use serde::Serialize;

use crate::rational::{frac, serde_fraction, Rational};
use crate::weights::CoefficientSet;

/// `(2 ln(δ+1) + 1) / (δ+1)`, plus the same value capped at `1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReferenceBound {
    pub raw: f64,
    pub capped: f64,
}

/// Reference bound for minimum degree `delta` (meaningful for `delta >= 3`).
pub fn reference_bound(delta: usize) -> ReferenceBound {
    let n = (delta + 1) as f64;
    let raw = (2.0 * n.ln() + 1.0) / n;
    ReferenceBound {
        raw,
        capped: raw.min(0.5),
    }
}

/// Exact `a/s` of the built-in sets, `δ = 6..=9`.
pub fn corollary_fractions() -> Vec<(usize, Rational)> {
    vec![
        (6, frac(456_883, 918_298)),
        (7, frac(140_835_095, 301_690_439)),
        (8, frac(292_954_593, 665_571_713)),
        (9, frac(60_805_963_517, 145_812_382_205)),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct CorollaryCheck {
    pub delta: usize,
    #[serde(with = "serde_fraction")]
    pub expected: Rational,
    #[serde(with = "serde_fraction")]
    pub computed: Rational,
    pub matches: bool,
}

/// Recomputes `a/s` from each built-in set and compares it with the stored
/// fraction.
pub fn verify_corollary() -> Vec<CorollaryCheck> {
    corollary_fractions()
        .into_iter()
        .map(|(delta, expected)| {
            let computed = CoefficientSet::builtin_table2(delta)
                .expect("built-in set")
                .ratio();
            CorollaryCheck {
                delta,
                matches: computed == expected,
                expected,
                computed,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let cases = [(11, 0.49749), (20, 0.33758), (40, 0.20555), (100, 0.10129)];
        for (delta, want) in cases {
            let got = reference_bound(delta).capped;
            assert!((got - want).abs() <= 5e-5, "delta {delta}: {got}");
        }
    }

    #[test]
    fn cap_applies_to_small_degrees() {
        let r = reference_bound(6);
        assert!(r.raw > 0.5);
        assert_eq!(r.capped, 0.5);
    }

    #[test]
    fn built_in_ratios_match() {
        assert!(verify_corollary().iter().all(|c| c.matches));
    }
}
