//! Differential fuzz driver: seeded random instances solved by both the
//! branching solver and the brute-force oracle, with certificates, runtime
//! invariants, the full-tree leaf bound, and measure monotonicity checked
//! on every budget in the interesting range.

use crate::io::{generate, GenConfig};
use crate::measure::bundled_psi4;
use crate::oracle::oracle_min;
use crate::solver::{solve, verify_hitting, SolveConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full search trees must satisfy leaves <= LEAF_BASE^(k + LEAF_SLACK).
pub const LEAF_BASE: f64 = 2.0409;
pub const LEAF_SLACK: i64 = 15;

/// Slack for the measure-monotonicity check on reduction steps.
pub const MONOTONE_SLACK: f64 = 1e-6;

/// Outcome of one fuzz case; every vector empty means the case passed.
#[derive(Clone, Debug)]
pub struct CaseReport {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub edges: usize,
    pub min: usize,
    /// solver decision != oracle decision
    pub agreement: Vec<String>,
    /// missing, non-hitting, or oversized certificates
    pub cert: Vec<String>,
    /// empty-edge, stage-invariant, or path-property violations from the solver
    pub invariants: Vec<String>,
    /// full-tree leaf counts above the budgeted bound
    pub leaf_bound: Vec<String>,
    /// reduction steps that increased the measure at max degree 4
    pub monotonicity: Vec<String>,
}

impl CaseReport {
    pub fn ok(&self) -> bool {
        self.agreement.is_empty()
            && self.cert.is_empty()
            && self.invariants.is_empty()
            && self.leaf_bound.is_empty()
            && self.monotonicity.is_empty()
    }

    /// All failures, prefixed with their category.
    pub fn failures(&self) -> Vec<String> {
        let cats = [
            ("agreement", &self.agreement),
            ("cert", &self.cert),
            ("invariant", &self.invariants),
            ("leaf_bound", &self.leaf_bound),
            ("monotonicity", &self.monotonicity),
        ];
        cats.iter()
            .flat_map(|(name, v)| v.iter().map(move |s| format!("{name}: {s}")))
            .collect()
    }
}

/// Per-case seed derived from the master seed, splitmix-style, so case
/// streams are independent of each other and of the case count.
pub fn case_seed(master: u64, index: usize) -> u64 {
    let mut z = master ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generate and exhaustively check one random instance: for every budget
/// k in [0, min+1], the solver must match the oracle, yes-answers must
/// carry valid certificates, no runtime invariant may trip, the full tree
/// must respect the leaf bound, and traced reductions at max degree 4
/// must not increase the bundled measure.
pub fn run_case(index: usize, master_seed: u64, max_n: usize) -> CaseReport {
    let seed = case_seed(master_seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(4..=max_n.max(4));
    let capacity = n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6;
    let edges = rng.gen_range(n..=(3 * n).min(capacity));
    let p2 = rng.gen_range(0.25..=0.75);
    let g = generate(&GenConfig {
        n,
        edge_count: edges,
        p2,
        seed: rng.gen(),
    })
    .expect("edge count stays within capacity");
    let min = oracle_min(&g, None).expect("uncapped search always finds a set");
    let mut report = CaseReport {
        index,
        seed,
        n,
        edges,
        min,
        agreement: Vec::new(),
        cert: Vec::new(),
        invariants: Vec::new(),
        leaf_bound: Vec::new(),
        monotonicity: Vec::new(),
    };
    let psi = bundled_psi4();
    for k in 0..=(min as i64 + 1) {
        let plain = solve(
            &g,
            k,
            &SolveConfig {
                trace: true,
                ..SolveConfig::default()
            },
        );
        let expected = k >= min as i64;
        if plain.decision != expected {
            report.agreement.push(format!(
                "k={k}: solver says {}, oracle minimum is {min}",
                if plain.decision { "yes" } else { "no" }
            ));
        }
        if plain.decision {
            match &plain.certificate {
                None => report.cert.push(format!("k={k}: yes without certificate")),
                Some(c) => {
                    if !verify_hitting(&g, c) {
                        report.cert.push(format!("k={k}: certificate {c:?} misses an edge"));
                    }
                    if c.len() as i64 > k {
                        report
                            .cert
                            .push(format!("k={k}: certificate size {} > budget", c.len()));
                    }
                }
            }
        } else if plain.certificate.is_some() {
            report.cert.push(format!("k={k}: no-decision carries a certificate"));
        }
        for v in &plain.violations {
            // certificate self-checks belong to the cert category
            if v.starts_with("cert:") {
                report.cert.push(format!("k={k}: {v}"));
            } else {
                report.invariants.push(format!("k={k}: {v}"));
            }
        }
        for step in &plain.trace {
            if step.d_before != 4 {
                continue;
            }
            let before = psi.mu(step.k_before, step.m2_before, step.c2_before);
            let after = psi.mu(step.k_after, step.m2_after, step.c2_after);
            if after > before + MONOTONE_SLACK {
                report.monotonicity.push(format!(
                    "k={k}: {} raised the measure {before:.6} -> {after:.6}",
                    step.rule
                ));
            }
        }
        let full = solve(
            &g,
            k,
            &SolveConfig {
                full_tree: true,
                ..SolveConfig::default()
            },
        );
        if full.decision != expected {
            report
                .agreement
                .push(format!("k={k}: full-tree decision disagrees with oracle"));
        }
        let bound = LEAF_BASE.powf((k + LEAF_SLACK) as f64);
        if full.leaves as f64 > bound {
            report.leaf_bound.push(format!(
                "k={k}: {} leaves exceed {bound:.0}",
                full.leaves
            ));
        }
        for v in &full.violations {
            if v.starts_with("cert:") {
                report.cert.push(format!("k={k} (full): {v}"));
            } else {
                report.invariants.push(format!("k={k} (full): {v}"));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_seeds_spread() {
        let a = case_seed(0, 0);
        let b = case_seed(0, 1);
        let c = case_seed(1, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, case_seed(0, 0));
    }

    #[test]
    fn small_batch_passes() {
        for i in 0..8 {
            let r = run_case(i, 42, 10);
            assert!(r.ok(), "case {i}: {:?}", r.failures());
            assert!((4..=10).contains(&r.n));
            assert!(r.edges >= r.n);
        }
    }
}
