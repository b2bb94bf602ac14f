//! Branching vectors: the branching number (unique positive root of the
//! characteristic equation) and a domination order that lets one vector
//! stand in for another when bounding worst cases.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct BranchingVector(pub Vec<f64>);

impl fmt::Display for BranchingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a:.4}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum BranchingError {
    #[error("branching vector is empty")]
    Empty,
    #[error("branching vector entry {0} is not positive")]
    NonPositive(f64),
}

/// Largest real x with sum of x^(-a_i) equal to 1. Entries must be
/// positive; a single entry gives 1 (one child, no growth).
pub fn branching_number(v: &BranchingVector) -> Result<f64, BranchingError> {
    let a = &v.0;
    if a.is_empty() {
        return Err(BranchingError::Empty);
    }
    if let Some(&bad) = a.iter().find(|&&x| x.is_nan() || x <= 0.0) {
        return Err(BranchingError::NonPositive(bad));
    }
    if a.len() == 1 {
        return Ok(1.0);
    }
    let f = |x: f64| -> f64 { a.iter().map(|&ai| x.powf(-ai)).sum::<f64>() - 1.0 };
    // f is strictly decreasing for x > 1 with f(1) = len - 1 > 0
    let mut lo = 1.0;
    let mut hi = 64.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        assert!(hi < 1e9, "branching number bracket failed to close");
    }
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// True when `a` is dominated by `b`: an injection from a's entries into
/// b's entries with every a-entry >= its image. Then `a` branches no worse
/// than `b` (each child consumes at least as much, and `b` may have extra
/// children).
pub fn dominates(a: &BranchingVector, b: &BranchingVector) -> bool {
    if a.0.len() > b.0.len() {
        return false;
    }
    let mut xs = a.0.clone();
    let mut ys = b.0.clone();
    xs.sort_by(|p, q| q.partial_cmp(p).unwrap());
    ys.sort_by(|p, q| q.partial_cmp(p).unwrap());
    // greedy two-pointer: b-entries too large for the current a-entry are
    // too large for all later (smaller) ones, so skipping them is safe
    let mut j = 0;
    for &x in &xs {
        while j < ys.len() && ys[j] > x {
            j += 1;
        }
        if j >= ys.len() {
            return false;
        }
        j += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bn(entries: &[f64]) -> f64 {
        branching_number(&BranchingVector(entries.to_vec())).unwrap()
    }

    #[test]
    fn known_roots() {
        assert!((bn(&[1.0, 1.0]) - 2.0).abs() < 1e-9);
        assert!((bn(&[2.0, 2.0]) - 2f64.sqrt()).abs() < 1e-6);
        assert!((bn(&[1.0, 2.0]) - 1.618_034_0).abs() < 1e-6);
        // golden-ratio cousin: (1,3) solves x^3 = x^2 + 1
        let r = bn(&[1.0, 3.0]);
        assert!((r.powi(3) - r.powi(2) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn single_and_bad_entries() {
        assert_eq!(bn(&[5.0]), 1.0);
        assert_eq!(
            branching_number(&BranchingVector(vec![])),
            Err(BranchingError::Empty)
        );
        assert_eq!(
            branching_number(&BranchingVector(vec![1.0, 0.0])),
            Err(BranchingError::NonPositive(0.0))
        );
        assert_eq!(
            branching_number(&BranchingVector(vec![1.0, -0.3])),
            Err(BranchingError::NonPositive(-0.3))
        );
    }

    #[test]
    fn more_entries_grow_the_root() {
        assert!(bn(&[1.0, 1.0, 1.0]) > bn(&[1.0, 1.0]));
        assert!(bn(&[1.0, 2.0]) < bn(&[1.0, 1.0]));
    }

    fn dom(a: &[f64], b: &[f64]) -> bool {
        dominates(
            &BranchingVector(a.to_vec()),
            &BranchingVector(b.to_vec()),
        )
    }

    #[test]
    fn domination_examples() {
        assert!(dom(&[2.0, 3.0], &[1.0, 2.0]));
        assert!(dom(&[1.0], &[1.0, 1.0]));
        assert!(!dom(&[1.0, 1.0], &[2.0, 2.0]));
        assert!(dom(&[1.0, 1.0], &[1.0, 1.0]));
        assert!(!dom(&[1.0, 1.0, 1.0], &[1.0, 1.0]));
    }

    #[test]
    fn domination_bounds_branching_number() {
        let cases: &[(&[f64], &[f64])] = &[
            (&[2.0, 3.0], &[1.0, 2.0]),
            (&[1.0], &[1.0, 1.0]),
            (&[2.5, 2.5, 4.0], &[2.0, 2.0, 3.0]),
            (&[3.0, 3.0], &[1.0, 1.0, 1.0]),
        ];
        for (a, b) in cases {
            assert!(dom(a, b), "{a:?} vs {b:?}");
            assert!(bn(a) <= bn(b) + 1e-9, "{a:?} vs {b:?}");
        }
    }

    // exhaustive matcher to cross-check the greedy one
    fn dominates_exhaustive(a: &[f64], b: &[f64]) -> bool {
        fn go(a: &[f64], b: &[f64], used: &mut Vec<bool>, i: usize) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if !used[j] && a[i] >= b[j] {
                    used[j] = true;
                    if go(a, b, used, i + 1) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        if a.len() > b.len() {
            return false;
        }
        go(a, b, &mut vec![false; b.len()], 0)
    }

    #[test]
    fn greedy_matches_exhaustive() {
        // all small vectors over a fixed palette
        let palette = [0.5, 1.0, 1.5, 2.0, 3.0];
        let mut vecs: Vec<Vec<f64>> = vec![];
        for &x in &palette {
            vecs.push(vec![x]);
            for &y in &palette {
                vecs.push(vec![x, y]);
                for &z in &palette {
                    vecs.push(vec![x, y, z]);
                }
            }
        }
        for a in &vecs {
            for b in &vecs {
                assert_eq!(
                    dom(a, b),
                    dominates_exhaustive(a, b),
                    "a={a:?} b={b:?}"
                );
            }
        }
    }
}
