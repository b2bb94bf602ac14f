//! Brute-force ground truth for differential testing. Only suitable for
//! desk-size instances.

use crate::hypergraph::{Hypergraph, Vertex};

/// Exact minimum hitting set size by subset enumeration in increasing size,
/// lexicographic within a size. Returns None if every set up to `cap` (or up
/// to the vertex count) fails.
pub fn oracle_min(g: &Hypergraph, cap: Option<usize>) -> Option<usize> {
    oracle_min_set(g, cap).map(|s| s.len())
}

/// Same search, returning the first (smallest, then lexicographic) hitting set.
pub fn oracle_min_set(g: &Hypergraph, cap: Option<usize>) -> Option<Vec<Vertex>> {
    if !g.has_edges() {
        return Some(Vec::new());
    }
    // Isolated vertices never help.
    let pool: Vec<Vertex> = g
        .vertices()
        .iter()
        .copied()
        .filter(|&v| g.degree(v) > 0)
        .collect();
    let max = cap.map_or(pool.len(), |c| c.min(pool.len()));
    for size in 1..=max {
        let mut found = None;
        for_each_subset(&pool, size, &mut |subset| {
            if found.is_none() && hits_all(g, subset) {
                found = Some(subset.to_vec());
            }
            found.is_some()
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn oracle_decide(g: &Hypergraph, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    oracle_min(g, Some(k as usize)).is_some()
}

fn hits_all(g: &Hypergraph, subset: &[Vertex]) -> bool {
    g.edges().iter().all(|e| subset.iter().any(|&v| e.contains(v)))
}

/// Calls `f` on each size-`size` subset of `pool` in lexicographic order;
/// stops early when `f` returns true.
fn for_each_subset(pool: &[Vertex], size: usize, f: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
    fn rec(
        pool: &[Vertex],
        start: usize,
        current: &mut Vec<Vertex>,
        size: usize,
        f: &mut impl FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if current.len() == size {
            return f(current);
        }
        let needed = size - current.len();
        for i in start..=pool.len().saturating_sub(needed) {
            current.push(pool[i]);
            if rec(pool, i + 1, current, size, f) {
                current.pop();
                return true;
            }
            current.pop();
        }
        false
    }
    rec(pool, 0, &mut Vec::new(), size, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Edge;

    fn graph(edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::from_edges(edges.iter().map(|e| Edge::new(e.to_vec())))
    }

    #[test]
    fn base_cases() {
        assert_eq!(oracle_min(&Hypergraph::empty(), None), Some(0));
        assert_eq!(oracle_min(&graph(&[&[1, 2, 3]]), None), Some(1));
        assert_eq!(oracle_min_set(&graph(&[&[1, 2, 3]]), None), Some(vec![1]));
    }

    #[test]
    fn all_three_subsets_of_five() {
        let mut edges = Vec::new();
        for a in 1..=5u32 {
            for b in a + 1..=5 {
                for c in b + 1..=5 {
                    edges.push(Edge::new(vec![a, b, c]));
                }
            }
        }
        assert_eq!(edges.len(), 10);
        let g = Hypergraph::from_edges(edges);
        // any 2 vertices miss the 3-subset of the other three
        assert_eq!(oracle_min(&g, None), Some(3));
    }

    #[test]
    fn decide_and_cap() {
        let g = graph(&[&[1, 2]]);
        assert!(!oracle_decide(&g, 0));
        assert!(oracle_decide(&g, 1));
        assert!(!oracle_decide(&g, -1));
        let tri = graph(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(!oracle_decide(&tri, 1));
        assert!(oracle_decide(&tri, 2));
        assert_eq!(oracle_min(&tri, Some(1)), None);
        assert_eq!(oracle_min_set(&tri, None), Some(vec![1, 2]));
    }

    #[test]
    fn monotone_and_deletion_properties() {
        let g = graph(&[&[1, 2], &[3, 4], &[5, 6, 7], &[1, 6]]);
        let m = oracle_min(&g, None).unwrap();
        for k in 0..=(m as i64 + 2) {
            if oracle_decide(&g, k) {
                assert!(oracle_decide(&g, k + 1));
            }
        }
        for &v in g.vertices().clone().iter() {
            let m2 = oracle_min(&g.plus(v).unwrap(), None).unwrap();
            assert!(m2 + 1 >= m);
        }
    }
}
