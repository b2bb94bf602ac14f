//! Branch-and-reduce driver: applies the selected rule chain iteratively,
//! recurses on branch children, and reports decision, certificate, leaf
//! count, per-rule counts, and any violated runtime invariants.

use crate::hypergraph::{Hypergraph, Vertex};
use crate::rules::{self, Instance, RuleId};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Explore every branch child even after a yes, so `leaves` counts the
    /// complete search tree.
    pub full_tree: bool,
    /// Record one entry per reduction step (follow-up unit-edge removals
    /// fold into the step that created them).
    pub trace: bool,
    /// Check the structural invariants each selected rule relies on.
    pub check_invariants: bool,
    /// Recursion depth limit; exceeding it is reported, not fatal.
    /// Defaults to k + |V| + 1.
    pub depth_guard: Option<usize>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            full_tree: false,
            trace: false,
            check_invariants: true,
            depth_guard: None,
        }
    }
}

/// One reduction application, with the instance measure inputs on both
/// sides. Unit-edge removals triggered by the step are folded into it.
#[derive(Clone, Copy, Debug)]
pub struct ReductionStep {
    pub rule: RuleId,
    pub d_before: usize,
    pub k_before: i64,
    pub m2_before: usize,
    pub c2_before: usize,
    pub k_after: i64,
    pub m2_after: usize,
    pub c2_after: usize,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub decision: bool,
    pub certificate: Option<Vec<Vertex>>,
    /// Nodes of the search tree that returned without recursing.
    pub leaves: u64,
    pub rule_counts: BTreeMap<RuleId, u64>,
    /// True when some branch node split a vertex out of a graph of max
    /// degree <= 3 under the fallback rule.
    pub low_degree_fallback: bool,
    /// Largest number of such fallback splits on any root-to-leaf path.
    pub max_b8_low_d_per_path: u32,
    pub violations: Vec<String>,
    pub trace: Vec<ReductionStep>,
    pub max_depth: usize,
}

pub fn verify_hitting(g: &Hypergraph, set: &[Vertex]) -> bool {
    g.edges().iter().all(|e| set.iter().any(|&v| e.contains(v)))
}

pub fn solve(g: &Hypergraph, k: i64, config: &SolveConfig) -> SolveReport {
    let guard = config
        .depth_guard
        .unwrap_or(k.max(0) as usize + g.vertices().len() + 1);
    let mut ctx = Ctx {
        config,
        guard,
        guard_flagged: false,
        leaves: 0,
        rule_counts: BTreeMap::new(),
        low_degree_fallback: false,
        max_b8_low: 0,
        violations: Vec::new(),
        trace: Vec::new(),
        max_depth: 0,
    };
    let cert = ctx.rec(g.clone(), k, 0, 0);
    let certificate = cert.map(|mut c| {
        c.sort_unstable();
        c.dedup();
        if !verify_hitting(g, &c) {
            ctx.violations
                .push(format!("cert: {c:?} does not hit every edge"));
        }
        if c.len() as i64 > k {
            ctx.violations
                .push(format!("cert: size {} exceeds budget {k}", c.len()));
        }
        c
    });
    SolveReport {
        decision: certificate.is_some(),
        certificate,
        leaves: ctx.leaves,
        rule_counts: ctx.rule_counts,
        low_degree_fallback: ctx.low_degree_fallback,
        max_b8_low_d_per_path: ctx.max_b8_low,
        violations: ctx.violations,
        trace: ctx.trace,
        max_depth: ctx.max_depth,
    }
}

/// Smallest k for which the instance is a yes, with its certificate.
pub fn solve_minimum(g: &Hypergraph, config: &SolveConfig) -> (usize, Vec<Vertex>) {
    for k in 0..=(g.vertices().len() as i64) {
        let report = solve(g, k, config);
        if report.decision {
            return (k as usize, report.certificate.unwrap_or_default());
        }
    }
    (0, Vec::new()) // unreachable: k = |V| always succeeds
}

struct Ctx<'a> {
    config: &'a SolveConfig,
    guard: usize,
    guard_flagged: bool,
    leaves: u64,
    rule_counts: BTreeMap<RuleId, u64>,
    low_degree_fallback: bool,
    max_b8_low: u32,
    violations: Vec<String>,
    trace: Vec<ReductionStep>,
    max_depth: usize,
}

impl Ctx<'_> {
    fn rec(
        &mut self,
        graph: Hypergraph,
        budget: i64,
        depth: usize,
        b8_low: u32,
    ) -> Option<Vec<Vertex>> {
        self.max_depth = self.max_depth.max(depth);
        if depth > self.guard && !self.guard_flagged {
            self.guard_flagged = true;
            self.violations
                .push(format!("depth_guard: depth {depth} exceeds {}", self.guard));
        }
        let mut g = graph;
        let mut k = budget;
        let mut acc: Vec<Vertex> = Vec::new();
        // trace index of the reduction step whose unit-edge fallout is
        // still being consumed
        let mut anchor: Option<usize> = None;
        loop {
            let inst = Instance { graph: g, k };
            let app = rules::select_rule(&inst);
            if self.config.check_invariants {
                self.violations
                    .extend(rules::stage_violations(&inst.graph, app.rule));
            }
            match app.rule {
                RuleId::DoneNo => {
                    self.leaves += 1;
                    return None;
                }
                RuleId::DoneYes => {
                    self.leaves += 1;
                    return Some(acc);
                }
                r if r.is_reduction() => {
                    *self.rule_counts.entry(r).or_default() += 1;
                    let child = &app.children[0];
                    let k_next = k - child.k_delta as i64;
                    let g_next = if r == RuleId::R2 {
                        inst.graph.minimalize()
                    } else {
                        match inst.graph.apply_seq(&child.ops) {
                            Ok(g2) => g2,
                            Err(e) => {
                                self.violations.push(format!("empty_edge: {r}: {e}"));
                                self.leaves += 1;
                                return None;
                            }
                        }
                    };
                    if self.config.trace {
                        self.record_reduction(r, &inst.graph, k, &g_next, k_next, &mut anchor);
                    }
                    acc.extend(child.cert.iter().copied());
                    g = g_next;
                    k = k_next;
                }
                RuleId::B7 => {
                    *self.rule_counts.entry(RuleId::B7).or_default() += 1;
                    let block = app.component.expect("B7 names a component");
                    let h = inst.graph.induced(&block);
                    let rest_verts = inst
                        .graph
                        .vertices()
                        .iter()
                        .copied()
                        .filter(|v| !block.contains(v))
                        .collect();
                    let rest = inst.graph.induced(&rest_verts);
                    if k < 8 {
                        // both sides need budget >= 4, so no split works
                        self.leaves += 1;
                        return None;
                    }
                    for kp in 4..=(k - 4) {
                        if let Some(h_cert) = self.rec(h.clone(), kp, depth + 1, b8_low) {
                            let rest_cert = self.rec(rest, k - kp, depth + 1, b8_low)?;
                            acc.extend(h_cert);
                            acc.extend(rest_cert);
                            return Some(acc);
                        }
                    }
                    return None;
                }
                r => {
                    *self.rule_counts.entry(r).or_default() += 1;
                    let mut b8_low_next = b8_low;
                    if r == RuleId::B8 && inst.graph.max_degree() <= 3 {
                        self.low_degree_fallback = true;
                        b8_low_next += 1;
                        self.max_b8_low = self.max_b8_low.max(b8_low_next);
                        if b8_low_next > 1 {
                            self.violations.push(format!(
                                "repeat_fallback: {b8_low_next} low-degree fallback splits on one path"
                            ));
                        }
                    }
                    let mut found: Option<Vec<Vertex>> = None;
                    for child in &app.children {
                        if found.is_some() && !self.config.full_tree {
                            break;
                        }
                        let g_child = match inst.graph.apply_seq(&child.ops) {
                            Ok(g2) => g2,
                            Err(e) => {
                                self.violations.push(format!("empty_edge: {r}: {e}"));
                                self.leaves += 1;
                                continue;
                            }
                        };
                        let sub = self.rec(
                            g_child,
                            k - child.k_delta as i64,
                            depth + 1,
                            b8_low_next,
                        );
                        if let (Some(sub_cert), None) = (sub, &found) {
                            let mut c = acc.clone();
                            c.extend(child.cert.iter().copied());
                            c.extend(sub_cert);
                            found = Some(c);
                        }
                    }
                    return found;
                }
            }
        }
    }

    fn record_reduction(
        &mut self,
        rule: RuleId,
        g_before: &Hypergraph,
        k_before: i64,
        g_after: &Hypergraph,
        k_after: i64,
        anchor: &mut Option<usize>,
    ) {
        let after = g_after.two_section();
        if rule == RuleId::R1 {
            if let Some(idx) = *anchor {
                // unit edge made by the anchored step: fold into it
                let step = &mut self.trace[idx];
                step.k_after = k_after;
                step.m2_after = after.m2;
                step.c2_after = after.c2;
                return;
            }
        }
        let before = g_before.two_section();
        self.trace.push(ReductionStep {
            rule,
            d_before: g_before.max_degree(),
            k_before,
            m2_before: before.m2,
            c2_before: before.c2,
            k_after,
            m2_after: after.m2,
            c2_after: after.c2,
        });
        // only vertex-collapse steps can make unit edges
        *anchor = if matches!(rule, RuleId::R4 | RuleId::R5) {
            Some(self.trace.len() - 1)
        } else {
            None
        };
    }
}
