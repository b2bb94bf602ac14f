//! Rule selection: given an instance, find the first applicable rule
//! (R1..R6 reduce, B1..B8 branch) and emit its children as op-sequences
//! with budget deltas. All tie-breaks are by smallest vertex id, then
//! lexicographically smallest edge, so selection is deterministic.

use crate::hypergraph::{Edge, Hypergraph, Op, Vertex};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    DoneYes,
    DoneNo,
}

impl RuleId {
    pub fn is_reduction(self) -> bool {
        matches!(
            self,
            RuleId::R1 | RuleId::R2 | RuleId::R3 | RuleId::R4 | RuleId::R5 | RuleId::R6
        )
    }

    pub fn is_branching(self) -> bool {
        !self.is_reduction() && !matches!(self, RuleId::DoneYes | RuleId::DoneNo)
    }

    pub const ALL_RULES: [RuleId; 14] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::B1,
        RuleId::B2,
        RuleId::B3,
        RuleId::B4,
        RuleId::B5,
        RuleId::B6,
        RuleId::B7,
        RuleId::B8,
    ];
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::B1 => "B1",
            RuleId::B2 => "B2",
            RuleId::B3 => "B3",
            RuleId::B4 => "B4",
            RuleId::B5 => "B5",
            RuleId::B6 => "B6",
            RuleId::B7 => "B7",
            RuleId::B8 => "B8",
            RuleId::DoneYes => "yes",
            RuleId::DoneNo => "no",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Hypergraph,
    pub k: i64,
}

/// One branch child: the ops that build its graph, the budget it consumes,
/// and the vertices it commits to the hitting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Child {
    pub ops: Vec<Op>,
    pub k_delta: u32,
    pub cert: Vec<Vertex>,
}

impl Child {
    fn new(ops: Vec<Op>, k_delta: u32) -> Self {
        let cert = ops
            .iter()
            .filter_map(|op| match op {
                Op::Plus(v) => Some(*v),
                Op::Minus(_) => None,
            })
            .collect();
        Child { ops, k_delta, cert }
    }
}

#[derive(Clone, Debug)]
pub struct RuleApplication {
    pub rule: RuleId,
    pub bindings: Vec<(&'static str, Vertex)>,
    /// Vertex block of the component named by R3 or B7.
    pub component: Option<BTreeSet<Vertex>>,
    pub children: Vec<Child>,
}

impl RuleApplication {
    fn leaf(rule: RuleId) -> Self {
        RuleApplication {
            rule,
            bindings: Vec::new(),
            component: None,
            children: Vec::new(),
        }
    }
}

/// First applicable rule, in order R1..R6, B1..B8, with termination checks
/// first (k < 0 means no, no edges means yes). Total: B8 fires on anything
/// the earlier rules decline.
pub fn select_rule(inst: &Instance) -> RuleApplication {
    if inst.k < 0 {
        return RuleApplication::leaf(RuleId::DoneNo);
    }
    let g = &inst.graph;
    if !g.has_edges() {
        return RuleApplication::leaf(RuleId::DoneYes);
    }
    try_r1(g)
        .or_else(|| try_r2(g))
        .or_else(|| try_r3(g))
        .or_else(|| try_r4(g))
        .or_else(|| try_r5(g))
        .or_else(|| try_r6(g))
        .or_else(|| try_b1(g))
        .or_else(|| try_b2(g))
        .or_else(|| try_b3(g))
        .or_else(|| try_b4(g))
        .or_else(|| try_b5(g))
        .or_else(|| try_b6(g))
        .or_else(|| try_b7(g))
        .unwrap_or_else(|| b8(g))
}

fn try_r1(g: &Hypergraph) -> Option<RuleApplication> {
    let e = g.edges().iter().find(|e| e.len() == 1)?;
    let x = e.vertices()[0];
    Some(RuleApplication {
        rule: RuleId::R1,
        bindings: vec![("x", x)],
        component: None,
        children: vec![Child::new(vec![Op::Plus(x)], 1)],
    })
}

fn try_r2(g: &Hypergraph) -> Option<RuleApplication> {
    if g.is_simple() {
        return None;
    }
    // The child graph is minimalize(g); it is not expressible as vertex ops,
    // so the solver special-cases R2.
    Some(RuleApplication {
        rule: RuleId::R2,
        bindings: Vec::new(),
        component: None,
        children: vec![Child::new(Vec::new(), 0)],
    })
}

fn try_r3(g: &Hypergraph) -> Option<RuleApplication> {
    for block in g.components() {
        if block.len() < 2 {
            continue;
        }
        let h = g.induced(&block);
        if let Some(s_h) = small_hitting_set(&h) {
            let ops = block.iter().map(|&v| Op::Plus(v)).collect();
            let mut child = Child::new(ops, s_h.len() as u32);
            child.cert = s_h.clone();
            return Some(RuleApplication {
                rule: RuleId::R3,
                bindings: s_h.iter().map(|&v| ("s", v)).collect(),
                component: Some(block),
                children: vec![child],
            });
        }
    }
    None
}

fn try_r4(g: &Hypergraph) -> Option<RuleApplication> {
    for &x in g.vertices() {
        if let Some(v) = g.dominating_vertex(x) {
            return Some(RuleApplication {
                rule: RuleId::R4,
                bindings: vec![("x", x), ("v", v)],
                component: None,
                children: vec![Child::new(vec![Op::Minus(x)], 0)],
            });
        }
    }
    None
}

fn try_r5(g: &Hypergraph) -> Option<RuleApplication> {
    for &x in g.vertices() {
        if g.degree(x) != 2 {
            continue;
        }
        let nx = g.neighbors(x);
        if g.edges().iter().any(|e| e.iter().all(|v| nx.contains(&v))) {
            return Some(RuleApplication {
                rule: RuleId::R5,
                bindings: vec![("x", x)],
                component: None,
                children: vec![Child::new(vec![Op::Minus(x)], 0)],
            });
        }
    }
    None
}

fn try_r6(g: &Hypergraph) -> Option<RuleApplication> {
    for &x in g.vertices() {
        let nx = g.neighbors(x);
        let mut met_any = false;
        let mut common: Option<BTreeSet<Vertex>> = None;
        for e in g.edges() {
            if e.contains(x) || !e.iter().any(|v| nx.contains(&v)) {
                continue;
            }
            met_any = true;
            let vs: BTreeSet<Vertex> = e.iter().collect();
            common = Some(match common {
                None => vs,
                Some(prev) => prev.intersection(&vs).copied().collect(),
            });
        }
        let u = if met_any {
            common.and_then(|s| s.into_iter().next())
        } else {
            // No edge meets N(x) outside x: the condition holds vacuously.
            g.vertices().iter().copied().find(|&v| v != x)
        };
        if let Some(u) = u {
            return Some(RuleApplication {
                rule: RuleId::R6,
                bindings: vec![("x", x), ("u", u)],
                component: None,
                children: vec![Child::new(vec![Op::Plus(x)], 1)],
            });
        }
    }
    None
}

fn try_b1(g: &Hypergraph) -> Option<RuleApplication> {
    let ts = g.two_section();
    if ts.d2_max != 2 {
        return None;
    }
    // With max 2-degree 2, a 4-cycle of 2-edges is exactly a component with
    // 4 vertices, 4 edges, all inner degrees 2.
    for comp in &ts.components {
        let verts: BTreeSet<Vertex> = comp.iter().flat_map(|e| e.iter()).collect();
        if comp.len() != 4 || verts.len() != 4 {
            continue;
        }
        let deg =
            |v: Vertex| -> usize { comp.iter().filter(|e| e.contains(v)).count() };
        if verts.iter().any(|&v| deg(v) != 2) {
            continue;
        }
        let v1 = *verts.iter().next().unwrap();
        let mut nbrs: Vec<Vertex> = comp
            .iter()
            .filter(|e| e.contains(v1))
            .flat_map(|e| e.iter())
            .filter(|&v| v != v1)
            .collect();
        nbrs.sort_unstable();
        let (v2, v4) = (nbrs[0], nbrs[1]);
        let v3 = *verts.iter().find(|&&v| v != v1 && v != v2 && v != v4).unwrap();
        return Some(RuleApplication {
            rule: RuleId::B1,
            bindings: vec![("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)],
            component: None,
            children: vec![
                Child::new(vec![Op::Plus(v1), Op::Plus(v3)], 2),
                Child::new(vec![Op::Plus(v2), Op::Plus(v4)], 2),
            ],
        });
    }
    None
}

fn try_b2(g: &Hypergraph) -> Option<RuleApplication> {
    let ts = g.two_section();
    if !(1..=2).contains(&ts.d2_max) {
        return None;
    }
    let x = g
        .vertices()
        .iter()
        .copied()
        .find(|&x| g.degree(x) == 2 && g.degree_s(x, 2) == ts.d2_max)?;
    let es: Vec<&Edge> = g.edges_with(x).collect();
    let others = |e: &Edge| -> Vec<Vertex> { e.iter().filter(|&v| v != x).collect() };
    if ts.d2_max == 2 {
        // two 2-edges {x,y}, {x,z}; edge order puts y before z
        let (y, z) = (others(es[0])[0], others(es[1])[0]);
        debug_assert!(y < z);
        Some(RuleApplication {
            rule: RuleId::B2,
            bindings: vec![("x", x), ("y", y), ("z", z)],
            component: None,
            children: vec![
                Child::new(vec![Op::Plus(x), Op::Minus(y), Op::Minus(z)], 1),
                Child::new(vec![Op::Minus(x), Op::Plus(y), Op::Plus(z)], 2),
            ],
        })
    } else {
        // one 2-edge {x,y} and one 3-edge {x,z,w} (no 1-edges past R1)
        let (two, three) = if es[0].len() == 2 { (es[0], es[1]) } else { (es[1], es[0]) };
        assert_eq!(three.len(), 3, "B2 with d2=1 needs a 3-edge companion");
        let y = others(two)[0];
        let zw = others(three);
        let (z, w) = (zw[0], zw[1]);
        Some(RuleApplication {
            rule: RuleId::B2,
            bindings: vec![("x", x), ("y", y), ("z", z), ("w", w)],
            component: None,
            children: vec![
                Child::new(
                    vec![Op::Plus(x), Op::Minus(y), Op::Minus(z), Op::Minus(w)],
                    1,
                ),
                Child::new(vec![Op::Minus(x), Op::Plus(y)], 1),
            ],
        })
    }
}

fn try_b3(g: &Hypergraph) -> Option<RuleApplication> {
    let ts = g.two_section();
    if ts.m2 == 0 {
        return None;
    }
    let mut best: Option<(Vertex, i64)> = None;
    for &v in g.vertices() {
        let st = g.stats(v).expect("vertex in graph");
        if st.d2 != ts.d2_max {
            continue;
        }
        let score = st.d3 as i64 - st.d2_reach as i64;
        if best.is_none_or(|(_, s)| score > s) {
            best = Some((v, score));
        }
    }
    let (x, _) = best?;
    Some(RuleApplication {
        rule: RuleId::B3,
        bindings: vec![("x", x)],
        component: None,
        children: vec![
            Child::new(vec![Op::Plus(x)], 1),
            Child::new(vec![Op::Minus(x)], 0),
        ],
    })
}

fn try_b4(g: &Hypergraph) -> Option<RuleApplication> {
    if g.max_degree() != 4 {
        return None;
    }
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            let shared = g
                .edges()
                .iter()
                .filter(|e| e.contains(x) && e.contains(y))
                .count();
            if shared >= 3 {
                return Some(RuleApplication {
                    rule: RuleId::B4,
                    bindings: vec![("x", x), ("y", y)],
                    component: None,
                    children: vec![
                        Child::new(vec![Op::Plus(x), Op::Minus(y)], 1),
                        Child::new(vec![Op::Minus(x), Op::Plus(y)], 1),
                        Child::new(vec![Op::Minus(x), Op::Minus(y)], 0),
                    ],
                });
            }
        }
    }
    None
}

fn try_b5(g: &Hypergraph) -> Option<RuleApplication> {
    if g.max_degree() > 4 {
        return None;
    }
    for &x in g.vertices() {
        if g.degree(x) != 2 {
            continue;
        }
        let st = g.stats(x).expect("vertex in graph");
        if st.pair_flag {
            continue;
        }
        let nx = g.neighbors(x);
        if nx.iter().any(|&p| g.degree(p) != 3) {
            continue;
        }
        let b: BTreeSet<Vec<Vertex>> = g
            .edges()
            .iter()
            .filter(|e| !e.contains(x) && e.iter().any(|v| nx.contains(&v)))
            .map(|e| e.without(&nx))
            .collect();
        if b.len() != 4 {
            continue;
        }
        return Some(build_b5(g, x, &nx, b));
    }
    None
}

fn build_b5(
    g: &Hypergraph,
    x: Vertex,
    nx: &BTreeSet<Vertex>,
    b: BTreeSet<Vec<Vertex>>,
) -> RuleApplication {
    let es: Vec<&Edge> = g.edges_with(x).collect();
    let (e1, e2) = (es[0], es[1]);
    assert!(e1.len() == 3 && e2.len() == 3, "B5 fires on 3-edges only");
    let e1_rest: Vec<Vertex> = e1.iter().filter(|&v| v != x).collect();
    let e2_rest: Vec<Vertex> = e2.iter().filter(|&v| v != x).collect();

    // Bipartite graph on N(x) and B; p ~ b iff {p} ∪ b is an edge.
    let left: Vec<Vertex> = nx.iter().copied().collect();
    let right: Vec<&Vec<Vertex>> = b.iter().collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); left.len() + right.len()];
    for (i, &p) in left.iter().enumerate() {
        for (j, bs) in right.iter().enumerate() {
            let mut cand: Vec<Vertex> = bs.to_vec();
            cand.push(p);
            cand.sort_unstable();
            cand.dedup();
            if cand.len() == bs.len() + 1
                && cand.len() <= 3
                && g.edges().contains(&Edge::new(cand))
            {
                adj[i].push(left.len() + j);
                adj[left.len() + j].push(i);
            }
        }
    }

    // Case 1 shape: every vertex has degree 2 and the graph splits into two
    // 4-cycles, each holding one vertex of e1\{x} and one of e2\{x}.
    let n = adj.len();
    let two_cycles = n == 8 && adj.iter().all(|a| a.len() == 2);
    let mut comp_of = vec![usize::MAX; n];
    if two_cycles {
        let mut c = 0;
        for s in 0..n {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            while let Some(t) = stack.pop() {
                if comp_of[t] != usize::MAX {
                    continue;
                }
                comp_of[t] = c;
                stack.extend(adj[t].iter().copied());
            }
            c += 1;
        }
        let comp_count = c;
        let sizes: Vec<usize> = (0..comp_count)
            .map(|c| comp_of.iter().filter(|&&x| x == c).count())
            .collect();
        if comp_count == 2 && sizes.iter().all(|&s| s == 4) {
            let cyc =
                |v: Vertex| comp_of[left.iter().position(|&p| p == v).unwrap()];
            let split_ok = {
                let c1: BTreeSet<usize> = e1_rest.iter().map(|&v| cyc(v)).collect();
                let c2: BTreeSet<usize> = e2_rest.iter().map(|&v| cyc(v)).collect();
                c1.len() == 2 && c2.len() == 2
            };
            if split_ok {
                let y = e1_rest[0];
                let z = e1_rest[1];
                let (v, w) = if cyc(e2_rest[0]) == cyc(y) {
                    (e2_rest[0], e2_rest[1])
                } else {
                    (e2_rest[1], e2_rest[0])
                };
                return RuleApplication {
                    rule: RuleId::B5,
                    bindings: vec![("x", x), ("y", y), ("z", z), ("v", v), ("w", w)],
                    component: None,
                    children: vec![
                        Child::new(
                            vec![
                                Op::Plus(x),
                                Op::Minus(y),
                                Op::Minus(z),
                                Op::Minus(v),
                                Op::Minus(w),
                            ],
                            1,
                        ),
                        Child::new(vec![Op::Plus(y), Op::Plus(v), Op::Minus(x)], 2),
                        Child::new(vec![Op::Plus(z), Op::Plus(w), Op::Minus(x)], 2),
                    ],
                };
            }
        }
    }

    let (y, z) = (e1_rest[0], e1_rest[1]);
    let (v, w) = (e2_rest[0], e2_rest[1]);
    RuleApplication {
        rule: RuleId::B5,
        bindings: vec![("x", x), ("y", y), ("z", z), ("v", v), ("w", w)],
        component: None,
        children: vec![
            Child::new(
                vec![
                    Op::Plus(x),
                    Op::Minus(y),
                    Op::Minus(z),
                    Op::Minus(v),
                    Op::Minus(w),
                ],
                1,
            ),
            Child::new(
                vec![
                    Op::Plus(y),
                    Op::Plus(z),
                    Op::Plus(v),
                    Op::Plus(w),
                    Op::Minus(x),
                ],
                4,
            ),
        ],
    }
}

fn try_b6(g: &Hypergraph) -> Option<RuleApplication> {
    if g.max_degree() > 4 {
        return None;
    }
    let mut best: Option<(Vertex, bool)> = None;
    for &v in g.vertices() {
        if g.degree(v) != 2 {
            continue;
        }
        let flag = g.stats(v).expect("vertex in graph").pair_flag;
        if best.is_none_or(|(_, f)| flag && !f) {
            best = Some((v, flag));
        }
    }
    let (x, _) = best?;
    let es: Vec<&Edge> = g.edges_with(x).collect();
    assert!(
        es[0].len() == 3 && es[1].len() == 3,
        "B6 fires on 3-edges only"
    );
    let others = |e: &Edge| -> Vec<Vertex> { e.iter().filter(|&v| v != x).collect() };
    let (yz, vw) = (others(es[0]), others(es[1]));
    Some(RuleApplication {
        rule: RuleId::B6,
        bindings: vec![
            ("x", x),
            ("y", yz[0]),
            ("z", yz[1]),
            ("v", vw[0]),
            ("w", vw[1]),
        ],
        component: None,
        children: vec![
            Child::new(
                vec![
                    Op::Plus(x),
                    Op::Minus(yz[0]),
                    Op::Minus(yz[1]),
                    Op::Minus(vw[0]),
                    Op::Minus(vw[1]),
                ],
                1,
            ),
            Child::new(vec![Op::Minus(x)], 0),
        ],
    })
}

fn try_b7(g: &Hypergraph) -> Option<RuleApplication> {
    if g.max_degree() > 3 {
        return None;
    }
    let blocks = g.components();
    if blocks.len() < 2 {
        return None;
    }
    let block = blocks
        .into_iter()
        .find(|b| g.induced(b).has_edges())?;
    Some(RuleApplication {
        rule: RuleId::B7,
        bindings: Vec::new(),
        component: Some(block),
        children: Vec::new(),
    })
}

fn b8(g: &Hypergraph) -> RuleApplication {
    let d = g.max_degree();
    let mut best: Option<(Vertex, usize)> = None;
    for &u in g.vertices() {
        if g.degree(u) != d {
            continue;
        }
        // no 1-edges remain past R1, so minus cannot empty an edge
        let score = g
            .minus(u)
            .expect("B8 scoring after R1")
            .two_section()
            .d2_max;
        if best.is_none_or(|(_, s)| score > s) {
            best = Some((u, score));
        }
    }
    let (u, _) = best.expect("nonempty graph has a max-degree vertex");
    RuleApplication {
        rule: RuleId::B8,
        bindings: vec![("u", u)],
        component: None,
        children: vec![
            Child::new(vec![Op::Plus(u)], 1),
            Child::new(vec![Op::Minus(u)], 0),
        ],
    }
}

/// Minimum hitting set of size <= 3, by exhaustive search over subsets of
/// size 0..=3 in (size, lexicographic) order. Independent of the big oracle.
pub fn small_hitting_set(h: &Hypergraph) -> Option<Vec<Vertex>> {
    if !h.has_edges() {
        return Some(Vec::new());
    }
    let hits_all = |s: &[Vertex]| {
        h.edges()
            .iter()
            .all(|e| s.iter().any(|&v| e.contains(v)))
    };
    let vs: Vec<Vertex> = h.vertices().iter().copied().collect();
    for &a in &vs {
        if hits_all(&[a]) {
            return Some(vec![a]);
        }
    }
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if hits_all(&[a, b]) {
                return Some(vec![a, b]);
            }
        }
    }
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs[i + 1..].iter().enumerate() {
            for &c in &vs[i + 1 + j + 1..] {
                if hits_all(&[a, b, c]) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Structural facts that must hold once selection has passed the stage where
/// earlier rules would have fired. Returns violation descriptions (empty in
/// a correct run).
pub fn stage_violations(g: &Hypergraph, selected: RuleId) -> Vec<String> {
    let mut out = Vec::new();
    if !(selected.is_reduction() || selected.is_branching()) {
        return out;
    }
    let d_g = g.max_degree();

    if selected > RuleId::R4 {
        for &v in g.vertices() {
            match g.degree(v) {
                1 => out.push(format!("degree_one: vertex {v} has degree 1 at {selected}")),
                2 => {
                    let es: Vec<&Edge> = g.edges_with(v).collect();
                    let common: Vec<Vertex> = es[0]
                        .iter()
                        .filter(|&u| es[1].contains(u))
                        .collect();
                    if common != [v] {
                        out.push(format!(
                            "deg2_overlap: edges of degree-2 vertex {v} intersect in {common:?} at {selected}"
                        ));
                    }
                }
                _ => {}
            }
        }
    }
    if selected >= RuleId::B3 {
        let ts = g.two_section();
        if ts.m2 > 0 {
            for &v in g.vertices() {
                if g.degree_s(v, 2) == ts.d2_max && g.degree(v) < 3 {
                    out.push(format!(
                        "d2max_underdegree: vertex {v} has max 2-degree but degree {} at {selected}",
                        g.degree(v)
                    ));
                }
            }
        }
    }
    if selected > RuleId::B3 {
        for e in g.edges() {
            if e.len() != 3 {
                out.push(format!("undersized_edge: edge {e:?} of size {} at {selected}", e.len()));
            }
        }
    }
    if selected > RuleId::B4 && d_g <= 4 {
        let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                let shared = g
                    .edges()
                    .iter()
                    .filter(|e| e.contains(x) && e.contains(y))
                    .count();
                if shared >= 3 {
                    out.push(format!(
                        "shared_pair: vertices {x},{y} share {shared} edges at {selected}"
                    ));
                }
            }
        }
    }
    if selected > RuleId::B6 && d_g <= 4 {
        for &v in g.vertices() {
            let d = g.degree(v);
            if d > 0 && d < 3 {
                out.push(format!("low_degree: vertex {v} has degree {d} at {selected}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::from_edges(edges.iter().map(|e| Edge::new(e.to_vec())))
    }

    fn select(g: Hypergraph, k: i64) -> RuleApplication {
        select_rule(&Instance { graph: g, k })
    }

    #[test]
    fn termination_cases() {
        assert_eq!(select(graph(&[&[1, 2]]), -1).rule, RuleId::DoneNo);
        assert_eq!(select(Hypergraph::empty(), 0).rule, RuleId::DoneYes);
    }

    #[test]
    fn r1_fires_on_unit_edge() {
        let app = select(graph(&[&[1], &[2, 3]]), 3);
        assert_eq!(app.rule, RuleId::R1);
        assert_eq!(app.bindings, vec![("x", 1)]);
        assert_eq!(app.children[0].ops, vec![Op::Plus(1)]);
        assert_eq!(app.children[0].k_delta, 1);
    }

    #[test]
    fn r2_fires_on_non_simple() {
        let app = select(graph(&[&[1, 2], &[1, 2, 3]]), 3);
        assert_eq!(app.rule, RuleId::R2);
        assert_eq!(app.children.len(), 1);
        assert!(app.children[0].ops.is_empty());
    }

    #[test]
    fn r3_fires_on_small_component() {
        let app = select(graph(&[&[1, 2]]), 3);
        assert_eq!(app.rule, RuleId::R3);
        assert_eq!(app.children[0].cert, vec![1]);
        assert_eq!(app.children[0].k_delta, 1);
        assert_eq!(app.children[0].ops, vec![Op::Plus(1), Op::Plus(2)]);
    }

    #[test]
    fn small_hitting_set_orders_by_size_then_lex() {
        assert_eq!(small_hitting_set(&graph(&[&[1, 2]])), Some(vec![1]));
        let tri = graph(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(small_hitting_set(&tri), Some(vec![1, 2]));
        assert_eq!(small_hitting_set(&Hypergraph::empty()), Some(vec![]));
        // 4 disjoint 2-edges need 4 vertices
        let g = graph(&[&[1, 2], &[3, 4], &[5, 6], &[7, 8]]);
        assert_eq!(small_hitting_set(&g), None);
    }

    // A connected 3-uniform scaffold whose minimum hitting set is large:
    // edges i, i+1, i+2 around a long cycle. Degree 3 everywhere, simple,
    // no dominated vertices.
    fn ring(n: u32) -> Vec<Edge> {
        (0..n)
            .map(|i| Edge::new(vec![i + 1, (i + 1) % n + 1, (i + 2) % n + 1]))
            .collect()
    }

    #[test]
    fn ring_needs_more_than_three() {
        let g = Hypergraph::from_edges(ring(12));
        assert_eq!(crate::oracle::oracle_min(&g, Some(3)), None);
        // rules R1..R6 decline, no 2-edges, so B-side handles it
        let app = select(g, 10);
        assert!(app.rule.is_branching(), "got {:?}", app.rule);
    }

    #[test]
    fn b8_picks_max_degree_then_d2_gain() {
        // all 3-edges, vertex 1 in four edges, others lower degree
        let g = graph(&[
            &[1, 2, 3],
            &[1, 4, 5],
            &[1, 6, 7],
            &[1, 8, 9],
            &[2, 4, 6],
            &[3, 5, 7],
            &[8, 2, 5],
            &[9, 3, 4],
            &[6, 8, 3],
            &[7, 9, 2],
        ]);
        let app = select(g.clone(), 10);
        if app.rule == RuleId::B8 {
            assert_eq!(g.degree(app.bindings[0].1), g.max_degree());
        }
    }
}
