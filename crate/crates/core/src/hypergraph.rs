//! Immutable 3-hypergraph values and the structure queries the solver rules need.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Vertex = u32;

/// A hyperedge: 1 to 3 distinct vertices, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<Vertex>);

impl Edge {
    pub fn new(vs: impl Into<Vec<Vertex>>) -> Self {
        let mut vs = vs.into();
        vs.sort_unstable();
        assert!(
            !vs.is_empty() && vs.len() <= 3,
            "edge size {} out of range",
            vs.len()
        );
        assert!(vs.windows(2).all(|w| w[0] < w[1]), "repeated vertex in edge");
        Edge(vs)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Vertices of `self` that are not in `other`.
    pub fn without(&self, other: &BTreeSet<Vertex>) -> Vec<Vertex> {
        self.iter().filter(|v| !other.contains(v)).collect()
    }

    pub fn intersection_size(&self, other: &Edge) -> usize {
        self.iter().filter(|&v| other.contains(v)).count()
    }

    pub fn is_subset_of(&self, other: &Edge) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("removing vertex {0} from edge {1:?} would leave it empty")]
    EmptyEdge(Vertex, Edge),
}

/// Take `v` into the solution (`plus`) or discard it (`minus`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Op {
    Plus(Vertex),
    Minus(Vertex),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Plus(v) => write!(f, "+{v}"),
            Op::Minus(v) => write!(f, "-{v}"),
        }
    }
}

/// Per-vertex degree summary.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct VertexStats {
    pub d: usize,
    pub d2: usize,
    pub d3: usize,
    /// Number of 2-edges that contain v or intersect a 2-edge containing v.
    pub d2_reach: usize,
    /// Set when some edge avoiding v meets N(v) in at least two vertices.
    pub pair_flag: bool,
}

/// Summary of the graph formed by the 2-edges alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoSectionSummary {
    pub m2: usize,
    pub c2: usize,
    pub d2_max: usize,
    /// 2-edges grouped by connected component, ordered by smallest vertex.
    pub components: Vec<Vec<Edge>>,
}

/// A hypergraph with edges of size 1..=3. Values are immutable; every
/// operation returns a new graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={:?} E={:?}", self.vertices, self.edges)
    }
}

impl Hypergraph {
    pub fn new(vertices: BTreeSet<Vertex>, edges: BTreeSet<Edge>) -> Self {
        for e in &edges {
            assert!(
                e.iter().all(|v| vertices.contains(&v)),
                "edge {e:?} uses a vertex outside the vertex set"
            );
        }
        Hypergraph { vertices, edges }
    }

    /// Build from edges alone; the vertex set is their union.
    pub fn from_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let vertices = edges.iter().flat_map(|e| e.iter()).collect();
        Hypergraph { vertices, edges }
    }

    pub fn empty() -> Self {
        Hypergraph {
            vertices: BTreeSet::new(),
            edges: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges_with(&self, v: Vertex) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.contains(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges_with(v).count()
    }

    pub fn degree_s(&self, v: Vertex, s: usize) -> usize {
        self.edges_with(v).filter(|e| e.len() == s).count()
    }

    /// Maximum degree d(G); 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        let mut counts: BTreeMap<Vertex, usize> = BTreeMap::new();
        for e in &self.edges {
            for v in e.iter() {
                *counts.entry(v).or_insert(0) += 1;
            }
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// All vertices sharing an edge with v, excluding v itself.
    pub fn neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for e in self.edges_with(v) {
            out.extend(e.iter().filter(|&u| u != v));
        }
        out
    }

    pub fn plus(&self, v: Vertex) -> Result<Hypergraph, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut g = self.clone();
        g.vertices.remove(&v);
        g.edges.retain(|e| !e.contains(v));
        Ok(g)
    }

    pub fn minus(&self, v: Vertex) -> Result<Hypergraph, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            if !e.contains(v) {
                edges.insert(e.clone());
                continue;
            }
            let rest: Vec<Vertex> = e.iter().filter(|&u| u != v).collect();
            if rest.is_empty() {
                return Err(GraphError::EmptyEdge(v, e.clone()));
            }
            edges.insert(Edge::new(rest));
        }
        let mut vertices = self.vertices.clone();
        vertices.remove(&v);
        Ok(Hypergraph { vertices, edges })
    }

    pub fn apply(&self, op: Op) -> Result<Hypergraph, GraphError> {
        match op {
            Op::Plus(v) => self.plus(v),
            Op::Minus(v) => self.minus(v),
        }
    }

    pub fn apply_seq(&self, ops: &[Op]) -> Result<Hypergraph, GraphError> {
        let mut g = self.clone();
        for &op in ops {
            g = g.apply(op)?;
        }
        Ok(g)
    }

    pub fn stats(&self, v: Vertex) -> Result<VertexStats, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut st = VertexStats::default();
        for e in self.edges_with(v) {
            st.d += 1;
            match e.len() {
                2 => st.d2 += 1,
                3 => st.d3 += 1,
                _ => {}
            }
        }
        let own: Vec<&Edge> = self
            .edges
            .iter()
            .filter(|e| e.len() == 2 && e.contains(v))
            .collect();
        st.d2_reach = self
            .edges
            .iter()
            .filter(|e| {
                e.len() == 2
                    && (e.contains(v) || own.iter().any(|o| e.intersection_size(o) > 0))
            })
            .count();
        let nbrs = self.neighbors(v);
        st.pair_flag = self
            .edges
            .iter()
            .any(|e| !e.contains(v) && e.iter().filter(|u| nbrs.contains(u)).count() >= 2);
        Ok(st)
    }

    pub fn two_section(&self) -> TwoSectionSummary {
        let two_edges: Vec<&Edge> = self.edges.iter().filter(|e| e.len() == 2).collect();
        let m2 = two_edges.len();
        let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        for e in &two_edges {
            for v in e.iter() {
                *degree.entry(v).or_insert(0) += 1;
            }
        }
        let d2_max = degree.values().copied().max().unwrap_or(0);

        // Components of the 2-edge graph, found by repeated expansion.
        let mut unassigned: BTreeSet<usize> = (0..two_edges.len()).collect();
        let mut components: Vec<Vec<Edge>> = Vec::new();
        while let Some(&start) = unassigned.iter().next() {
            unassigned.remove(&start);
            let mut verts: BTreeSet<Vertex> = two_edges[start].iter().collect();
            let mut comp = vec![start];
            loop {
                let next: Vec<usize> = unassigned
                    .iter()
                    .copied()
                    .filter(|&i| two_edges[i].iter().any(|v| verts.contains(&v)))
                    .collect();
                if next.is_empty() {
                    break;
                }
                for i in next {
                    unassigned.remove(&i);
                    verts.extend(two_edges[i].iter());
                    comp.push(i);
                }
            }
            comp.sort_unstable();
            components.push(comp.into_iter().map(|i| two_edges[i].clone()).collect());
        }
        components.sort_by_key(|c| c[0].vertices()[0]);
        TwoSectionSummary {
            m2,
            c2: components.len(),
            d2_max,
            components,
        }
    }

    /// Connected components as vertex blocks (isolated vertices are singleton
    /// blocks), ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut unassigned = self.vertices.clone();
        let mut blocks = Vec::new();
        while let Some(&start) = unassigned.iter().next() {
            unassigned.remove(&start);
            let mut block = BTreeSet::from([start]);
            loop {
                let grow: Vec<Vertex> = self
                    .edges
                    .iter()
                    .filter(|e| e.iter().any(|v| block.contains(&v)))
                    .flat_map(|e| e.iter())
                    .filter(|v| unassigned.contains(v))
                    .collect();
                if grow.is_empty() {
                    break;
                }
                for v in grow {
                    unassigned.remove(&v);
                    block.insert(v);
                }
            }
            blocks.push(block);
        }
        blocks
    }

    /// Restriction to `verts`: kept vertices plus the edges lying fully inside.
    pub fn induced(&self, verts: &BTreeSet<Vertex>) -> Hypergraph {
        let vertices: BTreeSet<Vertex> = self.vertices.intersection(verts).copied().collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| vertices.contains(&v)))
            .cloned()
            .collect();
        Hypergraph { vertices, edges }
    }

    /// Smallest vertex v != x that lies in every edge containing x, if any.
    /// A degree-0 x is vacuously dominated by the smallest other vertex.
    pub fn dominating_vertex(&self, x: Vertex) -> Option<Vertex> {
        let mut shared: Option<BTreeSet<Vertex>> = None;
        for e in self.edges_with(x) {
            let vs: BTreeSet<Vertex> = e.iter().filter(|&v| v != x).collect();
            shared = Some(match shared {
                None => vs,
                Some(prev) => prev.intersection(&vs).copied().collect(),
            });
        }
        match shared {
            Some(s) => s.into_iter().next(),
            None => self.vertices.iter().copied().find(|&v| v != x),
        }
    }

    pub fn is_simple(&self) -> bool {
        !self
            .edges
            .iter()
            .any(|e| self.edges.iter().any(|f| e != f && e.is_subset_of(f)))
    }

    /// Drop every edge that strictly contains another edge.
    pub fn minimalize(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| !self.edges.iter().any(|f| f != *e && f.is_subset_of(e)))
            .cloned()
            .collect();
        Hypergraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// Drop vertices incident to no edge.
    pub fn normalize_isolated(&self) -> Hypergraph {
        let covered: BTreeSet<Vertex> = self.edges.iter().flat_map(|e| e.iter()).collect();
        Hypergraph {
            vertices: covered,
            edges: self.edges.clone(),
        }
    }

    /// True when d(G) <= 3 and every component has an edge of size <= 2 or a
    /// vertex of degree <= 2.
    pub fn is_good(&self) -> bool {
        if self.max_degree() > 3 {
            return false;
        }
        self.components().iter().all(|block| {
            let h = self.induced(block);
            h.edges.iter().any(|e| e.len() <= 2)
                || h.vertices.iter().any(|&v| h.degree(v) <= 2)
        })
    }

    /// 2-edges lost and gained between self and `other`:
    /// (E2(self) \ E2(other), E2(other) \ E2(self)).
    pub fn diff_two_edges(&self, other: &Hypergraph) -> (BTreeSet<Edge>, BTreeSet<Edge>) {
        let e2 = |g: &Hypergraph| -> BTreeSet<Edge> {
            g.edges.iter().filter(|e| e.len() == 2).cloned().collect()
        };
        let a = e2(self);
        let b = e2(other);
        (
            a.difference(&b).cloned().collect(),
            b.difference(&a).cloned().collect(),
        )
    }
}
