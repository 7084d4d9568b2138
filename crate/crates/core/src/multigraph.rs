//! Finite undirected multigraphs with loops and parallel edges.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An undirected edge stored with its smaller endpoint first. `u == v` is a loop.
pub type Edge = (usize, usize);

fn normalize((u, v): Edge) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Multigraph on vertices `0..n`.
///
/// The edge multiset is kept sorted, so two graphs compare equal exactly when
/// they have the same vertex count and the same multiset of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Coarse shape of a small graph, up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `Cycle(1)` is a single vertex with a loop; `Cycle(2)` is two vertices
    /// joined by exactly two parallel edges; `Cycle(k)` for `k >= 3` is a
    /// simple cycle.
    Cycle(usize),
    /// A simple path with `edges` edges. `loops` flags a loop on each end
    /// vertex, ordered so that `(true, false)` never occurs.
    Path { edges: usize, loops: (bool, bool) },
    Other,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn with_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::empty(n);
        for e in edges {
            g.add_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    /// The cycle on `0..n`. For `n = 1` this is one vertex with a loop and
    /// for `n = 2` two vertices joined by two parallel edges.
    pub fn cycle(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("cycle graph needs at least one vertex"));
        }
        Self::with_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0 - 1 - ... - (k-1)` on `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("path graph needs at least one vertex"));
        }
        Self::with_edges(k, (1..k).map(|i| (i - 1, i)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        let e = normalize((u, v));
        let at = self.edges.partition_point(|x| *x <= e);
        self.edges.insert(at, e);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, parallel copies repeated.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Number of copies of `e` in the multiset.
    pub fn multiplicity(&self, e: Edge) -> usize {
        let e = normalize(e);
        self.edges.iter().filter(|&&x| x == e).count()
    }

    /// Collapses every class of parallel edges, loops included, to one edge.
    pub fn simplify(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.dedup();
        Self { n: self.n, edges }
    }

    /// Contracts each block of a vertex partition to one vertex.
    ///
    /// New vertices are numbered by ascending block minimum. Every edge is
    /// kept, so edges inside a block become loops and the result may carry
    /// parallel edges.
    pub fn contract_partition<B: AsRef<[usize]>>(&self, blocks: &[B]) -> Result<Self> {
        let mut owner = vec![usize::MAX; self.n];
        let mut minima = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            let Some(&min) = block.iter().min() else {
                return Err(Error::domain("partition contains an empty block"));
            };
            for &v in block {
                if v >= self.n {
                    return Err(Error::domain(format!("vertex {v} is outside 0..{}", self.n)));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::domain(format!("vertex {v} appears in two blocks")));
                }
                owner[v] = b;
            }
            minima.push((min, b));
        }
        if let Some(v) = owner.iter().position(|&b| b == usize::MAX) {
            return Err(Error::domain(format!("vertex {v} is not covered by the partition")));
        }
        minima.sort_unstable();
        let mut label = vec![0; blocks.len()];
        for (new, &(_, b)) in minima.iter().enumerate() {
            label[b] = new;
        }
        Self::with_edges(
            blocks.len(),
            self.edges.iter().map(|&(u, v)| (label[owner[u]], label[owner[v]])),
        )
    }

    /// Removes a single copy of `e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Self> {
        let e = normalize(e);
        let at = self
            .edges
            .binary_search(&e)
            .map_err(|_| Error::domain(format!("edge {e:?} is not in the graph")))?;
        let mut edges = self.edges.clone();
        edges.remove(at);
        Ok(Self { n: self.n, edges })
    }

    /// Merges the endpoints of a non-loop edge after removing every copy of it.
    pub fn contract_edge(&self, e: Edge) -> Result<Self> {
        let (u, v) = normalize(e);
        if u == v {
            return Err(Error::domain("cannot contract a loop"));
        }
        if self.multiplicity((u, v)) == 0 {
            return Err(Error::domain(format!("edge {:?} is not in the graph", (u, v))));
        }
        let without = Self {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&x| x != (u, v)).collect(),
        };
        let blocks: Vec<Vec<usize>> = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| if w == u { vec![u, v] } else { vec![w] })
            .collect();
        without.contract_partition(&blocks)
    }

    /// Connected components as vertex lists, each ascending, ordered by
    /// their smallest vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    /// Induced subgraph on `vertices` (ascending), relabeled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| normalize((label[u], label[v])))
            .collect();
        edges.sort_unstable();
        Self { n: vertices.len(), edges }
    }

    /// Recognizes cycles and paths (with loops at path ends).
    ///
    /// A double edge between two vertices is reported as `Cycle(2)` before any
    /// simplification; everything else is classified on the simplified graph.
    pub fn classify_shape(&self) -> Shape {
        if self.n == 2 && self.edges == [(0, 1), (0, 1)] {
            return Shape::Cycle(2);
        }
        let g = self.simplify();
        let n = g.n;
        if n == 0 {
            return Shape::Other;
        }
        let mut looped = vec![false; n];
        let mut degree = vec![0usize; n];
        let mut plain = 0;
        for &(u, v) in &g.edges {
            if u == v {
                looped[u] = true;
            } else {
                degree[u] += 1;
                degree[v] += 1;
                plain += 1;
            }
        }
        if n == 1 {
            return if looped[0] {
                Shape::Cycle(1)
            } else {
                Shape::Path { edges: 0, loops: (false, false) }
            };
        }
        if g.component_vertices().len() != 1 {
            return Shape::Other;
        }
        if n >= 3 && plain == n && degree.iter().all(|&d| d == 2) && !looped.contains(&true) {
            return Shape::Cycle(n);
        }
        if plain == n - 1 && degree.iter().all(|&d| d <= 2) {
            let ends: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            let interior_loop = (0..n).any(|v| looped[v] && degree[v] != 1);
            if ends.len() == 2 && !interior_loop {
                let (a, b) = (looped[ends[0]], looped[ends[1]]);
                return Shape::Path { edges: n - 1, loops: (a && b, a || b) };
            }
        }
        Shape::Other
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serialization cannot fail")
    }

    /// Parses the interchange format `{"vertices": n, "edges": [[u, v], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::with_edges(file.vertices, file.edges.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

/// On-disk graph description. Loops are written `[v, v]`; repeated pairs are
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Multigraph> for GraphFile {
    fn from(g: &Multigraph) -> Self {
        Self {
            vertices: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}
