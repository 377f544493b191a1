//! Immutable simple undirected graph in compressed adjacency form.
//!
//! Vertices are dense ids `0..n`. The neighbors of `v` live in
//! `targets[offsets[v]..offsets[v + 1]]`, sorted ascending and free of
//! duplicates, so adjacency queries are a binary search and iteration order
//! is deterministic.

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

/// Result of [`build_graph`]: the graph plus how many input pairs were
/// dropped as repeats of an earlier edge.
#[derive(Clone, Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub duplicates: usize,
}

/// Builds a graph over `0..max(max id + 1, n_hint)`.
///
/// Repeated edges (in either direction) are collapsed and counted; a
/// self-loop is rejected with the index of the offending pair.
pub fn build_graph(edges: &[(Vertex, Vertex)], n_hint: Option<usize>) -> Result<BuiltGraph> {
    let mut n = n_hint.unwrap_or(0);
    for (index, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            return Err(Error::SelfLoop { index, vertex: u });
        }
        n = n.max(u + 1).max(v + 1);
    }

    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut cursor = offsets[..n].to_vec();
    let mut targets = vec![0; offsets[n]];
    for &(u, v) in edges {
        targets[cursor[u]] = v;
        cursor[u] += 1;
        targets[cursor[v]] = u;
        cursor[v] += 1;
    }

    // Sort and dedup every row, then compact.
    let mut write = 0;
    let mut new_offsets = Vec::with_capacity(n + 1);
    new_offsets.push(0);
    for v in 0..n {
        let (start, end) = (offsets[v], offsets[v + 1]);
        targets[start..end].sort_unstable();
        let mut last = None;
        for i in start..end {
            let w = targets[i];
            if last != Some(w) {
                targets[write] = w;
                write += 1;
                last = Some(w);
            }
        }
        new_offsets.push(write);
    }
    let removed_slots = targets.len() - write;
    targets.truncate(write);
    targets.shrink_to_fit();

    Ok(BuiltGraph {
        graph: Graph {
            offsets: new_offsets,
            targets,
        },
        // each collapsed pair removed one slot from both endpoint rows
        duplicates: removed_slots / 2,
    })
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Convenience wrapper around [`build_graph`] that drops the duplicate count.
    pub fn from_edges(edges: &[(Vertex, Vertex)]) -> Result<Self> {
        build_graph(edges, None).map(|b| b.graph)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        // search the shorter row
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Σ_v C(deg(v), 2), the number of 2-paths with unordered endpoints.
    pub fn two_path_total(&self) -> u64 {
        self.vertices()
            .map(|v| {
                let d = self.degree(v) as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }
}

/// Sorted common neighbors of `u` and `v`, by merging their sorted rows.
pub fn common_neighbors(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}
