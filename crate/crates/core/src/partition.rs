//! High/low degree split and the degree orientation of edges.
//!
//! A vertex is *high* when `deg(v)³ > m`, which is `deg(v) > m^{1/3}` decided
//! in integers. Every edge `{u, v}` is oriented from the endpoint that is
//! smaller under the order `(degree, id)` to the larger one.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    threshold_cubed: u128,
    is_high: Vec<bool>,
    high: Vec<Vertex>,
    degree: Vec<usize>,
}

#[inline]
pub(crate) fn cube_exceeds(degree: usize, m: usize) -> bool {
    let d = degree as u128;
    d * d * d > m as u128
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let m = g.m();
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let is_high: Vec<bool> = degree.iter().map(|&d| cube_exceeds(d, m)).collect();
    let high = g.vertices().filter(|&v| is_high[v]).collect();
    DegreePartition {
        threshold_cubed: m as u128,
        is_high,
        high,
        degree,
    }
}

impl DegreePartition {
    /// The `m` in `deg³ > m`.
    pub fn threshold_cubed(&self) -> u128 {
        self.threshold_cubed
    }

    #[inline]
    pub fn is_high(&self, v: Vertex) -> bool {
        self.is_high[v]
    }

    #[inline]
    pub fn is_low(&self, v: Vertex) -> bool {
        !self.is_high[v]
    }

    /// Members of H in ascending id order.
    pub fn high_vertices(&self) -> &[Vertex] {
        &self.high
    }

    pub fn low_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.is_high.len()).filter(move |&v| !self.is_high[v])
    }

    /// True when the edge `{u, v}` is oriented `u → v`.
    ///
    /// Only meaningful for actual edges; the order itself is total on vertices.
    #[inline]
    pub fn points_to(&self, u: Vertex, v: Vertex) -> bool {
        (self.degree[u], u) < (self.degree[v], v)
    }

    /// Out-neighbors of `v` under the orientation, in id order.
    pub fn out_neighbors<'g>(
        &'g self,
        g: &'g Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'g {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.points_to(v, w))
    }
}
