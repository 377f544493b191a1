use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, Vertex};

/// A 4-cycle `a – b – c – d – a` in canonical form: `a` is the smallest
/// vertex, `b < d` are its two cycle neighbors and `c` is opposite `a`.
///
/// Exactly one of the eight rotations/reflections of a cycle is canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalCycle {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl CanonicalCycle {
    /// Cycle made of the 2-paths `u – x – v` and `u – y – v`.
    #[inline]
    pub fn from_opposite(u: Vertex, v: Vertex, x: Vertex, y: Vertex) -> Self {
        Self::from_walk([u, x, v, y])
    }

    /// Canonicalizes the closed walk `w0 – w1 – w2 – w3 – w0`.
    #[inline]
    pub fn from_walk(w: [Vertex; 4]) -> Self {
        let mut i = 0;
        for k in 1..4 {
            if w[k] < w[i] {
                i = k;
            }
        }
        let (p, q) = (w[(i + 1) % 4], w[(i + 3) % 4]);
        CanonicalCycle {
            a: w[i],
            b: p.min(q),
            c: w[(i + 2) % 4],
            d: p.max(q),
        }
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_canonical(&self) -> bool {
        self.a < self.b
            && self.a < self.c
            && self.b < self.d
            && self.b != self.c
            && self.c != self.d
    }

    /// Canonical, four distinct vertices, and all four cycle edges present.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let CanonicalCycle { a, b, c, d } = *self;
        self.is_canonical()
            && g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && g.has_edge(d, a)
    }
}

impl fmt::Display for CanonicalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_symmetries_share_one_form() {
        let base = [3, 7, 1, 9];
        let expected = CanonicalCycle {
            a: 1,
            b: 7,
            c: 3,
            d: 9,
        };
        for r in 0..4 {
            let rot = [
                base[r],
                base[(r + 1) % 4],
                base[(r + 2) % 4],
                base[(r + 3) % 4],
            ];
            let rev = [rot[0], rot[3], rot[2], rot[1]];
            assert_eq!(CanonicalCycle::from_walk(rot), expected);
            assert_eq!(CanonicalCycle::from_walk(rev), expected);
        }
        assert!(expected.is_canonical());
        assert_eq!(expected.to_string(), "1 7 3 9");
    }

    #[test]
    fn from_opposite_pair() {
        let c = CanonicalCycle::from_opposite(1, 3, 2, 0);
        assert_eq!(c.vertices(), [0, 1, 2, 3]);
    }
}
