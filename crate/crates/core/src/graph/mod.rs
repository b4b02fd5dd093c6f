//! Simple undirected graphs on at most 32 vertices.
//!
//! Vertex sets are `u32` bitmasks throughout: bit `v` set means vertex `v`
//! belongs to the set. Row `adj[v]` of a [`Graph`] is the neighborhood of `v`.

mod enumerate;
mod family;
mod graph6;
mod iso;
mod named;

pub use enumerate::{enumerate_labeled_graphs, labeled_graph_count, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use family::{build_family, FamilySpec};
pub use graph6::parse_graph6;
pub use iso::{is_h_free, is_isomorphic, PatternMatcher, MAX_ISO_ORDER, MAX_PATTERN_ORDER};
pub use named::{build_named, NamedGraph};

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 32;

/// Bitmask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Index of the pair `{i, j}` (`i < j`) in graph6 upper-triangle column order:
/// (0,1), (0,2), (1,2), (0,3), ...
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                got: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edge set is given by `mask` over pairs in
    /// [`pair_index`] order. Pairs past the 64th are absent.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::InvalidParameter(format!(
                "edge mask {mask:#x} has bits beyond the {pairs} pairs of a {n}-vertex graph"
            )));
        }
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if bit < 64 && mask >> bit & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(i, j)` with `i < j`, in [`pair_index`] order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The edge set as a bitmask over [`pair_index`]; only meaningful for n ≤ 11.
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, j) in self.edges() {
            let b = pair_index(i, j);
            if b < 64 {
                mask |= 1 << b;
            }
        }
        mask
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// True when the vertex set `mask` induces at least one edge, i.e. is a
    /// dependent set.
    #[inline]
    pub fn mask_has_edge(&self, mask: u32) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.adj[v] & mask != 0 {
                return true;
            }
            rest &= rest - 1;
        }
        false
    }

    #[inline]
    pub fn is_independent(&self, mask: u32) -> bool {
        !self.mask_has_edge(mask)
    }

    /// `G[S]`, with the vertices of `mask` relabeled `0..|S|` in increasing order.
    pub fn induced(&self, mask: u32) -> Graph {
        let mask = mask & self.vertex_mask();
        let mut map = [0usize; MAX_VERTICES];
        let mut verts = [0usize; MAX_VERTICES];
        let mut m = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            map[v] = m;
            verts[m] = v;
            m += 1;
            rest &= rest - 1;
        }
        let mut h = Graph {
            n: m,
            adj: [0; MAX_VERTICES],
        };
        for (new_u, &old_u) in verts[..m].iter().enumerate() {
            let mut nb = self.adj[old_u] & mask;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                h.adj[new_u] |= 1 << map[w];
                nb &= nb - 1;
            }
        }
        h
    }

    /// `G − S`.
    pub fn remove(&self, mask: u32) -> Graph {
        self.induced(self.vertex_mask() & !mask)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let mut h = *self;
        for v in 0..self.n {
            h.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        h
    }

    /// Mask of vertices with at least one neighbor.
    pub fn non_isolated_mask(&self) -> u32 {
        (0..self.n).filter(|&v| self.adj[v] != 0).fold(0, |m, v| m | 1 << v)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    /// Checks symmetry, absence of loops and zero bits beyond `n`.
    pub fn check_invariants(&self) -> bool {
        let full = self.vertex_mask();
        (0..MAX_VERTICES).all(|v| {
            if v >= self.n {
                return self.adj[v] == 0;
            }
            let row = self.adj[v];
            row & !full == 0 && row >> v & 1 == 0 && (0..self.n).all(|u| (row >> u & 1) == (self.adj[u] >> v & 1))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph6(s)
    }
}

/// `G ∪ H` with the vertices of `h` placed after those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    let mut out = Graph::empty(n)?;
    out.adj[..g.n].copy_from_slice(&g.adj[..g.n]);
    for v in 0..h.n {
        out.adj[g.n + v] = h.adj[v] << g.n;
    }
    Ok(out)
}

/// `G ∪ mK₁`.
pub fn add_isolated(g: &Graph, m: usize) -> Result<Graph> {
    disjoint_union(g, &Graph::empty(m)?)
}

/// The induced subgraph on all vertices of positive degree.
pub fn strip_isolated(g: &Graph) -> Graph {
    g.induced(g.non_isolated_mask())
}

/// Size of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    fn search(g: &Graph, cand: u32, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        // Branch on a vertex of maximum degree within the candidates.
        let mut pick = cand.trailing_zeros() as usize;
        let mut pick_deg = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let d = (g.adj[v] & cand).count_ones();
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
            rest &= rest - 1;
        }
        if pick_deg == 0 {
            *best = (*best).max(size + cand.count_ones() as usize);
            return;
        }
        search(g, cand & !(1 << pick) & !g.adj[pick], size + 1, best);
        search(g, cand & !(1 << pick), size, best);
    }
    let mut best = 0;
    search(g, g.vertex_mask(), 0, &mut best);
    best
}

/// Iterates the `k`-subsets of the low `n` bits in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let start: u64 = if k > n {
        limit
    } else if k == 0 {
        0
    } else {
        (1u64 << k) - 1
    };
    let mut next = Some(start).filter(|&s| s < limit || (k == 0 && n == 0 && s == 0));
    let mut done_zero = false;
    std::iter::from_fn(move || {
        let cur = next?;
        if k == 0 {
            if done_zero {
                return None;
            }
            done_zero = true;
            next = None;
            return Some(0);
        }
        // Gosper's hack.
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        let succ = (((r ^ cur) >> 2) / c) | r;
        next = if succ < limit { Some(succ) } else { None };
        Some(cur as u32)
    })
}
